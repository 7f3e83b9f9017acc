//! Exact combinatorics for the homotopy category of GL(m|n)-representations.
//!
//! * [`weights`]: integral dominant weights, label sets, degree, atypicality.
//! * [`block`]: coordinates `L(i)` inside an atypical GL(m|1) block.
//! * [`interval`]: interval modules `R[a,b]`, `B[a,b]`, projectives, Kac flags.
//! * [`homotopy`]: reduction to the homotopy category, hom dimensions, shift,
//!   composition, isogeny and semisimple images.
//! * [`series`]: Grothendieck-ring power series, minimal models, the Euler
//!   identity and degree filtrations.
//! * [`partitions`]: box partitions, Weyl dimensions, Littlewood–Richardson
//!   coefficients and the Kac flag of `V ⊗ V*`.
//! * [`acceptance`]: the self-check suite behind `glsuper check all`.

pub mod acceptance;
pub mod block;
pub mod cli;
pub mod expr;
pub mod homotopy;
pub mod interval;
pub mod oracle;
pub mod par;
pub mod partitions;
pub mod series;
pub mod weights;

use thiserror::Error;

pub use block::{BlockKey, BlockPoint};
pub use homotopy::{HoMorphism, HoObject, HoSummand};
pub use interval::{BlockObject, Indec, KacLabel};
pub use partitions::Partition;
pub use series::KSeries;
pub use weights::Weight;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Weight(#[from] weights::WeightError),
    #[error(transparent)]
    Block(#[from] block::BlockError),
    #[error(transparent)]
    Interval(#[from] interval::IntervalError),
    #[error(transparent)]
    Ho(#[from] homotopy::HoError),
    #[error(transparent)]
    Series(#[from] series::SeriesError),
    #[error(transparent)]
    Partition(#[from] partitions::PartitionError),
    #[error(transparent)]
    Expr(#[from] expr::ExprError),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
