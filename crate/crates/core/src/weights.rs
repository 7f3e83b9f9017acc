//! Integral dominant weights of GL(m|n).
//!
//! A weight is stored as the raw list `(λ₁..λ_m | λ_{m+1}..λ_{m+n})` without
//! any ρ-shift. The two label sets
//!
//! ```text
//! vee   = { λ_i + 1 - i        : 1 <= i <= m }
//! wedge = { j - m - λ_{m+j}    : 1 <= j <= n }
//! ```
//!
//! decide atypicality: the number of labels the two sets share.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("m and n must both be positive (got m={m}, n={n})")]
    EmptyPart { m: usize, n: usize },
    #[error("expected {expected} entries, found {found}")]
    Length { expected: usize, found: usize },
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("cannot parse weight {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Weight {
    m: usize,
    n: usize,
    rows: Vec<i64>,
}

#[derive(Deserialize)]
struct RawWeight {
    m: usize,
    n: usize,
    rows: Vec<i64>,
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawWeight::deserialize(d)?;
        Weight::new(raw.m, raw.n, raw.rows).map_err(serde::de::Error::custom)
    }
}

/// The bidegree `(d, d')` together with the degree used for filtrations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bidegree {
    pub d: i64,
    pub dprime: i64,
    pub deg: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelSets {
    pub vee: BTreeSet<i64>,
    pub wedge: BTreeSet<i64>,
}

impl LabelSets {
    pub fn common(&self) -> BTreeSet<i64> {
        self.vee.intersection(&self.wedge).copied().collect()
    }
}

impl Weight {
    pub fn new(m: usize, n: usize, rows: Vec<i64>) -> Result<Self, WeightError> {
        if m == 0 || n == 0 {
            return Err(WeightError::EmptyPart { m, n });
        }
        if rows.len() != m + n {
            return Err(WeightError::Length {
                expected: m + n,
                found: rows.len(),
            });
        }
        let (even, odd) = rows.split_at(m);
        for (part, name) in [(even, "even"), (odd, "odd")] {
            if part.windows(2).any(|w| w[0] < w[1]) {
                return Err(WeightError::NotDominant(format!(
                    "{name} part {part:?} is not weakly decreasing"
                )));
            }
        }
        Ok(Weight { m, n, rows })
    }

    /// Builds a weight from its two halves.
    pub fn from_parts(even: &[i64], odd: &[i64]) -> Result<Self, WeightError> {
        let rows = even.iter().chain(odd).copied().collect();
        Weight::new(even.len(), odd.len(), rows)
    }

    /// The trivial weight of GL(m|n).
    pub fn trivial(m: usize, n: usize) -> Result<Self, WeightError> {
        Weight::new(m, n, vec![0; m + n])
    }

    /// The Berezinian `(1,..,1 | -1,..,-1)`.
    pub fn ber(m: usize, n: usize) -> Result<Self, WeightError> {
        Weight::trivial(m, n).map(|w| w.ber_twist(1))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[i64] {
        &self.rows
    }

    pub fn even_part(&self) -> &[i64] {
        &self.rows[..self.m]
    }

    pub fn odd_part(&self) -> &[i64] {
        &self.rows[self.m..]
    }

    pub fn bidegree(&self) -> Bidegree {
        let d = self.even_part().iter().sum();
        let dprime = self.odd_part().iter().sum();
        Bidegree { d, dprime, deg: d }
    }

    /// Shorthand for `bidegree().deg`.
    pub fn deg(&self) -> i64 {
        self.bidegree().deg
    }

    pub fn label_sets(&self) -> LabelSets {
        let vee = self
            .even_part()
            .iter()
            .zip(1i64..)
            .map(|(&l, i)| l + 1 - i)
            .collect();
        let m = self.m as i64;
        let wedge = self
            .odd_part()
            .iter()
            .zip(1i64..)
            .map(|(&l, j)| j - m - l)
            .collect();
        LabelSets { vee, wedge }
    }

    pub fn atypicality(&self) -> usize {
        let sets = self.label_sets();
        sets.vee.intersection(&sets.wedge).count()
    }

    pub fn is_typical(&self) -> bool {
        self.atypicality() == 0
    }

    /// Tensoring with `Ber^k`.
    pub fn ber_twist(&self, k: i64) -> Weight {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(idx, &l)| if idx < self.m { l + k } else { l - k })
            .collect();
        Weight {
            m: self.m,
            n: self.n,
            rows,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[i64]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}|{}", join(self.even_part()), join(self.odd_part()))
    }
}

impl FromStr for Weight {
    type Err = WeightError;

    /// Accepts `"1,0,-1|2,0"` or the JSON object form.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_err = |reason: String| WeightError::Parse {
            input: s.to_string(),
            reason,
        };
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| parse_err(e.to_string()));
        }
        let s = s.trim_start_matches('(').trim_end_matches(')');
        let (even, odd) = s
            .split_once('|')
            .ok_or_else(|| parse_err("missing '|' separator".into()))?;
        let parse_list = |part: &str| -> Result<Vec<i64>, WeightError> {
            part.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.replace('−', "-")
                        .parse::<i64>()
                        .map_err(|e| parse_err(format!("{t:?}: {e}")))
                })
                .collect()
        };
        let even = parse_list(even)?;
        let odd = parse_list(odd)?;
        Weight::from_parts(&even, &odd)
    }
}
