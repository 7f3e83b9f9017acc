//! Coordinates inside an atypical GL(m|1) block.
//!
//! An atypical GL(m|1) weight has `m - 1` unpaired vee-labels (the *core*)
//! and one label shared by vee and wedge (the atypical position). Moving the
//! atypical position across the free integers `ℤ \ core` enumerates the
//! simples of the block; `L(i)` sits at the `i`-th free position counted from
//! the base position, which is assigned index 0.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("weight {0} is typical")]
    TypicalWeight(String),
    #[error("expected a GL(m|1) weight, got GL({m}|{n})")]
    WrongShape { m: usize, n: usize },
    #[error("invalid block key: {0}")]
    InvalidKey(String),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BlockKey {
    core: BTreeSet<i64>,
    base: i64,
}

#[derive(Deserialize)]
struct RawKey {
    core: BTreeSet<i64>,
    base: i64,
}

impl<'de> Deserialize<'de> for BlockKey {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawKey::deserialize(d)?;
        BlockKey::new(raw.core, raw.base).map_err(serde::de::Error::custom)
    }
}

/// A simple object `L(index)` of a given block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BlockPoint {
    pub key: BlockKey,
    pub index: i64,
}

impl BlockPoint {
    pub fn position(&self) -> i64 {
        self.key.position(self.index)
    }

    pub fn weight(&self) -> Weight {
        self.key.weight_at(self.index)
    }
}

impl BlockKey {
    pub fn new(core: impl IntoIterator<Item = i64>, base: i64) -> Result<Self, BlockError> {
        let core: BTreeSet<i64> = core.into_iter().collect();
        if core.contains(&base) {
            return Err(BlockError::InvalidKey(format!(
                "base {base} lies in the core {core:?}"
            )));
        }
        Ok(BlockKey { core, base })
    }

    /// The principal-style GL(1|1) block with `L(0) = L(base | -base)`.
    pub fn gl11(base: i64) -> Self {
        BlockKey {
            core: BTreeSet::new(),
            base,
        }
    }

    /// Block of an atypical GL(m|1) weight; the weight becomes `L(0)`.
    pub fn of_weight(w: &Weight) -> Result<Self, BlockError> {
        if w.n() != 1 {
            return Err(BlockError::WrongShape { m: w.m(), n: w.n() });
        }
        let sets = w.label_sets();
        let common = sets.common();
        let base = *common
            .iter()
            .next()
            .ok_or_else(|| BlockError::TypicalWeight(w.to_string()))?;
        let core = sets.vee.difference(&sets.wedge).copied().collect();
        Ok(BlockKey { core, base })
    }

    pub fn m(&self) -> usize {
        self.core.len() + 1
    }

    pub fn core(&self) -> &BTreeSet<i64> {
        &self.core
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn point(&self, index: i64) -> BlockPoint {
        BlockPoint {
            key: self.clone(),
            index,
        }
    }

    /// Position on the number line of the atypical label of `L(i)`.
    pub fn position(&self, i: i64) -> i64 {
        let mut p = self.base + i;
        if i >= 0 {
            for &c in self.core.range(self.base + 1..) {
                if c <= p {
                    p += 1;
                } else {
                    break;
                }
            }
        } else {
            for &c in self.core.range(..self.base).rev() {
                if c >= p {
                    p -= 1;
                } else {
                    break;
                }
            }
        }
        p
    }

    /// Inverse of [`BlockKey::position`]; `None` for core positions.
    pub fn index_of(&self, pos: i64) -> Option<i64> {
        if self.core.contains(&pos) {
            return None;
        }
        let idx = if pos >= self.base {
            pos - self.base - self.core.range(self.base..pos).count() as i64
        } else {
            pos - self.base + self.core.range(pos..self.base).count() as i64
        };
        Some(idx)
    }

    /// Position of `L(i + k)`.
    pub fn step(&self, i: i64, k: i64) -> i64 {
        self.position(i + k)
    }

    /// The dominant weight of `L(i)`.
    pub fn weight_at(&self, i: i64) -> Weight {
        let pos = self.position(i);
        let m = self.m();
        let mut vee: Vec<i64> = self.core.iter().copied().chain([pos]).collect();
        vee.sort_unstable_by(|a, b| b.cmp(a));
        let mut rows: Vec<i64> = vee.iter().zip(1i64..).map(|(&v, k)| v - 1 + k).collect();
        rows.push(1 - m as i64 - pos);
        Weight::new(m, 1, rows).expect("strictly decreasing labels give a dominant weight")
    }

    pub fn block_deg(&self, i: i64) -> i64 {
        self.weight_at(i).deg()
    }

    /// Index of a weight in this block, if it belongs here.
    pub fn index_of_weight(&self, w: &Weight) -> Option<i64> {
        let key = BlockKey::of_weight(w).ok()?;
        if key.core != self.core {
            return None;
        }
        self.index_of(key.base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn core0() -> BlockKey {
        BlockKey::new([0], -1).unwrap()
    }

    #[test]
    fn block_key_examples() {
        assert_eq!(BlockKey::of_weight(&w("0,0|0")).unwrap(), core0());
        for a in -3..=3 {
            let key = BlockKey::of_weight(&w(&format!("{a}|{}", -a))).unwrap();
            assert_eq!(key, BlockKey::gl11(a));
        }
        assert!(matches!(
            BlockKey::of_weight(&w("1|1")),
            Err(BlockError::TypicalWeight(_))
        ));
        assert!(matches!(
            BlockKey::of_weight(&w("0,0|0,0")),
            Err(BlockError::WrongShape { m: 2, n: 2 })
        ));
    }

    #[test]
    fn weight_at_examples() {
        let key = core0();
        assert_eq!(key.weight_at(0), w("0,0|0"));
        assert_eq!(key.position(-1), -2);
        assert_eq!(key.weight_at(-1), w("0,-1|1"));
        assert_eq!(key.position(1), 1);
        assert_eq!(key.weight_at(1), w("1,1|-2"));
        for i in [-1, 1] {
            let wt = key.weight_at(i);
            let rekey = BlockKey::of_weight(&wt).unwrap();
            assert_eq!(rekey.core(), key.core());
            assert_eq!(rekey.base(), key.position(i));
        }
    }

    #[test]
    fn step_examples() {
        assert_eq!(core0().step(0, -1), -2);
        assert_eq!(core0().step(0, 1), 1);
        assert_eq!(BlockKey::gl11(5).step(0, 2), 7);
    }

    #[test]
    fn block_deg_examples() {
        for a in -3..=3 {
            assert_eq!(BlockKey::gl11(a).block_deg(0), a);
        }
        assert_eq!(core0().block_deg(0), 0);
        assert_eq!(core0().weight_at(-2), w("0,-2|2"));
        assert_eq!(core0().block_deg(-2), -2);
    }

    #[test]
    fn position_skips_core_in_both_directions() {
        let key = BlockKey::new([-3, -2, 1, 2, 4], 0).unwrap();
        let free: Vec<i64> = (-8..=8).filter(|p| !key.core().contains(p)).collect();
        let zero = free.iter().position(|&p| p == 0).unwrap() as i64;
        for (k, &p) in free.iter().enumerate() {
            let i = k as i64 - zero;
            assert_eq!(key.position(i), p, "index {i}");
            assert_eq!(key.index_of(p), Some(i));
        }
        assert_eq!(key.index_of(4), None);
    }

    #[test]
    fn degree_jumps_count_skipped_core() {
        let key = BlockKey::new([-3, -2, 1, 2, 4], 0).unwrap();
        for i in -6..6 {
            let (p0, p1) = (key.position(i), key.position(i + 1));
            let skipped = key.core().range(p0 + 1..p1).count() as i64;
            assert_eq!(key.block_deg(i + 1) - key.block_deg(i), 1 + skipped);
        }
    }

    #[test]
    fn base_in_core_rejected() {
        assert!(BlockKey::new([1, 2], 2).is_err());
        assert!(serde_json::from_str::<BlockKey>(r#"{"core":[0],"base":0}"#).is_err());
        let key: BlockKey = serde_json::from_str(r#"{"core":[0],"base":-1}"#).unwrap();
        assert_eq!(key, core0());
    }
}
