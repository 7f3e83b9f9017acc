//! Indecomposables of one atypical GL(m|1) block.
//!
//! Non-projective indecomposables are the interval modules `R[a,b]` (socle
//! `L(a), L(a+2), ..`) and their twisted duals `B[a,b]`. A length-one
//! interval is the simple `L(a)`. The projective cover `P(i)` has
//! composition factors `L(i-1), L(i), L(i), L(i+1)`.
//!
//! Kac modules are indexed by their top: `V(i) = R[i-1, i]`, and
//! `V(i)* = B[i-1, i]`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::block::BlockKey;
use crate::expr::{self, ExprError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("{0} has odd length and carries no (anti-)Kac flag")]
    NoFlag(Indec),
    #[error("invalid interval [{a},{b}]")]
    InvalidInterval { a: i64, b: i64 },
    #[error("unknown summand {0:?}")]
    UnknownKind(String),
    #[error(transparent)]
    Parse(#[from] ExprError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Indec {
    R { a: i64, b: i64 },
    B { a: i64, b: i64 },
    P(i64),
}

/// Kac module `V(i)` or anti-Kac module `V(i)*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KacLabel {
    Kac(i64),
    AntiKac(i64),
}

impl KacLabel {
    pub fn index(self) -> i64 {
        match self {
            KacLabel::Kac(i) | KacLabel::AntiKac(i) => i,
        }
    }

    pub fn dual(self) -> KacLabel {
        match self {
            KacLabel::Kac(i) => KacLabel::AntiKac(i),
            KacLabel::AntiKac(i) => KacLabel::Kac(i),
        }
    }

    /// The underlying interval module.
    pub fn module(self) -> Indec {
        match self {
            KacLabel::Kac(i) => Indec::R { a: i - 1, b: i },
            KacLabel::AntiKac(i) => Indec::B { a: i - 1, b: i },
        }
    }
}

impl fmt::Display for KacLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KacLabel::Kac(i) => write!(f, "V({i})"),
            KacLabel::AntiKac(i) => write!(f, "V({i})*"),
        }
    }
}

impl FromStr for KacLabel {
    type Err = IntervalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms = expr::parse_sum(s)?;
        match terms.as_slice() {
            [t] if t.mult == 1 && t.name == "V" && t.args.len() == 1 => Ok(if t.starred {
                KacLabel::AntiKac(t.args[0])
            } else {
                KacLabel::Kac(t.args[0])
            }),
            _ => Err(IntervalError::UnknownKind(s.to_string())),
        }
    }
}

impl Serialize for KacLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KacLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which of the ideals 𝒯₊, 𝒯₋ and Proj an object lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealClass {
    pub in_tplus: bool,
    pub in_tminus: bool,
    pub projective: bool,
}

impl IdealClass {
    const ALL: IdealClass = IdealClass {
        in_tplus: true,
        in_tminus: true,
        projective: true,
    };

    fn meet(self, other: IdealClass) -> IdealClass {
        IdealClass {
            in_tplus: self.in_tplus && other.in_tplus,
            in_tminus: self.in_tminus && other.in_tminus,
            projective: self.projective && other.projective,
        }
    }
}

/// Kac data of an indecomposable, listed bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub kac: Option<Vec<KacLabel>>,
    pub anti_kac: Option<Vec<KacLabel>>,
}

impl Indec {
    /// `R[a,b]`, with `a == b` giving the simple `L(a)`.
    pub fn r(a: i64, b: i64) -> Result<Indec, IntervalError> {
        if a > b {
            return Err(IntervalError::InvalidInterval { a, b });
        }
        Ok(Indec::R { a, b })
    }

    /// `B[a,b]`; the simple `B[a,a]` is normalized to `L(a) = R[a,a]`.
    pub fn b(a: i64, b: i64) -> Result<Indec, IntervalError> {
        if a > b {
            return Err(IntervalError::InvalidInterval { a, b });
        }
        Ok(if a == b { Indec::R { a, b } } else { Indec::B { a, b } })
    }

    pub fn simple(i: i64) -> Indec {
        Indec::R { a: i, b: i }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self, Indec::R { a, b } if a == b)
    }

    pub fn length(&self) -> usize {
        match *self {
            Indec::R { a, b } | Indec::B { a, b } => (b - a + 1) as usize,
            Indec::P(_) => 4,
        }
    }

    pub fn twisted_dual(self) -> Indec {
        match self {
            Indec::R { a, b } if a != b => Indec::B { a, b },
            Indec::B { a, b } => Indec::R { a, b },
            other => other,
        }
    }

    pub fn composition_factors(&self) -> Vec<i64> {
        match *self {
            Indec::R { a, b } | Indec::B { a, b } => (a..=b).collect(),
            Indec::P(i) => vec![i - 1, i, i, i + 1],
        }
    }

    /// Simple constituents of the socle, in increasing order.
    pub fn socle(&self) -> Vec<i64> {
        match *self {
            Indec::R { a, b } => (a..=b).step_by(2).collect(),
            Indec::B { a, b } if a != b => (a + 1..=b).step_by(2).collect(),
            Indec::B { a, .. } => vec![a],
            Indec::P(i) => vec![i],
        }
    }

    /// Simple constituents of the top (cosocle), in increasing order.
    pub fn top(&self) -> Vec<i64> {
        match *self {
            Indec::R { a, b } if a == b => vec![a],
            Indec::R { a, b } => (a + 1..=b).step_by(2).collect(),
            Indec::B { a, b } => (a..=b).step_by(2).collect(),
            Indec::P(i) => vec![i],
        }
    }

    pub fn flags(&self) -> Result<Flags, IntervalError> {
        match *self {
            Indec::R { a, b } | Indec::B { a, b } if (b - a) % 2 == 0 => {
                Err(IntervalError::NoFlag(*self))
            }
            Indec::R { a, b } => Ok(Flags {
                kac: Some((a + 1..=b).step_by(2).map(KacLabel::Kac).collect()),
                anti_kac: None,
            }),
            Indec::B { a, b } => Ok(Flags {
                kac: None,
                anti_kac: Some((a + 1..=b).step_by(2).map(KacLabel::AntiKac).collect()),
            }),
            Indec::P(i) => Ok(Flags {
                kac: Some(vec![KacLabel::Kac(i + 1), KacLabel::Kac(i)]),
                anti_kac: Some(vec![KacLabel::AntiKac(i), KacLabel::AntiKac(i + 1)]),
            }),
        }
    }

    /// The Kac flag when there is one, otherwise the anti-Kac flag.
    pub fn kac_flag(&self) -> Result<Vec<KacLabel>, IntervalError> {
        let flags = self.flags()?;
        Ok(flags.kac.or(flags.anti_kac).unwrap_or_default())
    }

    pub fn classify(&self) -> IdealClass {
        match *self {
            Indec::P(_) => IdealClass::ALL,
            Indec::R { a, b } | Indec::B { a, b } if (b - a) % 2 == 0 => IdealClass {
                in_tplus: false,
                in_tminus: false,
                projective: false,
            },
            Indec::R { .. } => IdealClass {
                in_tplus: true,
                in_tminus: false,
                projective: false,
            },
            Indec::B { .. } => IdealClass {
                in_tplus: false,
                in_tminus: true,
                projective: false,
            },
        }
    }
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Indec::R { a, b } if a == b => write!(f, "L({a})"),
            Indec::R { a, b } => write!(f, "R[{a},{b}]"),
            Indec::B { a, b } => write!(f, "B[{a},{b}]"),
            Indec::P(i) => write!(f, "P({i})"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct IndecRecord {
    kind: String,
    a: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<i64>,
}

impl Serialize for Indec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rec = match *self {
            Indec::R { a, b } => IndecRecord {
                kind: "R".into(),
                a,
                b: Some(b),
            },
            Indec::B { a, b } => IndecRecord {
                kind: "B".into(),
                a,
                b: Some(b),
            },
            Indec::P(i) => IndecRecord {
                kind: "P".into(),
                a: i,
                b: None,
            },
        };
        rec.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Indec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = IndecRecord::deserialize(d)?;
        let b = rec.b.unwrap_or(rec.a);
        match rec.kind.as_str() {
            "R" => Indec::r(rec.a, b),
            "B" => Indec::b(rec.a, b),
            "L" => Ok(Indec::simple(rec.a)),
            "P" => Ok(Indec::P(rec.a)),
            other => Err(IntervalError::UnknownKind(other.to_string())),
        }
        .map_err(serde::de::Error::custom)
    }
}

/// A finite direct sum of indecomposables in one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockObject {
    key: BlockKey,
    summands: BTreeMap<Indec, usize>,
}

impl BlockObject {
    pub fn zero(key: BlockKey) -> Self {
        BlockObject {
            key,
            summands: BTreeMap::new(),
        }
    }

    pub fn from_summands(key: BlockKey, items: impl IntoIterator<Item = Indec>) -> Self {
        let mut obj = BlockObject::zero(key);
        for x in items {
            obj.add(x, 1);
        }
        obj
    }

    pub fn parse(key: BlockKey, s: &str) -> Result<Self, IntervalError> {
        let s = s.trim();
        if s.starts_with('[') {
            let items: Vec<Indec> = serde_json::from_str(s).map_err(|e| ExprError {
                input: s.to_string(),
                reason: e.to_string(),
            })?;
            return Ok(BlockObject::from_summands(key, items));
        }
        let mut obj = BlockObject::zero(key);
        for t in expr::parse_sum(s)? {
            let x = match (t.name.as_str(), t.args.as_slice(), t.starred) {
                ("R", &[a, b], false) => Indec::r(a, b)?,
                ("B", &[a, b], false) => Indec::b(a, b)?,
                ("L", &[i], false) => Indec::simple(i),
                ("P", &[i], false) => Indec::P(i),
                ("V", &[i], starred) => {
                    if starred {
                        KacLabel::AntiKac(i).module()
                    } else {
                        KacLabel::Kac(i).module()
                    }
                }
                _ => {
                    return Err(IntervalError::UnknownKind(format!(
                        "{}{:?}",
                        t.name, t.args
                    )))
                }
            };
            obj.add(x, t.mult as usize);
        }
        Ok(obj)
    }

    pub fn add(&mut self, x: Indec, mult: usize) {
        if mult > 0 {
            *self.summands.entry(x).or_default() += mult;
        }
    }

    pub fn key(&self) -> &BlockKey {
        &self.key
    }

    pub fn summands(&self) -> &BTreeMap<Indec, usize> {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Summands with multiplicity, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = Indec> + '_ {
        self.summands
            .iter()
            .flat_map(|(&x, &k)| std::iter::repeat_n(x, k))
    }

    pub fn direct_sum(&self, other: &BlockObject) -> BlockObject {
        let mut out = self.clone();
        for (&x, &k) in &other.summands {
            out.add(x, k);
        }
        out
    }

    pub fn twisted_dual(&self) -> BlockObject {
        let mut out = BlockObject::zero(self.key.clone());
        for (&x, &k) in &self.summands {
            out.add(x.twisted_dual(), k);
        }
        out
    }

    /// Aggregate classification: the object lies in an ideal iff every
    /// summand does.
    pub fn classify(&self) -> IdealClass {
        self.summands
            .keys()
            .map(Indec::classify)
            .fold(IdealClass::ALL, IdealClass::meet)
    }

    pub fn classify_summands(&self) -> Vec<(Indec, IdealClass)> {
        self.iter().map(|x| (x, x.classify())).collect()
    }

    /// Composition factors as a multiset `index -> multiplicity`.
    pub fn composition_factors(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for (x, k) in &self.summands {
            for i in x.composition_factors() {
                *out.entry(i).or_default() += k;
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.iter().collect::<Vec<_>>()).expect("plain records")
    }
}

impl fmt::Display for BlockObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|(x, &k)| if k == 1 { x.to_string() } else { format!("{k}*{x}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obj(s: &str) -> BlockObject {
        BlockObject::parse(BlockKey::gl11(0), s).unwrap()
    }

    #[test]
    fn twisted_dual_examples() {
        assert_eq!(obj("R[0,3]").twisted_dual(), obj("B[0,3]"));
        assert_eq!(obj("L(4)").twisted_dual(), obj("L(4)"));
        assert_eq!(obj("B[4,4]"), obj("L(4)"));
        assert_eq!(obj("P(2)").twisted_dual(), obj("P(2)"));
    }

    #[test]
    fn kac_flag_examples() {
        use KacLabel::*;
        assert_eq!(Indec::R { a: 0, b: 3 }.kac_flag().unwrap(), vec![Kac(1), Kac(3)]);
        assert_eq!(Indec::R { a: 5, b: 6 }.kac_flag().unwrap(), vec![Kac(6)]);
        assert_eq!(
            Indec::B { a: 0, b: 3 }.kac_flag().unwrap(),
            vec![AntiKac(1), AntiKac(3)]
        );
        let p = Indec::P(0).flags().unwrap();
        assert_eq!(p.kac.unwrap(), vec![Kac(1), Kac(0)]);
        assert_eq!(p.anti_kac.unwrap(), vec![AntiKac(0), AntiKac(1)]);
        assert!(matches!(
            Indec::R { a: 0, b: 2 }.kac_flag(),
            Err(IntervalError::NoFlag(_))
        ));
        assert!(Indec::simple(3).kac_flag().is_err());
    }

    #[test]
    fn projective_kac_submodule_contains_socle() {
        // V(1) = R[0,1] has socle L(0), the socle of P(0).
        let bottom = Indec::P(0).kac_flag().unwrap()[0].module();
        assert_eq!(bottom.socle(), Indec::P(0).socle());
        let mut f: Vec<i64> = Indec::P(0)
            .kac_flag()
            .unwrap()
            .iter()
            .flat_map(|v| v.module().composition_factors())
            .collect();
        f.sort();
        assert_eq!(f, Indec::P(0).composition_factors());
    }

    #[test]
    fn classify_examples() {
        let t = |p, m, q| IdealClass {
            in_tplus: p,
            in_tminus: m,
            projective: q,
        };
        assert_eq!(obj("R[0,3]").classify(), t(true, false, false));
        assert_eq!(obj("B[0,1]").classify(), t(false, true, false));
        let x = obj("P(5) + L(0)");
        assert_eq!(x.classify(), t(false, false, false));
        let per: Vec<_> = x.classify_summands().into_iter().map(|(_, c)| c).collect();
        assert_eq!(per, vec![t(false, false, false), t(true, true, true)]);
        assert_eq!(obj("0").classify(), t(true, true, true));
    }

    #[test]
    fn composition_factor_examples() {
        assert_eq!(obj("R[0,2]").composition_factors(), BTreeMap::from([(0, 1), (1, 1), (2, 1)]));
        assert_eq!(
            obj("P(0)").composition_factors(),
            BTreeMap::from([(-1, 1), (0, 2), (1, 1)])
        );
        assert_eq!(obj("L(7)").composition_factors(), BTreeMap::from([(7, 1)]));
    }

    #[test]
    fn socle_and_top_patterns() {
        let r = Indec::R { a: 0, b: 4 };
        assert_eq!(r.socle(), vec![0, 2, 4]);
        assert_eq!(r.top(), vec![1, 3]);
        let b = r.twisted_dual();
        assert_eq!(b.socle(), vec![1, 3]);
        assert_eq!(b.top(), vec![0, 2, 4]);
        assert_eq!(KacLabel::Kac(5).module().top(), vec![5]);
        assert_eq!(KacLabel::Kac(5).module().socle(), vec![4]);
    }

    #[test]
    fn parse_and_display() {
        let x = obj("R[0,3] + 2*B[1,2] + P(0) + L(4)");
        assert_eq!(x.to_string(), "R[0,3] + L(4) + 2*B[1,2] + P(0)");
        assert_eq!(obj(&x.to_string()), x);
        let js = x.to_json().to_string();
        assert_eq!(obj(&js), x);
        assert!(BlockObject::parse(BlockKey::gl11(0), "R[3,1]").is_err());
        assert!(BlockObject::parse(BlockKey::gl11(0), "Q(1)").is_err());
        assert_eq!(obj("V(2) + V(2)*"), obj("R[1,2] + B[1,2]"));
    }
}
