//! Truncated power series with coefficients in the Grothendieck group of a
//! GL(m|1) block.
//!
//! A Kac module `V(i)` contributes `q^{deg V(i)} [V(i)]` where
//! `deg V(i) = block_deg(i)` is the degree of its highest weight. Expanding
//! into simples sends `V(i)` (and `V(i)*`, which has the same factors) to
//! `L(i) + L(i-1)`, each at its own degree.
//!
//! The minimal model of `L(u)` is the union of `R[u-1-2i, .., u]`; its Kac
//! pieces are `V(u), V(u-2), ..` and the kernel of `Ω → L(u)` has anti-Kac
//! pieces `V(u-1)*, V(u-3)*, ..`. After expansion the two series telescope
//! to `[L(u)]` above the truncation degree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::block::BlockKey;
use crate::expr::{self, ExprError};
use crate::interval::KacLabel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series carries no block key")]
    UnknownBlock,
    #[error("label {label} does not belong to a {variant:?} series")]
    WrongLabel { label: Label, variant: Variant },
    #[error("operation needs a {expected} series, got {found:?}")]
    WrongVariant { expected: &'static str, found: Variant },
    #[error("series live over different blocks or variants")]
    Incompatible,
    #[error("degree filtration of an empty flag")]
    EmptyFlag,
    #[error("truncation depth must be at least 1")]
    BadDepth,
    #[error("unknown series label {0:?}")]
    UnknownLabel(String),
    #[error(transparent)]
    Parse(#[from] ExprError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    KacPlus,
    KacMinus,
    Simple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Kac(i64),
    AntiKac(i64),
    Simple(i64),
}

impl Label {
    pub fn index(self) -> i64 {
        match self {
            Label::Kac(i) | Label::AntiKac(i) | Label::Simple(i) => i,
        }
    }

    pub fn variant(self) -> Variant {
        match self {
            Label::Kac(_) => Variant::KacPlus,
            Label::AntiKac(_) => Variant::KacMinus,
            Label::Simple(_) => Variant::Simple,
        }
    }
}

impl From<KacLabel> for Label {
    fn from(k: KacLabel) -> Self {
        match k {
            KacLabel::Kac(i) => Label::Kac(i),
            KacLabel::AntiKac(i) => Label::AntiKac(i),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Kac(i) => write!(f, "V({i})"),
            Label::AntiKac(i) => write!(f, "V({i})*"),
            Label::Simple(i) => write!(f, "L({i})"),
        }
    }
}

impl FromStr for Label {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms = expr::parse_sum(s)?;
        match terms.as_slice() {
            [t] if t.mult == 1 && t.args.len() == 1 => match (t.name.as_str(), t.starred) {
                ("V", false) => Ok(Label::Kac(t.args[0])),
                ("V", true) => Ok(Label::AntiKac(t.args[0])),
                ("L", false) => Ok(Label::Simple(t.args[0])),
                _ => Err(SeriesError::UnknownLabel(s.to_string())),
            },
            _ => Err(SeriesError::UnknownLabel(s.to_string())),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// `Σ_d c_d q^d` with `c_d` a finite integer combination of labels.
///
/// Terms below `truncation` are kept but treated as the boundary tail; see
/// [`KSeries::head`] and [`KSeries::tail`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSeries {
    variant: Variant,
    key: Option<BlockKey>,
    terms: BTreeMap<i64, BTreeMap<Label, i64>>,
    truncation: Option<i64>,
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    deg: i64,
    label: Label,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct SeriesRecord {
    variant: Variant,
    terms: Vec<TermRecord>,
    truncation: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    key: Option<BlockKey>,
}

impl Serialize for KSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesRecord {
            variant: self.variant,
            terms: self
                .iter()
                .map(|(deg, label, coeff)| TermRecord { deg, label, coeff })
                .collect(),
            truncation: self.truncation,
            key: self.key.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = SeriesRecord::deserialize(d)?;
        let mut s = KSeries::new(rec.variant, rec.key);
        s.truncation = rec.truncation;
        for t in rec.terms {
            s.add_term(t.deg, t.label, t.coeff)
                .map_err(serde::de::Error::custom)?;
        }
        Ok(s)
    }
}

impl KSeries {
    pub fn new(variant: Variant, key: Option<BlockKey>) -> Self {
        KSeries {
            variant,
            key,
            terms: BTreeMap::new(),
            truncation: None,
        }
    }

    pub fn with_truncation(mut self, truncation: Option<i64>) -> Self {
        self.truncation = truncation;
        self
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn key(&self) -> Option<&BlockKey> {
        self.key.as_ref()
    }

    pub fn truncation(&self) -> Option<i64> {
        self.truncation
    }

    pub fn add_term(&mut self, deg: i64, label: Label, coeff: i64) -> Result<(), SeriesError> {
        if label.variant() != self.variant {
            return Err(SeriesError::WrongLabel {
                label,
                variant: self.variant,
            });
        }
        if coeff == 0 {
            return Ok(());
        }
        let row = self.terms.entry(deg).or_default();
        let c = row.entry(label).or_insert(0);
        *c += coeff;
        if *c == 0 {
            row.remove(&label);
            if row.is_empty() {
                self.terms.remove(&deg);
            }
        }
        Ok(())
    }

    /// Adds `q^{block_deg(label)} [label]`, reading the degree off the key.
    pub fn add_at_block_degree(&mut self, label: Label, coeff: i64) -> Result<(), SeriesError> {
        let deg = self
            .key
            .as_ref()
            .ok_or(SeriesError::UnknownBlock)?
            .block_deg(label.index());
        self.add_term(deg, label, coeff)
    }

    /// Nonzero terms `(deg, label, coeff)`, highest degree first.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Label, i64)> + '_ {
        self.terms
            .iter()
            .rev()
            .flat_map(|(&d, row)| row.iter().map(move |(&l, &c)| (d, l, c)))
    }

    pub fn coeff(&self, deg: i64, label: Label) -> i64 {
        self.terms
            .get(&deg)
            .and_then(|row| row.get(&label))
            .copied()
            .unwrap_or(0)
    }

    /// Coefficient of `q^deg` as a combination of labels.
    pub fn coefficient(&self, deg: i64) -> BTreeMap<Label, i64> {
        self.terms.get(&deg).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.terms.keys().rev().copied().collect()
    }

    pub fn d_max(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.values().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    fn split(&self, keep_high: bool) -> KSeries {
        let mut out = self.clone();
        if let Some(t) = self.truncation {
            out.terms.retain(|&d, _| (d >= t) == keep_high);
        } else if !keep_high {
            out.terms.clear();
        }
        out
    }

    /// Terms at or above the truncation degree.
    pub fn head(&self) -> KSeries {
        self.split(true)
    }

    /// Boundary terms strictly below the truncation degree.
    pub fn tail(&self) -> KSeries {
        self.split(false)
    }

    fn check_compatible(&self, other: &KSeries) -> Result<(), SeriesError> {
        if self.variant != other.variant {
            return Err(SeriesError::Incompatible);
        }
        match (&self.key, &other.key) {
            (Some(a), Some(b)) if a != b => Err(SeriesError::Incompatible),
            _ => Ok(()),
        }
    }

    fn stricter_truncation(a: Option<i64>, b: Option<i64>) -> Option<i64> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.max(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    /// `self + coeff * other`. The result is only trusted down to the
    /// stricter of the two truncations.
    pub fn add_scaled(&self, other: &KSeries, coeff: i64) -> Result<KSeries, SeriesError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        if out.key.is_none() {
            out.key = other.key.clone();
        }
        out.truncation = Self::stricter_truncation(self.truncation, other.truncation);
        for (d, l, c) in other.iter() {
            out.add_term(d, l, coeff * c)?;
        }
        Ok(out)
    }

    pub fn add(&self, other: &KSeries) -> Result<KSeries, SeriesError> {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &KSeries) -> Result<KSeries, SeriesError> {
        self.add_scaled(other, -1)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> KSeries {
        KSeries {
            variant: self.variant,
            key: self.key.clone(),
            terms: self.terms.iter().map(|(&d, row)| (d + k, row.clone())).collect(),
            truncation: self.truncation.map(|t| t + k),
        }
    }
}

impl fmt::Display for KSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(d, l, c)| match c {
                1 => format!("[{l}]q^{d}"),
                -1 => format!("-[{l}]q^{d}"),
                c => format!("{c}[{l}]q^{d}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// The homomorphism from Kac (or anti-Kac) series to simple series:
/// `q^d [V(i)] ↦ q^d [L(i)] + q^{d - δ} [L(i-1)]` where
/// `δ = block_deg(i) - block_deg(i-1)`.
pub fn expand_to_simples(s: &KSeries) -> Result<KSeries, SeriesError> {
    if s.variant == Variant::Simple {
        return Err(SeriesError::WrongVariant {
            expected: "Kac or anti-Kac",
            found: s.variant,
        });
    }
    let mut out = KSeries::new(Variant::Simple, s.key.clone()).with_truncation(s.truncation);
    if s.is_zero() {
        return Ok(out);
    }
    let key = s.key.as_ref().ok_or(SeriesError::UnknownBlock)?;
    for (d, label, c) in s.iter() {
        let i = label.index();
        let delta = key.block_deg(i) - key.block_deg(i - 1);
        out.add_term(d, Label::Simple(i), c)?;
        out.add_term(d - delta, Label::Simple(i - 1), c)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalModel {
    pub omega: KSeries,
    pub kernel: KSeries,
}

/// Series of the minimal model `Ω(L(u))` and of the kernel of `Ω → L(u)`,
/// cut after `depth + 1` Kac pieces and `depth` anti-Kac pieces.
pub fn minimal_model_series(key: &BlockKey, u: i64, depth: usize) -> Result<MinimalModel, SeriesError> {
    if depth == 0 {
        return Err(SeriesError::BadDepth);
    }
    let truncation = Some(key.block_deg(u) - 2 * depth as i64);
    let mut omega = KSeries::new(Variant::KacPlus, Some(key.clone())).with_truncation(truncation);
    let mut kernel = KSeries::new(Variant::KacMinus, Some(key.clone())).with_truncation(truncation);
    let n = depth as i64;
    for i in 0..=n {
        omega.add_at_block_degree(Label::Kac(u - 2 * i), 1)?;
    }
    for i in 1..=n {
        kernel.add_at_block_degree(Label::AntiKac(u - 2 * i + 1), 1)?;
    }
    Ok(MinimalModel { omega, kernel })
}

/// `expand(Ω) - expand(A)`, which should equal `q^{deg(u)} [L(u)]` above
/// the truncation degree `block_deg(u) - 2·depth`.
pub fn euler_check(key: &BlockKey, u: i64, depth: usize) -> Result<KSeries, SeriesError> {
    let mm = minimal_model_series(key, u, depth)?;
    let lhs = expand_to_simples(&mm.omega)?;
    let rhs = expand_to_simples(&mm.kernel)?;
    // the kernel series is anti-Kac, expansion lands both in Simple
    lhs.sub(&rhs)
}

/// A Kac flag with a degree attached to each piece.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacFlagInput {
    pub pieces: Vec<(KacLabel, i64)>,
}

impl KacFlagInput {
    /// Degrees read off the block.
    pub fn from_labels(key: &BlockKey, labels: &[KacLabel]) -> Self {
        KacFlagInput {
            pieces: labels.iter().map(|&l| (l, key.block_deg(l.index()))).collect(),
        }
    }

    /// Parses `"V(1)@1, V(0)@0"`; pieces without `@deg` take their block
    /// degree from `key` when one is given.
    pub fn parse(s: &str, key: Option<&BlockKey>) -> Result<Self, SeriesError> {
        let mut pieces = Vec::new();
        for raw in s.split([',', ';', '+']).map(str::trim).filter(|t| !t.is_empty()) {
            // commas inside V(..) never occur since V takes one argument
            let (lab, deg) = match raw.split_once('@') {
                Some((l, d)) => (
                    l.trim(),
                    Some(d.trim().replace('−', "-").parse::<i64>().map_err(|_| {
                        SeriesError::UnknownLabel(raw.to_string())
                    })?),
                ),
                None => (raw, None),
            };
            let label: KacLabel = lab
                .parse()
                .map_err(|_| SeriesError::UnknownLabel(lab.to_string()))?;
            let deg = match (deg, key) {
                (Some(d), _) => d,
                (None, Some(k)) => k.block_deg(label.index()),
                (None, None) => return Err(SeriesError::UnknownBlock),
            };
            pieces.push((label, deg));
        }
        Ok(KacFlagInput { pieces })
    }

    /// Whether every stated degree agrees with the block.
    pub fn consistent_with(&self, key: &BlockKey) -> bool {
        self.pieces
            .iter()
            .all(|&(l, d)| key.block_deg(l.index()) == d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationStep {
    pub degree: i64,
    pub labels: Vec<KacLabel>,
}

/// Canonical degree filtration, bottom subobject first. Pieces of highest
/// degree form the bottom step; each further step has strictly smaller
/// degree.
pub fn degree_filtration(flag: &KacFlagInput) -> Result<Vec<FiltrationStep>, SeriesError> {
    if flag.pieces.is_empty() {
        return Err(SeriesError::EmptyFlag);
    }
    let mut groups: BTreeMap<i64, Vec<KacLabel>> = BTreeMap::new();
    for &(label, deg) in &flag.pieces {
        groups.entry(deg).or_default().push(label);
    }
    Ok(groups
        .into_iter()
        .rev()
        .map(|(degree, mut labels)| {
            labels.sort();
            FiltrationStep { degree, labels }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn core0() -> BlockKey {
        BlockKey::new([0], -1).unwrap()
    }

    #[test]
    fn expand_examples() {
        for a in -3..=3 {
            let key = BlockKey::gl11(a);
            let mut s = KSeries::new(Variant::KacPlus, Some(key.clone()));
            s.add_at_block_degree(Label::Kac(0), 1).unwrap();
            let e = expand_to_simples(&s).unwrap();
            let got: Vec<_> = e.iter().collect();
            assert_eq!(got, vec![(a, Label::Simple(0), 1), (a - 1, Label::Simple(-1), 1)]);

            let mut s = KSeries::new(Variant::KacMinus, Some(key));
            s.add_at_block_degree(Label::AntiKac(-1), 1).unwrap();
            let got: Vec<_> = expand_to_simples(&s).unwrap().iter().collect();
            assert_eq!(
                got,
                vec![(a - 1, Label::Simple(-1), 1), (a - 2, Label::Simple(-2), 1)]
            );
        }
        let empty = KSeries::new(Variant::KacPlus, None);
        assert!(expand_to_simples(&empty).unwrap().is_zero());
        let mut keyless = KSeries::new(Variant::KacPlus, None);
        keyless.add_term(0, Label::Kac(0), 1).unwrap();
        assert_eq!(expand_to_simples(&keyless), Err(SeriesError::UnknownBlock));
    }

    #[test]
    fn minimal_model_gl11() {
        let a = 3;
        let mm = minimal_model_series(&BlockKey::gl11(a), 0, 3).unwrap();
        let omega: Vec<_> = mm.omega.iter().collect();
        assert_eq!(
            omega,
            vec![
                (a, Label::Kac(0), 1),
                (a - 2, Label::Kac(-2), 1),
                (a - 4, Label::Kac(-4), 1),
                (a - 6, Label::Kac(-6), 1)
            ]
        );
        assert_eq!(mm.kernel.degrees(), vec![a - 1, a - 3, a - 5]);
        // expanded Ω: ([L(a)] + [L(a-1)]) q^a + ... in simple degrees
        let e = expand_to_simples(&mm.omega).unwrap();
        assert_eq!(e.coeff(a, Label::Simple(0)), 1);
        assert_eq!(e.coeff(a - 1, Label::Simple(-1)), 1);
    }

    #[test]
    fn minimal_model_with_core() {
        let mm = minimal_model_series(&core0(), 0, 2).unwrap();
        assert_eq!(mm.omega.degrees(), vec![0, -2, -4]);
        assert_eq!(mm.kernel.degrees(), vec![-1, -3]);
        assert_eq!(mm.kernel.coeff(-1, Label::AntiKac(-1)), 1);
        assert!(minimal_model_series(&core0(), 0, 0).is_err());
    }

    #[test]
    fn euler_examples() {
        for a in -3..=3 {
            let key = BlockKey::gl11(a);
            let e = euler_check(&key, 0, 10).unwrap();
            assert_eq!(e.head().iter().collect::<Vec<_>>(), vec![(a, Label::Simple(0), 1)]);
            let e1 = euler_check(&key, 0, 1).unwrap();
            assert_eq!(e1.head().iter().collect::<Vec<_>>(), vec![(a, Label::Simple(0), 1)]);
            assert_eq!(e1.tail().len(), 1);
        }
        let e = euler_check(&core0(), 0, 10).unwrap();
        assert_eq!(e.head().iter().collect::<Vec<_>>(), vec![(0, Label::Simple(0), 1)]);
    }

    #[test]
    fn filtration_examples() {
        let key = BlockKey::gl11(0);
        let flag = KacFlagInput::from_labels(&key, &[KacLabel::Kac(0), KacLabel::Kac(1)]);
        let f = degree_filtration(&flag).unwrap();
        assert_eq!(
            f,
            vec![
                FiltrationStep { degree: 1, labels: vec![KacLabel::Kac(1)] },
                FiltrationStep { degree: 0, labels: vec![KacLabel::Kac(0)] },
            ]
        );
        let single = KacFlagInput::parse("V(4)@4", None).unwrap();
        assert_eq!(degree_filtration(&single).unwrap().len(), 1);
        assert_eq!(
            degree_filtration(&KacFlagInput { pieces: vec![] }),
            Err(SeriesError::EmptyFlag)
        );
        let a = 5;
        let omega = KacFlagInput::parse("V(-4), V(0), V(-2)", Some(&BlockKey::gl11(a))).unwrap();
        let degs: Vec<i64> = degree_filtration(&omega).unwrap().iter().map(|s| s.degree).collect();
        assert_eq!(degs, vec![a, a - 2, a - 4]);
        assert!(omega.consistent_with(&BlockKey::gl11(a)));
        assert!(!omega.consistent_with(&BlockKey::gl11(a + 1)));
    }

    #[test]
    fn label_variant_enforced() {
        let mut s = KSeries::new(Variant::KacPlus, None);
        assert!(matches!(
            s.add_term(0, Label::Simple(0), 1),
            Err(SeriesError::WrongLabel { .. })
        ));
        let t = KSeries::new(Variant::Simple, None);
        assert!(s.add(&t).is_err());
    }

    #[test]
    fn json_form() {
        let mm = minimal_model_series(&BlockKey::gl11(0), 0, 1).unwrap();
        let v = serde_json::to_value(&mm.omega).unwrap();
        assert_eq!(v["variant"], "KacPlus");
        assert_eq!(v["terms"][0]["label"], "V(0)");
        assert_eq!(v["terms"][1]["deg"], -2);
        assert_eq!(v["truncation"], -2);
        let back: KSeries = serde_json::from_value(v).unwrap();
        assert_eq!(back, mm.omega);
    }

    #[test]
    fn display() {
        let mm = minimal_model_series(&BlockKey::gl11(0), 0, 1).unwrap();
        assert_eq!(mm.omega.to_string(), "[V(0)]q^0 + [V(-2)]q^-2");
        let d = mm.omega.sub(&mm.omega.shift(0)).unwrap();
        assert_eq!(d.to_string(), "0");
    }
}
