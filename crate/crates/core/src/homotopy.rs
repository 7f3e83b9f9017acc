//! The homotopy category of one atypical GL(m|1) block.
//!
//! After localization every indecomposable is either zero, the image `S(i)`
//! of a simple `L(i)`, or an even-length `R[a,b]` (which stays
//! indecomposable with one-dimensional endomorphisms). Between simples
//!
//! ```text
//! [S(i), S(j)] = k   if i >= j and i ≡ j (mod 2),   0 otherwise,
//! ```
//!
//! and the shift acts by `S(i)[1] = S(i-1)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::block::BlockKey;
use crate::expr::{self, ExprError};
use crate::interval::{BlockObject, Indec};
use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HoError {
    #[error("shift of {0} is not available")]
    UnsupportedShift(HoSummand),
    #[error("hom space between {0} and {1} is not available")]
    UnsupportedHom(String, String),
    #[error("cannot compose: source {source_obj:?} of the outer map differs from target {target_obj:?} of the inner map")]
    CompositionMismatch {
        source_obj: Vec<i64>,
        target_obj: Vec<i64>,
    },
    #[error("no nonzero morphism S({from}) -> S({to})")]
    InvalidArrow { from: i64, to: i64 },
    #[error("slot {slot} out of range for an object with {len} summands")]
    BadSlot { slot: usize, len: usize },
    #[error("tensor products need mixed-tensor data for m = {0} > 1")]
    UnsupportedTensor(usize),
    #[error("blocks differ")]
    BlockMismatch,
    #[error("unknown homotopy summand {0:?}")]
    UnknownKind(String),
    #[error(transparent)]
    Parse(#[from] ExprError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HoSummand {
    S(i64),
    /// `R[a,b]` with `b - a` odd.
    EvenR { a: i64, b: i64 },
}

impl fmt::Display for HoSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HoSummand::S(i) => write!(f, "S({i})"),
            HoSummand::EvenR { a, b } => write!(f, "EvenR[{a},{b}]"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct HoRecord {
    kind: String,
    a: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<i64>,
}

impl Serialize for HoSummand {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rec = match *self {
            HoSummand::S(i) => HoRecord {
                kind: "S".into(),
                a: i,
                b: None,
            },
            HoSummand::EvenR { a, b } => HoRecord {
                kind: "EvenR".into(),
                a,
                b: Some(b),
            },
        };
        rec.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HoSummand {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = HoRecord::deserialize(d)?;
        match (rec.kind.as_str(), rec.b) {
            ("S", None) => Ok(HoSummand::S(rec.a)),
            ("EvenR", Some(b)) => HoSummand::even_r(rec.a, b),
            _ => Err(HoError::UnknownKind(rec.kind)),
        }
        .map_err(serde::de::Error::custom)
    }
}

impl HoSummand {
    pub fn even_r(a: i64, b: i64) -> Result<HoSummand, HoError> {
        if b > a && (b - a) % 2 == 1 {
            Ok(HoSummand::EvenR { a, b })
        } else {
            Err(HoError::UnknownKind(format!("EvenR[{a},{b}] (length must be even)")))
        }
    }
}

/// A finite direct sum in the homotopy category of one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoObject {
    key: BlockKey,
    summands: BTreeMap<HoSummand, usize>,
}

impl HoObject {
    pub fn zero(key: BlockKey) -> Self {
        HoObject {
            key,
            summands: BTreeMap::new(),
        }
    }

    pub fn simples(key: BlockKey, indices: impl IntoIterator<Item = i64>) -> Self {
        let mut x = HoObject::zero(key);
        for i in indices {
            x.add(HoSummand::S(i), 1);
        }
        x
    }

    pub fn parse(key: BlockKey, s: &str) -> Result<Self, HoError> {
        let s = s.trim();
        let mut x = HoObject::zero(key);
        if s.starts_with('[') {
            let items: Vec<HoSummand> = serde_json::from_str(s).map_err(|e| ExprError {
                input: s.to_string(),
                reason: e.to_string(),
            })?;
            for it in items {
                x.add(it, 1);
            }
            return Ok(x);
        }
        for t in expr::parse_sum(s)? {
            let item = match (t.name.as_str(), t.args.as_slice()) {
                ("S" | "L", &[i]) => HoSummand::S(i),
                ("EvenR" | "R", &[a, b]) => HoSummand::even_r(a, b)?,
                _ => return Err(HoError::UnknownKind(format!("{}{:?}", t.name, t.args))),
            };
            x.add(item, t.mult as usize);
        }
        Ok(x)
    }

    pub fn add(&mut self, s: HoSummand, mult: usize) {
        if mult > 0 {
            *self.summands.entry(s).or_default() += mult;
        }
    }

    pub fn key(&self) -> &BlockKey {
        &self.key
    }

    pub fn summands(&self) -> &BTreeMap<HoSummand, usize> {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = HoSummand> + '_ {
        self.summands
            .iter()
            .flat_map(|(&x, &k)| std::iter::repeat_n(x, k))
    }

    pub fn direct_sum(&self, other: &HoObject) -> HoObject {
        let mut out = self.clone();
        for (&x, &k) in &other.summands {
            out.add(x, k);
        }
        out
    }

    /// Indices of the `S(i)` summands, or `None` if an `EvenR` is present.
    pub fn simple_indices(&self) -> Option<Vec<i64>> {
        self.iter()
            .map(|s| match s {
                HoSummand::S(i) => Some(i),
                HoSummand::EvenR { .. } => None,
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.iter().collect::<Vec<_>>()).expect("plain records")
    }
}

impl fmt::Display for HoObject {
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

fn reduce_indec(x: Indec) -> Option<HoSummand> {
    match x {
        Indec::P(_) => None,
        Indec::B { a, b } if (b - a) % 2 == 1 => None,
        Indec::B { b, .. } => Some(HoSummand::S(b)),
        Indec::R { a, b } if (b - a) % 2 == 1 => Some(HoSummand::EvenR { a, b }),
        Indec::R { a, .. } => Some(HoSummand::S(a)),
    }
}

/// Image of a block object in the homotopy category.
pub fn ho_reduce(x: &BlockObject) -> HoObject {
    let mut out = HoObject::zero(x.key().clone());
    for (&s, &k) in x.summands() {
        if let Some(h) = reduce_indec(s) {
            out.add(h, k);
        }
    }
    out
}

/// Reduction is idempotent; a homotopy object viewed as a block object
/// (`S(i) -> L(i)`, `EvenR -> R`) reduces back to itself.
pub fn lift(x: &HoObject) -> BlockObject {
    let mut out = BlockObject::zero(x.key().clone());
    for (&s, &k) in x.summands() {
        let ind = match s {
            HoSummand::S(i) => Indec::simple(i),
            HoSummand::EvenR { a, b } => Indec::R { a, b },
        };
        out.add(ind, k);
    }
    out
}

/// `x[k]`; on simples `S(i)[k] = S(i - k)`.
pub fn shift(x: &HoObject, k: i64) -> Result<HoObject, HoError> {
    if k == 0 {
        return Ok(x.clone());
    }
    let mut out = HoObject::zero(x.key().clone());
    for (&s, &mult) in x.summands() {
        match s {
            HoSummand::S(i) => out.add(HoSummand::S(i - k), mult),
            other => return Err(HoError::UnsupportedShift(other)),
        }
    }
    Ok(out)
}

/// Whether `[S(i), S(j)]` is nonzero.
pub fn simple_hom_nonzero(i: i64, j: i64) -> bool {
    i >= j && (i - j) % 2 == 0
}

pub fn hom_dim(x: &HoObject, y: &HoObject) -> Result<usize, HoError> {
    if x.key() != y.key() {
        return Err(HoError::BlockMismatch);
    }
    match (x.simple_indices(), y.simple_indices()) {
        (Some(xs), Some(ys)) => Ok(xs
            .iter()
            .map(|&i| ys.iter().filter(|&&j| simple_hom_nonzero(i, j)).count())
            .sum()),
        _ => {
            let mut xi = x.iter();
            let mut yi = y.iter();
            match (xi.next(), xi.next(), yi.next(), yi.next()) {
                (Some(a @ HoSummand::EvenR { .. }), None, Some(b), None) if a == b => Ok(1),
                _ => Err(HoError::UnsupportedHom(x.to_string(), y.to_string())),
            }
        }
    }
}

/// A morphism between sums of simples, stored as a matrix whose entry
/// `(t, s)` is the coefficient of the basis arrow from source slot `s` to
/// target slot `t`. The arrow `S(j) -> S(i)` is called `f_{ij}`; it exists
/// for `j >= i`, `j ≡ i (mod 2)`, and `f_{ij} ∘ f_{jk} = f_{ik}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoMorphism {
    source: Vec<i64>,
    target: Vec<i64>,
    entries: BTreeMap<(usize, usize), i64>,
}

/// Serialized basis arrow `coeff · f_{ij}` with slot tags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowRecord {
    pub i: i64,
    pub j: i64,
    pub coeff: i64,
    pub source_slot: usize,
    pub target_slot: usize,
}

impl HoMorphism {
    pub fn zero(source: Vec<i64>, target: Vec<i64>) -> Self {
        HoMorphism {
            source,
            target,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(obj: Vec<i64>) -> Self {
        let entries = (0..obj.len()).map(|s| ((s, s), 1)).collect();
        HoMorphism {
            source: obj.clone(),
            target: obj,
            entries,
        }
    }

    /// The basis arrow `f_{ij}: S(j) -> S(i)`.
    pub fn basis(i: i64, j: i64) -> Result<Self, HoError> {
        let mut f = HoMorphism::zero(vec![j], vec![i]);
        f.set(0, 0, 1)?;
        Ok(f)
    }

    pub fn set(&mut self, target_slot: usize, source_slot: usize, coeff: i64) -> Result<(), HoError> {
        let (Some(&i), Some(&j)) = (self.target.get(target_slot), self.source.get(source_slot)) else {
            let (slot, len) = if target_slot >= self.target.len() {
                (target_slot, self.target.len())
            } else {
                (source_slot, self.source.len())
            };
            return Err(HoError::BadSlot { slot, len });
        };
        if !simple_hom_nonzero(j, i) {
            return Err(HoError::InvalidArrow { from: j, to: i });
        }
        if coeff == 0 {
            self.entries.remove(&(target_slot, source_slot));
        } else {
            self.entries.insert((target_slot, source_slot), coeff);
        }
        Ok(())
    }

    pub fn source(&self) -> &[i64] {
        &self.source
    }

    pub fn target(&self) -> &[i64] {
        &self.target
    }

    pub fn coeff(&self, target_slot: usize, source_slot: usize) -> i64 {
        self.entries.get(&(target_slot, source_slot)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn arrows(&self) -> Vec<ArrowRecord> {
        self.entries
            .iter()
            .map(|(&(t, s), &coeff)| ArrowRecord {
                i: self.target[t],
                j: self.source[s],
                coeff,
                source_slot: s,
                target_slot: t,
            })
            .collect()
    }

    pub fn add(&self, other: &HoMorphism) -> Result<HoMorphism, HoError> {
        if self.source != other.source || self.target != other.target {
            return Err(HoError::CompositionMismatch {
                source_obj: self.source.clone(),
                target_obj: other.source.clone(),
            });
        }
        let mut out = self.clone();
        for (&k, &c) in &other.entries {
            let v = out.entries.entry(k).or_insert(0);
            *v += c;
            if *v == 0 {
                out.entries.remove(&k);
            }
        }
        Ok(out)
    }
}

/// `g ∘ f`.
pub fn compose(g: &HoMorphism, f: &HoMorphism) -> Result<HoMorphism, HoError> {
    if g.source != f.target {
        return Err(HoError::CompositionMismatch {
            source_obj: g.source.clone(),
            target_obj: f.target.clone(),
        });
    }
    let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (&(t, mid), &cg) in &g.entries {
        for (&(mid2, s), &cf) in f.entries.range((mid, 0)..=(mid, usize::MAX)) {
            debug_assert_eq!(mid, mid2);
            *acc.entry((t, s)).or_insert(0) += cg * cf;
        }
    }
    acc.retain(|_, c| *c != 0);
    Ok(HoMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        entries: acc,
    })
}

/// Image after inverting isogenies: each block collapses to an even and an
/// odd object, indexed by parity relative to `L(0)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityCount {
    pub ev: usize,
    pub odd: usize,
}

pub fn isogeny_image(x: &HoObject) -> ParityCount {
    let mut out = ParityCount::default();
    for (s, &k) in x.summands() {
        if let HoSummand::S(i) = s {
            if i.rem_euclid(2) == 0 {
                out.ev += k;
            } else {
                out.odd += k;
            }
        }
    }
    out
}

/// Image in the semisimple quotient by negligible morphisms, labelled by
/// atypical weights.
pub fn ss_image(x: &HoObject) -> BTreeMap<Weight, usize> {
    let mut out = BTreeMap::new();
    for (s, &k) in x.summands() {
        if let HoSummand::S(i) = s {
            *out.entry(x.key().weight_at(*i)).or_default() += k;
        }
    }
    out
}

/// Tensor product of simple labels in the semisimple quotient. Only GL(1|1)
/// is supported: there every atypical simple is a power of the Berezinian.
pub fn ss_tensor(a: &Weight, b: &Weight) -> Result<Weight, HoError> {
    if a.m() != 1 || a.n() != 1 || b.m() != 1 || b.n() != 1 {
        return Err(HoError::UnsupportedTensor(a.m().max(b.m())));
    }
    Ok(a.ber_twist(b.rows()[0]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key() -> BlockKey {
        BlockKey::gl11(0)
    }

    fn ho(s: &str) -> HoObject {
        HoObject::parse(key(), s).unwrap()
    }

    fn blk(s: &str) -> BlockObject {
        BlockObject::parse(key(), s).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(ho_reduce(&blk("B[0,2]")), ho("S(2)"));
        assert_eq!(ho_reduce(&blk("R[0,2]")), ho("S(0)"));
        assert!(ho_reduce(&blk("B[0,1] + P(7)")).is_zero());
        assert_eq!(ho_reduce(&blk("L(3)")), ho("S(3)"));
        assert_eq!(ho_reduce(&blk("R[0,3]")), ho("EvenR[0,3]"));
        let x = blk("R[0,3] + 2*B[1,3] + P(1) + R[2,4]");
        assert_eq!(ho_reduce(&lift(&ho_reduce(&x))), ho_reduce(&x));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift(&ho("S(5)"), 1).unwrap(), ho("S(4)"));
        assert_eq!(shift(&ho("S(5)"), 0).unwrap(), ho("S(5)"));
        assert_eq!(shift(&ho("EvenR[0,3]"), 0).unwrap(), ho("EvenR[0,3]"));
        assert!(matches!(
            shift(&ho("EvenR[0,3]"), 1),
            Err(HoError::UnsupportedShift(_))
        ));
    }

    #[test]
    fn hom_dim_examples() {
        assert_eq!(hom_dim(&ho("S(2)"), &ho("S(0)")).unwrap(), 1);
        assert_eq!(hom_dim(&ho("S(1)"), &ho("S(0)")).unwrap(), 0);
        assert_eq!(hom_dim(&ho("S(0)"), &ho("S(2)")).unwrap(), 0);
        for i in -4..4 {
            let s = ho(&format!("S({i})"));
            assert_eq!(hom_dim(&s, &s).unwrap(), 1);
        }
        assert_eq!(hom_dim(&ho("S(0) + S(2)"), &ho("S(0)")).unwrap(), 2);
        assert_eq!(hom_dim(&ho("EvenR[0,3]"), &ho("EvenR[0,3]")).unwrap(), 1);
        assert!(matches!(
            hom_dim(&ho("EvenR[0,3]"), &ho("S(0)")),
            Err(HoError::UnsupportedHom(..))
        ));
        assert!(hom_dim(&ho("EvenR[0,3]"), &ho("EvenR[0,1]")).is_err());
    }

    #[test]
    fn graded_hom_via_shift() {
        // [S(0), S(0)[k]] = [S(0), S(-k)] is nonzero exactly for even k >= 0
        for k in -4..=4 {
            let d = hom_dim(&ho("S(0)"), &shift(&ho("S(0)"), k).unwrap()).unwrap();
            assert_eq!(d, usize::from(k >= 0 && k % 2 == 0));
        }
    }

    #[test]
    fn compose_examples() {
        let f02 = HoMorphism::basis(0, 2).unwrap();
        let f24 = HoMorphism::basis(2, 4).unwrap();
        assert_eq!(compose(&f02, &f24).unwrap(), HoMorphism::basis(0, 4).unwrap());
        let fii = HoMorphism::basis(3, 3).unwrap();
        assert_eq!(compose(&fii, &fii).unwrap(), fii);
        let f13 = HoMorphism::basis(1, 3).unwrap();
        assert!(matches!(
            compose(&f02, &f13),
            Err(HoError::CompositionMismatch { .. })
        ));
        assert!(matches!(
            HoMorphism::basis(2, 0),
            Err(HoError::InvalidArrow { .. })
        ));
        assert!(HoMorphism::basis(0, 1).is_err());
    }

    #[test]
    fn nilpotent_radical_of_two_simples() {
        // End(S(0) ⊕ S(-2)) is 3-dimensional: two identities plus f_{-2,0}.
        let x = ho("S(0) + S(-2)");
        assert_eq!(hom_dim(&x, &x).unwrap(), 3);
        let obj = vec![0, -2];
        let mut n = HoMorphism::zero(obj.clone(), obj.clone());
        n.set(1, 0, 1).unwrap();
        assert!(n.set(0, 1, 1).is_err());
        assert!(compose(&n, &n).unwrap().is_zero());
        assert_eq!(compose(&HoMorphism::identity(obj), &n).unwrap(), n);
    }

    #[test]
    fn isogeny_examples() {
        assert_eq!(
            isogeny_image(&ho("S(0) + S(2) + S(-4)")),
            ParityCount { ev: 3, odd: 0 }
        );
        assert_eq!(isogeny_image(&ho("EvenR[0,3]")), ParityCount::default());
        assert_eq!(isogeny_image(&ho("S(1)")), ParityCount { ev: 0, odd: 1 });
        assert_eq!(
            isogeny_image(&shift(&ho("S(1)"), 1).unwrap()),
            ParityCount { ev: 1, odd: 0 }
        );
    }

    #[test]
    fn ss_image_examples() {
        for a in -3..=3 {
            let k = BlockKey::gl11(a);
            let wa: Weight = format!("{a}|{}", -a).parse().unwrap();
            let x = HoObject::simples(k.clone(), [0]);
            assert_eq!(ss_image(&x), BTreeMap::from([(wa.clone(), 1)]));
            let xx = HoObject::simples(k.clone(), [0, 0]);
            assert_eq!(ss_image(&xx), BTreeMap::from([(wa, 2)]));
            assert!(ss_image(&HoObject::parse(k, "EvenR[0,1]").unwrap()).is_empty());
        }
    }

    #[test]
    fn ss_tensor_gl11_only() {
        let a: Weight = "2|-2".parse().unwrap();
        let b: Weight = "-5|5".parse().unwrap();
        assert_eq!(ss_tensor(&a, &b).unwrap(), "-3|3".parse().unwrap());
        let c: Weight = "0,0|0".parse().unwrap();
        assert!(matches!(ss_tensor(&c, &c), Err(HoError::UnsupportedTensor(2))));
    }

    #[test]
    fn json_forms() {
        let x = ho("S(1) + EvenR[0,3]");
        let js = x.to_json().to_string();
        let expected: serde_json::Value =
            serde_json::from_str(r#"[{"kind":"S","a":1},{"kind":"EvenR","a":0,"b":3}]"#).unwrap();
        assert_eq!(x.to_json(), expected);
        assert_eq!(ho(&js), x);
        let arrows = HoMorphism::basis(0, 2).unwrap().arrows();
        assert_eq!(arrows[0].i, 0);
        assert_eq!(arrows[0].j, 2);
        assert_eq!(arrows[0].coeff, 1);
    }
}
