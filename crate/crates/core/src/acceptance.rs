//! Acceptance criteria, runnable from the CLI (`check all`) and from the
//! `acceptance` test target. Each criterion is exact; there are no
//! floating-point tolerances anywhere in this crate.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::block::BlockKey;
use crate::homotopy::{self, HoObject, HoSummand, ParityCount};
use crate::interval::{BlockObject, Indec, KacLabel};
use crate::oracle;
use crate::par::{self, Mode};
use crate::partitions::{self, Partition};
use crate::series::{self, KacFlagInput, Label};
use crate::weights::Weight;

pub const SEED: u64 = 0x5eed_2026;

/// Index window for hom tables.
pub const HOM_RANGE: std::ops::RangeInclusive<i64> = -10..=10;
pub const SERIES_DEPTH: usize = 10;
pub const SELFCONJ_MAX_N: usize = 12;
pub const CAUCHY_MAX_N: usize = 5;
pub const VVSTAR_MAX_N: usize = 6;
pub const RANDOM_OBJECTS: usize = 1000;
pub const RANDOM_FLAGS: usize = 200;
pub const RANDOM_WEIGHTS: usize = 500;
pub const EULER_PAIRS_PER_M: usize = 20;
pub const LR_MAX_SIZE: u32 = 6;
pub const LR_VARS: usize = 4;
pub const DIM_MAX_N: usize = 4;
pub const DIM_MAX_TOTAL: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] AC-{:02} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

type Check = fn(Mode) -> Result<String, String>;

pub const CRITERIA: [(usize, &str, Check); 12] = [
    (1, "hom table", hom_table),
    (2, "vanishing and endomorphisms", vanishing_and_endo),
    (3, "GL(1|1) minimal-model series", minimal_model_gl11),
    (4, "Euler identity", euler_identity),
    (5, "self-conjugate and box counts", self_conjugate_counts),
    (6, "Cauchy identity", cauchy_identity),
    (7, "V⊗V* Kac flag", vv_star),
    (8, "homotopy reduction", homotopy_reduction),
    (9, "shift and parity", shift_parity),
    (10, "degree filtration", degree_filtration),
    (11, "Littlewood-Richardson oracle", lr_oracle),
    (12, "block geometry", block_geometry),
];

pub fn run_criterion(id: usize, mode: Mode) -> Option<CriterionResult> {
    let &(id, name, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let (passed, detail) = match check(mode) {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CriterionResult {
        id,
        name,
        passed,
        detail,
    })
}

/// Runs every criterion; results come back ordered by id.
pub fn run_all(mode: Mode) -> Vec<CriterionResult> {
    let ids: Vec<usize> = CRITERIA.iter().map(|c| c.0).collect();
    par::map(mode, &ids, |&id| run_criterion(id, mode).expect("known id"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sample_keys() -> Vec<BlockKey> {
    vec![
        BlockKey::gl11(0),
        BlockKey::gl11(-3),
        BlockKey::new([0], -1).unwrap(),
        BlockKey::new([-2, 3], 1).unwrap(),
    ]
}

fn simple(key: &BlockKey, i: i64) -> HoObject {
    HoObject::simples(key.clone(), [i])
}

fn hom_table(_: Mode) -> Result<String, String> {
    let mut checked = 0;
    for key in sample_keys() {
        for i in HOM_RANGE {
            for j in HOM_RANGE {
                let got = homotopy::hom_dim(&simple(&key, i), &simple(&key, j)).map_err(|e| e.to_string())?;
                let want = usize::from(i >= j && (i - j).rem_euclid(2) == 0);
                ensure(got == want, || {
                    format!("[S({i}),S({j})] = {got}, expected {want} (core {:?})", key.core())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} pairs over {} blocks", sample_keys().len()))
}

fn vanishing_and_endo(_: Mode) -> Result<String, String> {
    let key = BlockKey::new([0], -1).unwrap();
    let (mut zeros, mut ones) = (0, 0);
    for i in HOM_RANGE {
        for j in HOM_RANGE {
            let d = homotopy::hom_dim(&simple(&key, i), &simple(&key, j)).map_err(|e| e.to_string())?;
            if j > i {
                ensure(d == 0, || format!("[S({i}),S({j})] = {d} for j > i"))?;
                zeros += 1;
            } else if i == j {
                ensure(d == 1, || format!("End(S({i})) has dimension {d}"))?;
                ones += 1;
            }
        }
    }
    Ok(format!("{zeros} vanishing spaces, {ones} one-dimensional endomorphism rings"))
}

fn minimal_model_gl11(_: Mode) -> Result<String, String> {
    let n = SERIES_DEPTH as i64;
    for a in -5..=5 {
        let key = BlockKey::gl11(a);
        let mm = series::minimal_model_series(&key, 0, SERIES_DEPTH).map_err(|e| e.to_string())?;
        let omega: Vec<_> = mm.omega.iter().collect();
        let want: Vec<_> = (0..=n).map(|i| (a - 2 * i, Label::Kac(-2 * i), 1)).collect();
        ensure(omega == want, || format!("a={a}: omega {omega:?}"))?;
        let kernel: Vec<_> = mm.kernel.iter().collect();
        let want: Vec<_> = (1..=n)
            .map(|i| (a - 2 * i + 1, Label::AntiKac(-2 * i + 1), 1))
            .collect();
        ensure(kernel == want, || format!("a={a}: kernel {kernel:?}"))?;
        ensure(
            mm.kernel.degrees().iter().all(|d| (d - a).rem_euclid(2) == 1),
            || format!("a={a}: kernel has an exponent of the wrong parity"),
        )?;
        // the Kac piece at q^{a-2i} carries [L(a-2i)] + [L(a-2i-1)]
        let e = series::expand_to_simples(&mm.omega).map_err(|e| e.to_string())?;
        let want: Vec<_> = (0..=n)
            .flat_map(|i| {
                [
                    (a - 2 * i, Label::Simple(-2 * i), 1),
                    (a - 2 * i - 1, Label::Simple(-2 * i - 1), 1),
                ]
            })
            .collect();
        let got: Vec<_> = e.iter().collect();
        ensure(got == want, || format!("a={a}: expanded omega {got:?}"))?;
    }
    Ok(format!("a in -5..=5, depth {SERIES_DEPTH}"))
}

fn random_key(rng: &mut ChaCha8Rng, m: usize) -> BlockKey {
    let mut pool: Vec<i64> = (-8..=8).collect();
    pool.shuffle(rng);
    let core: Vec<i64> = pool[..m - 1].to_vec();
    let base = pool[m - 1];
    BlockKey::new(core, base).expect("base drawn outside the core")
}

fn euler_identity(_: Mode) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let mut count = 0;
    for m in 1..=3 {
        for _ in 0..EULER_PAIRS_PER_M {
            let key = random_key(&mut rng, m);
            let u = rng.random_range(-5..=5);
            let e = series::euler_check(&key, u, SERIES_DEPTH).map_err(|e| e.to_string())?;
            let head: Vec<_> = e.head().iter().collect();
            let want = vec![(key.block_deg(u), Label::Simple(u), 1)];
            ensure(head == want, || {
                format!("core {:?} base {} u {u}: {head:?}", key.core(), key.base())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} (core, u) pairs for m in 1..=3"))
}

fn self_conjugate_counts(mode: Mode) -> Result<String, String> {
    let ns: Vec<usize> = (1..=SELFCONJ_MAX_N).collect();
    let rows = par::map(mode, &ns, |&n| {
        (
            n,
            partitions::count_self_conjugate(n),
            oracle::count_self_conjugate_brute(n),
            partitions::box_partitions(n).len(),
        )
    });
    for (n, fast, brute, boxes) in rows {
        ensure(fast == 1 << n && brute == fast, || {
            format!("n={n}: hooks give {fast}, enumeration gives {brute}, expected {}", 1u64 << n)
        })?;
        let want = oracle::binomial(2 * n as u64, n as u64) as usize;
        ensure(boxes == want, || format!("n={n}: {boxes} box partitions, expected {want}"))?;
    }
    Ok(format!("n = 1..={SELFCONJ_MAX_N}"))
}

fn cauchy_identity(mode: Mode) -> Result<String, String> {
    for n in 1..=CAUCHY_MAX_N {
        let report = partitions::cauchy_check_with(n, mode);
        let want = BigUint::from(1u32) << (n * n);
        ensure(report.total == want, || format!("n={n}: total {} != 2^{}", report.total, n * n))?;
        let oracle_total: BigUint = oracle::box_partitions_by_paths(n, n)
            .iter()
            .map(|p| {
                oracle::gl_dim_hook_content(p, n)
                    * oracle::gl_dim_hook_content(&oracle::transpose_by_cells(p), n)
            })
            .sum();
        ensure(oracle_total == want, || format!("n={n}: hook-content total {oracle_total}"))?;
    }
    Ok(format!("n = 1..={CAUCHY_MAX_N}"))
}

fn vv_star(mode: Mode) -> Result<String, String> {
    for n in 1..=VVSTAR_MAX_N {
        let flag = partitions::vv_star_flag_with(n, mode);
        let nn = (n * n) as i64;
        let entries = oracle::binomial(2 * n as u64, n as u64) as usize;
        ensure(flag.entries.len() == entries, || format!("n={n}: {} entries", flag.entries.len()))?;
        ensure(flag.max_atypical_count() == 1 << n, || {
            format!("n={n}: {} maximal entries", flag.max_atypical_count())
        })?;
        let (lo, hi) = flag.degree_range().unwrap();
        ensure(lo >= -2 * nn && hi <= -nn, || format!("n={n}: degrees in [{lo},{hi}]"))?;
        ensure(flag.min_max_atypical_degree() == Some(-2 * nn), || {
            format!("n={n}: min maximal degree {:?}", flag.min_max_atypical_degree())
        })?;
    }
    Ok(format!("n = 1..={VVSTAR_MAX_N}"))
}

pub fn random_block_object(rng: &mut ChaCha8Rng, key: &BlockKey) -> BlockObject {
    let mut x = BlockObject::zero(key.clone());
    for _ in 0..rng.random_range(0..=6) {
        let a = rng.random_range(-8..=8);
        let len = rng.random_range(0..=5);
        let item = match rng.random_range(0..4) {
            0 => Indec::r(a, a + len).unwrap(),
            1 => Indec::b(a, a + len).unwrap(),
            2 => Indec::P(a),
            _ => Indec::simple(a),
        };
        x.add(item, rng.random_range(1..=2));
    }
    x
}

fn homotopy_reduction(_: Mode) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let key = BlockKey::new([2], 0).unwrap();
    for _ in 0..RANDOM_OBJECTS {
        let x = random_block_object(&mut rng, &key);
        let h = homotopy::ho_reduce(&x);
        ensure(homotopy::ho_reduce(&homotopy::lift(&h)) == h, || format!("not idempotent on {x}"))?;
        for s in x.iter() {
            let single = BlockObject::from_summands(key.clone(), [s]);
            let r = homotopy::ho_reduce(&single);
            let want: Option<HoSummand> = match s {
                Indec::P(_) => None,
                Indec::B { a, b } if (b - a) % 2 == 1 => None,
                Indec::B { b, .. } => Some(HoSummand::S(b)),
                Indec::R { a, b } if (b - a) % 2 == 0 => Some(HoSummand::S(a)),
                Indec::R { a, b } => Some(HoSummand::EvenR { a, b }),
            };
            let want = match want {
                Some(w) => {
                    let mut o = HoObject::zero(key.clone());
                    o.add(w, 1);
                    o
                }
                None => HoObject::zero(key.clone()),
            };
            ensure(r == want, || format!("{s} reduced to {r}"))?;
        }
        let d = x.twisted_dual();
        ensure(d.twisted_dual() == x, || format!("dual not an involution on {x}"))?;
        ensure(d.composition_factors() == x.composition_factors(), || {
            format!("dual changed composition factors of {x}")
        })?;
        let (c, cd) = (x.classify(), d.classify());
        ensure(c.in_tplus == cd.in_tminus && c.in_tminus == cd.in_tplus, || {
            format!("dual does not swap T+/T- on {x}")
        })?;
    }
    Ok(format!("{RANDOM_OBJECTS} random objects"))
}

fn shift_parity(_: Mode) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let key = BlockKey::new([-1, 4], 1).unwrap();
    let err = |e: homotopy::HoError| e.to_string();
    for _ in 0..200 {
        let xs: Vec<i64> = (0..rng.random_range(0..4)).map(|_| rng.random_range(-6..=6)).collect();
        let ys: Vec<i64> = (0..rng.random_range(0..4)).map(|_| rng.random_range(-6..=6)).collect();
        let x = HoObject::simples(key.clone(), xs);
        let y = HoObject::simples(key.clone(), ys);
        let d = homotopy::hom_dim(&x, &y).map_err(err)?;
        for k in -5..=5 {
            let (xk, yk) = (homotopy::shift(&x, k).map_err(err)?, homotopy::shift(&y, k).map_err(err)?);
            let dk = homotopy::hom_dim(&xk, &yk).map_err(err)?;
            ensure(dk == d, || format!("[{x},{y}] = {d} but shifted by {k} gives {dk}"))?;
            ensure(homotopy::shift(&xk, -k).map_err(err)? == x, || format!("shift {k} not invertible"))?;
        }
        let p = homotopy::isogeny_image(&x);
        let p1 = homotopy::isogeny_image(&homotopy::shift(&x, 1).map_err(err)?);
        ensure(p1 == ParityCount { ev: p.odd, odd: p.ev }, || format!("parity not flipped on {x}"))?;
    }
    for i in HOM_RANGE {
        let s1 = homotopy::shift(&simple(&key, i), 1).map_err(err)?;
        ensure(s1 == simple(&key, i - 1), || format!("S({i})[1] = {s1}"))?;
    }
    Ok("200 random pairs, shifts -5..=5".into())
}

fn degree_filtration(_: Mode) -> Result<String, String> {
    let err = |e: series::SeriesError| e.to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    for _ in 0..RANDOM_FLAGS {
        let m = rng.random_range(1..=3);
        let key = random_key(&mut rng, m);
        let labels: Vec<KacLabel> = (0..rng.random_range(1..=8))
            .map(|_| KacLabel::Kac(rng.random_range(-6..=6)))
            .collect();
        let flag = KacFlagInput::from_labels(&key, &labels);
        let base = series::degree_filtration(&flag).map_err(err)?;
        let mut shuffled = flag.clone();
        shuffled.pieces.shuffle(&mut rng);
        ensure(series::degree_filtration(&shuffled).map_err(err)? == base, || {
            format!("permutation changed the filtration of {labels:?}")
        })?;
        ensure(base.windows(2).all(|w| w[0].degree > w[1].degree), || {
            "degrees not strictly decreasing".into()
        })?;
        let mut all: Vec<KacLabel> = base.iter().flat_map(|s| s.labels.clone()).collect();
        let mut orig = labels.clone();
        all.sort();
        orig.sort();
        ensure(all == orig, || "groups lose pieces".into())?;
    }
    let gl11 = BlockKey::gl11(0);
    let p0 = Indec::P(0).flags().map_err(|e| e.to_string())?.kac.unwrap();
    let f = series::degree_filtration(&KacFlagInput::from_labels(&gl11, &p0)).map_err(err)?;
    let got: Vec<(i64, Vec<KacLabel>)> = f.into_iter().map(|s| (s.degree, s.labels)).collect();
    ensure(
        got == vec![(1, vec![KacLabel::Kac(1)]), (0, vec![KacLabel::Kac(0)])],
        || format!("P(0) filtration {got:?}"),
    )?;
    for a in -3..=3 {
        let key = BlockKey::gl11(a);
        let prefix = [KacLabel::Kac(-4), KacLabel::Kac(0), KacLabel::Kac(-2)];
        let f = series::degree_filtration(&KacFlagInput::from_labels(&key, &prefix)).map_err(err)?;
        let got: Vec<(i64, usize)> = f.iter().map(|s| (s.degree, s.labels.len())).collect();
        ensure(got == vec![(a, 1), (a - 2, 1), (a - 4, 1)], || format!("omega prefix {got:?}"))?;
    }
    Ok(format!("{RANDOM_FLAGS} random flags plus fixed examples"))
}

fn lr_oracle(mode: Mode) -> Result<String, String> {
    let parts = oracle::small_partitions(LR_MAX_SIZE, LR_VARS);
    let pairs: Vec<(Partition, Partition)> = parts
        .iter()
        .flat_map(|l| parts.iter().map(move |m| (l.clone(), m.clone())))
        .collect();
    let failures = par::map(mode, &pairs, |(l, m)| {
        let want = oracle::lr_by_schur(l.parts(), m.parts(), LR_VARS);
        let got: BTreeMap<Vec<u32>, i64> = partitions::lr_product(l, m)
            .into_iter()
            .filter(|(nu, _)| nu.len() <= LR_VARS)
            .map(|(nu, c)| (nu.parts().to_vec(), c as i64))
            .collect();
        (got != want).then(|| format!("{l} * {m}: tableaux {got:?} vs schur {want:?}"))
    });
    if let Some(f) = failures.into_iter().flatten().next() {
        return Err(f);
    }
    let mut dim_checks = 0;
    for n in 1..=DIM_MAX_N {
        let small = oracle::small_partitions(DIM_MAX_TOTAL, n);
        for l in &small {
            for m in &small {
                if l.size() + m.size() > DIM_MAX_TOTAL {
                    continue;
                }
                let lhs: BigUint = partitions::lr_product(l, m)
                    .into_iter()
                    .filter(|(nu, _)| nu.len() <= n)
                    .map(|(nu, c)| partitions::gl_dim(&nu, n).unwrap() * c)
                    .sum();
                let rhs = partitions::gl_dim(l, n).unwrap() * partitions::gl_dim(m, n).unwrap();
                ensure(lhs == rhs, || format!("n={n}, {l} * {m}: {lhs} != {rhs}"))?;
                dim_checks += 1;
            }
        }
    }
    Ok(format!("{} products vs Schur oracle, {dim_checks} dimension identities", pairs.len()))
}

/// A random atypical GL(m|1) weight: a dominant even part plus the odd
/// entry that pairs with one of its vee labels.
pub fn random_atypical_weight(rng: &mut ChaCha8Rng, m: usize) -> Weight {
    let mut even: Vec<i64> = (0..m).map(|_| rng.random_range(-6..=6)).collect();
    even.sort_unstable_by(|a, b| b.cmp(a));
    let k = rng.random_range(0..m);
    let v = even[k] - k as i64; // λ_{k+1} + 1 - (k+1)
    Weight::from_parts(&even, &[1 - m as i64 - v]).expect("dominant by construction")
}

fn block_geometry(_: Mode) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 12);
    let mut keys = BTreeSet::new();
    for _ in 0..RANDOM_WEIGHTS {
        let m = rng.random_range(1..=4);
        let w = random_atypical_weight(&mut rng, m);
        let key = BlockKey::of_weight(&w).map_err(|e| e.to_string())?;
        ensure(key.weight_at(0) == w, || format!("weight_at(block_key({w})) = {}", key.weight_at(0)))?;
        for i in -10..=10 {
            let walked = oracle::position_by_walk(key.core(), key.base(), i);
            ensure(key.position(i) == walked, || format!("{w}: position({i}) != walk {walked}"))?;
        }
        keys.insert(key);
    }
    for key in &keys {
        for i in -10..10 {
            ensure(key.block_deg(i) < key.block_deg(i + 1), || {
                format!("block_deg not increasing at {i} for core {:?}", key.core())
            })?;
        }
    }
    // d - d' per block, as stated
    let mut offenders = Vec::new();
    for key in &keys {
        let diffs: BTreeSet<i64> = (-10..=10)
            .map(|i| {
                let b = key.weight_at(i).bidegree();
                b.d - b.dprime
            })
            .collect();
        if diffs.len() > 1 {
            offenders.push(key.clone());
        }
    }
    let sums_constant = keys.iter().all(|key| {
        let sums: BTreeSet<i64> = (-10..=10)
            .map(|i| {
                let b = key.weight_at(i).bidegree();
                b.d + b.dprime
            })
            .collect();
        sums.len() == 1
    });
    if let Some(k) = offenders.first() {
        let w0 = k.weight_at(0);
        let w1 = k.weight_at(1);
        let (b0, b1) = (w0.bidegree(), w1.bidegree());
        return Err(format!(
            "round-trip and monotonicity hold on {} weights / {} blocks, but d - d' varies \
             within {} of them, e.g. {w0} has d-d'={} and {w1} has d-d'={} (d + d' constant in every block: {sums_constant})",
            RANDOM_WEIGHTS,
            keys.len(),
            offenders.len(),
            b0.d - b0.dprime,
            b1.d - b1.dprime,
        ));
    }
    Ok(format!("{RANDOM_WEIGHTS} weights over {} blocks", keys.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_weights_are_atypical() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for m in 1..=4 {
            for _ in 0..50 {
                assert_eq!(random_atypical_weight(&mut rng, m).atypicality(), 1);
            }
        }
    }

    #[test]
    fn fast_criteria_pass() {
        for id in [1, 2, 3, 4, 8, 9, 10] {
            let r = run_criterion(id, Mode::Parallel).unwrap();
            assert!(r.passed, "{}", r.line());
        }
    }
}
