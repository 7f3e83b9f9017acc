use std::collections::BTreeSet;

use glsuper::acceptance::{random_atypical_weight, random_block_object};
use glsuper::homotopy::{self, HoMorphism, HoObject};
use glsuper::interval::{BlockObject, Indec, KacLabel};
use glsuper::oracle;
use glsuper::partitions::{self, Partition};
use glsuper::series::{self, KSeries, KacFlagInput, Label, Variant};
use glsuper::{BlockKey, Weight};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn dominant_weight() -> impl Strategy<Value = Weight> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(m, n)| {
        (
            prop::collection::vec(-6i64..=6, m),
            prop::collection::vec(-6i64..=6, n),
        )
            .prop_map(|(mut even, mut odd)| {
                even.sort_unstable_by(|a, b| b.cmp(a));
                odd.sort_unstable_by(|a, b| b.cmp(a));
                Weight::from_parts(&even, &odd).unwrap()
            })
    })
}

fn atypical_gl_m1() -> impl Strategy<Value = Weight> {
    (1usize..=4, any::<u64>()).prop_map(|(m, seed)| {
        random_atypical_weight(&mut ChaCha8Rng::seed_from_u64(seed), m)
    })
}

fn block_key() -> impl Strategy<Value = BlockKey> {
    atypical_gl_m1().prop_map(|w| BlockKey::of_weight(&w).unwrap())
}

fn block_object() -> impl Strategy<Value = BlockObject> {
    any::<u64>().prop_map(|seed| {
        random_block_object(&mut ChaCha8Rng::seed_from_u64(seed), &BlockKey::gl11(0))
    })
}

fn small_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..=3, 0..=3).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn kac_series(key: BlockKey) -> impl Strategy<Value = KSeries> {
    prop::collection::vec((-6i64..=6, -4i64..=4, -3i64..=3), 0..6).prop_map(move |terms| {
        let mut s = KSeries::new(Variant::KacPlus, Some(key.clone()));
        for (i, dd, c) in terms {
            s.add_term(key.block_deg(i) + dd, Label::Kac(i), c).unwrap();
        }
        s
    })
}

proptest! {
    #[test]
    fn twist_preserves_atypicality(w in dominant_weight(), k in -5i64..=5) {
        let t = w.ber_twist(k);
        prop_assert_eq!(t.atypicality(), w.atypicality());
        prop_assert_eq!(t.deg(), w.deg() + k * w.m() as i64);
        prop_assert!(w.atypicality() <= w.m().min(w.n()));
        prop_assert_eq!(t.ber_twist(-k), w);
    }

    #[test]
    fn label_sets_have_full_size(w in dominant_weight()) {
        let s = w.label_sets();
        prop_assert_eq!(s.vee.len(), w.m());
        prop_assert_eq!(s.wedge.len(), w.n());
    }

    #[test]
    fn display_round_trips(w in dominant_weight()) {
        prop_assert_eq!(w.to_string().parse::<Weight>().unwrap(), w.clone());
        let js = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<Weight>(&js).unwrap(), w);
    }

    #[test]
    fn block_round_trip(w in atypical_gl_m1()) {
        let key = BlockKey::of_weight(&w).unwrap();
        prop_assert_eq!(key.weight_at(0), w.clone());
        for i in -6..=6 {
            let v = key.weight_at(i);
            prop_assert_eq!(v.atypicality(), 1);
            prop_assert_eq!(BlockKey::of_weight(&v).unwrap().core().clone(), key.core().clone());
            prop_assert_eq!(key.index_of_weight(&v), Some(i));
            prop_assert_eq!(key.position(i), oracle::position_by_walk(key.core(), key.base(), i));
        }
    }

    #[test]
    fn block_deg_strictly_increasing(key in block_key()) {
        for i in -10..10 {
            prop_assert!(key.block_deg(i) < key.block_deg(i + 1));
        }
    }

    #[test]
    fn bidegree_sum_is_block_invariant(key in block_key()) {
        let sums: BTreeSet<i64> = (-10..=10)
            .map(|i| {
                let b = key.weight_at(i).bidegree();
                b.d + b.dprime
            })
            .collect();
        prop_assert_eq!(sums.len(), 1);
    }

    #[test]
    fn dual_is_involution(x in block_object()) {
        prop_assert_eq!(x.twisted_dual().twisted_dual(), x.clone());
        let f = x.composition_factors();
        let g: std::collections::BTreeMap<i64, usize> =
            x.twisted_dual().composition_factors();
        prop_assert_eq!(f, g);
    }

    #[test]
    fn classify_swaps_under_dual(x in block_object()) {
        let c = x.classify();
        let d = x.twisted_dual().classify();
        prop_assert_eq!(c.in_tplus, d.in_tminus);
        prop_assert_eq!(c.in_tminus, d.in_tplus);
        prop_assert_eq!(c.projective, d.projective);
    }

    #[test]
    fn reduce_is_idempotent(x in block_object()) {
        let h = homotopy::ho_reduce(&x);
        prop_assert_eq!(homotopy::ho_reduce(&homotopy::lift(&h)), h);
    }

    #[test]
    fn reduce_is_additive(x in block_object(), y in block_object()) {
        let lhs = homotopy::ho_reduce(&x.direct_sum(&y));
        let rhs = homotopy::ho_reduce(&x).direct_sum(&homotopy::ho_reduce(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hom_is_shift_invariant(i in -8i64..=8, j in -8i64..=8, k in -5i64..=5) {
        let key = BlockKey::gl11(0);
        let x = HoObject::simples(key.clone(), [i]);
        let y = HoObject::simples(key, [j]);
        let d = homotopy::hom_dim(&x, &y).unwrap();
        let ds = homotopy::hom_dim(&homotopy::shift(&x, k).unwrap(), &homotopy::shift(&y, k).unwrap()).unwrap();
        prop_assert_eq!(d, ds);
        prop_assert_eq!(d == 1, i >= j && (i - j) % 2 == 0);
    }

    #[test]
    fn composition_is_associative(a in -6i64..=0, s1 in 0i64..=3, s2 in 0i64..=3, s3 in 0i64..=3) {
        let b = a + 2 * s1;
        let c = b + 2 * s2;
        let d = c + 2 * s3;
        let f = HoMorphism::basis(c, d).unwrap();
        let g = HoMorphism::basis(b, c).unwrap();
        let h = HoMorphism::basis(a, b).unwrap();
        let left = homotopy::compose(&h, &homotopy::compose(&g, &f).unwrap()).unwrap();
        let right = homotopy::compose(&homotopy::compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left, HoMorphism::basis(a, d).unwrap());
    }

    #[test]
    fn expansion_is_additive(s in kac_series(BlockKey::gl11(1)), t in kac_series(BlockKey::gl11(1))) {
        let lhs = series::expand_to_simples(&s.add(&t).unwrap()).unwrap();
        let rhs = series::expand_to_simples(&s).unwrap()
            .add(&series::expand_to_simples(&t).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_commutes_with_shift(s in kac_series(BlockKey::new([0], -1).unwrap()), k in -4i64..=4) {
        let lhs = series::expand_to_simples(&s.shift(k)).unwrap();
        let rhs = series::expand_to_simples(&s).unwrap().shift(k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_identity(key in block_key(), u in -4i64..=4, depth in 1usize..=6) {
        let e = series::euler_check(&key, u, depth).unwrap();
        let head: Vec<_> = e.head().iter().collect();
        prop_assert_eq!(head, vec![(key.block_deg(u), Label::Simple(u), 1)]);
    }

    #[test]
    fn filtration_ignores_order(
        pieces in prop::collection::vec((-5i64..=5, -3i64..=3, any::<bool>()), 1..8),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let pieces: Vec<(KacLabel, i64)> = pieces
            .into_iter()
            .map(|(i, d, star)| (if star { KacLabel::AntiKac(i) } else { KacLabel::Kac(i) }, d))
            .collect();
        let mut shuffled = pieces.clone();
        shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let a = series::degree_filtration(&KacFlagInput { pieces }).unwrap();
        let b = series::degree_filtration(&KacFlagInput { pieces: shuffled }).unwrap();
        prop_assert!(a.windows(2).all(|w| w[0].degree > w[1].degree));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn lr_is_symmetric(l in small_partition(), m in small_partition(), n in small_partition()) {
        prop_assert_eq!(partitions::lr_mult(&l, &m, &n), partitions::lr_mult(&m, &l, &n));
        let t = partitions::lr_mult(&l.transpose(), &m.transpose(), &n.transpose());
        prop_assert_eq!(partitions::lr_mult(&l, &m, &n), t);
    }

    #[test]
    fn transpose_matches_cells(p in small_partition()) {
        prop_assert_eq!(p.transpose().parts().to_vec(), oracle::transpose_by_cells(p.parts()));
        prop_assert_eq!(p.transpose().transpose(), p);
    }

    #[test]
    fn weyl_dim_matches_hook_content(p in small_partition(), n in 1usize..=5) {
        match partitions::gl_dim(&p, n) {
            Ok(d) => prop_assert_eq!(d, oracle::gl_dim_hook_content(p.parts(), n)),
            Err(_) => prop_assert!(p.len() > n),
        }
    }
}

#[test]
fn bidegree_difference_varies_within_a_block() {
    let key = BlockKey::gl11(0);
    let diffs: BTreeSet<i64> = (-3..=3)
        .map(|i| {
            let b = key.weight_at(i).bidegree();
            b.d - b.dprime
        })
        .collect();
    assert_eq!(diffs.len(), 7);
}

#[test]
fn box_counts_match_lattice_paths() {
    for n in 1..=6 {
        let fast = partitions::box_partitions(n);
        let mut slow: Vec<Partition> = oracle::box_partitions_by_paths(n, n)
            .into_iter()
            .map(|p| Partition::new(p).unwrap())
            .collect();
        slow.sort();
        assert_eq!(fast, slow);
        assert_eq!(fast.len() as u64, oracle::binomial(2 * n as u64, n as u64));
        assert_eq!(partitions::count_self_conjugate(n), oracle::count_self_conjugate_brute(n));
    }
}

#[test]
fn lift_of_reduction_is_not_identity() {
    let key = BlockKey::gl11(0);
    let x = BlockObject::from_summands(key, [Indec::P(0), Indec::r(0, 2).unwrap()]);
    let back = homotopy::lift(&homotopy::ho_reduce(&x));
    assert_ne!(back, x);
    assert_eq!(homotopy::ho_reduce(&back), homotopy::ho_reduce(&x));
}
