use std::collections::BTreeSet;

use liecalc::garland::{garland_series, Sl2RepMatrices};
use liecalc::gradedcat::{GradedCategory, GradedSimple};
use liecalc::loopcat::{loop_splitting_order, LoopCategory, LoopIrrep, Point};
use liecalc::{CharRing, Limits, RootSystem, Weight};
use num_bigint::BigUint;
use proptest::prelude::*;

const TYPES: [&str; 9] = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "A4"];

fn rs(t: &str) -> RootSystem {
    RootSystem::build(t.parse().unwrap())
}

fn weight(rank: usize, max: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..=max, rank)
}

/// A type together with two small dominant weights.
fn typed_pair(max: i64) -> impl Strategy<Value = (&'static str, Vec<i64>, Vec<i64>)> {
    prop::sample::select(&TYPES[..]).prop_flat_map(move |t| {
        let n = rs(t).rank();
        (Just(t), weight(n, max), weight(n, max))
    })
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn character_mass_is_the_weyl_dimension((t, lam, _) in typed_pair(2)) {
        let r = rs(t);
        let ring = CharRing::new(&r, Limits::default());
        let lam = Weight::from(lam);
        let ch = ring.char_irreducible(&lam).unwrap();
        prop_assert_eq!(BigUint::from(ch.mass() as u64), ring.dim_irreducible(&lam).unwrap());
        // W-invariance, one simple reflection at a time
        for (mu, m) in ch.iter() {
            for i in 0..r.rank() {
                prop_assert_eq!(ch.get(&r.reflect(mu, i)), m);
            }
        }
    }

    #[test]
    fn klimyk_agrees_with_extraction((t, lam, mu) in typed_pair(1)) {
        let r = rs(t);
        let ring = CharRing::new(&r, Limits::default());
        let (lam, mu) = (Weight::from(lam), Weight::from(mu));
        let klimyk = ring.tensor_decompose(&lam, &mu).unwrap();
        let product = ring.char_irreducible(&lam).unwrap().mul(&ring.char_irreducible(&mu).unwrap());
        prop_assert!(klimyk == ring.decompose_character(&product).unwrap());
    }

    #[test]
    fn power_dimensions((t, lam, _) in typed_pair(1), k in 0usize..4) {
        let r = rs(t);
        let ring = CharRing::new(&r, Limits::default());
        let lam = Weight::from(lam);
        let d = ring.dim_irreducible(&lam).unwrap().try_into().unwrap();
        let ch = ring.char_irreducible(&lam).unwrap();
        let sym = ring.sym_power(k, &ch).unwrap();
        prop_assert_eq!(BigUint::from(sym.mass() as u64), binomial(d + k as u64 - 1, k as u64));
        let ext = ring.ext_power(k, &ch).unwrap();
        prop_assert_eq!(BigUint::from(ext.mass() as u64), binomial(d, k as u64));
    }

    #[test]
    fn ext1_implies_full_cover((t, lam, mu) in typed_pair(2), r in 0u32..3, s in 0u32..4) {
        let root = rs(t);
        let ring = CharRing::new(&root, Limits::default());
        let cat = GradedCategory::new(&ring);
        let a = GradedSimple::new(lam, r);
        let b = GradedSimple::new(mu, s);
        if cat.ext1_graded(&a, &b).unwrap() > 0 {
            prop_assert!(cat.covers_full(&a, &b));
        }
        prop_assert_eq!(cat.ext_j_truncated(&a, &b, 1).unwrap(), cat.ext1_graded(&a, &b).unwrap());
    }

    #[test]
    fn phi_psi_is_scale_invariant(t in prop::sample::select(&TYPES[..]), seed in prop::collection::vec(-2i64..=2, 4), k in 1i64..4) {
        let r = rs(t);
        let psi: Vec<i64> = seed[..r.rank()].to_vec();
        prop_assume!(psi.iter().any(|&x| x != 0));
        let ring = CharRing::new(&r, Limits::default());
        let cat = GradedCategory::new(&ring);
        let scaled: Vec<i64> = psi.iter().map(|x| k * x).collect();
        let psi = Weight::from(psi);
        let a = cat.phi_psi(&psi).unwrap();
        let b = cat.phi_psi(&Weight::from(scaled)).unwrap();
        prop_assert_eq!(a.roots(), b.roots());
        // a dominant ψ is maximized on θ
        if psi.is_dominant() {
            prop_assert!(a.roots().contains(&r.highest_root().to_vec()));
        }
    }

    #[test]
    fn leq_psi_is_a_partial_order(
        t in prop::sample::select(&["A2", "B2", "C3", "G2", "A3"][..]),
        seed in prop::collection::vec(0i64..=1, 3),
        tops in prop::collection::vec((prop::collection::vec(0i64..=2, 3), 0u32..4), 4),
    ) {
        let r = rs(t);
        let n = r.rank();
        let psi: Vec<i64> = seed[..n].to_vec();
        prop_assume!(psi.iter().any(|&x| x != 0));
        let psi = Weight::from(psi);
        let ring = CharRing::new(&r, Limits::default());
        let cat = GradedCategory::new(&ring);
        let xs: Vec<GradedSimple> = tops.iter().map(|(v, g)| GradedSimple::new(v[..n].to_vec(), *g)).collect();
        // add elements from a lower set so that some pairs are comparable
        let mut pool: BTreeSet<GradedSimple> = xs.iter().cloned().collect();
        for x in &xs {
            pool.extend(cat.lower_set_psi(&psi, x).unwrap().elements.into_iter().take(6));
        }
        let pool: Vec<GradedSimple> = pool.into_iter().collect();
        let leq = |a: &GradedSimple, b: &GradedSimple| cat.leq_psi(&psi, a, b).unwrap();
        for a in &pool {
            prop_assert!(leq(a, a));
            for b in &pool {
                if a != b && leq(a, b) {
                    prop_assert!(!leq(b, a));
                }
                for c in &pool {
                    if leq(a, b) && leq(b, c) {
                        prop_assert!(leq(a, c));
                    }
                }
            }
        }
        for x in &xs {
            for y in cat.lower_set_psi(&psi, x).unwrap().elements {
                prop_assert!(leq(&y, x));
            }
        }
    }

    #[test]
    fn blocks_ignore_root_lattice_shifts(
        t in prop::sample::select(&["A1", "A2", "A3", "B2", "C3", "D4"][..]),
        parts in prop::collection::vec((1i64..6, prop::collection::vec(0i64..=3, 4)), 0..4),
        pick in 0usize..4,
    ) {
        let r = rs(t);
        let n = r.rank();
        let ring = CharRing::new(&r, Limits::default());
        let cat = LoopCategory::new(&ring);
        let mut seen = BTreeSet::new();
        let parts: Vec<(Point, Weight)> = parts
            .into_iter()
            .filter(|(p, _)| seen.insert(*p))
            .map(|(p, v)| (Point::from_ratio(p, 1).unwrap(), Weight::from(v[..n].to_vec())))
            .collect();
        let v = LoopIrrep::new(&r, parts.clone()).unwrap();
        let mut shifted = parts.clone();
        if !shifted.is_empty() {
            let i = pick % shifted.len();
            shifted[i].1 = &shifted[i].1 + r.highest_root_weight();
        } else {
            shifted.push((Point::from_ratio(7, 1).unwrap(), r.highest_root_weight().clone()));
        }
        let u = LoopIrrep::new(&r, shifted).unwrap();
        prop_assert!(cat.same_block(&v, &u));
        prop_assert_eq!(cat.blocks(&[v.clone(), u.clone()]).len(), 1);
    }

    #[test]
    fn splitting_order_is_scale_invariant(
        parts in prop::collection::vec((-5i64..=5, prop::collection::vec(0i64..=2, 2)), 1..5),
        num in 1i64..7,
        den in 1i64..5,
        negate in any::<bool>(),
    ) {
        let mut seen = BTreeSet::new();
        let parts: Vec<(i64, Vec<i64>)> = parts.into_iter().filter(|(p, _)| *p != 0 && seen.insert(*p)).collect();
        prop_assume!(parts.iter().any(|(_, l)| l.iter().any(|&x| x != 0)));
        let c = if negate { -num } else { num };
        let at = |c: i64, d: i64| -> Vec<(Weight, Point)> {
            parts.iter().map(|(p, l)| (Weight::from(l.clone()), Point::from_ratio(p * c, d).unwrap())).collect()
        };
        let base = loop_splitting_order(&at(1, 1)).unwrap();
        prop_assert_eq!(loop_splitting_order(&at(c, den)).unwrap(), base);
        prop_assert!(base <= parts.iter().filter(|(_, l)| l.iter().any(|&x| x != 0)).count());
    }
}

#[test]
fn garland_series_is_homogeneous() {
    for s in 1..=10 {
        assert!(garland_series(s, &Limits::default()).unwrap().is_homogeneous(s as u32));
    }
}

#[test]
fn sl2_matrices_satisfy_the_relations() {
    for n in 0..12 {
        assert!(Sl2RepMatrices::new(n).relations_hold(), "N = {n}");
    }
}
