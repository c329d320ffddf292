use std::collections::BTreeSet;

use cwidth_core::amalgam::{AmalgamSpec, ReducedWord};
use cwidth_core::hnn::{HnnLetter, HnnSpec};
use cwidth_core::quasimorphism::{segment_gaps, SegmentQuasimorphism, Sign};
use cwidth_core::{fixtures, sampling, width, Element, FiniteGroup};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn amalgams() -> Vec<AmalgamSpec> {
    vec![
        fixtures::f21_z6(),
        fixtures::s3_s3(),
        fixtures::z3_z2_free(),
    ]
}

fn words(spec: &AmalgamSpec, seed: u64, count: usize, max_len: usize) -> Vec<ReducedWord> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| sampling::random_word_up_to(spec, &mut r, max_len))
        .collect()
}

fn random_subset(g: &FiniteGroup, r: &mut ChaCha8Rng, size: usize) -> Vec<Element> {
    (0..size)
        .map(|_| Element::new(r.gen_range(0..g.order())))
        .collect()
}

#[test]
fn fixture_tables_are_associative() {
    for g in fixtures::all_groups() {
        for a in g.elements() {
            for b in g.elements() {
                for c in g.elements() {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)), "{}", g.name());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn double_cosets_partition(seed in any::<u64>(), size in 0usize..3) {
        let mut r = rng(seed);
        for g in fixtures::all_groups() {
            let seeds = random_subset(&g, &mut r, size);
            let h = g.subgroup_closure(&seeds);
            let mut covered = BTreeSet::new();
            let mut total = 0;
            let mut reps = BTreeSet::new();
            for x in g.elements() {
                let d = g.double_coset(&h, x);
                prop_assert!(d.contains(&x));
                if reps.insert(*d.iter().next().unwrap()) {
                    total += d.len();
                    covered.extend(d.iter().copied());
                }
                // HxH and Hx^-1H are equal or disjoint
                let di = g.double_coset(&h, g.inv(x));
                prop_assert!(d == di || d.is_disjoint(&di));
                prop_assert_eq!(g.inverse_coset_distinct(&h, x), g.inverse_coset_distinct(&h, g.inv(x)));
                prop_assert_eq!(g.inverse_coset_distinct(&h, x), d != di);
            }
            prop_assert_eq!(total, g.order());
            prop_assert_eq!(covered.len(), g.order());
        }
    }

    #[test]
    fn reduce_multiply_invert(seed in any::<u64>()) {
        for spec in amalgams() {
            let ws = words(&spec, seed, 3, 8);
            let (a, b, c) = (&ws[0], &ws[1], &ws[2]);
            prop_assert_eq!(&spec.reduce(a.syllables()), a);
            let left = spec.multiply(&spec.multiply(a, b), c);
            let right = spec.multiply(a, &spec.multiply(b, c));
            prop_assert!(spec.equal(&left, &right));
            prop_assert!(spec.equal(&spec.invert(&spec.invert(a)), a));
            prop_assert!(spec.multiply(a, &spec.invert(a)).is_identity());
            prop_assert_eq!(spec.from_normal_form(&spec.normal_form(a)).syllable_length(), a.syllable_length());
        }
    }

    #[test]
    fn respelling_keeps_element_and_f(seed in any::<u64>(), pinches in 1usize..6) {
        let spec = fixtures::f21_z6();
        let qm = SegmentQuasimorphism::new(&spec, fixtures::f21_z6_a(&spec)).unwrap();
        let mut r = rng(seed);
        let w = sampling::random_word_up_to(&spec, &mut r, 14);
        let v = sampling::respell(&spec, &mut r, &w, pinches);
        prop_assert!(spec.equal(&w, &v));
        prop_assert_eq!(qm.stats(&w), qm.stats(&v));
        // any choice of decomposition gives the same segment statistics
        let alt = cwidth_core::quasimorphism::segment_stats(
            &qm.special_form_with(&w, |opts| r.gen_range(0..opts.len())),
        );
        prop_assert_eq!(alt, qm.stats(&w));
    }

    #[test]
    fn inversion_negates_d(seed in any::<u64>()) {
        let spec = fixtures::f21_z6();
        let qm = SegmentQuasimorphism::new(&spec, fixtures::f21_z6_a(&spec)).unwrap();
        for w in words(&spec, seed, 4, 16) {
            let s = qm.stats(&w);
            let si = qm.stats(&spec.invert(&w));
            for k in s.keys().union(&si.keys()) {
                prop_assert_eq!(si.d(*k), -s.d(*k));
            }
            prop_assert_eq!(qm.f(&w), qm.f(&spec.invert(&w)));
        }
    }

    #[test]
    fn segment_gaps_are_odd(seed in any::<u64>()) {
        let spec = fixtures::f21_z6();
        let qm = SegmentQuasimorphism::new(&spec, fixtures::f21_z6_a(&spec)).unwrap();
        for w in words(&spec, seed, 4, 20) {
            let form = qm.special_form(&w);
            for (sign, gap) in segment_gaps(&form) {
                prop_assert!(gap % 2 == 1, "{sign:?} gap {gap}");
            }
            let marks: Vec<Sign> = form.marks().map(|(_, s)| s).collect();
            let pairs = marks.iter().filter(|&&s| s == Sign::Plus).count().saturating_sub(1)
                + marks.iter().filter(|&&s| s == Sign::Minus).count().saturating_sub(1);
            prop_assert_eq!(segment_gaps(&form).len(), pairs);
        }
    }

    #[test]
    fn britton_reduction_is_confluent(seed in any::<u64>(), len in 0usize..=20) {
        let spec: HnnSpec = fixtures::z6_hnn();
        let mut r = rng(seed);
        let w = sampling::random_hnn_word(&spec, &mut r, len);
        let leftmost = spec.britton_reduce(&w);
        let random = spec.britton_reduce_by(&w, |p| r.gen_range(0..p.len()));
        prop_assert!(spec.is_reduced(&leftmost));
        prop_assert_eq!(leftmost.stable_length(), random.stable_length());
        prop_assert_eq!(spec.normal_form(&leftmost), spec.normal_form(&random));
        prop_assert_eq!(leftmost.t_exponent(), w.t_exponent());
    }

    #[test]
    fn t_exponent_is_a_homomorphism(seed in any::<u64>()) {
        let spec = fixtures::z6_hnn();
        let base = spec.base();
        let mut r = rng(seed);
        let g = sampling::random_hnn_word(&spec, &mut r, 12);
        let h = sampling::random_hnn_word(&spec, &mut r, 12);
        prop_assert_eq!(g.concat(base, &h).t_exponent(), g.t_exponent() + h.t_exponent());
        prop_assert_eq!(g.invert(base).t_exponent(), -g.t_exponent());
        prop_assert_eq!(g.conjugate(base, &h).t_exponent(), g.t_exponent());
        prop_assert!(spec.equal(&g.concat(base, &g.invert(base)), &spec.word(&[])));
        let a = spec.word(&[HnnLetter::Base(Element::new(r.gen_range(0..base.order())))]);
        prop_assert_eq!(a.t_exponent(), 0);
    }

    #[test]
    fn word_length_triangle(seed in any::<u64>(), size in 1usize..4) {
        let mut r = rng(seed);
        for g in fixtures::all_groups() {
            let s = random_subset(&g, &mut r, size);
            let t = width::bfs_lengths(&g, &s);
            for x in g.elements() {
                let lx = t.length(x);
                prop_assert_eq!(lx, t.length(g.inv(x)));
                for y in g.elements() {
                    if let (Some(lx), Some(ly)) = (lx, t.length(y)) {
                        let lxy = t.length(g.mul(x, y)).expect("closed under products");
                        prop_assert!(lxy <= lx + ly);
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_projection(seed in any::<u64>(), size in 1usize..3) {
        let mut r = rng(seed);
        for g in fixtures::all_groups() {
            for n in candidate_normals(&g) {
                let (q, proj) = g.quotient(&n).unwrap();
                prop_assert_eq!(q.order() * n.order(), g.order());
                prop_assert!(proj.is_surjective());
                for x in g.elements() {
                    for y in g.elements() {
                        prop_assert_eq!(proj.apply(g.mul(x, y)), q.mul(proj.apply(x), proj.apply(y)));
                    }
                }
                // any generating set of G/N, lifted, satisfies the length inequality
                let mut gens = random_subset(&g, &mut r, size);
                gens.extend(q.elements().map(|c| proj.preimage(c).next().unwrap()));
                let check = width::check_quotient_inequality(&g, &n, &gens).unwrap();
                prop_assert!(check.holds());
            }
        }
    }
}

fn candidate_normals(g: &FiniteGroup) -> Vec<cwidth_core::Subgroup> {
    let mut out = vec![g.trivial_subgroup(), g.whole()];
    for x in g.elements() {
        let h = g.subgroup_closure(&[x]);
        if g.is_normal(&h) {
            out.push(h);
        }
    }
    out
}
