//! Seeded sampling experiments over an amalgam. Every result is a function of
//! the inputs and the seed.

use cwidth_core::amalgam::{ReducedWord, Syllable};
use cwidth_core::quasimorphism::{SegmentQuasimorphism, CONJUGATE_BOUND, DEFECT_BOUND};
use cwidth_core::sampling;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DefectRow {
    pub seed: u64,
    pub sample: usize,
    pub len_g: usize,
    pub len_h: usize,
    pub f_g: usize,
    pub f_h: usize,
    pub f_gh: usize,
    pub defect: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectScan {
    pub rows: Vec<DefectRow>,
    pub min_defect: i64,
    pub max_defect: i64,
}

impl DefectScan {
    /// Rows with `f(gh) > f(g) + f(h) + 9`.
    pub fn violations(&self) -> impl Iterator<Item = &DefectRow> {
        self.rows.iter().filter(|r| r.defect > DEFECT_BOUND)
    }

    /// Rows below `-9`; not a violation of the bound that matters, but worth
    /// reporting.
    pub fn low_excursions(&self) -> impl Iterator<Item = &DefectRow> {
        self.rows.iter().filter(|r| r.defect < -DEFECT_BOUND)
    }
}

/// `samples` pairs of random reduced words with at most `max_len` syllables.
pub fn defect_scan(
    qm: &SegmentQuasimorphism<'_>,
    seed: u64,
    samples: usize,
    max_len: usize,
) -> DefectScan {
    let spec = qm.spec();
    let mut r = rng(seed);
    let rows: Vec<DefectRow> = (0..samples)
        .map(|sample| {
            let g = sampling::random_word_up_to(spec, &mut r, max_len);
            let h = sampling::random_word_up_to(spec, &mut r, max_len);
            let (f_g, f_h) = (qm.f(&g), qm.f(&h));
            let f_gh = qm.f(&spec.multiply(&g, &h));
            DefectRow {
                seed,
                sample,
                len_g: g.syllable_length(),
                len_h: h.syllable_length(),
                f_g,
                f_h,
                f_gh,
                defect: f_gh as i64 - f_g as i64 - f_h as i64,
            }
        })
        .collect();
    let min_defect = rows.iter().map(|r| r.defect).min().unwrap_or(0);
    let max_defect = rows.iter().map(|r| r.defect).max().unwrap_or(0);
    DefectScan {
        rows,
        min_defect,
        max_defect,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugateViolation {
    pub k: String,
    pub g: String,
    pub f: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugateScan {
    pub checked: usize,
    pub max_f: usize,
    pub violations: Vec<ConjugateViolation>,
}

fn conjugate_scan_over<'w>(
    qm: &SegmentQuasimorphism<'_>,
    pairs: impl Iterator<Item = (Syllable, &'w ReducedWord)>,
) -> ConjugateScan {
    let spec = qm.spec();
    let mut scan = ConjugateScan {
        checked: 0,
        max_f: 0,
        violations: Vec::new(),
    };
    for (k, g) in pairs {
        let f = qm.conjugate_f(k, g);
        scan.checked += 1;
        scan.max_f = scan.max_f.max(f);
        if f > CONJUGATE_BOUND {
            scan.violations.push(ConjugateViolation {
                k: crate::words::format_syllable(spec, k),
                g: crate::words::format_amalgam_word(spec, g),
                f,
            });
        }
    }
    scan
}

/// `f(g^-1 k g)` for every nontrivial factor element `k` and every reduced
/// `g` of at most `max_len` syllables.
pub fn conjugate_scan_exhaustive(qm: &SegmentQuasimorphism<'_>, max_len: usize) -> ConjugateScan {
    let spec = qm.spec();
    let ks = sampling::factor_elements(spec);
    let gs = sampling::enumerate_reduced_words(spec, max_len);
    conjugate_scan_over(qm, gs.iter().flat_map(|g| ks.iter().map(move |&k| (k, g))))
}

/// Random `(k, g)` pairs with `g` of at most `max_len` syllables.
pub fn conjugate_scan_sampled(
    qm: &SegmentQuasimorphism<'_>,
    seed: u64,
    samples: usize,
    max_len: usize,
) -> ConjugateScan {
    let spec = qm.spec();
    let ks = sampling::factor_elements(spec);
    let mut r = rng(seed);
    let pairs: Vec<(Syllable, ReducedWord)> = (0..samples)
        .map(|_| {
            let k = ks[r.gen_range(0..ks.len())];
            (k, sampling::random_word_up_to(spec, &mut r, max_len))
        })
        .collect();
    conjugate_scan_over(qm, pairs.iter().map(|(k, g)| (*k, g)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductViolation {
    pub sample: usize,
    pub k: usize,
    pub f: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductScan {
    pub checked: usize,
    /// Largest `f` seen for each product length `k = 1..=max_k`.
    pub max_f_by_k: Vec<usize>,
    pub violations: Vec<ProductViolation>,
}

/// Products of `k` (uniform in `1..=max_k`) random conjugates of factor
/// elements, each conjugated by a word of at most `max_conj_len` syllables,
/// checked against `f <= 12k - 9`.
pub fn product_scan(
    qm: &SegmentQuasimorphism<'_>,
    seed: u64,
    samples: usize,
    max_k: usize,
    max_conj_len: usize,
) -> ProductScan {
    let spec = qm.spec();
    let mut r = rng(seed);
    let mut scan = ProductScan {
        checked: 0,
        max_f_by_k: vec![0; max_k],
        violations: Vec::new(),
    };
    for sample in 0..samples {
        let k = r.gen_range(1..=max_k);
        let factors: Vec<ReducedWord> = (0..k)
            .map(|_| sampling::random_factor_conjugate(spec, &mut r, max_conj_len))
            .collect();
        let f = qm.f(&spec.multiply_all(&factors));
        scan.checked += 1;
        scan.max_f_by_k[k - 1] = scan.max_f_by_k[k - 1].max(f);
        if f + 9 > 12 * k {
            scan.violations.push(ProductViolation { sample, k, f });
        }
    }
    scan
}

#[cfg(test)]
mod tests {
    use super::*;
    use cwidth_core::fixtures;

    #[test]
    fn scans_are_deterministic() {
        let spec = fixtures::f21_z6();
        let qm = SegmentQuasimorphism::new(&spec, fixtures::f21_z6_a(&spec)).unwrap();
        assert_eq!(defect_scan(&qm, 5, 50, 10), defect_scan(&qm, 5, 50, 10));
        assert_ne!(defect_scan(&qm, 5, 50, 10), defect_scan(&qm, 6, 50, 10));
        assert_eq!(
            product_scan(&qm, 1, 40, 6, 4),
            product_scan(&qm, 1, 40, 6, 4)
        );
    }

    #[test]
    fn small_exhaustive_conjugate_scan() {
        let spec = fixtures::f21_z6();
        let qm = SegmentQuasimorphism::new(&spec, fixtures::f21_z6_a(&spec)).unwrap();
        let scan = conjugate_scan_exhaustive(&qm, 2);
        assert_eq!(scan.checked, 25 * (1 + 23 + 108));
        assert!(scan.violations.is_empty());
    }
}
