//! The unbounded witness family
//! `g_n = (prod_{j=1..n} b a (b a^-1)^j) b a`
//! and the experiment showing `f(g_n) >= n - 1`.

use alloc::vec::Vec;

use crate::amalgam::{AmalgamSpec, NormalForm, ReducedWord, Syllable};
use crate::quasimorphism::{QmError, SegmentQuasimorphism};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error(transparent)]
    Qm(#[from] QmError),
    #[error("a and b must lie in different factors")]
    SameFactor,
    #[error("b must lie outside the amalgamated subgroup")]
    BInSubgroup,
    #[error("max_n must be positive")]
    ZeroMaxN,
    #[error("n = {n} is outside 1..={max_n}")]
    NOutOfRange { n: usize, max_n: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct WitnessConfig<'s> {
    qm: SegmentQuasimorphism<'s>,
    b: Syllable,
    max_n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessRow {
    pub n: usize,
    pub syllable_length: usize,
    pub f: usize,
    pub lower_bound: usize,
}

/// `n^2 + 3n + 2`
pub fn witness_length(n: usize) -> usize {
    n * n + 3 * n + 2
}

impl<'s> WitnessConfig<'s> {
    pub fn new(
        spec: &'s AmalgamSpec,
        a: Syllable,
        b: Syllable,
        max_n: usize,
    ) -> Result<Self, WitnessError> {
        let qm = SegmentQuasimorphism::new(spec, a)?;
        spec.check_syllable(b)
            .map_err(|_| QmError::OutOfRange(b.element.index()))?;
        if a.factor == b.factor {
            return Err(WitnessError::SameFactor);
        }
        if spec.in_h(b) {
            return Err(WitnessError::BInSubgroup);
        }
        if max_n == 0 {
            return Err(WitnessError::ZeroMaxN);
        }
        Ok(WitnessConfig { qm, b, max_n })
    }

    pub fn quasimorphism(&self) -> &SegmentQuasimorphism<'s> {
        &self.qm
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Raw letters of `g_n`, before reduction.
    pub fn witness_letters(&self, n: usize) -> Vec<Syllable> {
        let spec = self.qm.spec();
        let a = self.qm.a();
        let a_inv = spec.syllable_inverse(a);
        let b = self.b;
        let mut raw = Vec::with_capacity(witness_length(n));
        for j in 1..=n {
            raw.extend([b, a]);
            for _ in 0..j {
                raw.extend([b, a_inv]);
            }
        }
        raw.extend([b, a]);
        raw
    }

    pub fn witness_word(&self, n: usize) -> Result<ReducedWord, WitnessError> {
        if n == 0 || n > self.max_n {
            return Err(WitnessError::NOutOfRange {
                n,
                max_n: self.max_n,
            });
        }
        let raw = self.witness_letters(n);
        let w = self.qm.spec().reduce(&raw);
        debug_assert_eq!(w.syllables(), raw.as_slice(), "witness is reduced as built");
        Ok(w)
    }

    pub fn row(&self, n: usize) -> Result<WitnessRow, WitnessError> {
        let w = self.witness_word(n)?;
        Ok(WitnessRow {
            n,
            syllable_length: w.syllable_length(),
            f: self.qm.f(&w),
            lower_bound: self.qm.length_lower_bound(&w),
        })
    }

    /// One row per `n` in `1..=max_n`.
    pub fn run_experiment(&self) -> Vec<WitnessRow> {
        (1..=self.max_n)
            .map(|n| self.row(n).expect("n within range"))
            .collect()
    }
}

/// Outcome of searching for a short product of factor conjugates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShortProductSearch {
    /// No product of fewer than `bound` elements equals the target among the
    /// candidates tried. Exact when `bound <= 2`.
    NoCounterexample {
        bound: usize,
        exact: bool,
        checked: usize,
    },
    /// A product of `factors.len()` conjugates equal to the target.
    Counterexample { factors: Vec<ReducedWord> },
}

/// Searches for `g = s_1 ... s_j` with `j < bound` and each `s_i` in
/// `S = G1^G ∪ G2^G`.
///
/// `j = 0` and `j = 1` are decided exactly (`g` is the identity / `g`
/// cyclically reduces to at most one syllable). For `j >= 2` the first
/// `j - 1` factors range over conjugates `c^-1 k c` with `c` of at most
/// `conj_cap` syllables, and the last factor is tested exactly.
pub fn search_short_product(
    spec: &AmalgamSpec,
    g: &ReducedWord,
    bound: usize,
    conj_cap: usize,
) -> ShortProductSearch {
    let mut checked = 0;
    if bound == 0 {
        return ShortProductSearch::NoCounterexample {
            bound,
            exact: true,
            checked,
        };
    }
    checked += 1;
    if g.is_identity() {
        return ShortProductSearch::Counterexample {
            factors: Vec::new(),
        };
    }
    if bound == 1 {
        return ShortProductSearch::NoCounterexample {
            bound,
            exact: true,
            checked,
        };
    }
    checked += 1;
    if spec.is_factor_conjugate(g) {
        return ShortProductSearch::Counterexample {
            factors: alloc::vec![g.clone()],
        };
    }
    if bound == 2 {
        return ShortProductSearch::NoCounterexample {
            bound,
            exact: true,
            checked,
        };
    }

    let candidates = capped_factor_conjugates(spec, conj_cap);
    let mut prefixes: Vec<(Vec<usize>, ReducedWord)> =
        alloc::vec![(Vec::new(), ReducedWord::identity())];
    for _ in 2..bound {
        let mut next = Vec::with_capacity(prefixes.len() * candidates.len());
        for (idx, prefix) in &prefixes {
            for (i, s) in candidates.iter().enumerate() {
                let p = spec.multiply(prefix, s);
                // g = p * last  <=>  last = p^-1 g
                let last = spec.multiply(&spec.invert(&p), g);
                checked += 1;
                if spec.is_factor_conjugate(&last) {
                    let mut factors: Vec<ReducedWord> =
                        idx.iter().map(|&k| candidates[k].clone()).collect();
                    factors.push(s.clone());
                    factors.push(last);
                    return ShortProductSearch::Counterexample { factors };
                }
                let mut path = idx.clone();
                path.push(i);
                next.push((path, p));
            }
        }
        prefixes = next;
    }
    ShortProductSearch::NoCounterexample {
        bound,
        exact: false,
        checked,
    }
}

/// Distinct elements `c^-1 k c` with `k` a nontrivial factor element and `c`
/// ranging over normal forms of at most `conj_cap` syllables.
pub fn capped_factor_conjugates(spec: &AmalgamSpec, conj_cap: usize) -> Vec<ReducedWord> {
    let conjugators: Vec<ReducedWord> = crate::sampling::enumerate_reduced_words(spec, conj_cap);
    let ks: Vec<ReducedWord> = crate::sampling::factor_elements(spec)
        .into_iter()
        .map(|s| spec.reduce(&[s]))
        .collect();
    let mut seen = alloc::collections::BTreeSet::<NormalForm>::new();
    let mut out = Vec::new();
    for c in &conjugators {
        for k in &ks {
            let s = spec.conjugate(k, c);
            if seen.insert(spec.normal_form(&s)) {
                out.push(s);
            }
        }
    }
    out
}
