//! The segment-counting quasimorphism on `G1 *_H G2`.
//!
//! Fix `a` in one factor with `HaH != Ha^-1H`. In a reduced word, every
//! syllable of `a`'s factor lying in `HaH` (resp. `Ha^-1H`) is rewritten as
//! `u a u'` (resp. `u a^-1 u'`) with `u, u'` in `H`, and the `H` parts are
//! pushed into the neighbouring syllables. This exposes marked letters
//! `a^{+1}` / `a^{-1}`. An `a`-segment of length `2k-1` is a pair of
//! consecutive `a^{+1}` marks with `2k-1` tokens strictly between them, and
//! likewise for `a^{-1}`. With `p_k`, `m_k` those counts,
//!
//! ```text
//! f(g) = sum_k ((p_k - m_k) mod 2)
//! ```
//!
//! `f` is bounded by 3 on conjugates of factor elements and has defect at
//! most 9, so `f(g) <= 12n - 9` whenever `g` is a product of `n` such
//! conjugates.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::amalgam::{AmalgamSpec, Factor, ReducedWord, Syllable};
use crate::group::Element;

/// Bound on `f` over conjugates of factor elements.
pub const CONJUGATE_BOUND: usize = 3;

/// Bound on `f(gh) - f(g) - f(h)`.
pub const DEFECT_BOUND: i64 = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn exponent(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QmError {
    #[error("element {0} is outside its factor")]
    OutOfRange(usize),
    #[error("HaH = Ha^-1H for the chosen a; the segment quasimorphism is undefined")]
    InvalidA,
}

/// `x = left * a^sign * right` with `left`, `right` in `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub left: Element,
    pub sign: Sign,
    pub right: Element,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Token {
    MarkedA(Sign),
    Ordinary(Syllable),
    /// Leftover `H` unit at either end of the word, in its `H1` copy.
    BoundaryH(Element),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecialForm {
    tokens: Vec<Token>,
}

impl SpecialForm {
    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn marks(&self) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.tokens.iter().enumerate().filter_map(|(i, t)| match t {
            Token::MarkedA(s) => Some((i, *s)),
            _ => None,
        })
    }

    /// Unmarked syllable sequence, with boundary units placed in `a`'s factor.
    pub fn to_syllables(&self, spec: &AmalgamSpec, a: Syllable) -> Vec<Syllable> {
        let g = spec.group(a.factor);
        self.tokens
            .iter()
            .map(|t| match *t {
                Token::MarkedA(Sign::Plus) => a,
                Token::MarkedA(Sign::Minus) => Syllable::new(a.factor, g.inv(a.element)),
                Token::Ordinary(s) => s,
                Token::BoundaryH(h) => Syllable::new(a.factor, spec.from_h1(a.factor, h)),
            })
            .collect()
    }
}

/// Counts of `a`-segments (`p`) and `a^-1`-segments (`m`) keyed by `k`, where
/// the segment has `2k-1` interior tokens.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SegmentStats {
    plus: BTreeMap<usize, usize>,
    minus: BTreeMap<usize, usize>,
}

impl SegmentStats {
    pub fn p(&self, k: usize) -> usize {
        self.plus.get(&k).copied().unwrap_or(0)
    }

    pub fn m(&self, k: usize) -> usize {
        self.minus.get(&k).copied().unwrap_or(0)
    }

    pub fn d(&self, k: usize) -> i64 {
        self.p(k) as i64 - self.m(k) as i64
    }

    /// Nonnegative remainder of `d_k` modulo 2.
    pub fn r(&self, k: usize) -> usize {
        (self.d(k).unsigned_abs() % 2) as usize
    }

    pub fn plus(&self) -> &BTreeMap<usize, usize> {
        &self.plus
    }

    pub fn minus(&self) -> &BTreeMap<usize, usize> {
        &self.minus
    }

    /// Every `k` with a nonzero `p_k` or `m_k`.
    pub fn keys(&self) -> BTreeSet<usize> {
        self.plus.keys().chain(self.minus.keys()).copied().collect()
    }

    pub fn f(&self) -> usize {
        self.keys().into_iter().map(|k| self.r(k)).sum()
    }
}

/// Interior token counts between consecutive same-sign marks, in order of
/// the right-hand mark.
pub fn segment_gaps(form: &SpecialForm) -> Vec<(Sign, usize)> {
    let mut last: [Option<usize>; 2] = [None, None];
    let mut gaps = Vec::new();
    for (pos, sign) in form.marks() {
        let slot = &mut last[(sign == Sign::Minus) as usize];
        if let Some(prev) = *slot {
            gaps.push((sign, pos - prev - 1));
        }
        *slot = Some(pos);
    }
    gaps
}

pub fn segment_stats(form: &SpecialForm) -> SegmentStats {
    let mut stats = SegmentStats::default();
    for (sign, gap) in segment_gaps(form) {
        // Marks sit in one factor and factors alternate, so gaps are odd.
        debug_assert!(gap % 2 == 1, "even gap {gap}");
        let k = gap.div_ceil(2);
        let map = match sign {
            Sign::Plus => &mut stats.plus,
            Sign::Minus => &mut stats.minus,
        };
        *map.entry(k).or_insert(0) += 1;
    }
    stats
}

/// First element (factor 1 before factor 2, then by index) with
/// `HaH != Ha^-1H`, or `None` when every element fails.
pub fn choose_a(spec: &AmalgamSpec) -> Option<Syllable> {
    [Factor::One, Factor::Two].into_iter().find_map(|f| {
        let g = spec.group(f);
        g.elements()
            .find(|&x| g.inverse_coset_distinct(spec.subgroup(f), x))
            .map(|x| Syllable::new(f, x))
    })
}

/// Least `k >= 1` with `12k - 9 >= f`: the fewest conjugates of factor
/// elements whose product can have this value of `f`.
pub fn lower_bound_from_f(f: usize) -> usize {
    (f + 9).div_ceil(12).max(1)
}

/// `f` for a fixed choice of `a`.
#[derive(Clone, Copy, Debug)]
pub struct SegmentQuasimorphism<'s> {
    spec: &'s AmalgamSpec,
    a: Syllable,
    a_inv: Element,
}

impl<'s> SegmentQuasimorphism<'s> {
    pub fn new(spec: &'s AmalgamSpec, a: Syllable) -> Result<Self, QmError> {
        spec.check_syllable(a)
            .map_err(|_| QmError::OutOfRange(a.element.index()))?;
        let g = spec.group(a.factor);
        if !g.inverse_coset_distinct(spec.subgroup(a.factor), a.element) {
            return Err(QmError::InvalidA);
        }
        Ok(SegmentQuasimorphism {
            spec,
            a,
            a_inv: g.inv(a.element),
        })
    }

    /// Uses [`choose_a`]; `None` when no valid `a` exists.
    pub fn with_default_a(spec: &'s AmalgamSpec) -> Option<Self> {
        choose_a(spec).map(|a| Self::new(spec, a).expect("choose_a returns a valid element"))
    }

    pub fn spec(&self) -> &'s AmalgamSpec {
        self.spec
    }

    pub fn a(&self) -> Syllable {
        self.a
    }

    /// All ways to write `x` (in `a`'s factor) as `u a^{+-1} u'`, ordered by
    /// `u`. Empty when `x` is in neither double coset.
    pub fn decompositions(&self, x: Element) -> Vec<Decomposition> {
        let g = self.spec.group(self.a.factor);
        let h = self.spec.subgroup(self.a.factor);
        let mut out = Vec::new();
        for &u in h.members() {
            for (sign, letter) in [(Sign::Plus, self.a.element), (Sign::Minus, self.a_inv)] {
                // u' = (u a^s)^-1 x
                let right = g.mul(g.inv(g.mul(u, letter)), x);
                if h.contains(right) {
                    out.push(Decomposition {
                        left: u,
                        sign,
                        right,
                    });
                }
            }
        }
        out
    }

    /// Decomposition with the least `u`.
    pub fn decompose(&self, x: Element) -> Option<Decomposition> {
        self.decompositions(x).into_iter().next()
    }

    pub fn special_form(&self, w: &ReducedWord) -> SpecialForm {
        self.special_form_with(w, |_| 0)
    }

    /// Like [`special_form`](Self::special_form), with `pick` choosing among
    /// the available decompositions of each marked syllable.
    pub fn special_form_with(
        &self,
        w: &ReducedWord,
        mut pick: impl FnMut(&[Decomposition]) -> usize,
    ) -> SpecialForm {
        let spec = self.spec;
        let af = self.a.factor;
        let id = spec.group(af).identity();
        let mut syllables = w.syllables().to_vec();
        let n = syllables.len();
        let mut marks: Vec<Option<Sign>> = vec![None; n];
        let mut leading = None;
        let mut trailing = None;

        for i in 0..n {
            if syllables[i].factor != af {
                continue;
            }
            let options = self.decompositions(syllables[i].element);
            if options.is_empty() {
                continue;
            }
            let d = options[pick(&options).min(options.len() - 1)];
            marks[i] = Some(d.sign);
            if d.left != id {
                if i == 0 {
                    leading = Some(spec.to_h1(af, d.left));
                } else {
                    let u = spec.transport(Syllable::new(af, d.left));
                    syllables[i - 1] = spec.syllable_mul(syllables[i - 1], u);
                }
            }
            if d.right != id {
                if i + 1 == n {
                    trailing = Some(spec.to_h1(af, d.right));
                } else {
                    // The right neighbour is in the other factor, so it never
                    // becomes a substitution candidate.
                    let u = spec.transport(Syllable::new(af, d.right));
                    syllables[i + 1] = spec.syllable_mul(u, syllables[i + 1]);
                }
            }
        }

        let mut tokens = Vec::with_capacity(n + 2);
        tokens.extend(leading.map(Token::BoundaryH));
        for (s, mark) in syllables.into_iter().zip(marks) {
            tokens.push(match mark {
                Some(sign) => Token::MarkedA(sign),
                None => Token::Ordinary(s),
            });
        }
        tokens.extend(trailing.map(Token::BoundaryH));
        SpecialForm { tokens }
    }

    pub fn stats(&self, w: &ReducedWord) -> SegmentStats {
        segment_stats(&self.special_form(w))
    }

    pub fn f(&self, w: &ReducedWord) -> usize {
        self.stats(w).f()
    }

    /// `f` of the element spelled by an arbitrary syllable sequence.
    pub fn f_raw(&self, raw: &[Syllable]) -> usize {
        self.f(&self.spec.reduce(raw))
    }

    /// `f(gh) - f(g) - f(h)`
    pub fn defect(&self, g: &ReducedWord, h: &ReducedWord) -> i64 {
        let gh = self.spec.multiply(g, h);
        self.f(&gh) as i64 - self.f(g) as i64 - self.f(h) as i64
    }

    /// `f(g^-1 k g)`
    pub fn conjugate_f(&self, k: Syllable, g: &ReducedWord) -> usize {
        let k = self.spec.reduce(&[k]);
        self.f(&self.spec.conjugate(&k, g))
    }

    /// Certified lower bound on the length of `w` over `G1^G ∪ G2^G`.
    pub fn length_lower_bound(&self, w: &ReducedWord) -> usize {
        if w.is_identity() {
            0
        } else {
            lower_bound_from_f(self.f(w))
        }
    }
}
