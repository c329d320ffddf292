//! Britton reduction in HNN extensions `<G, t | t^-1 a t = phi(a), a in A>`
//! of a finite base group, and the exponent-sum map onto `Z`.

use alloc::vec;
use alloc::vec::Vec;

use crate::group::{Element, FiniteGroup, GroupError, Subgroup, SubgroupIsomorphism};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HnnError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("associated subgroup {0} is not a proper subgroup of the base")]
    NotProper(char),
    #[error("subgroup {0} does not belong to the base group")]
    ForeignSubgroup(char),
    #[error("phi is not an isomorphism A -> B: {0}")]
    BadIsomorphism(&'static str),
    #[error("unreachable element: t-exponent {exponent} but every generator has t-exponent 0")]
    ZeroDivisor { exponent: i64 },
}

/// One input letter: a base element or `t^{+-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HnnLetter {
    Base(Element),
    T(i8),
}

/// `g0 t^e1 g1 ... t^en gn`, with base runs multiplied out.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HnnWord {
    segments: Vec<Element>,
    exponents: Vec<i8>,
}

impl HnnWord {
    pub fn identity(base: &FiniteGroup) -> Self {
        HnnWord {
            segments: vec![base.identity()],
            exponents: Vec::new(),
        }
    }

    pub fn from_letters(base: &FiniteGroup, letters: &[HnnLetter]) -> Self {
        let mut w = Self::identity(base);
        for &letter in letters {
            w.push(base, letter);
        }
        w
    }

    /// `t^n`
    pub fn stable_power(base: &FiniteGroup, n: i64) -> Self {
        let sign = if n < 0 { -1 } else { 1 };
        let letters: Vec<_> = (0..n.unsigned_abs()).map(|_| HnnLetter::T(sign)).collect();
        Self::from_letters(base, &letters)
    }

    fn push(&mut self, base: &FiniteGroup, letter: HnnLetter) {
        match letter {
            HnnLetter::Base(g) => {
                let last = self.segments.last_mut().expect("at least one segment");
                *last = base.mul(*last, g);
            }
            HnnLetter::T(0) => {}
            HnnLetter::T(e) => {
                self.exponents.push(e.signum());
                self.segments.push(base.identity());
            }
        }
    }

    /// Base segments `g0, ..., gn`; always one more than the stable letters.
    pub fn segments(&self) -> &[Element] {
        &self.segments
    }

    pub fn exponents(&self) -> &[i8] {
        &self.exponents
    }

    /// Number of stable letters.
    pub fn stable_length(&self) -> usize {
        self.exponents.len()
    }

    pub fn letters(&self, base: &FiniteGroup) -> Vec<HnnLetter> {
        let mut out = Vec::new();
        for (i, &g) in self.segments.iter().enumerate() {
            if g != base.identity() {
                out.push(HnnLetter::Base(g));
            }
            if let Some(&e) = self.exponents.get(i) {
                out.push(HnnLetter::T(e));
            }
        }
        out
    }

    /// Exponent sum of the stable letter, the image under `G* -> Z`.
    pub fn t_exponent(&self) -> i64 {
        self.exponents.iter().map(|&e| e as i64).sum()
    }

    pub fn concat(&self, base: &FiniteGroup, other: &HnnWord) -> HnnWord {
        let mut out = self.clone();
        for letter in other.letters(base) {
            out.push(base, letter);
        }
        out
    }

    pub fn invert(&self, base: &FiniteGroup) -> HnnWord {
        HnnWord {
            segments: self.segments.iter().rev().map(|&g| base.inv(g)).collect(),
            exponents: self.exponents.iter().rev().map(|&e| -e).collect(),
        }
    }

    /// `c^-1 * self * c`
    pub fn conjugate(&self, base: &FiniteGroup, c: &HnnWord) -> HnnWord {
        c.invert(base).concat(base, self).concat(base, c)
    }
}

#[derive(Clone, Debug)]
pub struct HnnSpec {
    base: FiniteGroup,
    a_sub: Subgroup,
    b_sub: Subgroup,
    phi: SubgroupIsomorphism,
}

impl HnnSpec {
    pub fn new(
        base: FiniteGroup,
        a_sub: Subgroup,
        b_sub: Subgroup,
        phi: SubgroupIsomorphism,
    ) -> Result<Self, HnnError> {
        for (label, sub) in [('A', &a_sub), ('B', &b_sub)] {
            if base.subgroup(sub.members()).ok().as_ref() != Some(sub) {
                return Err(HnnError::ForeignSubgroup(label));
            }
            if !sub.is_proper() {
                return Err(HnnError::NotProper(label));
            }
        }
        if a_sub.order() != b_sub.order() {
            return Err(HnnError::BadIsomorphism("A and B have different orders"));
        }
        for &a in a_sub.members() {
            let fa = phi
                .apply(a)
                .ok_or(HnnError::BadIsomorphism("partial map"))?;
            if !b_sub.contains(fa) || phi.apply_inverse(fa) != Some(a) {
                return Err(HnnError::BadIsomorphism("not a bijection onto B"));
            }
            for &b in a_sub.members() {
                if phi.apply(base.mul(a, b)) != Some(base.mul(fa, phi.apply(b).unwrap())) {
                    return Err(HnnError::BadIsomorphism("does not preserve products"));
                }
            }
        }
        Ok(HnnSpec {
            base,
            a_sub,
            b_sub,
            phi,
        })
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn a_sub(&self) -> &Subgroup {
        &self.a_sub
    }

    pub fn b_sub(&self) -> &Subgroup {
        &self.b_sub
    }

    pub fn phi(&self) -> &SubgroupIsomorphism {
        &self.phi
    }

    pub fn word(&self, letters: &[HnnLetter]) -> HnnWord {
        HnnWord::from_letters(&self.base, letters)
    }

    /// Positions `i` such that `t^{e_i} g_i t^{e_{i+1}}` is a pinch:
    /// `t^-1 a t` with `a` in A, or `t b t^-1` with `b` in B.
    pub fn pinches(&self, w: &HnnWord) -> Vec<usize> {
        (0..w.exponents.len().saturating_sub(1))
            .filter(|&i| self.pinch_image(w, i).is_some())
            .collect()
    }

    fn pinch_image(&self, w: &HnnWord, i: usize) -> Option<Element> {
        let g = w.segments[i + 1];
        match (w.exponents[i], w.exponents[i + 1]) {
            (-1, 1) if self.a_sub.contains(g) => self.phi.apply(g),
            (1, -1) if self.b_sub.contains(g) => self.phi.apply_inverse(g),
            _ => None,
        }
    }

    /// Replaces the pinch at position `i` by its base-group value.
    ///
    /// Panics if there is no pinch at `i`.
    pub fn eliminate_pinch(&self, w: &HnnWord, i: usize) -> HnnWord {
        let image = self.pinch_image(w, i).expect("no pinch at this position");
        let g = &self.base;
        let merged = g.mul(g.mul(w.segments[i], image), w.segments[i + 2]);
        let mut segments = Vec::with_capacity(w.segments.len() - 2);
        segments.extend_from_slice(&w.segments[..i]);
        segments.push(merged);
        segments.extend_from_slice(&w.segments[i + 3..]);
        let mut exponents = Vec::with_capacity(w.exponents.len() - 2);
        exponents.extend_from_slice(&w.exponents[..i]);
        exponents.extend_from_slice(&w.exponents[i + 2..]);
        HnnWord {
            segments,
            exponents,
        }
    }

    /// Eliminates pinches, leftmost first, until none remain.
    pub fn britton_reduce(&self, w: &HnnWord) -> HnnWord {
        self.britton_reduce_by(w, |_| 0)
    }

    /// Eliminates pinches in the order picked by `choose`, which receives the
    /// current pinch positions and returns an index into them.
    pub fn britton_reduce_by(
        &self,
        w: &HnnWord,
        mut choose: impl FnMut(&[usize]) -> usize,
    ) -> HnnWord {
        let mut cur = w.clone();
        loop {
            let pinches = self.pinches(&cur);
            if pinches.is_empty() {
                return cur;
            }
            let pick = choose(&pinches).min(pinches.len() - 1);
            cur = self.eliminate_pinch(&cur, pinches[pick]);
        }
    }

    pub fn is_reduced(&self, w: &HnnWord) -> bool {
        self.pinches(w).is_empty()
    }

    /// Reduced word with each segment before `t` (resp. `t^-1`) replaced by
    /// its least left-coset representative modulo A (resp. B); the remainder
    /// moves right through the stable letter. Equal elements get equal forms.
    pub fn normal_form(&self, w: &HnnWord) -> HnnWord {
        let mut out = self.britton_reduce(w);
        let g = &self.base;
        for i in 0..out.exponents.len() {
            let seg = out.segments[i];
            let (sub, shift): (&Subgroup, Shift) = if out.exponents[i] == 1 {
                // a t = t phi(a)
                (&self.a_sub, SubgroupIsomorphism::apply)
            } else {
                // b t^-1 = t^-1 phi^-1(b)
                (&self.b_sub, SubgroupIsomorphism::apply_inverse)
            };
            let rep = g.left_coset_rep(sub, seg);
            let rest = g.mul(g.inv(rep), seg);
            let moved = shift(&self.phi, rest).expect("remainder lies in the subgroup");
            out.segments[i] = rep;
            out.segments[i + 1] = g.mul(moved, out.segments[i + 1]);
        }
        out
    }

    pub fn equal(&self, w1: &HnnWord, w2: &HnnWord) -> bool {
        self.normal_form(w1) == self.normal_form(w2)
    }
}

type Shift = fn(&SubgroupIsomorphism, Element) -> Option<Element>;

/// `ceil(|t_exponent(w)| / max_gen_texp)`: a lower bound on the length of `w`
/// over any generating set whose elements all have `|t-exponent| <=
/// max_gen_texp`, since the exponent sum is a homomorphism onto `Z`.
pub fn t_length_lower_bound(w: &HnnWord, max_gen_texp: u64) -> Result<u64, HnnError> {
    let exponent = w.t_exponent();
    let magnitude = exponent.unsigned_abs();
    if max_gen_texp == 0 {
        return if magnitude == 0 {
            Ok(0)
        } else {
            Err(HnnError::ZeroDivisor { exponent })
        };
    }
    Ok(magnitude.div_ceil(max_gen_texp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn el(spec: &HnnSpec, name: &str) -> Element {
        spec.base().parse_element(name).unwrap()
    }

    #[test]
    fn defining_relation() {
        let spec = fixtures::z6_hnn();
        for &a in spec.a_sub().members() {
            let w = spec.word(&[HnnLetter::T(-1), HnnLetter::Base(a), HnnLetter::T(1)]);
            assert_eq!(w.t_exponent(), 0);
            let r = spec.britton_reduce(&w);
            assert_eq!(r.stable_length(), 0);
            assert_eq!(r.segments(), [spec.phi().apply(a).unwrap()]);
            assert_eq!(r.t_exponent(), 0);
        }
    }

    #[test]
    fn inverse_relation() {
        let spec = fixtures::z6_hnn();
        let b = el(&spec, "c4");
        let w = spec.word(&[HnnLetter::T(1), HnnLetter::Base(b), HnnLetter::T(-1)]);
        assert_eq!(spec.britton_reduce(&w).segments(), [el(&spec, "c2")]);
    }

    #[test]
    fn non_pinch_is_kept() {
        let spec = fixtures::z6_hnn();
        let g = el(&spec, "c");
        let w = spec.word(&[HnnLetter::T(-1), HnnLetter::Base(g), HnnLetter::T(1)]);
        assert_eq!(spec.britton_reduce(&w), w);
        assert!(spec.is_reduced(&w));
    }

    #[test]
    fn nested_pinches_collapse() {
        let spec = fixtures::z6_hnn();
        let c2 = HnnLetter::Base(el(&spec, "c2"));
        let (t, ti) = (HnnLetter::T(1), HnnLetter::T(-1));
        // t^-1 t^-1 c2 t t = t^-1 c4 t = c2
        let w = spec.word(&[ti, ti, c2, t, t]);
        assert_eq!(spec.britton_reduce(&w).segments(), [el(&spec, "c2")]);
        // t t^-1 cancels (identity lies in B)
        let w = spec.word(&[t, ti]);
        assert_eq!(spec.britton_reduce(&w), HnnWord::identity(spec.base()));
    }

    #[test]
    fn exponent_sums() {
        let spec = fixtures::z6_hnn();
        assert_eq!(HnnWord::stable_power(spec.base(), 5).t_exponent(), 5);
        let g = HnnLetter::Base(el(&spec, "c"));
        let w = spec.word(&[g, HnnLetter::T(1), g, HnnLetter::T(-1), g]);
        assert_eq!(w.t_exponent(), 0);
    }

    #[test]
    fn lower_bounds() {
        let base = fixtures::z6();
        let t5 = HnnWord::stable_power(&base, 5);
        assert_eq!(t_length_lower_bound(&t5, 1), Ok(5));
        assert_eq!(
            t_length_lower_bound(&HnnWord::stable_power(&base, 7), 2),
            Ok(4)
        );
        assert_eq!(
            t_length_lower_bound(&HnnWord::stable_power(&base, -7), 2),
            Ok(4)
        );
        assert_eq!(t_length_lower_bound(&HnnWord::identity(&base), 3), Ok(0));
        assert_eq!(t_length_lower_bound(&HnnWord::identity(&base), 0), Ok(0));
        assert_eq!(
            t_length_lower_bound(&t5, 0),
            Err(HnnError::ZeroDivisor { exponent: 5 })
        );
    }

    #[test]
    fn normal_form_identifies_respellings() {
        let spec = fixtures::z6_hnn();
        let t = HnnLetter::T(1);
        let c = HnnLetter::Base(el(&spec, "c"));
        let c2 = HnnLetter::Base(el(&spec, "c2"));
        let c4 = HnnLetter::Base(el(&spec, "c4"));
        // c2 t = t c4
        let lhs = spec.word(&[c, c2, t, c]);
        let rhs = spec.word(&[c, t, c4, c]);
        assert_ne!(spec.britton_reduce(&lhs), spec.britton_reduce(&rhs));
        assert!(spec.equal(&lhs, &rhs));
        let other = spec.word(&[c, t, c]);
        assert!(!spec.equal(&lhs, &other));
    }

    #[test]
    fn rejects_improper_subgroups() {
        let g = fixtures::z6();
        let whole = g.whole();
        let phi = SubgroupIsomorphism::identity(&g, &whole);
        assert_eq!(
            HnnSpec::new(g, whole.clone(), whole, phi).unwrap_err(),
            HnnError::NotProper('A')
        );
    }
}
