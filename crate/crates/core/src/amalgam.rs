//! Words in an amalgamated free product `G1 *_H G2` of two finite groups.
//!
//! A word is a sequence of syllables, each an element of one factor. Reduced
//! words alternate factors and avoid `H` (except a lone syllable), and two
//! reduced words spell the same element iff their [`NormalForm`]s agree.
//! Elements of `H` are identified across factors through the isomorphism
//! `H1 -> H2`; the canonical copy is the one in `H1`.

use alloc::vec::Vec;
use core::fmt;

use crate::group::{Element, FiniteGroup, GroupError, Subgroup, SubgroupIsomorphism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    One,
    Two,
}

impl Factor {
    pub fn other(self) -> Factor {
        match self {
            Factor::One => Factor::Two,
            Factor::Two => Factor::One,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Factor::One => 1,
            Factor::Two => 2,
        }
    }

    pub fn from_number(n: u8) -> Option<Factor> {
        match n {
            1 => Some(Factor::One),
            2 => Some(Factor::Two),
            _ => None,
        }
    }

    fn slot(self) -> usize {
        self.number() as usize - 1
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// One letter of a word: an element of one of the two factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    pub factor: Factor,
    pub element: Element,
}

impl Syllable {
    pub const fn new(factor: Factor, element: Element) -> Self {
        Syllable { factor, element }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AmalgamError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("subgroup of factor {0} does not belong to that factor")]
    ForeignSubgroup(Factor),
    #[error("identification map is not an isomorphism H1 -> H2: {0}")]
    BadIdentification(&'static str),
    #[error("element #{index} is out of range for factor {factor}")]
    ElementOutOfRange { factor: Factor, index: usize },
}

/// A reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord(Vec<Syllable>);

impl ReducedWord {
    pub fn identity() -> Self {
        ReducedWord(Vec::new())
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    /// Number of syllables.
    pub fn syllable_length(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Syllable> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Syllable> {
        self.0.last().copied()
    }
}

/// Canonical spelling `head * r1 * r2 * ... * rn` with `head` in `H1` and each
/// `ri` the designated right-coset representative of a nontrivial coset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalForm {
    pub head: Element,
    pub tail: Vec<Syllable>,
}

#[derive(Clone, Debug)]
pub struct AmalgamSpec {
    groups: [FiniteGroup; 2],
    subgroups: [Subgroup; 2],
    iso: SubgroupIsomorphism,
    /// Right-coset representative of every element, per factor.
    coset_reps: [Vec<Element>; 2],
}

impl AmalgamSpec {
    pub fn new(
        g1: FiniteGroup,
        g2: FiniteGroup,
        h1: Subgroup,
        h2: Subgroup,
        iso: SubgroupIsomorphism,
    ) -> Result<Self, AmalgamError> {
        // Subgroups don't carry a parent handle; re-derive them in their factor.
        if g1.subgroup(h1.members()).ok().as_ref() != Some(&h1) {
            return Err(AmalgamError::ForeignSubgroup(Factor::One));
        }
        if g2.subgroup(h2.members()).ok().as_ref() != Some(&h2) {
            return Err(AmalgamError::ForeignSubgroup(Factor::Two));
        }
        if h1.order() != h2.order() {
            return Err(AmalgamError::BadIdentification("subgroup orders differ"));
        }
        for &a in h1.members() {
            let fa = iso
                .apply(a)
                .ok_or(AmalgamError::BadIdentification("partial map"))?;
            if !h2.contains(fa) || iso.apply_inverse(fa) != Some(a) {
                return Err(AmalgamError::BadIdentification("not a bijection onto H2"));
            }
            for &b in h1.members() {
                if iso.apply(g1.mul(a, b)) != Some(g2.mul(fa, iso.apply(b).unwrap())) {
                    return Err(AmalgamError::BadIdentification(
                        "does not preserve products",
                    ));
                }
            }
        }
        let reps1 = g1.elements().map(|x| g1.right_coset_rep(&h1, x)).collect();
        let reps2 = g2.elements().map(|x| g2.right_coset_rep(&h2, x)).collect();
        Ok(AmalgamSpec {
            groups: [g1, g2],
            subgroups: [h1, h2],
            iso,
            coset_reps: [reps1, reps2],
        })
    }

    pub fn group(&self, f: Factor) -> &FiniteGroup {
        &self.groups[f.slot()]
    }

    pub fn subgroup(&self, f: Factor) -> &Subgroup {
        &self.subgroups[f.slot()]
    }

    pub fn identification(&self) -> &SubgroupIsomorphism {
        &self.iso
    }

    /// `|G_f : H|`
    pub fn index(&self, f: Factor) -> usize {
        self.group(f).index(self.subgroup(f))
    }

    pub fn check_syllable(&self, s: Syllable) -> Result<Syllable, AmalgamError> {
        if self.group(s.factor).contains(s.element) {
            Ok(s)
        } else {
            Err(AmalgamError::ElementOutOfRange {
                factor: s.factor,
                index: s.element.index(),
            })
        }
    }

    pub fn is_trivial(&self, s: Syllable) -> bool {
        s.element == self.group(s.factor).identity()
    }

    pub fn in_h(&self, s: Syllable) -> bool {
        self.subgroup(s.factor).contains(s.element)
    }

    pub fn syllable_inverse(&self, s: Syllable) -> Syllable {
        Syllable::new(s.factor, self.group(s.factor).inv(s.element))
    }

    /// Product of two syllables in the same factor.
    pub fn syllable_mul(&self, a: Syllable, b: Syllable) -> Syllable {
        debug_assert_eq!(a.factor, b.factor);
        Syllable::new(a.factor, self.group(a.factor).mul(a.element, b.element))
    }

    /// Canonical `H1` copy of an `H` element held in factor `f`.
    pub fn to_h1(&self, f: Factor, h: Element) -> Element {
        match f {
            Factor::One => h,
            Factor::Two => self.iso.apply_inverse(h).expect("element of H2"),
        }
    }

    /// Copy in factor `f` of an `H1` element.
    pub fn from_h1(&self, f: Factor, h: Element) -> Element {
        match f {
            Factor::One => h,
            Factor::Two => self.iso.apply(h).expect("element of H1"),
        }
    }

    /// Moves an `H` element into the other factor.
    pub fn transport(&self, s: Syllable) -> Syllable {
        debug_assert!(self.in_h(s));
        let target = s.factor.other();
        Syllable::new(
            target,
            self.from_h1(target, self.to_h1(s.factor, s.element)),
        )
    }

    /// Designated right-coset representative of `H x` in factor `f`.
    pub fn coset_rep(&self, f: Factor, x: Element) -> Element {
        self.coset_reps[f.slot()][x.index()]
    }

    /// Reduces an arbitrary syllable sequence.
    ///
    /// Adjacent syllables from the same factor are multiplied, identities are
    /// dropped, and `H` elements are pushed into a neighbour. A lone `H`
    /// syllable is stored in factor 1.
    pub fn reduce(&self, raw: &[Syllable]) -> ReducedWord {
        let mut stack: Vec<Syllable> = Vec::with_capacity(raw.len());
        for &s in raw {
            self.push(&mut stack, s);
        }
        if let [only] = stack.as_mut_slice() {
            if only.factor == Factor::Two && self.in_h(*only) {
                *only = self.transport(*only);
            }
        }
        ReducedWord(stack)
    }

    // Invariant: `stack` is reduced, and its top lies in H only when it is
    // the sole syllable.
    fn push(&self, stack: &mut Vec<Syllable>, mut s: Syllable) {
        loop {
            if self.is_trivial(s) {
                return;
            }
            let Some(&top) = stack.last() else {
                stack.push(s);
                return;
            };
            if top.factor == s.factor {
                stack.pop();
                s = self.syllable_mul(top, s);
            } else if self.in_h(s) {
                s = self.transport(s);
            } else if self.in_h(top) {
                stack.pop();
                s = self.syllable_mul(self.transport(top), s);
            } else {
                stack.push(s);
                return;
            }
        }
    }

    pub fn multiply(&self, w1: &ReducedWord, w2: &ReducedWord) -> ReducedWord {
        let mut stack = w1.0.clone();
        for &s in &w2.0 {
            self.push(&mut stack, s);
        }
        self.reduce(&stack)
    }

    pub fn multiply_all<'a>(
        &self,
        words: impl IntoIterator<Item = &'a ReducedWord>,
    ) -> ReducedWord {
        words
            .into_iter()
            .fold(ReducedWord::identity(), |acc, w| self.multiply(&acc, w))
    }

    pub fn invert(&self, w: &ReducedWord) -> ReducedWord {
        ReducedWord(
            w.0.iter()
                .rev()
                .map(|&s| self.syllable_inverse(s))
                .collect(),
        )
    }

    /// `g^-1 * k * g`
    pub fn conjugate(&self, k: &ReducedWord, g: &ReducedWord) -> ReducedWord {
        self.multiply(&self.multiply(&self.invert(g), k), g)
    }

    /// Rewrites from the right: each syllable becomes `h * rep`, and the `h`
    /// is carried into the syllable on its left.
    pub fn normal_form(&self, w: &ReducedWord) -> NormalForm {
        let mut carry = self.group(Factor::One).identity();
        let mut tail = Vec::with_capacity(w.0.len());
        for &s in w.0.iter().rev() {
            let g = self.group(s.factor);
            let x = g.mul(s.element, self.from_h1(s.factor, carry));
            let rep = self.coset_rep(s.factor, x);
            let h = g.mul(x, g.inv(rep));
            carry = self.to_h1(s.factor, h);
            if rep != g.identity() {
                tail.push(Syllable::new(s.factor, rep));
            }
        }
        tail.reverse();
        NormalForm { head: carry, tail }
    }

    /// Reassembles the word spelled by a normal form.
    pub fn from_normal_form(&self, nf: &NormalForm) -> ReducedWord {
        let mut raw = Vec::with_capacity(nf.tail.len() + 1);
        raw.push(Syllable::new(Factor::One, nf.head));
        raw.extend_from_slice(&nf.tail);
        self.reduce(&raw)
    }

    pub fn equal(&self, w1: &ReducedWord, w2: &ReducedWord) -> bool {
        w1.syllable_length() == w2.syllable_length() && self.normal_form(w1) == self.normal_form(w2)
    }

    /// Returns `(w', c)` with `w = c * w' * c^-1` and `w'` cyclically reduced.
    pub fn cyclically_reduce(&self, w: &ReducedWord) -> (ReducedWord, ReducedWord) {
        let mut core = w.clone();
        let mut conjugator: Vec<Syllable> = Vec::new();
        while core.0.len() >= 2 {
            let first = core.0[0];
            let last = *core.0.last().unwrap();
            if first.factor != last.factor {
                break;
            }
            // x1 (x2 .. x_{n-1} xn) = x1 (x2 .. x_{n-1} xn x1) x1^-1
            conjugator.push(first);
            let mut raw: Vec<Syllable> = core.0[1..].to_vec();
            raw.push(first);
            core = self.reduce(&raw);
        }
        (core, self.reduce(&conjugator))
    }

    /// Membership in `S = G1^G ∪ G2^G`, the conjugates of factor elements.
    pub fn is_factor_conjugate(&self, w: &ReducedWord) -> bool {
        self.cyclically_reduce(w).0.syllable_length() <= 1
    }

    pub fn word(&self, raw: &[Syllable]) -> Result<ReducedWord, AmalgamError> {
        for &s in raw {
            self.check_syllable(s)?;
        }
        Ok(self.reduce(raw))
    }

    pub fn syllable_name(&self, s: Syllable) -> &str {
        self.group(s.factor).element_name(s.element)
    }
}
