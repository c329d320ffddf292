//! Random and exhaustive word generators for property checks.
//!
//! Everything here takes the RNG as an argument, so results are a function
//! of the caller's seed.

use alloc::vec::Vec;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::amalgam::{AmalgamSpec, Factor, ReducedWord, Syllable};
use crate::hnn::{HnnLetter, HnnSpec, HnnWord};

/// Elements of factor `f` outside `H`, i.e. the legal interior syllables.
pub fn syllable_alphabet(spec: &AmalgamSpec, f: Factor) -> Vec<Syllable> {
    let h = spec.subgroup(f);
    spec.group(f)
        .elements()
        .filter(|&x| !h.contains(x))
        .map(|x| Syllable::new(f, x))
        .collect()
}

/// Every nontrivial element of both factors.
pub fn factor_elements(spec: &AmalgamSpec) -> Vec<Syllable> {
    [Factor::One, Factor::Two]
        .into_iter()
        .flat_map(|f| {
            let g = spec.group(f);
            g.elements()
                .filter(move |&x| x != g.identity())
                .map(move |x| Syllable::new(f, x))
        })
        .collect()
}

/// Uniform reduced word with exactly `len` syllables (alternating factors,
/// none in `H`). Panics if a factor equals `H` and `len > 1`.
pub fn random_reduced_word<R: Rng + ?Sized>(
    spec: &AmalgamSpec,
    rng: &mut R,
    len: usize,
) -> ReducedWord {
    let alphabets = [
        syllable_alphabet(spec, Factor::One),
        syllable_alphabet(spec, Factor::Two),
    ];
    let mut f = if rng.gen_bool(0.5) {
        Factor::One
    } else {
        Factor::Two
    };
    let mut raw = Vec::with_capacity(len);
    for _ in 0..len {
        let alphabet = &alphabets[(f == Factor::Two) as usize];
        raw.push(*alphabet.choose(rng).expect("factor strictly larger than H"));
        f = f.other();
    }
    let w = spec.reduce(&raw);
    debug_assert_eq!(w.syllable_length(), len);
    w
}

/// Reduced word whose length is uniform in `0..=max_len`.
pub fn random_word_up_to<R: Rng + ?Sized>(
    spec: &AmalgamSpec,
    rng: &mut R,
    max_len: usize,
) -> ReducedWord {
    let len = rng.gen_range(0..=max_len);
    random_reduced_word(spec, rng, len)
}

/// Respells `w` by moving a random `u` in `H` across one syllable boundary:
/// `... x y ...` becomes `... (x u) (u^-1 y) ...`. The element and the
/// syllable length are unchanged.
pub fn pinch_respelling<R: Rng + ?Sized>(
    spec: &AmalgamSpec,
    rng: &mut R,
    w: &ReducedWord,
) -> ReducedWord {
    let n = w.syllable_length();
    if n < 2 {
        return w.clone();
    }
    let boundary = rng.gen_range(1..n);
    let mut raw = w.syllables().to_vec();
    let left = raw[boundary - 1];
    let h = spec.subgroup(left.factor).members();
    let u = Syllable::new(left.factor, *h.choose(rng).expect("H is nonempty"));
    let u_inv = spec.transport(spec.syllable_inverse(u));
    raw[boundary - 1] = spec.syllable_mul(left, u);
    raw[boundary] = spec.syllable_mul(u_inv, raw[boundary]);
    spec.reduce(&raw)
}

pub fn respell<R: Rng + ?Sized>(
    spec: &AmalgamSpec,
    rng: &mut R,
    w: &ReducedWord,
    pinches: usize,
) -> ReducedWord {
    (0..pinches).fold(w.clone(), |acc, _| pinch_respelling(spec, rng, &acc))
}

/// Element of `G1^G ∪ G2^G`: a random factor element conjugated by a random
/// word of at most `max_conj_len` syllables.
pub fn random_factor_conjugate<R: Rng + ?Sized>(
    spec: &AmalgamSpec,
    rng: &mut R,
    max_conj_len: usize,
) -> ReducedWord {
    let f = if rng.gen_bool(0.5) {
        Factor::One
    } else {
        Factor::Two
    };
    let g = spec.group(f);
    let k = crate::group::Element::new(rng.gen_range(0..g.order()));
    let k = spec.reduce(&[Syllable::new(f, k)]);
    let c = random_word_up_to(spec, rng, max_conj_len);
    spec.conjugate(&k, &c)
}

/// Every reduced word of at most `max_len` syllables: the empty word, every
/// nontrivial factor element, and all alternating sequences over
/// [`syllable_alphabet`] of length 2 and up.
pub fn enumerate_reduced_words(spec: &AmalgamSpec, max_len: usize) -> Vec<ReducedWord> {
    let mut out = Vec::new();
    out.push(ReducedWord::identity());
    if max_len == 0 {
        return out;
    }
    for s in factor_elements(spec) {
        let w = spec.reduce(&[s]);
        // a lone H element of factor 2 is stored in factor 1; skip the copy
        if w.syllables() == [s] {
            out.push(w);
        }
    }
    let alphabets = [
        syllable_alphabet(spec, Factor::One),
        syllable_alphabet(spec, Factor::Two),
    ];
    for start in [Factor::One, Factor::Two] {
        let mut layer: Vec<Vec<Syllable>> = alphabets[(start == Factor::Two) as usize]
            .iter()
            .map(|&s| alloc::vec![s])
            .collect();
        let mut f = start;
        for _ in 2..=max_len {
            f = f.other();
            let alphabet = &alphabets[(f == Factor::Two) as usize];
            let mut next = Vec::with_capacity(layer.len() * alphabet.len());
            for prefix in &layer {
                for &s in alphabet {
                    let mut w = prefix.clone();
                    w.push(s);
                    next.push(w);
                }
            }
            out.extend(next.iter().map(|w| spec.reduce(w)));
            layer = next;
        }
    }
    out
}

/// Random HNN word of exactly `len` letters, mixing base elements and
/// `t^{+-1}` uniformly.
pub fn random_hnn_word<R: Rng + ?Sized>(spec: &HnnSpec, rng: &mut R, len: usize) -> HnnWord {
    let base = spec.base();
    let letters: Vec<HnnLetter> = (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => HnnLetter::T(1),
            1 => HnnLetter::T(-1),
            _ => HnnLetter::Base(crate::group::Element::new(rng.gen_range(0..base.order()))),
        })
        .collect();
    spec.word(&letters)
}
