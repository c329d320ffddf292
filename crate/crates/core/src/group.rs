//! Concrete finite groups stored as full multiplication tables.
//!
//! Elements are canonical indices into the group's element list. Every
//! higher-level structure (subgroups, words, homomorphisms) refers to
//! elements through [`Element`], so equality is exact and hashing is free.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

/// Groups up to this order have associativity checked exhaustively when built
/// from a table.
pub const DEFAULT_ASSOCIATIVITY_CAP: usize = 256;

/// Largest permutation group [`FiniteGroup::from_permutations`] will enumerate.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// Index of an element inside its [`FiniteGroup`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(usize);

impl Element {
    pub const fn new(index: usize) -> Self {
        Element(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("empty multiplication table")]
    EmptyTable,
    #[error("table row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("table entry ({row}, {col}) = {value} is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("{names} element names given for a table of order {order}")]
    NameCountMismatch { names: usize, order: usize },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: String, b: String, c: String },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(String),
    #[error("generator {name} is not a bijection on 0..{degree}")]
    NotBijection { name: String, degree: usize },
    #[error("closure exceeds cap of {cap} elements")]
    ClosureExceedsCap { cap: usize },
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error(
        "subgroup is not normal: {conjugator}^-1*{member}*{conjugator} = {image} lies outside it"
    )]
    NotNormal {
        member: String,
        conjugator: String,
        image: String,
    },
    #[error("not an isomorphism: {0}")]
    NotIsomorphism(String),
    #[error("not a homomorphism: image of {x}*{y} differs from the product of images")]
    NotHomomorphism { x: String, y: String },
}

/// A finite group with an explicit multiplication table.
///
/// Products of permutation-built groups compose right to left:
/// `(p*q)(i) = p(q(i))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    names: Vec<String>,
    table: Vec<Element>,
    identity: Element,
    inverses: Vec<Element>,
}

impl FiniteGroup {
    /// Builds a group from a row-major table where `table[i][j]` is the index
    /// of `names[i] * names[j]`.
    pub fn from_mult_table(
        name: impl Into<String>,
        names: Vec<String>,
        table: &[Vec<usize>],
    ) -> Result<Self, GroupError> {
        Self::from_mult_table_with_cap(name, names, table, DEFAULT_ASSOCIATIVITY_CAP)
    }

    pub fn from_mult_table_with_cap(
        name: impl Into<String>,
        names: Vec<String>,
        table: &[Vec<usize>],
        associativity_cap: usize,
    ) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::EmptyTable);
        }
        if names.len() != order {
            return Err(GroupError::NameCountMismatch {
                names: names.len(),
                order,
            });
        }
        check_unique_names(&names)?;
        let mut flat = Vec::with_capacity(order * order);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::NotSquare {
                    row,
                    len: entries.len(),
                    expected: order,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                flat.push(Element(value));
            }
        }
        let mul = |a: usize, b: usize| flat[a * order + b].0;

        if order <= associativity_cap {
            for a in 0..order {
                for b in 0..order {
                    let ab = mul(a, b);
                    for c in 0..order {
                        if mul(ab, c) != mul(a, mul(b, c)) {
                            return Err(GroupError::NonAssociative {
                                a: names[a].clone(),
                                b: names[b].clone(),
                                c: names[c].clone(),
                            });
                        }
                    }
                }
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverses = Vec::with_capacity(order);
        for (g, name) in names.iter().enumerate() {
            let inv = (0..order)
                .find(|&h| mul(g, h) == identity && mul(h, g) == identity)
                .ok_or_else(|| GroupError::NoInverse(name.clone()))?;
            inverses.push(Element(inv));
        }

        Ok(FiniteGroup {
            name: name.into(),
            names,
            table: flat,
            identity: Element(identity),
            inverses,
        })
    }

    /// Enumerates the permutation group generated by `generators` acting on
    /// `0..degree`.
    ///
    /// The identity is element 0 and is named `e`. Other elements are numbered
    /// in breadth-first order and named by their shortlex word in the
    /// generator names, with runs compressed (`x`, `y`, `x2`, `xy`, ...).
    /// Generators are tried in the order given.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        generators: &[(String, Vec<usize>)],
    ) -> Result<Self, GroupError> {
        Self::from_permutations_with_cap(name, degree, generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_permutations_with_cap(
        name: impl Into<String>,
        degree: usize,
        generators: &[(String, Vec<usize>)],
        cap: usize,
    ) -> Result<Self, GroupError> {
        for (gen_name, images) in generators {
            if !is_bijection(images, degree) {
                return Err(GroupError::NotBijection {
                    name: gen_name.clone(),
                    degree,
                });
            }
        }

        let identity: Vec<usize> = (0..degree).collect();
        let mut perms: Vec<Vec<usize>> = vec![identity.clone()];
        let mut lookup: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        lookup.insert(identity, 0);
        // BFS parent of each non-identity element: (parent, generator).
        let mut parent: Vec<Option<(usize, usize)>> = vec![None];
        // right[x * ngens + k] = x * generator_k
        let mut right: Vec<usize> = Vec::new();
        let ngens = generators.len();

        let mut cursor = 0;
        while cursor < perms.len() {
            for (k, (_, gen)) in generators.iter().enumerate() {
                // (x * g)(i) = x(g(i))
                let product: Vec<usize> = gen.iter().map(|&i| perms[cursor][i]).collect();
                let idx = match lookup.get(&product) {
                    Some(&idx) => idx,
                    None => {
                        let idx = perms.len();
                        if idx >= cap {
                            return Err(GroupError::ClosureExceedsCap { cap });
                        }
                        lookup.insert(product.clone(), idx);
                        perms.push(product);
                        parent.push(Some((cursor, k)));
                        idx
                    }
                };
                right.push(idx);
            }
            cursor += 1;
        }

        let order = perms.len();
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); order];
        for g in 1..order {
            let (p, k) = parent[g].expect("non-identity element has a parent");
            let mut w = words[p].clone();
            w.push(k);
            words[g] = w;
        }
        let names: Vec<String> = words.iter().map(|w| word_name(w, generators)).collect();
        check_unique_names(&names)?;

        // x * g = (x * parent(g)) * gen(g), filled in BFS order of g.
        let mut table = vec![Element(0); order * order];
        for x in 0..order {
            table[x * order] = Element(x);
            for g in 1..order {
                let (p, k) = parent[g].expect("non-identity element has a parent");
                let xp = table[x * order + p].0;
                table[x * order + g] = Element(right[xp * ngens + k]);
            }
        }
        let mut inverses = vec![Element(0); order];
        for x in 0..order {
            for y in 0..order {
                if table[x * order + y].0 == 0 {
                    inverses[x] = Element(y);
                    break;
                }
            }
        }

        Ok(FiniteGroup {
            name: name.into(),
            names,
            table,
            identity: Element(0),
            inverses,
        })
    }

    /// Cyclic group of order `n` generated by `generator`, named `e`,
    /// `generator`, `generator2`, ...
    pub fn cyclic(name: impl Into<String>, generator: &str, n: usize) -> Self {
        let n = n.max(1);
        let names: Vec<String> = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => generator.to_string(),
                _ => {
                    let mut s = generator.to_string();
                    let _ = write!(s, "{k}");
                    s
                }
            })
            .collect();
        let table: Vec<Element> = (0..n * n).map(|i| Element((i / n + i % n) % n)).collect();
        let inverses = (0..n).map(|k| Element((n - k) % n)).collect();
        FiniteGroup {
            name: name.into(),
            names,
            table,
            identity: Element(0),
            inverses,
        }
    }

    /// Assembles a group whose axioms are inherited from a known group.
    fn from_parts(name: String, names: Vec<String>, table: Vec<Element>) -> Self {
        let order = names.len();
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x].0 == x))
            .expect("inherited group has an identity");
        let inverses = (0..order)
            .map(|g| {
                let h = (0..order)
                    .find(|&h| table[g * order + h].0 == identity)
                    .expect("inherited group has inverses");
                Element(h)
            })
            .collect();
        FiniteGroup {
            name,
            names,
            table,
            identity: Element(identity),
            inverses,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(Element)
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a.0 * self.order() + b.0]
    }

    pub fn inv(&self, a: Element) -> Element {
        self.inverses[a.0]
    }

    /// `x^-1 * g * x`
    pub fn conjugate(&self, g: Element, x: Element) -> Element {
        self.mul(self.mul(self.inv(x), g), x)
    }

    pub fn pow(&self, a: Element, exp: i64) -> Element {
        let base = if exp < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..exp.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: Element) -> usize {
        let mut k = 1;
        let mut acc = a;
        while acc != self.identity {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_name(&self, a: Element) -> &str {
        &self.names[a.0]
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<Element> {
        self.names.iter().position(|n| n == name).map(Element)
    }

    pub fn parse_element(&self, name: &str) -> Result<Element, GroupError> {
        self.element(name)
            .ok_or_else(|| GroupError::UnknownElement(name.to_string()))
    }

    /// Row-major copy of the multiplication table.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n)
            .map(|i| (0..n).map(|j| self.table[i * n + j].0).collect())
            .collect()
    }

    pub fn contains(&self, a: Element) -> bool {
        a.0 < self.order()
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_closure(&self, seed: &[Element]) -> Subgroup {
        let mut mask = vec![false; self.order()];
        let mut queue = VecDeque::from([self.identity]);
        mask[self.identity.0] = true;
        while let Some(x) = queue.pop_front() {
            for &s in seed {
                let y = self.mul(x, s);
                if !mask[y.0] {
                    mask[y.0] = true;
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_mask(mask)
    }

    /// Checks that `members` is closed and contains the identity.
    pub fn subgroup(&self, members: &[Element]) -> Result<Subgroup, GroupError> {
        let mut mask = vec![false; self.order()];
        for &m in members {
            if !self.contains(m) {
                return Err(GroupError::UnknownElement(alloc::format!("#{}", m.0)));
            }
            mask[m.0] = true;
        }
        if !mask[self.identity.0] {
            return Err(GroupError::NotSubgroup("missing the identity".to_string()));
        }
        let sub = Subgroup::from_mask(mask);
        for &a in sub.members() {
            for &b in sub.members() {
                let ab = self.mul(a, b);
                if !sub.contains(ab) {
                    return Err(GroupError::NotSubgroup(alloc::format!(
                        "{}*{} = {} is missing",
                        self.element_name(a),
                        self.element_name(b),
                        self.element_name(ab)
                    )));
                }
            }
        }
        Ok(sub)
    }

    pub fn subgroup_by_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Subgroup, GroupError> {
        let members = names
            .iter()
            .map(|n| self.parse_element(n.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        self.subgroup(&members)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_mask(vec![true; self.order()])
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut mask = vec![false; self.order()];
        mask[self.identity.0] = true;
        Subgroup::from_mask(mask)
    }

    /// `|G : H|`
    pub fn index(&self, h: &Subgroup) -> usize {
        self.order() / h.order()
    }

    /// `{ h1 * a * h2 : h1, h2 in H }`
    pub fn double_coset(&self, h: &Subgroup, a: Element) -> BTreeSet<Element> {
        let mut out = BTreeSet::new();
        for &h1 in h.members() {
            let h1a = self.mul(h1, a);
            for &h2 in h.members() {
                out.insert(self.mul(h1a, h2));
            }
        }
        out
    }

    /// Whether `HaH` and `Ha^-1H` are disjoint. Double cosets partition the
    /// group, so otherwise they coincide.
    pub fn inverse_coset_distinct(&self, h: &Subgroup, a: Element) -> bool {
        !self.double_coset(h, a).contains(&self.inv(a))
    }

    /// Least-index element of the right coset `Hx`.
    pub fn right_coset_rep(&self, h: &Subgroup, x: Element) -> Element {
        h.members()
            .iter()
            .map(|&m| self.mul(m, x))
            .min()
            .expect("subgroup is nonempty")
    }

    /// Least-index element of the left coset `xH`.
    pub fn left_coset_rep(&self, h: &Subgroup, x: Element) -> Element {
        h.members()
            .iter()
            .map(|&m| self.mul(x, m))
            .min()
            .expect("subgroup is nonempty")
    }

    /// Representatives of the right cosets of `h`, ascending.
    pub fn right_transversal(&self, h: &Subgroup) -> Vec<Element> {
        let reps: BTreeSet<Element> = self
            .elements()
            .map(|x| self.right_coset_rep(h, x))
            .collect();
        reps.into_iter().collect()
    }

    /// Fails with a conjugation witness when `n` is not normal.
    pub fn check_normal(&self, n: &Subgroup) -> Result<(), GroupError> {
        for g in self.elements() {
            for &m in n.members() {
                let image = self.conjugate(m, g);
                if !n.contains(image) {
                    return Err(GroupError::NotNormal {
                        member: self.element_name(m).to_string(),
                        conjugator: self.element_name(g).to_string(),
                        image: self.element_name(image).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_normal(&self, n: &Subgroup) -> bool {
        self.check_normal(n).is_ok()
    }

    /// `G/N` together with the canonical projection.
    ///
    /// Cosets are ordered by their least-index member; a coset is named after
    /// that member in brackets, e.g. `[c]`.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, GroupHomomorphism), GroupError> {
        self.check_normal(n)?;
        let reps = self.right_transversal(n);
        let coset_of: BTreeMap<Element, usize> =
            reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let project = |x: Element| coset_of[&self.right_coset_rep(n, x)];

        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                table.push(Element(project(self.mul(a, b))));
            }
        }
        let names = reps
            .iter()
            .map(|&r| alloc::format!("[{}]", self.element_name(r)))
            .collect();
        let mut qname = self.name.clone();
        qname.push_str("/N");
        let quotient = FiniteGroup::from_parts(qname, names, table);
        let mapping = self.elements().map(|x| Element(project(x))).collect();
        Ok((
            quotient,
            GroupHomomorphism {
                mapping,
                target_order: k,
            },
        ))
    }

    /// Smallest conjugation-invariant superset of `s`.
    pub fn conjugacy_closure(&self, s: &[Element]) -> BTreeSet<Element> {
        let mut out = BTreeSet::new();
        for &x in s {
            for g in self.elements() {
                out.insert(self.conjugate(x, g));
            }
        }
        out
    }

    pub fn is_conjugation_invariant(&self, s: &BTreeSet<Element>) -> bool {
        s.iter()
            .all(|&x| self.elements().all(|g| s.contains(&self.conjugate(x, g))))
    }
}

fn is_bijection(images: &[usize], degree: usize) -> bool {
    if images.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    for &i in images {
        if i >= degree || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

fn check_unique_names(names: &[String]) -> Result<(), GroupError> {
    let mut seen = BTreeSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(GroupError::DuplicateName(n.clone()));
        }
    }
    Ok(())
}

fn word_name(word: &[usize], generators: &[(String, Vec<usize>)]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        out.push_str(&generators[word[i]].0);
        if j - i > 1 {
            let _ = write!(out, "{}", j - i);
        }
        i = j;
    }
    out
}

/// A subgroup, stored as a membership mask over its parent's elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<Element>,
    mask: Vec<bool>,
}

impl Subgroup {
    fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| Element(i))
            .collect();
        Subgroup { members, mask }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Ascending by index.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn contains(&self, a: Element) -> bool {
        self.mask.get(a.0).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    /// Whether this is a proper subgroup of its parent.
    pub fn is_proper(&self) -> bool {
        self.members.len() < self.mask.len()
    }
}

/// A bijection between two subgroups that preserves products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupIsomorphism {
    forward: BTreeMap<Element, Element>,
    backward: BTreeMap<Element, Element>,
}

impl SubgroupIsomorphism {
    pub fn new(
        source_group: &FiniteGroup,
        source: &Subgroup,
        target_group: &FiniteGroup,
        target: &Subgroup,
        pairs: &[(Element, Element)],
    ) -> Result<Self, GroupError> {
        let mut forward = BTreeMap::new();
        let mut backward = BTreeMap::new();
        for &(x, y) in pairs {
            if !source.contains(x) {
                return Err(GroupError::NotIsomorphism(alloc::format!(
                    "{} is not in the source subgroup",
                    source_group.element_name(x)
                )));
            }
            if !target.contains(y) {
                return Err(GroupError::NotIsomorphism(alloc::format!(
                    "{} is not in the target subgroup",
                    target_group.element_name(y)
                )));
            }
            if forward.insert(x, y).is_some_and(|old| old != y) {
                return Err(GroupError::NotIsomorphism(alloc::format!(
                    "{} is mapped twice",
                    source_group.element_name(x)
                )));
            }
        }
        if forward.len() != source.order() {
            let missing = source
                .members()
                .iter()
                .find(|m| !forward.contains_key(m))
                .map(|&m| source_group.element_name(m))
                .unwrap_or("?");
            return Err(GroupError::NotIsomorphism(alloc::format!(
                "{missing} has no image"
            )));
        }
        for (&x, &y) in &forward {
            if backward.insert(y, x).is_some() {
                return Err(GroupError::NotIsomorphism(alloc::format!(
                    "{} is hit twice",
                    target_group.element_name(y)
                )));
            }
        }
        if backward.len() != target.order() {
            return Err(GroupError::NotIsomorphism("not surjective".to_string()));
        }
        for (&a, &fa) in &forward {
            for (&b, &fb) in &forward {
                if forward[&source_group.mul(a, b)] != target_group.mul(fa, fb) {
                    return Err(GroupError::NotIsomorphism(alloc::format!(
                        "fails on {}*{}",
                        source_group.element_name(a),
                        source_group.element_name(b)
                    )));
                }
            }
        }
        Ok(SubgroupIsomorphism { forward, backward })
    }

    /// Identity map of a subgroup onto itself.
    pub fn identity(group: &FiniteGroup, sub: &Subgroup) -> Self {
        let pairs: Vec<_> = sub.members().iter().map(|&m| (m, m)).collect();
        Self::new(group, sub, group, sub, &pairs).expect("identity is an isomorphism")
    }

    pub fn apply(&self, x: Element) -> Option<Element> {
        self.forward.get(&x).copied()
    }

    pub fn apply_inverse(&self, y: Element) -> Option<Element> {
        self.backward.get(&y).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.forward.iter().map(|(&x, &y)| (x, y))
    }
}

/// A homomorphism between finite groups, as a total table on the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHomomorphism {
    mapping: Vec<Element>,
    target_order: usize,
}

impl GroupHomomorphism {
    pub fn new(
        source: &FiniteGroup,
        target: &FiniteGroup,
        mapping: Vec<Element>,
    ) -> Result<Self, GroupError> {
        if mapping.len() != source.order() {
            return Err(GroupError::NotSubgroup(alloc::format!(
                "mapping covers {} of {} elements",
                mapping.len(),
                source.order()
            )));
        }
        if let Some(bad) = mapping.iter().find(|m| !target.contains(**m)) {
            return Err(GroupError::UnknownElement(alloc::format!("#{}", bad.0)));
        }
        for x in source.elements() {
            for y in source.elements() {
                if mapping[source.mul(x, y).0] != target.mul(mapping[x.0], mapping[y.0]) {
                    return Err(GroupError::NotHomomorphism {
                        x: source.element_name(x).to_string(),
                        y: source.element_name(y).to_string(),
                    });
                }
            }
        }
        Ok(GroupHomomorphism {
            mapping,
            target_order: target.order(),
        })
    }

    pub fn apply(&self, x: Element) -> Element {
        self.mapping[x.0]
    }

    pub fn is_surjective(&self) -> bool {
        let hit: BTreeSet<_> = self.mapping.iter().collect();
        hit.len() == self.target_order
    }

    pub fn preimage(&self, y: Element) -> impl Iterator<Item = Element> + '_ {
        self.mapping
            .iter()
            .enumerate()
            .filter(move |(_, &m)| m == y)
            .map(|(i, _)| Element(i))
    }

    pub fn kernel(&self, source: &FiniteGroup, target: &FiniteGroup) -> Subgroup {
        let mask = self
            .mapping
            .iter()
            .map(|&m| m == target.identity())
            .collect();
        debug_assert_eq!(self.mapping.len(), source.order());
        Subgroup::from_mask(mask)
    }
}
