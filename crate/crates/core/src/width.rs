//! Word lengths and widths of finite groups over a generating set.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::group::{Element, FiniteGroup, GroupError, GroupHomomorphism, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WidthError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("generating set does not generate the group: {0} is unreachable")]
    NotGenerating(String),
}

/// Shortest-word lengths of every element over `S ∪ S^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthTable {
    gens: BTreeSet<Element>,
    lengths: Vec<Option<usize>>,
}

impl LengthTable {
    pub fn generators(&self) -> &BTreeSet<Element> {
        &self.gens
    }

    /// `None` when `g` is not in the subgroup generated by `S`.
    pub fn length(&self, g: Element) -> Option<usize> {
        self.lengths[g.index()]
    }

    pub fn lengths(&self) -> &[Option<usize>] {
        &self.lengths
    }

    pub fn first_unreachable(&self) -> Option<Element> {
        self.lengths
            .iter()
            .position(Option::is_none)
            .map(Element::new)
    }

    /// Largest finite length.
    pub fn max_length(&self) -> usize {
        self.lengths.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// Breadth-first search over the Cayley graph with edges `S ∪ S^-1`.
pub fn bfs_lengths(group: &FiniteGroup, gens: &[Element]) -> LengthTable {
    let mut steps: BTreeSet<Element> = BTreeSet::new();
    for &s in gens {
        steps.insert(s);
        steps.insert(group.inv(s));
    }
    let mut lengths = vec![None; group.order()];
    lengths[group.identity().index()] = Some(0);
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        let next = lengths[x.index()].unwrap() + 1;
        for &s in &steps {
            let y = group.mul(x, s);
            if lengths[y.index()].is_none() {
                lengths[y.index()] = Some(next);
                queue.push_back(y);
            }
        }
    }
    LengthTable {
        gens: gens.iter().copied().collect(),
        lengths,
    }
}

/// `max_g l_S(g)`; the identity counts as length 0.
pub fn width(group: &FiniteGroup, gens: &[Element]) -> Result<usize, WidthError> {
    let table = bfs_lengths(group, gens);
    match table.first_unreachable() {
        Some(g) => Err(WidthError::NotGenerating(group.element_name(g).to_string())),
        None => Ok(table.max_length()),
    }
}

/// Full preimage of `s` under `proj`.
pub fn lift_generating_set(proj: &GroupHomomorphism, s: &[Element]) -> BTreeSet<Element> {
    s.iter().flat_map(|&y| proj.preimage(y)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCheck {
    /// First `g` with `l_S(gN) > l_S'(g)`.
    pub violation: Option<Element>,
    pub checked: usize,
}

impl QuotientCheck {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `l_S(gN) <= l_S'(g)` for every `g`, where `S` generates `G/N`
/// (given by representatives in `G`) and `S'` is its full preimage.
/// Elements unreachable over `S'` have infinite length and pass trivially.
pub fn check_quotient_inequality(
    group: &FiniteGroup,
    normal: &Subgroup,
    quotient_gens: &[Element],
) -> Result<QuotientCheck, WidthError> {
    let (quotient, proj) = group.quotient(normal)?;
    let s: Vec<Element> = quotient_gens.iter().map(|&g| proj.apply(g)).collect();
    let downstairs = bfs_lengths(&quotient, &s);
    if let Some(q) = downstairs.first_unreachable() {
        return Err(WidthError::NotGenerating(
            quotient.element_name(q).to_string(),
        ));
    }
    let lifted: Vec<Element> = lift_generating_set(&proj, &s).into_iter().collect();
    let upstairs = bfs_lengths(group, &lifted);
    let violation = group.elements().find(|&g| {
        let below = downstairs.length(proj.apply(g)).expect("S generates G/N");
        upstairs.length(g).is_some_and(|above| below > above)
    });
    Ok(QuotientCheck {
        violation,
        checked: group.order(),
    })
}
