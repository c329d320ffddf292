//! Finite-or-infinite C-width verdicts for fundamental groups of small graphs
//! of finite groups.
//!
//! The rules only use vertex-level indices. A vertex group embeds in the
//! fundamental group of any subgraph containing it, so
//! `[pi1(X_i) : G_e] >= [G_P : G_e]` and a vertex-level index bound is a
//! valid bound for the subgraph.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{Element, FiniteGroup, GroupError, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GogError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("graph has no vertices")]
    Empty,
    #[error("edge {edge} refers to missing vertex #{vertex}")]
    BadEndpoint { edge: String, vertex: usize },
    #[error("graph is disconnected: vertex {0} is unreachable")]
    Disconnected(String),
    #[error("embedding of edge {edge} into {vertex}: {reason}")]
    NonInjectiveEmbedding {
        edge: String,
        vertex: String,
        reason: String,
    },
    #[error("tree edges do not form a spanning tree: {0}")]
    NotSpanningTree(&'static str),
}

#[derive(Clone, Debug)]
pub struct Vertex {
    pub name: String,
    pub group: FiniteGroup,
}

/// An edge whose group is given as a subgroup of the `from` vertex group,
/// with embeddings into both endpoint groups.
#[derive(Clone, Debug)]
pub struct Edge {
    pub name: String,
    pub from: usize,
    pub to: usize,
    pub edge_group: Vec<Element>,
    pub embed_from: Vec<(Element, Element)>,
    pub embed_to: Vec<(Element, Element)>,
    pub in_tree: bool,
}

#[derive(Clone, Debug)]
pub struct GraphOfGroups {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    /// `[G_from : image, G_to : image]` per edge.
    indices: Vec<[usize; 2]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// Single loop with a proper edge group: an HNN extension.
    HnnLoop,
    /// Non-separating edge with proper images at both ends: an HNN extension
    /// of the rest of the graph.
    NonSeparatingEdge,
    /// Separating edge with vertex-level indices `>= 3` and `>= 2`.
    AmalgamIndices,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    InfiniteCWidth {
        kind: CertificateKind,
        edge: String,
        indices: [usize; 2],
    },
    FiniteCWidth {
        edge: String,
        indices: [usize; 2],
    },
    Unknown,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::InfiniteCWidth { .. } => "infinite",
            Verdict::FiniteCWidth { .. } => "finite",
            Verdict::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::InfiniteCWidth {
                kind: CertificateKind::HnnLoop,
                edge,
                indices,
            } => write!(
                f,
                "HNN extension along loop {edge} (index {}), surjects onto Z",
                indices[0]
            ),
            Verdict::InfiniteCWidth {
                kind: CertificateKind::NonSeparatingEdge,
                edge,
                indices,
            } => {
                write!(
                    f,
                    "HNN extension along non-separating edge {edge} (indices {}, {}), surjects onto Z",
                    indices[0], indices[1]
                )
            }
            Verdict::InfiniteCWidth {
                kind: CertificateKind::AmalgamIndices,
                edge,
                indices,
            } => {
                write!(
                    f,
                    "amalgam along separating edge {edge} with indices {} and {}",
                    indices[0], indices[1]
                )
            }
            Verdict::FiniteCWidth { edge, indices } => write!(
                f,
                "amalgam of finite groups along {edge} with indices {} and {}, both at most 2",
                indices[0], indices[1]
            ),
            Verdict::Unknown => write!(f, "no rule applies"),
        }
    }
}

impl GraphOfGroups {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self, GogError> {
        if vertices.is_empty() {
            return Err(GogError::Empty);
        }
        let mut indices = Vec::with_capacity(edges.len());
        for e in &edges {
            for v in [e.from, e.to] {
                if v >= vertices.len() {
                    return Err(GogError::BadEndpoint {
                        edge: e.name.clone(),
                        vertex: v,
                    });
                }
            }
            let carrier_group = &vertices[e.from].group;
            let carrier = carrier_group.subgroup(&e.edge_group)?;
            let mut pair = [0; 2];
            for (slot, (v, map)) in [(e.from, &e.embed_from), (e.to, &e.embed_to)]
                .into_iter()
                .enumerate()
            {
                let target = &vertices[v];
                let image = check_embedding(carrier_group, &carrier, &target.group, map).map_err(
                    |reason| GogError::NonInjectiveEmbedding {
                        edge: e.name.clone(),
                        vertex: target.name.clone(),
                        reason,
                    },
                )?;
                pair[slot] = target.group.index(&image);
            }
            indices.push(pair);
        }
        let graph = GraphOfGroups {
            vertices,
            edges,
            indices,
        };
        if let Some(v) = graph.unreachable_vertex(None, false) {
            return Err(GogError::Disconnected(graph.vertices[v].name.clone()));
        }
        graph.check_spanning_tree()?;
        Ok(graph)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `[G_from : phi_0(G_e), G_to : phi_1(G_e)]`
    pub fn edge_indices(&self, edge: usize) -> [usize; 2] {
        self.indices[edge]
    }

    /// Vertex not reachable from vertex 0 when `skip` is removed (and, with
    /// `tree_only`, using only tree edges).
    fn unreachable_vertex(&self, skip: Option<usize>, tree_only: bool) -> Option<usize> {
        let mut seen = vec![false; self.vertices.len()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for (i, e) in self.edges.iter().enumerate() {
                if Some(i) == skip || (tree_only && !e.in_tree) {
                    continue;
                }
                let other = if e.from == v {
                    e.to
                } else if e.to == v {
                    e.from
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    queue.push_back(other);
                }
            }
        }
        seen.iter().position(|s| !s)
    }

    fn check_spanning_tree(&self) -> Result<(), GogError> {
        let tree: Vec<&Edge> = self.edges.iter().filter(|e| e.in_tree).collect();
        if tree.iter().any(|e| e.from == e.to) {
            return Err(GogError::NotSpanningTree("a loop is marked as a tree edge"));
        }
        if tree.len() + 1 != self.vertices.len() {
            return Err(GogError::NotSpanningTree("wrong number of tree edges"));
        }
        if self.unreachable_vertex(None, true).is_some() {
            return Err(GogError::NotSpanningTree(
                "tree edges do not connect every vertex",
            ));
        }
        Ok(())
    }

    pub fn is_separating(&self, edge: usize) -> bool {
        let e = &self.edges[edge];
        e.from != e.to && self.unreachable_vertex(Some(edge), false).is_some()
    }

    /// Applies, edge by edge, the rules:
    ///
    /// * a non-separating edge whose images are proper at both endpoints
    ///   makes `pi1` an HNN extension, hence infinite C-width;
    /// * a separating edge with vertex-level indices `(>= 3, >= 2)` in either
    ///   order makes `pi1` an amalgam of infinite C-width;
    /// * a single edge between two vertices with both indices `<= 2` gives an
    ///   amalgam of finite groups of finite C-width.
    ///
    /// Anything else is `Unknown`.
    pub fn classify(&self) -> Verdict {
        for (i, e) in self.edges.iter().enumerate() {
            let [i1, i2] = self.indices[i];
            if !self.is_separating(i) {
                if i1 > 1 && i2 > 1 {
                    let kind = if e.from == e.to && self.vertices.len() == 1 {
                        CertificateKind::HnnLoop
                    } else {
                        CertificateKind::NonSeparatingEdge
                    };
                    return Verdict::InfiniteCWidth {
                        kind,
                        edge: e.name.clone(),
                        indices: [i1, i2],
                    };
                }
            } else if (i1 >= 3 && i2 >= 2) || (i1 >= 2 && i2 >= 3) {
                return Verdict::InfiniteCWidth {
                    kind: CertificateKind::AmalgamIndices,
                    edge: e.name.clone(),
                    indices: [i1, i2],
                };
            }
        }
        if let ([e], 2) = (self.edges.as_slice(), self.vertices.len()) {
            let [i1, i2] = self.indices[0];
            if i1 <= 2 && i2 <= 2 {
                return Verdict::FiniteCWidth {
                    edge: e.name.clone(),
                    indices: [i1, i2],
                };
            }
        }
        Verdict::Unknown
    }
}

/// Validates an injective homomorphism from `carrier` (inside
/// `carrier_group`) into `target` and returns its image.
fn check_embedding(
    carrier_group: &FiniteGroup,
    carrier: &Subgroup,
    target: &FiniteGroup,
    map: &[(Element, Element)],
) -> Result<Subgroup, String> {
    let mut images = vec![None; carrier_group.order()];
    for &(x, y) in map {
        if !carrier.contains(x) {
            return Err(alloc::format!(
                "{} is not in the edge group",
                carrier_group.element_name(x)
            ));
        }
        if !target.contains(y) {
            return Err(alloc::format!("#{} is not in the target group", y.index()));
        }
        if images[x.index()].replace(y).is_some_and(|old| old != y) {
            return Err(alloc::format!(
                "{} is mapped twice",
                carrier_group.element_name(x)
            ));
        }
    }
    let image_of = |x: Element| images[x.index()];
    for &x in carrier.members() {
        if image_of(x).is_none() {
            return Err(alloc::format!(
                "{} has no image",
                carrier_group.element_name(x)
            ));
        }
    }
    for &x in carrier.members() {
        for &y in carrier.members() {
            let lhs = image_of(carrier_group.mul(x, y)).unwrap();
            let rhs = target.mul(image_of(x).unwrap(), image_of(y).unwrap());
            if lhs != rhs {
                return Err(alloc::format!(
                    "not a homomorphism at {}*{}",
                    carrier_group.element_name(x),
                    carrier_group.element_name(y)
                ));
            }
        }
    }
    let image: Vec<Element> = carrier
        .members()
        .iter()
        .map(|&x| image_of(x).unwrap())
        .collect();
    let mut distinct = image.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != image.len() {
        return Err("not injective".into());
    }
    target
        .subgroup(&distinct)
        .map_err(|e| alloc::format!("{e}"))
}
