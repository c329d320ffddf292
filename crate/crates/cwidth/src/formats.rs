//! JSON spec files: groups, amalgams, HNN extensions and graphs of groups.
//!
//! Paths inside a spec file are resolved against the directory of that file,
//! then against `$GT_FIXTURES`.

use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use cwidth_core::amalgam::{AmalgamError, AmalgamSpec};
use cwidth_core::gog::{Edge, GogError, GraphOfGroups, Vertex};
use cwidth_core::group::{Element, FiniteGroup, GroupError, Subgroup, SubgroupIsomorphism};
use cwidth_core::hnn::{HnnError, HnnSpec};
use serde::Deserialize;
use serde_json::{Map, Value};

pub const FIXTURES_ENV: &str = "GT_FIXTURES";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: file not found (also tried {FIXTURES_ENV})")]
    NotFound { path: PathBuf },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{path}: {field}: {message}")]
    Field {
        path: PathBuf,
        field: String,
        message: String,
    },
    #[error("{path}: {source}")]
    Group { path: PathBuf, source: GroupError },
    #[error("{path}: {source}")]
    Amalgam { path: PathBuf, source: AmalgamError },
    #[error("{path}: {source}")]
    Hnn { path: PathBuf, source: HnnError },
    #[error("{path}: {source}")]
    Gog { path: PathBuf, source: GogError },
}

/// Finds `path`, relative to `base` when given, falling back to
/// `$GT_FIXTURES/path` and `$GT_FIXTURES/<file name>`.
pub fn resolve(base: Option<&Path>, path: &Path) -> Result<PathBuf, FormatError> {
    let direct = match base {
        Some(dir) if path.is_relative() => dir.join(path),
        _ => path.to_path_buf(),
    };
    if direct.is_file() {
        return Ok(direct);
    }
    if let Some(root) = env::var_os(FIXTURES_ENV) {
        let root = PathBuf::from(root);
        let mut candidates = vec![root.join(path)];
        if let Some(name) = path.file_name() {
            candidates.push(root.join(name));
        }
        if let Some(found) = candidates.into_iter().find(|p| p.is_file()) {
            return Ok(found);
        }
    }
    Err(FormatError::NotFound { path: direct })
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, FormatError> {
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| FormatError::Json {
        path: path.to_path_buf(),
        source,
    })
}

fn field_err(path: &Path, field: impl Into<String>, message: impl ToString) -> FormatError {
    FormatError::Field {
        path: path.to_path_buf(),
        field: field.into(),
        message: message.to_string(),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    name: String,
    elements: Option<Vec<String>>,
    table: Option<Vec<Vec<usize>>>,
    degree: Option<usize>,
    permutations: Option<Map<String, Value>>,
}

/// Loads a group file in table or permutation form. Permutation generators
/// are taken in file order.
pub fn load_group(path: &Path) -> Result<FiniteGroup, FormatError> {
    let path = resolve(None, path)?;
    let file: GroupFile = read_json(&path)?;
    let group_err = |source| FormatError::Group {
        path: path.clone(),
        source,
    };
    match file {
        GroupFile {
            name,
            elements: Some(elements),
            table: Some(table),
            degree: None,
            permutations: None,
        } => FiniteGroup::from_mult_table(name, elements, &table).map_err(group_err),
        GroupFile {
            name,
            elements: None,
            table: None,
            degree: Some(degree),
            permutations: Some(perms),
        } => {
            let mut gens = Vec::with_capacity(perms.len());
            for (gen, images) in perms {
                let images: Vec<usize> = serde_json::from_value(images)
                    .map_err(|e| field_err(&path, format!("permutations.{gen}"), e))?;
                gens.push((gen, images));
            }
            FiniteGroup::from_permutations(name, degree, &gens).map_err(group_err)
        }
        _ => Err(field_err(
            &path,
            "<root>",
            "expected either \"elements\" + \"table\" or \"degree\" + \"permutations\"",
        )),
    }
}

fn parse_names(
    path: &Path,
    field: &str,
    group: &FiniteGroup,
    names: &[String],
) -> Result<Vec<Element>, FormatError> {
    names
        .iter()
        .enumerate()
        .map(|(i, n)| {
            group
                .parse_element(n)
                .map_err(|e| field_err(path, format!("{field}[{i}]"), e))
        })
        .collect()
}

fn parse_subgroup(
    path: &Path,
    field: &str,
    group: &FiniteGroup,
    names: &[String],
) -> Result<Subgroup, FormatError> {
    let members = parse_names(path, field, group, names)?;
    group
        .subgroup(&members)
        .map_err(|e| field_err(path, field, e))
}

fn parse_pairs(
    path: &Path,
    field: &str,
    from: &FiniteGroup,
    to: &FiniteGroup,
    pairs: &[(String, String)],
) -> Result<Vec<(Element, Element)>, FormatError> {
    pairs
        .iter()
        .enumerate()
        .map(|(i, (x, y))| {
            let at = |j| format!("{field}[{i}][{j}]");
            Ok((
                from.parse_element(x)
                    .map_err(|e| field_err(path, at(0), e))?,
                to.parse_element(y).map_err(|e| field_err(path, at(1), e))?,
            ))
        })
        .collect()
}

fn dir_of(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AmalgamFile {
    g1: PathBuf,
    g2: PathBuf,
    h1: Vec<String>,
    h2: Vec<String>,
    iso: Vec<(String, String)>,
}

pub fn load_amalgam(path: &Path) -> Result<AmalgamSpec, FormatError> {
    let path = resolve(None, path)?;
    let file: AmalgamFile = read_json(&path)?;
    let dir = dir_of(&path);
    let g1 = load_group(&resolve(Some(dir), &file.g1)?)?;
    let g2 = load_group(&resolve(Some(dir), &file.g2)?)?;
    let h1 = parse_subgroup(&path, "h1", &g1, &file.h1)?;
    let h2 = parse_subgroup(&path, "h2", &g2, &file.h2)?;
    let pairs = parse_pairs(&path, "iso", &g1, &g2, &file.iso)?;
    let iso = SubgroupIsomorphism::new(&g1, &h1, &g2, &h2, &pairs)
        .map_err(|e| field_err(&path, "iso", e))?;
    AmalgamSpec::new(g1, g2, h1, h2, iso).map_err(|source| FormatError::Amalgam { path, source })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HnnFile {
    g: PathBuf,
    a: Vec<String>,
    b: Vec<String>,
    phi: Vec<(String, String)>,
}

pub fn load_hnn(path: &Path) -> Result<HnnSpec, FormatError> {
    let path = resolve(None, path)?;
    let file: HnnFile = read_json(&path)?;
    let g = load_group(&resolve(Some(dir_of(&path)), &file.g)?)?;
    let a = parse_subgroup(&path, "a", &g, &file.a)?;
    let b = parse_subgroup(&path, "b", &g, &file.b)?;
    let pairs = parse_pairs(&path, "phi", &g, &g, &file.phi)?;
    let phi =
        SubgroupIsomorphism::new(&g, &a, &g, &b, &pairs).map_err(|e| field_err(&path, "phi", e))?;
    HnnSpec::new(g, a, b, phi).map_err(|source| FormatError::Hnn { path, source })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexFile {
    name: String,
    group: PathBuf,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeFile {
    name: String,
    from: usize,
    to: usize,
    edge_group: Vec<String>,
    embed_from: Vec<(String, String)>,
    embed_to: Vec<(String, String)>,
    in_tree: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<VertexFile>,
    edges: Vec<EdgeFile>,
}

pub fn load_graph(path: &Path) -> Result<GraphOfGroups, FormatError> {
    let path = resolve(None, path)?;
    let file: GraphFile = read_json(&path)?;
    let dir = dir_of(&path);
    let mut vertices = Vec::with_capacity(file.vertices.len());
    for v in file.vertices {
        let group = load_group(&resolve(Some(dir), &v.group)?)?;
        vertices.push(Vertex {
            name: v.name,
            group,
        });
    }
    let mut edges = Vec::with_capacity(file.edges.len());
    for (i, e) in file.edges.into_iter().enumerate() {
        let group_at = |v: usize, end: &str| {
            vertices.get(v).map(|x| &x.group).ok_or_else(|| {
                field_err(
                    &path,
                    format!("edges[{i}].{end}"),
                    format!("no vertex #{v}"),
                )
            })
        };
        let from = group_at(e.from, "from")?;
        let to = group_at(e.to, "to")?;
        let field = |f: &str| format!("edges[{i}].{f}");
        edges.push(Edge {
            edge_group: parse_names(&path, &field("edge_group"), from, &e.edge_group)?,
            embed_from: parse_pairs(&path, &field("embed_from"), from, from, &e.embed_from)?,
            embed_to: parse_pairs(&path, &field("embed_to"), from, to, &e.embed_to)?,
            name: e.name,
            from: e.from,
            to: e.to,
            in_tree: e.in_tree,
        });
    }
    GraphOfGroups::new(vertices, edges).map_err(|source| FormatError::Gog { path, source })
}
