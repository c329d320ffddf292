//! Small named groups and the standard amalgam / HNN instances built on them.
//!
//! The amalgam `F21 *_{Z3} Z6` is the default instance for quasimorphism
//! experiments: `x` generates the normal `Z7` of the Frobenius group and
//! `HxH` is disjoint from `Hx^-1H` for `H = <y>`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::amalgam::{AmalgamSpec, Factor, Syllable};
use crate::group::{Element, FiniteGroup, SubgroupIsomorphism};
use crate::hnn::HnnSpec;

/// Elements of S3 in table order, as permutations of {1, 2, 3} written
/// zero-based.
const S3_ELEMENTS: [(&str, [usize; 3]); 6] = [
    ("e", [0, 1, 2]),
    ("(12)", [1, 0, 2]),
    ("(13)", [2, 1, 0]),
    ("(23)", [0, 2, 1]),
    ("(123)", [1, 2, 0]),
    ("(132)", [2, 0, 1]),
];

/// Multiplication table of S3 composing right to left.
pub fn s3_table() -> Vec<Vec<usize>> {
    let find = |p: [usize; 3]| S3_ELEMENTS.iter().position(|(_, q)| *q == p).unwrap();
    S3_ELEMENTS
        .iter()
        .map(|(_, p)| {
            S3_ELEMENTS
                .iter()
                .map(|(_, q)| find([p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect()
}

pub fn s3() -> FiniteGroup {
    let names = S3_ELEMENTS.iter().map(|(n, _)| n.to_string()).collect();
    FiniteGroup::from_mult_table("S3", names, &s3_table()).expect("S3 table is a group")
}

/// Z4 with elements named `0`..`3`, given by its addition table.
pub fn z4() -> FiniteGroup {
    let names = (0..4).map(|i: usize| i.to_string()).collect();
    let table: Vec<Vec<usize>> = (0..4)
        .map(|i| (0..4).map(|j| (i + j) % 4).collect())
        .collect();
    FiniteGroup::from_mult_table("Z4", names, &table).expect("Z4 table is a group")
}

/// Z6 generated by `c`.
pub fn z6() -> FiniteGroup {
    FiniteGroup::cyclic("Z6", "c", 6)
}

/// The Frobenius group of order 21 acting on Z7: `x: i -> i+1`, `y: i -> 2i`.
pub fn f21() -> FiniteGroup {
    let x = (0..7).map(|i| (i + 1) % 7).collect();
    let y = (0..7).map(|i| (2 * i) % 7).collect();
    FiniteGroup::from_permutations("F21", 7, &[("x".to_string(), x), ("y".to_string(), y)])
        .expect("F21 generators are permutations")
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn iso_by_names(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    pairs: &[(&str, &str)],
) -> Vec<(Element, Element)> {
    pairs
        .iter()
        .map(|(a, b)| (g1.parse_element(a).unwrap(), g2.parse_element(b).unwrap()))
        .collect()
}

/// `F21 *_H Z6` with `H = <y> = <c2>` identified by `y -> c2`.
pub fn f21_z6() -> AmalgamSpec {
    let g1 = f21();
    let g2 = z6();
    let h1 = g1.subgroup_by_names(&names(&["e", "y", "y2"])).unwrap();
    let h2 = g2.subgroup_by_names(&names(&["e", "c2", "c4"])).unwrap();
    let pairs = iso_by_names(&g1, &g2, &[("e", "e"), ("y", "c2"), ("y2", "c4")]);
    let iso = SubgroupIsomorphism::new(&g1, &h1, &g2, &h2, &pairs).unwrap();
    AmalgamSpec::new(g1, g2, h1, h2, iso).expect("F21 * Z6 is a valid amalgam")
}

/// `a = x` in the first factor of [`f21_z6`].
pub fn f21_z6_a(spec: &AmalgamSpec) -> Syllable {
    Syllable::new(
        Factor::One,
        spec.group(Factor::One).parse_element("x").unwrap(),
    )
}

/// `b = c3` in the second factor of [`f21_z6`].
pub fn f21_z6_b(spec: &AmalgamSpec) -> Syllable {
    Syllable::new(
        Factor::Two,
        spec.group(Factor::Two).parse_element("c3").unwrap(),
    )
}

/// `S3 *_H S3` with `H = <(12)>` in both factors.
pub fn s3_s3() -> AmalgamSpec {
    let g = s3();
    let h = g.subgroup_by_names(&names(&["e", "(12)"])).unwrap();
    let iso = SubgroupIsomorphism::identity(&g, &h);
    AmalgamSpec::new(g.clone(), g, h.clone(), h, iso).unwrap()
}

/// `Z3 * Z2` over the trivial subgroup.
pub fn z3_z2_free() -> AmalgamSpec {
    let g1 = FiniteGroup::cyclic("Z3", "x", 3);
    let g2 = FiniteGroup::cyclic("Z2", "z", 2);
    let h1 = g1.trivial_subgroup();
    let h2 = g2.trivial_subgroup();
    let iso =
        SubgroupIsomorphism::new(&g1, &h1, &g2, &h2, &[(g1.identity(), g2.identity())]).unwrap();
    AmalgamSpec::new(g1, g2, h1, h2, iso).unwrap()
}

/// HNN extension of Z6 with `A = B = <c2>` and `phi: c2 -> c4`.
pub fn z6_hnn() -> HnnSpec {
    let g = z6();
    let a = g.subgroup_by_names(&names(&["e", "c2", "c4"])).unwrap();
    let pairs = iso_by_names(&g, &g, &[("e", "e"), ("c2", "c4"), ("c4", "c2")]);
    let phi = SubgroupIsomorphism::new(&g, &a, &g, &a, &pairs).unwrap();
    HnnSpec::new(g, a.clone(), a, phi).expect("valid HNN data")
}

/// Every fixture group, for sweeps.
pub fn all_groups() -> Vec<FiniteGroup> {
    vec![s3(), z4(), z6(), f21()]
}
