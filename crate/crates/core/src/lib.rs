//! Finite groups, amalgamated free products and HNN extensions of finite
//! groups, the segment-counting quasimorphism on amalgams, and C-width
//! lower bounds.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod amalgam;
pub mod fixtures;
pub mod gog;
pub mod group;
pub mod hnn;
pub mod quasimorphism;
pub mod sampling;
pub mod width;
pub mod witness;

pub use amalgam::{AmalgamError, AmalgamSpec, Factor, NormalForm, ReducedWord, Syllable};
pub use gog::{CertificateKind, Edge, GogError, GraphOfGroups, Verdict, Vertex};
pub use group::{
    Element, FiniteGroup, GroupError, GroupHomomorphism, Subgroup, SubgroupIsomorphism,
};
pub use hnn::{HnnError, HnnLetter, HnnSpec, HnnWord};
pub use quasimorphism::{SegmentQuasimorphism, Sign};
pub use width::{bfs_lengths, width, WidthError};
pub use witness::{WitnessConfig, WitnessRow};
