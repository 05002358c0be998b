//! Lattice-walk fish and rooted planar maps.
//!
//! Generalized fighting fish are the quadrant excursions produced from the
//! empty word by the two growth operations, and fighting fish are the subclass
//! grown from `ENWS` with nonempty strips. Both are the counterclockwise codes
//! of rooted planar maps (resp. nonseparable maps) equipped with their
//! rightmost depth-first search spanning tree. This crate builds both sides,
//! the codes between them, recursive decompositions on both sides, exhaustive
//! and counting enumeration, and exact uniform samplers.

pub mod bijection;
pub mod enumerate;
pub mod gff;
pub mod map;
pub mod mullin;
pub mod render;
pub mod spanning;
pub mod verify;
pub mod word;

pub use gff::{FightingFish, Gff};
pub use map::{MapError, MapStats, RootedMap};
pub use spanning::{rightmost_dfs_tree, TreeRootedMap};
pub use word::{LatticeWord, Point, Step};
