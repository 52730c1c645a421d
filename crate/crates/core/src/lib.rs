//! Burnside rings of finite groups, their completions at the augmentation
//! ideal, and wedge decompositions of stable maps between classifying spaces.

// Index loops mirror the matrix formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod burnside;
pub mod error;
pub mod group;
pub mod lattice;
pub mod modules;
pub mod parse;
pub mod primes;
pub mod stablemaps;
pub mod zlattice;

pub use burnside::{BurnsideElement, BurnsideIdeal, BurnsideRing, IntegerIdeal, TableOfMarks, TrichotomyReport};
pub use error::{Error, Result};
pub use group::{DirectProduct, FiniteGroup, GroupHom, Subgroup, DEFAULT_ORDER_BOUND};
pub use lattice::{subgroup_classes, Family, FamilyKind, SubgroupClass, SubgroupClassification};
pub use modules::{Confidence, GModule, ProfiniteAbelianDescriptor, QuotientTower};
pub use parse::{parse_group, parse_group_bounded};
pub use stablemaps::{
    pair_classes, BundlePairClass, CrosscheckReport, CrosscheckStatus, PairClassification, WedgeDecomposition,
    WedgeSummand,
};
pub use zlattice::{AbelianGroup, Lattice};
