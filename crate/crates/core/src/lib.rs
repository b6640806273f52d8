//! Subgroup, centralizer and normal-centralizer lattices of finite groups.
//!
//! Groups are Cayley tables over dense element indices ([`GroupTable`]);
//! subgroups are bitsets over those indices ([`SubgroupSet`]). On top of that
//! sit subgroup enumeration and centralizers ([`subgroup`]), generic analysis
//! of finite bounded lattices ([`lattice`]), and the checkers and searches in
//! [`lab`].

pub mod bitset;
pub mod error;
pub mod families;
pub mod group;
pub mod groupfile;
pub mod iso;
pub mod lab;
pub mod lattice;
pub mod naming;
pub mod spec;
pub mod subgroup;

pub use bitset::SubgroupSet;
pub use error::{Error, Limits, Result};
pub use group::{build_from_generators, direct_product, quotient, GroupTable};
pub use iso::{find_isomorphism, is_isomorphic, Isomorphism};
pub use lattice::{BoundedLattice, ChainClass, Interval, NodeId};
pub use spec::{catalog_group, GroupSpec};
