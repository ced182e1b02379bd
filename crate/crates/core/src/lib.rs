//! Finite semigroups: validation, Green's relations, congruences,
//! automorphism groups and tuple orbits, constructions and 0-direct
//! decompositions.

pub mod aut;
pub mod catalog;
pub mod congruence;
pub mod constructions;
pub mod decomp;
pub mod error;
pub mod green;
pub mod json;
pub mod partition;
pub mod pattern;
pub mod semigroup;

pub use aut::{AutGroup, Automorphism, OrbitReport};
pub use error::{Error, Result};
pub use partition::{Partition, UnionFind};
pub use semigroup::{validate, ElementTuple, FiniteSemigroup};
