//! Automorphism groups, tuple orbits and characteristic structure.

pub mod characteristic;
pub mod group;
pub mod orbits;
pub mod search;

pub use characteristic::{
    characteristic_closure_report, characteristic_ideal_tower, is_characteristic,
    is_characteristic_in, is_prc_system, maximal_characteristic_ideals, CharacteristicReport,
    PivotedSet,
};
pub use group::{AutGroup, Automorphism};
pub use orbits::{
    class_orbit_count, class_orbit_count_with, full_orbit_count, orbit_count, orbit_partition,
    orbit_report, point_orbits, tau, tuple_orbits, GroupDescription, OrbitOptions, OrbitReport,
    OrbitStrategy, TupleOrbits,
};
pub use search::{
    are_isomorphic, automorphism_group, automorphism_group_with, element_invariants,
    find_isomorphism, is_isomorphism, SearchOptions,
};
