//! Semigroup constructions: null semigroups, chains, Brandt semigroups,
//! products, 0-direct unions, semidirect products, nil examples and
//! McAlister P-semigroups.

mod basic;
pub mod mcalister;
pub mod semidirect;

pub use basic::{
    boolean_zs, brandt, brandt_automorphism, chain_of_semigroups, chain_semilattice,
    cyclic_group, diamond_semilattice, direct_product, direct_sum_of_monoids, example_c, group_by_name, klein_four,
    left_zero_band, null_semigroup, symmetric_group, zero_direct_union,
};
pub use mcalister::{
    augmented_act_automorphisms, factor_p_automorphism, p_automorphism, p_elements, p_semigroup,
    triple_apparatus, FinitePoset, McAlisterTriple, PSemigroup, TripleApparatus,
};
pub use semidirect::{
    induced_actor_map, kappa_partition, kappa_stabilizer, lift_actor_automorphism,
    semidirect_product, SemidirectData,
};
