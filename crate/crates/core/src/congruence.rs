//! Congruences: closures, the named congruences σ, μ, ρ♯, ρ♭ and quotients.

use crate::aut::AutGroup;
use crate::error::{Error, Result};
use crate::green::green_relations;
use crate::partition::{Partition, UnionFind};
use crate::pattern::RestrictedGrowth;
use crate::semigroup::FiniteSemigroup;

/// Checks translation closure, returning the first failing triple.
pub fn check_congruence(s: &FiniteSemigroup, p: &Partition) -> Result<()> {
    if p.len() != s.order() {
        return Err(Error::InvalidPartition(format!(
            "partition has {} points but the semigroup has {}",
            p.len(),
            s.order()
        )));
    }
    // comparing each element with the first member of its block is enough
    for block in p.blocks() {
        let a = block[0];
        for &b in &block[1..] {
            for c in s.elements() {
                if !p.related(s.mul(c, a), s.mul(c, b)) || !p.related(s.mul(a, c), s.mul(b, c)) {
                    return Err(Error::NotACongruence { a, b, c });
                }
            }
        }
    }
    Ok(())
}

pub fn is_congruence(s: &FiniteSemigroup, p: &Partition) -> bool {
    check_congruence(s, p).is_ok()
}

/// `ρ♯`: the least congruence containing `pairs`.
pub fn congruence_generated_by(s: &FiniteSemigroup, pairs: &[(usize, usize)]) -> Result<Partition> {
    let mut uf = UnionFind::new(s.order());
    let mut work = Vec::with_capacity(pairs.len());
    for &(a, b) in pairs {
        s.check_element(a)?;
        s.check_element(b)?;
        work.push((a, b));
    }
    while let Some((a, b)) = work.pop() {
        if uf.union(a, b) {
            for c in s.elements() {
                work.push((s.mul(c, a), s.mul(c, b)));
                work.push((s.mul(a, c), s.mul(b, c)));
            }
        }
    }
    Ok(uf.into_partition())
}

/// `ρ♭`: `a ρ♭ b ⇔ (uav) τ (ubv)` for all `u, v ∈ S¹`.
pub fn largest_congruence_within(s: &FiniteSemigroup, tau: &Partition) -> Result<Partition> {
    if tau.len() != s.order() {
        return Err(Error::InvalidPartition("size mismatch".into()));
    }
    // None stands for the empty translation (the adjoined identity)
    let translations: Vec<Option<usize>> =
        std::iter::once(None).chain(s.elements().map(Some)).collect();
    let signatures: Vec<Vec<usize>> = s
        .elements()
        .map(|a| {
            let mut sig = Vec::with_capacity(translations.len() * translations.len());
            for &u in &translations {
                let ua = u.map_or(a, |u| s.mul(u, a));
                for &v in &translations {
                    let uav = v.map_or(ua, |v| s.mul(ua, v));
                    sig.push(tau.block_of(uav));
                }
            }
            sig
        })
        .collect();
    let flat = Partition::from_keys(&signatures);
    debug_assert!(flat.refines(tau));
    debug_assert!(is_congruence(s, &flat));
    Ok(flat)
}

/// `σ`: `a σ b ⇔ ea = eb` for some idempotent `e`. Inverse semigroups only.
pub fn least_group_congruence(s: &FiniteSemigroup) -> Result<Partition> {
    if !s.is_inverse() {
        return Err(Error::NotInverse);
    }
    let idem = s.idempotents();
    let mut uf = UnionFind::new(s.order());
    for a in s.elements() {
        for b in a + 1..s.order() {
            if idem.iter().any(|&e| s.mul(e, a) == s.mul(e, b)) {
                uf.union(a, b);
            }
        }
    }
    let sigma = uf.into_partition();
    assert!(
        quotient(s, &sigma)?.is_group(),
        "S/σ must be a group for inverse S"
    );
    Ok(sigma)
}

/// `μ = H♭`, the maximum idempotent-separating congruence. Inverse semigroups only.
pub fn max_idempotent_separating(s: &FiniteSemigroup) -> Result<Partition> {
    if !s.is_inverse() {
        return Err(Error::NotInverse);
    }
    let h = green_relations(s).h;
    let mu = largest_congruence_within(s, &h)?;
    let mut seen = vec![false; mu.num_blocks()];
    for e in s.idempotents() {
        let b = mu.block_of(e);
        assert!(!seen[b], "μ must separate idempotents");
        seen[b] = true;
    }
    Ok(mu)
}

/// `S/ρ`, with block `i` of `ρ` becoming element `i`.
pub fn quotient(s: &FiniteSemigroup, rho: &Partition) -> Result<FiniteSemigroup> {
    check_congruence(s, rho)?;
    let blocks = rho.blocks();
    let q = FiniteSemigroup::from_fn(blocks.len(), |i, j| {
        rho.block_of(s.mul(blocks[i][0], blocks[j][0]))
    })?;
    let names = blocks
        .iter()
        .map(|b| format!("[{}]", s.name(b[0])))
        .collect();
    q.with_names(names)
}

/// The Rees congruence `ρ_I`: `I` collapsed to one block, singletons elsewhere.
pub fn rees_congruence(s: &FiniteSemigroup, ideal: &[usize]) -> Result<Partition> {
    s.check_ideal(ideal)?;
    let rep = *ideal.iter().min().expect("ideal is non-empty");
    let mut keys: Vec<usize> = s.elements().collect();
    for &x in ideal {
        keys[x] = rep;
    }
    Ok(Partition::from_keys(&keys))
}

/// `S/I`.
pub fn rees_quotient(s: &FiniteSemigroup, ideal: &[usize]) -> Result<FiniteSemigroup> {
    quotient(s, &rees_congruence(s, ideal)?)
}

/// `Aut(S)[τ]`: the automorphisms preserving `τ`.
pub fn preserving_subgroup(group: &AutGroup, tau: &Partition) -> AutGroup {
    group.filter(|phi| tau.is_preserved_by(phi.images()))
}

/// Every congruence of `S`, by exhaustive enumeration of partitions.
///
/// Only meant for small orders; refuses anything above `max_order`.
pub fn all_congruences(s: &FiniteSemigroup, max_order: usize) -> Result<Vec<Partition>> {
    if s.order() > max_order {
        return Err(Error::InvalidArgument(format!(
            "congruence enumeration limited to order {max_order}, got {}",
            s.order()
        )));
    }
    Ok(RestrictedGrowth::new(s.order())
        .map(|rgs| Partition::from_keys(&rgs))
        .filter(|p| is_congruence(s, p))
        .collect())
}

/// Default order bound for [`all_congruences`].
pub const CONGRUENCE_ENUMERATION_LIMIT: usize = 6;
