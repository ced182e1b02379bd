//! 0-consistent ideals and 0-direct decompositions.

use serde::{Deserialize, Serialize};

use crate::aut::Automorphism;
use crate::error::{Error, Result};
use crate::green::{idempotent_leq, is_completely_0_simple};
use crate::partition::UnionFind;
use crate::semigroup::{mask_to_vec, vec_to_mask, FiniteSemigroup};

/// Summands of a 0-direct decomposition, each sorted and containing the zero,
/// ordered by least non-zero element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroDecomposition {
    pub summands: Vec<Vec<usize>>,
}

impl ZeroDecomposition {
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Summand index of each non-zero element; the zero maps to `None`.
    pub fn owners(&self, order: usize, zero: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; order];
        for (i, s) in self.summands.iter().enumerate() {
            for &x in s {
                if x != zero {
                    owner[x] = Some(i);
                }
            }
        }
        owner
    }

    /// Pairwise `{0}` intersections, vanishing cross products, union `S`, no `{0}` summand.
    pub fn is_valid_for(&self, s: &FiniteSemigroup) -> bool {
        let Some(z) = s.zero() else { return false };
        let mut seen = vec![false; s.order()];
        for block in &self.summands {
            if !block.contains(&z) || block.len() < 2 {
                return false;
            }
            for &x in block {
                if x >= s.order() || (x != z && std::mem::replace(&mut seen[x], true)) {
                    return false;
                }
            }
        }
        if s.elements().any(|x| x != z && !seen[x]) {
            return false;
        }
        let owner = self.owners(s.order(), z);
        s.elements().all(|a| {
            s.elements().all(|b| match (owner[a], owner[b]) {
                (Some(i), Some(j)) if i != j => s.mul(a, b) == z,
                (Some(i), Some(_)) => s.mul(a, b) == z || owner[s.mul(a, b)] == Some(i),
                _ => true,
            })
        })
    }
}

/// `T∖{0}` is consistent: `xy ∈ T∖{0}` implies `x, y ∈ T`.
pub fn is_zero_consistent(s: &FiniteSemigroup, set: &[usize]) -> Result<bool> {
    let z = s.require_zero()?;
    s.check_subset(set)?;
    let mask = vec_to_mask(s.order(), set);
    Ok(s.elements().all(|x| {
        s.elements().all(|y| {
            let p = s.mul(x, y);
            p == z || !mask[p] || (mask[x] && mask[y])
        })
    }))
}

/// The least 0-consistent ideal containing `x` (and the zero).
pub fn least_zero_consistent_ideal(s: &FiniteSemigroup, x: usize) -> Result<Vec<usize>> {
    let z = s.require_zero()?;
    s.check_element(x)?;
    let k = s.order();
    let mut mask = vec![false; k];
    let mut queue = Vec::new();
    for e in [z, x] {
        if !mask[e] {
            mask[e] = true;
            queue.push(e);
        }
    }
    let push = |e: usize, mask: &mut Vec<bool>, queue: &mut Vec<usize>| {
        if !mask[e] {
            mask[e] = true;
            queue.push(e);
        }
    };
    // factorizations of each non-zero element
    let mut factors: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for u in 0..k {
        for v in 0..k {
            let p = s.mul(u, v);
            if p != z {
                factors[p].push((u, v));
            }
        }
    }
    while let Some(t) = queue.pop() {
        if t == z {
            continue;
        }
        for c in 0..k {
            push(s.mul(t, c), &mut mask, &mut queue);
            push(s.mul(c, t), &mut mask, &mut queue);
        }
        for &(u, v) in &factors[t] {
            push(u, &mut mask, &mut queue);
            push(v, &mut mask, &mut queue);
        }
    }
    Ok(mask_to_vec(&mask))
}

/// The greatest 0-direct decomposition: one summand per least 0-consistent ideal.
pub fn greatest_zero_direct_decomposition(s: &FiniteSemigroup) -> Result<ZeroDecomposition> {
    let z = s.require_zero()?;
    if s.order() == 1 {
        return Err(Error::InvalidArgument("the trivial semigroup has no 0-direct decomposition".into()));
    }
    let mut owner: Vec<Option<usize>> = vec![None; s.order()];
    let mut summands: Vec<Vec<usize>> = Vec::new();
    for x in s.elements() {
        if x == z || owner[x].is_some() {
            continue;
        }
        let ideal = least_zero_consistent_ideal(s, x)?;
        for &y in &ideal {
            if y != z {
                assert!(owner[y].is_none(), "least 0-consistent ideals are disjoint");
                owner[y] = Some(summands.len());
            }
        }
        summands.push(ideal);
    }
    let d = ZeroDecomposition { summands };
    assert!(d.is_valid_for(s), "summands form a 0-direct decomposition");
    for block in &d.summands {
        let (sub, _) = s.restrict(block)?;
        assert!(
            component_count(&sub) == 1,
            "summands are 0-directly indecomposable"
        );
    }
    Ok(d)
}

/// Components of the graph joining `u, v` to `uv` for every non-zero product,
/// an independent route to the summands.
fn component_count(s: &FiniteSemigroup) -> usize {
    let z = s.zero().expect("has zero");
    components_of_products(s, z).len()
}

fn components_of_products(s: &FiniteSemigroup, z: usize) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(s.order());
    for u in s.elements() {
        for v in s.elements() {
            let w = s.mul(u, v);
            if w != z {
                uf.union(u, w);
                uf.union(v, w);
            }
        }
    }
    let p = uf.into_partition();
    p.blocks()
        .into_iter()
        .filter(|b| !b.contains(&z))
        .map(|mut b| {
            b.push(z);
            b.sort_unstable();
            b
        })
        .collect()
}

/// The same decomposition computed by connectivity of non-zero products.
pub fn decomposition_by_components(s: &FiniteSemigroup) -> Result<ZeroDecomposition> {
    let z = s.require_zero()?;
    let mut summands = components_of_products(s, z);
    summands.sort_by_key(|b| b.iter().copied().find(|&x| x != z));
    Ok(ZeroDecomposition { summands })
}

/// The only 0-consistent ideals are `{0}` and `S`.
pub fn is_zero_directly_indecomposable(s: &FiniteSemigroup) -> Result<bool> {
    s.require_zero()?;
    if s.order() == 1 {
        return Ok(true);
    }
    Ok(greatest_zero_direct_decomposition(s)?.len() == 1)
}

/// Every non-zero idempotent is minimal among non-zero idempotents.
pub fn is_primitive(s: &FiniteSemigroup) -> Result<bool> {
    let z = s.require_zero()?;
    let idem: Vec<usize> = s.idempotents().into_iter().filter(|&e| e != z).collect();
    Ok(idem
        .iter()
        .all(|&e| idem.iter().all(|&f| !idempotent_leq(s, f, e) || f == e)))
}

/// For regular `S` with zero: the summands of the greatest decomposition,
/// each required to be completely 0-simple.
pub fn primitive_regular_decomposition(s: &FiniteSemigroup) -> Result<Vec<Vec<usize>>> {
    s.require_zero()?;
    if let Some(a) = s.elements().find(|&a| !s.is_regular_element(a)) {
        return Err(Error::NotRegular(a));
    }
    let d = greatest_zero_direct_decomposition(s)?;
    for (i, block) in d.summands.iter().enumerate() {
        let (sub, _) = s.restrict(block)?;
        if !is_completely_0_simple(&sub) {
            return Err(Error::SummandNotCompletely0Simple(i));
        }
    }
    Ok(d.summands)
}

/// `φ = ⊔⁰φ_i`: the summand permutation and the restrictions `φ|_{S_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismDecomposition {
    /// `S_i φ = S_{π(i)}`.
    pub permutation: Vec<usize>,
    /// For summand `i`, local index in `S_i` to local index in `S_{π(i)}`.
    pub components: Vec<Vec<usize>>,
}

pub fn decompose_automorphism(
    s: &FiniteSemigroup,
    decomposition: &ZeroDecomposition,
    phi: &Automorphism,
) -> Result<AutomorphismDecomposition> {
    let z = s.require_zero()?;
    phi.check(s)?;
    let owner = decomposition.owners(s.order(), z);
    let mut permutation = Vec::with_capacity(decomposition.len());
    let mut components = Vec::with_capacity(decomposition.len());
    for block in &decomposition.summands {
        let image = phi.apply_set(block);
        let target = block
            .iter()
            .find(|&&x| x != z)
            .and_then(|&x| owner[phi.apply(x)])
            .expect("summands have non-zero elements");
        let target_block = &decomposition.summands[target];
        assert_eq!(&image, target_block, "automorphisms permute the summands");
        components.push(
            block
                .iter()
                .map(|&x| target_block.binary_search(&phi.apply(x)).unwrap())
                .collect(),
        );
        permutation.push(target);
    }
    let out = AutomorphismDecomposition {
        permutation,
        components,
    };
    assert_eq!(
        &reassemble_automorphism(decomposition, &out, s.order()),
        phi,
        "⊔⁰φ_i reproduces φ"
    );
    Ok(out)
}

/// `⊔⁰φ_i` as a map on `S`.
pub fn reassemble_automorphism(
    decomposition: &ZeroDecomposition,
    parts: &AutomorphismDecomposition,
    order: usize,
) -> Automorphism {
    let mut images = vec![usize::MAX; order];
    for (i, block) in decomposition.summands.iter().enumerate() {
        let target = &decomposition.summands[parts.permutation[i]];
        for (local, &x) in block.iter().enumerate() {
            images[x] = target[parts.components[i][local]];
        }
    }
    Automorphism::from_images_unchecked(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::automorphism_group;
    use crate::constructions::{
        brandt, chain_semilattice, cyclic_group, null_semigroup, zero_direct_union,
    };
    use crate::green::green_relations;

    #[test]
    fn consistency() {
        let b = brandt(&cyclic_group(2), 2).unwrap();
        let all: Vec<usize> = b.elements().collect();
        assert!(is_zero_consistent(&b, &all).unwrap());
        assert!(is_zero_consistent(&b, &[0]).unwrap());
        let h = green_relations(&b).h;
        let mut t = h.class_of(1);
        t.push(0);
        assert!(!is_zero_consistent(&b, &t).unwrap());
        assert_eq!(is_zero_consistent(&cyclic_group(2), &[0]), Err(Error::NoZero));
    }

    #[test]
    fn decompositions() {
        let d = greatest_zero_direct_decomposition(&null_semigroup(3)).unwrap();
        assert_eq!(d.summands, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
        let b = brandt(&cyclic_group(2), 2).unwrap();
        assert_eq!(greatest_zero_direct_decomposition(&b).unwrap().len(), 1);
        assert!(is_zero_directly_indecomposable(&b).unwrap());
        assert!(!is_zero_directly_indecomposable(&null_semigroup(2)).unwrap());
        assert!(is_zero_directly_indecomposable(&null_semigroup(1)).unwrap());

        let u = zero_direct_union(&[
            brandt(&cyclic_group(2), 1).unwrap(),
            brandt(&cyclic_group(3), 1).unwrap(),
        ])
        .unwrap();
        let d = greatest_zero_direct_decomposition(&u).unwrap();
        assert_eq!(d.summands, vec![vec![0, 1, 2], vec![0, 3, 4, 5]]);
        assert_eq!(d, decomposition_by_components(&u).unwrap());
    }

    #[test]
    fn primitivity() {
        let b = brandt(&cyclic_group(2), 2).unwrap();
        assert!(is_primitive(&b).unwrap());
        assert_eq!(primitive_regular_decomposition(&b).unwrap().len(), 1);
        assert!(!is_primitive(&chain_semilattice(3)).unwrap());
        let b1 = brandt(&cyclic_group(2), 1).unwrap();
        let u = zero_direct_union(&[b1.clone(), b1]).unwrap();
        assert!(is_primitive(&u).unwrap());
        assert_eq!(primitive_regular_decomposition(&u).unwrap().len(), 2);
        assert!(matches!(
            primitive_regular_decomposition(&chain_semilattice(3)),
            Err(Error::SummandNotCompletely0Simple(0))
        ));
    }

    #[test]
    fn automorphisms_decompose() {
        let n = null_semigroup(2);
        let d = greatest_zero_direct_decomposition(&n).unwrap();
        let swap = Automorphism::new(&n, vec![0, 2, 1]).unwrap();
        let parts = decompose_automorphism(&n, &d, &swap).unwrap();
        assert_eq!(parts.permutation, vec![1, 0]);
        let id = decompose_automorphism(&n, &d, &Automorphism::identity(3)).unwrap();
        assert_eq!(id.permutation, vec![0, 1]);

        let b1 = brandt(&cyclic_group(2), 1).unwrap();
        let u = zero_direct_union(&[b1.clone(), b1]).unwrap();
        let d = greatest_zero_direct_decomposition(&u).unwrap();
        let aut = automorphism_group(&u).unwrap();
        assert_eq!(aut.order(), 2);
        for phi in &aut {
            decompose_automorphism(&u, &d, phi).unwrap();
        }
    }
}
