//! Characteristic subsets, pivoted relatively characteristic systems and the
//! characteristic ideal tower.

use serde::{Deserialize, Serialize};

use crate::aut::group::AutGroup;
use crate::aut::orbits::point_orbits;
use crate::aut::search::automorphism_group;
use crate::error::{Error, Result};
use crate::green::two_sided_ideal_mask;
use crate::semigroup::FiniteSemigroup;

/// `A` is fixed setwise by every element of `group`.
pub fn is_characteristic_in(group: &AutGroup, set: &[usize]) -> bool {
    group.generators().iter().all(|phi| phi.fixes_setwise(set))
}

/// `Aφ = A` for all `φ ∈ Aut(S)`.
pub fn is_characteristic(s: &FiniteSemigroup, set: &[usize]) -> Result<bool> {
    s.check_subset(set)?;
    Ok(is_characteristic_in(&automorphism_group(s)?, set))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacteristicReport {
    pub tau: usize,
    /// The 1-orbits, each sorted, ordered by least member.
    pub orbits: Vec<Vec<usize>>,
    /// `2^τ`, the number of characteristic subsets.
    pub characteristic_subsets: u128,
}

pub fn characteristic_closure_report(s: &FiniteSemigroup) -> Result<CharacteristicReport> {
    let g = automorphism_group(s)?;
    let orbits = point_orbits(&g).blocks();
    let tau = orbits.len();
    Ok(CharacteristicReport {
        tau,
        orbits,
        characteristic_subsets: 1u128.checked_shl(tau as u32).unwrap_or(u128::MAX),
    })
}

/// A pair `(A_i, X̄_i)` of a subset and its pivot tuple.
pub type PivotedSet = (Vec<usize>, Vec<usize>);

/// For every `φ` and `i, j` with `X̄_iφ = X̄_j`, checks `A_iφ ⊆ A_j`.
///
/// Since the group is closed under inverses, the one-sided inclusion over
/// all ordered pairs gives equality.
pub fn is_prc_system(group: &AutGroup, pairs: &[PivotedSet]) -> Result<bool> {
    let Some(t) = pairs.first().map(|p| p.1.len()) else {
        return Ok(true);
    };
    for (a, x) in pairs {
        if x.len() != t {
            return Err(Error::InvalidArgument(
                "all pivots must have the same length".into(),
            ));
        }
        for &e in a.iter().chain(x) {
            if e >= group.degree() {
                return Err(Error::ElementOutOfRange(e));
            }
        }
    }
    let masks: Vec<Vec<bool>> = pairs
        .iter()
        .map(|(a, _)| crate::semigroup::vec_to_mask(group.degree(), a))
        .collect();
    for phi in group {
        for (a_i, x_i) in pairs {
            let image = phi.apply_tuple(x_i);
            for (j, (_, x_j)) in pairs.iter().enumerate() {
                if image.0 == *x_j && !a_i.iter().all(|&a| masks[j][phi.apply(a)]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Maximal proper characteristic ideals of `s`, as candidate sets.
///
/// Characteristic ideals are the down-closed unions of 1-orbits in the
/// preorder `O ≥ O'` iff `O' ⊆ S¹OS¹`. A maximal proper one is the complement
/// of a top strongly connected component.
pub fn maximal_characteristic_ideals(s: &FiniteSemigroup, group: &AutGroup) -> Vec<Vec<usize>> {
    let k = s.order();
    let orbit_part = point_orbits(group);
    let orbits = orbit_part.blocks();
    let m = orbits.len();
    // above[o][p]: p ⊆ J(o)
    let mut reach = vec![vec![false; m]; m];
    for (o, members) in orbits.iter().enumerate() {
        let ideal = two_sided_ideal_mask(s, members[0]);
        for x in 0..k {
            if ideal[x] {
                reach[o][orbit_part.block_of(x)] = true;
            }
        }
    }
    for via in 0..m {
        for a in 0..m {
            if reach[a][via] {
                for b in 0..m {
                    if reach[via][b] {
                        reach[a][b] = true;
                    }
                }
            }
        }
    }
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for o in 0..m {
        // o lies in a top component when everything reaching o is reached by o
        let top = (0..m).all(|p| !reach[p][o] || reach[o][p]);
        if !top {
            continue;
        }
        let component: Vec<usize> = (0..m).filter(|&p| reach[o][p] && reach[p][o]).collect();
        if component.iter().any(|&p| p < o) {
            continue;
        }
        let mut rest: Vec<usize> = (0..k)
            .filter(|&x| !component.contains(&orbit_part.block_of(x)))
            .collect();
        rest.sort_unstable();
        candidates.push(rest);
    }
    candidates.sort();
    candidates
}

/// `S = S₀ ⊃ S₁ ⊃ … ⊃ S_n`, each `S_{i+1}` a maximal proper characteristic
/// ideal of `S_i` (lexicographically least when several exist). Sets are
/// given in the indices of `s`.
pub fn characteristic_ideal_tower(s: &FiniteSemigroup) -> Result<Vec<Vec<usize>>> {
    let mut tower = vec![s.elements().collect::<Vec<usize>>()];
    let mut current = s.clone();
    let mut embedding: Vec<usize> = s.elements().collect();
    loop {
        let group = automorphism_group(&current)?;
        let candidates = maximal_characteristic_ideals(&current, &group);
        let next = candidates.into_iter().next().unwrap_or_default();
        if next.is_empty() {
            break;
        }
        debug_assert!(current.is_ideal(&next) && is_characteristic_in(&group, &next));
        let (sub, local) = current.restrict(&next)?;
        embedding = local.iter().map(|&x| embedding[x]).collect();
        tower.push(embedding.clone());
        current = sub;
    }
    Ok(tower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic_group, example_c, null_semigroup};
    use crate::green::{green_relations, principal_ideal};

    #[test]
    fn idempotents_are_characteristic() {
        for s in [null_semigroup(3), example_c(3), cyclic_group(4)] {
            assert!(is_characteristic(&s, &s.idempotents()).unwrap());
        }
        assert!(!is_characteristic(&null_semigroup(2), &[1]).unwrap());
    }

    #[test]
    fn null_report() {
        let r = characteristic_closure_report(&null_semigroup(2)).unwrap();
        assert_eq!(r.tau, 2);
        assert_eq!(r.characteristic_subsets, 4);
        assert_eq!(r.orbits, vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn prc_systems() {
        let s = example_c(3);
        let g = automorphism_group(&s).unwrap();
        let ideals: Vec<PivotedSet> = s
            .elements()
            .map(|a| (principal_ideal(&s, a), vec![a]))
            .collect();
        assert!(is_prc_system(&g, &ideals).unwrap());
        let h = green_relations(&s).h;
        let hs: Vec<PivotedSet> = s.elements().map(|a| (h.class_of(a), vec![a])).collect();
        assert!(is_prc_system(&g, &hs).unwrap());

        let n = null_semigroup(2);
        let gn = automorphism_group(&n).unwrap();
        assert!(is_prc_system(&gn, &[(vec![1], vec![2])]).unwrap());
        assert!(!is_prc_system(&gn, &[(vec![1], vec![0])]).unwrap());
    }

    #[test]
    fn towers() {
        assert_eq!(
            characteristic_ideal_tower(&null_semigroup(2)).unwrap(),
            vec![vec![0, 1, 2], vec![0]]
        );
        assert_eq!(characteristic_ideal_tower(&cyclic_group(3)).unwrap().len(), 1);
        assert_eq!(
            characteristic_ideal_tower(&example_c(3)).unwrap(),
            vec![vec![0, 1, 2, 3, 4], vec![0, 1], vec![0]]
        );
    }
}
