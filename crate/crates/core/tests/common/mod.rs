#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use proptest::prelude::*;
use semicat_core::congruence::{all_congruences, CONGRUENCE_ENUMERATION_LIMIT};
use semicat_core::{FiniteSemigroup, Partition};

/// The semigroup of transformations of `[0, n)` generated by `gens`, composing
/// left to right, or `None` if it exceeds `cap` elements.
pub fn transformation_semigroup(gens: &[Vec<usize>], cap: usize) -> Option<FiniteSemigroup> {
    let mut elems: Vec<Vec<usize>> = Vec::new();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    for g in gens {
        if !index.contains_key(g) {
            index.insert(g.clone(), elems.len());
            elems.push(g.clone());
        }
    }
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let next: Vec<usize> = elems[i].iter().map(|&x| g[x]).collect();
            if !index.contains_key(&next) {
                if elems.len() == cap {
                    return None;
                }
                index.insert(next.clone(), elems.len());
                elems.push(next);
            }
        }
        i += 1;
    }
    let k = elems.len();
    let s = FiniteSemigroup::from_fn(k, |a, b| {
        let prod: Vec<usize> = elems[a].iter().map(|&x| elems[b][x]).collect();
        index[&prod]
    })
    .expect("transformation semigroups are associative");
    Some(s)
}

/// Random transformation semigroups on at most 3 points, optionally with an
/// adjoined zero or identity.
pub fn arb_semigroup(cap: usize) -> impl Strategy<Value = FiniteSemigroup> {
    (1usize..=3)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(prop::collection::vec(0..n, n), 1..=3),
                0u8..3,
            )
        })
        .prop_filter_map("too large", move |(gens, extra)| {
            let s = transformation_semigroup(&gens, cap.saturating_sub(1).max(1))?;
            Some(match extra {
                1 => s.adjoin_zero(),
                2 => s.adjoin_identity(),
                _ => s,
            })
        })
}

/// Random transformation semigroups with a zero adjoined.
pub fn arb_zero_semigroup(cap: usize) -> impl Strategy<Value = FiniteSemigroup> {
    arb_semigroup(cap.saturating_sub(1)).prop_map(|s| s.adjoin_zero())
}

/// A random partition of `[0, k)` from block labels.
pub fn partition_from_labels(labels: &[usize]) -> Partition {
    Partition::from_keys(labels)
}

/// Every permutation of `[0, n)` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Automorphisms by trying every permutation.
pub fn brute_automorphisms(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
    permutations(s.order())
        .into_iter()
        .filter(|p| {
            s.elements()
                .all(|a| s.elements().all(|b| p[s.mul(a, b)] == s.mul(p[a], p[b])))
        })
        .collect()
}

/// Orbit count of a set of permutations on `domainⁿ`, by explicit orbit sweeps.
pub fn brute_orbit_count(perms: &[Vec<usize>], domain: &[usize], n: usize) -> usize {
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                domain.iter().map(move |&x| {
                    let mut u = t.clone();
                    u.push(x);
                    u
                })
            })
            .collect();
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut count = 0;
    for t in tuples {
        if seen.contains(&t) {
            continue;
        }
        count += 1;
        for p in perms {
            seen.insert(t.iter().map(|&x| p[x]).collect());
        }
    }
    count
}

/// All congruences, via the exhaustive oracle.
pub fn congruences(s: &FiniteSemigroup) -> Vec<Partition> {
    all_congruences(s, CONGRUENCE_ENUMERATION_LIMIT).expect("small order")
}

/// `aS¹ = bS¹`, straight from the definition.
pub fn r_related(s: &FiniteSemigroup, a: usize, b: usize) -> bool {
    let ideal = |x: usize| -> HashSet<usize> {
        let mut set: HashSet<usize> = s.elements().map(|y| s.mul(x, y)).collect();
        set.insert(x);
        set
    };
    ideal(a) == ideal(b)
}

/// `S¹a = S¹b`, straight from the definition.
pub fn l_related(s: &FiniteSemigroup, a: usize, b: usize) -> bool {
    let ideal = |x: usize| -> HashSet<usize> {
        let mut set: HashSet<usize> = s.elements().map(|y| s.mul(y, x)).collect();
        set.insert(x);
        set
    };
    ideal(a) == ideal(b)
}
