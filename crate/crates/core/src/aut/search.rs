//! Backtracking search for automorphisms and isomorphisms.
//!
//! A map out of `S` is fixed by the images of a generating set. The search
//! assigns generator images one at a time, restricted to elements with the
//! same invariant vector, and propagates each assignment through the products
//! of already-mapped elements. Any clash prunes the branch.

use crate::aut::group::{AutGroup, Automorphism};
use crate::error::{Error, Result};
use crate::green::green_relations;
use crate::semigroup::FiniteSemigroup;

/// Node budget for a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub node_limit: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_limit: 50_000_000,
        }
    }
}

/// Isomorphism-invariant data attached to each element; computed once per semigroup.
pub fn element_invariants(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
    let g = green_relations(s);
    let k = s.order();
    let sizes = |p: &crate::partition::Partition| -> Vec<usize> {
        let mut counts = vec![0; p.num_blocks()];
        for x in 0..k {
            counts[p.block_of(x)] += 1;
        }
        (0..k).map(|x| counts[p.block_of(x)]).collect()
    };
    let (rs, ls, hs, js) = (sizes(&g.r), sizes(&g.l), sizes(&g.h), sizes(&g.j));
    let mut occurrences = vec![0; k];
    for &p in s.flat_table() {
        occurrences[p] += 1;
    }
    let squares_of: Vec<usize> = (0..k)
        .map(|a| s.elements().filter(|&x| s.mul(x, x) == a).count())
        .collect();
    let basic: Vec<Vec<usize>> = s
        .elements()
        .map(|a| {
            let (index, period) = s.index_period(a);
            vec![
                s.is_idempotent(a) as usize,
                index,
                period,
                rs[a],
                ls[a],
                hs[a],
                js[a],
                occurrences[a],
                squares_of[a],
                s.elements().filter(|&x| s.mul(x, a) == a).count(),
                s.elements().filter(|&x| s.mul(a, x) == a).count(),
                s.elements().filter(|&x| s.mul(x, a) == x).count(),
                s.elements().filter(|&x| s.mul(a, x) == x).count(),
                (s.zero() == Some(a)) as usize,
                (s.identity() == Some(a)) as usize,
            ]
        })
        .collect();
    // one round of refinement: the sorted multiset of (invariant of x, invariant of ax, invariant of xa)
    let ids = dense_ids(&basic);
    s.elements()
        .map(|a| {
            let mut row: Vec<(usize, usize, usize)> = s
                .elements()
                .map(|x| (ids[x], ids[s.mul(a, x)], ids[s.mul(x, a)]))
                .collect();
            row.sort_unstable();
            let mut v = basic[a].clone();
            v.push(ids[s.mul(a, a)]);
            v.extend(row.into_iter().flat_map(|(p, q, r)| [p, q, r]));
            v
        })
        .collect()
}

fn dense_ids(keys: &[Vec<usize>]) -> Vec<usize> {
    let mut sorted: Vec<&Vec<usize>> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).unwrap())
        .collect()
}

/// Picks a generating set: non-products first, then elements with rare invariants.
fn choose_generators(s: &FiniteSemigroup, inv: &[Vec<usize>]) -> Vec<usize> {
    let k = s.order();
    let mut class_size = vec![0usize; k];
    for a in 0..k {
        class_size[a] = inv.iter().filter(|v| **v == inv[a]).count();
    }
    let indecomposable = crate::semigroup::vec_to_mask(k, &s.indecomposables());
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&a| (!indecomposable[a], class_size[a], a));
    let mut gens = Vec::new();
    let mut covered = vec![false; k];
    for a in order {
        if covered[a] {
            continue;
        }
        gens.push(a);
        for x in s.generated_by(&gens) {
            covered[x] = true;
        }
        if covered.iter().all(|&c| c) {
            break;
        }
    }
    gens
}

struct Matcher<'a> {
    src: &'a FiniteSemigroup,
    dst: &'a FiniteSemigroup,
    src_class: Vec<usize>,
    dst_class: Vec<usize>,
    gens: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
    nodes: u64,
    limit: u64,
    find_all: bool,
    found: Vec<Vec<usize>>,
}

const UNSET: usize = usize::MAX;

impl<'a> Matcher<'a> {
    fn new(
        src: &'a FiniteSemigroup,
        dst: &'a FiniteSemigroup,
        opts: SearchOptions,
        find_all: bool,
    ) -> Option<Self> {
        let si = element_invariants(src);
        let di = element_invariants(dst);
        let mut all: Vec<&Vec<usize>> = si.iter().chain(di.iter()).collect();
        all.sort();
        all.dedup();
        let id = |v: &Vec<usize>| all.binary_search(&v).unwrap();
        let src_class: Vec<usize> = si.iter().map(id).collect();
        let dst_class: Vec<usize> = di.iter().map(id).collect();
        let mut a = src_class.clone();
        let mut b = dst_class.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
        let gens = choose_generators(src, &si);
        let k = src.order();
        Some(Matcher {
            src,
            dst,
            src_class,
            dst_class,
            gens,
            map: vec![UNSET; k],
            used: vec![false; k],
            assigned: Vec::with_capacity(k),
            nodes: 0,
            limit: opts.node_limit,
            find_all,
            found: Vec::new(),
        })
    }

    fn assign(&mut self, x: usize, y: usize) -> bool {
        if self.used[y] || self.src_class[x] != self.dst_class[y] {
            return false;
        }
        self.map[x] = y;
        self.used[y] = true;
        self.assigned.push(x);
        true
    }

    fn undo_to(&mut self, len: usize) {
        while self.assigned.len() > len {
            let x = self.assigned.pop().unwrap();
            self.used[self.map[x]] = false;
            self.map[x] = UNSET;
        }
    }

    /// Propagates products starting from the assignments at positions `from..`.
    fn propagate(&mut self, from: usize) -> bool {
        let mut cursor = from;
        while cursor < self.assigned.len() {
            let x = self.assigned[cursor];
            cursor += 1;
            let mut i = 0;
            while i < cursor {
                let y = self.assigned[i];
                i += 1;
                for (p, q) in [(x, y), (y, x)] {
                    let prod = self.src.mul(p, q);
                    let img = self.dst.mul(self.map[p], self.map[q]);
                    let cur = self.map[prod];
                    if cur == UNSET {
                        if !self.assign(prod, img) {
                            return false;
                        }
                    } else if cur != img {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search(&mut self, depth: usize) -> Result<bool> {
        if depth == self.gens.len() {
            debug_assert!(self.map.iter().all(|&m| m != UNSET));
            self.found.push(self.map.clone());
            return Ok(!self.find_all);
        }
        let g = self.gens[depth];
        if self.map[g] != UNSET {
            return self.search(depth + 1);
        }
        for c in 0..self.dst.order() {
            if self.used[c] || self.dst_class[c] != self.src_class[g] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::SearchBudgetExceeded { limit: self.limit });
            }
            let mark = self.assigned.len();
            if self.assign(g, c) && self.propagate(mark) && self.search(depth + 1)? {
                return Ok(true);
            }
            self.undo_to(mark);
        }
        Ok(false)
    }
}

/// All automorphisms of `S`.
pub fn automorphism_group(s: &FiniteSemigroup) -> Result<AutGroup> {
    automorphism_group_with(s, SearchOptions::default())
}

pub fn automorphism_group_with(s: &FiniteSemigroup, opts: SearchOptions) -> Result<AutGroup> {
    let mut m = Matcher::new(s, s, opts, true).expect("S matches itself");
    m.search(0)?;
    let mut elements: Vec<Automorphism> = m
        .found
        .into_iter()
        .map(Automorphism::from_images_unchecked)
        .collect();
    elements.sort();
    for phi in &elements {
        debug_assert!(phi.is_automorphism_of(s));
    }
    let g = AutGroup::from_sorted_unchecked(s.order(), elements);
    g.assert_group();
    Ok(g)
}

/// Some isomorphism `S → T`, as an image array, if one exists.
pub fn find_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<Option<Vec<usize>>> {
    if s.order() != t.order() {
        return Ok(None);
    }
    let Some(mut m) = Matcher::new(s, t, SearchOptions::default(), false) else {
        return Ok(None);
    };
    m.search(0)?;
    Ok(m.found.pop())
}

pub fn are_isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<bool> {
    Ok(find_isomorphism(s, t)?.is_some())
}

/// Checks `map` is an isomorphism `S → T`.
pub fn is_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup, map: &[usize]) -> bool {
    if s.order() != t.order() || map.len() != s.order() {
        return false;
    }
    let mut seen = vec![false; t.order()];
    for &y in map {
        if y >= t.order() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    s.elements()
        .all(|i| s.elements().all(|j| map[s.mul(i, j)] == t.mul(map[i], map[j])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        brandt, chain_semilattice, cyclic_group, klein_four, null_semigroup, symmetric_group,
    };

    /// Brute force over all permutations of the element set.
    fn brute_force_automorphisms(s: &FiniteSemigroup) -> usize {
        fn rec(s: &FiniteSemigroup, perm: &mut Vec<usize>, used: &mut Vec<bool>, count: &mut usize) {
            let k = s.order();
            if perm.len() == k {
                if Automorphism::from_images_unchecked(perm.clone()).is_automorphism_of(s) {
                    *count += 1;
                }
                return;
            }
            for y in 0..k {
                if !used[y] {
                    used[y] = true;
                    perm.push(y);
                    rec(s, perm, used, count);
                    perm.pop();
                    used[y] = false;
                }
            }
        }
        let mut count = 0;
        rec(s, &mut Vec::new(), &mut vec![false; s.order()], &mut count);
        count
    }

    #[test]
    fn null_semigroup_has_swap() {
        let s = null_semigroup(2);
        let g = automorphism_group(&s).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(brute_force_automorphisms(&s), 2);
    }

    #[test]
    fn chains_are_rigid() {
        let s = chain_semilattice(3);
        assert_eq!(automorphism_group(&s).unwrap().order(), 1);
        assert_eq!(brute_force_automorphisms(&s), 1);
    }

    #[test]
    fn brandt_z2_2_has_order_four() {
        let s = brandt(&cyclic_group(2), 2).unwrap();
        assert_eq!(automorphism_group(&s).unwrap().order(), 4);
    }

    #[test]
    fn group_automorphism_orders() {
        assert_eq!(automorphism_group(&cyclic_group(5)).unwrap().order(), 4);
        assert_eq!(automorphism_group(&klein_four()).unwrap().order(), 6);
        assert_eq!(automorphism_group(&symmetric_group(3)).unwrap().order(), 6);
        assert_eq!(automorphism_group(&cyclic_group(4)).unwrap().order(), 2);
    }

    #[test]
    fn search_agrees_with_brute_force_on_small_tables() {
        // every associative table on 3 elements, up to the enumeration below
        let mut checked = 0;
        for code in 0..3usize.pow(9) {
            let mut c = code;
            let table: Vec<usize> = (0..9)
                .map(|_| {
                    let d = c % 3;
                    c /= 3;
                    d
                })
                .collect();
            if let Ok(s) = FiniteSemigroup::from_flat(3, table) {
                assert_eq!(
                    automorphism_group(&s).unwrap().order(),
                    brute_force_automorphisms(&s),
                    "{s:?}"
                );
                checked += 1;
            }
        }
        assert_eq!(checked, 113);
    }

    #[test]
    fn isomorphism_search() {
        let a = null_semigroup(2);
        let b = FiniteSemigroup::from_fn(3, |_, _| 2).unwrap();
        let iso = find_isomorphism(&a, &b).unwrap().unwrap();
        assert!(is_isomorphism(&a, &b, &iso));
        assert!(!are_isomorphic(&a, &chain_semilattice(3)).unwrap());
        assert!(!are_isomorphic(&cyclic_group(4), &klein_four()).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let s = null_semigroup(6);
        let err = automorphism_group_with(&s, SearchOptions { node_limit: 10 }).unwrap_err();
        assert_eq!(err, Error::SearchBudgetExceeded { limit: 10 });
    }
}
