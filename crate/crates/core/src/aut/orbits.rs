//! Orbits of an automorphism group on `n`-tuples, and on tuples of classes.
//!
//! Tuples over a domain of size `d` are encoded as base-`d` integers with the
//! first coordinate most significant, so numeric order on codes is the
//! lexicographic order on tuples.

use serde::{Deserialize, Serialize};

use crate::aut::group::AutGroup;
use crate::aut::search::automorphism_group;
use crate::error::{Error, Result};
use crate::partition::{Partition, UnionFind};
use crate::semigroup::{ElementTuple, FiniteSemigroup};

/// Which subgroup of `Aut(S)` an orbit report refers to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupDescription {
    Full,
    PointwiseStabilizer { fixed: Vec<usize> },
    SetwiseStabilizer { sets: Vec<Vec<usize>> },
    Preserving { partition: Partition },
    Given,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub n: usize,
    pub group: GroupDescription,
    pub group_order: usize,
    pub orbit_count: u64,
    /// Lexicographically least tuple of each orbit, in increasing order.
    pub representatives: Vec<ElementTuple>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitStrategy {
    /// Union-find when the tuple space fits `union_find_limit`, canonical forms otherwise.
    Auto,
    UnionFind,
    CanonicalForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitOptions {
    pub strategy: OrbitStrategy,
    /// Largest tuple space handled with a union-find table.
    pub union_find_limit: u64,
    /// Largest tuple space handled at all.
    pub max_tuples: u64,
    pub representatives: bool,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions {
            strategy: OrbitStrategy::Auto,
            union_find_limit: 10_000_000,
            max_tuples: 100_000_000,
            representatives: true,
        }
    }
}

/// Orbit count and representatives of `group` on `domainⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleOrbits {
    pub count: u64,
    pub representatives: Vec<ElementTuple>,
}

struct Domain {
    elements: Vec<usize>,
    /// `perms[g][i]`: position of `g(elements[i])`.
    perms: Vec<Vec<usize>>,
}

impl Domain {
    fn new(group: &AutGroup, domain: &[usize], use_generators: bool) -> Result<Domain> {
        let mut elements = domain.to_vec();
        elements.sort_unstable();
        elements.dedup();
        let mut pos = vec![usize::MAX; group.degree()];
        for (i, &x) in elements.iter().enumerate() {
            if x >= group.degree() {
                return Err(Error::ElementOutOfRange(x));
            }
            pos[x] = i;
        }
        let maps: Vec<_> = if use_generators {
            group.generators()
        } else {
            group.elements().to_vec()
        };
        let mut perms = Vec::with_capacity(maps.len());
        for phi in &maps {
            let mut p = Vec::with_capacity(elements.len());
            for &x in &elements {
                let y = pos[phi.apply(x)];
                if y == usize::MAX {
                    return Err(Error::InvalidArgument(format!(
                        "domain is not invariant: {x} leaves it"
                    )));
                }
                p.push(y);
            }
            perms.push(p);
        }
        Ok(Domain { elements, perms })
    }

    fn decode(&self, mut code: u64, n: usize) -> ElementTuple {
        let d = self.elements.len() as u64;
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = self.elements[(code % d) as usize];
            code /= d;
        }
        ElementTuple(t)
    }
}

fn image_code(perm: &[usize], code: u64, n: usize, d: u64) -> u64 {
    let mut rest = code;
    let mut out = 0u64;
    let mut place = 1u64;
    for _ in 0..n {
        let digit = (rest % d) as usize;
        rest /= d;
        out += perm[digit] as u64 * place;
        place *= d;
    }
    out
}

fn tuple_space(d: usize, n: usize, max: u64) -> Result<u64> {
    let size = (d as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > max as u128 {
        return Err(Error::TupleSpaceTooLarge { size, limit: max });
    }
    Ok(size as u64)
}

/// Union-find over tuple codes whose roots are the least codes of their components.
struct MinUnionFind {
    parent: Vec<u32>,
}

impl MinUnionFind {
    fn new(n: u64) -> Self {
        MinUnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[x as usize] != root {
            let next = self.parent[x as usize];
            self.parent[x as usize] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

fn union_find_orbits(dom: &Domain, n: usize, size: u64) -> MinUnionFind {
    let d = dom.elements.len() as u64;
    let mut uf = MinUnionFind::new(size);
    for perm in &dom.perms {
        for code in 0..size {
            let img = image_code(perm, code, n, d);
            if img != code {
                uf.union(code as u32, img as u32);
            }
        }
    }
    uf
}

/// Orbits of `group` acting coordinatewise on `domainⁿ`; the domain must be invariant.
pub fn tuple_orbits(
    group: &AutGroup,
    domain: &[usize],
    n: usize,
    opts: &OrbitOptions,
) -> Result<TupleOrbits> {
    if n == 0 {
        return Err(Error::InvalidArgument("tuple length must be at least 1".into()));
    }
    let mut sorted = domain.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() {
        return Ok(TupleOrbits {
            count: 0,
            representatives: Vec::new(),
        });
    }
    let size = tuple_space(sorted.len(), n, opts.max_tuples)?;
    let use_uf = match opts.strategy {
        OrbitStrategy::UnionFind => true,
        OrbitStrategy::CanonicalForm => false,
        OrbitStrategy::Auto => size <= opts.union_find_limit,
    };
    if use_uf && size > u32::MAX as u64 {
        return Err(Error::TupleSpaceTooLarge {
            size: size as u128,
            limit: u32::MAX as u64,
        });
    }
    let dom = Domain::new(group, &sorted, use_uf)?;
    let d = dom.elements.len() as u64;
    let mut count = 0u64;
    let mut representatives = Vec::new();
    if use_uf {
        let mut uf = union_find_orbits(&dom, n, size);
        for code in 0..size {
            if uf.find(code as u32) == code as u32 {
                count += 1;
                if opts.representatives {
                    representatives.push(dom.decode(code, n));
                }
            }
        }
    } else {
        for code in 0..size {
            let least = dom
                .perms
                .iter()
                .all(|perm| image_code(perm, code, n, d) >= code);
            if least {
                count += 1;
                if opts.representatives {
                    representatives.push(dom.decode(code, n));
                }
            }
        }
    }
    Ok(TupleOrbits {
        count,
        representatives,
    })
}

/// The orbit partition of `domainⁿ`, indexed by tuple code.
pub fn orbit_partition(group: &AutGroup, domain: &[usize], n: usize) -> Result<Partition> {
    let mut sorted = domain.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let opts = OrbitOptions::default();
    let size = tuple_space(sorted.len(), n, opts.union_find_limit)?;
    let dom = Domain::new(group, &sorted, true)?;
    let mut uf = union_find_orbits(&dom, n, size);
    let keys: Vec<u32> = (0..size as u32).map(|c| uf.find(c)).collect();
    Ok(Partition::from_keys(&keys))
}

/// `∼_{S,n}`-style report for an explicit subgroup of `Aut(S)`.
pub fn orbit_report(
    s: &FiniteSemigroup,
    n: usize,
    group: &AutGroup,
    description: GroupDescription,
    opts: &OrbitOptions,
) -> Result<OrbitReport> {
    if group.degree() != s.order() {
        return Err(Error::InvalidArgument(format!(
            "group acts on {} points, semigroup has {}",
            group.degree(),
            s.order()
        )));
    }
    let all: Vec<usize> = s.elements().collect();
    let orbits = tuple_orbits(group, &all, n, opts)?;
    Ok(OrbitReport {
        n,
        group: description,
        group_order: group.order(),
        orbit_count: orbits.count,
        representatives: orbits.representatives,
    })
}

/// Orbits of `group` on `Sⁿ`, with default options.
pub fn orbit_count(s: &FiniteSemigroup, n: usize, group: &AutGroup) -> Result<OrbitReport> {
    orbit_report(s, n, group, GroupDescription::Given, &OrbitOptions::default())
}

/// `|Sⁿ/∼_{S,n}|` under the full automorphism group.
pub fn full_orbit_count(s: &FiniteSemigroup, n: usize) -> Result<u64> {
    let g = automorphism_group(s)?;
    Ok(orbit_report(s, n, &g, GroupDescription::Full, &OrbitOptions {
        representatives: false,
        ..OrbitOptions::default()
    })?
    .orbit_count)
}

/// `τ(S) = |S/∼_{S,1}|`.
pub fn tau(s: &FiniteSemigroup) -> Result<u64> {
    full_orbit_count(s, 1)
}

/// Number of classes of `#_{S,τ,n}`: tuples of `τ`-classes related when some
/// automorphism carries each class exactly onto the corresponding class.
pub fn class_orbit_count(s: &FiniteSemigroup, tau: &Partition, n: usize) -> Result<u64> {
    let g = automorphism_group(s)?;
    class_orbit_count_with(&g, tau, n, &OrbitOptions::default())
}

pub fn class_orbit_count_with(
    group: &AutGroup,
    tau: &Partition,
    n: usize,
    opts: &OrbitOptions,
) -> Result<u64> {
    if tau.len() != group.degree() {
        return Err(Error::InvalidPartition("size mismatch".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("tuple length must be at least 1".into()));
    }
    let c = tau.num_blocks();
    let size = tuple_space(c, n, opts.union_find_limit.min(u32::MAX as u64))?;
    let blocks = tau.blocks();
    // partial maps on classes: a class maps only if its image is exactly a class
    let class_maps: Vec<Vec<Option<usize>>> = group
        .iter()
        .map(|phi| {
            blocks
                .iter()
                .map(|b| {
                    let target = tau.block_of(phi.apply(b[0]));
                    let ok = b.len() == blocks[target].len()
                        && b.iter().all(|&x| tau.block_of(phi.apply(x)) == target);
                    ok.then_some(target)
                })
                .collect()
        })
        .collect();
    let mut uf = MinUnionFind::new(size);
    let cc = c as u64;
    for code in 0..size {
        for map in &class_maps {
            let mut rest = code;
            let mut img = 0u64;
            let mut place = 1u64;
            let mut defined = true;
            for _ in 0..n {
                match map[(rest % cc) as usize] {
                    Some(t) => img += t as u64 * place,
                    None => {
                        defined = false;
                        break;
                    }
                }
                rest /= cc;
                place *= cc;
            }
            if defined && img != code {
                uf.union(code as u32, img as u32);
            }
        }
    }
    Ok((0..size).filter(|&x| uf.find(x as u32) == x as u32).count() as u64)
}

/// The 1-orbits of a group, as a partition of the points.
pub fn point_orbits(group: &AutGroup) -> Partition {
    let mut uf = UnionFind::new(group.degree());
    for phi in group.generators() {
        for x in 0..group.degree() {
            uf.union(x, phi.apply(x));
        }
    }
    uf.into_partition()
}
