use crate::aut::Automorphism;
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

fn build(order: usize, f: impl FnMut(usize, usize) -> usize, names: Vec<String>) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(order, f)
        .and_then(|s| s.with_names(names))
        .expect("construction yields a valid semigroup")
}

/// `N_m⁰`: zero at index 0 and `m` further elements with every product zero.
pub fn null_semigroup(m: usize) -> FiniteSemigroup {
    let names = std::iter::once("0".to_string())
        .chain((1..=m).map(|i| format!("x{i}")))
        .collect();
    build(m + 1, |_, _| 0, names)
}

/// `L_m`: `xy = x`.
pub fn left_zero_band(m: usize) -> FiniteSemigroup {
    assert!(m >= 1, "left zero band needs at least one element");
    build(m, |x, _| x, (1..=m).map(|i| format!("l{i}")).collect())
}

/// The chain `0 < 1 < … < m-1` under minimum.
pub fn chain_semilattice(m: usize) -> FiniteSemigroup {
    assert!(m >= 1, "chain needs at least one element");
    build(m, |x, y| x.min(y), (0..m).map(|i| format!("e{i}")).collect())
}

/// `{0, a, b, 1}` under meet, with `a ∧ b = 0`.
pub fn diamond_semilattice() -> FiniteSemigroup {
    build(
        4,
        |x, y| match (x, y) {
            _ if x == y => x,
            (3, _) => y,
            (_, 3) => x,
            _ => 0,
        },
        ["0", "a", "b", "1"].map(String::from).to_vec(),
    )
}

/// `Z_n` under addition.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    assert!(n >= 1, "cyclic group needs at least one element");
    build(n, |x, y| (x + y) % n, (0..n).map(|i| i.to_string()).collect())
}

/// `Z₂ × Z₂` as bitwise xor on `0..4`.
pub fn klein_four() -> FiniteSemigroup {
    build(4, |x, y| x ^ y, ["e", "a", "b", "c"].map(String::from).to_vec())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
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

/// `S_n` on lexicographically ordered permutations, `p·q` meaning `p` then `q`.
pub fn symmetric_group(n: usize) -> FiniteSemigroup {
    assert!((1..=5).contains(&n), "symmetric group degree limited to 1..=5");
    let perms = permutations(n);
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let names = perms
        .iter()
        .map(|p| p.iter().map(|x| x.to_string()).collect::<String>())
        .collect();
    build(
        perms.len(),
        |a, b| {
            let composed: Vec<usize> = perms[a].iter().map(|&x| perms[b][x]).collect();
            index(&composed)
        },
        names,
    )
}

/// Small groups by name: `Z1`…`Z12`, `K4`/`V4`, `S3`.
pub fn group_by_name(name: &str) -> Result<FiniteSemigroup> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "trivial" => return Ok(cyclic_group(1)),
        "k4" | "v4" | "klein" | "klein4" => return Ok(klein_four()),
        "s3" => return Ok(symmetric_group(3)),
        "s4" => return Ok(symmetric_group(4)),
        _ => {}
    }
    if let Some(n) = lower.strip_prefix('z').and_then(|d| d.parse::<usize>().ok()) {
        if (1..=64).contains(&n) {
            return Ok(cyclic_group(n));
        }
    }
    Err(Error::InvalidArgument(format!("unknown group {name:?}")))
}

/// A finite chain of semigroups, listed from the bottom up: for components
/// `i > j`, `s_i s_j = s_j = s_j s_i`.
pub fn chain_of_semigroups(components: &[FiniteSemigroup]) -> Result<FiniteSemigroup> {
    if components.is_empty() {
        return Err(Error::InvalidArgument("chain needs at least one component".into()));
    }
    let mut owner = Vec::new();
    let mut local = Vec::new();
    let mut offset = Vec::new();
    let mut names = Vec::new();
    for (c, s) in components.iter().enumerate() {
        offset.push(owner.len());
        for x in s.elements() {
            owner.push(c);
            local.push(x);
            names.push(if components.len() == 1 {
                s.name(x)
            } else {
                format!("{}_{c}", s.name(x))
            });
        }
    }
    let k = owner.len();
    let s = FiniteSemigroup::from_fn(k, |a, b| {
        let (ca, cb) = (owner[a], owner[b]);
        match ca.cmp(&cb) {
            std::cmp::Ordering::Equal => offset[ca] + components[ca].mul(local[a], local[b]),
            std::cmp::Ordering::Greater => b,
            std::cmp::Ordering::Less => a,
        }
    })?;
    s.with_names(names)
}

/// `B⁰[G; m]`: zero at index 0, `(i, g, j)` at `1 + i·|G|·m + g·m + j`.
pub fn brandt(g: &FiniteSemigroup, m: usize) -> Result<FiniteSemigroup> {
    if !g.is_group() {
        return Err(Error::NotAGroup);
    }
    if m == 0 {
        return Err(Error::InvalidArgument("Brandt index set must be non-empty".into()));
    }
    let n = g.order();
    let decode = |x: usize| {
        let y = x - 1;
        (y / (n * m), (y / m) % n, y % m)
    };
    let encode = |i: usize, h: usize, j: usize| 1 + i * n * m + h * m + j;
    let mut names = vec!["0".to_string()];
    for i in 0..m {
        for h in 0..n {
            for j in 0..m {
                names.push(format!("({},{},{})", i + 1, g.name(h), j + 1));
            }
        }
    }
    let s = FiniteSemigroup::from_fn(1 + m * m * n, |a, b| {
        if a == 0 || b == 0 {
            return 0;
        }
        let (i, x, j) = decode(a);
        let (k, y, l) = decode(b);
        if j == k {
            encode(i, g.mul(x, y), l)
        } else {
            0
        }
    })?;
    s.with_names(names)
}

/// The map `(i, g, j) ↦ (iπ, gθ, jπ)` on `B⁰[G; m]`, checked to be an automorphism.
pub fn brandt_automorphism(
    g: &FiniteSemigroup,
    m: usize,
    theta: &Automorphism,
    pi: &[usize],
) -> Result<Automorphism> {
    let b = brandt(g, m)?;
    theta.check(g)?;
    let mut seen = vec![false; m];
    if pi.len() != m || pi.iter().any(|&x| x >= m || std::mem::replace(&mut seen[x], true)) {
        return Err(Error::NotAnAutomorphism("π is not a permutation of the index set".into()));
    }
    let n = g.order();
    let mut images = vec![0; b.order()];
    for i in 0..m {
        for h in 0..n {
            for j in 0..m {
                images[1 + i * n * m + h * m + j] = 1 + pi[i] * n * m + theta.apply(h) * m + pi[j];
            }
        }
    }
    Automorphism::new(&b, images)
}

/// Cartesian product with componentwise multiplication; first factor most significant.
pub fn direct_product(factors: &[FiniteSemigroup]) -> Result<FiniteSemigroup> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument("product needs at least one factor".into()));
    }
    let orders: Vec<usize> = factors.iter().map(FiniteSemigroup::order).collect();
    let k: usize = orders.iter().product();
    let decode = |mut x: usize| {
        let mut coords = vec![0; orders.len()];
        for (c, &o) in coords.iter_mut().zip(&orders).rev() {
            *c = x % o;
            x /= o;
        }
        coords
    };
    let coords: Vec<Vec<usize>> = (0..k).map(decode).collect();
    let names = coords
        .iter()
        .map(|c| {
            let parts: Vec<String> = c.iter().zip(factors).map(|(&x, f)| f.name(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let s = FiniteSemigroup::from_fn(k, |a, b| {
        coords[a]
            .iter()
            .zip(&coords[b])
            .zip(factors)
            .fold(0, |acc, ((&x, &y), f)| acc * f.order() + f.mul(x, y))
    })?;
    s.with_names(names)
}

/// Finite direct sum of monoids, which coincides with the direct product.
pub fn direct_sum_of_monoids(factors: &[FiniteSemigroup]) -> Result<FiniteSemigroup> {
    if let Some(i) = factors.iter().position(|f| f.identity().is_none()) {
        return Err(Error::NotAMonoid(i));
    }
    direct_product(factors)
}

/// `⊔⁰ S_i`: the zeros are amalgamated at index 0, followed by the non-zero
/// elements of each factor in turn; cross products are zero.
pub fn zero_direct_union(factors: &[FiniteSemigroup]) -> Result<FiniteSemigroup> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument("union needs at least one factor".into()));
    }
    let mut owner = vec![usize::MAX];
    let mut local = vec![0];
    let mut global: Vec<Vec<usize>> = Vec::new();
    let mut names = vec!["0".to_string()];
    for (i, f) in factors.iter().enumerate() {
        let z = f.zero().ok_or(Error::NoZero)?;
        if f.order() == 1 {
            return Err(Error::TrivialSummand(i));
        }
        let mut map = vec![0; f.order()];
        for x in f.elements().filter(|&x| x != z) {
            map[x] = owner.len();
            owner.push(i);
            local.push(x);
            names.push(if factors.len() == 1 {
                f.name(x)
            } else {
                format!("{}_{}", f.name(x), i + 1)
            });
        }
        global.push(map);
    }
    let s = FiniteSemigroup::from_fn(owner.len(), |a, b| {
        if a == 0 || b == 0 || owner[a] != owner[b] {
            return 0;
        }
        let i = owner[a];
        global[i][factors[i].mul(local[a], local[b])]
    })?;
    s.with_names(names)
}

/// `[B]` for the Boolean algebra of subsets of an `m`-set: the non-empty
/// subsets (element `mask - 1`) with `A + A' = A ∪ A'` when disjoint and the
/// top element otherwise. The top is the zero and sits at the last index.
pub fn boolean_zs(m: usize) -> FiniteSemigroup {
    assert!((1..=16).contains(&m), "boolean_zs supports 1..=16 atoms");
    let top = (1usize << m) - 1;
    let names = (1..=top)
        .map(|mask| {
            let atoms: Vec<String> = (0..m)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| (b + 1).to_string())
                .collect();
            format!("{{{}}}", atoms.join(","))
        })
        .collect();
    build(
        top,
        |a, b| {
            let (x, y) = (a + 1, b + 1);
            if x & y == 0 {
                (x | y) - 1
            } else {
                top - 1
            }
        },
        names,
    )
}

/// `C = A ∪ {0, u}` with `|A| = m`: index 0 is the zero, 1 is `u`, then `A`;
/// the only non-zero products are `ab = u` for distinct `a, b ∈ A`.
pub fn example_c(m: usize) -> FiniteSemigroup {
    let names = ["0".to_string(), "u".to_string()]
        .into_iter()
        .chain((1..=m).map(|i| format!("a{i}")))
        .collect();
    build(m + 2, |x, y| (x >= 2 && y >= 2 && x != y) as usize, names)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{are_isomorphic, automorphism_group};
    use crate::green::green_relations;

    #[test]
    fn null_and_bands() {
        let n = null_semigroup(2);
        assert_eq!(n.order(), 3);
        assert_eq!(n.zero(), Some(0));
        let l = left_zero_band(2);
        assert!(l.is_band());
        let g = green_relations(&l);
        assert!(g.r.is_identity());
        assert!(g.l.is_universal());
        let n1 = null_semigroup(1);
        assert!(!n1.is_semilattice());
        assert_ne!(n1.flat_table(), chain_semilattice(2).flat_table());
    }

    #[test]
    fn groups() {
        assert!(symmetric_group(3).is_group());
        assert!(!symmetric_group(3).is_commutative());
        assert!(klein_four().is_group());
        assert_eq!(group_by_name("Z4").unwrap().order(), 4);
        assert!(group_by_name("Q8").is_err());
        assert!(are_isomorphic(&direct_product(&[cyclic_group(2), cyclic_group(2)]).unwrap(), &klein_four()).unwrap());
    }

    #[test]
    fn chains() {
        let t = cyclic_group(1);
        let c = chain_of_semigroups(&[t.clone(), t]).unwrap();
        assert_eq!(c.flat_table(), chain_semilattice(2).flat_table());
        let c = chain_of_semigroups(&[cyclic_group(2), cyclic_group(3)]).unwrap();
        assert_eq!(c.order(), 5);
        assert_eq!(automorphism_group(&c).unwrap().order(), 2);
        let single = chain_of_semigroups(&[example_c(2)]).unwrap();
        assert_eq!(single.flat_table(), example_c(2).flat_table());
    }

    #[test]
    fn brandt_basics() {
        let b = brandt(&cyclic_group(2), 2).unwrap();
        assert_eq!(b.order(), 9);
        assert_eq!(b.idempotents().len(), 3);
        assert!(b.is_inverse());
        let t = brandt(&cyclic_group(1), 1).unwrap();
        assert!(t.is_semilattice());
        assert_eq!(t.order(), 2);
        assert_eq!(brandt(&null_semigroup(1), 2), Err(Error::NotAGroup));

        let swap = brandt_automorphism(&cyclic_group(2), 2, &Automorphism::identity(2), &[1, 0]).unwrap();
        let aut = automorphism_group(&b).unwrap();
        // m!·|Aut(G)|·|G|^(m-1): the swap together with inner rescalings
        assert_eq!(aut.order(), 4);
        assert!(aut.contains(&swap) && !swap.is_identity());
    }

    #[test]
    fn products_and_unions() {
        let p = direct_product(&[left_zero_band(2), chain_semilattice(2)]).unwrap();
        assert_eq!(p.order(), 4);
        let s = example_c(2);
        let q = direct_product(&[s.clone(), cyclic_group(1)]).unwrap();
        assert!(are_isomorphic(&q, &s).unwrap());
        assert_eq!(direct_sum_of_monoids(&[null_semigroup(1)]), Err(Error::NotAMonoid(0)));

        let u = zero_direct_union(&[null_semigroup(1), null_semigroup(1)]).unwrap();
        assert_eq!(u.flat_table(), null_semigroup(2).flat_table());
        let b1 = brandt(&cyclic_group(2), 1).unwrap();
        let u = zero_direct_union(&[b1.clone(), b1.clone()]).unwrap();
        assert_eq!(u.order(), 5);
        assert!(u.is_inverse());
        assert_eq!(zero_direct_union(std::slice::from_ref(&b1)).unwrap().flat_table(), b1.flat_table());
        assert_eq!(zero_direct_union(&[cyclic_group(2)]), Err(Error::NoZero));
        assert_eq!(zero_direct_union(&[b1, cyclic_group(1)]), Err(Error::TrivialSummand(1)));
    }

    #[test]
    fn nil_examples() {
        let z = boolean_zs(2);
        assert_eq!(z.order(), 3);
        assert_eq!(z.zero(), Some(2));
        assert_eq!(z.nil_degree().unwrap(), Some(2));
        assert!(z.is_commutative());
        let c = example_c(3);
        assert_eq!(c.nil_degree().unwrap(), Some(2));
        assert_eq!(c.nilpotency_degree().unwrap(), Some(3));
        assert_eq!(c.index_period(2), (2, 1));
    }
}
