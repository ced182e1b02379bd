//! Built-in instance sets used by the verification suites and tests.

use crate::constructions::{
    boolean_zs, diamond_semilattice, brandt, chain_of_semigroups,
    chain_semilattice, cyclic_group, direct_product, example_c, klein_four, left_zero_band,
    null_semigroup, p_semigroup, symmetric_group, zero_direct_union, FinitePoset,
    McAlisterTriple, SemidirectData,
};
use crate::semigroup::FiniteSemigroup;

/// A named semigroup.
pub type Named<T> = (String, T);

fn named<T>(name: &str, value: T) -> Named<T> {
    (name.to_string(), value)
}

/// Assorted small semigroups covering groups, bands, nil, inverse and
/// completely 0-simple examples.
pub fn small_semigroups() -> Vec<Named<FiniteSemigroup>> {
    let b = |g: FiniteSemigroup, m: usize| brandt(&g, m).expect("groups");
    let b21 = b(cyclic_group(2), 1);
    vec![
        named("trivial", cyclic_group(1)),
        named("Z2", cyclic_group(2)),
        named("Z3", cyclic_group(3)),
        named("Z4", cyclic_group(4)),
        named("K4", klein_four()),
        named("S3", symmetric_group(3)),
        named("N1", null_semigroup(1)),
        named("N2", null_semigroup(2)),
        named("N3", null_semigroup(3)),
        named("N4", null_semigroup(4)),
        named("L2", left_zero_band(2)),
        named("L3", left_zero_band(3)),
        named("R2", left_zero_band(2).dual()),
        named("chain2", chain_semilattice(2)),
        named("chain3", chain_semilattice(3)),
        named("chain4", chain_semilattice(4)),
        named("diamond", diamond_semilattice()),
        named("C2", example_c(2)),
        named("C3", example_c(3)),
        named("zs2", boolean_zs(2)),
        named("zs3", boolean_zs(3)),
        named("B(Z1,2)", b(cyclic_group(1), 2)),
        named("B(Z2,1)", b21.clone()),
        named("B(Z3,1)", b(cyclic_group(3), 1)),
        named("B(Z2,2)", b(cyclic_group(2), 2)),
        named("N2^1", null_semigroup(2).adjoin_identity()),
        named("Z3^0", cyclic_group(3).adjoin_zero()),
        named("L2^0", left_zero_band(2).adjoin_zero()),
        named("L2xchain2", direct_product(&[left_zero_band(2), chain_semilattice(2)]).unwrap()),
        named("chain(Z2,Z3)", chain_of_semigroups(&[cyclic_group(2), cyclic_group(3)]).unwrap()),
        named("B(Z2,1)+B(Z2,1)", zero_direct_union(&[b21.clone(), b21.clone()]).unwrap()),
        named(
            "B(Z2,1)+N1",
            zero_direct_union(&[b21, null_semigroup(1)]).unwrap(),
        ),
        named(
            "N2+L2^0",
            zero_direct_union(&[null_semigroup(2), left_zero_band(2).adjoin_zero()]).unwrap(),
        ),
        named("P(z2-swap)", p_semigroup(&mcalister_triples()[1].1).unwrap().semigroup),
    ]
}

/// The members of [`small_semigroups`] with a zero and order at most `max_order`.
pub fn zero_semigroups(max_order: usize) -> Vec<Named<FiniteSemigroup>> {
    small_semigroups()
        .into_iter()
        .filter(|(_, s)| s.zero().is_some() && s.order() <= max_order && s.order() > 1)
        .collect()
}

/// `(G, m)` with `G ∈ {Z₂, Z₃, Z₄, K₄, S₃}`, `m ≤ 3` and `m²|G| ≤ 55`.
pub fn brandt_grid() -> Vec<(String, FiniteSemigroup, usize)> {
    let groups = [
        ("Z2", cyclic_group(2)),
        ("Z3", cyclic_group(3)),
        ("Z4", cyclic_group(4)),
        ("K4", klein_four()),
        ("S3", symmetric_group(3)),
    ];
    let mut out = Vec::new();
    for (name, g) in groups {
        for m in 1..=3 {
            if m * m * g.order() <= 55 {
                out.push((name.to_string(), g.clone(), m));
            }
        }
    }
    out
}

fn triple(
    group: FiniteSemigroup,
    poset: FinitePoset,
    y: &[usize],
    action: Vec<Vec<usize>>,
    names: &[&str],
) -> McAlisterTriple {
    McAlisterTriple::new(group, poset, y.to_vec(), action)
        .and_then(|t| t.with_names(names.iter().map(|s| s.to_string()).collect()))
        .expect("built-in triple is valid")
}

/// McAlister triples with P-semigroups of order at most 16.
pub fn mcalister_triples() -> Vec<Named<McAlisterTriple>> {
    let v = || FinitePoset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
    let star3 = FinitePoset::from_covers(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let trivial = |n: usize, g: usize| vec![(0..n).collect::<Vec<usize>>(); g];
    vec![
        named(
            "trivial-chain2",
            triple(cyclic_group(1), FinitePoset::chain(2), &[0, 1], trivial(2, 1), &["B", "A"]),
        ),
        // points A, A', B with B below both; g swaps A and A'
        named(
            "z2-swap",
            triple(
                cyclic_group(2),
                FinitePoset::from_covers(3, &[(2, 0), (2, 1)]).unwrap(),
                &[0, 2],
                vec![vec![0, 1, 2], vec![1, 0, 2]],
                &["A", "A'", "B"],
            ),
        ),
        named(
            "z2-v",
            triple(
                cyclic_group(2),
                v(),
                &[0, 1, 2],
                vec![vec![0, 1, 2], vec![0, 2, 1]],
                &["B", "A", "A'"],
            ),
        ),
        named(
            "z2-trivial-chain2",
            triple(cyclic_group(2), FinitePoset::chain(2), &[0, 1], trivial(2, 2), &["B", "A"]),
        ),
        named(
            "z3-star",
            triple(
                cyclic_group(3),
                star3,
                &[0, 1],
                vec![vec![0, 1, 2, 3], vec![0, 2, 3, 1], vec![0, 3, 1, 2]],
                &["B", "A0", "A1", "A2"],
            ),
        ),
        named(
            "k4-v",
            triple(
                klein_four(),
                v(),
                &[0, 1],
                vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1], vec![0, 1, 2]],
                &["B", "A", "Ax"],
            ),
        ),
        named(
            "z2-trivial-chain3",
            triple(cyclic_group(2), FinitePoset::chain(3), &[0, 1, 2], trivial(3, 2), &["B", "M", "A"]),
        ),
        named(
            "z4-v",
            triple(
                cyclic_group(4),
                v(),
                &[0, 1],
                vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 1, 2], vec![0, 2, 1]],
                &["B", "A0", "A1"],
            ),
        ),
    ]
}

/// Semidirect product data with `|S ⋊ T| ≤ 20`.
pub fn semidirect_instances() -> Vec<Named<SemidirectData>> {
    let diamond = diamond_semilattice();
    let chain3 = chain_semilattice(3);
    let truncate = vec![vec![0, 1, 1], vec![0, 1, 2]];
    vec![
        named(
            "chain2-by-Z2-trivial",
            SemidirectData::trivial(chain_semilattice(2), cyclic_group(2)),
        ),
        named(
            "diamond-by-Z2-swap",
            SemidirectData::new(diamond, cyclic_group(2), vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]])
                .expect("valid action"),
        ),
        // T = {e < 1} acting through e·s = s ∧ m on 0 < m < 1
        named(
            "chain3-by-truncation",
            SemidirectData::new(chain3, chain_semilattice(2), truncate).expect("valid action"),
        ),
        named(
            "L2-by-Z3-trivial",
            SemidirectData::trivial(left_zero_band(2), cyclic_group(3)),
        ),
        named("left-multiplication-on-L0", left_multiplication_on_l0()),
    ]
}

/// `S' = N₂⁰ ⊔⁰ L₂⁰` acting on its ideal `L⁰` by left multiplication.
pub fn left_multiplication_on_l0() -> SemidirectData {
    let l0 = left_zero_band(2).adjoin_zero();
    let s_prime = zero_direct_union(&[null_semigroup(2), l0.clone()]).expect("valid union");
    // L⁰ indices l1, l2, 0 sit at 3, 4, 0 in S'
    let into = [3usize, 4, 0];
    let back = |x: usize| match x {
        3 => 0,
        4 => 1,
        0 => 2,
        _ => unreachable!("L⁰ is an ideal of S'"),
    };
    let action = s_prime
        .elements()
        .map(|t| (0..3).map(|s| back(s_prime.mul(t, into[s]))).collect())
        .collect();
    SemidirectData::new(l0, s_prime, action).expect("left multiplication is an action")
}

/// The `κ`-blocks expected for [`left_multiplication_on_l0`]: `S'∖L` and `L`.
pub fn left_multiplication_kappa_blocks() -> Vec<Vec<usize>> {
    vec![vec![0, 1, 2], vec![3, 4]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{p_semigroup, semidirect_product};

    #[test]
    fn instance_sizes() {
        for (name, t) in mcalister_triples() {
            let p = p_semigroup(&t).unwrap();
            assert!(p.semigroup.order() <= 16, "{name}");
        }
        for (name, d) in semidirect_instances() {
            assert!(semidirect_product(&d).unwrap().order() <= 20, "{name}");
        }
        assert_eq!(brandt_grid().len(), 15);
        assert!(zero_semigroups(8).len() >= 10);
    }
}
