//! McAlister triples `(G, 𝒳, 𝒴)` and their P-semigroups.

use serde::{Deserialize, Serialize};

use crate::aut::Automorphism;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::semigroup::FiniteSemigroup;

/// A finite poset given by its order matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitePoset {
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = leq.len();
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if leq.iter().any(|row| row.len() != n) {
            return bad("order matrix must be square".into());
        }
        for a in 0..n {
            if !leq[a][a] {
                return bad(format!("not reflexive at {a}"));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return bad(format!("not antisymmetric at {a}, {b}"));
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return bad(format!("not transitive at {a}, {b}, {c}"));
                    }
                }
            }
        }
        Ok(FinitePoset { leq })
    }

    /// The reflexive-transitive closure of the given strict relations `a < b`.
    pub fn from_covers(size: usize, less: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![vec![false; size]; size];
        for (a, row) in leq.iter_mut().enumerate() {
            row[a] = true;
        }
        for &(a, b) in less {
            if a >= size || b >= size {
                return Err(Error::ElementOutOfRange(a.max(b)));
            }
            leq[a][b] = true;
        }
        for via in 0..size {
            for a in 0..size {
                if leq[a][via] {
                    for b in 0..size {
                        if leq[via][b] {
                            leq[a][b] = true;
                        }
                    }
                }
            }
        }
        FinitePoset::new(leq)
    }

    pub fn chain(size: usize) -> Self {
        FinitePoset {
            leq: (0..size).map(|a| (0..size).map(|b| a <= b).collect()).collect(),
        }
    }

    pub fn antichain(size: usize) -> Self {
        FinitePoset {
            leq: (0..size).map(|a| (0..size).map(|b| a == b).collect()).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.leq.len()
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn matrix(&self) -> &[Vec<bool>] {
        &self.leq
    }

    /// Greatest lower bound of `a` and `b` among the points of `within`.
    pub fn meet_within(&self, within: &[usize], a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = within
            .iter()
            .copied()
            .filter(|&c| self.leq(c, a) && self.leq(c, b))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&c| lower.iter().all(|&d| self.leq(d, c)))
    }

    /// `perm` is a bijection with `a ≤ b ⇔ aπ ≤ bπ`.
    pub fn is_order_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.size();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&x| x >= n || std::mem::replace(&mut seen[x], true)) {
            return false;
        }
        (0..n).all(|a| (0..n).all(|b| self.leq(a, b) == self.leq(perm[a], perm[b])))
    }
}

/// `G` acting on the left of `𝒳` by order automorphisms, with `action[g][A] = gA`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McAlisterTriple {
    pub group: FiniteSemigroup,
    pub poset: FinitePoset,
    /// Sorted points of `𝒴`.
    pub y: Vec<usize>,
    pub action: Vec<Vec<usize>>,
    pub names: Option<Vec<String>>,
}

fn invalid(axiom: &'static str, witness: String) -> Error {
    Error::InvalidTriple { axiom, witness }
}

impl McAlisterTriple {
    pub fn new(
        group: FiniteSemigroup,
        poset: FinitePoset,
        mut y: Vec<usize>,
        action: Vec<Vec<usize>>,
    ) -> Result<Self> {
        y.sort_unstable();
        y.dedup();
        let t = McAlisterTriple {
            group,
            poset,
            y,
            action,
            names: None,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.poset.size() {
            return Err(Error::InvalidArgument("one name per poset point".into()));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn point_name(&self, a: usize) -> String {
        self.names
            .as_ref()
            .map_or_else(|| a.to_string(), |n| n[a].clone())
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        if !g.is_group() {
            return Err(invalid("G is a group", "table is not a group".into()));
        }
        let n = self.poset.size();
        let one = g.identity().expect("groups have identities");
        if self.action.len() != g.order() || self.action.iter().any(|r| r.len() != n) {
            return Err(invalid("action shape", format!("need {}×{n} table", g.order())));
        }
        for (h, row) in self.action.iter().enumerate() {
            if !self.poset.is_order_automorphism(row) {
                return Err(invalid("G acts by order automorphisms", format!("g={}", g.name(h))));
            }
        }
        if (0..n).any(|a| self.action[one][a] != a) {
            return Err(invalid("1A = A", String::new()));
        }
        for a in g.elements() {
            for b in g.elements() {
                for x in 0..n {
                    if self.action[g.mul(a, b)][x] != self.action[a][self.action[b][x]] {
                        return Err(invalid(
                            "(gh)A = g(hA)",
                            format!("g={}, h={}, A={}", g.name(a), g.name(b), self.point_name(x)),
                        ));
                    }
                }
            }
        }
        if self.y.is_empty() || self.y.iter().any(|&a| a >= n) {
            return Err(invalid("Y is a non-empty subset of X", String::new()));
        }
        let in_y = self.y_mask();
        for &a in &self.y {
            for b in 0..n {
                if self.poset.leq(b, a) && !in_y[b] {
                    return Err(invalid(
                        "Y is an order ideal",
                        format!("{} ≤ {}", self.point_name(b), self.point_name(a)),
                    ));
                }
            }
        }
        for &a in &self.y {
            for &b in &self.y {
                if self.poset.meet_within(&self.y, a, b).is_none() {
                    return Err(invalid(
                        "Y is a semilattice",
                        format!("{} ∧ {}", self.point_name(a), self.point_name(b)),
                    ));
                }
            }
        }
        let mut covered = vec![false; n];
        for row in &self.action {
            for &a in &self.y {
                covered[row[a]] = true;
            }
        }
        if let Some(x) = covered.iter().position(|&c| !c) {
            return Err(invalid("GY = X", format!("{} is missed", self.point_name(x))));
        }
        for (h, row) in self.action.iter().enumerate() {
            if !self.y.iter().any(|&a| in_y[row[a]]) {
                return Err(invalid("gY ∩ Y ≠ ∅", format!("g={}", g.name(h))));
            }
        }
        Ok(())
    }

    fn y_mask(&self) -> Vec<bool> {
        crate::semigroup::vec_to_mask(self.poset.size(), &self.y)
    }

    #[inline]
    pub fn act(&self, g: usize, a: usize) -> usize {
        self.action[g][a]
    }

    /// `g⁻¹A`.
    pub fn act_inverse(&self, g: usize, a: usize) -> usize {
        let inv = self.group.inverse_of(g).expect("group elements have inverses");
        self.action[inv][a]
    }

    pub fn in_y(&self, a: usize) -> bool {
        self.y.binary_search(&a).is_ok()
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.poset
            .meet_within(&self.y, a, b)
            .expect("validated: meets exist in Y")
    }
}

/// A P-semigroup with its element coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSemigroup {
    pub semigroup: FiniteSemigroup,
    /// `(A, g)` for each element, in lexicographic order.
    pub elements: Vec<(usize, usize)>,
}

impl PSemigroup {
    pub fn index_of(&self, a: usize, g: usize) -> Option<usize> {
        self.elements.binary_search(&(a, g)).ok()
    }
}

/// `𝒫 = {(A, g) ∈ 𝒴 × G : g⁻¹A ∈ 𝒴}`, lexicographically ordered.
pub fn p_elements(t: &McAlisterTriple) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &a in &t.y {
        for g in t.group.elements() {
            if t.in_y(t.act_inverse(g, a)) {
                out.push((a, g));
            }
        }
    }
    out
}

/// The P-semigroup with `(A, g)(B, h) = (A ∧ gB, gh)`.
pub fn p_semigroup(t: &McAlisterTriple) -> Result<PSemigroup> {
    t.validate()?;
    let elements = p_elements(t);
    let lookup = |a: usize, g: usize| elements.binary_search(&(a, g)).ok();
    let mut table = Vec::with_capacity(elements.len() * elements.len());
    for &(a, g) in &elements {
        for &(b, h) in &elements {
            let gb = t.act(g, b);
            let lower = t.poset.meet_within(&t.y, a, gb);
            let Some(c) = lower else {
                return Err(invalid(
                    "A ∧ gB ∈ Y",
                    format!("A={}, gB={}", t.point_name(a), t.point_name(gb)),
                ));
            };
            let gh = t.group.mul(g, h);
            let idx = lookup(c, gh).ok_or_else(|| {
                invalid(
                    "(gh)⁻¹(A ∧ gB) ∈ Y",
                    format!("A={}, g={}, B={}, h={}", t.point_name(a), g, t.point_name(b), h),
                )
            })?;
            table.push(idx);
        }
    }
    let s = FiniteSemigroup::from_flat(elements.len(), table)?;
    let names = elements
        .iter()
        .map(|&(a, g)| format!("({},{})", t.point_name(a), t.group.name(g)))
        .collect();
    let s = s.with_names(names)?;
    let one = t.group.identity().expect("group identity");
    assert!(s.is_inverse(), "P-semigroups are inverse");
    assert!(s.is_e_unitary().expect("inverse"), "P-semigroups are E-unitary");
    let idem: Vec<(usize, usize)> = s.idempotents().iter().map(|&x| elements[x]).collect();
    let expected: Vec<(usize, usize)> = t.y.iter().map(|&a| (a, one)).collect();
    assert_eq!(idem, expected, "E(P) = Y × {{1}}");
    Ok(PSemigroup {
        semigroup: s,
        elements,
    })
}

/// `T_A`, `∼_A`, `𝒜` and `ν` for a triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleApparatus {
    /// `(A, T_A)` for each `A ∈ 𝒴`.
    pub t_sets: Vec<(usize, Vec<usize>)>,
    /// `(A, T_A/∼_A)`, classes sorted.
    pub sim_classes: Vec<(usize, Vec<Vec<usize>>)>,
    /// `𝒜`, the union of all `T_A/∼_A`, deduplicated and sorted.
    pub script_a: Vec<Vec<usize>>,
    /// `g ν h ⇔ gA = hA` for all `A ∈ 𝒳`.
    pub nu: Partition,
}

impl TripleApparatus {
    pub fn t_set(&self, a: usize) -> &[usize] {
        &self.t_sets.iter().find(|(b, _)| *b == a).expect("A ∈ Y").1
    }

    pub fn sim(&self, a: usize, g: usize, h: usize) -> bool {
        self.sim_classes
            .iter()
            .find(|(b, _)| *b == a)
            .expect("A ∈ Y")
            .1
            .iter()
            .any(|c| c.contains(&g) && c.contains(&h))
    }
}

pub fn triple_apparatus(t: &McAlisterTriple) -> TripleApparatus {
    let g = &t.group;
    let n = t.poset.size();
    let mut t_sets = Vec::new();
    let mut sim_classes = Vec::new();
    for &a in &t.y {
        let ta: Vec<usize> = g.elements().filter(|&h| t.in_y(t.act_inverse(h, a))).collect();
        let below: Vec<usize> = (0..n).filter(|&u| t.poset.leq(u, a)).collect();
        let keys: Vec<Vec<usize>> = ta
            .iter()
            .map(|&h| below.iter().map(|&u| t.act_inverse(h, u)).collect())
            .collect();
        let part = Partition::from_keys(&keys);
        let classes: Vec<Vec<usize>> = part
            .blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|i| ta[i]).collect())
            .collect();
        t_sets.push((a, ta));
        sim_classes.push((a, classes));
    }
    let mut covered = vec![false; g.order()];
    for (_, ta) in &t_sets {
        for &h in ta {
            covered[h] = true;
        }
    }
    assert!(covered.iter().all(|&c| c), "G is the union of the T_A");
    let mut script_a: Vec<Vec<usize>> = sim_classes
        .iter()
        .flat_map(|(_, c)| c.iter().cloned())
        .collect();
    script_a.sort();
    script_a.dedup();
    let nu = Partition::from_keys(&t.action);
    let app = TripleApparatus {
        t_sets,
        sim_classes,
        script_a,
        nu,
    };
    for x in g.elements() {
        for y in g.elements() {
            if app.nu.related(x, y) {
                for &a in &t.y {
                    let tx = app.t_set(a).contains(&x);
                    assert_eq!(tx, app.t_set(a).contains(&y), "ν respects T_A");
                    assert!(!tx || app.sim(a, x, y), "ν refines ∼_A");
                }
            }
        }
    }
    app
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; n];
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
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// Order automorphisms `ψ` of `𝒳` with `𝒴ψ = 𝒴` and `(gA)ψ = g(Aψ)`.
pub fn augmented_act_automorphisms(t: &McAlisterTriple) -> Vec<Vec<usize>> {
    let n = t.poset.size();
    assert!(n <= 9, "augmented act search limited to |X| ≤ 9");
    permutations(n)
        .into_iter()
        .filter(|psi| {
            t.poset.is_order_automorphism(psi)
                && t.y.iter().all(|&a| t.in_y(psi[a]))
                && t.group
                    .elements()
                    .all(|g| (0..n).all(|a| psi[t.act(g, a)] == t.act(g, psi[a])))
        })
        .collect()
}

/// `(A, g) ↦ (Aψ, gθ)`, checked against the conditions of the P-automorphism theorem.
pub fn p_automorphism(
    t: &McAlisterTriple,
    p: &PSemigroup,
    psi: &[usize],
    theta: &Automorphism,
) -> Result<Automorphism> {
    theta.check(&t.group)?;
    if !t.poset.is_order_automorphism(psi) {
        return Err(Error::NotAnAutomorphism("ψ is not an order automorphism".into()));
    }
    if t.y.iter().any(|&a| !t.in_y(psi[a])) {
        return Err(Error::NotAnAutomorphism("ψ does not fix Y".into()));
    }
    for g in t.group.elements() {
        for a in 0..t.poset.size() {
            if psi[t.act(g, a)] != t.act(theta.apply(g), psi[a]) {
                return Err(Error::NotAnAutomorphism(format!(
                    "(gA)ψ ≠ (gθ)(Aψ) at g={g}, A={a}"
                )));
            }
        }
    }
    let images = p
        .elements
        .iter()
        .map(|&(a, g)| p.index_of(psi[a], theta.apply(g)).expect("image lies in P"))
        .collect();
    Automorphism::new(&p.semigroup, images)
}

/// Writes an automorphism of `𝒫` as `(ψ; θ)`, returning `None` if it has no such form.
pub fn factor_p_automorphism(
    t: &McAlisterTriple,
    p: &PSemigroup,
    phi: &Automorphism,
) -> Option<(Vec<usize>, Automorphism)> {
    let one = t.group.identity()?;
    let n = t.poset.size();
    let mut theta = vec![usize::MAX; t.group.order()];
    let mut psi = vec![usize::MAX; n];
    for (x, &(a, g)) in p.elements.iter().enumerate() {
        let (b, h) = p.elements[phi.apply(x)];
        if theta[g] != usize::MAX && theta[g] != h {
            return None;
        }
        theta[g] = h;
        if g == one {
            psi[a] = b;
        }
    }
    // extend ψ from 𝒴 to 𝒳 = G𝒴 via (gA)ψ = (gθ)(Aψ)
    for g in t.group.elements() {
        for &a in &t.y {
            let x = t.act(g, a);
            let img = t.act(theta[g], psi[a]);
            if psi[x] != usize::MAX && psi[x] != img {
                return None;
            }
            psi[x] = img;
        }
    }
    let theta = Automorphism::from_images_unchecked(theta);
    let rebuilt = p_automorphism(t, p, &psi, &theta).ok()?;
    (rebuilt == *phi).then_some((psi, theta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::automorphism_group;
    use crate::congruence::{least_group_congruence, max_idempotent_separating};
    use crate::constructions::cyclic_group;

    /// `X = {A, A', B}` with `B < A, A'`, `g` swapping `A` and `A'`, `Y = {A, B}`.
    fn z2_triple() -> McAlisterTriple {
        let poset = FinitePoset::from_covers(3, &[(2, 0), (2, 1)]).unwrap();
        McAlisterTriple::new(cyclic_group(2), poset, vec![0, 2], vec![vec![0, 1, 2], vec![1, 0, 2]])
            .unwrap()
            .with_names(vec!["A".into(), "A'".into(), "B".into()])
            .unwrap()
    }

    #[test]
    fn trivial_group_gives_the_semilattice() {
        let t = McAlisterTriple::new(cyclic_group(1), FinitePoset::chain(2), vec![0, 1], vec![vec![0, 1]])
            .unwrap();
        let p = p_semigroup(&t).unwrap();
        assert!(p.semigroup.is_semilattice());
        assert_eq!(p.semigroup.order(), 2);
        let app = triple_apparatus(&t);
        assert!(app.nu.is_universal());
        assert_eq!(app.t_set(0), &[0]);
    }

    #[test]
    fn z2_triple_elements() {
        let t = z2_triple();
        let p = p_semigroup(&t).unwrap();
        // (A,1), (B,1), (B,g); (A,g) is excluded since g⁻¹A = A' ∉ Y
        assert_eq!(p.elements, vec![(0, 0), (2, 0), (2, 1)]);
        assert!(p.semigroup.is_inverse());
        assert!(p.semigroup.is_e_unitary().unwrap());
        let sigma = least_group_congruence(&p.semigroup).unwrap();
        assert_eq!(sigma.blocks(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn z2_triple_apparatus() {
        let t = z2_triple();
        let app = triple_apparatus(&t);
        assert_eq!(app.t_set(0), &[0]);
        assert_eq!(app.t_set(2), &[0, 1]);
        // g fixes B, so ∼_B relates 1 and g
        assert!(app.sim(2, 0, 1));
        assert!(app.nu.is_identity());
        let p = p_semigroup(&t).unwrap();
        let mu = max_idempotent_separating(&p.semigroup).unwrap();
        assert_eq!(mu.blocks(), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn augmented_automorphisms() {
        assert_eq!(augmented_act_automorphisms(&z2_triple()).len(), 1);
        let chain = McAlisterTriple::new(cyclic_group(1), FinitePoset::chain(2), vec![0, 1], vec![vec![0, 1]])
            .unwrap();
        assert_eq!(augmented_act_automorphisms(&chain).len(), 1);
        let anti = McAlisterTriple::new(
            cyclic_group(1),
            FinitePoset::from_covers(3, &[(0, 1), (0, 2)]).unwrap(),
            vec![0, 1, 2],
            vec![vec![0, 1, 2]],
        )
        .unwrap();
        assert_eq!(augmented_act_automorphisms(&anti).len(), 2);
    }

    #[test]
    fn automorphisms_factor() {
        let t = z2_triple();
        let p = p_semigroup(&t).unwrap();
        for phi in &automorphism_group(&p.semigroup).unwrap() {
            assert!(factor_p_automorphism(&t, &p, phi).is_some());
        }
    }

    #[test]
    fn invalid_triples() {
        let poset = FinitePoset::from_covers(3, &[(2, 0), (2, 1)]).unwrap();
        // Y = {A} is not an order ideal
        let err = McAlisterTriple::new(cyclic_group(2), poset.clone(), vec![0], vec![vec![0, 1, 2], vec![1, 0, 2]])
            .unwrap_err();
        assert!(matches!(err, Error::InvalidTriple { axiom: "Y is an order ideal", .. }));
        // two incomparable points have no meet
        let err = McAlisterTriple::new(
            cyclic_group(1),
            FinitePoset::antichain(2),
            vec![0, 1],
            vec![vec![0, 1]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidTriple { axiom: "Y is a semilattice", .. }));
    }
}
