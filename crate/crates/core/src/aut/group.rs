use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{ElementTuple, FiniteSemigroup};

/// A permutation of element indices, written as its image array.
///
/// Composition follows the right-action convention: `a.then(&b)` maps
/// `x` to `b(a(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Automorphism(Vec<usize>);

impl Automorphism {
    pub fn identity(k: usize) -> Self {
        Automorphism((0..k).collect())
    }

    /// Wraps an image array after checking it is a table-preserving bijection.
    pub fn new(s: &FiniteSemigroup, images: Vec<usize>) -> Result<Self> {
        let phi = Automorphism(images);
        phi.check(s)?;
        Ok(phi)
    }

    /// Wraps an image array without any check.
    pub fn from_images_unchecked(images: Vec<usize>) -> Self {
        Automorphism(images)
    }

    pub fn check(&self, s: &FiniteSemigroup) -> Result<()> {
        let k = s.order();
        if self.0.len() != k {
            return Err(Error::NotAnAutomorphism(format!(
                "{} images for {k} elements",
                self.0.len()
            )));
        }
        let mut seen = vec![false; k];
        for &x in &self.0 {
            if x >= k || seen[x] {
                return Err(Error::NotAnAutomorphism("not a bijection".into()));
            }
            seen[x] = true;
        }
        for i in 0..k {
            for j in 0..k {
                if self.0[s.mul(i, j)] != s.mul(self.0[i], self.0[j]) {
                    return Err(Error::NotAnAutomorphism(format!(
                        "product {i}*{j} is not preserved"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_automorphism_of(&self, s: &FiniteSemigroup) -> bool {
        self.check(s).is_ok()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Automorphism(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn apply_tuple(&self, t: &[usize]) -> ElementTuple {
        ElementTuple(t.iter().map(|&x| self.0[x]).collect())
    }

    /// Image of a set, sorted.
    pub fn apply_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.0[x]).collect();
        out.sort_unstable();
        out
    }

    pub fn fixes_setwise(&self, set: &[usize]) -> bool {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        self.apply_set(&sorted) == sorted
    }
}

/// An explicit list of automorphisms forming a group, identity first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutGroup {
    degree: usize,
    elements: Vec<Automorphism>,
}

impl AutGroup {
    pub fn trivial(k: usize) -> Self {
        AutGroup {
            degree: k,
            elements: vec![Automorphism::identity(k)],
        }
    }

    /// Builds a group from its full element list, asserting closure.
    pub fn from_elements(degree: usize, mut elements: Vec<Automorphism>) -> Self {
        elements.sort();
        elements.dedup();
        let g = AutGroup { degree, elements };
        g.assert_group();
        g
    }

    pub(crate) fn from_sorted_unchecked(degree: usize, elements: Vec<Automorphism>) -> Self {
        AutGroup { degree, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Automorphism> {
        self.elements.iter()
    }

    pub fn contains(&self, phi: &Automorphism) -> bool {
        self.elements.binary_search(phi).is_ok()
    }

    /// A small generating set, chosen greedily.
    pub fn generators(&self) -> Vec<Automorphism> {
        let mut gens: Vec<Automorphism> = Vec::new();
        let mut span: HashSet<Automorphism> = HashSet::new();
        span.insert(Automorphism::identity(self.degree));
        for phi in &self.elements {
            if span.contains(phi) {
                continue;
            }
            gens.push(phi.clone());
            span = closure(self.degree, &gens);
        }
        gens
    }

    /// Panics unless the elements contain the identity and are closed under
    /// composition and inverses.
    pub fn assert_group(&self) {
        assert!(
            self.elements.iter().any(Automorphism::is_identity),
            "identity missing"
        );
        let set: HashSet<&Automorphism> = self.elements.iter().collect();
        let gens = self.generators();
        for g in &gens {
            for h in &self.elements {
                assert!(set.contains(&h.then(g)), "not closed under composition");
            }
        }
        for h in &self.elements {
            assert!(set.contains(&h.inverse()), "not closed under inverses");
        }
    }

    pub fn filter(&self, mut keep: impl FnMut(&Automorphism) -> bool) -> AutGroup {
        AutGroup {
            degree: self.degree,
            elements: self.elements.iter().filter(|p| keep(p)).cloned().collect(),
        }
    }

    /// `Aut(S; X̄)`: elements fixing every entry of the tuple.
    pub fn pointwise_stabilizer(&self, fixed: &[usize]) -> AutGroup {
        let h = self.filter(|phi| fixed.iter().all(|&x| phi.apply(x) == x));
        debug_assert!({
            h.assert_group();
            true
        });
        h
    }

    /// `Aut(S; 𝒜)`: elements fixing every listed set setwise.
    pub fn setwise_stabilizer(&self, sets: &[Vec<usize>]) -> AutGroup {
        let h = self.filter(|phi| sets.iter().all(|set| phi.fixes_setwise(set)));
        debug_assert!({
            h.assert_group();
            true
        });
        h
    }

    pub fn is_subgroup_of(&self, other: &AutGroup) -> bool {
        self.elements.iter().all(|p| other.contains(p))
    }
}

fn closure(degree: usize, gens: &[Automorphism]) -> HashSet<Automorphism> {
    let id = Automorphism::identity(degree);
    let mut seen: HashSet<Automorphism> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen
}

impl<'a> IntoIterator for &'a AutGroup {
    type Item = &'a Automorphism;
    type IntoIter = std::slice::Iter<'a, Automorphism>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}
