//! Equivalence relations on `[0, k)` stored as canonical block-id arrays.

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns `false` if they were already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.len();
        let roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Partition::from_keys(&roots)
    }
}

/// An equivalence relation on `[0, k)`.
///
/// Block ids are dense and assigned in order of first occurrence, so two
/// partitions are equal exactly when they relate the same pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    block: Vec<usize>,
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(d)?;
        Ok(Partition::from_keys(&ids))
    }
}

impl Partition {
    /// Canonical partition grouping equal keys.
    pub fn from_keys<K: Eq + std::hash::Hash + Clone>(keys: &[K]) -> Self {
        let mut ids = std::collections::HashMap::new();
        let block = keys
            .iter()
            .map(|k| {
                let next = ids.len();
                *ids.entry(k.clone()).or_insert(next)
            })
            .collect();
        Partition { block }
    }

    /// Partition from an explicit block list; every element of `[0, k)` must occur exactly once.
    pub fn from_blocks(k: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut ids = vec![usize::MAX; k];
        for (b, members) in blocks.iter().enumerate() {
            for &x in members {
                if x >= k {
                    return Err(Error::ElementOutOfRange(x));
                }
                if ids[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("{x} occurs twice")));
                }
                ids[x] = b;
            }
        }
        if let Some(x) = ids.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidPartition(format!("{x} is in no block")));
        }
        Ok(Self::from_keys(&ids))
    }

    pub fn identity(k: usize) -> Self {
        Partition {
            block: (0..k).collect(),
        }
    }

    pub fn universal(k: usize) -> Self {
        Partition { block: vec![0; k] }
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.block.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block.is_empty()
    }

    pub fn block_ids(&self) -> &[usize] {
        &self.block
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block[x]
    }

    pub fn num_blocks(&self) -> usize {
        self.block.iter().max().map_or(0, |m| m + 1)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.block[a] == self.block[b]
    }

    /// Blocks in id order, each sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (x, &b) in self.block.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// The block containing `x`, sorted.
    pub fn class_of(&self, x: usize) -> Vec<usize> {
        let b = self.block[x];
        (0..self.len()).filter(|&y| self.block[y] == b).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.len()
    }

    pub fn is_universal(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Partition) -> bool {
        assert_eq!(self.len(), other.len());
        let mut image = vec![usize::MAX; self.num_blocks()];
        for (x, &b) in self.block.iter().enumerate() {
            let ob = other.block[x];
            if image[b] == usize::MAX {
                image[b] = ob;
            } else if image[b] != ob {
                return false;
            }
        }
        true
    }

    /// Intersection of relations.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let keys: Vec<(usize, usize)> = self
            .block
            .iter()
            .zip(&other.block)
            .map(|(&a, &b)| (a, b))
            .collect();
        Partition::from_keys(&keys)
    }

    /// Least equivalence containing both.
    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let mut uf = UnionFind::new(self.len());
        for p in [self, other] {
            let mut first = vec![usize::MAX; p.num_blocks()];
            for (x, &b) in p.block.iter().enumerate() {
                if first[b] == usize::MAX {
                    first[b] = x;
                } else {
                    uf.union(first[b], x);
                }
            }
        }
        uf.into_partition()
    }

    /// Pairs `(a, b)` with `a < b` that are related.
    pub fn related_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.related(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// `a τ b ⇔ aφ τ bφ` for a permutation `φ` given as an image array.
    pub fn is_preserved_by(&self, image: &[usize]) -> bool {
        assert_eq!(self.len(), image.len());
        let moved: Vec<usize> = (0..self.len()).map(|x| self.block[image[x]]).collect();
        Partition::from_keys(&moved) == *self
    }
}
