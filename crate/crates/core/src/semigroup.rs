//! Finite semigroups given by Cayley tables.
//!
//! Elements are the dense indices `0..order`. A [`FiniteSemigroup`] is only
//! ever constructed through [`validate`] (or a constructor that calls it), so
//! every other routine in the crate may assume closure and associativity.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated finite semigroup.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    names: Option<Vec<String>>,
    zero: Option<usize>,
    identity: Option<usize>,
}

/// An `n`-tuple of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementTuple(pub Vec<usize>);

impl ElementTuple {
    pub fn new(entries: Vec<usize>) -> Self {
        ElementTuple(entries)
    }

    /// Checks the tuple is non-empty and every entry lies in `[0, order)`.
    pub fn check(&self, order: usize) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::InvalidArgument("empty tuple".into()));
        }
        match self.0.iter().find(|&&x| x >= order) {
            Some(&x) => Err(Error::ElementOutOfRange(x)),
            None => Ok(()),
        }
    }
}

impl Deref for ElementTuple {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for ElementTuple {
    fn from(v: Vec<usize>) -> Self {
        ElementTuple(v)
    }
}

/// Validates a square table and returns the semigroup it defines.
///
/// Zero and identity elements are detected and recorded.
pub fn validate(table: &[Vec<usize>]) -> Result<FiniteSemigroup> {
    let k = table.len();
    if k == 0 {
        return Err(Error::InvalidTable("table is empty".into()));
    }
    let mut flat = Vec::with_capacity(k * k);
    for (i, row) in table.iter().enumerate() {
        if row.len() != k {
            return Err(Error::InvalidTable(format!(
                "row {i} has length {} but the table has {k} rows",
                row.len()
            )));
        }
        flat.extend_from_slice(row);
    }
    FiniteSemigroup::from_flat(k, flat)
}

impl FiniteSemigroup {
    /// Builds and validates a semigroup from a row-major flat table.
    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("order must be positive".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        for (idx, &value) in table.iter().enumerate() {
            if value >= order {
                return Err(Error::NotClosed {
                    row: idx / order,
                    col: idx % order,
                    value,
                    order,
                });
            }
        }
        let mut s = FiniteSemigroup {
            order,
            table,
            names: None,
            zero: None,
            identity: None,
        };
        s.check_associative()?;
        s.zero = (0..order).find(|&z| (0..order).all(|i| s.mul(z, i) == z && s.mul(i, z) == z));
        s.identity =
            (0..order).find(|&e| (0..order).all(|i| s.mul(e, i) == i && s.mul(i, e) == i));
        Ok(s)
    }

    /// Builds and validates a semigroup from a product function.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut table = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                table.push(f(i, j));
            }
        }
        Self::from_flat(order, table)
    }

    fn check_associative(&self) -> Result<()> {
        let k = self.order;
        for i in 0..k {
            for j in 0..k {
                let ij = self.mul(i, j);
                for l in 0..k {
                    if self.mul(ij, l) != self.mul(i, self.mul(j, l)) {
                        return Err(Error::NotAssociative { i, j, l });
                    }
                }
            }
        }
        Ok(())
    }

    /// Attaches display names. The list must have one entry per element.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::InvalidArgument(format!(
                "{} names given for {} elements",
                names.len(),
                self.order
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    /// Checks that externally declared zero / identity markers agree with the table.
    pub fn check_markers(&self, zero: Option<usize>, identity: Option<usize>) -> Result<()> {
        if let Some(z) = zero {
            if self.zero != Some(z) {
                return Err(Error::BadMarker {
                    kind: "zero",
                    element: z,
                });
            }
        }
        if let Some(e) = identity {
            if self.identity != Some(e) {
                return Err(Error::BadMarker {
                    kind: "identity",
                    element: e,
                });
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Row-major product table.
    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(n) => n[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn require_zero(&self) -> Result<usize> {
        self.zero.ok_or(Error::NoZero)
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(a))
        }
    }

    pub fn check_subset(&self, set: &[usize]) -> Result<()> {
        set.iter().try_for_each(|&a| self.check_element(a))
    }

    /// `a^n` for `n >= 1`.
    pub fn pow(&self, a: usize, n: usize) -> usize {
        assert!(n >= 1, "powers start at 1");
        let mut x = a;
        for _ in 1..n {
            x = self.mul(x, a);
        }
        x
    }

    /// Product of a non-empty word.
    pub fn product(&self, word: &[usize]) -> usize {
        let (&first, rest) = word.split_first().expect("empty word");
        rest.iter().fold(first, |acc, &x| self.mul(acc, x))
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.order;
        (0..k).all(|i| (i + 1..k).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// `E(S)`, sorted.
    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn is_regular_element(&self, a: usize) -> bool {
        self.elements().any(|x| self.mul(self.mul(a, x), a) == a)
    }

    /// `Reg(S)`, sorted.
    pub fn regular_elements(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_regular_element(a)).collect()
    }

    pub fn is_regular(&self) -> bool {
        self.elements().all(|a| self.is_regular_element(a))
    }

    /// All `x` with `axa = a` and `xax = x`.
    pub fn inverses_of(&self, a: usize) -> Vec<usize> {
        self.elements()
            .filter(|&x| self.mul(self.mul(a, x), a) == a && self.mul(self.mul(x, a), x) == x)
            .collect()
    }

    /// Regular with commuting idempotents.
    pub fn is_inverse(&self) -> bool {
        if !self.is_regular() {
            return false;
        }
        let e = self.idempotents();
        e.iter()
            .all(|&x| e.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    /// The unique inverse of `a` in an inverse semigroup.
    pub fn inverse_of(&self, a: usize) -> Option<usize> {
        let inv = self.inverses_of(a);
        (inv.len() == 1).then(|| inv[0])
    }

    pub fn is_group(&self) -> bool {
        match self.identity {
            None => false,
            Some(e) => self.elements().all(|a| {
                self.elements()
                    .any(|b| self.mul(a, b) == e && self.mul(b, a) == e)
            }),
        }
    }

    pub fn is_band(&self) -> bool {
        self.elements().all(|a| self.is_idempotent(a))
    }

    pub fn is_semilattice(&self) -> bool {
        self.is_band() && self.is_commutative()
    }

    /// Whether `e, es ∈ E(S)` forces `s ∈ E(S)`. Only defined for inverse semigroups.
    pub fn is_e_unitary(&self) -> Result<bool> {
        if !self.is_inverse() {
            return Err(Error::NotInverse);
        }
        let e = self.idempotents();
        Ok(e.iter().all(|&f| {
            self.elements()
                .all(|s| !self.is_idempotent(self.mul(f, s)) || self.is_idempotent(s))
        }))
    }

    /// Least `(index, period)` with `a^(index+period) = a^index`.
    pub fn index_period(&self, a: usize) -> (usize, usize) {
        // first_seen[x] = exponent at which x first appeared as a power of a
        let mut first_seen = vec![0usize; self.order];
        let mut x = a;
        let mut n = 1;
        loop {
            if first_seen[x] != 0 {
                let m = first_seen[x];
                return (m, n - m);
            }
            first_seen[x] = n;
            x = self.mul(x, a);
            n += 1;
        }
    }

    /// `S^m`, the set of all `m`-fold products, sorted.
    pub fn power_ideal(&self, m: usize) -> Vec<usize> {
        assert!(m >= 1, "S^m needs m >= 1");
        let mut current = vec![true; self.order];
        for _ in 1..m {
            current = self.times_s(&current);
        }
        mask_to_vec(&current)
    }

    fn times_s(&self, set: &[bool]) -> Vec<bool> {
        let mut next = vec![false; self.order];
        for x in self.elements().filter(|&x| set[x]) {
            for s in self.elements() {
                next[self.mul(x, s)] = true;
            }
        }
        next
    }

    /// Least `n` with `S^n = S^(n+1)`.
    pub fn stabilization_index(&self) -> usize {
        let mut current = vec![true; self.order];
        let mut n = 1;
        loop {
            let next = self.times_s(&current);
            if next == current {
                return n;
            }
            current = next;
            n += 1;
        }
    }

    /// Least `n` with `a^n = 0` for every `a`, if `S` is nil.
    pub fn nil_degree(&self) -> Result<Option<usize>> {
        let z = self.require_zero()?;
        let mut degree = 1;
        for a in self.elements() {
            let (index, period) = self.index_period(a);
            // a is nilpotent iff its eventual cycle is {0}
            if self.pow(a, index) != z || period != 1 {
                return Ok(None);
            }
            degree = degree.max(index);
        }
        Ok(Some(degree))
    }

    /// Least `n` with `S^n = {0}`, if `S` is nilpotent.
    pub fn nilpotency_degree(&self) -> Result<Option<usize>> {
        let z = self.require_zero()?;
        let mut current = vec![true; self.order];
        let mut n = 1;
        loop {
            if current.iter().enumerate().all(|(x, &b)| !b || x == z) {
                return Ok(Some(n));
            }
            let next = self.times_s(&current);
            if next == current {
                return Ok(None);
            }
            current = next;
            n += 1;
        }
    }

    /// `aⁿ = 0` for all `a` (not necessarily the least such `n`).
    pub fn is_nil_of_degree(&self, n: usize) -> Result<bool> {
        let z = self.require_zero()?;
        Ok(self.elements().all(|a| self.pow(a, n) == z))
    }

    pub fn is_subsemigroup(&self, set: &[usize]) -> bool {
        let mask = vec_to_mask(self.order, set);
        !set.is_empty()
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| mask[self.mul(a, b)]))
    }

    /// Checks `set` is a two-sided ideal, returning a witness on failure.
    pub fn check_ideal(&self, set: &[usize]) -> Result<()> {
        self.check_subset(set)?;
        if set.is_empty() {
            return Err(Error::InvalidArgument("ideal must be non-empty".into()));
        }
        let mask = vec_to_mask(self.order, set);
        for &a in set {
            for s in self.elements() {
                for p in [self.mul(a, s), self.mul(s, a)] {
                    if !mask[p] {
                        return Err(Error::NotAnIdeal {
                            element: a,
                            by: s,
                            product: p,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_ideal(&self, set: &[usize]) -> bool {
        self.check_ideal(set).is_ok()
    }

    /// The subsemigroup on `set` (sorted, closed), re-indexed in the sorted order.
    /// Returns the semigroup and the embedding `new index -> old index`.
    pub fn restrict(&self, set: &[usize]) -> Result<(FiniteSemigroup, Vec<usize>)> {
        let mut elems = set.to_vec();
        elems.sort_unstable();
        elems.dedup();
        self.check_subset(&elems)?;
        if !self.is_subsemigroup(&elems) {
            return Err(Error::InvalidArgument(
                "subset is not closed under multiplication".into(),
            ));
        }
        let mut pos = vec![usize::MAX; self.order];
        for (i, &a) in elems.iter().enumerate() {
            pos[a] = i;
        }
        let sub = FiniteSemigroup::from_fn(elems.len(), |i, j| pos[self.mul(elems[i], elems[j])])?;
        let sub = match &self.names {
            Some(n) => sub.with_names(elems.iter().map(|&a| n[a].clone()).collect())?,
            None => sub,
        };
        Ok((sub, elems))
    }

    /// The subsemigroup generated by `gens`, sorted.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let mut mask = vec![false; self.order];
        let mut queue: Vec<usize> = Vec::new();
        for &g in gens {
            if !mask[g] {
                mask[g] = true;
                queue.push(g);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let p = self.mul(x, g);
                if !mask[p] {
                    mask[p] = true;
                    queue.push(p);
                }
            }
        }
        mask_to_vec(&mask)
    }

    /// `S ∖ S²`: elements that are not products.
    pub fn indecomposables(&self) -> Vec<usize> {
        let sq = vec_to_mask(self.order, &self.power_ideal(2));
        self.elements().filter(|&a| !sq[a]).collect()
    }

    /// `S⁰`: a fresh zero appended at index `order`.
    pub fn adjoin_zero(&self) -> FiniteSemigroup {
        self.adjoin(true)
    }

    /// `S¹`: a fresh identity appended at index `order`.
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        self.adjoin(false)
    }

    /// The opposite semigroup, `a ∘ b = ba`.
    pub fn dual(&self) -> FiniteSemigroup {
        let d = FiniteSemigroup::from_fn(self.order, |i, j| self.mul(j, i))
            .expect("the opposite of a semigroup is a semigroup");
        match &self.names {
            Some(n) => d.with_names(n.clone()).expect("name count matches"),
            None => d,
        }
    }

    fn adjoin(&self, zero: bool) -> FiniteSemigroup {
        let k = self.order;
        let s = FiniteSemigroup::from_fn(k + 1, |i, j| match (i == k, j == k) {
            (false, false) => self.mul(i, j),
            (true, true) => k,
            (true, false) => {
                if zero {
                    k
                } else {
                    j
                }
            }
            (false, true) => {
                if zero {
                    k
                } else {
                    i
                }
            }
        })
        .expect("adjoining an element preserves associativity");
        let mut names: Vec<String> = self.elements().map(|a| self.name(a)).collect();
        names.push(if zero { "0*" } else { "1*" }.to_string());
        s.with_names(names).expect("name count matches")
    }
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "FiniteSemigroup(order {}, zero {:?}, identity {:?})",
            self.order, self.zero, self.identity
        )?;
        for row in self.table.chunks(self.order) {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

pub(crate) fn vec_to_mask(order: usize, set: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; order];
    for &a in set {
        mask[a] = true;
    }
    mask
}

pub(crate) fn mask_to_vec(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect()
}
