//! Green's relations, maximal subgroups and principal factors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::semigroup::{mask_to_vec, FiniteSemigroup};

/// Metadata for one J-class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JClassInfo {
    pub members: Vec<usize>,
    pub has_idempotent: bool,
    pub is_kernel: bool,
}

/// All five Green's relations of a finite semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenStructure {
    pub r: Partition,
    pub l: Partition,
    pub h: Partition,
    pub d: Partition,
    pub j: Partition,
    pub j_classes: Vec<JClassInfo>,
}

/// `aS¹ = {a} ∪ aS` as a membership mask.
pub fn right_ideal_mask(s: &FiniteSemigroup, a: usize) -> Vec<bool> {
    let mut m = vec![false; s.order()];
    m[a] = true;
    for x in s.elements() {
        m[s.mul(a, x)] = true;
    }
    m
}

/// `S¹a = {a} ∪ Sa` as a membership mask.
pub fn left_ideal_mask(s: &FiniteSemigroup, a: usize) -> Vec<bool> {
    let mut m = vec![false; s.order()];
    m[a] = true;
    for x in s.elements() {
        m[s.mul(x, a)] = true;
    }
    m
}

/// `S¹aS¹` as a membership mask.
pub fn two_sided_ideal_mask(s: &FiniteSemigroup, a: usize) -> Vec<bool> {
    let left = left_ideal_mask(s, a);
    let mut m = left.clone();
    for y in s.elements().filter(|&y| left[y]) {
        for x in s.elements() {
            m[s.mul(y, x)] = true;
        }
    }
    m
}

/// `J(a) = S¹aS¹`, sorted.
pub fn principal_ideal(s: &FiniteSemigroup, a: usize) -> Vec<usize> {
    mask_to_vec(&two_sided_ideal_mask(s, a))
}

/// Computes R, L, H, D and J.
///
/// Panics if `D ≠ J`, which cannot happen for a finite semigroup.
pub fn green_relations(s: &FiniteSemigroup) -> GreenStructure {
    let rm: Vec<Vec<bool>> = s.elements().map(|a| right_ideal_mask(s, a)).collect();
    let lm: Vec<Vec<bool>> = s.elements().map(|a| left_ideal_mask(s, a)).collect();
    let jm: Vec<Vec<bool>> = s.elements().map(|a| two_sided_ideal_mask(s, a)).collect();
    let r = Partition::from_keys(&rm);
    let l = Partition::from_keys(&lm);
    let j = Partition::from_keys(&jm);
    let h = r.meet(&l);
    let d = r.join(&l);
    assert_eq!(d, j, "D = J must hold in a finite semigroup");

    let j_classes = j
        .blocks()
        .into_iter()
        .map(|members| {
            let rep = members[0];
            let ideal_size = jm[rep].iter().filter(|&&b| b).count();
            JClassInfo {
                has_idempotent: members.iter().any(|&x| s.is_idempotent(x)),
                is_kernel: ideal_size == members.len(),
                members,
            }
        })
        .collect();
    GreenStructure {
        r,
        l,
        h,
        d,
        j,
        j_classes,
    }
}

/// One cell of an egg-box: an H-class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EggBoxCell {
    pub members: Vec<usize>,
    pub has_idempotent: bool,
}

/// A D-class laid out as rows (R-classes) by columns (L-classes).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EggBox {
    pub members: Vec<usize>,
    pub is_kernel: bool,
    pub has_idempotent: bool,
    pub cells: Vec<Vec<EggBoxCell>>,
}

impl GreenStructure {
    /// Egg-box diagrams, one per D-class, in J-class order.
    pub fn egg_boxes(&self, s: &FiniteSemigroup) -> Vec<EggBox> {
        self.j_classes
            .iter()
            .map(|jc| {
                let mut r_ids: Vec<usize> = jc.members.iter().map(|&x| self.r.block_of(x)).collect();
                r_ids.sort_unstable();
                r_ids.dedup();
                let mut l_ids: Vec<usize> = jc.members.iter().map(|&x| self.l.block_of(x)).collect();
                l_ids.sort_unstable();
                l_ids.dedup();
                let cells = r_ids
                    .iter()
                    .map(|&rb| {
                        l_ids
                            .iter()
                            .map(|&lb| {
                                let members: Vec<usize> = jc
                                    .members
                                    .iter()
                                    .copied()
                                    .filter(|&x| self.r.block_of(x) == rb && self.l.block_of(x) == lb)
                                    .collect();
                                EggBoxCell {
                                    has_idempotent: members.iter().any(|&x| s.is_idempotent(x)),
                                    members,
                                }
                            })
                            .collect()
                    })
                    .collect();
                EggBox {
                    members: jc.members.clone(),
                    is_kernel: jc.is_kernel,
                    has_idempotent: jc.has_idempotent,
                    cells,
                }
            })
            .collect()
    }
}

/// A maximal subgroup `H_e` together with its embedding into `S`.
#[derive(Clone, Debug)]
pub struct MaximalSubgroup {
    pub idempotent: usize,
    pub group: FiniteSemigroup,
    pub embedding: Vec<usize>,
}

/// The H-class of every idempotent, as a group.
pub fn maximal_subgroups(s: &FiniteSemigroup) -> Vec<MaximalSubgroup> {
    let g = green_relations(s);
    s.idempotents()
        .into_iter()
        .map(|e| {
            let (group, embedding) = s
                .restrict(&g.h.class_of(e))
                .expect("the H-class of an idempotent is a subgroup");
            debug_assert!(group.is_group());
            MaximalSubgroup {
                idempotent: e,
                group,
                embedding,
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    CompletelySimple,
    Completely0Simple,
    Null,
}

/// A principal factor `J(a)/I(a)`, or the kernel when `I(a)` is empty.
#[derive(Clone, Debug)]
pub struct PrincipalFactor {
    pub semigroup: FiniteSemigroup,
    pub kind: FactorKind,
    /// Elements of `J_a` in `S`; factor index `i < members.len()` is `members[i]`.
    pub members: Vec<usize>,
    /// Whether the factor carries a fresh zero at the last index.
    pub fresh_zero: bool,
}

/// Principal factor of the J-class of `a`.
pub fn principal_factor(s: &FiniteSemigroup, a: usize) -> Result<PrincipalFactor> {
    s.check_element(a)?;
    let ideal = two_sided_ideal_mask(s, a);
    let g = green_relations(s);
    let members = g.j.class_of(a);
    let ideal_size = ideal.iter().filter(|&&b| b).count();
    let mut pos = vec![usize::MAX; s.order()];
    for (i, &x) in members.iter().enumerate() {
        pos[x] = i;
    }
    let closed = members
        .iter()
        .any(|&x| members.iter().any(|&y| pos[s.mul(x, y)] != usize::MAX));

    if ideal_size == members.len() {
        let (semigroup, _) = s.restrict(&members)?;
        return Ok(PrincipalFactor {
            semigroup,
            kind: FactorKind::CompletelySimple,
            members,
            fresh_zero: false,
        });
    }
    let m = members.len();
    let semigroup = FiniteSemigroup::from_fn(m + 1, |i, j| {
        if i == m || j == m {
            return m;
        }
        let p = pos[s.mul(members[i], members[j])];
        if p == usize::MAX {
            m
        } else {
            p
        }
    })?;
    let mut names: Vec<String> = members.iter().map(|&x| s.name(x)).collect();
    names.push("0".into());
    let semigroup = semigroup.with_names(names)?;
    Ok(PrincipalFactor {
        semigroup,
        kind: if closed {
            FactorKind::Completely0Simple
        } else {
            FactorKind::Null
        },
        members,
        fresh_zero: true,
    })
}

/// Smallest idempotents `e R a` and `f L a`.
pub fn idempotent_frame(s: &FiniteSemigroup, a: usize) -> Result<(usize, usize)> {
    s.check_element(a)?;
    if !s.is_regular_element(a) {
        return Err(Error::NotRegular(a));
    }
    let g = green_relations(s);
    let e = s
        .idempotents()
        .into_iter()
        .find(|&e| g.r.related(e, a))
        .expect("a regular element is R-related to an idempotent");
    let f = s
        .idempotents()
        .into_iter()
        .find(|&f| g.l.related(f, a))
        .expect("a regular element is L-related to an idempotent");
    Ok((e, f))
}

/// Natural partial order on idempotents: `e ≤ f ⇔ ef = fe = e`.
pub fn idempotent_leq(s: &FiniteSemigroup, e: usize, f: usize) -> bool {
    s.mul(e, f) == e && s.mul(f, e) == e
}

/// Every non-zero idempotent is minimal among non-zero idempotents.
pub fn has_primitive_idempotents(s: &FiniteSemigroup) -> bool {
    let z = s.zero();
    let nonzero: Vec<usize> = s.idempotents().into_iter().filter(|&e| Some(e) != z).collect();
    nonzero
        .iter()
        .all(|&f| nonzero.iter().all(|&e| e == f || !idempotent_leq(s, e, f)))
}

/// `S` has a single J-class.
pub fn is_simple(s: &FiniteSemigroup) -> bool {
    green_relations(s).j.num_blocks() == 1
}

/// Finite simple semigroups are completely simple.
pub fn is_completely_simple(s: &FiniteSemigroup) -> bool {
    is_simple(s)
}

/// `S² ≠ 0` and the non-zero elements form one J-class, with primitive idempotents.
pub fn is_completely_0_simple(s: &FiniteSemigroup) -> bool {
    let Some(z) = s.zero() else { return false };
    if s.order() < 2 || s.power_ideal(2) == vec![z] {
        return false;
    }
    let g = green_relations(s);
    let nz: Vec<usize> = s.elements().filter(|&x| x != z).collect();
    nz.iter().all(|&x| g.j.related(x, nz[0]))
        && has_primitive_idempotents(s)
        && s.idempotents().iter().any(|&e| e != z)
}

/// `xy = 0` for all `x, y`.
pub fn is_null(s: &FiniteSemigroup) -> bool {
    match s.zero() {
        Some(z) => s.flat_table().iter().all(|&p| p == z),
        None => false,
    }
}
