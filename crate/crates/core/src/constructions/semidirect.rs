use crate::aut::{AutGroup, Automorphism};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::semigroup::FiniteSemigroup;

/// `T` acting on the left of `S` by endomorphisms; `action[t][s] = t·s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectData {
    pub s: FiniteSemigroup,
    pub t: FiniteSemigroup,
    pub action: Vec<Vec<usize>>,
}

impl SemidirectData {
    pub fn new(s: FiniteSemigroup, t: FiniteSemigroup, action: Vec<Vec<usize>>) -> Result<Self> {
        let d = SemidirectData { s, t, action };
        d.validate()?;
        Ok(d)
    }

    /// `t·s = s` for all `t, s`.
    pub fn trivial(s: FiniteSemigroup, t: FiniteSemigroup) -> Self {
        let action = vec![s.elements().collect(); t.order()];
        SemidirectData { s, t, action }
    }

    #[inline]
    pub fn act(&self, t: usize, s: usize) -> usize {
        self.action[t][s]
    }

    /// Checks `tt'·s = t·(t'·s)` and `t·(ss') = (t·s)(t·s')`.
    pub fn validate(&self) -> Result<()> {
        let (ks, kt) = (self.s.order(), self.t.order());
        if self.action.len() != kt || self.action.iter().any(|row| row.len() != ks) {
            return Err(Error::NotAnAction {
                law: "shape",
                witness: format!("action table must be {kt}×{ks}"),
            });
        }
        for (t, row) in self.action.iter().enumerate() {
            if let Some(&x) = row.iter().find(|&&x| x >= ks) {
                return Err(Error::NotAnAction {
                    law: "closure",
                    witness: format!("t={t} sends into {x}"),
                });
            }
        }
        for t in 0..kt {
            for u in 0..kt {
                for s in 0..ks {
                    if self.act(self.t.mul(t, u), s) != self.act(t, self.act(u, s)) {
                        return Err(Error::NotAnAction {
                            law: "tt'·s = t·(t'·s)",
                            witness: format!("t={t}, t'={u}, s={s}"),
                        });
                    }
                }
            }
        }
        for t in 0..kt {
            for a in 0..ks {
                for b in 0..ks {
                    if self.act(t, self.s.mul(a, b)) != self.s.mul(self.act(t, a), self.act(t, b)) {
                        return Err(Error::NotAnAction {
                            law: "t·(ss') = (t·s)(t·s')",
                            witness: format!("t={t}, s={a}, s'={b}"),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `T` is a monoid whose identity acts trivially.
    pub fn is_unital(&self) -> bool {
        self.t
            .identity()
            .is_some_and(|e| self.s.elements().all(|s| self.act(e, s) == s))
    }

    /// Unital, `S` a monoid, and `t·1_S = 1_S` for every `t`.
    pub fn is_monoidal(&self) -> bool {
        self.is_unital()
            && self
                .s
                .identity()
                .is_some_and(|one| self.t.elements().all(|t| self.act(t, one) == one))
    }

    /// Index of `(s, t)` in the product.
    #[inline]
    pub fn pair(&self, s: usize, t: usize) -> usize {
        s * self.t.order() + t
    }

    #[inline]
    pub fn unpair(&self, x: usize) -> (usize, usize) {
        (x / self.t.order(), x % self.t.order())
    }
}

/// `S ⋊ T` with `(s,t)(s',t') = (s(t·s'), tt')`.
pub fn semidirect_product(d: &SemidirectData) -> Result<FiniteSemigroup> {
    d.validate()?;
    let kt = d.t.order();
    let m = FiniteSemigroup::from_fn(d.s.order() * kt, |x, y| {
        let (s, t) = d.unpair(x);
        let (s2, t2) = d.unpair(y);
        d.pair(d.s.mul(s, d.act(t, s2)), d.t.mul(t, t2))
    })?;
    let names = (0..m.order())
        .map(|x| {
            let (s, t) = d.unpair(x);
            format!("({},{})", d.s.name(s), d.t.name(t))
        })
        .collect();
    m.with_names(names)
}

/// `κ` on `T`: `t κ t' ⇔ s(t·s') = s(t'·s')` for all `s, s'`.
pub fn kappa_partition(d: &SemidirectData) -> Partition {
    let keys: Vec<Vec<usize>> = d
        .t
        .elements()
        .map(|t| {
            let mut sig = Vec::with_capacity(d.s.order() * d.s.order());
            for s in d.s.elements() {
                for s2 in d.s.elements() {
                    sig.push(d.s.mul(s, d.act(t, s2)));
                }
            }
            sig
        })
        .collect();
    Partition::from_keys(&keys)
}

/// `(s, t) ↦ (s, tθ)`, checked to be an automorphism of `S ⋊ T`.
pub fn lift_actor_automorphism(d: &SemidirectData, theta: &Automorphism) -> Result<Automorphism> {
    let m = semidirect_product(d)?;
    let images = (0..m.order())
        .map(|x| {
            let (s, t) = d.unpair(x);
            d.pair(s, theta.apply(t))
        })
        .collect();
    Automorphism::new(&m, images)
}

/// `Aut(T; T/κ)`: automorphisms of `T` fixing every `κ`-class setwise.
pub fn kappa_stabilizer(d: &SemidirectData, aut_t: &AutGroup) -> AutGroup {
    aut_t.setwise_stabilizer(&kappa_partition(d).blocks())
}

/// For an automorphism `φ` of `S ⋊ T` fixing every `(s, 1)`, the map
/// `t ↦ t'` where `(s₀, t)φ = (s', t')`, together with whether `φ` has the
/// form `(w, t) ↦ (w, tφ)`.
pub fn induced_actor_map(
    d: &SemidirectData,
    phi: &Automorphism,
    base: usize,
) -> (Vec<usize>, bool) {
    let map: Vec<usize> = d
        .t
        .elements()
        .map(|t| d.unpair(phi.apply(d.pair(base, t))).1)
        .collect();
    let shaped = d
        .s
        .elements()
        .all(|w| d.t.elements().all(|t| phi.apply(d.pair(w, t)) == d.pair(w, map[t])));
    (map, shaped)
}
