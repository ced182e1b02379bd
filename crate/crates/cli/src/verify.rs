//! Theorem-check batteries over the built-in instance sets.
//!
//! Each check compares a library computation against an independent oracle,
//! usually exhaustive enumeration.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semicat_core::aut::{automorphism_group, find_isomorphism};
use semicat_core::catalog::{
    brandt_grid, left_multiplication_kappa_blocks, mcalister_triples, semidirect_instances,
    small_semigroups, zero_semigroups,
};
use semicat_core::congruence::{
    all_congruences, congruence_generated_by, is_congruence, largest_congruence_within,
    least_group_congruence, max_idempotent_separating, preserving_subgroup,
};
use semicat_core::constructions::{
    brandt, brandt_automorphism, direct_product, factor_p_automorphism, induced_actor_map,
    kappa_partition, kappa_stabilizer, lift_actor_automorphism, p_automorphism, p_semigroup,
    semidirect_product, triple_apparatus, McAlisterTriple, SemidirectData,
};
use semicat_core::decomp::{
    decompose_automorphism, decomposition_by_components, greatest_zero_direct_decomposition,
    is_zero_consistent, reassemble_automorphism, ZeroDecomposition,
};
use semicat_core::green::green_relations;
use semicat_core::pattern::RestrictedGrowth;
use semicat_core::{Automorphism, FiniteSemigroup, Partition};
use serde::{Deserialize, Serialize};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    BrandtAut,
    PSemigroup,
    ZeroDirect,
    Semidirect,
    Congruences,
    Counting,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub instance: String,
    pub property: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<Check>,
    /// Informational findings that are not pass/fail checks.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<String>,
    #[serde(skip)]
    pub all_checks: Vec<Check>,
}

#[derive(Default)]
struct Recorder {
    checks: Vec<Check>,
    observations: Vec<String>,
}

impl Recorder {
    fn check(&mut self, instance: &str, property: &str, passed: bool, detail: impl FnOnce() -> String) {
        self.checks.push(Check {
            instance: instance.to_string(),
            property: property.to_string(),
            passed,
            detail: (!passed).then(detail),
        });
    }

    fn finish(self, suite: Suite) -> SuiteReport {
        let failures: Vec<Check> = self.checks.iter().filter(|c| !c.passed).cloned().collect();
        SuiteReport {
            suite,
            passed: failures.is_empty(),
            checks: self.checks.len(),
            failures,
            observations: self.observations,
            all_checks: self.checks,
        }
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let mut r = Recorder::default();
    match suite {
        Suite::BrandtAut => brandt_aut(&mut r),
        Suite::PSemigroup => p_semigroups(&mut r),
        Suite::ZeroDirect => zero_direct(&mut r),
        Suite::Semidirect => semidirect(&mut r),
        Suite::Congruences => congruences(&mut r, 5),
        Suite::Counting => counting(&mut r, seed, 1000),
    }
    r.finish(suite)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn brandt_aut(r: &mut Recorder) {
    for (gname, g, m) in brandt_grid() {
        let name = format!("B0[{gname};{m}]");
        let s = brandt(&g, m).expect("groups");
        let aut = match automorphism_group(&s) {
            Ok(a) => a,
            Err(e) => {
                r.check(&name, "automorphism search completes", false, || e.to_string());
                continue;
            }
        };
        let aut_g = automorphism_group(&g).expect("small group");
        let n = g.order();
        let literal = aut_g.order() * factorial(m);
        let with_rescaling = literal * n.pow(m as u32 - 1);
        r.check(&name, "|Aut| = |Aut(G)|·m!", aut.order() == literal, || {
            format!("raw search found {}, formula gives {literal}", aut.order())
        });
        r.check(&name, "|Aut| = |Aut(G)|·m!·|G|^(m-1)", aut.order() == with_rescaling, || {
            format!("raw search found {}, formula gives {with_rescaling}", aut.order())
        });

        // every (θ;π) is an automorphism
        let mut theta_pi: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut bad = 0;
        for theta in &aut_g {
            for pi in (0..m).permutations(m) {
                match brandt_automorphism(&g, m, theta, &pi) {
                    Ok(phi) => {
                        theta_pi.insert(phi.images().to_vec());
                    }
                    Err(_) => bad += 1,
                }
            }
        }
        r.check(&name, "every (θ;π) is an automorphism", bad == 0, || format!("{bad} failed"));
        let outside = aut.iter().filter(|p| !theta_pi.contains(p.images())).count();
        r.check(&name, "every automorphism has the form (θ;π)", outside == 0, || {
            format!("{outside} of {} automorphisms are not of the form (θ;π)", aut.order())
        });

        // (θ;π) followed by (i,g,j) ↦ (i, uᵢ g uⱼ⁻¹, j)
        let encode = |i: usize, h: usize, j: usize| 1 + i * n * m + h * m + j;
        let inv = |x: usize| g.elements().find(|&y| g.mul(x, y) == g.identity().unwrap()).unwrap();
        let mut rescaled: BTreeSet<Vec<usize>> = BTreeSet::new();
        for u in (0..m).map(|_| 0..n).multi_cartesian_product() {
            let mut images = vec![0; s.order()];
            for i in 0..m {
                for h in 0..n {
                    for j in 0..m {
                        images[encode(i, h, j)] = encode(i, g.mul(g.mul(u[i], h), inv(u[j])), j);
                    }
                }
            }
            let resc = Automorphism::from_images_unchecked(images);
            for tp in &theta_pi {
                let tp = Automorphism::from_images_unchecked(tp.clone());
                rescaled.insert(tp.then(&resc).images().to_vec());
            }
        }
        let found: BTreeSet<Vec<usize>> = aut.iter().map(|p| p.images().to_vec()).collect();
        r.check(
            &name,
            "Aut = {(θ;π) with inner rescaling}",
            found == rescaled,
            || format!("raw {} vs constructed {}", found.len(), rescaled.len()),
        );
    }
}

fn p_semigroups(r: &mut Recorder) {
    for (name, t) in mcalister_triples() {
        let p = match p_semigroup(&t) {
            Ok(p) => p,
            Err(e) => {
                r.check(&name, "P-semigroup builds", false, || e.to_string());
                continue;
            }
        };
        let s = &p.semigroup;
        let one = t.group.identity().expect("group");
        r.check(&name, "inverse", s.is_inverse(), String::new);
        r.check(&name, "E-unitary", s.is_e_unitary().unwrap_or(false), String::new);
        let e: BTreeSet<(usize, usize)> = s.idempotents().iter().map(|&x| p.elements[x]).collect();
        let y1: BTreeSet<(usize, usize)> = t.y.iter().map(|&a| (a, one)).collect();
        r.check(&name, "E(P) = Y×{1}", e == y1, || format!("{e:?} vs {y1:?}"));

        let gr = green_relations(s);
        let mut r_ok = true;
        let mut l_ok = true;
        for (x, &(a, g)) in p.elements.iter().enumerate() {
            for (y, &(b, h)) in p.elements.iter().enumerate() {
                r_ok &= gr.r.related(x, y) == (a == b);
                l_ok &= gr.l.related(x, y) == (t.act_inverse(g, a) == t.act_inverse(h, b));
            }
        }
        r.check(&name, "(A,g) R (B,h) ⇔ A = B", r_ok, String::new);
        r.check(&name, "(A,g) L (B,h) ⇔ g⁻¹A = h⁻¹B", l_ok, String::new);

        let app = triple_apparatus(&t);
        let keys: Vec<(usize, usize)> = p
            .elements
            .iter()
            .map(|&(a, g)| {
                let class = app
                    .sim_classes
                    .iter()
                    .find(|(b, _)| *b == a)
                    .and_then(|(_, cs)| cs.iter().position(|c| c.contains(&g)))
                    .expect("g ∈ T_A");
                (a, class)
            })
            .collect();
        let expected = Partition::from_keys(&keys);
        match max_idempotent_separating(s) {
            Ok(mu) => r.check(&name, "μ = {A = B and g ∼_A h}", mu == expected, || {
                format!("μ {:?} vs {:?}", mu.blocks(), expected.blocks())
            }),
            Err(e) => r.check(&name, "μ = {A = B and g ∼_A h}", false, || e.to_string()),
        }

        let aut = automorphism_group(s).expect("small");
        let unfactored = aut.iter().filter(|phi| factor_p_automorphism(&t, &p, phi).is_none()).count();
        r.check(&name, "every automorphism is (ψ;θ)", unfactored == 0, || {
            format!("{unfactored} automorphisms do not factor")
        });
        let pairs = count_p_pairs(&t, &p);
        r.check(&name, "admissible (ψ;θ) pairs biject with Aut(P)", pairs == aut.order(), || {
            format!("{pairs} pairs, {} automorphisms", aut.order())
        });
    }
}

fn count_p_pairs(t: &McAlisterTriple, p: &semicat_core::constructions::PSemigroup) -> usize {
    let n = t.poset.size();
    let aut_g = automorphism_group(&t.group).expect("small group");
    let mut count = 0;
    for psi in (0..n).permutations(n) {
        for theta in &aut_g {
            if p_automorphism(t, p, &psi, theta).is_ok() {
                count += 1;
            }
        }
    }
    count
}

/// Whether `set` (containing 0) is a 0-consistent ideal, by direct scanning.
fn zero_consistent_ideal(s: &FiniteSemigroup, set: &[usize]) -> bool {
    s.is_ideal(set) && is_zero_consistent(s, set).unwrap_or(false)
}

fn zero_direct(r: &mut Recorder) {
    for (name, s) in zero_semigroups(8) {
        let z = s.zero().expect("zero");
        let d = match catch_unwind(AssertUnwindSafe(|| greatest_zero_direct_decomposition(&s))) {
            Ok(Ok(d)) => d,
            Ok(Err(e)) => {
                r.check(&name, "decomposition computed", false, || e.to_string());
                continue;
            }
            Err(_) => {
                r.check(&name, "decomposition computed", false, || "internal assertion failed".into());
                continue;
            }
        };
        r.check(&name, "valid 0-direct decomposition", d.is_valid_for(&s), String::new);
        let by_components = decomposition_by_components(&s).expect("zero");
        r.check(&name, "agrees with product-graph components", d == by_components, || {
            format!("{:?} vs {:?}", d.summands, by_components.summands)
        });

        let nonzero: Vec<usize> = s.elements().filter(|&x| x != z).collect();
        let mut finest: Option<ZeroDecomposition> = None;
        let mut not_coarser = 0;
        for rgs in RestrictedGrowth::new(nonzero.len()) {
            let blocks = rgs.iter().max().map_or(0, |b| b + 1);
            let mut summands = vec![vec![z]; blocks];
            for (i, &b) in rgs.iter().enumerate() {
                summands[b].push(nonzero[i]);
            }
            for x in &mut summands {
                x.sort_unstable();
            }
            summands.sort();
            let other = ZeroDecomposition { summands };
            if !other.is_valid_for(&s) {
                continue;
            }
            if !d.summands.iter().all(|b| other.summands.iter().any(|o| b.iter().all(|x| o.contains(x)))) {
                not_coarser += 1;
            }
            if finest.as_ref().is_none_or(|f| other.len() > f.len()) {
                finest = Some(other);
            }
        }
        r.check(&name, "every 0-direct decomposition is coarser", not_coarser == 0, || {
            format!("{not_coarser} decompositions are not coarser")
        });
        let mut ours = d.summands.clone();
        ours.sort();
        r.check(
            &name,
            "greatest decomposition is the unique finest",
            finest.is_some_and(|f| f.summands == ours),
            String::new,
        );

        for block in &d.summands {
            let proper = block
                .iter()
                .copied()
                .filter(|&x| x != z)
                .powerset()
                .filter(|sub| !sub.is_empty() && sub.len() + 1 < block.len())
                .any(|mut sub| {
                    sub.push(z);
                    sub.sort_unstable();
                    let (restricted, emb) = s.restrict(block).expect("subsemigroup");
                    let local: Vec<usize> = sub.iter().map(|x| emb.iter().position(|e| e == x).unwrap()).collect();
                    zero_consistent_ideal(&restricted, &local)
                });
            r.check(&name, "summands are 0-directly indecomposable", !proper, || {
                format!("summand {block:?} has a proper 0-consistent ideal")
            });
        }

        let aut = match automorphism_group(&s) {
            Ok(a) => a,
            Err(e) => {
                r.check(&name, "automorphism search completes", false, || e.to_string());
                continue;
            }
        };
        let mut failed = 0;
        for phi in &aut {
            let ok = catch_unwind(AssertUnwindSafe(|| {
                decompose_automorphism(&s, &d, phi).is_ok_and(|parts| {
                    let mut perm = parts.permutation.clone();
                    perm.sort_unstable();
                    perm == (0..d.len()).collect::<Vec<_>>()
                        && reassemble_automorphism(&d, &parts, s.order()) == *phi
                })
            }))
            .unwrap_or(false);
            failed += usize::from(!ok);
        }
        r.check(&name, "every automorphism is ⊔⁰φᵢ over a summand permutation", failed == 0, || {
            format!("{failed} automorphisms do not decompose")
        });

        // converse: summand permutations preserving isomorphism type assemble to automorphisms
        let subs: Vec<FiniteSemigroup> = d.summands.iter().map(|b| s.restrict(b).expect("summand").0).collect();
        let mut assembled = 0;
        let mut bad = 0;
        for pi in (0..d.len()).permutations(d.len()) {
            let isos: Option<Vec<Vec<usize>>> = (0..d.len())
                .map(|i| find_isomorphism(&subs[i], &subs[pi[i]]).ok().flatten())
                .collect();
            let Some(components) = isos else { continue };
            let parts = semicat_core::decomp::AutomorphismDecomposition { permutation: pi, components };
            let phi = reassemble_automorphism(&d, &parts, s.order());
            assembled += 1;
            bad += usize::from(!phi.is_automorphism_of(&s));
        }
        r.check(&name, "type-preserving ⊔⁰φᵢ are automorphisms", bad == 0 && assembled > 0, || {
            format!("{bad} of {assembled} assembled maps fail")
        });
    }
}

fn semidirect(r: &mut Recorder) {
    for (name, d) in semidirect_instances() {
        let m = match semidirect_product(&d) {
            Ok(m) => m,
            Err(e) => {
                r.check(&name, "product validates", false, || e.to_string());
                continue;
            }
        };
        let aut_t = automorphism_group(&d.t).expect("small");
        let stab = kappa_stabilizer(&d, &aut_t);
        let failed = stab.iter().filter(|theta| lift_actor_automorphism(&d, theta).is_err()).count();
        r.check(&name, "κ-preserving θ lift to (s,t) ↦ (s,tθ)", failed == 0, || {
            format!("{failed} of {} fail", stab.order())
        });
        let kappa = kappa_partition(&d);
        let trivial = d.action.iter().all(|row| row.iter().enumerate().all(|(s, &x)| s == x));
        if trivial {
            r.check(&name, "trivial action gives universal κ", kappa.is_universal(), String::new);
            let prod = direct_product(&[d.s.clone(), d.t.clone()]).expect("valid");
            r.check(&name, "trivial action gives the direct product", prod.flat_table() == m.flat_table(), String::new);
        }
        if name == "left-multiplication-on-L0" {
            let mut blocks = kappa.blocks();
            blocks.sort();
            r.check(&name, "κ-blocks are L and S'∖L", blocks == left_multiplication_kappa_blocks(), || {
                format!("{blocks:?}")
            });
        }
        converse_shadow(r, &name, &d, &m);
    }
}

/// The converse direction of the lifting proposition, on instances meeting
/// its hypotheses, plus a count of automorphisms outside the lifted form.
fn converse_shadow(r: &mut Recorder, name: &str, d: &SemidirectData, m: &FiniteSemigroup) {
    let Some(one_t) = d.t.identity() else { return };
    if !d.is_unital() {
        return;
    }
    let base = if d.s.is_semilattice() {
        d.s.zero()
    } else if let Some(one_s) = d.s.identity() {
        let trivial_units = d
            .s
            .elements()
            .filter(|&x| d.s.elements().any(|y| d.s.mul(x, y) == one_s && d.s.mul(y, x) == one_s))
            .count()
            == 1;
        (trivial_units && d.is_monoidal()).then_some(one_s)
    } else {
        None
    };
    let Some(base) = base else { return };
    let aut_m = automorphism_group(m).expect("small");
    let kappa = kappa_partition(d);
    let fixing: Vec<&Automorphism> = aut_m
        .iter()
        .filter(|phi| d.s.elements().all(|s| phi.apply(d.pair(s, one_t)) == d.pair(s, one_t)))
        .collect();
    let mut bad = 0;
    for phi in &fixing {
        let (map, shaped) = induced_actor_map(d, phi, base);
        let is_aut = Automorphism::from_images_unchecked(map.clone()).is_automorphism_of(&d.t);
        let in_kappa = d.t.elements().all(|t| kappa.related(t, map[t]));
        bad += usize::from(!(shaped && is_aut && in_kappa));
    }
    r.check(name, "automorphisms fixing (s,1) induce κ-preserving θ", bad == 0, || {
        format!("{bad} of {} fail", fixing.len())
    });
    let unlifted = aut_m
        .iter()
        .filter(|phi| {
            let (_, shaped) = induced_actor_map(d, phi, base);
            !shaped
        })
        .count();
    r.observations.push(format!(
        "{name}: {unlifted} of {} automorphisms of S⋊T are not of the form (s,t) ↦ (s,tθ)",
        aut_m.order()
    ));
}

fn congruences(r: &mut Recorder, max_order: usize) {
    for (name, s) in small_semigroups().into_iter().filter(|(_, s)| s.order() <= max_order) {
        let k = s.order();
        let all = all_congruences(&s, max_order).expect("bounded");
        let elems: Vec<usize> = s.elements().collect();
        let singles: Vec<Vec<(usize, usize)>> = elems
            .iter()
            .tuple_combinations()
            .map(|(&a, &b)| vec![(a, b)])
            .collect();
        let doubles: Vec<Vec<(usize, usize)>> = singles
            .iter()
            .tuple_combinations()
            .map(|(x, y)| vec![x[0], y[0]])
            .collect();
        let mut sharp_bad = 0;
        for pairs in singles.iter().chain(&doubles) {
            let rho = congruence_generated_by(&s, pairs).expect("valid pairs");
            let meet = all
                .iter()
                .filter(|c| pairs.iter().all(|&(a, b)| c.related(a, b)))
                .fold(Partition::universal(k), |acc, c| acc.meet(c));
            sharp_bad += usize::from(rho != meet);
        }
        r.check(&name, "ρ♯ = ∩{congruences ⊇ ρ}", sharp_bad == 0, || {
            format!("{sharp_bad} generating sets disagree")
        });
        let mut flat_bad = 0;
        for rgs in RestrictedGrowth::new(k) {
            let tau = Partition::from_keys(&rgs);
            let flat = largest_congruence_within(&s, &tau).expect("sizes match");
            let ok = is_congruence(&s, &flat)
                && flat.refines(&tau)
                && all.iter().filter(|c| c.refines(&tau)).all(|c| c.refines(&flat));
            flat_bad += usize::from(!ok);
        }
        r.check(&name, "ρ♭ is the greatest congruence within τ", flat_bad == 0, || {
            format!("{flat_bad} partitions disagree")
        });
        if s.is_inverse() {
            let aut = automorphism_group(&s).expect("small");
            let sigma = least_group_congruence(&s).expect("inverse");
            let mu = max_idempotent_separating(&s).expect("inverse");
            r.check(&name, "σ is preserved by Aut", preserving_subgroup(&aut, &sigma).order() == aut.order(), String::new);
            r.check(&name, "μ is preserved by Aut", preserving_subgroup(&aut, &mu).order() == aut.order(), String::new);
        }
    }
}

/// Random equivalences `γ₁…γ_r` on `X` and a coarsening `σ ⊇ ∩γᵢ`.
pub fn counting_instance(rng: &mut impl Rng) -> (Vec<Partition>, Partition) {
    let size = rng.gen_range(1..=20);
    let r = rng.gen_range(1..=4);
    let gammas: Vec<Partition> = (0..r)
        .map(|_| {
            let blocks = rng.gen_range(1..=size);
            let labels: Vec<usize> = (0..size).map(|_| rng.gen_range(0..blocks)).collect();
            Partition::from_keys(&labels)
        })
        .collect();
    let meet = gammas.iter().fold(Partition::universal(size), |acc, g| acc.meet(g));
    let targets = rng.gen_range(1..=meet.num_blocks());
    let merge: Vec<usize> = (0..meet.num_blocks()).map(|_| rng.gen_range(0..targets)).collect();
    let keys: Vec<usize> = (0..size).map(|x| merge[meet.block_of(x)]).collect();
    (gammas, Partition::from_keys(&keys))
}

fn counting(r: &mut Recorder, seed: u64, instances: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    let mut checked = 0;
    for _ in 0..instances {
        let (gammas, sigma) = counting_instance(&mut rng);
        let meet = gammas.iter().fold(Partition::universal(sigma.len()), |acc, g| acc.meet(g));
        if !meet.refines(&sigma) {
            continue;
        }
        checked += 1;
        let bound: usize = gammas.iter().map(Partition::num_blocks).product();
        violations += usize::from(sigma.num_blocks() > bound);
    }
    r.check("random partitions", "|X/σ| ≤ ∏|X/γᵢ| whenever ∩γᵢ ⊆ σ", violations == 0 && checked == instances, || {
        format!("{violations} violations in {checked} instances")
    });
}
