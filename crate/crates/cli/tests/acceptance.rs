//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria known to be false as stated are listed in `KNOWN_UNATTAINABLE`
//! with the reason; the test fails if the set of failing criteria differs.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use itertools::Itertools;
use semicat_cli::family::{run_family, Family, FamilySpec, Statistic};
use semicat_cli::verify::{run_suite, Check, Suite, DEFAULT_SEED};
use semicat_core::aut::{find_isomorphism, full_orbit_count, tau};
use semicat_core::catalog::{mcalister_triples, semidirect_instances, small_semigroups, zero_semigroups};
use semicat_core::constructions::{boolean_zs, example_c, null_semigroup, p_semigroup, semidirect_product};
use semicat_core::green::{green_relations, principal_factor, FactorKind};
use semicat_core::FiniteSemigroup;

const KNOWN_UNATTAINABLE: &[(u32, &str)] = &[(
    1,
    "Aut(B0[G;m]) also contains the rescalings (i,g,j) -> (i, u_i g u_j^-1, j); \
     the true order is |Aut(G)|·m!·|G|^(m-1), so the literal count fails for m >= 2 and |G| >= 2",
)];

struct Outcome {
    id: u32,
    passed: bool,
    detail: String,
}

fn criterion(id: u32, title: &str, limit: Duration, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (ok, detail) = f();
    let elapsed = start.elapsed();
    let passed = ok && elapsed <= limit;
    report(&format!(
        "{} [{id}] {title} ({:.2}s / {}s){}",
        if passed { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs(),
        if detail.is_empty() { String::new() } else { format!(": {detail}") }
    ));
    Outcome { id, passed, detail }
}

/// Writes past the test harness capture so the report lands in plain `cargo test` output.
fn report(line: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

fn checks_pass(checks: &[Check], keep: impl Fn(&Check) -> bool) -> (bool, String) {
    let selected: Vec<&Check> = checks.iter().filter(|c| keep(c)).collect();
    let failed: Vec<String> = selected
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{} / {}: {}", c.instance, c.property, c.detail.clone().unwrap_or_default()))
        .collect();
    if selected.is_empty() {
        return (false, "no checks selected".into());
    }
    let detail = if failed.is_empty() {
        format!("{} checks", selected.len())
    } else {
        format!("{} of {} checks failed; first: {}", failed.len(), selected.len(), failed[0])
    };
    (failed.is_empty(), detail)
}

fn stirling2(n: usize, k: usize) -> u64 {
    let mut t = vec![vec![0u64; k + 1]; n + 1];
    t[0][0] = 1;
    for i in 1..=n {
        for j in 1..=k.min(i) {
            t[i][j] = j as u64 * t[i - 1][j] + t[i - 1][j - 1];
        }
    }
    t[n][..=k].iter().sum()
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Automorphisms by filtering every permutation of the elements.
fn brute_automorphisms(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
    let n = s.order();
    (0..n)
        .permutations(n)
        .filter(|p| (0..n).all(|a| (0..n).all(|b| p[s.mul(a, b)] == s.mul(p[a], p[b]))))
        .collect()
}

fn brute_orbits(s: &FiniteSemigroup, n: usize) -> u64 {
    let perms = brute_automorphisms(s);
    let mut reps = BTreeSet::new();
    for t in (0..n).map(|_| s.elements()).multi_cartesian_product() {
        let least = perms.iter().map(|p| t.iter().map(|&x| p[x]).collect::<Vec<_>>()).min().unwrap();
        reps.insert(least);
    }
    reps.len() as u64
}

/// Principal ideal `S¹aS¹` by direct closure.
fn ideal_of(s: &FiniteSemigroup, a: usize) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = [a].into();
    loop {
        let next: BTreeSet<usize> = set
            .iter()
            .flat_map(|&x| s.elements().flat_map(move |y| [s.mul(x, y), s.mul(y, x)]))
            .chain(set.iter().copied())
            .collect();
        if next == set {
            return set;
        }
        set = next;
    }
}

/// Classification of a principal factor read off from its table alone.
fn classify_factor(f: &FiniteSemigroup, fresh_zero: bool) -> Option<FactorKind> {
    if !fresh_zero {
        // simple: a single J-class
        let all: BTreeSet<usize> = f.elements().collect();
        return f.elements().all(|a| ideal_of(f, a) == all).then_some(FactorKind::CompletelySimple);
    }
    let z = f.order() - 1;
    let nonzero: BTreeSet<usize> = (0..z).collect();
    if f.elements().all(|a| f.elements().all(|b| f.mul(a, b) == z)) {
        return Some(FactorKind::Null);
    }
    let single_j = nonzero.iter().all(|&a| {
        let i = ideal_of(f, a);
        nonzero.iter().all(|b| i.contains(b))
    });
    // primitive idempotents under e ≤ f ⇔ ef = fe = e
    let idem: Vec<usize> = (0..z).filter(|&e| f.mul(e, e) == e).collect();
    let primitive = idem
        .iter()
        .all(|&e| idem.iter().all(|&g| e == g || !(f.mul(e, g) == e && f.mul(g, e) == e)));
    (single_j && !idem.is_empty() && primitive).then_some(FactorKind::Completely0Simple)
}

fn principal_factors_check() -> (bool, String) {
    let mut instances = small_semigroups();
    instances.extend(zero_semigroups(8));
    let mut problems = Vec::new();
    let mut factors_seen = 0;
    for (name, s) in &instances {
        let g = green_relations(s);
        let mut types: Vec<FiniteSemigroup> = Vec::new();
        for block in g.j.blocks() {
            let pf = principal_factor(s, block[0]).expect("element");
            factors_seen += 1;
            match classify_factor(&pf.semigroup, pf.fresh_zero) {
                Some(k) if k == pf.kind => {}
                other => problems.push(format!("{name}: J({}) is {:?}, checker says {other:?}", block[0], pf.kind)),
            }
            if !types.iter().any(|t| find_isomorphism(t, &pf.semigroup).unwrap().is_some()) {
                types.push(pf.semigroup);
            }
        }
        let t = tau(s).expect("small");
        if types.len() as u64 > t + 1 {
            problems.push(format!("{name}: {} factor types exceed τ+1 = {}", types.len(), t + 1));
        }
    }
    (
        problems.is_empty(),
        problems.first().cloned().unwrap_or_else(|| format!("{factors_seen} factors over {} semigroups", instances.len())),
    )
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let mut out = Vec::new();

    let mut brandt = Vec::new();
    out.push(criterion(1, "Brandt automorphism count |Aut(G)|·m! with (θ;π) factorization", secs(60), || {
        brandt = run_suite(Suite::BrandtAut, DEFAULT_SEED).all_checks;
        checks_pass(&brandt, |c| {
            c.property == "|Aut| = |Aut(G)|·m!" || c.property == "every automorphism has the form (θ;π)"
        })
    }));
    let corrected = checks_pass(&brandt, |c| {
        c.property == "|Aut| = |Aut(G)|·m!·|G|^(m-1)" || c.property == "Aut = {(θ;π) with inner rescaling}"
    });
    report(&format!(
        "{} [1'] Brandt automorphisms with inner rescalings, |Aut(G)|·m!·|G|^(m-1): {}",
        if corrected.0 { "PASS" } else { "FAIL" },
        corrected.1
    ));

    out.push(criterion(2, "null semigroup orbit counts", secs(10), || {
        let mut bad = Vec::new();
        for k in 1..=4 {
            let s = null_semigroup(k);
            for n in 1..=4 {
                let formula: u64 = (0..=n).map(|j| binomial(n, j) * stirling2(n - j, k)).sum();
                let brute = brute_orbits(&s, n);
                let lib = full_orbit_count(&s, n).unwrap();
                if !(formula == brute && brute == lib) {
                    bad.push(format!("k={k} n={n}: formula {formula}, brute {brute}, library {lib}"));
                }
            }
        }
        (bad.is_empty(), bad.first().cloned().unwrap_or_default())
    }));

    out.push(criterion(3, "counting lemma on 1000 seeded instances", secs(5), || {
        checks_pass(&run_suite(Suite::Counting, DEFAULT_SEED).all_checks, |_| true)
    }));

    out.push(criterion(4, "ρ♯ and ρ♭ against exhaustive congruence enumeration", secs(60), || {
        checks_pass(&run_suite(Suite::Congruences, DEFAULT_SEED).all_checks, |c| c.property.starts_with('ρ'))
    }));

    let mut p = Vec::new();
    out.push(criterion(5, "μ blocks on McAlister triples", secs(30), || {
        p = run_suite(Suite::PSemigroup, DEFAULT_SEED).all_checks;
        let triples = mcalister_triples();
        let sizes: Vec<usize> = triples.iter().map(|(_, t)| p_semigroup(t).unwrap().semigroup.order()).collect();
        if triples.len() < 5 || sizes.iter().any(|&n| n > 16) {
            return (false, format!("instance set has sizes {sizes:?}"));
        }
        checks_pass(&p, |c| c.property.starts_with("μ"))
    }));
    out.push(criterion(6, "P-semigroup structure and automorphism factorization", secs(60), || {
        checks_pass(&p, |c| !c.property.starts_with("μ"))
    }));

    out.push(criterion(7, "greatest 0-direct decomposition", secs(60), || {
        checks_pass(&run_suite(Suite::ZeroDirect, DEFAULT_SEED).all_checks, |_| true)
    }));

    out.push(criterion(8, "semidirect lifting and κ examples", secs(30), || {
        let big: Vec<String> = semidirect_instances()
            .into_iter()
            .filter(|(_, d)| semidirect_product(d).unwrap().order() > 20)
            .map(|(n, _)| n)
            .collect();
        if !big.is_empty() {
            return (false, format!("instances above order 20: {big:?}"));
        }
        let checks = run_suite(Suite::Semidirect, DEFAULT_SEED).all_checks;
        let has_trivial = checks.iter().any(|c| c.property == "trivial action gives universal κ");
        let has_l0 = checks.iter().any(|c| c.property.starts_with("κ-blocks"));
        if !(has_trivial && has_l0) {
            return (false, "κ examples missing from the instance set".into());
        }
        checks_pass(&checks, |_| true)
    }));

    out.push(criterion(9, "principal factor classification", secs(30), principal_factors_check));

    out.push(criterion(10, "family growth for chains and null semigroups", secs(30), || {
        let run = |family| {
            run_family(&FamilySpec {
                family,
                from: 1,
                to: 8,
                statistic: Statistic::Tau,
            })
            .unwrap()
        };
        let chains = run(Family::ChainSemilattice);
        let nulls = run(Family::Null);
        let chain_ok = chains.rows.iter().all(|r| r.value == r.parameter as u64)
            && chains.label == "strictly increasing over range";
        let null_ok = nulls.rows.iter().all(|r| r.value == 2) && nulls.label == "bounded over range";
        let values = |r: &semicat_cli::family::FamilyReport| r.rows.iter().map(|x| x.value).collect::<Vec<_>>();
        (
            chain_ok && null_ok,
            format!("chains {:?} ({}), null {:?} ({})", values(&chains), chains.label, values(&nulls), nulls.label),
        )
    }));

    out.push(criterion(11, "nil examples", secs(10), || {
        let mut bad = Vec::new();
        for m in 2..=5 {
            let c = example_c(m);
            let nil = (c.nil_degree().unwrap(), c.nilpotency_degree().unwrap());
            if nil != (Some(2), Some(3)) {
                bad.push(format!("example_c({m}) has {nil:?}"));
            }
        }
        for m in 1..=4 {
            let b = boolean_zs(m);
            // top of the Boolean algebra is the last element
            let top = b.order() - 1;
            if !(b.is_nil_of_degree(2).unwrap() && b.is_commutative() && b.zero() == Some(top)) {
                bad.push(format!("boolean_zs({m})"));
            }
        }
        (bad.is_empty(), bad.join("; "))
    }));

    let failing: BTreeSet<u32> = out.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    let expected: BTreeSet<u32> = KNOWN_UNATTAINABLE.iter().map(|(id, _)| *id).collect();
    for (id, reason) in KNOWN_UNATTAINABLE {
        report(&format!("KNOWN [{id}] {reason}"));
    }
    for o in out.iter().filter(|o| !o.passed && !expected.contains(&o.id)) {
        report(&format!("UNEXPECTED [{}] {}", o.id, o.detail));
    }
    assert!(corrected.0, "corrected Brandt check failed: {}", corrected.1);
    assert_eq!(failing, expected, "failing criteria differ from the known list");
}
