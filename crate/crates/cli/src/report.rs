//! JSON reports behind `analyze`, `aut`, `orbits`, `congruence` and `decompose`.

use anyhow::{bail, Result};
use semicat_core::aut::{
    automorphism_group, characteristic_ideal_tower, orbit_report, point_orbits, GroupDescription,
    OrbitOptions,
};
use semicat_core::congruence::{
    congruence_generated_by, least_group_congruence, max_idempotent_separating, quotient,
    rees_congruence,
};
use semicat_core::decomp::{greatest_zero_direct_decomposition, is_primitive, is_zero_directly_indecomposable};
use semicat_core::green::{green_relations, EggBox};
use semicat_core::json::SemigroupJson;
use semicat_core::{FiniteSemigroup, OrbitReport, Partition};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct ElementInfo {
    pub element: usize,
    pub name: String,
    pub idempotent: bool,
    pub regular: bool,
    pub index: usize,
    pub period: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GreenReport {
    pub r: Partition,
    pub l: Partition,
    pub h: Partition,
    pub d: Partition,
    pub j: Partition,
    pub egg_boxes: Vec<EggBox>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub order: usize,
    pub zero: Option<usize>,
    pub identity: Option<usize>,
    pub commutative: bool,
    pub band: bool,
    pub semilattice: bool,
    pub group: bool,
    pub regular: bool,
    pub inverse: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_unitary: Option<bool>,
    pub idempotents: Vec<usize>,
    pub stabilization_index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nil_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotency_degree: Option<usize>,
    pub elements: Vec<ElementInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub green: Option<GreenReport>,
}

pub fn analyze(s: &FiniteSemigroup, with_green: bool) -> Result<AnalyzeReport> {
    let inverse = s.is_inverse();
    let (nil_degree, nilpotency_degree) = match s.zero() {
        Some(_) => (s.nil_degree()?, s.nilpotency_degree()?),
        None => (None, None),
    };
    let green = with_green.then(|| {
        let g = green_relations(s);
        GreenReport {
            egg_boxes: g.egg_boxes(s),
            r: g.r,
            l: g.l,
            h: g.h,
            d: g.d,
            j: g.j,
        }
    });
    Ok(AnalyzeReport {
        order: s.order(),
        zero: s.zero(),
        identity: s.identity(),
        commutative: s.is_commutative(),
        band: s.is_band(),
        semilattice: s.is_semilattice(),
        group: s.is_group(),
        regular: s.is_regular(),
        inverse,
        e_unitary: if inverse { Some(s.is_e_unitary()?) } else { None },
        idempotents: s.idempotents(),
        stabilization_index: s.stabilization_index(),
        nil_degree,
        nilpotency_degree,
        elements: s
            .elements()
            .map(|a| {
                let (index, period) = s.index_period(a);
                ElementInfo {
                    element: a,
                    name: s.name(a),
                    idempotent: s.is_idempotent(a),
                    regular: s.is_regular_element(a),
                    index,
                    period,
                }
            })
            .collect(),
        green,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AutReport {
    pub order: usize,
    pub generators: Vec<Vec<usize>>,
    pub orbits: Vec<Vec<usize>>,
    pub tau: usize,
    pub characteristic_tower: Vec<Vec<usize>>,
}

pub fn aut(s: &FiniteSemigroup) -> Result<AutReport> {
    let g = automorphism_group(s)?;
    let orbits = point_orbits(&g).blocks();
    Ok(AutReport {
        order: g.order(),
        generators: g.generators().iter().map(|p| p.images().to_vec()).collect(),
        tau: orbits.len(),
        orbits,
        characteristic_tower: characteristic_ideal_tower(s)?,
    })
}

/// Which subgroup of `Aut(S)` to count orbits under.
#[derive(Clone, Debug, Default)]
pub struct OrbitRequest {
    pub fix: Vec<usize>,
    pub setwise: Option<Vec<Vec<usize>>>,
    pub classes: Option<Partition>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum OrbitsOutput {
    Tuples(OrbitReport),
    Classes {
        n: usize,
        classes: Partition,
        group_order: usize,
        class_orbit_count: u64,
    },
}

pub fn orbits(s: &FiniteSemigroup, n: usize, req: &OrbitRequest, opts: &OrbitOptions) -> Result<OrbitsOutput> {
    let full = automorphism_group(s)?;
    for &x in &req.fix {
        s.check_element(x)?;
    }
    if let Some(sets) = &req.setwise {
        for set in sets {
            s.check_subset(set)?;
        }
    }
    let (group, description) = match (&req.fix[..], &req.setwise) {
        ([], None) => (full, GroupDescription::Full),
        ([], Some(sets)) => (
            full.setwise_stabilizer(sets),
            GroupDescription::SetwiseStabilizer { sets: sets.clone() },
        ),
        (fix, None) => (
            full.pointwise_stabilizer(fix),
            GroupDescription::PointwiseStabilizer { fixed: fix.to_vec() },
        ),
        _ => bail!("--fix and --setwise cannot be combined"),
    };
    if let Some(tau) = &req.classes {
        if tau.len() != s.order() {
            bail!("class partition has {} points, semigroup has {}", tau.len(), s.order());
        }
        let count = semicat_core::aut::class_orbit_count_with(&group, tau, n, opts)?;
        return Ok(OrbitsOutput::Classes {
            n,
            classes: tau.clone(),
            group_order: group.order(),
            class_orbit_count: count,
        });
    }
    Ok(OrbitsOutput::Tuples(orbit_report(s, n, &group, description, opts)?))
}

#[derive(Clone, Debug)]
pub enum CongruenceRequest {
    Sigma,
    Mu,
    Generated(Vec<(usize, usize)>),
    Rees(Vec<usize>),
}

#[derive(Clone, Debug, Serialize)]
pub struct CongruenceReport {
    pub congruence: &'static str,
    pub block_ids: Partition,
    pub blocks: Vec<Vec<usize>>,
    pub quotient: SemigroupJson,
}

pub fn congruence(s: &FiniteSemigroup, req: &CongruenceRequest) -> Result<CongruenceReport> {
    let (name, rho) = match req {
        CongruenceRequest::Sigma => ("sigma", least_group_congruence(s)?),
        CongruenceRequest::Mu => ("mu", max_idempotent_separating(s)?),
        CongruenceRequest::Generated(pairs) => ("generated", congruence_generated_by(s, pairs)?),
        CongruenceRequest::Rees(ideal) => ("rees", rees_congruence(s, ideal)?),
    };
    let q = quotient(s, &rho)?;
    Ok(CongruenceReport {
        congruence: name,
        blocks: rho.blocks(),
        block_ids: rho,
        quotient: SemigroupJson::from(&q),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DecomposeReport {
    pub summands: Vec<Vec<usize>>,
    pub indecomposable: Vec<bool>,
    pub primitive: bool,
}

pub fn decompose(s: &FiniteSemigroup) -> Result<DecomposeReport> {
    let d = greatest_zero_direct_decomposition(s)?;
    let indecomposable = d
        .summands
        .iter()
        .map(|b| is_zero_directly_indecomposable(&s.restrict(b)?.0))
        .collect::<semicat_core::Result<Vec<bool>>>()?;
    Ok(DecomposeReport {
        primitive: is_primitive(s)?,
        summands: d.summands,
        indecomposable,
    })
}
