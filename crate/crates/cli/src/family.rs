//! Growth of orbit statistics along parametrized families.
//!
//! Every member is finite, so each statistic is a finite number; the report
//! only describes its behaviour over the requested range.

use anyhow::{ensure, Result};
use rayon::prelude::*;
use semicat_core::aut::{automorphism_group, full_orbit_count, tau};
use semicat_core::constructions as c;
use semicat_core::FiniteSemigroup;
use serde::{Deserialize, Serialize};

pub const EVIDENCE_NOTE: &str =
    "finite-truncation evidence over the stated range only; not a categoricity verdict";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Family {
    /// The `m`-element chain.
    ChainSemilattice,
    /// `m` non-zero elements with all products zero.
    Null,
    /// `B⁰[Z₂; m]`.
    Brandt,
    /// `m`-fold direct power of the two-element semilattice.
    DirectPower,
    /// `A ∪ {0, u}` with `|A| = m`.
    ExampleC,
    /// Non-empty subsets of an `m`-set under the zs operation.
    BooleanZs,
}

impl Family {
    pub fn member(self, m: usize) -> Result<FiniteSemigroup> {
        ensure!(m >= 1, "family parameters start at 1");
        Ok(match self {
            Family::ChainSemilattice => c::chain_semilattice(m),
            Family::Null => c::null_semigroup(m),
            Family::Brandt => c::brandt(&c::cyclic_group(2), m)?,
            Family::DirectPower => c::direct_product(&vec![c::chain_semilattice(2); m])?,
            Family::ExampleC => {
                ensure!(m >= 2, "example_c needs at least 2 letters");
                c::example_c(m)
            }
            Family::BooleanZs => {
                ensure!(m <= 16, "boolean_zs supports at most 16 atoms");
                c::boolean_zs(m)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Statistic {
    Tau,
    OrbitCount { n: usize },
    AutOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub from: usize,
    pub to: usize,
    pub statistic: Statistic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Trend {
    Constant,
    /// Non-decreasing and flat over the last steps.
    Stabilizing,
    StrictlyIncreasing,
    Irregular,
}

impl Trend {
    pub fn label(self) -> &'static str {
        match self {
            Trend::Constant | Trend::Stabilizing => "bounded over range",
            Trend::StrictlyIncreasing => "strictly increasing over range",
            Trend::Irregular => "no clear trend",
        }
    }

    pub fn classify(values: &[u64]) -> Trend {
        let steps: Vec<(u64, u64)> = values.windows(2).map(|w| (w[0], w[1])).collect();
        if steps.iter().all(|(a, b)| a == b) {
            Trend::Constant
        } else if steps.iter().all(|(a, b)| a < b) {
            Trend::StrictlyIncreasing
        } else if steps.iter().all(|(a, b)| a <= b) && steps.last().is_some_and(|(a, b)| a == b) {
            Trend::Stabilizing
        } else {
            Trend::Irregular
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub parameter: usize,
    pub order: usize,
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub rows: Vec<FamilyRow>,
    pub trend: Trend,
    pub label: String,
    pub note: String,
}

pub fn statistic(s: &FiniteSemigroup, stat: Statistic) -> Result<u64> {
    Ok(match stat {
        Statistic::Tau => tau(s)?,
        Statistic::OrbitCount { n } => full_orbit_count(s, n)?,
        Statistic::AutOrder => automorphism_group(s)?.order() as u64,
    })
}

pub fn run_family(spec: &FamilySpec) -> Result<FamilyReport> {
    ensure!(
        spec.from >= 1 && spec.from <= spec.to,
        "parameter range must be finite, positive and non-empty"
    );
    let rows = (spec.from..=spec.to)
        .into_par_iter()
        .map(|m| {
            let s = spec.family.member(m)?;
            Ok(FamilyRow {
                parameter: m,
                order: s.order(),
                value: statistic(&s, spec.statistic)?,
            })
        })
        .collect::<Result<Vec<FamilyRow>>>()?;
    let values: Vec<u64> = rows.iter().map(|r| r.value).collect();
    let trend = Trend::classify(&values);
    Ok(FamilyReport {
        spec: spec.clone(),
        rows,
        trend,
        label: trend.label().to_string(),
        note: EVIDENCE_NOTE.to_string(),
    })
}

/// Plain-text table over the same report.
pub fn render_table(report: &FamilyReport) -> String {
    let mut out = format!("{:>9}  {:>7}  {:>10}\n", "parameter", "order", "value");
    for r in &report.rows {
        out.push_str(&format!("{:>9}  {:>7}  {:>10}\n", r.parameter, r.order, r.value));
    }
    out.push_str(&format!("trend: {} ({})\n", report.label, report.note));
    out
}
