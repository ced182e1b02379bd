//! Construction recipes: `{"construct": name, "args": {...}}`, nested freely.

use anyhow::{Context, Result};
use semicat_core::constructions as c;
use semicat_core::json::SemigroupJson;
use semicat_core::FiniteSemigroup;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construct", content = "args", rename_all = "snake_case")]
pub enum Recipe {
    Null {
        m: usize,
    },
    LeftZeroBand {
        m: usize,
    },
    ChainSemilattice {
        m: usize,
    },
    CyclicGroup {
        n: usize,
    },
    /// `trivial`, `Zn`, `K4`, `S3`, `S4`.
    Group {
        name: String,
    },
    Literal(SemigroupJson),
    Brandt {
        group: Box<Recipe>,
        m: usize,
    },
    /// Chain of semigroups, bottom component first.
    Chain {
        components: Vec<Recipe>,
    },
    Product {
        factors: Vec<Recipe>,
    },
    DirectSum {
        factors: Vec<Recipe>,
    },
    ZeroUnion {
        factors: Vec<Recipe>,
    },
    /// `action[t][s] = t·s`.
    Semidirect {
        s: Box<Recipe>,
        t: Box<Recipe>,
        action: Vec<Vec<usize>>,
    },
    BooleanZs {
        m: usize,
    },
    ExampleC {
        m: usize,
    },
    /// Poset given by strict relations `(a, b)` meaning `a < b`; `action[g][A] = gA`.
    PSemigroup {
        group: Box<Recipe>,
        points: usize,
        less: Vec<(usize, usize)>,
        y: Vec<usize>,
        action: Vec<Vec<usize>>,
        #[serde(default)]
        names: Option<Vec<String>>,
    },
    AdjoinZero {
        of: Box<Recipe>,
    },
    AdjoinIdentity {
        of: Box<Recipe>,
    },
}

fn all(list: &[Recipe]) -> Result<Vec<FiniteSemigroup>> {
    list.iter().map(build).collect()
}

pub fn build(r: &Recipe) -> Result<FiniteSemigroup> {
    let s = match r {
        Recipe::Null { m } => c::null_semigroup(positive(*m)?),
        Recipe::LeftZeroBand { m } => c::left_zero_band(positive(*m)?),
        Recipe::ChainSemilattice { m } => c::chain_semilattice(positive(*m)?),
        Recipe::CyclicGroup { n } => c::cyclic_group(positive(*n)?),
        Recipe::Group { name } => c::group_by_name(name)?,
        Recipe::Literal(j) => FiniteSemigroup::try_from(j.clone())?,
        Recipe::Brandt { group, m } => c::brandt(&build(group)?, *m)?,
        Recipe::Chain { components } => c::chain_of_semigroups(&all(components)?)?,
        Recipe::Product { factors } => c::direct_product(&all(factors)?)?,
        Recipe::DirectSum { factors } => c::direct_sum_of_monoids(&all(factors)?)?,
        Recipe::ZeroUnion { factors } => c::zero_direct_union(&all(factors)?)?,
        Recipe::Semidirect { s, t, action } => {
            let d = c::SemidirectData::new(build(s)?, build(t)?, action.clone())?;
            c::semidirect_product(&d)?
        }
        Recipe::BooleanZs { m } => {
            anyhow::ensure!((1..=16).contains(m), "boolean_zs needs 1..=16 atoms");
            c::boolean_zs(*m)
        }
        Recipe::ExampleC { m } => {
            anyhow::ensure!(*m >= 2, "example_c needs at least 2 letters");
            c::example_c(*m)
        }
        Recipe::PSemigroup {
            group,
            points,
            less,
            y,
            action,
            names,
        } => {
            let poset = c::FinitePoset::from_covers(*points, less)?;
            let mut t = c::McAlisterTriple::new(build(group)?, poset, y.clone(), action.clone())?;
            if let Some(names) = names {
                t = t.with_names(names.clone())?;
            }
            c::p_semigroup(&t)?.semigroup
        }
        Recipe::AdjoinZero { of } => build(of)?.adjoin_zero(),
        Recipe::AdjoinIdentity { of } => build(of)?.adjoin_identity(),
    };
    Ok(s)
}

fn positive(m: usize) -> Result<usize> {
    anyhow::ensure!(m >= 1, "size parameter must be at least 1");
    Ok(m)
}

pub fn from_json_str(text: &str) -> Result<Recipe> {
    serde_json::from_str(text).context("not a valid recipe")
}
