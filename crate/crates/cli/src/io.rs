use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use semicat_core::json::SemigroupJson;
use semicat_core::FiniteSemigroup;
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::recipe::{self, Recipe};

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("invalid JSON in {}", path.display()))
}

/// A semigroup file holds either a Cayley table or a recipe.
pub fn load_semigroup(path: &Path) -> Result<FiniteSemigroup> {
    let value: serde_json::Value = read_json(path)?;
    if value.get("construct").is_some() {
        let r: Recipe = serde_json::from_value(value).context("not a valid recipe")?;
        return recipe::build(&r);
    }
    let j: SemigroupJson =
        serde_json::from_value(value).with_context(|| format!("{} is not a semigroup table", path.display()))?;
    Ok(FiniteSemigroup::try_from(j)?)
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
