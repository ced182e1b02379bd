//! The JSON semigroup format: `{"order", "table", "names"?, "zero"?, "identity"?}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{validate, FiniteSemigroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<usize>,
}

impl From<&FiniteSemigroup> for SemigroupJson {
    fn from(s: &FiniteSemigroup) -> Self {
        SemigroupJson {
            order: s.order(),
            table: s.table_rows(),
            names: s.names().map(<[String]>::to_vec),
            zero: s.zero(),
            identity: s.identity(),
        }
    }
}

impl TryFrom<SemigroupJson> for FiniteSemigroup {
    type Error = Error;

    fn try_from(j: SemigroupJson) -> Result<FiniteSemigroup> {
        if j.order != j.table.len() {
            return Err(Error::InvalidTable(format!(
                "order is {} but the table has {} rows",
                j.order,
                j.table.len()
            )));
        }
        let s = validate(&j.table)?;
        s.check_markers(j.zero, j.identity)?;
        match j.names {
            Some(names) => s.with_names(names),
            None => Ok(s),
        }
    }
}

pub fn from_json_str(text: &str) -> Result<FiniteSemigroup> {
    let j: SemigroupJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidTable(e.to_string()))?;
    j.try_into()
}

pub fn to_json_string(s: &FiniteSemigroup) -> String {
    serde_json::to_string_pretty(&SemigroupJson::from(s)).expect("plain data serializes")
}
