//! JSON report schema shared by the verification suite and the exact
//! repetition command: the input, an optional exact value as its integer
//! quadruple, its decimal rendering, the minimizing phase, and a list of
//! named checks.

use serde::Serialize;

use crate::exact::{Integer, QuadExt};

/// An integer that serializes as a JSON number when it fits in 64 bits and
/// as a decimal string otherwise (discriminants can exceed any machine
/// width).
#[derive(Clone, Debug)]
pub struct IntJson(pub Integer);

impl Serialize for IntJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if let Ok(v) = i64::try_from(&self.0) {
            s.serialize_i64(v)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

/// Exact field element as the quadruple `(a + b√D)/c`.
#[derive(Clone, Debug, Serialize)]
pub struct QuadJson {
    pub a: IntJson,
    pub b: IntJson,
    pub c: IntJson,
    #[serde(rename = "D")]
    pub d: IntJson,
}

impl From<&QuadExt> for QuadJson {
    fn from(x: &QuadExt) -> Self {
        Self {
            a: IntJson(x.a().clone()),
            b: IntJson(x.b().clone()),
            c: IntJson(x.c().clone()),
            d: IntJson(x.d().clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: detail.into(),
        }
    }

    pub fn skip(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), status: CheckStatus::Skip, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_exact: Option<QuadJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_decimal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argmin_phase: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argmin_kind: Option<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(input: impl Into<String>) -> Self {
        Self {
            input: input.into(),
            value_exact: None,
            value_decimal: None,
            argmin_phase: None,
            argmin_kind: None,
            checks: Vec::new(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
