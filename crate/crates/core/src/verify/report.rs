//! Verification report and its lossless JSON form.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::{Error, Result};

/// Outcome of one claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub space: String,
    pub params: String,
    pub samples: usize,
    #[serde(with = "float17")]
    pub max_residual: f64,
    #[serde(with = "float17")]
    pub mean_residual: f64,
    #[serde(with = "opt_float17")]
    pub expected: Option<f64>,
    #[serde(with = "opt_float17")]
    pub measured: Option<f64>,
    #[serde(with = "float17")]
    pub tol: f64,
    pub pass: bool,
    pub note: Option<String>,
}

/// Run-level information, written as the first line of machine formats.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub tool: String,
    pub version: String,
    pub generator: String,
    pub seed: u64,
    pub samples: usize,
    #[serde(with = "opt_float17")]
    pub tol_override: Option<f64>,
    pub targets: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub header: ReportHeader,
    pub claims: Vec<ClaimResult>,
    /// Seconds spent in `run`. Not serialized, so that reports of identical
    /// configurations are byte-identical.
    pub wall_time: f64,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| !c.pass)
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }

    /// Parse the json-lines form: one header line, then one line per claim.
    pub fn from_json_lines(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Config("empty report".into()))?;
        let header: ReportHeader = serde_json::from_str(header)?;
        let claims = lines
            .map(serde_json::from_str)
            .collect::<std::result::Result<Vec<ClaimResult>, _>>()?;
        Ok(Self {
            header,
            claims,
            wall_time: 0.0,
        })
    }
}

/// Text form of a float: 17 significant digits, or `NaN` / `inf` / `-inf`.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "NaN".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

fn parse_float(s: &str) -> std::result::Result<f64, String> {
    match s {
        "NaN" => Ok(f64::NAN),
        "inf" => Ok(f64::INFINITY),
        "-inf" => Ok(f64::NEG_INFINITY),
        _ => s.parse().map_err(|e| format!("bad float `{s}`: {e}")),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FloatRepr {
    Number(f64),
    Text(String),
}

/// Finite floats as JSON numbers with 17 significant digits, non-finite ones
/// as strings.
mod float17 {
    use super::*;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
        if x.is_finite() {
            let raw = RawValue::from_string(format_float(*x)).map_err(serde::ser::Error::custom)?;
            raw.serialize(s)
        } else {
            s.serialize_str(&format_float(*x))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
        match FloatRepr::deserialize(d)? {
            FloatRepr::Number(x) => Ok(x),
            FloatRepr::Text(t) => parse_float(&t).map_err(serde::de::Error::custom),
        }
    }
}

mod opt_float17 {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some(v) => float17::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<f64>, D::Error> {
        match Option::<FloatRepr>::deserialize(d)? {
            None => Ok(None),
            Some(FloatRepr::Number(x)) => Ok(Some(x)),
            Some(FloatRepr::Text(t)) => parse_float(&t).map(Some).map_err(serde::de::Error::custom),
        }
    }
}
