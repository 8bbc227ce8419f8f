//! JSON series files and report documents.
//!
//! Series file:
//!
//! ```json
//! {"kind": "power", "ring": {"kind": "padic", "p": 5, "precision": 8},
//!  "coeffs": ["1", "124"], "exact": false, "trunc_order": 1}
//! ```
//!
//! Power-series coefficients start at `x^0`, Laurent coefficients at `x^-1`.
//! Rationals are written `num/den` (or `num` when integral); p-adic values as
//! their decimal residue.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use formalode_core::{
    CoeffRing, LaurentTail, PadicRing, PowerSeries, RationalField, RingDescriptor,
};

use crate::error::{in_source, CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingJson {
    Rational,
    Padic { p: u64, precision: u32 },
}

impl From<RingDescriptor> for RingJson {
    fn from(d: RingDescriptor) -> Self {
        match d {
            RingDescriptor::Rational => RingJson::Rational,
            RingDescriptor::Padic { p, precision } => RingJson::Padic { p, precision },
        }
    }
}

/// A validated coefficient ring chosen at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyRing {
    Rational(RationalField),
    Padic(PadicRing),
}

impl AnyRing {
    pub fn from_json(ring: RingJson) -> CliResult<Self> {
        Ok(match ring {
            RingJson::Rational => AnyRing::Rational(RationalField),
            RingJson::Padic { p, precision } => AnyRing::Padic(PadicRing::new(p, precision)?),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    Power,
    Laurent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesFile {
    pub kind: SeriesKind,
    pub ring: RingJson,
    pub coeffs: Vec<String>,
    pub exact: bool,
    pub trunc_order: usize,
}

impl SeriesFile {
    pub fn from_power<R: CoeffRing>(s: &PowerSeries<R>) -> Self {
        Self {
            kind: SeriesKind::Power,
            ring: s.ring().descriptor().into(),
            coeffs: s.coeffs().iter().map(ToString::to_string).collect(),
            exact: s.is_exact(),
            trunc_order: s.trunc_order(),
        }
    }

    pub fn from_laurent<R: CoeffRing>(s: &LaurentTail<R>) -> Self {
        Self {
            kind: SeriesKind::Laurent,
            ring: s.ring().descriptor().into(),
            coeffs: s.coeffs().iter().map(ToString::to_string).collect(),
            exact: s.is_exact(),
            trunc_order: s.depth(),
        }
    }

    /// Reads either a bare series file or a report carrying a `series` field.
    pub fn from_json_text(text: &str, source: &str) -> CliResult<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| json_error(source, &e))?;
        let value = match value {
            Value::Object(mut map) if map.contains_key("series") && !map.contains_key("coeffs") => {
                map.remove("series").expect("checked")
            }
            other => other,
        };
        let file: SeriesFile = serde_json::from_value(value)
            .map_err(|e| CliError::Usage(format!("{source}: invalid series file: {e}")))?;
        file.validate(source)?;
        Ok(file)
    }

    pub fn read(path: &str) -> CliResult<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
        Self::from_json_text(&text, path)
    }

    fn validate(&self, source: &str) -> CliResult<()> {
        let expected = match self.kind {
            SeriesKind::Power => self.trunc_order + 1,
            SeriesKind::Laurent => self.trunc_order,
        };
        if self.coeffs.len() != expected {
            return Err(CliError::Usage(format!(
                "{source}: {} coefficients do not match trunc_order {} of a {:?} series",
                self.coeffs.len(),
                self.trunc_order,
                self.kind
            )));
        }
        Ok(())
    }

    fn parse_coeffs<R: CoeffRing>(&self, ring: &R, source: &str) -> CliResult<Vec<R::Elem>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                ring.parse(c)
                    .map_err(|e| in_source(&format!("{source}:coeffs[{i}]"), e))
            })
            .collect()
    }

    pub fn to_power<R: CoeffRing>(&self, ring: R, source: &str) -> CliResult<PowerSeries<R>> {
        if self.kind != SeriesKind::Power {
            return Err(CliError::Usage(format!(
                "{source}: expected a power series"
            )));
        }
        let coeffs = self.parse_coeffs(&ring, source)?;
        Ok(PowerSeries::new(ring, coeffs, self.exact)?)
    }

    pub fn to_laurent<R: CoeffRing>(&self, ring: R, source: &str) -> CliResult<LaurentTail<R>> {
        if self.kind != SeriesKind::Laurent {
            return Err(CliError::Usage(format!(
                "{source}: expected a Laurent series"
            )));
        }
        let coeffs = self.parse_coeffs(&ring, source)?;
        Ok(LaurentTail::new(ring, coeffs, self.exact))
    }

    /// `{"x^0": ..}` or `{"x^-1": ..}` labels in index order.
    pub fn labeled(&self) -> Value {
        let mut map = Map::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            let label = match self.kind {
                SeriesKind::Power => format!("x^{i}"),
                SeriesKind::Laurent => format!("x^-{}", i + 1),
            };
            map.insert(label, Value::String(c.clone()));
        }
        Value::Object(map)
    }
}

fn json_error(source: &str, e: &serde_json::Error) -> CliError {
    CliError::Usage(format!("{source}:{}:{}: {e}", e.line(), e.column()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub verified: bool,
    /// Highest coefficient index compared: `N - m` for truncated solutions.
    pub checked_order: usize,
    /// Whether the comparison covered every coefficient (polynomial case).
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Integrality {
    pub integral: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// One JSON document per invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub ring: RingJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail_cutoff: Option<usize>,
    /// An array of coefficient strings, or an object keyed by `x^k` / `x^-k`.
    pub coefficients: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integrality: Option<Integrality>,
}

impl Report {
    pub fn new(command: &str, ring: RingJson, coefficients: Value) -> Self {
        Self {
            command: command.to_string(),
            ring,
            regime: None,
            tail_cutoff: None,
            coefficients,
            series: None,
            verification: None,
            integrality: None,
        }
    }

    /// Report whose coefficients mirror a series: a plain array for power
    /// series, `x^-k` labels for Laurent tails.
    pub fn for_series(command: &str, series: SeriesFile) -> Self {
        let coefficients = match series.kind {
            SeriesKind::Power => Value::from(series.coeffs.clone()),
            SeriesKind::Laurent => series.labeled(),
        };
        let mut report = Self::new(command, series.ring, coefficients);
        report.series = Some(series);
        report
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| json_error("report", &e))
    }
}
