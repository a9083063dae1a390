//! Interchange documents, tagged `schubert-mult/1`.
//!
//! Documents are JSON objects. An instance document fits on one line, so a
//! batch file holds one instance per line. Big integers are written as
//! decimal strings.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::guard::Guard;
use crate::multiplicity::{agreed_value, evaluate_methods, Method, Outcome};
use crate::schubert::{
    frobenius, partition_from_i, s_vector, thm5_printed_variant, validate, SchubertDatum,
};

pub const SCHEMA: &str = "schubert-mult/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDocument {
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub n: i64,
    pub d: i64,
    pub i: Vec<i64>,
    pub j: Vec<i64>,
}

impl InstanceDocument {
    pub fn new(n: i64, d: i64, i: Vec<i64>, j: Vec<i64>, label: Option<String>) -> Self {
        InstanceDocument {
            schema: SCHEMA.to_string(),
            label,
            n,
            d,
            i,
            j,
        }
    }

    pub fn from_datum(datum: &SchubertDatum, label: Option<String>) -> Self {
        InstanceDocument::new(
            datum.n(),
            datum.d() as i64,
            datum.i().to_vec(),
            datum.j().to_vec(),
            label,
        )
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let doc: InstanceDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        check_schema(&doc.schema)?;
        Ok(doc)
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("instance documents serialize")
    }

    pub fn datum(&self) -> Result<SchubertDatum, Error> {
        Ok(validate(self.n, self.d, &self.i, &self.j)?)
    }

    /// Label used in file names: the given label, or one derived from the data.
    pub fn file_label(&self) -> String {
        match &self.label {
            Some(l) => l
                .chars()
                .map(|c| {
                    if c.is_ascii_alphanumeric() || c == '-' || c == '_' {
                        c
                    } else {
                        '_'
                    }
                })
                .collect(),
            None => format!(
                "n{}-d{}-i{}-j{}",
                self.n,
                self.d,
                dash_join(&self.i),
                dash_join(&self.j)
            ),
        }
    }
}

fn dash_join(v: &[i64]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("_")
}

fn check_schema(schema: &str) -> Result<(), Error> {
    if schema == SCHEMA {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "unsupported schema {schema:?}, expected {SCHEMA:?}"
        )))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusData {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema: String,
    pub instance: InstanceDocument,
    pub s: Vec<i64>,
    /// Computed values by method name.
    pub values: BTreeMap<String, String>,
    /// Enumeration methods refused by the guard, with the reason.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub skipped: BTreeMap<String, String>,
    /// The dual-path determinant with printed indices; informational only.
    pub thm5_printed: String,
    pub agreement: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frobenius: Option<FrobeniusData>,
    /// Wall-clock microseconds per method; only filled on request so that
    /// default output is reproducible byte for byte.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<BTreeMap<String, u64>>,
}

impl ResultDocument {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let doc: ResultDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        check_schema(&doc.schema)?;
        Ok(doc)
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("result documents serialize")
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("result documents serialize")
    }
}

/// Evaluates `methods` on the instance and assembles the result document.
///
/// Methods that need `j = (1, ..., d)` are silently left out on other data.
pub fn compute_document(
    instance: &InstanceDocument,
    methods: &[Method],
    guard: Guard,
    timing: bool,
) -> Result<ResultDocument, Error> {
    let datum = instance.datum()?;
    let mut timings = BTreeMap::new();
    let mut outcomes = Vec::new();
    for &m in methods {
        let start = Instant::now();
        let mut out = evaluate_methods(&datum, &[m], guard)?;
        timings.insert(m.name().to_string(), start.elapsed().as_micros() as u64);
        outcomes.append(&mut out);
    }
    let mut values = BTreeMap::new();
    let mut skipped = BTreeMap::new();
    for (m, o) in &outcomes {
        match o {
            Outcome::Value(v) => {
                values.insert(m.name().to_string(), v.to_string());
            }
            Outcome::Skipped(why) => {
                skipped.insert(m.name().to_string(), why.clone());
            }
            Outcome::NotApplicable => {}
        }
    }
    let (agreement, multiplicity) = match agreed_value(&outcomes) {
        Ok(v) => (true, v.map(|v| v.to_string())),
        Err(Error::DisagreementDetected(_)) => (false, None),
        Err(e) => return Err(e),
    };
    let (partition, frob) = if datum.is_special() {
        let lambda = partition_from_i(&datum);
        let fc = frobenius(&lambda);
        (
            Some(lambda.parts().to_vec()),
            Some(FrobeniusData {
                alpha: fc.alpha,
                beta: fc.beta,
            }),
        )
    } else {
        (None, None)
    };
    Ok(ResultDocument {
        schema: SCHEMA.to_string(),
        instance: instance.clone(),
        s: s_vector(&datum).0,
        values,
        skipped,
        thm5_printed: thm5_printed_variant(&datum).to_string(),
        agreement,
        multiplicity,
        partition,
        frobenius: frob,
        timing_us: timing.then_some(timings),
    })
}
