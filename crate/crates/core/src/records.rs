//! Line-delimited JSON records: one object per line, tuples and tables as
//! integer arrays, rationals as `"p/q"` strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moments::{tau_exponent, ModelData, Monomial, Parity, Rational};
use crate::tables::CatalanTable;
use crate::tuples::CatalanTuple;

/// Bumped whenever any record layout changes.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleRecord {
    pub tuple: CatalanTuple,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub table: CatalanTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreadRecord {
    pub from: usize,
    pub to: usize,
    pub parity: Parity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialRecord {
    pub table: CatalanTable,
    pub sign_exponent: usize,
    pub chords: Vec<[usize; 2]>,
    pub threads: Vec<ThreadRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl MonomialRecord {
    pub fn new(monomial: &Monomial, value: Option<&Rational>) -> Self {
        MonomialRecord {
            table: monomial.table().clone(),
            sign_exponent: tau_exponent(monomial.table()),
            chords: monomial.chords().iter().map(|&(l, m)| [l, m]).collect(),
            threads: monomial
                .threads()
                .iter()
                .map(|t| ThreadRecord {
                    from: t.from,
                    to: t.to,
                    parity: t.parity(),
                })
                .collect(),
            value: value.map(format_rational),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub summary: Summary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub kind: String,
    pub k: usize,
    pub count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total: Option<String>,
}

/// Model data file: `{"eigenvalues": {"0": "p/q", ...}, "two_point": {"0,1": "p/q", ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDataRecord {
    pub eigenvalues: BTreeMap<String, String>,
    pub two_point: BTreeMap<String, String>,
}

impl ModelDataRecord {
    pub fn from_data(data: &ModelData) -> Self {
        ModelDataRecord {
            eigenvalues: data
                .eigenvalues()
                .iter()
                .enumerate()
                .map(|(j, e)| (j.to_string(), format_rational(e)))
                .collect(),
            two_point: data
                .two_point_values()
                .map(|((l, m), v)| (format!("{l},{m}"), format_rational(v)))
                .collect(),
        }
    }

    pub fn into_data(self) -> Result<ModelData> {
        let mut indexed = BTreeMap::new();
        for (key, value) in &self.eigenvalues {
            let index: usize = key
                .trim()
                .parse()
                .map_err(|_| Error::Record(format!("bad eigenvalue index `{key}`")))?;
            indexed.insert(index, parse_rational(value)?);
        }
        let n = indexed.len();
        if let Some((&last, _)) = indexed.last_key_value() {
            if last + 1 != n {
                return Err(Error::Record(format!(
                    "eigenvalue indices must be 0..{n}, found index {last}"
                )));
            }
        }
        let eigenvalues = indexed.into_values().collect();
        let mut pairs = Vec::with_capacity(self.two_point.len());
        for (key, value) in &self.two_point {
            let (l, m) = key
                .split_once(',')
                .and_then(|(l, m)| Some((l.trim().parse().ok()?, m.trim().parse().ok()?)))
                .ok_or_else(|| Error::Record(format!("bad two-point key `{key}`")))?;
            pairs.push(((l, m), parse_rational(value)?));
        }
        ModelData::new(eigenvalues, pairs)
    }
}

pub fn parse_model_data(text: &str) -> Result<ModelData> {
    let record: ModelDataRecord =
        serde_json::from_str(text).map_err(|e| Error::Record(e.to_string()))?;
    record.into_data()
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Record(format!("bad rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::ZERO {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Always `"p/q"` in lowest terms with `q > 0`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_table(text: &str) -> Result<CatalanTable> {
    serde_json::from_str(text).map_err(|e| Error::Record(e.to_string()))
}

pub fn parse_tuple(text: &str) -> Result<CatalanTuple> {
    serde_json::from_str(text).map_err(|e| Error::Record(e.to_string()))
}

/// Serializes one record as a single line (no trailing newline).
pub fn to_line<T: Serialize>(record: &T) -> String {
    serde_json::to_string(record).expect("records always serialize")
}
