//! JSON shapes written by the command-line tool.

use std::collections::BTreeMap;

use satlab_core::formulas::Q;
use satlab_core::search::SearchResult;
use serde::Serialize;

use crate::graph6;

#[derive(Debug, Serialize)]
pub struct SearchReport {
    pub order: usize,
    pub minimum: Option<String>,
    pub extremal_graph6: Vec<String>,
    pub examined: u64,
    pub saturated_count: u64,
    /// Target count -> number of qualifying graphs.
    pub spectrum: BTreeMap<String, u64>,
}

impl SearchReport {
    pub fn new(order: usize, res: &SearchResult) -> Self {
        SearchReport {
            order,
            minimum: res.minimum.map(|m| m.to_string()),
            extremal_graph6: res
                .extremal
                .iter()
                .map(|c| graph6::encode(&c.to_graph().expect("codes from search are valid")))
                .collect(),
            examined: res.examined,
            saturated_count: res.saturated_count,
            spectrum: res.counts.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub graph6: String,
    pub mode: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<serde_json::Value>,
}

/// `p/q`, always with an explicit denominator.
pub fn fraction(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn decimal(q: &Q) -> String {
    format!("{:.6}", *q.numer() as f64 / *q.denom() as f64)
}
