//! JSON interchange for graphs and generating sets.
//!
//! Integers that can exceed machine words (modulus, labels, residues,
//! invariant factors) travel as decimal strings. Splines are written in
//! vertex order `(f_{v_1}, ..., f_{v_n})`.

use flowup_core::{factorize, Certificate, EdgeLabeledGraph, GeneratingSet, Spline};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub modulus: String,
    pub vertices: usize,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub u: usize,
    pub v: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratingSetJson {
    pub splines: Vec<Vec<String>>,
    pub certificate: String,
    pub rank: usize,
    pub invariant_factors: Vec<String>,
}

fn parse_int(what: &str, s: &str) -> Result<u128, CliError> {
    s.trim()
        .parse::<u128>()
        .map_err(|e| CliError::Input(format!("{what} {s:?} is not a nonnegative decimal integer: {e}")))
}

impl GraphJson {
    pub fn from_graph(g: &EdgeLabeledGraph) -> Self {
        GraphJson {
            modulus: g.modulus().to_string(),
            vertices: g.vertex_count(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeJson { u: e.u, v: e.v, label: e.label.to_string() })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<EdgeLabeledGraph, CliError> {
        let m = parse_int("modulus", &self.modulus)?;
        let ctx = factorize(m)?;
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            edges.push((e.u, e.v, parse_int("label", &e.label)?));
        }
        Ok(EdgeLabeledGraph::new(ctx, self.vertices, &edges)?)
    }
}

impl GeneratingSetJson {
    pub fn from_set(gs: &GeneratingSet) -> Self {
        GeneratingSetJson {
            splines: gs
                .splines
                .iter()
                .map(|s| s.values().iter().map(u128::to_string).collect())
                .collect(),
            certificate: gs.certificate.as_str().to_string(),
            rank: gs.rank(),
            invariant_factors: gs.invariants.factors.iter().map(u128::to_string).collect(),
        }
    }

    pub fn spline_values(&self) -> Result<Vec<Spline>, CliError> {
        self.splines
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| parse_int("residue", x))
                    .collect::<Result<Vec<_>, _>>()
                    .map(Spline)
            })
            .collect()
    }

    pub fn certificate(&self) -> Option<Certificate> {
        Certificate::parse(&self.certificate)
    }
}

/// Pretty JSON with a trailing newline; stable across runs.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

pub fn parse_graph(text: &str) -> Result<EdgeLabeledGraph, CliError> {
    let g: GraphJson =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("graph JSON: {e}")))?;
    g.to_graph()
}

pub fn emit_graph(g: &EdgeLabeledGraph) -> String {
    to_json(&GraphJson::from_graph(g))
}

pub fn parse_generating_set(text: &str) -> Result<GeneratingSetJson, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("generating-set JSON: {e}")))
}

pub fn emit_generating_set(gs: &GeneratingSet) -> String {
    to_json(&GeneratingSetJson::from_set(gs))
}
