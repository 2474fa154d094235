//! Wire formats and canonical JSON output.
//!
//! Output goes through `serde_json::Value`, whose maps are sorted, so equal
//! values always print byte-for-byte the same.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lgroup::WeightType;
use crate::model::CurveClass;
use crate::tilting::{LambdaVertex, Triangulation};

pub fn canonical_value<T: Serialize>(v: &T) -> Result<serde_json::Value> {
    serde_json::to_value(v).map_err(|e| Error::Invariant(format!("serialization failed: {e}")))
}

/// Compact JSON with sorted object keys.
pub fn to_canonical_string<T: Serialize>(v: &T) -> Result<String> {
    Ok(canonical_value(v)?.to_string())
}

pub fn parse<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    pub p: i64,
    pub q: i64,
    pub arcs: Vec<CurveClass>,
}

impl TriangulationJson {
    pub fn into_triangulation(self) -> Result<Triangulation> {
        Triangulation::new(WeightType::new(self.p, self.q)?, &self.arcs)
    }
}

impl From<&Triangulation> for TriangulationJson {
    fn from(t: &Triangulation) -> Self {
        TriangulationJson {
            p: t.weight().p(),
            q: t.weight().q(),
            arcs: t.arcs().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub c: Vec<i64>,
}

impl VertexJson {
    pub fn into_vertex(self, w: WeightType) -> Result<LambdaVertex> {
        LambdaVertex::new(self.c, w)
    }
}

impl From<&LambdaVertex> for VertexJson {
    fn from(v: &LambdaVertex) -> Self {
        VertexJson { c: v.coords().to_vec() }
    }
}
