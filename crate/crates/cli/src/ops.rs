//! Request decoding and the operations shared by the command line and the
//! HTTP API. Every operation returns a `serde_json::Value`, printed through
//! the canonical encoder by both front ends.

use annulus_core::graphs::{self, Graph};
use annulus_core::homext::{dim_ext1, dim_hom};
use annulus_core::intersect::{pos_int, resolve_crossing};
use annulus_core::json::{canonical_value, parse, TriangulationJson, VertexJson};
use annulus_core::model::{ar_sequence, is_arc, phi, phi_inv, SheafJson};
use annulus_core::perp::{perpendicular, PerpReport};
use annulus_core::symmetry::{act_curve, act_sheaf, act_triangulation, act_vertex, rho, McgWord};
use annulus_core::tilting::{
    complements as arc_complements, reduce_to_fan as reduce, validate_tilting, vertex_to_tilting, LambdaVertex,
    TiltingBundle, Triangulation,
};
use annulus_core::{CurveClass, Error, Result, SheafLabel, WeightType};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

const CURVE_KINDS: [&str; 4] = ["bridging", "peri_upper", "peri_lower", "loop"];

/// A curve class or a sheaf label, told apart by `kind`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Curve(CurveClass),
    Sheaf(SheafJson),
}

impl Object {
    pub fn from_value(v: Value) -> Result<Object> {
        let kind = v.get("kind").and_then(Value::as_str).unwrap_or_default().to_string();
        let decode = |e: serde_json::Error| Error::Parse(e.to_string());
        if CURVE_KINDS.contains(&kind.as_str()) {
            serde_json::from_value(v).map(Object::Curve).map_err(decode)
        } else {
            serde_json::from_value(v).map(Object::Sheaf).map_err(decode)
        }
    }

    pub fn parse(s: &str) -> Result<Object> {
        Object::from_value(parse(s)?)
    }

    /// The canonical curve and its sheaf.
    pub fn resolve(self, w: WeightType) -> Result<(CurveClass, SheafLabel)> {
        match self {
            Object::Curve(c) => {
                c.validate()?;
                let c = c.canonical(w);
                let s = phi(&c, w)?;
                Ok((c, s))
            }
            Object::Sheaf(j) => {
                let s = j.into_label(w)?;
                Ok((phi_inv(&s, w)?, s))
            }
        }
    }

    pub fn curve(self, w: WeightType) -> Result<CurveClass> {
        Ok(self.resolve(w)?.0)
    }

    pub fn sheaf(self, w: WeightType) -> Result<SheafLabel> {
        Ok(self.resolve(w)?.1)
    }
}

impl<'de> Deserialize<'de> for Object {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Object::from_value(Value::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Arcs of a triangulation. Accepts `{"arcs": [...]}` with optional `p`,
/// `q` (which must then agree with the weight type in use) or a bare array.
pub fn parse_arcs(s: &str, w: WeightType) -> Result<Vec<CurveClass>> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Arcs {
        Bare(Vec<CurveClass>),
        Doc {
            p: Option<i64>,
            q: Option<i64>,
            arcs: Vec<CurveClass>,
        },
    }
    match parse::<Arcs>(s)? {
        Arcs::Bare(arcs) => Ok(arcs),
        Arcs::Doc { p, q, arcs } => {
            if let (Some(p), Some(q)) = (p, q) {
                w.ensure_same(WeightType::new(p, q)?)?;
            }
            Ok(arcs)
        }
    }
}

pub fn parse_triangulation(s: &str, w: WeightType) -> Result<Triangulation> {
    Triangulation::new(w, &parse_arcs(s, w)?)
}

pub fn parse_vertex(s: &str, w: WeightType) -> Result<LambdaVertex> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Coords {
        Bare(Vec<i64>),
        Doc(VertexJson),
    }
    let c = match parse::<Coords>(s)? {
        Coords::Bare(c) => c,
        Coords::Doc(v) => v.c,
    };
    LambdaVertex::new(c, w)
}

/// `lo:hi`, both ends inclusive.
pub fn parse_range(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("expected a range lo:hi, got {s:?}"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

pub fn bundle(t: &Triangulation) -> Result<TiltingBundle> {
    if !t.is_bundle() {
        return Err(Error::Precondition(format!(
            "{t} has peripheral arcs, so it is not a tilting bundle"
        )));
    }
    TiltingBundle::from_triangulation(t)
}

fn bits(v: &[bool]) -> Vec<u8> {
    v.iter().map(|b| *b as u8).collect()
}

pub fn classify(obj: Object, w: WeightType) -> Result<Value> {
    let (c, s) = obj.resolve(w)?;
    canonical_value(&json!({
        "arc": is_arc(&c, w),
        "curve": c,
        "sheaf": s,
        "text": format!("{c} <-> {s}"),
    }))
}

pub fn hom(a: Object, b: Object, w: WeightType) -> Result<Value> {
    Ok(dim_hom(&a.sheaf(w)?, &b.sheaf(w)?, w)?.into())
}

pub fn ext(a: Object, b: Object, w: WeightType) -> Result<Value> {
    Ok(dim_ext1(&a.sheaf(w)?, &b.sheaf(w)?, w)?.into())
}

pub fn iplus(a: Object, b: Object, w: WeightType) -> Result<Value> {
    Ok(pos_int(&a.curve(w)?, &b.curve(w)?, w).into())
}

pub fn resolve(a: Object, b: Object, w: WeightType) -> Result<Value> {
    let (g1, g2) = resolve_crossing(&a.curve(w)?, &b.curve(w)?, w)?;
    canonical_value(&json!({ "gamma1": g1, "gamma2": g2 }))
}

pub fn ar(obj: Object, w: WeightType) -> Result<Value> {
    canonical_value(&ar_sequence(&obj.curve(w)?, w)?)
}

pub fn triangulate(v: &LambdaVertex, w: WeightType) -> Result<Value> {
    let t = vertex_to_tilting(v, w)?.triangulation();
    canonical_value(&TriangulationJson::from(&t))
}

pub fn validate(arcs: &[CurveClass], w: WeightType) -> Result<Value> {
    let reason = match Triangulation::new(w, arcs) {
        Ok(_) => None,
        Err(e) if e.is_internal() => return Err(e),
        Err(e) => Some(e.to_string()),
    };
    debug_assert_eq!(reason.is_none(), validate_tilting(arcs, w));
    canonical_value(&json!({ "valid": reason.is_none(), "reason": reason }))
}

#[derive(Debug, Serialize)]
pub struct FlipReport {
    pub triangulation: TriangulationJson,
    pub removed: CurveClass,
    pub added: CurveClass,
    pub sheaf_labels: Vec<SheafLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iota: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

/// Flip the arc at 0-based `index` of the sorted arc list.
pub fn flip(t: &Triangulation, index: usize) -> Result<Value> {
    let removed = t
        .arcs()
        .get(index)
        .cloned()
        .ok_or_else(|| Error::Precondition(format!("arc index {index} out of range 0..{}", t.arcs().len())))?;
    let (next, added) = t.flip(&removed)?;
    let mut report = FlipReport {
        triangulation: TriangulationJson::from(&next),
        removed,
        added,
        sheaf_labels: next.sheaf_labels(),
        vertex: None,
        iota: None,
        n: None,
    };
    if next.is_bundle() {
        let b = TiltingBundle::from_triangulation(&next)?;
        report.vertex = Some(b.vertex().coords().to_vec());
        report.iota = Some(bits(&b.iota()));
        report.n = Some(b.n());
    }
    canonical_value(&report)
}

pub fn complements(almost: &[CurveClass], w: WeightType) -> Result<Value> {
    canonical_value(&arc_complements(almost, w)?)
}

pub fn iota(b: &TiltingBundle) -> Result<Value> {
    canonical_value(&json!({
        "vertex": b.vertex().coords(),
        "slots": b.arcs(),
        "iota": bits(&b.iota()),
        "n": b.n(),
    }))
}

pub fn reduce_to_fan(b: &TiltingBundle) -> Result<Value> {
    let red = reduce(b)?;
    canonical_value(&json!({ "moves": red.moves, "a": red.a, "b": red.b }))
}

pub fn lambda_graph(w: WeightType, lo: i64, hi: i64) -> Result<Graph> {
    graphs::lambda_graph(w, lo, hi)
}

pub fn exchange_graph(seed: &Triangulation, depth: usize) -> Result<Graph> {
    Ok(graphs::exchange_graph(seed, depth)?.graph)
}

pub fn verify_lambda_iso(w: WeightType, lo: i64, hi: i64) -> Result<(Value, bool)> {
    let r = graphs::verify_lambda_iso(w, lo, hi)?;
    let ok = r.equal && r.degree_mismatches.is_empty();
    Ok((canonical_value(&r)?, ok))
}

/// What a mapping class can act on.
#[derive(Debug, Clone)]
pub enum Target {
    Object(Object),
    Triangulation(Triangulation),
    Vertex(LambdaVertex),
}

pub fn act(f: &McgWord, target: Target, w: WeightType) -> Result<Value> {
    match target {
        Target::Object(obj) => {
            let (c, s) = obj.resolve(w)?;
            canonical_value(&json!({
                "curve": act_curve(f, &c, w)?,
                "sheaf": act_sheaf(f, &s, w)?,
            }))
        }
        Target::Triangulation(t) => canonical_value(&TriangulationJson::from(&act_triangulation(f, &t)?)),
        Target::Vertex(v) => canonical_value(&act_vertex(f, &v, w)?.coords()),
    }
}

pub fn rho_vertex(v: &LambdaVertex, w: WeightType) -> Result<Value> {
    canonical_value(&rho(v, w)?.coords())
}

pub fn perp(obj: Object, w: WeightType) -> Result<Value> {
    let components = perpendicular(&obj.curve(w)?, w)?;
    canonical_value(&PerpReport { components })
}

/// `{"error": message}`.
pub fn error_value(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}
