//! Stateless JSON API over the shared operations.

use std::collections::HashMap;

use annulus_core::json::{parse, to_canonical_string, TriangulationJson};
use annulus_core::symmetry::McgWord;
use annulus_core::{Error, Result, WeightType};
use axum::body::Bytes;
use axum::extract::rejection::QueryRejection;
use axum::extract::Query;
use axum::http::{header, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::Deserialize;
use serde_json::{json, Value};
use tower_http::cors::{Any, CorsLayer};

use crate::ops::{self, Object, Target};

pub fn router() -> Router {
    let cors = CorsLayer::new()
        .allow_origin(Any)
        .allow_methods([Method::GET, Method::POST])
        .allow_headers([header::CONTENT_TYPE]);
    Router::new()
        .route("/api/health", get(health))
        .route("/api/triangulation/from-vertex", post(from_vertex))
        .route("/api/flip", post(flip))
        .route("/api/act", post(act))
        .route("/api/ext", get(ext))
        .route("/api/perp", post(perp))
        .layer(cors)
}

pub async fn serve(port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
    tracing::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router()).await
}

/// Canonical JSON body; user errors become 400, broken invariants 500.
fn reply(result: Result<Value>) -> Response {
    let (status, value) = match result {
        Ok(v) => (StatusCode::OK, v),
        Err(e) => {
            let status = if e.is_internal() {
                tracing::error!("{e}");
                StatusCode::INTERNAL_SERVER_ERROR
            } else {
                tracing::debug!("rejected: {e}");
                StatusCode::BAD_REQUEST
            };
            (status, ops::error_value(&e))
        }
    };
    let body = to_canonical_string(&value).unwrap_or_else(|e| json!({ "error": e.to_string() }).to_string());
    (status, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

fn body<T: for<'a> Deserialize<'a>>(bytes: &Bytes) -> Result<T> {
    let s = std::str::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))?;
    parse(s)
}

async fn health() -> Response {
    reply(Ok(json!({ "status": "ok" })))
}

#[derive(Deserialize)]
struct FromVertex {
    p: i64,
    q: i64,
    c: Vec<i64>,
}

async fn from_vertex(bytes: Bytes) -> Response {
    reply((|| {
        let req: FromVertex = body(&bytes)?;
        let w = WeightType::new(req.p, req.q)?;
        let v = annulus_core::tilting::LambdaVertex::new(req.c, w)?;
        ops::triangulate(&v, w)
    })())
}

#[derive(Deserialize)]
struct FlipRequest {
    triangulation: TriangulationJson,
    arc_index: usize,
}

async fn flip(bytes: Bytes) -> Response {
    reply((|| {
        let req: FlipRequest = body(&bytes)?;
        ops::flip(&req.triangulation.into_triangulation()?, req.arc_index)
    })())
}

#[derive(Deserialize)]
struct ActRequest {
    word: String,
    triangulation: TriangulationJson,
}

async fn act(bytes: Bytes) -> Response {
    reply((|| {
        let req: ActRequest = body(&bytes)?;
        let f: McgWord = req.word.parse()?;
        let t = req.triangulation.into_triangulation()?;
        let w = t.weight();
        ops::act(&f, Target::Triangulation(t), w)
    })())
}

async fn ext(query: std::result::Result<Query<HashMap<String, String>>, QueryRejection>) -> Response {
    reply((|| {
        let Query(params) = query.map_err(|e| Error::Parse(e.body_text()))?;
        let field = |k: &str| {
            params
                .get(k)
                .ok_or_else(|| Error::Parse(format!("missing query parameter {k:?}")))
        };
        let int = |k: &str| -> Result<i64> {
            field(k)?
                .parse()
                .map_err(|_| Error::Parse(format!("query parameter {k:?} is not an integer")))
        };
        let w = WeightType::new(int("p")?, int("q")?)?;
        ops::ext(Object::parse(field("from")?)?, Object::parse(field("to")?)?, w)
    })())
}

#[derive(Deserialize)]
struct PerpRequest {
    p: i64,
    q: i64,
    object: Object,
}

async fn perp(bytes: Bytes) -> Response {
    reply((|| {
        let req: PerpRequest = body(&bytes)?;
        ops::perp(req.object, WeightType::new(req.p, req.q)?)
    })())
}
