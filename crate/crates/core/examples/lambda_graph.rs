//! The graph Lambda of tilting bundles in DOT form, plus the check that it
//! agrees with the flip graph on the same window.
//!
//! `cargo run --example lambda_graph -- 2 3 | dot -Tsvg > lambda.svg`

use annulus_core::graphs::{lambda_graph, verify_lambda_iso};
use annulus_core::WeightType;

fn main() -> annulus_core::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (p, q) = match args.as_slice() {
        [p, q, ..] => (*p, *q),
        _ => (2, 2),
    };
    let w = WeightType::new(p, q)?;
    print!("{}", lambda_graph(w, -2, 2)?.to_dot("lambda"));
    let report = verify_lambda_iso(w, -1, 1)?;
    eprintln!(
        "{} vertices, {} edges, flip graph equal: {}",
        report.vertices, report.lambda_edges, report.equal
    );
    Ok(())
}
