//! Pairs of arcs in a triangulation, classified by how their flips interact,
//! and the exchange graph around a seed.

use annulus_core::graphs::{check_relations, exchange_graph};
use annulus_core::tilting::{vertex_to_tilting, LambdaVertex};
use annulus_core::WeightType;

fn main() -> annulus_core::Result<()> {
    let w = WeightType::new(2, 3)?;
    let t = vertex_to_tilting(&LambdaVertex::new(vec![0, 1], w)?, w)?.triangulation();
    println!("T = {t}");
    let n = t.arcs().len();
    for i in 0..n {
        for j in i + 1..n {
            let rel = check_relations(&t, i, j)?;
            println!("  {} / {}: {rel:?}", t.arcs()[i], t.arcs()[j]);
        }
    }
    let g = exchange_graph(&t, 2)?.graph;
    println!("{} triangulations within two flips", g.nodes.len());
    Ok(())
}
