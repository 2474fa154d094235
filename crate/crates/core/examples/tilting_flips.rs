//! Triangulations as tilting sheaves: flipping an arc mutates one summand.

use annulus_core::tilting::{mutate_labels, vertex_to_tilting, LambdaVertex};
use annulus_core::WeightType;

fn main() -> annulus_core::Result<()> {
    let w = WeightType::new(2, 2)?;
    let bundle = vertex_to_tilting(&LambdaVertex::new(vec![0, 1], w)?, w)?;
    let t = bundle.triangulation();
    println!("T = {t}");
    println!("iota = {:?}, n = {}", bundle.iota(), bundle.n());
    for arc in t.arcs() {
        let (next, added) = t.flip(arc)?;
        let label = mutate_labels(&t, arc)?;
        let kind = if next.is_bundle() { "bundle" } else { "mixed" };
        println!("  flip {arc}: gains {added} = {label} ({kind})");
    }
    Ok(())
}
