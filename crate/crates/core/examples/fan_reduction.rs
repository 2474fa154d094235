//! Every tilting bundle reaches a fan bundle by bundle flips.

use annulus_core::tilting::{fan_tilting, reduce_to_fan, vertex_to_tilting, LambdaVertex};
use annulus_core::WeightType;

fn main() -> annulus_core::Result<()> {
    let w = WeightType::new(3, 4)?;
    for c in [vec![0, 3, 3], vec![-1, 0, 3], vec![2, 2, 2]] {
        let v = LambdaVertex::new(c, w)?;
        let t = vertex_to_tilting(&v, w)?;
        let red = reduce_to_fan(&t)?;
        println!("{v}: flips at slots {:?} reach T^{}_{}", red.moves, red.a, red.b);
    }
    let fan = fan_tilting(0, 0, w)?;
    println!("T^0_0 = {} with iota {:?}", fan.triangulation(), fan.iota());
    Ok(())
}
