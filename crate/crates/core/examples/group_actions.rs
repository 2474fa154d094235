//! Mapping classes act on curves, sheaves and vertices of Lambda compatibly.

use annulus_core::model::phi;
use annulus_core::symmetry::{act_curve, act_sheaf, act_vertex, rho, McgWord};
use annulus_core::tilting::LambdaVertex;
use annulus_core::{CurveClass, WeightType};

fn main() -> annulus_core::Result<()> {
    let w = WeightType::new(3, 3)?;
    let f: McgWord = "r1 s r2-".parse()?;
    let c = CurveClass::peri_lower(0, 2);
    let image = act_curve(&f, &c, w)?;
    println!("[{f}] {c} = {image}");
    println!("  phi of image   {}", phi(&image, w)?);
    println!("  image of phi   {}", act_sheaf(&f, &phi(&c, w)?, w)?);

    let v = LambdaVertex::new(vec![0, 1, 2], w)?;
    println!("r1 on {v}: {}", act_vertex(&"r1".parse()?, &v, w)?);
    println!("r2 on {v}: {}", act_vertex(&"r2".parse()?, &v, w)?);

    let w = WeightType::new(4, 4)?;
    let v = LambdaVertex::new(vec![0, 0, 1, 4], w)?;
    println!("rho{v} = {}", rho(&v, w)?);
    Ok(())
}
