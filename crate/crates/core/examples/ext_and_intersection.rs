//! Ext^1 between sheaves equals the positive intersection number of the
//! corresponding curves; a single crossing resolves into two curves.

use annulus_core::homext::{dim_ext1, dim_hom};
use annulus_core::intersect::{pos_int, resolve_crossing};
use annulus_core::model::phi;
use annulus_core::{CurveClass, WeightType};

fn main() -> annulus_core::Result<()> {
    let w = WeightType::new(2, 3)?;
    let curves = [
        CurveClass::bridging(0, 0),
        CurveClass::bridging(1, -2),
        CurveClass::peri_upper(0, 2),
        CurveClass::peri_lower(0, 3),
    ];
    println!("{:>8} {:>8}  {:>6} {:>4} {:>3}", "alpha", "beta", "hom", "ext", "I+");
    for a in &curves {
        for b in &curves {
            let (sa, sb) = (phi(a, w)?, phi(b, w)?);
            println!(
                "{:>8} {:>8}  {:>6} {:>4} {:>3}",
                a.to_string(),
                b.to_string(),
                dim_hom(&sa, &sb, w)?,
                dim_ext1(&sa, &sb, w)?,
                pos_int(a, b, w)
            );
        }
    }

    let (a, b) = (CurveClass::bridging(1, -2), CurveClass::bridging(0, 0));
    if pos_int(&a, &b, w) == 1 {
        let show = |c: Option<CurveClass>| c.map_or("nothing".to_string(), |c| c.to_string());
        let (g1, g2) = resolve_crossing(&a, &b, w)?;
        println!("{a} x {b} resolves to {} and {}", show(g1), show(g2));
    }
    Ok(())
}
