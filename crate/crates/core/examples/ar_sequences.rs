//! Auslander-Reiten sequences read off from elementary moves of curves.

use annulus_core::model::{ar_sequence, Lambda};
use annulus_core::{CurveClass, WeightType};

fn main() -> annulus_core::Result<()> {
    let w = WeightType::new(3, 2)?;
    for c in [
        CurveClass::bridging(0, 0),
        CurveClass::peri_upper(1, 3),
        CurveClass::peri_upper(0, 4),
        CurveClass::peri_lower(0, 2),
        CurveClass::loop_(Lambda::new("t")?, 2),
    ] {
        let ar = ar_sequence(&c, w)?;
        let middle: Vec<_> = ar.middle.iter().map(|s| s.to_string()).collect();
        println!(
            "{c:>10}: 0 -> {} -> {} -> {} -> 0",
            ar.left,
            middle.join(" + "),
            ar.right
        );
    }
    Ok(())
}
