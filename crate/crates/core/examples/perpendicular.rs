//! Perpendicular categories from cutting the annulus along an exceptional arc.

use annulus_core::model::{indecomposables_in_window, is_arc, phi};
use annulus_core::perp::perpendicular;
use annulus_core::WeightType;

fn main() -> annulus_core::Result<()> {
    let w = WeightType::new(2, 3)?;
    for c in indecomposables_in_window(w, 0, 0)? {
        if !is_arc(&c, w) {
            continue;
        }
        let parts: Vec<_> = perpendicular(&c, w)?.iter().map(|p| p.category()).collect();
        println!("{:>14} ({c}): {}", phi(&c, w)?.to_string(), parts.join(" x "));
    }
    Ok(())
}
