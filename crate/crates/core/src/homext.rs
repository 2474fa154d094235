//! Dimensions of `Hom` and `Ext^1` between indecomposable sheaves.
//!
//! The category is hereditary, so these two numbers are all there is. `Ext^1`
//! is always computed through Serre duality `Ext^1(a,b) = D Hom(b, tau a)`;
//! the two closed formulas for line bundles and for exceptional torsion
//! against line bundles are kept alongside and cross-checked.

use crate::error::Result;
use crate::lgroup::{LElement, WeightType};
use crate::model::{tau_inv_sheaf, tau_sheaf, ExcPoint, SheafLabel};

/// `dim Hom(S_i^(a), S_k^(b))` inside a tube of rank `r`.
///
/// A nonzero map factors as `S_i^(a) ->> S_i^(c) >-> S_k^(b)`; the quotient
/// of length `c` has top `i`, the subobject of length `c` has top `k - b + c`.
pub fn tube_hom(r: i64, i: i64, a: i64, k: i64, b: i64) -> u64 {
    (1..=a.min(b)).filter(|c| (c - (i - k + b)).rem_euclid(r) == 0).count() as u64
}

pub fn dim_hom(a: &SheafLabel, b: &SheafLabel, w: WeightType) -> Result<u64> {
    a.check_weight(w)?;
    b.check_weight(w)?;
    Ok(match (a, b) {
        (SheafLabel::Line(x), SheafLabel::Line(y)) => (*y - *x).dim_s(),
        (_, SheafLabel::Line(_)) => 0,
        (SheafLabel::Line(_), SheafLabel::TorsionOrd { len, .. }) => *len as u64,
        (SheafLabel::Line(x), SheafLabel::TorsionExc { .. }) => match tau_inv_sheaf(b, w)? {
            SheafLabel::TorsionExc { point, top, len } => ext1_exc_line(point, top, len, *x),
            _ => unreachable!("twisting keeps torsion in its tube"),
        },
        (
            SheafLabel::TorsionExc { point, top, len },
            SheafLabel::TorsionExc {
                point: point2,
                top: top2,
                len: len2,
            },
        ) => {
            if point == point2 {
                tube_hom(point.rank(w), *top, *len, *top2, *len2)
            } else {
                0
            }
        }
        (SheafLabel::TorsionOrd { lam, len }, SheafLabel::TorsionOrd { lam: lam2, len: len2 }) => {
            if lam == lam2 {
                (*len).min(*len2) as u64
            } else {
                0
            }
        }
        (SheafLabel::TorsionExc { .. }, SheafLabel::TorsionOrd { .. })
        | (SheafLabel::TorsionOrd { .. }, SheafLabel::TorsionExc { .. }) => 0,
    })
}

pub fn dim_ext1(a: &SheafLabel, b: &SheafLabel, w: WeightType) -> Result<u64> {
    let dim = dim_hom(b, &tau_sheaf(a, w)?, w)?;
    match (a, b) {
        (SheafLabel::Line(x), SheafLabel::Line(y)) => {
            debug_assert_eq!(dim, ext1_line_line(*x, *y));
            debug_assert_eq!(dim, ext1_line_line_table(*x, *y));
        }
        (SheafLabel::TorsionExc { point, top, len }, SheafLabel::Line(y)) => {
            debug_assert_eq!(dim, ext1_exc_line(*point, *top, *len, *y));
        }
        _ => {}
    }
    Ok(dim)
}

/// `dim Ext^1(O(x), O(y)) = dim S_{x - x1 - x2 - y}`.
pub fn ext1_line_line(x: LElement, y: LElement) -> u64 {
    let w = x.weight();
    (x - w.x1() - w.x2() - y).dim_s()
}

/// The same number by cases on the normal forms `x = (l1,l2,l)`, `y = (k1,k2,k)`.
pub fn ext1_line_line_table(x: LElement, y: LElement) -> u64 {
    let h1 = x.l1() - y.l1() - 1;
    let h2 = x.l2() - y.l2() - 1;
    let (l, k) = (x.l(), y.l());
    let v = match (h1 >= 0, h2 >= 0) {
        (true, true) if k <= l => l - k + 1,
        (true, false) | (false, true) if k <= l => l - k,
        (false, false) if k < l => l - k - 1,
        _ => 0,
    };
    v as u64
}

/// `dim Ext^1(S_{pt,i}^(j), O(x))`: writing `j = n r + s` with `r` the tube
/// rank, this is `n`, plus one if some `1 <= k <= s` has `r | i - l_pt - k`.
pub fn ext1_exc_line(point: ExcPoint, i: i64, j: i64, x: LElement) -> u64 {
    let w = x.weight();
    let r = point.rank(w);
    let l_pt = match point {
        ExcPoint::Infinity => x.l1(),
        ExcPoint::Zero => x.l2(),
    };
    let (n, s) = (j / r, j % r);
    let extra = (1..=s).any(|k| (i - l_pt - k).rem_euclid(r) == 0);
    (n + extra as i64) as u64
}

/// Euler form `dim Hom - dim Ext^1`.
pub fn euler(a: &SheafLabel, b: &SheafLabel, w: WeightType) -> Result<i64> {
    Ok(dim_hom(a, b, w)? as i64 - dim_ext1(a, b, w)? as i64)
}
