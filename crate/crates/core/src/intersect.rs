//! Positive intersection numbers of curves on `A_{p,q}` and resolution of a
//! single crossing.
//!
//! `pos_int(alpha, beta)` counts the deck translates of `beta` that cross a
//! fixed lift of `alpha` from the right, endpoints excluded.

use crate::error::{Error, Result};
use crate::lgroup::WeightType;
use crate::model::{is_arc, CurveClass};

/// Number of `t` with `lo < t < hi` and `t = r mod m`.
fn count_residue(lo: i64, hi: i64, r: i64, m: i64) -> u64 {
    if hi - lo < 2 {
        return 0;
    }
    // t = r + m k, lo < t < hi
    let first = (lo - r).div_euclid(m) + 1;
    let last = (hi - 1 - r).div_euclid(m);
    (last - first + 1).max(0) as u64
}

/// Smallest integer strictly greater than `a / b` (`b > 0`).
fn above(a: i64, b: i64) -> i64 {
    a.div_euclid(b) + 1
}

/// Largest integer strictly below `a / b` (`b > 0`).
fn below(a: i64, b: i64) -> i64 {
    -above(-a, b)
}

/// Deck shifts `m` of the bridging lift `(u', w')` that cross `(u, w)` positively.
fn bridging_crossings(u: i64, lw: i64, u2: i64, w2: i64, w: WeightType) -> std::ops::RangeInclusive<i64> {
    above(u2 - u, w.p())..=below(w2 - lw, w.q())
}

/// Shifts `m` with `c + m r < a < d + m r < b`.
fn nested_upper(a: i64, b: i64, c: i64, d: i64, r: i64) -> Vec<i64> {
    let lo = (a - d).div_euclid(r) - 1;
    let hi = (b - d).div_euclid(r) + 1;
    (lo..=hi)
        .filter(|m| c + m * r < a && a < d + m * r && d + m * r < b)
        .collect()
}

/// Shifts `m` with `a < c + m r < b < d + m r`.
fn nested_lower(a: i64, b: i64, c: i64, d: i64, r: i64) -> Vec<i64> {
    let lo = (a - c).div_euclid(r) - 1;
    let hi = (b - c).div_euclid(r) + 1;
    (lo..=hi)
        .filter(|m| a < c + m * r && c + m * r < b && b < d + m * r)
        .collect()
}

pub fn pos_int(alpha: &CurveClass, beta: &CurveClass, w: WeightType) -> u64 {
    use CurveClass::*;
    let (p, q) = (w.p(), w.q());
    match (alpha, beta) {
        (Bridging { u, w: lw }, Bridging { u: u2, w: w2 }) => bridging_crossings(*u, *lw, *u2, *w2, w).count() as u64,
        (PeriUpper { s, e }, Bridging { u, .. }) => count_residue(*s, *e, *u, p),
        (PeriLower { s, e }, Bridging { w: lw, .. }) => count_residue(*s, *e, *lw, q),
        (PeriUpper { s: a, e: b }, PeriUpper { s: c, e: d }) => nested_upper(*a, *b, *c, *d, p).len() as u64,
        (PeriLower { s: a, e: b }, PeriLower { s: c, e: d }) => nested_lower(*a, *b, *c, *d, q).len() as u64,
        (Loop { n, .. }, Bridging { .. }) => *n as u64,
        (Loop { lam, n }, Loop { lam: lam2, n: n2 }) if lam == lam2 => (*n).min(*n2) as u64,
        _ => 0,
    }
}

pub fn compatible(alpha: &CurveClass, beta: &CurveClass, w: WeightType) -> Result<bool> {
    for c in [alpha, beta] {
        if !is_arc(c, w) {
            return Err(Error::NotAnArc(c.to_string()));
        }
    }
    Ok(pos_int(alpha, beta, w) == 0 && pos_int(beta, alpha, w) == 0)
}

/// The two middle terms of the extension `0 -> beta -> g1 + g2 -> alpha -> 0`
/// obtained by smoothing the unique positive crossing of `beta` with `alpha`.
///
/// `g1` runs from the start of `alpha` to the end of `beta`, `g2` from the
/// start of `beta` to the end of `alpha`. A piece joining neighbouring marked
/// points on one boundary is a boundary segment and comes back as `None`.
pub type Resolution = (Option<CurveClass>, Option<CurveClass>);

pub fn resolve_crossing(alpha: &CurveClass, beta: &CurveClass, w: WeightType) -> Result<Resolution> {
    use CurveClass::*;
    for c in [alpha, beta] {
        c.validate()?;
        if !is_arc(c, w) {
            return Err(Error::NotAnArc(c.to_string()));
        }
    }
    let n = pos_int(alpha, beta, w);
    if n != 1 {
        return Err(Error::Precondition(format!(
            "resolve_crossing needs exactly one positive crossing, {alpha} and {beta} have {n}"
        )));
    }
    let (p, q) = (w.p(), w.q());
    let upper = |s: i64, e: i64| (e - s >= 2).then_some(PeriUpper { s, e });
    let lower = |s: i64, e: i64| (e - s >= 2).then_some(PeriLower { s, e });
    let (g1, g2) = match (alpha, beta) {
        (Bridging { u, w: lw }, Bridging { u: u2, w: w2 }) => {
            let m = *bridging_crossings(*u, *lw, *u2, *w2, w).start();
            let (i, j) = (u + m * p, lw + m * q);
            debug_assert!(*u2 < i && j < *w2);
            (Some(Bridging { u: *u2, w: j }), Some(Bridging { u: i, w: *w2 }))
        }
        (PeriUpper { s, e }, Bridging { u, w: lw }) => {
            let m = (s - u).div_euclid(p) + 1;
            let (k, l) = (u + m * p, lw + m * q);
            debug_assert!(*s < k && k < *e);
            (upper(*s, k), Some(Bridging { u: *e, w: l }))
        }
        (PeriLower { s, e }, Bridging { u, w: lw }) => {
            let m = (s - lw).div_euclid(q) + 1;
            let (k, l) = (u + m * p, lw + m * q);
            debug_assert!(*s < l && l < *e);
            (Some(Bridging { u: k, w: *s }), lower(l, *e))
        }
        (PeriUpper { s: a, e: b }, PeriUpper { s: c, e: d }) => {
            let m = nested_upper(*a, *b, *c, *d, p)[0];
            (upper(*a, d + m * p), upper(c + m * p, *b))
        }
        (PeriLower { s: a, e: b }, PeriLower { s: c, e: d }) => {
            let m = nested_lower(*a, *b, *c, *d, q)[0];
            (lower(*a, d + m * q), lower(c + m * q, *b))
        }
        _ => unreachable!("a single positive crossing only occurs between the kinds above"),
    };
    Ok((g1.map(|g| g.canonical(w)), g2.map(|g| g.canonical(w))))
}
