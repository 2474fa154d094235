//! Indecomposable sheaves and the curves on the marked annulus that stand for them.
//!
//! The annulus `A_{p,q}` has `p` marked points on its inner boundary and `q`
//! on its outer boundary. In the universal cover (a horizontal strip) the
//! inner marked points sit at `i/p` on the upper line and the outer ones at
//! `j/q` on the lower line, and the deck transformation shifts everything by
//! one unit, i.e. by `p` upper steps and `q` lower steps at once.
//!
//! A [`CurveClass`] records integer endpoint indices of one lift; two lifts
//! describe the same class iff they differ by a deck shift. Bridging curves
//! are always oriented from the outer (lower) boundary to the inner (upper)
//! one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lgroup::{LElement, LElementJson, WeightType};

/// Parameter of an ordinary point of the projective line. Treated as an
/// opaque token; `"0"` and `"inf"` are reserved for the two weighted points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Lambda(String);

impl Lambda {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() || token == "0" || token == "inf" {
            return Err(Error::InvalidSheaf(format!(
                "{token:?} is not a valid ordinary-point token"
            )));
        }
        Ok(Lambda(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Lambda {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        Lambda::new(s)
    }
}

impl From<Lambda> for String {
    fn from(l: Lambda) -> String {
        l.0
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The two weighted points: `Infinity` carries the rank-`p` tube, `Zero` the rank-`q` tube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExcPoint {
    #[serde(rename = "inf")]
    Infinity,
    #[serde(rename = "0")]
    Zero,
}

impl ExcPoint {
    pub fn rank(self, w: WeightType) -> i64 {
        match self {
            ExcPoint::Infinity => w.p(),
            ExcPoint::Zero => w.q(),
        }
    }

    pub fn other(self) -> ExcPoint {
        match self {
            ExcPoint::Infinity => ExcPoint::Zero,
            ExcPoint::Zero => ExcPoint::Infinity,
        }
    }
}

/// Isomorphism class of an indecomposable coherent sheaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SheafLabel {
    /// The line bundle `O(x)`.
    Line(LElement),
    /// `S_{point,top}^{(len)}` in an exceptional tube; `top` is reduced mod the tube rank.
    TorsionExc { point: ExcPoint, top: i64, len: i64 },
    /// `S_lam^{(len)}` in a homogeneous tube.
    TorsionOrd { lam: Lambda, len: i64 },
}

impl SheafLabel {
    pub fn line(x: LElement) -> Self {
        SheafLabel::Line(x)
    }

    pub fn torsion(point: ExcPoint, top: i64, len: i64, w: WeightType) -> Result<Self> {
        if len < 1 {
            return Err(Error::InvalidSheaf(format!("torsion length {len} < 1")));
        }
        Ok(SheafLabel::TorsionExc {
            point,
            top: top.rem_euclid(point.rank(w)),
            len,
        })
    }

    pub fn ordinary(lam: Lambda, len: i64) -> Result<Self> {
        if len < 1 {
            return Err(Error::InvalidSheaf(format!("torsion length {len} < 1")));
        }
        Ok(SheafLabel::TorsionOrd { lam, len })
    }

    pub fn is_line(&self) -> bool {
        matches!(self, SheafLabel::Line(_))
    }

    pub(crate) fn check_weight(&self, w: WeightType) -> Result<()> {
        match self {
            SheafLabel::Line(x) => w.ensure_same(x.weight()),
            SheafLabel::TorsionExc { point, top, len } => {
                if *len < 1 || *top < 0 || *top >= point.rank(w) {
                    Err(Error::InvalidSheaf(format!("{self} is not reduced for {w}")))
                } else {
                    Ok(())
                }
            }
            SheafLabel::TorsionOrd { len, .. } => {
                if *len < 1 {
                    Err(Error::InvalidSheaf(format!("{self} has length < 1")))
                } else {
                    Ok(())
                }
            }
        }
    }
}

impl fmt::Display for SheafLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SheafLabel::Line(x) => write!(f, "O({x})"),
            SheafLabel::TorsionExc { point, top, len } => {
                let pt = match point {
                    ExcPoint::Infinity => "inf",
                    ExcPoint::Zero => "0",
                };
                write!(f, "S[{pt},{top}]^({len})")
            }
            SheafLabel::TorsionOrd { lam, len } => write!(f, "S[{lam}]^({len})"),
        }
    }
}

/// Wire form of a sheaf label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SheafJson {
    Line { x: LElementJson },
    Torsion { point: ExcPoint, top: i64, len: i64 },
    Ordinary { lam: Lambda, len: i64 },
}

impl SheafJson {
    pub fn into_label(self, w: WeightType) -> Result<SheafLabel> {
        match self {
            SheafJson::Line { x } => Ok(SheafLabel::Line(x.into_element(w))),
            SheafJson::Torsion { point, top, len } => SheafLabel::torsion(point, top, len, w),
            SheafJson::Ordinary { lam, len } => SheafLabel::ordinary(lam, len),
        }
    }
}

impl From<&SheafLabel> for SheafJson {
    fn from(s: &SheafLabel) -> Self {
        match s {
            SheafLabel::Line(x) => SheafJson::Line { x: (*x).into() },
            SheafLabel::TorsionExc { point, top, len } => SheafJson::Torsion {
                point: *point,
                top: *top,
                len: *len,
            },
            SheafLabel::TorsionOrd { lam, len } => SheafJson::Ordinary {
                lam: lam.clone(),
                len: *len,
            },
        }
    }
}

impl Serialize for SheafLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SheafJson::from(self).serialize(serializer)
    }
}

/// Homotopy class of an oriented curve in `A_{p,q}`, given by one lift.
///
/// * `Bridging { u, w }`: from lower point `w/q` to upper point `u/p`.
/// * `PeriUpper { s, e }`: upper `s/p` to upper `e/p`, `e - s >= 2`.
/// * `PeriLower { s, e }`: lower `s/q` to lower `e/q`, `e - s >= 2`.
/// * `Loop { lam, n }`: the `n`-fold loop with ordinary parameter `lam`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CurveClass {
    Bridging { u: i64, w: i64 },
    PeriUpper { s: i64, e: i64 },
    PeriLower { s: i64, e: i64 },
    Loop { lam: Lambda, n: i64 },
}

impl CurveClass {
    pub fn bridging(u: i64, w: i64) -> Self {
        CurveClass::Bridging { u, w }
    }

    pub fn peri_upper(s: i64, e: i64) -> Self {
        CurveClass::PeriUpper { s, e }
    }

    pub fn peri_lower(s: i64, e: i64) -> Self {
        CurveClass::PeriLower { s, e }
    }

    pub fn loop_(lam: Lambda, n: i64) -> Self {
        CurveClass::Loop { lam, n }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            CurveClass::Bridging { .. } => Ok(()),
            CurveClass::PeriUpper { s, e } | CurveClass::PeriLower { s, e } => {
                if e - s < 2 {
                    Err(Error::InvalidCurve(format!(
                        "{self}: peripheral curves need e - s >= 2"
                    )))
                } else {
                    Ok(())
                }
            }
            CurveClass::Loop { n, .. } => {
                if *n < 1 {
                    Err(Error::InvalidCurve(format!("{self}: loop multiplicity < 1")))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Shift the lift by `k` deck transformations.
    pub fn deck_shift(&self, k: i64, w: WeightType) -> CurveClass {
        let (p, q) = (w.p(), w.q());
        match self {
            CurveClass::Bridging { u, w } => CurveClass::Bridging {
                u: u + k * p,
                w: w + k * q,
            },
            CurveClass::PeriUpper { s, e } => CurveClass::PeriUpper {
                s: s + k * p,
                e: e + k * p,
            },
            CurveClass::PeriLower { s, e } => CurveClass::PeriLower {
                s: s + k * q,
                e: e + k * q,
            },
            CurveClass::Loop { .. } => self.clone(),
        }
    }

    /// Canonical representative: bridging with `u` in `[0,p)`, upper
    /// peripheral with `s` in `[0,p)`, lower peripheral with `s` in `[0,q)`.
    pub fn canonical(&self, w: WeightType) -> CurveClass {
        let k = match self {
            CurveClass::Bridging { u, .. } => u.div_euclid(w.p()),
            CurveClass::PeriUpper { s, .. } => s.div_euclid(w.p()),
            CurveClass::PeriLower { s, .. } => s.div_euclid(w.q()),
            CurveClass::Loop { .. } => 0,
        };
        self.deck_shift(-k, w)
    }

    pub fn same_class(&self, other: &CurveClass, w: WeightType) -> bool {
        self.canonical(w) == other.canonical(w)
    }

    pub fn is_bridging(&self) -> bool {
        matches!(self, CurveClass::Bridging { .. })
    }

    pub fn is_loop(&self) -> bool {
        matches!(self, CurveClass::Loop { .. })
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveClass::Bridging { u, w } => write!(f, "B({u},{w})"),
            CurveClass::PeriUpper { s, e } => write!(f, "U({s},{e})"),
            CurveClass::PeriLower { s, e } => write!(f, "L({s},{e})"),
            CurveClass::Loop { lam, n } => write!(f, "Loop({lam},{n})"),
        }
    }
}

/// The bijection from curve classes to indecomposable sheaves.
pub fn phi(c: &CurveClass, w: WeightType) -> Result<SheafLabel> {
    c.validate()?;
    Ok(match c {
        CurveClass::Bridging { u, w: lower } => SheafLabel::Line(LElement::normalize(*u, -lower, 0, w)),
        CurveClass::PeriUpper { s, e } => SheafLabel::torsion(ExcPoint::Infinity, *e, e - s - 1, w)?,
        CurveClass::PeriLower { s, e } => SheafLabel::torsion(ExcPoint::Zero, -s, e - s - 1, w)?,
        CurveClass::Loop { lam, n } => SheafLabel::ordinary(lam.clone(), *n)?,
    })
}

/// Inverse of [`phi`]; always returns the canonical representative.
pub fn phi_inv(s: &SheafLabel, w: WeightType) -> Result<CurveClass> {
    s.check_weight(w)?;
    let c = match s {
        SheafLabel::Line(x) => CurveClass::Bridging {
            u: x.l1(),
            w: -x.l2() - w.q() * x.l(),
        },
        SheafLabel::TorsionExc {
            point: ExcPoint::Infinity,
            top,
            len,
        } => CurveClass::PeriUpper {
            s: top - len - 1,
            e: *top,
        },
        SheafLabel::TorsionExc {
            point: ExcPoint::Zero,
            top,
            len,
        } => CurveClass::PeriLower {
            s: -top,
            e: len - top + 1,
        },
        SheafLabel::TorsionOrd { lam, len } => CurveClass::Loop {
            lam: lam.clone(),
            n: *len,
        },
    };
    Ok(c.canonical(w))
}

/// Elementary move on the starting point. `None` when the move would
/// produce a degenerate curve.
pub fn move_start(c: &CurveClass) -> Option<CurveClass> {
    match c {
        CurveClass::Bridging { u, w } => Some(CurveClass::Bridging { u: *u, w: w - 1 }),
        CurveClass::PeriUpper { s, e } => (e - s > 2).then(|| CurveClass::PeriUpper { s: s + 1, e: *e }),
        CurveClass::PeriLower { s, e } => Some(CurveClass::PeriLower { s: s - 1, e: *e }),
        CurveClass::Loop { lam, n } => (*n > 1).then(|| CurveClass::Loop {
            lam: lam.clone(),
            n: n - 1,
        }),
    }
}

/// Elementary move on the ending point.
pub fn move_end(c: &CurveClass) -> Option<CurveClass> {
    match c {
        CurveClass::Bridging { u, w } => Some(CurveClass::Bridging { u: u + 1, w: *w }),
        CurveClass::PeriUpper { s, e } => Some(CurveClass::PeriUpper { s: *s, e: e + 1 }),
        CurveClass::PeriLower { s, e } => (e - s > 2).then(|| CurveClass::PeriLower { s: *s, e: e - 1 }),
        CurveClass::Loop { lam, n } => Some(CurveClass::Loop {
            lam: lam.clone(),
            n: n + 1,
        }),
    }
}

/// The translation on curves: upper endpoints move back one step, lower
/// endpoints forward one step.
pub fn tau_curve(c: &CurveClass, w: WeightType) -> CurveClass {
    let moved = match c {
        CurveClass::Bridging { u, w } => CurveClass::Bridging { u: u - 1, w: w + 1 },
        CurveClass::PeriUpper { s, e } => CurveClass::PeriUpper { s: s - 1, e: e - 1 },
        CurveClass::PeriLower { s, e } => CurveClass::PeriLower { s: s + 1, e: e + 1 },
        CurveClass::Loop { .. } => c.clone(),
    };
    moved.canonical(w)
}

/// Degree shift `X -> X(x)`.
pub fn twist(s: &SheafLabel, x: LElement) -> Result<SheafLabel> {
    let w = x.weight();
    s.check_weight(w)?;
    Ok(match s {
        SheafLabel::Line(y) => SheafLabel::Line(*y + x),
        SheafLabel::TorsionExc { point, top, len } => {
            let step = match point {
                ExcPoint::Infinity => x.l1(),
                ExcPoint::Zero => x.l2(),
            };
            SheafLabel::torsion(*point, top + step, *len, w)?
        }
        SheafLabel::TorsionOrd { .. } => s.clone(),
    })
}

/// Auslander-Reiten translation, the twist by the dualizing element.
pub fn tau_sheaf(s: &SheafLabel, w: WeightType) -> Result<SheafLabel> {
    twist(s, w.omega())
}

pub fn tau_inv_sheaf(s: &SheafLabel, w: WeightType) -> Result<SheafLabel> {
    twist(s, -w.omega())
}

/// An Auslander-Reiten sequence `0 -> left -> middle -> right -> 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArSequence {
    pub left: SheafLabel,
    pub middle: Vec<SheafLabel>,
    pub right: SheafLabel,
}

/// AR sequence starting at `phi(c)`, read off from elementary moves.
pub fn ar_sequence(c: &CurveClass, w: WeightType) -> Result<ArSequence> {
    c.validate()?;
    let start = move_start(c);
    let end = move_end(c);
    let via_end = end.as_ref().and_then(move_start);
    let via_start = start.as_ref().and_then(move_end);
    let far = match (via_end, via_start) {
        (Some(a), Some(b)) => {
            if a.canonical(w) != b.canonical(w) {
                return Err(Error::Invariant(format!(
                    "elementary moves of {c} do not commute: {a} vs {b}"
                )));
            }
            a
        }
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => {
            return Err(Error::Invariant(format!("{c} has no iterated elementary move")));
        }
    };
    let mut middle = Vec::new();
    for m in [start, end].into_iter().flatten() {
        middle.push(phi(&m, w)?);
    }
    middle.sort();
    Ok(ArSequence {
        left: phi(c, w)?,
        middle,
        right: phi(&far, w)?,
    })
}

/// Whether the class contains an embedded arc (equivalently, `phi(c)` is exceptional).
pub fn is_arc(c: &CurveClass, w: WeightType) -> bool {
    match c {
        CurveClass::Bridging { .. } => true,
        CurveClass::PeriUpper { s, e } => e - s >= 2 && e - s <= w.p(),
        CurveClass::PeriLower { s, e } => e - s >= 2 && e - s <= w.q(),
        CurveClass::Loop { .. } => false,
    }
}

/// Token used for the one ordinary point included in enumeration windows.
pub const WINDOW_LAMBDA: &str = "lambda0";

/// All curve classes in a finite window, sorted and canonical:
///
/// * bridging classes with lower endpoint `w` in `[lo, hi]`;
/// * peripheral classes of every length `1..=max(p,q) + (hi - lo)`;
/// * loops `Loop(lambda0, n)` for `1 <= n <= max(1, hi - lo)`.
pub fn indecomposables_in_window(w: WeightType, lo: i64, hi: i64) -> Result<Vec<CurveClass>> {
    if lo > hi {
        return Err(Error::InvalidWindow { lo, hi });
    }
    let (p, q) = (w.p(), w.q());
    let max_len = p.max(q) + (hi - lo);
    let mut out = Vec::new();
    for u in 0..p {
        for lower in lo..=hi {
            out.push(CurveClass::Bridging { u, w: lower });
        }
    }
    for len in 1..=max_len {
        for s in 0..p {
            out.push(CurveClass::PeriUpper { s, e: s + len + 1 });
        }
        for s in 0..q {
            out.push(CurveClass::PeriLower { s, e: s + len + 1 });
        }
    }
    let lam = Lambda::new(WINDOW_LAMBDA)?;
    for n in 1..=(hi - lo).max(1) {
        out.push(CurveClass::Loop { lam: lam.clone(), n });
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(p: i64, q: i64) -> WeightType {
        WeightType::new(p, q).unwrap()
    }

    fn lam(s: &str) -> Lambda {
        Lambda::new(s).unwrap()
    }

    fn exc(point: ExcPoint, top: i64, len: i64, w: WeightType) -> SheafLabel {
        SheafLabel::torsion(point, top, len, w).unwrap()
    }

    #[test]
    fn phi_examples() {
        let w = wt(3, 3);
        assert_eq!(phi(&CurveClass::bridging(0, 0), w).unwrap(), SheafLabel::Line(w.zero()));
        assert_eq!(
            phi(&CurveClass::peri_upper(1, 4), w).unwrap(),
            exc(ExcPoint::Infinity, 1, 2, w)
        );
        assert_eq!(
            phi(&CurveClass::peri_lower(-1, 2), w).unwrap(),
            exc(ExcPoint::Zero, 1, 2, w)
        );
    }

    #[test]
    fn phi_is_periodic_and_invertible() {
        for (p, q) in [(1, 1), (2, 3), (3, 2), (4, 4)] {
            let w = wt(p, q);
            for c in indecomposables_in_window(w, -3, 3).unwrap() {
                let s = phi(&c, w).unwrap();
                assert_eq!(phi_inv(&s, w).unwrap(), c);
                assert_eq!(phi(&c.deck_shift(1, w), w).unwrap(), s);
                assert_eq!(phi(&c.deck_shift(-2, w), w).unwrap(), s);
            }
        }
    }

    #[test]
    fn moves_examples() {
        assert_eq!(
            move_start(&CurveClass::bridging(3, 2)),
            Some(CurveClass::bridging(3, 1))
        );
        assert_eq!(move_start(&CurveClass::peri_upper(0, 2)), None);
        assert_eq!(move_end(&CurveClass::peri_lower(0, 2)), None);
        assert_eq!(
            move_end(&CurveClass::loop_(lam("t"), 1)),
            Some(CurveClass::loop_(lam("t"), 2))
        );
        assert_eq!(move_start(&CurveClass::loop_(lam("t"), 1)), None);
    }

    #[test]
    fn tau_examples() {
        let w = wt(3, 4);
        assert_eq!(
            tau_curve(&CurveClass::bridging(0, 0), w),
            CurveClass::bridging(-1, 1).canonical(w)
        );
        assert_eq!(tau_curve(&CurveClass::bridging(0, 0), w), CurveClass::bridging(2, 5));
        assert_eq!(
            tau_curve(&CurveClass::peri_upper(0, 2), w),
            CurveClass::peri_upper(2, 4)
        );
        let l = CurveClass::loop_(lam("t"), 5);
        assert_eq!(tau_curve(&l, w), l);
        assert_eq!(
            tau_sheaf(&SheafLabel::Line(w.zero()), w).unwrap(),
            SheafLabel::Line(w.omega())
        );
    }

    #[test]
    fn twist_examples() {
        let w = wt(3, 2);
        assert_eq!(
            twist(&exc(ExcPoint::Infinity, 0, 1, w), w.x1()).unwrap(),
            exc(ExcPoint::Infinity, 1, 1, w)
        );
        let ord = SheafLabel::ordinary(lam("t"), 3).unwrap();
        assert_eq!(twist(&ord, w.c()).unwrap(), ord);
        let s = exc(ExcPoint::Zero, 1, 4, w);
        assert_eq!(twist(&s, w.zero()).unwrap(), s);
        let x = w.x1() + w.x2();
        let y = w.omega() + w.c();
        assert_eq!(twist(&twist(&s, x).unwrap(), y).unwrap(), twist(&s, x + y).unwrap());
    }

    #[test]
    fn ar_examples() {
        let w = wt(3, 2);
        let ar = ar_sequence(&CurveClass::bridging(0, 0), w).unwrap();
        assert_eq!(ar.left, SheafLabel::Line(w.zero()));
        let mut mid = vec![SheafLabel::Line(w.x1()), SheafLabel::Line(w.x2())];
        mid.sort();
        assert_eq!(ar.middle, mid);
        assert_eq!(ar.right, SheafLabel::Line(w.x1() + w.x2()));

        // the length-one case has a single middle term
        let ar = ar_sequence(&CurveClass::peri_upper(1, 3), w).unwrap();
        assert_eq!(ar.left, exc(ExcPoint::Infinity, 0, 1, w));
        assert_eq!(ar.middle, vec![exc(ExcPoint::Infinity, 1, 2, w)]);
        assert_eq!(ar.right, exc(ExcPoint::Infinity, 1, 1, w));

        let ar = ar_sequence(&CurveClass::loop_(lam("t"), 2), w).unwrap();
        let s = |n| SheafLabel::ordinary(lam("t"), n).unwrap();
        assert_eq!(ar.left, s(2));
        assert_eq!(ar.middle, vec![s(1), s(3)]);
        assert_eq!(ar.right, s(2));
    }

    #[test]
    fn arc_examples() {
        let w = wt(3, 5);
        assert!(is_arc(&CurveClass::bridging(7, -11), w));
        assert!(is_arc(&CurveClass::peri_upper(0, 3), w));
        assert!(!is_arc(&CurveClass::peri_upper(0, 4), w));
        assert!(!is_arc(&CurveClass::loop_(lam("t"), 1), w));
    }

    #[test]
    fn window_examples() {
        let cs = indecomposables_in_window(wt(1, 1), 0, 1).unwrap();
        assert!(cs.contains(&CurveClass::bridging(0, 0)));
        assert!(cs.contains(&CurveClass::bridging(0, 1)));
        assert!(cs.contains(&CurveClass::loop_(lam(WINDOW_LAMBDA), 1)));

        let cs = indecomposables_in_window(wt(2, 2), 0, 0).unwrap();
        let bridging: Vec<_> = cs.iter().filter(|c| c.is_bridging()).cloned().collect();
        assert_eq!(bridging, vec![CurveClass::bridging(0, 0), CurveClass::bridging(1, 0)]);

        let w = wt(2, 3);
        let n = |k| indecomposables_in_window(w, 0, k).unwrap().len();
        let d1 = n(2) - n(1);
        assert_eq!(n(3) - n(2), d1);
        assert_eq!(n(7) - n(6), d1);
        assert!(indecomposables_in_window(w, 1, 0).is_err());
    }

    #[test]
    fn window_is_sorted_and_canonical() {
        let w = wt(2, 3);
        let cs = indecomposables_in_window(w, -2, 2).unwrap();
        assert!(cs.windows(2).all(|x| x[0] < x[1]));
        assert!(cs.iter().all(|c| c.canonical(w) == *c));
    }

    #[test]
    fn lambda_tokens() {
        assert!(Lambda::new("0").is_err());
        assert!(Lambda::new("inf").is_err());
        assert!(Lambda::new("").is_err());
        assert!(serde_json::from_str::<CurveClass>(r#"{"kind":"loop","lam":"inf","n":1}"#).is_err());
    }

    #[test]
    fn json_shapes() {
        let w = wt(2, 2);
        let c: CurveClass = serde_json::from_str(r#"{"kind":"peri_upper","s":0,"e":2}"#).unwrap();
        assert_eq!(c, CurveClass::peri_upper(0, 2));
        assert_eq!(
            serde_json::to_string(&CurveClass::bridging(1, -2)).unwrap(),
            r#"{"kind":"bridging","u":1,"w":-2}"#
        );
        let s = phi(&c, w).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"kind":"torsion","point":"inf","top":0,"len":1}"#
        );
        let line = SheafLabel::Line(w.omega());
        assert_eq!(
            serde_json::to_string(&line).unwrap(),
            r#"{"kind":"line","x":{"l1":1,"l2":1,"l":-2}}"#
        );
        let back: SheafJson = serde_json::from_str(&serde_json::to_string(&line).unwrap()).unwrap();
        assert_eq!(back.into_label(w).unwrap(), line);
    }
}
