//! The mapping class group of `A_{p,q}` acting on curves, and the matching
//! autoequivalences acting on sheaf labels.
//!
//! `r1` rotates the inner boundary one marked point forward, `r2` rotates the
//! outer boundary one point back, and `s` (only when `p = q`) swaps the two
//! boundaries. Words act letter by letter from left to right.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lgroup::{LElement, WeightType};
use crate::model::{twist, CurveClass, Lambda, SheafLabel};
use crate::tilting::{vertex_to_tilting, LambdaVertex, TiltingBundle, Triangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    R1,
    R1Inv,
    R2,
    R2Inv,
    Sigma,
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator::R1,
        Generator::R1Inv,
        Generator::R2,
        Generator::R2Inv,
        Generator::Sigma,
    ];

    pub fn inverse(self) -> Generator {
        match self {
            Generator::R1 => Generator::R1Inv,
            Generator::R1Inv => Generator::R1,
            Generator::R2 => Generator::R2Inv,
            Generator::R2Inv => Generator::R2,
            Generator::Sigma => Generator::Sigma,
        }
    }

    fn token(self) -> &'static str {
        match self {
            Generator::R1 => "r1",
            Generator::R1Inv => "r1-",
            Generator::R2 => "r2",
            Generator::R2Inv => "r2-",
            Generator::Sigma => "s",
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.token() == s)
            .ok_or_else(|| Error::Parse(format!("unknown generator {s:?}; expected r1, r1-, r2, r2- or s")))
    }
}

/// A word in the generators; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct McgWord(pub Vec<Generator>);

impl McgWord {
    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn inverse(&self) -> McgWord {
        McgWord(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    pub fn then(&self, other: &McgWord) -> McgWord {
        McgWord(self.0.iter().chain(&other.0).copied().collect())
    }

    fn check(&self, w: WeightType) -> Result<()> {
        if w.p() != w.q() && self.0.contains(&Generator::Sigma) {
            return Err(Error::Precondition(format!("the boundary swap s needs p = q, got {w}")));
        }
        Ok(())
    }
}

impl FromStr for McgWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace().map(str::parse).collect::<Result<_>>().map(McgWord)
    }
}

impl fmt::Display for McgWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.0.iter().map(|g| g.token()).collect();
        f.write_str(&parts.join(" "))
    }
}

const SIGMA_PREFIX: &str = "sigma:";

/// The swap acts on ordinary points by an unspecified involution; tokens are
/// relabelled by toggling a prefix.
pub fn sigma_lambda(lam: &Lambda) -> Lambda {
    let s = lam.as_str();
    let out = match s.strip_prefix(SIGMA_PREFIX) {
        Some(rest) => rest.to_string(),
        None => format!("{SIGMA_PREFIX}{s}"),
    };
    Lambda::new(out).expect("toggling the prefix never yields a reserved token")
}

fn act_curve_letter(g: Generator, c: &CurveClass) -> CurveClass {
    use CurveClass::*;
    let shift_upper = |d: i64| match c {
        Bridging { u, w } => Bridging { u: u + d, w: *w },
        PeriUpper { s, e } => PeriUpper { s: s + d, e: e + d },
        _ => c.clone(),
    };
    let shift_lower = |d: i64| match c {
        Bridging { u, w } => Bridging { u: *u, w: w + d },
        PeriLower { s, e } => PeriLower { s: s + d, e: e + d },
        _ => c.clone(),
    };
    match g {
        Generator::R1 => shift_upper(1),
        Generator::R1Inv => shift_upper(-1),
        Generator::R2 => shift_lower(-1),
        Generator::R2Inv => shift_lower(1),
        Generator::Sigma => match c {
            Bridging { u, w } => Bridging { u: -w, w: -u },
            PeriUpper { s, e } => PeriLower { s: -e, e: -s },
            PeriLower { s, e } => PeriUpper { s: -e, e: -s },
            Loop { lam, n } => Loop {
                lam: sigma_lambda(lam),
                n: *n,
            },
        },
    }
}

pub fn act_curve(f: &McgWord, c: &CurveClass, w: WeightType) -> Result<CurveClass> {
    f.check(w)?;
    c.validate()?;
    let out = f.letters().iter().fold(c.clone(), |c, g| act_curve_letter(*g, &c));
    Ok(out.canonical(w))
}

fn act_sheaf_letter(g: Generator, s: &SheafLabel, w: WeightType) -> Result<SheafLabel> {
    match g {
        Generator::R1 => twist(s, w.x1()),
        Generator::R1Inv => twist(s, -w.x1()),
        Generator::R2 => twist(s, w.x2()),
        Generator::R2Inv => twist(s, -w.x2()),
        Generator::Sigma => Ok(match s {
            SheafLabel::Line(x) => SheafLabel::Line(LElement::normalize(x.l2(), x.l1(), x.l(), w)),
            SheafLabel::TorsionExc { point, top, len } => SheafLabel::torsion(point.other(), *top, *len, w)?,
            SheafLabel::TorsionOrd { lam, len } => SheafLabel::ordinary(sigma_lambda(lam), *len)?,
        }),
    }
}

/// The autoequivalence attached to `f`: `r1`, `r2` twist by `x1`, `x2`; `s`
/// exchanges the two exceptional points.
pub fn act_sheaf(f: &McgWord, s: &SheafLabel, w: WeightType) -> Result<SheafLabel> {
    f.check(w)?;
    let mut out = s.clone();
    for g in f.letters() {
        out = act_sheaf_letter(*g, &out, w)?;
    }
    Ok(out)
}

pub fn act_triangulation(f: &McgWord, t: &Triangulation) -> Result<Triangulation> {
    let w = t.weight();
    let arcs = t
        .arcs()
        .iter()
        .map(|c| act_curve(f, c, w))
        .collect::<Result<Vec<_>>>()?;
    Triangulation::new(w, &arcs).map_err(|e| Error::Invariant(format!("image of a triangulation: {e}")))
}

/// `(c_p - q, c_1, ..., c_{p-1})`.
pub fn rho1(v: &LambdaVertex, w: WeightType) -> Result<LambdaVertex> {
    let c = v.coords();
    let mut out = vec![c[c.len() - 1] - w.q()];
    out.extend_from_slice(&c[..c.len() - 1]);
    LambdaVertex::new(out, w)
}

/// `(c_1 - 1, ..., c_p - 1)`.
pub fn rho2(v: &LambdaVertex, w: WeightType) -> Result<LambdaVertex> {
    LambdaVertex::new(v.coords().iter().map(|c| c - 1).collect(), w)
}

/// The vertex of `f` applied to the tilting bundle of `v`.
pub fn act_vertex(f: &McgWord, v: &LambdaVertex, w: WeightType) -> Result<LambdaVertex> {
    let t = vertex_to_tilting(v, w)?.triangulation();
    Ok(TiltingBundle::from_triangulation(&act_triangulation(f, &t)?)?.vertex())
}

/// The involution induced by the boundary swap (`p = q` only).
pub fn rho(v: &LambdaVertex, w: WeightType) -> Result<LambdaVertex> {
    act_vertex(&McgWord(vec![Generator::Sigma]), v, w)
}
