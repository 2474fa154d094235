//! Perpendicular categories of exceptional sheaves, read off from the pieces
//! left after cutting `A_{p,q}` along the corresponding arc.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::homext::{dim_ext1, dim_hom};
use crate::lgroup::WeightType;
use crate::model::{is_arc, phi_inv, CurveClass, SheafLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutComponent {
    /// A disk with `marked >= 4` marked points: modules over a path algebra of type `A_{marked-3}`.
    Disk { marked: i64 },
    /// A smaller annulus: coherent sheaves of weight type `(p, q)`.
    Annulus { p: i64, q: i64 },
}

impl CutComponent {
    pub fn category(&self) -> String {
        match self {
            CutComponent::Disk { marked } => format!("mod A_{}", marked - 3),
            CutComponent::Annulus { p, q } => format!("coh-X({p},{q})"),
        }
    }

    /// Rank of the Grothendieck group of the component's category.
    pub fn rank(&self) -> i64 {
        match self {
            CutComponent::Disk { marked } => marked - 3,
            CutComponent::Annulus { p, q } => p + q,
        }
    }
}

impl Serialize for CutComponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(None)?;
        match self {
            CutComponent::Disk { marked } => {
                m.serialize_entry("kind", "disk")?;
                m.serialize_entry("marked", marked)?;
            }
            CutComponent::Annulus { p, q } => {
                m.serialize_entry("kind", "annulus")?;
                m.serialize_entry("p", p)?;
                m.serialize_entry("q", q)?;
            }
        }
        m.serialize_entry("category", &self.category())?;
        m.end()
    }
}

/// Cut along the arc `c`, dropping triangles; the annulus piece comes first.
pub fn perpendicular(c: &CurveClass, w: WeightType) -> Result<Vec<CutComponent>> {
    c.validate()?;
    if !is_arc(c, w) {
        return Err(Error::NotAnArc(c.to_string()));
    }
    let (p, q) = (w.p(), w.q());
    let with_disk = |annulus: CutComponent, j: i64| {
        let mut out = vec![annulus];
        if j >= 2 {
            out.push(CutComponent::Disk { marked: j + 2 });
        }
        out
    };
    Ok(match c {
        CurveClass::Bridging { .. } => vec![CutComponent::Disk { marked: p + q + 2 }],
        CurveClass::PeriUpper { s, e } => {
            let j = e - s - 1;
            with_disk(CutComponent::Annulus { p: p - j, q }, j)
        }
        CurveClass::PeriLower { s, e } => {
            let j = e - s - 1;
            with_disk(CutComponent::Annulus { p, q: q - j }, j)
        }
        CurveClass::Loop { .. } => unreachable!("loops are not arcs"),
    })
}

pub fn perpendicular_of(s: &SheafLabel, w: WeightType) -> Result<Vec<CutComponent>> {
    perpendicular(&phi_inv(s, w)?, w)
}

pub fn is_exceptional(s: &SheafLabel, w: WeightType) -> Result<bool> {
    let by_arc = is_arc(&phi_inv(s, w)?, w);
    debug_assert_eq!(by_arc, dim_hom(s, s, w)? == 1 && dim_ext1(s, s, w)? == 0);
    Ok(by_arc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerpReport {
    pub components: Vec<CutComponent>,
}
