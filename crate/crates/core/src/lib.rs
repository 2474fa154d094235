//! Coherent sheaves on the weighted projective line of type `(p,q)` through
//! arcs and triangulations of the annulus `A_{p,q}`.
//!
//! * [`lgroup`]: the grading group `L(p,q)`.
//! * [`model`]: sheaf labels, curve classes and the bijection [`model::phi`] between them.
//! * [`homext`] and [`intersect`]: `Hom`/`Ext^1` and positive intersection numbers.
//! * [`tilting`]: triangulations, flips, tilting bundles and their lattice-path encoding.
//! * [`graphs`]: exchange graphs and the graph on `Lambda^0_{(p,q)}`.
//! * [`symmetry`]: mapping class group words and their action.
//! * [`perp`]: perpendicular categories by cutting along an arc.

pub mod error;
pub mod graphs;
pub mod homext;
pub mod intersect;
pub mod json;
pub mod lgroup;
pub mod model;
pub mod perp;
pub mod symmetry;
pub mod tilting;

pub use error::{Error, Result};
pub use lgroup::{LElement, WeightType};
pub use model::{CurveClass, ExcPoint, Lambda, SheafLabel};
