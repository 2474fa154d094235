//! The grading group L(p,q) and the homogeneous components of its
//! coordinate algebra k[x1, x2].
//!
//! L(p,q) is the rank-one abelian group on `x1`, `x2` with `p*x1 = q*x2 = c`.
//! Every element has a unique normal form `l1*x1 + l2*x2 + l*c` with
//! `0 <= l1 < p` and `0 <= l2 < q`; [`LElement`] only ever stores that form.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The weight type `(p, q)` of the weighted projective line.
///
/// No ordering between `p` and `q` is assumed anywhere in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightType {
    p: i64,
    q: i64,
}

impl WeightType {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 1 || q < 1 {
            return Err(Error::InvalidWeight { p, q });
        }
        Ok(WeightType { p, q })
    }

    #[inline]
    pub fn p(self) -> i64 {
        self.p
    }

    #[inline]
    pub fn q(self) -> i64 {
        self.q
    }

    /// Number of summands of a tilting sheaf (rank of the Grothendieck group).
    #[inline]
    pub fn rank(self) -> usize {
        (self.p + self.q) as usize
    }

    pub fn x1(self) -> LElement {
        LElement::normalize(1, 0, 0, self)
    }

    pub fn x2(self) -> LElement {
        LElement::normalize(0, 1, 0, self)
    }

    pub fn c(self) -> LElement {
        LElement::normalize(0, 0, 1, self)
    }

    pub fn zero(self) -> LElement {
        LElement::normalize(0, 0, 0, self)
    }

    /// The dualizing element `-(x1 + x2)`.
    pub fn omega(self) -> LElement {
        LElement::normalize(-1, -1, 0, self)
    }

    pub fn ensure_same(self, other: WeightType) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::WeightMismatch(self, other))
        }
    }
}

impl fmt::Display for WeightType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// An element of L(p,q) in normal form. Carries its weight type so that
/// mixing elements of different groups is caught instead of silently wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LElement {
    weight: WeightType,
    l1: i64,
    l2: i64,
    l: i64,
}

impl LElement {
    /// Normal form of `a*x1 + b*x2 + m*c`.
    pub fn normalize(a: i64, b: i64, m: i64, weight: WeightType) -> Self {
        let (p, q) = (weight.p, weight.q);
        let l1 = a.rem_euclid(p);
        let l2 = b.rem_euclid(q);
        LElement {
            weight,
            l1,
            l2,
            l: m + (a - l1) / p + (b - l2) / q,
        }
    }

    pub fn weight(&self) -> WeightType {
        self.weight
    }

    pub fn l1(&self) -> i64 {
        self.l1
    }

    pub fn l2(&self) -> i64 {
        self.l2
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn try_add(self, other: LElement) -> Result<LElement> {
        self.weight.ensure_same(other.weight)?;
        Ok(LElement::normalize(
            self.l1 + other.l1,
            self.l2 + other.l2,
            self.l + other.l,
            self.weight,
        ))
    }

    pub fn try_sub(self, other: LElement) -> Result<LElement> {
        self.try_add(-other)
    }

    /// `self <= other` in the partial order whose positive cone is `N x1 + N x2`.
    pub fn leq(self, other: LElement) -> Result<bool> {
        Ok(other.try_sub(self)?.l >= 0)
    }

    /// Dimension of the homogeneous component `S_x` of `k[x1, x2]`.
    ///
    /// The basis is `x1^(l1 + p a) x2^(l2 + q b)` with `a + b = l`, so this is
    /// `l + 1` for `l >= 0` and zero otherwise.
    pub fn dim_s(self) -> u64 {
        if self.l >= 0 {
            (self.l + 1) as u64
        } else {
            0
        }
    }
}

/// Panics on mismatched weight types; use [`LElement::try_add`] to get an error instead.
impl Add for LElement {
    type Output = LElement;

    fn add(self, rhs: LElement) -> LElement {
        match self.try_add(rhs) {
            Ok(x) => x,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Sub for LElement {
    type Output = LElement;

    fn sub(self, rhs: LElement) -> LElement {
        self + (-rhs)
    }
}

impl Neg for LElement {
    type Output = LElement;

    fn neg(self) -> LElement {
        LElement::normalize(-self.l1, -self.l2, -self.l, self.weight)
    }
}

impl fmt::Display for LElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.l1 != 0 {
            parts.push(format!("{}x1", self.l1));
        }
        if self.l2 != 0 {
            parts.push(format!("{}x2", self.l2));
        }
        if self.l != 0 {
            parts.push(format!("{}c", self.l));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+").replace("+-", "-"))
        }
    }
}

/// Wire form `{"l1":int,"l2":int,"l":int}`. The weight type is not part of
/// the encoding; it is supplied by the surrounding context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LElementJson {
    pub l1: i64,
    pub l2: i64,
    pub l: i64,
}

impl LElementJson {
    /// Any integers are accepted and brought into normal form.
    pub fn into_element(self, weight: WeightType) -> LElement {
        LElement::normalize(self.l1, self.l2, self.l, weight)
    }
}

impl From<LElement> for LElementJson {
    fn from(x: LElement) -> Self {
        LElementJson {
            l1: x.l1,
            l2: x.l2,
            l: x.l,
        }
    }
}

impl Serialize for LElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LElementJson::from(*self).serialize(serializer)
    }
}
