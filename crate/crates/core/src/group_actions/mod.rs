//! The four Lie groups acting on upper half space and their common currency,
//! horizontal translations.
//!
//! | tag    | group                         | dimension |
//! |--------|-------------------------------|-----------|
//! | `H3`   | PSL(2,ℂ)                      | 6         |
//! | `AFF`  | affine group `[A]` (via exp)  | 6         |
//! | `H2R`  | PSL(2,ℝ) × ℝ                  | 4         |
//! | `SL2T` | ℤ cover of PSL(2,ℝ) × SO(2)   | 4         |
//!
//! All four contain the horizontal translations `(x, y, z) -> (x + u, y + w, z)`
//! as literally the same transformations of `U`; [`GroupElement::embed_translation`]
//! produces them in each group.

mod affine;
mod fibered;
mod h2r;
mod moebius;
mod sl2r;

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use affine::{transfer_affine, AffineA, EuclideanAffine};
pub use fibered::FiberedIsom;
pub use h2r::IsomH2R;
pub use moebius::MoebiusC;
pub use sl2r::{angle_derivative, winding_cocycle, wrap_pi, Sl2R};

pub(crate) use affine::{det2, mat_mul};

use crate::error::{Error, Result};
use crate::model_space::UPoint;

/// Field-wise equality tolerance for canonical representatives.
pub const ELEMENT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tag {
    H3,
    #[serde(rename = "AFF")]
    Aff,
    H2R,
    #[serde(rename = "SL2T")]
    Sl2T,
}

impl Tag {
    pub const ALL: [Tag; 4] = [Tag::H3, Tag::Aff, Tag::H2R, Tag::Sl2T];

    pub fn is_hyperbolic_type(self) -> bool {
        !matches!(self, Tag::Aff)
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::H3 => "H3",
            Tag::Aff => "AFF",
            Tag::H2R => "H2R",
            Tag::Sl2T => "SL2T",
        })
    }
}

/// Continuous parameter count of each group.
pub fn group_dimension(tag: Tag) -> usize {
    match tag {
        Tag::H3 | Tag::Aff => 6,
        Tag::H2R | Tag::Sl2T => 4,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GroupElement {
    H3(MoebiusC),
    Aff(AffineA),
    H2R(IsomH2R),
    Sl2T(FiberedIsom),
}

impl GroupElement {
    pub fn tag(&self) -> Tag {
        match self {
            GroupElement::H3(_) => Tag::H3,
            GroupElement::Aff(_) => Tag::Aff,
            GroupElement::H2R(_) => Tag::H2R,
            GroupElement::Sl2T(_) => Tag::Sl2T,
        }
    }

    pub fn identity(tag: Tag) -> Self {
        match tag {
            Tag::H3 => GroupElement::H3(MoebiusC::IDENTITY),
            Tag::Aff => GroupElement::Aff(AffineA::IDENTITY),
            Tag::H2R => GroupElement::H2R(IsomH2R::IDENTITY),
            Tag::Sl2T => GroupElement::Sl2T(FiberedIsom::IDENTITY),
        }
    }

    /// `self ∘ other`: acts as `other` first.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        Ok(match (self, other) {
            (GroupElement::H3(a), GroupElement::H3(b)) => GroupElement::H3(a.compose(b)),
            (GroupElement::Aff(a), GroupElement::Aff(b)) => GroupElement::Aff(a.compose(b)),
            (GroupElement::H2R(a), GroupElement::H2R(b)) => GroupElement::H2R(a.compose(b)),
            (GroupElement::Sl2T(a), GroupElement::Sl2T(b)) => GroupElement::Sl2T(a.compose(b)),
            _ => {
                return Err(Error::TagMismatch { left: self.tag(), right: other.tag() });
            }
        })
    }

    pub fn inverse(&self) -> GroupElement {
        match self {
            GroupElement::H3(a) => GroupElement::H3(a.inverse()),
            GroupElement::Aff(a) => GroupElement::Aff(a.inverse()),
            GroupElement::H2R(a) => GroupElement::H2R(a.inverse()),
            GroupElement::Sl2T(a) => GroupElement::Sl2T(a.inverse()),
        }
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &GroupElement) -> Result<GroupElement> {
        h.compose(self)?.compose(&h.inverse())
    }

    pub fn act(&self, p: &UPoint) -> Result<UPoint> {
        match self {
            GroupElement::H3(a) => a.act(p),
            GroupElement::Aff(a) => a.act(p),
            GroupElement::H2R(a) => a.act(p),
            GroupElement::Sl2T(a) => a.act(p),
        }
    }

    /// The element of the tagged group acting as `(x, y, z) -> (x + u, y + w, z)`.
    pub fn embed_translation(v: [f64; 2], tag: Tag) -> GroupElement {
        let [u, w] = v;
        match tag {
            Tag::H3 => GroupElement::H3(MoebiusC::translation(Complex64::new(u, w))),
            Tag::Aff => GroupElement::Aff(AffineA::translation(v)),
            Tag::H2R => GroupElement::H2R(IsomH2R::new(Sl2R::translation(u), w)),
            Tag::Sl2T => GroupElement::Sl2T(FiberedIsom::new(Sl2R::translation(u), 0, w)),
        }
    }

    /// Translation vector if the element is a horizontal translation up to
    /// `tol` in its parameters.
    pub fn as_translation(&self, tol: f64) -> Option<[f64; 2]> {
        let unipotent = |m: &Sl2R| {
            m.c.abs() <= tol && (m.a - 1.0).abs() <= tol && (m.d - 1.0).abs() <= tol
        };
        match self {
            GroupElement::H3(g) => {
                let one = Complex64::new(1.0, 0.0);
                let ok = g.c().norm() <= tol
                    && (g.a() - one).norm() <= tol
                    && (g.d() - one).norm() <= tol;
                ok.then(|| [g.b().re, g.b().im])
            }
            GroupElement::Aff(g) => {
                let l = g.linear();
                let b = g.offset();
                let ok = g.eps() == 1
                    && (l[0][0] - 1.0).abs() <= tol
                    && l[0][1].abs() <= tol
                    && l[1][0].abs() <= tol
                    && (l[1][1] - 1.0).abs() <= tol
                    && b[2].abs() <= tol;
                ok.then(|| [b[0], b[1]])
            }
            GroupElement::H2R(g) => unipotent(g.matrix()).then(|| [g.matrix().b, g.shift()]),
            GroupElement::Sl2T(g) => unipotent(g.matrix()).then(|| [g.matrix().b, g.theta()]),
        }
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.as_translation(tol)
            .is_some_and(|[u, w]| u.abs() <= tol && w.abs() <= tol)
    }

    /// Field-wise distance between canonical representatives of the same tag;
    /// infinite across tags.
    pub fn param_distance(&self, other: &GroupElement) -> f64 {
        match (self, other) {
            (GroupElement::H3(a), GroupElement::H3(b)) => a.max_abs_diff(b),
            (GroupElement::Aff(a), GroupElement::Aff(b)) => a.max_abs_diff(b),
            (GroupElement::H2R(a), GroupElement::H2R(b)) => a.max_abs_diff(b),
            (GroupElement::Sl2T(a), GroupElement::Sl2T(b)) => a.max_abs_diff(b),
            _ => f64::INFINITY,
        }
    }

    pub fn approx_eq(&self, other: &GroupElement, tol: f64) -> bool {
        self.param_distance(other) <= tol
    }

    /// Largest coordinate discrepancy between the two actions over `points`.
    pub fn action_residual(&self, other: &GroupElement, points: &[UPoint]) -> Result<f64> {
        let mut worst = 0.0f64;
        for p in points {
            let r = self.act(p)?.residual(&other.act(p)?);
            // NaN must not be swallowed by max
            if r.is_nan() {
                return Ok(f64::NAN);
            }
            worst = worst.max(r);
        }
        Ok(worst)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::H3(g) => write!(f, "H3 {g}"),
            GroupElement::Aff(g) => write!(f, "AFF {g}"),
            GroupElement::H2R(g) => write!(f, "H2R {g}"),
            GroupElement::Sl2T(g) => write!(f, "SL2T {g}"),
        }
    }
}

impl From<MoebiusC> for GroupElement {
    fn from(g: MoebiusC) -> Self {
        GroupElement::H3(g)
    }
}
impl From<AffineA> for GroupElement {
    fn from(g: AffineA) -> Self {
        GroupElement::Aff(g)
    }
}
impl From<IsomH2R> for GroupElement {
    fn from(g: IsomH2R) -> Self {
        GroupElement::H2R(g)
    }
}
impl From<FiberedIsom> for GroupElement {
    fn from(g: FiberedIsom) -> Self {
        GroupElement::Sl2T(g)
    }
}

pub fn compose(a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    a.compose(b)
}

pub fn inverse(a: &GroupElement) -> GroupElement {
    a.inverse()
}

pub fn act(g: &GroupElement, p: &UPoint) -> Result<UPoint> {
    g.act(p)
}

pub fn embed_translation(v: [f64; 2], tag: Tag) -> GroupElement {
    GroupElement::embed_translation(v, tag)
}
