//! Points of the two coordinate models and the identification between them.
//!
//! Euclidean 3-space `{x, y, z}` and upper half space `U = {z > 0}` are
//! identified by `exp` on the third coordinate and the identity on the
//! horizontal ones. Every group in the crate acts on `U`; the affine group is
//! most naturally written in the Euclidean model.

use crate::error::{Error, Result};

/// Tolerance for point equality in model coordinates.
pub const POINT_TOL: f64 = 1e-9;

/// A point of upper half space, `z > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// A point of Euclidean 3-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl UPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::Domain(format!("non-finite point ({x}, {y}, {z})")));
        }
        if z <= 0.0 {
            return Err(Error::Domain(format!("z = {z} is not in upper half space")));
        }
        Ok(Self { x, y, z })
    }

    /// Max-norm distance in model coordinates.
    pub fn residual(&self, other: &UPoint) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }
}

impl EPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::Domain(format!("non-finite point ({x}, {y}, {z})")));
        }
        Ok(Self { x, y, z })
    }

    pub fn residual(&self, other: &EPoint) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }
}

/// `(x, y, z) -> (x, y, e^z)`.
pub fn to_upper_half(p: EPoint) -> Result<UPoint> {
    let z = p.z.exp();
    if !z.is_finite() || z <= 0.0 {
        return Err(Error::Range(format!("exp({}) is not representable as a height", p.z)));
    }
    Ok(UPoint { x: p.x, y: p.y, z })
}

/// `(x, y, z) -> (x, y, ln z)`.
pub fn to_euclidean(p: UPoint) -> Result<EPoint> {
    if !(p.z > 0.0) {
        return Err(Error::Domain(format!("log of non-positive height {}", p.z)));
    }
    Ok(EPoint { x: p.x, y: p.y, z: p.z.ln() })
}

/// Distance of the curvature −1 metric `(dx² + dy² + dz²) / z²` on `U`.
pub fn hyp_distance(p: &UPoint, q: &UPoint) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    let dz = p.z - q.z;
    let chord = (dx * dx + dy * dy + dz * dz).sqrt();
    // cosh d = 1 + |p - q|^2 / (2 z_p z_q), rewritten through asinh for accuracy near 0
    2.0 * (chord / (2.0 * (p.z * q.z).sqrt())).asinh()
}
