use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use super::sl2r::{winding_cocycle, Sl2R};
use crate::error::Result;
use crate::model_space::UPoint;

/// The ℤ cover of PSL(2,ℝ) × SO(2) acting on the universal cover of the unit
/// tangent bundle of the hyperbolic plane.
///
/// The base `m` acts on the half plane `(x, z)`; the fiber coordinate `y` is
/// the lifted angle of a tangent vector against the vertical field, so
/// `y -> y + θ + Θ_m(x, z)` where `Θ_m` is the continuous branch of the
/// derivative rotation angle normalized at `i`.
///
/// A lift is written `(m, k, θ)` modulo the central relation that trades one
/// full turn of the winding for a fiber shift of `−2π`; the stored form has
/// `k` folded into `θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiberedIsom {
    m: Sl2R,
    theta: f64,
}

impl FiberedIsom {
    pub const IDENTITY: FiberedIsom = FiberedIsom { m: Sl2R::IDENTITY, theta: 0.0 };

    pub fn new(m: Sl2R, k: i64, theta: f64) -> Self {
        FiberedIsom { m, theta: theta + 2.0 * PI * k as f64 }
    }

    pub fn matrix(&self) -> &Sl2R {
        &self.m
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Winding component of the canonical representative (always folded to 0).
    pub fn winding(&self) -> i64 {
        0
    }

    pub fn compose(&self, o: &FiberedIsom) -> FiberedIsom {
        let n = winding_cocycle(&self.m, &o.m);
        FiberedIsom {
            m: self.m.mul(&o.m),
            theta: self.theta + o.theta + 2.0 * PI * n as f64,
        }
    }

    pub fn inverse(&self) -> FiberedIsom {
        let inv = self.m.inv();
        let n = winding_cocycle(&self.m, &inv);
        FiberedIsom { m: inv, theta: -self.theta - 2.0 * PI * n as f64 }
    }

    pub fn act(&self, p: &UPoint) -> Result<UPoint> {
        let w = Complex64::new(p.x, p.z);
        let image = self.m.apply(w)?;
        Ok(UPoint {
            x: image.re,
            y: p.y + self.theta + self.m.lifted_angle(w),
            z: image.im,
        })
    }

    pub fn max_abs_diff(&self, o: &FiberedIsom) -> f64 {
        self.m.max_abs_diff(&o.m).max((self.theta - o.theta).abs())
    }
}

impl fmt::Display for FiberedIsom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(
            f,
            "m=[[{:.14e}, {:.14e}], [{:.14e}, {:.14e}]] k=0 theta={:.14e}",
            m.a, m.b, m.c, m.d, self.theta
        )
    }
}
