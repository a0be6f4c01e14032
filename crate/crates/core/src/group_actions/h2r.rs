use std::fmt;

use num_complex::Complex64;

use super::sl2r::Sl2R;
use crate::error::Result;
use crate::model_space::UPoint;

/// PSL(2,ℝ) × ℝ: the matrix acts on the half plane `(x, z)`, the real
/// factor translates `y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsomH2R {
    m: Sl2R,
    s: f64,
}

impl IsomH2R {
    pub const IDENTITY: IsomH2R = IsomH2R { m: Sl2R::IDENTITY, s: 0.0 };

    pub fn new(m: Sl2R, s: f64) -> Self {
        IsomH2R { m, s }
    }

    pub fn matrix(&self) -> &Sl2R {
        &self.m
    }
    pub fn shift(&self) -> f64 {
        self.s
    }

    pub fn compose(&self, o: &IsomH2R) -> IsomH2R {
        IsomH2R { m: self.m.mul(&o.m), s: self.s + o.s }
    }

    pub fn inverse(&self) -> IsomH2R {
        IsomH2R { m: self.m.inv(), s: -self.s }
    }

    pub fn act(&self, p: &UPoint) -> Result<UPoint> {
        let w = self.m.apply(Complex64::new(p.x, p.z))?;
        Ok(UPoint { x: w.re, y: p.y + self.s, z: w.im })
    }

    pub fn max_abs_diff(&self, o: &IsomH2R) -> f64 {
        self.m.max_abs_diff(&o.m).max((self.s - o.s).abs())
    }
}

impl fmt::Display for IsomH2R {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(
            f,
            "m=[[{:.14e}, {:.14e}], [{:.14e}, {:.14e}]] s={:.14e}",
            m.a, m.b, m.c, m.d, self.s
        )
    }
}
