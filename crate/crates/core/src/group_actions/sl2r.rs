use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Unit-determinant real 2×2 matrix, normalized so the first entry of
/// significant size (in the order a, b, c, d) is positive. This picks one
/// representative of each class in PSL(2,ℝ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sl2R {
    pub(crate) a: f64,
    pub(crate) b: f64,
    pub(crate) c: f64,
    pub(crate) d: f64,
}

const SIGN_TOL: f64 = 1e-13;

impl Sl2R {
    pub const IDENTITY: Sl2R = Sl2R { a: 1.0, b: 0.0, c: 0.0, d: 1.0 };

    /// Accepts `det` within `1e-9` of one, then renormalizes exactly.
    pub fn new(m: [[f64; 2]; 2]) -> Result<Self> {
        let [[a, b], [c, d]] = m;
        if ![a, b, c, d].iter().all(|v| v.is_finite()) {
            return Err(Error::Constraint("non-finite matrix entry".into()));
        }
        let det = a * d - b * c;
        if (det - 1.0).abs() > 1e-9 {
            return Err(Error::Constraint(format!("determinant {det} is not 1")));
        }
        Ok(Self::normalized(a, b, c, d))
    }

    /// Scales a positive-determinant matrix to determinant one and fixes the sign.
    pub(crate) fn normalized(a: f64, b: f64, c: f64, d: f64) -> Self {
        let det = a * d - b * c;
        let k = det.sqrt().recip();
        let (a, b, c, d) = (a * k, b * k, c * k, d * k);
        let scale = a.abs().max(b.abs()).max(c.abs()).max(d.abs());
        let lead = [a, b, c, d]
            .into_iter()
            .find(|v| v.abs() > SIGN_TOL * scale)
            .unwrap_or(1.0);
        if lead < 0.0 {
            Sl2R { a: -a, b: -b, c: -c, d: -d }
        } else {
            Sl2R { a, b, c, d }
        }
    }

    pub fn entries(&self) -> [[f64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn translation(u: f64) -> Self {
        Sl2R { a: 1.0, b: u, c: 0.0, d: 1.0 }
    }

    /// `w -> w / h`.
    pub fn dilation(inverse_scale: f64) -> Self {
        let r = inverse_scale.sqrt();
        Sl2R { a: r.recip(), b: 0.0, c: 0.0, d: r }
    }

    pub fn mul(&self, o: &Sl2R) -> Sl2R {
        Self::normalized(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }

    pub fn inv(&self) -> Sl2R {
        Self::normalized(self.d, -self.b, -self.c, self.a)
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn apply(&self, w: Complex64) -> Result<Complex64> {
        let den = self.c * w + self.d;
        if den.norm_sqr() < 1e-300 {
            return Err(Error::Range("Möbius denominator vanishes".into()));
        }
        let out = (self.a * w + self.b) / den;
        if !(out.re.is_finite() && out.im.is_finite()) || out.im <= 0.0 {
            return Err(Error::Range("image left the upper half plane".into()));
        }
        Ok(out)
    }

    /// Principal rotation angle of the derivative at the base point `i`,
    /// in `(−π, π]`.
    pub fn base_angle(&self) -> f64 {
        if self.c == 0.0 {
            return 0.0;
        }
        wrap_pi(-2.0 * Complex64::new(self.d, self.c).arg())
    }

    /// Continuous branch of the derivative rotation angle over the whole
    /// half plane, agreeing with [`Sl2R::base_angle`] at `i`.
    pub fn lifted_angle(&self, w: Complex64) -> f64 {
        if self.c == 0.0 {
            return self.base_angle();
        }
        // c w + d stays in one open half plane, so the quotient has |arg| < π
        let ratio = (self.c * w + self.d) / Complex64::new(self.d, self.c);
        self.base_angle() - 2.0 * ratio.arg()
    }

    /// Fixed point on the boundary line, `None` for ∞.
    pub fn boundary_fixed_point(&self) -> Option<f64> {
        if self.c.abs() < 1e-12 {
            None
        } else {
            Some((self.a - self.d) / (2.0 * self.c))
        }
    }

    pub fn max_abs_diff(&self, o: &Sl2R) -> f64 {
        (self.a - o.a)
            .abs()
            .max((self.b - o.b).abs())
            .max((self.c - o.c).abs())
            .max((self.d - o.d).abs())
    }
}

/// Wraps an angle into `(−π, π]`.
pub fn wrap_pi(theta: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut t = theta % two_pi;
    if t <= -PI {
        t += two_pi;
    } else if t > PI {
        t -= two_pi;
    }
    t
}

/// Integer winding of the lifted derivative angle under composition:
/// `Θ_{ab}(w) = Θ_a(b w) + Θ_b(w) − 2π n(a, b)` for every `w`.
pub fn winding_cocycle(a: &Sl2R, b: &Sl2R) -> i64 {
    let i = Complex64::new(0.0, 1.0);
    let bi = b.apply(i).expect("SL(2,R) preserves the upper half plane");
    let ab = a.mul(b);
    let gap = a.lifted_angle(bi) + b.base_angle() - ab.base_angle();
    (gap / (2.0 * PI)).round() as i64
}

/// Rotation angle of the derivative of `m` at `w`, measured against the
/// vertical field, as a principal value in `(−π, π]`. Zero exactly when `c = 0`.
pub fn angle_derivative(m: &Sl2R, w: Complex64) -> f64 {
    if m.c == 0.0 {
        return 0.0;
    }
    wrap_pi(-2.0 * (m.c * w + m.d).arg())
}
