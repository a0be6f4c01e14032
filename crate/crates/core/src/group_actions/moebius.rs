use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model_space::UPoint;

/// An element of PSL(2,ℂ) acting on upper half space by the Poincaré
/// extension of its Möbius map on the boundary plane `w = x + iy`.
///
/// Stored with `ad − bc = 1` and the first significant entry having argument
/// in `(−π/2, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusC {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

const SIGN_TOL: f64 = 1e-13;

impl MoebiusC {
    pub const IDENTITY: MoebiusC = MoebiusC {
        a: Complex64::new(1.0, 0.0),
        b: Complex64::new(0.0, 0.0),
        c: Complex64::new(0.0, 0.0),
        d: Complex64::new(1.0, 0.0),
    };

    /// Accepts a matrix whose determinant is within `1e-9` of one.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        if ![a, b, c, d].iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Constraint("non-finite matrix entry".into()));
        }
        let det = a * d - b * c;
        if (det - 1.0).norm() > 1e-9 {
            return Err(Error::Constraint(format!("determinant {det} is not 1")));
        }
        Ok(Self::normalized(a, b, c, d))
    }

    /// Rescales any nonsingular matrix into the canonical representative.
    pub fn from_nonsingular(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let det = a * d - b * c;
        if !(det.norm() > 1e-300) || !det.re.is_finite() || !det.im.is_finite() {
            return Err(Error::Constraint("singular matrix".into()));
        }
        Ok(Self::normalized(a, b, c, d))
    }

    fn normalized(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        let k = (a * d - b * c).sqrt().inv();
        let (a, b, c, d) = (a * k, b * k, c * k, d * k);
        let scale = a.norm().max(b.norm()).max(c.norm()).max(d.norm());
        let tol = SIGN_TOL * scale;
        let lead = [a, b, c, d]
            .into_iter()
            .find(|z| z.norm() > tol)
            .unwrap_or(Complex64::new(1.0, 0.0));
        let positive = if lead.re.abs() > tol { lead.re > 0.0 } else { lead.im > 0.0 };
        if positive {
            MoebiusC { a, b, c, d }
        } else {
            MoebiusC { a: -a, b: -b, c: -c, d: -d }
        }
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }
    pub fn b(&self) -> Complex64 {
        self.b
    }
    pub fn c(&self) -> Complex64 {
        self.c
    }
    pub fn d(&self) -> Complex64 {
        self.d
    }

    pub fn entries(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// The parabolic `[[1, λ], [0, 1]]`, i.e. `w -> w + λ`.
    pub fn translation(lambda: Complex64) -> Self {
        MoebiusC { b: lambda, ..Self::IDENTITY }
    }

    /// `(w, t) -> (w / h, t / h)`.
    pub fn dilation(inverse_scale: f64) -> Self {
        let r = inverse_scale.sqrt();
        MoebiusC {
            a: Complex64::new(r.recip(), 0.0),
            d: Complex64::new(r, 0.0),
            ..Self::IDENTITY
        }
    }

    pub fn compose(&self, o: &MoebiusC) -> MoebiusC {
        Self::normalized(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }

    pub fn inverse(&self) -> MoebiusC {
        Self::normalized(self.d, -self.b, -self.c, self.a)
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Poincaré extension:
    /// `(w, t) -> (((aw + b)·conj(cw + d) + a·conj(c)·t²) / D, t / D)`
    /// with `D = |cw + d|² + |c|² t²`.
    pub fn act(&self, p: &UPoint) -> Result<UPoint> {
        let w = Complex64::new(p.x, p.y);
        let t = p.z;
        let cwd = self.c * w + self.d;
        let den = cwd.norm_sqr() + self.c.norm_sqr() * t * t;
        if den < 1e-300 {
            return Err(Error::Range("Poincaré extension denominator vanishes".into()));
        }
        let num = (self.a * w + self.b) * cwd.conj() + self.a * self.c.conj() * (t * t);
        let out = UPoint { x: num.re / den, y: num.im / den, z: t / den };
        if !(out.x.is_finite() && out.y.is_finite() && out.z.is_finite()) || out.z <= 0.0 {
            return Err(Error::Range("image left upper half space".into()));
        }
        Ok(out)
    }

    /// Boundary fixed point of a parabolic or loxodromic element, `None` for ∞.
    pub fn boundary_fixed_point(&self) -> Option<Complex64> {
        if self.c.norm() < 1e-12 {
            None
        } else {
            Some((self.a - self.d) / (self.c * 2.0))
        }
    }

    pub fn max_abs_diff(&self, o: &MoebiusC) -> f64 {
        (self.a - o.a)
            .norm()
            .max((self.b - o.b).norm())
            .max((self.c - o.c).norm())
            .max((self.d - o.d).norm())
    }
}

impl fmt::Display for MoebiusC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = |z: Complex64| format!("{:.14e}{:+.14e}i", z.re, z.im);
        write!(f, "[[{}, {}], [{}, {}]]", z(self.a), z(self.b), z(self.c), z(self.d))
    }
}
