use std::fmt;

use crate::error::{Error, Result};
use crate::model_space::{EPoint, UPoint};

/// A Euclidean affine map of ℝ² × ℝ that respects the splitting and preserves
/// measure on each factor: `(v, u) -> (L v + b_h, ε u + b_3)`, `|det L| = 1`,
/// `ε = ±1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanAffine {
    pub linear: [[f64; 2]; 2],
    pub eps: i8,
    pub translation: [f64; 3],
}

impl EuclideanAffine {
    pub fn apply(&self, p: &EPoint) -> EPoint {
        let l = &self.linear;
        let b = &self.translation;
        EPoint {
            x: l[0][0] * p.x + l[0][1] * p.y + b[0],
            y: l[1][0] * p.x + l[1][1] * p.y + b[1],
            z: f64::from(self.eps) * p.z + b[2],
        }
    }

    pub fn compose(&self, o: &EuclideanAffine) -> EuclideanAffine {
        let (l, m) = (&self.linear, &o.linear);
        let ob = &o.translation;
        EuclideanAffine {
            linear: mat_mul(l, m),
            eps: self.eps * o.eps,
            translation: [
                l[0][0] * ob[0] + l[0][1] * ob[1] + self.translation[0],
                l[1][0] * ob[0] + l[1][1] * ob[1] + self.translation[1],
                f64::from(self.eps) * ob[2] + self.translation[2],
            ],
        }
    }
}

/// The affine group `[A]` transported to upper half space by `exp` on the
/// third coordinate: `(x, y) -> L(x, y) + (b1, b2)`, `z -> e^{b3} z^ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineA {
    linear: [[f64; 2]; 2],
    eps: i8,
    b: [f64; 3],
}

impl AffineA {
    pub const IDENTITY: AffineA = AffineA {
        linear: [[1.0, 0.0], [0.0, 1.0]],
        eps: 1,
        b: [0.0, 0.0, 0.0],
    };

    pub fn new(linear: [[f64; 2]; 2], eps: i8, b: [f64; 3]) -> Result<Self> {
        if eps != 1 && eps != -1 {
            return Err(Error::Constraint(format!("third-factor sign {eps} is not ±1")));
        }
        if !linear.iter().flatten().chain(b.iter()).all(|v| v.is_finite()) {
            return Err(Error::Constraint("non-finite affine entry".into()));
        }
        let det = det2(&linear);
        if (det.abs() - 1.0).abs() > 1e-12 {
            return Err(Error::Constraint(format!(
                "horizontal block has |det| = {} (must be 1)",
                det.abs()
            )));
        }
        Ok(AffineA { linear, eps, b })
    }

    /// Same as [`AffineA::new`] without the determinant check; used where
    /// the block is unimodular only up to floating roundoff.
    pub(crate) fn from_parts(linear: [[f64; 2]; 2], eps: i8, b: [f64; 3]) -> Self {
        debug_assert!(eps == 1 || eps == -1);
        AffineA { linear, eps, b }
    }

    pub fn translation(v: [f64; 2]) -> Self {
        AffineA { b: [v[0], v[1], 0.0], ..Self::IDENTITY }
    }

    pub fn linear(&self) -> [[f64; 2]; 2] {
        self.linear
    }
    pub fn eps(&self) -> i8 {
        self.eps
    }
    pub fn offset(&self) -> [f64; 3] {
        self.b
    }

    pub fn det(&self) -> f64 {
        det2(&self.linear)
    }

    /// Orientation of the full 3-dimensional map: `sign(det L) · ε`.
    pub fn orientation(&self) -> i8 {
        let s: i8 = if self.det() > 0.0 { 1 } else { -1 };
        s * self.eps
    }

    pub fn euclidean(&self) -> EuclideanAffine {
        EuclideanAffine { linear: self.linear, eps: self.eps, translation: self.b }
    }

    pub fn compose(&self, o: &AffineA) -> AffineA {
        let e = self.euclidean().compose(&o.euclidean());
        AffineA { linear: e.linear, eps: e.eps, b: e.translation }
    }

    pub fn inverse(&self) -> AffineA {
        let l = &self.linear;
        let det = det2(l);
        let inv = [[l[1][1] / det, -l[0][1] / det], [-l[1][0] / det, l[0][0] / det]];
        let b = &self.b;
        AffineA {
            linear: inv,
            eps: self.eps,
            b: [
                -(inv[0][0] * b[0] + inv[0][1] * b[1]),
                -(inv[1][0] * b[0] + inv[1][1] * b[1]),
                -f64::from(self.eps) * b[2],
            ],
        }
    }

    pub fn act(&self, p: &UPoint) -> Result<UPoint> {
        let l = &self.linear;
        let z = self.b[2].exp() * p.z.powi(i32::from(self.eps));
        if !z.is_finite() || z <= 0.0 {
            return Err(Error::Range("affine image height not representable".into()));
        }
        Ok(UPoint {
            x: l[0][0] * p.x + l[0][1] * p.y + self.b[0],
            y: l[1][0] * p.x + l[1][1] * p.y + self.b[1],
            z,
        })
    }

    pub fn max_abs_diff(&self, o: &AffineA) -> f64 {
        if self.eps != o.eps {
            return f64::INFINITY;
        }
        self.linear
            .iter()
            .flatten()
            .zip(o.linear.iter().flatten())
            .chain(self.b.iter().zip(o.b.iter()))
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Transfers a Euclidean affine map to its action on upper half space,
/// so that `act(transfer(f), exp(q)) = exp(f(q))`.
pub fn transfer_affine(f: &EuclideanAffine) -> Result<AffineA> {
    AffineA::new(f.linear, f.eps, f.translation)
}

impl fmt::Display for AffineA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.linear;
        write!(
            f,
            "L=[[{:.14e}, {:.14e}], [{:.14e}, {:.14e}]] eps={:+} b=[{:.14e}, {:.14e}, {:.14e}]",
            l[0][0], l[0][1], l[1][0], l[1][1], self.eps, self.b[0], self.b[1], self.b[2]
        )
    }
}

pub(crate) fn det2(m: &[[f64; 2]; 2]) -> f64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub(crate) fn mat_mul(l: &[[f64; 2]; 2], m: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [
        [l[0][0] * m[0][0] + l[0][1] * m[1][0], l[0][0] * m[0][1] + l[0][1] * m[1][1]],
        [l[1][0] * m[0][0] + l[1][1] * m[1][0], l[1][0] * m[0][1] + l[1][1] * m[1][1]],
    ]
}
