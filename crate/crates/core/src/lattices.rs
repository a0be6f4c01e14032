//! Flat torus lattices and the reduction of cusp subgroups to standard form.
//!
//! A toroidal end of any of the four geometries has a ℤ + ℤ subgroup that is
//! conjugate to a lattice of horizontal translations fixing ∞. The lattice is
//! then normalized to unit area by choosing the height of the cross-section,
//! which is realized by a dilation of the half plane (or half space).
//!
//! For `H3` the dilation scales both horizontal directions, so the height is
//! `sqrt(area)`. For `H2R` and `SL2T` only the horocycle direction `x` scales
//! while the fiber direction `y` is rigid, so the height is `area` itself.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group_actions::{FiberedIsom, GroupElement, IsomH2R, MoebiusC, Sl2R, Tag};
use crate::sampling::reference_points;

/// Residual allowed when recognizing group-theoretic properties of inputs.
pub const CUSP_TOL: f64 = 1e-9;

/// A rank-2 lattice of horizontal translations with basis `b1`, `b2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lattice2 {
    b1: [f64; 2],
    b2: [f64; 2],
}

impl Lattice2 {
    pub fn new(b1: [f64; 2], b2: [f64; 2]) -> Result<Self> {
        if !b1.iter().chain(b2.iter()).all(|v| v.is_finite()) {
            return Err(Error::Constraint("non-finite lattice basis".into()));
        }
        let l = Lattice2 { b1, b2 };
        if l.cross().abs() <= 1e-12 {
            return Err(Error::Constraint(format!(
                "degenerate lattice basis {b1:?}, {b2:?}"
            )));
        }
        Ok(l)
    }

    /// Basis as the columns of a matrix.
    pub fn from_columns(m: [[f64; 2]; 2]) -> Result<Self> {
        Self::new([m[0][0], m[1][0]], [m[0][1], m[1][1]])
    }

    pub fn unit_square() -> Self {
        Lattice2 { b1: [1.0, 0.0], b2: [0.0, 1.0] }
    }

    pub fn b1(&self) -> [f64; 2] {
        self.b1
    }
    pub fn b2(&self) -> [f64; 2] {
        self.b2
    }
    pub fn basis(&self) -> [[f64; 2]; 2] {
        [self.b1, self.b2]
    }

    /// Basis vectors as columns.
    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [[self.b1[0], self.b2[0]], [self.b1[1], self.b2[1]]]
    }

    fn cross(&self) -> f64 {
        self.b1[0] * self.b2[1] - self.b1[1] * self.b2[0]
    }

    pub fn area(&self) -> f64 {
        self.cross().abs()
    }

    pub fn scaled(&self, k: f64) -> Lattice2 {
        Lattice2 {
            b1: [self.b1[0] * k, self.b1[1] * k],
            b2: [self.b2[0] * k, self.b2[1] * k],
        }
    }

    fn scaled_x(&self, k: f64) -> Lattice2 {
        Lattice2 { b1: [self.b1[0] * k, self.b1[1]], b2: [self.b2[0] * k, self.b2[1]] }
    }

    /// Change of basis `(b1, b2) · M` for an integer matrix `M`.
    pub fn transform(&self, m: [[i64; 2]; 2]) -> Result<Lattice2> {
        let col = |j: usize| {
            let (p, q) = (m[0][j] as f64, m[1][j] as f64);
            [p * self.b1[0] + q * self.b2[0], p * self.b1[1] + q * self.b2[1]]
        };
        Lattice2::new(col(0), col(1))
    }

    /// Coordinates of `v` in the basis.
    pub fn coordinates(&self, v: [f64; 2]) -> [f64; 2] {
        let det = self.cross();
        [
            (v[0] * self.b2[1] - v[1] * self.b2[0]) / det,
            (self.b1[0] * v[1] - self.b1[1] * v[0]) / det,
        ]
    }

    pub fn max_abs_diff(&self, o: &Lattice2) -> f64 {
        self.b1
            .iter()
            .chain(self.b2.iter())
            .zip(o.b1.iter().chain(o.b2.iter()))
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Translation generators embedded in the tagged group.
    pub fn translations(&self, tag: Tag) -> [GroupElement; 2] {
        [
            GroupElement::embed_translation(self.b1, tag),
            GroupElement::embed_translation(self.b2, tag),
        ]
    }
}

pub fn area(l: &Lattice2) -> f64 {
    l.area()
}

/// Two commuting nontrivial elements of one group generating a toroidal end.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CuspSubgroup {
    g1: GroupElement,
    g2: GroupElement,
}

impl CuspSubgroup {
    pub fn new(g1: GroupElement, g2: GroupElement) -> Result<Self> {
        if g1.tag() != g2.tag() {
            return Err(Error::TagMismatch { left: g1.tag(), right: g2.tag() });
        }
        let pts = reference_points();
        let id = GroupElement::identity(g1.tag());
        for g in [&g1, &g2] {
            if g.action_residual(&id, &pts)? <= CUSP_TOL {
                return Err(Error::Constraint("cusp generator is trivial".into()));
            }
        }
        let r = g1.compose(&g2)?.action_residual(&g2.compose(&g1)?, &pts)?;
        if !(r <= CUSP_TOL) {
            return Err(Error::Constraint(format!(
                "cusp generators do not commute (residual {r:.3e})"
            )));
        }
        Ok(CuspSubgroup { g1, g2 })
    }

    pub fn tag(&self) -> Tag {
        self.g1.tag()
    }

    pub fn generators(&self) -> [GroupElement; 2] {
        [self.g1, self.g2]
    }

    /// Action residual of `g1 g2` against `g2 g1` on the reference points.
    pub fn commutator_residual(&self) -> Result<f64> {
        let pts = reference_points();
        self.g1.compose(&self.g2)?.action_residual(&self.g2.compose(&self.g1)?, &pts)
    }
}

/// Conjugator `h` and lattice `L` with `h g_i h⁻¹` acting as the horizontal
/// translation by the `i`-th basis vector of `L`.
pub fn standard_form(cusp: &CuspSubgroup) -> Result<(GroupElement, Lattice2)> {
    let tag = cusp.tag();
    let conjugator = match tag {
        Tag::H3 => h3_conjugator(cusp)?,
        Tag::H2R | Tag::Sl2T => half_plane_conjugator(cusp)?,
        Tag::Aff => GroupElement::identity(Tag::Aff),
    };
    let mut vectors = [[0.0; 2]; 2];
    for (slot, g) in vectors.iter_mut().zip(cusp.generators()) {
        let t = g.conjugate_by(&conjugator)?;
        *slot = t.as_translation(CUSP_TOL).ok_or_else(|| {
            Error::NotACusp(format!("{tag} generator is not conjugate to a horizontal translation"))
        })?;
    }
    let lattice = Lattice2::new(vectors[0], vectors[1])
        .map_err(|_| Error::NotACusp("generators span a rank-1 group".into()))?;
    Ok((conjugator, lattice))
}

/// Maps the boundary point `ζ` to ∞: `w -> −1 / (w − ζ)`.
fn h3_conjugator(cusp: &CuspSubgroup) -> Result<GroupElement> {
    let mut fixed: Option<(f64, Complex64)> = None;
    let mut at_infinity = 0;
    for g in cusp.generators() {
        let GroupElement::H3(m) = g else { unreachable!() };
        let tr = m.trace();
        if (tr - 2.0).norm().min((tr + 2.0).norm()) >= CUSP_TOL {
            return Err(Error::NotACusp(format!("H3 generator has trace {tr}, not ±2")));
        }
        match m.boundary_fixed_point() {
            None => at_infinity += 1,
            Some(z) => {
                let weight = m.c().norm();
                if fixed.is_none_or(|(w, _)| weight > w) {
                    fixed = Some((weight, z));
                }
            }
        }
    }
    match (fixed, at_infinity) {
        (None, _) => Ok(GroupElement::identity(Tag::H3)),
        (Some(_), n) if n > 0 => {
            Err(Error::NotACusp("generators have no common fixed point".into()))
        }
        (Some((_, z)), _) => {
            let h = MoebiusC::new(0.0.into(), (-1.0).into(), 1.0.into(), -z)?;
            Ok(h.into())
        }
    }
}

fn half_plane_conjugator(cusp: &CuspSubgroup) -> Result<GroupElement> {
    let tag = cusp.tag();
    let mut fixed: Option<(f64, f64)> = None;
    let mut at_infinity = 0;
    let mut moving = 0;
    for g in cusp.generators() {
        let m = match g {
            GroupElement::H2R(e) => *e.matrix(),
            GroupElement::Sl2T(e) => *e.matrix(),
            _ => unreachable!(),
        };
        if m.max_abs_diff(&Sl2R::IDENTITY) <= CUSP_TOL {
            continue;
        }
        moving += 1;
        if (m.trace().abs() - 2.0).abs() >= CUSP_TOL {
            return Err(Error::NotACusp(format!(
                "{tag} base matrix has trace {}, not ±2",
                m.trace()
            )));
        }
        match m.boundary_fixed_point() {
            None => at_infinity += 1,
            Some(z) => {
                let weight = m.c.abs();
                if fixed.is_none_or(|(w, _)| weight > w) {
                    fixed = Some((weight, z));
                }
            }
        }
    }
    if moving == 0 {
        return Err(Error::NotACusp("both generators are pure fiber translations".into()));
    }
    let m = match (fixed, at_infinity) {
        (None, _) => Sl2R::IDENTITY,
        (Some(_), n) if n > 0 => {
            return Err(Error::NotACusp("generators have no common fixed point".into()));
        }
        (Some((_, z)), _) => Sl2R::new([[0.0, -1.0], [1.0, -z]])?,
    };
    Ok(match tag {
        Tag::H2R => IsomH2R::new(m, 0.0).into(),
        _ => FiberedIsom::new(m, 0, 0.0).into(),
    })
}

/// Height of the unit-area cross-section and the lattice it induces.
pub fn normalize(l: &Lattice2, tag: Tag) -> Result<(f64, Lattice2)> {
    let a = l.area();
    if !(a > 1e-12) {
        return Err(Error::Constraint("degenerate lattice".into()));
    }
    Ok(match tag {
        Tag::H3 => {
            let h = a.sqrt();
            (h, l.scaled(h.recip()))
        }
        Tag::H2R | Tag::Sl2T => (a, l.scaled_x(a.recip())),
        Tag::Aff => (1.0, l.scaled(a.sqrt().recip())),
    })
}

/// The element realizing the move to height `h`: it conjugates the standard
/// lattice onto the normalized one. Identity for `AFF`, where the rescaling is
/// formal.
pub fn normalizing_dilation(height: f64, tag: Tag) -> GroupElement {
    match tag {
        Tag::H3 => MoebiusC::dilation(height).into(),
        Tag::H2R => IsomH2R::new(Sl2R::dilation(height), 0.0).into(),
        Tag::Sl2T => FiberedIsom::new(Sl2R::dilation(height), 0, 0.0).into(),
        Tag::Aff => GroupElement::identity(Tag::Aff),
    }
}

/// Shape modulus `τ` in the closed fundamental domain
/// `|τ| ≥ 1`, `Re τ ∈ [−1/2, 1/2)`, with `Re τ ≤ 0` on the unit arc.
pub fn modulus(l: &Lattice2) -> Complex64 {
    const EDGE: f64 = 1e-12;
    let z1 = Complex64::new(l.b1[0], l.b1[1]);
    let z2 = Complex64::new(l.b2[0], l.b2[1]);
    let mut tau = z2 / z1;
    if tau.im < 0.0 {
        tau = -tau;
    }
    loop {
        tau.re -= (tau.re + 0.5).floor();
        if tau.re >= 0.5 - EDGE {
            tau.re -= 1.0;
        }
        if tau.norm_sqr() < 1.0 - EDGE {
            tau = -tau.inv();
        } else {
            break;
        }
    }
    if (tau.norm_sqr() - 1.0).abs() <= EDGE && tau.re > 0.0 {
        tau.re = -tau.re;
    }
    tau
}
