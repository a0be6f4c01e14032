//! Seeded sample sets used by verification and by the property checks.
//!
//! Points are drawn from the standard box `x, y ∈ [−5, 5]`, `z ∈ [0.1, 10]`.
//! Random group elements are products of bounded rotations, dilations and
//! translations so their actions on the box stay well conditioned.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::group_actions::{AffineA, FiberedIsom, GroupElement, IsomH2R, MoebiusC, Sl2R, Tag};
use crate::model_space::UPoint;

pub const BOX_XY: (f64, f64) = (-5.0, 5.0);
pub const BOX_Z: (f64, f64) = (0.1, 10.0);

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_point<R: Rng>(rng: &mut R) -> UPoint {
    UPoint {
        x: rng.gen_range(BOX_XY.0..BOX_XY.1),
        y: rng.gen_range(BOX_XY.0..BOX_XY.1),
        z: rng.gen_range(BOX_Z.0..BOX_Z.1),
    }
}

pub fn sample_points(n: usize, seed: u64) -> Vec<UPoint> {
    let mut r = rng(seed);
    (0..n).map(|_| random_point(&mut r)).collect()
}

/// The fixed set used to decide action equality between elements.
pub fn reference_points() -> Vec<UPoint> {
    sample_points(100, 0)
}

fn rotation(t: f64) -> Sl2R {
    let (s, c) = t.sin_cos();
    Sl2R::normalized(c, s, -s, c)
}

fn random_sl2r<R: Rng>(rng: &mut R) -> Sl2R {
    let rot = rotation(rng.gen_range(-PI..PI));
    let dil = Sl2R::dilation(rng.gen_range(0.5..2.0));
    let tr = Sl2R::translation(rng.gen_range(-1.0..1.0));
    tr.mul(&dil).mul(&rot)
}

fn random_moebius<R: Rng>(rng: &mut R) -> MoebiusC {
    let tilt = {
        let (s, c) = rng.gen_range(-PI..PI).sin_cos();
        MoebiusC::new(c.into(), s.into(), (-s).into(), c.into()).expect("rotation is unimodular")
    };
    let spin = Complex64::from_polar(1.0, rng.gen_range(-PI..PI) / 2.0);
    let lambda = rng.gen_range(0.5f64..2.0).sqrt();
    let dil = MoebiusC::new(spin * lambda, 0.0.into(), 0.0.into(), (spin * lambda).inv())
        .expect("diagonal is unimodular");
    let tr = MoebiusC::translation(Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    tr.compose(&dil).compose(&tilt)
}

fn random_affine<R: Rng>(rng: &mut R) -> AffineA {
    let m = random_sl2r(rng);
    let mut linear = m.entries();
    if rng.gen_bool(0.5) {
        linear[1][0] = -linear[1][0];
        linear[1][1] = -linear[1][1];
    }
    let eps = if rng.gen_bool(0.5) { 1 } else { -1 };
    let b = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
    AffineA::from_parts(linear, eps, b)
}

/// A random element of the tagged group with bounded distortion on the box.
pub fn random_element<R: Rng>(tag: Tag, rng: &mut R) -> GroupElement {
    match tag {
        Tag::H3 => random_moebius(rng).into(),
        Tag::Aff => random_affine(rng).into(),
        Tag::H2R => IsomH2R::new(random_sl2r(rng), rng.gen_range(-2.0..2.0)).into(),
        Tag::Sl2T => FiberedIsom::new(random_sl2r(rng), 0, rng.gen_range(-3.0..3.0)).into(),
    }
}
