use crate::group_actions::{GroupElement, Tag};
use crate::model_space::UPoint;
use crate::sampling::sample_points;

use super::build::{LieGeneratedStructure, Provenance};
use super::report::{Check, VerificationReport};

pub const MINIMALITY_NOTE: &str = "minimality assumed by construction: each wall's reduction \
    generators are its lattice (collar and end walls) or the middle group H (edge walls)";
pub const MODULI_NOTE: &str = "moduli count is slide plus offset per edge; cusp heights and \
    lattice shapes are fixed by the pieces and by normalization and are not counted";

fn residual(a: &GroupElement, b: &GroupElement, pts: &[UPoint]) -> f64 {
    a.action_residual(b, pts).unwrap_or(f64::INFINITY)
}

fn conjugated(g: &GroupElement, by: &GroupElement) -> Option<GroupElement> {
    g.conjugate_by(by).ok()
}

/// Runs every structural check on `s` against `samples` seeded points.
/// Floating-point checks pass iff their residual is below `eps`.
pub fn verify(s: &LieGeneratedStructure, eps: f64, samples: usize, seed: u64) -> VerificationReport {
    let pts = sample_points(samples, seed);
    let mut checks = Vec::new();

    for w in &s.intersections {
        let side = format!("{} | {}", s.region_name(w.a), s.region_name(w.b));
        for (k, r) in w.reductions.iter().enumerate() {
            checks.push(Check::float(
                format!("reduction/{}/t{k}", w.name()),
                residual(&r.in_a, &r.in_b, &pts),
                eps,
                format!("{side}: {} vs {}", r.in_a.tag(), r.in_b.tag()),
            ));
        }

        // the stored generators must be exactly the wall subgroup each region
        // sees, carried into the wall chart
        let counts_match =
            w.reductions.len() == w.wall_a.len() && w.reductions.len() == w.wall_b.len();
        let mut worst = if counts_match { 0.0f64 } else { f64::INFINITY };
        for (k, r) in w.reductions.iter().enumerate().take(w.wall_a.len().min(w.wall_b.len())) {
            for (chart, rep, own) in [(&w.chart_a, &r.in_a, &w.wall_a[k]), (&w.chart_b, &r.in_b, &w.wall_b[k])] {
                let d = match conjugated(rep, chart) {
                    Some(g) => residual(&g, own, &pts),
                    None => f64::INFINITY,
                };
                worst = if d.is_nan() { d } else { worst.max(d) };
            }
        }
        checks.push(Check::float(
            format!("minimality/{}", w.name()),
            worst,
            eps,
            format!("{side}: {} generators", w.reductions.len()),
        ));

        checks.push(Check::float(
            format!("area/{}", w.name()),
            (w.lattice.area() - 1.0).abs(),
            eps,
            format!("wall lattice area {}", w.lattice.area()),
        ));
    }

    for r in &s.regions {
        if let Provenance::Middle { edge } = r.provenance {
            let mut worst = 0.0f64;
            for g in &r.generators {
                let d = match g {
                    GroupElement::Aff(a) => (a.det().abs() - 1.0).abs(),
                    _ => f64::INFINITY,
                };
                worst = worst.max(d);
            }
            checks.push(Check::float(
                format!("h_in_a/e{edge}"),
                worst,
                eps,
                format!("{} generators of H in the affine group, |det| = 1", r.generators.len()),
            ));
        }
    }

    for c in &s.cusps {
        let [g1, g2] = c.original.generators();
        let d = match (g1.compose(&g2), g2.compose(&g1)) {
            (Ok(a), Ok(b)) => residual(&a, &b, &pts),
            _ => f64::INFINITY,
        };
        checks.push(Check::float(
            format!("commute/{}.{}", c.vertex, c.attachment.cusp_id),
            d,
            eps,
            format!("{} cusp generators commute", c.original.tag()),
        ));
    }

    for (i, cyl) in s.cylinders.iter().enumerate() {
        let flip: GroupElement = cyl.flip.into();
        for (k, v) in cyl.lat_left.basis().into_iter().enumerate() {
            let t = GroupElement::embed_translation(v, Tag::Aff);
            let image = GroupElement::embed_translation(cyl.gluing.apply_linear(v), Tag::Aff);
            let d = match conjugated(&t, &flip) {
                Some(g) => residual(&g, &image, &pts),
                None => f64::INFINITY,
            };
            checks.push(Check::float(
                format!("flip/e{i}/t{k}"),
                d,
                eps,
                "F T_v F^-1 = T_(A v)".to_string(),
            ));
        }
        // A carries the left basis onto the right basis twisted by the class
        let lhs = cyl.lat_left.basis().map(|v| cyl.gluing.apply_linear(v));
        let b2 = cyl.lat_right.basis();
        let mut worst = 0.0f64;
        for (j, img) in lhs.iter().enumerate() {
            for row in 0..2 {
                let want = cyl.class[0][j] as f64 * b2[0][row] + cyl.class[1][j] as f64 * b2[1][row];
                worst = worst.max((img[row] - want).abs());
            }
        }
        checks.push(Check::float(
            format!("flip/e{i}/class"),
            worst,
            eps,
            format!("A B1 = B2 {:?}", cyl.class),
        ));
    }

    for (v, k) in &s.klein_ends {
        for c in k.checks() {
            checks.push(Check::exact(format!("klein/{v}/{}", c.name), c.passed, c.detail));
        }
        let iota: GroupElement = k.involution.into();
        let b = k.involution.offset();
        let sigma = k.sigma;
        let t = [
            (sigma[0][0] + 1) as f64 * b[0] + sigma[0][1] as f64 * b[1],
            sigma[1][0] as f64 * b[0] + (sigma[1][1] + 1) as f64 * b[1],
        ];
        let d = match iota.compose(&iota) {
            Ok(sq) => residual(&sq, &GroupElement::embed_translation(t, Tag::Aff), &pts),
            Err(_) => f64::INFINITY,
        };
        checks.push(Check::float(
            format!("klein/{v}/square_action"),
            d,
            eps,
            format!("iota^2 acts as translation by {t:?}"),
        ));
    }

    VerificationReport::new(checks, vec![MINIMALITY_NOTE.to_string(), MODULI_NOTE.to_string()])
}
