use std::collections::HashMap;
use std::fmt;

use crate::construction::{
    attach_cylinder, build_affine_cylinder, klein_end, AffineCylinderGlue, EndAttachment, KleinEnd,
    DEFAULT_COLLAR_HALFWIDTH,
};
use crate::error::{Error, Result};
use crate::group_actions::{GroupElement, Tag};
use crate::lattices::{CuspSubgroup, Lattice2};

use super::graph::{klein_lattice, moduli_dimension, validate, Endpoint, GeometryGraph, PieceKind};

const HALF_EDGE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Piece { vertex: String },
    Collar { vertex: String, cusp: String },
    Left { edge: usize },
    Middle { edge: usize },
    Right { edge: usize },
    KleinEnd { vertex: String },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Piece { vertex } => write!(f, "piece:{vertex}"),
            Provenance::Collar { vertex, cusp } => write!(f, "collar:{vertex}.{cusp}"),
            Provenance::Left { edge } => write!(f, "left:e{edge}"),
            Provenance::Middle { edge } => write!(f, "middle:e{edge}"),
            Provenance::Right { edge } => write!(f, "right:e{edge}"),
            Provenance::KleinEnd { vertex } => write!(f, "klein:{vertex}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Region {
    pub id: usize,
    pub tag: Tag,
    pub generators: Vec<GroupElement>,
    pub provenance: Provenance,
}

/// One reduction generator, written in the wall chart, as an element of each
/// adjacent region's group.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reduction {
    pub in_a: GroupElement,
    pub in_b: GroupElement,
}

/// Overlap of regions `a` and `b`. The region charts relate to the wall chart
/// `ψ` by `φ_a = chart_a ∘ ψ` and `φ_b = chart_b ∘ ψ`, so the transition from
/// `a` to `b` is `chart_b ∘ chart_a⁻¹`. `wall_a[k]` is the deck element of the
/// wall seen in region `a`'s own chart, as read off the region's data; it must
/// equal `chart_a ∘ reductions[k].in_a ∘ chart_a⁻¹`.
#[derive(Debug, Clone, PartialEq)]
pub struct Intersection {
    pub id: usize,
    pub a: usize,
    pub b: usize,
    pub chart_a: GroupElement,
    pub chart_b: GroupElement,
    pub reductions: Vec<Reduction>,
    pub wall_a: Vec<GroupElement>,
    pub wall_b: Vec<GroupElement>,
    pub lattice: Lattice2,
}

impl Intersection {
    pub fn name(&self) -> String {
        format!("w{}", self.id)
    }

    /// The region across the wall from `region`, if `region` borders it.
    pub fn other(&self, region: usize) -> Option<usize> {
        if region == self.a {
            Some(self.b)
        } else if region == self.b {
            Some(self.a)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CuspEnd {
    pub vertex: String,
    pub original: CuspSubgroup,
    pub attachment: EndAttachment,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LieGeneratedStructure {
    pub regions: Vec<Region>,
    pub intersections: Vec<Intersection>,
    pub base_region: usize,
    pub cusps: Vec<CuspEnd>,
    pub cylinders: Vec<AffineCylinderGlue>,
    pub klein_ends: Vec<(String, KleinEnd)>,
    pub moduli_dimension: usize,
}

impl LieGeneratedStructure {
    pub fn region_name(&self, id: usize) -> String {
        self.regions[id].provenance.to_string()
    }

    pub fn intersection(&self, id: usize) -> Result<&Intersection> {
        self.intersections
            .get(id)
            .ok_or_else(|| Error::Index(format!("no wall w{id} ({} walls)", self.intersections.len())))
    }

    /// Region id of the collar attached to `vertex.cusp`.
    pub fn collar_region(&self, vertex: &str, cusp: &str) -> Option<usize> {
        self.regions.iter().position(|r| {
            matches!(&r.provenance, Provenance::Collar { vertex: v, cusp: c } if v == vertex && c == cusp)
        })
    }

    /// Fault injection: replaces `in_b` of one reduction generator by
    /// `T_(delta, 0) ∘ in_b`.
    pub fn perturb_reduction(&mut self, wall: usize, index: usize, delta: f64) -> Result<()> {
        let count = self.intersection(wall)?.reductions.len();
        let r = self.intersections[wall].reductions.get_mut(index).ok_or_else(|| {
            Error::Index(format!("wall w{wall} has {count} reduction generators, no t{index}"))
        })?;
        let shift = GroupElement::embed_translation([delta, 0.0], r.in_b.tag());
        r.in_b = shift.compose(&r.in_b)?;
        Ok(())
    }
}

struct Builder {
    regions: Vec<Region>,
    intersections: Vec<Intersection>,
}

impl Builder {
    fn region(&mut self, tag: Tag, generators: Vec<GroupElement>, provenance: Provenance) -> usize {
        let id = self.regions.len();
        self.regions.push(Region { id, tag, generators, provenance });
        id
    }

    fn wall(
        &mut self,
        (a, b): (usize, usize),
        (chart_a, chart_b): (GroupElement, GroupElement),
        reductions: Vec<Reduction>,
        (wall_a, wall_b): (Vec<GroupElement>, Vec<GroupElement>),
        lattice: Lattice2,
    ) {
        let id = self.intersections.len();
        self.intersections.push(Intersection {
            id,
            a,
            b,
            chart_a,
            chart_b,
            reductions,
            wall_a,
            wall_b,
            lattice,
        });
    }

    /// A wall between two affine regions sharing coordinates, reduced to
    /// translations.
    fn flat_wall(&mut self, a: usize, b: usize, translations: Vec<GroupElement>, lattice: Lattice2) {
        let id = GroupElement::identity(Tag::Aff);
        let reductions = translations.iter().map(|t| Reduction { in_a: *t, in_b: *t }).collect();
        self.wall((a, b), (id, id), reductions, (translations.clone(), translations), lattice);
    }
}

fn aff_translations(l: &Lattice2) -> Vec<GroupElement> {
    l.translations(Tag::Aff).to_vec()
}

/// Assembles the structure described by a graph that passes `validate`.
pub fn build(g: &GeometryGraph) -> Result<LieGeneratedStructure> {
    let report = validate(g);
    if !report.passed() {
        let failed: Vec<String> =
            report.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        return Err(Error::Assembly(format!("graph does not validate: {}", failed.join("; "))));
    }

    let mut bld = Builder { regions: Vec::new(), intersections: Vec::new() };
    let mut cusp_ends = Vec::new();
    let mut klein_ends = Vec::new();
    // resolved end -> (region holding it, its normalized lattice)
    let mut ends: HashMap<Endpoint, (usize, Lattice2)> = HashMap::new();

    for (vi, v) in g.vertices.iter().enumerate() {
        match &v.kind {
            PieceKind::Elemental { tag, cusps, holonomy_generators } => {
                let mut gens: Vec<GroupElement> = cusps.iter().flat_map(|c| c.generators).collect();
                gens.extend(holonomy_generators.iter().copied());
                let piece = bld.region(*tag, gens, Provenance::Piece { vertex: v.id.clone() });
                for (ci, c) in cusps.iter().enumerate() {
                    let original = CuspSubgroup::new(c.generators[0], c.generators[1])?;
                    let end = attach_cylinder(&v.id, &c.id, &original, DEFAULT_COLLAR_HALFWIDTH)?;
                    let flat = aff_translations(&end.lattice);
                    let collar = bld.region(
                        Tag::Aff,
                        flat.clone(),
                        Provenance::Collar { vertex: v.id.clone(), cusp: c.id.clone() },
                    );
                    let reductions = end
                        .reduction_generators()
                        .into_iter()
                        .map(|(in_a, in_b)| Reduction { in_a, in_b })
                        .collect();
                    bld.wall(
                        (piece, collar),
                        (end.conjugator.inverse(), GroupElement::identity(Tag::Aff)),
                        reductions,
                        (c.generators.to_vec(), flat),
                        end.lattice,
                    );
                    ends.insert(Endpoint::Cusp { vertex: vi, cusp: ci }, (collar, end.lattice));
                    cusp_ends.push(CuspEnd { vertex: v.id.clone(), original, attachment: end });
                }
            }
            PieceKind::Klein { lattice, sigma, shift } => {
                let l = klein_lattice(lattice)?;
                let k = klein_end(&l, *sigma, *shift)?;
                let mut gens = aff_translations(&l);
                gens.push(k.involution.into());
                let region = bld.region(Tag::Aff, gens, Provenance::KleinEnd { vertex: v.id.clone() });
                ends.insert(Endpoint::Klein { vertex: vi }, (region, l));
                klein_ends.push((v.id.clone(), k));
            }
        }
    }

    let mut cylinders = Vec::new();
    for (i, e) in g.edges.iter().enumerate() {
        let lookup = |end| -> Result<(usize, Lattice2)> {
            let p = g.resolve(end).map_err(Error::Assembly)?;
            ends.get(&p).copied().ok_or_else(|| Error::Assembly(format!("end {end} has no region")))
        };
        let (ra, lat_a) = lookup(&e.end_a)?;
        let (rb, lat_b) = lookup(&e.end_b)?;
        let glue = build_affine_cylinder(&lat_a, &lat_b, e.class, e.slide, e.offset)?;
        for (which, expected, got) in
            [("left", &lat_a, &glue.lat_left), ("right", &lat_b, &glue.lat_right)]
        {
            let d = expected.max_abs_diff(got);
            if !(d <= HALF_EDGE_TOL) {
                return Err(Error::Assembly(format!(
                    "edge e{i}: {which} half-edge lattice differs from its end by {d}"
                )));
            }
        }

        let left = bld.region(Tag::Aff, glue.left.clone(), Provenance::Left { edge: i });
        let middle = bld.region(Tag::Aff, glue.middle.clone(), Provenance::Middle { edge: i });
        let right = bld.region(Tag::Aff, glue.right.clone(), Provenance::Right { edge: i });

        bld.flat_wall(ra, left, aff_translations(&lat_a), lat_a);
        bld.flat_wall(left, middle, aff_translations(&lat_a), lat_a);
        bld.flat_wall(middle, right, glue.right.clone(), lat_a);

        // the right end's own coordinates are the flip image of the left ones
        let unflip: GroupElement = glue.unflip().into();
        let flat_b = aff_translations(&lat_b);
        let reductions = flat_b.iter().map(|t| Reduction { in_a: *t, in_b: *t }).collect();
        bld.wall(
            (right, rb),
            (unflip, GroupElement::identity(Tag::Aff)),
            reductions,
            (glue.right.clone(), flat_b),
            lat_b,
        );
        cylinders.push(glue);
    }

    Ok(LieGeneratedStructure {
        regions: bld.regions,
        intersections: bld.intersections,
        base_region: 0,
        cusps: cusp_ends,
        cylinders,
        klein_ends,
        moduli_dimension: moduli_dimension(g),
    })
}
