use std::collections::{BTreeMap, HashMap};

use crate::construction::{class_det, klein_end};
use crate::group_actions::{GroupElement, Tag};
use crate::lattices::{normalize, standard_form, CuspSubgroup, Lattice2};

use super::report::{Check, VerificationReport};

#[derive(Debug, Clone, PartialEq)]
pub struct CuspData {
    pub id: String,
    pub generators: [GroupElement; 2],
}

#[derive(Debug, Clone, PartialEq)]
pub enum PieceKind {
    Elemental {
        tag: Tag,
        cusps: Vec<CuspData>,
        holonomy_generators: Vec<GroupElement>,
    },
    Klein {
        lattice: Lattice2,
        sigma: [[i64; 2]; 2],
        shift: [f64; 2],
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct PieceDecoration {
    pub id: String,
    pub kind: PieceKind,
}

/// One end of an edge: a cusp of an elemental vertex, or a Klein vertex
/// (which has a single end and no cusp id).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeEnd {
    pub vertex: String,
    pub cusp: Option<String>,
}

impl std::fmt::Display for EdgeEnd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.cusp {
            Some(c) => write!(f, "{}.{c}", self.vertex),
            None => write!(f, "{}", self.vertex),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeData {
    pub end_a: EdgeEnd,
    pub end_b: EdgeEnd,
    pub class: [[i64; 2]; 2],
    pub slide: f64,
    pub offset: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct GeometryGraph {
    pub vertices: Vec<PieceDecoration>,
    pub edges: Vec<EdgeData>,
}

/// Where an edge end lands once resolved against the vertex list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Endpoint {
    Cusp { vertex: usize, cusp: usize },
    Klein { vertex: usize },
}

impl Endpoint {
    pub(crate) fn vertex(self) -> usize {
        match self {
            Endpoint::Cusp { vertex, .. } | Endpoint::Klein { vertex } => vertex,
        }
    }
}

impl GeometryGraph {
    pub(crate) fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub(crate) fn resolve(&self, end: &EdgeEnd) -> Result<Endpoint, String> {
        let v = self
            .vertex_index(&end.vertex)
            .ok_or_else(|| format!("unknown vertex '{}'", end.vertex))?;
        match (&self.vertices[v].kind, &end.cusp) {
            (PieceKind::Elemental { cusps, .. }, Some(c)) => cusps
                .iter()
                .position(|k| &k.id == c)
                .map(|cusp| Endpoint::Cusp { vertex: v, cusp })
                .ok_or_else(|| format!("vertex '{}' has no cusp '{c}'", end.vertex)),
            (PieceKind::Elemental { .. }, None) => {
                Err(format!("elemental vertex '{}' needs a cusp id", end.vertex))
            }
            (PieceKind::Klein { .. }, None) => Ok(Endpoint::Klein { vertex: v }),
            (PieceKind::Klein { .. }, Some(c)) => {
                Err(format!("Klein vertex '{}' has a single end, got cusp id '{c}'", end.vertex))
            }
        }
    }

    pub fn cusp_count(&self) -> usize {
        self.vertices
            .iter()
            .map(|v| match &v.kind {
                PieceKind::Elemental { cusps, .. } => cusps.len(),
                PieceKind::Klein { .. } => 0,
            })
            .sum()
    }

    pub fn klein_count(&self) -> usize {
        self.vertices.iter().filter(|v| matches!(v.kind, PieceKind::Klein { .. })).count()
    }

    pub fn elemental_count(&self) -> usize {
        self.vertices.len() - self.klein_count()
    }
}

/// Normalized Klein lattice, as used by the build.
pub(crate) fn klein_lattice(l: &Lattice2) -> crate::Result<Lattice2> {
    Ok(normalize(l, Tag::Aff)?.1)
}

fn find_root(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

pub fn validate(g: &GeometryGraph) -> VerificationReport {
    let mut checks = Vec::new();

    checks.push(Check::exact(
        "graph/nonempty",
        !g.vertices.is_empty(),
        format!("{} vertices, {} edges", g.vertices.len(), g.edges.len()),
    ));

    let mut seen: HashMap<&str, usize> = HashMap::new();
    for v in &g.vertices {
        *seen.entry(v.id.as_str()).or_default() += 1;
    }
    let dups: Vec<&str> = {
        let mut d: Vec<&str> = seen.iter().filter(|(_, n)| **n > 1).map(|(k, _)| *k).collect();
        d.sort_unstable();
        d
    };
    checks.push(Check::exact(
        "graph/unique_ids",
        dups.is_empty(),
        if dups.is_empty() { "vertex ids distinct".into() } else { format!("duplicate ids {dups:?}") },
    ));

    // endpoint resolution and per-end usage counts
    let mut uses: BTreeMap<(usize, Option<usize>), usize> = BTreeMap::new();
    let mut parent: Vec<usize> = (0..g.vertices.len()).collect();
    for (i, e) in g.edges.iter().enumerate() {
        let ends = [g.resolve(&e.end_a), g.resolve(&e.end_b)];
        let errors: Vec<String> = ends.iter().filter_map(|r| r.clone().err()).collect();
        checks.push(Check::exact(
            format!("edge/e{i}/endpoints"),
            errors.is_empty(),
            if errors.is_empty() {
                format!("{} -- {}", e.end_a, e.end_b)
            } else {
                errors.join("; ")
            },
        ));
        let det = class_det(&e.class);
        checks.push(Check::exact(
            format!("edge/e{i}/orientation"),
            det == -1,
            if det == -1 {
                "det(class) = -1".to_string()
            } else {
                format!(
                    "det(class) = {det}; the orientation convention requires det(class) = -1 \
                     because the collar identification reverses the cylinder direction"
                )
            },
        ));
        checks.push(Check::exact(
            format!("edge/e{i}/parameters"),
            e.slide.is_finite() && e.offset.iter().all(|x| x.is_finite()),
            format!("slide {}, offset {:?}", e.slide, e.offset),
        ));
        if let [Ok(a), Ok(b)] = ends {
            for p in [a, b] {
                let key = match p {
                    Endpoint::Cusp { vertex, cusp } => (vertex, Some(cusp)),
                    Endpoint::Klein { vertex } => (vertex, None),
                };
                *uses.entry(key).or_default() += 1;
            }
            let (ra, rb) = (find_root(&mut parent, a.vertex()), find_root(&mut parent, b.vertex()));
            parent[ra] = rb;
        }
    }

    if !g.vertices.is_empty() {
        let root = find_root(&mut parent, 0);
        let apart: Vec<&str> = (0..g.vertices.len())
            .filter(|&v| find_root(&mut parent, v) != root)
            .map(|v| g.vertices[v].id.as_str())
            .collect();
        checks.push(Check::exact(
            "graph/connected",
            apart.is_empty(),
            if apart.is_empty() {
                "single component".into()
            } else {
                format!("not reachable from '{}': {apart:?}", g.vertices[0].id)
            },
        ));
    }

    for (vi, v) in g.vertices.iter().enumerate() {
        match &v.kind {
            PieceKind::Elemental { tag, cusps, holonomy_generators } => {
                checks.push(Check::exact(
                    format!("vertex/{}/tag", v.id),
                    tag.is_hyperbolic_type(),
                    if tag.is_hyperbolic_type() {
                        format!("{tag}")
                    } else {
                        format!("{tag} is not one of H3, H2R, SL2T")
                    },
                ));
                let stray: Vec<String> = cusps
                    .iter()
                    .flat_map(|c| c.generators.iter())
                    .chain(holonomy_generators)
                    .filter(|x| x.tag() != *tag)
                    .map(|x| x.tag().to_string())
                    .collect();
                checks.push(Check::exact(
                    format!("vertex/{}/generator_tags", v.id),
                    stray.is_empty(),
                    if stray.is_empty() {
                        "all generators in the vertex group".into()
                    } else {
                        format!("generators tagged {stray:?} in a {tag} vertex")
                    },
                ));
                let mut cusp_ids: Vec<&str> = cusps.iter().map(|c| c.id.as_str()).collect();
                cusp_ids.sort_unstable();
                cusp_ids.dedup();
                checks.push(Check::exact(
                    format!("vertex/{}/unique_cusps", v.id),
                    cusp_ids.len() == cusps.len(),
                    format!("{} cusps", cusps.len()),
                ));
                for (ci, c) in cusps.iter().enumerate() {
                    let loc = format!("{}.{}", v.id, c.id);
                    let sf = CuspSubgroup::new(c.generators[0], c.generators[1])
                        .and_then(|cs| standard_form(&cs));
                    checks.push(Check::exact(
                        format!("cusp/{loc}/standard_form"),
                        sf.is_ok(),
                        match sf {
                            Ok((_, l)) => format!("lattice area {}", l.area()),
                            Err(e) => e.to_string(),
                        },
                    ));
                    let n = uses.get(&(vi, Some(ci))).copied().unwrap_or(0);
                    checks.push(Check::exact(
                        format!("cusp/{loc}/valence"),
                        n == 1,
                        match n {
                            0 => "unmatched cusp: no edge ends here".to_string(),
                            1 => "matched by one edge end".to_string(),
                            n => format!("matched by {n} edge ends"),
                        },
                    ));
                }
            }
            PieceKind::Klein { lattice, sigma, shift } => {
                let n = uses.get(&(vi, None)).copied().unwrap_or(0);
                checks.push(Check::exact(
                    format!("klein/{}/univalent", v.id),
                    n == 1,
                    format!("{n} edge ends"),
                ));
                let k = klein_lattice(lattice).and_then(|l| klein_end(&l, *sigma, *shift));
                checks.push(Check::exact(
                    format!("klein/{}/involution", v.id),
                    k.is_ok(),
                    match k {
                        Ok(_) => "fixed point free, orientation preserving, flips ends".into(),
                        Err(e) => e.to_string(),
                    },
                ));
            }
        }
    }

    VerificationReport::new(checks, Vec::new())
}

/// Continuous parameters of the construction: slide and offset per edge.
pub fn moduli_dimension(g: &GeometryGraph) -> usize {
    3 * g.edges.len()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModuliEntry {
    pub edge: String,
    pub ends: String,
    pub slide: f64,
    pub offset: [f64; 2],
}

pub fn moduli_parameters(g: &GeometryGraph) -> Vec<ModuliEntry> {
    g.edges
        .iter()
        .enumerate()
        .map(|(i, e)| ModuliEntry {
            edge: format!("e{i}"),
            ends: format!("{} -- {}", e.end_a, e.end_b),
            slide: e.slide,
            offset: e.offset,
        })
        .collect()
}
