//! Scene files: JSON, version 1, unknown keys rejected.
//!
//! Complex numbers are `[re, im]`, matrices nested row arrays. Edge ends are
//! `"vertex.cusp"` for elemental vertices and a bare `"vertex"` for Klein
//! ones. Emission is canonical: parse then emit is a fixed point.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::assembly::{CuspData, EdgeData, EdgeEnd, GeometryGraph, PieceDecoration, PieceKind};
use crate::group_actions::{AffineA, FiberedIsom, GroupElement, IsomH2R, MoebiusC, Sl2R, Tag};
use crate::lattices::Lattice2;

pub const SCENE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    pub version: u32,
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<EdgeSpec>,
    /// Reduction generators to perturb after building (fault injection).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub faults: Vec<FaultSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum VertexSpec {
    Elemental {
        id: String,
        tag: Tag,
        cusps: Vec<CuspSpec>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        holonomy_generators: Vec<GeneratorSpec>,
    },
    Klein {
        id: String,
        /// Rows are the basis vectors.
        lattice: [[f64; 2]; 2],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sigma: Option<[[i64; 2]; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        shift: Option<[f64; 2]>,
    },
}

impl VertexSpec {
    pub fn id(&self) -> &str {
        match self {
            VertexSpec::Elemental { id, .. } | VertexSpec::Klein { id, .. } => id,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CuspSpec {
    pub id: String,
    pub generators: [GeneratorSpec; 2],
}

fn is_zero(k: &i64) -> bool {
    *k == 0
}

/// One group element; the shape selects the group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    /// `[a, b, c, d]`, each `[re, im]`.
    H3([[f64; 2]; 4]),
    H2R(H2RSpec),
    Sl2T(Sl2TSpec),
    Aff(AffSpec),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct H2RSpec {
    pub m: [[f64; 2]; 2],
    pub s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sl2TSpec {
    pub m: [[f64; 2]; 2],
    #[serde(default, skip_serializing_if = "is_zero")]
    pub k: i64,
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffSpec {
    pub linear: [[f64; 2]; 2],
    pub eps: i8,
    pub b: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub from: String,
    pub to: String,
    pub class: [[i64; 2]; 2],
    pub slide: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset: Option<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaultSpec {
    pub wall: usize,
    pub generator: usize,
    pub delta: f64,
}

pub fn parse_scene(text: &str) -> Result<SceneFile, String> {
    let scene: SceneFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if scene.version != SCENE_VERSION {
        return Err(format!("unsupported scene version {} (expected {SCENE_VERSION})", scene.version));
    }
    Ok(scene)
}

pub fn emit_scene(scene: &SceneFile) -> String {
    let mut s = serde_json::to_string_pretty(scene).expect("scene values are always serializable");
    s.push('\n');
    s
}

impl GeneratorSpec {
    pub fn to_element(&self) -> crate::Result<GroupElement> {
        let c = |p: [f64; 2]| Complex64::new(p[0], p[1]);
        Ok(match self {
            GeneratorSpec::H3([a, b, cc, d]) => MoebiusC::new(c(*a), c(*b), c(*cc), c(*d))?.into(),
            GeneratorSpec::H2R(g) => IsomH2R::new(Sl2R::new(g.m)?, g.s).into(),
            GeneratorSpec::Sl2T(g) => FiberedIsom::new(Sl2R::new(g.m)?, g.k, g.theta).into(),
            GeneratorSpec::Aff(g) => AffineA::new(g.linear, g.eps, g.b)?.into(),
        })
    }
}

fn split_ref(r: &str) -> EdgeEnd {
    match r.split_once('.') {
        Some((v, c)) => EdgeEnd { vertex: v.to_string(), cusp: Some(c.to_string()) },
        None => EdgeEnd { vertex: r.to_string(), cusp: None },
    }
}

/// Builds the graph, checking numeric well-formedness and that every edge
/// reference names an existing vertex end.
pub fn scene_to_graph(scene: &SceneFile) -> Result<GeometryGraph, String> {
    let mut vertices = Vec::with_capacity(scene.vertices.len());
    for v in &scene.vertices {
        let kind = match v {
            VertexSpec::Elemental { id, tag, cusps, holonomy_generators } => {
                let mut out = Vec::with_capacity(cusps.len());
                for cusp in cusps {
                    let [g1, g2] = &cusp.generators;
                    let conv = |g: &GeneratorSpec, i: usize| {
                        g.to_element()
                            .map_err(|e| format!("vertex {id} cusp {} generator {i}: {e}", cusp.id))
                    };
                    out.push(CuspData { id: cusp.id.clone(), generators: [conv(g1, 0)?, conv(g2, 1)?] });
                }
                let holonomy_generators = holonomy_generators
                    .iter()
                    .enumerate()
                    .map(|(i, g)| {
                        g.to_element().map_err(|e| format!("vertex {id} holonomy generator {i}: {e}"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                PieceKind::Elemental { tag: *tag, cusps: out, holonomy_generators }
            }
            VertexSpec::Klein { id, lattice, sigma, shift } => PieceKind::Klein {
                lattice: Lattice2::new(lattice[0], lattice[1])
                    .map_err(|e| format!("vertex {id} lattice: {e}"))?,
                sigma: sigma.unwrap_or(crate::construction::DEFAULT_KLEIN_SIGMA),
                shift: shift.unwrap_or(crate::construction::DEFAULT_KLEIN_SHIFT),
            },
        };
        vertices.push(PieceDecoration { id: v.id().to_string(), kind });
    }

    let mut edges = Vec::with_capacity(scene.edges.len());
    for e in &scene.edges {
        let (end_a, end_b) = (split_ref(&e.from), split_ref(&e.to));
        edges.push(EdgeData {
            end_a,
            end_b,
            class: e.class,
            slide: e.slide,
            offset: e.offset.unwrap_or([0.0, 0.0]),
        });
    }
    let graph = GeometryGraph { vertices, edges };
    for (i, e) in graph.edges.iter().enumerate() {
        for end in [&e.end_a, &e.end_b] {
            graph.resolve(end).map_err(|m| format!("edge {i}: {m}"))?;
        }
    }
    Ok(graph)
}
