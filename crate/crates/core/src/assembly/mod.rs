//! Decorated graphs, their validation, and assembly of the full structure:
//! one region per piece, collar, edge third and Klein end, glued along binary
//! overlaps that carry a common reduction group.

mod build;
mod graph;
mod report;
mod verify;

pub use build::{
    build, CuspEnd, Intersection, LieGeneratedStructure, Provenance, Reduction, Region,
};
pub use graph::{
    moduli_dimension, moduli_parameters, validate, CuspData, EdgeData, EdgeEnd, GeometryGraph,
    ModuliEntry, PieceDecoration, PieceKind,
};
pub use report::{Check, Status, VerificationReport};
pub use verify::{verify, MINIMALITY_NOTE, MODULI_NOTE};

#[cfg(test)]
mod tests;
