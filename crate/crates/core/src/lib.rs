//! Lie generated geometries on compound prime 3-manifolds.
//!
//! Four Lie groups act on upper half space `U`: PSL(2,ℂ), the affine group
//! `[A]` transported by `exp`, PSL(2,ℝ) × ℝ, and a ℤ cover of
//! PSL(2,ℝ) × SO(2). Elemental pieces carry one of the hyperbolic-type
//! structures; their cusps are put in standard form as lattices of horizontal
//! translations, which every group shares. Torus walls are crossed by flat
//! cylinders, edges by affine cylinders with a flip, and Klein-bottle ends by
//! a fixed point free affine involution. The result is a finite record of
//! regions, binary overlaps and reduction generators that can be verified,
//! and along which germs of charts can be continued to compute holonomy.

pub mod assembly;
pub mod cli;
pub mod construction;
pub mod developing;
pub mod error;
pub mod group_actions;
pub mod lattices;
pub mod model_space;
pub mod sampling;

pub use error::{Error, Result};
pub use group_actions::{GroupElement, Tag};
pub use model_space::{EPoint, UPoint};
