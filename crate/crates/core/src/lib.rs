//! Planar Turán numbers of cycles, theta graphs and their pendant variants:
//! graph constructions, exact containment detectors, exact-rational bounds
//! and an exhaustive search for small orders.

pub mod bounds;
pub mod constructions;
pub mod detectors;
pub mod graph;
pub mod io;
pub mod planarity;
pub mod search;

pub use detectors::{FamilyKind, ForbiddenFamily};
pub use graph::Graph;
