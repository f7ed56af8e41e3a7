//! Random link diagrams built on rooted planar maps.
//!
//! The library has five layers:
//!
//! - [`cmap`]: combinatorial planar maps as dart permutations (rotation `nu`,
//!   edge involution `alpha`, a root dart), with faces, duality, medial maps,
//!   canonical forms, edge connectivity, and exhaustive enumeration.
//! - [`sampler`]: uniform random generation of rooted quadrangulations via
//!   labeled plane trees and the closure construction, 4-valent maps by
//!   duality, 3-edge-connected maps by rejection, and over/under crossing
//!   assignment.
//! - [`census`]: exact arbitrary-precision evaluation of the counting
//!   formulas for these map classes, root-face probabilities, tangle
//!   embedding probabilities, and hyperbolic volume bounds.
//! - [`diagram`]: link-diagram analysis on 4-valent shadows: face type
//!   vectors, bigons, twist number, components, classification and
//!   per-diagram volume bounds, plus PD-code import/export.
//! - [`tangle`]: tangle shadows as quadrangulations with a self-avoiding
//!   boundary face, root-embedding tests, rooting counts, and the library of
//!   small obstruction tangles.
//!
//! Monte Carlo harness pieces live in [`stats`] (moment summaries, chi-square
//! uniformity tests) and [`exec`] (data-parallel batch runners with a
//! sequential fallback when the `parallel` feature is disabled).

pub mod census;
pub mod cmap;
pub mod diagram;
pub mod error;
pub mod exec;
pub mod rng;
pub mod sampler;
pub mod stats;
pub mod tangle;

pub use cmap::{CanonicalForm, Dart, RootedMap};
pub use diagram::LinkDiagram;
pub use error::{Error, Result};
pub use rng::RandomStream;
pub use tangle::BoundedQuadrangulation;
