//! Spectral radius versus degree deviation.
//!
//! For a graph with `n` vertices, `m` edges and degree deviation
//! `s = sum_v |d(v) - 2m/n|`, the spectral radius satisfies
//! `rho - 2m/n <= sqrt(s/2)`. This crate computes every quantity in that
//! statement exactly or with certified enclosures, reproduces the row-sum
//! certificate behind it, and checks it over exhaustive and random corpora.
//!
//! * [`graph`]: graphs, degree statistics, generators, blow-ups, graph6.
//! * [`spectral`]: certified `rho` intervals and polynomial row sums.
//! * [`bounds`]: the bound chain and per-graph [`bounds::BoundReport`].
//! * [`verify`]: corpus harnesses and the star tightness sweep.

pub mod bounds;
pub mod error;
pub mod exact;
pub mod graph;
pub mod par;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use exact::ExactRational;
pub use graph::{degree_stats, generate, DegreeStats, Family, Graph};
pub use spectral::{certified_interval, Polynomial, SpectralInterval};
