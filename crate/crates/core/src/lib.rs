//! Spectral invariants of simple graphs: positive and negative square
//! energies, inertia, graph energy, the bounds that relate them, twin
//! quotients, and an exhaustive search for small counterexamples to
//! `min(s-, s+) >= n - kappa`.

pub mod bounds;
pub mod canonical;
pub mod chromatic;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod linalg;
pub mod search;
pub mod spectral;
pub mod tolerance;

pub use error::{Error, Result};
pub use graph::{Graph, Row};
pub use spectral::{summarize, Inertia, SpectralSummary};
pub use tolerance::Tolerances;
