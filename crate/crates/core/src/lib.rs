//! Spectral Nordhaus–Gaddum toolkit: graphs, adjacency spectra, the
//! `A_k` constructions, inequality checkers and extremal search.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod limits;
pub mod output;
pub mod search;
pub mod spectra;

pub use bounds::{run_battery, BoundId, BoundReport, SpectralPair};
pub use error::{Error, Result};
pub use graph::{generate, Graph, GraphKind};
pub use limits::{max_order, set_max_order, DEFAULT_MAX_ORDER, DEFAULT_TOL};
pub use output::Format;
pub use search::{ExtremalRecord, Family, LocalSearchConfig, Method};
pub use spectra::{adjacency_spectrum, Spectrum, SymMatrix};
