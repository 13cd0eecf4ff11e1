//! Exact densities, minor-balance checks and critical-density catalogues
//! for minor-closed graph classes.

pub mod canon;
pub mod catalog;
pub mod error;
pub mod export;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod minor;
pub mod oracle;
pub mod plants;
pub mod rational;
pub mod searchlab;
pub mod verify;

pub use canon::{canonical_form, CanonicalCode};
pub use error::{Error, Result};
pub use graph::{density, t_density, Graph};
pub use graph6::{emit_graph6, parse_graph6};
pub use rational::Rational;
