//! Cayley graphs of Rubik's Cube groups under several turn metrics, their
//! local parameters and distance arrays, and closed-form diameter bounds
//! for symmetric graphs.

pub mod bounds;
pub mod cube;
pub mod error;
pub mod gpg;
pub mod graph;

pub use error::{Error, Result};
