//! Adjacency labels from neighbourhood set systems: low-crossing spanning
//! paths give vertex orderings of small contiguity, which give interval
//! labels; bounded-degeneracy graphs get back-neighbour labels instead.

pub mod cli;
pub mod contiguity;
pub mod crossing;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod labeling;
pub mod rng;
pub mod set_system;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexOrdering};
pub use set_system::SetSystem;
