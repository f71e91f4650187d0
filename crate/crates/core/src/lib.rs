//! Vertex cover on blown-up hypergraphs.
//!
//! The crate implements LP rounding for covering the `(t-1)`-blow-up of a
//! `t`-uniform hypergraph (the algorithmic hypergraph Turán problem), the
//! brute-force oracles and constructions used to check it, and greedy set
//! cover on simple set systems. See the `examples/` directory for one runnable
//! program per capability.

pub mod cli;
pub mod error;
pub mod generators;
pub mod hypergraph;
pub mod io;
pub mod limits;
pub mod lp;
pub mod oracles;
pub mod rounding;
pub mod setcover;

pub use error::{Error, Result};
pub use hypergraph::{blow_up, BlowUp, Hypergraph, VertexSet};
pub use limits::Limits;
pub use lp::{LpMode, LpSolution, LpValue, Rational};
pub use setcover::{GreedyTrace, SetSystem};
