//! Bipartite Ramsey numbers of even cycles.
//!
//! Red/blue colorings of complete bipartite graphs, exact even-cycle search,
//! the extremal lower-bound colorings, desk-scale verification of small
//! values of `br(C_2n, C_2m)` and executable checkers for the structural
//! lemmas used in the upper-bound argument.

pub mod bits;
pub mod canon;
pub mod certificate;
pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod lemmas;
pub mod verify;
pub mod witness;

pub use coloring::{color_view, parse_coloring, serialize_coloring, Color, ColorView, Coloring};
pub use error::{Error, Result};
pub use graph::{BiGraph, Side, Vertex};
pub use witness::{validate_cycle_witness, BicliqueWitness, CycleWitness, WitnessViolation};
