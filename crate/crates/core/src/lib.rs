//! Parity game toolkit: game representation and PGSolver-format I/O,
//! preprocessors, four solver families behind one interface, an independent
//! solution verifier, seeded random game generators and benchmark scoring.

pub mod attractor;
pub mod bench;
pub mod game;
pub mod generate;
pub mod io;
pub mod oracle;
pub mod preprocess;
pub mod reindex;
pub mod scc;
pub mod solvers;
pub mod verify;

pub use game::{ParityGame, Player, Priority, Solution, Vertex, VertexSet};
pub use io::{parse_pgsolver, parse_solution, write_pgsolver, write_solution};
pub use solvers::{solve_pipeline, SolveOptions, SolverKind};
