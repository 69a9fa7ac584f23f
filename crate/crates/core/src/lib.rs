//! Even-cycle-free bipartite incidence graphs built from lines in F_q^k
//! whose directions lie on the moment curve, with exhaustive checkers for
//! their cycle structure and a search harness for C4-free line families in
//! F_q^4.

mod elim;
pub mod error;
pub mod gf;
pub mod graph;
pub mod lines4;
pub mod moment;
pub mod oracle;
pub mod verify;

pub mod cli;

pub use error::{Error, Result};
pub use gf::{make_field, Fe, FieldSpec};
pub use graph::{build, BiGraph, CycleWitness};
pub use moment::{MomentLine, Point};
