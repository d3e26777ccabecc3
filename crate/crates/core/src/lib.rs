//! State complexity of `L(A)^R L(B)` and `L(A)* L(B)` for DFAs `A`, `B`.
//!
//! Automata are built, composed, determinized and minimized; closed-form
//! worst cases are evaluated exactly and checked against the machines.

pub mod alphabet;
pub mod bounds;
pub mod cli;
pub mod dfa;
pub mod document;
pub mod error;
pub mod harness;
pub mod minimize;
pub mod nfa;
pub mod ops;
pub mod witness;

pub use alphabet::{Alphabet, Symbol, Word};
pub use bounds::BoundFamily;
pub use dfa::{Dfa, State};
pub use document::{emit_document, emit_dot, parse_document, Automaton};
pub use error::{Error, Result};
pub use nfa::{Nfa, SubsetMap};
pub use ops::{Method, OpKind, Operation};
pub use witness::WitnessFamily;
