//! Finite-automaton algebra for measuring the exact state complexity of
//! regular-language operations on universal witness languages.
//!
//! The crate is layered bottom-up:
//!
//! - [`automaton`]: complete DFAs, epsilon-free NFAs, reversal and the subset
//!   construction;
//! - [`minimize`]: Hopcroft and Brzozowski minimization, isomorphism and
//!   language equivalence;
//! - [`ops`]: boolean products, concatenation and star;
//! - [`witness`]: the `U_n` / `V_n` witness families;
//! - [`complexity`]: the bound catalogue and the verification harness.

pub mod automaton;
pub mod complexity;
pub mod dot;
pub mod error;
pub mod json;
pub mod minimize;
pub mod ops;
pub mod witness;

pub use automaton::{
    alphabet, complement, determinize, determinize_with_cap, make_dfa, reverse, Automaton,
    Determinized, Dfa, Letter, Nfa, StateSet, Word,
};
pub use error::{Error, Result};
pub use minimize::{are_equivalent, are_isomorphic, minimize_brzozowski, minimize_refine};
pub use ops::{boolean_product, concatenate, concatenate_nfa, star, BoolOp, Product};
pub use witness::{build_witness, permute_letters, transition_monoid_size, WitnessSpec};
