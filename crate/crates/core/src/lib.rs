//! Exact algorithms for image-binary weighted automata over finite and infinite words.
//!
//! Weighted automata are evaluated over exact fields (arbitrary-precision
//! rationals and GF(2)). On top of the core operations (evaluation,
//! equivalence, minimization) the crate provides image-binary finite automata
//! with their boolean operations and DFA extraction, mod-2 multiplicity
//! automata and shift-register languages, Büchi automata with the
//! disambiguation of k-ambiguous automata into image-binary ones, and exact
//! model checking of image-binary Büchi automata against Markov chains.

pub mod alphabet;
pub mod automaton;
pub mod buchi;
pub mod equiv;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod graph;
pub mod ifa;
pub mod matrix;
pub mod mc;
pub mod mod2;
pub mod samples;

pub use alphabet::{Alphabet, Letter, Word};
pub use automaton::{check_forward_conjugate, WeightedAutomaton};
pub use buchi::{iba_lasso_eval, kdis, Iba, Lasso, Nba};
pub use equiv::{distinguishing_word, equivalent, minimize};
pub use error::{Error, Result};
pub use field::{Field, FieldKind, Gf2, Rational};
pub use ifa::{Dfa, Ifa, Nfa};
pub use matrix::Matrix;
pub use mc::{model_check, MarkovChain};
pub use mod2::Mod2Ma;
