//! The Fomin-Kirillov algebra: words in the generators `x_ij`, their
//! commutation classes, and the (quantum) Bruhat action on the Schubert
//! basis of `H*(Fl_n)`. Equalities in the algebra are always decided through
//! this action.

mod action;
mod element;
mod pieri;
mod quantum;
mod word;

pub use action::{
    apply_element, apply_word_to_basis, bruhat_apply, bruhat_step, json_int, Discrepancy, SchubertOperator, SchubertVector,
};
pub use element::FKElement;
pub use pieri::{
    dunkl_element, dunkl_symmetric_operator, dunkl_symmetric_operator_in, initial_segment, pieri_e_words,
    pieri_e_words_in, pieri_h_words, pieri_h_words_in, signed_word, Letters, PieriKind,
};
pub use quantum::{gw_invariants, gw_with, quantum_schubert_operator, QuantumOracle};
pub use word::{canonicalize, FKWord, Generator};
pub(crate) use word::parse_pairs;
