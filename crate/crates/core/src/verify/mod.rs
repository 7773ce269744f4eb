//! Theorem checkers. Each one compares an expansion built from forest
//! combinatorics with an oracle that never touches it: Schubert polynomial
//! products for `H*(Fl_n)` and the e-basis Pieri oracle for `QH*(Fl_n)`.

mod identities;
mod oracle;
mod relations;
mod report;
mod suite;
mod theorems;

pub use identities::{check_class_lemma, check_grassmannian_schur, check_pieri_identity, check_positivity};
pub use oracle::{compare_element, compare_operator_classical, compare_operator_quantum, Oracles};
pub use relations::{check_dunkl_commutativity, check_kill_induced, check_relation_suite, check_vanishing};
pub use report::CheckReport;
pub use suite::{hook_plus_box_instances, run_suite, SUITES};
pub use theorems::{
    check_hook_element, check_hook_plus_box, check_hook_plus_box_with, check_hook_theorem, check_hook_theorem_with,
    check_mutation_guard, check_rectangles, check_rectangles_with, check_two_by_two, check_two_by_two_with,
    hook_plus_box_operator_discrepancy, silent_mutations,
};
