//! Diagrams in the `k x (n-k)` rectangle, forest labelings and the explicit
//! expansions of Schur polynomials in the theta variables.

mod diagram;
mod hook;
mod labeling;
mod ledger;
mod rectangle;
mod two_by_two;

pub use diagram::{enumerate_forests, Diagram};
pub use hook::{hook_coefficient, hook_expansion, hook_expansion_forest};
pub use labeling::{hook_label_classes, hook_label_classes_shifted, split_label_classes, LabelClass};
pub use ledger::{
    hook_plus_box_base, hook_plus_box_ledger, hook_plus_box_net, hook_plus_box_shape, hook_plus_box_terms,
    is_forest_class, HookPlusBoxTerms, Ledger, LedgerEntry,
};
pub use rectangle::{rectangle_expansion, rectangle_power, Rectangle};
pub use two_by_two::{four_letter_classes, two_by_two_coefficient, two_by_two_expansion};
