//! Schubert calculus on the flag variety through Dunkl elements of the
//! Fomin-Kirillov algebra.
//!
//! Commutative side: Schubert, Schur and elementary polynomials with the
//! Littlewood-Richardson oracle ([`poly`]). Noncommutative side: words in the
//! generators `x_ij`, their commutation classes and the (quantum) Bruhat
//! action on the Schubert basis ([`fk`]). The explicit nonnegative expansions
//! for hooks, rectangles and the 2x2 box live in [`forest`], and [`verify`]
//! pairs each of them with an independent oracle.

pub mod combinatorics;
pub mod error;
pub mod fk;
pub mod forest;
pub mod poly;
pub mod verify;

pub use combinatorics::{HookShape, Partition, Permutation};
pub use error::{Error, Result};
pub use forest::Diagram;
pub use fk::{FKElement, FKWord, Generator, SchubertOperator, SchubertVector};
pub use poly::{Poly, QCoeff};
