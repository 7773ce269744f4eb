//! Exact commutative polynomial arithmetic and the classical oracles:
//! Schubert and Schur polynomials, Schubert-basis and e-basis expansions.

mod ebasis;
mod qcoeff;
mod schubert;
mod sparse;
mod symmetric;

pub use ebasis::{ebasis_keys, expand_in_e_basis, EBasisKey};
pub use qcoeff::{q_monomial_text, QCoeff};
pub use schubert::{
    cohomology_product, expand_in_schubert_basis, lr_coefficients, schubert_poly, schubert_poly_via,
    schubert_stable, staircase, ReducedWord,
};
pub use sparse::{monomial_text, trim as trim_exponent, Exponent, Poly};
pub use symmetric::{
    determinant, elementary, homogeneous, jacobi_trudi_matrix, schur_dual_jacobi_trudi, schur_jacobi_trudi, Ring,
};
