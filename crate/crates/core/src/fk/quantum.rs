use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Signed;

use super::action::{SchubertOperator, SchubertVector};
use super::pieri::{dunkl_symmetric_operator, initial_segment, PieriKind};
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::poly::{expand_in_e_basis, schubert_poly, EBasisKey, Exponent, QCoeff};

/// Multiplication by Schubert classes in `QH*(Fl_n)` (or `H*` with the
/// classical flag), through the e-basis expansion of `S_w` and the Pieri
/// words for `E_i(theta_1..theta_j)`.
pub struct QuantumOracle {
    n: usize,
    quantum: bool,
    factors: HashMap<(usize, usize), SchubertOperator>,
}

impl QuantumOracle {
    pub fn new(n: usize, quantum: bool) -> Self {
        let mut factors = HashMap::new();
        for j in 1..n {
            for i in 1..=j {
                let el = dunkl_symmetric_operator(PieriKind::E, i, &initial_segment(j), n);
                factors.insert((i, j), SchubertOperator::from_element(&el, n, quantum));
            }
        }
        QuantumOracle { n, quantum, factors }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_quantum(&self) -> bool {
        self.quantum
    }

    /// `E_i(theta_1..theta_j)` as an operator.
    pub fn factor(&self, i: usize, j: usize) -> Option<&SchubertOperator> {
        self.factors.get(&(i, j))
    }

    fn apply_key(&self, key: &EBasisKey, v: &SchubertVector) -> SchubertVector {
        let mut cur = v.clone();
        for (idx, &i) in key.0.iter().enumerate() {
            if i > 0 {
                cur = self.factors[&(i, idx + 1)].apply(&cur);
                if cur.is_zero() {
                    break;
                }
            }
        }
        cur
    }

    /// Operator of multiplication by `sigma_w`.
    pub fn operator(&self, w: &Permutation) -> Result<SchubertOperator> {
        if w.n() != self.n {
            return Err(Error::InvalidPermutation(format!("{w} is not in S_{}", self.n)));
        }
        let alpha = expand_in_e_basis(&schubert_poly(w), self.n)?;
        Ok(SchubertOperator::from_columns(self.n, |v| {
            let basis = SchubertVector::basis(v);
            let mut out = SchubertVector::zero();
            for (key, c) in &alpha {
                out.add_assign_scaled(&self.apply_key(key, &basis), &QCoeff::from_int(c.clone()));
            }
            out
        }))
    }
}

/// The operator of quantum multiplication by `sigma_w` on `QH*(Fl_n)`.
pub fn quantum_schubert_operator(w: &Permutation, n: usize) -> Result<SchubertOperator> {
    QuantumOracle::new(n, true).operator(w)
}

/// Three-point Gromov-Witten invariants: coefficients of
/// `sigma_u * sigma_v` split by output permutation and `q`-degree.
pub fn gw_invariants(u: &Permutation, v: &Permutation, n: usize) -> Result<BTreeMap<(Permutation, Exponent), BigInt>> {
    gw_with(&QuantumOracle::new(n, true), u, v)
}

pub fn gw_with(oracle: &QuantumOracle, u: &Permutation, v: &Permutation) -> Result<BTreeMap<(Permutation, Exponent), BigInt>> {
    let op = oracle.operator(u)?;
    let out = op.apply(&SchubertVector::basis(v)).flatten();
    assert!(out.values().all(|c| !c.is_negative()), "negative Gromov-Witten invariant in {u} * {v}");
    Ok(out)
}
