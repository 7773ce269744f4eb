use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::combinatorics::Permutation;
use crate::fk::{FKElement, QuantumOracle, SchubertOperator, SchubertVector};
use crate::poly::{cohomology_product, QCoeff};

/// Multiplication operators by `sigma_w` on the Schubert basis of `S_n`,
/// classically from Schubert polynomial products and quantumly from the
/// e-basis oracle. Operators are cached per `w`.
pub struct Oracles {
    n: usize,
    quantum: QuantumOracle,
    classical_cache: Mutex<HashMap<Permutation, Arc<SchubertOperator>>>,
    quantum_cache: Mutex<HashMap<Permutation, Arc<SchubertOperator>>>,
}

impl Oracles {
    pub fn new(n: usize) -> Self {
        Oracles {
            n,
            quantum: QuantumOracle::new(n, true),
            classical_cache: Mutex::new(HashMap::new()),
            quantum_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classical(&self, w: &Permutation) -> Arc<SchubertOperator> {
        if let Some(op) = self.classical_cache.lock().unwrap().get(w) {
            return op.clone();
        }
        let n = self.n;
        let op = Arc::new(SchubertOperator::from_columns(n, |v| {
            let mut out = SchubertVector::zero();
            for (u, c) in cohomology_product(w, v, n) {
                out.add_term(u, &QCoeff::from_int(c));
            }
            out
        }));
        self.classical_cache.lock().unwrap().insert(w.clone(), op.clone());
        op
    }

    pub fn quantum(&self, w: &Permutation) -> Arc<SchubertOperator> {
        if let Some(op) = self.quantum_cache.lock().unwrap().get(w) {
            return op.clone();
        }
        let op = Arc::new(self.quantum.operator(w).expect("w lies in S_n"));
        self.quantum_cache.lock().unwrap().insert(w.clone(), op.clone());
        op
    }
}

fn negative_entry(op: &SchubertOperator) -> Option<String> {
    op.columns()
        .find(|(_, col)| !col.is_nonnegative())
        .map(|(v, col)| format!("negative coefficient in image of s[{v}]: {col}"))
}

/// Compares the classical and quantum actions of `el` with multiplication
/// by `sigma_w`, and checks that every coefficient involved is
/// nonnegative.
pub fn compare_element(el: &FKElement, w: &Permutation, oracles: &Oracles) -> Option<String> {
    if !el.is_nonnegative() {
        return Some("expansion has a negative coefficient".into());
    }
    compare_operator_classical(&SchubertOperator::from_element(el, oracles.n(), false), w, oracles)
        .or_else(|| compare_operator_quantum(&SchubertOperator::from_element(el, oracles.n(), true), w, oracles))
}

pub fn compare_operator_classical(op: &SchubertOperator, w: &Permutation, oracles: &Oracles) -> Option<String> {
    let expected = oracles.classical(w);
    if let Some(bad) = negative_entry(&expected) {
        return Some(format!("classical oracle for s[{w}]: {bad}"));
    }
    op.first_difference(&expected).map(|d| format!("classical, w={w}: {d}"))
}

pub fn compare_operator_quantum(op: &SchubertOperator, w: &Permutation, oracles: &Oracles) -> Option<String> {
    let expected = oracles.quantum(w);
    if let Some(bad) = negative_entry(&expected) {
        return Some(format!("quantum oracle for s[{w}]: {bad}"));
    }
    op.first_difference(&expected).map(|d| format!("quantum, w={w}: {d}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fk::dunkl_element;

    #[test]
    fn monk_through_both_oracles() {
        let oracles = Oracles::new(3);
        let s1: Permutation = "2 1 3".parse().unwrap();
        assert_eq!(compare_element(&dunkl_element(1, 3), &s1, &oracles), None);
        assert!(compare_element(&dunkl_element(2, 3), &s1, &oracles).is_some());
    }

    #[test]
    fn classical_and_quantum_oracles_share_the_classical_part() {
        let oracles = Oracles::new(4);
        for w in crate::combinatorics::enumerate_sn(4).iter().step_by(5) {
            assert_eq!(oracles.quantum(w).classical_part(), *oracles.classical(w));
        }
    }
}
