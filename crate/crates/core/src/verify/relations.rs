use std::collections::HashMap;

use itertools::Itertools;
use serde_json::json;

use super::oracle::{compare_operator_classical, compare_operator_quantum, Oracles};
use super::report::CheckReport;
use crate::combinatorics::{enumerate_partitions_in_box, Partition, Permutation};
use crate::fk::{
    dunkl_element, dunkl_symmetric_operator, dunkl_symmetric_operator_in, initial_segment, FKElement, FKWord,
    Generator, PieriKind, SchubertOperator,
};
use crate::poly::{determinant, jacobi_trudi_matrix, QCoeff};

struct Generators {
    n: usize,
    quantum: bool,
    ops: HashMap<(usize, usize), SchubertOperator>,
}

impl Generators {
    fn new(n: usize, quantum: bool) -> Self {
        let ops = (1..=n)
            .tuple_combinations()
            .map(|(i, j)| {
                let el = FKElement::from_word(&FKWord::new(vec![Generator::new_unchecked(i, j)]), 1);
                ((i, j), SchubertOperator::from_element(&el, n, quantum))
            })
            .collect();
        Generators { n, quantum, ops }
    }

    fn x(&self, i: usize, j: usize) -> &SchubertOperator {
        &self.ops[&(i, j)]
    }

    /// `x_ab x_cd` as an operator: `x_ab` acts first.
    fn word(&self, letters: &[(usize, usize)]) -> SchubertOperator {
        letters.iter().fold(SchubertOperator::identity(self.n), |acc, &(i, j)| acc.then(self.x(i, j)))
    }

    fn label(&self) -> &'static str {
        if self.quantum {
            "quantum"
        } else {
            "classical"
        }
    }

    fn relations(&self) -> Option<String> {
        let n = self.n;
        let zero = SchubertOperator::zero(n);
        for (i, j) in (1..=n).tuple_combinations() {
            let square = self.word(&[(i, j), (i, j)]);
            let expected = if self.quantum && j == i + 1 {
                SchubertOperator::identity(n).scale(&QCoeff::q_range(i, j))
            } else {
                zero.clone()
            };
            if let Some(d) = square.first_difference(&expected) {
                return Some(format!("{}: x_({i},{j})^2: {d}", self.label()));
            }
        }
        for (i, j, k) in (1..=n).tuple_combinations() {
            let lhs = self.word(&[(i, j), (j, k)]);
            let rhs = self.word(&[(i, k), (i, j)]).plus(&self.word(&[(j, k), (i, k)]));
            if let Some(d) = lhs.first_difference(&rhs) {
                return Some(format!("{}: x_({i},{j}) x_({j},{k}) relation: {d}", self.label()));
            }
            let lhs = self.word(&[(j, k), (i, j)]);
            let rhs = self.word(&[(i, j), (i, k)]).plus(&self.word(&[(i, k), (j, k)]));
            if let Some(d) = lhs.first_difference(&rhs) {
                return Some(format!("{}: x_({j},{k}) x_({i},{j}) relation: {d}", self.label()));
            }
        }
        let pairs: Vec<(usize, usize)> = (1..=n).tuple_combinations().collect();
        for (&(i, j), &(k, l)) in pairs.iter().tuple_combinations() {
            if [i, j].iter().any(|x| *x == k || *x == l) {
                continue;
            }
            if let Some(d) = self.word(&[(i, j), (k, l)]).first_difference(&self.word(&[(k, l), (i, j)])) {
                return Some(format!("{}: x_({i},{j}) and x_({k},{l}) do not commute: {d}", self.label()));
            }
        }
        None
    }
}

fn dunkl_commutativity(n: usize, quantum: bool) -> Option<String> {
    let thetas: Vec<SchubertOperator> =
        (1..=n).map(|i| SchubertOperator::from_element(&dunkl_element(i, n), n, quantum)).collect();
    for (i, j) in (0..n).tuple_combinations() {
        if let Some(d) = thetas[i].then(&thetas[j]).first_difference(&thetas[j].then(&thetas[i])) {
            let flag = if quantum { "quantum" } else { "classical" };
            return Some(format!("{flag}: theta_{} and theta_{} do not commute: {d}", i + 1, j + 1));
        }
    }
    None
}

/// `e_1(theta_1..theta_k)` multiplies by `sigma_(s_k)`.
fn monk(oracles: &Oracles) -> Option<String> {
    let n = oracles.n();
    for k in 1..n {
        let el = dunkl_symmetric_operator(PieriKind::E, 1, &initial_segment(k), n);
        let sk = Permutation::identity(n).swap(k, k + 1);
        let found = compare_operator_classical(&SchubertOperator::from_element(&el, n, false), &sk, oracles)
            .or_else(|| compare_operator_quantum(&SchubertOperator::from_element(&el, n, true), &sk, oracles));
        if let Some(d) = found {
            return Some(format!("Monk at k={k}: {d}"));
        }
    }
    None
}

/// Generator relations, Dunkl commutativity and Monk's rule in `E_n`,
/// classically and quantumly.
pub fn check_relation_suite(n: usize) -> CheckReport {
    CheckReport::run("relations", json!({"n": n}), || {
        [false, true]
            .into_iter()
            .find_map(|quantum| Generators::new(n, quantum).relations().or_else(|| dunkl_commutativity(n, quantum)))
            .or_else(|| monk(&Oracles::new(n)))
    })
}

pub fn check_dunkl_commutativity(n: usize) -> CheckReport {
    CheckReport::run("dunkl-commutativity", json!({"n": n}), || {
        dunkl_commutativity(n, false).or_else(|| dunkl_commutativity(n, true))
    })
}

/// Classical operators of `e_m` and `h_m` in `theta_i, i in set`, inside the
/// subalgebra on `set` and `rest`.
struct SymmetricOperators<'a> {
    n: usize,
    set: &'a [usize],
    rest: &'a [usize],
    cache: HashMap<(bool, usize), SchubertOperator>,
}

impl<'a> SymmetricOperators<'a> {
    fn new(n: usize, set: &'a [usize], rest: &'a [usize]) -> Self {
        SymmetricOperators { n, set, rest, cache: HashMap::new() }
    }

    fn get(&mut self, elementary: bool, m: usize) -> SchubertOperator {
        let (n, set, rest) = (self.n, self.set, self.rest);
        self.cache
            .entry((elementary, m))
            .or_insert_with(|| {
                let kind = if elementary { PieriKind::E } else { PieriKind::H };
                SchubertOperator::from_element(&dunkl_symmetric_operator_in(kind, m, set, rest), n, false)
            })
            .clone()
    }

    /// `s_lambda` by Jacobi-Trudi in `h`, or in `e` through the conjugate
    /// when that matrix is smaller.
    fn schur(&mut self, lambda: &Partition) -> SchubertOperator {
        let n = self.n;
        let (elementary, shape) =
            if lambda.len() <= lambda.part(1) { (false, lambda.clone()) } else { (true, lambda.conjugate()) };
        let degrees: Vec<usize> = (0..=lambda.size()).collect();
        let ops: Vec<SchubertOperator> = degrees.iter().map(|&m| self.get(elementary, m)).collect();
        let matrix = jacobi_trudi_matrix(&shape, |m| ops[m].clone(), SchubertOperator::zero(n));
        determinant(&matrix)
    }
}

/// `s_lambda(theta_1..theta_a) = 0` in `E_(a+b)` for every `lambda` of size
/// at most `a+b` outside the `a x b` rectangle, and `e_a h_b(theta_1..theta_a)
/// = 0`, on the classical Schubert basis.
pub fn check_vanishing(a: usize, b: usize) -> CheckReport {
    CheckReport::run("vanishing", json!({"a": a, "b": b}), || {
        let n = a + b;
        let set = initial_segment(a);
        let rest: Vec<usize> = (a + 1..=n).collect();
        let mut ops = SymmetricOperators::new(n, &set, &rest);
        for size in 1..=n {
            for lambda in enumerate_partitions_in_box(size, size, size) {
                if lambda.fits_in(a, b) {
                    continue;
                }
                if !ops.schur(&lambda).is_zero() {
                    return Some(format!("s_({lambda})(theta_1..theta_{a}) is nonzero in E_{n}"));
                }
            }
        }
        kill(n, &set, &rest)
    })
}

fn kill(n: usize, set: &[usize], rest: &[usize]) -> Option<String> {
    let (a, b) = (set.len(), rest.len());
    let e = SchubertOperator::from_element(&dunkl_symmetric_operator_in(PieriKind::E, a, set, rest), n, false);
    let h = SchubertOperator::from_element(&dunkl_symmetric_operator_in(PieriKind::H, b, set, rest), n, false);
    let product = e.then(&h);
    (!product.is_zero()).then(|| format!("e_{a} h_{b} on {set:?} x {rest:?} is nonzero in E_{n}"))
}

/// `e_a h_b = 0` for the induced Dunkl elements of every induced `a x b`
/// rectangle `I x J` with `I` in `1..=k` and `J` in `k+1..=n`.
pub fn check_kill_induced(a: usize, b: usize, n: usize) -> CheckReport {
    CheckReport::run("kill-induced", json!({"a": a, "b": b, "n": n}), || {
        for k in a..=n.saturating_sub(b) {
            for rows in (1..=k).combinations(a) {
                for cols in (k + 1..=n).combinations(b) {
                    if let Some(d) = kill(n, &rows, &cols) {
                        return Some(d);
                    }
                }
            }
        }
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_small() {
        for n in 2..=3 {
            let r = check_relation_suite(n);
            assert!(r.passed, "{:?}", r.counterexample);
        }
    }

    #[test]
    fn vanishing_square() {
        let r = check_vanishing(2, 2);
        assert!(r.passed, "{:?}", r.counterexample);
    }

    #[test]
    fn kill_is_classical() {
        // h_1 e_1 in E_2 is q_1 quantumly
        let set = [1];
        let rest = [2];
        let e = SchubertOperator::from_element(&dunkl_symmetric_operator_in(PieriKind::E, 1, &set, &rest), 2, true);
        assert!(!e.then(&e).is_zero());
        assert_eq!(kill(2, &set, &rest), None);
    }

    #[test]
    fn induced_kill() {
        let r = check_kill_induced(1, 2, 4);
        assert!(r.passed, "{:?}", r.counterexample);
    }
}
