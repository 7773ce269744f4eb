use std::collections::BTreeMap;

use num_bigint::BigInt;
use schubert_fk::combinatorics::{enumerate_sn, grassmannian_perm};
use schubert_fk::fk::{gw_invariants, quantum_schubert_operator, SchubertOperator};
use schubert_fk::forest::{hook_expansion, Rectangle};
use schubert_fk::poly::{cohomology_product, expand_in_e_basis, lr_coefficients, schubert_poly, EBasisKey};
use schubert_fk::verify::*;
use schubert_fk::{HookShape, Partition, Permutation};

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

#[test]
fn monk_products() {
    let out = cohomology_product(&p("2 1 3"), &p("2 1 3"), 3);
    assert_eq!(out, BTreeMap::from([(p("3 1 2"), BigInt::from(1))]));
    let out = lr_coefficients(&p("1 3 2"), &p("1 3 2"), 4).unwrap();
    assert_eq!(out.get(&p("1 4 2 3")), Some(&BigInt::from(1)));
    assert_eq!(out.get(&p("2 3 1 4")), Some(&BigInt::from(1)));
}

#[test]
fn quantum_square_of_s1_in_s2() {
    let out = gw_invariants(&p("2 1"), &p("2 1"), 2).unwrap();
    assert_eq!(out, BTreeMap::from([((p("1 2"), vec![1]), BigInt::from(1))]));
}

#[test]
fn quantum_operators_commute() {
    let ops: Vec<SchubertOperator> =
        enumerate_sn(3).iter().map(|w| quantum_schubert_operator(w, 3).unwrap()).collect();
    for a in &ops {
        for b in &ops {
            assert_eq!(a.then(b), b.then(a));
        }
    }
}

#[test]
fn e_basis_of_a_schubert_polynomial() {
    // S_132 = x1 + x2 = e_1(x1, x2)
    let alpha = expand_in_e_basis(&schubert_poly(&p("1 3 2")), 3).unwrap();
    assert_eq!(alpha, BTreeMap::from([(EBasisKey(vec![0, 1]), BigInt::from(1))]));
}

#[test]
fn hook_theorem_examples() {
    assert!(check_hook_theorem(3, 1, HookShape::new(1, 1).unwrap()).passed);
    assert!(check_hook_theorem(4, 2, HookShape::new(2, 2).unwrap()).passed);
    assert!(check_hook_theorem(5, 2, HookShape::new(3, 2).unwrap()).passed);
}

#[test]
fn expansion_theorem_examples() {
    assert!(check_two_by_two(4, 2).passed);
    assert!(check_rectangles(4, 2, Rectangle::Rows(2)).passed);
    assert!(check_hook_plus_box(6, 3, 2, 2).passed);
    let r = check_hook_plus_box(5, 3, 1, 2);
    assert!(!r.passed);
    assert!(r.counterexample.unwrap().starts_with("ledger"));
}

#[test]
fn relation_examples() {
    assert!(check_relation_suite(3).passed);
    assert!(check_relation_suite(4).passed);
    assert!(check_vanishing(2, 2).passed);
    assert!(check_dunkl_commutativity(4).passed);
}

#[test]
fn mutation_is_detected() {
    let oracles = Oracles::new(4);
    let hook = HookShape::new(2, 2).unwrap();
    let el = hook_expansion(hook, 2, 4).unwrap();
    let (word, _) = el.terms().next().unwrap();
    let mut mutated = el.clone();
    mutated.add_word(word, 1);
    let r = check_hook_element(&oracles, 2, hook, &mutated);
    assert!(!r.passed);
    assert!(r.counterexample.is_some());
}

#[test]
fn grassmannian_schur() {
    assert!(check_grassmannian_schur(5).passed);
    let w = grassmannian_perm(&Partition::new(vec![2, 1]).unwrap(), 2, 4).unwrap();
    assert_eq!(w, p("2 4 1 3"));
}

#[test]
fn reports_are_deterministic() {
    let a = check_two_by_two(5, 2);
    let b = check_two_by_two(5, 2);
    assert_eq!(a.without_timing(), b.without_timing());
}

#[test]
fn suite_streams_reports() {
    let mut lines = Vec::new();
    let ok = run_suite("schur", 4, &mut |r| lines.push(r.to_json_line())).unwrap();
    assert!(ok);
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|l| l.contains(r#""claim":"grassmannian-schur""#)));
}
