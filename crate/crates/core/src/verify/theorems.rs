use serde_json::json;

use super::oracle::{compare_element, compare_operator_classical, Oracles};
use super::report::CheckReport;
use crate::combinatorics::{grassmannian_perm, HookShape, Partition, Permutation};
use crate::fk::{FKElement, SchubertOperator};
use crate::forest::{
    hook_expansion, hook_plus_box_base, hook_plus_box_ledger, hook_plus_box_shape, hook_plus_box_terms,
    rectangle_expansion, rectangle_power, two_by_two_expansion, Rectangle,
};
use crate::poly::QCoeff;

fn grassmannian(lambda: &Partition, k: usize, n: usize) -> std::result::Result<Permutation, String> {
    grassmannian_perm(lambda, k, n).map_err(|e| e.to_string())
}

pub fn check_hook_theorem(n: usize, k: usize, hook: HookShape) -> CheckReport {
    check_hook_theorem_with(&Oracles::new(n), k, hook)
}

pub fn check_hook_theorem_with(oracles: &Oracles, k: usize, hook: HookShape) -> CheckReport {
    let n = oracles.n();
    CheckReport::run("hook", json!({"n": n, "k": k, "s": hook.s, "t": hook.t}), || {
        let el = match hook_expansion(hook, k, n) {
            Ok(el) => el,
            Err(e) => return Some(e.to_string()),
        };
        hook_element_discrepancy(oracles, k, hook, &el)
    })
}

/// The hook check with a supplied element in place of the expansion.
pub fn check_hook_element(oracles: &Oracles, k: usize, hook: HookShape, el: &FKElement) -> CheckReport {
    let n = oracles.n();
    CheckReport::run("hook-element", json!({"n": n, "k": k, "s": hook.s, "t": hook.t}), || {
        hook_element_discrepancy(oracles, k, hook, el)
    })
}

fn hook_element_discrepancy(oracles: &Oracles, k: usize, hook: HookShape, el: &FKElement) -> Option<String> {
    match grassmannian(&hook.partition(), k, oracles.n()) {
        Ok(w) => compare_element(el, &w, oracles),
        Err(e) => Some(e),
    }
}

/// Perturbs each coefficient of the hook expansion by +1 in turn and
/// records the perturbations the hook check does not detect.
pub fn check_mutation_guard(n: usize, k: usize, hook: HookShape) -> CheckReport {
    let oracles = Oracles::new(n);
    CheckReport::run("mutation-guard", json!({"n": n, "k": k, "s": hook.s, "t": hook.t}), || {
        let el = match hook_expansion(hook, k, n) {
            Ok(el) => el,
            Err(e) => return Some(e.to_string()),
        };
        let silent = silent_mutations(&oracles, k, hook, &el);
        if silent.is_empty() {
            None
        } else {
            Some(format!("undetected +1 on {}", silent.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
        }
    })
}

/// Classes of `el` whose +1 perturbation passes the hook check.
pub fn silent_mutations(oracles: &Oracles, k: usize, hook: HookShape, el: &FKElement) -> Vec<crate::fk::FKWord> {
    el.terms()
        .filter_map(|(w, _)| {
            let mut mutated = el.clone();
            mutated.add_word(w, 1);
            check_hook_element(oracles, k, hook, &mutated).passed.then(|| w.clone())
        })
        .collect()
}

pub fn check_two_by_two(n: usize, k: usize) -> CheckReport {
    check_two_by_two_with(&Oracles::new(n), k)
}

pub fn check_two_by_two_with(oracles: &Oracles, k: usize) -> CheckReport {
    let n = oracles.n();
    CheckReport::run("two-by-two", json!({"n": n, "k": k}), || {
        let el = match two_by_two_expansion(k, n) {
            Ok(el) => el,
            Err(e) => return Some(e.to_string()),
        };
        let lambda = Partition::new(vec![2, 2]).expect("partition");
        match grassmannian(&lambda, k, n) {
            Ok(w) => compare_element(&el, &w, oracles),
            Err(e) => Some(e),
        }
    })
}

pub fn check_rectangles(n: usize, k: usize, rect: Rectangle) -> CheckReport {
    check_rectangles_with(&Oracles::new(n), k, rect)
}

/// The square-free expansion against both oracles, and the full power of
/// the Pieri sum against the classical one.
pub fn check_rectangles_with(oracles: &Oracles, k: usize, rect: Rectangle) -> CheckReport {
    let n = oracles.n();
    let params = match rect {
        Rectangle::Rows(r) => json!({"n": n, "k": k, "rows": r}),
        Rectangle::Columns(t) => json!({"n": n, "k": k, "columns": t}),
    };
    CheckReport::run("rectangle", params, || {
        let (el, power) = match (rectangle_expansion(rect, k, n), rectangle_power(rect, k, n)) {
            (Ok(el), Ok(power)) => (el, power),
            (Err(e), _) | (_, Err(e)) => return Some(e.to_string()),
        };
        let w = match grassmannian(&rect.partition(k, n), k, n) {
            Ok(w) => w,
            Err(e) => return Some(e),
        };
        compare_element(&el, &w, oracles).or_else(|| {
            compare_operator_classical(&SchubertOperator::from_element(&power, n, false), &w, oracles)
                .map(|d| format!("full power: {d}"))
        })
    })
}

pub fn check_hook_plus_box(n: usize, k: usize, a: usize, b: usize) -> CheckReport {
    check_hook_plus_box_with(&Oracles::new(n), k, a, b)
}

/// Classical: the net element multiplies by `sigma_w(lambda)`. Quantum: it
/// multiplies by `sigma_w(lambda)` plus the q-terms of the quantum Monk
/// product `sigma_(s_k) * sigma_w(base)`. Then every forest class of the
/// ledger has a nonnegative net coefficient.
pub fn check_hook_plus_box_with(oracles: &Oracles, k: usize, a: usize, b: usize) -> CheckReport {
    let n = oracles.n();
    CheckReport::run("hook-plus-box", json!({"n": n, "k": k, "a": a, "b": b}), || {
        hook_plus_box_operator_discrepancy(oracles, k, a, b).or_else(|| {
            let ledger = match hook_plus_box_ledger(a, b, k, n) {
                Ok(l) => l,
                Err(e) => return Some(e.to_string()),
            };
            if !ledger.bookkeeping_holds() {
                return Some("ledger: net coefficients do not add up".into());
            }
            ledger.negative_forest_classes().first().map(|e| format!("ledger: forest class {} has net {}", e.word, e.net))
        })
    })
}

/// The operator identities alone, without the ledger sign condition.
pub fn hook_plus_box_operator_discrepancy(oracles: &Oracles, k: usize, a: usize, b: usize) -> Option<String> {
    let n = oracles.n();
    let terms = match hook_plus_box_terms(a, b, k, n) {
        Ok(t) => t,
        Err(e) => return Some(e.to_string()),
    };
    let net = terms.net();
    let (lambda, base) = (hook_plus_box_shape(a, b).ok()?, hook_plus_box_base(a, b).ok()?);
    let (w, mu) = match (grassmannian(&lambda, k, n), grassmannian(&base.partition(), k, n)) {
        (Ok(w), Ok(mu)) => (w, mu),
        (Err(e), _) | (_, Err(e)) => return Some(e),
    };
    if let Some(d) = compare_operator_classical(&SchubertOperator::from_element(&net, n, false), &w, oracles) {
        return Some(d);
    }
    let sk = Permutation::identity(n).swap(k, k + 1);
    let monk = oracles.quantum(&sk).apply(&crate::fk::SchubertVector::basis(&mu));
    let mut expected = (*oracles.quantum(&w)).clone();
    for (u, c) in monk.terms() {
        let mut q_part = QCoeff::zero();
        for (e, x) in c.terms().filter(|(e, _)| !e.is_empty()) {
            q_part.add_term(e.clone(), x);
        }
        if !q_part.is_zero() {
            expected = expected.plus(&oracles.quantum(u).scale(&q_part));
        }
    }
    SchubertOperator::from_element(&net, n, true)
        .first_difference(&expected)
        .map(|d| format!("quantum, w={w} with Monk correction: {d}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(s: usize, t: usize) -> HookShape {
        HookShape::new(s, t).unwrap()
    }

    #[test]
    fn monk_hook() {
        assert!(check_hook_theorem(3, 1, h(1, 1)).passed);
    }

    #[test]
    fn square_hook() {
        let r = check_hook_theorem(4, 2, h(2, 2));
        assert!(r.passed, "{:?}", r.counterexample);
    }

    #[test]
    fn two_by_two_smallest() {
        let r = check_two_by_two(4, 2);
        assert!(r.passed, "{:?}", r.counterexample);
    }

    #[test]
    fn rectangle_rows() {
        let r = check_rectangles(4, 2, Rectangle::Rows(2));
        assert!(r.passed, "{:?}", r.counterexample);
    }

    #[test]
    fn perturbed_element_fails() {
        let oracles = Oracles::new(3);
        let mut el = hook_expansion(h(1, 1), 1, 3).unwrap();
        el.add_word(&"[(1,2)]".parse().unwrap(), 1);
        assert!(!check_hook_element(&oracles, 1, h(1, 1), &el).passed);
    }

    #[test]
    fn hook_plus_box_square() {
        let r = check_hook_plus_box(4, 2, 1, 2);
        assert!(r.passed, "{:?}", r.counterexample);
    }

    #[test]
    fn does_not_fit_is_a_failure() {
        let r = check_hook_plus_box(5, 2, 2, 2);
        assert!(!r.passed);
        assert!(r.counterexample.unwrap().contains("does not fit"));
    }
}
