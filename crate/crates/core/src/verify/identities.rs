use std::collections::BTreeSet;

use rayon::prelude::*;
use serde_json::json;

use super::oracle::Oracles;
use super::report::CheckReport;
use crate::combinatorics::{enumerate_partitions_in_box, enumerate_sn, grassmannian_perm, HookShape};
use crate::fk::{dunkl_symmetric_operator, initial_segment, FKElement, FKWord, PieriKind, SchubertOperator};
use crate::forest::{enumerate_forests, hook_expansion, is_forest_class, split_label_classes};
use crate::poly::{schubert_poly, schur_jacobi_trudi};

/// `S_w(lambda,k) = s_lambda(x_1..x_k)` for every `lambda` in every
/// `k x (n-k)` rectangle.
pub fn check_grassmannian_schur(n: usize) -> CheckReport {
    CheckReport::run("grassmannian-schur", json!({"n": n}), || {
        for k in 1..n {
            for size in 0..=k * (n - k) {
                for lambda in enumerate_partitions_in_box(k, n - k, size) {
                    let w = match grassmannian_perm(&lambda, k, n) {
                        Ok(w) => w,
                        Err(e) => return Some(e.to_string()),
                    };
                    if schubert_poly(&w) != schur_jacobi_trudi(&lambda, k) {
                        return Some(format!("lambda=({lambda}) k={k}: S_[{w}] differs from the Schur polynomial"));
                    }
                }
            }
        }
        None
    })
}

/// The two labeling conditions give the same classes, for every forest
/// with `l + v` boxes, at least `l` rows and at least `v + 1` columns.
pub fn check_class_lemma(k: usize, m: usize, max_size: usize) -> CheckReport {
    CheckReport::run("class-lemma", json!({"k": k, "m": m, "max_size": max_size}), || {
        for size in 1..=max_size.min(k * m) {
            let found = enumerate_forests(k, m, size).into_par_iter().find_map_first(|d| {
                (1..=size).find_map(|l| {
                    let v = size - l;
                    if d.row_count() < l || d.col_count() < v + 1 {
                        return None;
                    }
                    (split_label_classes(&d, l) != split_label_classes(&d, l - 1))
                        .then(|| format!("forest {d} with l={l}, v={v}"))
                })
            });
            if found.is_some() {
                return found;
            }
        }
        None
    })
}

/// `e_l h_v = s_(v+1,1^(l-1)) + s_(v,1^l)` in the theta variables: the
/// forest classes of the product match the two hook expansions exactly,
/// and the remaining classes act as zero on `H*(Fl_n)`.
pub fn check_pieri_identity(l: usize, v: usize, k: usize, n: usize) -> CheckReport {
    CheckReport::run("pieri-identity", json!({"l": l, "v": v, "k": k, "n": n}), || {
        let set = initial_segment(k);
        let product =
            dunkl_symmetric_operator(PieriKind::E, l, &set, n).mul(&dunkl_symmetric_operator(PieriKind::H, v, &set, n));
        let mut hooks = FKElement::zero();
        for hook in [HookShape::new(v + 1, l), HookShape::new(v, l + 1)].into_iter().flatten() {
            if hook.fits(k, n) {
                match hook_expansion(hook, k, n) {
                    Ok(el) => hooks = hooks.add(&el),
                    Err(e) => return Some(e.to_string()),
                }
            }
        }
        let words: BTreeSet<&FKWord> = product.terms().chain(hooks.terms()).map(|(w, _)| w).collect();
        for w in words {
            let forest = is_forest_class(w, k, n);
            if !forest && hooks.coeff(w) != 0 {
                return Some(format!("hook expansion contains the non-forest class {w}"));
            }
            if forest && product.coeff(w) != hooks.coeff(w) {
                return Some(format!("forest class {w}: product {} vs hooks {}", product.coeff(w), hooks.coeff(w)));
            }
        }
        let remainder = product.sub(&hooks);
        let op = SchubertOperator::from_element(&remainder, n, false);
        op.first_difference(&SchubertOperator::zero(n)).map(|d| format!("remainder is nonzero: {d}"))
    })
}

/// Every structure constant of `H*(Fl_n)` and every Gromov-Witten
/// invariant of `QH*(Fl_n)` is nonnegative.
pub fn check_positivity(n: usize) -> CheckReport {
    CheckReport::run("positivity", json!({"n": n}), || {
        let oracles = Oracles::new(n);
        for u in enumerate_sn(n) {
            for (label, op) in [("classical", oracles.classical(&u)), ("quantum", oracles.quantum(&u))] {
                if let Some((v, col)) = op.columns().find(|(_, col)| !col.is_nonnegative()) {
                    return Some(format!("{label}: s[{u}] * s[{v}] = {col}"));
                }
            }
        }
        None
    })
}
