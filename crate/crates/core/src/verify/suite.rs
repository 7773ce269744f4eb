use itertools::Itertools;

use super::identities::{check_class_lemma, check_grassmannian_schur, check_pieri_identity, check_positivity};
use super::oracle::Oracles;
use super::relations::{check_dunkl_commutativity, check_kill_induced, check_relation_suite, check_vanishing};
use super::report::CheckReport;
use super::theorems::{
    check_hook_plus_box_with, check_hook_theorem_with, check_mutation_guard, check_rectangles_with,
    check_two_by_two_with,
};
use crate::combinatorics::HookShape;
use crate::error::{Error, Result};
use crate::forest::Rectangle;

pub const SUITES: &[&str] = &[
    "hooks",
    "two-by-two",
    "rectangles",
    "hook-plus-box",
    "relations",
    "vanishing",
    "schur",
    "class-lemma",
    "pieri",
    "positivity",
    "mutation",
];

/// `(n, k, a, b)` for hook-plus-box shapes `(b,2,1^(a-1))` with
/// `a + b + 1 <= 5` inside rectangles of at most 3 x 3.
pub fn hook_plus_box_instances(max_n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for k in 1..n {
            if k > 3 || n - k > 3 {
                continue;
            }
            for (a, b) in (1..=2).cartesian_product(2..=3) {
                if a + b < 5 && a + 1 <= k && b <= n - k {
                    out.push((n, k, a, b));
                }
            }
        }
    }
    out
}

/// Runs the named suite (or `all`) for ambient sizes up to `max_n`, handing
/// each report to `sink` as soon as it is ready. Returns whether every
/// check passed.
pub fn run_suite(name: &str, max_n: usize, sink: &mut dyn FnMut(&CheckReport)) -> Result<bool> {
    if name == "all" {
        let mut ok = true;
        for s in SUITES {
            ok &= run_suite(s, max_n, sink)?;
        }
        return Ok(ok);
    }
    let mut ok = true;
    let mut emit = |r: CheckReport| {
        ok &= r.passed;
        sink(&r);
    };
    match name {
        "hooks" => {
            for n in 2..=max_n {
                let oracles = Oracles::new(n);
                for k in 1..n {
                    for (t, s) in (1..=k).cartesian_product(1..=n - k) {
                        emit(check_hook_theorem_with(&oracles, k, HookShape::new(s, t)?));
                    }
                }
            }
        }
        "two-by-two" => {
            for n in 4..=max_n {
                let oracles = Oracles::new(n);
                for k in 2..=n - 2 {
                    emit(check_two_by_two_with(&oracles, k));
                }
            }
        }
        "rectangles" => {
            for n in 2..=max_n {
                let oracles = Oracles::new(n);
                for k in 1..n {
                    for r in 1..=k {
                        emit(check_rectangles_with(&oracles, k, Rectangle::Rows(r)));
                    }
                    for t in 1..=n - k {
                        emit(check_rectangles_with(&oracles, k, Rectangle::Columns(t)));
                    }
                }
            }
        }
        "hook-plus-box" => {
            for (n, group) in &hook_plus_box_instances(max_n).into_iter().chunk_by(|x| x.0) {
                let oracles = Oracles::new(n);
                for (_, k, a, b) in group {
                    emit(check_hook_plus_box_with(&oracles, k, a, b));
                }
            }
        }
        "relations" => {
            for n in 2..=max_n.min(4) {
                emit(check_relation_suite(n));
            }
            if max_n >= 5 {
                emit(check_dunkl_commutativity(5));
            }
        }
        "vanishing" => {
            for (a, b) in (1..max_n).cartesian_product(1..max_n) {
                if a + b <= max_n {
                    emit(check_vanishing(a, b));
                    for n in a + b..=max_n {
                        emit(check_kill_induced(a, b, n));
                    }
                }
            }
        }
        "schur" => {
            for n in 2..=max_n {
                emit(check_grassmannian_schur(n));
            }
        }
        "class-lemma" => {
            for (k, m) in (1..=3).cartesian_product(1..=3) {
                emit(check_class_lemma(k, m, 5));
            }
        }
        "pieri" => {
            for n in 2..=max_n {
                for k in 1..n {
                    if k > 3 || n - k > 3 {
                        continue;
                    }
                    for (l, v) in (1..=k).cartesian_product(1..n - k) {
                        if l + v <= 4 {
                            emit(check_pieri_identity(l, v, k, n));
                        }
                    }
                }
            }
        }
        "positivity" => {
            for n in 2..=max_n.min(4) {
                emit(check_positivity(n));
            }
        }
        "mutation" => {
            if max_n >= 4 {
                emit(check_mutation_guard(4, 2, HookShape::new(2, 2)?));
            }
        }
        other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
    }
    Ok(ok)
}
