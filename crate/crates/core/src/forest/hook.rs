use super::diagram::{enumerate_forests, Diagram};
use super::labeling::split_label_classes;
use crate::combinatorics::HookShape;
use crate::error::{Error, Result};
use crate::fk::{dunkl_symmetric_operator, initial_segment, FKElement, PieriKind};

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `c_D = binom(row(D) - t + col(D) - s, col(D) - s)` for forests with
/// enough rows and columns, zero otherwise.
pub fn hook_coefficient(d: &Diagram, hook: HookShape) -> u64 {
    let (rows, cols) = (d.row_count(), d.col_count());
    if !d.is_forest() || rows < hook.t || cols < hook.s {
        return 0;
    }
    binomial(rows - hook.t + cols - hook.s, cols - hook.s)
}

fn check_fit(hook: HookShape, k: usize, n: usize) -> Result<()> {
    if !hook.fits(k, n) {
        return Err(Error::DoesNotFit { shape: format!("({hook})"), k, m: n.saturating_sub(k) });
    }
    Ok(())
}

/// `s_hook(theta_1..theta_k)` as a nonnegative combination of forest
/// labelings. Rows and columns reduce to the Pieri sums.
pub fn hook_expansion(hook: HookShape, k: usize, n: usize) -> Result<FKElement> {
    check_fit(hook, k, n)?;
    if hook.is_column() {
        return Ok(dunkl_symmetric_operator(PieriKind::E, hook.t, &initial_segment(k), n));
    }
    if hook.is_row() {
        return Ok(dunkl_symmetric_operator(PieriKind::H, hook.s, &initial_segment(k), n));
    }
    hook_expansion_forest(hook, k, n)
}

/// The forest formula for every hook, rows and columns included.
pub fn hook_expansion_forest(hook: HookShape, k: usize, n: usize) -> Result<FKElement> {
    check_fit(hook, k, n)?;
    let mut el = FKElement::zero();
    for d in enumerate_forests(k, n - k, hook.size()) {
        let c = hook_coefficient(&d, hook);
        if c == 0 {
            continue;
        }
        for word in split_label_classes(&d, hook.t) {
            el.add_word(&word, c as i64);
        }
    }
    Ok(el)
}
