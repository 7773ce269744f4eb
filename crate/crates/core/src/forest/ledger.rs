use std::collections::BTreeSet;

use rayon::prelude::*;

use super::diagram::Diagram;
use super::hook::hook_expansion;
use crate::combinatorics::{HookShape, Partition};
use crate::error::{Error, Result};
use crate::fk::{dunkl_symmetric_operator, initial_segment, FKElement, FKWord, PieriKind};

/// `(b, 2, 1^(a-1))`.
pub fn hook_plus_box_shape(a: usize, b: usize) -> Result<Partition> {
    if a == 0 || b < 2 {
        return Err(Error::InvalidPartition(format!("hook-plus-box needs a >= 1 and b >= 2, got a={a} b={b}")));
    }
    let mut parts = vec![b, 2];
    parts.extend(std::iter::repeat(1).take(a - 1));
    Partition::new(parts)
}

/// The hook `(b, 1^a)` that the box is added to.
pub fn hook_plus_box_base(a: usize, b: usize) -> Result<HookShape> {
    hook_plus_box_shape(a, b)?;
    HookShape::new(b, a + 1)
}

fn hook_or_zero(hook: HookShape, k: usize, n: usize) -> Result<FKElement> {
    if hook.fits(k, n) {
        hook_expansion(hook, k, n)
    } else {
        Ok(FKElement::zero())
    }
}

/// The three terms of the hook-plus-box identity: the base hook times the
/// `h_1` sum (with the `h_1` letter last) and the two hooks subtracted.
pub struct HookPlusBoxTerms {
    pub product: FKElement,
    pub taller: FKElement,
    pub wider: FKElement,
}

impl HookPlusBoxTerms {
    pub fn net(&self) -> FKElement {
        self.product.sub(&self.taller).sub(&self.wider)
    }
}

pub fn hook_plus_box_terms(a: usize, b: usize, k: usize, n: usize) -> Result<HookPlusBoxTerms> {
    let shape = hook_plus_box_shape(a, b)?;
    if k == 0 || k >= n || !shape.fits_in(k, n - k) {
        return Err(Error::DoesNotFit { shape: format!("({shape})"), k, m: n.saturating_sub(k) });
    }
    let base = hook_plus_box_base(a, b)?;
    let h1 = dunkl_symmetric_operator(PieriKind::H, 1, &initial_segment(k), n);
    Ok(HookPlusBoxTerms {
        product: hook_expansion(base, k, n)?.mul(&h1),
        taller: hook_or_zero(HookShape::new(b, a + 2)?, k, n)?,
        wider: hook_or_zero(HookShape::new(b + 1, a + 1)?, k, n)?,
    })
}

/// `s_(b,1^(a-1)) h_1 - s_(b,1^a) - s_(b+1,1^(a-1))` in the theta variables,
/// written with the base hook `(b, 1^a)`.
pub fn hook_plus_box_net(a: usize, b: usize, k: usize, n: usize) -> Result<FKElement> {
    Ok(hook_plus_box_terms(a, b, k, n)?.net())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub word: FKWord,
    pub net: i64,
    pub is_forest_class: bool,
}

#[derive(Clone, Debug)]
pub struct Ledger {
    pub a: usize,
    pub b: usize,
    pub k: usize,
    pub n: usize,
    pub shape: Partition,
    /// Coefficient sums of the product and of the two subtracted hooks.
    pub product_total: i64,
    pub subtracted_total: i64,
    pub entries: Vec<LedgerEntry>,
}

impl Ledger {
    pub fn negative_forest_classes(&self) -> Vec<&LedgerEntry> {
        self.entries.iter().filter(|e| e.is_forest_class && e.net < 0).collect()
    }

    pub fn forest_classes_nonnegative(&self) -> bool {
        self.negative_forest_classes().is_empty()
    }

    /// Net coefficients add up to the product total minus the subtracted
    /// total.
    pub fn bookkeeping_holds(&self) -> bool {
        self.entries.iter().map(|e| e.net).sum::<i64>() == self.product_total - self.subtracted_total
    }

    /// One line per class: word, net coefficient, forest flag.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("word\tnet\tforest\n");
        for e in &self.entries {
            out.push_str(&format!("{}\t{}\t{}\n", e.word, e.net, e.is_forest_class));
        }
        out
    }
}

fn coefficient_sum(el: &FKElement) -> i64 {
    el.terms().map(|(_, c)| c).sum()
}

/// A class is a forest class when its letters are distinct and their boxes
/// form a forest.
pub fn is_forest_class(word: &FKWord, k: usize, n: usize) -> bool {
    !word.has_repeated_letter()
        && Diagram::from_word(word, k, n).map(|d| d.is_forest()).unwrap_or(false)
}

/// Net coefficient of every class occurring in any of the three terms,
/// zero nets included.
pub fn hook_plus_box_ledger(a: usize, b: usize, k: usize, n: usize) -> Result<Ledger> {
    let terms = hook_plus_box_terms(a, b, k, n)?;
    let net = terms.net();
    let words: BTreeSet<&FKWord> = terms
        .product
        .terms()
        .chain(terms.taller.terms())
        .chain(terms.wider.terms())
        .map(|(w, _)| w)
        .collect();
    let words: Vec<&FKWord> = words.into_iter().collect();
    let entries = words
        .par_iter()
        .map(|&w| LedgerEntry { word: w.clone(), net: net.coeff(w), is_forest_class: is_forest_class(w, k, n) })
        .collect();
    Ok(Ledger {
        a,
        b,
        k,
        n,
        shape: hook_plus_box_shape(a, b)?,
        product_total: coefficient_sum(&terms.product),
        subtracted_total: coefficient_sum(&terms.taller) + coefficient_sum(&terms.wider),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::two_by_two_expansion;

    #[test]
    fn shapes() {
        assert_eq!(hook_plus_box_shape(1, 2).unwrap().to_string(), "2,2");
        assert_eq!(hook_plus_box_shape(3, 4).unwrap().to_string(), "4,2,1,1");
        assert_eq!(hook_plus_box_base(2, 3).unwrap(), HookShape::new(3, 3).unwrap());
        assert!(hook_plus_box_shape(0, 2).is_err());
        assert!(hook_plus_box_shape(1, 1).is_err());
    }

    #[test]
    fn does_not_fit() {
        assert!(matches!(hook_plus_box_ledger(2, 2, 2, 5), Err(Error::DoesNotFit { .. })));
        assert!(matches!(hook_plus_box_ledger(1, 3, 2, 4), Err(Error::DoesNotFit { .. })));
    }

    #[test]
    fn bookkeeping() {
        for (a, b, k, n) in [(1, 2, 2, 4), (1, 2, 3, 5), (2, 2, 3, 6), (1, 3, 2, 5)] {
            let ledger = hook_plus_box_ledger(a, b, k, n).unwrap();
            assert!(ledger.bookkeeping_holds(), "a={a} b={b} k={k} n={n}");
        }
    }

    #[test]
    fn square_forest_classes_match_two_by_two() {
        let ledger = hook_plus_box_ledger(1, 2, 2, 4).unwrap();
        let expected = two_by_two_expansion(2, 4).unwrap();
        for e in ledger.entries.iter().filter(|e| e.is_forest_class) {
            assert_eq!(e.net, expected.coeff(&e.word), "{}", e.word);
        }
    }

    #[test]
    fn tsv_layout() {
        let ledger = hook_plus_box_ledger(1, 2, 2, 4).unwrap();
        let tsv = ledger.to_tsv();
        assert!(tsv.starts_with("word\tnet\tforest\n"));
        assert_eq!(tsv.lines().count(), ledger.entries.len() + 1);
    }
}
