use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::sparse::Poly;
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// Which reduced word of `w^-1 w_0` drives the divided-difference chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducedWord {
    /// Climb to `w_0` through the last ascent at every step.
    LastAscent,
    /// Climb through the first ascent instead.
    FirstAscent,
}

/// `x_1^(n-1) x_2^(n-2) ... x_(n-1)`, the Schubert polynomial of `w_0`.
pub fn staircase(n: usize) -> Poly {
    let e: Vec<u32> = (1..n).rev().map(|d| d as u32).collect();
    Poly::monomial(e, BigInt::from(1))
}

/// Schubert polynomial of `w` in `S_n`, by divided differences from the
/// staircase.
pub fn schubert_poly(w: &Permutation) -> Poly {
    schubert_poly_via(w, ReducedWord::LastAscent)
}

pub fn schubert_poly_via(w: &Permutation, word: ReducedWord) -> Poly {
    let n = w.n();
    let mut chain = Vec::new();
    let mut u = w.clone();
    loop {
        let ascents: Vec<usize> = (1..n).filter(|&i| u.at(i) < u.at(i + 1)).collect();
        let i = match word {
            ReducedWord::LastAscent => ascents.last(),
            ReducedWord::FirstAscent => ascents.first(),
        };
        match i {
            Some(&i) => {
                chain.push(i);
                u = u.swap(i, i + 1);
            }
            None => break,
        }
    }
    let mut f = staircase(n);
    for &i in chain.iter().rev() {
        f = f.divided_difference(i);
    }
    f
}

fn cache() -> &'static RwLock<HashMap<Permutation, Arc<Poly>>> {
    static CACHE: OnceLock<RwLock<HashMap<Permutation, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Schubert polynomial of `w` viewed in `S_infinity` (independent of the
/// ambient `n`). Dominant codes give monomials; otherwise climb one ascent
/// `c_i < c_(i+1)` and apply `d_i`. Results are memoized process-wide.
pub fn schubert_stable(w: &Permutation) -> Arc<Poly> {
    let key = w.trimmed();
    if let Some(p) = cache().read().expect("schubert cache poisoned").get(&key) {
        return Arc::clone(p);
    }
    let code = key.code();
    let poly = match code.windows(2).position(|c| c[0] < c[1]) {
        None => Poly::monomial(code.iter().map(|&c| c as u32).collect(), BigInt::from(1)),
        Some(p) => {
            let i = p + 1;
            schubert_stable(&key.swap(i, i + 1)).divided_difference(i)
        }
    };
    let poly = Arc::new(poly);
    cache()
        .write()
        .expect("schubert cache poisoned")
        .entry(key)
        .or_insert_with(|| Arc::clone(&poly));
    poly
}

/// Expand `f` in Schubert polynomials of `S_m`. The lex-smallest monomial
/// of `S_w` is `x^code(w)`, so peeling off the lex-smallest term of the
/// remainder terminates.
pub fn expand_in_schubert_basis(f: &Poly, m: usize) -> Result<BTreeMap<Permutation, BigInt>> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rest.lex_min() {
        let code: Vec<usize> = lead.iter().map(|&d| d as usize).collect();
        let w = Permutation::from_code(&code, m)
            .map_err(|_| Error::NotInSpan(format!("leading monomial {lead:?} is not a code in S_{m}")))?;
        let c = c.clone();
        rest -= &schubert_stable(&w).scale(&c);
        out.insert(w, c);
    }
    Ok(out)
}

/// Structure constants of `S_u S_v` in `S_m`. Panics on a negative value,
/// which geometry rules out.
pub fn lr_coefficients(u: &Permutation, v: &Permutation, m: usize) -> Result<BTreeMap<Permutation, BigInt>> {
    if u.n() > m || v.n() > m {
        return Err(Error::NotInSpan(format!("{u} or {v} outside S_{m}")));
    }
    let f = &*schubert_stable(u) * &*schubert_stable(v);
    let out = expand_in_schubert_basis(&f, m)?;
    assert!(out.values().all(|c| !c.is_negative()), "negative structure constant in {u} * {v}");
    Ok(out)
}

/// Product `sigma_u sigma_v` in `H*(Fl_n)`: the stable expansion with
/// every term outside `S_n` dropped.
pub fn cohomology_product(u: &Permutation, v: &Permutation, n: usize) -> BTreeMap<Permutation, BigInt> {
    let m = n + u.length() + v.length();
    lr_coefficients(u, v, m)
        .expect("every leading code fits S_(n + degree)")
        .into_iter()
        .filter(|(w, c)| w.lies_in(n) && !c.is_zero())
        .map(|(w, c)| (w.restrict(n), c))
        .collect()
}
