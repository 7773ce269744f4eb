use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::sparse::{Exponent, Poly};
use super::symmetric::elementary;
use crate::error::{Error, Result};

/// Index `(i_1, ..., i_(n-1))` of the product
/// `e_(i_1)(x_1) e_(i_2)(x_1, x_2) ... e_(i_(n-1))(x_1..x_(n-1))`,
/// with `0 <= i_j <= j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EBasisKey(pub Vec<usize>);

impl EBasisKey {
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn product(&self) -> Poly {
        let mut f = Poly::one();
        for (idx, &i) in self.0.iter().enumerate() {
            if i > 0 {
                let vars: Vec<usize> = (1..=idx + 1).collect();
                f = &f * &elementary(i, &vars);
            }
        }
        f
    }
}

impl fmt::Display for EBasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// All `n!` keys for `S_n`.
pub fn ebasis_keys(n: usize) -> Vec<EBasisKey> {
    if n <= 1 {
        return vec![EBasisKey(Vec::new())];
    }
    (1..n).map(|j| 0..=j).multi_cartesian_product().map(EBasisKey).collect()
}

/// Unique coefficients `alpha` with `f = sum alpha_key e_key`, solved per
/// degree by exact rational elimination.
pub fn expand_in_e_basis(f: &Poly, n: usize) -> Result<BTreeMap<EBasisKey, BigInt>> {
    let mut by_degree: BTreeMap<usize, Vec<(EBasisKey, Poly)>> = BTreeMap::new();
    for key in ebasis_keys(n) {
        let prod = key.product();
        by_degree.entry(key.degree()).or_default().push((key, prod));
    }
    let mut out = BTreeMap::new();
    for (d, part) in f.homogeneous_parts() {
        let empty = Vec::new();
        let block = by_degree.get(&(d as usize)).unwrap_or(&empty);
        for (key, c) in solve_block(&part, block)? {
            out.insert(key, c);
        }
    }
    Ok(out)
}

fn solve_block(f: &Poly, block: &[(EBasisKey, Poly)]) -> Result<Vec<(EBasisKey, BigInt)>> {
    let monomials: Vec<Exponent> = block
        .iter()
        .flat_map(|(_, p)| p.terms().map(|(e, _)| e.clone()))
        .chain(f.terms().map(|(e, _)| e.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cols = block.len();
    let mut rows: Vec<Vec<BigRational>> = monomials
        .iter()
        .map(|m| {
            let mut row: Vec<BigRational> =
                block.iter().map(|(_, p)| BigRational::from_integer(p.coeff(m))).collect();
            row.push(BigRational::from_integer(f.coeff(m)));
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..=cols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[cols].is_zero()) {
        return Err(Error::NotInSpan(format!("{f} is not in the e-product span")));
    }
    let mut out = Vec::new();
    for (row, &c) in pivots.iter().enumerate() {
        let v = &rows[row][cols];
        if v.is_zero() {
            continue;
        }
        if !v.is_integer() {
            return Err(Error::NonIntegral(format!("{} at {}", v, block[c].0)));
        }
        out.push((block[c].0.clone(), v.to_integer()));
    }
    Ok(out)
}
