use itertools::Itertools;
use num_bigint::BigInt;

use super::sparse::Poly;
use crate::combinatorics::Partition;

/// Elementary symmetric polynomial `e_k` in the variables with the given
/// 1-based indices.
pub fn elementary(k: usize, vars: &[usize]) -> Poly {
    let mut out = Poly::zero();
    for subset in vars.iter().combinations(k) {
        let len = subset.iter().map(|&&v| v).max().unwrap_or(0);
        let mut e = vec![0u32; len];
        for &&v in &subset {
            e[v - 1] += 1;
        }
        out.add_term(e, &BigInt::from(1));
    }
    out
}

/// Complete homogeneous symmetric polynomial `h_k`.
pub fn homogeneous(k: usize, vars: &[usize]) -> Poly {
    let mut out = Poly::zero();
    for multiset in vars.iter().combinations_with_replacement(k) {
        let len = multiset.iter().map(|&&v| v).max().unwrap_or(0);
        let mut e = vec![0u32; len];
        for &&v in &multiset {
            e[v - 1] += 1;
        }
        out.add_term(e, &BigInt::from(1));
    }
    out
}

/// Minimal ring interface for determinants over commuting entries.
pub trait Ring: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for Poly {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

/// Laplace expansion along the first row. The matrix must be square and
/// nonempty; the entries are assumed to commute.
pub fn determinant<T: Ring>(m: &[Vec<T>]) -> T {
    let size = m.len();
    assert!(size > 0 && m.iter().all(|r| r.len() == size), "determinant of a non-square matrix");
    if size == 1 {
        return m[0][0].clone();
    }
    let mut acc: Option<T> = None;
    for col in 0..size {
        let entry = &m[0][col];
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = entry.mul(&determinant(&minor));
        acc = Some(match acc {
            None if col % 2 == 0 => term,
            None => entry.sub(entry).sub(&term),
            Some(a) if col % 2 == 0 => a.add(&term),
            Some(a) => a.sub(&term),
        });
    }
    acc.unwrap_or_else(|| m[0][0].sub(&m[0][0]))
}

/// Jacobi-Trudi matrix `[h_(lambda_i - i + j)]` with entries produced by
/// `h`; `h(0)` should be the identity and negative indices are zero.
pub fn jacobi_trudi_matrix<T: Clone>(lambda: &Partition, h: impl Fn(usize) -> T, zero: T) -> Vec<Vec<T>> {
    let l = lambda.len();
    (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let idx = lambda.part(i) as isize - i as isize + j as isize;
                    if idx < 0 {
                        zero.clone()
                    } else {
                        h(idx as usize)
                    }
                })
                .collect()
        })
        .collect()
}

/// Schur polynomial `s_lambda(x_1..x_k) = det[h_(lambda_i - i + j)]`.
pub fn schur_jacobi_trudi(lambda: &Partition, k: usize) -> Poly {
    if lambda.len() > k {
        return Poly::zero();
    }
    if lambda.is_empty() {
        return Poly::one();
    }
    let vars: Vec<usize> = (1..=k).collect();
    determinant(&jacobi_trudi_matrix(lambda, |d| homogeneous(d, &vars), Poly::zero()))
}

/// The dual form `det[e_(lambda'_i - i + j)]`.
pub fn schur_dual_jacobi_trudi(lambda: &Partition, k: usize) -> Poly {
    if lambda.is_empty() {
        return Poly::one();
    }
    let vars: Vec<usize> = (1..=k).collect();
    determinant(&jacobi_trudi_matrix(&lambda.conjugate(), |d| elementary(d, &vars), Poly::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_partitions_in_box;

    #[test]
    fn elementary_and_homogeneous() {
        assert_eq!(elementary(1, &[1, 2]).to_string(), "x1 + x2");
        assert!(elementary(3, &[1, 2]).is_zero());
        assert_eq!(elementary(0, &[1, 2]), Poly::one());
        assert_eq!(homogeneous(2, &[1]).to_string(), "x1^2");
        assert_eq!(homogeneous(2, &[1, 2]).to_string(), "x1^2 + x1*x2 + x2^2");
        assert_eq!(homogeneous(0, &[]), Poly::one());
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_jacobi_trudi(&"1".parse().unwrap(), 2).to_string(), "x1 + x2");
        assert!(schur_jacobi_trudi(&"1,1".parse().unwrap(), 1).is_zero());
        assert_eq!(schur_jacobi_trudi(&"2,2".parse().unwrap(), 2).to_string(), "x1^2*x2^2");
        assert_eq!(schur_jacobi_trudi(&"2,1".parse().unwrap(), 2).to_string(), "x1^2*x2 + x1*x2^2");
    }

    #[test]
    fn dual_jacobi_trudi_agrees() {
        for k in 1..=4 {
            for size in 0..=6 {
                for lambda in enumerate_partitions_in_box(size, size, size) {
                    assert_eq!(
                        schur_jacobi_trudi(&lambda, k),
                        schur_dual_jacobi_trudi(&lambda, k),
                        "lambda=({lambda}) k={k}"
                    );
                }
            }
        }
    }
}
