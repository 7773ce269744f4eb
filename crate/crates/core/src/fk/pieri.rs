use itertools::Itertools;

use super::element::FKElement;
use super::word::{FKWord, Generator};

/// Raw letter sequence `(a_1,b_1), (a_2,b_2), ...` of a Pieri word. A letter
/// with `a > b` stands for `x_ab = -x_ba`.
pub type Letters = Vec<(usize, usize)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriKind {
    /// Elementary: distinct `a`, weakly increasing `b`.
    E,
    /// Homogeneous: weakly increasing `a`, distinct `b`.
    H,
}

fn complement(set: &[usize], n: usize) -> Vec<usize> {
    (1..=n).filter(|x| !set.contains(x)).collect()
}

/// Words for `e_l` evaluated at the Dunkl elements indexed by `set`:
/// `a_j` distinct in `set`, `b_j` weakly increasing in the complement.
pub fn pieri_e_words(set: &[usize], l: usize, n: usize) -> Vec<Letters> {
    pieri_e_words_in(set, &complement(set, n), l)
}

/// `e_l` words with second indices drawn from `rest` instead of the
/// complement.
pub fn pieri_e_words_in(set: &[usize], rest: &[usize], l: usize) -> Vec<Letters> {
    let mut out = Vec::new();
    for a in set.iter().copied().permutations(l) {
        for b in rest.iter().copied().combinations_with_replacement(l) {
            out.push(a.iter().copied().zip(b).collect());
        }
    }
    out
}

/// Words for `h_k`: `a_j` weakly increasing in `set`, `b_j` distinct in the
/// complement.
pub fn pieri_h_words(set: &[usize], k: usize, n: usize) -> Vec<Letters> {
    pieri_h_words_in(set, &complement(set, n), k)
}

pub fn pieri_h_words_in(set: &[usize], rest: &[usize], k: usize) -> Vec<Letters> {
    let mut out = Vec::new();
    for a in set.iter().copied().combinations_with_replacement(k) {
        for b in rest.iter().copied().permutations(k) {
            out.push(a.iter().copied().zip(b).collect());
        }
    }
    out
}

/// Orient every letter as `x_ij` with `i < j`, tracking the sign.
pub fn signed_word(letters: &[(usize, usize)]) -> (i64, FKWord) {
    let mut sign = 1;
    let gens = letters
        .iter()
        .map(|&(a, b)| {
            if a > b {
                sign = -sign;
                Generator::new_unchecked(b, a)
            } else {
                Generator::new_unchecked(a, b)
            }
        })
        .collect();
    (sign, FKWord::new(gens))
}

/// `e_degree` or `h_degree` of the Dunkl elements `theta_i, i in set`, as a
/// sum of Pieri words.
pub fn dunkl_symmetric_operator(kind: PieriKind, degree: usize, set: &[usize], n: usize) -> FKElement {
    dunkl_symmetric_operator_in(kind, degree, set, &complement(set, n))
}

/// The same sum for the Dunkl elements of the subalgebra on `set` and
/// `rest`: `theta_i = sum_(j in rest) x_ij` for `i` in `set`.
pub fn dunkl_symmetric_operator_in(kind: PieriKind, degree: usize, set: &[usize], rest: &[usize]) -> FKElement {
    let words = match kind {
        PieriKind::E => pieri_e_words_in(set, rest, degree),
        PieriKind::H => pieri_h_words_in(set, rest, degree),
    };
    let mut el = FKElement::zero();
    for letters in words {
        let (sign, word) = signed_word(&letters);
        el.add_word(&word, sign);
    }
    el
}

/// `theta_i = -sum_(j<i) x_ji + sum_(k>i) x_ik`.
pub fn dunkl_element(i: usize, n: usize) -> FKElement {
    dunkl_symmetric_operator(PieriKind::E, 1, &[i], n)
}

/// `{1, ..., k}`.
pub fn initial_segment(k: usize) -> Vec<usize> {
    (1..=k).collect()
}
