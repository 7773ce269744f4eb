use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A permutation in one-line notation with values `1..=n`.
///
/// Products follow `(u*v)(i) = u(v(i))`, so right multiplication by the
/// transposition `s_ij` swaps the entries in positions `i` and `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidPermutation(format!("{entries:?}")));
            }
            seen[e] = true;
        }
        Ok(Permutation { entries })
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation { entries }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { entries: (1..=n).collect() }
    }

    /// The longest element `w_0 = [n, n-1, ..., 1]`.
    pub fn longest(n: usize) -> Self {
        Permutation { entries: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Value at the 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(p, &e)| e == p + 1)
    }

    pub fn length(&self) -> usize {
        let w = &self.entries;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Lehmer code: `c_i = #{j > i : w_j < w_i}`.
    pub fn code(&self) -> Vec<usize> {
        let w = &self.entries;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .collect()
    }

    /// Inverse of [`Permutation::code`] inside `S_m`.
    pub fn from_code(code: &[usize], m: usize) -> Result<Self> {
        if code.len() > m {
            return Err(Error::InvalidPermutation(format!("code {code:?} longer than {m}")));
        }
        let mut free: Vec<usize> = (1..=m).collect();
        let mut entries = Vec::with_capacity(m);
        for i in 0..m {
            let c = code.get(i).copied().unwrap_or(0);
            if c >= free.len() {
                return Err(Error::InvalidPermutation(format!("code {code:?} not in S_{m}")));
            }
            entries.push(free.remove(c));
        }
        Ok(Permutation { entries })
    }

    /// 1-based positions `i` with `w_i > w_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `w * s_ij`: swap the entries at positions `i` and `j`.
    pub fn swap(&self, i: usize, j: usize) -> Self {
        let mut entries = self.entries.clone();
        entries.swap(i - 1, j - 1);
        Permutation { entries }
    }

    /// `l(w s_ij) - l(w)` for `i < j`, computed from the entries between
    /// the two positions.
    pub fn length_change(&self, i: usize, j: usize) -> isize {
        let (a, b) = (self.at(i), self.at(j));
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let between = self.entries[i..j - 1]
            .iter()
            .filter(|&&x| lo < x && x < hi)
            .count() as isize;
        if a < b {
            1 + 2 * between
        } else {
            -(1 + 2 * between)
        }
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        let n = self.n().max(other.n());
        let (u, v) = (self.embed(n), other.embed(n));
        Permutation { entries: v.entries.iter().map(|&x| u.at(x)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut entries = vec![0; self.n()];
        for (p, &e) in self.entries.iter().enumerate() {
            entries[e - 1] = p + 1;
        }
        Permutation { entries }
    }

    /// The same permutation viewed in `S_m`, `m >= n`, by appending fixed
    /// points.
    pub fn embed(&self, m: usize) -> Self {
        let mut entries = self.entries.clone();
        entries.extend(self.n() + 1..=m);
        Permutation { entries }
    }

    /// Drop trailing fixed points.
    pub fn trimmed(&self) -> Self {
        let mut entries = self.entries.clone();
        while entries.last() == Some(&entries.len()) {
            entries.pop();
        }
        Permutation { entries }
    }

    /// Whether the permutation fixes everything beyond position `n`.
    pub fn lies_in(&self, n: usize) -> bool {
        self.entries.iter().enumerate().skip(n).all(|(p, &e)| e == p + 1)
    }

    /// Restrict to `S_n`; the caller guarantees [`Permutation::lies_in`].
    pub fn restrict(&self, n: usize) -> Self {
        debug_assert!(self.lies_in(n));
        let mut entries = self.entries.clone();
        entries.resize(n, 0);
        for p in self.n()..n {
            entries[p] = p + 1;
        }
        Permutation { entries }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries.iter().join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(entries)
    }
}

/// All of `S_n` in lexicographic order.
pub fn enumerate_sn(n: usize) -> Vec<Permutation> {
    (1..=n)
        .permutations(n)
        .map(|entries| Permutation { entries })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(p("1 2 3").length(), 0);
        assert_eq!(p("3 2 1").length(), 3);
        assert_eq!(p("2 4 1 3").length(), 3);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 4, 2]).is_err());
    }

    #[test]
    fn code_round_trip() {
        for w in enumerate_sn(5) {
            assert_eq!(Permutation::from_code(&w.code(), 5).unwrap(), w);
            assert_eq!(w.code().iter().sum::<usize>(), w.length());
        }
    }

    #[test]
    fn length_change_matches_recount() {
        for w in enumerate_sn(5) {
            for i in 1..=5 {
                for j in i + 1..=5 {
                    let d = w.swap(i, j).length() as isize - w.length() as isize;
                    assert_eq!(w.length_change(i, j), d, "{w} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn compose_and_inverse() {
        let w = p("2 4 1 3");
        assert!(w.compose(&w.inverse()).is_identity());
        // right multiplication by s_12 swaps positions
        let s12 = p("2 1 3 4");
        assert_eq!(w.compose(&s12), w.swap(1, 2));
    }

    #[test]
    fn embedding_and_trimming() {
        let w = p("2 1 3 4");
        assert_eq!(w.trimmed(), p("2 1"));
        assert_eq!(p("2 1").embed(4), w);
        assert!(w.lies_in(2));
        assert!(!p("1 3 2").lies_in(2));
        assert_eq!(w.restrict(3), p("2 1 3"));
    }

    #[test]
    fn enumerates_in_order() {
        let all = enumerate_sn(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], p("1 2 3"));
        assert_eq!(all[5], p("3 2 1"));
    }

    #[test]
    fn text_round_trip() {
        let w = p("2 4 1 3");
        assert_eq!(w.to_string(), "2 4 1 3");
        assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
    }
}
