use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn fits_in(&self, k: usize, m: usize) -> bool {
        self.parts.len() <= k && self.part(1) <= m
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.part(1))
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad partition part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The hook `(s, 1^(t-1))`: arm `s` in the first row, leg `t` in the first
/// column.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HookShape {
    pub s: usize,
    pub t: usize,
}

impl HookShape {
    pub fn new(s: usize, t: usize) -> Result<Self> {
        if s == 0 || t == 0 {
            return Err(Error::InvalidPartition(format!("hook ({s},{t})")));
        }
        Ok(HookShape { s, t })
    }

    pub fn size(&self) -> usize {
        self.s + self.t - 1
    }

    pub fn partition(&self) -> Partition {
        let mut parts = vec![self.s];
        parts.extend(std::iter::repeat(1).take(self.t - 1));
        Partition { parts }
    }

    pub fn fits(&self, k: usize, n: usize) -> bool {
        self.t <= k && self.s + k <= n
    }

    pub fn is_row(&self) -> bool {
        self.t == 1
    }

    pub fn is_column(&self) -> bool {
        self.s == 1
    }
}

impl fmt::Display for HookShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition())
    }
}

/// Partitions of `size` inside the `k x m` box, in decreasing lexicographic
/// order.
pub fn enumerate_partitions_in_box(k: usize, m: usize, size: usize) -> Vec<Partition> {
    fn go(rows_left: usize, max_part: usize, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if rows_left == 0 || remaining > rows_left * max_part {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            cur.push(p);
            go(rows_left - 1, p, remaining - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, m, size, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap().parts(), &[2, 1]);
        assert!(Partition::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn fits() {
        let p: Partition = "2,1".parse().unwrap();
        assert!(p.fits_in(2, 2));
        assert!(!p.fits_in(1, 2));
        assert!(!p.fits_in(2, 1));
        assert_eq!(p.size(), 3);
    }

    #[test]
    fn conjugates() {
        let p: Partition = "3,1".parse().unwrap();
        assert_eq!(p.conjugate().to_string(), "2,1,1");
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn box_enumeration() {
        let ps = enumerate_partitions_in_box(2, 2, 2);
        assert_eq!(ps.iter().map(|p| p.to_string()).collect::<Vec<_>>(), vec!["2", "1,1"]);
        let ps = enumerate_partitions_in_box(2, 2, 4);
        assert_eq!(ps.iter().map(|p| p.to_string()).collect::<Vec<_>>(), vec!["2,2"]);
        assert_eq!(enumerate_partitions_in_box(3, 3, 0), vec![Partition::empty()]);
        let total: usize = (0..=9).map(|s| enumerate_partitions_in_box(3, 3, s).len()).sum();
        assert_eq!(total, 20); // binom(6, 3)
    }

    #[test]
    fn hooks() {
        let h = HookShape::new(3, 2).unwrap();
        assert_eq!(h.partition().to_string(), "3,1");
        assert_eq!(h.size(), 4);
        assert!(h.fits(2, 5));
        assert!(!h.fits(1, 5));
        assert!(!h.fits(2, 4));
    }

    #[test]
    fn text_forms() {
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(2,2)".parse::<Partition>().unwrap().to_string(), "2,2");
    }
}
