use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::fk::{parse_pairs, FKWord};

/// A set of boxes `(i, j)` with `1 <= i <= k < j <= n`, stored as a bit
/// matrix over the `k x (n-k)` rectangle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Diagram {
    k: usize,
    n: usize,
    bits: u64,
}

impl Diagram {
    pub fn empty(k: usize, n: usize) -> Result<Self> {
        if k > n || k * (n - k) > 64 {
            return Err(Error::DoesNotFit { shape: "diagram".into(), k, m: n.saturating_sub(k) });
        }
        Ok(Diagram { k, n, bits: 0 })
    }

    pub fn new(k: usize, n: usize, boxes: &[(usize, usize)]) -> Result<Self> {
        let mut d = Diagram::empty(k, n)?;
        for &(i, j) in boxes {
            if i == 0 || i > k || j <= k || j > n {
                return Err(Error::DoesNotFit { shape: format!("box ({i},{j})"), k, m: n - k });
            }
            d.bits |= 1 << d.cell(i, j);
        }
        Ok(d)
    }

    /// The boxes of a word's letters.
    pub fn from_word(word: &FKWord, k: usize, n: usize) -> Result<Self> {
        let boxes: Vec<(usize, usize)> = word.letters().iter().map(|g| (g.i(), g.j())).collect();
        Diagram::new(k, n, &boxes)
    }

    pub fn parse(s: &str, k: usize, n: usize) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("diagram {s:?} must be bracketed")))?;
        Diagram::new(k, n, &parse_pairs(body)?)
    }

    fn m(&self) -> usize {
        self.n - self.k
    }

    fn cell(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.m() + (j - self.k - 1)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits >> self.cell(i, j) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        (1..=self.k)
            .cartesian_product(self.k + 1..=self.n)
            .filter(|&(i, j)| self.contains(i, j))
            .collect()
    }

    pub fn row_count(&self) -> usize {
        (1..=self.k).filter(|&i| (self.k + 1..=self.n).any(|j| self.contains(i, j))).count()
    }

    pub fn col_count(&self) -> usize {
        (self.k + 1..=self.n).filter(|&j| (1..=self.k).any(|i| self.contains(i, j))).count()
    }

    /// Edges join boxes that are consecutive within a row or a column.
    fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 1..=self.k {
            let cells: Vec<usize> =
                (self.k + 1..=self.n).filter(|&j| self.contains(i, j)).map(|j| self.cell(i, j)).collect();
            edges.extend(cells.windows(2).map(|w| (w[0], w[1])));
        }
        for j in self.k + 1..=self.n {
            let cells: Vec<usize> = (1..=self.k).filter(|&i| self.contains(i, j)).map(|i| self.cell(i, j)).collect();
            edges.extend(cells.windows(2).map(|w| (w[0], w[1])));
        }
        edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Connected components of the box graph (union-find).
    pub fn components(&self) -> usize {
        let size = self.k * self.m();
        let mut parent: Vec<usize> = (0..size).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut x = x;
            while parent[x] != r {
                let next = parent[x];
                parent[x] = r;
                x = next;
            }
            r
        }
        let mut count = self.len();
        for (a, b) in self.edges() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                count -= 1;
            }
        }
        count
    }

    /// Acyclic box graph: a graph is a forest iff `|E| = |V| - c`.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components() == self.len()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.boxes().iter().map(|(i, j)| format!("({i},{j})")).join(","))
    }
}

/// Every forest with `size` boxes in the `k x m` rectangle.
pub fn enumerate_forests(k: usize, m: usize, size: usize) -> Vec<Diagram> {
    let n = k + m;
    let cells: Vec<(usize, usize)> = (1..=k).cartesian_product(k + 1..=n).collect();
    if size > cells.len() {
        return Vec::new();
    }
    cells
        .iter()
        .copied()
        .combinations(size)
        .map(|boxes| Diagram::new(k, n, &boxes).expect("cells lie in the rectangle"))
        .filter(Diagram::is_forest)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str, k: usize, n: usize) -> Diagram {
        Diagram::parse(s, k, n).unwrap()
    }

    #[test]
    fn forest_examples() {
        assert!(d("[(1,3),(1,4),(2,3)]", 2, 4).is_forest());
        assert!(!d("[(1,3),(1,4),(2,3),(2,4)]", 2, 4).is_forest());
        assert!(d("[(2,4)]", 2, 4).is_forest());
        assert!(d("[]", 2, 4).is_forest());
    }

    #[test]
    fn structure() {
        let x = d("[(1,4),(1,6),(2,5),(3,6)]", 3, 6);
        assert_eq!(x.row_count(), 3);
        assert_eq!(x.col_count(), 3);
        assert_eq!(x.edge_count(), 2);
        assert_eq!(x.components(), 2);
        assert_eq!(x.to_string(), "[(1,4),(1,6),(2,5),(3,6)]");
    }

    #[test]
    fn forest_counts() {
        assert_eq!(enumerate_forests(1, 1, 1).len(), 1);
        // every 4-subset of the 2x2 block is the 4-cycle
        assert_eq!(enumerate_forests(2, 2, 4).len(), 0);
        assert_eq!(enumerate_forests(2, 2, 3).len(), 4);
        assert!(enumerate_forests(2, 2, 5).is_empty());
    }

    #[test]
    fn forest_counts_match_brute_force() {
        // a subset is a forest iff no row/column alternating cycle exists;
        // brute force: compare against cycle detection by DFS on the
        // row-column incidence graph, where boxes are edges
        for k in 1..=3 {
            for m in 1..=3 {
                let n = k + m;
                let cells: Vec<(usize, usize)> = (1..=k).cartesian_product(k + 1..=n).collect();
                for size in 0..=cells.len() {
                    let expected = cells
                        .iter()
                        .copied()
                        .combinations(size)
                        .filter(|boxes| bipartite_acyclic(boxes, n))
                        .count();
                    assert_eq!(enumerate_forests(k, m, size).len(), expected, "k={k} m={m} size={size}");
                }
            }
        }
    }

    fn bipartite_acyclic(boxes: &[(usize, usize)], n: usize) -> bool {
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &(i, j) in boxes {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Diagram::new(2, 4, &[(3, 4)]).is_err());
        assert!(Diagram::new(2, 4, &[(1, 2)]).is_err());
    }
}
