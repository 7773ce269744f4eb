use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Generator `x_ij` with `i < j`. Ordered by `(i, j)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Generator {
    i: u8,
    j: u8,
}

impl Generator {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j || j > u8::MAX as usize {
            return Err(Error::Parse(format!("generator x_({i},{j}) needs 1 <= i < j")));
        }
        Ok(Generator { i: i as u8, j: j as u8 })
    }

    pub(crate) fn new_unchecked(i: usize, j: usize) -> Self {
        debug_assert!(0 < i && i < j);
        Generator { i: i as u8, j: j as u8 }
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    /// Letters commute exactly when their four indices are distinct.
    pub fn commutes_with(&self, other: &Generator) -> bool {
        self.i != other.i && self.i != other.j && self.j != other.i && self.j != other.j
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A word `x_(g1) x_(g2) ...` in the generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct FKWord(Vec<Generator>);

impl FKWord {
    pub fn new(letters: Vec<Generator>) -> Self {
        FKWord(letters)
    }

    pub fn empty() -> Self {
        FKWord(Vec::new())
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        pairs.iter().map(|&(i, j)| Generator::new(i, j)).collect::<Result<Vec<_>>>().map(FKWord)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &FKWord) -> FKWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        FKWord(letters)
    }

    pub fn has_repeated_letter(&self) -> bool {
        !self.0.iter().all_unique()
    }

    /// Lexicographically smallest word in the commutation class: repeatedly
    /// take the smallest letter that commutes with everything still in
    /// front of it.
    pub fn canonical(&self) -> FKWord {
        let mut rest = self.0.clone();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for p in 0..rest.len() {
                if best.is_some_and(|b| rest[b] <= rest[p]) {
                    continue;
                }
                if rest[..p].iter().all(|g| g.commutes_with(&rest[p])) {
                    best = Some(p);
                }
            }
            out.push(rest.remove(best.expect("the first letter is always free")));
        }
        FKWord(out)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    /// Every word in the commutation class, found by closing under swaps of
    /// adjacent commuting letters. Exponential; meant for short words.
    pub fn commutation_class(&self) -> Vec<FKWord> {
        let mut seen = std::collections::BTreeSet::from([self.clone()]);
        let mut stack = vec![self.clone()];
        while let Some(w) = stack.pop() {
            for p in 0..w.len().saturating_sub(1) {
                if w.0[p].commutes_with(&w.0[p + 1]) {
                    let mut v = w.clone();
                    v.0.swap(p, p + 1);
                    if seen.insert(v.clone()) {
                        stack.push(v);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }
}

/// Canonical form of `word`.
pub fn canonicalize(word: &FKWord) -> FKWord {
    word.canonical()
}

impl fmt::Display for FKWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

impl FromStr for FKWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("word {s:?} must be bracketed")))?;
        let pairs = parse_pairs(body)?;
        FKWord::from_pairs(&pairs)
    }
}

/// Parse `(1,3),(2,4)` into index pairs.
pub(crate) fn parse_pairs(body: &str) -> Result<Vec<(usize, usize)>> {
    let cleaned: String = body.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Ok(Vec::new());
    }
    let inner = cleaned
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("bad pair list {body:?}")))?;
    inner
        .split("),(")
        .map(|pair| {
            let (a, b) = pair.split_once(',').ok_or_else(|| Error::Parse(format!("bad pair {pair:?}")))?;
            let a = a.parse().map_err(|_| Error::Parse(format!("bad index {a:?}")))?;
            let b = b.parse().map_err(|_| Error::Parse(format!("bad index {b:?}")))?;
            Ok((a, b))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FKWord {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(w("[(3,4),(1,2)]").canonical(), w("[(1,2),(3,4)]"));
        assert_eq!(w("[(1,2),(1,3)]").canonical(), w("[(1,2),(1,3)]"));
        assert_eq!(w("[(1,2),(3,4),(1,3)]").canonical(), w("[(1,2),(3,4),(1,3)]"));
    }

    #[test]
    fn greedy_beats_adjacent_bubbling() {
        // (2,5) commutes with both others and (3,4), (1,3) do not commute;
        // no adjacent swap of commuting letters lowers the word.
        let word = w("[(3,4),(1,3),(2,5)]");
        assert_eq!(word.canonical(), w("[(2,5),(3,4),(1,3)]"));
        assert_eq!(word.canonical(), word.commutation_class()[0]);
    }

    #[test]
    fn text_round_trip() {
        let word = w("[(1,3),(2,4)]");
        assert_eq!(word.to_string(), "[(1,3),(2,4)]");
        assert_eq!(w("[ (1, 3), (2,4) ]"), word);
        assert_eq!(w("[]"), FKWord::empty());
        assert!("[(2,1)]".parse::<FKWord>().is_err());
        assert!("(1,2)".parse::<FKWord>().is_err());
    }

    #[test]
    fn commutation() {
        let g = |i, j| Generator::new(i, j).unwrap();
        assert!(g(1, 2).commutes_with(&g(3, 4)));
        assert!(!g(1, 2).commutes_with(&g(2, 3)));
        assert!(!g(1, 2).commutes_with(&g(1, 2)));
    }
}
