use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::FKWord;
use crate::error::{Error, Result};

/// Integer combination of commutation classes, keyed by canonical words.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FKElement {
    terms: BTreeMap<FKWord, i64>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: String,
    coeff: i64,
}

impl FKElement {
    pub fn zero() -> Self {
        FKElement::default()
    }

    /// The empty word with coefficient 1.
    pub fn one() -> Self {
        FKElement::from_word(&FKWord::empty(), 1)
    }

    pub fn from_word(word: &FKWord, c: i64) -> Self {
        let mut el = FKElement::zero();
        el.add_word(word, c);
        el
    }

    /// Add `c` times the class of `word`.
    pub fn add_word(&mut self, word: &FKWord, c: i64) {
        self.add_canonical(word.canonical(), c);
    }

    fn add_canonical(&mut self, word: FKWord, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FKWord, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coeff(&self, word: &FKWord) -> i64 {
        self.terms.get(&word.canonical()).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &FKElement) -> FKElement {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_canonical(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &FKElement) -> FKElement {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> FKElement {
        if c == 0 {
            return FKElement::zero();
        }
        FKElement { terms: self.terms.iter().map(|(w, &v)| (w.clone(), v * c)).collect() }
    }

    /// Concatenation product, canonicalized.
    pub fn mul(&self, other: &FKElement) -> FKElement {
        let mut out = FKElement::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_word(&a.concat(b), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, r: usize) -> FKElement {
        (0..r).fold(FKElement::one(), |acc, _| acc.mul(self))
    }

    /// Keep the classes satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&FKWord, i64) -> bool) -> FKElement {
        FKElement { terms: self.terms.iter().filter(|(w, &c)| keep(w, c)).map(|(w, &c)| (w.clone(), c)).collect() }
    }

    /// Membership in the nonnegative cone, read off the monomials.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Word lengths present, sorted.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(FKWord::len).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<TermJson> =
            self.terms.iter().map(|(w, &coeff)| TermJson { word: w.to_string(), coeff }).collect();
        serde_json::to_value(items).expect("plain data serializes")
    }

    /// Inverse of [`FKElement::to_json`].
    pub fn from_json(value: &serde_json::Value) -> Result<FKElement> {
        let items: Vec<TermJson> = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = FKElement::zero();
        for t in items {
            out.add_word(&t.word.parse()?, t.coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for FKElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (w, &c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FKWord {
        s.parse().unwrap()
    }

    #[test]
    fn merges_commutation_classes() {
        let mut el = FKElement::zero();
        el.add_word(&w("[(1,3),(2,4)]"), 1);
        el.add_word(&w("[(2,4),(1,3)]"), 1);
        assert_eq!(el.len(), 1);
        assert_eq!(el.coeff(&w("[(2,4),(1,3)]")), 2);
        el.add_word(&w("[(1,3),(2,4)]"), -2);
        assert!(el.is_zero());
    }

    #[test]
    fn products() {
        let a = FKElement::from_word(&w("[(3,4)]"), 1);
        let b = FKElement::from_word(&w("[(1,2)]"), 2);
        let ab = a.mul(&b);
        assert_eq!(ab.to_string(), "2*[(1,2),(3,4)]");
        assert_eq!(ab, b.mul(&a));
        assert_eq!(a.pow(0), FKElement::one());
    }

    #[test]
    fn json_shape() {
        let el = FKElement::from_word(&w("[(1,2)]"), 1);
        assert_eq!(el.to_json().to_string(), r#"[{"word":"[(1,2)]","coeff":1}]"#);
    }
}
