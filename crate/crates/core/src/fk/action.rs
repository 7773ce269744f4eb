use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::element::FKElement;
use super::word::{FKWord, Generator};
use crate::combinatorics::{enumerate_sn, Permutation};
use crate::poly::{q_monomial_text, trim_exponent, Exponent, QCoeff, Ring};

/// Finitely supported combination `sum c_w(q) sigma_w`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchubertVector {
    terms: BTreeMap<Permutation, QCoeff>,
}

impl SchubertVector {
    pub fn zero() -> Self {
        SchubertVector::default()
    }

    pub fn basis(w: &Permutation) -> Self {
        let mut v = SchubertVector::zero();
        v.add_term(w.clone(), &QCoeff::one());
        v
    }

    pub fn add_term(&mut self, w: Permutation, c: &QCoeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &SchubertVector, c: &QCoeff) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), &(d * c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &QCoeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> QCoeff {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Coefficients split by `(permutation, q-exponent)`.
    pub fn flatten(&self) -> BTreeMap<(Permutation, Exponent), BigInt> {
        self.terms
            .iter()
            .flat_map(|(w, c)| c.terms().map(move |(e, v)| ((w.clone(), e.clone()), v.clone())))
            .collect()
    }

    /// Specialization `q = 0`.
    pub fn classical_part(&self) -> BTreeMap<Permutation, BigInt> {
        self.terms
            .iter()
            .map(|(w, c)| (w.clone(), c.classical_part()))
            .filter(|(_, c)| *c != BigInt::from(0))
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(QCoeff::is_nonnegative)
    }

    /// `{perm: {q-monomial: int}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut outer = serde_json::Map::new();
        for (w, c) in &self.terms {
            let mut inner = serde_json::Map::new();
            for (e, v) in c.terms() {
                inner.insert(q_monomial_text(e), json_int(v));
            }
            outer.insert(w.to_string(), serde_json::Value::Object(inner));
        }
        serde_json::Value::Object(outer)
    }
}

/// An integer as a JSON number, or as a string when it exceeds `i64`.
pub fn json_int(v: &BigInt) -> serde_json::Value {
    match i64::try_from(v) {
        Ok(x) => serde_json::Value::from(x),
        Err(_) => serde_json::Value::String(v.to_string()),
    }
}

impl fmt::Display for SchubertVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})*s[{w}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// One Bruhat step on a basis vector: the new permutation and whether the
/// quantum factor `q_ij` is picked up.
pub fn bruhat_step(g: Generator, w: &Permutation, quantum: bool) -> Option<(Permutation, bool)> {
    let (i, j) = (g.i(), g.j());
    if j > w.n() {
        return None;
    }
    let d = w.length_change(i, j);
    if d == 1 {
        Some((w.swap(i, j), false))
    } else if quantum && d == 1 - 2 * (j - i) as isize {
        Some((w.swap(i, j), true))
    } else {
        None
    }
}

/// Act by a word on `sigma_w`, first letter first. The result is a single
/// basis vector times a `q`-monomial, or zero.
pub fn apply_word_to_basis(word: &FKWord, w: &Permutation, quantum: bool) -> Option<(Permutation, Exponent)> {
    let mut cur = w.clone();
    let mut q: Exponent = Vec::new();
    for &g in word.letters() {
        let (next, hit_q) = bruhat_step(g, &cur, quantum)?;
        if hit_q {
            if q.len() < g.j() - 1 {
                q.resize(g.j() - 1, 0);
            }
            for d in &mut q[g.i() - 1..g.j() - 1] {
                *d += 1;
            }
        }
        cur = next;
    }
    Some((cur, trim_exponent(q)))
}

pub fn bruhat_apply(g: Generator, v: &SchubertVector, quantum: bool) -> SchubertVector {
    let mut out = SchubertVector::zero();
    for (w, c) in v.terms() {
        if let Some((u, hit_q)) = bruhat_step(g, w, quantum) {
            let c = if hit_q { c * &QCoeff::q_range(g.i(), g.j()) } else { c.clone() };
            out.add_term(u, &c);
        }
    }
    out
}

pub fn apply_element(el: &FKElement, v: &SchubertVector, quantum: bool) -> SchubertVector {
    let mut out = SchubertVector::zero();
    for (w, c) in v.terms() {
        let mut acc: BTreeMap<(Permutation, Exponent), i64> = BTreeMap::new();
        for (word, k) in el.terms() {
            if let Some(hit) = apply_word_to_basis(word, w, quantum) {
                *acc.entry(hit).or_insert(0) += k;
            }
        }
        for ((u, e), k) in acc {
            if k != 0 {
                out.add_term(u, &c.mul_monomial(&e).scale(&BigInt::from(k)));
            }
        }
    }
    out
}

/// A linear operator on the Schubert basis of `S_n`, stored column by
/// column (the image of every `sigma_w`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchubertOperator {
    n: usize,
    columns: BTreeMap<Permutation, SchubertVector>,
}

/// Where two operators first disagree: basis vector `v`, output `w`,
/// q-monomial, and the two coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Discrepancy {
    pub v: Permutation,
    pub w: Permutation,
    pub q: Exponent,
    pub left: BigInt,
    pub right: BigInt,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "on s[{}]: coefficient of {}*s[{}] is {} vs {}",
            self.v,
            q_monomial_text(&self.q),
            self.w,
            self.left,
            self.right
        )
    }
}

impl SchubertOperator {
    pub fn from_columns(n: usize, f: impl Fn(&Permutation) -> SchubertVector + Sync) -> Self {
        let columns = enumerate_sn(n).into_par_iter().map(|w| {
            let image = f(&w);
            (w, image)
        });
        SchubertOperator { n, columns: columns.collect::<Vec<_>>().into_iter().collect() }
    }

    pub fn from_element(el: &FKElement, n: usize, quantum: bool) -> Self {
        SchubertOperator::from_columns(n, |w| apply_element(el, &SchubertVector::basis(w), quantum))
    }

    pub fn identity(n: usize) -> Self {
        SchubertOperator::from_columns(n, SchubertVector::basis)
    }

    pub fn zero(n: usize) -> Self {
        SchubertOperator::from_columns(n, |_| SchubertVector::zero())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn column(&self, w: &Permutation) -> &SchubertVector {
        &self.columns[w]
    }

    pub fn columns(&self) -> impl Iterator<Item = (&Permutation, &SchubertVector)> {
        self.columns.iter()
    }

    pub fn apply(&self, v: &SchubertVector) -> SchubertVector {
        let mut out = SchubertVector::zero();
        for (w, c) in v.terms() {
            out.add_assign_scaled(&self.columns[w], c);
        }
        out
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &SchubertOperator) -> SchubertOperator {
        SchubertOperator::from_columns(self.n, |w| next.apply(&self.columns[w]))
    }

    pub fn scale(&self, c: &QCoeff) -> SchubertOperator {
        SchubertOperator::from_columns(self.n, |w| {
            let mut out = SchubertVector::zero();
            out.add_assign_scaled(&self.columns[w], c);
            out
        })
    }

    pub fn plus(&self, other: &SchubertOperator) -> SchubertOperator {
        self.combine(other, 1)
    }

    pub fn minus(&self, other: &SchubertOperator) -> SchubertOperator {
        self.combine(other, -1)
    }

    fn combine(&self, other: &SchubertOperator, sign: i64) -> SchubertOperator {
        let s = QCoeff::from_int(sign);
        SchubertOperator::from_columns(self.n, |w| {
            let mut out = self.columns[w].clone();
            out.add_assign_scaled(&other.columns[w], &s);
            out
        })
    }

    pub fn is_zero(&self) -> bool {
        self.columns.values().all(SchubertVector::is_zero)
    }

    /// Specialization `q = 0`.
    pub fn classical_part(&self) -> SchubertOperator {
        SchubertOperator::from_columns(self.n, |w| {
            let mut out = SchubertVector::zero();
            for (u, c) in self.columns[w].classical_part() {
                out.add_term(u, &QCoeff::from_int(c));
            }
            out
        })
    }

    /// The smallest `(v, w, q)` where the operators differ.
    pub fn first_difference(&self, other: &SchubertOperator) -> Option<Discrepancy> {
        for (v, col) in &self.columns {
            let (a, b) = (col.flatten(), other.columns[v].flatten());
            if a == b {
                continue;
            }
            let keys: std::collections::BTreeSet<_> = a.keys().chain(b.keys()).collect();
            for key in keys {
                let (l, r) = (a.get(key).cloned().unwrap_or_default(), b.get(key).cloned().unwrap_or_default());
                if l != r {
                    return Some(Discrepancy { v: v.clone(), w: key.0.clone(), q: key.1.clone(), left: l, right: r });
                }
            }
        }
        None
    }
}

impl Ring for SchubertOperator {
    fn add(&self, other: &Self) -> Self {
        self.plus(other)
    }
    fn sub(&self, other: &Self) -> Self {
        self.minus(other)
    }
    fn mul(&self, other: &Self) -> Self {
        other.then(self)
    }
    fn is_zero(&self) -> bool {
        SchubertOperator::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn g(i: usize, j: usize) -> Generator {
        Generator::new(i, j).unwrap()
    }

    #[test]
    fn bruhat_examples() {
        let id = SchubertVector::basis(&p("1 2"));
        let s = SchubertVector::basis(&p("2 1"));
        assert_eq!(bruhat_apply(g(1, 2), &id, false), s);
        assert!(bruhat_apply(g(1, 2), &s, false).is_zero());
        let mut expected = SchubertVector::zero();
        expected.add_term(p("1 2"), &QCoeff::q_range(1, 2));
        assert_eq!(bruhat_apply(g(1, 2), &s, true), expected);
    }

    #[test]
    fn element_action() {
        let mut el = FKElement::zero();
        el.add_word(&"[(1,2)]".parse().unwrap(), 1);
        el.add_word(&"[(1,3)]".parse().unwrap(), 1);
        let out = apply_element(&el, &SchubertVector::basis(&p("1 2 3")), false);
        assert_eq!(out, SchubertVector::basis(&p("2 1 3")));
        let v = SchubertVector::basis(&p("1 3 2"));
        assert_eq!(apply_element(&FKElement::one(), &v, true), v);
    }

    #[test]
    fn word_action_matches_letterwise() {
        let word: FKWord = "[(1,3),(2,3),(1,2)]".parse().unwrap();
        for w in enumerate_sn(3) {
            for quantum in [false, true] {
                let mut v = SchubertVector::basis(&w);
                for &l in word.letters() {
                    v = bruhat_apply(l, &v, quantum);
                }
                let el = FKElement::from_word(&word, 1);
                assert_eq!(apply_element(&el, &SchubertVector::basis(&w), quantum), v);
            }
        }
    }

    #[test]
    fn json_form() {
        let mut v = SchubertVector::zero();
        v.add_term(p("1 2"), &QCoeff::q_range(1, 2));
        assert_eq!(v.to_json().to_string(), r#"{"1 2":{"q1":1}}"#);
    }

    #[test]
    fn discrepancy_is_reported() {
        let id = SchubertOperator::identity(3);
        let z = SchubertOperator::zero(3);
        let d = id.first_difference(&z).unwrap();
        assert_eq!(d.v, p("1 2 3"));
        assert_eq!(d.left, BigInt::from(1));
        assert!(id.first_difference(&id).is_none());
    }
}
