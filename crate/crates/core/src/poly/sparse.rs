use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent vector with trailing zeros removed, so that `Vec` ordering is
/// lexicographic order with `x_1 > x_2 > ...`.
pub type Exponent = Vec<u32>;

pub fn trim(mut e: Exponent) -> Exponent {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn add_exponents(a: &[u32], b: &[u32]) -> Exponent {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

/// Sparse polynomial with exact integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::monomial(Vec::new(), c)
    }

    pub fn monomial(exp: Exponent, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exp), c);
        }
        Poly { terms }
    }

    /// The variable with 1-based index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Poly::monomial(e, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Largest term in lex order.
    pub fn lex_max(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Smallest term in lex order.
    pub fn lex_min(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, exp: Exponent, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(trim(exp)) {
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

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, exp: &[u32]) -> Poly {
        Poly { terms: self.terms.iter().map(|(e, v)| (add_exponents(e, exp), v.clone())).collect() }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// Components grouped by total degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(e.iter().sum()).or_default().terms.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exchange `x_i` and `x_(i+1)`.
    pub fn swap_vars(&self, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut e = e.clone();
            if e.len() < i + 1 {
                e.resize(i + 1, 0);
            }
            e.swap(i - 1, i);
            out.add_term(e, c);
        }
        out
    }

    /// The divided difference `(f - s_i f) / (x_i - x_(i+1))`, computed
    /// monomial by monomial.
    pub fn divided_difference(&self, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut e = e.clone();
            if e.len() < i + 1 {
                e.resize(i + 1, 0);
            }
            let (p, r) = (e[i - 1], e[i]);
            if p == r {
                continue;
            }
            let (hi, lo, c) = if p > r { (p, r, c.clone()) } else { (r, p, -c) };
            // x^hi y^lo - x^lo y^hi = (xy)^lo (x - y) sum_{j} x^(hi-lo-1-j) y^j
            for j in 0..hi - lo {
                let mut f = e.clone();
                f[i - 1] = lo + (hi - lo - 1 - j);
                f[i] = lo + j;
                out.add_term(f, &c);
            }
        }
        out
    }

    /// Text form over the variable prefix `var`, leading term first.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = monomial_text(e, var);
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if mono == "1" {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{abs}*{mono}"));
            }
        }
        s
    }
}

/// `x1^2*x3`-style text for an exponent vector; `1` for the empty monomial.
pub fn monomial_text(e: &[u32], var: &str) -> String {
    let factors: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .map(|(i, &d)| if d == 1 { format!("{var}{}", i + 1) } else { format!("{var}{}^{d}", i + 1) })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c);
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), &-c);
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                *acc.entry(add_exponents(a, b)).or_default() += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { terms: acc }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn arithmetic() {
        let f = &x(1) + &x(2);
        let g = &f * &f;
        assert_eq!(g.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert!((&g - &g).is_zero());
        assert_eq!((&x(1) - &x(2)).to_string(), "x1 - x2");
        assert_eq!((-&x(1)).to_string(), "-x1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::constant(BigInt::from(-3)).to_string(), "-3");
    }

    #[test]
    fn divided_differences() {
        assert_eq!(x(1).divided_difference(1), Poly::one());
        assert!((&x(1) * &x(2)).divided_difference(1).is_zero());
        assert_eq!((&x(1) * &x(1)).divided_difference(1).to_string(), "x1 + x2");
        assert_eq!(x(2).divided_difference(1), -&Poly::one());
        assert!(x(3).divided_difference(1).is_zero());
    }

    #[test]
    fn divided_difference_is_exact_quotient() {
        let f = &(&(&x(1) * &x(1)) * &x(3)) + &(&x(2) * &x(2)).scale(&BigInt::from(5));
        for i in 1..=3 {
            let q = f.divided_difference(i);
            let lhs = &f - &f.swap_vars(i);
            let rhs = &q * &(&x(i) - &x(i + 1));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn lex_extremes() {
        let f = &(&x(2) * &x(2)) + &(&x(1) * &x(3));
        assert_eq!(f.lex_max().unwrap().0, &vec![1, 0, 1]);
        assert_eq!(f.lex_min().unwrap().0, &vec![0, 2]);
    }

    #[test]
    fn trailing_zeros_do_not_split_terms() {
        let mut f = Poly::monomial(vec![1, 0, 0], BigInt::one());
        f.add_term(vec![1], &BigInt::from(-1));
        assert!(f.is_zero());
    }
}
