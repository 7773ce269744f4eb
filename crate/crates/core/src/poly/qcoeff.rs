use std::fmt;
use std::ops::{AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::One;

use super::sparse::{monomial_text, Exponent, Poly};

/// Integer polynomial in the quantum parameters `q_1, ..., q_(n-1)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct QCoeff(Poly);

impl QCoeff {
    pub fn zero() -> Self {
        QCoeff(Poly::zero())
    }

    pub fn one() -> Self {
        QCoeff(Poly::one())
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        QCoeff(Poly::constant(c.into()))
    }

    pub fn monomial(exp: Exponent, c: impl Into<BigInt>) -> Self {
        QCoeff(Poly::monomial(exp, c.into()))
    }

    /// `q_ij = q_i q_(i+1) ... q_(j-1)`.
    pub fn q_range(i: usize, j: usize) -> Self {
        let mut e = vec![0; j - 1];
        for d in &mut e[i - 1..] {
            *d = 1;
        }
        QCoeff::monomial(e, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> {
        self.0.terms()
    }

    pub fn add_term(&mut self, exp: Exponent, c: &BigInt) {
        self.0.add_term(exp, c);
    }

    pub fn scale(&self, c: &BigInt) -> QCoeff {
        QCoeff(self.0.scale(c))
    }

    pub fn mul_monomial(&self, exp: &[u32]) -> QCoeff {
        QCoeff(self.0.mul_monomial(exp))
    }

    /// Value at `q = 0`.
    pub fn classical_part(&self) -> BigInt {
        self.0.coeff(&[])
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.is_nonnegative()
    }

    pub fn as_poly(&self) -> &Poly {
        &self.0
    }
}

/// `q1^2*q3`-style text; `1` for the trivial monomial.
pub fn q_monomial_text(e: &[u32]) -> String {
    monomial_text(e, "q")
}

impl fmt::Display for QCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.to_text("q"))
    }
}

impl AddAssign<&QCoeff> for QCoeff {
    fn add_assign(&mut self, rhs: &QCoeff) {
        self.0 += &rhs.0;
    }
}

impl Mul for &QCoeff {
    type Output = QCoeff;
    fn mul(self, rhs: &QCoeff) -> QCoeff {
        if rhs.0 == Poly::one() {
            return self.clone();
        }
        QCoeff(&self.0 * &rhs.0)
    }
}

impl From<i64> for QCoeff {
    fn from(c: i64) -> Self {
        QCoeff::from_int(c)
    }
}

impl One for QCoeff {
    fn one() -> Self {
        QCoeff::one()
    }
}

impl Mul for QCoeff {
    type Output = QCoeff;
    fn mul(self, rhs: QCoeff) -> QCoeff {
        &self * &rhs
    }
}
