use std::fmt;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::fk::{dunkl_symmetric_operator, initial_segment, FKElement, PieriKind};

/// Full-width rectangle `(n-k)^r` or full-height rectangle `t^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rectangle {
    Rows(usize),
    Columns(usize),
}

impl Rectangle {
    pub fn partition(&self, k: usize, n: usize) -> Partition {
        let parts = match *self {
            Rectangle::Rows(r) => vec![n - k; r],
            Rectangle::Columns(t) => vec![t; k],
        };
        Partition::new(parts).expect("rectangles are partitions")
    }

    pub fn fits(&self, k: usize, n: usize) -> bool {
        match *self {
            Rectangle::Rows(r) => r >= 1 && r <= k,
            Rectangle::Columns(t) => t >= 1 && t + k <= n,
        }
    }

    /// The Pieri sum whose power gives the rectangle, and the exponent.
    pub fn factor(&self, k: usize, n: usize) -> (FKElement, usize) {
        let set = initial_segment(k);
        match *self {
            Rectangle::Rows(r) => (dunkl_symmetric_operator(PieriKind::H, n - k, &set, n), r),
            Rectangle::Columns(t) => (dunkl_symmetric_operator(PieriKind::E, k, &set, n), t),
        }
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rectangle::Rows(r) => write!(f, "rows={r}"),
            Rectangle::Columns(t) => write!(f, "columns={t}"),
        }
    }
}

fn check(rect: Rectangle, k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n || !rect.fits(k, n) {
        return Err(Error::DoesNotFit { shape: rect.to_string(), k, m: n.saturating_sub(k) });
    }
    Ok(())
}

/// The full power of the Pieri sum, before any class is dropped.
pub fn rectangle_power(rect: Rectangle, k: usize, n: usize) -> Result<FKElement> {
    check(rect, k, n)?;
    let (factor, r) = rect.factor(k, n);
    Ok(factor.pow(r))
}

/// `s_rect(theta_1..theta_k)`: the power of the Pieri sum with every class
/// containing a repeated letter removed.
pub fn rectangle_expansion(rect: Rectangle, k: usize, n: usize) -> Result<FKElement> {
    Ok(rectangle_power(rect, k, n)?.filter(|w, _| !w.has_repeated_letter()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_powers_are_pieri_sums() {
        let set = initial_segment(2);
        assert_eq!(
            rectangle_expansion(Rectangle::Rows(1), 2, 5).unwrap(),
            dunkl_symmetric_operator(PieriKind::H, 3, &set, 5)
        );
        assert_eq!(
            rectangle_expansion(Rectangle::Columns(1), 2, 5).unwrap(),
            dunkl_symmetric_operator(PieriKind::E, 2, &set, 5)
        );
    }

    #[test]
    fn shapes() {
        assert_eq!(Rectangle::Rows(2).partition(2, 4).to_string(), "2,2");
        assert_eq!(Rectangle::Columns(3).partition(2, 5).to_string(), "3,3");
        assert!(rectangle_expansion(Rectangle::Rows(3), 2, 4).is_err());
        assert!(rectangle_expansion(Rectangle::Columns(3), 2, 4).is_err());
    }

    #[test]
    fn nonnegative_and_homogeneous() {
        let el = rectangle_expansion(Rectangle::Rows(2), 2, 4).unwrap();
        assert!(el.is_nonnegative());
        assert_eq!(el.degrees(), vec![4]);
    }
}
