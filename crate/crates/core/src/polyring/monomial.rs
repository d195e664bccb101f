use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Exps = SmallVec<[u32; 8]>;

/// Exponent vector of a monomial; its length equals the ring's variable count.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) Exps);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn new(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product; exponent overflow is an error rather than a wrap.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        mul_exps(&self.0, &other.0).map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        divides(&self.0, &other.0)
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(lcm(&self.0, &other.0))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

pub(crate) fn mul_exps(a: &[u32], b: &[u32]) -> Result<Exps> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(Error::ExponentOverflow))
        .collect()
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Bit `i` set iff variable `i` (mod 64) occurs; a necessary condition filter
/// for divisibility.
pub(crate) fn divmask(e: &[u32]) -> u64 {
    e.iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_is_an_error() {
        let a = Monomial::new(&[u32::MAX, 0]);
        let b = Monomial::new(&[1, 0]);
        assert_eq!(a.checked_mul(&b), Err(Error::ExponentOverflow));
    }

    #[test]
    fn lcm_and_division() {
        let a = Monomial::new(&[2, 1, 0]);
        let b = Monomial::new(&[1, 3, 1]);
        let l = a.lcm(&b);
        assert_eq!(l.exponents(), &[2, 3, 1]);
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.quotient_of(&l).exponents(), &[0, 2, 1]);
        assert_eq!(divmask(&[0, 3, 1]), 0b110);
    }
}
