use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Variables plus the monomial order; shared by reference between values.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<RingRef> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("at least one variable required".into()));
        }
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if names[..i].contains(a) {
                return Err(Error::InvalidRing(format!("duplicate variable {a}")));
            }
        }
        order.validate(names.len())?;
        Ok(Arc::new(Ring { names, order }))
    }

    /// Degrevlex ring on the given names. Panics on invalid names; meant for
    /// literals in code and tests.
    pub fn degrevlex(names: &[&str]) -> RingRef {
        Ring::new(names.iter().copied(), MonomialOrder::degrevlex()).expect("valid ring")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef> {
        Ring::new(self.names.clone(), order)
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Sparse polynomial; terms strictly descending in the ring order, no zero
/// coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &RingRef, c: Rational) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn from_int(ring: &RingRef, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, Rational::one(), Monomial::var(ring.nvars(), i))
    }

    pub fn monomial(ring: &RingRef, c: Rational, m: Monomial) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a normalized polynomial from arbitrary terms.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp_monomials(&b.0 .0, &a.0 .0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusts the caller that `terms` are already normalized for `ring`.
    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<(Monomial, Rational)>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Zero or a nonzero scalar.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Rational, &Monomial)> {
        self.terms.first().map(|(m, c)| (c, m))
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[var]).max().unwrap_or(0)
    }

    /// Total degree restricted to the variables flagged in `mask`.
    pub fn degree_in_vars(&self, mask: &[bool]) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| partial_degree(m, mask))
            .max()
            .unwrap_or(0)
    }

    /// Indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                seen[i] = true;
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.checked_mul(m2)?;
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Polynomial::from_terms(&self.ring, acc))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp_monomials(&a[i].0 .0, &b[j].0 .0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| {
            (m.clone(), if negate { -c } else { c.clone() })
        }));
        Polynomial::from_sorted_terms(&self.ring, out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| Ok((t.checked_mul(m)?, a * c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_sorted_terms(&self.ring, terms))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] > 0)
            .map(|(m, c)| {
                let mut m2 = m.clone();
                let e = m2.0[var];
                m2.0[var] -= 1;
                (m2, c * Rational::from_integer(BigInt::from(e)))
            });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Replace `x_var` by the scalar `value`.
    pub fn substitute(&self, var: usize, value: &Rational) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut m2 = m.clone();
            let e = m2.0[var];
            m2.0[var] = 0;
            (m2, c * num_traits::pow(value.clone(), e as usize))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// `self(x_var + a)`.
    pub fn shift(&self, var: usize, a: &Rational) -> Polynomial {
        if a.is_zero() {
            return self.clone();
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            // (x + a)^e = sum_k binom(e,k) a^(e-k) x^k
            let mut binom = BigInt::one();
            for k in 0..=e {
                let mut m2 = m.clone();
                m2.0[var] = k;
                let coef = c
                    * Rational::from_integer(binom.clone())
                    * num_traits::pow(a.clone(), (e - k) as usize);
                *acc.entry(m2).or_insert_with(Rational::zero) += coef;
                binom = binom * BigInt::from(e - k) / BigInt::from(k + 1);
            }
        }
        Polynomial::from_terms(&self.ring, acc)
    }

    /// Terms whose degree in the `mask` variables is at most `max_deg`.
    pub fn truncate(&self, mask: &[bool], max_deg: u64) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| partial_degree(m, mask) <= max_deg)
            .cloned()
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    /// Terms whose degree in the `mask` variables is exactly `deg`.
    pub fn homogeneous_part(&self, mask: &[bool], deg: u64) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| partial_degree(m, mask) == deg)
            .cloned()
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    /// Coefficients with respect to `var`, as `(exponent, coefficient)` with
    /// the coefficient free of `var`; ascending in the exponent.
    pub fn coefficients_in(&self, var: usize) -> Vec<(u32, Polynomial)> {
        let mut groups: HashMap<u32, Vec<(Monomial, Rational)>> = HashMap::new();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2.0[var];
            m2.0[var] = 0;
            groups.entry(e).or_default().push((m2, c.clone()));
        }
        let mut out: Vec<_> = groups
            .into_iter()
            .map(|(e, ts)| (e, Polynomial::from_terms(&self.ring, ts)))
            .collect();
        out.sort_by_key(|(e, _)| *e);
        out
    }

    /// Leading coefficient with respect to `var`.
    pub fn lc_in(&self, var: usize) -> Polynomial {
        self.coefficients_in(var)
            .pop()
            .map(|(_, c)| c)
            .unwrap_or_else(|| Polynomial::zero(&self.ring))
    }

    /// Re-embed into `target`, sending variable `i` to `var_map[i]`.
    pub fn map_ring(&self, target: &RingRef, var_map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = Monomial::one(n);
            for (i, &x) in m.0.iter().enumerate() {
                if x > 0 {
                    e.0[var_map[i]] += x;
                }
            }
            (e, c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    /// Same terms re-sorted for a ring with the same variables.
    pub fn reorder(&self, target: &RingRef) -> Polynomial {
        debug_assert_eq!(target.nvars(), self.ring.nvars());
        if same_ring(target, &self.ring) {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        let order = target.order();
        terms.sort_by(|a, b| order.cmp_monomials(&b.0 .0, &a.0 .0));
        Polynomial::from_sorted_terms(target, terms)
    }

    /// Clear denominators and divide by the integer content; positive
    /// leading coefficient.
    pub fn primitive_integer_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        use num_integer::Integer;
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            l = l.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&l / c.denom());
            g = g.gcd(&v);
        }
        let mut s = Rational::new(l, g);
        if self.terms[0].1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }
}

pub(crate) fn partial_degree(m: &Monomial, mask: &[bool]) -> u64 {
    m.0.iter()
        .zip(mask)
        .filter(|(_, &b)| b)
        .map(|(&e, _)| e as u64)
        .sum()
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication failed")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn fmt_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    /// Explicit-operator syntax (`3/2*x^2*y-z+1`) that parses back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            let mono = fmt_monomial(m, self.ring.names());
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

/// `f + g`.
pub fn poly_add(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.checked_add(g)
}

/// `f * g`.
pub fn poly_mul(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.checked_mul(g)
}
