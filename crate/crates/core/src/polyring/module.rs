use std::fmt;

use num_traits::Zero;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::poly::{same_ring, Polynomial, Rational, RingRef};
use crate::error::{Error, Result};

/// Element of the free module `R^s`, stored as its `s` coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeElement {
    comps: Vec<Polynomial>,
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FreeElement {
    pub fn new(comps: Vec<Polynomial>) -> Self {
        FreeElement { comps }
    }

    pub fn zero(ring: &RingRef, rank: usize) -> Self {
        FreeElement {
            comps: vec![Polynomial::zero(ring); rank],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn basis(ring: &RingRef, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.comps[i] = Polynomial::one(ring);
        v
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn into_comps(self) -> Vec<Polynomial> {
        self.comps
    }

    pub fn comp(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn checked_add(&self, other: &FreeElement) -> Result<FreeElement> {
        self.check_rank(other)?;
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(FreeElement { comps })
    }

    pub fn checked_sub(&self, other: &FreeElement) -> Result<FreeElement> {
        self.check_rank(other)?;
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.checked_sub(b))
            .collect::<Result<_>>()?;
        Ok(FreeElement { comps })
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Result<FreeElement> {
        let comps = self
            .comps
            .iter()
            .map(|a| a.checked_mul(f))
            .collect::<Result<_>>()?;
        Ok(FreeElement { comps })
    }

    pub fn scale(&self, c: &Rational) -> FreeElement {
        FreeElement {
            comps: self.comps.iter().map(|a| a.scale(c)).collect(),
        }
    }

    fn check_rank(&self, other: &FreeElement) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(())
    }

    /// Order-maximal term as `(component, coefficient, monomial)`; the
    /// component index is 0-based.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(usize, Rational, Monomial)> {
        let mut best: Option<(usize, &Rational, &Monomial)> = None;
        for (i, p) in self.comps.iter().enumerate() {
            // Within a component, the first term is the largest only when
            // the polynomial was sorted by this same order.
            for (m, c) in p.terms() {
                let better = match best {
                    None => true,
                    Some((bi, _, bm)) => {
                        order.cmp_terms((i, &m.0), (bi, &bm.0)) == std::cmp::Ordering::Greater
                    }
                };
                if better {
                    best = Some((i, c, m));
                }
            }
        }
        best.map(|(i, c, m)| (i, c.clone(), m.clone()))
            .ok_or(Error::ZeroElement)
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Finitely generated submodule of `R^rank`, equivalently a `rank x k`
/// matrix whose columns are the generators. Zero columns are kept.
#[derive(Clone, PartialEq, Eq)]
pub struct Submodule {
    ring: RingRef,
    rank: usize,
    gens: Vec<FreeElement>,
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule(rank {}: {self})", self.rank)
    }
}

impl Submodule {
    pub fn new(ring: &RingRef, rank: usize, gens: Vec<FreeElement>) -> Result<Self> {
        for g in &gens {
            if g.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: g.rank(),
                });
            }
            if g.comps.iter().any(|p| !same_ring(p.ring(), ring)) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            gens,
        })
    }

    pub(crate) fn from_parts(ring: &RingRef, rank: usize, gens: Vec<FreeElement>) -> Self {
        debug_assert!(gens.iter().all(|g| g.rank() == rank));
        Submodule {
            ring: ring.clone(),
            rank,
            gens,
        }
    }

    pub fn ideal(ring: &RingRef, polys: Vec<Polynomial>) -> Result<Self> {
        let gens = polys.into_iter().map(|p| FreeElement::new(vec![p])).collect();
        Self::new(ring, 1, gens)
    }

    /// The whole free module `R^rank`, generated by the standard basis.
    pub fn free(ring: &RingRef, rank: usize) -> Self {
        let gens = (0..rank).map(|i| FreeElement::basis(ring, rank, i)).collect();
        Self::from_parts(ring, rank, gens)
    }

    pub fn zero(ring: &RingRef, rank: usize) -> Self {
        Self::from_parts(ring, rank, Vec::new())
    }

    pub fn unit_ideal(ring: &RingRef) -> Self {
        Self::free(ring, 1)
    }

    /// Matrix from row-major entries.
    pub fn from_rows(ring: &RingRef, rows: Vec<Vec<Polynomial>>, ncols: usize) -> Result<Self> {
        let nrows = rows.len();
        let mut cols: Vec<Vec<Polynomial>> = vec![Vec::with_capacity(nrows); ncols];
        for row in rows {
            if row.len() != ncols {
                return Err(Error::ShapeMismatch(format!(
                    "row of length {} in a matrix with {ncols} columns",
                    row.len()
                )));
            }
            for (c, p) in row.into_iter().enumerate() {
                cols[c].push(p);
            }
        }
        let gens = cols.into_iter().map(FreeElement::new).collect();
        Self::new(ring, nrows, gens)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[FreeElement] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<FreeElement> {
        self.gens
    }

    pub fn gen(&self, i: usize) -> &FreeElement {
        &self.gens[i]
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.gens[col].comps[row]
    }

    pub fn is_ideal(&self) -> bool {
        self.rank == 1
    }

    /// Generators of a rank-one submodule as polynomials.
    pub fn ideal_gens(&self) -> Result<Vec<Polynomial>> {
        if self.rank != 1 {
            return Err(Error::NotIdeal(self.rank));
        }
        Ok(self.gens.iter().map(|g| g.comps[0].clone()).collect())
    }

    /// True if every generator is zero (or there are none).
    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(FreeElement::is_zero)
    }

    pub fn without_zero_gens(&self) -> Submodule {
        let gens = self.gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        Self::from_parts(&self.ring, self.rank, gens)
    }

    pub fn push(&mut self, g: FreeElement) -> Result<()> {
        if g.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: g.rank(),
            });
        }
        self.gens.push(g);
        Ok(())
    }

    pub fn transpose(&self) -> Submodule {
        let k = self.gens.len();
        let gens = (0..self.rank)
            .map(|r| FreeElement::new((0..k).map(|c| self.entry(r, c).clone()).collect()))
            .collect();
        Self::from_parts(&self.ring, k, gens)
    }

    /// Matrix product `self * other`; `other` has one row per column of `self`.
    pub fn matmul(&self, other: &Submodule) -> Result<Submodule> {
        if other.rank != self.ngens() {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rank,
                self.ngens(),
                other.rank,
                other.ngens()
            )));
        }
        let gens = other
            .gens
            .iter()
            .map(|col| self.combine(col.comps()))
            .collect::<Result<_>>()?;
        Ok(Self::from_parts(&self.ring, self.rank, gens))
    }

    /// `sum_i coeffs[i] * gen(i)`.
    pub fn combine(&self, coeffs: &[Polynomial]) -> Result<FreeElement> {
        if coeffs.len() != self.ngens() {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for {} generators",
                coeffs.len(),
                self.ngens()
            )));
        }
        let mut out: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); self.rank];
        for (c, g) in coeffs.iter().zip(&self.gens) {
            if c.is_zero() {
                continue;
            }
            for (r, p) in g.comps.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                out[r].extend(c.checked_mul(p)?.into_terms());
            }
        }
        Ok(FreeElement::new(
            out.into_iter()
                .map(|ts| Polynomial::from_terms(&self.ring, ts))
                .collect(),
        ))
    }

    /// Column concatenation (sum of submodules).
    pub fn concat(&self, other: &Submodule) -> Result<Submodule> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_parts(&self.ring, self.rank, gens))
    }

    /// `J * self`: products of every ideal generator with every generator.
    pub fn ideal_product(&self, j: &Submodule) -> Result<Submodule> {
        let polys = j.ideal_gens()?;
        let mut gens = Vec::new();
        for f in &polys {
            if f.is_zero() {
                continue;
            }
            for g in &self.gens {
                gens.push(g.mul_poly(f)?);
            }
        }
        Ok(Self::from_parts(&self.ring, self.rank, gens))
    }

    /// Drops row `r` (a coordinate of the ambient module).
    pub fn delete_row(&self, r: usize) -> Submodule {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut comps = g.comps.clone();
                comps.remove(r);
                FreeElement::new(comps)
            })
            .collect();
        Self::from_parts(&self.ring, self.rank - 1, gens)
    }

    pub fn delete_col(&self, c: usize) -> Submodule {
        let mut gens = self.gens.clone();
        gens.remove(c);
        Self::from_parts(&self.ring, self.rank, gens)
    }

    /// Largest total degree over all entries, 0 for the zero matrix.
    pub fn max_degree(&self) -> u64 {
        self.gens
            .iter()
            .flat_map(|g| g.comps.iter())
            .filter_map(Polynomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens
            .iter()
            .flat_map(|g| g.comps.iter())
            .all(|p| p.len() <= 1)
    }

    pub fn has_zero_entries_only(&self) -> bool {
        self.gens.iter().all(|g| g.comps.iter().all(|p| p.is_zero()))
    }

    pub fn constant_entry(&self, row: usize, col: usize) -> Option<Rational> {
        let v = self.entry(row, col).constant_value()?;
        (!v.is_zero()).then_some(v)
    }
}

impl fmt::Display for Submodule {
    /// Ideals print as a comma-separated list of polynomials, modules as a
    /// list of bracketed vectors; no generators prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if self.rank == 1 {
                write!(f, "{}", g.comps[0])?;
            } else {
                write!(f, "{g}")?;
            }
        }
        Ok(())
    }
}

/// Free-function form of [`FreeElement::leading_term`].
pub fn leading_term(v: &FreeElement, order: &MonomialOrder) -> Result<(usize, Rational, Monomial)> {
    v.leading_term(order)
}
