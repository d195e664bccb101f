//! Monomial orders and their extension to free modules.
//!
//! Every supported order is realised as a lexicographic comparison of an
//! integer key that is linear in the exponent vector. Multiplying two
//! monomials adds their keys, which is what the Groebner engine relies on.

use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Key = SmallVec<[i64; 12]>;

/// Shape of the ordering on the ring variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Graded reverse lexicographic (`dp`).
    DegRevLex,
    /// Pure lexicographic (`lp`).
    Lex,
    /// Two degrevlex blocks: variables `0..split` dominate `split..n`.
    Block { split: usize },
}

/// How monomial comparison is combined with component positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleExtension {
    /// Compare positions first; lower index is greater.
    PositionOverTerm,
    /// Compare monomials first, break ties by position (lower index greater).
    TermOverPosition,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub module_extension: ModuleExtension,
    /// Positive weights replacing the standard degree (`wp`/`Wp`).
    pub weights: Option<Vec<u32>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::degrevlex()
    }
}

impl MonomialOrder {
    pub fn degrevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            module_extension: ModuleExtension::TermOverPosition,
            weights: None,
        }
    }

    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            ..Self::degrevlex()
        }
    }

    pub fn block(split: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Block { split },
            ..Self::degrevlex()
        }
    }

    /// Weighted degree, ties broken by reverse lex.
    pub fn weighted_revlex(weights: Vec<u32>) -> Self {
        MonomialOrder {
            weights: Some(weights),
            ..Self::degrevlex()
        }
    }

    /// Weighted degree, ties broken by lex.
    pub fn weighted_lex(weights: Vec<u32>) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            weights: Some(weights),
            module_extension: ModuleExtension::TermOverPosition,
        }
    }

    pub fn with_extension(mut self, ext: ModuleExtension) -> Self {
        self.module_extension = ext;
        self
    }

    pub(crate) fn validate(&self, nvars: usize) -> Result<()> {
        if let OrderKind::Block { split } = self.kind {
            if split == 0 || split >= nvars {
                return Err(Error::InvalidRing(format!(
                    "block split {split} outside [1, {nvars})"
                )));
            }
            if self.weights.is_some() {
                return Err(Error::InvalidRing(
                    "weights are not supported on block orders".into(),
                ));
            }
        }
        if let Some(w) = &self.weights {
            if w.len() != nvars {
                return Err(Error::InvalidRing(format!(
                    "expected {nvars} weights, found {}",
                    w.len()
                )));
            }
            if w.iter().any(|&x| x == 0) {
                return Err(Error::InvalidRing("weights must be positive".into()));
            }
        }
        Ok(())
    }

    pub(crate) fn write_key(&self, exps: &[u32], out: &mut Key) {
        let n = exps.len();
        match self.kind {
            OrderKind::DegRevLex => {
                out.push(self.weighted_degree(exps));
                out.extend(exps.iter().rev().map(|&e| -(e as i64)));
            }
            OrderKind::Lex => {
                if self.weights.is_some() {
                    out.push(self.weighted_degree(exps));
                }
                out.extend(exps.iter().map(|&e| e as i64));
            }
            OrderKind::Block { split } => {
                let (a, b) = exps.split_at(split.min(n));
                out.push(a.iter().map(|&e| e as i64).sum());
                out.extend(a.iter().rev().map(|&e| -(e as i64)));
                out.push(b.iter().map(|&e| e as i64).sum());
                out.extend(b.iter().rev().map(|&e| -(e as i64)));
            }
        }
    }

    #[cfg(test)]
    pub(crate) fn mono_key(&self, exps: &[u32]) -> Key {
        let mut k = Key::new();
        self.write_key(exps, &mut k);
        k
    }

    fn weighted_degree(&self, exps: &[u32]) -> i64 {
        match &self.weights {
            Some(w) => exps
                .iter()
                .zip(w)
                .map(|(&e, &w)| e as i64 * w as i64)
                .sum(),
            None => exps.iter().map(|&e| e as i64).sum(),
        }
    }

    /// Compare two exponent vectors of equal length.
    pub fn cmp_monomials(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::DegRevLex => self
                .weighted_degree(a)
                .cmp(&self.weighted_degree(b))
                .then_with(|| revlex(a, b)),
            OrderKind::Lex => {
                let w = if self.weights.is_some() {
                    self.weighted_degree(a).cmp(&self.weighted_degree(b))
                } else {
                    Ordering::Equal
                };
                w.then_with(|| a.cmp(b))
            }
            OrderKind::Block { split } => {
                let (a1, a2) = a.split_at(split);
                let (b1, b2) = b.split_at(split);
                let d1: u64 = a1.iter().map(|&e| e as u64).sum();
                let e1: u64 = b1.iter().map(|&e| e as u64).sum();
                d1.cmp(&e1).then_with(|| revlex(a1, b1)).then_with(|| {
                    let d2: u64 = a2.iter().map(|&e| e as u64).sum();
                    let e2: u64 = b2.iter().map(|&e| e as u64).sum();
                    d2.cmp(&e2).then_with(|| revlex(a2, b2))
                })
            }
        }
    }

    /// Compare module terms `(component, exponents)` under the module extension.
    pub fn cmp_terms(&self, a: (usize, &[u32]), b: (usize, &[u32])) -> Ordering {
        match self.module_extension {
            ModuleExtension::PositionOverTerm => b
                .0
                .cmp(&a.0)
                .then_with(|| self.cmp_monomials(a.1, b.1)),
            ModuleExtension::TermOverPosition => self
                .cmp_monomials(a.1, b.1)
                .then_with(|| b.0.cmp(&a.0)),
        }
    }
}

/// Equal-degree tie break: larger iff the last differing exponent is smaller.
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::degrevlex();
        // x^2 y > x y^2 > ... in degree 3; x^3 > x^2 y
        assert_eq!(o.cmp_monomials(&[3, 0], &[2, 1]), Ordering::Greater);
        assert_eq!(o.cmp_monomials(&[1, 1, 0], &[2, 0, 0]), Ordering::Less);
        // revlex: x*z < y^2 in dp
        assert_eq!(o.cmp_monomials(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
    }

    #[test]
    fn keys_agree_with_direct_comparison() {
        let orders = [
            MonomialOrder::degrevlex(),
            MonomialOrder::lex(),
            MonomialOrder::block(2),
            MonomialOrder::weighted_revlex(vec![3, 4, 5]),
            MonomialOrder::weighted_lex(vec![3, 4, 5]),
        ];
        let monos: Vec<[u32; 3]> = (0..64)
            .map(|i| [i % 4, (i / 4) % 4, i / 16])
            .collect();
        for o in &orders {
            for a in &monos {
                for b in &monos {
                    assert_eq!(
                        o.cmp_monomials(a, b),
                        o.mono_key(a).cmp(&o.mono_key(b)),
                        "{o:?} {a:?} {b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn block_split_validated() {
        assert!(MonomialOrder::block(0).validate(3).is_err());
        assert!(MonomialOrder::block(3).validate(3).is_err());
        assert!(MonomialOrder::block(1).validate(3).is_ok());
        assert!(MonomialOrder::weighted_revlex(vec![1, 0]).validate(2).is_err());
    }
}
