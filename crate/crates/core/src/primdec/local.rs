//! Localization of a submodule at an ideal.

use std::collections::BTreeMap;

use super::minass::min_ass;
use super::types::PrimeIdeal;
use crate::error::Result;
use crate::groebner::{
    annihilator, buchberger, canonical, dimension, intersect_all, quotient, saturate,
};
use crate::polyring::Submodule;

/// Intersection of the primes in `primes` that survive localization at
/// `j`, meaning `dim(J + P) = dim(J)`; the unit ideal when none do.
pub fn localize_radical_ideal(
    h: &Submodule,
    j: &Submodule,
    primes: &[PrimeIdeal],
) -> Result<Submodule> {
    let dim_j = dimension(j);
    let mut kept = Vec::new();
    for p in primes {
        if dimension(&j.concat(&p.ideal)?) == dim_j {
            kept.push(p.ideal.clone());
        }
    }
    if kept.is_empty() {
        return Ok(Submodule::unit_ideal(h.ring()));
    }
    intersect_all(&kept)
}

/// `A_[J]`: the components of `A` whose primes lie inside `J` in the
/// sense of [`localize_radical_ideal`]. `primes` lists the associated
/// primes to work with; without it the minimal primes of `Ann(F/A)` are
/// used.
pub fn localize_module(
    a: &Submodule,
    j: &Submodule,
    primes: Option<&[PrimeIdeal]>,
) -> Result<Submodule> {
    let ann = annihilator(a)?;
    if buchberger(&ann).is_whole() {
        return Ok(canonical(a));
    }
    let owned;
    let primes = match primes {
        Some(p) => p,
        None => {
            owned = min_ass(&ann)?;
            &owned
        }
    };
    let mut groups: BTreeMap<usize, Vec<PrimeIdeal>> = BTreeMap::new();
    for p in primes {
        groups.entry(p.codim).or_default().push(p.clone());
    }
    let mut parts = Vec::new();
    for group in groups.values() {
        let ideals: Vec<Submodule> = group.iter().map(|p| p.ideal.clone()).collect();
        let h = intersect_all(&ideals)?;
        let g = localize_radical_ideal(&h, j, group)?;
        parts.push(quotient(&h, &g)?);
    }
    if parts.is_empty() {
        return Ok(canonical(a));
    }
    let k = intersect_all(&parts)?;
    Ok(saturate(a, &k)?.module)
}
