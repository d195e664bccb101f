//! Extraction of primary components and the full decomposition.

use super::local::localize_module;
use super::minass::min_ass_seeded;
use super::types::{Component, DecompositionResult, PrimeIdeal, TraceStep};
use crate::error::{Error, Result};
use crate::groebner::{
    annihilator, buchberger, canonical, codim, intersect, intersect_all, is_sub, is_sub_gb,
    saturate,
};
use crate::homology::{equidim_hull, ext_annihilators};
use crate::polyring::Submodule;

pub const DEFAULT_BOUND: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimdecConfig {
    /// Selects the sequence of linear forms tried when splitting primes.
    pub seed: u64,
    /// Largest power of the prime tried for one component.
    pub bound: usize,
}

impl Default for PrimdecConfig {
    fn default() -> Self {
        PrimdecConfig {
            seed: 0,
            bound: DEFAULT_BOUND,
        }
    }
}

/// A component together with the power of the prime that produced it and
/// every candidate tried on the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub primary: Submodule,
    pub power: usize,
    pub trace: Vec<TraceStep>,
}

/// A `P`-primary component of `F/A` of the form `hull(A + P^m F)`.
/// `primes` lists the associated primes of `F/A` used for localizing.
pub fn primary_component(
    a: &Submodule,
    p: &PrimeIdeal,
    primes: &[PrimeIdeal],
    bound: usize,
) -> Result<Extraction> {
    let ring = a.ring();
    let local = localize_module(a, &p.ideal, Some(primes))?;
    let local_gb = buchberger(&local);
    let beyond = saturate(&local, &p.ideal)?.module;
    let mut power_part = Submodule::free(ring, a.rank()).ideal_product(&p.ideal)?;
    let mut trace = Vec::new();
    for m in 1..=bound {
        let candidate = equidim_hull(&a.concat(&power_part)?)?;
        let accepted = is_sub_gb(&intersect(&beyond, &candidate)?, &local_gb)?;
        trace.push(TraceStep {
            prime: p.ideal.clone(),
            power: m,
            candidate: candidate.clone(),
            accepted,
        });
        if accepted {
            return Ok(Extraction {
                primary: candidate,
                power: m,
                trace,
            });
        }
        power_part = canonical(&power_part.ideal_product(&p.ideal)?);
    }
    Err(Error::IterationBound {
        prime: p.ideal.to_string(),
        bound,
    })
}

fn push_prime(list: &mut Vec<PrimeIdeal>, p: PrimeIdeal) {
    if !list.iter().any(|q| q.ideal == p.ideal) {
        list.push(p);
    }
}

/// Primary decomposition of `F/M` with default settings.
pub fn primdec_ehv(m: &Submodule) -> Result<DecompositionResult> {
    primdec_ehv_with(m, &PrimdecConfig::default())
}

pub fn primdec_ehv_with(m: &Submodule, config: &PrimdecConfig) -> Result<DecompositionResult> {
    let m = canonical(m);
    let m_gb = buchberger(&m);
    if m_gb.is_whole() {
        return Err(Error::UnitModule);
    }
    let n = m.ring().nvars();
    let c0 = codim(&m) as usize;
    let hull = equidim_hull(&m)?;
    let top = min_ass_seeded(&annihilator(&hull)?, config.seed)?;

    let mut found: Vec<(PrimeIdeal, Extraction)> = Vec::new();
    for p in &top {
        found.push((p.clone(), primary_component(&hull, p, &top, config.bound)?));
    }
    let parts: Vec<Submodule> = found.iter().map(|(_, e)| e.primary.clone()).collect();
    let mut acc = intersect_all(&parts)?;

    if !is_sub_gb(&acc, &m_gb)? {
        let anns = ext_annihilators(&m)?;
        let mut primes = top.clone();
        let mut lower = Vec::new();
        for f in (c0 + 1..=n).rev() {
            if codim(&anns[f]) != f as i64 {
                continue;
            }
            for p in min_ass_seeded(&equidim_hull(&anns[f])?, config.seed)? {
                if p.codim == f {
                    lower.push(p.clone());
                    push_prime(&mut primes, p);
                }
            }
        }
        lower.sort_by_key(PrimeIdeal::sort_key);
        lower.dedup_by(|a, b| a.ideal == b.ideal);
        for p in &lower {
            let e = primary_component(&m, p, &primes, config.bound)?;
            acc = intersect(&acc, &e.primary)?;
            found.push((p.clone(), e));
        }
    }
    debug_assert!(is_sub_gb(&acc, &m_gb)?);

    // drop components implied by the others
    let mut keep = vec![true; found.len()];
    for i in 0..found.len() {
        let others: Vec<Submodule> = (0..found.len())
            .filter(|&j| j != i && keep[j])
            .map(|j| found[j].1.primary.clone())
            .collect();
        if !others.is_empty() && is_sub(&intersect_all(&others)?, &found[i].1.primary)? {
            keep[i] = false;
        }
    }
    let found: Vec<(PrimeIdeal, Extraction)> = found
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(f, _)| f)
        .collect();

    let primes: Vec<&PrimeIdeal> = found.iter().map(|(p, _)| p).collect();
    let mut components = Vec::new();
    let mut trace = Vec::new();
    for (p, e) in &found {
        let mut embedded = false;
        for q in &primes {
            if q.ideal != p.ideal && is_sub(&q.ideal, &p.ideal)? {
                embedded = true;
                break;
            }
        }
        components.push(Component {
            primary: e.primary.clone(),
            prime: p.clone(),
            embedded,
            witness: Some(e.power),
        });
        trace.extend(e.trace.iter().cloned());
    }
    components.sort_by_key(|c| c.prime.sort_key());
    Ok(DecompositionResult { components, trace })
}
