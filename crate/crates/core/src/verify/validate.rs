//! Checks that a claimed decomposition is an irredundant primary
//! decomposition, using the Ext criterion for primariness.

use crate::error::Result;
use crate::groebner::{
    annihilator, buchberger, canonical, codim, intersect, intersect_all, is_sub, is_sub_gb,
    saturate,
};
use crate::homology::{equidim_hull, ext_annihilators};
use crate::polyring::Submodule;
use crate::primdec::{localize_module, min_ass, DecompositionResult, PrimeIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub intersection_ok: bool,
    /// `(index, ok, reason)`; the reason is empty when the check passes.
    pub primaries_ok: Vec<(usize, bool, String)>,
    pub irredundant_ok: bool,
    pub primes_distinct_ok: bool,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.intersection_ok
            && self.irredundant_ok
            && self.primes_distinct_ok
            && self.primaries_ok.iter().all(|(_, ok, _)| *ok)
    }
}

fn check_primary(q: &Submodule, p: &PrimeIdeal) -> Result<Option<String>> {
    if buchberger(q).is_whole() {
        return Ok(Some("component is the whole module".into()));
    }
    let ann = annihilator(q)?;
    let minimal = min_ass(&ann)?;
    let prime = canonical(&p.ideal);
    match &minimal[..] {
        [only] if only.ideal == prime => {}
        _ => {
            let shown: Vec<String> = minimal.iter().map(|m| format!("<{}>", m.ideal)).collect();
            return Ok(Some(format!(
                "minimal primes of the annihilator are {} instead of <{}>",
                shown.join(" "),
                prime
            )));
        }
    }
    let c = codim(&prime) as usize;
    for (k, i_k) in ext_annihilators(q)?.iter().enumerate() {
        if k != c && codim(i_k) <= k as i64 {
            return Ok(Some(format!("associated prime of codimension {k}")));
        }
    }
    Ok(None)
}

/// Runs the four checks; failures are reported, not raised.
pub fn validate_decomposition(m: &Submodule, d: &DecompositionResult) -> ValidationReport {
    let qs: Vec<Submodule> = d.components.iter().map(|c| c.primary.clone()).collect();
    let intersection_ok = !qs.is_empty()
        && qs.iter().all(|q| q.rank() == m.rank())
        && intersect_all(&qs).is_ok_and(|i| i == canonical(m));
    let primaries_ok = d
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| match check_primary(&c.primary, &c.prime) {
            Ok(None) => (i, true, String::new()),
            Ok(Some(reason)) => (i, false, reason),
            Err(e) => (i, false, e.to_string()),
        })
        .collect();
    let primes: Vec<Submodule> = d.components.iter().map(|c| canonical(&c.prime.ideal)).collect();
    let primes_distinct_ok = (0..primes.len()).all(|i| (0..i).all(|j| primes[i] != primes[j]));
    let irredundant_ok = (0..qs.len()).all(|i| {
        let others: Vec<Submodule> = (0..qs.len()).filter(|&j| j != i).map(|j| qs[j].clone()).collect();
        if others.is_empty() {
            return true;
        }
        intersect_all(&others).and_then(|o| is_sub(&o, &qs[i])).is_ok_and(|inside| !inside)
    });
    ValidationReport {
        intersection_ok,
        primaries_ok,
        irredundant_ok,
        primes_distinct_ok,
    }
}

/// Outcome of the per-component checks of [`component_theorem_checks`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub index: usize,
    /// `Q ∩ (M_[P] : P^∞) ⊆ M_[P]`, localizing with the decomposition's primes.
    pub containment: bool,
    /// `Q = hull(M + P^m F)` for the recorded `m`, and `m <= bound`.
    pub witness: bool,
}

pub fn component_theorem_checks(
    m: &Submodule,
    d: &DecompositionResult,
    bound: usize,
) -> Result<Vec<TheoremCheck>> {
    let primes: Vec<PrimeIdeal> = d.components.iter().map(|c| c.prime.clone()).collect();
    let free = Submodule::free(m.ring(), m.rank());
    let mut out = Vec::new();
    for (index, c) in d.components.iter().enumerate() {
        let p = &c.prime.ideal;
        let local = localize_module(m, p, Some(&primes))?;
        let beyond = saturate(&local, p)?.module;
        let containment = is_sub_gb(&intersect(&beyond, &c.primary)?, &buchberger(&local))?;
        let witness = match c.witness {
            Some(k) if k >= 1 && k <= bound => {
                let mut power = free.clone();
                for _ in 0..k {
                    power = canonical(&power.ideal_product(p)?);
                }
                equidim_hull(&m.concat(&power)?)? == canonical(&c.primary)
            }
            _ => false,
        };
        out.push(TheoremCheck {
            index,
            containment,
            witness,
        });
    }
    Ok(out)
}
