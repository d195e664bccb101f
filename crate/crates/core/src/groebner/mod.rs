//! Standard bases of submodules of free modules and the operations built on
//! them.

mod dim;
pub(crate) mod engine;
mod ops;

use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{same_ring, FreeElement, Rational, RingRef, Submodule};
use engine::Engine;

pub use dim::{codim, dimension, independent_set, krull_dim, monomial_dimension};
pub(crate) use ops::map_module;
pub use ops::{
    annihilator, eliminate, intersect, intersect_all, lift, modulo_kernel, quotient,
    quotient_by_ideal, saturate, syzygies, SaturationResult,
};

/// Reduced Groebner basis under the ring's order; elements are monic and
/// sorted by decreasing leading term.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: RingRef,
    rank: usize,
    elements: Vec<FreeElement>,
    engine: Engine,
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elements).finish()
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[FreeElement] {
        &self.elements
    }

    pub fn reduced(&self) -> bool {
        true
    }

    pub fn to_submodule(&self) -> Submodule {
        Submodule::new(&self.ring, self.rank, self.elements.clone()).expect("consistent basis")
    }

    /// `(component, exponents)` of the leading terms.
    pub fn leading_terms(&self) -> Vec<(usize, Vec<u32>)> {
        self.engine
            .leading_terms()
            .into_iter()
            .map(|(c, e)| (c, e.to_vec()))
            .collect()
    }

    /// True if the span is the whole free module.
    pub fn is_whole(&self) -> bool {
        let mut hit = vec![false; self.rank];
        for (c, e) in self.engine.leading_terms() {
            if e.iter().all(|&x| x == 0) {
                hit[c] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn normal_form(&self, v: &FreeElement) -> Result<FreeElement> {
        self.check(v)?;
        let (t, d) = self.engine.vector(v);
        let (r, s) = self.engine.reduce_with(t, true, None);
        Ok(self.engine.to_free(&r, &(s * Rational::from_integer(d))))
    }

    pub fn contains(&self, v: &FreeElement) -> Result<bool> {
        self.check(v)?;
        let (t, _) = self.engine.vector(v);
        Ok(self.engine.reduce_with(t, false, None).0.is_empty())
    }

    fn check(&self, v: &FreeElement) -> Result<()> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: v.rank(),
            });
        }
        if v.comps().iter().any(|p| !same_ring(p.ring(), &self.ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }
}

/// Reduced Groebner basis of the span of `a`.
pub fn buchberger(a: &Submodule) -> GroebnerBasis {
    let mut engine = Engine::new(a.ring(), a.rank(), None);
    let vs: Vec<_> = a.gens().iter().map(|g| engine.vector(g).0).collect();
    for t in engine.interreduce(vs) {
        if !t.is_empty() {
            engine.add(t);
        }
    }
    engine.finish();
    let elements = engine.basis().map(|v| engine.to_free_monic(v)).collect();
    GroebnerBasis {
        ring: a.ring().clone(),
        rank: a.rank(),
        elements,
        engine,
    }
}

pub fn normal_form(v: &FreeElement, g: &GroebnerBasis) -> Result<FreeElement> {
    g.normal_form(v)
}

/// Reduced Groebner basis as a submodule; equal spans give equal values.
pub fn canonical(a: &Submodule) -> Submodule {
    buchberger(a).to_submodule()
}

pub fn equal(a: &Submodule, b: &Submodule) -> bool {
    a.rank() == b.rank() && canonical(a) == canonical(b)
}

/// True iff every generator of `a` lies in the span of `b`.
pub fn is_sub(a: &Submodule, b: &Submodule) -> Result<bool> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            expected: b.rank(),
            found: a.rank(),
        });
    }
    let g = buchberger(b);
    is_sub_gb(a, &g)
}

pub fn is_sub_gb(a: &Submodule, g: &GroebnerBasis) -> Result<bool> {
    for v in a.gens() {
        if !g.contains(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True if the span of `a` is the whole free module.
pub fn is_whole(a: &Submodule) -> bool {
    buchberger(a).is_whole()
}
