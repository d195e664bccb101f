use super::engine::Engine;
use super::{buchberger, canonical};
use crate::error::{Error, Result};
use crate::polyring::{
    same_ring, FreeElement, ModuleExtension, MonomialOrder, Polynomial, Rational, Ring, RingRef,
    Submodule,
};

fn check_rank(a: &Submodule, b: &Submodule) -> Result<()> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            expected: a.rank(),
            found: b.rank(),
        });
    }
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

fn stack(top: &FreeElement, tag: Option<&FreeElement>, ring: &RingRef, k: usize) -> FreeElement {
    let mut comps = top.comps().to_vec();
    match tag {
        Some(t) => comps.extend(t.comps().iter().cloned()),
        None => comps.extend(std::iter::repeat(Polynomial::zero(ring)).take(k)),
    }
    FreeElement::new(comps)
}

/// Basis of the span of `elems` in `R^(s+k)` with the first `s` coordinates
/// dominant; returns the canonical span of the tag parts of the elements
/// whose top part vanishes.
fn tagged_kernel(ring: &RingRef, s: usize, k: usize, elems: Vec<FreeElement>) -> Submodule {
    let mut engine = Engine::new(ring, s + k, Some(s));
    for v in &elems {
        let (t, _) = engine.vector(v);
        if !t.is_empty() {
            engine.add(t);
        }
    }
    engine.finish();
    let gens = engine
        .basis()
        .filter(|v| v[0].comp as usize >= s)
        .map(|v| {
            let e = engine.to_free_monic(v);
            FreeElement::new(e.into_comps().split_off(s))
        })
        .collect();
    canonical(&Submodule::from_parts(ring, k, gens))
}

/// Relations `c` with `sum c_i a_i = 0`, as a submodule of `R^ngens`.
pub fn syzygies(a: &Submodule) -> Submodule {
    let ring = a.ring();
    let k = a.ngens();
    let elems = a
        .gens()
        .iter()
        .enumerate()
        .map(|(i, g)| stack(g, Some(&FreeElement::basis(ring, k, i)), ring, k))
        .collect();
    tagged_kernel(ring, a.rank(), k, elems)
}

/// `{x : A x in colspan(B)}` as a submodule of `R^ngens(A)`.
pub fn modulo_kernel(a: &Submodule, b: &Submodule) -> Result<Submodule> {
    modulo_kernel_over(a, b, None)
}

/// As `modulo_kernel`, given a submodule `known` of the answer; its
/// standard basis is used to keep the tag parts reduced.
fn modulo_kernel_over(a: &Submodule, b: &Submodule, known: Option<&Submodule>) -> Result<Submodule> {
    if a.rank() != b.rank() {
        return Err(Error::ShapeMismatch(format!(
            "matrices with {} and {} rows",
            a.rank(),
            b.rank()
        )));
    }
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    let k = a.ngens();
    let zero = FreeElement::zero(ring, a.rank());
    let mut elems: Vec<FreeElement> = match known {
        Some(kn) => buchberger(kn)
            .elements()
            .iter()
            .map(|g| stack(&zero, Some(g), ring, k))
            .collect(),
        None => Vec::new(),
    };
    elems.extend(
        a.gens()
            .iter()
            .enumerate()
            .map(|(i, g)| stack(g, Some(&FreeElement::basis(ring, k, i)), ring, k)),
    );
    elems.extend(b.gens().iter().map(|g| stack(g, None, ring, k)));
    Ok(tagged_kernel(ring, a.rank(), k, elems))
}

/// Matrix `T` (one column per generator of `b`) with `b = a * T`.
pub fn lift(a: &Submodule, b: &Submodule) -> Result<Submodule> {
    check_rank(a, b)?;
    let ring = a.ring();
    let s = a.rank();
    let k = a.ngens();
    let mut engine = Engine::new(ring, s + k, Some(s));
    for (i, g) in a.gens().iter().enumerate() {
        let (t, _) = engine.vector(&stack(g, Some(&FreeElement::basis(ring, k, i)), ring, k));
        if !t.is_empty() {
            engine.add(t);
        }
    }
    engine.finish();
    let mut cols = Vec::with_capacity(b.ngens());
    for (j, g) in b.gens().iter().enumerate() {
        let (t, d) = engine.vector(&stack(g, None, ring, k));
        let (r, sc) = engine.reduce_with(t, true, None);
        if r.iter().any(|t| (t.comp as usize) < s) {
            return Err(Error::NotMember { index: j });
        }
        let scale = -(sc * Rational::from_integer(d));
        let v = engine.to_free(&r, &scale);
        cols.push(FreeElement::new(v.into_comps().split_off(s)));
    }
    Ok(Submodule::from_parts(ring, k, cols))
}

/// `A ∩ B`, canonical.
pub fn intersect(a: &Submodule, b: &Submodule) -> Result<Submodule> {
    check_rank(a, b)?;
    let ring = a.ring();
    let s = a.rank();
    let mut elems: Vec<FreeElement> = a.gens().iter().map(|g| stack(g, Some(g), ring, s)).collect();
    elems.extend(b.gens().iter().map(|g| stack(g, None, ring, s)));
    Ok(tagged_kernel(ring, s, s, elems))
}

/// Intersection of a nonempty list.
pub fn intersect_all(list: &[Submodule]) -> Result<Submodule> {
    let (first, rest) = list
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("empty intersection".into()))?;
    let mut acc = canonical(first);
    for m in rest {
        acc = intersect(&acc, m)?;
    }
    Ok(acc)
}

/// The ideal `(A : B) = {r : r B ⊆ A}`.
pub fn quotient(a: &Submodule, b: &Submodule) -> Result<Submodule> {
    check_rank(a, b)?;
    let ring = a.ring();
    let mut parts = Vec::new();
    for g in b.gens() {
        if g.is_zero() {
            continue;
        }
        let col = Submodule::from_parts(ring, a.rank(), vec![g.clone()]);
        parts.push(modulo_kernel(&col, a)?);
    }
    if parts.is_empty() {
        return Ok(Submodule::unit_ideal(ring));
    }
    intersect_all(&parts)
}

/// `Ann(F / A)`.
pub fn annihilator(a: &Submodule) -> Result<Submodule> {
    quotient(a, &Submodule::free(a.ring(), a.rank()))
}

/// `{v : J v ⊆ A}`.
pub fn quotient_by_ideal(a: &Submodule, j: &Submodule) -> Result<Submodule> {
    if !same_ring(a.ring(), j.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    let s = a.rank();
    let mut parts = Vec::new();
    for f in j.ideal_gens()? {
        if f.is_zero() {
            continue;
        }
        let gens = (0..s)
            .map(|i| {
                let mut v = FreeElement::zero(ring, s).into_comps();
                v[i] = f.clone();
                FreeElement::new(v)
            })
            .collect();
        let diag = Submodule::from_parts(ring, s, gens);
        parts.push(modulo_kernel_over(&diag, a, Some(a))?);
    }
    if parts.is_empty() {
        return Ok(Submodule::free(ring, s));
    }
    intersect_all(&parts)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationResult {
    pub module: Submodule,
    pub exponent: usize,
}

/// `(A : J^∞)` by repeated quotients until the canonical form is stable.
pub fn saturate(a: &Submodule, j: &Submodule) -> Result<SaturationResult> {
    let mut cur = canonical(a);
    let mut exponent = 0;
    loop {
        let next = quotient_by_ideal(&cur, j)?;
        if next == cur {
            return Ok(SaturationResult {
                module: cur,
                exponent,
            });
        }
        cur = next;
        exponent += 1;
    }
}

/// `A ∩ (F over the remaining variables)`, via a block order with the
/// eliminated variables first.
pub fn eliminate(a: &Submodule, vars: &[usize]) -> Result<Submodule> {
    let ring = a.ring();
    let n = ring.nvars();
    let mut elim: Vec<usize> = vars.to_vec();
    elim.sort_unstable();
    elim.dedup();
    if elim.is_empty() || elim.len() >= n || elim.iter().any(|&v| v >= n) {
        return Err(Error::InvalidArgument(
            "elimination needs a nonempty proper subset of the variables".into(),
        ));
    }
    let keep: Vec<usize> = (0..n).filter(|i| !elim.contains(i)).collect();
    // position of each old variable in the permuted ring
    let mut to_new = vec![0; n];
    for (p, &v) in elim.iter().chain(&keep).enumerate() {
        to_new[v] = p;
    }
    let names: Vec<String> = elim
        .iter()
        .chain(&keep)
        .map(|&v| ring.names()[v].clone())
        .collect();
    let order =
        MonomialOrder::block(elim.len()).with_extension(ModuleExtension::TermOverPosition);
    let big = Ring::new(names, order)?;
    let mapped = map_module(a, &big, &to_new);
    let g = buchberger(&mapped);
    let mut to_old = vec![0; n];
    for (old, &new) in to_new.iter().enumerate() {
        to_old[new] = old;
    }
    let gens: Vec<FreeElement> = g
        .elements()
        .iter()
        .filter(|v| {
            v.comps()
                .iter()
                .all(|p| p.terms().iter().all(|(m, _)| m.exponents()[..elim.len()].iter().all(|&e| e == 0)))
        })
        .map(|v| map_element(v, ring, &to_old))
        .collect();
    Ok(canonical(&Submodule::from_parts(ring, a.rank(), gens)))
}

pub(crate) fn map_element(v: &FreeElement, target: &RingRef, var_map: &[usize]) -> FreeElement {
    FreeElement::new(v.comps().iter().map(|p| p.map_ring(target, var_map)).collect())
}

pub(crate) fn map_module(a: &Submodule, target: &RingRef, var_map: &[usize]) -> Submodule {
    Submodule::from_parts(
        target,
        a.rank(),
        a.gens().iter().map(|v| map_element(v, target, var_map)).collect(),
    )
}
