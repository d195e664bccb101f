use crate::error::{Error, Result};
use crate::groebner::engine::Engine;
use crate::groebner::syzygies;
use crate::polyring::{FreeElement, Polynomial, Submodule};

/// Chain `F_0 <- F_1 <- ... <- F_len`; `maps[i]` is the matrix of
/// `F_(i+1) -> F_i`, so `maps[0]` generates the presented submodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub maps: Vec<Submodule>,
}

impl Resolution {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Ranks of `F_0, F_1, ..., F_len`.
    pub fn betti(&self) -> Vec<usize> {
        let mut out = vec![self.maps[0].rank()];
        out.extend(self.maps.iter().map(Submodule::ngens));
        out
    }

    /// Matrix of `F_i -> F_(i-1)` for `i >= 1`.
    pub fn map(&self, i: usize) -> &Submodule {
        &self.maps[i - 1]
    }
}

/// A generating subset of the nonzero generators, keeping a generator only
/// if it is not in the span of the ones kept before it (lower degree first).
pub fn minimal_generators(a: &Submodule) -> Submodule {
    let ring = a.ring();
    let mut order: Vec<usize> = (0..a.ngens()).filter(|&i| !a.gen(i).is_zero()).collect();
    order.sort_by_key(|&i| {
        let g = a.gen(i);
        let deg = g.comps().iter().filter_map(Polynomial::total_degree).max();
        (deg, i)
    });
    let mut engine = Engine::new(ring, a.rank(), None);
    let mut keep = Vec::new();
    for i in order {
        let (t, _) = engine.vector(a.gen(i));
        if engine.add(t) {
            keep.push(i);
            engine.complete();
        }
    }
    keep.sort_unstable();
    Submodule::from_parts(ring, a.rank(), keep.into_iter().map(|i| a.gen(i).clone()).collect())
}

fn find_unit(d: &Submodule) -> Option<(usize, usize)> {
    for c in 0..d.ngens() {
        for r in 0..d.rank() {
            if d.constant_entry(r, c).is_some() {
                return Some((r, c));
            }
        }
    }
    None
}

/// Column operations making `(r, c)` the only nonzero entry of row `r`,
/// then deletion of row `r` and column `c`. The cokernel is unchanged.
fn split_off(d: &Submodule, r: usize, c: usize) -> Submodule {
    let ring = d.ring();
    let u = d.constant_entry(r, c).expect("unit entry");
    let pivot = d.gen(c).clone();
    let gens: Vec<FreeElement> = d
        .gens()
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != c)
        .map(|(_, g)| {
            let a = g.comp(r);
            if a.is_zero() {
                return g.clone();
            }
            let f = a.scale(&u.recip());
            g.checked_sub(&pivot.mul_poly(&f).expect("same ring"))
                .expect("same rank")
        })
        .collect();
    Submodule::from_parts(ring, d.rank(), gens).delete_row(r)
}

/// Removes unit entries of a presentation matrix and its zero columns.
pub fn prune_presentation(a: &Submodule) -> Submodule {
    let mut d = a.without_zero_gens();
    while let Some((r, c)) = find_unit(&d) {
        d = split_off(&d, r, c).without_zero_gens();
    }
    d
}

/// Free resolution of `F / m` with `length` maps, built from iterated
/// syzygies. Each kernel is cut down to a minimal generating subset, and
/// unit entries of the maps after the first are split off.
pub fn free_resolution(m: &Submodule, length: usize) -> Result<Resolution> {
    if length == 0 {
        return Err(Error::InvalidArgument("resolution length must be positive".into()));
    }
    resolve(minimal_generators(m), length)
}

/// Like [`free_resolution`] but keeps the given first map as it is.
pub(crate) fn resolve(first: Submodule, length: usize) -> Result<Resolution> {
    let mut maps = vec![first];
    while maps.len() < length {
        let last = maps.last().expect("nonempty");
        let mut next = minimal_generators(&syzygies(last));
        while let Some((r, c)) = find_unit(&next) {
            next = split_off(&next, r, c);
            let i = maps.len() - 1;
            maps[i] = maps[i].delete_col(r);
        }
        maps.push(next);
    }
    Ok(Resolution { maps })
}
