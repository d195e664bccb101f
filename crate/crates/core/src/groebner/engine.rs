//! Buchberger's algorithm on vectors of a free module with integer
//! coefficients.
//!
//! Terms carry a precomputed order key; the order is linear in the exponent
//! vector, so the key of `m * t` is `key(t)` plus the (padded) key of `m`,
//! and the key of a cofactor is a plain difference of keys.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::{
    divides, divmask, lcm, Exps, FreeElement, Key, ModuleExtension, Monomial, MonomialOrder,
    Polynomial, Rational, RingRef,
};

#[derive(Clone, Debug)]
pub(crate) struct Term {
    pub key: Key,
    pub comp: u32,
    pub exps: Exps,
    pub coeff: BigInt,
}

/// Terms strictly descending by key, no zero coefficients.
pub(crate) type Vector = Vec<Term>;

/// Term order on `R^rank`. With `split = Some(s)`, every term in components
/// `0..s` is larger than every term in components `s..rank`.
#[derive(Clone, Debug)]
pub(crate) struct TermOrder {
    mono: MonomialOrder,
    split: Option<usize>,
    pot: bool,
}

impl TermOrder {
    pub fn new(mono: &MonomialOrder, split: Option<usize>) -> Self {
        TermOrder {
            mono: mono.clone(),
            split,
            pot: mono.module_extension == ModuleExtension::PositionOverTerm,
        }
    }

    pub fn key(&self, comp: usize, exps: &[u32]) -> Key {
        let mut k = Key::new();
        if let Some(s) = self.split {
            k.push(i64::from(comp < s));
        }
        if self.pot {
            k.push(-(comp as i64));
        }
        self.mono.write_key(exps, &mut k);
        if !self.pot {
            k.push(-(comp as i64));
        }
        k
    }
}

fn key_add(a: &Key, b: &Key) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn key_sub(a: &Key, b: &Key) -> Key {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn exps_sub(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn exps_add(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `m * v` where `shift` is the padded key of `m`.
fn shifted(v: &[Term], shift: &Key, m: &[u32], c: &BigInt) -> Vector {
    v.iter()
        .map(|t| Term {
            key: key_add(&t.key, shift),
            comp: t.comp,
            exps: exps_add(&t.exps, m),
            coeff: &t.coeff * c,
        })
        .collect()
}

/// `ca * a - cb * b`.
fn lin_comb(a: &[Term], ca: &BigInt, b: Vector, cb: &BigInt) -> Vector {
    let mut out = Vector::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.into_iter().peekable();
    loop {
        match (a.get(i), bi.peek()) {
            (None, None) => break,
            (Some(x), None) => {
                out.push(Term {
                    coeff: &x.coeff * ca,
                    ..x.clone()
                });
                i += 1;
            }
            (None, Some(_)) => {
                let mut y = bi.next().unwrap();
                y.coeff = -(&y.coeff * cb);
                out.push(y);
            }
            (Some(x), Some(y)) => match x.key.cmp(&y.key) {
                Ordering::Greater => {
                    out.push(Term {
                        coeff: &x.coeff * ca,
                        ..x.clone()
                    });
                    i += 1;
                }
                Ordering::Less => {
                    let mut y = bi.next().unwrap();
                    y.coeff = -(&y.coeff * cb);
                    out.push(y);
                }
                Ordering::Equal => {
                    let y = bi.next().unwrap();
                    let c = &x.coeff * ca - &y.coeff * cb;
                    if !c.is_zero() {
                        out.push(Term { coeff: c, ..y });
                    }
                    i += 1;
                }
            },
        }
    }
    out
}

fn content(v: &[Term]) -> BigInt {
    let mut g = BigInt::zero();
    for t in v {
        g = g.gcd(&t.coeff);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divide by the content and make the leading coefficient positive; returns
/// the factor divided out (signed).
fn make_primitive(v: &mut [Term]) -> BigInt {
    if v.is_empty() {
        return BigInt::one();
    }
    let mut g = content(v);
    if v[0].coeff.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for t in v.iter_mut() {
            t.coeff = &t.coeff / &g;
        }
    }
    g
}

#[derive(Clone, Debug)]
struct Elem {
    v: Vector,
    mask: u64,
}

impl Elem {
    fn lead(&self) -> &Term {
        &self.v[0]
    }
}

/// Pending S-pair `(i, j)`, `i < j`, ordered by the key of the lcm.
type PairId = (Key, usize, usize);

#[derive(Clone, Debug)]
pub(crate) struct Engine {
    ring: RingRef,
    rank: usize,
    ord: TermOrder,
    elems: Vec<Elem>,
    active: Vec<bool>,
    pairs: BTreeMap<PairId, Exps>,
}

impl Engine {
    /// Engine using the ring's own order.
    pub fn new(ring: &RingRef, rank: usize, split: Option<usize>) -> Self {
        Self::with_order(ring, ring.order(), rank, split)
    }

    pub fn with_order(ring: &RingRef, order: &MonomialOrder, rank: usize, split: Option<usize>) -> Self {
        Engine {
            ring: ring.clone(),
            rank,
            ord: TermOrder::new(order, split),
            elems: Vec::new(),
            active: Vec::new(),
            pairs: BTreeMap::new(),
        }
    }

    /// Integer vector `d * v` for the smallest positive integer `d`; returns
    /// the vector and `d`.
    pub fn vector(&self, v: &FreeElement) -> (Vector, BigInt) {
        debug_assert_eq!(v.rank(), self.rank);
        let mut d = BigInt::one();
        for p in v.comps() {
            for (_, c) in p.terms() {
                d = d.lcm(c.denom());
            }
        }
        let mut out = Vector::new();
        for (i, p) in v.comps().iter().enumerate() {
            for (m, c) in p.terms() {
                out.push(Term {
                    key: self.ord.key(i, m.exponents()),
                    comp: i as u32,
                    exps: Exps::from_slice(m.exponents()),
                    coeff: c.numer() * (&d / c.denom()),
                });
            }
        }
        out.sort_by(|a, b| b.key.cmp(&a.key));
        (out, d)
    }

    /// Back to polynomials, dividing every coefficient by `scale`.
    pub fn to_free(&self, v: &[Term], scale: &Rational) -> FreeElement {
        let mut comps: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); self.rank];
        for t in v {
            comps[t.comp as usize].push((
                Monomial::new(&t.exps),
                Rational::from_integer(t.coeff.clone()) / scale,
            ));
        }
        FreeElement::new(
            comps
                .into_iter()
                .map(|ts| Polynomial::from_terms(&self.ring, ts))
                .collect(),
        )
    }

    /// Monic version of a nonzero vector.
    pub fn to_free_monic(&self, v: &[Term]) -> FreeElement {
        let lc = Rational::from_integer(v[0].coeff.clone());
        self.to_free(v, &lc)
    }

    fn find_reducer(&self, t: &Term, skip: Option<usize>) -> Option<usize> {
        let tmask = divmask(&t.exps);
        let mut best: Option<usize> = None;
        for (i, e) in self.elems.iter().enumerate() {
            if !self.active[i] || Some(i) == skip {
                continue;
            }
            let l = e.lead();
            if l.comp != t.comp || e.mask & !tmask != 0 || !divides(&l.exps, &t.exps) {
                continue;
            }
            match best {
                Some(b) if self.elems[b].v.len() <= e.v.len() => {}
                _ => best = Some(i),
            }
        }
        best
    }

    /// Reduces `f` by the active elements (except `skip`). With `full`, tail
    /// terms are reduced as well. Returns the remainder `r` and a rational
    /// `s` with `s * f - r` in the span; `r` is primitive.
    pub fn reduce_with(&self, f: Vector, full: bool, skip: Option<usize>) -> (Vector, Rational) {
        let mut r = Vector::new();
        let mut f = f;
        let mut pos = 0;
        let mut scale = Rational::one();
        let mut steps = 0usize;
        while pos < f.len() {
            let Some(gi) = self.find_reducer(&f[pos], skip) else {
                if full {
                    pos += 1;
                    continue;
                }
                break;
            };
            // Terms before `pos` are irreducible and already final.
            if pos > 0 {
                r.extend(f.drain(..pos));
                pos = 0;
            }
            let g = &self.elems[gi].v;
            let t = &f[0];
            let gl = &g[0];
            let gcd = gl.coeff.gcd(&t.coeff);
            let ca = &gl.coeff / &gcd;
            let cb = &t.coeff / &gcd;
            let shift = key_sub(&t.key, &gl.key);
            let m = exps_sub(&t.exps, &gl.exps);
            let tail = shifted(&g[1..], &shift, &m, &BigInt::one());
            f = lin_comb(&f[1..], &ca, tail, &cb);
            if !ca.is_one() {
                for x in r.iter_mut() {
                    x.coeff = &x.coeff * &ca;
                }
                scale *= Rational::from_integer(ca);
            }
            steps += 1;
            if steps % 8 == 0 {
                let mut c = content(&r);
                if !c.is_one() {
                    c = c.gcd(&content(&f));
                }
                if !c.is_one() && !c.is_zero() {
                    for x in r.iter_mut().chain(f.iter_mut()) {
                        x.coeff = &x.coeff / &c;
                    }
                    scale /= Rational::from_integer(c);
                }
            }
        }
        r.extend(f);
        let c = make_primitive(&mut r);
        scale /= Rational::from_integer(c);
        (r, scale)
    }

    /// Inputs reduced against each other until nothing changes, smallest
    /// leading terms first.
    pub fn interreduce(&self, vs: Vec<Vector>) -> Vec<Vector> {
        let mut cur: Vec<Vector> = vs.into_iter().filter(|v| !v.is_empty()).collect();
        loop {
            cur.sort_by(|a, b| a[0].key.cmp(&b[0].key));
            let mut scratch = Engine::with_order(&self.ring, &self.ord.mono, self.rank, self.ord.split);
            let mut next = Vec::with_capacity(cur.len());
            for v in &cur {
                let (r, _) = scratch.reduce_with(v.clone(), true, None);
                if !r.is_empty() {
                    scratch.elems.push(Elem { mask: divmask(&r[0].exps), v: r.clone() });
                    scratch.active.push(true);
                    next.push(r);
                }
            }
            let same = next.len() == cur.len()
                && next.iter().zip(&cur).all(|(a, b)| a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.key == y.key && x.coeff == y.coeff));
            cur = next;
            if same {
                return cur;
            }
        }
    }

    /// Adds a generator; returns false if it reduced to zero.
    pub fn add(&mut self, v: Vector) -> bool {
        let (r, _) = self.reduce_with(v, false, None);
        if r.is_empty() {
            return false;
        }
        self.insert(r);
        true
    }

    fn insert(&mut self, v: Vector) {
        let mask = divmask(&v[0].exps);
        self.elems.push(Elem { v, mask });
        self.active.push(true);
        self.update(self.elems.len() - 1);
    }

    /// Gebauer-Moeller pair update for the new element `h`.
    fn update(&mut self, h: usize) {
        let hl = self.elems[h].lead().clone();
        let rank_one = self.rank == 1;
        let mut cand: Vec<(usize, Exps, bool)> = Vec::new();
        for g in 0..h {
            if !self.active[g] {
                continue;
            }
            let gl = self.elems[g].lead();
            if gl.comp != hl.comp {
                continue;
            }
            let l = lcm(&gl.exps, &hl.exps);
            let disjoint =
                rank_one && gl.exps.iter().zip(&hl.exps).all(|(a, b)| *a == 0 || *b == 0);
            cand.push((g, l, disjoint));
        }
        let mut kept: Vec<(usize, Exps, bool)> = Vec::new();
        for k in 0..cand.len() {
            let (_, l1, disjoint) = &cand[k];
            let dominated = !disjoint
                && (cand[k + 1..].iter().any(|(_, l2, _)| divides(l2, l1))
                    || kept.iter().any(|(_, l2, _)| divides(l2, l1)));
            if !dominated {
                kept.push(cand[k].clone());
            }
        }
        // B-criterion on old pairs.
        let hexps = &hl.exps;
        let hcomp = hl.comp;
        let elems = &self.elems;
        self.pairs.retain(|(_, i, j), l| {
            if elems[*i].lead().comp != hcomp || !divides(hexps, l) {
                return true;
            }
            let li = lcm(&elems[*i].lead().exps, hexps);
            let lj = lcm(&elems[*j].lead().exps, hexps);
            li == *l || lj == *l
        });
        for (g, l, disjoint) in kept {
            if disjoint {
                continue;
            }
            let key = self.ord.key(hcomp as usize, &l);
            self.pairs.insert((key, g, h), l);
        }
        self.deactivate_multiples(h);
    }

    fn deactivate_multiples(&mut self, h: usize) {
        let hl = self.elems[h].lead();
        for g in 0..h {
            if self.active[g] {
                let gl = self.elems[g].lead();
                if gl.comp == hl.comp && divides(&hl.exps, &gl.exps) {
                    self.active[g] = false;
                }
            }
        }
    }

    fn spoly(&self, i: usize, j: usize, l: &Exps) -> Vector {
        let a = &self.elems[i].v;
        let b = &self.elems[j].v;
        let lkey = self.ord.key(a[0].comp as usize, l);
        let gcd = a[0].coeff.gcd(&b[0].coeff);
        let ca = &b[0].coeff / &gcd;
        let cb = &a[0].coeff / &gcd;
        let ma = exps_sub(l, &a[0].exps);
        let mb = exps_sub(l, &b[0].exps);
        let ta = shifted(&a[1..], &key_sub(&lkey, &a[0].key), &ma, &BigInt::one());
        let tb = shifted(&b[1..], &key_sub(&lkey, &b[0].key), &mb, &BigInt::one());
        lin_comb(&ta, &ca, tb, &cb)
    }

    /// Runs Buchberger until no pairs remain.
    pub fn complete(&mut self) {
        while let Some(((_, i, j), l)) = self.pairs.pop_first() {
            let s = self.spoly(i, j, &l);
            let (r, _) = self.reduce_with(s, true, None);
            if !r.is_empty() {
                self.insert(r);
            }
        }
    }

    /// Interreduces the active elements and keeps only them.
    pub fn finish(&mut self) {
        self.complete();
        let mut idx: Vec<usize> = (0..self.elems.len()).filter(|&i| self.active[i]).collect();
        idx.sort_by(|&a, &b| self.elems[b].lead().key.cmp(&self.elems[a].lead().key));
        let reduced: Vec<Elem> = idx
            .iter()
            .map(|&i| {
                let (r, _) = self.reduce_with(self.elems[i].v.clone(), true, Some(i));
                Elem {
                    mask: divmask(&r[0].exps),
                    v: r,
                }
            })
            .collect();
        self.elems = reduced;
        self.active = vec![true; self.elems.len()];
    }

    /// Active elements, in insertion order.
    pub fn basis(&self) -> impl Iterator<Item = &Vector> + '_ {
        self.elems
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(e, _)| &e.v)
    }

    /// `(component, exponents)` of every active leading term.
    pub fn leading_terms(&self) -> Vec<(usize, Exps)> {
        self.basis()
            .map(|v| (v[0].comp as usize, v[0].exps.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, Ring};

    #[test]
    fn cyclic3_basis_size() {
        let r = Ring::degrevlex(&["x", "y", "z"]);
        let gens = ["x+y+z", "x*y+y*z+z*x", "x*y*z-1"];
        let mut e = Engine::new(&r, 1, None);
        for g in gens {
            let v = FreeElement::new(vec![parse_polynomial(&r, g).unwrap()]);
            let (t, _) = e.vector(&v);
            e.add(t);
        }
        e.finish();
        let lts: Vec<String> = e
            .basis()
            .map(|v| format!("{:?}", v[0].exps.as_slice()))
            .collect();
        assert_eq!(lts, ["[0, 0, 3]", "[0, 2, 0]", "[1, 0, 0]"]);
    }
}
