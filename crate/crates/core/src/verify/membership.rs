//! Degree-bounded membership by exact linear algebra.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::polyring::{FreeElement, Monomial, Polynomial, Rational, Submodule};

type Row = (usize, Vec<u32>);
type SparseVec = BTreeMap<Row, Rational>;

/// Exponent vectors of total degree at most `d` in `n` variables.
fn monomials_up_to(n: usize, d: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e as u32;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

fn as_sparse(v: &FreeElement) -> SparseVec {
    let mut out = SparseVec::new();
    for (c, p) in v.comps().iter().enumerate() {
        for (m, a) in p.terms() {
            out.insert((c, m.exponents().to_vec()), a.clone());
        }
    }
    out
}

/// Column echelon form keyed by each vector's largest row.
#[derive(Default)]
struct Echelon {
    pivots: HashMap<Row, SparseVec>,
}

impl Echelon {
    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor: Option<Row> = None;
        loop {
            let next = match &cursor {
                None => v.iter().next_back(),
                Some(c) => v.range(..c.clone()).next_back(),
            }
            .map(|(k, a)| (k.clone(), a.clone()));
            let Some((k, a)) = next else { return v };
            if let Some(p) = self.pivots.get(&k) {
                // pivots are normalized to leading coefficient 1
                for (row, b) in p {
                    let e = v.entry(row.clone()).or_insert_with(Rational::zero);
                    *e -= &a * b;
                    if e.is_zero() {
                        v.remove(row);
                    }
                }
            }
            cursor = Some(k);
        }
    }

    fn insert(&mut self, v: SparseVec) {
        let v = self.reduce(v);
        if let Some((k, a)) = v.iter().next_back().map(|(k, a)| (k.clone(), a.clone())) {
            let inv = a.recip();
            let v = v.into_iter().map(|(r, b)| (r, b * &inv)).collect();
            self.pivots.insert(k, v);
        }
    }
}

/// True iff `v = sum c_j a_j` with every product `c_j a_j` of total degree
/// at most `degree_bound`. A `true` answer is a proof of membership; `false`
/// only says no certificate exists within the bound.
pub fn membership_oracle(v: &FreeElement, a: &Submodule, degree_bound: u64) -> bool {
    let ring = a.ring();
    let n = ring.nvars();
    let target = as_sparse(v);
    if target.is_empty() {
        return true;
    }
    let mut ech = Echelon::default();
    for g in a.gens() {
        if g.is_zero() {
            continue;
        }
        let gdeg = g
            .comps()
            .iter()
            .filter_map(Polynomial::total_degree)
            .max()
            .unwrap_or(0);
        if gdeg > degree_bound {
            continue;
        }
        for m in monomials_up_to(n, degree_bound - gdeg) {
            let mono = Monomial::new(&m);
            let mut col = SparseVec::new();
            for (c, p) in g.comps().iter().enumerate() {
                for (t, b) in p.terms() {
                    let e = mono.checked_mul(t).expect("small exponents");
                    col.insert((c, e.exponents().to_vec()), b.clone());
                }
            }
            ech.insert(col);
        }
    }
    ech.reduce(target).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, Ring};

    #[test]
    fn examples() {
        let r = Ring::degrevlex(&["x", "y"]);
        let p = |s: &str| FreeElement::new(vec![parse_polynomial(&r, s).unwrap()]);
        let gen = |s: &str| Submodule::ideal(&r, vec![parse_polynomial(&r, s).unwrap()]).unwrap();
        assert!(membership_oracle(&p("x^2"), &gen("x"), 2));
        for d in 1..6 {
            assert!(!membership_oracle(&p("y"), &gen("x"), d));
        }
        assert!(membership_oracle(&p("x^3-1"), &gen("x-1"), 3));
        assert!(!membership_oracle(&p("x^3-1"), &gen("x-1"), 2));
        assert_eq!(monomials_up_to(2, 2).len(), 6);
    }
}
