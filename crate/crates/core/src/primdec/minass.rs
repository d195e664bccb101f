//! Minimal associated primes by reduction to dimension zero over a field of
//! rational functions in a maximal independent set of variables.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::factor::factor;
use super::types::PrimeIdeal;
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, canonical, codim, eliminate, independent_set, intersect_all, is_sub, saturate,
};
use crate::groebner::{map_module, GroebnerBasis};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Rational, Ring, RingRef, Submodule};
use crate::verify::irreducible_components;

/// Attempts at a separating linear form before giving up.
const MAX_LINEAR_FORMS: u64 = 60;

/// Working ring with the non-independent variables first, in a block order
/// that makes the independent ones behave like coefficients.
struct Split {
    ring: RingRef,
    nv: usize,
    to_new: Vec<usize>,
    to_old: Vec<usize>,
}

impl Split {
    fn new(orig: &RingRef, indep: &[usize]) -> Result<Split> {
        let n = orig.nvars();
        let deps: Vec<usize> = (0..n).filter(|i| !indep.contains(i)).collect();
        let perm: Vec<usize> = deps.iter().chain(indep).copied().collect();
        let mut to_new = vec![0; n];
        for (p, &v) in perm.iter().enumerate() {
            to_new[v] = p;
        }
        let names: Vec<String> = perm.iter().map(|&v| orig.names()[v].clone()).collect();
        let order = if indep.is_empty() {
            MonomialOrder::degrevlex()
        } else {
            MonomialOrder::block(deps.len())
        };
        Ok(Split {
            ring: Ring::new(names, order)?,
            nv: deps.len(),
            to_new,
            to_old: perm,
        })
    }

    fn into_work(&self, a: &Submodule) -> Submodule {
        map_module(a, &self.ring, &self.to_new)
    }

    fn back(&self, a: &Submodule, orig: &RingRef) -> Submodule {
        map_module(a, orig, &self.to_old)
    }

    fn v_part<'a>(&self, e: &'a [u32]) -> &'a [u32] {
        &e[..self.nv]
    }

    /// Leading coefficient of `g` viewed as a polynomial in the first
    /// `nv` variables.
    fn lead_coeff(&self, g: &Polynomial) -> Polynomial {
        let lead = g.leading_monomial().expect("nonzero").exponents()[..self.nv].to_vec();
        let terms = g
            .terms()
            .iter()
            .filter(|(m, _)| m.exponents()[..self.nv] == lead[..])
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e[..self.nv].iter_mut().for_each(|x| *x = 0);
                (Monomial::new(&e), c.clone())
            });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// True when the basis contains an element free of the first `nv`
    /// variables, so the extension over the coefficient field is the unit
    /// ideal.
    fn extends_to_unit(&self, g: &GroebnerBasis) -> bool {
        g.leading_terms()
            .iter()
            .any(|(_, e)| self.v_part(e).iter().all(|&x| x == 0))
    }

    /// Product of the distinct leading coefficients of a basis.
    fn lead_product(&self, g: &GroebnerBasis) -> Result<Polynomial> {
        let mut seen: Vec<Polynomial> = Vec::new();
        for v in g.elements() {
            let c = self.lead_coeff(v.comp(0)).monic();
            if !c.is_constant() && !seen.contains(&c) {
                seen.push(c);
            }
        }
        seen.iter()
            .try_fold(Polynomial::one(&self.ring), |acc, c| acc.checked_mul(c))
    }

    /// Number of standard monomials in the first `nv` variables; the
    /// extension is assumed zero-dimensional.
    fn vector_space_dim(&self, g: &GroebnerBasis) -> usize {
        let lts: Vec<Vec<u32>> = g
            .leading_terms()
            .into_iter()
            .map(|(_, e)| self.v_part(&e).to_vec())
            .collect();
        let mut bounds = vec![u32::MAX; self.nv];
        for e in &lts {
            let supp: Vec<usize> = (0..self.nv).filter(|&i| e[i] > 0).collect();
            if let [i] = supp[..] {
                bounds[i] = bounds[i].min(e[i]);
            }
        }
        let mut count = 0;
        let mut cur = vec![0u32; self.nv];
        count_standard(&lts, &bounds, 0, &mut cur, &mut count);
        count
    }
}

fn count_standard(lts: &[Vec<u32>], bounds: &[u32], i: usize, cur: &mut Vec<u32>, count: &mut usize) {
    if i == cur.len() {
        if !lts.iter().any(|e| e.iter().zip(cur.iter()).all(|(a, b)| a <= b)) {
            *count += 1;
        }
        return;
    }
    for k in 0..bounds[i] {
        cur[i] = k;
        if lts.iter().any(|e| e.iter().zip(cur.iter()).all(|(a, b)| a <= b)) {
            break;
        }
        count_standard(lts, bounds, i + 1, cur, count);
    }
    cur[i] = 0;
}

/// `f` with `x_var` replaced by `value`.
fn compose(f: &Polynomial, var: usize, value: &Polynomial) -> Result<Polynomial> {
    // Horner from the top degree down
    let coeffs = f.coefficients_in(var);
    let top = coeffs.last().map_or(0, |(e, _)| *e);
    let mut dense = vec![Polynomial::zero(f.ring()); top as usize + 1];
    for (e, c) in coeffs {
        dense[e as usize] = c;
    }
    let mut acc = Polynomial::zero(f.ring());
    for c in dense.iter().rev() {
        acc = acc.checked_mul(value)?.checked_add(c)?;
    }
    Ok(acc)
}

fn compose_ideal(a: &Submodule, var: usize, value: &Polynomial) -> Result<Submodule> {
    let polys = a
        .ideal_gens()?
        .iter()
        .map(|p| compose(p, var, value))
        .collect::<Result<Vec<_>>>()?;
    Submodule::ideal(a.ring(), polys)
}

fn with_gen(a: &Submodule, f: &Polynomial) -> Result<Submodule> {
    let mut polys = a.ideal_gens()?;
    polys.push(f.clone());
    Ok(canonical(&Submodule::ideal(a.ring(), polys)?))
}

/// Distinct irreducible factors involving `var`.
fn factors_in(f: &Polynomial, var: usize) -> Result<Vec<Polynomial>> {
    Ok(factor(f)?
        .into_iter()
        .map(|(g, _)| g)
        .filter(|g| g.degree_in(var) > 0)
        .collect())
}

/// The element of least positive degree in `var` of `J ∩ Q[var, U]`.
fn min_poly(split: &Split, j: &Submodule, var: usize) -> Result<Polynomial> {
    let others: Vec<usize> = (0..split.nv).filter(|&v| v != var).collect();
    let e = if others.is_empty() {
        canonical(j)
    } else {
        eliminate(j, &others)?
    };
    e.ideal_gens()?
        .into_iter()
        .filter(|p| p.degree_in(var) > 0)
        .min_by_key(|p| (p.degree_in(var), p.len()))
        .ok_or_else(|| Error::SplittingFailed(format!("no univariate element in {var}")))
}

struct Search<'a> {
    split: &'a Split,
    seed: u64,
}

impl Search<'_> {
    /// Ideals of the working ring whose extensions are the maximal ideals
    /// over the radical of the extension of `j`.
    fn zero_dim_primes(&self, j: &Submodule, out: &mut Vec<Submodule>) -> Result<()> {
        let g = buchberger(j);
        if self.split.extends_to_unit(&g) {
            return Ok(());
        }
        let nv = self.split.nv;
        let mut radical = j.clone();
        let mut degrees = Vec::with_capacity(nv);
        for var in 0..nv {
            let mu = min_poly(self.split, &radical, var)?;
            let fs = factors_in(&mu, var)?;
            if fs.len() > 1 {
                for f in fs {
                    self.zero_dim_primes(&with_gen(&radical, &f)?, out)?;
                }
                return Ok(());
            }
            let f = fs.into_iter().next().expect("positive degree");
            degrees.push(f.degree_in(var) as usize);
            radical = with_gen(&radical, &f)?;
        }
        let gr = buchberger(&radical);
        if self.split.extends_to_unit(&gr) {
            return Ok(());
        }
        let d = self.split.vector_space_dim(&gr);
        if degrees.contains(&d) {
            out.push(radical);
            return Ok(());
        }
        self.split_by_linear_form(&radical, d, out)
    }

    fn split_by_linear_form(&self, radical: &Submodule, d: usize, out: &mut Vec<Submodule>) -> Result<()> {
        let ring = &self.split.ring;
        let last = self.split.nv - 1;
        for attempt in 0..MAX_LINEAR_FORMS {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(1_000_003).wrapping_add(attempt));
            let r = 1 + attempt as i64 / 6;
            let coeffs: Vec<i64> = (0..last).map(|_| rng.gen_range(-r..=r)).collect();
            if coeffs.iter().all(|&c| c == 0) {
                continue;
            }
            // l = x_last + sum c_i x_i; in coordinates where l is a variable,
            // x_last = y_last - sum c_i y_i.
            let mut to_new = Polynomial::var(ring, last);
            let mut to_old = Polynomial::var(ring, last);
            for (i, &c) in coeffs.iter().enumerate() {
                let term = Polynomial::var(ring, i).scale(&Rational::from_integer(c.into()));
                to_new = to_new.checked_sub(&term)?;
                to_old = to_old.checked_add(&term)?;
            }
            let moved = compose_ideal(radical, last, &to_new)?;
            let mu = min_poly(self.split, &moved, last)?;
            let fs = factors_in(&mu, last)?;
            if fs.len() > 1 {
                for f in fs {
                    let back = compose(&f, last, &to_old)?;
                    self.zero_dim_primes(&with_gen(radical, &back)?, out)?;
                }
                return Ok(());
            }
            if fs[0].degree_in(last) as usize == d {
                out.push(radical.clone());
                return Ok(());
            }
        }
        Err(Error::SplittingFailed(format!(
            "no separating linear form found for {radical}"
        )))
    }
}

struct MinAss {
    ring: RingRef,
    seed: u64,
    found: Vec<Submodule>,
}

impl MinAss {
    fn push(&mut self, p: Submodule) {
        let p = canonical(&p);
        if !self.found.contains(&p) {
            self.found.push(p);
        }
    }

    fn variable_primes(&mut self, gens: &[Polynomial]) {
        let supports: Vec<Vec<u32>> = gens
            .iter()
            .map(|p| {
                let e = p.leading_monomial().expect("nonzero").exponents();
                e.iter().map(|&x| u32::from(x > 0)).collect()
            })
            .collect();
        for comp in irreducible_components(&supports) {
            let vars: Vec<Polynomial> = comp
                .iter()
                .map(|m| {
                    let v = m.iter().position(|&x| x > 0).expect("pure power");
                    Polynomial::var(&self.ring, v)
                })
                .collect();
            self.push(Submodule::ideal(&self.ring, vars).expect("same ring"));
        }
    }

    fn run(&mut self, j: &Submodule) -> Result<()> {
        let g = buchberger(j);
        if g.is_whole() {
            return Ok(());
        }
        let j = g.to_submodule();
        for p in &self.found {
            if is_sub(p, &j)? {
                return Ok(());
            }
        }
        let gens = j.ideal_gens()?;
        if gens.is_empty() {
            self.push(Submodule::zero(&self.ring, 1));
            return Ok(());
        }
        if gens.iter().all(Polynomial::is_monomial) {
            self.variable_primes(&gens);
            return Ok(());
        }
        for f in &gens {
            let fs = factor(f)?;
            if fs.len() > 1 || fs[0].1 > 1 {
                for (h, _) in fs {
                    self.run(&with_gen(&j, &h)?)?;
                }
                return Ok(());
            }
        }
        self.reduce_to_dimension_zero(&j)
    }

    fn reduce_to_dimension_zero(&mut self, j: &Submodule) -> Result<()> {
        let indep = independent_set(&buchberger(j));
        let split = Split::new(&self.ring, &indep)?;
        let jw = split.into_work(j);
        let gw = buchberger(&jw);
        let h = split.lead_product(&gw)?;
        let mut maximal = Vec::new();
        Search {
            split: &split,
            seed: self.seed,
        }
        .zero_dim_primes(&gw.to_submodule(), &mut maximal)?;
        for m in maximal {
            let gm = buchberger(&m);
            let hm = split.lead_product(&gm)?;
            let contracted = if hm.is_constant() {
                gm.to_submodule()
            } else {
                saturate(&gm.to_submodule(), &Submodule::ideal(&split.ring, vec![hm])?)?.module
            };
            self.push(split.back(&contracted, &self.ring));
        }
        if !h.is_constant() {
            let hb = split.back(&Submodule::ideal(&split.ring, vec![h])?, &self.ring);
            self.run(&with_gen(j, hb.entry(0, 0))?)?;
        }
        Ok(())
    }
}

/// Minimal associated primes of an ideal, sorted by codimension and then
/// by printed form.
pub fn min_ass(i: &Submodule) -> Result<Vec<PrimeIdeal>> {
    min_ass_seeded(i, 0)
}

/// As [`min_ass`], with `seed` selecting the sequence of linear forms tried
/// when a coordinate change is needed.
pub fn min_ass_seeded(i: &Submodule, seed: u64) -> Result<Vec<PrimeIdeal>> {
    if !i.is_ideal() {
        return Err(Error::NotIdeal(i.rank()));
    }
    if buchberger(i).is_whole() {
        return Err(Error::UnitModule);
    }
    let mut search = MinAss {
        ring: i.ring().clone(),
        seed,
        found: Vec::new(),
    };
    search.run(i)?;
    let found = search.found;
    let mut minimal = Vec::new();
    for (a, p) in found.iter().enumerate() {
        let mut keep = true;
        for (b, q) in found.iter().enumerate() {
            if a != b && is_sub(q, p)? {
                keep = false;
                break;
            }
        }
        if keep {
            minimal.push(PrimeIdeal {
                codim: codim(p) as usize,
                ideal: p.clone(),
            });
        }
    }
    minimal.sort_by_key(PrimeIdeal::sort_key);
    Ok(minimal)
}

/// Intersection of the minimal primes; the radical when all of them have
/// the same codimension.
pub fn radical_equidim(i: &Submodule) -> Result<Submodule> {
    let primes: Vec<Submodule> = min_ass(i)?.into_iter().map(|p| p.ideal).collect();
    intersect_all(&primes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn ideal(r: &RingRef, gens: &[&str]) -> Submodule {
        Submodule::ideal(r, gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
    }

    fn primes(i: &Submodule) -> Vec<String> {
        min_ass(i).unwrap().iter().map(|p| p.ideal.to_string()).collect()
    }

    #[test]
    fn examples() {
        let r = Ring::degrevlex(&["x", "y", "z"]);
        assert_eq!(primes(&ideal(&r, &["x*y"])), ["x", "y"]);
        assert_eq!(primes(&ideal(&r, &["x^2", "x*y"])), ["x"]);
        assert_eq!(
            primes(&ideal(&r, &["x^2*y", "x*z^2", "y^2*z"])),
            ["x,y", "x,z", "y,z"]
        );
        assert_eq!(primes(&Submodule::zero(&r, 1)), ["0"]);
        assert_eq!(
            min_ass(&ideal(&r, &["1"])).unwrap_err(),
            Error::UnitModule
        );
    }

    #[test]
    fn radicals() {
        let r = Ring::degrevlex(&["x", "y"]);
        assert_eq!(radical_equidim(&ideal(&r, &["x^2"])).unwrap(), ideal(&r, &["x"]));
        assert_eq!(
            radical_equidim(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap(),
            ideal(&r, &["x", "y"])
        );
        assert_eq!(radical_equidim(&ideal(&r, &["x^2*y^2"])).unwrap(), ideal(&r, &["x*y"]));
    }

    #[test]
    fn non_monomial() {
        let r = Ring::degrevlex(&["x", "y", "z"]);
        // the (3,4,5) monomial curve is prime
        let i = ideal(&r, &["x*z-y^2", "x^3-y*z", "x^2*y-z^2"]);
        let ps = min_ass(&i).unwrap();
        assert_eq!(ps.len(), 1);
        let i = ideal(&r, &["x^2-2", "y^2-8"]);
        let ps = min_ass(&i).unwrap();
        assert_eq!(ps.len(), 2, "{ps:?}");
        assert!(ps.iter().all(|p| p.codim == 2));
        let i = ideal(&r, &["x^2+y^2-1", "x-y"]);
        assert_eq!(min_ass(&i).unwrap().len(), 1);
        let i = ideal(&r, &["(x^2+y^2-1)*(x-z)", "y*(x-z)"]);
        let ps: Vec<usize> = min_ass(&i).unwrap().iter().map(|p| p.codim).collect();
        assert_eq!(ps, [1, 2, 2]);
    }
}
