//! Primary decomposition of monomial ideals by splitting, with no Groebner
//! bases involved.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, Rational, RingRef, Submodule};
use crate::primdec::{Component, DecompositionResult, PrimeIdeal};

type Mono = Vec<u32>;

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Minimal generators, sorted for determinism.
fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Mono> = Vec::new();
    // smaller total degree first, so divisors are kept before multiples
    gens.sort_by_key(|m| m.iter().map(|&e| e as u64).sum::<u64>());
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

fn contains(ideal: &[Mono], m: &[u32]) -> bool {
    ideal.iter().any(|g| divides(g, m))
}

fn is_sub(a: &[Mono], b: &[Mono]) -> bool {
    a.iter().all(|m| contains(b, m))
}

/// Irredundant irreducible decomposition; each component is a list of pure
/// powers.
pub(crate) fn irreducible_components(gens: &[Mono]) -> Vec<Vec<Mono>> {
    let mut done: Vec<Vec<Mono>> = Vec::new();
    let mut work = vec![minimalize(gens.to_vec())];
    while let Some(ideal) = work.pop() {
        if ideal.iter().any(|m| m.iter().all(|&e| e == 0)) {
            continue;
        }
        match ideal.iter().find(|m| m.iter().filter(|&&e| e > 0).count() > 1) {
            None => done.push(ideal),
            Some(m) => {
                let i = m.iter().position(|&e| e > 0).expect("nonconstant");
                let mut power = vec![0; m.len()];
                power[i] = m[i];
                let mut rest = m.clone();
                rest[i] = 0;
                for extra in [power, rest] {
                    let mut next = ideal.clone();
                    next.push(extra);
                    work.push(minimalize(next));
                }
            }
        }
    }
    done.sort();
    done.dedup();
    let keep: Vec<bool> = (0..done.len())
        .map(|i| {
            !(0..done.len()).any(|j| j != i && is_sub(&done[j], &done[i]))
        })
        .collect();
    done.into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(c, _)| c)
        .collect()
}

fn intersect(a: &[Mono], b: &[Mono]) -> Vec<Mono> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            out.push(x.iter().zip(y).map(|(p, q)| *p.max(q)).collect());
        }
    }
    minimalize(out)
}

fn support(m: &[u32]) -> Vec<usize> {
    m.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, _)| i)
        .collect()
}

fn to_ideal(ring: &RingRef, gens: &[Mono]) -> Submodule {
    let polys = gens
        .iter()
        .map(|e| Polynomial::monomial(ring, Rational::one(), Monomial::new(e)))
        .collect();
    let ideal = Submodule::ideal(ring, polys).expect("same ring");
    // Minimal monomial generators sorted decreasingly form the reduced
    // basis.
    let mut gens = ideal.into_gens();
    gens.sort_by(|a, b| {
        let (ea, eb) = (
            a.comp(0).leading_monomial().expect("nonzero"),
            b.comp(0).leading_monomial().expect("nonzero"),
        );
        ring.order().cmp_monomials(eb.exponents(), ea.exponents())
    });
    Submodule::ideal(ring, gens.into_iter().map(|g| g.comp(0).clone()).collect())
        .expect("same ring")
}

pub(crate) fn monomial_exponents(i: &Submodule) -> Result<Vec<Mono>> {
    let polys = i.ideal_gens()?;
    let mut out = Vec::new();
    for p in polys {
        match p.terms() {
            [] => {}
            [(m, _)] => out.push(m.exponents().to_vec()),
            _ => return Err(Error::NonMonomial),
        }
    }
    Ok(out)
}

/// Primary decomposition of a monomial ideal: irreducible components grouped
/// by their radicals. Components come sorted by codimension, then by prime.
pub fn monomial_primdec_oracle(i: &Submodule) -> Result<DecompositionResult> {
    let ring = i.ring();
    let n = ring.nvars();
    let gens = monomial_exponents(i)?;
    let irr = irreducible_components(&gens);
    let mut groups: BTreeMap<Vec<usize>, Vec<Mono>> = BTreeMap::new();
    for c in irr {
        let supp: Vec<usize> = c.iter().flat_map(|m| support(m)).collect();
        let mut supp = supp;
        supp.sort_unstable();
        supp.dedup();
        let entry = groups.entry(supp).or_insert_with(|| c.clone());
        *entry = intersect(entry, &c);
    }
    let supports: Vec<Vec<usize>> = groups.keys().cloned().collect();
    let mut components: Vec<Component> = groups
        .into_iter()
        .map(|(supp, q)| {
            let embedded = supports
                .iter()
                .any(|s| s.len() < supp.len() && s.iter().all(|v| supp.contains(v)));
            let prime_gens: Vec<Mono> = supp
                .iter()
                .map(|&v| {
                    let mut e = vec![0; n];
                    e[v] = 1;
                    e
                })
                .collect();
            Component {
                primary: to_ideal(ring, &q),
                prime: PrimeIdeal {
                    ideal: to_ideal(ring, &prime_gens),
                    codim: supp.len(),
                },
                embedded,
                witness: None,
            }
        })
        .collect();
    components.sort_by_key(|c| c.prime.sort_key());
    Ok(DecompositionResult {
        components,
        trace: Vec::new(),
    })
}

/// Intersection of the oracle components of maximal dimension.
pub fn monomial_hull_oracle(i: &Submodule) -> Result<Submodule> {
    let ring = i.ring();
    let gens = monomial_exponents(i)?;
    let irr = irreducible_components(&gens);
    let min_codim = irr
        .iter()
        .map(|c| c.len())
        .min()
        .ok_or(Error::UnitModule)?;
    let mut acc: Option<Vec<Mono>> = None;
    for c in irr.iter().filter(|c| c.len() == min_codim) {
        acc = Some(match acc {
            None => c.clone(),
            Some(a) => intersect(&a, c),
        });
    }
    Ok(to_ideal(ring, &acc.expect("nonempty")))
}

/// Intersection of monomial ideals given as submodules.
pub fn monomial_intersection(list: &[Submodule]) -> Result<Submodule> {
    let ring = list
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty intersection".into()))?
        .ring();
    let mut acc = monomial_exponents(&list[0])?;
    for m in &list[1..] {
        acc = intersect(&acc, &monomial_exponents(m)?);
    }
    Ok(to_ideal(ring, &acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, Ring};

    fn ideal(r: &RingRef, gens: &[&str]) -> Submodule {
        Submodule::ideal(r, gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
    }

    fn shown(d: &DecompositionResult) -> Vec<(String, String, bool)> {
        d.components
            .iter()
            .map(|c| (c.primary.to_string(), c.prime.ideal.to_string(), c.embedded))
            .collect()
    }

    #[test]
    fn principal_product() {
        let r = Ring::degrevlex(&["x", "y"]);
        let d = monomial_primdec_oracle(&ideal(&r, &["x*y"])).unwrap();
        assert_eq!(
            shown(&d),
            [("x".into(), "x".into(), false), ("y".into(), "y".into(), false)]
        );
    }

    #[test]
    fn embedded_example() {
        let r = Ring::degrevlex(&["x", "y"]);
        let d = monomial_primdec_oracle(&ideal(&r, &["x^2", "x*y"])).unwrap();
        assert_eq!(
            shown(&d),
            [
                ("x".into(), "x".into(), false),
                ("x^2,y".into(), "x,y".into(), true)
            ]
        );
    }

    #[test]
    fn three_generator_example() {
        let r = Ring::degrevlex(&["x", "y", "z"]);
        let d = monomial_primdec_oracle(&ideal(&r, &["x^2*y", "x*z^2", "y^2*z"])).unwrap();
        let primes: Vec<String> = d.components.iter().map(|c| c.prime.ideal.to_string()).collect();
        assert_eq!(primes, ["x,y", "x,z", "y,z", "x,y,z"]);
        assert_eq!(
            d.components.iter().filter(|c| c.embedded).count(),
            1
        );
        let all: Vec<Submodule> = d.components.iter().map(|c| c.primary.clone()).collect();
        assert_eq!(
            monomial_intersection(&all).unwrap(),
            to_ideal(&r, &minimalize(vec![vec![2, 1, 0], vec![1, 0, 2], vec![0, 2, 1]]))
        );
    }

    #[test]
    fn rejects_non_monomial() {
        let r = Ring::degrevlex(&["x", "y"]);
        assert_eq!(
            monomial_primdec_oracle(&ideal(&r, &["x+y"])).unwrap_err(),
            Error::NonMonomial
        );
    }

    #[test]
    fn hull_oracle() {
        let r = Ring::degrevlex(&["x", "y"]);
        assert_eq!(
            monomial_hull_oracle(&ideal(&r, &["x^2", "x*y"])).unwrap(),
            ideal(&r, &["x"])
        );
    }
}
