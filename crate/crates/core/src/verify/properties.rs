//! Randomized contracts of the Groebner kernel on small instances. Each
//! check runs `instances` seeded cases and returns the first violation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::corpus::{corpus_ring, random_ideal};
use super::membership::membership_oracle;
use crate::error::Result;
use crate::groebner::{
    buchberger, intersect, is_sub, lift, modulo_kernel, normal_form, quotient_by_ideal, saturate,
};
use crate::polyring::{FreeElement, Monomial, Polynomial, Rational, RingRef, Submodule};

/// Degree bound used when comparing membership with the linear-algebra
/// oracle.
pub const MEMBERSHIP_BOUND: u64 = 6;

fn small_ring(rng: &mut ChaCha8Rng) -> RingRef {
    corpus_ring(rng.gen_range(2..=3))
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &RingRef, max_deg: u32) -> Polynomial {
    random_ideal(rng, ring, 1, max_deg)
        .ideal_gens()
        .expect("an ideal")
        .remove(0)
}

/// One or two terms of degree at most 2 with coefficients in `{±1, ±2}`.
/// Dense entries make module kernels blow up in coefficient size.
fn sparse_poly(rng: &mut ChaCha8Rng, ring: &RingRef) -> Polynomial {
    let n = ring.nvars();
    let terms = rng.gen_range(1..=2);
    Polynomial::from_terms(
        ring,
        (0..terms).map(|_| {
            let mut e = vec![0u32; n];
            for _ in 0..rng.gen_range(0..=2) {
                e[rng.gen_range(0..n)] += 1;
            }
            let c: i64 = [-2, -1, 1, 2][rng.gen_range(0..4)];
            (Monomial::new(&e), Rational::from_integer(c.into()))
        }),
    )
}

fn sparse_ideal(rng: &mut ChaCha8Rng, ring: &RingRef) -> Submodule {
    let k = rng.gen_range(1..=2);
    Submodule::ideal(ring, (0..k).map(|_| sparse_poly(rng, ring)).collect()).expect("same ring")
}

/// A rank-2 submodule with one to `max_gens` sparse generators.
fn random_module(rng: &mut ChaCha8Rng, ring: &RingRef, max_gens: usize) -> Submodule {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| {
            let second = if rng.gen_bool(0.3) {
                Polynomial::zero(ring)
            } else {
                sparse_poly(rng, ring)
            };
            FreeElement::new(vec![sparse_poly(rng, ring), second])
        })
        .collect();
    Submodule::new(ring, 2, gens).expect("same ring")
}

fn ideal_elem(f: Polynomial) -> FreeElement {
    FreeElement::new(vec![f])
}

fn at<T>(k: usize, r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("instance {k}: {e}"))
}

fn ensure(k: usize, ok: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(format!("instance {k}: {}", what()))
    }
}

/// `NF(NF(v)) = NF(v)` and `v - NF(v)` lies in the span.
pub fn check_normal_form(seed: u64, instances: usize) -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..instances {
        let ring = small_ring(&mut rng);
        let (a, v) = if k % 2 == 0 {
            let a = random_ideal(&mut rng, &ring, 3, 3);
            (a, ideal_elem(random_poly(&mut rng, &ring, 4)))
        } else {
            let a = random_module(&mut rng, &ring, 3);
            let v = FreeElement::new(vec![
                random_poly(&mut rng, &ring, 3),
                random_poly(&mut rng, &ring, 3),
            ]);
            (a, v)
        };
        let g = buchberger(&a);
        let r = at(k, normal_form(&v, &g))?;
        ensure(k, at(k, normal_form(&r, &g))? == r, || format!("NF not idempotent on <{a}>"))?;
        let diff = at(k, v.checked_sub(&r))?;
        ensure(k, at(k, g.contains(&diff))?, || format!("v - NF(v) outside <{a}>"))?;
    }
    Ok(())
}

/// Explicit combinations are members by both tests, and every probe the
/// oracle certifies is found by the basis.
pub fn check_membership(seed: u64, instances: usize) -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut positives = 0;
    for k in 0..instances {
        let ring = small_ring(&mut rng);
        let a = random_ideal(&mut rng, &ring, 3, 3);
        let g = buchberger(&a);
        // generators and multipliers have degree at most 3, so products
        // stay within the bound
        let coeffs: Vec<Polynomial> = (0..a.ngens()).map(|_| random_poly(&mut rng, &ring, 3)).collect();
        let member = at(k, a.combine(&coeffs))?;
        ensure(k, at(k, g.contains(&member))?, || format!("combination not in basis of <{a}>"))?;
        ensure(k, membership_oracle(&member, &a, MEMBERSHIP_BOUND), || {
            format!("oracle rejects a combination of <{a}>")
        })?;
        if !member.is_zero() {
            positives += 1;
        }
        let probe = ideal_elem(random_poly(&mut rng, &ring, 3));
        let by_gb = at(k, g.contains(&probe))?;
        let by_oracle = membership_oracle(&probe, &a, MEMBERSHIP_BOUND);
        ensure(k, !by_oracle || by_gb, || format!("{probe} certified in <{a}> but not reduced to 0"))?;
    }
    if positives * 2 <= instances {
        return Err(format!("only {positives} nonzero members drawn"));
    }
    Ok(())
}

/// `A ⊆ A : J^∞`, saturating again changes nothing, and so does one more
/// quotient by `J`.
pub fn check_saturation(seed: u64, instances: usize) -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..instances {
        let ring = small_ring(&mut rng);
        let a = if k % 4 == 3 {
            random_module(&mut rng, &ring, 3)
        } else {
            random_ideal(&mut rng, &ring, 3, 3)
        };
        let j = random_ideal(&mut rng, &ring, 2, 2);
        let s = at(k, saturate(&a, &j))?;
        ensure(k, at(k, is_sub(&a, &s.module))?, || format!("<{a}> not inside its saturation"))?;
        let again = at(k, saturate(&s.module, &j))?;
        ensure(k, again.exponent == 0 && again.module == s.module, || {
            format!("saturation of <{a}> by <{j}> is not stable")
        })?;
        ensure(k, at(k, quotient_by_ideal(&s.module, &j))? == s.module, || {
            format!("quotient moves the saturation of <{a}> by <{j}>")
        })?;
    }
    Ok(())
}

/// `A ⊆ A : J` and `J (A : J) ⊆ A`.
pub fn check_quotient(seed: u64, instances: usize) -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..instances {
        let ring = small_ring(&mut rng);
        let a = if k % 3 == 2 {
            random_module(&mut rng, &ring, 3)
        } else {
            random_ideal(&mut rng, &ring, 3, 3)
        };
        let j = random_ideal(&mut rng, &ring, 2, 2);
        let q = at(k, quotient_by_ideal(&a, &j))?;
        ensure(k, at(k, is_sub(&a, &q))?, || format!("<{a}> not inside <{a}> : <{j}>"))?;
        let back = at(k, q.ideal_product(&j))?;
        ensure(k, at(k, is_sub(&back, &a))?, || format!("<{j}> (<{a}> : <{j}>) not inside <{a}>"))?;
    }
    Ok(())
}

/// Commutative, associative, below both operands, and above the product
/// for ideals.
pub fn check_intersection(seed: u64, instances: usize) -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..instances {
        let ring = small_ring(&mut rng);
        let modules = k % 4 == 3;
        let draw = |rng: &mut ChaCha8Rng| {
            if modules {
                // triples of three-generator modules are not small instances
                random_module(rng, &ring, 2)
            } else {
                sparse_ideal(rng, &ring)
            }
        };
        let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let ab = at(k, intersect(&a, &b))?;
        ensure(k, ab == at(k, intersect(&b, &a))?, || format!("<{a}> and <{b}> do not commute"))?;
        ensure(k, at(k, is_sub(&ab, &a))? && at(k, is_sub(&ab, &b))?, || {
            format!("<{a}> ∩ <{b}> not inside both")
        })?;
        let left = at(k, intersect(&ab, &c))?;
        let bc = at(k, intersect(&b, &c))?;
        let right = at(k, intersect(&a, &bc))?;
        ensure(k, left == right, || format!("not associative on <{a}>, <{b}>, <{c}>"))?;
        if !modules {
            let prod = at(k, a.ideal_product(&b))?;
            ensure(k, at(k, is_sub(&prod, &ab))?, || format!("<{a}><{b}> not inside the intersection"))?;
        }
    }
    Ok(())
}

/// `A lift(A, B) = B` for `B` inside `A`; `A modulo(A, C) ⊆ C`; and the
/// syzygies of `A` lie in every such kernel.
pub fn check_lift_and_modulo(seed: u64, instances: usize) -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..instances {
        let ring = small_ring(&mut rng);
        let a = if k % 2 == 0 {
            random_module(&mut rng, &ring, 3)
        } else {
            random_ideal(&mut rng, &ring, 3, 2)
        };
        let coeffs: Vec<Polynomial> = (0..a.ngens()).map(|_| random_poly(&mut rng, &ring, 2)).collect();
        let member = at(k, a.combine(&coeffs))?;
        let b = at(k, Submodule::new(&ring, a.rank(), vec![member, a.gen(0).clone()]))?;
        let t = at(k, lift(&a, &b))?;
        ensure(k, at(k, a.matmul(&t))? == b, || format!("lift into <{a}> does not reproduce <{b}>"))?;

        let other = if a.rank() == 2 {
            random_module(&mut rng, &ring, 3)
        } else {
            random_ideal(&mut rng, &ring, 2, 2)
        };
        let kern = at(k, modulo_kernel(&a, &other))?;
        let image = at(k, a.matmul(&kern))?;
        ensure(k, at(k, is_sub(&image, &other))?, || format!("<{a}> maps its kernel outside <{other}>"))?;
        let syz = at(k, modulo_kernel(&a, &Submodule::zero(&ring, a.rank())))?;
        ensure(k, at(k, is_sub(&syz, &kern))?, || format!("syzygies of <{a}> outside the kernel"))?;
    }
    Ok(())
}
