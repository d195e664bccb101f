//! Factorization over the rationals. One variable: squarefree decomposition,
//! Cantor-Zassenhaus modulo a small prime, Hensel lifting and recombination.
//! Several variables: a univariate image at an integer point, lifted in the
//! remaining variables.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::intersect;
use crate::polyring::{MonomialOrder, Monomial, Polynomial, Rational, RingRef, Submodule};

type ZPoly = Vec<BigInt>;
type QPoly = Vec<Rational>;
type PPoly = Vec<u64>;

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn deg<T>(v: &[T]) -> usize {
    v.len().saturating_sub(1)
}

// ---- dense arithmetic over Q ------------------------------------------

fn q_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

fn q_mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn q_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut r = a.clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = b.last().expect("nonzero divisor").recip();
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty") * &inv;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &c * y;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn q_monic(a: &QPoly) -> QPoly {
    match a.last() {
        Some(c) => {
            let inv = c.recip();
            a.iter().map(|x| x * &inv).collect()
        }
        None => Vec::new(),
    }
}

fn q_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = q_divrem(&a, &b).1;
        a = b;
        b = r;
    }
    q_monic(&a)
}

fn q_deriv(a: &QPoly) -> QPoly {
    let mut out: QPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut out);
    out
}

/// Yun's squarefree decomposition of a monic polynomial.
fn q_squarefree(f: &QPoly) -> Vec<(QPoly, u32)> {
    let mut out = Vec::new();
    let df = q_deriv(f);
    let b = q_gcd(f, &df);
    let mut c = q_divrem(f, &b).0;
    let mut d = q_sub(&q_divrem(&df, &b).0, &q_deriv(&c));
    let mut i = 1;
    while deg(&c) > 0 {
        let a = q_gcd(&c, &d);
        c = q_divrem(&c, &a).0;
        d = q_sub(&q_divrem(&d, &a).0, &q_deriv(&c));
        if deg(&a) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Integer multiple with coprime coefficients and positive leading
/// coefficient.
fn q_to_primitive(a: &QPoly) -> ZPoly {
    let mut l = BigInt::one();
    for c in a {
        l = l.lcm(c.denom());
    }
    let mut z: ZPoly = a.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    z_make_primitive(&mut z);
    z
}

fn z_make_primitive(z: &mut ZPoly) {
    let mut g = BigInt::zero();
    for c in z.iter() {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return;
    }
    if z.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    for c in z.iter_mut() {
        *c /= &g;
    }
}

// ---- dense arithmetic over Z and Z/m ------------------------------------

fn z_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn z_add(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

fn z_sub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let neg: ZPoly = b.iter().map(|c| -c).collect();
    z_add(a, &neg)
}

fn z_scale(a: &ZPoly, c: &BigInt) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

/// `a / b` over Z when the division is exact.
fn z_div_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let mut r = a.clone();
    if r.len() < b.len() {
        return r.is_empty().then(Vec::new);
    }
    let lb = b.last().expect("nonzero divisor");
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let (c, rem) = r.last().expect("nonempty").div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &c * y;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    r.is_empty().then(|| {
        trim(&mut q);
        q
    })
}

fn m_reduce(a: &ZPoly, m: &BigInt) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    trim(&mut out);
    out
}

/// Division by a monic polynomial modulo `m`.
fn m_divrem_monic(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let mut r = m_reduce(a, m);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty").clone();
        for (i, y) in b.iter().enumerate() {
            r[shift + i] = (&r[shift + i] - &c * y).mod_floor(m);
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn symmetric(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half: BigInt = m / 2;
    let mut out: ZPoly = a
        .iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect();
    trim(&mut out);
    out
}

// ---- arithmetic modulo a word-sized prime ---------------------------------

fn p_from_z(a: &ZPoly, p: u64) -> PPoly {
    let pb = BigInt::from(p);
    let mut out: PPoly = a
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("reduced"))
        .collect();
    trim(&mut out);
    out
}

fn p_to_z(a: &PPoly) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn p_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn p_inv(a: u64, p: u64) -> u64 {
    p_pow(a, p - 2, p)
}

fn p_sub(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = (out[i] + p - c) % p;
    }
    trim(&mut out);
    out
}

fn p_mul(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

fn p_divrem(a: &PPoly, b: &PPoly, p: u64) -> (PPoly, PPoly) {
    let mut r = a.clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = p_inv(*b.last().expect("nonzero divisor"), p);
    let mut q = vec![0; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty") * inv % p;
        for (i, &y) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * y % p) % p;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn p_monic(a: &PPoly, p: u64) -> PPoly {
    match a.last() {
        Some(&c) => {
            let inv = p_inv(c, p);
            a.iter().map(|&x| x * inv % p).collect()
        }
        None => Vec::new(),
    }
}

fn p_gcd(a: &PPoly, b: &PPoly, p: u64) -> PPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = p_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    p_monic(&a, p)
}

/// `(s, t)` with `s a + t b = 1`, assuming `gcd(a, b) = 1`.
fn p_bezout(a: &PPoly, b: &PPoly, p: u64) -> (PPoly, PPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (PPoly, PPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (PPoly, PPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = p_divrem(&r0, &r1, p);
        let s2 = p_sub(&s0, &p_mul(&q, &s1, p), p);
        let t2 = p_sub(&t0, &p_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = p_inv(r0[0], p);
    let sc = |v: &PPoly| {
        let mut out: PPoly = v.iter().map(|&x| x * inv % p).collect();
        trim(&mut out);
        out
    };
    (sc(&s0), sc(&t0))
}

fn p_powmod(base: &PPoly, e: &BigInt, m: &PPoly, p: u64) -> PPoly {
    let mut result: PPoly = vec![1];
    let mut b = p_divrem(base, m, p).1;
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            result = p_divrem(&p_mul(&result, &b, p), m, p).1;
        }
        if i + 1 < bits {
            b = p_divrem(&p_mul(&b, &b, p), m, p).1;
        }
    }
    result
}

fn p_deriv(a: &PPoly, p: u64) -> PPoly {
    let mut out: PPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * (i as u64 % p) % p)
        .collect();
    trim(&mut out);
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn ddf(f: &PPoly, p: u64) -> Vec<(PPoly, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: PPoly = vec![0, 1];
    let mut h = x.clone();
    let pb = BigInt::from(p);
    let mut d = 1;
    while deg(&f) >= 2 * d {
        h = p_powmod(&h, &pb, &f, p);
        let g = p_gcd(&p_sub(&h, &x, p), &f, p);
        if deg(&g) > 0 {
            f = p_divrem(&f, &g, p).0;
            h = p_divrem(&h, &f, p).1;
            out.push((g, d));
        }
        d += 1;
    }
    if deg(&f) > 0 {
        let df = deg(&f);
        out.push((f, df));
    }
    out
}

/// Equal-degree splitting of a product of irreducibles of degree `d`.
fn edf(g: &PPoly, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<PPoly> {
    let n = deg(g);
    if n <= d {
        return vec![g.clone()];
    }
    let e: BigInt = (num_traits::pow(BigInt::from(p), d) - 1) / 2;
    loop {
        let mut a: PPoly = (0..n).map(|_| rng.gen_range(0..p)).collect();
        trim(&mut a);
        if deg(&a) == 0 {
            continue;
        }
        let b = p_sub(&p_powmod(&a, &e, g, p), &vec![1], p);
        let u = p_gcd(&b, g, p);
        if deg(&u) > 0 && deg(&u) < n {
            let v = p_monic(&p_divrem(g, &u, p).0, p);
            let mut out = edf(&u, d, p, rng);
            out.extend(edf(&v, d, p, rng));
            return out;
        }
    }
}

fn factor_mod_p(f: &PPoly, p: u64, rng: &mut ChaCha8Rng) -> Vec<PPoly> {
    let mut out = Vec::new();
    for (g, d) in ddf(&p_monic(f, p), p) {
        out.extend(edf(&g, d, p, rng));
    }
    out.sort();
    out
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

// ---- Hensel lifting ----------------------------------------------------

struct Lift {
    g: ZPoly,
    h: ZPoly,
    s: ZPoly,
    t: ZPoly,
}

/// One quadratic Hensel step from modulus `m` to `m2` (with `m | m2 | m^2`).
fn hensel_step(f: &ZPoly, l: &Lift, m2: &BigInt) -> Lift {
    let e = m_reduce(&z_sub(f, &z_mul(&l.g, &l.h)), m2);
    let (q, r) = m_divrem_monic(&z_mul(&l.s, &e), &l.h, m2);
    let g = m_reduce(&z_add(&l.g, &z_add(&z_mul(&l.t, &e), &z_mul(&q, &l.g))), m2);
    let h = m_reduce(&z_add(&l.h, &r), m2);
    let b = m_reduce(
        &z_sub(&z_add(&z_mul(&l.s, &g), &z_mul(&l.t, &h)), &vec![BigInt::one()]),
        m2,
    );
    let (c, d) = m_divrem_monic(&z_mul(&l.s, &b), &h, m2);
    let s = m_reduce(&z_sub(&l.s, &d), m2);
    let t = m_reduce(&z_sub(&z_sub(&l.t, &z_mul(&l.t, &b)), &z_mul(&c, &g)), m2);
    Lift { g, h, s, t }
}

/// Monic factors of `f / lc(f)` modulo `p^k` lifting the given factors mod p.
fn lift_factors(f: &ZPoly, facs: &[PPoly], p: u64, k: u32) -> Vec<ZPoly> {
    let pb = BigInt::from(p);
    let pk = num_traits::pow(pb.clone(), k as usize);
    let lc = f.last().expect("nonzero").clone();
    if facs.len() == 1 {
        let inv = lc.modinv(&pk).expect("leading coefficient prime to p");
        return vec![m_reduce(&z_scale(f, &inv), &pk)];
    }
    let mid = facs.len() / 2;
    let prod = |fs: &[PPoly]| fs.iter().fold(vec![1u64], |acc, g| p_mul(&acc, g, p));
    let lc_p = lc.mod_floor(&pb).to_u64().expect("reduced");
    let g0 = p_mul(&prod(&facs[..mid]), &vec![lc_p], p);
    let h0 = prod(&facs[mid..]);
    let (s0, t0) = p_bezout(&g0, &h0, p);
    let mut l = Lift {
        g: p_to_z(&g0),
        h: p_to_z(&h0),
        s: p_to_z(&s0),
        t: p_to_z(&t0),
    };
    let mut e = 1;
    while e < k {
        e = (2 * e).min(k);
        l = hensel_step(f, &l, &num_traits::pow(pb.clone(), e as usize));
    }
    let mut out = lift_factors(&l.g, &facs[..mid], p, k);
    out.extend(lift_factors(&l.h, &facs[mid..], p, k));
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Irreducible factors over Z of a primitive squarefree polynomial with
/// positive leading coefficient.
fn zassenhaus(f: &ZPoly, seed: u64) -> Vec<ZPoly> {
    let n = deg(f);
    if n <= 1 {
        return vec![f.clone()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(u64, Vec<PPoly>)> = None;
    let mut good = 0;
    for p in small_primes().take(300) {
        let fp = p_from_z(f, p);
        if deg(&fp) != n || deg(&p_gcd(&fp, &p_deriv(&fp, p), p)) > 0 {
            continue;
        }
        let facs = factor_mod_p(&fp, p, &mut rng);
        if best.as_ref().map_or(true, |(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        good += 1;
        if good == 5 {
            break;
        }
    }
    let (p, facs) = best.expect("some prime keeps the polynomial squarefree");
    if facs.len() == 1 {
        return vec![f.clone()];
    }
    let lc = f.last().expect("nonzero").clone();
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound: BigInt = lc.abs() * (norm2.sqrt() + 1) * (BigInt::one() << n);
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= &bound * 2 {
        k += 1;
        pk *= &pb;
    }
    let mut lifted = lift_factors(f, &facs, p, k);
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        for s in subsets(lifted.len(), size) {
            let lc_rest = rest.last().expect("nonzero").clone();
            let mut cand = vec![lc_rest];
            for &i in &s {
                cand = m_reduce(&z_mul(&cand, &lifted[i]), &pk);
            }
            let mut cand = symmetric(&cand, &pk);
            z_make_primitive(&mut cand);
            if let Some(q) = z_div_exact(&rest, &cand) {
                found = Some((s, cand, q));
                break;
            }
        }
        match found {
            Some((s, cand, q)) => {
                out.push(cand);
                rest = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !s.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    if deg(&rest) > 0 {
        z_make_primitive(&mut rest);
        out.push(rest);
    }
    out
}

// ---- conversion to and from sparse polynomials -----------------------------

fn to_dense(f: &Polynomial, var: usize) -> QPoly {
    let mut out = vec![Rational::zero(); f.degree_in(var) as usize + 1];
    for (m, c) in f.terms() {
        out[m.exponents()[var] as usize] = c.clone();
    }
    trim(&mut out);
    out
}

fn from_dense(ring: &RingRef, var: usize, a: &[Rational]) -> Polynomial {
    let n = ring.nvars();
    Polynomial::from_terms(
        ring,
        a.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
            let mut e = vec![0u32; n];
            e[var] = i as u32;
            (Monomial::new(&e), c.clone())
        }),
    )
}

fn z_to_q(a: &ZPoly) -> QPoly {
    a.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

fn sort_factors(out: &mut [(Polynomial, u32)]) {
    out.sort_by_key(|(f, e)| (f.total_degree(), f.to_string(), *e));
}

/// Monic irreducible factors of a polynomial in at most one variable, with
/// multiplicities.
pub fn univariate_factor(f: &Polynomial) -> Result<Vec<(Polynomial, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let vars = f.variables();
    if vars.len() > 1 {
        return Err(Error::InvalidArgument(format!(
            "{f} involves more than one variable"
        )));
    }
    let Some(&var) = vars.first() else {
        return Ok(Vec::new());
    };
    let ring = f.ring();
    let dense = q_monic(&to_dense(f, var));
    let mut out = Vec::new();
    for (part, e) in q_squarefree(&dense) {
        for g in zassenhaus(&q_to_primitive(&part), 0) {
            out.push((from_dense(ring, var, &q_monic(&z_to_q(&g))), e));
        }
    }
    sort_factors(&mut out);
    Ok(out)
}

// ---- several variables -------------------------------------------------

/// `f / g` when `g` divides `f`.
pub(crate) fn div_exact(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let (gc, gm) = g.leading_term().expect("nonzero divisor");
    let (gc, gm) = (gc.clone(), gm.clone());
    let ring = f.ring();
    let mut r = f.clone();
    let mut q = Vec::new();
    while let Some((c, m)) = r.leading_term() {
        if !gm.divides(m) {
            return None;
        }
        let t = (gm.quotient_of(m), c / &gc);
        r = r.checked_sub(&g.mul_term(&t.1, &t.0).ok()?).ok()?;
        q.push(t);
    }
    Some(Polynomial::from_terms(ring, q))
}

/// Monic greatest common divisor.
pub(crate) fn gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let ring = f.ring();
    if f.is_zero() {
        return Ok(g.monic());
    }
    if g.is_zero() {
        return Ok(f.monic());
    }
    if f.is_constant() || g.is_constant() {
        return Ok(Polynomial::one(ring));
    }
    let (vf, vg) = (f.variables(), g.variables());
    if vf.len() == 1 && vf == vg {
        let d = q_gcd(&to_dense(f, vf[0]), &to_dense(g, vf[0]));
        return Ok(from_dense(ring, vf[0], &d));
    }
    let i = intersect(
        &Submodule::ideal(ring, vec![f.clone()])?,
        &Submodule::ideal(ring, vec![g.clone()])?,
    )?;
    let l = i.gen(0).comp(0).clone();
    let prod = f.checked_mul(g)?;
    Ok(div_exact(&prod, &l).expect("lcm divides the product").monic())
}

/// Power-series inverse of `a` (with nonzero constant term) up to degree
/// `bound` in the `mask` variables.
fn series_inverse(a: &Polynomial, mask: &[bool], bound: u64) -> Result<Polynomial> {
    let ring = a.ring();
    let c0 = a.homogeneous_part(mask, 0);
    let inv0 = c0.constant_value().expect("constant term").recip();
    let r = Polynomial::one(ring).checked_sub(&a.scale(&inv0))?;
    let mut term = Polynomial::one(ring);
    let mut acc = Polynomial::one(ring);
    for _ in 0..bound {
        term = term.checked_mul(&r)?.truncate(mask, bound);
        if term.is_zero() {
            break;
        }
        acc = acc.checked_add(&term)?;
    }
    Ok(acc.scale(&inv0))
}

/// Remainder of `a` modulo `g`, a monic polynomial in `var` alone; the
/// other variables act as coefficients.
fn rem_in_var(a: &Polynomial, g: &Polynomial, var: usize) -> Result<Polynomial> {
    let dg = g.degree_in(var);
    let mut r = a.clone();
    loop {
        let d = r.degree_in(var);
        if r.is_zero() || d < dg {
            return Ok(r);
        }
        let top = r.lc_in(var);
        let mut e = vec![0u32; r.ring().nvars()];
        e[var] = d - dg;
        let shift = top.mul_term(&Rational::one(), &Monomial::new(&e))?;
        r = r.checked_sub(&shift.checked_mul(g)?)?;
    }
}

fn content_in(f: &Polynomial, var: usize) -> Result<Polynomial> {
    let mut c = Polynomial::zero(f.ring());
    for (_, k) in f.coefficients_in(var) {
        c = gcd(&c, &k)?;
        if c.is_constant() {
            break;
        }
    }
    Ok(c)
}

/// Yun's decomposition in `var` of a polynomial primitive in `var`.
fn squarefree_in(f: &Polynomial, var: usize) -> Result<Vec<(Polynomial, u32)>> {
    let mut out = Vec::new();
    let df = f.derivative(var);
    let b = gcd(f, &df)?;
    let mut c = div_exact(f, &b).expect("gcd divides");
    let mut d = div_exact(&df, &b).expect("gcd divides").checked_sub(&c.derivative(var))?;
    let mut i = 1;
    while c.degree_in(var) > 0 {
        let a = gcd(&c, &d)?;
        c = div_exact(&c, &a).expect("gcd divides");
        d = div_exact(&d, &a)
            .expect("gcd divides")
            .checked_sub(&c.derivative(var))?;
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

fn eval_point(others: &[usize], attempt: u64, n: usize) -> Vec<Rational> {
    let mut point = vec![Rational::zero(); n];
    if attempt == 0 {
        return point;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(attempt);
    let r = 1 + (attempt as i64) / 4;
    for &v in others {
        point[v] = Rational::from_integer(rng.gen_range(-r..=r).into());
    }
    point
}

fn substitute_all(f: &Polynomial, vars: &[usize], point: &[Rational]) -> Polynomial {
    vars.iter().fold(f.clone(), |acc, &v| acc.substitute(v, &point[v]))
}

fn shift_all(f: &Polynomial, vars: &[usize], point: &[Rational], sign: bool) -> Polynomial {
    vars.iter().fold(f.clone(), |acc, &v| {
        let a = if sign { point[v].clone() } else { -point[v].clone() };
        acc.shift(v, &a)
    })
}

/// Irreducible factors of `f`, squarefree and primitive in `var`, which
/// involves further variables.
fn factor_squarefree_multi(f: &Polynomial, var: usize) -> Result<Vec<Polynomial>> {
    let ring = f.ring();
    let n = ring.nvars();
    let others: Vec<usize> = f.variables().into_iter().filter(|&v| v != var).collect();
    let dx = f.degree_in(var);
    let mut attempt = 0u64;
    let (point, image) = loop {
        let point = eval_point(&others, attempt, n);
        attempt += 1;
        if attempt > 400 {
            return Err(Error::SplittingFailed(format!("no good evaluation point for {f}")));
        }
        let img = substitute_all(f, &others, &point);
        if img.degree_in(var) != dx {
            continue;
        }
        let dense = to_dense(&img, var);
        if deg(&q_gcd(&dense, &q_deriv(&dense))) > 0 {
            continue;
        }
        break (point, dense);
    };
    let uni = zassenhaus(&q_to_primitive(&image), 0);
    if uni.len() == 1 {
        return Ok(vec![f.monic()]);
    }
    let mut mask = vec![false; n];
    for &v in &others {
        mask[v] = true;
    }
    let fs = shift_all(f, &others, &point, true);
    let lc = fs.lc_in(var);
    let bound = fs.degree_in_vars(&mask) + lc.degree_in_vars(&mask);
    let inv = series_inverse(&lc, &mask, bound)?;
    let target = fs.checked_mul(&inv)?.truncate(&mask, bound);
    let base: Vec<QPoly> = uni.iter().map(|g| q_monic(&z_to_q(g))).collect();
    // s_i with sum_i s_i prod_(j != i) g_j = 1
    let cofactors: Vec<QPoly> = (0..base.len())
        .map(|i| {
            let others_prod = base
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(vec![Rational::one()], |acc, (_, g)| q_mul(&acc, g));
            q_inverse_mod(&others_prod, &base[i])
        })
        .collect();
    let base_polys: Vec<Polynomial> = base.iter().map(|g| from_dense(ring, var, g)).collect();
    let cof_polys: Vec<Polynomial> = cofactors.iter().map(|g| from_dense(ring, var, g)).collect();
    let mut lifted = base_polys.clone();
    for k in 1..=bound {
        let prod = lifted.iter().try_fold(Polynomial::one(ring), |acc, g| {
            acc.checked_mul(g).map(|p| p.truncate(&mask, k))
        })?;
        let err = target.checked_sub(&prod)?.homogeneous_part(&mask, k);
        if err.is_zero() {
            continue;
        }
        for i in 0..lifted.len() {
            let delta = rem_in_var(&cof_polys[i].checked_mul(&err)?, &base_polys[i], var)?;
            lifted[i] = lifted[i].checked_add(&delta)?;
        }
    }
    let mut rest = fs;
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        let lc_rest = rest.lc_in(var);
        for s in subsets(lifted.len(), size) {
            let mut cand = lc_rest.clone();
            for &i in &s {
                cand = cand.checked_mul(&lifted[i])?.truncate(&mask, bound);
            }
            let c = content_in(&cand, var)?;
            let cand = div_exact(&cand, &c).expect("content divides");
            if let Some(q) = div_exact(&rest, &cand) {
                found = Some((s, cand, q));
                break;
            }
        }
        match found {
            Some((s, cand, q)) => {
                out.push(cand);
                rest = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !s.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    if rest.degree_in(var) > 0 {
        out.push(rest);
    }
    Ok(out
        .into_iter()
        .map(|g| shift_all(&g, &others, &point, false).monic())
        .collect())
}

fn q_inverse_mod(a: &QPoly, m: &QPoly) -> QPoly {
    let (mut r0, mut r1) = (m.clone(), q_divrem(a, m).1);
    let (mut t0, mut t1): (QPoly, QPoly) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = q_divrem(&r0, &r1);
        let t2 = q_sub(&t0, &q_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = r0[0].recip();
    t0.iter().map(|c| c * &inv).collect()
}

fn factor_rec(f: &Polynomial, out: &mut Vec<(Polynomial, u32)>, mult: u32) -> Result<()> {
    if f.is_constant() {
        return Ok(());
    }
    let ring = f.ring().clone();
    let n = ring.nvars();
    // pull out monomial factors
    let mut low = vec![u32::MAX; n];
    for (m, _) in f.terms() {
        for (l, &e) in low.iter_mut().zip(m.exponents()) {
            *l = (*l).min(e);
        }
    }
    let mut f = f.clone();
    if low.iter().any(|&e| e > 0) {
        let mono = Polynomial::monomial(&ring, Rational::one(), Monomial::new(&low));
        f = div_exact(&f, &mono).expect("monomial content divides");
        for (v, &e) in low.iter().enumerate() {
            if e > 0 {
                out.push((Polynomial::var(&ring, v), e * mult));
            }
        }
    }
    let vars = f.variables();
    match vars.len() {
        0 => return Ok(()),
        1 => {
            for (g, e) in univariate_factor(&f)? {
                out.push((g, e * mult));
            }
            return Ok(());
        }
        _ => {}
    }
    let var = *vars
        .iter()
        .min_by_key(|&&v| (f.degree_in(v), v))
        .expect("nonempty");
    let c = content_in(&f, var)?;
    if !c.is_constant() {
        factor_rec(&c, out, mult)?;
        f = div_exact(&f, &c).expect("content divides");
    }
    for (part, e) in squarefree_in(&f, var)? {
        if part.variables().len() == 1 {
            factor_rec(&part, out, mult * e)?;
            continue;
        }
        for g in factor_squarefree_multi(&part, var)? {
            out.push((g, mult * e));
        }
    }
    Ok(())
}

/// Monic irreducible factors with multiplicities, in a fixed order.
pub fn factor(f: &Polynomial) -> Result<Vec<(Polynomial, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let ring = f.ring();
    let work = ring.with_order(MonomialOrder::degrevlex())?;
    let mut raw = Vec::new();
    factor_rec(&f.reorder(&work), &mut raw, 1)?;
    let mut merged: Vec<(Polynomial, u32)> = Vec::new();
    for (g, e) in raw {
        let g = g.reorder(ring).monic();
        match merged.iter_mut().find(|(h, _)| *h == g) {
            Some((_, k)) => *k += e,
            None => merged.push((g, e)),
        }
    }
    sort_factors(&mut merged);
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, Ring};

    fn shown(fs: &[(Polynomial, u32)]) -> Vec<(String, u32)> {
        fs.iter().map(|(f, e)| (f.to_string(), *e)).collect()
    }

    #[test]
    fn univariate_examples() {
        let r = Ring::degrevlex(&["x"]);
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        assert_eq!(
            shown(&univariate_factor(&p("x^2-1")).unwrap()),
            [("x+1".into(), 1), ("x-1".into(), 1)]
        );
        assert_eq!(shown(&univariate_factor(&p("x^2+1")).unwrap()), [("x^2+1".into(), 1)]);
        assert_eq!(
            shown(&univariate_factor(&p("x^4-2*x^2+1")).unwrap()),
            [("x+1".into(), 2), ("x-1".into(), 2)]
        );
    }

    #[test]
    fn univariate_needs_recombination() {
        // irreducible over Q but splits modulo every prime
        let r = Ring::degrevlex(&["x"]);
        let f = parse_polynomial(&r, "x^4+1").unwrap();
        assert_eq!(shown(&univariate_factor(&f).unwrap()), [("x^4+1".into(), 1)]);
        let g = parse_polynomial(&r, "(x^4-10*x^2+1)*(x^2-2)*(3*x+2)").unwrap();
        assert_eq!(
            shown(&univariate_factor(&g).unwrap()),
            [
                ("x+2/3".into(), 1),
                ("x^2-2".into(), 1),
                ("x^4-10*x^2+1".into(), 1)
            ]
        );
    }

    #[test]
    fn multivariate() {
        let r = Ring::degrevlex(&["x", "y", "z"]);
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        let f = p("(x^2+y^2-1)*(x*y-z)^2*(x+y+z)*y");
        let fs = factor(&f).unwrap();
        let mut prod = Polynomial::one(&r);
        for (g, e) in &fs {
            prod = prod.checked_mul(&g.pow(*e).unwrap()).unwrap();
        }
        assert_eq!(prod, f.monic());
        assert_eq!(fs.len(), 4);
        assert_eq!(factor(&p("x^2-y^2")).unwrap().len(), 2);
        assert_eq!(factor(&p("x^2+y^2")).unwrap().len(), 1);
        assert_eq!(factor(&p("x^2*y^2-1")).unwrap().len(), 2);
    }

    #[test]
    fn gcd_and_division() {
        let r = Ring::degrevlex(&["x", "y"]);
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        assert_eq!(gcd(&p("x^2-y^2"), &p("x^2+2*x*y+y^2")).unwrap(), p("x+y"));
        assert_eq!(div_exact(&p("x^2-y^2"), &p("x-y")), Some(p("x+y")));
        assert_eq!(div_exact(&p("x^2+y"), &p("x-y")), None);
    }
}
