//! Seeded random inputs for property checks.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polyring::{Monomial, Polynomial, Rational, Ring, RingRef, Submodule};

const NAMES: [&str; 4] = ["x", "y", "z", "w"];

/// `Q[x, y, ...]` with `n <= 4` variables under degrevlex.
pub fn corpus_ring(n: usize) -> RingRef {
    Ring::degrevlex(&NAMES[..n])
}

fn random_exponents(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> Vec<u32> {
    let d = rng.gen_range(1..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

/// A proper nonzero monomial ideal with at most `max_gens` generators of
/// degree between 1 and `max_deg`.
pub fn random_monomial_ideal(
    rng: &mut ChaCha8Rng,
    ring: &RingRef,
    max_gens: usize,
    max_deg: u32,
) -> Submodule {
    let n = ring.nvars();
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| {
            let e = random_exponents(rng, n, max_deg);
            Polynomial::monomial(ring, Rational::one(), Monomial::new(&e))
        })
        .collect();
    Submodule::ideal(ring, gens).expect("same ring")
}

/// `count` monomial ideals in 2 to 4 variables with at most 6 generators
/// of degree at most 4, reproducible from `seed`.
pub fn monomial_corpus(seed: u64, count: usize) -> Vec<Submodule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let ring = corpus_ring(rng.gen_range(2..=4));
            random_monomial_ideal(&mut rng, &ring, 6, 4)
        })
        .collect()
}

/// An ideal with at most `max_gens` generators, each with up to four terms
/// of degree at most `max_deg` and small integer coefficients.
pub fn random_ideal(rng: &mut ChaCha8Rng, ring: &RingRef, max_gens: usize, max_deg: u32) -> Submodule {
    let n = ring.nvars();
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| {
            let terms = rng.gen_range(1..=4);
            Polynomial::from_terms(
                ring,
                (0..terms).map(|_| {
                    let e = if rng.gen_bool(0.15) {
                        vec![0; n]
                    } else {
                        random_exponents(rng, n, max_deg)
                    };
                    let mut c: i64 = rng.gen_range(-5..=5);
                    if c == 0 {
                        c = 1;
                    }
                    (Monomial::new(&e), Rational::from_integer(c.into()))
                }),
            )
        })
        .collect();
    Submodule::ideal(ring, gens).expect("same ring")
}
