use proptest::prelude::*;

use super::*;

fn p(r: &RingRef, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

#[test]
fn addition_examples() {
    let r = Ring::degrevlex(&["x", "y"]);
    let f = p(&r, "x^2+3*y");
    assert_eq!(poly_add(&f, &Polynomial::zero(&r)).unwrap(), f);
    assert_eq!(poly_add(&p(&r, "x+y"), &p(&r, "x-y")).unwrap(), p(&r, "2*x"));
    let s = poly_add(&p(&r, "1/2*x"), &p(&r, "1/3*x")).unwrap();
    assert_eq!(s.terms()[0].1, ratio(5, 6));
}

#[test]
fn multiplication_examples() {
    let r = Ring::degrevlex(&["x", "y"]);
    let f = p(&r, "x^2+3*y");
    assert_eq!(poly_mul(&f, &Polynomial::one(&r)).unwrap(), f);
    assert_eq!(poly_mul(&p(&r, "x+y"), &p(&r, "x-y")).unwrap(), p(&r, "x^2-y^2"));
    assert!(poly_mul(&p(&r, "x"), &Polynomial::zero(&r)).unwrap().is_zero());
}

#[test]
fn ring_mismatch_is_reported() {
    let r = Ring::degrevlex(&["x", "y"]);
    let s = Ring::degrevlex(&["x", "z"]);
    assert_eq!(
        poly_add(&p(&r, "x"), &p(&s, "x")).unwrap_err(),
        crate::error::Error::RingMismatch
    );
}

#[test]
fn leading_term_examples() {
    let r = Ring::degrevlex(&["x", "y"]);
    let pot = MonomialOrder::degrevlex();
    let v = FreeElement::new(vec![p(&r, "x^2"), p(&r, "x*y")]);
    let (c, k, m) = leading_term(&v, &pot).unwrap();
    assert_eq!((c, k, m.exponents()), (0, rat(1), &[2u32, 0][..]));

    let top = MonomialOrder::degrevlex().with_extension(ModuleExtension::TermOverPosition);
    let v = FreeElement::new(vec![p(&r, "y"), p(&r, "x^2")]);
    let (c, _, m) = leading_term(&v, &top).unwrap();
    assert_eq!((c, m.exponents()), (1, &[2u32, 0][..]));

    let v = FreeElement::new(vec![p(&r, "x^2*y+x^3")]);
    let (_, _, m) = leading_term(&v, &pot).unwrap();
    assert_eq!(m.exponents(), &[3, 0]);

    assert!(leading_term(&FreeElement::zero(&r, 2), &pot).is_err());
}

#[test]
fn shift_and_substitute() {
    let r = Ring::degrevlex(&["x", "y"]);
    let f = p(&r, "x^3*y-2*x+y");
    let g = f.shift(0, &rat(2));
    // g(x) = f(x+2), so g(x-2) = f
    assert_eq!(g.shift(0, &rat(-2)), f);
    assert_eq!(f.substitute(0, &rat(1)), p(&r, "2*y-2"));
    assert_eq!(p(&r, "x^3+x*y").derivative(0), p(&r, "3*x^2+y"));
}

#[test]
fn invalid_rings_rejected() {
    assert!(Ring::new(Vec::<String>::new(), MonomialOrder::degrevlex()).is_err());
    assert!(Ring::new(["x", "x"], MonomialOrder::degrevlex()).is_err());
    assert!(Ring::new(["x", "y"], MonomialOrder::block(2)).is_err());
}

#[test]
fn matrix_shapes() {
    let r = Ring::degrevlex(&["x", "y"]);
    let a = Submodule::from_rows(
        &r,
        vec![vec![p(&r, "x"), p(&r, "y")], vec![p(&r, "0"), p(&r, "1")]],
        2,
    )
    .unwrap();
    let t = a.transpose();
    assert_eq!(t.entry(1, 0), &p(&r, "y"));
    let prod = a.matmul(&Submodule::free(&r, 2)).unwrap();
    assert_eq!(prod, a);
    assert!(a.matmul(&Submodule::free(&r, 3)).is_err());
}

fn arb_poly(r: RingRef) -> impl Strategy<Value = Polynomial> {
    let n = r.nvars();
    prop::collection::vec(
        (prop::collection::vec(0u32..4, n), -5i64..6, 1i64..4),
        0..5,
    )
    .prop_map(move |ts| {
        Polynomial::from_terms(
            &r,
            ts.into_iter()
                .map(|(e, a, b)| (Monomial::new(&e), ratio(a, b))),
        )
    })
}

fn ring3() -> RingRef {
    Ring::degrevlex(&["x", "y", "z"])
}

proptest! {
    #[test]
    fn rational_arithmetic_exact(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let x = ratio(a, b);
        let y = ratio(c, d);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if c != 0 {
            prop_assert_eq!(&(&x * &y) / &y, x);
        }
    }

    #[test]
    fn ring_axioms(f in arb_poly(ring3()), g in arb_poly(ring3()), h in arb_poly(ring3())) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn normalization_idempotent(f in arb_poly(ring3())) {
        let again = Polynomial::from_terms(f.ring(), f.terms().to_vec());
        prop_assert_eq!(again, f);
    }

    #[test]
    fn order_total_and_multiplicative(
        a in prop::collection::vec(0u32..5, 3),
        b in prop::collection::vec(0u32..5, 3),
        m in prop::collection::vec(0u32..5, 3),
        which in 0usize..5,
    ) {
        let orders = [
            MonomialOrder::degrevlex(),
            MonomialOrder::lex(),
            MonomialOrder::block(1),
            MonomialOrder::weighted_revlex(vec![3, 4, 5]),
            MonomialOrder::weighted_lex(vec![1, 2, 1]),
        ];
        let o = &orders[which];
        let ab = o.cmp_monomials(&a, &b);
        prop_assert_eq!(ab, o.cmp_monomials(&b, &a).reverse());
        prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
        let am: Vec<u32> = a.iter().zip(&m).map(|(x, y)| x + y).collect();
        let bm: Vec<u32> = b.iter().zip(&m).map(|(x, y)| x + y).collect();
        prop_assert_eq!(o.cmp_monomials(&am, &bm), ab);
    }

    #[test]
    fn display_round_trip(f in arb_poly(ring3())) {
        let back = parse_polynomial(f.ring(), &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }
}
