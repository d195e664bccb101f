use super::*;
use crate::groebner::canonical;
use crate::polyring::{parse_polynomial, FreeElement, Ring, RingRef, Submodule};
use crate::verify::{component_theorem_checks, validate_decomposition};

fn ideal(r: &RingRef, gens: &[&str]) -> Submodule {
    Submodule::ideal(r, gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
}

fn prime(r: &RingRef, gens: &[&str]) -> PrimeIdeal {
    let ideal = canonical(&ideal(r, gens));
    let codim = crate::groebner::codim(&ideal) as usize;
    PrimeIdeal { ideal, codim }
}

#[test]
fn localize_radical() {
    let r = Ring::degrevlex(&["x", "y"]);
    let ps = [prime(&r, &["x"]), prime(&r, &["y"])];
    let h = ideal(&r, &["x*y"]);
    assert_eq!(localize_radical_ideal(&h, &ideal(&r, &["x"]), &ps).unwrap(), ideal(&r, &["x"]));
    let py = [prime(&r, &["y"])];
    assert_eq!(
        localize_radical_ideal(&ideal(&r, &["y"]), &ideal(&r, &["x"]), &py).unwrap(),
        Submodule::unit_ideal(&r)
    );
}

#[test]
fn localize_examples() {
    let r = Ring::degrevlex(&["x", "y"]);
    let x = ideal(&r, &["x"]);
    let i = ideal(&r, &["x^2", "x*y"]);
    assert_eq!(localize_module(&i, &x, None).unwrap(), canonical(&i));
    assert_eq!(localize_module(&ideal(&r, &["x*y"]), &x, None).unwrap(), x);
    assert_eq!(
        localize_module(&ideal(&r, &["y"]), &x, None).unwrap(),
        Submodule::unit_ideal(&r)
    );
    let l = localize_module(&ideal(&r, &["x*y"]), &x, None).unwrap();
    assert_eq!(localize_module(&l, &x, None).unwrap(), l);
}

#[test]
fn component_extraction() {
    let r = Ring::degrevlex(&["x", "y"]);
    let i = ideal(&r, &["x^2", "x*y"]);
    let all = [prime(&r, &["x"]), prime(&r, &["x", "y"])];
    let e = primary_component(&i, &all[0], &all, DEFAULT_BOUND).unwrap();
    assert_eq!(e.primary, ideal(&r, &["x"]));
    assert_eq!(e.power, 1);
    let e = primary_component(&i, &all[1], &all, DEFAULT_BOUND).unwrap();
    assert_eq!(e.primary, ideal(&r, &["x^2", "x*y", "y^2"]));
    assert_eq!(e.power, 2);
    assert_eq!(e.trace.iter().map(|t| t.accepted).collect::<Vec<_>>(), [false, true]);
    let q = ideal(&r, &["x^2", "y"]);
    let e = primary_component(&q, &all[1], &all[1..], DEFAULT_BOUND).unwrap();
    assert_eq!(e.primary, canonical(&q));
    let e = primary_component(&i, &all[1], &all, 1).unwrap_err();
    assert!(matches!(e, crate::Error::IterationBound { bound: 1, .. }));
}

fn check(m: &Submodule) -> DecompositionResult {
    let d = primdec_ehv(m).unwrap();
    let report = validate_decomposition(m, &d);
    assert!(report.pass(), "{report:?}\n{d:?}");
    for c in component_theorem_checks(m, &d, DEFAULT_BOUND).unwrap() {
        assert!(c.containment && c.witness, "{c:?}");
    }
    d
}

#[test]
fn decompose_embedded_example() {
    let r = Ring::degrevlex(&["x", "y"]);
    let d = check(&ideal(&r, &["x^2", "x*y"]));
    let shown: Vec<(String, String, bool)> = d
        .components
        .iter()
        .map(|c| (c.primary.to_string(), c.prime.ideal.to_string(), c.embedded))
        .collect();
    assert_eq!(
        shown,
        [
            ("x".into(), "x".into(), false),
            ("x^2,x*y,y^2".into(), "x,y".into(), true)
        ]
    );
}

#[test]
fn decompose_monomial_test_input() {
    let r = Ring::degrevlex(&["x", "y", "z"]);
    let d = check(&ideal(&r, &["x^2*y", "x*z^2", "y^2*z"]));
    let primes: Vec<String> = d.components.iter().map(|c| c.prime.ideal.to_string()).collect();
    assert_eq!(primes, ["x,y", "x,z", "y,z", "x,y,z"]);
    assert_eq!(d.components.iter().filter(|c| c.embedded).count(), 1);
}

#[test]
fn decompose_module_test_input() {
    let r = Ring::degrevlex(&["x", "y", "z"]);
    let cols = [["x*y", "0", "y*z"], ["0", "x*z", "z^2"]];
    let gens = cols
        .iter()
        .map(|c| FreeElement::new(c.iter().map(|s| parse_polynomial(&r, s).unwrap()).collect()))
        .collect();
    check(&Submodule::new(&r, 3, gens).unwrap());
}

#[test]
fn decompose_non_monomial() {
    let r = Ring::degrevlex(&["x", "y", "z"]);
    check(&ideal(&r, &["x*y-z^2", "x^2*z"]));
    check(&ideal(&r, &["(x^2+y^2-1)*(x-z)", "y*(x-z)"]));
    let d = check(&ideal(&r, &["x^2-2", "y^2-8", "z"]));
    assert_eq!(d.components.len(), 2);
}
