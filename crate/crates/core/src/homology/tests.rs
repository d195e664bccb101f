use super::*;
use crate::groebner::{canonical, codim, is_sub};
use crate::polyring::{parse_polynomial, FreeElement, Ring, RingRef, Submodule};
use crate::verify::monomial_hull_oracle;

fn ideal(r: &RingRef, gens: &[&str]) -> Submodule {
    Submodule::ideal(r, gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
}

fn module(r: &RingRef, cols: &[&[&str]]) -> Submodule {
    let gens = cols
        .iter()
        .map(|c| FreeElement::new(c.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()))
        .collect();
    Submodule::new(r, cols[0].len(), gens).unwrap()
}

fn composes_to_zero(res: &Resolution) -> bool {
    res.maps
        .windows(2)
        .all(|w| w[0].matmul(&w[1]).unwrap().has_zero_entries_only())
}

#[test]
fn koszul_resolution() {
    let r = Ring::degrevlex(&["x", "y"]);
    let res = free_resolution(&ideal(&r, &["x", "y"]), 2).unwrap();
    assert_eq!(res.betti(), [1, 2, 1]);
    assert!(composes_to_zero(&res));
}

#[test]
fn principal_and_zero_resolutions() {
    let r = Ring::degrevlex(&["x"]);
    let res = free_resolution(&ideal(&r, &["x^2"]), 2).unwrap();
    assert_eq!(res.betti(), [1, 1, 0]);
    let r2 = Ring::degrevlex(&["x", "y"]);
    let res = free_resolution(&Submodule::zero(&r2, 2), 2).unwrap();
    assert_eq!(res.betti(), [2, 0, 0]);
}

#[test]
fn redundant_generators_are_dropped() {
    let r = Ring::degrevlex(&["x", "y", "z"]);
    let res = free_resolution(&ideal(&r, &["x", "y", "x+y", "z"]), 3).unwrap();
    assert_eq!(res.betti(), [1, 3, 3, 1]);
    assert!(composes_to_zero(&res));
}

#[test]
fn ext_examples() {
    let r = Ring::degrevlex(&["x", "y"]);
    let m = ideal(&r, &["x", "y"]);
    let e2 = ext_module(2, &m).unwrap();
    assert!(!e2.is_zero());
    assert_eq!(e2.annihilator().unwrap(), ideal(&r, &["x", "y"]));
    assert!(ext_module(1, &m).unwrap().is_zero());
    assert!(ext_module(0, &m).unwrap().is_zero());
    let e0 = ext_module(0, &Submodule::zero(&r, 2)).unwrap();
    assert_eq!(e0.presentation.rank(), 2);
    assert!(e0.annihilator().unwrap().is_zero());
    assert!(ext_module(3, &m).is_err());
}

#[test]
fn grade_on_mixed_ideal() {
    let r = Ring::degrevlex(&["x", "y"]);
    let anns = ext_annihilators(&ideal(&r, &["x^2", "x*y"])).unwrap();
    assert!(codim(&anns[0]) > 0);
    assert_eq!(canonical(&anns[1]).to_string(), "x");
    assert_eq!(codim(&anns[2]), 2);
}

#[test]
fn hull_examples() {
    let r = Ring::degrevlex(&["x", "y"]);
    assert_eq!(equidim_hull(&ideal(&r, &["x^2", "x*y"])).unwrap(), ideal(&r, &["x"]));
    let q = ideal(&r, &["x^2", "y"]);
    assert_eq!(equidim_hull(&q).unwrap(), canonical(&q));
    let cm = canon_map(&ideal(&r, &["x", "y"])).unwrap();
    assert_eq!(cm.kernel_preimage, ideal(&r, &["x", "y"]));
    assert_eq!(
        equidim_hull(&ideal(&r, &["1"])).unwrap_err(),
        crate::Error::UnitModule
    );

    let r3 = Ring::degrevlex(&["x", "y", "z"]);
    let i = ideal(&r3, &["x^2*y", "x*z^2", "y^2*z"]);
    assert_eq!(equidim_hull(&i).unwrap(), monomial_hull_oracle(&i).unwrap());

    let r4 = Ring::degrevlex(&["x", "y", "z", "w"]);
    let i = crate::groebner::intersect(&ideal(&r4, &["x", "y"]), &ideal(&r4, &["z", "w"])).unwrap();
    let cm = canon_map(&i).unwrap();
    assert_eq!(cm.kernel_preimage, canonical(&i));
}

#[test]
fn hull_of_modules() {
    let r = Ring::degrevlex(&["x", "y", "z"]);
    let m = module(&r, &[&["x*y", "0", "y*z"], &["0", "x*z", "z^2"]]);
    let h = equidim_hull(&m).unwrap();
    assert!(is_sub(&m, &h).unwrap());
    assert_eq!(equidim_hull(&h).unwrap(), h);
    // torsion-free quotient: the hull has rank 2 relations
    let m2 = module(&r, &[&["x", "0"], &["y", "0"]]);
    assert_eq!(equidim_hull(&m2).unwrap(), canonical(&module(&r, &[&["1", "0"]])));
}

#[test]
fn rem_comp_examples() {
    let r = Ring::degrevlex(&["x", "y"]);
    let i = ideal(&r, &["x^2", "x*y"]);
    assert_eq!(rem_comp(&i, 1).unwrap(), ideal(&r, &["x"]));
    assert_eq!(rem_comp(&i, 0).unwrap(), canonical(&i));
    let p = ideal(&r, &["x"]);
    assert_eq!(rem_comp(&p, 1).unwrap(), p);
    assert_eq!(rem_comp(&p, 0).unwrap(), p);
}

#[test]
fn component_detection() {
    let r = Ring::degrevlex(&["x", "y"]);
    let i = ideal(&r, &["x^2", "x*y"]);
    let a1 = ass_prim_codim(&i, 1).unwrap();
    assert_eq!(crate::primdec::radical_equidim(&a1).unwrap(), ideal(&r, &["x"]));
    let a2 = ass_prim_codim(&i, 2).unwrap();
    assert_eq!(crate::primdec::radical_equidim(&a2).unwrap(), ideal(&r, &["x", "y"]));
    assert_eq!(ass_prim_codim(&ideal(&r, &["x"]), 2).unwrap(), Submodule::unit_ideal(&r));
    assert_eq!(inter_ass_prim(&i, 2).unwrap(), ideal(&r, &["x", "y"]));
    assert_eq!(inter_ass_prim(&i, 1).unwrap(), ideal(&r, &["x"]));
    assert_eq!(inter_ass_prim(&ideal(&r, &["x"]), 2).unwrap(), Submodule::unit_ideal(&r));
}
