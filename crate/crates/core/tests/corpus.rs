//! Monomial corpus: decomposition against the splitting oracle, hulls,
//! and the vanishing of Ext below the codimension.

use primdec_core::groebner::{canonical, codim};
use primdec_core::homology::{equidim_hull, ext_all};
use primdec_core::polyring::Submodule;
use primdec_core::primdec::{primdec_ehv, DEFAULT_BOUND};
use primdec_core::verify::{
    component_theorem_checks, monomial_corpus, monomial_hull_oracle, monomial_primdec_oracle,
    validate_decomposition,
};

fn prime_set(d: &primdec_core::primdec::DecompositionResult) -> Vec<String> {
    let mut v: Vec<String> = d.components.iter().map(|c| c.prime.ideal.to_string()).collect();
    v.sort();
    v
}

#[test]
fn decompositions_match_oracle() {
    for (k, m) in monomial_corpus(11, 100).iter().enumerate() {
        let d = primdec_ehv(m).unwrap();
        let report = validate_decomposition(m, &d);
        assert!(report.pass(), "instance {k} <{m}>: {report:?}");
        let oracle = monomial_primdec_oracle(m).unwrap();
        assert_eq!(prime_set(&d), prime_set(&oracle), "instance {k} <{m}>");
        for c in component_theorem_checks(m, &d, DEFAULT_BOUND).unwrap() {
            assert!(c.containment && c.witness, "instance {k} <{m}>: {c:?}");
        }
    }
}

#[test]
fn hulls_match_oracle() {
    for (k, m) in monomial_corpus(7, 50).iter().enumerate() {
        assert_eq!(
            equidim_hull(m).unwrap(),
            monomial_hull_oracle(m).unwrap(),
            "instance {k} <{m}>"
        );
    }
}

fn grade_holds(m: &Submodule) -> bool {
    let c0 = codim(m);
    ext_all(m).unwrap().iter().enumerate().all(|(c, e)| {
        if (c as i64) < c0 {
            e.is_zero()
        } else {
            e.is_zero() || codim(&canonical(&e.annihilator().unwrap())) >= c as i64
        }
    })
}

#[test]
fn ext_vanishes_below_codimension() {
    for (k, m) in monomial_corpus(7, 50).iter().enumerate() {
        assert!(grade_holds(m), "instance {k} <{m}>");
    }
}
