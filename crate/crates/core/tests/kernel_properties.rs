//! Randomized kernel contracts, 200 instances each.

use primdec_core::verify::properties::{
    check_intersection, check_lift_and_modulo, check_membership, check_normal_form,
    check_quotient, check_saturation,
};

const INSTANCES: usize = 200;

#[test]
fn normal_form_is_idempotent() {
    check_normal_form(1, INSTANCES).unwrap();
}

#[test]
fn membership_agrees_with_oracle() {
    check_membership(2, INSTANCES).unwrap();
}

#[test]
fn saturation_is_a_fixed_point() {
    check_saturation(3, INSTANCES).unwrap();
}

#[test]
fn quotient_contract() {
    check_quotient(4, INSTANCES).unwrap();
}

#[test]
fn intersection_contract() {
    check_intersection(5, INSTANCES).unwrap();
}

#[test]
fn lift_and_modulo_contracts() {
    check_lift_and_modulo(6, INSTANCES).unwrap();
}
