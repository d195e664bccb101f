//! Independent oracles and the decomposition validator.

mod corpus;
mod membership;
mod monomial;
pub mod properties;
mod validate;

pub use corpus::{monomial_corpus, random_ideal, random_monomial_ideal, corpus_ring};
pub use membership::membership_oracle;
pub(crate) use monomial::irreducible_components;
pub use monomial::{monomial_hull_oracle, monomial_intersection, monomial_primdec_oracle};
pub use validate::{component_theorem_checks, validate_decomposition, TheoremCheck, ValidationReport};
