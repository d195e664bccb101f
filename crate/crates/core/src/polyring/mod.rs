//! Exact polynomial arithmetic over the rationals and free modules over it.

mod module;
mod monomial;
mod order;
mod parse;
mod poly;

pub use module::{leading_term, FreeElement, Submodule};
pub use monomial::Monomial;
pub(crate) use monomial::{divides, divmask, lcm, Exps};
pub use order::{ModuleExtension, MonomialOrder, OrderKind};
pub(crate) use order::Key;
pub use parse::{parse_polynomial, parse_polynomial_at};
pub(crate) use poly::same_ring;
pub use poly::{poly_add, poly_mul, Polynomial, Rational, Ring, RingRef};

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `n/d` as a rational; panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests;
