//! Exact multivariate polynomials under the purely lexicographical order.

mod field;
mod monomial;
mod order;
mod polynomial;
mod pseudo;
mod resultant;

pub use field::{Field, Fp, PrimeModulus, Rational};
pub use monomial::{plex_compare, Monomial};
pub use order::{PolyRing, VariableOrder};
pub use polynomial::{PolyAttributes, Polynomial, Term};
pub use pseudo::{pquo, prem, pseudo_divide, PseudoDivisionResult};
pub use resultant::{resultant, resultant_with_cofactors, ResultantCofactors};

#[cfg(test)]
pub(crate) mod testutil {
    use std::sync::Arc;

    use super::{PolyRing, Polynomial, Rational, VariableOrder};

    pub fn ring(n: usize) -> Arc<PolyRing<Rational>> {
        PolyRing::new(VariableOrder::indexed("x", n), ())
    }

    pub fn p(ring: &Arc<PolyRing<Rational>>, text: &str) -> Polynomial<Rational> {
        crate::parse::parse_polynomial(ring, text).unwrap_or_else(|e| panic!("{text}: {e}"))
    }

    pub fn ps(ring: &Arc<PolyRing<Rational>>, texts: &[&str]) -> Vec<Polynomial<Rational>> {
        texts.iter().map(|t| p(ring, t)).collect()
    }
}
