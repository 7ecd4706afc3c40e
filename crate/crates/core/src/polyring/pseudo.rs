//! Pseudo-division of multivariate polynomials viewed as univariate in one variable.

use crate::error::{Error, Result};
use crate::polyring::field::Field;
use crate::polyring::monomial::Monomial;
use crate::polyring::polynomial::Polynomial;

/// Result of pseudo-dividing `G` by `F` in `x_k`:
/// `multiplier^power * G = quotient * F + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoDivisionResult<F: Field> {
    pub quotient: Polynomial<F>,
    pub remainder: Polynomial<F>,
    pub power: u32,
    /// `lc(F, x_k)`.
    pub multiplier: Polynomial<F>,
}

impl<F: Field> PseudoDivisionResult<F> {
    /// Re-expands `I^q G - Q F - R`; zero when the identity holds.
    pub fn defect(&self, dividend: &Polynomial<F>, divisor: &Polynomial<F>) -> Polynomial<F> {
        &(&self.multiplier.pow(self.power) * dividend) - &(&(&self.quotient * divisor) + &self.remainder)
    }

    pub fn verify(&self, dividend: &Polynomial<F>, divisor: &Polynomial<F>) -> bool {
        self.defect(dividend, divisor).is_zero()
    }
}

/// Pseudo-divides `dividend` by `divisor` with respect to `var`.
///
/// With `l = deg(G)`, `m = deg(F)`: `q = max(l - m + 1, 0)`. When `m = 0` the
/// remainder is zero and the quotient is `F^l * G`, so `F^(l+1) G = Q F`.
pub fn pseudo_divide<F: Field>(
    dividend: &Polynomial<F>,
    divisor: &Polynomial<F>,
    var: usize,
) -> Result<PseudoDivisionResult<F>> {
    if divisor.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let ring = dividend.ring();
    let l = dividend.degree(var);
    let m = divisor.degree(var);
    let multiplier = divisor.lc_in(var);

    if dividend.is_zero() || l < m {
        return Ok(PseudoDivisionResult {
            quotient: Polynomial::zero(ring),
            remainder: dividend.clone(),
            power: 0,
            multiplier,
        });
    }
    if m == 0 {
        return Ok(PseudoDivisionResult {
            quotient: &divisor.pow(l as u32) * dividend,
            remainder: Polynomial::zero(ring),
            power: l as u32 + 1,
            multiplier,
        });
    }

    let power = (l - m + 1) as u32;
    let mut remaining = power;
    let mut rem = dividend.clone();
    let mut quot = Polynomial::zero(ring);
    let one = ring.one_coeff();
    loop {
        let d = rem.degree(var);
        if d < m {
            break;
        }
        let shift = Monomial::var(ring.nvars(), var, (d - m) as u32);
        let step = rem.lc_in(var).mul_term(&one, &shift);
        rem = &(&multiplier * &rem) - &(&step * divisor);
        quot = &(&multiplier * &quot) + &step;
        remaining -= 1;
    }
    if remaining > 0 {
        let fix = multiplier.pow(remaining);
        rem = &fix * &rem;
        quot = &fix * &quot;
    }
    Ok(PseudoDivisionResult { quotient: quot, remainder: rem, power, multiplier })
}

/// `prem(G, F, x_k)`.
pub fn prem<F: Field>(dividend: &Polynomial<F>, divisor: &Polynomial<F>, var: usize) -> Result<Polynomial<F>> {
    pseudo_divide(dividend, divisor, var).map(|r| r.remainder)
}

/// `pquo(G, F, x_k)`.
pub fn pquo<F: Field>(dividend: &Polynomial<F>, divisor: &Polynomial<F>, var: usize) -> Result<Polynomial<F>> {
    pseudo_divide(dividend, divisor, var).map(|r| r.quotient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::testutil::{p, ring};

    #[test]
    fn divides_with_power_two() {
        let r = ring(2);
        let (g, f) = (p(&r, "x2^2"), p(&r, "x1*x2"));
        let res = pseudo_divide(&g, &f, 1).unwrap();
        assert_eq!(res.quotient, p(&r, "x1*x2"));
        assert!(res.remainder.is_zero());
        assert_eq!(res.power, 2);
        assert!(res.verify(&g, &f));
    }

    #[test]
    fn reduced_dividend_passes_through() {
        let r = ring(2);
        let (g, f) = (p(&r, "x1"), p(&r, "x1*x2"));
        let res = pseudo_divide(&g, &f, 1).unwrap();
        assert!(res.quotient.is_zero());
        assert_eq!(res.remainder, g);
        assert_eq!(res.power, 0);
    }

    #[test]
    fn degree_zero_divisor_convention() {
        let r = ring(2);
        let (g, f) = (p(&r, "x2"), p(&r, "x1"));
        let res = pseudo_divide(&g, &f, 1).unwrap();
        assert!(res.remainder.is_zero());
        assert_eq!(res.power, 2);
        assert_eq!(res.quotient, p(&r, "x1*x2"));
        assert!(res.verify(&g, &f));
    }

    #[test]
    fn zero_divisor_is_an_error() {
        let r = ring(2);
        let z = p(&r, "0");
        assert_eq!(pseudo_divide(&p(&r, "x1"), &z, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn remainder_degree_drops() {
        let r = ring(3);
        let g = p(&r, "x3^4*x1 + x2*x3^2 - 7");
        let f = p(&r, "(x1+x2)*x3^2 + x1*x3 + 1");
        let res = pseudo_divide(&g, &f, 2).unwrap();
        assert!(res.remainder.degree(2) < 2);
        assert_eq!(res.power, 3);
        assert!(res.verify(&g, &f));
    }
}
