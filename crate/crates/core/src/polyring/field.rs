//! Exact coefficient fields.
//!
//! Two implementations ship: arbitrary-precision rationals ([`Rational`]) and
//! prime fields with a runtime modulus below 2^31 ([`Fp`]). Elements of `Fp`
//! carry their modulus so arithmetic never needs an external context.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An exact field. No operation ever rounds.
pub trait Field: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Data needed to build constants (the modulus for prime fields).
    type Context: Clone + Eq + Hash + fmt::Debug + Send + Sync + 'static;

    fn zero(ctx: &Self::Context) -> Self;
    fn one(ctx: &Self::Context) -> Self;
    fn from_i64(ctx: &Self::Context, value: i64) -> Self;
    /// Maps a rational into the field; `None` when the denominator vanishes.
    fn from_rational(ctx: &Self::Context, value: &BigRational) -> Option<Self>;
    fn context(&self) -> Self::Context;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Numerator and positive denominator used by renderers. Prime field
    /// elements report their canonical representative over 1.
    fn to_ratio(&self) -> (BigInt, BigInt);

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.context());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// True when the printed form starts with a minus sign.
    fn is_negative_display(&self) -> bool {
        false
    }

}

/// Arbitrary-precision rational number.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Rational {
    type Context = ();

    fn zero(_: &()) -> Self {
        Rational(BigRational::zero())
    }

    fn one(_: &()) -> Self {
        Rational(BigRational::one())
    }

    fn from_i64(_: &(), value: i64) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    fn from_rational(_: &(), value: &BigRational) -> Option<Self> {
        Some(Rational(value.clone()))
    }

    fn context(&self) {}

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn to_ratio(&self) -> (BigInt, BigInt) {
        (self.0.numer().clone(), self.0.denom().clone())
    }

    fn is_negative_display(&self) -> bool {
        self.0.is_negative()
    }

}

/// Modulus of a prime field; validated prime and below 2^31.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, Error> {
        if p == 0 {
            return Err(Error::InvalidModulus { modulus: p, reason: "zero modulus" });
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidModulus { modulus: p, reason: "modulus must be below 2^31" });
        }
        if !is_prime(p) {
            return Err(Error::InvalidModulus { modulus: p, reason: "modulus is not prime" });
        }
        Ok(PrimeModulus(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of the prime field of characteristic `modulus`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u32,
    modulus: PrimeModulus,
}

impl Fp {
    pub fn new(modulus: PrimeModulus, value: i64) -> Self {
        let p = modulus.0 as i64;
        Fp { value: value.rem_euclid(p) as u32, modulus }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    fn reduce_bigint(modulus: PrimeModulus, v: &BigInt) -> u32 {
        let p = BigInt::from(modulus.0);
        v.mod_floor(&p).to_u32().expect("residue fits in u32")
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for Fp {
    type Context = PrimeModulus;

    fn zero(ctx: &PrimeModulus) -> Self {
        Fp { value: 0, modulus: *ctx }
    }

    fn one(ctx: &PrimeModulus) -> Self {
        Fp { value: 1 % ctx.0, modulus: *ctx }
    }

    fn from_i64(ctx: &PrimeModulus, value: i64) -> Self {
        Fp::new(*ctx, value)
    }

    fn from_rational(ctx: &PrimeModulus, value: &BigRational) -> Option<Self> {
        let num = Fp { value: Fp::reduce_bigint(*ctx, value.numer()), modulus: *ctx };
        let den = Fp { value: Fp::reduce_bigint(*ctx, value.denom()), modulus: *ctx };
        den.inv().map(|d| num.mul(&d))
    }

    fn context(&self) -> PrimeModulus {
        self.modulus
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let p = self.modulus.0 as u64;
        Fp { value: ((self.value as u64 + rhs.value as u64) % p) as u32, modulus: self.modulus }
    }

    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let p = self.modulus.0 as u64;
        Fp { value: ((self.value as u64 + p - rhs.value as u64) % p) as u32, modulus: self.modulus }
    }

    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let p = self.modulus.0 as u64;
        Fp { value: ((self.value as u64 * rhs.value as u64) % p) as u32, modulus: self.modulus }
    }

    fn neg(&self) -> Self {
        let p = self.modulus.0;
        Fp { value: (p - self.value) % p, modulus: self.modulus }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        Some(self.pow(self.modulus.0 as u64 - 2))
    }

    fn to_ratio(&self) -> (BigInt, BigInt) {
        (BigInt::from(self.value), BigInt::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_display() {
        assert_eq!(Rational::new(-2, 5).to_string(), "-2/5");
        assert_eq!(Rational::new(6, 3).to_string(), "2");
    }

    #[test]
    fn modulus_validation() {
        assert!(matches!(PrimeModulus::new(0), Err(Error::InvalidModulus { .. })));
        assert!(PrimeModulus::new(32003).is_ok());
        assert!(PrimeModulus::new(32004).is_err());
        assert!(PrimeModulus::new(1 << 31).is_err());
    }

    #[test]
    fn fp_inverse_and_rational_map() {
        let p = PrimeModulus::new(7).unwrap();
        for v in 1..7 {
            let a = Fp::new(p, v);
            assert!(a.mul(&a.inv().unwrap()).is_one());
        }
        let half = Fp::from_rational(&p, &BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(half.value(), 4);
        assert!(Fp::from_rational(&p, &BigRational::new(1.into(), 14.into())).is_none());
        assert_eq!(Fp::new(p, -1).value(), 6);
    }
}
