use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Dense exponent vector; entry `i` is the exponent of variable `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, var: usize, exp: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[var] = exp;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn set_exp(&mut self, var: usize, e: u32) {
        self.0[var] = e;
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Greatest variable with a positive exponent.
    pub fn max_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub(crate) fn permuted(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        for (i, &e) in self.0.iter().enumerate() {
            m.0[map[i]] = e;
        }
        m
    }
}

/// Plex comparison: the highest-index differing exponent decides.
pub fn plex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::OrderMismatch);
    }
    Ok(plex_cmp(a, b))
}

#[inline]
fn plex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.0.iter().rev().zip(b.0.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| plex_cmp(self, other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn plex_examples() {
        // x1^5 < x2
        assert_eq!(plex_compare(&m(&[5, 0, 0]), &m(&[0, 1, 0])).unwrap(), Ordering::Less);
        assert_eq!(plex_compare(&m(&[1, 2, 3]), &m(&[1, 2, 3])).unwrap(), Ordering::Equal);
        // x1*x3 < x2^9*x3
        assert_eq!(plex_compare(&m(&[1, 0, 1]), &m(&[0, 9, 1])).unwrap(), Ordering::Less);
    }

    #[test]
    fn mismatched_lengths() {
        assert_eq!(plex_compare(&m(&[1]), &m(&[1, 0])), Err(Error::OrderMismatch));
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1]);
        let b = m(&[1, 1]);
        assert_eq!(a.div(&b), Some(m(&[1, 0])));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.lcm(&m(&[0, 3])), m(&[2, 3]));
        assert!(m(&[1, 0]).is_coprime(&m(&[0, 4])));
    }
}
