use std::cmp::Ordering;
use std::fmt;
use std::ops;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::field::Field;
use crate::polyring::monomial::Monomial;
use crate::polyring::order::{same_ring, PolyRing, VariableOrder};

/// One nonzero term `coeff * mono`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term<F: Field> {
    pub coeff: F,
    pub mono: Monomial,
}

/// Multivariate polynomial in canonical form: terms strictly descending under
/// plex, no zero coefficients. The zero polynomial has no terms.
#[derive(Clone, Debug)]
pub struct Polynomial<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<Term<F>>,
}

/// Structural data of a polynomial with respect to its leading variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyAttributes<F: Field> {
    /// 0 for constants (and for zero).
    pub class: usize,
    pub leading_var: Option<usize>,
    pub degree: u32,
    pub initial: Polynomial<F>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> std::hash::Hash for Polynomial<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing<F>>) -> Self {
        Self::constant(ring, ring.one_coeff())
    }

    pub fn constant(ring: &Arc<PolyRing<F>>, c: F) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn from_i64(ring: &Arc<PolyRing<F>>, c: i64) -> Self {
        Self::constant(ring, ring.coeff(c))
    }

    /// The variable `x_{var+1}`.
    pub fn var(ring: &Arc<PolyRing<F>>, var: usize) -> Self {
        Self::monomial(ring, ring.one_coeff(), Monomial::var(ring.nvars(), var, 1))
    }

    pub fn monomial(ring: &Arc<PolyRing<F>>, c: F, mono: Monomial) -> Self {
        assert_eq!(mono.len(), ring.nvars(), "monomial length differs from variable count");
        let terms = if c.is_zero() { Vec::new() } else { vec![Term { coeff: c, mono }] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds the canonical form of an arbitrary term list.
    pub fn from_terms(ring: &Arc<PolyRing<F>>, mut raw: Vec<(F, Monomial)>) -> Self {
        raw.sort_by(|a, b| b.1.cmp(&a.1));
        let mut terms: Vec<Term<F>> = Vec::with_capacity(raw.len());
        for (c, m) in raw {
            assert_eq!(m.len(), ring.nvars(), "monomial length differs from variable count");
            match terms.last_mut() {
                Some(last) if last.mono == m => last.coeff = last.coeff.add(&c),
                _ => terms.push(Term { coeff: c, mono: m }),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Polynomial { ring: ring.clone(), terms }
    }

    /// Wraps terms that are already canonical.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing<F>>, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].mono > w[1].mono));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn order(&self) -> &VariableOrder {
        self.ring.order()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].mono.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && !self.is_zero() && self.terms[0].coeff.is_one()
    }

    /// `lt(P)`.
    pub fn leading_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    /// `lpp(P)`.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// `lc(P)`, the coefficient of the leading monomial.
    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// `coef(P, m)`.
    pub fn coeff_of(&self, mono: &Monomial) -> F {
        self.terms
            .binary_search_by(|t| mono.cmp(&t.mono))
            .map(|i| self.terms[i].coeff.clone())
            .unwrap_or_else(|_| self.ring.zero_coeff())
    }

    /// Degree in `var`; `-1` for the zero polynomial.
    pub fn degree(&self, var: usize) -> i64 {
        if self.is_zero() {
            return -1;
        }
        self.terms.iter().map(|t| t.mono.exp(var)).max().unwrap_or(0) as i64
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.iter().map(|t| t.mono.total_degree() as i64).max().unwrap_or(-1)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exp(var) > 0)
    }

    /// Largest index `p` such that `x_p` occurs (1-based); 0 for constants.
    ///
    /// Under plex the leading monomial carries the greatest variable.
    pub fn class(&self) -> usize {
        self.leading_monomial().and_then(|m| m.max_var()).map_or(0, |v| v + 1)
    }

    pub fn leading_var(&self) -> Option<usize> {
        self.leading_monomial().and_then(|m| m.max_var())
    }

    /// Coefficient of `x_var^d` viewed as a polynomial in `x_var`.
    pub fn coeff_in(&self, var: usize, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mono.exp(var) == d)
            .map(|t| {
                let mut mono = t.mono.clone();
                mono.set_exp(var, 0);
                Term { coeff: t.coeff.clone(), mono }
            })
            .collect();
        Self::from_sorted(&self.ring, terms)
    }

    /// All coefficients in `x_var`, indexed by degree.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let d = self.degree(var);
        (0..=d.max(-1)).map(|i| self.coeff_in(var, i as u32)).collect()
    }

    /// `lc(P, x_var)`; for zero, zero.
    pub fn lc_in(&self, var: usize) -> Self {
        match self.degree(var) {
            d if d < 0 => self.clone(),
            d => self.coeff_in(var, d as u32),
        }
    }

    /// `ini(P)`; a constant is its own initial.
    pub fn initial(&self) -> Self {
        match self.leading_var() {
            Some(v) => self.lc_in(v),
            None => self.clone(),
        }
    }

    pub fn attributes(&self) -> PolyAttributes<F> {
        match self.leading_var() {
            Some(v) => PolyAttributes {
                class: v + 1,
                leading_var: Some(v),
                degree: self.degree(v) as u32,
                initial: self.lc_in(v),
            },
            None => PolyAttributes { class: 0, leading_var: None, degree: 0, initial: self.clone() },
        }
    }

    fn check_ring(&self, other: &Self) {
        assert!(same_ring(&self.ring, &other.ring), "polynomials live in different rings");
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: t.coeff.neg(), mono: t.mono.clone() })
            .collect();
        Self::from_sorted(&self.ring, terms)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        self.check_ring(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let lift = |t: &Term<F>| {
            if subtract {
                Term { coeff: t.coeff.neg(), mono: t.mono.clone() }
            } else {
                t.clone()
            }
        };
        while i < a.len() && j < b.len() {
            match a[i].mono.cmp(&b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(lift(&b[j]));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { a[i].coeff.sub(&b[j].coeff) } else { a[i].coeff.add(&b[j].coeff) };
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: a[i].mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(lift));
        Self::from_sorted(&self.ring, out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: t.coeff.mul(c), mono: t.mono.clone() })
            .collect();
        Self::from_sorted(&self.ring, terms)
    }

    /// `c * m * self`; plex is compatible with multiplication so order is kept.
    pub fn mul_term(&self, c: &F, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: t.coeff.mul(c), mono: t.mono.mul(m) })
            .collect();
        Self::from_sorted(&self.ring, terms)
    }

    /// `self - c * m * other` in a single merge pass.
    pub fn sub_mul_term(&self, c: &F, m: &Monomial, other: &Self) -> Self {
        self.check_ring(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let a = &self.terms;
        let mut i = 0;
        for t in &other.terms {
            let mono = t.mono.mul(m);
            let coeff = t.coeff.mul(c);
            while i < a.len() && a[i].mono > mono {
                out.push(a[i].clone());
                i += 1;
            }
            if i < a.len() && a[i].mono == mono {
                let v = a[i].coeff.sub(&coeff);
                if !v.is_zero() {
                    out.push(Term { coeff: v, mono });
                }
                i += 1;
            } else {
                out.push(Term { coeff: coeff.neg(), mono });
            }
        }
        out.extend(a[i..].iter().cloned());
        Self::from_sorted(&self.ring, out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let t = &small.terms[0];
            return large.mul_term(&t.coeff, &t.mono);
        }
        let mut raw = Vec::with_capacity(small.len() * large.len());
        for s in &small.terms {
            for l in &large.terms {
                raw.push((s.coeff.mul(&l.coeff), s.mono.mul(&l.mono)));
            }
        }
        Self::from_terms(&self.ring, raw)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// `self / divisor` when the division is exact, else `None`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.check_ring(divisor);
        let lt = divisor.leading_term()?;
        let lc_inv = lt.coeff.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.leading_term() {
            let m = t.mono.div(&lt.mono)?;
            let c = t.coeff.mul(&lc_inv);
            rem = rem.sub_mul_term(&c, &m, divisor);
            quot.push(Term { coeff: c, mono: m });
        }
        Some(Self::from_sorted(&self.ring, quot))
    }

    /// Renames variables into `target`; `map[i]` is the target index of variable `i`.
    pub fn remap(&self, target: &Arc<PolyRing<F>>, map: &[usize]) -> Self {
        debug_assert_eq!(map.len(), self.nvars());
        let raw = self
            .terms
            .iter()
            .map(|t| (t.coeff.clone(), t.mono.permuted(map, target.nvars())))
            .collect();
        Self::from_terms(target, raw)
    }

    /// Moves the polynomial into another ring by matching variable names.
    /// Fails if a variable that occurs here is absent from the target.
    pub fn embed_into(&self, target: &Arc<PolyRing<F>>) -> Result<Self> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        if self.ring.field() != target.field() {
            return Err(Error::OrderMismatch);
        }
        let mut map = Vec::with_capacity(self.nvars());
        for (i, name) in self.order().names().iter().enumerate() {
            match target.order().index_of(name) {
                Some(j) => map.push(j),
                None if !self.involves(i) => map.push(usize::MAX),
                None => return Err(Error::UnknownVariable(name.clone())),
            }
        }
        let raw = self
            .terms
            .iter()
            .map(|t| {
                let mut m = Monomial::one(target.nvars());
                for (i, &e) in t.mono.exponents().iter().enumerate() {
                    if e > 0 {
                        m.set_exp(map[i], e);
                    }
                }
                (t.coeff.clone(), m)
            })
            .collect();
        Ok(Self::from_terms(target, raw))
    }

    /// Converts coefficients into another field over the same variables.
    pub fn map_coefficients<G: Field>(
        &self,
        target: &Arc<PolyRing<G>>,
        f: impl Fn(&F) -> Option<G>,
    ) -> Result<Polynomial<G>> {
        let mut raw = Vec::with_capacity(self.len());
        for t in &self.terms {
            let c = f(&t.coeff).ok_or_else(|| Error::CoefficientMap(t.coeff.to_string()))?;
            raw.push((c, t.mono.clone()));
        }
        Ok(Polynomial::from_terms(target, raw))
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let order = self.ring.order();
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative_display();
            let magnitude = if negative { t.coeff.neg() } else { t.coeff.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || t.mono.is_one() {
                factors.push(magnitude.to_string());
            }
            for (v, &e) in t.mono.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(order.name(v).to_string()),
                    _ => factors.push(format!("{}^{}", order.name(v), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<F: Field> ops::$tr<&Polynomial<F>> for &Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                Polynomial::$inner(self, rhs)
            }
        }
        impl<F: Field> ops::$tr<Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                Polynomial::$inner(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl<F: Field> ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

impl<F: Field> ops::Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::field::Rational;
    use crate::polyring::testutil::{p, ring};

    #[test]
    fn attributes_examples() {
        let r = ring(3);
        let a = p(&r, "x1*x2 - 1").attributes();
        assert_eq!((a.class, a.leading_var, a.degree), (2, Some(1), 1));
        assert_eq!(a.initial, p(&r, "x1"));

        let c = p(&r, "5").attributes();
        assert_eq!((c.class, c.leading_var), (0, None));

        let b = p(&r, "(x2+x1)*x3 + x1").attributes();
        assert_eq!((b.class, b.degree), (3, 1));
        assert_eq!(b.initial, p(&r, "x2 + x1"));
    }

    #[test]
    fn zero_polynomial_attributes() {
        let r = ring(2);
        let z = Polynomial::<Rational>::zero(&r);
        let a = z.attributes();
        assert_eq!(a.class, 0);
        assert!(a.initial.is_zero());
        assert_eq!(z.degree(0), -1);
    }

    #[test]
    fn display_is_canonical() {
        let r = ring(3);
        assert_eq!(p(&r, "x3 - x2 + 2/3*x1^2 - 1").to_string(), "x3 - x2 + 2/3*x1^2 - 1");
        assert_eq!(p(&r, "-x1*x1").to_string(), "-x1^2");
        assert_eq!(p(&r, "0").to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let r = ring(2);
        let a = p(&r, "x1^2 - x2^2");
        let b = p(&r, "x1 + x2");
        assert_eq!(a.exact_div(&b), Some(p(&r, "x1 - x2")));
        assert_eq!(p(&r, "x1 + 1").exact_div(&b), None);
    }

    #[test]
    fn embed_by_name() {
        let r = ring(2);
        let wide = PolyRing::<Rational>::new(VariableOrder::new(&["x2", "y", "x1"]).unwrap(), ());
        let e = p(&r, "x1*x2^2").embed_into(&wide).unwrap();
        assert_eq!(e.terms()[0].mono.exponents(), &[2, 0, 1]);
    }
}
