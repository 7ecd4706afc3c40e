//! Seeded samplers for polynomials, ideal elements, systems and triangular sets.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::polyring::{Field, Monomial, PolyRing, Polynomial};
use crate::triset::TriangularSet;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sparse polynomials with small integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySampler {
    pub max_degree: u32,
    pub max_terms: usize,
    pub coeff_bound: i64,
}

impl Default for PolySampler {
    fn default() -> Self {
        PolySampler { max_degree: 2, max_terms: 3, coeff_bound: 5 }
    }
}

impl PolySampler {
    fn coefficient<F: Field, R: Rng>(&self, ring: &PolyRing<F>, rng: &mut R) -> F {
        loop {
            let c = ring.coeff(rng.gen_range(-self.coeff_bound..=self.coeff_bound));
            if !c.is_zero() {
                return c;
            }
        }
    }

    /// A monomial of total degree at most `max_degree` in the first `vars` variables.
    fn monomial<R: Rng>(&self, nvars: usize, vars: usize, rng: &mut R) -> Monomial {
        let mut m = Monomial::one(nvars);
        if vars == 0 {
            return m;
        }
        let d = rng.gen_range(0..=self.max_degree);
        for _ in 0..d {
            let v = rng.gen_range(0..vars);
            m.set_exp(v, m.exp(v) + 1);
        }
        m
    }

    /// May return zero or a constant.
    pub fn sample<F: Field, R: Rng>(&self, ring: &Arc<PolyRing<F>>, rng: &mut R) -> Polynomial<F> {
        self.sample_in(ring, ring.nvars(), rng)
    }

    /// Like [`sample`](Self::sample) but restricted to the first `vars` variables.
    pub fn sample_in<F: Field, R: Rng>(&self, ring: &Arc<PolyRing<F>>, vars: usize, rng: &mut R) -> Polynomial<F> {
        let count = rng.gen_range(1..=self.max_terms.max(1));
        let raw = (0..count)
            .map(|_| (self.coefficient(ring, rng), self.monomial(ring.nvars(), vars, rng)))
            .collect();
        Polynomial::from_terms(ring, raw)
    }

    /// A nonconstant sample.
    pub fn sample_nonconstant<F: Field, R: Rng>(&self, ring: &Arc<PolyRing<F>>, rng: &mut R) -> Polynomial<F> {
        loop {
            let p = self.sample(ring, rng);
            if !p.is_constant() {
                return p;
            }
        }
    }
}

/// `sum h_i g_i` with every `h_i` drawn from `sampler`.
pub fn random_combination<F: Field, R: Rng>(
    gens: &[Polynomial<F>],
    sampler: &PolySampler,
    rng: &mut R,
) -> Option<Polynomial<F>> {
    let ring = gens.first()?.ring();
    Some(gens.iter().fold(Polynomial::zero(ring), |acc, g| &acc + &(&sampler.sample(ring, rng) * g)))
}

/// Small random systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemSampler {
    pub max_generators: usize,
    pub poly: PolySampler,
}

impl Default for SystemSampler {
    fn default() -> Self {
        SystemSampler { max_generators: 4, poly: PolySampler { max_degree: 3, max_terms: 3, coeff_bound: 3 } }
    }
}

impl SystemSampler {
    /// Between one and `max_generators` nonconstant generators.
    pub fn sample<F: Field, R: Rng>(&self, ring: &Arc<PolyRing<F>>, rng: &mut R) -> Vec<Polynomial<F>> {
        let count = rng.gen_range(1..=self.max_generators.max(1));
        (0..count).map(|_| self.poly.sample_nonconstant(ring, rng)).collect()
    }
}

/// A triangular set with one member per chosen class. Member `i` has the
/// form `c_d v^d + ... + c_0` where `v` is its leading variable and the
/// coefficients are sampled over the smaller variables; `c_d` is nonzero.
pub fn random_triangular<F: Field, R: Rng>(
    ring: &Arc<PolyRing<F>>,
    classes: &[usize],
    max_leading_degree: u32,
    coeffs: &PolySampler,
    rng: &mut R,
) -> Option<TriangularSet<F>> {
    let n = ring.nvars();
    let mut members = Vec::with_capacity(classes.len());
    for &cls in classes {
        if cls == 0 || cls > n {
            return None;
        }
        let v = cls - 1;
        let d = rng.gen_range(1..=max_leading_degree.max(1));
        let mut t = Polynomial::zero(ring);
        for e in 0..=d {
            let c = loop {
                let c = coeffs.sample_in(ring, v, rng);
                if e < d || !c.is_zero() {
                    break c;
                }
            };
            t = &t + &(&c * &Polynomial::var(ring, v).pow(e));
        }
        members.push(t);
    }
    TriangularSet::new(members).ok()
}
