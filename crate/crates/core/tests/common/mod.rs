#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use gbchar::parse::{parse_polynomial_in, parse_system, SystemFile};
use gbchar::random::{seeded, SystemSampler};
use gbchar::{Field, Fp, PolyRing, Polynomial, PrimeModulus, Rational, VariableOrder};
use rand::Rng;

pub const PRIME: u64 = 32003;

pub fn fixture(name: &str) -> SystemFile {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.sys"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_system(&text).unwrap()
}

pub fn ring_q(n: usize) -> Arc<PolyRing<Rational>> {
    PolyRing::new(VariableOrder::indexed("x", n), ())
}

pub fn ring_of<F: Field>(gens: &[Polynomial<F>]) -> Arc<PolyRing<F>> {
    gens[0].ring().clone()
}

pub fn poly<F: Field>(ring: &Arc<PolyRing<F>>, text: &str) -> Polynomial<F> {
    parse_polynomial_in(ring, text).unwrap()
}

pub fn polys<F: Field>(ring: &Arc<PolyRing<F>>, texts: &[&str]) -> Vec<Polynomial<F>> {
    texts.iter().map(|t| poly(ring, t)).collect()
}

pub fn to_fp(gens: &[Polynomial<Rational>]) -> Vec<Polynomial<Fp>> {
    let m = PrimeModulus::new(PRIME).unwrap();
    let ring = PolyRing::<Fp>::new(gens[0].order().clone(), m);
    gens.iter().map(|g| g.map_coefficients(&ring, |c| Fp::from_rational(&m, &c.0)).unwrap()).collect()
}

/// Random systems over the rationals: 2 to 4 variables, total degree at most
/// 3, at most 4 generators.
pub fn corpus(count: usize, seed: u64) -> Vec<Vec<Polynomial<Rational>>> {
    let mut rng = seeded(seed);
    let sampler = SystemSampler::default();
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            sampler.sample(&ring_q(n), &mut rng)
        })
        .collect()
}
