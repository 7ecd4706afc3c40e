//! Workloads shared by the benchmarks under `benches/`.

use gbchar::parse::parse_system;
use gbchar::random::{random_triangular, seeded, PolySampler};
use gbchar::triset::TriangularSet;
use gbchar::{Fp, PolyRing, Polynomial, PrimeModulus, Rational, VariableOrder};

pub const SYSTEMS: &[(&str, &str)] = &[
    ("a", "vars: x1 < x2 < x3\npolys:\nx1*x2 - 1\nx3 - x2\n"),
    ("c", "vars: x1 < x2 < x3 < x4\npolys:\nx1*x2\nx2*x3\nx3*x4\n"),
    ("d", "vars: x1 < x2 < x3\npolys:\nx1^4\nx2^4\nx1*(x2 + x1)*x3 - x1^3\n"),
    ("e", "vars: x1 < x2 < x3 < x4 < x5\npolys:\nx1*x2\nx3*x4 - x2^2\nx2*x5 + x4^2\n"),
    (
        "cyclic3",
        "vars: x1 < x2 < x3\npolys:\nx1 + x2 + x3\nx1*x2 + x2*x3 + x3*x1\nx1*x2*x3 - 1\n",
    ),
    (
        "katsura3",
        "vars: x1 < x2 < x3\npolys:\nx1 + 2*x2 + 2*x3 - 1\nx1^2 + 2*x2^2 + 2*x3^2 - x1\n2*x1*x2 + 2*x2*x3 - x2\n",
    ),
];

pub fn system(name: &str) -> Vec<Polynomial<Rational>> {
    let (_, text) = SYSTEMS.iter().find(|(n, _)| *n == name).expect("known system");
    parse_system(text).expect("valid system").generators
}

pub fn system_mod(name: &str, p: u64) -> Vec<Polynomial<Fp>> {
    let (_, text) = SYSTEMS.iter().find(|(n, _)| *n == name).expect("known system");
    let sys = parse_system(text).expect("valid system");
    sys.generators_mod(PrimeModulus::new(p).expect("prime")).expect("coefficients map")
}

/// A dense bivariate pair of degree `d` in `x2`, for pseudo-division and resultants.
pub fn dense_pair(d: u32, seed: u64) -> (Polynomial<Rational>, Polynomial<Rational>) {
    let ring = PolyRing::new(VariableOrder::indexed("x", 2), ());
    let mut rng = seeded(seed);
    let coeffs = PolySampler { max_degree: 2, max_terms: 3, coeff_bound: 9 };
    let f = random_triangular(&ring, &[2], d, &coeffs, &mut rng).expect("class in range");
    let g = random_triangular(&ring, &[2], d, &coeffs, &mut rng).expect("class in range");
    (f.into_members().remove(0), g.into_members().remove(0))
}

/// A random triangular set over `n` variables with one member per class.
pub fn chain(n: usize, seed: u64) -> TriangularSet<Rational> {
    let ring = PolyRing::new(VariableOrder::indexed("x", n), ());
    let classes: Vec<usize> = (1..=n).collect();
    let coeffs = PolySampler { max_degree: 2, max_terms: 2, coeff_bound: 5 };
    random_triangular(&ring, &classes, 2, &coeffs, &mut seeded(seed)).expect("classes in range")
}
