//! Reduced Gröbner bases in the purely lexicographical order.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{Field, Monomial, PolyRing, Polynomial, VariableOrder};

/// A reduced basis: members are monic, mutually reduced, and sorted
/// ascending by leading monomial. The unit ideal is `[1]`; an empty member
/// list stands for the zero ideal (only produced by elimination).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGroebnerBasis<F: Field> {
    ring: Arc<PolyRing<F>>,
    members: Vec<Polynomial<F>>,
}

impl<F: Field> ReducedGroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn order(&self) -> &VariableOrder {
        self.ring.order()
    }

    pub fn members(&self) -> &[Polynomial<F>] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Polynomial<F>> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.members.len() == 1 && self.members[0].is_one()
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        ideal_member(p, self)
    }

    /// Members of class `i`, in basis order.
    pub fn of_class(&self, i: usize) -> impl Iterator<Item = &Polynomial<F>> {
        self.members.iter().filter(move |g| g.class() == i)
    }
}

impl<F: Field> fmt::Display for ReducedGroebnerBasis<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, g) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

/// `input = sum cofactors[i] * basis[i] + normal_form`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace<F: Field> {
    pub cofactors: Vec<Polynomial<F>>,
    pub normal_form: Polynomial<F>,
}

impl<F: Field> ReductionTrace<F> {
    pub fn verify(&self, input: &Polynomial<F>, basis: &[Polynomial<F>]) -> bool {
        let mut rhs = self.normal_form.clone();
        for (c, b) in self.cofactors.iter().zip(basis) {
            rhs = &rhs + &(c * b);
        }
        &rhs == input
    }
}

/// Finds the first basis member whose leading monomial divides `m`.
fn find_reducer<F: Field>(m: &Monomial, basis: &[Polynomial<F>]) -> Option<(usize, Monomial)> {
    basis.iter().enumerate().find_map(|(i, b)| {
        let lm = b.leading_monomial()?;
        m.div(lm).map(|q| (i, q))
    })
}

/// Full reduction with a cofactor trace. The greatest reducible term is
/// eliminated first; among applicable members the lowest index wins.
pub fn normal_form<F: Field>(g: &Polynomial<F>, basis: &[Polynomial<F>]) -> ReductionTrace<F> {
    let ring = g.ring();
    let mut parts: Vec<Vec<(F, Monomial)>> = vec![Vec::new(); basis.len()];
    let mut p = g.clone();
    let mut rest = Vec::new();
    while let Some(t) = p.leading_term() {
        match find_reducer(&t.mono, basis) {
            Some((i, q)) => {
                let lc = basis[i].leading_coeff().expect("nonzero member");
                let c = t.coeff.mul(&lc.inv().expect("nonzero leading coefficient"));
                p = p.sub_mul_term(&c, &q, &basis[i]);
                parts[i].push((c, q));
            }
            None => {
                rest.push((t.coeff.clone(), t.mono.clone()));
                p = Polynomial::from_sorted(ring, p.terms()[1..].to_vec());
            }
        }
    }
    ReductionTrace {
        cofactors: parts.into_iter().map(|raw| Polynomial::from_terms(ring, raw)).collect(),
        normal_form: Polynomial::from_terms(ring, rest),
    }
}

/// Normal form without the trace.
pub fn reduce<F: Field>(g: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let ring = g.ring();
    let mut p = g.clone();
    let mut rest = Vec::new();
    while let Some(t) = p.leading_term() {
        match find_reducer(&t.mono, basis) {
            Some((i, q)) => {
                let lc = basis[i].leading_coeff().expect("nonzero member");
                let c = t.coeff.mul(&lc.inv().expect("nonzero leading coefficient"));
                p = p.sub_mul_term(&c, &q, &basis[i]);
            }
            None => {
                rest.push(p.terms()[0].clone());
                p = Polynomial::from_sorted(ring, p.terms()[1..].to_vec());
            }
        }
    }
    Polynomial::from_sorted(ring, rest)
}

/// `lcm/lt(f) * f - lcm/lt(g) * g` with monic scaling.
pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (lf, lg) = (f.leading_term().expect("nonzero"), g.leading_term().expect("nonzero"));
    let lcm = lf.mono.lcm(&lg.mono);
    let a = f.mul_term(&lf.coeff.inv().expect("nonzero"), &lcm.div(&lf.mono).expect("divides"));
    let b = lcm.div(&lg.mono).expect("divides");
    a.sub_mul_term(&lg.coeff.inv().expect("nonzero"), &b, g)
}

/// Pending S-pairs ordered by the plex order of their lcm, then by index.
type Pairs = BTreeSet<(Monomial, usize, usize)>;

/// Gebauer-Moeller update: installs `polys[h]`, pruning pairs by the
/// coprime and chain criteria and retiring members whose leading monomial
/// the new one divides.
fn update<F: Field>(polys: &[Polynomial<F>], active: &mut Vec<usize>, pairs: &mut Pairs, h: usize) {
    let lm = |i: usize| polys[i].leading_monomial().expect("nonzero");
    let lh = lm(h);

    let mut fresh: Vec<(Monomial, usize, bool)> =
        active.iter().map(|&k| (lm(k).lcm(lh), k, lm(k).is_coprime(lh))).collect();
    // Drop a new pair when another new pair has an lcm properly dividing it.
    let kept: Vec<(Monomial, usize, bool)> = fresh
        .iter()
        .filter(|(l, _, _)| !fresh.iter().any(|(m, _, _)| m != l && m.divides(l)))
        .cloned()
        .collect();
    fresh = Vec::new();
    // Among pairs with equal lcm keep one, and none if any of them is coprime.
    for (l, k, coprime) in kept {
        match fresh.iter_mut().find(|(m, _, _)| *m == l) {
            Some(entry) => entry.2 |= coprime,
            None => fresh.push((l, k, coprime)),
        }
    }

    pairs.retain(|(l, i, j)| {
        !(lh.divides(l) && lm(*i).lcm(lh) != *l && lm(*j).lcm(lh) != *l)
    });
    for (l, k, coprime) in fresh {
        if !coprime {
            pairs.insert((l, k.min(h), k.max(h)));
        }
    }
    active.retain(|&k| !lh.divides(lm(k)));
    active.push(h);
}

/// Buchberger's algorithm with the normal selection strategy and the coprime
/// and chain criteria (Gebauer-Moeller installation), followed by
/// interreduction.
pub fn reduced_gb<F: Field>(gens: &[Polynomial<F>]) -> Result<ReducedGroebnerBasis<F>> {
    let ring = gens.first().ok_or(Error::EmptyInput)?.ring().clone();
    let mut polys: Vec<Polynomial<F>> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        if g.ring().order() != ring.order() {
            return Err(Error::OrderMismatch);
        }
        polys.push(g.monic());
    }
    if polys.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let unit = || ReducedGroebnerBasis { ring: ring.clone(), members: vec![Polynomial::one(&ring)] };
    if polys.iter().any(Polynomial::is_constant) {
        return Ok(unit());
    }
    polys.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    polys.dedup();

    let mut active: Vec<usize> = Vec::new();
    let mut pairs = Pairs::new();
    for h in 0..polys.len() {
        update(&polys, &mut active, &mut pairs, h);
    }
    while let Some((_, i, j)) = pairs.pop_first() {
        let reducers: Vec<Polynomial<F>> = active.iter().map(|&k| polys[k].clone()).collect();
        let s = reduce(&s_polynomial(&polys[i], &polys[j]), &reducers);
        if s.is_zero() {
            continue;
        }
        if s.is_constant() {
            return Ok(unit());
        }
        polys.push(s.monic());
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }
    let basis = active.into_iter().map(|k| polys[k].clone()).collect();
    Ok(ReducedGroebnerBasis { members: interreduce(basis), ring })
}

/// Minimizes and interreduces a Gröbner basis of monic polynomials.
fn interreduce<F: Field>(basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let m = g.leading_monomial().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hm = h.leading_monomial().expect("nonzero");
            k != i && hm.divides(m) && (hm != m || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial<F>> =
            minimal.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, h)| h.clone()).collect();
        out.push(reduce(&minimal[i], &others).monic());
    }
    out
}

pub fn ideal_member<F: Field>(p: &Polynomial<F>, basis: &ReducedGroebnerBasis<F>) -> bool {
    reduce(p, &basis.members).is_zero()
}

/// `B ∩ k[x_1..x_i]`, the reduced basis of the `i`-th elimination ideal.
pub fn elimination_prefix<F: Field>(basis: &ReducedGroebnerBasis<F>, i: usize) -> ReducedGroebnerBasis<F> {
    ReducedGroebnerBasis {
        ring: basis.ring.clone(),
        members: basis.members.iter().filter(|g| g.class() <= i).cloned().collect(),
    }
}

/// The ring with a fresh variable adjoined as the greatest one.
fn tagged_ring<F: Field>(ring: &Arc<PolyRing<F>>) -> Arc<PolyRing<F>> {
    let order = ring.order();
    let tag = order.fresh_name("z");
    ring.with_order(order.with_greatest(&tag).expect("fresh name"))
}

/// Basis of `<gens> : f^∞` via a tag variable `z` and the generator `z f - 1`.
pub fn saturation_gb<F: Field>(gens: &[Polynomial<F>], f: &Polynomial<F>) -> Result<ReducedGroebnerBasis<F>> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let ring = f.ring();
    let big = tagged_ring(ring);
    let z = Polynomial::var(&big, ring.nvars());
    let mut lifted = Vec::with_capacity(gens.len() + 1);
    for g in gens {
        lifted.push(g.embed_into(&big)?);
    }
    lifted.push(&(&z * &f.embed_into(&big)?) - &Polynomial::one(&big));
    let full = reduced_gb(&lifted)?;
    let members = full
        .members
        .iter()
        .filter(|g| !g.involves(ring.nvars()))
        .map(|g| g.embed_into(ring))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReducedGroebnerBasis { ring: ring.clone(), members })
}

/// `f ∈ √<gens>`, decided by `1 ∈ <gens, 1 - z f>`.
pub fn radical_member<F: Field>(f: &Polynomial<F>, gens: &[Polynomial<F>]) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let ring = f.ring();
    let big = tagged_ring(ring);
    let z = Polynomial::var(&big, ring.nvars());
    let mut lifted = Vec::with_capacity(gens.len() + 1);
    for g in gens {
        lifted.push(g.embed_into(&big)?);
    }
    lifted.push(&Polynomial::one(&big) - &(&z * &f.embed_into(&big)?));
    Ok(reduced_gb(&lifted)?.is_unit())
}

/// Two reduced bases describe the same ideal iff they are equal.
pub fn same_ideal<F: Field>(a: &[Polynomial<F>], b: &[Polynomial<F>]) -> Result<bool> {
    Ok(reduced_gb(a)?.members == reduced_gb(b)?.members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::testutil::{p, ps, ring};

    #[test]
    fn example_d_basis() {
        let r = ring(3);
        let g = reduced_gb(&ps(&r, &["x1^4", "x2^4", "x1*(x2+x1)*x3 - x1^3"])).unwrap();
        assert_eq!(g.members(), ps(&r, &["x1^4", "x1^3*x2^3", "x2^4", "x1*(x2+x1)*x3 - x1^3"]).as_slice());
    }

    #[test]
    fn already_reduced() {
        let r = ring(3);
        let gens = ps(&r, &["x1*x2 - 1", "x3 - x2"]);
        assert_eq!(reduced_gb(&gens).unwrap().members(), gens.as_slice());
    }

    #[test]
    fn unit_and_zero_ideals() {
        let r = ring(2);
        let g = reduced_gb(&ps(&r, &["x1", "x1 - 1"])).unwrap();
        assert!(g.is_unit());
        assert_eq!(reduced_gb(&ps(&r, &["0"])), Err(Error::ZeroIdeal));
    }

    #[test]
    fn normal_form_trace() {
        let r = ring(3);
        let basis = ps(&r, &["x1^2 - x2", "x1*x3 - 1"]);
        let g = p(&r, "x1^3*x3 + x2*x3^2 + 5");
        let tr = normal_form(&g, &basis);
        assert!(tr.verify(&g, &basis));
        assert_eq!(tr.normal_form, reduce(&g, &basis));
        assert!(normal_form(&p(&r, "0"), &basis).normal_form.is_zero());
        assert!(normal_form(&basis[1], &basis).normal_form.is_zero());
    }

    #[test]
    fn saturation_examples() {
        let r = ring(2);
        let sat = saturation_gb(&ps(&r, &["x1^2", "x1*x2"]), &p(&r, "x1")).unwrap();
        assert!(sat.is_unit());
        let sat = saturation_gb(&ps(&r, &["x1^2", "x1*x2"]), &p(&r, "x2")).unwrap();
        assert_eq!(sat.members(), ps(&r, &["x1"]).as_slice());
        let sat = saturation_gb(&ps(&r, &["x1*x2 - 1"]), &p(&r, "x1")).unwrap();
        assert_eq!(sat.members(), ps(&r, &["x1*x2 - 1"]).as_slice());
        assert_eq!(saturation_gb(&ps(&r, &["x1"]), &p(&r, "0")), Err(Error::DivisionByZero));
    }

    #[test]
    fn radical_examples() {
        let r = ring(5);
        assert!(radical_member(&p(&r, "x1"), &ps(&r, &["x1^2"])).unwrap());
        assert!(radical_member(&p(&r, "x1*x2"), &ps(&r, &["x1*x2", "x2*x3", "x3*x4"])).unwrap());
        assert!(!radical_member(&p(&r, "x5"), &ps(&r, &["x1*x2 - 1"])).unwrap());
    }

    #[test]
    fn elimination() {
        let r = ring(3);
        let g = reduced_gb(&ps(&r, &["x1*x2 - 1", "x3 - x2"])).unwrap();
        assert_eq!(elimination_prefix(&g, 3), g);
        assert!(elimination_prefix(&g, 1).is_empty());
        assert_eq!(elimination_prefix(&g, 2).members(), ps(&r, &["x1*x2 - 1"]).as_slice());
    }
}
