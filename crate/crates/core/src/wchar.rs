//! W-characteristic sets, Ritt characteristic sets built from them, and the
//! irregularity structure of abnormal W-characteristic sets.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{normal_form, reduce, saturation_gb, ReducedGroebnerBasis, ReductionTrace};
use crate::polyring::{pseudo_divide, Field, PolyRing, Polynomial, PseudoDivisionResult};
use crate::random::{random_combination, seeded, PolySampler};
use crate::triset::{
    classify_chain, classify_shape, is_r_reduced, is_regular, normality_witness, prem_triset, res_triset,
    AscendingSet, PremCertificate, ResCertificate, Shape, TriangularSet,
};

/// The plex-least member of every class stratum of a reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WCharacteristicSet<F: Field> {
    members: Vec<Polynomial<F>>,
    source: ReducedGroebnerBasis<F>,
}

impl<F: Field> WCharacteristicSet<F> {
    pub fn members(&self) -> &[Polynomial<F>] {
        &self.members
    }

    pub fn source(&self) -> &ReducedGroebnerBasis<F> {
        &self.source
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        self.source.ring()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The unit ideal has W-characteristic set `[1]`.
    pub fn is_unit(&self) -> bool {
        self.members.len() == 1 && self.members[0].is_one()
    }

    /// `None` for the unit and zero ideals.
    pub fn triangular(&self) -> Option<TriangularSet<F>> {
        if self.is_unit() || self.is_empty() {
            return None;
        }
        Some(TriangularSet::new(self.members.clone()).expect("W-characteristic sets are triangular"))
    }

    /// Variable indices `y_1 < ... < y_r`.
    pub fn leading_variables(&self) -> Vec<usize> {
        self.members.iter().filter_map(Polynomial::leading_var).collect()
    }

    /// The variables that are not leading variables, ascending.
    pub fn parameters(&self) -> Vec<usize> {
        let leading = self.leading_variables();
        (0..self.ring().nvars()).filter(|v| !leading.contains(v)).collect()
    }

    /// Whether every leading variable is greater than every parameter.
    pub fn order_assumption_holds(&self) -> bool {
        let leading = self.leading_variables();
        let n = self.ring().nvars();
        leading.iter().all(|&y| y >= n - leading.len())
    }

    /// First violating pair `(parameter, leading variable)` by index.
    pub fn order_violation(&self) -> Option<(usize, usize)> {
        let leading = self.leading_variables();
        let params = self.parameters();
        let top = *params.last()?;
        leading.iter().find(|&&y| y < top).map(|&y| (top, y))
    }
}

pub fn wcharacteristic_set<F: Field>(basis: &ReducedGroebnerBasis<F>) -> WCharacteristicSet<F> {
    let mut members: Vec<Polynomial<F>> = Vec::new();
    for g in basis.members() {
        // members are sorted ascending, so the first of each class is the least
        if members.last().is_none_or(|c| c.class() < g.class()) {
            members.push(g.clone());
        }
    }
    WCharacteristicSet { members, source: basis.clone() }
}

/// Outcome of [`charpro_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharproReport<F: Field> {
    /// `prem(g, C)` for every basis member.
    pub member_remainders: Vec<PremCertificate<F>>,
    /// Random ideal elements and their pseudo-remainders.
    pub samples: Vec<(Polynomial<F>, PremCertificate<F>)>,
    /// Normal forms of the members of `C` with respect to the basis.
    pub chain_traces: Vec<ReductionTrace<F>>,
    /// Basis of `sat(C)`.
    pub saturation: ReducedGroebnerBasis<F>,
}

/// Sampling parameters for claims over all ideal elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub count: usize,
    pub seed: u64,
    pub sampler: PolySampler,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { count: 8, seed: 0, sampler: PolySampler { max_degree: 2, max_terms: 3, coeff_bound: 5 } }
    }
}

/// Checks that `prem(P, C) = 0` on the basis and on sampled ideal elements,
/// and that `<C> ⊆ <P> ⊆ sat(C)`.
pub fn charpro_check<F: Field>(
    basis: &ReducedGroebnerBasis<F>,
    chain: &WCharacteristicSet<F>,
    config: &SampleConfig,
) -> Result<CharproReport<F>> {
    let t = chain
        .triangular()
        .ok_or_else(|| Error::Precondition("W-characteristic set of a unit or zero ideal".into()))?;
    let mut member_remainders = Vec::with_capacity(basis.len());
    for g in basis.members() {
        let cert = prem_triset(g, &t);
        if !cert.remainder.is_zero() || !cert.verify(g, &t) {
            return Err(Error::StructuralViolation(format!("prem({g}, C) = {}", cert.remainder)));
        }
        member_remainders.push(cert);
    }
    let mut rng = seeded(config.seed);
    let mut samples = Vec::with_capacity(config.count);
    for _ in 0..config.count {
        let h = random_combination(basis.members(), &config.sampler, &mut rng).expect("nonempty basis");
        let cert = prem_triset(&h, &t);
        if !cert.remainder.is_zero() || !cert.verify(&h, &t) {
            return Err(Error::StructuralViolation(format!("prem({h}, C) = {}", cert.remainder)));
        }
        samples.push((h, cert));
    }
    let mut chain_traces = Vec::with_capacity(t.len());
    for c in t.members() {
        let tr = normal_form(c, basis.members());
        if !tr.normal_form.is_zero() {
            return Err(Error::StructuralViolation(format!("{c} is not in the ideal")));
        }
        chain_traces.push(tr);
    }
    let saturation = saturation_gb(t.members(), &t.initial_product())?;
    for g in basis.members() {
        if !reduce(g, saturation.members()).is_zero() {
            return Err(Error::StructuralViolation(format!("{g} is not in sat(C)")));
        }
    }
    Ok(CharproReport { member_remainders, samples, chain_traces, saturation })
}

/// `C*` together with the certificates `C*_i = prem(C_i, [C_1..C_{i-1}])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularStar<F: Field> {
    pub charset: AscendingSet<F>,
    /// Certificate for member `i` (0-based) against the first `i` members of `C`;
    /// `None` for the first member.
    pub certificates: Vec<Option<PremCertificate<F>>>,
}

pub fn ritt_from_regular<F: Field>(chain: &TriangularSet<F>) -> Result<RegularStar<F>> {
    if !is_regular(chain) {
        return Err(Error::Precondition("triangular set is not regular".into()));
    }
    let mut members = vec![chain.members()[0].clone()];
    let mut certificates = vec![None];
    for i in 1..chain.len() {
        let cert = prem_triset(&chain.members()[i], &chain.prefix(i).expect("i >= 1"));
        members.push(cert.remainder.clone());
        certificates.push(Some(cert));
    }
    for (star, c) in members.iter().zip(chain.members()) {
        let v = c.leading_var().expect("nonconstant");
        if star.leading_var() != Some(v) || star.degree(v) != c.degree(v) {
            return Err(Error::StructuralViolation(format!("prem of {c} changed its leading variable or degree")));
        }
    }
    let charset = AscendingSet::new(members)
        .map_err(|e| Error::StructuralViolation(format!("C* is not ascending: {e}")))?;
    Ok(RegularStar { charset, certificates })
}

/// Which branch of the irregularity theorem applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrregularCase {
    /// `I_{k+1}` is not R-reduced with respect to `C_l`.
    NotReduced,
    /// `I_{k+1}` is R-reduced with respect to `C_l`.
    Reduced,
}

impl IrregularCase {
    pub fn label(self) -> &'static str {
        match self {
            IrregularCase::NotReduced => "(c)",
            IrregularCase::Reduced => "(d)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate<F: Field> {
    Prem(PremCertificate<F>),
    Res(ResCertificate<F>),
    /// Resultant against an empty chain: the value is the argument itself.
    Identity,
}

/// A claimed vanishing `prem(target, chain) = 0` or `res(target, chain) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<F: Field> {
    pub label: String,
    pub target: Polynomial<F>,
    pub chain: Vec<Polynomial<F>>,
    pub certificate: Certificate<F>,
    /// One of an either/or pair: at least one relation of the pair holds.
    pub alternative: bool,
}

impl<F: Field> Relation<F> {
    fn prem(label: String, target: Polynomial<F>, chain: Vec<Polynomial<F>>) -> Self {
        let t = TriangularSet::new(chain.clone()).expect("relation chains are triangular");
        let cert = prem_triset(&target, &t);
        Relation { label, target, chain, certificate: Certificate::Prem(cert), alternative: false }
    }

    fn res(label: String, target: Polynomial<F>, chain: Vec<Polynomial<F>>) -> Self {
        let certificate = if chain.is_empty() {
            Certificate::Identity
        } else {
            let t = TriangularSet::new(chain.clone()).expect("relation chains are triangular");
            Certificate::Res(res_triset(&target, &t))
        };
        Relation { label, target, chain, certificate, alternative: false }
    }

    /// The remainder or resultant.
    pub fn value(&self) -> &Polynomial<F> {
        match &self.certificate {
            Certificate::Prem(c) => &c.remainder,
            Certificate::Res(c) => &c.value,
            Certificate::Identity => &self.target,
        }
    }

    fn or_else(mut self) -> Self {
        self.alternative = true;
        self
    }

    pub fn holds(&self) -> bool {
        self.value().is_zero()
    }

    /// Re-expands the certificate.
    pub fn verify(&self) -> bool {
        let Ok(t) = TriangularSet::new(self.chain.clone()) else {
            return matches!(self.certificate, Certificate::Identity);
        };
        match &self.certificate {
            Certificate::Prem(c) => c.verify(&self.target, &t),
            Certificate::Res(c) => c.verify(&self.target, &t),
            Certificate::Identity => false,
        }
    }
}

/// Irregularity data of an abnormal W-characteristic set. Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrregularityReport<F: Field> {
    /// Largest `k` with `[C_1..C_k]` normal.
    pub k: usize,
    /// `y_l = lv(I_{k+1})`.
    pub l: usize,
    pub case: IrregularCase,
    /// `I_{k+1}`.
    pub initial: Polynomial<F>,
    /// `d = deg(C_{k+1}, y_{k+1})`.
    pub degree: u32,
    /// `H_{k+1} = C_{k+1} - I_{k+1} y_{k+1}^d`.
    pub tail: Polynomial<F>,
    /// `res(I_{k+1}, [C_1..C_k])`, which vanishes when `[C_1..C_{k+1}]` is irregular.
    pub irregularity: Relation<F>,
    /// `I^q C_l = Q I_{k+1} + L` in the R-reduced case.
    pub pseudo_quotient: Option<PseudoDivisionResult<F>>,
    pub relations: Vec<Relation<F>>,
    pub order_assumption: bool,
}

impl<F: Field> IrregularityReport<F> {
    /// `Q = pquo(C_l, I_{k+1}, y_l)`.
    pub fn quotient(&self) -> Option<&Polynomial<F>> {
        self.pseudo_quotient.as_ref().map(|p| &p.quotient)
    }

    pub fn relation(&self, label: &str) -> Option<&Relation<F>> {
        self.relations.iter().find(|r| r.label == label)
    }

    /// All relations the theorem guarantees hold, including the either/or pair.
    pub fn all_hold(&self) -> bool {
        let mandatory = self.relations.iter().filter(|r| !r.alternative).all(Relation::holds);
        let mut alternatives = self.relations.iter().filter(|r| r.alternative).peekable();
        let alternative = alternatives.peek().is_none() || alternatives.any(Relation::holds);
        mandatory && alternative && self.irregularity.holds()
    }

    pub fn all_verify(&self) -> bool {
        self.irregularity.verify() && self.relations.iter().all(Relation::verify)
    }

    /// `k=1, case (c)`.
    pub fn summary(&self) -> String {
        format!("k={}, case {}", self.k, self.case.label())
    }
}

/// Computes the irregularity structure without checking the variable order
/// or failing on relations that do not hold.
pub fn analyze_irregularity<F: Field>(chain: &TriangularSet<F>) -> Result<IrregularityReport<F>> {
    let (j, _) = normality_witness(chain)
        .ok_or_else(|| Error::Precondition("the W-characteristic set is normal".into()))?;
    let k = j - 1;
    let c = chain.members();
    let lvs = chain.leading_vars();
    let initial = c[k].initial();
    let l = 1 + (0..k).rev().find(|&i| initial.involves(lvs[i])).expect("normality failure involves a leading variable");
    let yl = lvs[l - 1];
    let yk1 = lvs[k];
    let degree = c[k].degree(yk1) as u32;
    let tail = &c[k] - &(&initial * &Polynomial::var(initial.ring(), yk1).pow(degree));
    let irregularity = Relation::res(
        format!("res(I_{}, [C_1..C_{k}]) = 0", k + 1),
        initial.clone(),
        c[..k].to_vec(),
    );
    let n = c[0].nvars();
    let order_assumption = lvs.iter().all(|&y| y >= n - lvs.len());

    let mut relations = Vec::new();
    let mut pseudo_quotient = None;
    let case = if is_r_reduced(&initial, &c[l - 1]) {
        IrregularCase::Reduced
    } else {
        IrregularCase::NotReduced
    };
    match case {
        IrregularCase::NotReduced => {
            relations.push(Relation::prem(format!("prem(I_{}, [C_1..C_{l}]) = 0", k + 1), initial.clone(), c[..l].to_vec()));
            relations.push(Relation::prem(format!("prem(C_{}, [C_1..C_{k}]) = 0", k + 1), c[k].clone(), c[..k].to_vec()));
        }
        IrregularCase::Reduced => {
            let mut tilde_l = c[..l - 1].to_vec();
            tilde_l.push(initial.clone());
            relations.push(Relation::prem(
                format!("prem(C_{l}, [C_1..C_{}, I_{}]) = 0", l - 1, k + 1),
                c[l - 1].clone(),
                tilde_l.clone(),
            ));
            let init_init = initial.initial();
            relations.push(Relation::res(
                format!("res(ini(I_{}), [C_1..C_{}]) = 0", k + 1, l - 1),
                init_init,
                c[..l - 1].to_vec(),
            )
            .or_else());
            let mut tilde = tilde_l;
            tilde.extend_from_slice(&c[l..k]);
            relations.push(Relation::prem(format!("prem(C_{}, C~) = 0", k + 1), c[k].clone(), tilde).or_else());
            let pq = pseudo_divide(&c[l - 1], &initial, yl).expect("initial is nonzero");
            relations.push(Relation::prem(
                format!("prem(Q*C_{}, [C_1..C_{k}]) = 0", k + 1),
                &pq.quotient * &c[k],
                c[..k].to_vec(),
            ));
            pseudo_quotient = Some(pq);
        }
    }
    Ok(IrregularityReport {
        k,
        l,
        case,
        initial,
        degree,
        tail,
        irregularity,
        pseudo_quotient,
        relations,
        order_assumption,
    })
}

/// Irregularity structure of an abnormal W-characteristic set under the
/// variable-order assumption; every guaranteed relation is checked.
pub fn irregularity_report<F: Field>(chain: &WCharacteristicSet<F>) -> Result<IrregularityReport<F>> {
    if let Some((p, y)) = chain.order_violation() {
        let order = chain.ring().order();
        return Err(Error::OrderAssumption { parameter: order.name(p).to_string(), leading: order.name(y).to_string() });
    }
    let t = chain
        .triangular()
        .ok_or_else(|| Error::Precondition("W-characteristic set of a unit or zero ideal".into()))?;
    let report = analyze_irregularity(&t)?;
    if !report.all_verify() {
        return Err(Error::InternalConsistency("a relation certificate does not re-expand".into()));
    }
    if !report.all_hold() {
        let failed: Vec<_> = report.relations.iter().filter(|r| !r.holds()).map(|r| r.label.clone()).collect();
        return Err(Error::StructuralViolation(format!("relations fail: {}", failed.join("; "))));
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RittResult<F: Field> {
    /// The W-characteristic set is ascending and is itself a Ritt characteristic set.
    Ascending(AscendingSet<F>),
    /// The W-characteristic set is regular; `C*` is a Ritt characteristic set.
    RegularStar(RegularStar<F>),
    /// Neither ascending nor regular; no characteristic set is claimed.
    Abnormal(Box<IrregularityReport<F>>),
}

impl<F: Field> RittResult<F> {
    pub fn tag(&self) -> &'static str {
        match self {
            RittResult::Ascending(_) => "ascending",
            RittResult::RegularStar(_) => "regular_star",
            RittResult::Abnormal(_) => "abnormal",
        }
    }

    pub fn charset(&self) -> Option<&AscendingSet<F>> {
        match self {
            RittResult::Ascending(a) => Some(a),
            RittResult::RegularStar(s) => Some(&s.charset),
            RittResult::Abnormal(_) => None,
        }
    }
}

pub fn ritt_charset<F: Field>(basis: &ReducedGroebnerBasis<F>) -> Result<RittResult<F>> {
    let w = wcharacteristic_set(basis);
    if w.is_unit() {
        return Ok(RittResult::Ascending(AscendingSet::Constant(w.members[0].clone())));
    }
    let t = w.triangular().ok_or(Error::ZeroIdeal)?;
    if classify_shape(t.members())? == Shape::Ascending {
        return Ok(RittResult::Ascending(AscendingSet::Chain(t)));
    }
    if is_regular(&t) {
        return Ok(RittResult::RegularStar(ritt_from_regular(&t)?));
    }
    let report = if w.order_assumption_holds() { irregularity_report(&w)? } else { analyze_irregularity(&t)? };
    Ok(RittResult::Abnormal(Box::new(report)))
}

/// Classification of a W-characteristic set in one line, e.g.
/// `abnormal, irregular; k=1, case (c)`.
pub fn describe<F: Field>(chain: &WCharacteristicSet<F>) -> String {
    let Some(t) = chain.triangular() else {
        return if chain.is_unit() { "unit ideal".into() } else { "zero ideal".into() };
    };
    let cls = classify_chain(&t);
    let mut parts = vec![
        if cls.is_normal { "normal" } else { "abnormal" },
        if cls.is_regular { "regular" } else { "irregular" },
    ];
    if cls.is_ascending {
        parts.push("ascending");
    }
    let mut text = parts.join(", ");
    if !cls.is_regular {
        if let Ok(r) = analyze_irregularity(&t) {
            text.push_str(&format!("; {}", r.summary()));
        }
    }
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::reduced_gb;
    use crate::polyring::testutil::{p, ps, ring};

    #[test]
    fn example_d_charset() {
        let r = ring(3);
        let g = reduced_gb(&ps(&r, &["x1^4", "x2^4", "x1*(x2+x1)*x3 - x1^3"])).unwrap();
        let w = wcharacteristic_set(&g);
        assert_eq!(w.members(), ps(&r, &["x1^4", "x1^3*x2^3", "x1*(x2+x1)*x3 - x1^3"]).as_slice());
        assert!(matches!(ritt_charset(&g).unwrap(), RittResult::Ascending(_)));
    }

    #[test]
    fn example_a_regular_star() {
        let r = ring(3);
        let g = reduced_gb(&ps(&r, &["x1*x2 - 1", "x3 - x2"])).unwrap();
        match ritt_charset(&g).unwrap() {
            RittResult::RegularStar(s) => {
                assert_eq!(s.charset.members(), ps(&r, &["x1*x2 - 1", "x1*x3 - 1"]).as_slice())
            }
            other => panic!("unexpected {}", other.tag()),
        }
    }

    #[test]
    fn example_c_report() {
        let r = ring(4);
        let g = reduced_gb(&ps(&r, &["x1*x2", "x2*x3", "x3*x4"])).unwrap();
        let w = wcharacteristic_set(&g);
        let rep = irregularity_report(&w).unwrap();
        assert_eq!((rep.k, rep.l, rep.case), (1, 1, IrregularCase::NotReduced));
        assert_eq!(rep.initial, p(&r, "x2"));
        assert!(rep.all_verify());
        assert_eq!(describe(&w), "abnormal, irregular; k=1, case (c)");
        charpro_check(&g, &w, &SampleConfig::default()).unwrap();
    }

    #[test]
    fn example_d_bar_report() {
        let r = ring(3);
        let g = reduced_gb(&ps(&r, &["x1^3", "x2^3", "x1*x2*x3 - x1^2*x2"])).unwrap();
        let w = wcharacteristic_set(&g);
        let rep = irregularity_report(&w).unwrap();
        assert_eq!((rep.k, rep.l, rep.case), (2, 2, IrregularCase::Reduced));
        assert_eq!(rep.quotient().unwrap(), &p(&r, "x1^2*x2^2"));
        assert!(rep.relations[1].holds());
    }

    #[test]
    fn example_e_order_violation() {
        let r = ring(5);
        let g = reduced_gb(&ps(&r, &["x1*x2", "x3*x4 - x2^2", "x2*x5 + x4^2"])).unwrap();
        let w = wcharacteristic_set(&g);
        assert_eq!(w.members(), ps(&r, &["x1*x2", "x3*x4 - x2^2", "x2*x5 + x4^2"]).as_slice());
        assert!(matches!(irregularity_report(&w), Err(Error::OrderAssumption { .. })));
        let rep = analyze_irregularity(&w.triangular().unwrap()).unwrap();
        assert_eq!((rep.k, rep.l, rep.case), (2, 1, IrregularCase::NotReduced));
        assert!(rep.all_hold() && rep.all_verify());
    }
}
