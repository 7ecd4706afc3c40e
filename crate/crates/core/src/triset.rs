//! Triangular and ascending sets, pseudo-remainders and resultants against
//! them, rank comparison, and the regular/normal classification.
//!
//! Member positions in witnesses and reports are 1-based (`T_1` is the first
//! member), matching the usual indexing of chains.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polyring::{pseudo_divide, resultant_with_cofactors, Field, Polynomial};

/// Nonconstant polynomials with strictly increasing classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularSet<F: Field> {
    members: Vec<Polynomial<F>>,
}

impl<F: Field> TriangularSet<F> {
    pub fn new(members: Vec<Polynomial<F>>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(w) = triangular_violation(&members) {
            return Err(Error::NotTriangular(w));
        }
        Ok(TriangularSet { members })
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

    /// `[T_1, ..., T_k]`; `None` for `k = 0`.
    pub fn prefix(&self, k: usize) -> Option<TriangularSet<F>> {
        (k > 0).then(|| TriangularSet { members: self.members[..k.min(self.len())].to_vec() })
    }

    pub fn leading_vars(&self) -> Vec<usize> {
        self.members.iter().map(|t| t.leading_var().expect("nonconstant member")).collect()
    }

    pub fn initials(&self) -> Vec<Polynomial<F>> {
        self.members.iter().map(Polynomial::initial).collect()
    }

    pub fn initial_product(&self) -> Polynomial<F> {
        let ring = self.members[0].ring();
        self.initials().iter().fold(Polynomial::one(ring), |acc, i| &acc * i)
    }

    /// `P` is R-reduced with respect to every member.
    pub fn is_r_reduced(&self, p: &Polynomial<F>) -> bool {
        self.members.iter().all(|t| is_r_reduced(p, t))
    }
}

/// `deg(P, lv(T)) < deg(T, lv(T))`.
pub fn is_r_reduced<F: Field>(p: &Polynomial<F>, t: &Polynomial<F>) -> bool {
    match t.leading_var() {
        Some(v) => p.degree(v) < t.degree(v),
        None => false,
    }
}

fn triangular_violation<F: Field>(list: &[Polynomial<F>]) -> Option<String> {
    for (j, t) in list.iter().enumerate() {
        if t.is_constant() {
            return Some(format!("member {} ({t}) is constant", j + 1));
        }
        if j > 0 && list[j - 1].class() >= t.class() {
            return Some(format!(
                "class of member {} ({}) does not exceed class of member {} ({})",
                j + 1,
                t.class(),
                j,
                list[j - 1].class()
            ));
        }
    }
    None
}

/// Either a single nonzero constant or a triangular set whose members are
/// pairwise R-reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AscendingSet<F: Field> {
    Constant(Polynomial<F>),
    Chain(TriangularSet<F>),
}

impl<F: Field> AscendingSet<F> {
    pub fn new(members: Vec<Polynomial<F>>) -> Result<Self> {
        match classify_shape(&members)? {
            Shape::Ascending if members[0].is_constant() => {
                Ok(AscendingSet::Constant(members.into_iter().next().expect("one member")))
            }
            Shape::Ascending => Ok(AscendingSet::Chain(TriangularSet { members })),
            Shape::NotTriangular { reason, .. } => Err(Error::NotTriangular(reason)),
            Shape::Triangular { earlier, later } => Err(Error::Precondition(format!(
                "member {later} is not R-reduced with respect to member {earlier}"
            ))),
        }
    }

    pub fn members(&self) -> &[Polynomial<F>] {
        match self {
            AscendingSet::Constant(c) => std::slice::from_ref(c),
            AscendingSet::Chain(t) => t.members(),
        }
    }

    pub fn as_triangular(&self) -> Option<&TriangularSet<F>> {
        match self {
            AscendingSet::Constant(_) => None,
            AscendingSet::Chain(t) => Some(t),
        }
    }
}

/// Outcome of [`classify_shape`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    NotTriangular { position: usize, reason: String },
    /// Triangular, but member `later` is not R-reduced with respect to member `earlier`.
    Triangular { earlier: usize, later: usize },
    Ascending,
}

pub fn classify_shape<F: Field>(list: &[Polynomial<F>]) -> Result<Shape> {
    if list.is_empty() {
        return Err(Error::EmptyInput);
    }
    if list.len() == 1 && list[0].is_constant() {
        return Ok(if list[0].is_zero() {
            Shape::NotTriangular { position: 1, reason: "zero member".into() }
        } else {
            Shape::Ascending
        });
    }
    for (j, t) in list.iter().enumerate() {
        if t.is_constant() {
            return Ok(Shape::NotTriangular { position: j + 1, reason: format!("member {} is constant", j + 1) });
        }
        if j > 0 && list[j - 1].class() >= t.class() {
            return Ok(Shape::NotTriangular {
                position: j + 1,
                reason: format!("classes {} then {}", list[j - 1].class(), t.class()),
            });
        }
    }
    for j in 1..list.len() {
        for i in 0..j {
            if !is_r_reduced(&list[j], &list[i]) {
                return Ok(Shape::Triangular { earlier: i + 1, later: j + 1 });
            }
        }
    }
    Ok(Shape::Ascending)
}

/// `I_1^{q_1} ... I_r^{q_r} P = Q_1 T_1 + ... + Q_r T_r + R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PremCertificate<F: Field> {
    pub powers: Vec<u32>,
    pub cofactors: Vec<Polynomial<F>>,
    pub remainder: Polynomial<F>,
}

impl<F: Field> PremCertificate<F> {
    /// Left side minus right side of the pseudo-remainder formula.
    pub fn defect(&self, p: &Polynomial<F>, t: &TriangularSet<F>) -> Polynomial<F> {
        let mut lhs = p.clone();
        for (init, &q) in t.initials().iter().zip(&self.powers) {
            if q > 0 {
                lhs = &lhs * &init.pow(q);
            }
        }
        let mut rhs = self.remainder.clone();
        for (c, m) in self.cofactors.iter().zip(t.members()) {
            rhs = &rhs + &(c * m);
        }
        &lhs - &rhs
    }

    pub fn verify(&self, p: &Polynomial<F>, t: &TriangularSet<F>) -> bool {
        self.defect(p, t).is_zero()
    }
}

/// Iterated pseudo-remainder `prem(...prem(P, T_r, lv(T_r))..., T_1, lv(T_1))`
/// with the full certificate.
pub fn prem_triset<F: Field>(p: &Polynomial<F>, t: &TriangularSet<F>) -> PremCertificate<F> {
    let r = t.len();
    let ring = p.ring();
    let mut powers = vec![0; r];
    let mut cofactors = vec![Polynomial::zero(ring); r];
    let mut rem = p.clone();
    for i in (0..r).rev() {
        let member = &t.members()[i];
        let v = member.leading_var().expect("nonconstant member");
        if rem.degree(v) < member.degree(v) {
            continue;
        }
        let step = pseudo_divide(&rem, member, v).expect("members are nonzero");
        if step.power > 0 {
            let scale = step.multiplier.pow(step.power);
            for c in cofactors.iter_mut().skip(i + 1) {
                if !c.is_zero() {
                    *c = &*c * &scale;
                }
            }
        }
        powers[i] = step.power;
        cofactors[i] = step.quotient;
        rem = step.remainder;
    }
    PremCertificate { powers, cofactors, remainder: rem }
}

/// Remainder only.
pub fn prem_chain<F: Field>(p: &Polynomial<F>, t: &TriangularSet<F>) -> Polynomial<F> {
    let mut rem = p.clone();
    for member in t.members().iter().rev() {
        let v = member.leading_var().expect("nonconstant member");
        if rem.degree(v) >= member.degree(v) {
            rem = pseudo_divide(&rem, member, v).expect("members are nonzero").remainder;
        }
    }
    rem
}

/// `N = A F + B_1 T_1 + ... + B_r T_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResCertificate<F: Field> {
    pub value: Polynomial<F>,
    pub cofactor: Polynomial<F>,
    pub member_cofactors: Vec<Polynomial<F>>,
}

impl<F: Field> ResCertificate<F> {
    pub fn defect(&self, f: &Polynomial<F>, t: &TriangularSet<F>) -> Polynomial<F> {
        let mut rhs = &self.cofactor * f;
        for (b, m) in self.member_cofactors.iter().zip(t.members()) {
            rhs = &rhs + &(b * m);
        }
        &self.value - &rhs
    }

    pub fn verify(&self, f: &Polynomial<F>, t: &TriangularSet<F>) -> bool {
        self.defect(f, t).is_zero()
    }
}

/// Iterated resultant `res(...res(F, T_r, lv(T_r))..., T_1, lv(T_1))`.
///
/// A step whose current value does not involve `lv(T_i)` leaves the value
/// unchanged; in particular a constant `F` is returned as is.
pub fn res_triset<F: Field>(f: &Polynomial<F>, t: &TriangularSet<F>) -> ResCertificate<F> {
    let ring = f.ring();
    let r = t.len();
    let mut value = f.clone();
    let mut cofactor = Polynomial::one(ring);
    let mut member_cofactors = vec![Polynomial::zero(ring); r];
    for i in (0..r).rev() {
        let member = &t.members()[i];
        let v = member.leading_var().expect("nonconstant member");
        if value.degree(v) <= 0 {
            continue;
        }
        let step = resultant_with_cofactors(&value, member, v).expect("member has positive degree");
        cofactor = &cofactor * &step.cofactor_f;
        for b in member_cofactors.iter_mut().skip(i + 1) {
            if !b.is_zero() {
                *b = &*b * &step.cofactor_f;
            }
        }
        member_cofactors[i] = step.cofactor_g;
        value = step.resultant;
    }
    ResCertificate { value, cofactor, member_cofactors }
}

/// Value of [`res_triset`] without cofactors.
pub fn res_chain<F: Field>(f: &Polynomial<F>, t: &TriangularSet<F>) -> Polynomial<F> {
    let mut value = f.clone();
    for member in t.members().iter().rev() {
        let v = member.leading_var().expect("nonconstant member");
        if value.degree(v) > 0 {
            value = crate::polyring::resultant(&value, member, v).expect("member has positive degree");
        }
    }
    value
}

/// Rank of polynomials: `Less` means lower rank.
pub fn rank_compare_poly<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Ordering> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroRank);
    }
    let (cf, cg) = (f.class(), g.class());
    if cf != cg {
        return Ok(cf.cmp(&cg));
    }
    if cf == 0 {
        return Ok(Ordering::Equal);
    }
    let v = cf - 1;
    Ok(f.degree(v).cmp(&g.degree(v)))
}

/// Rank of chains (ascending or merely triangular): the first differing member
/// decides; a proper extension has lower rank.
pub fn rank_compare_chains<F: Field>(a: &[Polynomial<F>], b: &[Polynomial<F>]) -> Result<Ordering> {
    for (x, y) in a.iter().zip(b) {
        match rank_compare_poly(x, y)? {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(b.len().cmp(&a.len()))
}

pub fn rank_compare_asc<F: Field>(a: &AscendingSet<F>, b: &AscendingSet<F>) -> Ordering {
    rank_compare_chains(a.members(), b.members()).expect("ascending sets have nonzero members")
}

/// Why a chain fails regularity: the iterated resultant of the initial of
/// member `index` against the members before it vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityWitness<F: Field> {
    pub index: usize,
    pub initial: Polynomial<F>,
    pub certificate: ResCertificate<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainClassification<F: Field> {
    pub is_ascending: bool,
    pub is_regular: bool,
    pub is_normal: bool,
    /// `(i, j)`: member `j` is not R-reduced with respect to member `i`.
    pub ascending_witness: Option<(usize, usize)>,
    pub regular_witness: Option<RegularityWitness<F>>,
    /// `(j, i)`: the initial of member `j` involves the leading variable of member `i`.
    pub normal_witness: Option<(usize, usize)>,
}

impl<F: Field> ChainClassification<F> {
    /// Largest `k` such that `[T_1..T_k]` is normal.
    pub fn normal_prefix_len(&self, len: usize) -> usize {
        self.normal_witness.map_or(len, |(j, _)| j - 1)
    }
}

/// First `(j, i)` with `deg(ini(T_j), lv(T_i)) > 0`, `i < j`.
pub fn normality_witness<F: Field>(t: &TriangularSet<F>) -> Option<(usize, usize)> {
    let lvs = t.leading_vars();
    for (j, member) in t.members().iter().enumerate().skip(1) {
        let init = member.initial();
        if let Some(i) = lvs[..j].iter().position(|&v| init.involves(v)) {
            return Some((j + 1, i + 1));
        }
    }
    None
}

pub fn classify_chain<F: Field>(t: &TriangularSet<F>) -> ChainClassification<F> {
    let ascending_witness = match classify_shape(t.members()).expect("nonempty") {
        Shape::Triangular { earlier, later } => Some((earlier, later)),
        _ => None,
    };
    let normal_witness = normality_witness(t);
    let mut regular_witness = None;
    for j in 1..t.len() {
        let init = t.members()[j].initial();
        let prefix = t.prefix(j).expect("j >= 1");
        if res_chain(&init, &prefix).is_zero() {
            let certificate = res_triset(&init, &prefix);
            regular_witness = Some(RegularityWitness { index: j + 1, initial: init, certificate });
            break;
        }
    }
    ChainClassification {
        is_ascending: ascending_witness.is_none(),
        is_regular: regular_witness.is_none(),
        is_normal: normal_witness.is_none(),
        ascending_witness,
        regular_witness,
        normal_witness,
    }
}

pub fn is_regular<F: Field>(t: &TriangularSet<F>) -> bool {
    (1..t.len()).all(|j| !res_chain(&t.members()[j].initial(), &t.prefix(j).expect("j >= 1")).is_zero())
}

/// Saturation membership for regular sets: `P in sat(T)` iff `prem(P, T) = 0`.
pub fn sat_member_regular<F: Field>(p: &Polynomial<F>, t: &TriangularSet<F>) -> Result<bool> {
    if !is_regular(t) {
        return Err(Error::Precondition(
            "triangular set is not regular; decide saturation membership through a saturation basis".into(),
        ));
    }
    Ok(prem_chain(p, t).is_zero())
}
