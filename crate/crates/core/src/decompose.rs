//! Splitting reduced bases until every branch has a normal
//! W-characteristic set, with optional strong regularization and a checker
//! for the resulting zero-set cover.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{radical_member, reduce, reduced_gb, saturation_gb, ReducedGroebnerBasis};
use crate::polyring::{Field, PolyRing, Polynomial};
use crate::triset::{classify_chain, prem_chain, TriangularSet};
use crate::wchar::{analyze_irregularity, irregularity_report, wcharacteristic_set, IrregularCase, IrregularityReport, WCharacteristicSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchStatus {
    Pending,
    /// Split into children listed in a [`SplitRecord`].
    Split,
    NormalLeaf,
    StrongLeaf,
    Unit,
    /// The variable order did not settle within the fuel bound.
    OrderUnstable,
}

impl BranchStatus {
    pub fn is_leaf(self) -> bool {
        matches!(self, BranchStatus::NormalLeaf | BranchStatus::StrongLeaf)
    }

    pub fn label(self) -> &'static str {
        match self {
            BranchStatus::Pending => "pending",
            BranchStatus::Split => "split",
            BranchStatus::NormalLeaf => "normal_leaf",
            BranchStatus::StrongLeaf => "strong_leaf",
            BranchStatus::Unit => "unit",
            BranchStatus::OrderUnstable => "order_unstable",
        }
    }
}

impl fmt::Display for BranchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionBranch<F: Field> {
    pub id: usize,
    pub parent: Option<usize>,
    /// Generators in the branch ring.
    pub generators: Vec<Polynomial<F>>,
    pub basis: ReducedGroebnerBasis<F>,
    pub wchar: WCharacteristicSet<F>,
    /// Polynomials adjoined on the way from the root, outermost first.
    pub lineage: Vec<Polynomial<F>>,
    pub status: BranchStatus,
    /// Number of variable reorders applied when settling the branch.
    pub reorders: usize,
}

impl<F: Field> DecompositionBranch<F> {
    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        self.basis.ring()
    }
}

/// Which splitting rule produced a split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitStep {
    /// `I_1, ..., I_l, I_{k+1}`.
    Initials,
    /// `I_1, ..., I_{l-1}, ini(I_{k+1})`.
    SubInitial,
    /// `I_1, ..., I_l, prem(Q, [C_1..C_{l-1}]), I_{k+1}`.
    Quotient,
    /// `sat(C)` and `G ∪ {I_1 ... I_r}`.
    Strong,
}

impl SplitStep {
    pub fn label(self) -> &'static str {
        match self {
            SplitStep::Initials => "initials",
            SplitStep::SubInitial => "sub_initial",
            SplitStep::Quotient => "quotient",
            SplitStep::Strong => "strong",
        }
    }
}

/// A split of node `parent` into children, child `i` being the parent basis
/// together with `adjoined[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitRecord<F: Field> {
    pub parent: usize,
    pub step: SplitStep,
    pub children: Vec<usize>,
    pub adjoined: Vec<Vec<Polynomial<F>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposeOptions {
    pub strong: bool,
    pub max_nodes: usize,
    /// Reorder passes per branch; `None` means `2n`.
    pub fuel: Option<usize>,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions { strong: false, max_nodes: 1000, fuel: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult<F: Field> {
    /// Input ring.
    pub ring: Arc<PolyRing<F>>,
    /// Every node, in creation (breadth-first) order.
    pub branches: Vec<DecompositionBranch<F>>,
    pub splits: Vec<SplitRecord<F>>,
    /// Diagnostics for branches whose order did not settle.
    pub unstable: Vec<(usize, String)>,
}

impl<F: Field> DecompositionResult<F> {
    pub fn leaves(&self) -> impl Iterator<Item = &DecompositionBranch<F>> {
        self.branches.iter().filter(|b| b.status.is_leaf())
    }

    pub fn branch(&self, id: usize) -> Option<&DecompositionBranch<F>> {
        self.branches.iter().find(|b| b.id == id)
    }

    pub fn unit_branches(&self) -> impl Iterator<Item = &DecompositionBranch<F>> {
        self.branches.iter().filter(|b| b.status == BranchStatus::Unit)
    }
}

/// A branch whose W-characteristic set satisfies the order assumption.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settled<F: Field> {
    pub generators: Vec<Polynomial<F>>,
    pub basis: ReducedGroebnerBasis<F>,
    pub wchar: WCharacteristicSet<F>,
    pub reorders: usize,
}

/// New order: parameters first, then leading variables, each group keeping
/// its relative order. `perm[j]` is the old index of the new `j`-th variable.
fn assumption_order<F: Field>(w: &WCharacteristicSet<F>) -> Vec<usize> {
    let mut perm = w.parameters();
    perm.extend(w.leading_variables());
    perm
}

/// Reorders variables until the leading variables of the W-characteristic
/// set outrank every parameter, recomputing the basis after each reorder.
pub fn enforce_order_assumption<F: Field>(gens: &[Polynomial<F>], fuel: Option<usize>) -> Result<Settled<F>> {
    let ring = gens.first().ok_or(Error::EmptyInput)?.ring().clone();
    let fuel = fuel.unwrap_or(2 * ring.nvars());
    let mut gens = gens.to_vec();
    let mut ring = ring;
    for pass in 0..=fuel {
        let basis = reduced_gb(&gens)?;
        let wchar = wcharacteristic_set(&basis);
        if wchar.is_unit() || wchar.order_violation().is_none() {
            return Ok(Settled { generators: gens, basis, wchar, reorders: pass });
        }
        if pass == fuel {
            break;
        }
        let order = ring.order().permuted(&assumption_order(&wchar))?;
        ring = ring.with_order(order);
        gens = gens.iter().map(|g| g.embed_into(&ring)).collect::<Result<_>>()?;
    }
    Err(Error::OrderUnstable { passes: fuel })
}

/// Polynomials to adjoin, one per child, for an abnormal branch.
pub fn split_branch<F: Field>(
    basis: &ReducedGroebnerBasis<F>,
    chain: &TriangularSet<F>,
    report: &IrregularityReport<F>,
) -> Result<(SplitStep, Vec<Polynomial<F>>)> {
    let c = chain.members();
    let (k, l) = (report.k, report.l);
    let initials = |upto: usize| -> Vec<Polynomial<F>> {
        c[..upto].iter().map(Polynomial::initial).filter(|i| !i.is_constant()).collect()
    };
    let (step, mut adjoined) = match report.case {
        IrregularCase::NotReduced => {
            let mut v = initials(l);
            v.push(c[k].initial());
            (SplitStep::Initials, v)
        }
        IrregularCase::Reduced => {
            let q = report.quotient().ok_or_else(|| Error::InternalConsistency("missing pseudo-quotient".into()))?;
            let prefix = chain.prefix(l - 1);
            let reduce_prefix = |p: &Polynomial<F>| prefix.as_ref().map_or_else(|| p.clone(), |t| prem_chain(p, t));
            if reduce_prefix(&q.initial()).is_zero() {
                let mut v = initials(l - 1);
                v.push(report.initial.initial());
                (SplitStep::SubInitial, v)
            } else {
                let mut v = initials(l);
                v.push(reduce_prefix(q));
                v.push(c[k].initial());
                (SplitStep::Quotient, v)
            }
        }
    };
    let mut seen = Vec::new();
    adjoined.retain(|p| {
        let fresh = !seen.contains(p);
        seen.push(p.clone());
        fresh
    });
    for p in &adjoined {
        if p.is_constant() {
            return Err(Error::InternalConsistency(format!("constant split polynomial {p}")));
        }
        if &reduce(p, basis.members()) != p {
            return Err(Error::InternalConsistency(format!("split polynomial {p} is not B-reduced")));
        }
    }
    Ok((step, adjoined))
}

/// Outcome of [`strong_regularize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrongOutcome<F: Field> {
    /// `sat(C) = <G>`.
    Strong,
    /// `sat(C)` is larger: split into its basis and `G ∪ {F}`.
    Split { saturation: ReducedGroebnerBasis<F>, initial_product: Polynomial<F> },
}

pub fn strong_regularize<F: Field>(basis: &ReducedGroebnerBasis<F>, chain: &TriangularSet<F>) -> Result<StrongOutcome<F>> {
    let f = chain.initial_product();
    let sat = saturation_gb(chain.members(), &f)?;
    if sat.members() == basis.members() {
        Ok(StrongOutcome::Strong)
    } else {
        Ok(StrongOutcome::Split { saturation: sat, initial_product: f })
    }
}

/// Branch id, parent id, generators, lineage.
type Queued<F> = (usize, Option<usize>, Vec<Polynomial<F>>, Vec<Polynomial<F>>);

struct Engine<F: Field> {
    options: DecomposeOptions,
    branches: Vec<DecompositionBranch<F>>,
    splits: Vec<SplitRecord<F>>,
    unstable: Vec<(usize, String)>,
    queue: VecDeque<Queued<F>>,
    next_id: usize,
}

impl<F: Field> Engine<F> {
    fn enqueue(&mut self, parent: Option<usize>, gens: Vec<Polynomial<F>>, lineage: Vec<Polynomial<F>>) -> Result<usize> {
        if self.next_id >= self.options.max_nodes {
            return Err(Error::NodeBudget(self.options.max_nodes));
        }
        let id = self.next_id;
        self.next_id += 1;
        self.queue.push_back((id, parent, gens, lineage));
        Ok(id)
    }

    fn run(&mut self) -> Result<()> {
        while let Some((id, parent, gens, lineage)) = self.queue.pop_front() {
            let settled = match enforce_order_assumption(&gens, self.options.fuel) {
                Ok(s) => s,
                Err(Error::OrderUnstable { passes }) => {
                    let basis = reduced_gb(&gens)?;
                    let wchar = wcharacteristic_set(&basis);
                    self.unstable.push((id, format!("no stable order after {passes} passes; W-characteristic set {:?}", wchar.members().iter().map(ToString::to_string).collect::<Vec<_>>())));
                    self.branches.push(DecompositionBranch {
                        id,
                        parent,
                        generators: gens,
                        basis,
                        wchar,
                        lineage,
                        status: BranchStatus::OrderUnstable,
                        reorders: passes,
                    });
                    continue;
                }
                Err(e) => return Err(e),
            };
            let Settled { generators, basis, wchar, reorders } = settled;
            let mut branch = DecompositionBranch {
                id,
                parent,
                generators,
                basis,
                wchar,
                lineage,
                status: BranchStatus::Pending,
                reorders,
            };
            match branch.wchar.triangular() {
                None => branch.status = BranchStatus::Unit,
                Some(t) => {
                    let cls = classify_chain(&t);
                    if cls.is_normal {
                        branch.status = BranchStatus::NormalLeaf;
                        if self.options.strong {
                            if let StrongOutcome::Split { saturation, initial_product } = strong_regularize(&branch.basis, &t)? {
                                branch.status = BranchStatus::Split;
                                let mut plain = branch.basis.members().to_vec();
                                plain.push(initial_product.clone());
                                let adjoined = vec![saturation.members().to_vec(), vec![initial_product.clone()]];
                                let mut l1 = branch.lineage.clone();
                                l1.extend(saturation.members().iter().cloned());
                                let mut l2 = branch.lineage.clone();
                                l2.push(initial_product);
                                let a = self.enqueue(Some(id), saturation.members().to_vec(), l1)?;
                                let b = self.enqueue(Some(id), plain, l2)?;
                                self.splits.push(SplitRecord { parent: id, step: SplitStep::Strong, children: vec![a, b], adjoined });
                            } else {
                                branch.status = BranchStatus::StrongLeaf;
                            }
                        }
                    } else {
                        let report = irregularity_report(&branch.wchar)?;
                        let (step, polys) = split_branch(&branch.basis, &t, &report)?;
                        branch.status = BranchStatus::Split;
                        let mut children = Vec::with_capacity(polys.len());
                        for p in &polys {
                            let mut gens = branch.basis.members().to_vec();
                            gens.push(p.clone());
                            let mut lineage = branch.lineage.clone();
                            lineage.push(p.clone());
                            children.push(self.enqueue(Some(id), gens, lineage)?);
                        }
                        let adjoined = polys.into_iter().map(|p| vec![p]).collect();
                        self.splits.push(SplitRecord { parent: id, step, children, adjoined });
                    }
                }
            }
            self.branches.push(branch);
        }
        Ok(())
    }
}

/// Splits the input until every branch has a normal W-characteristic set.
pub fn decompose_normal<F: Field>(gens: &[Polynomial<F>], options: &DecomposeOptions) -> Result<DecompositionResult<F>> {
    let ring = gens.first().ok_or(Error::EmptyInput)?.ring().clone();
    if gens.iter().all(Polynomial::is_zero) {
        return Err(Error::ZeroIdeal);
    }
    let nonzero: Vec<_> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut engine = Engine {
        options: options.clone(),
        branches: Vec::new(),
        splits: Vec::new(),
        unstable: Vec::new(),
        queue: VecDeque::new(),
        next_id: 0,
    };
    engine.enqueue(None, nonzero, Vec::new())?;
    engine.run()?;
    Ok(DecompositionResult { ring, branches: engine.branches, splits: engine.splits, unstable: engine.unstable })
}

/// One failed check, naming the node it concerns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub check: &'static str,
    pub node: usize,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at node {}: {}", self.check, self.node, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub containment_checks: usize,
    pub cover_checks: usize,
    pub growth_checks: usize,
    pub normality_checks: usize,
    pub strong_checks: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn in_ring<F: Field>(polys: &[Polynomial<F>], ring: &Arc<PolyRing<F>>) -> Result<Vec<Polynomial<F>>> {
    polys.iter().map(|p| p.embed_into(ring)).collect()
}

/// All choices of one polynomial from each set, multiplied together.
fn choice_products<F: Field>(sets: &[Vec<Polynomial<F>>], ring: &Arc<PolyRing<F>>) -> Vec<Polynomial<F>> {
    let mut acc = vec![Polynomial::one(ring)];
    for set in sets {
        acc = acc.iter().flat_map(|a| set.iter().map(move |p| a * p)).collect();
    }
    acc
}

/// Checks containment, zero-set cover, strict growth, leaf normality and,
/// for strong leaves, `sat(C) = <G>`.
pub fn verify_decomposition<F: Field>(gens: &[Polynomial<F>], result: &DecompositionResult<F>) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let fail = |report: &mut VerificationReport, check, node, detail: String| {
        report.failures.push(Failure { check, node, detail });
    };

    for b in &result.branches {
        match b.status {
            BranchStatus::NormalLeaf | BranchStatus::StrongLeaf => {
                let ring = b.ring();
                for g in in_ring(gens, ring)? {
                    report.containment_checks += 1;
                    if !reduce(&g, b.basis.members()).is_zero() {
                        fail(&mut report, "containment", b.id, format!("{g} does not reduce to 0"));
                    }
                }
                report.normality_checks += 1;
                match b.wchar.triangular() {
                    Some(t) if classify_chain(&t).is_normal => {}
                    _ => fail(&mut report, "normality", b.id, "W-characteristic set is not normal".into()),
                }
                if b.status == BranchStatus::StrongLeaf {
                    report.strong_checks += 1;
                    let t = b.wchar.triangular().expect("normal leaf");
                    let sat = saturation_gb(t.members(), &t.initial_product())?;
                    if sat.members() != b.basis.members() {
                        fail(&mut report, "strong", b.id, "basis of sat(C) differs from the branch basis".into());
                    }
                }
            }
            BranchStatus::Unit => {
                if !b.basis.is_unit() {
                    fail(&mut report, "unit", b.id, "branch marked unit has a proper basis".into());
                }
            }
            BranchStatus::Split => {
                if !result.splits.iter().any(|s| s.parent == b.id) {
                    fail(&mut report, "closure", b.id, "split node without a split record".into());
                }
            }
            BranchStatus::Pending => fail(&mut report, "closure", b.id, "branch left pending".into()),
            BranchStatus::OrderUnstable => fail(&mut report, "closure", b.id, "variable order did not settle".into()),
        }
    }
    if result.branch(0).is_none() {
        fail(&mut report, "closure", 0, "root branch missing".into());
    }

    for s in &result.splits {
        let Some(parent) = result.branch(s.parent) else {
            fail(&mut report, "closure", s.parent, "split parent missing".into());
            continue;
        };
        let ring = parent.ring();
        for &c in &s.children {
            if result.branch(c).is_none() {
                fail(&mut report, "cover", c, format!("missing branch, child of node {}", s.parent));
            }
        }
        for product in choice_products(&s.adjoined, ring) {
            report.cover_checks += 1;
            if !radical_member(&product, parent.basis.members())? {
                fail(&mut report, "cover", s.parent, format!("{product} is not in the radical of the parent ideal"));
            }
        }
        for (&c, adj) in s.children.iter().zip(&s.adjoined) {
            let Some(child) = result.branch(c) else { continue };
            report.growth_checks += 1;
            let cring = child.ring();
            let parent_members = in_ring(parent.basis.members(), cring)?;
            if parent_members.iter().any(|g| !reduce(g, child.basis.members()).is_zero()) {
                fail(&mut report, "growth", c, "child ideal does not contain the parent ideal".into());
            }
            if adj.iter().all(|p| reduce(p, parent.basis.members()).is_zero()) {
                fail(&mut report, "growth", c, "adjoined polynomials already lie in the parent ideal".into());
            }
        }
    }
    Ok(report)
}

/// Irregularity report for a branch without the order check, for display.
pub fn branch_report<F: Field>(branch: &DecompositionBranch<F>) -> Option<IrregularityReport<F>> {
    analyze_irregularity(&branch.wchar.triangular()?).ok()
}
