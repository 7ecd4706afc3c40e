//! JSON and text rendering of library values.

use std::sync::Arc;

use gbchar::decompose::{DecompositionBranch, DecompositionResult, SplitRecord, VerificationReport};
use gbchar::groebner::ReductionTrace;
use gbchar::triset::{ChainClassification, PremCertificate, ResCertificate};
use gbchar::wchar::{Certificate, IrregularityReport, Relation};
use gbchar::{Field, PolyRing, Polynomial};
use serde_json::{json, Value};

/// `{display, terms}` with terms `[numerator, denominator, exponents]` in
/// descending plex order. Numerators and denominators are decimal strings.
pub fn poly<F: Field>(p: &Polynomial<F>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|t| {
            let (num, den) = t.coeff.to_ratio();
            json!([num.to_string(), den.to_string(), t.mono.exponents()])
        })
        .collect();
    json!({ "display": p.to_string(), "terms": terms })
}

pub fn polys<F: Field>(ps: &[Polynomial<F>]) -> Value {
    Value::Array(ps.iter().map(poly).collect())
}

pub fn list<F: Field>(ps: &[Polynomial<F>]) -> String {
    format!("[{}]", ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

pub fn order<F: Field>(ring: &Arc<PolyRing<F>>) -> String {
    ring.order().names().join(" < ")
}

pub fn prem_certificate<F: Field>(c: &PremCertificate<F>) -> Value {
    json!({ "powers": c.powers, "cofactors": polys(&c.cofactors), "remainder": poly(&c.remainder) })
}

pub fn res_certificate<F: Field>(c: &ResCertificate<F>) -> Value {
    json!({ "value": poly(&c.value), "cofactor": poly(&c.cofactor), "member_cofactors": polys(&c.member_cofactors) })
}

pub fn trace<F: Field>(t: &ReductionTrace<F>) -> Value {
    json!({ "cofactors": polys(&t.cofactors), "normal_form": poly(&t.normal_form) })
}

pub fn classification<F: Field>(c: &ChainClassification<F>, certificates: bool) -> Value {
    let mut v = json!({
        "is_ascending": c.is_ascending,
        "is_regular": c.is_regular,
        "is_normal": c.is_normal,
        "ascending_witness": c.ascending_witness.map(|(i, j)| json!({ "earlier": i, "later": j })),
        "normal_witness": c.normal_witness.map(|(j, i)| json!({ "member": j, "involves_leading_variable_of": i })),
        "regular_witness": c.regular_witness.as_ref().map(|w| json!({ "index": w.index, "initial": poly(&w.initial) })),
    });
    if certificates {
        if let Some(w) = &c.regular_witness {
            v["regular_witness"]["certificate"] = res_certificate(&w.certificate);
        }
    }
    v
}

pub fn relation<F: Field>(r: &Relation<F>, certificates: bool) -> Value {
    let mut v = json!({
        "label": r.label,
        "target": poly(&r.target),
        "chain": polys(&r.chain),
        "value": poly(r.value()),
        "holds": r.holds(),
        "alternative": r.alternative,
    });
    if certificates {
        v["certificate"] = match &r.certificate {
            Certificate::Prem(c) => json!({ "prem": prem_certificate(c) }),
            Certificate::Res(c) => json!({ "res": res_certificate(c) }),
            Certificate::Identity => json!("identity"),
        };
    }
    v
}

pub fn irregularity<F: Field>(r: &IrregularityReport<F>, certificates: bool) -> Value {
    json!({
        "k": r.k,
        "l": r.l,
        "case": r.case.label(),
        "initial": poly(&r.initial),
        "degree": r.degree,
        "tail": poly(&r.tail),
        "quotient": r.quotient().map(poly),
        "order_assumption": r.order_assumption,
        "irregularity": relation(&r.irregularity, certificates),
        "relations": r.relations.iter().map(|x| relation(x, certificates)).collect::<Vec<_>>(),
    })
}

pub fn irregularity_text<F: Field>(r: &IrregularityReport<F>) -> String {
    let mut out = format!("{}, l={}\nI_{} = {}\n", r.summary(), r.l, r.k + 1, r.initial);
    if let Some(q) = r.quotient() {
        out.push_str(&format!("Q = {q}\n"));
    }
    for rel in std::iter::once(&r.irregularity).chain(&r.relations) {
        let mark = if rel.holds() { "holds" } else { "fails" };
        out.push_str(&format!("{}: {mark}\n", rel.label));
    }
    out
}

pub fn branch<F: Field>(b: &DecompositionBranch<F>) -> Value {
    json!({
        "id": b.id,
        "parent": b.parent,
        "status": b.status.label(),
        "order": b.ring().order().names(),
        "reorders": b.reorders,
        "lineage": polys(&b.lineage),
        "basis": polys(b.basis.members()),
        "wchar": polys(b.wchar.members()),
    })
}

pub fn split<F: Field>(s: &SplitRecord<F>) -> Value {
    json!({
        "parent": s.parent,
        "step": s.step.label(),
        "children": s.children,
        "adjoined": s.adjoined.iter().map(|a| polys(a)).collect::<Vec<_>>(),
    })
}

pub fn decomposition<F: Field>(d: &DecompositionResult<F>) -> Value {
    json!({
        "branches": d.branches.iter().map(branch).collect::<Vec<_>>(),
        "splits": d.splits.iter().map(split).collect::<Vec<_>>(),
        "leaves": d.leaves().map(|b| b.id).collect::<Vec<_>>(),
        "unstable": d.unstable.iter().map(|(id, msg)| json!({ "id": id, "detail": msg })).collect::<Vec<_>>(),
    })
}

pub fn decomposition_text<F: Field>(d: &DecompositionResult<F>) -> String {
    let mut out = String::new();
    for b in &d.branches {
        let parent = b.parent.map_or_else(|| "-".to_string(), |p| p.to_string());
        out.push_str(&format!(
            "#{} parent {} {} [{}]\n  basis {}\n  C {}\n",
            b.id,
            parent,
            b.status.label(),
            order(b.ring()),
            list(b.basis.members()),
            list(b.wchar.members())
        ));
        if !b.lineage.is_empty() {
            out.push_str(&format!("  adjoined {}\n", list(&b.lineage)));
        }
    }
    out.push_str(&format!("leaves: {}\n", d.leaves().count()));
    out
}

pub fn verification(v: &VerificationReport) -> Value {
    json!({
        "passed": v.passed(),
        "containment_checks": v.containment_checks,
        "cover_checks": v.cover_checks,
        "growth_checks": v.growth_checks,
        "normality_checks": v.normality_checks,
        "strong_checks": v.strong_checks,
        "failures": v.failures.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}
