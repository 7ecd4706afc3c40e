//! Subcommand bodies, generic over the coefficient field.

use gbchar::decompose::{decompose_normal, verify_decomposition, DecomposeOptions};
use gbchar::groebner::{normal_form, reduced_gb};
use gbchar::triset::{classify_chain, prem_triset};
use gbchar::wchar::{
    analyze_irregularity, charpro_check, describe, irregularity_report, ritt_charset, wcharacteristic_set,
    RittResult, SampleConfig,
};
use gbchar::{Field, Polynomial};
use serde_json::{json, Value};

use crate::render;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Gb,
    Wchar,
    Classify,
    Ritt,
    Decompose { strong: bool },
    Verify,
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub certificates: bool,
    pub seed: u64,
    pub max_nodes: usize,
}

/// Rendered output plus whether every check the command ran succeeded.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

pub fn run<F: Field>(cmd: Command, gens: &[Polynomial<F>], s: &Settings) -> gbchar::Result<Output> {
    match cmd {
        Command::Gb => gb(gens, s),
        Command::Wchar => wchar(gens),
        Command::Classify => classify(gens, s),
        Command::Ritt => ritt(gens, s),
        Command::Decompose { strong } => decompose(gens, s, strong),
        Command::Verify => verify(gens, s),
    }
}

fn gb<F: Field>(gens: &[Polynomial<F>], s: &Settings) -> gbchar::Result<Output> {
    let basis = reduced_gb(gens)?;
    let mut text: String = basis.members().iter().map(|m| format!("{m}\n")).collect();
    let mut json = json!({ "basis": render::polys(basis.members()) });
    if s.certificates {
        let traces: Vec<_> = gens.iter().map(|g| normal_form(g, basis.members())).collect();
        for (g, t) in gens.iter().zip(&traces) {
            text.push_str(&format!("{g} -> cofactors {} remainder {}\n", render::list(&t.cofactors), t.normal_form));
        }
        json["generator_traces"] = Value::Array(traces.iter().map(render::trace).collect());
    }
    Ok(Output::ok(text, json))
}

fn wchar<F: Field>(gens: &[Polynomial<F>]) -> gbchar::Result<Output> {
    let basis = reduced_gb(gens)?;
    let w = wcharacteristic_set(&basis);
    let names = basis.order();
    let leading: Vec<_> = w.leading_variables().iter().map(|&v| names.name(v).to_string()).collect();
    let parameters: Vec<_> = w.parameters().iter().map(|&v| names.name(v).to_string()).collect();
    let violation = w.order_violation().map(|(p, y)| (names.name(p).to_string(), names.name(y).to_string()));
    let assumption = match &violation {
        None => "holds".to_string(),
        Some((p, y)) => format!("violated: parameter {p} above leading variable {y}"),
    };
    let text = format!(
        "basis {}\nC {}\nleading variables: {}\nparameters: {}\norder assumption: {assumption}\n",
        render::list(basis.members()),
        render::list(w.members()),
        leading.join(", "),
        parameters.join(", "),
    );
    let json = json!({
        "basis": render::polys(basis.members()),
        "wchar": render::polys(w.members()),
        "leading_variables": leading,
        "parameters": parameters,
        "order_assumption": violation.is_none(),
    });
    Ok(Output::ok(text, json))
}

fn classify<F: Field>(gens: &[Polynomial<F>], s: &Settings) -> gbchar::Result<Output> {
    let basis = reduced_gb(gens)?;
    let w = wcharacteristic_set(&basis);
    let summary = describe(&w);
    let mut text = format!("{summary}\n");
    let mut json = json!({ "summary": summary, "wchar": render::polys(w.members()) });
    if let Some(t) = w.triangular() {
        let cls = classify_chain(&t);
        json["classification"] = render::classification(&cls, s.certificates);
        if !cls.is_regular {
            let report = analyze_irregularity(&t)?;
            if s.certificates {
                text.push_str(&render::irregularity_text(&report));
            }
            json["irregularity"] = render::irregularity(&report, s.certificates);
        }
    }
    Ok(Output::ok(text, json))
}

fn ritt<F: Field>(gens: &[Polynomial<F>], s: &Settings) -> gbchar::Result<Output> {
    let basis = reduced_gb(gens)?;
    let result = ritt_charset(&basis)?;
    let mut text = format!("tag: {}\n", result.tag());
    let mut json = json!({ "tag": result.tag(), "basis": render::polys(basis.members()) });
    match &result {
        RittResult::Ascending(a) => {
            text.push_str(&format!("charset {}\n", render::list(a.members())));
            json["charset"] = render::polys(a.members());
        }
        RittResult::RegularStar(star) => {
            text.push_str(&format!("C* {}\n", render::list(star.charset.members())));
            json["charset"] = render::polys(star.charset.members());
            if s.certificates {
                json["construction"] = Value::Array(
                    star.certificates
                        .iter()
                        .map(|c| c.as_ref().map_or(Value::Null, render::prem_certificate))
                        .collect(),
                );
            }
        }
        RittResult::Abnormal(report) => {
            text.push_str(&render::irregularity_text(report));
            json["irregularity"] = render::irregularity(report, s.certificates);
        }
    }
    if s.certificates {
        if let Some(t) = result.charset().and_then(|a| a.as_triangular()) {
            let certs: Vec<_> = basis.members().iter().map(|g| prem_triset(g, t)).collect();
            for (g, c) in basis.members().iter().zip(&certs) {
                text.push_str(&format!("prem({g}) = {}\n", c.remainder));
            }
            json["member_remainders"] = Value::Array(certs.iter().map(render::prem_certificate).collect());
        }
    }
    Ok(Output::ok(text, json))
}

fn decompose<F: Field>(gens: &[Polynomial<F>], s: &Settings, strong: bool) -> gbchar::Result<Output> {
    let opts = DecomposeOptions { strong, max_nodes: s.max_nodes, fuel: None };
    let result = decompose_normal(gens, &opts)?;
    let mut text = render::decomposition_text(&result);
    let mut json = render::decomposition(&result);
    if s.certificates {
        let report = verify_decomposition(gens, &result)?;
        text.push_str(&format!("verification: {}\n", if report.passed() { "passed" } else { "failed" }));
        json["verification"] = render::verification(&report);
    }
    Ok(Output::ok(text, json))
}

fn verify<F: Field>(gens: &[Polynomial<F>], s: &Settings) -> gbchar::Result<Output> {
    let basis = reduced_gb(gens)?;
    let w = wcharacteristic_set(&basis);
    let mut text = String::new();
    let mut json = json!({});
    let mut ok = true;

    if w.triangular().is_some() {
        let config = SampleConfig { seed: s.seed, ..SampleConfig::default() };
        match charpro_check(&basis, &w, &config) {
            Ok(report) => {
                text.push_str(&format!("charpro: passed ({} samples)\n", report.samples.len()));
                json["charpro"] = json!({ "passed": true, "samples": report.samples.len() });
            }
            Err(e) => {
                ok = false;
                text.push_str(&format!("charpro: failed: {e}\n"));
                json["charpro"] = json!({ "passed": false, "detail": e.to_string() });
            }
        }
    } else {
        text.push_str("charpro: skipped (unit ideal)\n");
        json["charpro"] = Value::Null;
    }

    match w.triangular().filter(|t| !classify_chain(t).is_regular) {
        None => {
            text.push_str("irregularity: not applicable\n");
            json["irregularity"] = Value::Null;
        }
        Some(t) => {
            let checked = if w.order_assumption_holds() {
                irregularity_report(&w).map(|_| "passed".to_string())
            } else {
                analyze_irregularity(&t).and_then(|r| {
                    if r.all_verify() {
                        Ok("certificates re-expand (order assumption not met)".to_string())
                    } else {
                        Err(gbchar::Error::InternalConsistency("a relation certificate does not re-expand".into()))
                    }
                })
            };
            match checked {
                Ok(msg) => {
                    text.push_str(&format!("irregularity: {msg}\n"));
                    json["irregularity"] = json!({ "passed": true, "detail": msg });
                }
                Err(e) => {
                    ok = false;
                    text.push_str(&format!("irregularity: failed: {e}\n"));
                    json["irregularity"] = json!({ "passed": false, "detail": e.to_string() });
                }
            }
        }
    }

    let opts = DecomposeOptions { max_nodes: s.max_nodes, ..DecomposeOptions::default() };
    let result = decompose_normal(gens, &opts)?;
    let report = verify_decomposition(gens, &result)?;
    ok &= report.passed() && result.unstable.is_empty();
    text.push_str(&format!(
        "decomposition: {} ({} leaves; {} containment, {} cover, {} growth, {} normality checks)\n",
        if report.passed() { "passed" } else { "failed" },
        result.leaves().count(),
        report.containment_checks,
        report.cover_checks,
        report.growth_checks,
        report.normality_checks,
    ));
    for f in &report.failures {
        text.push_str(&format!("  {f}\n"));
    }
    for (id, msg) in &result.unstable {
        text.push_str(&format!("  unstable branch {id}: {msg}\n"));
    }
    json["decomposition"] = render::verification(&report);
    json["passed"] = json!(ok);
    Ok(Output { text, json, ok })
}
