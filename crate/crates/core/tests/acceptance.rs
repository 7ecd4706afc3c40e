//! Acceptance gate: one line per criterion, nonzero exit if any fails.

mod common;

use std::cmp::Ordering;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{corpus, fixture, poly, polys, ring_of, to_fp};
use gbchar::decompose::{decompose_normal, enforce_order_assumption, verify_decomposition, DecomposeOptions};
use gbchar::groebner::{elimination_prefix, ideal_member, reduce, reduced_gb, s_polynomial};
use gbchar::polyring::pseudo_divide;
use gbchar::triset::{
    classify_chain, prem_chain, prem_triset, rank_compare_chains, res_triset, TriangularSet,
};
use gbchar::wchar::{irregularity_report, ritt_charset, wcharacteristic_set, IrregularCase, RittResult};
use gbchar::{Field, Polynomial};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn text<F: Field>(ps: &[Polynomial<F>]) -> String {
    format!("[{}]", ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn example_a() -> Check {
    let sys = fixture("a");
    let g = reduced_gb(&sys.generators).map_err(|e| e.to_string())?;
    let ring = ring_of(&sys.generators);
    ensure(g.members() == polys(&ring, &["x1*x2 - 1", "x3 - x2"]).as_slice(), format!("basis {g}"))?;
    let w = wcharacteristic_set(&g);
    let c = w.triangular().ok_or("empty W-characteristic set")?;
    ensure(classify_chain(&c).is_normal, "C is not normal")?;
    let star = match ritt_charset(&g).map_err(|e| e.to_string())? {
        RittResult::RegularStar(s) => s.charset,
        other => return Err(format!("ritt tag {}", other.tag())),
    };
    ensure(star.members() == polys(&ring, &["x1*x2 - 1", "x1*x3 - 1"]).as_slice(), format!("C* {}", text(star.members())))?;
    let rank = rank_compare_chains(star.members(), c.members()).map_err(|e| e.to_string())?;
    ensure(rank == Ordering::Equal, "C* and C differ in rank")?;
    Ok(format!("C* = {}", text(star.members())))
}

fn example_b() -> Check {
    let sys = fixture("b");
    let g = reduced_gb(&sys.generators).map_err(|e| e.to_string())?;
    let w = wcharacteristic_set(&g);
    let ring = ring_of(&sys.generators);
    ensure(w.members() == polys(&ring, &["x1^2", "(x2+x1)*x3 + x1"]).as_slice(), format!("C {}", text(w.members())))?;
    let cls = classify_chain(&w.triangular().unwrap());
    ensure(cls.is_regular && cls.is_ascending && !cls.is_normal, format!("{cls:?}"))?;
    match ritt_charset(&g).map_err(|e| e.to_string())? {
        RittResult::Ascending(a) => ensure(a.members() == w.members(), "charset differs from C")?,
        other => return Err(format!("ritt tag {}", other.tag())),
    }
    let settled = enforce_order_assumption(&sys.generators, None).map_err(|e| e.to_string())?;
    ensure(settled.reorders > 0, "no reorder happened")?;
    let t = settled.wchar.triangular().unwrap();
    let after = classify_chain(&t);
    Ok(format!(
        "reordered to {}: C = {}, normal={}, regular={}, ascending={}",
        settled.basis.order(),
        text(t.members()),
        after.is_normal,
        after.is_regular,
        after.is_ascending
    ))
}

fn example_c() -> Check {
    let sys = fixture("c");
    let g = reduced_gb(&sys.generators).map_err(|e| e.to_string())?;
    let w = wcharacteristic_set(&g);
    let cls = classify_chain(&w.triangular().unwrap());
    ensure(!cls.is_normal && !cls.is_regular, "expected abnormal and irregular")?;
    let rep = irregularity_report(&w).map_err(|e| e.to_string())?;
    ensure(rep.k == 1 && rep.case == IrregularCase::NotReduced, rep.summary())?;
    ensure(rep.relations.len() == 2 && rep.relations.iter().all(|r| r.holds() && r.verify()), "relations")?;
    let opts = DecomposeOptions { max_nodes: 100, ..Default::default() };
    let res = decompose_normal(&sys.generators, &opts).map_err(|e| e.to_string())?;
    let v = verify_decomposition(&sys.generators, &res).map_err(|e| e.to_string())?;
    ensure(v.passed(), format!("{:?}", v.failures))?;
    ensure(res.leaves().all(|l| classify_chain(&l.wchar.triangular().unwrap()).is_normal), "non-normal leaf")?;
    Ok(format!("{}; {} leaves, {} cover certificates", rep.summary(), res.leaves().count(), v.cover_checks))
}

fn example_d() -> Check {
    let sys = fixture("d");
    let ring = ring_of(&sys.generators);
    let g = reduced_gb(&sys.generators).map_err(|e| e.to_string())?;
    let expected = polys(&ring, &["x1^4", "x1^3*x2^3", "x2^4", "x1*(x2+x1)*x3 - x1^3"]);
    ensure(g.members() == expected.as_slice(), format!("basis {g}"))?;
    let bar = fixture("d-bar");
    let gb = reduced_gb(&bar.generators).map_err(|e| e.to_string())?;
    let rep = irregularity_report(&wcharacteristic_set(&gb)).map_err(|e| e.to_string())?;
    ensure(rep.case == IrregularCase::Reduced, "bar variant is not in the R-reduced case")?;
    let q = rep.quotient().ok_or("no quotient")?;
    ensure(q == &poly(&ring, "x1^2*x2^2"), format!("Q = {q}"))?;
    let c1 = TriangularSet::new(vec![poly(&ring, "x1^3")]).unwrap();
    let res = res_triset(&q.initial(), &c1);
    ensure(res.value.is_zero() && res.verify(&q.initial(), &c1), "res(ini(Q), [x1^3]) != 0")?;
    Ok(format!("Q = {q}, res(ini(Q), [x1^3]) = 0"))
}

fn example_e() -> Check {
    let sys = fixture("e");
    let ring = ring_of(&sys.generators);
    let g = reduced_gb(&sys.generators).map_err(|e| e.to_string())?;
    let expected = polys(&ring, &["x1*x2", "x3*x4 - x2^2", "x1*x4^2", "x2*x5 + x4^2"]);
    ensure(g.members() == expected.as_slice(), format!("basis {g}"))?;
    let c = wcharacteristic_set(&g).triangular().unwrap();
    let target = poly(&ring, "x1*x5 - x1");
    ensure(prem_triset(&target, &c).remainder.is_zero(), "prem(x1*x5 - x1, C) != 0")?;
    ensure(!ideal_member(&target, &g), "x1*x5 - x1 is in the ideal")?;

    let bar = fixture("e-bar");
    let gb = reduced_gb(&bar.generators).map_err(|e| e.to_string())?;
    let expected = polys(&ring, &["x1*x2", "x2*x4 - x2^2", "x1*x4^2", "x4^3 - x2^3", "x2*x5 + x4^2"]);
    ensure(gb.members() == expected.as_slice(), format!("bar basis {gb}"))?;
    let x1x4 = poly(&ring, "x1*x4^2");
    ensure(ideal_member(&x1x4, &gb), "x1*x4^2 not in the bar ideal")?;
    let c1 = TriangularSet::new(vec![poly(&ring, "x1*x2")]).unwrap();
    ensure(!prem_triset(&x1x4, &c1).remainder.is_zero(), "prem(x1*x4^2, [x1*x2]) = 0")?;
    Ok("bases match; prem/membership split as stated".into())
}

fn counter_fixture() -> Check {
    let sys = fixture("counter");
    let ring = ring_of(&sys.generators);
    let t = TriangularSet::new(sys.generators.clone()).unwrap();
    let (p, f) = (poly(&ring, "x3 - x2^2"), poly(&ring, "x2^2"));
    ensure(prem_chain(&p, &t).is_zero(), "prem(P, T) != 0")?;
    ensure(prem_chain(&f, &t).is_zero(), "prem(F, T) != 0")?;
    ensure(!prem_chain(&(&p + &f), &t).is_zero(), "prem(P + F, T) = 0")?;
    ensure(!prem_chain(&p.lc_in(2), &t).is_zero(), "prem(lc(P, x3), T) = 0")?;
    Ok(format!("prem(P + F, T) = {}", prem_chain(&(&p + &f), &t)))
}

fn properties_of<F: Field>(gens: &[Polynomial<F>]) -> Result<(), String> {
    let g = reduced_gb(gens).map_err(|e| e.to_string())?;
    for a in gens {
        ensure(reduce(a, g.members()).is_zero(), format!("generator {a} not reduced to 0"))?;
    }
    let mut shuffled: Vec<_> = gens.iter().rev().cloned().collect();
    let scale = F::from_i64(&gens[0].ring().field().clone(), 3);
    shuffled[0] = shuffled[0].scale(&scale);
    ensure(reduced_gb(&shuffled).unwrap().members() == g.members(), "not permutation invariant")?;
    ensure(reduced_gb(g.members()).unwrap() == g, "not idempotent")?;
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let s = s_polynomial(&g.members()[i], &g.members()[j]);
            ensure(reduce(&s, g.members()).is_zero(), "S-polynomial does not reduce to 0")?;
        }
    }
    for a in gens {
        for b in gens {
            if let Some(v) = b.leading_var() {
                let pd = pseudo_divide(a, b, v).unwrap();
                ensure(pd.verify(a, b), "pseudo-division identity")?;
            }
        }
    }
    if g.is_unit() {
        return Ok(());
    }
    let w = wcharacteristic_set(&g);
    let n = g.ring().nvars();
    for i in 0..=n {
        let lhs = wcharacteristic_set(&elimination_prefix(&g, i));
        let rhs: Vec<_> = w.members().iter().filter(|c| c.class() <= i).cloned().collect();
        ensure(lhs.members() == rhs.as_slice(), format!("prefix property fails at {i}"))?;
    }
    let c = w.triangular().unwrap();
    for m in g.members() {
        let cert = prem_triset(m, &c);
        ensure(cert.verify(m, &c) && cert.remainder.is_zero(), "prem certificate of a basis member")?;
    }
    let cls = classify_chain(&c);
    ensure(!cls.is_normal || cls.is_regular, "normal but not regular")?;
    for j in 1..c.len() {
        let init = c.members()[j].initial();
        let r = res_triset(&init, &c.prefix(j).unwrap());
        ensure(r.verify(&init, &c.prefix(j).unwrap()), "res certificate")?;
    }
    if let Some(a) = ritt_charset(&g).map_err(|e| e.to_string())?.charset() {
        if let Some(t) = a.as_triangular() {
            for m in g.members() {
                ensure(prem_chain(m, t).is_zero(), "basis member with nonzero prem against the charset")?;
            }
        }
        for m in a.members() {
            ensure(ideal_member(m, &g), "charset member outside the ideal")?;
        }
    }
    Ok(())
}

fn property_suite() -> Check {
    let systems = corpus(200, 7);
    for (i, gens) in systems.iter().enumerate() {
        properties_of(gens).map_err(|e| format!("system {i} over Q {}: {e}", text(gens)))?;
        properties_of(&to_fp(gens)).map_err(|e| format!("system {i} over F_32003 {}: {e}", text(gens)))?;
    }
    Ok(format!("{} systems over Q and F_32003", systems.len()))
}

fn decomposition_of<F: Field>(gens: &[Polynomial<F>], opts: &DecomposeOptions) -> Result<usize, String> {
    let first = decompose_normal(gens, opts).map_err(|e| e.to_string())?;
    let second = decompose_normal(gens, opts).map_err(|e| e.to_string())?;
    ensure(format!("{first:?}") == format!("{second:?}"), "nondeterministic decomposition")?;
    ensure(first.unstable.is_empty(), format!("unstable branches {:?}", first.unstable))?;
    let v = verify_decomposition(gens, &first).map_err(|e| e.to_string())?;
    ensure(v.passed(), format!("{:?}", v.failures))?;
    Ok(first.leaves().count())
}

fn decomposition_suite() -> Check {
    let systems = corpus(200, 7);
    let opts = DecomposeOptions { max_nodes: 200, ..Default::default() };
    let mut leaves = 0;
    for (i, gens) in systems.iter().enumerate() {
        leaves += decomposition_of(gens, &opts).map_err(|e| format!("system {i} over Q {}: {e}", text(gens)))?;
        leaves += decomposition_of(&to_fp(gens), &opts).map_err(|e| format!("system {i} over F_32003 {}: {e}", text(gens)))?;
    }
    Ok(format!("{} systems over Q and F_32003, {leaves} leaves", systems.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 example (a) end to end", example_a, Duration::from_secs(1)),
        ("2 example (b) classification and reorder", example_b, Duration::from_secs(1)),
        ("3 example (c) irregularity and decomposition", example_c, Duration::from_secs(5)),
        ("4 example (d) basis and bar-variant quotient", example_d, Duration::from_secs(1)),
        ("5 example (e) bases, prem and membership", example_e, Duration::from_secs(1)),
        ("6 counter-fixture for non-regular sets", counter_fixture, Duration::from_secs(1)),
        ("7 seeded property suite", property_suite, Duration::from_secs(600)),
        ("8 decomposition soundness on the random corpus", decomposition_suite, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({:.3} s): {detail}", elapsed.as_secs_f64()),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name} ({:.3} s): {detail}", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
