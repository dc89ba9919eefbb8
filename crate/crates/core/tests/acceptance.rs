//! End-to-end acceptance criteria. Every comparison is exact equality of
//! canonical cyclotomic forms. Each criterion prints one PASS/FAIL line.

use std::sync::Arc;
use std::time::Instant;

use hopftrace::exactnum::{root_of_unity, Cyclo};
use hopftrace::graded::{build_borel, check_graded_radford, check_phi_psi, GradedHopf, GroupElem};
use hopftrace::hopfcore::{
    build_cyclic_group_algebra, build_taft, characters_diagonal, check_mu_ab, check_radford_s4, left_cointegral,
    modulus, right_integrals, taft_index, Functional,
};
use hopftrace::linalg::{proportionality, Mat};
use hopftrace::report::Report;
use hopftrace::rep::hom_space;
use hopftrace::trace::{
    builtin_projectives, check_cyclicity, check_duality_compat, check_hh0_round_trips, check_nondegeneracy,
    check_partial_trace_property, standard_generator, trace_space_dimension, ModuleTrace, ProjModule, PullbackTrace,
    TraceFamily,
};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ensure_report(rep: &Report, what: &str) -> Outcome {
    match rep.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{what}: {} failed at {:?} ({})", c.name, c.counterexample, c.context)),
    }
}

fn err(e: hopftrace::Error) -> String {
    e.to_string()
}

fn taft_arc(r: usize) -> Arc<dyn GradedHopf> {
    Arc::new(build_taft(r))
}

/// Right integral `ζ·δ_{E^{r-1}K}`, left cointegral `E^{r-1} Σ ζ^{-i} K^i`,
/// modulus `K ↦ ζ`, `E ↦ 0`, written out directly on the basis `E^iK^j`.
fn criterion_1() -> Outcome {
    for r in [2usize, 3, 5] {
        let h = build_taft(r);
        let zeta = root_of_unity(r as u32, 1);
        let d = r * r;
        let mut mu = vec![Cyclo::zero(); d];
        mu[taft_index(r, r - 1, 1)] = zeta.clone();
        let mut c = vec![Cyclo::zero(); d];
        for i in 0..r {
            c[taft_index(r, r - 1, i)] = root_of_unity(r as u32, -(i as i64));
        }
        let alpha: Vec<Cyclo> = (0..r)
            .flat_map(|i| (0..r).map(move |j| (i, j)))
            .map(|(i, j)| if i == 0 { root_of_unity(r as u32, j as i64) } else { Cyclo::zero() })
            .collect();

        let ints = right_integrals(&h).map_err(err)?;
        ensure(ints.len() == 1, || format!("r={r}: right integral space has dim {}", ints.len()))?;
        let k = proportionality(&ints[0].coeffs, &mu);
        ensure(k.is_some_and(|k| !k.is_zero()), || format!("r={r}: right integral not a multiple of the formula"))?;
        let k = proportionality(&left_cointegral(&h).map_err(err)?, &c);
        ensure(k.is_some_and(|k| !k.is_zero()), || format!("r={r}: left cointegral not a multiple of the formula"))?;
        ensure(modulus(&h).map_err(err)?.coeffs == alpha, || format!("r={r}: modulus differs"))?;
    }
    Ok(())
}

/// `t_{P_s}(R^s) = 1/r`, and the base form is `δ_{E^{r-1}}`.
fn criterion_2() -> Outcome {
    for r in [2usize, 3, 5] {
        let h = taft_arc(r);
        let t = TraceFamily::canonical(h.clone()).map_err(err)?;
        let mut hat = vec![Cyclo::zero(); r * r];
        hat[taft_index(r, r - 1, 0)] = Cyclo::one();
        ensure(t.lambda(&GroupElem::unit()).map_err(err)?.coeffs == hat, || format!("r={r}: base form differs"))?;
        let expect = Cyclo::from_frac(1, r as i64);
        for p in builtin_projectives(&*h, &GroupElem::unit()).map_err(err)? {
            let homs = hom_space(&p.module, &t.sigma(&p.module).map_err(err)?);
            ensure(homs.len() == 1, || format!("r={r} {}: dim Hom(P, ΣP) = {}", p.label, homs.len()))?;
            let f = standard_generator(&homs).expect("nonempty");
            let v = t.extend_trace(&p, &f).map_err(err)?;
            ensure(v == expect, || format!("r={r} {}: trace {v}", p.label))?;
        }
    }
    Ok(())
}

/// `t_{V_s}(R^s_{z,x}) = z^{1+n}/r` on grades mixing roots of unity and
/// other `w`, with `x ∈ {0, 1}`.
fn criterion_3() -> Outcome {
    for r in [2usize, 3] {
        for n in [0i64, 1] {
            let h: Arc<dyn GradedHopf> = Arc::new(build_borel(r, n));
            let t = TraceFamily::canonical(h.clone()).map_err(err)?;
            let grades = [
                GroupElem::unit(),
                GroupElem::new(root_of_unity(2 * r as u32, 1), Cyclo::zero()),
                GroupElem::new(root_of_unity(3, 1), Cyclo::one()),
                GroupElem::new(Cyclo::from_int(2), Cyclo::one()),
                GroupElem::new(Cyclo::from_frac(1, 3), Cyclo::zero()),
            ];
            for g in &grades {
                let z = g.w.pow(r as i64).map_err(|e| e.to_string())?;
                let expect = &z.pow(1 + n).map_err(|e| e.to_string())? * &Cyclo::from_frac(1, r as i64);
                let mods = builtin_projectives(&*h, g).map_err(err)?;
                ensure(mods.len() == r, || format!("{g}: {} projectives", mods.len()))?;
                for p in mods {
                    let homs = hom_space(&p.module, &t.sigma(&p.module).map_err(err)?);
                    ensure(homs.len() == 1, || format!("r={r} n={n} {g} {}: dim Hom = {}", p.label, homs.len()))?;
                    let f = standard_generator(&homs).expect("nonempty");
                    let v = t.extend_trace(&p, &f).map_err(err)?;
                    ensure(v == expect, || format!("r={r} n={n} {g} {}: {v} != {expect}", p.label))?;
                }
            }
        }
    }
    Ok(())
}

/// One-dimensional space for the modulus, zero for the other characters.
fn criterion_4() -> Outcome {
    for r in [2usize, 3, 5] {
        let h = build_taft(r);
        let alpha = modulus(&h).map_err(err)?;
        let chars = characters_diagonal(&h).map_err(err)?;
        ensure(chars.len() == r, || format!("r={r}: {} characters", chars.len()))?;
        for chi in &chars {
            let d = trace_space_dimension(&h, chi).map_err(err)?;
            let want = usize::from(*chi == alpha);
            ensure(d == want, || format!("r={r}: dimension {d} for {:?}", chi.coeffs))?;
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for r in [2usize, 3] {
        let h = taft_arc(r);
        let t = TraceFamily::canonical(h.clone()).map_err(err)?;
        let mods = builtin_projectives(&*h, &GroupElem::unit()).map_err(err)?;
        ensure_report(&check_cyclicity(&*h, &t, &mods).map_err(err)?, &format!("r={r}"))?;
        for p in &mods {
            for v in &mods {
                let rep = check_partial_trace_property(&*h, &t, p, &v.module, &v.label).map_err(err)?;
                ensure_report(&rep, &format!("r={r}"))?;
            }
        }
    }
    let h = taft_arc(2);
    let t = TraceFamily::canonical(h.clone()).map_err(err)?;
    let gamma = ProjModule::regular(&*h, &GroupElem::unit()).map_err(err)?;
    let rep = check_partial_trace_property(&*h, &t, &gamma, &gamma.module, "H").map_err(err)?;
    ensure_report(&rep, "Γ⊗Γ")?;
    ensure(rep.checks[0].context != "0 basis maps", || "Γ⊗Γ: empty Hom space".into())
}

fn criterion_6() -> Outcome {
    for r in [2usize, 3] {
        let h = build_taft(r);
        ensure_report(&check_radford_s4(&h).map_err(err)?, &format!("taft r={r}"))?;
        ensure_report(&check_mu_ab(&h).map_err(err)?, &format!("taft r={r}"))?;
    }
    let one = GroupElem::unit();
    let t2 = build_taft(2);
    ensure_report(&check_phi_psi(&t2, &one, &one).map_err(err)?, "taft r=2 φ/ψ")?;
    for (r, n) in [(2usize, 0i64), (3, 1)] {
        let b = build_borel(r, n);
        let grades = [
            one.clone(),
            GroupElem::new(root_of_unity(2 * r as u32, 1), Cyclo::zero()),
            GroupElem::new(Cyclo::from_int(2), Cyclo::one()),
        ];
        ensure_report(&check_graded_radford(&b, &grades).map_err(err)?, &format!("borel r={r}"))?;
        if r == 2 {
            for x in &grades {
                for y in &grades {
                    ensure_report(&check_phi_psi(&b, x, y).map_err(err)?, &format!("borel φ/ψ {x} {y}"))?;
                }
            }
        }
    }
    // duality compatibility agrees with the partial-trace outcome
    for r in [2usize, 3] {
        let h = taft_arc(r);
        let t = TraceFamily::canonical(h.clone()).map_err(err)?;
        let mods = builtin_projectives(&*h, &one).map_err(err)?;
        for u in &mods {
            for v in &mods {
                let dual = check_duality_compat(&*h, &t, u, &v.module, &v.label, &u.module).map_err(err)?;
                let part = check_partial_trace_property(&*h, &t, u, &v.module, &v.label).map_err(err)?;
                ensure(dual.passed() == part.passed(), || format!("r={r}: duality and partial trace disagree"))?;
                ensure_report(&dual, &format!("r={r}"))?;
            }
        }
    }
    let h = taft_arc(2);
    let t = TraceFamily::canonical(h.clone()).map_err(err)?;
    let phi = t.twist_matrix(&one).map_err(err)?;
    let mut mods = builtin_projectives(&*h, &one).map_err(err)?;
    mods.push(ProjModule::regular(&*h, &one).map_err(err)?);
    ensure_report(&check_hh0_round_trips(&*h, &phi, &mods, 17).map_err(err)?, "HH0")
}

/// Pull-back along `k[K]/(K³−1) ⊂ T_3` with the shared pivot `K`.
fn criterion_7() -> Outcome {
    let r = 3;
    let h = build_taft(r);
    let a = build_cyclic_group_algebra(r);
    let a = a.with_pivot(a.alg.basis(1));
    let emb = Mat::from_fn(r * r, r, |i, j| if i == taft_index(r, 0, j) { Cyclo::one() } else { Cyclo::zero() });
    let pb = PullbackTrace::new(&h, a, emb).map_err(err)?;
    let mods = builtin_projectives(&h, &GroupElem::unit()).map_err(err)?;
    ensure_report(&check_cyclicity(&h, &pb, &mods).map_err(err)?, "pull-back cyclicity")?;
    for p in &mods {
        for v in &mods {
            ensure_report(&check_partial_trace_property(&h, &pb, p, &v.module, &v.label).map_err(err)?, "pull-back")?;
        }
    }
    // values agree with the character oracle tr(ρ(K) f) / r
    let k = h.alg.basis(taft_index(r, 0, 1));
    for p in &mods {
        for v in &mods {
            let pv = ProjModule::tensor(&h, p, &v.module, &v.label).map_err(err)?;
            for f in hom_space(&pv.module, &pv.module) {
                let oracle = &pv.module.act(&k).matmul(&f).trace() * &Cyclo::from_frac(1, r as i64);
                ensure(pb.trace(&pv, &f).map_err(err)? == oracle, || format!("{}: oracle mismatch", pv.label))?;
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for r in [2usize, 3] {
        let h = taft_arc(r);
        let t = TraceFamily::canonical(h.clone()).map_err(err)?;
        let mut mods = builtin_projectives(&*h, &GroupElem::unit()).map_err(err)?;
        mods.push(ProjModule::regular(&*h, &GroupElem::unit()).map_err(err)?);
        for p in &mods {
            for q in &mods {
                ensure_report(&check_nondegeneracy(&t, p, q).map_err(err)?, &format!("r={r}"))?;
            }
        }
    }
    // the zero family is degenerate, so the check has teeth
    let h = taft_arc(2);
    let zero = TraceFamily::with_forms(h.clone(), modulus(&build_taft(2)).map_err(err)?, vec![(GroupElem::unit(), Functional::zero(4))]);
    let mods = builtin_projectives(&*h, &GroupElem::unit()).map_err(err)?;
    ensure(!check_nondegeneracy(&zero, &mods[0], &mods[0]).map_err(err)?.passed(), || "zero family passed".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("Taft integrals, cointegral and modulus", criterion_1),
        ("Taft trace values 1/r", criterion_2),
        ("Borel trace values z^(1+n)/r", criterion_3),
        ("uniqueness and vanishing of trace spaces", criterion_4),
        ("cyclicity and partial trace on projective pairs", criterion_5),
        ("structural identities", criterion_6),
        ("pull-back trace", criterion_7),
        ("non-degeneracy", criterion_8),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(()) => println!("criterion {} PASS  {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                println!("criterion {} FAIL  {name} ({secs:.2}s): {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
