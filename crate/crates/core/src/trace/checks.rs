use crate::error::Result;
use crate::exactnum::Cyclo;
use crate::graded::GradedHopf;
use crate::linalg::Mat;
use crate::rep::{d_cap_right, d_cup_right, duality_maps, hom_space, intertwiner_failure, ModuleRep};
use crate::report::Report;

use super::{left_partial_trace, partial_trace, ModuleTrace, ProjModule, Retract};

/// `t_X(f∘g) = t_Y(Σ(g)∘f)` over Hom bases for every ordered pair of
/// modules sharing a grade, and `t_X(g) = t_{ΣX}(Σg)` for every `X`.
pub fn check_cyclicity(h: &dyn GradedHopf, t: &dyn ModuleTrace, mods: &[ProjModule]) -> Result<Report> {
    let mut rep = Report::new();
    let sigmas = mods.iter().map(|m| t.sigma(&m.module)).collect::<Result<Vec<_>>>()?;
    for (ix, x) in mods.iter().enumerate() {
        for (iy, y) in mods.iter().enumerate() {
            if x.module.grade != y.module.grade {
                continue;
            }
            let gs = hom_space(&x.module, &y.module);
            let fs = hom_space(&y.module, &sigmas[ix]);
            let mut fail = None;
            'outer: for (i, g) in gs.iter().enumerate() {
                for (j, f) in fs.iter().enumerate() {
                    if t.trace(x, &f.matmul(g))? != t.trace(y, &g.matmul(f))? {
                        fail = Some(vec![ix, iy, i, j]);
                        break 'outer;
                    }
                }
            }
            rep.push(format!("cyclicity[{},{}]", x.label, y.label), fail, format!("{}x{} basis pairs", gs.len(), fs.len()));
        }
        let sx = ProjModule { label: format!("Σ{}", x.label), retract: Retract::generic(h, &sigmas[ix])?, module: sigmas[ix].clone() };
        let ssx = t.sigma(&sigmas[ix])?;
        let mut fail = None;
        for (i, g) in hom_space(&x.module, &sigmas[ix]).iter().enumerate() {
            if intertwiner_failure(&sx.module, &ssx, g).is_some() || t.trace(x, g)? != t.trace(&sx, g)? {
                fail = Some(vec![ix, i]);
                break;
            }
        }
        rep.push(format!("sigma-invariance[{}]", x.label), fail, "");
    }
    Ok(rep)
}

/// `t_{P⊗V}(f) = t_P(tr_V(f))` for a basis of `Hom(P⊗V, Σ(P⊗V))`, plus the
/// check that each partial trace is an intertwiner `P → ΣP`.
pub fn check_partial_trace_property(
    h: &dyn GradedHopf,
    t: &dyn ModuleTrace,
    p: &ProjModule,
    v: &ModuleRep,
    v_label: &str,
) -> Result<Report> {
    let pv = ProjModule::tensor(h, p, v, v_label)?;
    let spv = t.sigma(&pv.module)?;
    let sp = t.sigma(&p.module)?;
    let maps = duality_maps(h, v)?;
    let homs = hom_space(&pv.module, &spv);
    let mut fail = None;
    let mut not_intertwiner = None;
    for (i, f) in homs.iter().enumerate() {
        let ptr = partial_trace(&maps, f)?;
        if not_intertwiner.is_none() && intertwiner_failure(&p.module, &sp, &ptr).is_some() {
            not_intertwiner = Some(vec![i]);
        }
        if fail.is_none() && t.trace(&pv, f)? != t.trace(p, &ptr)? {
            fail = Some(vec![i]);
        }
    }
    let mut rep = Report::new();
    let ctx = format!("{} basis maps", homs.len());
    rep.push(format!("partial-trace[{}]", pv.label), fail, ctx.clone());
    rep.push(format!("partial-trace-intertwiner[{}]", pv.label), not_intertwiner, ctx);
    Ok(rep)
}

/// Mirror image: `t_{V⊗P}(f) = t_P((ev_V ⊗ id)(id ⊗ f)(c̃oev_V ⊗ id))`.
pub fn check_left_partial_trace_property(
    h: &dyn GradedHopf,
    t: &dyn ModuleTrace,
    v: &ModuleRep,
    v_label: &str,
    p: &ProjModule,
) -> Result<Report> {
    let vp = ProjModule::generic(h, format!("{v_label}⊗{}", p.label), crate::rep::tensor_module(h, v, &p.module)?)?;
    let svp = t.sigma(&vp.module)?;
    let maps = duality_maps(h, v)?;
    let homs = hom_space(&vp.module, &svp);
    let mut fail = None;
    for (i, f) in homs.iter().enumerate() {
        if t.trace(&vp, f)? != t.trace(p, &left_partial_trace(&maps, f)?)? {
            fail = Some(vec![i]);
            break;
        }
    }
    let mut rep = Report::new();
    rep.push(format!("left-partial-trace[{}]", vp.label), fail, format!("{} basis maps", homs.len()));
    Ok(rep)
}

/// `G[i][j] = t_P(f_i ∘ g_j)` for bases `f_i` of `Hom(P′, ΣP)` and `g_j` of
/// `Hom(P, P′)`.
pub fn gram_matrix(t: &dyn ModuleTrace, p: &ProjModule, p2: &ModuleRep) -> Result<Mat> {
    let sp = t.sigma(&p.module)?;
    let fs = hom_space(p2, &sp);
    let gs = hom_space(&p.module, p2);
    let mut rows = Vec::with_capacity(fs.len());
    for f in &fs {
        rows.push(gs.iter().map(|g| t.trace(p, &f.matmul(g))).collect::<Result<Vec<Cyclo>>>()?);
    }
    Ok(if rows.is_empty() { Mat::zeros(0, gs.len()) } else { Mat::from_rows(rows) })
}

/// Both radicals of the pairing are zero.
pub fn check_nondegeneracy(t: &dyn ModuleTrace, p: &ProjModule, p2: &ProjModule) -> Result<Report> {
    let g = gram_matrix(t, p, &p2.module)?;
    let rank = if g.rows() == 0 || g.cols() == 0 { 0 } else { g.rank() };
    let ok = rank == g.rows() && rank == g.cols();
    let mut rep = Report::new();
    rep.record(
        format!("nondegenerate[{},{}]", p.label, p2.label),
        ok,
        format!("gram {}x{} of rank {rank}", g.rows(), g.cols()),
    );
    Ok(rep)
}

/// For bases `f` of `Hom(U⊗V, W)` and `k` of `Hom(W, Σ(U⊗V))`:
/// `t_{U⊗V}(k∘f) = t_U(d^∩(k) ∘ d_∪(f))`.
pub fn check_duality_compat(
    h: &dyn GradedHopf,
    t: &dyn ModuleTrace,
    u: &ProjModule,
    v: &ModuleRep,
    v_label: &str,
    w: &ModuleRep,
) -> Result<Report> {
    let uv = ProjModule::tensor(h, u, v, v_label)?;
    let suv = t.sigma(&uv.module)?;
    let maps = duality_maps(h, v)?;
    let fs = hom_space(&uv.module, w);
    let ks = hom_space(w, &suv);
    let mut fail = None;
    'outer: for (i, f) in fs.iter().enumerate() {
        let cup = d_cup_right(&maps, f)?;
        for (j, k) in ks.iter().enumerate() {
            let lhs = t.trace(&uv, &k.matmul(f))?;
            let rhs = t.trace(u, &d_cap_right(&maps, k)?.matmul(&cup))?;
            if lhs != rhs {
                fail = Some(vec![i, j]);
                break 'outer;
            }
        }
    }
    let mut rep = Report::new();
    rep.push(format!("duality-compat[{}]", uv.label), fail, format!("{}x{} basis pairs", fs.len(), ks.len()));
    Ok(rep)
}
