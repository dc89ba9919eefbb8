//! Module traces built from a twisted-cyclic base form, and their checks.

use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::graded::{graded_hook_right, graded_modulus, symmetrised_g_integral_at, GradedHopf, GroupElem};
use crate::hopfcore::{Family, Functional, HopfSpec};
use crate::linalg::Mat;
use crate::rep::{
    intertwiner_failure, projective_covers, regular_rep, tensor_module, twist_module, DualityMaps, ModuleRep,
    ProjectiveCover,
};

mod checks;
mod hh0;
mod pullback;
mod retract;
mod space;

pub use checks::{
    check_cyclicity, check_duality_compat, check_left_partial_trace_property, check_nondegeneracy,
    check_partial_trace_property, gram_matrix,
};
pub use hh0::{check_hh0_round_trips, hh0, phi_hat, Hh0};
pub use pullback::PullbackTrace;
pub use retract::Retract;
pub use space::{graded_trace_space_dimension, trace_space, trace_space_dimension};

/// A module together with a decomposition of its identity through the
/// regular module of its piece.
#[derive(Clone, Debug)]
pub struct ProjModule {
    pub label: String,
    pub module: ModuleRep,
    pub retract: Retract,
}

impl ProjModule {
    pub fn from_cover(c: &ProjectiveCover) -> Self {
        ProjModule { label: format!("P_{}", c.index), module: c.module.clone(), retract: Retract::from_cover(c) }
    }

    pub fn regular(h: &dyn GradedHopf, x: &GroupElem) -> Result<Self> {
        let m = regular_rep(&*h.piece(x)?);
        Ok(ProjModule { label: "H".into(), retract: Retract::identity(m.dim()), module: m })
    }

    /// Any projective module, with a solved-for decomposition.
    pub fn generic(h: &dyn GradedHopf, label: impl Into<String>, m: ModuleRep) -> Result<Self> {
        Ok(ProjModule { label: label.into(), retract: Retract::generic(h, &m)?, module: m })
    }

    /// `P ⊗ V`, projective whenever `P` is.
    pub fn tensor(h: &dyn GradedHopf, p: &ProjModule, v: &ModuleRep, v_label: &str) -> Result<Self> {
        ProjModule::generic(h, format!("{}⊗{}", p.label, v_label), tensor_module(h, &p.module, v)?)
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

/// All built-in projective covers of a piece.
pub fn builtin_projectives(h: &dyn GradedHopf, x: &GroupElem) -> Result<Vec<ProjModule>> {
    Ok(projective_covers(&*h.piece(x)?)?.iter().map(ProjModule::from_cover).collect())
}

/// A family of linear maps `t_P: Hom(P, ΣP) → k`.
pub trait ModuleTrace: Send + Sync {
    fn trace(&self, p: &ProjModule, f: &Mat) -> Result<Cyclo>;
    /// `Σ(P)`; on morphisms `Σ` is the identity matrix.
    fn sigma(&self, p: &ModuleRep) -> Result<ModuleRep>;
}

#[derive(Clone, Debug)]
enum Forms {
    Canonical { scale: Cyclo },
    Explicit(Vec<(GroupElem, Functional)>),
}

/// Base forms `λ_x` with twist character `ν`; the extension to projective
/// modules is `t_P(f) = Σ λ_x((b_i f a_i)(1))`.
pub struct TraceFamily {
    h: Arc<dyn GradedHopf>,
    pub nu: Functional,
    pub pivot_exponent: Option<i64>,
    forms: Forms,
    cache: RwLock<Vec<(GroupElem, Functional, Arc<Mat>)>>,
}

impl TraceFamily {
    /// `λ_x = c·μ̂_x` with `ν` the modulus and `c` fixed by making the first
    /// nonzero value of `λ_1` equal to 1.
    pub fn canonical(h: Arc<dyn GradedHopf>) -> Result<Self> {
        let nu = graded_modulus(&*h)?;
        let l1 = symmetrised_g_integral_at(&*h, &GroupElem::unit())?;
        let lead = l1.coeffs.iter().find(|c| !c.is_zero()).ok_or(Error::Malformed("zero integral".into()))?;
        let scale = lead.inv()?;
        Ok(TraceFamily::build(h, nu, Forms::Canonical { scale }))
    }

    /// Left traces: the right-trace construction applied to `H^cop`.
    pub fn left_canonical(h: &HopfSpec) -> Result<Self> {
        TraceFamily::canonical(Arc::new(h.cop()?))
    }

    pub fn with_forms(h: Arc<dyn GradedHopf>, nu: Functional, forms: Vec<(GroupElem, Functional)>) -> Self {
        TraceFamily::build(h, nu, Forms::Explicit(forms))
    }

    fn build(h: Arc<dyn GradedHopf>, nu: Functional, forms: Forms) -> Self {
        let pivot_exponent = match h.piece(&GroupElem::unit()).ok().and_then(|p| p.family.clone()) {
            Some(Family::Borel { n_pivot, .. }) => Some(n_pivot),
            _ => None,
        };
        TraceFamily { h, nu, pivot_exponent, forms, cache: RwLock::new(Vec::new()) }
    }

    pub fn hopf(&self) -> &dyn GradedHopf {
        &*self.h
    }

    fn entry(&self, x: &GroupElem) -> Result<(Functional, Arc<Mat>)> {
        if let Some((_, l, m)) = self.cache.read().expect("cache poisoned").iter().find(|(g, _, _)| g == x) {
            return Ok((l.clone(), m.clone()));
        }
        let lambda = match &self.forms {
            Forms::Canonical { scale } => symmetrised_g_integral_at(&*self.h, x)?.scale(scale),
            Forms::Explicit(v) => v
                .iter()
                .find(|(g, _)| g == x)
                .map(|(_, l)| l.clone())
                .ok_or_else(|| Error::Grade(format!("no base form at grade {x}")))?,
        };
        let phi = Arc::new(graded_hook_right(&*self.h, &self.nu, x)?);
        self.cache.write().expect("cache poisoned").push((x.clone(), lambda.clone(), phi.clone()));
        Ok((lambda, phi))
    }

    /// `λ_x`.
    pub fn lambda(&self, x: &GroupElem) -> Result<Functional> {
        Ok(self.entry(x)?.0)
    }

    /// `R(ν)` on `H_x`.
    pub fn twist_matrix(&self, x: &GroupElem) -> Result<Arc<Mat>> {
        Ok(self.entry(x)?.1)
    }

    /// `t_P(f)` after checking that `f: P → ΣP` is an intertwiner.
    pub fn extend_trace(&self, p: &ProjModule, f: &Mat) -> Result<Cyclo> {
        let sp = self.sigma(&p.module)?;
        if let Some(b) = intertwiner_failure(&p.module, &sp, f) {
            return Err(Error::NotIntertwiner(format!("{} fails at generator {b}", p.label)));
        }
        self.trace(p, f)
    }
}

impl ModuleTrace for TraceFamily {
    fn trace(&self, p: &ProjModule, f: &Mat) -> Result<Cyclo> {
        let lambda = self.lambda(&p.module.grade)?;
        Ok(lambda.eval(&p.retract.class_of(p.module.alg.unit(), f)))
    }

    fn sigma(&self, p: &ModuleRep) -> Result<ModuleRep> {
        Ok(twist_module(p, &*self.twist_matrix(&p.grade)?))
    }
}

/// Right partial trace `(id_P ⊗ ẽv_V)(f ⊗ id_{V*})(id_P ⊗ coev_V)` of
/// `f: P⊗V → Σ(P⊗V)`.
pub fn partial_trace(v: &DualityMaps, f: &Mat) -> Result<Mat> {
    let dp = split(f, v.dim)?;
    let ip = Mat::identity(dp);
    Ok(ip.kron(&v.ev_tilde).matmul(&f.kron(&Mat::identity(v.dim))).matmul(&ip.kron(&v.coev)))
}

/// Left partial trace `(ev_V ⊗ id_P)(id_{V*} ⊗ f)(c̃oev_V ⊗ id_P)` of
/// `f: V⊗P → Σ(V⊗P)`.
pub fn left_partial_trace(v: &DualityMaps, f: &Mat) -> Result<Mat> {
    let dp = split(f, v.dim)?;
    let ip = Mat::identity(dp);
    Ok(v.ev.kron(&ip).matmul(&Mat::identity(v.dim).kron(f)).matmul(&v.coev_tilde.kron(&ip)))
}

fn split(f: &Mat, dv: usize) -> Result<usize> {
    if !f.is_square() || !f.rows().is_multiple_of(dv) {
        return Err(Error::Shape(format!("{}x{} map is not an endomorphism of P⊗V with dim V = {dv}", f.rows(), f.cols())));
    }
    Ok(f.rows() / dv)
}

/// The generator `v_0 ↦ v_{d−1}` of a one-dimensional `Hom(P, ΣP)`, scaled so
/// that this entry is 1; otherwise the first basis element.
pub fn standard_generator(homs: &[Mat]) -> Option<Mat> {
    let f = homs.first()?;
    let last = f.rows() - 1;
    let lead = f.get(last, 0);
    if homs.len() == 1 && !lead.is_zero() {
        Some(f.scale(&lead.inv().ok()?))
    } else {
        Some(f.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::root_of_unity;
    use crate::graded::build_borel;
    use crate::hopfcore::{build_cyclic_group_algebra, build_taft, left_integrals, taft_index};
    use crate::rep::{duality_maps, eps_module, hom_space, trivial_module};

    fn taft(r: usize) -> Arc<dyn GradedHopf> {
        Arc::new(build_taft(r))
    }

    #[test]
    fn taft_trace_values() {
        for r in [2usize, 3] {
            let h = taft(r);
            let t = TraceFamily::canonical(h.clone()).unwrap();
            let l1 = t.lambda(&GroupElem::unit()).unwrap();
            assert!(l1.at(taft_index(r, r - 1, 0)).is_one());
            for p in builtin_projectives(&*h, &GroupElem::unit()).unwrap() {
                let sp = t.sigma(&p.module).unwrap();
                let f = standard_generator(&hom_space(&p.module, &sp)).unwrap();
                assert_eq!(t.extend_trace(&p, &f).unwrap(), Cyclo::from_frac(1, r as i64));
                assert!(t.extend_trace(&p, &Mat::zeros(r, r)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn extend_rejects_non_intertwiners() {
        let h = taft(2);
        let t = TraceFamily::canonical(h.clone()).unwrap();
        let p = &builtin_projectives(&*h, &GroupElem::unit()).unwrap()[0];
        assert!(matches!(t.extend_trace(p, &Mat::identity(2)), Err(Error::NotIntertwiner(_))));
    }

    #[test]
    fn decomposition_independence() {
        let h = taft(3);
        let t = TraceFamily::canonical(h.clone()).unwrap();
        for p in builtin_projectives(&*h, &GroupElem::unit()).unwrap() {
            let sp = t.sigma(&p.module).unwrap();
            let other = ProjModule { retract: Retract::randomized(&*h, &p.module, 11).unwrap(), ..p.clone() };
            for f in hom_space(&p.module, &sp) {
                assert_eq!(t.trace(&p, &f).unwrap(), t.trace(&other, &f).unwrap());
            }
        }
    }

    #[test]
    fn regular_module_recovers_the_form() {
        let h = taft(3);
        let t = TraceFamily::canonical(h.clone()).unwrap();
        let one = GroupElem::unit();
        let reg = ProjModule::regular(&*h, &one).unwrap();
        let phi = t.twist_matrix(&one).unwrap();
        let alg = &reg.module.alg;
        let lambda = t.lambda(&one).unwrap();
        for i in 0..alg.dim() {
            let f = alg.right_mul_matrix(&alg.basis(i)).matmul(&phi);
            assert_eq!(t.extend_trace(&reg, &f).unwrap(), lambda.at(i).clone());
        }
    }

    #[test]
    fn borel_trace_values_scale_with_z() {
        for (r, n) in [(2usize, 0i64), (3, 1)] {
            let b: Arc<dyn GradedHopf> = Arc::new(build_borel(r, n));
            let t = TraceFamily::canonical(b.clone()).unwrap();
            assert_eq!(t.pivot_exponent, Some(n));
            for g in [
                GroupElem::unit(),
                GroupElem::new(root_of_unity(2 * r as u32, 1), Cyclo::zero()),
                GroupElem::new(Cyclo::from_int(2), Cyclo::one()),
            ] {
                let z = g.z(r);
                let expect = &z.pow(1 + n).unwrap() * &Cyclo::from_frac(1, r as i64);
                for p in builtin_projectives(&*b, &g).unwrap() {
                    let sp = t.sigma(&p.module).unwrap();
                    let f = standard_generator(&hom_space(&p.module, &sp)).unwrap();
                    assert_eq!(t.extend_trace(&p, &f).unwrap(), expect, "r={r} n={n} g={g}");
                }
            }
        }
    }

    #[test]
    fn partial_trace_over_trivial_module() {
        let h = taft(2);
        let t = TraceFamily::canonical(h.clone()).unwrap();
        let triv = trivial_module(&*h).unwrap();
        let maps = duality_maps(&*h, &triv).unwrap();
        let p = &builtin_projectives(&*h, &GroupElem::unit()).unwrap()[0];
        let sp = t.sigma(&p.module).unwrap();
        for f in hom_space(&p.module, &sp) {
            assert_eq!(partial_trace(&maps, &f).unwrap(), f);
        }
        // t_{V⊗εW}(f) = t_V(tr_{εW}(f))
        let w = eps_module(&*h, 2).unwrap();
        let wmaps = duality_maps(&*h, &w).unwrap();
        let pw = ProjModule::tensor(&*h, p, &w, "εW").unwrap();
        let spw = t.sigma(&pw.module).unwrap();
        let homs = hom_space(&pw.module, &spw);
        assert_eq!(homs.len(), 4);
        for f in homs {
            let lhs = t.trace(&pw, &f).unwrap();
            let rhs = t.trace(p, &partial_trace(&wmaps, &f).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn left_family_matches_left_integral() {
        let h = build_taft(2);
        let t = TraceFamily::left_canonical(&h).unwrap();
        let lambda = t.lambda(&GroupElem::unit()).unwrap();
        let ml = left_integrals(&h).unwrap().remove(0);
        let ginv = h.alg.inverse(h.pivot().unwrap()).unwrap();
        let oracle = ml.compose(&h.alg.left_mul_matrix(&ginv));
        let c = crate::linalg::proportionality(&lambda.coeffs, &oracle.coeffs).unwrap();
        assert!(!c.is_zero());
        let reg = ProjModule::regular(&h, &GroupElem::unit()).unwrap();
        assert!(t.trace(&reg, &Mat::zeros(4, 4)).unwrap().is_zero());
    }

    #[test]
    fn unimodular_group_algebra() {
        let h: Arc<dyn GradedHopf> = Arc::new(build_cyclic_group_algebra(3));
        let t = TraceFamily::canonical(h.clone()).unwrap();
        assert_eq!(t.nu, h.counit());
        let reg = ProjModule::regular(&*h, &GroupElem::unit()).unwrap();
        assert!(t.extend_trace(&reg, &Mat::identity(3)).unwrap().is_one());
    }
}
