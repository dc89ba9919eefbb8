use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::hopfcore::{modulus, HopfSpec};
use crate::linalg::Mat;
use crate::rep::{restrict, ModuleRep};

use super::{ModuleTrace, ProjModule, Retract, TraceFamily};

/// `t_M(f) = t^A_{Res M}(Res f)` for a unimodular Hopf subalgebra `A ⊂ H`
/// that contains the pivot, with `A`'s canonical trace.
pub struct PullbackTrace {
    sub: Arc<HopfSpec>,
    embedding: Mat,
    inner: TraceFamily,
}

impl PullbackTrace {
    /// `embedding` has the images of `A`'s basis as columns.
    pub fn new(h: &HopfSpec, sub: HopfSpec, embedding: Mat) -> Result<Self> {
        if embedding.rows() != h.dim() || embedding.cols() != sub.dim() {
            return Err(Error::Shape("embedding shape does not match the algebras".into()));
        }
        if embedding.apply(sub.pivot()?) != h.pivot()? {
            return Err(Error::Malformed("subalgebra pivot does not map to the pivot of H".into()));
        }
        if modulus(&sub)? != sub.counit {
            return Err(Error::NotUnimodular);
        }
        let sub = Arc::new(sub);
        let inner = TraceFamily::canonical(sub.clone())?;
        Ok(PullbackTrace { sub, embedding, inner })
    }

    pub fn restricted(&self, m: &ModuleRep) -> Result<ModuleRep> {
        restrict(m, self.sub.alg.clone(), &self.embedding)
    }

    /// The trace on `A`-modules used for the pull-back.
    pub fn inner(&self) -> &TraceFamily {
        &self.inner
    }
}

impl ModuleTrace for PullbackTrace {
    fn trace(&self, p: &ProjModule, f: &Mat) -> Result<Cyclo> {
        self.trace_restricted(&p.module, f)
    }

    fn sigma(&self, p: &ModuleRep) -> Result<ModuleRep> {
        Ok(p.clone())
    }
}

impl PullbackTrace {
    /// `t_M(f)` after checking `f` is an `H`-endomorphism of `M`.
    pub fn pullback_trace(&self, m: &ModuleRep, f: &Mat) -> Result<Cyclo> {
        if let Some(b) = crate::rep::intertwiner_failure(m, m, f) {
            return Err(Error::NotIntertwiner(format!("fails at generator {b}")));
        }
        self.trace_restricted(m, f)
    }

    fn trace_restricted(&self, m: &ModuleRep, f: &Mat) -> Result<Cyclo> {
        let res = self.restricted(m)?;
        let rp = ProjModule { label: "Res M".into(), retract: Retract::generic(&*self.sub, &res)?, module: res };
        self.inner.trace(&rp, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{GradedHopf, GroupElem};
    use crate::hopfcore::{build_cyclic_group_algebra, build_taft, taft_index};
    use crate::rep::{hom_space, regular_rep};
    use crate::trace::{builtin_projectives, check_cyclicity};

    fn setup(r: usize) -> (HopfSpec, PullbackTrace) {
        let h = build_taft(r);
        let a = build_cyclic_group_algebra(r);
        let a = a.with_pivot(a.alg.basis(1));
        let emb = Mat::from_fn(r * r, r, |i, j| if i == taft_index(r, 0, j) { Cyclo::one() } else { Cyclo::zero() });
        let pb = PullbackTrace::new(&h, a, emb).unwrap();
        (h, pb)
    }

    #[test]
    fn matches_character_oracle() {
        let r = 3;
        let (h, pb) = setup(r);
        let one = GroupElem::unit();
        let reg = regular_rep(&h.piece(&one).unwrap());
        let k = h.alg.basis(taft_index(r, 0, 1));
        let mut mods: Vec<ModuleRep> = builtin_projectives(&h, &one).unwrap().into_iter().map(|p| p.module).collect();
        mods.push(reg);
        for m in &mods {
            for f in hom_space(m, m) {
                let oracle = &m.act(&k).matmul(&f).trace() * &Cyclo::from_frac(1, r as i64);
                assert_eq!(pb.pullback_trace(m, &f).unwrap(), oracle);
            }
            assert!(pb.pullback_trace(m, &Mat::zeros(m.dim(), m.dim())).unwrap().is_zero());
        }
        let p0 = &mods[0];
        assert!(pb.pullback_trace(p0, &Mat::identity(p0.dim())).unwrap().is_zero());
    }

    #[test]
    fn pulled_back_family_is_cyclic() {
        let (h, pb) = setup(3);
        let mods = builtin_projectives(&h, &GroupElem::unit()).unwrap();
        assert!(check_cyclicity(&h, &pb, &mods).unwrap().passed());
    }

    #[test]
    fn requires_shared_pivot() {
        let r = 3;
        let h = build_taft(r);
        let a = build_cyclic_group_algebra(r);
        let emb = Mat::from_fn(r * r, r, |i, j| if i == taft_index(r, 0, j) { Cyclo::one() } else { Cyclo::zero() });
        assert!(PullbackTrace::new(&h, a, emb).is_err());
    }
}
