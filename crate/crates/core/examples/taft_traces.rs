//! The canonical module trace on the projective covers `P_s` of a Taft
//! algebra. Each `Hom(P_s, ΣP_s)` is one-dimensional and its standard
//! generator has trace `1/r`.

use std::sync::Arc;

use hopftrace::graded::{GradedHopf, GroupElem};
use hopftrace::hopfcore::build_taft;
use hopftrace::rep::hom_space;
use hopftrace::trace::{builtin_projectives, standard_generator, ModuleTrace, TraceFamily};

fn main() -> hopftrace::Result<()> {
    for r in [2usize, 3, 5] {
        let h: Arc<dyn GradedHopf> = Arc::new(build_taft(r));
        let t = TraceFamily::canonical(h.clone())?;
        for p in builtin_projectives(&*h, &GroupElem::unit())? {
            let sp = t.sigma(&p.module)?;
            let homs = hom_space(&p.module, &sp);
            let f = standard_generator(&homs).expect("Hom(P, ΣP) is nonzero");
            println!("r={r}  {}  dim Hom = {}  t(R) = {}", p.label, homs.len(), t.extend_trace(&p, &f)?);
        }
    }
    Ok(())
}
