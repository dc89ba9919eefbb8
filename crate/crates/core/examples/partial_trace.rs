//! Cyclicity and the right partial-trace property, checked over full Hom
//! bases for every pair of projective covers, plus `Γ ⊗ Γ` for the regular
//! module `Γ`.

use std::sync::Arc;

use hopftrace::graded::{GradedHopf, GroupElem};
use hopftrace::hopfcore::build_taft;
use hopftrace::report::Report;
use hopftrace::trace::{builtin_projectives, check_cyclicity, check_partial_trace_property, ProjModule, TraceFamily};

fn main() -> hopftrace::Result<()> {
    for r in [2usize, 3] {
        let h: Arc<dyn GradedHopf> = Arc::new(build_taft(r));
        let t = TraceFamily::canonical(h.clone())?;
        let mods = builtin_projectives(&*h, &GroupElem::unit())?;
        let mut rep = Report::new();
        rep.extend(check_cyclicity(&*h, &t, &mods)?);
        for p in &mods {
            for v in &mods {
                rep.extend(check_partial_trace_property(&*h, &t, p, &v.module, &v.label)?);
            }
        }
        if r == 2 {
            let gamma = ProjModule::regular(&*h, &GroupElem::unit())?;
            rep.extend(check_partial_trace_property(&*h, &t, &gamma, &gamma.module, "H")?);
        }
        for c in &rep.checks {
            println!("r={r} {:<40} {}  {}", c.name, if c.passed { "ok" } else { "FAIL" }, c.context);
        }
    }
    Ok(())
}
