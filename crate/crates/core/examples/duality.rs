//! Evaluation and coevaluation maps, the duality isomorphisms
//! `d^∩` / `d_∪`, and the compatibility of the trace with them.

use std::sync::Arc;

use hopftrace::graded::{GradedHopf, GroupElem};
use hopftrace::hopfcore::build_taft;
use hopftrace::rep::{check_duality_maps, d_cap_right, d_cap_right_inv, duality_maps, hom_space, tensor_module};
use hopftrace::trace::{builtin_projectives, check_duality_compat, TraceFamily};

fn main() -> hopftrace::Result<()> {
    let h: Arc<dyn GradedHopf> = Arc::new(build_taft(2));
    let t = TraceFamily::canonical(h.clone())?;
    let mods = builtin_projectives(&*h, &GroupElem::unit())?;
    for v in &mods {
        let maps = duality_maps(&*h, &v.module)?;
        println!("{}: duality maps valid = {}", v.label, check_duality_maps(&*h, &v.module, &maps)?.passed());
    }
    let (u, v) = (&mods[0], &mods[1]);
    let maps = duality_maps(&*h, &v.module)?;
    let uv = tensor_module(&*h, &u.module, &v.module)?;
    for k in hom_space(&u.module, &uv) {
        let back = d_cap_right_inv(&maps, &d_cap_right(&maps, &k)?)?;
        assert_eq!(back, k);
    }
    println!("d^∩ is invertible on Hom(P_0, P_0⊗P_1)");
    for u in &mods {
        for v in &mods {
            let rep = check_duality_compat(&*h, &t, u, &v.module, &v.label, &u.module)?;
            println!("{:<30} {}", rep.checks[0].name, rep.passed());
        }
    }
    Ok(())
}
