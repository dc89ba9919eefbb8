//! Traces on the Borel group-coalgebra. At grade `(w, x)` with `z = w^r`
//! the generator of `Hom(V_s, ΣV_s)` has trace `z^{1+n}/r`, where the pivot
//! is `z^n K`.

use std::sync::Arc;

use hopftrace::exactnum::{root_of_unity, Cyclo};
use hopftrace::graded::{build_borel, check_graded_axioms, GradedHopf, GroupElem};
use hopftrace::rep::hom_space;
use hopftrace::trace::{builtin_projectives, standard_generator, ModuleTrace, TraceFamily};

fn main() -> hopftrace::Result<()> {
    for (r, n) in [(2usize, 0i64), (2, 1), (3, 0), (3, 1)] {
        let fam = build_borel(r, n);
        let grades = vec![
            GroupElem::unit(),
            GroupElem::new(root_of_unity(2 * r as u32, 1), Cyclo::zero()),
            GroupElem::new(Cyclo::from_int(2), Cyclo::one()),
            GroupElem::new(root_of_unity(3, 1), Cyclo::one()),
        ];
        assert!(check_graded_axioms(&fam, &grades)?.passed());
        let h: Arc<dyn GradedHopf> = Arc::new(fam);
        let t = TraceFamily::canonical(h.clone())?;
        for g in &grades {
            let z = g.z(r);
            let expect = &z.pow(1 + n)? * &Cyclo::from_frac(1, r as i64);
            for p in builtin_projectives(&*h, g)? {
                let f = standard_generator(&hom_space(&p.module, &t.sigma(&p.module)?)).expect("nonzero Hom");
                let v = t.extend_trace(&p, &f)?;
                println!("r={r} n={n} {g} {}: {v}  (z^(1+n)/r = {expect})", p.label);
                assert_eq!(v, expect);
            }
        }
    }
    Ok(())
}
