//! Left module traces come from the co-opposite algebra. They satisfy the
//! left partial-trace property, which the right trace does not.

use std::sync::Arc;

use hopftrace::graded::GroupElem;
use hopftrace::hopfcore::build_taft;
use hopftrace::trace::{builtin_projectives, check_left_partial_trace_property, TraceFamily};

fn main() -> hopftrace::Result<()> {
    let h = build_taft(3);
    let left = TraceFamily::left_canonical(&h)?;
    let right = TraceFamily::canonical(Arc::new(h.clone()))?;
    println!("left base form: {:?}", left.lambda(&GroupElem::unit())?.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    let mods = builtin_projectives(&h, &GroupElem::unit())?;
    for p in &mods {
        for v in &mods {
            let l = check_left_partial_trace_property(&h, &left, &v.module, &v.label, p)?.passed();
            let r = check_left_partial_trace_property(&h, &right, &v.module, &v.label, p)?.passed();
            println!("{}⊗{}: left family {l}, right family {r}", v.label, p.label);
        }
    }
    Ok(())
}
