//! The twisted zeroth Hochschild homology `HH₀(H, R(α))` and the round trips
//! between it and classes of twisted endomorphisms of projectives.

use std::sync::Arc;

use hopftrace::graded::{GradedHopf, GroupElem};
use hopftrace::hopfcore::build_taft;
use hopftrace::trace::{builtin_projectives, check_hh0_round_trips, hh0, TraceFamily};

fn main() -> hopftrace::Result<()> {
    for r in [2usize, 3] {
        let h: Arc<dyn GradedHopf> = Arc::new(build_taft(r));
        let t = TraceFamily::canonical(h.clone())?;
        let one = GroupElem::unit();
        let phi = t.twist_matrix(&one)?;
        let piece = h.piece(&one)?;
        let q = hh0(&piece.alg, &phi)?;
        let basis: Vec<&str> = q.basis.iter().map(|&b| piece.alg.label(b)).collect();
        println!("r={r}: dim HH0 = {}, basis classes {basis:?}", q.dim);
        let mods = builtin_projectives(&*h, &one)?;
        for c in check_hh0_round_trips(&*h, &phi, &mods, 42)?.checks {
            println!("  {} {}", c.name, c.passed);
        }
    }
    Ok(())
}
