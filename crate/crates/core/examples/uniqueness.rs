//! Dimension of the space of twisted-cyclic base forms for each diagonal
//! character: one for the modulus, zero for every other character.

use hopftrace::hopfcore::{build_taft, characters_diagonal, modulus};
use hopftrace::trace::trace_space_dimension;

fn main() -> hopftrace::Result<()> {
    for r in [2usize, 3, 5] {
        let h = build_taft(r);
        let alpha = modulus(&h)?;
        for (k, chi) in characters_diagonal(&h)?.iter().enumerate() {
            let d = trace_space_dimension(&h, chi)?;
            let tag = if *chi == alpha { "modulus" } else { "" };
            println!("r={r} χ_{k}: dimension {d} {tag}");
        }
    }
    Ok(())
}
