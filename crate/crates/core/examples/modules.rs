//! Projective covers, Hom spaces and twisting of modules over a Taft algebra.

use hopftrace::graded::{GradedHopf, GroupElem};
use hopftrace::hopfcore::{build_taft, hook_right, modulus};
use hopftrace::rep::{hom_space, is_intertwiner, projective_covers, regular_rep, twist_module};

fn main() -> hopftrace::Result<()> {
    let r = 3;
    let h = build_taft(r);
    let piece = h.piece(&GroupElem::unit())?;
    let covers = projective_covers(&piece)?;
    let reg = regular_rep(&piece);
    println!("dim End(H) = {}", hom_space(&reg, &reg).len());
    for c in &covers {
        let idem: Vec<String> = c.idempotent.iter().map(|x| x.to_string()).collect();
        println!("P_{}: dim {}, e = [{}]", c.index, c.module.dim(), idem.join(", "));
    }
    for s in &covers {
        let row: Vec<usize> = covers.iter().map(|l| hom_space(&s.module, &l.module).len()).collect();
        println!("dim Hom(P_{}, P_l) = {row:?}", s.index);
    }
    let phi = hook_right(&h, &modulus(&h)?);
    for c in &covers {
        let tw = twist_module(&c.module, &phi);
        let target = &covers[(c.index + r - 1) % r];
        let id = hopftrace::linalg::Mat::identity(r);
        println!("R(α)_* P_{} ≅ P_{} via the identity: {}", c.index, target.index, is_intertwiner(&tw, &target.module, &id));
    }
    Ok(())
}
