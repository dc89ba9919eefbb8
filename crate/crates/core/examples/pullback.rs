//! Pulling back the trace of the cyclic group algebra `k[K]/(K³−1)` along
//! its inclusion into the Taft algebra with `r = 3`. The pivot `K` is
//! shared, and the pulled-back values are `tr(ρ(K) f) / 3`.

use hopftrace::exactnum::Cyclo;
use hopftrace::graded::GroupElem;
use hopftrace::hopfcore::{build_cyclic_group_algebra, build_taft, characters_diagonal, taft_index};
use hopftrace::linalg::Mat;
use hopftrace::rep::{hom_space, trivial_module, twist_by_character};
use hopftrace::trace::{builtin_projectives, check_cyclicity, check_partial_trace_property, PullbackTrace};

fn main() -> hopftrace::Result<()> {
    let r = 3;
    let h = build_taft(r);
    let a = build_cyclic_group_algebra(r);
    let a = a.with_pivot(a.alg.basis(1));
    let emb = Mat::from_fn(r * r, r, |i, j| if i == taft_index(r, 0, j) { Cyclo::one() } else { Cyclo::zero() });
    let pb = PullbackTrace::new(&h, a, emb)?;
    let mods = builtin_projectives(&h, &GroupElem::unit())?;
    let k = h.alg.basis(taft_index(r, 0, 1));
    for p in &mods {
        for (i, f) in hom_space(&p.module, &p.module).iter().enumerate() {
            let oracle = &p.module.act(&k).matmul(f).trace() * &Cyclo::from_frac(1, r as i64);
            println!("{} f{i}: t = {}  tr(Kf)/3 = {oracle}", p.label, pb.pullback_trace(&p.module, f)?);
        }
    }
    // one-dimensional modules are not projective over H, but restrict to
    // projectives over A
    let triv = trivial_module(&h)?;
    for (i, chi) in characters_diagonal(&h)?.iter().enumerate() {
        let m = twist_by_character(&h, &triv, chi)?;
        println!("χ_{i}: t(id) = {}", pb.pullback_trace(&m, &Mat::identity(1))?);
    }
    println!("cyclic: {}", check_cyclicity(&h, &pb, &mods)?.passed());
    let mut all = true;
    for p in &mods {
        for v in &mods {
            all &= check_partial_trace_property(&h, &pb, p, &v.module, &v.label)?.passed();
        }
    }
    println!("partial-trace property on all pairs: {all}");
    Ok(())
}
