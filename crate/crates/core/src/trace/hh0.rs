use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::graded::GradedHopf;
use crate::hopfcore::AlgebraSpec;
use crate::linalg::Mat;
use crate::report::Report;
use crate::rep::hom_space;

use super::{ProjModule, Retract};

/// `HH₀(A, φ) = A / span{ab − φ(b)a}`.
#[derive(Clone, Debug)]
pub struct Hh0 {
    pub dim: usize,
    /// Basis indices of `A` whose classes form a basis of the quotient.
    pub basis: Vec<usize>,
    /// `dim × dim A`, coordinates of the class of each basis element.
    pub projection: Mat,
    /// Reduced relation rows.
    pub relations: Mat,
}

impl Hh0 {
    pub fn class(&self, a: &[Cyclo]) -> Vec<Cyclo> {
        self.projection.apply(a)
    }
}

fn check_automorphism(alg: &AlgebraSpec, phi: &Mat) -> Result<()> {
    let d = alg.dim();
    if phi.rows() != d || phi.cols() != d || phi.inverse().is_none() {
        return Err(Error::NotAutomorphism);
    }
    for i in 0..d {
        for j in 0..d {
            let lhs = phi.apply(&alg.mul(&alg.basis(i), &alg.basis(j)));
            if lhs != alg.mul(&phi.col(i), &phi.col(j)) {
                return Err(Error::NotAutomorphism);
            }
        }
    }
    Ok(())
}

pub fn hh0(alg: &AlgebraSpec, phi: &Mat) -> Result<Hh0> {
    check_automorphism(alg, phi)?;
    let d = alg.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let ab = alg.mul(&alg.basis(i), &alg.basis(j));
            let ba = alg.mul(&phi.col(j), &alg.basis(i));
            let row: Vec<Cyclo> = ab.iter().zip(&ba).map(|(x, y)| x - y).collect();
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    let rel = if rows.is_empty() { Mat::zeros(0, d) } else { Mat::from_rows(rows) };
    let rr = if rel.rows() == 0 { None } else { Some(rel.rref()) };
    let pivots = rr.as_ref().map(|r| r.pivots.clone()).unwrap_or_default();
    let basis: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    let mut projection = Mat::zeros(basis.len(), d);
    for (q, &b) in basis.iter().enumerate() {
        projection.set(q, b, Cyclo::one());
    }
    let relations = match rr {
        Some(r) => Mat::from_fn(r.rank, d, |i, j| r.reduced.get(i, j).clone()),
        None => Mat::zeros(0, d),
    };
    for (row, &p) in pivots.iter().enumerate() {
        for (q, &b) in basis.iter().enumerate() {
            let v = relations.get(row, b);
            if !v.is_zero() {
                projection.set(q, p, -v);
            }
        }
    }
    Ok(Hh0 { dim: basis.len(), basis, projection, relations })
}

/// `φ_*(r_a) ∘ φ: A → φ_*(A)`, i.e. `v ↦ φ(v) a`.
pub fn phi_hat(alg: &AlgebraSpec, phi: &Mat, a: &[Cyclo]) -> Mat {
    alg.right_mul_matrix(a).matmul(phi)
}

/// Round trips between `HH₀(A, φ)` and the classes of twisted endomorphisms
/// of projectives:
/// - `ψ∘φ = id`: each quotient basis class goes through `φ` and back through a
///   randomized decomposition of `id_A`;
/// - `φ∘ψ = id`: for each `f` in `Hom(P, φ_*P)` with `a = ψ(f)`, the maps `f`
///   and `r_a∘φ` have equal classes, compared after `ψ` with a second
///   decomposition on each side.
pub fn check_hh0_round_trips(h: &dyn GradedHopf, phi: &Mat, mods: &[ProjModule], seed: u64) -> Result<Report> {
    let mut rep = Report::new();
    let Some(first) = mods.first() else {
        return Ok(rep);
    };
    let piece = h.piece(&first.module.grade)?;
    let alg = &piece.alg;
    let q = hh0(alg, phi)?;
    let reg = ProjModule::regular(h, &first.module.grade)?;
    let reg_rand = Retract::randomized(h, &reg.module, seed)?;
    let unit = alg.unit();
    let fail = q.basis.iter().position(|&b| {
        let e = alg.basis(b);
        q.class(&reg_rand.class_of(unit, &phi_hat(alg, phi, &e))) != q.class(&e)
    });
    rep.push("hh0-psi-phi", fail.map(|i| vec![i]), format!("HH0 of dim {}", q.dim));

    let mut fail = None;
    for (mi, p) in mods.iter().enumerate() {
        let sp = crate::rep::twist_module(&p.module, phi);
        let p_rand = Retract::randomized(h, &p.module, seed.wrapping_add(mi as u64 + 1))?;
        for (fi, f) in hom_space(&p.module, &sp).iter().enumerate() {
            let a = p.retract.class_of(unit, f);
            let back = reg_rand.class_of(unit, &phi_hat(alg, phi, &a));
            let again = p_rand.class_of(unit, f);
            if q.class(&back) != q.class(&a) || q.class(&again) != q.class(&a) {
                fail = Some(vec![mi, fi]);
                break;
            }
        }
        if fail.is_some() {
            break;
        }
    }
    rep.push("hh0-phi-psi", fail, format!("{} modules", mods.len()));
    Ok(rep)
}
