use crate::error::Result;
use crate::exactnum::Cyclo;
use crate::hopfcore::{
    antipode_law_failure, coassociativity_failure, coproduct_multiplicative_failure, counit_failure,
    functional_multiplicative_failure, hook_left_of, hook_right_of, pivot_conjugation_failure, pivot_grouplike,
    radford_failure, Coproduct,
};
use crate::linalg::Mat;
use crate::report::Report;

use super::integrals::{comodulus_at, graded_modulus};
use super::{GradedHopf, GroupElem};

struct Tally {
    name: &'static str,
    failure: Option<Vec<usize>>,
    context: String,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, failure: None, context: String::new() }
    }

    fn note(&mut self, fail: Option<Vec<usize>>, grades: &[usize], ctx: impl FnOnce() -> String) {
        if self.failure.is_none() {
            if let Some(f) = fail {
                let mut v = grades.to_vec();
                v.extend(f);
                self.failure = Some(v);
                self.context = ctx();
            }
        }
    }

    fn finish(self, rep: &mut Report) {
        rep.push(self.name, self.failure, self.context);
    }
}

/// `τ∘(S_x ⊗ S_y)∘Δ_{x,y} = Δ_{y⁻¹,x⁻¹}∘S_{xy}` on every basis element.
fn anti_coalgebra_failure(d_xy: &Coproduct, s_x: &Mat, s_y: &Mat, d_yinv_xinv: &Coproduct, s_xy: &Mat) -> Option<Vec<usize>> {
    let (dyi, dxi) = (s_y.rows(), s_x.rows());
    for i in 0..d_xy.src_dim {
        let mut lhs = vec![Cyclo::zero(); dyi * dxi];
        for (j, k, c) in &d_xy.terms[i] {
            let (sj, sk) = (s_x.col(*j), s_y.col(*k));
            for (p, u) in sk.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
                for (q, v) in sj.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    lhs[p * dxi + q] += &(&(c * u) * v);
                }
            }
        }
        if lhs != d_yinv_xinv.apply(&s_xy.col(i)) {
            return Some(vec![i]);
        }
    }
    None
}

/// Exhaustive graded Hopf and pivotal axioms over all pairs and triples drawn
/// from `sample`. Products and inverses of sampled grades are built on demand.
pub fn check_graded_axioms(h: &dyn GradedHopf, sample: &[GroupElem]) -> Result<Report> {
    let one = GroupElem::unit();
    let mut rep = Report::new();
    let p1 = h.piece(&one)?;
    rep.push("counit-multiplicative", functional_multiplicative_failure(&p1.alg, &h.counit()), "");

    let mut assoc = Tally::new("associativity");
    let mut counit = Tally::new("counit");
    let mut antipode = Tally::new("antipode-law");
    let mut antialg = Tally::new("antipode-antialgebra");
    let mut conj = Tally::new("pivot-conjugation");
    for (ix, x) in sample.iter().enumerate() {
        let px = h.piece(x)?;
        let xinv = h.grade_inv(x);
        let pxinv = h.piece(&xinv)?;
        assoc.note(px.alg.associativity_failure(), &[ix], || format!("x={x}"));
        counit.note(counit_failure(&*h.coproduct(&one, x)?, &*h.coproduct(x, &one)?, &h.counit().coeffs), &[ix], || {
            format!("x={x}")
        });
        let s_x = h.antipode(x)?;
        let s_xinv = h.antipode(&xinv)?;
        let eps = h.counit().coeffs;
        let left = antipode_law_failure(&px.alg, &*h.coproduct(&xinv, x)?, &s_xinv, &eps, true);
        let right = antipode_law_failure(&px.alg, &*h.coproduct(x, &xinv)?, &s_xinv, &eps, false);
        antipode.note(left.or(right), &[ix], || format!("x={x}"));
        let d = px.dim();
        let fail = crate::report::first_failure2(d, d, |i, j| {
            let ab = px.alg.mul(&px.alg.basis(i), &px.alg.basis(j));
            s_x.apply(&ab) == pxinv.alg.mul(&s_x.col(j), &s_x.col(i))
        });
        antialg.note(fail, &[ix], || format!("x={x}"));
        let s2 = &*s_xinv * &*s_x;
        conj.note(pivot_conjugation_failure(&px.alg, &s2, px.pivot()?), &[ix], || format!("x={x}"));
    }

    let mut mult = Tally::new("coproduct-multiplicative");
    let mut grouplike = Tally::new("pivot-grouplike");
    let mut anticoalg = Tally::new("antipode-anticoalgebra");
    for (ix, x) in sample.iter().enumerate() {
        for (iy, y) in sample.iter().enumerate() {
            let xy = h.grade_mul(x, y);
            let (px, py, pxy) = (h.piece(x)?, h.piece(y)?, h.piece(&xy)?);
            let delta = h.coproduct(x, y)?;
            let ctx = || format!("x={x} y={y}");
            mult.note(coproduct_multiplicative_failure(&pxy.alg, &px.alg, &py.alg, &delta), &[ix, iy], ctx);
            let ok = pivot_grouplike(&delta, pxy.pivot()?, px.pivot()?, py.pivot()?);
            grouplike.note((!ok).then(Vec::new), &[ix, iy], ctx);
            let (xi, yi) = (h.grade_inv(x), h.grade_inv(y));
            let fail = anti_coalgebra_failure(
                &delta,
                &*h.antipode(x)?,
                &*h.antipode(y)?,
                &*h.coproduct(&yi, &xi)?,
                &*h.antipode(&xy)?,
            );
            anticoalg.note(fail, &[ix, iy], ctx);
        }
    }

    let mut coassoc = Tally::new("coassociativity");
    for (ix, x) in sample.iter().enumerate() {
        for (iy, y) in sample.iter().enumerate() {
            let xy = h.grade_mul(x, y);
            let d_x_y = h.coproduct(x, y)?;
            for (iz, z) in sample.iter().enumerate() {
                let yz = h.grade_mul(y, z);
                let fail = coassociativity_failure(
                    &*h.coproduct(&xy, z)?,
                    &d_x_y,
                    &*h.coproduct(x, &yz)?,
                    &*h.coproduct(y, z)?,
                );
                coassoc.note(fail, &[ix, iy, iz], || format!("x={x} y={y} z={z}"));
            }
        }
    }

    for t in [assoc, counit, antipode, antialg, conj, mult, grouplike, anticoalg, coassoc] {
        t.finish(&mut rep);
    }
    Ok(rep)
}

/// `(S_{x⁻¹}S_x)²(h) = a_x (α⁻¹(h₍₁,₁₎) h₍₂,ₓ₎ α(h₍₃,₁₎)) a_x⁻¹` per sampled grade.
pub fn check_graded_radford(h: &dyn GradedHopf, sample: &[GroupElem]) -> Result<Report> {
    let one = GroupElem::unit();
    let alpha = graded_modulus(h)?;
    let alpha_inv = alpha.compose(&*h.antipode(&one)?);
    let mut t = Tally::new("radford-s4");
    for (ix, x) in sample.iter().enumerate() {
        let px = h.piece(x)?;
        let s2 = &*h.antipode(&h.grade_inv(x))? * &*h.antipode(x)?;
        let r_inv = hook_right_of(&*h.coproduct(&one, x)?, &alpha_inv.coeffs);
        let l_alpha = hook_left_of(&*h.coproduct(x, &one)?, &alpha.coeffs);
        let a = comodulus_at(h, x)?;
        t.note(radford_failure(&px.alg, &s2, &r_inv, &l_alpha, &a), &[ix], || format!("x={x}"));
    }
    let mut rep = Report::new();
    t.finish(&mut rep);
    Ok(rep)
}

/// `φ_{x,y}(h ⊗ m) = h₍₁,ₓ₎ ⊗ h₍₂,ᵧ₎m`, a map `H_{xy} ⊗ H_y → H_x ⊗ H_y`.
pub fn phi_matrix(h: &dyn GradedHopf, x: &GroupElem, y: &GroupElem) -> Result<Mat> {
    let xy = h.grade_mul(x, y);
    let (px, py, pxy) = (h.piece(x)?, h.piece(y)?, h.piece(&xy)?);
    let delta = h.coproduct(x, y)?;
    let (dx, dy) = (px.dim(), py.dim());
    let mut m = Mat::zeros(dx * dy, pxy.dim() * dy);
    for i in 0..pxy.dim() {
        for j in 0..dy {
            let col = i * dy + j;
            for (p, q, c) in &delta.terms[i] {
                for (k, v) in py.alg.basis_product(*q, j) {
                    *m.entry_mut(p * dy + k, col) += &(c * v);
                }
            }
        }
    }
    Ok(m)
}

/// `ψ_{x,y}(a ⊗ b) = a₍₁,ₓᵧ₎ ⊗ S_{y⁻¹}(a₍₂,ᵧ⁻¹₎)b`, a map `H_x ⊗ H_y → H_{xy} ⊗ H_y`.
pub fn psi_matrix(h: &dyn GradedHopf, x: &GroupElem, y: &GroupElem) -> Result<Mat> {
    let xy = h.grade_mul(x, y);
    let yinv = h.grade_inv(y);
    let (px, py, pxy) = (h.piece(x)?, h.piece(y)?, h.piece(&xy)?);
    let delta = h.coproduct(&xy, &yinv)?;
    let s = h.antipode(&yinv)?;
    let (dx, dy, dxy) = (px.dim(), py.dim(), pxy.dim());
    let mut m = Mat::zeros(dxy * dy, dx * dy);
    for i in 0..dx {
        for j in 0..dy {
            let col = i * dy + j;
            for (p, q, c) in &delta.terms[i] {
                let sb = py.alg.mul(&s.col(*q), &py.alg.basis(j));
                for (k, v) in sb.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    *m.entry_mut(p * dy + k, col) += &(c * v);
                }
            }
        }
    }
    Ok(m)
}

/// Checks that `φ_{x,y}` and `ψ_{x,y}` are mutually inverse and
/// `H_{xy}`-linear, where `H_{xy}` acts on `H_{xy} ⊗ εH_y` through the left
/// factor only and on `H_x ⊗ H_y` through `Δ_{x,y}`.
pub fn check_phi_psi(h: &dyn GradedHopf, x: &GroupElem, y: &GroupElem) -> Result<Report> {
    let xy = h.grade_mul(x, y);
    let (px, py, pxy) = (h.piece(x)?, h.piece(y)?, h.piece(&xy)?);
    let phi = phi_matrix(h, x, y)?;
    let psi = psi_matrix(h, x, y)?;
    let mut rep = Report::new();
    let n = pxy.dim() * py.dim();
    rep.record("psi-phi", &psi * &phi == Mat::identity(n), format!("x={x} y={y}"));
    rep.record("phi-psi", &phi * &psi == Mat::identity(px.dim() * py.dim()), format!("x={x} y={y}"));
    let delta = h.coproduct(x, y)?;
    let id_y = Mat::identity(py.dim());
    let mut phi_lin = None;
    let mut psi_lin = None;
    for g in pxy.alg.generators() {
        let b = pxy.alg.basis(g);
        let triv = pxy.alg.left_mul_matrix(&b).kron(&id_y);
        let mut act = Mat::zeros(px.dim() * py.dim(), px.dim() * py.dim());
        for (p, q, c) in &delta.terms[g] {
            let lp = px.alg.left_mul_matrix(&px.alg.basis(*p));
            let lq = py.alg.left_mul_matrix(&py.alg.basis(*q));
            act = &act + &lp.kron(&lq).scale(c);
        }
        if phi_lin.is_none() && &phi * &triv != &act * &phi {
            phi_lin = Some(vec![g]);
        }
        if psi_lin.is_none() && &psi * &act != &triv * &psi {
            psi_lin = Some(vec![g]);
        }
    }
    rep.push("phi-linear", phi_lin, "");
    rep.push("psi-linear", psi_lin, "");
    Ok(rep)
}
