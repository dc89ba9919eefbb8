use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::hopfcore::{right_integrals, Functional, HopfSpec};
use crate::linalg::{proportionality, vec_scale, Mat};
use crate::report::Report;

use super::{GradedHopf, GroupElem};

/// The unit-grade piece as an ordinary Hopf algebra.
pub fn unit_hopf(h: &dyn GradedHopf) -> Result<HopfSpec> {
    let one = GroupElem::unit();
    let p = h.piece(&one)?;
    let mut spec = HopfSpec::new(
        (*p.alg).clone(),
        (*h.coproduct(&one, &one)?).clone(),
        h.counit(),
        (*h.antipode(&one)?).clone(),
        p.pivot.clone(),
    )?;
    spec.family = p.family.clone();
    Ok(spec)
}

/// Modulus of the unit-grade algebra.
pub fn graded_modulus(h: &dyn GradedHopf) -> Result<Functional> {
    crate::hopfcore::modulus(&unit_hopf(h)?)
}

/// `R(ν)` on `H_x`: `a ↦ ν(a_{(1,1)}) a_{(2,x)}`.
pub fn graded_hook_right(h: &dyn GradedHopf, nu: &Functional, x: &GroupElem) -> Result<Mat> {
    Ok(crate::hopfcore::hook_right_of(&*h.coproduct(&GroupElem::unit(), x)?, &nu.coeffs))
}

/// `L(ν)` on `H_x`: `a ↦ a_{(1,x)} ν(a_{(2,1)})`.
pub fn graded_hook_left(h: &dyn GradedHopf, nu: &Functional, x: &GroupElem) -> Result<Mat> {
    Ok(crate::hopfcore::hook_left_of(&*h.coproduct(x, &GroupElem::unit())?, &nu.coeffs))
}

/// `μ_y` obtained from the unit-grade integral through
/// `(μ_1 ⊗ id)Δ_{1,y}(a) = μ_y(a) 1_y`.
pub fn g_integral_at(h: &dyn GradedHopf, y: &GroupElem) -> Result<Functional> {
    let one = GroupElem::unit();
    let mu1 = right_integrals(&unit_hopf(h)?)?.remove(0);
    if y.is_unit() {
        return Ok(mu1);
    }
    let py = h.piece(y)?;
    let delta = h.coproduct(&one, y)?;
    let mut coeffs = Vec::with_capacity(py.dim());
    for i in 0..py.dim() {
        let v = delta.contract_left(&mu1.coeffs, &py.alg.basis(i));
        let c = proportionality(&v, py.alg.unit())
            .ok_or_else(|| Error::Malformed(format!("integral relation has no solution at grade {y}")))?;
        coeffs.push(c);
    }
    Ok(Functional::new(coeffs))
}

pub fn g_integral(h: &dyn GradedHopf, grades: &[GroupElem]) -> Result<Vec<(GroupElem, Functional)>> {
    grades.iter().map(|g| Ok((g.clone(), g_integral_at(h, g)?))).collect()
}

/// `μ̂_x(a) = μ_x(g_x a)`.
pub fn symmetrised_g_integral_at(h: &dyn GradedHopf, x: &GroupElem) -> Result<Functional> {
    let p = h.piece(x)?;
    let mu = g_integral_at(h, x)?;
    Ok(mu.compose(&p.alg.left_mul_matrix(p.pivot()?)))
}

pub fn symmetrised_g_integral(h: &dyn GradedHopf, grades: &[GroupElem]) -> Result<Vec<(GroupElem, Functional)>> {
    grades.iter().map(|g| Ok((g.clone(), symmetrised_g_integral_at(h, g)?))).collect()
}

/// `(μ_x ⊗ id)Δ_{x,y}(a) = μ_{xy}(a) 1_y` for all pairs drawn from `grades`.
pub fn check_g_integral(h: &dyn GradedHopf, grades: &[GroupElem]) -> Result<Report> {
    let mut rep = Report::new();
    for (ix, x) in grades.iter().enumerate() {
        let mux = g_integral_at(h, x)?;
        for (iy, y) in grades.iter().enumerate() {
            let xy = h.grade_mul(x, y);
            let muxy = g_integral_at(h, &xy)?;
            let (pxy, py) = (h.piece(&xy)?, h.piece(y)?);
            let delta = h.coproduct(x, y)?;
            let fail = (0..pxy.dim()).find(|&i| {
                delta.contract_left(&mux.coeffs, &pxy.alg.basis(i)) != vec_scale(py.alg.unit(), muxy.at(i))
            });
            rep.push(format!("g-integral[{ix},{iy}]"), fail.map(|i| vec![ix, iy, i]), format!("x={x} y={y}"));
        }
    }
    Ok(rep)
}

/// `(μ̂_x ⊗ g_y)Δ_{x,y}(a) = μ̂_{xy}(a) 1_y`, read as `μ̂_x(a₁) g_y a₂`.
pub fn check_rintrel(h: &dyn GradedHopf, grades: &[GroupElem]) -> Result<Report> {
    let mut rep = Report::new();
    for (ix, x) in grades.iter().enumerate() {
        let lx = symmetrised_g_integral_at(h, x)?;
        for (iy, y) in grades.iter().enumerate() {
            let xy = h.grade_mul(x, y);
            let lxy = symmetrised_g_integral_at(h, &xy)?;
            let (pxy, py) = (h.piece(&xy)?, h.piece(y)?);
            let gy = py.pivot()?;
            let delta = h.coproduct(x, y)?;
            let fail = (0..pxy.dim()).find(|&i| {
                let a2 = delta.contract_left(&lx.coeffs, &pxy.alg.basis(i));
                py.alg.mul(gy, &a2) != vec_scale(py.alg.unit(), lxy.at(i))
            });
            rep.push(format!("rintrel[{ix},{iy}]"), fail.map(|i| vec![ix, iy, i]), format!("x={x} y={y}"));
        }
    }
    Ok(rep)
}

pub(crate) fn comodulus_at(h: &dyn GradedHopf, x: &GroupElem) -> Result<Vec<Cyclo>> {
    let one = GroupElem::unit();
    let mu1 = g_integral_at(h, &one)?;
    let mux = g_integral_at(h, x)?;
    let px = h.piece(x)?;
    let delta = h.coproduct(x, &one)?;
    let i0 = (0..px.dim()).find(|&i| !mux.at(i).is_zero()).expect("integral is nonzero");
    Ok(vec_scale(&delta.contract_right(&mu1.coeffs, &px.alg.basis(i0)), &mux.at(i0).inv()?))
}

/// The comodulus `a_x` on each grade, with `(id ⊗ μ_y)Δ_{x,y} = μ_{xy}(−) a_x`
/// and `Δ_{x,y}(a_{xy}) = a_x ⊗ a_y` verified on all sampled pairs.
pub fn graded_comodulus(h: &dyn GradedHopf, grades: &[GroupElem]) -> Result<Vec<(GroupElem, Vec<Cyclo>)>> {
    let mut out = Vec::new();
    for x in grades {
        let ax = comodulus_at(h, x)?;
        for y in grades {
            let xy = h.grade_mul(x, y);
            let (muy, muxy) = (g_integral_at(h, y)?, g_integral_at(h, &xy)?);
            let pxy = h.piece(&xy)?;
            let delta = h.coproduct(x, y)?;
            for i in 0..pxy.dim() {
                if delta.contract_right(&muy.coeffs, &pxy.alg.basis(i)) != vec_scale(&ax, muxy.at(i)) {
                    return Err(Error::Malformed(format!("comodulus relation fails for x={x}, y={y}")));
                }
            }
            let (ay, axy) = (comodulus_at(h, y)?, comodulus_at(h, &xy)?);
            let dr = delta.right_dim;
            let tensor: Vec<Cyclo> = (0..delta.left_dim * dr).map(|idx| &ax[idx / dr] * &ay[idx % dr]).collect();
            if delta.apply(&axy) != tensor {
                return Err(Error::Malformed(format!("comodulus is not G-group-like at x={x}, y={y}")));
            }
        }
        out.push((x.clone(), ax));
    }
    Ok(out)
}
