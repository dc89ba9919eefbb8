use std::collections::BTreeMap;

use crate::error::Result;
use crate::exactnum::Cyclo;
use crate::linalg::{vec_scale, Mat};
use crate::report::Report;

use super::integrals::{comodulus, hook_left_of, hook_right_of, inverse_character, modulus, right_integral};
use super::{hook_right, AlgebraSpec, Coproduct, Functional, HopfSpec};

/// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd` on dense two-fold tensors.
pub(crate) fn tensor_mul(l: &AlgebraSpec, r: &AlgebraSpec, t1: &[Cyclo], t2: &[Cyclo]) -> Vec<Cyclo> {
    let (dl, dr) = (l.dim(), r.dim());
    let nz = |t: &[Cyclo]| -> Vec<(usize, usize, Cyclo)> {
        t.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i / dr, i % dr, c.clone())).collect()
    };
    let (a, b) = (nz(t1), nz(t2));
    let mut out = vec![Cyclo::zero(); dl * dr];
    for (i1, j1, c1) in &a {
        for (i2, j2, c2) in &b {
            let c = c1 * c2;
            for (p, x) in l.basis_product(*i1, *i2) {
                let cx = &c * x;
                for (q, y) in r.basis_product(*j1, *j2) {
                    out[p * dr + q] += &(&cx * y);
                }
            }
        }
    }
    out
}

type Tensor3 = BTreeMap<(usize, usize, usize), Cyclo>;

fn add3(t: &mut Tensor3, key: (usize, usize, usize), c: Cyclo) {
    let e = t.entry(key).or_insert_with(Cyclo::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&key);
    }
}

/// `(Δ_{x,y} ⊗ id)Δ_{xy,z} = (id ⊗ Δ_{y,z})Δ_{x,yz}` on every basis element.
pub(crate) fn coassociativity_failure(
    d_xy_z: &Coproduct,
    d_x_y: &Coproduct,
    d_x_yz: &Coproduct,
    d_y_z: &Coproduct,
) -> Option<Vec<usize>> {
    for i in 0..d_xy_z.src_dim {
        let mut lhs = Tensor3::new();
        for (j, k, c) in &d_xy_z.terms[i] {
            for (p, q, c2) in &d_x_y.terms[*j] {
                add3(&mut lhs, (*p, *q, *k), c * c2);
            }
        }
        let mut rhs = Tensor3::new();
        for (j, k, c) in &d_x_yz.terms[i] {
            for (q, s, c2) in &d_y_z.terms[*k] {
                add3(&mut rhs, (*j, *q, *s), c * c2);
            }
        }
        if lhs != rhs {
            return Some(vec![i]);
        }
    }
    None
}

/// `(ε ⊗ id)Δ_{1,x} = id = (id ⊗ ε)Δ_{x,1}`.
pub(crate) fn counit_failure(d_1x: &Coproduct, d_x1: &Coproduct, eps: &[Cyclo]) -> Option<Vec<usize>> {
    let n = d_1x.src_dim;
    let left = hook_right_of(d_1x, eps);
    let right = hook_left_of(d_x1, eps);
    let id = Mat::identity(n);
    if left != id {
        return Some(vec![0, (0..n).find(|&i| left.col(i) != id.col(i)).unwrap_or(0)]);
    }
    if right != id {
        return Some(vec![1, (0..n).find(|&i| right.col(i) != id.col(i)).unwrap_or(0)]);
    }
    None
}

/// `Δ(ab) = Δ(a)Δ(b)` and `Δ(1) = 1 ⊗ 1` for a map `H_src → H_l ⊗ H_r`.
pub(crate) fn coproduct_multiplicative_failure(
    src: &AlgebraSpec,
    l: &AlgebraSpec,
    r: &AlgebraSpec,
    delta: &Coproduct,
) -> Option<Vec<usize>> {
    let one_one: Vec<Cyclo> =
        (0..l.dim() * r.dim()).map(|idx| &l.unit()[idx / r.dim()] * &r.unit()[idx % r.dim()]).collect();
    if delta.apply(src.unit()) != one_one {
        return Some(vec![]);
    }
    let images: Vec<Vec<Cyclo>> = (0..src.dim()).map(|i| delta.apply(&src.basis(i))).collect();
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = delta.apply(&src.mul(&src.basis(i), &src.basis(j)));
            if lhs != tensor_mul(l, r, &images[i], &images[j]) {
                return Some(vec![i, j]);
            }
        }
    }
    None
}

pub(crate) fn functional_multiplicative_failure(alg: &AlgebraSpec, f: &Functional) -> Option<Vec<usize>> {
    if f.eval(alg.unit()) != Cyclo::one() {
        return Some(vec![]);
    }
    let d = alg.dim();
    crate::report::first_failure2(d, d, |i, j| f.eval(&alg.mul(&alg.basis(i), &alg.basis(j))) == f.at(i) * f.at(j))
}

/// `m(S ⊗ id)Δ = ε·1` (when `left`) or `m(id ⊗ S)Δ = ε·1`. `delta` maps the
/// unit-grade algebra into `H_{x⁻¹} ⊗ H_x` (left) or `H_x ⊗ H_{x⁻¹}`, and `s`
/// maps `H_{x⁻¹} → H_x`.
pub(crate) fn antipode_law_failure(
    target: &AlgebraSpec,
    delta: &Coproduct,
    s: &Mat,
    eps: &[Cyclo],
    left: bool,
) -> Option<Vec<usize>> {
    for i in 0..delta.src_dim {
        let mut acc = vec![Cyclo::zero(); target.dim()];
        for (j, k, c) in &delta.terms[i] {
            let (a, b) = if left {
                (s.col(*j), target.basis(*k))
            } else {
                (target.basis(*j), s.col(*k))
            };
            let p = target.mul(&a, &b);
            for (o, v) in acc.iter_mut().zip(p) {
                if !v.is_zero() {
                    *o += &(c * &v);
                }
            }
        }
        if acc != vec_scale(target.unit(), &eps[i]) {
            return Some(vec![i]);
        }
    }
    None
}

/// `S_{x⁻¹}S_x(a) = g a g⁻¹` on every basis element; `s2` is `S_{x⁻¹}S_x`.
pub(crate) fn pivot_conjugation_failure(alg: &AlgebraSpec, s2: &Mat, g: &[Cyclo]) -> Option<Vec<usize>> {
    let Some(ginv) = alg.inverse(g) else {
        return Some(vec![]);
    };
    crate::report::first_failure(alg.dim(), |i| s2.col(i) == alg.mul(&alg.mul(g, &alg.basis(i)), &ginv))
}

/// `Δ(g_{xy}) = g_x ⊗ g_y`.
pub(crate) fn pivot_grouplike(delta: &Coproduct, g_xy: &[Cyclo], g_x: &[Cyclo], g_y: &[Cyclo]) -> bool {
    let dr = delta.right_dim;
    let gg: Vec<Cyclo> = (0..delta.left_dim * dr).map(|idx| &g_x[idx / dr] * &g_y[idx % dr]).collect();
    delta.apply(g_xy) == gg
}

/// Verifies algebra, coalgebra, antipode and (if present) pivot axioms
/// exhaustively on basis tuples.
pub fn check_hopf_axioms(h: &HopfSpec) -> Report {
    let mut rep = Report::new();
    let a = &h.alg;
    rep.push("associativity", a.associativity_failure(), "");
    rep.push("unit", a.unit_failure(), "");
    rep.push("coassociativity", coassociativity_failure(&h.delta, &h.delta, &h.delta, &h.delta), "");
    rep.push("counit", counit_failure(&h.delta, &h.delta, &h.counit.coeffs), "");
    rep.push("coproduct-multiplicative", coproduct_multiplicative_failure(a, a, a, &h.delta), "");
    rep.push("counit-multiplicative", functional_multiplicative_failure(a, &h.counit), "");
    let left = antipode_law_failure(a, &h.delta, &h.antipode, &h.counit.coeffs, true);
    let right = antipode_law_failure(a, &h.delta, &h.antipode, &h.counit.coeffs, false);
    rep.push("antipode-law", left.or(right), "");
    if let Some(g) = &h.pivot {
        let ok = a.inverse(g).is_some() && pivot_grouplike(&h.delta, g, g, g) && h.counit.eval(g).is_one();
        rep.record("pivot-grouplike", ok, "");
        let s2 = &*h.antipode * &*h.antipode;
        rep.push("pivot-conjugation", pivot_conjugation_failure(a, &s2, g), "");
    }
    rep
}

/// `S⁴(h) = a·(α⁻¹(h₁) h₂ α(h₃))·a⁻¹` where `s2 = S_{x⁻¹}S_x`, `r_inv`
/// is `R(α⁻¹)` and `l_alpha` is `L(α)` on the same piece.
pub(crate) fn radford_failure(alg: &AlgebraSpec, s2: &Mat, r_inv: &Mat, l_alpha: &Mat, a: &[Cyclo]) -> Option<Vec<usize>> {
    let Some(ainv) = alg.inverse(a) else {
        return Some(vec![]);
    };
    let s4 = s2 * s2;
    let twist = r_inv * l_alpha;
    crate::report::first_failure(alg.dim(), |i| s4.col(i) == alg.mul(&alg.mul(a, &twist.col(i)), &ainv))
}

pub fn check_radford_s4(h: &HopfSpec) -> Result<Report> {
    let alpha = modulus(h)?;
    let a = comodulus(h)?;
    let alpha_inv = inverse_character(h, &alpha);
    let s2 = &*h.antipode * &*h.antipode;
    let r_inv = hook_right_of(&h.delta, &alpha_inv.coeffs);
    let l_alpha = hook_left_of(&h.delta, &alpha.coeffs);
    let mut rep = Report::new();
    rep.push("radford-s4", radford_failure(&h.alg, &s2, &r_inv, &l_alpha, &a), "");
    Ok(rep)
}

/// `μ(ab) = μ(S²(b ↼ α)·a)` on all basis pairs.
pub fn check_mu_ab(h: &HopfSpec) -> Result<Report> {
    let mu = right_integral(h)?;
    let alpha = modulus(h)?;
    let m = &(&*h.antipode * &*h.antipode) * &hook_right(h, &alpha);
    let d = h.dim();
    let fail = crate::report::first_failure2(d, d, |i, j| {
        let lhs = mu.eval(&h.alg.mul(&h.alg.basis(i), &h.alg.basis(j)));
        lhs == mu.eval(&h.alg.mul(&m.col(j), &h.alg.basis(i)))
    });
    let mut rep = Report::new();
    rep.push("mu-ab", fail, "");
    Ok(rep)
}
