//! Concrete matrix modules over the pieces of a (graded) Hopf algebra.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::graded::{graded_hook_right, GradedHopf, GroupElem, HopfPiece};
use crate::hopfcore::{is_group_like, AlgebraSpec, Functional};
use crate::linalg::Mat;

mod duality;
mod projective;

pub use duality::{
    check_duality_maps, d_cap_left, d_cap_left_inv, d_cap_right, d_cap_right_inv, d_cup_left, d_cup_left_inv,
    d_cup_right, d_cup_right_inv, duality_maps, pivot_action, DualityMaps,
};
pub use projective::{primitive_idempotents, projective_cover, projective_covers, summand_from_idempotent, ProjectiveCover};

/// A module over `H_x`, one action matrix per basis element of `H_x`.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    pub grade: GroupElem,
    pub alg: Arc<AlgebraSpec>,
    dim: usize,
    action: Vec<Mat>,
}

#[derive(Serialize, Deserialize)]
struct ModuleJson {
    grade: GroupElem,
    dim: usize,
    action: Vec<Mat>,
}

impl ModuleRep {
    pub fn new(grade: GroupElem, alg: Arc<AlgebraSpec>, dim: usize, action: Vec<Mat>) -> Result<Self> {
        if action.len() != alg.dim() {
            return Err(Error::Shape(format!("{} action matrices for an algebra of dim {}", action.len(), alg.dim())));
        }
        if let Some(m) = action.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Shape(format!("action matrix is {}x{}, module dim is {dim}", m.rows(), m.cols())));
        }
        Ok(ModuleRep { grade, alg, dim, action })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Action of the `i`-th basis element.
    pub fn action(&self, i: usize) -> &Mat {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.action
    }

    /// Action of an arbitrary element given in coordinates.
    pub fn act(&self, h: &[Cyclo]) -> Mat {
        let mut out = Mat::zeros(self.dim, self.dim);
        for (c, m) in h.iter().zip(&self.action) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    /// First violation of `ρ(1) = id` (reported as `[]`) or of
    /// `ρ(b_i)ρ(b_j) = ρ(b_i b_j)` (reported as `[i, j]`).
    pub fn action_failure(&self) -> Option<Vec<usize>> {
        if self.act(self.alg.unit()) != Mat::identity(self.dim) {
            return Some(vec![]);
        }
        let d = self.alg.dim();
        for i in 0..d {
            for j in 0..d {
                let mut rhs = Mat::zeros(self.dim, self.dim);
                for (k, c) in self.alg.basis_product(i, j) {
                    rhs = &rhs + &self.action[*k].scale(c);
                }
                if self.action[i].matmul(&self.action[j]) != rhs {
                    return Some(vec![i, j]);
                }
            }
        }
        None
    }

    pub fn to_json(&self) -> String {
        let j = ModuleJson { grade: self.grade.clone(), dim: self.dim, action: self.action.clone() };
        serde_json::to_string_pretty(&j).expect("module serializes")
    }

    pub fn from_json(s: &str, alg: Arc<AlgebraSpec>) -> Result<Self> {
        let j: ModuleJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        ModuleRep::new(j.grade, alg, j.dim, j.action)
    }
}

/// Left regular module of a piece.
pub fn regular_rep(piece: &HopfPiece) -> ModuleRep {
    regular_rep_of(piece.grade.clone(), piece.alg.clone())
}

pub fn regular_rep_of(grade: GroupElem, alg: Arc<AlgebraSpec>) -> ModuleRep {
    let d = alg.dim();
    let action = (0..d).map(|i| alg.left_mul_matrix(&alg.basis(i))).collect();
    ModuleRep { grade, alg, dim: d, action }
}

/// `εW` with `dim W = w`: every `h` acts by `ε(h)`.
pub fn eps_module(h: &dyn GradedHopf, w: usize) -> Result<ModuleRep> {
    let one = GroupElem::unit();
    let piece = h.piece(&one)?;
    let eps = h.counit();
    let action = eps.coeffs.iter().map(|c| Mat::identity(w).scale(c)).collect();
    ModuleRep::new(one, piece.alg.clone(), w, action)
}

/// The tensor unit.
pub fn trivial_module(h: &dyn GradedHopf) -> Result<ModuleRep> {
    eps_module(h, 1)
}

/// `M ⊗ N` over `H_{xy}` through `Δ_{x,y}`; the basis vector `m_i ⊗ n_j`
/// sits at `i·dim N + j`.
pub fn tensor_module(h: &dyn GradedHopf, m: &ModuleRep, n: &ModuleRep) -> Result<ModuleRep> {
    let xy = h.grade_mul(&m.grade, &n.grade);
    let piece = h.piece(&xy)?;
    let delta = h.coproduct(&m.grade, &n.grade)?;
    if delta.left_dim != m.alg.dim() || delta.right_dim != n.alg.dim() {
        return Err(Error::Grade(format!("coproduct at ({}, {}) does not match the factors", m.grade, n.grade)));
    }
    let dim = m.dim * n.dim;
    let action = delta
        .terms
        .iter()
        .map(|terms| {
            let mut out = Mat::zeros(dim, dim);
            for (j, k, c) in terms {
                out = &out + &m.action[*j].kron(&n.action[*k]).scale(c);
            }
            out
        })
        .collect();
    ModuleRep::new(xy, piece.alg.clone(), dim, action)
}

/// `M*` over `H_{x⁻¹}` with `ρ*(h) = ρ(S_{x⁻¹}(h))ᵀ`.
pub fn dual_module(h: &dyn GradedHopf, m: &ModuleRep) -> Result<ModuleRep> {
    let xi = h.grade_inv(&m.grade);
    let piece = h.piece(&xi)?;
    let s = h.antipode(&xi)?;
    let action = (0..piece.dim()).map(|i| m.act(&s.col(i)).transpose()).collect();
    ModuleRep::new(xi, piece.alg.clone(), m.dim, action)
}

/// `φ_*(M)`: the action read through the automorphism `φ` of the piece.
pub fn twist_module(m: &ModuleRep, phi: &Mat) -> ModuleRep {
    let action = (0..m.alg.dim()).map(|i| m.act(&phi.col(i))).collect();
    ModuleRep { grade: m.grade.clone(), alg: m.alg.clone(), dim: m.dim, action }
}

/// `R(ν)_*(M)` for a group-like `ν` on the unit grade.
pub fn twist_by_character(h: &dyn GradedHopf, m: &ModuleRep, nu: &Functional) -> Result<ModuleRep> {
    let one = h.piece(&GroupElem::unit())?;
    if !is_group_like(&one.alg, nu) {
        return Err(Error::NotGroupLike);
    }
    Ok(twist_module(m, &graded_hook_right(h, nu, &m.grade)?))
}

/// Restriction along an algebra map `A → H_x` given by the images of the
/// basis of `A` as columns.
pub fn restrict(m: &ModuleRep, sub: Arc<AlgebraSpec>, embedding: &Mat) -> Result<ModuleRep> {
    if embedding.rows() != m.alg.dim() || embedding.cols() != sub.dim() {
        return Err(Error::Shape("embedding shape does not match the algebras".into()));
    }
    if embedding.apply(sub.unit()) != m.alg.unit() {
        return Err(Error::NotMultiplicative);
    }
    let cols = embedding.columns();
    for i in 0..sub.dim() {
        for j in 0..sub.dim() {
            let lhs = embedding.apply(&sub.mul(&sub.basis(i), &sub.basis(j)));
            if lhs != m.alg.mul(&cols[i], &cols[j]) {
                return Err(Error::NotMultiplicative);
            }
        }
    }
    let action = cols.iter().map(|c| m.act(c)).collect();
    ModuleRep::new(m.grade.clone(), sub, m.dim, action)
}

/// First generator `b` with `mat·ρ_src(b) ≠ ρ_dst(b)·mat`.
pub fn intertwiner_failure(src: &ModuleRep, dst: &ModuleRep, mat: &Mat) -> Option<usize> {
    if mat.rows() != dst.dim || mat.cols() != src.dim {
        return Some(usize::MAX);
    }
    src.alg
        .generators()
        .into_iter()
        .find(|&b| mat.matmul(&src.action[b]) != dst.action[b].matmul(mat))
}

pub fn is_intertwiner(src: &ModuleRep, dst: &ModuleRep, mat: &Mat) -> bool {
    intertwiner_failure(src, dst, mat).is_none()
}

/// Basis of `Hom_H(M, N)`: the canonical nullspace basis of
/// `ρ_N(b)X − Xρ_M(b) = 0` over the generators, each reshaped to a
/// `dim N × dim M` matrix.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Vec<Mat> {
    let (dm, dn) = (m.dim, n.dim);
    let nvars = dm * dn;
    let mut rows: Vec<Vec<Cyclo>> = Vec::new();
    for b in m.alg.generators() {
        let (a, bm) = (&n.action[b], &m.action[b]);
        for p in 0..dn {
            for q in 0..dm {
                let mut row = vec![Cyclo::zero(); nvars];
                for k in 0..dn {
                    let c = a.get(p, k);
                    if !c.is_zero() {
                        row[k * dm + q] += c;
                    }
                }
                for k in 0..dm {
                    let c = bm.get(k, q);
                    if !c.is_zero() {
                        row[p * dm + k] -= c;
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let ns = if rows.is_empty() { Mat::identity(nvars) } else { Mat::from_rows(rows).nullspace() };
    (0..ns.cols())
        .map(|k| {
            let v = ns.col(k);
            Mat::from_fn(dn, dm, |i, j| v[i * dm + j].clone())
        })
        .collect()
}

/// Coordinates of a morphism in a Hom basis, if it lies in the span.
pub fn hom_coordinates(basis: &[Mat], f: &Mat) -> Option<Vec<Cyclo>> {
    if basis.is_empty() {
        return f.is_zero().then(Vec::new);
    }
    let cols: Vec<Vec<Cyclo>> = basis.iter().map(|b| b.entries().to_vec()).collect();
    let a = Mat::from_cols(f.rows() * f.cols(), &cols);
    a.solve(&Mat::column_vector(f.entries())).ok().map(|x| x.col(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::root_of_unity;
    use crate::graded::build_borel;
    use crate::hopfcore::{build_cyclic_group_algebra, build_taft, modulus, taft_index};

    fn unit_piece(h: &dyn GradedHopf) -> Arc<HopfPiece> {
        h.piece(&GroupElem::unit()).unwrap()
    }

    #[test]
    fn regular_rep_is_a_module() {
        for r in 2..=3 {
            let h = build_taft(r);
            let m = regular_rep(&unit_piece(&h));
            assert_eq!(m.dim(), r * r);
            assert_eq!(m.action(0), &Mat::identity(r * r));
            assert_eq!(m.action_failure(), None);
        }
    }

    #[test]
    fn tensor_with_trivial_is_the_module() {
        let h = build_taft(3);
        let m = regular_rep(&unit_piece(&h));
        let t = tensor_module(&h, &m, &trivial_module(&h).unwrap()).unwrap();
        assert_eq!(t.actions(), m.actions());
        let t = tensor_module(&h, &trivial_module(&h).unwrap(), &m).unwrap();
        assert_eq!(t.actions(), m.actions());
    }

    #[test]
    fn tensor_is_strictly_associative() {
        let h = build_taft(2);
        let covers = projective_covers(&unit_piece(&h)).unwrap();
        let (a, b) = (&covers[0].module, &covers[1].module);
        let g = regular_rep(&unit_piece(&h));
        let left = tensor_module(&h, &tensor_module(&h, a, b).unwrap(), &g).unwrap();
        let right = tensor_module(&h, a, &tensor_module(&h, b, &g).unwrap()).unwrap();
        assert_eq!(left.dim(), 16);
        assert_eq!(left.actions(), right.actions());
        assert_eq!(left.action_failure(), None);
    }

    #[test]
    fn tensor_across_borel_grades() {
        let b = build_borel(2, 0);
        let x = GroupElem::new(root_of_unity(4, 1), Cyclo::one());
        let y = GroupElem::new(Cyclo::from_int(2), Cyclo::zero());
        let mx = regular_rep(&b.piece(&x).unwrap());
        let my = regular_rep(&b.piece(&y).unwrap());
        let t = tensor_module(&b, &mx, &my).unwrap();
        assert_eq!(t.grade, b.grade_mul(&x, &y));
        assert_eq!(t.action_failure(), None);
    }

    #[test]
    fn dual_and_double_dual() {
        let h = build_taft(3);
        let triv = trivial_module(&h).unwrap();
        assert_eq!(dual_module(&h, &triv).unwrap().actions(), triv.actions());
        let m = regular_rep(&unit_piece(&h));
        let dd = dual_module(&h, &dual_module(&h, &m).unwrap()).unwrap();
        let g = pivot_action(&h, &m).unwrap();
        let gi = g.inverse().unwrap();
        for i in 0..m.alg.dim() {
            assert_eq!(dd.action(i), &g.matmul(m.action(i)).matmul(&gi));
        }
        let b = build_borel(2, 1);
        let x = GroupElem::new(root_of_unity(4, 1), Cyclo::one());
        let mx = regular_rep(&b.piece(&x).unwrap());
        let d = dual_module(&b, &mx).unwrap();
        assert_eq!(d.grade, b.grade_inv(&x));
        assert_eq!(d.action_failure(), None);
    }

    #[test]
    fn hom_space_examples() {
        let h = build_taft(2);
        let m = regular_rep(&unit_piece(&h));
        let end = hom_space(&m, &m);
        assert_eq!(end.len(), 4);
        assert!(hom_coordinates(&end, &Mat::identity(4)).is_some());
        // End of the regular module is spanned by right multiplications.
        for i in 0..4 {
            let rm = h.alg.right_mul_matrix(&h.alg.basis(i));
            assert!(hom_coordinates(&end, &rm).is_some());
        }
        let covers = projective_covers(&unit_piece(&h)).unwrap();
        for a in &covers {
            for b in &covers {
                assert_eq!(hom_space(&a.module, &b.module).len(), 1);
            }
        }
    }

    #[test]
    fn twist_examples() {
        let h = build_taft(3);
        let piece = unit_piece(&h);
        let m = regular_rep(&piece);
        let eps = h.counit.clone();
        assert_eq!(twist_by_character(&h, &m, &eps).unwrap().actions(), m.actions());
        let alpha = modulus(&h).unwrap();
        let covers = projective_covers(&piece).unwrap();
        for s in 0..3 {
            let tw = twist_by_character(&h, &covers[s].module, &alpha).unwrap();
            assert_eq!(tw.action_failure(), None);
            let prev = &covers[(s + 2) % 3].module;
            assert!(is_intertwiner(&tw, prev, &Mat::identity(3)), "s={s}");
        }
        // φ: A → φ_*(A) is an isomorphism of modules.
        let phi = graded_hook_right(&h, &alpha, &GroupElem::unit()).unwrap();
        let tw = twist_module(&m, &phi);
        assert!(is_intertwiner(&m, &tw, &phi));
        assert!(twist_by_character(&h, &m, &Functional::zero(9)).is_err());
    }

    #[test]
    fn twisted_hom_is_spanned_by_top_to_socle() {
        let r = 3;
        let h = build_taft(r);
        let alpha = modulus(&h).unwrap();
        for cover in projective_covers(&unit_piece(&h)).unwrap() {
            let tw = twist_by_character(&h, &cover.module, &alpha).unwrap();
            let homs = hom_space(&cover.module, &tw);
            assert_eq!(homs.len(), 1);
            let mut expect = Mat::zeros(r, r);
            expect.set(r - 1, 0, Cyclo::one());
            assert!(hom_coordinates(&homs, &expect).is_some());
        }
    }

    #[test]
    fn restriction_to_group_algebra() {
        let r = 3;
        let h = build_taft(r);
        let a = build_cyclic_group_algebra(r);
        let emb = Mat::from_fn(r * r, r, |i, j| if i == taft_index(r, 0, j) { Cyclo::one() } else { Cyclo::zero() });
        let m = regular_rep(&unit_piece(&h));
        let res = restrict(&m, a.alg.clone(), &emb).unwrap();
        assert_eq!(res.action_failure(), None);
        let k = res.action(1);
        for s in 0..r as i64 {
            let shifted = k - &Mat::identity(r * r).scale(&root_of_unity(r as u32, s));
            assert_eq!(r * r - shifted.rank(), r);
        }
        let full = restrict(&m, h.alg.clone(), &Mat::identity(r * r)).unwrap();
        assert_eq!(full.actions(), m.actions());
        let bad = Mat::from_fn(r * r, r, |i, j| if i == taft_index(r, j.min(1), 0) { Cyclo::one() } else { Cyclo::zero() });
        assert!(restrict(&m, a.alg.clone(), &bad).is_err());
        // restricting an intertwiner keeps it an intertwiner
        let rm = h.alg.right_mul_matrix(&h.alg.basis(taft_index(r, 1, 2)));
        assert!(is_intertwiner(&res, &res, &rm));
    }

    #[test]
    fn json_round_trip() {
        let h = build_taft(2);
        let m = regular_rep(&unit_piece(&h));
        let back = ModuleRep::from_json(&m.to_json(), h.alg.clone()).unwrap();
        assert_eq!(back.actions(), m.actions());
    }
}
