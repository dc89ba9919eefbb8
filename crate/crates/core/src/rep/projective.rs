use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{root_of_unity, Cyclo};
use crate::graded::{GroupElem, HopfPiece};
use crate::hopfcore::{AlgebraSpec, Family, Functional};
use crate::linalg::{vec_add, vec_scale, Mat};

use super::ModuleRep;

/// `H e` for an idempotent `e`, with its inclusion into and projection from
/// the regular module.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub index: usize,
    pub idempotent: Vec<Cyclo>,
    pub module: ModuleRep,
    /// `dim H × dim P`, columns are the basis of `H e` inside `H`.
    pub incl: Mat,
    /// `dim P × dim H`, `h ↦ h e` in the basis of `H e`.
    pub proj: Mat,
    /// Character of the simple top `P / (span of basis vectors 1..)`, when
    /// that span is a submodule.
    pub top: Option<Functional>,
}

/// `e_s = (1/r) Σ_i (ζ^s w^{-1} K)^i` for the built-in families, with
/// `w = 1` outside the Borel family.
pub fn primitive_idempotents(piece: &HopfPiece) -> Result<Vec<Vec<Cyclo>>> {
    let (r, zeta, w) = match &piece.family {
        Some(Family::Taft { r }) | Some(Family::Cyclic { r }) => (*r, root_of_unity(*r as u32, 1), Cyclo::one()),
        Some(Family::Borel { r, w, .. }) => (*r, root_of_unity(2 * *r as u32, 2), w.clone()),
        None => return Err(Error::Unsupported("idempotents are only known for built-in families".into())),
    };
    let alg = &piece.alg;
    let winv = w.inv()?;
    let inv_r = Cyclo::from_frac(1, r as i64);
    let es: Vec<Vec<Cyclo>> = (0..r)
        .map(|s| {
            let step = &zeta.pow(s as i64).unwrap() * &winv;
            let mut e = vec![Cyclo::zero(); alg.dim()];
            let mut c = inv_r.clone();
            for slot in e.iter_mut().take(r) {
                *slot = c.clone();
                c = &c * &step;
            }
            e
        })
        .collect();
    verify_idempotents(alg, &es, &w, &zeta)?;
    Ok(es)
}

fn verify_idempotents(alg: &AlgebraSpec, es: &[Vec<Cyclo>], w: &Cyclo, zeta: &Cyclo) -> Result<()> {
    let zero = vec![Cyclo::zero(); alg.dim()];
    let mut sum = zero.clone();
    let k = alg.basis(1.min(alg.dim() - 1));
    for (s, e) in es.iter().enumerate() {
        for (l, f) in es.iter().enumerate() {
            let expect = if s == l { e } else { &zero };
            if &alg.mul(e, f) != expect {
                return Err(Error::Malformed(format!("idempotents {s}, {l} are not orthogonal")));
            }
        }
        let eig = w * &zeta.pow(-(s as i64))?;
        if alg.dim() > 1 && alg.mul(&k, e) != vec_scale(e, &eig) {
            return Err(Error::Malformed(format!("K e_{s} is not a multiple of e_{s}")));
        }
        sum = vec_add(&sum, e);
    }
    if sum != alg.unit() {
        return Err(Error::Malformed("idempotents do not sum to 1".into()));
    }
    Ok(())
}

/// `H e` with basis the independent columns of right multiplication by `e`,
/// taken in basis order. For the built-ins this is `{E^i e}`.
pub fn summand_from_idempotent(grade: GroupElem, alg: Arc<AlgebraSpec>, e: &[Cyclo]) -> Result<(ModuleRep, Mat, Mat)> {
    let re = alg.right_mul_matrix(e);
    let pivots = re.rref().pivots;
    let cols: Vec<Vec<Cyclo>> = pivots.iter().map(|&p| re.col(p)).collect();
    let incl = Mat::from_cols(alg.dim(), &cols);
    let proj = incl.solve(&re).ok().ok_or_else(|| Error::Malformed("element is not idempotent".into()))?;
    let dim = cols.len();
    let action = (0..alg.dim())
        .map(|i| {
            let li = alg.left_mul_matrix(&alg.basis(i));
            incl.solve(&li.matmul(&incl)).ok().expect("H e is a left ideal")
        })
        .collect();
    Ok((ModuleRep::new(grade, alg, dim, action)?, incl, proj))
}

fn top_character(m: &ModuleRep) -> Option<Functional> {
    let d = m.dim();
    let closed = m.actions().iter().all(|a| (1..d).all(|k| a.get(0, k).is_zero()));
    closed.then(|| Functional::new(m.actions().iter().map(|a| a.get(0, 0).clone()).collect()))
}

/// `P_s = H e_s` for a built-in piece; the index is read modulo `r`.
pub fn projective_cover(piece: &HopfPiece, s: i64) -> Result<ProjectiveCover> {
    let es = primitive_idempotents(piece)?;
    let idx = s.rem_euclid(es.len() as i64) as usize;
    cover_from(piece, idx, es[idx].clone())
}

pub fn projective_covers(piece: &HopfPiece) -> Result<Vec<ProjectiveCover>> {
    primitive_idempotents(piece)?.into_iter().enumerate().map(|(s, e)| cover_from(piece, s, e)).collect()
}

fn cover_from(piece: &HopfPiece, index: usize, e: Vec<Cyclo>) -> Result<ProjectiveCover> {
    let (module, incl, proj) = summand_from_idempotent(piece.grade.clone(), piece.alg.clone(), &e)?;
    let top = top_character(&module);
    Ok(ProjectiveCover { index, idempotent: e, module, incl, proj, top })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{build_borel, GradedHopf};
    use crate::hopfcore::{build_cyclic_group_algebra, build_taft, taft_index};
    use crate::rep::{hom_space, is_intertwiner, regular_rep};

    #[test]
    fn taft_idempotents() {
        let h = build_taft(3);
        let piece = h.piece(&GroupElem::unit()).unwrap();
        let es = primitive_idempotents(&piece).unwrap();
        assert_eq!(es.len(), 3);
        assert_eq!(es[0][0], Cyclo::from_frac(1, 3));
    }

    #[test]
    fn borel_idempotents() {
        let b = build_borel(2, 0);
        for g in [GroupElem::new(Cyclo::one(), Cyclo::one()), GroupElem::new(root_of_unity(4, 1), Cyclo::zero())] {
            let es = primitive_idempotents(&b.piece(&g).unwrap()).unwrap();
            assert_eq!(es.len(), 2);
        }
    }

    #[test]
    fn covers_are_retracts() {
        let r = 3;
        let h = build_taft(r);
        let piece = h.piece(&GroupElem::unit()).unwrap();
        let reg = regular_rep(&piece);
        let zeta = root_of_unity(r as u32, 1);
        for c in projective_covers(&piece).unwrap() {
            assert_eq!(c.module.dim(), r);
            assert_eq!(c.module.action_failure(), None);
            assert_eq!(c.proj.matmul(&c.incl), Mat::identity(r));
            assert_eq!(c.incl.matmul(&c.proj), h.alg.right_mul_matrix(&c.idempotent));
            assert!(is_intertwiner(&c.module, &reg, &c.incl));
            assert!(is_intertwiner(&reg, &c.module, &c.proj));
            // basis E^i e_s
            for i in 0..r {
                let ei = h.alg.basis(taft_index(r, i, 0));
                assert_eq!(c.incl.col(i), h.alg.mul(&ei, &c.idempotent));
            }
            let top = c.top.unwrap();
            assert!(top.at(taft_index(r, 1, 0)).is_zero());
            assert_eq!(top.at(taft_index(r, 0, 1)), &zeta.pow(-(c.index as i64)).unwrap());
        }
    }

    #[test]
    fn sum_of_covers_is_regular() {
        let r = 2;
        let h = build_taft(r);
        let piece = h.piece(&GroupElem::unit()).unwrap();
        let reg = regular_rep(&piece);
        let covers = projective_covers(&piece).unwrap();
        assert_eq!(covers.iter().map(|c| c.module.dim()).sum::<usize>(), reg.dim());
        let end_reg = hom_space(&reg, &reg).len();
        let mut end_sum = 0;
        for a in &covers {
            for b in &covers {
                end_sum += hom_space(&a.module, &b.module).len();
            }
        }
        assert_eq!(end_reg, end_sum);
    }

    #[test]
    fn cyclic_covers_are_one_dimensional() {
        let h = build_cyclic_group_algebra(4);
        let covers = projective_covers(&h.piece(&GroupElem::unit()).unwrap()).unwrap();
        assert!(covers.iter().all(|c| c.module.dim() == 1));
    }

    #[test]
    fn unsupported_family() {
        let mut h = build_taft(2);
        h.family = None;
        assert!(primitive_idempotents(&h.piece(&GroupElem::unit()).unwrap()).is_err());
    }
}
