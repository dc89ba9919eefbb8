use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::graded::GradedHopf;
use crate::linalg::Mat;
use crate::report::Report;

use super::{dual_module, intertwiner_failure, tensor_module, trivial_module, ModuleRep};

/// Evaluations and coevaluations of a module `V` at grade `x`:
/// `ev: V*⊗V → 1`, `coev: 1 → V⊗V*`, `ẽv: V⊗V* → 1`, `c̃oev: 1 → V*⊗V`.
#[derive(Clone, Debug)]
pub struct DualityMaps {
    pub dim: usize,
    pub dual: ModuleRep,
    pub ev: Mat,
    pub coev: Mat,
    pub ev_tilde: Mat,
    pub coev_tilde: Mat,
}

/// `ρ(g_x)` for the pivot of the piece the module lives over.
pub fn pivot_action(h: &dyn GradedHopf, m: &ModuleRep) -> Result<Mat> {
    let piece = h.piece(&m.grade)?;
    Ok(m.act(piece.pivot()?))
}

pub fn duality_maps(h: &dyn GradedHopf, v: &ModuleRep) -> Result<DualityMaps> {
    let d = v.dim();
    let g = pivot_action(h, v)?;
    let ginv = g.inverse().ok_or(Error::Malformed("pivot acts non-invertibly".into()))?;
    let delta = |a: usize, b: usize| if a == b { Cyclo::one() } else { Cyclo::zero() };
    let ev = Mat::from_fn(1, d * d, |_, idx| delta(idx / d, idx % d));
    let coev = Mat::from_fn(d * d, 1, |idx, _| delta(idx / d, idx % d));
    let ev_tilde = Mat::from_fn(1, d * d, |_, idx| g.get(idx % d, idx / d).clone());
    let coev_tilde = Mat::from_fn(d * d, 1, |idx, _| ginv.get(idx % d, idx / d).clone());
    Ok(DualityMaps { dim: d, dual: dual_module(h, v)?, ev, coev, ev_tilde, coev_tilde })
}

/// Intertwiner property of all four maps and the four zig-zag identities.
pub fn check_duality_maps(h: &dyn GradedHopf, v: &ModuleRep, maps: &DualityMaps) -> Result<Report> {
    let mut rep = Report::new();
    let one = trivial_module(h)?;
    let vd = &maps.dual;
    let v_vd = tensor_module(h, v, vd)?;
    let vd_v = tensor_module(h, vd, v)?;
    let ctx = format!("module of dim {} at {}", maps.dim, v.grade);
    let cases = [
        ("ev-intertwiner", &vd_v, &one, &maps.ev),
        ("coev-intertwiner", &one, &v_vd, &maps.coev),
        ("ev-tilde-intertwiner", &v_vd, &one, &maps.ev_tilde),
        ("coev-tilde-intertwiner", &one, &vd_v, &maps.coev_tilde),
    ];
    for (name, src, dst, mat) in cases {
        rep.push(name, intertwiner_failure(src, dst, mat).map(|b| vec![b]), ctx.clone());
    }
    let d = maps.dim;
    let id = Mat::identity(d);
    let zig = [
        ("zigzag-ev-coev-v", Mat::identity(d).kron(&maps.ev).matmul(&maps.coev.kron(&id))),
        ("zigzag-ev-coev-dual", maps.ev.kron(&id).matmul(&id.kron(&maps.coev))),
        ("zigzag-tilde-v", maps.ev_tilde.kron(&id).matmul(&id.kron(&maps.coev_tilde))),
        ("zigzag-tilde-dual", id.kron(&maps.ev_tilde).matmul(&maps.coev_tilde.kron(&id))),
    ];
    for (name, m) in zig {
        rep.record(name, m == id, ctx.clone());
    }
    Ok(rep)
}

fn split(total: usize, d: usize, what: &str) -> Result<usize> {
    if d == 0 || !total.is_multiple_of(d) {
        return Err(Error::Shape(format!("{what}: dimension {total} is not a multiple of {d}")));
    }
    Ok(total / d)
}

/// `d^∩: Hom(W, U⊗V) → Hom(W⊗V*, U)`, `f ↦ (id_U ⊗ ẽv_V)(f ⊗ id_{V*})`.
pub fn d_cap_right(v: &DualityMaps, f: &Mat) -> Result<Mat> {
    let du = split(f.rows(), v.dim, "d_cap_right")?;
    Ok(Mat::identity(du).kron(&v.ev_tilde).matmul(&f.kron(&Mat::identity(v.dim))))
}

/// Inverse of [`d_cap_right`]: `k ↦ (k ⊗ id_V)(id_W ⊗ c̃oev_V)`.
pub fn d_cap_right_inv(v: &DualityMaps, k: &Mat) -> Result<Mat> {
    let dw = split(k.cols(), v.dim, "d_cap_right_inv")?;
    Ok(k.kron(&Mat::identity(v.dim)).matmul(&Mat::identity(dw).kron(&v.coev_tilde)))
}

/// `d_∪: Hom(U⊗V, W) → Hom(U, W⊗V*)`, `f ↦ (f ⊗ id_{V*})(id_U ⊗ coev_V)`.
pub fn d_cup_right(v: &DualityMaps, f: &Mat) -> Result<Mat> {
    let du = split(f.cols(), v.dim, "d_cup_right")?;
    Ok(f.kron(&Mat::identity(v.dim)).matmul(&Mat::identity(du).kron(&v.coev)))
}

/// Inverse of [`d_cup_right`]: `k ↦ (id_W ⊗ ev_V)(k ⊗ id_V)`.
pub fn d_cup_right_inv(v: &DualityMaps, k: &Mat) -> Result<Mat> {
    let dw = split(k.rows(), v.dim, "d_cup_right_inv")?;
    Ok(Mat::identity(dw).kron(&v.ev).matmul(&k.kron(&Mat::identity(v.dim))))
}

/// `^∩d: Hom(W, V⊗U) → Hom(V*⊗W, U)`, `f ↦ (ev_V ⊗ id_U)(id_{V*} ⊗ f)`.
pub fn d_cap_left(v: &DualityMaps, f: &Mat) -> Result<Mat> {
    let du = split(f.rows(), v.dim, "d_cap_left")?;
    Ok(v.ev.kron(&Mat::identity(du)).matmul(&Mat::identity(v.dim).kron(f)))
}

/// Inverse of [`d_cap_left`]: `k ↦ (id_V ⊗ k)(coev_V ⊗ id_W)`.
pub fn d_cap_left_inv(v: &DualityMaps, k: &Mat) -> Result<Mat> {
    let dw = split(k.cols(), v.dim, "d_cap_left_inv")?;
    Ok(Mat::identity(v.dim).kron(k).matmul(&v.coev.kron(&Mat::identity(dw))))
}

/// `_∪d: Hom(V⊗U, W) → Hom(U, V*⊗W)`, `f ↦ (id_{V*} ⊗ f)(c̃oev_V ⊗ id_U)`.
pub fn d_cup_left(v: &DualityMaps, f: &Mat) -> Result<Mat> {
    let du = split(f.cols(), v.dim, "d_cup_left")?;
    Ok(Mat::identity(v.dim).kron(f).matmul(&v.coev_tilde.kron(&Mat::identity(du))))
}

/// Inverse of [`d_cup_left`]: `k ↦ (ẽv_V ⊗ id_W)(id_V ⊗ k)`.
pub fn d_cup_left_inv(v: &DualityMaps, k: &Mat) -> Result<Mat> {
    let dw = split(k.rows(), v.dim, "d_cup_left_inv")?;
    Ok(v.ev_tilde.kron(&Mat::identity(dw)).matmul(&Mat::identity(v.dim).kron(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::root_of_unity;
    use crate::graded::{build_borel, GroupElem};
    use crate::hopfcore::build_taft;
    use crate::rep::{hom_space, is_intertwiner, projective_covers, regular_rep};
    use proptest::prelude::*;

    #[test]
    fn maps_on_builtins() {
        for r in 2..=3 {
            let h = build_taft(r);
            let piece = h.piece(&GroupElem::unit()).unwrap();
            let mut mods: Vec<ModuleRep> = projective_covers(&piece).unwrap().into_iter().map(|c| c.module).collect();
            mods.push(regular_rep(&piece));
            mods.push(trivial_module(&h).unwrap());
            for m in &mods {
                let maps = duality_maps(&h, m).unwrap();
                let rep = check_duality_maps(&h, m, &maps).unwrap();
                assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn maps_on_borel_grade() {
        let b = build_borel(2, 1);
        let x = GroupElem::new(root_of_unity(4, 1), Cyclo::one());
        let m = regular_rep(&b.piece(&x).unwrap());
        let maps = duality_maps(&b, &m).unwrap();
        assert!(check_duality_maps(&b, &m, &maps).unwrap().passed());
    }

    #[test]
    fn loops_on_trivial_and_regular() {
        let h = build_taft(3);
        let t = trivial_module(&h).unwrap();
        let maps = duality_maps(&h, &t).unwrap();
        assert!(maps.ev.matmul(&maps.coev_tilde).get(0, 0).is_one());
        assert!(maps.ev_tilde.matmul(&maps.coev).get(0, 0).is_one());
        let m = regular_rep(&h.piece(&GroupElem::unit()).unwrap());
        let maps = duality_maps(&h, &m).unwrap();
        let dim = maps.ev_tilde.matmul(&maps.coev).get(0, 0).clone();
        assert_eq!(dim, pivot_action(&h, &m).unwrap().trace());
        assert!(dim.is_zero());
        let dim2 = maps.ev.matmul(&maps.coev_tilde).get(0, 0).clone();
        assert_eq!(dim2, pivot_action(&h, &m).unwrap().inverse().unwrap().trace());
    }

    fn small_entries(n: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-3i64..4, n)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn isos_are_mutually_inverse(e in small_entries(16)) {
            let h = build_taft(2);
            let piece = h.piece(&GroupElem::unit()).unwrap();
            let v = projective_covers(&piece).unwrap().remove(0).module;
            let maps = duality_maps(&h, &v).unwrap();
            // U = W = V as vector spaces; the isos are linear-algebraic.
            let f = Mat::from_fn(4, 2, |i, j| Cyclo::from_int(e[i * 2 + j]));
            let g = Mat::from_fn(2, 4, |i, j| Cyclo::from_int(e[8 + i * 4 + j]));
            prop_assert_eq!(d_cap_right_inv(&maps, &d_cap_right(&maps, &f).unwrap()).unwrap(), f.clone());
            prop_assert_eq!(d_cup_right_inv(&maps, &d_cup_right(&maps, &g).unwrap()).unwrap(), g.clone());
            prop_assert_eq!(d_cap_left_inv(&maps, &d_cap_left(&maps, &f).unwrap()).unwrap(), f);
            prop_assert_eq!(d_cup_left_inv(&maps, &d_cup_left(&maps, &g).unwrap()).unwrap(), g);
            let k = Mat::from_fn(2, 4, |i, j| Cyclo::from_int(e[i * 4 + j]));
            prop_assert_eq!(d_cap_right(&maps, &d_cap_right_inv(&maps, &k).unwrap()).unwrap(), k);
        }
    }

    #[test]
    fn identity_goes_to_coevaluation() {
        let h = build_taft(2);
        let piece = h.piece(&GroupElem::unit()).unwrap();
        let covers = projective_covers(&piece).unwrap();
        let (u, v) = (&covers[0].module, &covers[1].module);
        let maps = duality_maps(&h, v).unwrap();
        let uv = tensor_module(&h, u, v).unwrap();
        let out = d_cup_right(&maps, &Mat::identity(uv.dim())).unwrap();
        assert_eq!(out, Mat::identity(u.dim()).kron(&maps.coev).matmul(&Mat::identity(u.dim())));
        // images of intertwiners are intertwiners
        let w_vd = tensor_module(&h, &uv, &maps.dual).unwrap();
        assert!(is_intertwiner(u, &w_vd, &out));
    }

    #[test]
    fn naturality_in_f() {
        let h = build_taft(2);
        let piece = h.piece(&GroupElem::unit()).unwrap();
        let covers = projective_covers(&piece).unwrap();
        let (u, v) = (&covers[0].module, &covers[1].module);
        let maps = duality_maps(&h, v).unwrap();
        let uv = tensor_module(&h, u, v).unwrap();
        let reg = regular_rep(&piece);
        let fs = hom_space(&uv, &reg);
        let gs = hom_space(&reg, &reg);
        for f in &fs {
            for g in &gs {
                let lhs = d_cup_right(&maps, &g.matmul(f)).unwrap();
                let rhs = g.kron(&Mat::identity(v.dim())).matmul(&d_cup_right(&maps, f).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }
}
