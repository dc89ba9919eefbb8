use crate::error::{Error, Result};
use crate::exactnum::{root_of_unity, Cyclo};
use crate::linalg::{normalize_first_nonzero, proportionality, vec_scale, Mat};

use super::{AlgebraSpec, Coproduct, Family, Functional, HopfSpec};

fn one_dim(mut basis: Vec<Vec<Cyclo>>, what: &str) -> Result<Vec<Cyclo>> {
    if basis.len() != 1 {
        return Err(Error::Malformed(format!("space of {what} has dimension {}, expected 1", basis.len())));
    }
    Ok(basis.pop().unwrap())
}

fn canonical_nullspace(rows: Vec<Vec<Cyclo>>, unknowns: usize) -> Vec<Vec<Cyclo>> {
    let m = if rows.is_empty() { Mat::zeros(0, unknowns) } else { Mat::from_rows(rows) };
    let n = m.nullspace();
    n.columns().iter().map(|c| normalize_first_nonzero(c)).collect()
}

/// Rows of the system `(μ ⊗ id)Δ(b_i) = μ(b_i)·1` in the unknowns `μ`.
pub(crate) fn right_integral_rows(delta: &Coproduct, unit: &[Cyclo]) -> Vec<Vec<Cyclo>> {
    let (d, dr) = (delta.left_dim, delta.right_dim);
    let mut rows = Vec::new();
    for (i, terms) in delta.terms.iter().enumerate() {
        let mut block = vec![vec![Cyclo::zero(); d]; dr];
        for (j, k, c) in terms {
            block[*k][*j] += c;
        }
        for (k, row) in block.iter_mut().enumerate() {
            if !unit[k].is_zero() {
                row[i] -= &unit[k];
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())));
    }
    rows
}

/// Canonical basis of the right integrals `(μ ⊗ id)Δ = μ(−)1`.
pub fn right_integrals(h: &HopfSpec) -> Result<Vec<Functional>> {
    let basis = canonical_nullspace(right_integral_rows(&h.delta, h.alg.unit()), h.dim());
    let out: Vec<Functional> = basis.into_iter().map(Functional::new).collect();
    if out.len() != 1 {
        return Err(Error::Malformed(format!("space of right integrals has dimension {}", out.len())));
    }
    Ok(out)
}

/// Canonical basis of the left integrals `(id ⊗ μ)Δ = μ(−)1`.
pub fn left_integrals(h: &HopfSpec) -> Result<Vec<Functional>> {
    let basis = canonical_nullspace(right_integral_rows(&h.delta.swapped(), h.alg.unit()), h.dim());
    let out: Vec<Functional> = basis.into_iter().map(Functional::new).collect();
    if out.len() != 1 {
        return Err(Error::Malformed(format!("space of left integrals has dimension {}", out.len())));
    }
    Ok(out)
}

pub(crate) fn right_integral(h: &HopfSpec) -> Result<Functional> {
    Ok(right_integrals(h)?.remove(0))
}

fn cointegral(h: &HopfSpec, left: bool) -> Result<Vec<Cyclo>> {
    let d = h.dim();
    let mut sys = Mat::zeros(0, d);
    for g in h.alg.generators() {
        let b = h.alg.basis(g);
        let m = if left { h.alg.left_mul_matrix(&b) } else { h.alg.right_mul_matrix(&b) };
        sys = sys.vstack(&(&m - &Mat::identity(d).scale(h.counit.at(g))));
    }
    let basis: Vec<Vec<Cyclo>> = sys.nullspace().columns().iter().map(|c| normalize_first_nonzero(c)).collect();
    one_dim(basis, if left { "left cointegrals" } else { "right cointegrals" })
}

/// The left cointegral `c` with `a·c = ε(a)c`, first nonzero coordinate 1.
pub fn left_cointegral(h: &HopfSpec) -> Result<Vec<Cyclo>> {
    cointegral(h, true)
}

/// The right cointegral `c` with `c·a = ε(a)c`, first nonzero coordinate 1.
pub fn right_cointegral(h: &HopfSpec) -> Result<Vec<Cyclo>> {
    cointegral(h, false)
}

pub fn is_group_like(alg: &AlgebraSpec, nu: &Functional) -> bool {
    if nu.eval(alg.unit()) != Cyclo::one() {
        return false;
    }
    let d = alg.dim();
    (0..d).all(|i| (0..d).all(|j| nu.eval(&alg.mul(&alg.basis(i), &alg.basis(j))) == nu.at(i) * nu.at(j)))
}

/// The modulus `α`: `c·a = α(a)c` for the left cointegral `c`.
pub fn modulus(h: &HopfSpec) -> Result<Functional> {
    let c = left_cointegral(h)?;
    let mut coeffs = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let ca = h.alg.mul(&c, &h.alg.basis(i));
        let v = proportionality(&ca, &c).ok_or_else(|| Error::Malformed("c·a is not a multiple of c".into()))?;
        coeffs.push(v);
    }
    let alpha = Functional::new(coeffs);
    if !is_group_like(&h.alg, &alpha) {
        return Err(Error::NotGroupLike);
    }
    Ok(alpha)
}

/// The comodulus `a`: `(id ⊗ μ)Δ(h) = μ(h)·a`, checked group-like.
pub fn comodulus(h: &HopfSpec) -> Result<Vec<Cyclo>> {
    let mu = right_integral(h)?;
    let i0 = (0..h.dim()).find(|&i| !mu.at(i).is_zero()).expect("integral is nonzero");
    let a = vec_scale(&h.delta.contract_right(&mu.coeffs, &h.alg.basis(i0)), &mu.at(i0).inv()?);
    for i in 0..h.dim() {
        let lhs = h.delta.contract_right(&mu.coeffs, &h.alg.basis(i));
        if lhs != vec_scale(&a, mu.at(i)) {
            return Err(Error::Malformed(format!("comodulus relation fails at basis {i}")));
        }
    }
    let d = h.dim();
    let da = h.delta.apply(&a);
    let aa: Vec<Cyclo> = (0..d * d).map(|idx| &a[idx / d] * &a[idx % d]).collect();
    if da != aa || h.counit.eval(&a) != Cyclo::one() {
        return Err(Error::NotGroupLike);
    }
    Ok(a)
}

/// Matrix of `R(ν)(a) = ν(a₁)a₂` for a coproduct `H → H' ⊗ H''`.
pub fn hook_right_of(delta: &Coproduct, nu: &[Cyclo]) -> Mat {
    let cols: Vec<Vec<Cyclo>> = (0..delta.src_dim)
        .map(|i| {
            let mut e = vec![Cyclo::zero(); delta.src_dim];
            e[i] = Cyclo::one();
            delta.contract_left(nu, &e)
        })
        .collect();
    Mat::from_cols(delta.right_dim, &cols)
}

pub fn hook_left_of(delta: &Coproduct, nu: &[Cyclo]) -> Mat {
    hook_right_of(&delta.swapped(), nu)
}

/// `R(ν)(a) = ν(a₁)a₂`.
pub fn hook_right(h: &HopfSpec, nu: &Functional) -> Mat {
    hook_right_of(&h.delta, &nu.coeffs)
}

/// `L(ν)(a) = a₁ν(a₂)`.
pub fn hook_left(h: &HopfSpec, nu: &Functional) -> Mat {
    hook_left_of(&h.delta, &nu.coeffs)
}

/// `(ν * ν')(a) = ν(a₁)ν'(a₂)`.
pub fn convolution(h: &HopfSpec, nu: &Functional, nu2: &Functional) -> Functional {
    Functional::new(
        h.delta
            .terms
            .iter()
            .map(|t| t.iter().map(|(j, k, c)| &(c * nu.at(*j)) * nu2.at(*k)).sum())
            .collect(),
    )
}

/// Convolution inverse of a group-like functional, `ν∘S`.
pub fn inverse_character(h: &HopfSpec, nu: &Functional) -> Functional {
    nu.compose(&h.antipode)
}

/// `μ̂(a) = μ(g·a)` for the canonical right integral `μ`.
pub fn symmetrised_integral(h: &HopfSpec) -> Result<Functional> {
    let g = h.pivot()?;
    let mu = right_integral(h)?;
    Ok(mu.compose(&h.alg.left_mul_matrix(g)))
}

/// First basis pair `(i, j)` with `λ(b_i b_j) ≠ λ(φ(b_j) b_i)`.
pub fn twisted_cyclicity_defect(alg: &AlgebraSpec, lambda: &Functional, phi: &Mat) -> Option<(usize, usize)> {
    let d = alg.dim();
    for i in 0..d {
        let bi = alg.basis(i);
        for j in 0..d {
            let lhs = lambda.eval(&alg.mul(&bi, &alg.basis(j)));
            let rhs = lambda.eval(&alg.mul(&phi.col(j), &bi));
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

/// The group-like functionals of a built-in family that are diagonal in the
/// monomial basis: `E ↦ 0`, `K ↦ ζ^k`.
pub fn characters_diagonal(h: &HopfSpec) -> Result<Vec<Functional>> {
    match h.family {
        Some(Family::Taft { r }) => {
            let zeta = root_of_unity(r as u32, 1);
            Ok((0..r)
                .map(|k| {
                    Functional::new(
                        (0..r * r)
                            .map(|idx| if idx < r { zeta.pow((k * idx) as i64).unwrap() } else { Cyclo::zero() })
                            .collect(),
                    )
                })
                .collect())
        }
        Some(Family::Cyclic { r }) => {
            let zeta = root_of_unity(r as u32, 1);
            Ok((0..r).map(|k| Functional::new((0..r).map(|j| zeta.pow((k * j) as i64).unwrap()).collect())).collect())
        }
        _ => Err(Error::Unsupported("characters are only listed for the Taft and cyclic families".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{build_cyclic_group_algebra, build_taft, taft_index};

    fn delta_fn(r: usize, a: usize, b: usize) -> Vec<Cyclo> {
        let mut v = vec![Cyclo::zero(); r * r];
        v[taft_index(r, a, b)] = Cyclo::one();
        v
    }

    #[test]
    fn taft_right_integral_is_top_times_k() {
        for r in 2..=4 {
            let h = build_taft(r);
            let mu = right_integrals(&h).unwrap();
            assert_eq!(mu.len(), 1);
            assert_eq!(mu[0].coeffs, delta_fn(r, r - 1, 1), "r={r}");
        }
    }

    #[test]
    fn cyclic_integrals() {
        for r in 1..=5 {
            let h = build_cyclic_group_algebra(r);
            let mut e0 = vec![Cyclo::zero(); r];
            e0[0] = Cyclo::one();
            // oracle: the defining system at the identity forces μ(K^j) = δ_{j0}
            assert_eq!(right_integrals(&h).unwrap()[0].coeffs, e0);
            assert_eq!(left_integrals(&h).unwrap()[0].coeffs, e0);
            assert_eq!(left_cointegral(&h).unwrap(), vec![Cyclo::one(); r]);
            assert_eq!(modulus(&h).unwrap(), h.counit);
            assert_eq!(comodulus(&h).unwrap(), h.alg.unit().to_vec());
        }
    }

    #[test]
    fn left_integral_satisfies_defining_relation() {
        for r in 2..=3 {
            let h = build_taft(r);
            let ml = &left_integrals(&h).unwrap()[0];
            for i in 0..h.dim() {
                let lhs = h.delta.contract_right(&ml.coeffs, &h.alg.basis(i));
                assert_eq!(lhs, vec_scale(h.alg.unit(), ml.at(i)));
            }
        }
        let h = build_taft(3);
        assert_ne!(left_integrals(&h).unwrap()[0], right_integrals(&h).unwrap()[0]);
    }

    #[test]
    fn taft_cointegral_and_modulus() {
        for r in 2..=4 {
            let h = build_taft(r);
            let zeta = root_of_unity(r as u32, 1);
            let c = left_cointegral(&h).unwrap();
            // E^{r−1} Σ ζ^{−i} K^i
            let expect: Vec<Cyclo> = (0..r * r)
                .map(|idx| if idx / r == r - 1 { zeta.pow(-((idx % r) as i64)).unwrap() } else { Cyclo::zero() })
                .collect();
            assert!(proportionality(&c, &expect).is_some(), "r={r}");
            let alpha = modulus(&h).unwrap();
            assert_eq!(alpha.at(taft_index(r, 0, 1)), &zeta);
            assert!(alpha.at(taft_index(r, 1, 0)).is_zero());
            assert_ne!(alpha, h.counit);
            let rc = right_cointegral(&h).unwrap();
            assert!(proportionality(&rc, &c).is_none());
        }
    }

    #[test]
    fn sweedler_comodulus_is_k() {
        let h = build_taft(2);
        assert_eq!(comodulus(&h).unwrap(), delta_fn(2, 0, 1));
    }

    #[test]
    fn hook_actions() {
        let h = build_taft(3);
        assert_eq!(hook_right(&h, &h.counit), Mat::identity(9));
        let alpha = modulus(&h).unwrap();
        let ra = hook_right(&h, &alpha);
        let zeta = root_of_unity(3, 1);
        assert_eq!(ra.col(taft_index(3, 1, 0)), delta_fn(3, 1, 0));
        assert_eq!(ra.col(taft_index(3, 0, 1)), vec_scale(&delta_fn(3, 0, 1), &zeta));
        let chars = characters_diagonal(&h).unwrap();
        for a in &chars {
            for b in &chars {
                let lhs = &hook_right(&h, a) * &hook_right(&h, b);
                assert_eq!(lhs, hook_right(&h, &convolution(&h, b, a)));
            }
        }
    }

    #[test]
    fn characters_are_algebra_maps() {
        let h = build_taft(3);
        let chars = characters_diagonal(&h).unwrap();
        assert_eq!(chars.len(), 3);
        // oracle: E is nilpotent so ν(E) = 0, and ν(K)^3 = 1
        for nu in &chars {
            assert!(is_group_like(&h.alg, nu));
            assert!(nu.at(taft_index(3, 1, 0)).is_zero());
            assert!(nu.at(1).pow(3).unwrap().is_one());
        }
        assert_eq!(characters_diagonal(&build_cyclic_group_algebra(4)).unwrap().len(), 4);
    }

    #[test]
    fn symmetrised_integral_shape() {
        for r in 2..=4 {
            let h = build_taft(r);
            let mh = symmetrised_integral(&h).unwrap();
            let support: Vec<usize> = (0..r * r).filter(|&i| !mh.at(i).is_zero()).collect();
            assert_eq!(support, vec![taft_index(r, r - 1, 0)]);
            let alpha = modulus(&h).unwrap();
            assert_eq!(twisted_cyclicity_defect(&h.alg, &mh, &hook_right(&h, &alpha)), None);
            assert!(twisted_cyclicity_defect(&h.alg, &mh, &Mat::identity(r * r)).is_some());
        }
        let c = build_cyclic_group_algebra(3);
        assert_eq!(symmetrised_integral(&c).unwrap(), right_integral(&c).unwrap());
    }
}
