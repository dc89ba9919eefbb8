use crate::exactnum::{q_binomial, root_of_unity, Cyclo};
use crate::linalg::Mat;

use super::{AlgebraSpec, Coproduct, Family, Functional, HopfSpec};

/// Position of `E^i K^j` in the `(i, j)`-sorted basis.
pub fn taft_index(r: usize, i: usize, j: usize) -> usize {
    i * r + j
}

fn monomial_label(i: usize, j: usize) -> String {
    let e = match i {
        0 => String::new(),
        1 => "E".to_string(),
        _ => format!("E^{i}"),
    };
    let k = match j {
        0 => String::new(),
        1 => "K".to_string(),
        _ => format!("K^{j}"),
    };
    if e.is_empty() && k.is_empty() {
        "1".to_string()
    } else {
        e + &k
    }
}

/// Reduces `K^m` for any integer `m` to `z^f K^{m mod r}`, returning the
/// exponent and the scalar.
fn reduce_k(r: usize, m: i64, z: &Cyclo) -> (usize, Cyclo) {
    let r = r as i64;
    let f = m.div_euclid(r);
    let c = z.pow(f).expect("grade parameter z is nonzero");
    (m.rem_euclid(r) as usize, c)
}

/// The r²-dimensional algebra on `E^i K^j` with `KE = ζEK`, `K^r = z`,
/// `E^r = x`.
pub fn borel_piece_algebra(r: usize, zeta: &Cyclo, z: &Cyclo, x: &Cyclo) -> AlgebraSpec {
    let d = r * r;
    let zeta_pows: Vec<Cyclo> = (0..r).map(|k| zeta.pow(k as i64).unwrap()).collect();
    let mut labels = Vec::with_capacity(d);
    for i in 0..r {
        for j in 0..r {
            labels.push(monomial_label(i, j));
        }
    }
    let mut mul = vec![Vec::new(); d * d];
    for (a, b, c, dd) in itertools4(r) {
        let mut coef = zeta_pows[(b * c) % r].clone();
        let mut e = a + c;
        if e >= r {
            coef = &coef * x;
            e -= r;
        }
        let (k, zc) = reduce_k(r, (b + dd) as i64, z);
        coef = &coef * &zc;
        if !coef.is_zero() {
            mul[taft_index(r, a, b) * d + taft_index(r, c, dd)].push((taft_index(r, e, k), coef));
        }
    }
    let mut unit = vec![Cyclo::zero(); d];
    unit[0] = Cyclo::one();
    let generators = if r > 1 { vec![taft_index(r, 1, 0), taft_index(r, 0, 1)] } else { vec![] };
    AlgebraSpec::new(labels, unit, mul, generators).expect("borel piece tables are well formed")
}

fn itertools4(r: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..r).flat_map(move |a| (0..r).flat_map(move |b| (0..r).flat_map(move |c| (0..r).map(move |d| (a, b, c, d)))))
}

/// `Δ(E^i K^j) = Σ_l [i l]_ζ E^l K^j ⊗ E^{i−l} K^{l+j}`, with the right factor
/// reduced by `K^r = z_right`.
pub fn borel_coproduct(r: usize, zeta: &Cyclo, z_right: &Cyclo) -> Coproduct {
    let mut terms = Vec::with_capacity(r * r);
    for i in 0..r {
        let binoms: Vec<Cyclo> = (0..=i).map(|l| q_binomial(i, l, zeta)).collect();
        for j in 0..r {
            let mut t = Vec::new();
            for (l, c) in binoms.iter().enumerate() {
                let (k, zc) = reduce_k(r, (l + j) as i64, z_right);
                t.push((taft_index(r, l, j), taft_index(r, i - l, k), c * &zc));
            }
            terms.push(t);
        }
    }
    Coproduct::new(r * r, r * r, terms)
}

/// Antipode out of the piece with `K^r = z_src`:
/// `S(E^i K^j) = (−1)^i ζ^{−ij − i(i−1)/2} E^i K^{−i−j}`, landing in the piece
/// with `K^r = z_src^{-1}`.
pub fn borel_antipode(r: usize, zeta: &Cyclo, z_src: &Cyclo) -> Mat {
    let d = r * r;
    let z_target = z_src.inv().expect("z is nonzero");
    let mut s = Mat::zeros(d, d);
    for i in 0..r {
        for j in 0..r {
            let e = -((i * j) as i64) - (i * i.saturating_sub(1) / 2) as i64;
            let mut c = zeta.pow(e).unwrap();
            if i % 2 == 1 {
                c = -c;
            }
            let (k, zc) = reduce_k(r, -((i + j) as i64), &z_target);
            s.set(taft_index(r, i, k), taft_index(r, i, j), &c * &zc);
        }
    }
    s
}

pub(crate) fn borel_counit(r: usize) -> Functional {
    Functional::new((0..r * r).map(|idx| if idx < r { Cyclo::one() } else { Cyclo::zero() }).collect())
}

/// Taft algebra `T_r`: `E^r = 0`, `K^r = 1`, `KE = ζEK` with `ζ = ζ_r`, pivot `K`.
pub fn build_taft(r: usize) -> HopfSpec {
    assert!(r >= 2, "Taft algebra needs r >= 2");
    let zeta = root_of_unity(r as u32, 1);
    let one = Cyclo::one();
    let alg = borel_piece_algebra(r, &zeta, &one, &Cyclo::zero());
    let delta = borel_coproduct(r, &zeta, &one);
    let antipode = borel_antipode(r, &zeta, &one);
    let pivot = alg.basis(taft_index(r, 0, 1));
    let mut h = HopfSpec::new(alg, delta, borel_counit(r), antipode, Some(pivot)).expect("taft spec");
    h.family = Some(Family::Taft { r });
    h
}

/// Group algebra of ℤ/r on `K^j`, with pivot 1.
pub fn build_cyclic_group_algebra(r: usize) -> HopfSpec {
    assert!(r >= 1);
    let labels: Vec<String> = (0..r).map(|j| monomial_label(0, j)).collect();
    let mut mul = vec![Vec::new(); r * r];
    for a in 0..r {
        for b in 0..r {
            mul[a * r + b].push(((a + b) % r, Cyclo::one()));
        }
    }
    let mut unit = vec![Cyclo::zero(); r];
    unit[0] = Cyclo::one();
    let generators = if r > 1 { vec![1] } else { vec![] };
    let alg = AlgebraSpec::new(labels, unit.clone(), mul, generators).expect("cyclic tables");
    let delta = Coproduct::new(r, r, (0..r).map(|j| vec![(j, j, Cyclo::one())]).collect());
    let antipode = Mat::from_fn(r, r, |i, j| if i == (r - j) % r { Cyclo::one() } else { Cyclo::zero() });
    let counit = Functional::new(vec![Cyclo::one(); r]);
    let mut h = HopfSpec::new(alg, delta, counit, antipode, Some(unit)).expect("cyclic spec");
    h.family = Some(Family::Cyclic { r });
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn taft_relations() {
        for r in 2..=4 {
            let h = build_taft(r);
            let zeta = root_of_unity(r as u32, 1);
            let e = h.alg.basis(taft_index(r, 1, 0));
            let k = h.alg.basis(taft_index(r, 0, 1));
            let ke = h.alg.mul(&k, &e);
            let ek = h.alg.mul(&e, &k);
            assert_eq!(ke, crate::linalg::vec_scale(&ek, &zeta));
            assert!(h.alg.pow(&e, r).iter().all(Cyclo::is_zero));
            assert_eq!(h.alg.pow(&k, r), h.alg.unit().to_vec());
        }
    }

    #[test]
    fn taft_coproduct_and_antipode_of_e() {
        let r = 3;
        let h = build_taft(r);
        let d = r * r;
        let de = h.delta.apply(&h.alg.basis(taft_index(r, 1, 0)));
        let mut expect = vec![Cyclo::zero(); d * d];
        expect[taft_index(r, 1, 0)] = Cyclo::one(); // 1 ⊗ E
        expect[taft_index(r, 1, 0) * d + taft_index(r, 0, 1)] = Cyclo::one(); // E ⊗ K
        assert_eq!(de, expect);
        // S(E) = −E K^{-1} = −E K^{r-1}
        let se = h.antipode.col(taft_index(r, 1, 0));
        let mut expect = vec![Cyclo::zero(); d];
        expect[taft_index(r, 1, r - 1)] = Cyclo::from_int(-1);
        assert_eq!(se, expect);
    }

    #[test]
    fn sweedler_is_four_dimensional() {
        let h = build_taft(2);
        assert_eq!(h.dim(), 4);
        assert_eq!(h.alg.labels(), &["1", "K", "E", "EK"]);
    }

    #[test]
    fn trivial_group_algebra() {
        let h = build_cyclic_group_algebra(1);
        assert_eq!(h.dim(), 1);
        let h = build_cyclic_group_algebra(4);
        let dk = h.delta.apply(&h.alg.basis(1));
        assert!(dk[4 + 1].is_one());
        assert_eq!(dk.iter().filter(|c| !c.is_zero()).count(), 1);
    }
}
