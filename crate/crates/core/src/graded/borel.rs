use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use crate::error::Result;
use crate::exactnum::{q_binomial, root_of_unity, Cyclo};
use crate::hopfcore::{borel_antipode, borel_piece_algebra, taft_index, AlgebraSpec, Coproduct, Family, Functional};
use crate::linalg::Mat;

use super::{BorelGroup, GradedHopf, GroupElem, HopfPiece};

#[derive(Default)]
struct Cache {
    pieces: Vec<(GroupElem, Arc<HopfPiece>)>,
    coproducts: Vec<(Cyclo, Arc<Coproduct>)>,
    antipodes: Vec<(Cyclo, Arc<Mat>)>,
}

/// Quotients `B_{z,x}` of the positive Borel part of quantum sl₂ at
/// `q = ζ_{2r}`, with pivots `g_{z,x} = z^n K`.
pub struct BorelFamily {
    pub r: usize,
    pub n_pivot: i64,
    zeta: Cyclo,
    group: BorelGroup,
    cache: RwLock<Cache>,
}

pub fn build_borel(r: usize, n_pivot: i64) -> BorelFamily {
    assert!(r >= 2, "Borel family needs r >= 2");
    BorelFamily {
        r,
        n_pivot,
        zeta: root_of_unity(2 * r as u32, 2),
        group: BorelGroup { r },
        cache: RwLock::new(Cache::default()),
    }
}

fn lookup<K: PartialEq, V: Clone>(v: &[(K, V)], k: &K) -> Option<V> {
    v.iter().find(|(key, _)| key == k).map(|(_, val)| val.clone())
}

impl BorelFamily {
    /// `ζ = q²`, the commutation scalar `KE = ζEK`.
    pub fn zeta(&self) -> &Cyclo {
        &self.zeta
    }

    pub fn group(&self) -> BorelGroup {
        self.group
    }

    fn build_piece(&self, g: &GroupElem) -> HopfPiece {
        let r = self.r;
        let z = g.z(r);
        let alg = borel_piece_algebra(r, &self.zeta, &z, &g.x);
        let mut pivot = vec![Cyclo::zero(); r * r];
        pivot[taft_index(r, 0, 1)] = z.pow(self.n_pivot).expect("z is nonzero");
        HopfPiece {
            grade: g.clone(),
            alg: Arc::new(alg),
            pivot: Some(pivot),
            family: Some(Family::Borel { r, n_pivot: self.n_pivot, w: g.w.clone(), x: g.x.clone() }),
        }
    }
}

impl GradedHopf for BorelFamily {
    fn grade_mul(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        self.group.mul(a, b)
    }

    fn grade_inv(&self, a: &GroupElem) -> GroupElem {
        self.group.inv(a)
    }

    fn piece(&self, x: &GroupElem) -> Result<Arc<HopfPiece>> {
        if let Some(p) = lookup(&self.cache.read().expect("cache poisoned").pieces, x) {
            return Ok(p);
        }
        let built = Arc::new(self.build_piece(x));
        let mut c = self.cache.write().expect("cache poisoned");
        if let Some(p) = lookup(&c.pieces, x) {
            return Ok(p);
        }
        c.pieces.push((x.clone(), built.clone()));
        Ok(built)
    }

    /// Only the right grade enters: the left factor never wraps around.
    fn coproduct(&self, _x: &GroupElem, y: &GroupElem) -> Result<Arc<Coproduct>> {
        let z = y.z(self.r);
        if let Some(d) = lookup(&self.cache.read().expect("cache poisoned").coproducts, &z) {
            return Ok(d);
        }
        let built = Arc::new(crate::hopfcore::borel_coproduct(self.r, &self.zeta, &z));
        let mut c = self.cache.write().expect("cache poisoned");
        if let Some(d) = lookup(&c.coproducts, &z) {
            return Ok(d);
        }
        c.coproducts.push((z, built.clone()));
        Ok(built)
    }

    fn antipode(&self, x: &GroupElem) -> Result<Arc<Mat>> {
        let z = x.z(self.r);
        if let Some(s) = lookup(&self.cache.read().expect("cache poisoned").antipodes, &z) {
            return Ok(s);
        }
        let built = Arc::new(borel_antipode(self.r, &self.zeta, &z));
        let mut c = self.cache.write().expect("cache poisoned");
        if let Some(s) = lookup(&c.antipodes, &z) {
            return Ok(s);
        }
        c.antipodes.push((z, built.clone()));
        Ok(built)
    }

    fn counit(&self) -> Functional {
        let r = self.r;
        Functional::new((0..r * r).map(|idx| if idx < r { Cyclo::one() } else { Cyclo::zero() }).collect())
    }

    fn name(&self) -> String {
        format!("borel(r={}, n={})", self.r, self.n_pivot)
    }
}

/// Element of the infinite Borel algebra on `E^i K^j`, `i ≥ 0`, `j ∈ ℤ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InfElement {
    pub terms: BTreeMap<(usize, i64), Cyclo>,
}

impl InfElement {
    pub fn monomial(i: usize, j: i64, c: Cyclo) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        InfElement { terms }
    }

    pub fn add(&self, other: &InfElement) -> InfElement {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            let e = out.terms.entry(*k).or_insert_with(Cyclo::zero);
            *e += c;
            if e.is_zero() {
                out.terms.remove(k);
            }
        }
        out
    }

    /// `E^a K^b · E^c K^d = ζ^{bc} E^{a+c} K^{b+d}`.
    pub fn mul(&self, other: &InfElement, zeta: &Cyclo) -> InfElement {
        let mut out = InfElement::default();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                let s = zeta.pow(b * *c as i64).unwrap();
                out = out.add(&InfElement::monomial(a + c, b + d, &(x * y) * &s));
            }
        }
        out
    }

    /// Image in `B_{z,x}`: `E^i K^j ↦ x^{⌊i/r⌋} z^{⌊j/r⌋} E^{i mod r} K^{j mod r}`.
    pub fn project(&self, r: usize, z: &Cyclo, x: &Cyclo) -> Vec<Cyclo> {
        let mut out = vec![Cyclo::zero(); r * r];
        for ((i, j), c) in &self.terms {
            let ri = r as i64;
            let coef = &(c * &x.pow((*i / r) as i64).unwrap()) * &z.pow(j.div_euclid(ri)).unwrap();
            out[taft_index(r, i % r, j.rem_euclid(ri) as usize)] += coef;
        }
        out
    }

    /// Coproduct in the infinite algebra followed by projection of both
    /// factors, as a dense `r² × r²` tensor.
    pub fn coproduct_projected(&self, r: usize, zeta: &Cyclo, left: (&Cyclo, &Cyclo), right: (&Cyclo, &Cyclo)) -> Vec<Cyclo> {
        let d = r * r;
        let mut out = vec![Cyclo::zero(); d * d];
        for ((i, j), c) in &self.terms {
            for l in 0..=*i {
                let b = &q_binomial(*i, l, zeta) * c;
                if b.is_zero() {
                    continue;
                }
                let lp = InfElement::monomial(l, *j, Cyclo::one()).project(r, left.0, left.1);
                let rp = InfElement::monomial(i - l, l as i64 + j, Cyclo::one()).project(r, right.0, right.1);
                for (p, u) in lp.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
                    for (q, v) in rp.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        out[p * d + q] += &(&b * &(u * v));
                    }
                }
            }
        }
        out
    }
}

/// Dimension of the Jacobson radical, computed as the radical of the trace
/// form `(a, b) ↦ tr(L_{ab})` (valid in characteristic zero).
pub fn jacobson_radical_dim(alg: &AlgebraSpec) -> usize {
    let d = alg.dim();
    let traces: Vec<Cyclo> = (0..d).map(|k| alg.left_mul_matrix(&alg.basis(k)).trace()).collect();
    let form = Mat::from_fn(d, d, |i, j| {
        alg.basis_product(i, j).iter().map(|(k, c)| c * &traces[*k]).sum()
    });
    d - form.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::build_taft;
    use proptest::prelude::*;

    #[test]
    fn unit_piece_is_taft() {
        for r in 2..=3 {
            let b = build_borel(r, 1);
            let p = b.piece(&GroupElem::unit()).unwrap();
            let t = build_taft(r);
            assert_eq!(*p.alg, *t.alg);
            assert_eq!(*b.coproduct(&GroupElem::unit(), &GroupElem::unit()).unwrap(), *t.delta);
            assert_eq!(*b.antipode(&GroupElem::unit()).unwrap(), *t.antipode);
            assert_eq!(p.pivot.as_ref(), t.pivot.as_ref());
        }
    }

    #[test]
    fn coproduct_of_e_across_grades() {
        let r = 3;
        let b = build_borel(r, 0);
        let x = GroupElem::new(Cyclo::from_int(2), Cyclo::one());
        let y = GroupElem::new(root_of_unity(3, 1), Cyclo::from_int(-1));
        let d = r * r;
        let de = b.coproduct(&x, &y).unwrap().apply(&b.piece(&b.grade_mul(&x, &y)).unwrap().alg.basis(taft_index(r, 1, 0)));
        let mut expect = vec![Cyclo::zero(); d * d];
        expect[taft_index(r, 1, 0)] = Cyclo::one();
        expect[taft_index(r, 1, 0) * d + taft_index(r, 0, 1)] = Cyclo::one();
        assert_eq!(de, expect);
    }

    #[test]
    fn semisimple_when_x_nonzero_and_w_root_of_unity() {
        for (r, w) in [(2usize, root_of_unity(2, 1)), (2, Cyclo::one()), (3, root_of_unity(3, 1))] {
            let b = build_borel(r, 0);
            let p = b.piece(&GroupElem::new(w, Cyclo::one())).unwrap();
            assert_eq!(jacobson_radical_dim(&p.alg), 0);
        }
        // the Taft piece is not semisimple: its radical is spanned by E^i K^j, i ≥ 1
        let t = build_taft(3);
        assert_eq!(jacobson_radical_dim(&t.alg), 6);
    }

    #[test]
    fn projected_coproduct_matches_table() {
        let r = 2;
        let b = build_borel(r, 0);
        let x = GroupElem::new(root_of_unity(4, 1), Cyclo::from_int(3));
        let y = GroupElem::new(Cyclo::from_int(2), Cyclo::one());
        let xy = b.grade_mul(&x, &y);
        let (zx, zy, zxy) = (x.z(r), y.z(r), xy.z(r));
        let delta = b.coproduct(&x, &y).unwrap();
        for i in 0..r {
            for j in 0..r {
                let m = InfElement::monomial(i, j as i64, Cyclo::one());
                let lhs = m.coproduct_projected(r, b.zeta(), (&zx, &x.x), (&zy, &y.x));
                let rhs = delta.apply(&m.project(r, &zxy, &xy.x));
                assert_eq!(lhs, rhs);
            }
        }
    }

    fn inf_elem(r: usize) -> impl Strategy<Value = InfElement> {
        prop::collection::vec((0..2 * r, -(r as i64)..2 * r as i64, -3i64..4), 1..4).prop_map(|ts| {
            ts.into_iter().fold(InfElement::default(), |acc, (i, j, c)| acc.add(&InfElement::monomial(i, j, Cyclo::from_int(c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        /// Two lifts of the same class of B_{z,x} have equal projected coproducts.
        #[test]
        fn quotient_coproduct_well_defined(u in inf_elem(2), v in inf_elem(2), kr in 0usize..2, wk in 0i64..4, x1 in -2i64..3, x2 in -2i64..3) {
            let r = 2;
            let b = build_borel(r, 0);
            let gx = GroupElem::new(root_of_unity(4, wk), Cyclo::from_int(x1));
            let gy = GroupElem::new(Cyclo::from_int(2), Cyclo::from_int(x2));
            let gxy = b.grade_mul(&gx, &gy);
            let (zx, zy, zxy) = (gx.z(r), gy.z(r), gxy.z(r));
            let zeta = b.zeta().clone();
            // relator K^r − z or E^r − x of the grade xy
            let rel = if kr == 0 {
                InfElement::monomial(0, r as i64, Cyclo::one()).add(&InfElement::monomial(0, 0, -&zxy))
            } else {
                InfElement::monomial(r, 0, Cyclo::one()).add(&InfElement::monomial(0, 0, -&gxy.x))
            };
            let u2 = u.add(&rel.mul(&v, &zeta));
            prop_assert_eq!(u.project(r, &zxy, &gxy.x), u2.project(r, &zxy, &gxy.x));
            let a = u.coproduct_projected(r, &zeta, (&zx, &gx.x), (&zy, &gy.x));
            let c = u2.coproduct_projected(r, &zeta, (&zx, &gx.x), (&zy, &gy.x));
            prop_assert_eq!(a, c);
        }
    }
}
