use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::graded::GradedHopf;
use crate::linalg::Mat;
use crate::rep::{hom_space, regular_rep, ModuleRep, ProjectiveCover};

/// A decomposition `id_P = Σ a_i ∘ b_i` through the regular module, with
/// `a_i: H_x → P` and `b_i: P → H_x`.
#[derive(Clone, Debug)]
pub struct Retract {
    pub a: Vec<Mat>,
    pub b: Vec<Mat>,
}

impl Retract {
    pub fn identity(d: usize) -> Self {
        Retract { a: vec![Mat::identity(d)], b: vec![Mat::identity(d)] }
    }

    /// `a = h ↦ h e`, `b = inclusion of H e`.
    pub fn from_cover(c: &ProjectiveCover) -> Self {
        Retract { a: vec![c.proj.clone()], b: vec![c.incl.clone()] }
    }

    /// `a_i(h) = h·p_i` for the columns `p_i` of `vectors`, and `b_i` solved
    /// for in `Hom(P, H_x)`.
    pub fn through_vectors(reg: &ModuleRep, p: &ModuleRep, vectors: &Mat) -> Result<Self> {
        let d = p.dim();
        let a: Vec<Mat> = vectors
            .columns()
            .iter()
            .map(|v| Mat::from_cols(d, &p.actions().iter().map(|m| m.apply(v)).collect::<Vec<_>>()))
            .collect();
        let betas = hom_space(p, reg);
        if betas.is_empty() {
            return Err(Error::NotProjective);
        }
        let mut cols = Vec::with_capacity(a.len() * betas.len());
        for ai in &a {
            for beta in &betas {
                cols.push(ai.matmul(beta).entries().to_vec());
            }
        }
        let sys = Mat::from_cols(d * d, &cols);
        let c = sys.solve(&Mat::column_vector(Mat::identity(d).entries())).ok().ok_or(Error::NotProjective)?.col(0);
        let nb = betas.len();
        let mut out = Retract { a: Vec::new(), b: Vec::new() };
        for (i, ai) in a.into_iter().enumerate() {
            let mut bi = Mat::zeros(reg.dim(), d);
            for (k, beta) in betas.iter().enumerate() {
                let coef = &c[i * nb + k];
                if !coef.is_zero() {
                    bi = &bi + &beta.scale(coef);
                }
            }
            if !bi.is_zero() {
                out.a.push(ai);
                out.b.push(bi);
            }
        }
        Ok(out)
    }

    /// Decomposition through the standard basis vectors of `P`.
    pub fn generic(h: &dyn GradedHopf, p: &ModuleRep) -> Result<Self> {
        let reg = regular_rep(&*h.piece(&p.grade)?);
        Retract::through_vectors(&reg, p, &Mat::identity(p.dim()))
    }

    /// Decomposition through a seeded random set of `dim P + 1` spanning
    /// vectors.
    pub fn randomized(h: &dyn GradedHopf, p: &ModuleRep, seed: u64) -> Result<Self> {
        let reg = regular_rep(&*h.piece(&p.grade)?);
        let d = p.dim();
        let mut rng = StdRng::seed_from_u64(seed);
        let vectors = Mat::from_fn(d, d + 1, |i, j| {
            if i == j {
                Cyclo::one()
            } else if j < d && i < j {
                Cyclo::zero()
            } else {
                Cyclo::from_int(rng.gen_range(-3..=3))
            }
        });
        Retract::through_vectors(&reg, p, &vectors)
    }

    /// `Σ a_i b_i`, which must be the identity of `P`.
    pub fn composite(&self) -> Option<Mat> {
        let mut it = self.a.iter().zip(&self.b).map(|(a, b)| a.matmul(b));
        let first = it.next()?;
        Some(it.fold(first, |acc, m| &acc + &m))
    }

    /// `Σ_i (b_i ∘ f ∘ a_i)(1)`, an element of `H_x`.
    pub fn class_of(&self, unit: &[Cyclo], f: &Mat) -> Vec<Cyclo> {
        let mut out = vec![Cyclo::zero(); unit.len()];
        for (a, b) in self.a.iter().zip(&self.b) {
            let v = b.apply(&f.apply(&a.apply(unit)));
            for (o, x) in out.iter_mut().zip(v) {
                *o += &x;
            }
        }
        out
    }
}
