//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Elements are coordinate vectors on the algebra basis. Two-fold tensors are
//! dense vectors indexed `j * right_dim + k` for `b_j ⊗ b_k`.

mod builders;
mod checks;
mod integrals;
mod json;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::linalg::{is_zero_vec, Mat};

pub use builders::{borel_antipode, borel_coproduct, borel_piece_algebra, build_cyclic_group_algebra, build_taft, taft_index};
pub use checks::{check_hopf_axioms, check_mu_ab, check_radford_s4};
pub(crate) use checks::{
    antipode_law_failure, coassociativity_failure, coproduct_multiplicative_failure, counit_failure,
    functional_multiplicative_failure, pivot_conjugation_failure, pivot_grouplike, radford_failure,
};
pub use integrals::{
    characters_diagonal, comodulus, convolution, hook_left, hook_left_of, hook_right, hook_right_of, inverse_character,
    is_group_like,
    left_cointegral, left_integrals, modulus, right_cointegral, right_integrals, symmetrised_integral,
    twisted_cyclicity_defect,
};
pub use json::{BuilderDirective, HopfJson, SpecFile};

/// Which built-in generator produced a spec or piece. Needed by routines that
/// only exist for the built-in families (idempotents, characters).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Family {
    Taft { r: usize },
    Cyclic { r: usize },
    /// The piece `B_{z,x}` of the Borel family at grade `(w, x)`, `z = w^r`.
    Borel { r: usize, n_pivot: i64, w: Cyclo, x: Cyclo },
}

impl Family {
    pub fn r(&self) -> usize {
        match self {
            Family::Taft { r } | Family::Cyclic { r } | Family::Borel { r, .. } => *r,
        }
    }
}

/// Linear form on an algebra, as its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Functional {
    pub coeffs: Vec<Cyclo>,
}

impl Functional {
    pub fn new(coeffs: Vec<Cyclo>) -> Self {
        Functional { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Functional { coeffs: vec![Cyclo::zero(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn at(&self, i: usize) -> &Cyclo {
        &self.coeffs[i]
    }

    pub fn eval(&self, a: &[Cyclo]) -> Cyclo {
        crate::linalg::dot(&self.coeffs, a)
    }

    pub fn scale(&self, c: &Cyclo) -> Functional {
        Functional { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Precomposition `a ↦ self(m·a)` for a linear map `m`.
    pub fn compose(&self, m: &Mat) -> Functional {
        Functional { coeffs: m.apply_left(&self.coeffs) }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }
}

/// Unital associative algebra on a finite basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    dim: usize,
    labels: Vec<String>,
    unit: Vec<Cyclo>,
    /// `mul[i * dim + j]` is `b_i b_j` as sparse `(k, c)` pairs.
    mul: Vec<Vec<(usize, Cyclo)>>,
    /// Basis indices that generate the algebra. Empty means "use all".
    generators: Vec<usize>,
}

impl AlgebraSpec {
    pub fn new(
        labels: Vec<String>,
        unit: Vec<Cyclo>,
        mul: Vec<Vec<(usize, Cyclo)>>,
        generators: Vec<usize>,
    ) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::Malformed("algebra must have positive dimension".into()));
        }
        if unit.len() != dim || mul.len() != dim * dim {
            return Err(Error::Malformed(format!("algebra tables do not match dimension {dim}")));
        }
        if mul.iter().flatten().any(|(k, _)| *k >= dim) || generators.iter().any(|&g| g >= dim) {
            return Err(Error::Malformed("basis index out of range".into()));
        }
        let mul = mul
            .into_iter()
            .map(|terms| {
                let mut dense = vec![Cyclo::zero(); dim];
                for (k, c) in terms {
                    dense[k] += c;
                }
                dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        Ok(AlgebraSpec { dim, labels, unit, mul, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> &[Cyclo] {
        &self.unit
    }

    /// Generating set of basis indices (all indices if none were declared).
    pub fn generators(&self) -> Vec<usize> {
        if self.generators.is_empty() {
            (0..self.dim).collect()
        } else {
            self.generators.clone()
        }
    }

    pub fn declared_generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Cyclo)] {
        &self.mul[i * self.dim + j]
    }

    pub fn basis(&self, i: usize) -> Vec<Cyclo> {
        let mut v = vec![Cyclo::zero(); self.dim];
        v[i] = Cyclo::one();
        v
    }

    pub fn mul(&self, a: &[Cyclo], b: &[Cyclo]) -> Vec<Cyclo> {
        let mut out = vec![Cyclo::zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    /// Matrix of `h ↦ a·h`.
    pub fn left_mul_matrix(&self, a: &[Cyclo]) -> Mat {
        let cols: Vec<Vec<Cyclo>> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Mat::from_cols(self.dim, &cols)
    }

    /// Matrix of `h ↦ h·a`.
    pub fn right_mul_matrix(&self, a: &[Cyclo]) -> Mat {
        let cols: Vec<Vec<Cyclo>> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Mat::from_cols(self.dim, &cols)
    }

    pub fn inverse(&self, a: &[Cyclo]) -> Option<Vec<Cyclo>> {
        let inv = self.left_mul_matrix(a).inverse()?;
        Some(inv.apply(&self.unit))
    }

    pub fn pow(&self, a: &[Cyclo], e: usize) -> Vec<Cyclo> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Multiplication `A ⊗ A → A` on dense two-fold tensors.
    pub fn mul_tensor(&self, t: &[Cyclo]) -> Vec<Cyclo> {
        let d = self.dim;
        let mut out = vec![Cyclo::zero(); d];
        for (idx, c) in t.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, m) in self.basis_product(idx / d, idx % d) {
                out[*k] += &(c * m);
            }
        }
        out
    }

    /// Returns the first basis triple violating associativity, if any.
    pub fn associativity_failure(&self) -> Option<Vec<usize>> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul(&self.basis(i), &self.basis(j));
                for k in 0..d {
                    let lhs = self.mul(&ij, &self.basis(k));
                    let jk = self.mul(&self.basis(j), &self.basis(k));
                    let rhs = self.mul(&self.basis(i), &jk);
                    if lhs != rhs {
                        return Some(vec![i, j, k]);
                    }
                }
            }
        }
        None
    }

    pub fn unit_failure(&self) -> Option<Vec<usize>> {
        (0..self.dim)
            .find(|&i| {
                let b = self.basis(i);
                self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b
            })
            .map(|i| vec![i])
    }

    /// Sparse multiplication table as `(i, j, k, c)` quadruples.
    pub fn mul_entries(&self) -> Vec<(usize, usize, usize, Cyclo)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }
}

/// A map `H → H_l ⊗ H_r` given on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coproduct {
    pub src_dim: usize,
    pub left_dim: usize,
    pub right_dim: usize,
    /// `terms[i]` lists `(j, k, c)` with `Δ(b_i) = Σ c b_j ⊗ b_k`.
    pub terms: Vec<Vec<(usize, usize, Cyclo)>>,
}

impl Coproduct {
    pub fn new(left_dim: usize, right_dim: usize, terms: Vec<Vec<(usize, usize, Cyclo)>>) -> Self {
        let terms = terms
            .into_iter()
            .map(|t| {
                let mut dense = vec![Cyclo::zero(); left_dim * right_dim];
                for (j, k, c) in t {
                    dense[j * right_dim + k] += c;
                }
                dense
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(idx, c)| (idx / right_dim, idx % right_dim, c))
                    .collect()
            })
            .collect::<Vec<_>>();
        Coproduct { src_dim: terms.len(), left_dim, right_dim, terms }
    }

    pub fn apply(&self, a: &[Cyclo]) -> Vec<Cyclo> {
        let mut out = vec![Cyclo::zero(); self.left_dim * self.right_dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.terms[i] {
                out[j * self.right_dim + k] += &(x * c);
            }
        }
        out
    }

    pub fn to_mat(&self) -> Mat {
        let mut m = Mat::zeros(self.left_dim * self.right_dim, self.src_dim);
        for (i, t) in self.terms.iter().enumerate() {
            for (j, k, c) in t {
                m.set(j * self.right_dim + k, i, c.clone());
            }
        }
        m
    }

    /// The flipped map `τ∘Δ`.
    pub fn swapped(&self) -> Coproduct {
        Coproduct {
            src_dim: self.src_dim,
            left_dim: self.right_dim,
            right_dim: self.left_dim,
            terms: self.terms.iter().map(|t| t.iter().map(|(j, k, c)| (*k, *j, c.clone())).collect()).collect(),
        }
    }

    /// `(f ⊗ id)Δ(a)` for a functional `f` on the left factor.
    pub fn contract_left(&self, f: &[Cyclo], a: &[Cyclo]) -> Vec<Cyclo> {
        let mut out = vec![Cyclo::zero(); self.right_dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.terms[i] {
                if !f[*j].is_zero() {
                    out[*k] += &(&(x * c) * &f[*j]);
                }
            }
        }
        out
    }

    /// `(id ⊗ f)Δ(a)` for a functional `f` on the right factor.
    pub fn contract_right(&self, f: &[Cyclo], a: &[Cyclo]) -> Vec<Cyclo> {
        let mut out = vec![Cyclo::zero(); self.left_dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.terms[i] {
                if !f[*k].is_zero() {
                    out[*j] += &(&(x * c) * &f[*k]);
                }
            }
        }
        out
    }
}

/// A finite-dimensional Hopf algebra, optionally pivotal.
#[derive(Clone, Debug)]
pub struct HopfSpec {
    pub alg: Arc<AlgebraSpec>,
    pub delta: Arc<Coproduct>,
    pub counit: Functional,
    pub antipode: Arc<Mat>,
    pub pivot: Option<Vec<Cyclo>>,
    pub family: Option<Family>,
}

impl PartialEq for HopfSpec {
    fn eq(&self, other: &Self) -> bool {
        self.alg == other.alg
            && self.delta == other.delta
            && self.counit == other.counit
            && self.antipode == other.antipode
            && self.pivot == other.pivot
    }
}

impl HopfSpec {
    pub fn new(
        alg: AlgebraSpec,
        delta: Coproduct,
        counit: Functional,
        antipode: Mat,
        pivot: Option<Vec<Cyclo>>,
    ) -> Result<Self> {
        let d = alg.dim();
        if delta.src_dim != d || delta.left_dim != d || delta.right_dim != d {
            return Err(Error::Malformed("coproduct dimensions do not match the algebra".into()));
        }
        if counit.dim() != d || antipode.rows() != d || antipode.cols() != d {
            return Err(Error::Malformed("counit or antipode has the wrong size".into()));
        }
        if pivot.as_ref().is_some_and(|g| g.len() != d) {
            return Err(Error::Malformed("pivot has the wrong length".into()));
        }
        Ok(HopfSpec {
            alg: Arc::new(alg),
            delta: Arc::new(delta),
            counit,
            antipode: Arc::new(antipode),
            pivot,
            family: None,
        })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn with_pivot(&self, g: Vec<Cyclo>) -> HopfSpec {
        HopfSpec { pivot: Some(g), ..self.clone() }
    }

    pub fn pivot(&self) -> Result<&[Cyclo]> {
        self.pivot.as_deref().ok_or(Error::MissingPivot)
    }

    pub fn antipode_inverse(&self) -> Result<Mat> {
        self.antipode.inverse().ok_or_else(|| Error::Malformed("antipode is not invertible".into()))
    }

    /// The co-opposite Hopf algebra: flipped coproduct, inverse antipode and,
    /// when present, inverted pivot.
    pub fn cop(&self) -> Result<HopfSpec> {
        let pivot = match &self.pivot {
            Some(g) => Some(self.alg.inverse(g).ok_or_else(|| Error::Malformed("pivot is not invertible".into()))?),
            None => None,
        };
        Ok(HopfSpec {
            alg: self.alg.clone(),
            delta: Arc::new(self.delta.swapped()),
            counit: self.counit.clone(),
            antipode: Arc::new(self.antipode_inverse()?),
            pivot,
            family: self.family.clone(),
        })
    }
}
