//! Hopf group-coalgebras of finite type.
//!
//! A grade of the Borel family is a pair `(w, x)`. The algebra at that grade
//! has `K^r = z := w^r` and `E^r = x`; `w` is carried so that `r`-th roots of
//! `z` stay exact. An ordinary [`HopfSpec`] is the trivially graded case with
//! only the unit grade.

mod borel;
mod checks;
mod integrals;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::hopfcore::{AlgebraSpec, Coproduct, Family, Functional, HopfSpec};
use crate::linalg::Mat;

pub use borel::{build_borel, jacobson_radical_dim, BorelFamily, InfElement};
pub use checks::{check_graded_axioms, check_graded_radford, check_phi_psi, phi_matrix, psi_matrix};
pub use integrals::{
    check_g_integral, check_rintrel, g_integral, g_integral_at, graded_comodulus, graded_hook_left,
    graded_hook_right, graded_modulus, symmetrised_g_integral, symmetrised_g_integral_at, unit_hopf,
};

/// Element `(w, x)` of the grading group; `z = w^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupElem {
    pub w: Cyclo,
    pub x: Cyclo,
}

impl GroupElem {
    pub fn new(w: Cyclo, x: Cyclo) -> Self {
        assert!(!w.is_zero(), "w must be invertible");
        GroupElem { w, x }
    }

    pub fn unit() -> Self {
        GroupElem { w: Cyclo::one(), x: Cyclo::zero() }
    }

    pub fn is_unit(&self) -> bool {
        self.w.is_one() && self.x.is_zero()
    }

    pub fn z(&self, r: usize) -> Cyclo {
        self.w.pow(r as i64).expect("w is nonzero")
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(w={}, x={})", self.w, self.x)
    }
}

/// Group law `(w₁,x₁)(w₂,x₂) = (w₁w₂, x₂ + x₁w₂^r)` for a fixed `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BorelGroup {
    pub r: usize,
}

impl BorelGroup {
    pub fn mul(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        GroupElem { w: &a.w * &b.w, x: &b.x + &(&a.x * &b.z(self.r)) }
    }

    pub fn inv(&self, a: &GroupElem) -> GroupElem {
        let z = a.z(self.r);
        GroupElem { w: a.w.inv().expect("w is nonzero"), x: -(a.x.checked_div(&z).expect("z is nonzero")) }
    }
}

/// One algebra `H_x` of a graded family together with its pivot.
#[derive(Clone, Debug)]
pub struct HopfPiece {
    pub grade: GroupElem,
    pub alg: Arc<AlgebraSpec>,
    pub pivot: Option<Vec<Cyclo>>,
    pub family: Option<Family>,
}

impl HopfPiece {
    pub fn pivot(&self) -> Result<&[Cyclo]> {
        self.pivot.as_deref().ok_or(Error::MissingPivot)
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }
}

/// A Hopf G-coalgebra, queried grade by grade.
pub trait GradedHopf: Send + Sync {
    fn grade_mul(&self, a: &GroupElem, b: &GroupElem) -> GroupElem;
    fn grade_inv(&self, a: &GroupElem) -> GroupElem;
    fn piece(&self, x: &GroupElem) -> Result<Arc<HopfPiece>>;
    /// `Δ_{x,y}: H_{xy} → H_x ⊗ H_y`.
    fn coproduct(&self, x: &GroupElem, y: &GroupElem) -> Result<Arc<Coproduct>>;
    /// `S_x: H_x → H_{x⁻¹}`.
    fn antipode(&self, x: &GroupElem) -> Result<Arc<Mat>>;
    /// Counit on the unit grade.
    fn counit(&self) -> Functional;
    fn name(&self) -> String;
}

impl GradedHopf for HopfSpec {
    fn grade_mul(&self, _: &GroupElem, _: &GroupElem) -> GroupElem {
        GroupElem::unit()
    }

    fn grade_inv(&self, _: &GroupElem) -> GroupElem {
        GroupElem::unit()
    }

    fn piece(&self, x: &GroupElem) -> Result<Arc<HopfPiece>> {
        require_unit(x)?;
        Ok(Arc::new(HopfPiece {
            grade: GroupElem::unit(),
            alg: self.alg.clone(),
            pivot: self.pivot.clone(),
            family: self.family.clone(),
        }))
    }

    fn coproduct(&self, x: &GroupElem, y: &GroupElem) -> Result<Arc<Coproduct>> {
        require_unit(x)?;
        require_unit(y)?;
        Ok(self.delta.clone())
    }

    fn antipode(&self, x: &GroupElem) -> Result<Arc<Mat>> {
        require_unit(x)?;
        Ok(self.antipode.clone())
    }

    fn counit(&self) -> Functional {
        self.counit.clone()
    }

    fn name(&self) -> String {
        match &self.family {
            Some(Family::Taft { r }) => format!("taft(r={r})"),
            Some(Family::Cyclic { r }) => format!("cyclic(r={r})"),
            _ => format!("spec(dim={})", self.dim()),
        }
    }
}

fn require_unit(x: &GroupElem) -> Result<()> {
    if x.is_unit() {
        Ok(())
    } else {
        Err(Error::Grade(format!("{x} in a trivially graded Hopf algebra")))
    }
}
