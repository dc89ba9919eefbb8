use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Cyclo;
use crate::graded::GroupElem;
use crate::linalg::Mat;

use super::{AlgebraSpec, Coproduct, Family, Functional, HopfSpec};

/// Serialized form of a [`HopfSpec`]. Sparse tables are lists of
/// `[i, j, k, coeff]`: for `mul` this means `b_i b_j ∋ coeff·b_k`, for `delta`
/// it means `Δ(b_i) ∋ coeff·b_j ⊗ b_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfJson {
    pub dim: usize,
    pub labels: Vec<String>,
    pub unit: Vec<Cyclo>,
    pub mul: Vec<(usize, usize, usize, Cyclo)>,
    pub delta: Vec<(usize, usize, usize, Cyclo)>,
    pub counit: Vec<Cyclo>,
    pub antipode: Mat,
    #[serde(default)]
    pub pivot: Option<Vec<Cyclo>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
}

/// Instructions to run one of the built-in generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuilderDirective {
    pub builder: String,
    pub r: usize,
    #[serde(default)]
    pub n_pivot: i64,
    #[serde(default)]
    pub grades: Option<Vec<GroupElem>>,
}

/// Contents of a `--spec` file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpecFile {
    Builder(BuilderDirective),
    Spec(Box<HopfJson>),
}

impl From<&HopfSpec> for HopfJson {
    fn from(h: &HopfSpec) -> Self {
        let delta = h
            .delta
            .terms
            .iter()
            .enumerate()
            .flat_map(|(i, t)| t.iter().map(move |(j, k, c)| (i, *j, *k, c.clone())))
            .collect();
        HopfJson {
            dim: h.dim(),
            labels: h.alg.labels().to_vec(),
            unit: h.alg.unit().to_vec(),
            mul: h.alg.mul_entries(),
            delta,
            counit: h.counit.coeffs.clone(),
            antipode: (*h.antipode).clone(),
            pivot: h.pivot.clone(),
            generators: h.alg.declared_generators().to_vec(),
            family: h.family.clone(),
        }
    }
}

impl TryFrom<HopfJson> for HopfSpec {
    type Error = Error;

    fn try_from(j: HopfJson) -> Result<HopfSpec> {
        let d = j.dim;
        if j.labels.len() != d {
            return Err(Error::Malformed(format!("{} labels for dimension {d}", j.labels.len())));
        }
        let oob = |i: usize| i >= d;
        if j.mul.iter().any(|(a, b, c, _)| oob(*a) || oob(*b) || oob(*c))
            || j.delta.iter().any(|(a, b, c, _)| oob(*a) || oob(*b) || oob(*c))
        {
            return Err(Error::Malformed("table index out of range".into()));
        }
        let mut mul = vec![Vec::new(); d * d];
        for (a, b, c, v) in j.mul {
            mul[a * d + b].push((c, v));
        }
        let mut delta = vec![Vec::new(); d];
        for (a, b, c, v) in j.delta {
            delta[a].push((b, c, v));
        }
        let alg = AlgebraSpec::new(j.labels, j.unit, mul, j.generators)?;
        let mut h = HopfSpec::new(alg, Coproduct::new(d, d, delta), Functional::new(j.counit), j.antipode, j.pivot)?;
        h.family = j.family;
        Ok(h)
    }
}

impl HopfSpec {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&HopfJson::from(self)).expect("spec serializes")
    }

    pub fn from_json(s: &str) -> Result<HopfSpec> {
        let j: HopfJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        HopfSpec::try_from(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{build_cyclic_group_algebra, build_taft};

    #[test]
    fn builders_round_trip() {
        for h in [build_taft(2), build_taft(3), build_cyclic_group_algebra(4)] {
            let s = h.to_json();
            let back = HopfSpec::from_json(&s).unwrap();
            assert_eq!(back, h);
            assert_eq!(back.family, h.family);
            assert_eq!(back.to_json(), s);
        }
    }

    #[test]
    fn spec_file_variants() {
        let b: SpecFile = serde_json::from_str(r#"{"builder":"taft","r":3}"#).unwrap();
        assert!(matches!(b, SpecFile::Builder(BuilderDirective { r: 3, .. })));
        let s: SpecFile = serde_json::from_str(&build_taft(2).to_json()).unwrap();
        assert!(matches!(s, SpecFile::Spec(_)));
    }
}
