use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, StarAlgebraSpec};
use crate::error::{Error, Result};
use crate::linalg::c64;

use super::basis::{hermitian_basis, hermitian_coordinates, real_basis, real_coordinates};

/// Real-linear map `⊕ M_{nᵢ} → ⊕ M_{mⱼ}` stored as the images of the
/// canonical real basis of the source (see [`super::basis`]).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MapRepr", into = "MapRepr")]
pub struct RealLinearMap {
    source: StarAlgebraSpec,
    target: StarAlgebraSpec,
    images: Vec<AlgebraElement>,
}

#[derive(Serialize, Deserialize)]
struct MapRepr {
    source: StarAlgebraSpec,
    target: StarAlgebraSpec,
    images: Vec<AlgebraElement>,
}

impl TryFrom<MapRepr> for RealLinearMap {
    type Error = Error;

    fn try_from(r: MapRepr) -> Result<Self> {
        RealLinearMap::new(r.source, r.target, r.images)
    }
}

impl From<RealLinearMap> for MapRepr {
    fn from(m: RealLinearMap) -> Self {
        MapRepr {
            source: m.source,
            target: m.target,
            images: m.images,
        }
    }
}

impl RealLinearMap {
    pub fn new(
        source: StarAlgebraSpec,
        target: StarAlgebraSpec,
        images: Vec<AlgebraElement>,
    ) -> Result<Self> {
        if images.len() != source.real_dim() {
            return Err(Error::SpecMismatch(format!(
                "source {:?} needs {} images, got {}",
                source.block_dims(),
                source.real_dim(),
                images.len()
            )));
        }
        for img in &images {
            img.ensure_spec(&target)?;
        }
        Ok(RealLinearMap {
            source,
            target,
            images,
        })
    }

    /// Tabulates a real-linear function on the canonical real basis.
    pub fn from_fn(
        source: &StarAlgebraSpec,
        target: &StarAlgebraSpec,
        f: impl Fn(&AlgebraElement) -> AlgebraElement,
    ) -> Result<Self> {
        let images = real_basis(source).iter().map(f).collect();
        Self::new(source.clone(), target.clone(), images)
    }

    pub fn identity(spec: &StarAlgebraSpec) -> Self {
        Self::from_fn(spec, spec, AlgebraElement::clone).expect("identity images match the spec")
    }

    /// `α ↦ ᾱ`
    pub fn conjugation(spec: &StarAlgebraSpec) -> Self {
        Self::from_fn(spec, spec, AlgebraElement::conj).expect("conjugation images match the spec")
    }

    /// `α ↦ αᵀ`
    pub fn transpose(spec: &StarAlgebraSpec) -> Self {
        Self::from_fn(spec, spec, AlgebraElement::transpose)
            .expect("transpose images match the spec")
    }

    pub fn source(&self) -> &StarAlgebraSpec {
        &self.source
    }

    pub fn target(&self) -> &StarAlgebraSpec {
        &self.target
    }

    pub fn images(&self) -> &[AlgebraElement] {
        &self.images
    }

    pub fn images_mut(&mut self) -> &mut [AlgebraElement] {
        &mut self.images
    }

    /// Evaluates the map by expanding `x` in the canonical real basis.
    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        x.ensure_spec(&self.source)?;
        let coords = real_coordinates(x);
        let mut out = AlgebraElement::zero(&self.target);
        for (c, img) in coords.iter().zip(&self.images) {
            if *c != 0.0 {
                out.axpy(c64(*c, 0.0), img);
            }
        }
        Ok(out)
    }

    /// Composition `other ∘ self`.
    pub fn then(&self, other: &RealLinearMap) -> Result<RealLinearMap> {
        self.target.ensure_same(&other.source)?;
        let images = self
            .images
            .iter()
            .map(|x| other.apply(x))
            .collect::<Result<_>>()?;
        RealLinearMap::new(self.source.clone(), other.target.clone(), images)
    }

    /// `x ↦ s·map(x)`
    pub fn scaled(&self, s: f64) -> RealLinearMap {
        RealLinearMap {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().map(|x| x.scale_real(s)).collect(),
        }
    }

    /// Restriction to Hermitian elements.
    pub fn jordan_part(&self) -> JordanMap {
        let mut images = Vec::with_capacity(self.source.total_dim());
        let mut offset = 0;
        for &n in self.source.block_dims() {
            images.extend_from_slice(&self.images[offset..offset + n * n]);
            offset += 2 * n * n;
        }
        JordanMap {
            source: self.source.clone(),
            target: self.target.clone(),
            images,
        }
    }
}

/// Map on Hermitian elements only, stored as images of the Hermitian part
/// of the canonical real basis (`Σ nᵢ²` images).
#[derive(Clone, Debug, PartialEq)]
pub struct JordanMap {
    source: StarAlgebraSpec,
    target: StarAlgebraSpec,
    images: Vec<AlgebraElement>,
}

impl JordanMap {
    pub fn new(
        source: StarAlgebraSpec,
        target: StarAlgebraSpec,
        images: Vec<AlgebraElement>,
    ) -> Result<Self> {
        if images.len() != source.total_dim() {
            return Err(Error::SpecMismatch(format!(
                "source {:?} has {} Hermitian basis elements, got {} images",
                source.block_dims(),
                source.total_dim(),
                images.len()
            )));
        }
        for img in &images {
            img.ensure_spec(&target)?;
        }
        Ok(JordanMap {
            source,
            target,
            images,
        })
    }

    pub fn from_fn(
        source: &StarAlgebraSpec,
        target: &StarAlgebraSpec,
        f: impl Fn(&AlgebraElement) -> AlgebraElement,
    ) -> Result<Self> {
        let images = hermitian_basis(source).iter().map(f).collect();
        Self::new(source.clone(), target.clone(), images)
    }

    pub fn source(&self) -> &StarAlgebraSpec {
        &self.source
    }

    pub fn target(&self) -> &StarAlgebraSpec {
        &self.target
    }

    pub fn images(&self) -> &[AlgebraElement] {
        &self.images
    }

    /// Evaluates on the Hermitian part of `a`.
    pub fn apply(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        a.ensure_spec(&self.source)?;
        let coords = hermitian_coordinates(a);
        let mut out = AlgebraElement::zero(&self.target);
        for (c, img) in coords.iter().zip(&self.images) {
            if *c != 0.0 {
                out.axpy(c64(*c, 0.0), img);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{seeded_rng, CMatrix};

    #[test]
    fn identity_and_conjugation() {
        let spec = StarAlgebraSpec::new(vec![2]).unwrap();
        let mut rng = seeded_rng(1);
        let x = AlgebraElement::random(&spec, &mut rng);
        let id = RealLinearMap::identity(&spec);
        assert!(id.apply(&x).unwrap().distance(&x) < 1e-14);

        let conj = RealLinearMap::conjugation(&spec);
        let i1 = AlgebraElement::unit(&spec).i_times();
        let img = conj.apply(&i1).unwrap();
        assert!(img.distance(&i1.scale_real(-1.0)) < 1e-15);
    }

    #[test]
    fn doubling_map_on_e12() {
        // α ↦ α ⊕ ᾱ from M₂ into M₂ ⊕ M₂: E₁₂ goes to E₁₂ ⊕ E₁₂
        let src = StarAlgebraSpec::full(2);
        let tgt = StarAlgebraSpec::new(vec![2, 2]).unwrap();
        let map = RealLinearMap::from_fn(&src, &tgt, |x| {
            AlgebraElement::from_blocks(vec![x.block(0).clone(), x.block(0).conj()])
        })
        .unwrap();
        let e12 = AlgebraElement::in_block(&src, 0, CMatrix::unit(2, 0, 1));
        let img = map.apply(&e12).unwrap();
        assert!(img.block(0).distance(&CMatrix::unit(2, 0, 1)) < 1e-15);
        assert!(img.block(1).distance(&CMatrix::unit(2, 0, 1)) < 1e-15);
        let ie12 = e12.i_times();
        let img = map.apply(&ie12).unwrap();
        assert!(
            img.block(1)
                .distance(&CMatrix::unit(2, 0, 1).scale(c64(0.0, -1.0)))
                < 1e-15
        );
    }

    #[test]
    fn json_round_trip_and_validation() {
        let spec = StarAlgebraSpec::new(vec![1, 2]).unwrap();
        let map = RealLinearMap::conjugation(&spec);
        let text = serde_json::to_string(&map).unwrap();
        assert!(text.starts_with(
            r#"{"source":{"blocks":[1,2]},"target":{"blocks":[1,2]},"images":[{"blocks":["#
        ));
        let back: RealLinearMap = serde_json::from_str(&text).unwrap();
        assert_eq!(back, map);

        let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
        v["images"].as_array_mut().unwrap().pop();
        assert!(serde_json::from_value::<RealLinearMap>(v).is_err());
    }

    #[test]
    fn apply_rejects_wrong_spec() {
        let map = RealLinearMap::identity(&StarAlgebraSpec::full(2));
        let x = AlgebraElement::unit(&StarAlgebraSpec::full(3));
        assert!(matches!(map.apply(&x), Err(Error::SpecMismatch(_))));
    }

    #[test]
    fn jordan_part_agrees_on_hermitian_inputs() {
        let spec = StarAlgebraSpec::new(vec![2, 1]).unwrap();
        let map = RealLinearMap::transpose(&spec);
        let jm = map.jordan_part();
        let mut rng = seeded_rng(2);
        let a = AlgebraElement::random_hermitian(&spec, &mut rng);
        assert!(jm.apply(&a).unwrap().distance(&map.apply(&a).unwrap()) < 1e-14);
    }
}
