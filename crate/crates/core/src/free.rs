//! Graded free modules `R[a1] ⊕ ... ⊕ R[an]` and their elements.
//!
//! A shift `m` means the basis element sits in degree `m` (degrees shifted
//! upwards by `m`), so `Hom(R[a], R) = R[-a]`.

use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::poly::Polynomial;
use crate::ring::GradedRing;
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleSpec {
    ring: GradedRing,
    shifts: Vec<i32>,
}

impl FreeModuleSpec {
    pub fn new(ring: &GradedRing, shifts: Vec<i32>) -> Self {
        FreeModuleSpec {
            ring: ring.clone(),
            shifts,
        }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn shifts(&self) -> &[i32] {
        &self.shifts
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn dual(&self) -> FreeModuleSpec {
        FreeModuleSpec::new(&self.ring, self.shifts.iter().map(|s| -s).collect())
    }

    pub fn direct_sum(&self, other: &FreeModuleSpec) -> Result<FreeModuleSpec> {
        self.ring.check_same(&other.ring)?;
        let mut shifts = self.shifts.clone();
        shifts.extend_from_slice(&other.shifts);
        Ok(FreeModuleSpec::new(&self.ring, shifts))
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::free(&self.shifts, self.ring.var_degrees())
    }

    pub fn basis(&self, i: usize) -> FreeElement {
        FreeElement {
            module: self.clone(),
            vector: Vector::basis(i, self.ring.num_vars()),
        }
    }
}

/// Free-module Hilbert series; see [`FreeModuleSpec::hilbert_series`].
pub fn free_hilbert_series(spec: &FreeModuleSpec) -> HilbertSeries {
    spec.hilbert_series()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElement {
    module: FreeModuleSpec,
    vector: Vector,
}

impl FreeElement {
    pub fn from_coordinates(module: &FreeModuleSpec, coords: Vec<Polynomial>) -> Result<Self> {
        if coords.len() != module.rank() {
            return Err(Error::ModuleMismatch(format!(
                "{} coordinates for a module of rank {}",
                coords.len(),
                module.rank()
            )));
        }
        for c in &coords {
            module.ring.check_same(c.ring())?;
        }
        Ok(FreeElement {
            module: module.clone(),
            vector: Vector::from_coordinates(&coords),
        })
    }

    pub(crate) fn from_vector(module: &FreeModuleSpec, vector: Vector) -> Self {
        debug_assert!(vector.max_pos().map_or(true, |p| (p as usize) < module.rank()));
        FreeElement {
            module: module.clone(),
            vector,
        }
    }

    pub fn zero(module: &FreeModuleSpec) -> Self {
        Self::from_vector(module, Vector::zero())
    }

    pub fn module(&self) -> &FreeModuleSpec {
        &self.module
    }

    pub fn vector(&self) -> &Vector {
        &self.vector
    }

    pub fn into_vector(self) -> Vector {
        self.vector
    }

    pub fn coordinates(&self) -> Vec<Polynomial> {
        self.vector.coordinates(&self.module.ring, self.module.rank())
    }

    pub fn is_zero(&self) -> bool {
        self.vector.is_zero()
    }

    /// Degree if homogeneous; zero is homogeneous of every degree and
    /// reports `None`.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        self.vector.homogeneous_degree(&self.module.shifts)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Coordinate `i` homogeneous of degree `d - shifts[i]` for all `i`.
    pub fn is_homogeneous_of(&self, d: i32) -> bool {
        self.is_zero() || self.homogeneous_degree() == Some(d)
    }

    pub fn add(&self, other: &FreeElement) -> Result<FreeElement> {
        if self.module != other.module {
            return Err(Error::ModuleMismatch("adding elements of different modules".into()));
        }
        let f = self.module.ring.field();
        Ok(Self::from_vector(&self.module, self.vector.add(f, &other.vector)))
    }

    pub fn scale_by(&self, p: &Polynomial) -> Result<FreeElement> {
        self.module.ring.check_same(p.ring())?;
        let f = self.module.ring.field();
        Ok(Self::from_vector(&self.module, self.vector.mul_poly(f, p)))
    }
}

impl std::fmt::Display for FreeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coordinates().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::LaurentPoly;

    #[test]
    fn free_series_examples() {
        let r = GradedRing::standard(3, 2).unwrap();
        assert_eq!(
            free_hilbert_series(&FreeModuleSpec::new(&r, vec![0])).to_string(),
            "1/(1 - q^2)^2"
        );
        assert_eq!(
            free_hilbert_series(&FreeModuleSpec::new(&r, vec![2])).to_string(),
            "q^2/(1 - q^2)^2"
        );
    }

    #[test]
    fn exterior_cover_series() {
        // shifts {k with multiplicity C(r,k)} give (1+q)^r/(1-q^2)^r = 1/(1-q)^r
        for rk in 1..=3usize {
            let r = GradedRing::standard(5, rk).unwrap();
            let mut shifts = Vec::new();
            for s in 0..(1u32 << rk) {
                shifts.push(s.count_ones() as i32);
            }
            let hs = free_hilbert_series(&FreeModuleSpec::new(&r, shifts));
            let target = HilbertSeries::new(LaurentPoly::monomial(0, 1), vec![1; rk]);
            assert_eq!(hs, target);
        }
    }

    #[test]
    fn direct_sum_series_is_sum() {
        let r = GradedRing::standard(3, 2).unwrap();
        let a = FreeModuleSpec::new(&r, vec![0, 3]);
        let b = FreeModuleSpec::new(&r, vec![-1]);
        assert_eq!(
            a.direct_sum(&b).unwrap().hilbert_series(),
            a.hilbert_series().add(&b.hilbert_series())
        );
    }

    #[test]
    fn homogeneity_of_elements() {
        let r = GradedRing::standard(3, 2).unwrap();
        let f = FreeModuleSpec::new(&r, vec![2, 2]);
        let v = FreeElement::from_coordinates(
            &f,
            vec![Polynomial::var(&r, 1), Polynomial::var(&r, 0).neg()],
        )
        .unwrap();
        assert!(v.is_homogeneous_of(4));
        assert!(!v.is_homogeneous_of(2));
        assert!(FreeElement::from_coordinates(&f, vec![Polynomial::one(&r)]).is_err());
    }
}
