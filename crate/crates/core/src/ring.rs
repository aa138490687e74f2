//! Graded polynomial rings F_p[t1, ..., tr] with positive generator degrees.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Fp;

/// Degree of a polynomial generator when none is given.
pub const DEFAULT_VAR_DEGREE: u32 = 2;

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    field: Fp,
    names: Vec<String>,
    degrees: Vec<u32>,
}

/// The ambient polynomial ring. Cheap to clone; clones share storage.
#[derive(Clone)]
pub struct GradedRing(Arc<RingData>);

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GradedRing {
    pub fn new(p: u64, names: Vec<String>, degrees: Vec<u32>) -> Result<Self> {
        let field = Fp::new(p)?;
        if names.len() != degrees.len() {
            return Err(Error::InvalidRing(format!(
                "{} variable names but {} degrees",
                names.len(),
                degrees.len()
            )));
        }
        if let Some(d) = degrees.iter().find(|&&d| d == 0) {
            return Err(Error::InvalidRing(format!(
                "variable degrees must be positive, got {d}"
            )));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !is_identifier(n) {
                return Err(Error::InvalidRing(format!("invalid variable name `{n}`")));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable name `{n}`")));
            }
        }
        Ok(GradedRing(Arc::new(RingData {
            field,
            names,
            degrees,
        })))
    }

    /// F_p[t1..tr] with every generator in degree 2.
    pub fn standard(p: u64, r: usize) -> Result<Self> {
        Self::uniform(p, r, DEFAULT_VAR_DEGREE)
    }

    /// F_p[t1..tr] with every generator in degree `deg`.
    pub fn uniform(p: u64, r: usize, deg: u32) -> Result<Self> {
        let names = (1..=r).map(|i| format!("t{i}")).collect();
        Self::new(p, names, vec![deg; r])
    }

    pub fn field(&self) -> Fp {
        self.0.field
    }

    pub fn characteristic(&self) -> u64 {
        self.0.field.characteristic()
    }

    pub fn num_vars(&self) -> usize {
        self.0.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.names
    }

    pub fn var_degrees(&self) -> &[u32] {
        &self.0.degrees
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    /// Join two rings over the same field, variables of `self` first.
    /// Names are kept when they do not collide; otherwise every variable is
    /// renamed `t1..t(r1+r2)`.
    pub fn join(&self, other: &GradedRing) -> Result<GradedRing> {
        if self.characteristic() != other.characteristic() {
            return Err(Error::CharacteristicMismatch(
                self.characteristic(),
                other.characteristic(),
            ));
        }
        let mut names: Vec<String> = self.var_names().to_vec();
        names.extend(other.var_names().iter().cloned());
        let mut degrees = self.var_degrees().to_vec();
        degrees.extend_from_slice(other.var_degrees());
        let distinct = names.iter().collect::<HashSet<_>>().len() == names.len();
        if !distinct {
            names = (1..=names.len()).map(|i| format!("t{i}")).collect();
        }
        GradedRing::new(self.characteristic(), names, degrees)
    }

    pub fn same_as(&self, other: &GradedRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    pub(crate) fn check_same(&self, other: &GradedRing) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for GradedRing {}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedRing({self})")
    }
}

impl fmt::Display for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[", self.characteristic())?;
        for (i, (n, d)) in self.var_names().iter().zip(self.var_degrees()).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}:{d}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_rings() {
        assert_eq!(GradedRing::standard(4, 2).unwrap_err(), Error::NotPrime(4));
        assert!(GradedRing::new(3, vec!["x".into(), "x".into()], vec![1, 1]).is_err());
        assert!(GradedRing::new(3, vec!["x".into()], vec![0]).is_err());
        assert!(GradedRing::new(3, vec!["1x".into()], vec![1]).is_err());
    }

    #[test]
    fn join_renames_on_collision() {
        let a = GradedRing::standard(3, 2).unwrap();
        let b = GradedRing::standard(3, 1).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j.var_names(), &["t1", "t2", "t3"]);
        let c = GradedRing::new(3, vec!["x".into()], vec![1]).unwrap();
        let j = a.join(&c).unwrap();
        assert_eq!(j.var_names(), &["t1", "t2", "x"]);
        assert_eq!(j.var_degrees(), &[2, 2, 1]);
        assert!(a.join(&GradedRing::standard(5, 1).unwrap()).is_err());
    }
}
