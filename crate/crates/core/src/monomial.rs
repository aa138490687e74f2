//! Exponent vectors ordered by weighted graded reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A monomial `t1^e1 ... tr^er` together with its weighted degree.
///
/// The weighted degree is cached so that the graded-revlex comparison needs
/// no ring context. All monomials that are compared must come from the same
/// ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: SmallVec<[u16; 6]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            deg: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exponents(exps: &[u16], weights: &[u32]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let deg = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w)
            .sum();
        Monomial {
            deg,
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn var(i: usize, weights: &[u32]) -> Self {
        let mut exps: SmallVec<[u16; 6]> = SmallVec::from_elem(0, weights.len());
        exps[i] = 1;
        Monomial {
            deg: weights[i],
            exps,
        }
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            deg: self.deg + other.deg,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            deg: other.deg - self.deg,
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: SmallVec<[u16; 6]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::from_exponents(&exps, weights)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Concatenate exponent vectors (monomial of a joined ring).
    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend_from_slice(&other.exps);
        Monomial {
            deg: self.deg + other.deg,
            exps,
        }
    }

    pub fn pad_left(&self, before: usize) -> Monomial {
        let mut exps: SmallVec<[u16; 6]> = SmallVec::from_elem(0, before);
        exps.extend_from_slice(&self.exps);
        Monomial {
            deg: self.deg,
            exps,
        }
    }

    pub fn pad_right(&self, after: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(after));
        Monomial {
            deg: self.deg,
            exps,
        }
    }

    pub fn write_with_names(&self, names: &[String], f: &mut impl fmt::Write) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(&names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e, &vec![1; e.len()])
    }

    #[test]
    fn grevlex_three_vars() {
        // x^2 > xy > y^2 > xz > yz > z^2
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert!(w[0] > w[1], "{:?} > {:?}", w[0], w[1]);
        }
        assert!(m(&[0, 0, 1]) > m(&[0, 0, 0]));
    }

    #[test]
    fn weighted_degree_dominates() {
        let w = [2, 1];
        let a = Monomial::from_exponents(&[1, 0], &w);
        let b = Monomial::from_exponents(&[0, 1], &w);
        assert!(a > b);
        let c = Monomial::from_exponents(&[0, 2], &w);
        assert!(a > c);
        assert_eq!(a.lcm(&c, &w).degree(), 4);
    }

    #[test]
    fn division() {
        let a = m(&[1, 2]);
        let b = m(&[2, 3]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), m(&[1, 1]));
        assert!(!b.divides(&a));
    }
}
