//! Hilbert series kept as `numerator / prod (1 - q^d)` with a symbolic
//! denominator. The numerator is an integer Laurent polynomial because
//! module shifts may be negative.

use std::fmt;

use serde::Serialize;

/// Integer Laurent polynomial `sum c_k q^(low + k)`, trimmed on both ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(exp: i32, c: i64) -> Self {
        let mut p = LaurentPoly {
            low: exp,
            coeffs: vec![c],
        };
        p.trim();
        p
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut acc = LaurentPoly::zero();
        for (e, c) in pairs {
            acc = acc.add(&LaurentPoly::monomial(e, c));
        }
        acc
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> i32 {
        self.low
    }

    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeff(&self, e: i32) -> i64 {
        if self.is_zero() || e < self.low || e > self.high() {
            0
        } else {
            self.coeffs[(e - self.low) as usize]
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn pairs(&self) -> Vec<(i32, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.low + i as i32, c))
            .collect()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let coeffs = (low..=high)
            .map(|e| self.coeff(e) + other.coeff(e))
            .collect();
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = LaurentPoly {
            low: self.low + other.low,
            coeffs,
        };
        p.trim();
        p
    }

    pub fn shift(&self, k: i32) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// `1 - q^d`.
    pub fn one_minus(d: u32) -> LaurentPoly {
        LaurentPoly::from_pairs([(0, 1), (d as i32, -1)])
    }

    /// Exact quotient by `1 - q^d`, if it exists.
    pub fn div_one_minus(&self, d: u32) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        // f = (1 - q^d) g  <=>  g_k = f_k + g_{k-d}, with g = 0 past deg f - d
        let d = d as usize;
        let n = self.coeffs.len();
        if n <= d {
            return None;
        }
        let mut g = vec![0i64; n - d];
        for k in 0..n {
            let prev = if k >= d { g[k - d] } else { 0 };
            let val = self.coeffs[k] + prev;
            if k < n - d {
                g[k] = val;
            } else if val != 0 {
                return None;
            }
        }
        let mut p = LaurentPoly {
            low: self.low,
            coeffs: g,
        };
        p.trim();
        Some(p)
    }

    /// Multiplicity of `q = 1` as a root.
    pub fn order_at_one(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_one_minus(1) {
            p = q;
            k += 1;
        }
        Some(k)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.pairs().into_iter().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (e, 1) => write_q(f, e)?,
                (e, m) => {
                    write!(f, "{m}*")?;
                    write_q(f, e)?
                }
            }
        }
        Ok(())
    }
}

fn write_q(f: &mut fmt::Formatter<'_>, e: i32) -> fmt::Result {
    if e == 1 {
        f.write_str("q")
    } else {
        write!(f, "q^{e}")
    }
}

/// `numerator / prod_{d in denominator} (1 - q^d)`.
#[derive(Clone, Debug)]
pub struct HilbertSeries {
    numerator: LaurentPoly,
    /// Sorted ascending; a multiset of generator degrees.
    denominator: Vec<u32>,
}

/// Machine-readable form of a Hilbert series.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HilbertRecord {
    pub numerator: Vec<(i32, i64)>,
    pub denominator: Vec<u32>,
    pub text: String,
}

impl HilbertSeries {
    pub fn new(numerator: LaurentPoly, mut denominator: Vec<u32>) -> Self {
        denominator.sort_unstable();
        HilbertSeries {
            numerator,
            denominator,
        }
    }

    pub fn zero(denominator: &[u32]) -> Self {
        Self::new(LaurentPoly::zero(), denominator.to_vec())
    }

    /// `sum_i q^shift_i / prod_j (1 - q^deg_j)`.
    pub fn free(shifts: &[i32], var_degrees: &[u32]) -> Self {
        Self::new(
            LaurentPoly::from_pairs(shifts.iter().map(|&s| (s, 1))),
            var_degrees.to_vec(),
        )
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[u32] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn denominator_poly(degs: &[u32]) -> LaurentPoly {
        degs.iter().fold(LaurentPoly::monomial(0, 1), |acc, &d| {
            acc.mul(&LaurentPoly::one_minus(d))
        })
    }

    /// Rewrite over the denominator `target`, which must contain ours as a
    /// sub-multiset.
    fn lift_to(&self, target: &[u32]) -> LaurentPoly {
        let mut missing = target.to_vec();
        for d in &self.denominator {
            let i = missing
                .iter()
                .position(|x| x == d)
                .expect("denominator is not a sub-multiset");
            missing.remove(i);
        }
        self.numerator.mul(&Self::denominator_poly(&missing))
    }

    fn common_denominator(a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = a.to_vec();
        let mut rest = b.to_vec();
        for d in a {
            if let Some(i) = rest.iter().position(|x| x == d) {
                rest.remove(i);
            }
        }
        out.extend(rest);
        out.sort_unstable();
        out
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let den = Self::common_denominator(&self.denominator, &other.denominator);
        HilbertSeries::new(self.lift_to(&den).add(&other.lift_to(&den)), den)
    }

    pub fn neg(&self) -> HilbertSeries {
        HilbertSeries::new(self.numerator.neg(), self.denominator.clone())
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        self.add(&other.neg())
    }

    /// Product (the series of an external tensor product).
    pub fn mul(&self, other: &HilbertSeries) -> HilbertSeries {
        let mut den = self.denominator.clone();
        den.extend_from_slice(&other.denominator);
        HilbertSeries::new(self.numerator.mul(&other.numerator), den)
    }

    pub fn mul_laurent(&self, p: &LaurentPoly) -> HilbertSeries {
        HilbertSeries::new(self.numerator.mul(p), self.denominator.clone())
    }

    /// Multiply by `q^k` (the series of `M[k]`).
    pub fn shift(&self, k: i32) -> HilbertSeries {
        HilbertSeries::new(self.numerator.shift(k), self.denominator.clone())
    }

    /// Cancel denominator factors that divide the numerator, trying larger
    /// degrees first.
    pub fn reduced(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut den = self.denominator.clone();
        if num.is_zero() {
            return HilbertSeries::new(num, Vec::new());
        }
        let mut i = den.len();
        while i > 0 {
            i -= 1;
            if let Some(q) = num.div_one_minus(den[i]) {
                num = q;
                den.remove(i);
                i = den.len();
            }
        }
        HilbertSeries::new(num, den)
    }

    /// Order of the pole at `q = 1`; `None` for the zero series.
    pub fn pole_order(&self) -> Option<usize> {
        let k = self.numerator.order_at_one()?;
        Some(self.denominator.len().saturating_sub(k))
    }

    /// Coefficients of `q^from ..= q^to` in the power series expansion.
    pub fn expand(&self, from: i32, to: i32) -> Vec<i64> {
        if to < from {
            return Vec::new();
        }
        if self.numerator.is_zero() {
            return vec![0; (to - from + 1) as usize];
        }
        let low = self.numerator.low().min(from);
        let len = (to - low + 1) as usize;
        let mut series: Vec<i64> = (0..len).map(|k| self.numerator.coeff(low + k as i32)).collect();
        for &d in &self.denominator {
            let d = d as usize;
            for k in d..len {
                series[k] += series[k - d];
            }
        }
        series[(from - low) as usize..].to_vec()
    }

    pub fn record(&self) -> HilbertRecord {
        let red = self.reduced();
        HilbertRecord {
            numerator: red.numerator.pairs(),
            denominator: red.denominator.clone(),
            text: red.to_string(),
        }
    }
}

impl PartialEq for HilbertSeries {
    fn eq(&self, other: &Self) -> bool {
        let den = Self::common_denominator(&self.denominator, &other.denominator);
        self.lift_to(&den) == other.lift_to(&den)
    }
}

impl Eq for HilbertSeries {}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.to_string();
        if self.denominator.is_empty() || self.numerator.is_zero() {
            return f.write_str(&num);
        }
        if self.numerator.pairs().len() > 1 {
            write!(f, "({num})")?;
        } else {
            f.write_str(&num)?;
        }
        f.write_str("/")?;
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &d in &self.denominator {
            match groups.last_mut() {
                Some((g, n)) if *g == d => *n += 1,
                _ => groups.push((d, 1)),
            }
        }
        let many = groups.len() > 1;
        if many {
            f.write_str("(")?;
        }
        for (i, (d, n)) in groups.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *d == 1 {
                f.write_str("(1 - q)")?;
            } else {
                write!(f, "(1 - q^{d})")?;
            }
            if *n > 1 {
                write!(f, "^{n}")?;
            }
        }
        if many {
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_series() {
        let r = HilbertSeries::free(&[0], &[2, 2]);
        assert_eq!(r.to_string(), "1/(1 - q^2)^2");
        let r2 = HilbertSeries::free(&[2], &[2, 2]);
        assert_eq!(r2.to_string(), "q^2/(1 - q^2)^2");
    }

    #[test]
    fn exterior_free_cover_collapses() {
        // shifts {0,1,1,2} over two degree-2 variables
        let rg = HilbertSeries::free(&[0, 1, 1, 2], &[2, 2]);
        let target = HilbertSeries::new(LaurentPoly::monomial(0, 1), vec![1, 1]);
        assert_eq!(rg, target);
        assert_eq!(rg.pole_order(), Some(2));
    }

    #[test]
    fn reduction_and_pole() {
        let k = HilbertSeries::new(
            LaurentPoly::one_minus(2).mul(&LaurentPoly::one_minus(2)),
            vec![2, 2],
        );
        assert_eq!(k.reduced().to_string(), "1");
        assert_eq!(k.pole_order(), Some(0));
        assert_eq!(HilbertSeries::zero(&[2]).pole_order(), None);
    }

    #[test]
    fn expansion() {
        // (1+q)/(1-q) = 1 + 2q + 2q^2 + ...
        let s = HilbertSeries::new(LaurentPoly::from_pairs([(0, 1), (1, 1)]), vec![1]);
        assert_eq!(s.expand(-1, 3), vec![0, 1, 2, 2, 2]);
        let m = HilbertSeries::free(&[2, 2], &[2, 2]).sub(&HilbertSeries::free(&[4], &[2, 2]));
        assert_eq!(m.expand(0, 6), vec![0, 0, 2, 0, 3, 0, 4]);
    }

    #[test]
    fn sum_is_additive() {
        let a = HilbertSeries::free(&[0, 3], &[2]);
        let b = HilbertSeries::free(&[1], &[2]);
        assert_eq!(a.add(&b), HilbertSeries::free(&[0, 1, 3], &[2]));
        let c = HilbertSeries::free(&[0], &[1]);
        let s = a.add(&c);
        assert_eq!(s.sub(&c), a);
    }

    #[test]
    fn display_negative() {
        let p = LaurentPoly::from_pairs([(2, 2), (4, -1)]);
        assert_eq!(p.to_string(), "2*q^2 - q^4");
    }
}
