//! Sparse multivariate polynomials over F_p and their text syntax.
//!
//! Text syntax: terms joined by `+` (or `-`), each term an optional integer
//! coefficient `*`-joined with `var^exp` factors, e.g. `2*t1^2*t2 + t2^3`.
//! Printing always uses canonical coefficients `1..p` and descending
//! graded-revlex term order, so `print(parse(s))` is a fixed point.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::GradedRing;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: GradedRing,
    /// Nonzero terms, strictly descending in the monomial order.
    terms: Vec<(Monomial, u64)>,
}

pub(crate) fn collect_terms(acc: BTreeMap<Monomial, u64>) -> Vec<(Monomial, u64)> {
    acc.into_iter().rev().filter(|(_, c)| *c != 0).collect()
}

impl Polynomial {
    pub fn zero(ring: &GradedRing) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &GradedRing, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        let terms = if c == 0 {
            Vec::new()
        } else {
            vec![(Monomial::one(ring.num_vars()), c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &GradedRing) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &GradedRing, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(i, ring.var_degrees()), 1)],
        }
    }

    pub fn monomial(ring: &GradedRing, exps: &[u16], c: i64) -> Self {
        let c = ring.field().from_i64(c);
        let terms = if c == 0 {
            Vec::new()
        } else {
            vec![(Monomial::from_exponents(exps, ring.var_degrees()), c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Build from arbitrary (unsorted, possibly repeated) terms.
    pub fn from_terms(ring: &GradedRing, terms: impl IntoIterator<Item = (Monomial, u64)>) -> Self {
        let f = ring.field();
        let mut acc: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = f.add(*e, f.reduce(c));
        }
        Polynomial {
            ring: ring.clone(),
            terms: collect_terms(acc),
        }
    }

    pub(crate) fn from_sorted_terms(ring: &GradedRing, terms: Vec<(Monomial, u64)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, u64)> {
        self.terms.first()
    }

    /// `Some(d)` if every term has weighted degree `d`; `None` for
    /// inhomogeneous polynomials and for zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms
            .iter()
            .all(|(m, _)| m.degree() == d)
            .then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Constant coefficient (0 if absent).
    pub fn constant_coefficient(&self) -> u64 {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let f = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take = if i == self.terms.len() {
                std::cmp::Ordering::Less
            } else if j == other.terms.len() {
                std::cmp::Ordering::Greater
            } else {
                self.terms[i].0.cmp(&other.terms[j].0)
            };
            match take {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { f.neg(*c) } else { *c }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c2 = other.terms[j].1;
                    let c = if negate {
                        f.sub(self.terms[i].1, c2)
                    } else {
                        f.add(self.terms[i].1, c2)
                    };
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let f = self.ring.field();
        let mut acc: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = f.add(*e, f.mul(*ca, *cb));
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: collect_terms(acc),
        })
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let f = self.ring.field();
        let c = f.reduce(c);
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), f.mul(*a, c)))
                .collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// Reinterpret in a joined ring where this ring's variables occupy
    /// positions `offset..offset+r` out of `target.num_vars()`.
    pub fn embed(&self, target: &GradedRing, offset: usize) -> Polynomial {
        let r = self.ring.num_vars();
        let after = target.num_vars() - offset - r;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.pad_left(offset).pad_right(after), *c));
        Polynomial::from_terms(target, terms)
    }

    pub fn parse(ring: &GradedRing, text: &str) -> Result<Polynomial> {
        parse_polynomial(ring, text).map_err(|(col, message)| Error::Parse {
            line: 1,
            column: col + 1,
            message,
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                if *c != 1 {
                    write!(f, "{c}*")?;
                }
                m.write_with_names(self.ring.var_names(), f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> std::result::Result<u128, (usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err((start, "expected a number".into()));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u128>()
            .map_err(|_| (start, "number too large".into()))
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }
}

/// Parse the polynomial text syntax; errors carry a 0-based byte offset.
pub(crate) fn parse_polynomial(
    ring: &GradedRing,
    text: &str,
) -> std::result::Result<Polynomial, (usize, String)> {
    let f = ring.field();
    let p = f.characteristic() as u128;
    let r = ring.num_vars();
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    if lx.peek().is_none() {
        return Err((0, "empty polynomial".into()));
    }
    let mut terms: Vec<(Monomial, u64)> = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match lx.peek() {
            Some(b'+') if !first => lx.pos += 1,
            Some(b'-') => {
                lx.pos += 1;
                negative = true;
            }
            Some(b'+') => lx.pos += 1,
            Some(_) if first => {}
            Some(c) => return Err((lx.pos, format!("expected `+` or `-`, found `{}`", c as char))),
            None => break,
        }
        first = false;
        let mut coeff: u64 = 1;
        let mut exps = vec![0u16; r];
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = lx.number()?;
                    coeff = f.mul(coeff, (n % p) as u64);
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = lx.pos;
                    let name = lx.ident();
                    let idx = ring
                        .var_index(name)
                        .ok_or_else(|| (start, format!("unknown variable `{name}`")))?;
                    let mut e: u128 = 1;
                    if lx.peek() == Some(b'^') {
                        lx.pos += 1;
                        let at = lx.pos;
                        e = lx.number()?;
                        if e > u16::MAX as u128 {
                            return Err((at, "exponent too large".into()));
                        }
                    }
                    let total = exps[idx] as u128 + e;
                    if total > u16::MAX as u128 {
                        return Err((start, "exponent too large".into()));
                    }
                    exps[idx] = total as u16;
                }
                Some(c) => return Err((lx.pos, format!("unexpected `{}`", c as char))),
                None => return Err((lx.pos, "unexpected end of input".into())),
            }
            if lx.peek() == Some(b'*') {
                lx.pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = f.neg(coeff);
        }
        terms.push((Monomial::from_exponents(&exps, ring.var_degrees()), coeff));
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}
