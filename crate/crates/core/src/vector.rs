//! Sparse elements of graded free modules.
//!
//! Terms are ordered position-over-term: a lower basis index beats any
//! monomial, and within one position the graded-revlex order decides.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::field::Fp;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::GradedRing;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VTerm {
    pub pos: u32,
    pub mono: Monomial,
    pub coef: u64,
}

#[inline]
pub fn term_cmp(pa: u32, ma: &Monomial, pb: u32, mb: &Monomial) -> Ordering {
    pb.cmp(&pa).then_with(|| ma.cmp(mb))
}

/// Key type whose `Ord` is the module term order.
#[derive(Clone, PartialEq, Eq)]
struct TermKey(u32, Monomial);

impl Ord for TermKey {
    fn cmp(&self, other: &Self) -> Ordering {
        term_cmp(self.0, &self.1, other.0, &other.1)
    }
}

impl PartialOrd for TermKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A module element as a strictly descending list of nonzero terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Vector {
    terms: Vec<VTerm>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn from_terms(field: Fp, terms: impl IntoIterator<Item = VTerm>) -> Self {
        let mut acc: BTreeMap<TermKey, u64> = BTreeMap::new();
        for t in terms {
            let e = acc.entry(TermKey(t.pos, t.mono)).or_insert(0);
            *e = field.add(*e, field.reduce(t.coef));
        }
        Vector {
            terms: acc
                .into_iter()
                .rev()
                .filter(|(_, c)| *c != 0)
                .map(|(TermKey(pos, mono), coef)| VTerm { pos, mono, coef })
                .collect(),
        }
    }

    /// Unit vector `e_pos`.
    pub fn basis(pos: usize, nvars: usize) -> Self {
        Vector {
            terms: vec![VTerm {
                pos: pos as u32,
                mono: Monomial::one(nvars),
                coef: 1,
            }],
        }
    }

    /// Build from one polynomial per coordinate.
    pub fn from_coordinates(coords: &[Polynomial]) -> Self {
        let mut terms = Vec::new();
        for (i, p) in coords.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(VTerm {
                    pos: i as u32,
                    mono: m.clone(),
                    coef: *c,
                });
            }
        }
        // coordinates are individually sorted and positions ascend, which
        // is already the descending module order
        Vector { terms }
    }

    pub fn coordinates(&self, ring: &GradedRing, rank: usize) -> Vec<Polynomial> {
        let mut per: Vec<Vec<(Monomial, u64)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            per[t.pos as usize].push((t.mono.clone(), t.coef));
        }
        per.into_iter()
            .map(|ts| Polynomial::from_sorted_terms(ring, ts))
            .collect()
    }

    pub fn coordinate(&self, ring: &GradedRing, pos: usize) -> Polynomial {
        let ts = self
            .terms
            .iter()
            .filter(|t| t.pos as usize == pos)
            .map(|t| (t.mono.clone(), t.coef))
            .collect();
        Polynomial::from_sorted_terms(ring, ts)
    }

    pub fn terms(&self) -> &[VTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_pos(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.pos).max()
    }

    /// Degree of a term given the basis shifts.
    #[inline]
    pub fn term_degree(t: &VTerm, shifts: &[i32]) -> i32 {
        shifts[t.pos as usize] + t.mono.degree() as i32
    }

    /// `Some(d)` if homogeneous of degree `d` (None for zero or mixed).
    pub fn homogeneous_degree(&self, shifts: &[i32]) -> Option<i32> {
        let d = Self::term_degree(self.terms.first()?, shifts);
        self.terms
            .iter()
            .all(|t| Self::term_degree(t, shifts) == d)
            .then_some(d)
    }

    pub fn scale(&self, field: Fp, c: u64) -> Vector {
        let c = field.reduce(c);
        if c == 0 {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    pos: t.pos,
                    mono: t.mono.clone(),
                    coef: field.mul(t.coef, c),
                })
                .collect(),
        }
    }

    /// Scale so that the leading coefficient is 1.
    pub fn make_monic(&mut self, field: Fp) {
        if let Some(t) = self.terms.first() {
            if t.coef != 1 {
                let inv = field.inv(t.coef);
                for t in &mut self.terms {
                    t.coef = field.mul(t.coef, inv);
                }
            }
        }
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, field: Fp, c: u64, m: &Monomial, other: &Vector) -> Vector {
        let c = field.reduce(c);
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let a = &self.terms;
        let (mut i, mut j) = (0, 0);
        let mut pending: Option<VTerm> = None;
        loop {
            if pending.is_none() && j < other.terms.len() {
                let t = &other.terms[j];
                pending = Some(VTerm {
                    pos: t.pos,
                    mono: t.mono.mul(m),
                    coef: field.mul(t.coef, c),
                });
                j += 1;
            }
            match (&pending, a.get(i)) {
                (None, None) => break,
                (None, Some(x)) => {
                    out.push(x.clone());
                    i += 1;
                }
                (Some(_), None) => out.push(pending.take().unwrap()),
                (Some(y), Some(x)) => match term_cmp(x.pos, &x.mono, y.pos, &y.mono) {
                    Ordering::Greater => {
                        out.push(x.clone());
                        i += 1;
                    }
                    Ordering::Less => out.push(pending.take().unwrap()),
                    Ordering::Equal => {
                        let s = field.add(x.coef, y.coef);
                        if s != 0 {
                            out.push(VTerm {
                                pos: x.pos,
                                mono: x.mono.clone(),
                                coef: s,
                            });
                        }
                        pending = None;
                        i += 1;
                    }
                },
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, field: Fp, other: &Vector) -> Vector {
        let one = match (self.terms.first(), other.terms.first()) {
            (Some(t), _) | (None, Some(t)) => Monomial::one(t.mono.nvars()),
            (None, None) => return Vector::zero(),
        };
        self.add_scaled(field, 1, &one, other)
    }

    pub fn sub(&self, field: Fp, other: &Vector) -> Vector {
        let one = match (self.terms.first(), other.terms.first()) {
            (Some(t), _) | (None, Some(t)) => Monomial::one(t.mono.nvars()),
            (None, None) => return Vector::zero(),
        };
        self.add_scaled(field, field.neg(1), &one, other)
    }

    /// Multiply every coordinate by a polynomial.
    pub fn mul_poly(&self, field: Fp, p: &Polynomial) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = acc.add_scaled(field, *c, m, self);
        }
        acc
    }

    /// Translate positions by `offset` (used to place a vector into a
    /// direct sum).
    pub fn shift_positions(&self, offset: u32) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| VTerm {
                    pos: t.pos + offset,
                    mono: t.mono.clone(),
                    coef: t.coef,
                })
                .collect(),
        }
    }

    /// Keep positions in `range`, renumbered from 0.
    pub fn restrict(&self, range: std::ops::Range<u32>) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| range.contains(&t.pos))
                .map(|t| VTerm {
                    pos: t.pos - range.start,
                    mono: t.mono.clone(),
                    coef: t.coef,
                })
                .collect(),
        }
    }

    /// Apply a position map; positions mapped to `None` are dropped. The
    /// map must be order preserving on retained positions.
    pub fn reindex(&self, map: &[Option<u32>]) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter_map(|t| {
                    map[t.pos as usize].map(|pos| VTerm {
                        pos,
                        mono: t.mono.clone(),
                        coef: t.coef,
                    })
                })
                .collect(),
        }
    }

    /// Apply a module homomorphism given by the images of basis vectors.
    pub fn apply(&self, field: Fp, images: &[Vector]) -> Vector {
        let mut acc = Vector::zero();
        for t in &self.terms {
            acc = acc.add_scaled(field, t.coef, &t.mono, &images[t.pos as usize]);
        }
        acc
    }

    /// Re-express monomials in a joined ring where this ring's variables
    /// sit at `offset..offset+r` among `total` variables.
    pub fn embed_vars(&self, offset: usize, total: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let r = t.mono.nvars();
                    VTerm {
                        pos: t.pos,
                        mono: t.mono.pad_left(offset).pad_right(total - offset - r),
                        coef: t.coef,
                    }
                })
                .collect(),
        }
    }

    /// External tensor product `v ⊗ w` in `F1 ⊗ F2` (basis `(i, k)` at
    /// index `i * rank2 + k`), monomials concatenated.
    pub fn tensor(&self, field: Fp, other: &Vector, rank2: usize) -> Vector {
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(VTerm {
                    pos: a.pos * rank2 as u32 + b.pos,
                    mono: a.mono.concat(&b.mono),
                    coef: field.mul(a.coef, b.coef),
                });
            }
        }
        Vector::from_terms(field, terms)
    }

    /// True if some coordinate has a nonzero constant term; returns the
    /// first such position.
    pub fn unit_position(&self) -> Option<(u32, u64)> {
        self.terms
            .iter()
            .filter(|t| t.mono.is_one())
            .map(|t| (t.pos, t.coef))
            .next()
    }
}


impl Vector {
    /// Wrap terms already in strictly descending order.
    pub(crate) fn from_sorted(terms: Vec<VTerm>) -> Vector {
        Vector { terms }
    }

    /// The vector with its first `skip` terms removed.
    pub(crate) fn from_sorted_tail(v: &Vector, skip: usize) -> Vector {
        Vector {
            terms: v.terms[skip..].to_vec(),
        }
    }
}
