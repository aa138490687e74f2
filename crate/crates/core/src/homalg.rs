//! Hom, Ext and the homological invariants built on them: Krull dimension,
//! depth, the Cohen–Macaulay test, duality of Cohen–Macaulay modules,
//! torsion-freeness and reflexivity via the double dual, syzygy order,
//! external tensor products and induction along the exterior algebra.
//!
//! Localizations are never formed. Syzygy order uses the global criterion
//! that a nonzero, non-free `M` is a `j`-th syzygy iff
//! `codim Ext^k(M, R) >= k + j` for every `k >= 1`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner;
use crate::module::{image_module, subquotient, ModulePresentation};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::resolution::{minimal_free_resolution, Measured, Resolution};
use crate::ring::GradedRing;
use crate::vector::{VTerm, Vector};

macro_rules! extended_nat {
    ($name:ident) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum $name {
            Finite(usize),
            Infinity,
        }

        impl $name {
            pub fn finite(self) -> Option<usize> {
                match self {
                    $name::Finite(v) => Some(v),
                    $name::Infinity => None,
                }
            }

            pub fn is_infinite(self) -> bool {
                matches!(self, $name::Infinity)
            }

            /// `self >= j` with `Infinity` above every natural number.
            pub fn at_least(self, j: usize) -> bool {
                self >= $name::Finite(j)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                match self {
                    $name::Finite(v) => write!(f, "{v}"),
                    $name::Infinity => f.write_str("Infinity"),
                }
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                match self {
                    $name::Finite(v) => s.serialize_u64(*v as u64),
                    $name::Infinity => s.serialize_str("Infinity"),
                }
            }
        }
    };
}

extended_nat!(SyzygyOrder);
extended_nat!(Depth);

/// `columns[j]` has coordinates `< rows`; returns the `rows` columns of the
/// transposed matrix.
pub(crate) fn transpose(field: crate::field::Fp, columns: &[Vector], rows: usize) -> Vec<Vector> {
    let mut out: Vec<Vec<VTerm>> = vec![Vec::new(); rows];
    for (j, c) in columns.iter().enumerate() {
        for t in c.terms() {
            out[t.pos as usize].push(VTerm {
                pos: j as u32,
                mono: t.mono.clone(),
                coef: t.coef,
            });
        }
    }
    out.into_iter().map(|ts| Vector::from_terms(field, ts)).collect()
}

fn negated(shifts: &[i32]) -> Vec<i32> {
    shifts.iter().map(|s| -s).collect()
}

/// `Hom_R(M, N)` as a presented module. A homomorphism is recorded by the
/// images of the generators of `M`; the generator `e_i^* ⊗ g_k` has degree
/// `deg g_k - deg e_i`.
pub fn hom_module(m: &ModulePresentation, n: &ModulePresentation) -> Result<ModulePresentation> {
    m.ring().check_same(n.ring())?;
    let ring = m.ring();
    let field = ring.field();
    let m = m.minimal_presentation();
    let n = n.minimal_presentation();
    let (a, b) = (m.cover_shifts(), n.cover_shifts());
    let (n0, m0) = (a.len(), b.len());
    let rel_degs: Vec<i32> = m
        .relations()
        .iter()
        .map(|v| v.homogeneous_degree(a).expect("homogeneous"))
        .collect();
    let h0: Vec<i32> = (0..n0)
        .flat_map(|i| b.iter().map(move |bk| bk - a[i]))
        .collect();
    let h1: Vec<i32> = rel_degs
        .iter()
        .flat_map(|c| b.iter().map(move |bk| bk - c))
        .collect();
    let mut columns = Vec::with_capacity(n0 * m0);
    for i in 0..n0 {
        for k in 0..m0 {
            let mut terms = Vec::new();
            for (j, rel) in m.relations().iter().enumerate() {
                for t in rel.terms().iter().filter(|t| t.pos as usize == i) {
                    terms.push(VTerm {
                        pos: (j * m0 + k) as u32,
                        mono: t.mono.clone(),
                        coef: t.coef,
                    });
                }
            }
            columns.push(Vector::from_terms(field, terms));
        }
    }
    let lift = |count: usize| -> Vec<Vector> {
        let mut out = Vec::new();
        for x in 0..count {
            for rel in n.relations() {
                out.push(rel.shift_positions((x * m0) as u32));
            }
        }
        out
    };
    let rel_b1 = lift(rel_degs.len());
    let rel_b0 = lift(n0);
    let l = groebner::preimage_raw(ring, &h0, &h1, &columns, &rel_b1)?;
    Ok(subquotient(ring, &h0, &l, &rel_b0)?.0)
}

/// `Ext^i_R(M, R)` for every `i` from 0 to the projective dimension,
/// computed as cohomology of the dualized minimal resolution. Empty for the
/// zero module.
pub fn ext_modules(m: &ModulePresentation) -> Vec<ModulePresentation> {
    let res = minimal_free_resolution(m);
    ext_from_resolution(&res)
}

pub fn ext_from_resolution(res: &Resolution) -> Vec<ModulePresentation> {
    if res.is_empty() {
        return Vec::new();
    }
    (0..=res.length())
        .map(|i| ext_at(res, i).expect("resolution data is degree-consistent"))
        .collect()
}

fn ext_at(res: &Resolution, i: usize) -> Result<ModulePresentation> {
    let ring = res.ring();
    let field = ring.field();
    let nv = ring.num_vars();
    let fi = negated(res.module_shifts(i));
    let cycles: Vec<Vector> = if i == res.length() {
        (0..fi.len()).map(|k| Vector::basis(k, nv)).collect()
    } else {
        let next = negated(res.module_shifts(i + 1));
        let cols = transpose(field, res.differential(i + 1), fi.len());
        groebner::kernel_raw(ring, &fi, &next, &cols)?
    };
    let boundaries: Vec<Vector> = if i == 0 {
        Vec::new()
    } else {
        let prev_rank = res.module_shifts(i - 1).len();
        transpose(field, res.differential(i), prev_rank)
    };
    Ok(subquotient(ring, &fi, &cycles, &boundaries)?.0)
}

/// `Ext^i_R(M, R)`; the zero module beyond the projective dimension.
pub fn ext_module(m: &ModulePresentation, i: usize) -> ModulePresentation {
    let res = minimal_free_resolution(m);
    if res.is_empty() || i > res.length() {
        return ModulePresentation::zero(m.ring());
    }
    ext_at(&res, i).expect("resolution data is degree-consistent")
}

/// Indices `i` with `Ext^i(M, R) != 0`.
pub fn ext_support(m: &ModulePresentation) -> Vec<usize> {
    ext_modules(m)
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// Krull dimension of `R / ann` of a monomial ideal given by generators:
/// the largest set of variables containing the support of no generator.
pub(crate) fn monomial_quotient_dimension(nvars: usize, gens: &[Monomial]) -> Option<usize> {
    if gens.iter().any(|g| g.is_one()) {
        return None;
    }
    let supports: Vec<u64> = gens
        .iter()
        .map(|g| g.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    let best = (0u64..(1u64 << nvars))
        .filter(|s| supports.iter().all(|g| g & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0);
    Some(best)
}

/// Dimension of the support of the initial module.
pub fn krull_dimension_initial(m: &ModulePresentation) -> Measured {
    let nv = m.ring().num_vars();
    m.relations_gb()
        .initial_ideals()
        .iter()
        .filter_map(|gens| monomial_quotient_dimension(nv, gens))
        .max()
        .map_or(Measured::ZeroModule, Measured::Value)
}

/// Order of the pole of the Hilbert series at `q = 1`.
pub fn krull_dimension_hilbert(m: &ModulePresentation) -> Measured {
    crate::resolution::hilbert_series(m)
        .pole_order()
        .map_or(Measured::ZeroModule, Measured::Value)
}

/// Krull dimension, computed from the initial module and from the Hilbert
/// series; the two must agree.
pub fn krull_dimension(m: &ModulePresentation) -> Measured {
    let a = krull_dimension_initial(m);
    let b = krull_dimension_hilbert(m);
    assert_eq!(a, b, "Krull dimension routes disagree");
    a
}

fn codim(ring: &GradedRing, m: &ModulePresentation) -> Option<usize> {
    krull_dimension(m).value().map(|d| ring.num_vars() - d)
}

fn depth_from_ext(r: usize, ext: &[ModulePresentation]) -> Depth {
    match ext.iter().rposition(|e| !e.is_zero()) {
        Some(i) => Depth::Finite(r - i),
        None => Depth::Infinity,
    }
}

/// `r - max { i : Ext^i(M, R) != 0 }`, or `Infinity` for the zero module.
pub fn depth(m: &ModulePresentation) -> Depth {
    depth_from_ext(m.ring().num_vars(), &ext_modules(m))
}

/// `Ext^j(M, R) = 0` for every `j != i`. True for the zero module.
pub fn is_cm_of_projdim(m: &ModulePresentation, i: usize) -> bool {
    ext_modules(m)
        .iter()
        .enumerate()
        .all(|(j, e)| j == i || e.is_zero())
}

/// `Ext^i(M, R)` for a module that is zero or Cohen–Macaulay of projective
/// dimension `i`.
pub fn cm_dual(m: &ModulePresentation, i: usize) -> Result<ModulePresentation> {
    let ext = ext_modules(m);
    if let Some((j, _)) = ext.iter().enumerate().find(|(j, e)| *j != i && !e.is_zero()) {
        return Err(Error::Precondition(format!(
            "module is not Cohen–Macaulay of projective dimension {i} (Ext^{j} is nonzero)"
        )));
    }
    Ok(ext
        .into_iter()
        .nth(i)
        .unwrap_or_else(|| ModulePresentation::zero(m.ring())))
}

/// The natural map `M -> M^∨∨` with both ends made explicit.
#[derive(Clone, Debug)]
pub struct DoubleDual {
    /// Minimal presentation of `M` used as the source.
    pub source: ModulePresentation,
    /// `M^∨∨` as a submodule of a free module.
    pub double_dual: ModulePresentation,
    /// Whether the natural map is injective.
    pub injective: bool,
    /// Whether it is bijective (injective and equal Hilbert series).
    pub bijective: bool,
}

pub fn double_dual(m: &ModulePresentation) -> DoubleDual {
    let ring = m.ring();
    let field = ring.field();
    let src = m.minimal_presentation();
    let a = src.cover_shifts().to_vec();
    let dual_cover = negated(&a);
    // M^∨ = ker(A^T) inside F0^*
    let at = transpose(field, src.relations(), a.len());
    let rel_degs: Vec<i32> = src
        .relations()
        .iter()
        .map(|v| -v.homogeneous_degree(&a).expect("homogeneous"))
        .collect();
    let phi = groebner::kernel_raw(ring, &dual_cover, &rel_degs, &at).expect("consistent");
    let (dual, phis) = image_module(ring, &dual_cover, &phi).expect("consistent");
    // M^∨∨ = ker(P^T) inside (cover of M^∨)^*
    let s_shifts = negated(dual.cover_shifts());
    let pt = transpose(field, dual.relations(), s_shifts.len());
    let p_degs: Vec<i32> = dual
        .relations()
        .iter()
        .map(|v| -v.homogeneous_degree(dual.cover_shifts()).expect("homogeneous"))
        .collect();
    let psi = groebner::kernel_raw(ring, &s_shifts, &p_degs, &pt).expect("consistent");
    let (ddual, _) = image_module(ring, &s_shifts, &psi).expect("consistent");
    // theta(e_i) = (phi_1(e_i), ..., phi_s(e_i))
    let theta = transpose(field, &phis, a.len());
    let ker = groebner::kernel_raw(ring, &a, &s_shifts, &theta).expect("consistent");
    let injective = ker.iter().all(|v| src.vanishes(v));
    let bijective = injective
        && crate::resolution::hilbert_series(&src) == crate::resolution::hilbert_series(&ddual);
    DoubleDual {
        source: src,
        double_dual: ddual,
        injective,
        bijective,
    }
}

pub fn is_torsion_free(m: &ModulePresentation) -> bool {
    double_dual(m).injective
}

pub fn is_reflexive(m: &ModulePresentation) -> bool {
    double_dual(m).bijective
}

fn syzygy_order_from_ext(ring: &GradedRing, ext: &[ModulePresentation]) -> SyzygyOrder {
    let mut best: Option<usize> = None;
    for (k, e) in ext.iter().enumerate().skip(1) {
        if let Some(c) = codim(ring, e) {
            let v = c.saturating_sub(k);
            best = Some(best.map_or(v, |b| b.min(v)));
        }
    }
    best.map_or(SyzygyOrder::Infinity, SyzygyOrder::Finite)
}

/// Largest `j` such that `M` is a `j`-th syzygy.
pub fn syzygy_order(m: &ModulePresentation) -> SyzygyOrder {
    syzygy_order_from_ext(m.ring(), &ext_modules(m))
}

/// All Ext-derived invariants from a single resolution.
#[derive(Clone, Debug)]
pub struct HomologicalSummary {
    pub projective_dimension: Measured,
    pub depth: Depth,
    pub krull_dimension: Measured,
    pub syzygy_order: SyzygyOrder,
    /// `i` with `Ext^i(M, R) != 0`.
    pub ext_support: Vec<usize>,
}

impl HomologicalSummary {
    /// The `i` for which `M` is Cohen–Macaulay of projective dimension `i`,
    /// if any (`None` also for the zero module, which qualifies for all).
    pub fn cm_index(&self) -> Option<usize> {
        match self.ext_support.as_slice() {
            [i] => Some(*i),
            _ => None,
        }
    }
}

pub fn summarize(m: &ModulePresentation) -> HomologicalSummary {
    let res = minimal_free_resolution(m);
    let ext = ext_from_resolution(&res);
    let r = m.ring().num_vars();
    HomologicalSummary {
        projective_dimension: res.projective_dimension(),
        depth: depth_from_ext(r, &ext),
        krull_dimension: krull_dimension(m),
        syzygy_order: syzygy_order_from_ext(m.ring(), &ext),
        ext_support: ext
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
            .collect(),
    }
}

/// `M1 ⊗_k M2` over the ring with both variable sets. Generator `(i, k)`
/// sits at index `i * rank(M2) + k`.
pub fn tensor_external(m1: &ModulePresentation, m2: &ModulePresentation) -> Result<ModulePresentation> {
    let ring = m1.ring().join(m2.ring())?;
    let field = ring.field();
    let (r1, r2) = (m1.ring().num_vars(), m2.ring().num_vars());
    let (n1, n2) = (m1.rank(), m2.rank());
    let cover: Vec<i32> = m1
        .cover_shifts()
        .iter()
        .flat_map(|a| m2.cover_shifts().iter().map(move |b| a + b))
        .collect();
    let mut rels = Vec::new();
    for rel in m1.relations() {
        for k in 0..n2 {
            rels.push(rel.tensor(field, &Vector::basis(k, r2), n2));
        }
    }
    for i in 0..n1 {
        for rel in m2.relations() {
            rels.push(Vector::basis(i, r1).tensor(field, rel, n2));
        }
    }
    ModulePresentation::new(&ring, cover, rels)
}

/// Graded basis of the exterior algebra on `r` degree-one generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaAlgebraSpec {
    rank: usize,
}

impl LambdaAlgebraSpec {
    pub fn new(rank: usize) -> Self {
        LambdaAlgebraSpec { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Subsets of `{1..r}` ordered by size, then lexicographically.
    pub fn basis(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0u64..(1u64 << self.rank))
            .map(|mask| (0..self.rank).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect())
            .collect();
        out.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.basis().iter().map(|s| s.len() as i32).collect()
    }
}

/// `Λ ⊗ M ≅ ⊕_S M[|S|]` over the subsets `S` of the variables.
pub fn lambda_induce(m: &ModulePresentation) -> ModulePresentation {
    let lambda = LambdaAlgebraSpec::new(m.ring().num_vars());
    let parts: Vec<ModulePresentation> = lambda.degrees().iter().map(|&d| m.shift(d)).collect();
    ModulePresentation::direct_sum_all(m.ring(), &parts).expect("same ring")
}

fn check_element(ring: &GradedRing, a: &Polynomial) -> Result<u32> {
    ring.check_same(a.ring())?;
    match a.homogeneous_degree() {
        Some(d) if d > 0 => Ok(d),
        _ => Err(Error::WrongDegree(format!(
            "`{a}` is not homogeneous of positive degree"
        ))),
    }
}

/// Multiplication by `a` is injective on `M`.
pub fn is_nonzerodivisor(m: &ModulePresentation, a: &Polynomial) -> Result<bool> {
    let e = check_element(m.ring(), a)? as i32;
    let ring = m.ring();
    let field = ring.field();
    let nv = ring.num_vars();
    let shifts = m.cover_shifts();
    let src: Vec<i32> = shifts.iter().map(|s| s + e).collect();
    let cols: Vec<Vector> = (0..shifts.len())
        .map(|k| Vector::basis(k, nv).mul_poly(field, a))
        .collect();
    let colon = groebner::preimage_raw(ring, &src, shifts, &cols, m.relations())?;
    Ok(colon.iter().all(|x| m.vanishes(x)))
}

/// `M / aM`.
pub fn quotient_by(m: &ModulePresentation, a: &Polynomial) -> Result<ModulePresentation> {
    let ring = m.ring();
    let field = ring.field();
    let mut rels = m.relations().to_vec();
    for k in 0..m.rank() {
        rels.push(Vector::basis(k, ring.num_vars()).mul_poly(field, a));
    }
    ModulePresentation::new(ring, m.cover_shifts().to_vec(), rels)
}

/// Whether `seq` is an `M`-regular sequence. Elements must be homogeneous
/// of positive degree, which makes the final quotient automatically nonzero
/// for nonzero `M`. The zero module is treated as having every sequence
/// regular.
pub fn is_regular_sequence(m: &ModulePresentation, seq: &[Polynomial]) -> Result<bool> {
    for a in seq {
        check_element(m.ring(), a)?;
    }
    let mut cur = m.minimal_presentation();
    for a in seq {
        if cur.rank() == 0 {
            return Ok(true);
        }
        if !is_nonzerodivisor(&cur, a)? {
            return Ok(false);
        }
        cur = quotient_by(&cur, a)?.minimal_presentation();
    }
    Ok(true)
}

fn linear_coefficients(ring: &GradedRing, form: &Polynomial) -> Result<Vec<u64>> {
    let mut coeffs = vec![0u64; ring.num_vars()];
    let mut degree = None;
    for (mono, c) in form.terms() {
        let vars: Vec<usize> = mono.support().collect();
        if vars.len() != 1 || mono.exponents()[vars[0]] != 1 {
            return Err(Error::WrongDegree(format!("`{form}` is not a linear form")));
        }
        let d = ring.var_degrees()[vars[0]];
        if degree.is_some_and(|x| x != d) {
            return Err(Error::WrongDegree(format!("`{form}` is not homogeneous")));
        }
        degree = Some(d);
        coeffs[vars[0]] = *c;
    }
    if degree.is_none() {
        return Err(Error::WrongDegree("the zero form has no degree".into()));
    }
    Ok(coeffs)
}

pub(crate) fn rank_mod_p(field: crate::field::Fp, rows: &[Vec<u64>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = field.inv(m[rank][c]);
        for x in m[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c];
                for k in 0..cols {
                    let v = field.mul(f, m[rank][k]);
                    m[i][k] = field.sub(m[i][k], v);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == k {
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Every linearly independent sequence drawn from `forms` of length at most
/// `j` is `M`-regular. Forms must be linear and homogeneous.
pub fn linear_regular_test(m: &ModulePresentation, forms: &[Polynomial], j: usize) -> Result<bool> {
    let ring = m.ring();
    if j > ring.num_vars() {
        return Err(Error::Precondition(format!(
            "sequence length {j} exceeds the number of variables {}",
            ring.num_vars()
        )));
    }
    let coeffs = forms
        .iter()
        .map(|f| {
            ring.check_same(f.ring())?;
            linear_coefficients(ring, f)
        })
        .collect::<Result<Vec<_>>>()?;
    for subset in subsets_up_to(forms.len(), j) {
        let rows: Vec<Vec<u64>> = subset.iter().map(|&i| coeffs[i].clone()).collect();
        if rank_mod_p(ring.field(), &rows) < subset.len() {
            continue;
        }
        let seq: Vec<Polynomial> = subset.iter().map(|&i| forms[i].clone()).collect();
        if !is_regular_sequence(m, &seq)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{HilbertSeries, LaurentPoly};
    use crate::resolution::{graded_betti, hilbert_series};

    fn ring(p: u64, r: usize) -> GradedRing {
        GradedRing::standard(p, r).unwrap()
    }

    fn maximal_ideal(r: &GradedRing) -> ModulePresentation {
        let gens: Vec<Vector> = (0..r.num_vars())
            .map(|i| Vector::from_coordinates(&[Polynomial::var(r, i)]))
            .collect();
        image_module(r, &[0], &gens).unwrap().0
    }

    fn poly(r: &GradedRing, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    fn quotient(r: &GradedRing, gens: &[&str]) -> ModulePresentation {
        let fs: Vec<Polynomial> = gens.iter().map(|s| poly(r, s)).collect();
        ModulePresentation::cyclic(r, 0, &fs).unwrap()
    }

    #[test]
    fn hom_examples() {
        let r = ring(3, 2);
        let free = ModulePresentation::free(&r, vec![0]);
        let h = hom_module(&free, &free).unwrap();
        assert_eq!(hilbert_series(&h), HilbertSeries::free(&[0], &[2, 2]));
        let k = ModulePresentation::residue_field(&r);
        assert!(hom_module(&k, &free).unwrap().is_zero());
        // Hom(R(2), R) = R(-2)
        let h = hom_module(&ModulePresentation::free(&r, vec![2]), &free).unwrap();
        assert_eq!(h.cover_shifts(), &[-2]);
    }

    #[test]
    fn hom_of_rg_into_shifted_ring() {
        let r = ring(3, 2);
        let rg = lambda_induce(&ModulePresentation::free(&r, vec![0]));
        let h = hom_module(&rg, &ModulePresentation::free(&r, vec![2])).unwrap();
        assert_eq!(hilbert_series(&h), hilbert_series(&rg));
    }

    #[test]
    fn hom_into_torsion() {
        // Hom(R, k) = k, Hom(k, k) = k
        let r = ring(3, 2);
        let k = ModulePresentation::residue_field(&r);
        let one = HilbertSeries::new(LaurentPoly::monomial(0, 1), vec![]);
        let h = hom_module(&ModulePresentation::free(&r, vec![0]), &k).unwrap();
        assert_eq!(hilbert_series(&h), one);
        let h = hom_module(&k, &k).unwrap();
        assert_eq!(hilbert_series(&h), one);
    }

    #[test]
    fn ext_examples() {
        let r = ring(3, 2);
        assert!(ext_module(&ModulePresentation::free(&r, vec![0, 1]), 1).is_zero());
        let k = ModulePresentation::residue_field(&r);
        let e2 = ext_module(&k, 2);
        assert_eq!(hilbert_series(&e2), HilbertSeries::new(LaurentPoly::monomial(-4, 1), vec![]));
        let m = maximal_ideal(&r);
        let e1 = ext_module(&m, 1);
        assert_eq!(hilbert_series(&e1), HilbertSeries::new(LaurentPoly::monomial(-4, 1), vec![]));
        assert!(ext_module(&k, 3).is_zero());
    }

    #[test]
    fn ext_zero_is_the_dual() {
        let r = ring(5, 2);
        let m = maximal_ideal(&r);
        let free = ModulePresentation::free(&r, vec![0]);
        assert_eq!(
            hilbert_series(&ext_module(&m, 0)),
            hilbert_series(&hom_module(&m, &free).unwrap())
        );
    }

    #[test]
    fn dimension_examples() {
        let r = ring(3, 2);
        assert_eq!(krull_dimension(&ModulePresentation::free(&r, vec![0])), Measured::Value(2));
        assert_eq!(krull_dimension(&ModulePresentation::residue_field(&r)), Measured::Value(0));
        assert_eq!(krull_dimension(&quotient(&r, &["t1"])), Measured::Value(1));
        assert_eq!(krull_dimension(&ModulePresentation::zero(&r)), Measured::ZeroModule);
    }

    #[test]
    fn depth_examples() {
        let r = ring(3, 2);
        assert_eq!(depth(&ModulePresentation::free(&r, vec![0, 4])), Depth::Finite(2));
        assert_eq!(depth(&ModulePresentation::residue_field(&r)), Depth::Finite(0));
        assert_eq!(depth(&maximal_ideal(&r)), Depth::Finite(1));
        assert_eq!(depth(&ModulePresentation::zero(&r)), Depth::Infinity);
    }

    #[test]
    fn cm_examples() {
        let r = ring(3, 2);
        assert!(is_cm_of_projdim(&ModulePresentation::free(&r, vec![0]), 0));
        let k = ModulePresentation::residue_field(&r);
        assert!(is_cm_of_projdim(&k, 2));
        assert!(!is_cm_of_projdim(&k, 1));
        let m = maximal_ideal(&r);
        assert!((0..=3).all(|i| !is_cm_of_projdim(&m, i)));
        assert!(is_cm_of_projdim(&ModulePresentation::zero(&r), 1));
    }

    #[test]
    fn cm_duals() {
        let r = ring(3, 2);
        let free = ModulePresentation::free(&r, vec![0, 3]);
        assert_eq!(cm_dual(&free, 0).unwrap().cover_shifts().to_vec().len(), 2);
        assert_eq!(
            hilbert_series(&cm_dual(&free, 0).unwrap()),
            HilbertSeries::free(&[0, -3], &[2, 2])
        );
        let k = ModulePresentation::residue_field(&r);
        let d = cm_dual(&k, 2).unwrap();
        assert_eq!(hilbert_series(&d), HilbertSeries::new(LaurentPoly::monomial(-4, 1), vec![]));
        let dd = cm_dual(&d, 2).unwrap();
        assert_eq!(hilbert_series(&dd), hilbert_series(&k));
        let q = quotient(&r, &["t1"]);
        let d = cm_dual(&q, 1).unwrap();
        assert_eq!(hilbert_series(&d), hilbert_series(&q.shift(-2)));
        let dd = cm_dual(&d, 1).unwrap();
        assert_eq!(hilbert_series(&dd), hilbert_series(&q));
        assert_eq!(graded_betti(&dd), graded_betti(&q));
        assert!(matches!(cm_dual(&maximal_ideal(&r), 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn torsion_and_reflexivity() {
        let r = ring(3, 2);
        let free = ModulePresentation::free(&r, vec![0]);
        assert!(is_torsion_free(&free) && is_reflexive(&free));
        let m = maximal_ideal(&r);
        assert!(is_torsion_free(&m));
        assert!(!is_reflexive(&m));
        let k = ModulePresentation::residue_field(&r);
        assert!(!is_torsion_free(&k) && !is_reflexive(&k));
    }

    #[test]
    fn syzygy_orders() {
        let r = ring(3, 2);
        assert_eq!(syzygy_order(&ModulePresentation::free(&r, vec![0, 1])), SyzygyOrder::Infinity);
        assert_eq!(syzygy_order(&maximal_ideal(&r)), SyzygyOrder::Finite(1));
        assert_eq!(syzygy_order(&ModulePresentation::residue_field(&r)), SyzygyOrder::Finite(0));
        assert_eq!(syzygy_order(&ModulePresentation::zero(&r)), SyzygyOrder::Infinity);
        let r3 = ring(3, 3);
        assert_eq!(syzygy_order(&maximal_ideal(&r3)), SyzygyOrder::Finite(1));
    }

    #[test]
    fn external_tensors() {
        let r2 = ring(3, 2);
        let r1 = ring(3, 1);
        let m = maximal_ideal(&r2);
        let t = tensor_external(&m, &ModulePresentation::free(&r1, vec![0])).unwrap();
        assert_eq!(t.ring().num_vars(), 3);
        assert_eq!(syzygy_order(&t), SyzygyOrder::Finite(1));
        let k = tensor_external(
            &ModulePresentation::residue_field(&r2),
            &ModulePresentation::residue_field(&r1),
        )
        .unwrap();
        assert_eq!(syzygy_order(&k), SyzygyOrder::Finite(0));
        assert_eq!(graded_betti(&k).ranks(), vec![1, 3, 3, 1]);
        let ff = tensor_external(
            &ModulePresentation::free(&r2, vec![0, 1]),
            &ModulePresentation::free(&r1, vec![2]),
        )
        .unwrap();
        assert_eq!(ff.cover_shifts(), &[2, 3]);
        assert_eq!(syzygy_order(&ff), SyzygyOrder::Infinity);
        assert!(tensor_external(&m, &ModulePresentation::free(&ring(5, 1), vec![0])).is_err());
    }

    #[test]
    fn lambda_examples() {
        let r = ring(3, 2);
        let lam = LambdaAlgebraSpec::new(2);
        assert_eq!(lam.basis(), vec![vec![], vec![1], vec![2], vec![1, 2]]);
        let rg = lambda_induce(&ModulePresentation::free(&r, vec![0]));
        assert_eq!(rg.cover_shifts(), &[0, 1, 1, 2]);
        assert_eq!(
            hilbert_series(&rg),
            HilbertSeries::new(LaurentPoly::monomial(0, 1), vec![1, 1])
        );
        let lk = lambda_induce(&ModulePresentation::residue_field(&r));
        assert_eq!(
            hilbert_series(&lk),
            HilbertSeries::new(LaurentPoly::from_pairs([(0, 1), (1, 2), (2, 1)]), vec![])
        );
        assert_eq!(syzygy_order(&lambda_induce(&maximal_ideal(&r))), SyzygyOrder::Finite(1));
    }

    #[test]
    fn linear_regularity() {
        let r = ring(3, 3);
        let vars: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&r, i)).collect();
        let free = ModulePresentation::free(&r, vec![0]);
        for j in 0..=3 {
            assert!(linear_regular_test(&free, &vars, j).unwrap());
        }
        let r2 = ring(3, 2);
        let q = quotient(&r2, &["t1"]);
        assert!(!linear_regular_test(&q, &[poly(&r2, "t1")], 1).unwrap());
        assert!(linear_regular_test(&q, &[poly(&r2, "t2")], 1).unwrap());
        let err = linear_regular_test(&q, &[poly(&r2, "t1^2")], 1).unwrap_err();
        assert!(matches!(err, Error::WrongDegree(_)));
    }

    #[test]
    fn linear_regularity_can_fail_with_positive_depth() {
        let r = ring(2, 2);
        let m = ModulePresentation::direct_sum_all(
            &r,
            &[quotient(&r, &["t1"]), quotient(&r, &["t2"]), quotient(&r, &["t1 + t2"])],
        )
        .unwrap();
        assert_eq!(depth(&m), Depth::Finite(1));
        let forms = [poly(&r, "t1"), poly(&r, "t2"), poly(&r, "t1 + t2")];
        for f in &forms {
            assert!(!linear_regular_test(&m, std::slice::from_ref(f), 1).unwrap());
        }
        assert!(!linear_regular_test(&m, &forms, 1).unwrap());
    }

    #[test]
    fn regular_sequences() {
        let r = ring(3, 2);
        let free = ModulePresentation::free(&r, vec![0]);
        assert!(is_regular_sequence(&free, &[poly(&r, "t1"), poly(&r, "t2")]).unwrap());
        assert!(!is_regular_sequence(&free, &[poly(&r, "t1"), poly(&r, "t1")]).unwrap());
        let m = maximal_ideal(&r);
        assert!(is_regular_sequence(&m, &[poly(&r, "t1")]).unwrap());
        assert!(!is_regular_sequence(&m, &[poly(&r, "t1"), poly(&r, "t2")]).unwrap());
        assert!(is_regular_sequence(&free, &[poly(&r, "1")]).is_err());
    }

    #[test]
    fn rank_over_fp() {
        let f = crate::field::Fp::new(2).unwrap();
        assert_eq!(rank_mod_p(f, &[vec![1, 0], vec![0, 1], vec![1, 1]]), 2);
        assert_eq!(rank_mod_p(f, &[vec![1, 1], vec![1, 1]]), 1);
    }
}
