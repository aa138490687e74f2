//! Random inputs and a degree-by-degree linear algebra oracle that never
//! touches Gröbner bases.
#![allow(dead_code)]

use std::collections::BTreeMap;

use gradmod::field::Fp;
use gradmod::{GradedRing, ModulePresentation, Monomial, Polynomial, Vector};
use rand::seq::SliceRandom;
use rand::Rng;

/// All monomials of weighted degree `e`.
pub fn monomials_of_degree(ring: &GradedRing, e: i32) -> Vec<Monomial> {
    fn go(w: &[u32], i: usize, left: i32, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut a = 0;
        while a as i32 * w[i] as i32 <= left {
            cur.push(a);
            go(w, i + 1, left - a as i32 * w[i] as i32, cur, out);
            cur.pop();
            a += 1;
        }
    }
    if e < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(ring.var_degrees(), 0, e, &mut Vec::new(), &mut out);
    out.iter().map(|x| Monomial::from_exponents(x, ring.var_degrees())).collect()
}

pub fn random_poly(ring: &GradedRing, rng: &mut impl Rng, deg: i32, max_terms: usize) -> Polynomial {
    let mut monos = monomials_of_degree(ring, deg);
    monos.shuffle(rng);
    let p = ring.characteristic();
    let n = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<(Monomial, u64)> = monos.into_iter().take(n).map(|m| (m, rng.gen_range(1..p))).collect();
    Polynomial::from_terms(ring, terms)
}

/// A random presentation with generators in degrees `0..=2` and a few
/// homogeneous relations. Unit entries occur, so the presentation need not
/// be minimal and the module may be zero.
pub fn random_module(ring: &GradedRing, rng: &mut impl Rng, max_rank: usize, max_rels: usize) -> ModulePresentation {
    let rank = rng.gen_range(1..=max_rank);
    let cover: Vec<i32> = (0..rank).map(|_| rng.gen_range(0..=2)).collect();
    let top = *cover.iter().max().unwrap();
    let nrels = rng.gen_range(0..=max_rels);
    let mut rels = Vec::new();
    for _ in 0..nrels {
        let d = top + 2 * rng.gen_range(0..=2) + rng.gen_range(0..=1);
        let coords: Vec<Polynomial> = cover
            .iter()
            .map(|s| {
                if rng.gen_bool(0.75) {
                    random_poly(ring, rng, d - s, 2)
                } else {
                    Polynomial::zero(ring)
                }
            })
            .collect();
        rels.push(Vector::from_coordinates(&coords));
    }
    ModulePresentation::new(ring, cover, rels).expect("relations are homogeneous by construction")
}

pub fn random_nonzero_module(ring: &GradedRing, rng: &mut impl Rng, max_rank: usize, max_rels: usize) -> ModulePresentation {
    loop {
        let m = random_module(ring, rng, max_rank, max_rels);
        if !m.is_zero() {
            return m;
        }
    }
}

pub fn rank_mod_p(field: Fp, rows: Vec<Vec<u64>>) -> usize {
    let mut m = rows;
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = field.inv(m[rank][c]);
        let pivot_row: Vec<u64> = m[rank].iter().map(|&x| field.mul(x, inv)).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(f, *y));
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Index of the degree-`d` part of a free module: `(position, monomial)`.
pub fn free_basis(ring: &GradedRing, shifts: &[i32], d: i32) -> BTreeMap<(u32, Monomial), usize> {
    let mut out = BTreeMap::new();
    for (i, s) in shifts.iter().enumerate() {
        for m in monomials_of_degree(ring, d - s) {
            let k = out.len();
            out.insert((i as u32, m), k);
        }
    }
    out
}

fn coordinates_in(basis: &BTreeMap<(u32, Monomial), usize>, v: &Vector) -> Vec<u64> {
    let mut row = vec![0; basis.len()];
    for t in v.terms() {
        row[basis[&(t.pos, t.mono.clone())]] = t.coef;
    }
    row
}

/// `u * v` for a monomial `u`.
pub fn times_monomial(ring: &GradedRing, u: &Monomial, v: &Vector) -> Vector {
    Vector::zero().add_scaled(ring.field(), 1, u, v)
}

/// Dimension of the degree-`d` part of the submodule generated by `gens`.
pub fn span_dim(ring: &GradedRing, shifts: &[i32], gens: &[Vector], d: i32) -> usize {
    let basis = free_basis(ring, shifts, d);
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.homogeneous_degree(shifts).expect("homogeneous generator");
        for u in monomials_of_degree(ring, d - dg) {
            rows.push(coordinates_in(&basis, &times_monomial(ring, &u, g)));
        }
    }
    rank_mod_p(ring.field(), rows)
}

/// `dim_k M_d` for `M = F / <relations>`.
pub fn module_dim(m: &ModulePresentation, d: i32) -> usize {
    let basis = free_basis(m.ring(), m.cover_shifts(), d);
    basis.len() - span_dim(m.ring(), m.cover_shifts(), m.relations(), d)
}

/// Nullity in degree `d` of the map of free modules with the given columns.
pub fn kernel_dim(ring: &GradedRing, source: &[i32], target: &[i32], columns: &[Vector], d: i32) -> usize {
    let src = free_basis(ring, source, d);
    let tgt = free_basis(ring, target, d);
    let rows: Vec<Vec<u64>> = src
        .keys()
        .map(|(pos, u)| coordinates_in(&tgt, &times_monomial(ring, u, &columns[*pos as usize])))
        .collect();
    src.len() - rank_mod_p(ring.field(), rows)
}

pub fn maximal_ideal(ring: &GradedRing) -> ModulePresentation {
    let gens: Vec<Vector> = (0..ring.num_vars())
        .map(|i| Vector::from_coordinates(&[Polynomial::var(ring, i)]))
        .collect();
    gradmod::module::image_module(ring, &[0], &gens).unwrap().0
}
