//! Gröbner bases of graded submodules of free modules over F_p[t1..tr].
//!
//! The term order is fixed: graded reverse lexicographic on monomials,
//! extended position-over-term with the lower basis index winning. Every
//! submodule handled here is graded, so Buchberger runs degree by degree.
//! That makes it cheap to read off a minimal generating set on the way: an
//! input generator is minimal exactly when it does not reduce to zero
//! against the basis built from everything of smaller degree plus the
//! generators of its own degree kept so far.
//!
//! Kernels and preimages use the position-over-term order as an
//! elimination order: the target block sits at the low positions.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::free::{FreeElement, FreeModuleSpec};
use crate::monomial::Monomial;
use crate::ring::GradedRing;
use crate::vector::{term_cmp, Vector};

/// Normal-form engine over a fixed list of basis vectors.
pub(crate) struct Reducer<'a> {
    field: Fp,
    basis: &'a [Vector],
    by_pos: HashMap<u32, Vec<usize>>,
}

impl<'a> Reducer<'a> {
    pub(crate) fn new(field: Fp, basis: &'a [Vector]) -> Self {
        let mut by_pos: HashMap<u32, Vec<usize>> = HashMap::new();
        for (i, g) in basis.iter().enumerate() {
            if let Some(t) = g.lead() {
                by_pos.entry(t.pos).or_default().push(i);
            }
        }
        Reducer {
            field,
            basis,
            by_pos,
        }
    }

    fn divisor(&self, pos: u32, mono: &Monomial, active: Option<&[bool]>) -> Option<usize> {
        self.by_pos.get(&pos)?.iter().copied().find(|&i| {
            active.map_or(true, |a| a[i]) && self.basis[i].lead().unwrap().mono.divides(mono)
        })
    }

    pub(crate) fn normal_form(&self, v: &Vector) -> Vector {
        nf_with(self.field, v, |pos, mono| {
            self.divisor(pos, mono, None).map(|i| &self.basis[i])
        })
    }
}

/// Full reduction; `find` returns a basis element whose leading term
/// divides the given term.
fn nf_with<'b>(
    field: Fp,
    v: &Vector,
    find: impl Fn(u32, &Monomial) -> Option<&'b Vector>,
) -> Vector {
    let mut rest = v.clone();
    let mut done = Vec::new();
    while let Some(lt) = rest.lead().cloned() {
        match find(lt.pos, &lt.mono) {
            Some(g) => {
                let gl = g.lead().unwrap();
                let q = gl.mono.quotient_of(&lt.mono);
                let c = field.neg(field.mul(lt.coef, field.inv(gl.coef)));
                rest = rest.add_scaled(field, c, &q, g);
            }
            None => {
                done.push(lt);
                rest = Vector::from_sorted_tail(&rest, 1);
            }
        }
    }
    Vector::from_sorted(done)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    pos: u32,
    lcm: Monomial,
    deg: i32,
}

/// Output of the degree-by-degree Buchberger run.
pub(crate) struct GbRun {
    /// Reduced, monic, sorted by position then ascending leading monomial.
    pub basis: Vec<Vector>,
    /// Indices (into the input) of a minimal generating set.
    pub minimal: Vec<usize>,
}

struct Engine<'a> {
    field: Fp,
    weights: &'a [u32],
    shifts: &'a [i32],
    elems: Vec<Vector>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    criteria: bool,
}

impl<'a> Engine<'a> {
    fn lead_degree(&self, v: &Vector) -> i32 {
        Vector::term_degree(v.lead().unwrap(), self.shifts)
    }

    fn reduce(&self, v: &Vector) -> Vector {
        let elems = &self.elems;
        let active = &self.active;
        nf_with(self.field, v, |pos, mono| {
            elems.iter().enumerate().find_map(|(i, g)| {
                let l = g.lead().unwrap();
                (active[i] && l.pos == pos && l.mono.divides(mono)).then_some(g)
            })
        })
    }

    fn make_pair(&self, i: usize, j: usize) -> Option<Pair> {
        let a = self.elems[i].lead().unwrap();
        let b = self.elems[j].lead().unwrap();
        if a.pos != b.pos {
            return None;
        }
        let lcm = a.mono.lcm(&b.mono, self.weights);
        let deg = self.shifts[a.pos as usize] + lcm.degree() as i32;
        Some(Pair {
            i: i.min(j),
            j: i.max(j),
            pos: a.pos,
            lcm,
            deg,
        })
    }

    /// Add a new (reduced, monic) element and update the pair set.
    fn insert(&mut self, h: Vector) {
        let hi = self.elems.len();
        self.elems.push(h);
        self.active.push(true);
        let candidates: Vec<Pair> = (0..hi)
            .filter(|&g| self.active[g])
            .filter_map(|g| self.make_pair(g, hi))
            .collect();
        if !self.criteria {
            self.pairs.extend(candidates);
            return;
        }
        let hlead = self.elems[hi].lead().unwrap().clone();
        // chain criterion on old pairs
        let weights = self.weights;
        let elems = &self.elems;
        self.pairs.retain(|p| {
            if p.pos != hlead.pos || !hlead.mono.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lead().unwrap().mono.lcm(&hlead.mono, weights);
            let lj = elems[p.j].lead().unwrap().mono.lcm(&hlead.mono, weights);
            li == p.lcm || lj == p.lcm
        });
        // among the new pairs keep one per minimal lcm
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in candidates.iter().enumerate() {
            let dominated_later = candidates[k + 1..].iter().any(|q| q.lcm.divides(&p.lcm));
            let dominated_kept = kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if !dominated_later && !dominated_kept {
                kept.push(p.clone());
            }
        }
        self.pairs.extend(kept);
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let a = &self.elems[p.i];
        let b = &self.elems[p.j];
        let la = a.lead().unwrap();
        let lb = b.lead().unwrap();
        let f = self.field;
        let ma = la.mono.quotient_of(&p.lcm);
        let mb = lb.mono.quotient_of(&p.lcm);
        let s = Vector::zero().add_scaled(f, f.inv(la.coef), &ma, a);
        s.add_scaled(f, f.neg(f.inv(lb.coef)), &mb, b)
    }
}

fn check_homogeneous(gens: &[Vector], shifts: &[i32]) -> Result<Vec<Option<i32>>> {
    gens.iter()
        .enumerate()
        .map(|(k, g)| {
            if let Some(p) = g.max_pos() {
                if p as usize >= shifts.len() {
                    return Err(Error::ModuleMismatch(format!(
                        "generator {k} has a coordinate at position {p} beyond rank {}",
                        shifts.len()
                    )));
                }
            }
            if g.is_zero() {
                Ok(None)
            } else {
                g.homogeneous_degree(shifts)
                    .map(Some)
                    .ok_or_else(|| Error::Inhomogeneous(format!("generator {k}")))
            }
        })
        .collect()
}

pub(crate) fn run_buchberger(
    ring: &GradedRing,
    shifts: &[i32],
    gens: &[Vector],
    criteria: bool,
) -> Result<GbRun> {
    let degs = check_homogeneous(gens, shifts)?;
    let mut order: Vec<usize> = (0..gens.len()).filter(|&k| degs[k].is_some()).collect();
    order.sort_by_key(|&k| degs[k].unwrap());
    let mut eng = Engine {
        field: ring.field(),
        weights: ring.var_degrees(),
        shifts,
        elems: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        criteria,
    };
    let mut minimal = Vec::new();
    let mut next = 0;
    loop {
        let pair_deg = eng.pairs.iter().map(|p| p.deg).min();
        let gen_deg = order.get(next).map(|&k| degs[k].unwrap());
        let d = match (pair_deg, gen_deg) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        let (mut now, later): (Vec<Pair>, Vec<Pair>) =
            eng.pairs.drain(..).partition(|p| p.deg == d);
        eng.pairs = later;
        now.sort_by(|a, b| {
            term_cmp(b.pos, &b.lcm, a.pos, &a.lcm).then((a.i, a.j).cmp(&(b.i, b.j)))
        });
        for p in &now {
            let s = eng.spoly(p);
            let mut h = eng.reduce(&s);
            if !h.is_zero() {
                debug_assert_eq!(eng.lead_degree(&h), d);
                h.make_monic(eng.field);
                eng.insert(h);
            }
        }
        while next < order.len() && degs[order[next]] == Some(d) {
            let k = order[next];
            next += 1;
            let mut h = eng.reduce(&gens[k]);
            if !h.is_zero() {
                minimal.push(k);
                h.make_monic(eng.field);
                eng.insert(h);
            }
        }
    }
    minimal.sort_unstable();
    let basis = interreduce(eng.field, eng.elems);
    Ok(GbRun { basis, minimal })
}

/// Turn a Gröbner basis into the reduced one, sorted by position and then
/// ascending leading monomial.
fn interreduce(field: Fp, elems: Vec<Vector>) -> Vec<Vector> {
    let mut keep: Vec<Vector> = Vec::new();
    for (i, g) in elems.iter().enumerate() {
        let l = g.lead().unwrap();
        let redundant = elems.iter().enumerate().any(|(j, h)| {
            let m = h.lead().unwrap();
            j != i && m.pos == l.pos && m.mono.divides(&l.mono) && (m.mono != l.mono || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    keep.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        x.pos.cmp(&y.pos).then_with(|| x.mono.cmp(&y.mono))
    });
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Vector> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let mut g = Reducer::new(field, &others).normal_form(&keep[i]);
        g.make_monic(field);
        out.push(g);
    }
    out
}

/// Reduced Gröbner basis of a graded submodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleGB {
    module: FreeModuleSpec,
    elements: Vec<Vector>,
}

impl SubmoduleGB {
    pub(crate) fn from_raw(module: &FreeModuleSpec, elements: Vec<Vector>) -> Self {
        SubmoduleGB {
            module: module.clone(),
            elements,
        }
    }

    pub fn module(&self) -> &FreeModuleSpec {
        &self.module
    }

    pub fn generators(&self) -> Vec<FreeElement> {
        self.elements
            .iter()
            .map(|v| FreeElement::from_vector(&self.module, v.clone()))
            .collect()
    }

    pub fn raw(&self) -> &[Vector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &FreeElement) -> Result<bool> {
        Ok(normal_form(v, self)?.is_zero())
    }

    pub fn reduce_raw(&self, v: &Vector) -> Vector {
        Reducer::new(self.module.ring().field(), &self.elements).normal_form(v)
    }

    /// Every basis vector lies in the submodule.
    pub fn is_everything(&self) -> bool {
        let mut hit = vec![false; self.module.rank()];
        for g in &self.elements {
            let l = g.lead().unwrap();
            if l.mono.is_one() {
                hit[l.pos as usize] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }

    /// Leading monomials grouped by position (generators of the initial
    /// module `in(N) = ⊕ I_i e_i`).
    pub fn initial_ideals(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.module.rank()];
        for g in &self.elements {
            let l = g.lead().unwrap();
            out[l.pos as usize].push(l.mono.clone());
        }
        out
    }
}

fn unwrap_elements(gens: &[FreeElement]) -> Result<(FreeModuleSpec, Vec<Vector>)> {
    let module = gens
        .first()
        .map(|g| g.module().clone())
        .ok_or_else(|| Error::ModuleMismatch("empty generator list has no ambient module".into()))?;
    let mut raw = Vec::with_capacity(gens.len());
    for g in gens {
        if g.module() != &module {
            return Err(Error::ModuleMismatch("generators live in different modules".into()));
        }
        raw.push(g.vector().clone());
    }
    Ok((module, raw))
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn groebner_basis(gens: &[FreeElement]) -> Result<SubmoduleGB> {
    let (module, raw) = unwrap_elements(gens)?;
    groebner_basis_in(&module, &raw)
}

pub fn groebner_basis_in(module: &FreeModuleSpec, gens: &[Vector]) -> Result<SubmoduleGB> {
    let run = run_buchberger(module.ring(), module.shifts(), gens, true)?;
    Ok(SubmoduleGB::from_raw(module, run.basis))
}

/// Same as [`groebner_basis`] without pair elimination; kept as a reference
/// path for tests.
pub fn groebner_basis_plain(gens: &[FreeElement]) -> Result<SubmoduleGB> {
    let (module, raw) = unwrap_elements(gens)?;
    let run = run_buchberger(module.ring(), module.shifts(), &raw, false)?;
    Ok(SubmoduleGB::from_raw(&module, run.basis))
}

pub fn normal_form(v: &FreeElement, gb: &SubmoduleGB) -> Result<FreeElement> {
    if v.module() != gb.module() {
        return Err(Error::ModuleMismatch(
            "element and basis live in different modules".into(),
        ));
    }
    Ok(FreeElement::from_vector(gb.module(), gb.reduce_raw(v.vector())))
}

/// A minimal homogeneous generating set (subset of `gens`, input order).
pub(crate) fn minimal_generators(ring: &GradedRing, shifts: &[i32], gens: &[Vector]) -> Result<Vec<Vector>> {
    let run = run_buchberger(ring, shifts, gens, true)?;
    Ok(run.minimal.into_iter().map(|k| gens[k].clone()).collect())
}

fn check_columns(
    source_shifts: &[i32],
    target_shifts: &[i32],
    columns: &[Vector],
) -> Result<()> {
    if columns.len() != source_shifts.len() {
        return Err(Error::ModuleMismatch(format!(
            "{} columns for a source of rank {}",
            columns.len(),
            source_shifts.len()
        )));
    }
    for (j, c) in columns.iter().enumerate() {
        if let Some(p) = c.max_pos() {
            if p as usize >= target_shifts.len() {
                return Err(Error::ModuleMismatch(format!(
                    "column {j} has a coordinate beyond the target rank"
                )));
            }
        }
        if c.is_zero() {
            continue;
        }
        match c.homogeneous_degree(target_shifts) {
            Some(d) if d == source_shifts[j] => {}
            Some(d) => {
                return Err(Error::DegreeMismatch(format!(
                    "column {j} has degree {d} but its source generator has degree {}",
                    source_shifts[j]
                )))
            }
            None => {
                return Err(Error::DegreeMismatch(format!("column {j} is inhomogeneous")))
            }
        }
    }
    Ok(())
}

/// Gröbner basis of `{x in F : phi(x) in span(extra)}` where `phi` has the
/// given columns (images of the basis of F in G) and `extra` are elements
/// of G. With no extra elements this is `ker phi`.
pub(crate) fn preimage_raw(
    ring: &GradedRing,
    source_shifts: &[i32],
    target_shifts: &[i32],
    columns: &[Vector],
    extra: &[Vector],
) -> Result<Vec<Vector>> {
    check_columns(source_shifts, target_shifts, columns)?;
    let field = ring.field();
    let m = target_shifts.len() as u32;
    let n = source_shifts.len() as u32;
    let nv = ring.num_vars();
    let mut shifts = target_shifts.to_vec();
    shifts.extend_from_slice(source_shifts);
    let mut gens = Vec::with_capacity(columns.len() + extra.len());
    for (j, c) in columns.iter().enumerate() {
        gens.push(c.add(field, &Vector::basis(m as usize + j, nv)));
    }
    for (l, k) in extra.iter().filter(|k| !k.is_zero()).enumerate() {
        let d = k
            .homogeneous_degree(target_shifts)
            .ok_or_else(|| Error::Inhomogeneous(format!("target element {l}")))?;
        shifts.push(d);
        gens.push(k.add(field, &Vector::basis((m + n) as usize + l, nv)));
    }
    let run = run_buchberger(ring, &shifts, &gens, true)?;
    Ok(run
        .basis
        .into_iter()
        .filter(|g| {
            let p = g.lead().unwrap().pos;
            p >= m && p < m + n
        })
        .map(|g| g.restrict(m..m + n))
        .collect())
}

pub(crate) fn kernel_raw(
    ring: &GradedRing,
    source_shifts: &[i32],
    target_shifts: &[i32],
    columns: &[Vector],
) -> Result<Vec<Vector>> {
    preimage_raw(ring, source_shifts, target_shifts, columns, &[])
}

/// Kernel of the map `source -> target` whose `j`-th column is the image
/// of the `j`-th basis element of `source`.
pub fn kernel(
    source: &FreeModuleSpec,
    target: &FreeModuleSpec,
    columns: &[FreeElement],
) -> Result<SubmoduleGB> {
    source.ring().check_same(target.ring())?;
    let mut raw = Vec::with_capacity(columns.len());
    for c in columns {
        if c.module() != target {
            return Err(Error::ModuleMismatch("column does not live in the target".into()));
        }
        raw.push(c.vector().clone());
    }
    let k = kernel_raw(source.ring(), source.shifts(), target.shifts(), &raw)?;
    Ok(SubmoduleGB::from_raw(source, k))
}
