//! Bounded cochain complexes of presented modules `K^0 -> ... -> K^d`,
//! optionally augmented by `ι: M -> K^0` (position `-1`), with cohomology,
//! exactness profiles and the comparison between partial exactness and the
//! syzygy order of `M`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner;
use crate::hilbert::{HilbertRecord, HilbertSeries};
use crate::homalg::{self, SyzygyOrder};
use crate::module::{subquotient, ModulePresentation};
use crate::resolution::hilbert_series;
use crate::ring::GradedRing;
use crate::vector::Vector;

/// `ι: M -> K^0`; `map[g]` is the image of the `g`-th generator of `M`.
#[derive(Clone, Debug)]
pub struct Augmentation {
    pub module: ModulePresentation,
    pub map: Vec<Vector>,
}

/// `maps[i]` is `δ_i: K^i -> K^{i+1}`, one column per generator of `K^i`,
/// for `i < d`. Maps preserve degree.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    ring: GradedRing,
    modules: Vec<ModulePresentation>,
    maps: Vec<Vec<Vector>>,
    augmentation: Option<Augmentation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    Shape,
    Inhomogeneous,
    RelationNotPreserved,
    NonzeroComposite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Source position of the offending map (`-1` for `ι`).
    pub position: i32,
    pub kind: ViolationKind,
    /// Generator (or relation, for `RelationNotPreserved`) of the source.
    pub generator: Option<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "position {}: {}", self.position, self.message)
    }
}

impl CochainComplex {
    pub fn new(
        ring: &GradedRing,
        modules: Vec<ModulePresentation>,
        maps: Vec<Vec<Vector>>,
        augmentation: Option<Augmentation>,
    ) -> Result<Self> {
        for m in &modules {
            ring.check_same(m.ring())?;
        }
        if let Some(a) = &augmentation {
            ring.check_same(a.module.ring())?;
        }
        if maps.len() + 1 != modules.len().max(1) {
            return Err(Error::InvalidComplex(format!(
                "{} positions need {} maps, got {}",
                modules.len(),
                modules.len().saturating_sub(1),
                maps.len()
            )));
        }
        Ok(CochainComplex {
            ring: ring.clone(),
            modules,
            maps,
            augmentation,
        })
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    /// Index of the last position; `None` when there are no positions.
    pub fn top(&self) -> Option<usize> {
        self.modules.len().checked_sub(1)
    }

    pub fn modules(&self) -> &[ModulePresentation] {
        &self.modules
    }

    pub fn module(&self, i: usize) -> &ModulePresentation {
        &self.modules[i]
    }

    pub fn map(&self, i: usize) -> &[Vector] {
        &self.maps[i]
    }

    pub fn maps(&self) -> &[Vec<Vector>] {
        &self.maps
    }

    pub fn augmentation(&self) -> Option<&Augmentation> {
        self.augmentation.as_ref()
    }

    /// Positions of the augmented complex: `-1..=d` when augmented.
    pub fn positions(&self) -> Vec<i32> {
        let start = if self.augmentation.is_some() { -1 } else { 0 };
        (start..self.modules.len() as i32).collect()
    }

    /// Module at a position of the augmented complex; zero outside the range.
    pub fn module_at(&self, i: i32) -> ModulePresentation {
        match i {
            -1 => self
                .augmentation
                .as_ref()
                .map_or_else(|| ModulePresentation::zero(&self.ring), |a| a.module.clone()),
            i if i >= 0 && (i as usize) < self.modules.len() => self.modules[i as usize].clone(),
            _ => ModulePresentation::zero(&self.ring),
        }
    }

    /// Source, columns and target of the map leaving position `i`.
    fn arrow(&self, i: i32) -> Option<(&ModulePresentation, &[Vector], &ModulePresentation)> {
        if i == -1 {
            let a = self.augmentation.as_ref()?;
            return Some((&a.module, &a.map, self.modules.first()?));
        }
        let i = usize::try_from(i).ok()?;
        Some((&self.modules[i], self.maps.get(i)?, &self.modules[i + 1]))
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let field = self.ring.field();
        if self.augmentation.is_some() && self.modules.is_empty() {
            out.push(Violation {
                position: -1,
                kind: ViolationKind::Shape,
                generator: None,
                message: "augmentation into an empty complex".into(),
            });
            return out;
        }
        let arrows: Vec<i32> = self.positions().into_iter().filter(|&i| self.arrow(i).is_some()).collect();
        let mut well_formed = vec![true; arrows.len()];
        for (slot, &i) in arrows.iter().enumerate() {
            let (src, cols, tgt) = self.arrow(i).unwrap();
            let before = out.len();
            if cols.len() != src.rank() {
                out.push(Violation {
                    position: i,
                    kind: ViolationKind::Shape,
                    generator: None,
                    message: format!("{} columns for {} generators", cols.len(), src.rank()),
                });
                well_formed[slot] = false;
                continue;
            }
            for (g, c) in cols.iter().enumerate() {
                if c.max_pos().is_some_and(|p| p as usize >= tgt.rank()) {
                    out.push(Violation {
                        position: i,
                        kind: ViolationKind::Shape,
                        generator: Some(g),
                        message: format!("image of generator {g} leaves the target"),
                    });
                } else if c.terms().iter().any(|t| Vector::term_degree(t, tgt.cover_shifts()) != src.cover_shifts()[g]) {
                    out.push(Violation {
                        position: i,
                        kind: ViolationKind::Inhomogeneous,
                        generator: Some(g),
                        message: format!(
                            "image of generator {g} is not homogeneous of degree {}",
                            src.cover_shifts()[g]
                        ),
                    });
                }
            }
            if out.len() > before {
                well_formed[slot] = false;
                continue;
            }
            for (k, rel) in src.relations().iter().enumerate() {
                if !tgt.vanishes(&rel.apply(field, cols)) {
                    out.push(Violation {
                        position: i,
                        kind: ViolationKind::RelationNotPreserved,
                        generator: Some(k),
                        message: format!("relation {k} is not sent into the relations"),
                    });
                }
            }
        }
        for w in 0..arrows.len().saturating_sub(1) {
            if !(well_formed[w] && well_formed[w + 1]) {
                continue;
            }
            let i = arrows[w];
            let (src, first, _) = self.arrow(i).unwrap();
            let (_, second, after) = self.arrow(i + 1).unwrap();
            for g in 0..src.rank() {
                if !after.vanishes(&first[g].apply(field, second)) {
                    out.push(Violation {
                        position: i,
                        kind: ViolationKind::NonzeroComposite,
                        generator: Some(g),
                        message: format!("composite at position {i} is nonzero on generator {g}"),
                    });
                }
            }
        }
        out
    }

    fn ensure_valid(&self) -> Result<()> {
        match self.validate().first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidComplex(v.to_string())),
        }
    }

    /// `H^i` of the augmented complex: `ker δ_i / im δ_{i-1}`, with
    /// `H^{-1} = ker ι`.
    pub fn cohomology_at(&self, i: i32) -> Result<ModulePresentation> {
        self.ensure_valid()?;
        self.cohomology_unchecked(i)
    }

    fn cohomology_unchecked(&self, i: i32) -> Result<ModulePresentation> {
        if i < -1 || (i == -1 && self.augmentation.is_none()) || i >= self.modules.len() as i32 {
            return Err(Error::Precondition(format!("position {i} is outside the complex")));
        }
        let here = self.module_at(i);
        let nv = self.ring.num_vars();
        let cycles = match self.arrow(i) {
            Some((src, cols, tgt)) => groebner::preimage_raw(
                &self.ring,
                src.cover_shifts(),
                tgt.cover_shifts(),
                cols,
                tgt.relations(),
            )?,
            None => (0..here.rank()).map(|k| Vector::basis(k, nv)).collect(),
        };
        let mut boundaries = here.relations().to_vec();
        if let Some((_, cols, _)) = self.arrow(i - 1) {
            boundaries.extend(cols.iter().cloned());
        }
        Ok(subquotient(&self.ring, here.cover_shifts(), &cycles, &boundaries)?.0)
    }

    /// Whether each `K^i` is zero or Cohen–Macaulay of projective dimension `i`.
    pub fn check_cm_assumption(&self) -> Result<CmReport> {
        self.ensure_valid()?;
        let positions: Vec<bool> = self
            .modules
            .iter()
            .enumerate()
            .map(|(i, m)| homalg::is_cm_of_projdim(m, i))
            .collect();
        Ok(CmReport {
            holds: positions.iter().all(|&b| b),
            positions,
        })
    }

    pub fn exactness_profile(&self) -> Result<ExactnessProfile> {
        if self.augmentation.is_none() {
            return Err(Error::Precondition("exactness profile needs an augmented complex".into()));
        }
        self.ensure_valid()?;
        let mut positions = Vec::new();
        for i in self.positions() {
            let h = self.cohomology_unchecked(i)?;
            let hs = hilbert_series(&h);
            positions.push(PositionCohomology {
                position: i,
                exact: h.is_zero(),
                hilbert: hs,
            });
        }
        let leading = positions.iter().take_while(|p| p.exact).count();
        let exact_everywhere = leading == positions.len();
        Ok(ExactnessProfile {
            max_j: leading,
            exact_everywhere,
            chang_skjelbred: positions.iter().take(2).all(|p| p.exact),
            positions,
        })
    }

    /// Compare partial exactness of the augmented complex with the syzygy
    /// order of `M` for every `0 <= j <= r`.
    pub fn exactness_crosscheck(&self) -> Result<CrossCheckReport> {
        let cm = self.check_cm_assumption()?;
        if !cm.holds {
            let bad: Vec<String> = cm
                .positions
                .iter()
                .enumerate()
                .filter(|(_, ok)| !**ok)
                .map(|(i, _)| i.to_string())
                .collect();
            return Err(Error::Precondition(format!(
                "positions {} are neither zero nor Cohen–Macaulay of the matching projective dimension",
                bad.join(", ")
            )));
        }
        let profile = self.exactness_profile()?;
        let order = homalg::syzygy_order(&self.augmentation.as_ref().unwrap().module);
        let rows: Vec<CrossCheckRow> = (0..=self.ring.num_vars())
            .map(|j| {
                let exact = profile.exact_through(j);
                let syzygy = order.at_least(j);
                CrossCheckRow {
                    j,
                    exact,
                    syzygy,
                    agree: exact == syzygy,
                }
            })
            .collect();
        Ok(CrossCheckReport {
            syzygy_order: order,
            agreement: rows.iter().all(|r| r.agree),
            rows,
            profile,
        })
    }

    /// Alternating sums of the Hilbert series of the terms and of the
    /// cohomology modules over the augmented complex.
    pub fn euler_characteristics(&self) -> Result<(HilbertSeries, HilbertSeries)> {
        self.ensure_valid()?;
        let mut terms = HilbertSeries::zero(self.ring.var_degrees());
        let mut coh = HilbertSeries::zero(self.ring.var_degrees());
        for i in self.positions() {
            let t = hilbert_series(&self.module_at(i));
            let h = hilbert_series(&self.cohomology_unchecked(i)?);
            if i.rem_euclid(2) == 0 {
                terms = terms.add(&t);
                coh = coh.add(&h);
            } else {
                terms = terms.sub(&t);
                coh = coh.sub(&h);
            }
        }
        Ok((terms, coh))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmReport {
    pub holds: bool,
    /// `positions[i]`: `K^i` is zero or CM of projective dimension `i`.
    pub positions: Vec<bool>,
}

#[derive(Clone, Debug)]
pub struct PositionCohomology {
    pub position: i32,
    pub exact: bool,
    pub hilbert: HilbertSeries,
}

#[derive(Clone, Debug)]
pub struct ExactnessProfile {
    /// Cohomology at positions `-1..=d`.
    pub positions: Vec<PositionCohomology>,
    /// Largest `j` with `H^i = 0` for all `-1 <= i <= j - 2`.
    pub max_j: usize,
    pub exact_everywhere: bool,
    /// Exact at positions `-1` and `0`.
    pub chang_skjelbred: bool,
}

impl ExactnessProfile {
    /// `H^i = 0` for every `i <= j - 2`; positions past the top are zero.
    pub fn exact_through(&self, j: usize) -> bool {
        self.exact_everywhere || self.max_j >= j
    }

    pub fn record(&self) -> ProfileRecord {
        ProfileRecord {
            positions: self
                .positions
                .iter()
                .map(|p| PositionRecord {
                    position: p.position,
                    exact: p.exact,
                    hilbert: p.hilbert.record(),
                })
                .collect(),
            max_j: self.max_j,
            exact_everywhere: self.exact_everywhere,
            chang_skjelbred: self.chang_skjelbred,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PositionRecord {
    pub position: i32,
    pub exact: bool,
    pub hilbert: HilbertRecord,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileRecord {
    pub positions: Vec<PositionRecord>,
    pub max_j: usize,
    pub exact_everywhere: bool,
    pub chang_skjelbred: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckRow {
    pub j: usize,
    pub exact: bool,
    pub syzygy: bool,
    pub agree: bool,
}

#[derive(Clone, Debug)]
pub struct CrossCheckReport {
    pub syzygy_order: SyzygyOrder,
    pub rows: Vec<CrossCheckRow>,
    pub agreement: bool,
    pub profile: ExactnessProfile,
}

impl CrossCheckReport {
    pub fn discrepancies(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| !r.agree).map(|r| r.j).collect()
    }
}

/// Total complex of the external tensor product, augmented by `ι1 ⊗ ι2`
/// when both factors are augmented. The sign on `x ⊗ dy` is `(-1)^a` for
/// `x` in position `a`.
pub fn tensor_complexes(c1: &CochainComplex, c2: &CochainComplex) -> Result<CochainComplex> {
    let ring = c1.ring.join(&c2.ring)?;
    let field = ring.field();
    let (r1, r2) = (c1.ring.num_vars(), c2.ring.num_vars());
    let (d1, d2) = (c1.modules.len(), c2.modules.len());
    if d1 == 0 || d2 == 0 {
        return CochainComplex::new(&ring, Vec::new(), Vec::new(), None);
    }
    let top = d1 + d2 - 2;
    // blocks[n]: (a, b, offset) with a + b = n
    let mut blocks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); top + 1];
    let mut modules = Vec::with_capacity(top + 1);
    for (n, block) in blocks.iter_mut().enumerate() {
        let mut parts = Vec::new();
        let mut offset = 0;
        for a in n.saturating_sub(d2 - 1)..=n.min(d1 - 1) {
            let b = n - a;
            let t = homalg::tensor_external(&c1.modules[a], &c2.modules[b])?;
            block.push((a, b, offset));
            offset += t.rank();
            parts.push(t);
        }
        modules.push(ModulePresentation::direct_sum_all(&ring, &parts)?);
    }
    let find = |n: usize, a: usize| blocks[n].iter().find(|x| x.0 == a).map(|x| x.2);
    let mut maps = Vec::with_capacity(top);
    for n in 0..top {
        let mut cols = Vec::with_capacity(modules[n].rank());
        for &(a, b, _) in &blocks[n] {
            let (n1, n2) = (c1.modules[a].rank(), c2.modules[b].rank());
            for g in 0..n1 {
                for h in 0..n2 {
                    let mut col = Vector::zero();
                    if a + 1 < d1 {
                        let off = find(n + 1, a + 1).unwrap();
                        let v = c1.maps[a][g].tensor(field, &Vector::basis(h, r2), n2);
                        col = col.add(field, &v.shift_positions(off as u32));
                    }
                    if b + 1 < d2 {
                        let off = find(n + 1, a).unwrap();
                        let n2_next = c2.modules[b + 1].rank();
                        let mut v = Vector::basis(g, r1).tensor(field, &c2.maps[b][h], n2_next);
                        if a % 2 == 1 {
                            v = v.scale(field, field.neg(1));
                        }
                        col = col.add(field, &v.shift_positions(off as u32));
                    }
                    cols.push(col);
                }
            }
        }
        maps.push(cols);
    }
    let augmentation = match (&c1.augmentation, &c2.augmentation) {
        (Some(a1), Some(a2)) => {
            let module = homalg::tensor_external(&a1.module, &a2.module)?;
            let n2 = c2.modules[0].rank();
            let mut map = Vec::new();
            for x in &a1.map {
                for y in &a2.map {
                    map.push(x.tensor(field, y, n2));
                }
            }
            Some(Augmentation { module, map })
        }
        _ => None,
    };
    CochainComplex::new(&ring, modules, maps, augmentation)
}

/// `0 -> R -> R^r -> ... -> R^(r choose r) -> 0` with the Koszul
/// differential `e_S -> sum ± t_v e_{S+v}` in positions `0..=r`; the
/// generator `e_S` sits in degree `-deg t_S` so that the maps preserve degree.
pub fn koszul_complex(ring: &GradedRing) -> CochainComplex {
    let r = ring.num_vars();
    let field = ring.field();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=r)
        .map(|k| {
            let mut all: Vec<Vec<usize>> = (0u64..(1 << r))
                .filter(|m| m.count_ones() as usize == k)
                .map(|m| (0..r).filter(|i| m >> i & 1 == 1).collect())
                .collect();
            all.sort();
            all
        })
        .collect();
    let degree = |s: &[usize]| s.iter().map(|&i| ring.var_degrees()[i] as i32).sum::<i32>();
    let modules: Vec<ModulePresentation> = subsets
        .iter()
        .map(|ss| ModulePresentation::free(ring, ss.iter().map(|s| -degree(s)).collect()))
        .collect();
    let maps = (0..r)
        .map(|k| {
            subsets[k]
                .iter()
                .map(|s| {
                    let mut col = Vector::zero();
                    for v in 0..r {
                        if s.contains(&v) {
                            continue;
                        }
                        let before = s.iter().filter(|&&x| x < v).count();
                        let mut t: Vec<usize> = s.clone();
                        t.push(v);
                        t.sort();
                        let pos = subsets[k + 1].iter().position(|x| *x == t).unwrap();
                        let term = Vector::from_coordinates(&[crate::poly::Polynomial::var(ring, v)]);
                        let mut term = term.shift_positions(pos as u32);
                        if before % 2 == 1 {
                            term = term.scale(field, field.neg(1));
                        }
                        col = col.add(field, &term);
                    }
                    col
                })
                .collect()
        })
        .collect();
    CochainComplex::new(ring, modules, maps, None).expect("consistent shape")
}
