//! Minimal graded free resolutions, graded Betti numbers and Hilbert series.
//!
//! The resolution is built by pruning the presentation to a minimal one and
//! then taking minimal generators of each successive kernel. Because every
//! map sends a basis onto a minimal generating set of its image, every
//! kernel lies in `m·F` and the result is minimal without any cancellation
//! pass.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::free::FreeModuleSpec;
use crate::groebner::{self, SubmoduleGB};
use crate::hilbert::HilbertSeries;
use crate::module::ModulePresentation;
use crate::ring::GradedRing;
use crate::vector::Vector;

/// A natural-number invariant that is undefined for the zero module
/// (projective and Krull dimension).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Measured {
    ZeroModule,
    Value(usize),
}

impl Measured {
    pub fn value(self) -> Option<usize> {
        match self {
            Measured::ZeroModule => None,
            Measured::Value(v) => Some(v),
        }
    }
}

impl fmt::Display for Measured {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measured::ZeroModule => f.write_str("zero-module"),
            Measured::Value(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Resolution {
    ring: GradedRing,
    /// Shifts of `F_0, ..., F_l`; empty for the zero module.
    modules: Vec<Vec<i32>>,
    /// `differentials[i]` holds the images of the basis of `F_{i+1}` in
    /// `F_i`.
    differentials: Vec<Vec<Vector>>,
    /// Generator of the input presentation that each basis element of
    /// `F_0` maps to.
    augmentation: Vec<usize>,
}

/// Graded Betti numbers keyed by (homological index, internal degree).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable(pub BTreeMap<(usize, i32), usize>);

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BettiRecord {
    pub index: usize,
    pub degree: i32,
    pub rank: usize,
}

impl BettiTable {
    pub fn from_shifts(modules: &[Vec<i32>]) -> Self {
        let mut t = BTreeMap::new();
        for (i, shifts) in modules.iter().enumerate() {
            for &s in shifts {
                *t.entry((i, s)).or_insert(0) += 1;
            }
        }
        BettiTable(t)
    }

    pub fn from_entries(entries: &[((usize, i32), usize)]) -> Self {
        let mut t = BTreeMap::new();
        for &(k, v) in entries {
            if v > 0 {
                *t.entry(k).or_insert(0) += v;
            }
        }
        BettiTable(t)
    }

    /// Total rank in each homological degree.
    pub fn ranks(&self) -> Vec<usize> {
        let len = self.0.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for (&(i, _), &n) in &self.0 {
            out[i] += n;
        }
        out
    }

    pub fn get(&self, i: usize, j: i32) -> usize {
        self.0.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn records(&self) -> Vec<BettiRecord> {
        self.0
            .iter()
            .map(|(&(index, degree), &rank)| BettiRecord {
                index,
                degree,
                rank,
            })
            .collect()
    }

    /// Shift every internal degree by `k`.
    pub fn shift(&self, k: i32) -> BettiTable {
        BettiTable(self.0.iter().map(|(&(i, j), &n)| ((i, j + k), n)).collect())
    }

    pub fn add(&self, other: &BettiTable) -> BettiTable {
        let mut t = self.0.clone();
        for (&k, &n) in &other.0 {
            *t.entry(k).or_insert(0) += n;
        }
        BettiTable(t)
    }

    /// Betti table of a tensor product of minimal resolutions.
    pub fn convolve(&self, other: &BettiTable) -> BettiTable {
        let mut t = BTreeMap::new();
        for (&(i, j), &n) in &self.0 {
            for (&(k, l), &m) in &other.0 {
                *t.entry((i + k, j + l)).or_insert(0) += n * m;
            }
        }
        BettiTable(t)
    }

    /// Grid with rows `j - i` and columns `i`, as in Macaulay2.
    pub fn grid(&self) -> String {
        if self.0.is_empty() {
            return "0\n".to_string();
        }
        let cols = self.ranks().len();
        let rows: Vec<i32> = {
            let lo = self.0.keys().map(|&(i, j)| j - i as i32).min().unwrap();
            let hi = self.0.keys().map(|&(i, j)| j - i as i32).max().unwrap();
            (lo..=hi).collect()
        };
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|&row| {
                (0..cols)
                    .map(|i| match self.get(i, row + i as i32) {
                        0 => ".".to_string(),
                        n => n.to_string(),
                    })
                    .collect()
            })
            .collect();
        let totals: Vec<String> = self.ranks().iter().map(|n| n.to_string()).collect();
        let width = cells
            .iter()
            .flatten()
            .chain(totals.iter())
            .map(|s| s.len())
            .max()
            .unwrap_or(1)
            .max(cols.to_string().len());
        let label_w = rows
            .iter()
            .map(|r| r.to_string().len())
            .max()
            .unwrap_or(1)
            .max("total".len())
            + 1;
        let mut out = String::new();
        out.push_str(&" ".repeat(label_w + 1));
        let header: Vec<String> = (0..cols).map(|i| format!("{i:>width$}")).collect();
        out.push_str(&header.join(" "));
        out.push('\n');
        out.push_str(&format!("{:>label_w$} ", "total:"));
        let t: Vec<String> = totals.iter().map(|s| format!("{s:>width$}")).collect();
        out.push_str(&t.join(" "));
        out.push('\n');
        for (row, line) in rows.iter().zip(cells) {
            out.push_str(&format!("{:>label_w$} ", format!("{row}:")));
            let l: Vec<String> = line.iter().map(|s| format!("{s:>width$}")).collect();
            out.push_str(&l.join(" "));
            out.push('\n');
        }
        out
    }
}

impl Resolution {
    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    /// Number of nonzero differentials (`l` for `0 -> F_l -> ... -> F_0`).
    /// The zero module has length 0 and no free modules.
    pub fn length(&self) -> usize {
        self.modules.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn module_shifts(&self, i: usize) -> &[i32] {
        self.modules.get(i).map_or(&[], |v| v.as_slice())
    }

    pub fn free_module(&self, i: usize) -> FreeModuleSpec {
        FreeModuleSpec::new(&self.ring, self.module_shifts(i).to_vec())
    }

    pub fn modules(&self) -> &[Vec<i32>] {
        &self.modules
    }

    /// Images of the basis of `F_i` in `F_{i-1}`, for `1 <= i <= length`.
    pub fn differential(&self, i: usize) -> &[Vector] {
        assert!(i >= 1, "no differential out of F_0");
        self.differentials.get(i - 1).map_or(&[], |v| v.as_slice())
    }

    pub fn augmentation(&self) -> &[usize] {
        &self.augmentation
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_shifts(&self.modules)
    }

    pub fn projective_dimension(&self) -> Measured {
        if self.modules.is_empty() {
            Measured::ZeroModule
        } else {
            Measured::Value(self.length())
        }
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        let degs = self.ring.var_degrees();
        self.modules
            .iter()
            .enumerate()
            .fold(HilbertSeries::zero(degs), |acc, (i, shifts)| {
                let f = HilbertSeries::free(shifts, degs);
                if i % 2 == 0 {
                    acc.add(&f)
                } else {
                    acc.sub(&f)
                }
            })
    }

    /// `d_{i} ∘ d_{i+1} = 0` for all `i`.
    pub fn composites_vanish(&self) -> bool {
        let field = self.ring.field();
        (1..self.length()).all(|i| {
            let lower = self.differential(i);
            self.differential(i + 1)
                .iter()
                .all(|c| c.apply(field, lower).is_zero())
        })
    }

    /// No differential entry has a nonzero constant term.
    pub fn is_minimal(&self) -> bool {
        self.differentials
            .iter()
            .flatten()
            .all(|c| c.unit_position().is_none())
    }

    /// Kernel of `d_i` equals the image of `d_{i+1}` for `1 <= i <= l`
    /// (with `d_{l+1} = 0`), compared as reduced Gröbner bases.
    pub fn is_exact(&self) -> bool {
        for i in 1..=self.length() {
            let src = self.module_shifts(i);
            let tgt = self.module_shifts(i - 1);
            let Ok(ker) = groebner::kernel_raw(&self.ring, src, tgt, self.differential(i)) else {
                return false;
            };
            let image: Vec<Vector> = if i < self.length() {
                self.differential(i + 1).to_vec()
            } else {
                Vec::new()
            };
            let spec = self.free_module(i);
            let Ok(img_gb) = groebner::groebner_basis_in(&spec, &image) else {
                return false;
            };
            if SubmoduleGB::from_raw(&spec, ker) != img_gb {
                return false;
            }
        }
        true
    }
}

pub fn minimal_free_resolution(m: &ModulePresentation) -> Resolution {
    let ring = m.ring().clone();
    let pruned = m.prune();
    let base = pruned.module;
    if base.rank() == 0 {
        return Resolution {
            ring,
            modules: Vec::new(),
            differentials: Vec::new(),
            augmentation: Vec::new(),
        };
    }
    let mut modules = vec![base.cover_shifts().to_vec()];
    let mut differentials: Vec<Vec<Vector>> = Vec::new();
    let mut cols: Vec<Vector> = base.relations().to_vec();
    while !cols.is_empty() {
        let prev = modules.last().unwrap();
        let shifts: Vec<i32> = cols
            .iter()
            .map(|c| c.homogeneous_degree(prev).expect("homogeneous"))
            .collect();
        let ker = groebner::kernel_raw(&ring, &shifts, prev, &cols).expect("degree-consistent");
        let next = groebner::minimal_generators(&ring, &shifts, &ker).expect("homogeneous");
        modules.push(shifts);
        differentials.push(cols);
        cols = next;
    }
    let res = Resolution {
        ring,
        modules,
        differentials,
        augmentation: pruned.kept,
    };
    assert!(
        res.length() <= res.ring.num_vars(),
        "resolution longer than the number of variables"
    );
    res
}

pub fn projective_dimension(m: &ModulePresentation) -> Measured {
    minimal_free_resolution(m).projective_dimension()
}

pub fn graded_betti(m: &ModulePresentation) -> BettiTable {
    minimal_free_resolution(m).betti()
}

pub fn hilbert_series(m: &ModulePresentation) -> HilbertSeries {
    minimal_free_resolution(m).hilbert_series()
}
