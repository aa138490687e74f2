//! Finitely generated graded modules given by a free cover and relations.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::free::{FreeElement, FreeModuleSpec};
use crate::groebner::{self, SubmoduleGB};
use crate::poly::Polynomial;
use crate::ring::GradedRing;
use crate::vector::Vector;

/// `M = cover / relations`. The zero module has a rank-0 cover.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    ring: GradedRing,
    cover: Vec<i32>,
    relations: Vec<Vector>,
    gb: OnceLock<SubmoduleGB>,
}

/// Result of eliminating redundant generators.
#[derive(Clone, Debug)]
pub struct Pruned {
    pub module: ModulePresentation,
    /// For each generator of the new module, the index of the original
    /// generator it came from.
    pub kept: Vec<usize>,
    /// Image of every original generator in the new cover.
    pub substitution: Vec<Vector>,
}

impl ModulePresentation {
    pub fn new(ring: &GradedRing, cover: Vec<i32>, relations: Vec<Vector>) -> Result<Self> {
        for (k, rel) in relations.iter().enumerate() {
            if let Some(p) = rel.max_pos() {
                if p as usize >= cover.len() {
                    return Err(Error::ModuleMismatch(format!(
                        "relation {k} has a coordinate beyond the cover rank {}",
                        cover.len()
                    )));
                }
            }
            if !rel.is_zero() && rel.homogeneous_degree(&cover).is_none() {
                return Err(Error::Inhomogeneous(format!("relation {k}")));
            }
        }
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(ModulePresentation {
            ring: ring.clone(),
            cover,
            relations,
            gb: OnceLock::new(),
        })
    }

    pub fn from_elements(cover: &FreeModuleSpec, relations: &[FreeElement]) -> Result<Self> {
        let mut raw = Vec::with_capacity(relations.len());
        for r in relations {
            if r.module() != cover {
                return Err(Error::ModuleMismatch("relation outside the cover".into()));
            }
            raw.push(r.vector().clone());
        }
        Self::new(cover.ring(), cover.shifts().to_vec(), raw)
    }

    pub fn free(ring: &GradedRing, shifts: Vec<i32>) -> Self {
        Self::new(ring, shifts, Vec::new()).expect("free modules have no relations")
    }

    pub fn zero(ring: &GradedRing) -> Self {
        Self::free(ring, Vec::new())
    }

    /// `R / (f1, ..., fc)` shifted so the generator sits in degree `shift`.
    pub fn cyclic(ring: &GradedRing, shift: i32, ideal: &[Polynomial]) -> Result<Self> {
        let rels = ideal
            .iter()
            .map(|f| {
                ring.check_same(f.ring())?;
                Ok(Vector::from_coordinates(std::slice::from_ref(f)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, vec![shift], rels)
    }

    /// The residue field `k = R/(t1..tr)` in degree 0.
    pub fn residue_field(ring: &GradedRing) -> Self {
        let vars: Vec<Polynomial> = (0..ring.num_vars()).map(|i| Polynomial::var(ring, i)).collect();
        Self::cyclic(ring, 0, &vars).expect("variables are homogeneous")
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn cover(&self) -> FreeModuleSpec {
        FreeModuleSpec::new(&self.ring, self.cover.clone())
    }

    pub fn cover_shifts(&self) -> &[i32] {
        &self.cover
    }

    pub fn rank(&self) -> usize {
        self.cover.len()
    }

    pub fn relations(&self) -> &[Vector] {
        &self.relations
    }

    pub fn relation_elements(&self) -> Vec<FreeElement> {
        let c = self.cover();
        self.relations
            .iter()
            .map(|v| FreeElement::from_vector(&c, v.clone()))
            .collect()
    }

    /// Reduced Gröbner basis of the relation module (cached).
    pub fn relations_gb(&self) -> &SubmoduleGB {
        self.gb.get_or_init(|| {
            groebner::groebner_basis_in(&self.cover(), &self.relations)
                .expect("relations were checked homogeneous")
        })
    }

    pub(crate) fn reduce(&self, v: &Vector) -> Vector {
        self.relations_gb().reduce_raw(v)
    }

    /// `v` is zero in `M`.
    pub fn vanishes(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.relations_gb().is_everything()
    }

    pub fn is_free_presentation(&self) -> bool {
        self.relations.is_empty()
    }

    /// `M[k]`: every generator moved up by `k`.
    pub fn shift(&self, k: i32) -> ModulePresentation {
        ModulePresentation {
            ring: self.ring.clone(),
            cover: self.cover.iter().map(|s| s + k).collect(),
            relations: self.relations.clone(),
            gb: self.gb.clone(),
        }
    }

    pub fn direct_sum(&self, other: &ModulePresentation) -> Result<ModulePresentation> {
        self.ring.check_same(&other.ring)?;
        let off = self.rank() as u32;
        let mut cover = self.cover.clone();
        cover.extend_from_slice(&other.cover);
        let mut rels = self.relations.clone();
        rels.extend(other.relations.iter().map(|r| r.shift_positions(off)));
        ModulePresentation::new(&self.ring, cover, rels)
    }

    pub fn direct_sum_all(ring: &GradedRing, parts: &[ModulePresentation]) -> Result<ModulePresentation> {
        parts
            .iter()
            .try_fold(ModulePresentation::zero(ring), |acc, m| acc.direct_sum(m))
    }

    /// Eliminate generators that are expressible through the others: any
    /// relation with a unit entry at position `i` lets `e_i` be solved for.
    /// The result has a minimal generating set; its relations are minimal
    /// generators of the relation module.
    pub fn prune(&self) -> Pruned {
        let field = self.ring.field();
        let nv = self.ring.num_vars();
        let mut shifts = self.cover.clone();
        let mut kept: Vec<usize> = (0..shifts.len()).collect();
        let mut subst: Vec<Vector> = (0..shifts.len()).map(|i| Vector::basis(i, nv)).collect();
        let mut rels = groebner::minimal_generators(&self.ring, &shifts, &self.relations)
            .expect("relations were checked homogeneous");
        loop {
            let hit = rels
                .iter()
                .enumerate()
                .find_map(|(k, v)| v.unit_position().map(|(pos, c)| (k, pos, c)));
            let Some((k, pos, c)) = hit else { break };
            let v = rels.swap_remove(k);
            // e_pos = -c^{-1} (v - c e_pos)
            let rest = v.sub(field, &Vector::basis(pos as usize, nv).scale(field, c));
            let w = rest.scale(field, field.neg(field.inv(c)));
            let n = shifts.len();
            let images: Vec<Vector> = (0..n)
                .map(|p| if p == pos as usize { w.clone() } else { Vector::basis(p, nv) })
                .collect();
            let renumber: Vec<Option<u32>> = (0..n as u32)
                .map(|p| match p.cmp(&pos) {
                    std::cmp::Ordering::Less => Some(p),
                    std::cmp::Ordering::Equal => None,
                    std::cmp::Ordering::Greater => Some(p - 1),
                })
                .collect();
            let step = |x: &Vector| {
                let y = x.apply(field, &images);
                debug_assert!(y.terms().iter().all(|t| t.pos != pos));
                y.reindex(&renumber)
            };
            rels = rels.iter().map(step).filter(|r| !r.is_zero()).collect();
            subst = subst.iter().map(step).collect();
            shifts.remove(pos as usize);
            kept.remove(pos as usize);
        }
        let rels = groebner::minimal_generators(&self.ring, &shifts, &rels)
            .expect("substitution preserves homogeneity");
        let module = ModulePresentation::new(&self.ring, shifts, rels)
            .expect("substitution preserves homogeneity");
        Pruned {
            module,
            kept,
            substitution: subst,
        }
    }

    pub fn minimal_presentation(&self) -> ModulePresentation {
        self.prune().module
    }

    pub fn number_of_minimal_generators(&self) -> usize {
        self.prune().module.rank()
    }
}

/// Presentation of `L / K` where `L` is generated by `l_gens` inside a free
/// module with `ambient` shifts and `K ⊆ L` is generated by `k_gens`.
/// Returns the pruned presentation together with the image of each of its
/// generators in the ambient module.
pub fn subquotient(
    ring: &GradedRing,
    ambient: &[i32],
    l_gens: &[Vector],
    k_gens: &[Vector],
) -> Result<(ModulePresentation, Vec<Vector>)> {
    let l_gens: Vec<Vector> = l_gens.iter().filter(|v| !v.is_zero()).cloned().collect();
    let cover = l_gens
        .iter()
        .enumerate()
        .map(|(k, v)| {
            v.homogeneous_degree(ambient)
                .ok_or_else(|| Error::Inhomogeneous(format!("subquotient generator {k}")))
        })
        .collect::<Result<Vec<i32>>>()?;
    let rels = groebner::preimage_raw(ring, &cover, ambient, &l_gens, k_gens)?;
    let raw = ModulePresentation::new(ring, cover, rels)?;
    let pruned = raw.prune();
    let images = pruned.kept.iter().map(|&k| l_gens[k].clone()).collect();
    Ok((pruned.module, images))
}

/// Presentation of the image of a map of free modules, with the image
/// generators in the target.
pub fn image_module(ring: &GradedRing, target: &[i32], columns: &[Vector]) -> Result<(ModulePresentation, Vec<Vector>)> {
    subquotient(ring, target, columns, &[])
}
