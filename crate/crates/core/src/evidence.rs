//! Window evidence for simplicity claims.
//!
//! A quotient is presented as a (submodule, ambient-module) pair of
//! weight-local subspace families. For each seed class at an inner weight,
//! bounded-degree generator applications restricted to the outer window are
//! iterated to a fixpoint; the seed passes when the generated subspace,
//! together with the submodule, covers every inner weight space of the
//! module. This is finite-window, bounded-degree EVIDENCE — never a proof.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::grading::Weight;
use crate::linalg::{BasisKey, GradedVector, WeightSubspace};
use crate::signs::Signs;
use crate::tensor::{FKey, TensorModule};
use crate::witt::witt_basis_up_to_degree;

/// A weight-indexed family of exact subspaces of the tensor-module weight
/// spaces, all expressed over the full `F(P, M(lambda))` ambient.
#[derive(Debug, Clone)]
pub struct WeightLocalSubmodule {
    pub per_weight: BTreeMap<Weight, WeightSubspace<FKey>>,
}

impl WeightLocalSubmodule {
    pub fn empty() -> Self {
        WeightLocalSubmodule { per_weight: BTreeMap::new() }
    }

    pub fn rank_at(&self, w: &Weight) -> usize {
        self.per_weight.get(w).map_or(0, WeightSubspace::rank)
    }

    pub fn total_rank(&self) -> usize {
        self.per_weight.values().map(WeightSubspace::rank).sum()
    }

    /// The family of full restricted weight spaces over a window.
    pub fn full_module(tm: &TensorModule, window: &[Weight]) -> Result<Self> {
        let mut per_weight = BTreeMap::new();
        for w in window {
            let ambient = tm.ambient_keys_at_weight(w);
            let vectors: Vec<GradedVector<FKey>> = tm
                .keys_at_weight(w)
                .into_iter()
                .map(GradedVector::unit)
                .collect();
            if !vectors.is_empty() {
                per_weight.insert(w.clone(), WeightSubspace::span(ambient, &vectors)?);
            }
        }
        Ok(WeightLocalSubmodule { per_weight })
    }
}

/// Evidence outcome for one seed class.
#[derive(Debug, Clone)]
pub struct SeedOutcome {
    pub seed: String,
    pub weight: Weight,
    pub covered: bool,
    /// First inner weight left uncovered, if any.
    pub missed: Option<Weight>,
}

#[derive(Debug, Clone)]
pub struct EvidenceOutcome {
    pub seeds: Vec<SeedOutcome>,
    pub degree: i64,
}

impl EvidenceOutcome {
    /// Every seed class regenerated the whole inner window.
    pub fn all_covered(&self) -> bool {
        !self.seeds.is_empty() && self.seeds.iter().all(|s| s.covered)
    }
}

/// Run the fixpoint for one seed vector; returns the generated family.
fn generate_from_seed(
    tm: &TensorModule,
    seed: &GradedVector<FKey>,
    seed_weight: &Weight,
    outer: &[Weight],
    degree: i64,
    signs: &Signs,
) -> Result<BTreeMap<Weight, WeightSubspace<FKey>>> {
    let generators = witt_basis_up_to_degree(&tm.p.shape, degree);
    let mut family: BTreeMap<Weight, WeightSubspace<FKey>> = BTreeMap::new();
    family.insert(
        seed_weight.clone(),
        WeightSubspace::span(tm.ambient_keys_at_weight(seed_weight), std::slice::from_ref(seed))?,
    );
    let outer: std::collections::BTreeSet<&Weight> = outer.iter().collect();
    loop {
        let mut grew = false;
        let snapshot: Vec<(Weight, Vec<GradedVector<FKey>>)> = family
            .iter()
            .map(|(w, s)| (w.clone(), s.basis_vectors()))
            .collect();
        for (w, basis) in snapshot {
            for x in &generators {
                let target = w.add(&x.weight());
                if !outer.contains(&target) {
                    continue;
                }
                for v in &basis {
                    let img = tm.act_with(x, v, signs)?;
                    if img.is_zero() {
                        continue;
                    }
                    let entry = family.entry(target.clone()).or_insert_with(|| {
                        WeightSubspace::empty(tm.ambient_keys_at_weight(&target))
                    });
                    if !entry.contains(&img)? {
                        let enlarged = entry.sum(&WeightSubspace::span(
                            tm.ambient_keys_at_weight(&target),
                            &[img],
                        )?)?;
                        *entry = enlarged;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return Ok(family);
        }
    }
}

/// Per-seed coverage evidence for `module / submodule` over the windows.
///
/// Seeds are the module basis keys at inner weights whose class in the
/// quotient is nonzero. A seed passes when, at every inner weight, the
/// generated family plus the submodule covers the whole module weight space.
pub fn window_simplicity_evidence(
    tm: &TensorModule,
    module: &WeightLocalSubmodule,
    submodule: Option<&WeightLocalSubmodule>,
    inner: &[Weight],
    outer: &[Weight],
    degree: i64,
    signs: &Signs,
) -> Result<EvidenceOutcome> {
    let mut seeds = Vec::new();
    for w in inner {
        let Some(space) = module.per_weight.get(w) else {
            continue;
        };
        for seed in space.basis_vectors() {
            if let Some(sub) = submodule {
                if let Some(s) = sub.per_weight.get(w) {
                    if s.contains(&seed)? {
                        continue; // zero class in the quotient
                    }
                }
            }
            let family = generate_from_seed(tm, &seed, w, outer, degree, signs)?;
            let mut covered = true;
            let mut missed = None;
            for nu in inner {
                let Some(target_space) = module.per_weight.get(nu) else {
                    continue;
                };
                if target_space.rank() == 0 {
                    continue;
                }
                let mut reach = family
                    .get(nu)
                    .cloned()
                    .unwrap_or_else(|| WeightSubspace::empty(tm.ambient_keys_at_weight(nu)));
                if let Some(sub) = submodule {
                    if let Some(s) = sub.per_weight.get(nu) {
                        reach = reach.sum(s)?;
                    }
                }
                if !target_space.is_subspace_of(&reach)? {
                    covered = false;
                    missed = Some(nu.clone());
                    break;
                }
            }
            seeds.push(SeedOutcome {
                seed: format!("{seed}"),
                weight: w.clone(),
                covered,
                missed,
            });
        }
    }
    Ok(EvidenceOutcome { seeds, degree })
}
