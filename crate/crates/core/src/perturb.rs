//! Single-edge perturbation analysis.
//!
//! The ccdh of a graph after adding or deleting one edge depends only on the
//! unordered pair of endpoint degrees, so all possible single-edge edits
//! collapse into a small number of equivalence classes: one per realized
//! degree pair. Grouping by class makes the exhaustive max/average scan cost
//! `O(D^2 + m)` in the number of distinct degrees `D` instead of `O(n^2)`
//! over raw vertex pairs.

use std::collections::BTreeMap;

use crate::ccdh::Ccdh;
use crate::error::{Result, RhError};
use crate::graph::Graph;
use crate::rh;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PerturbMode {
    Add,
    Delete,
}

/// An equivalence class of single-edge edits: all edits whose endpoints have
/// the (unordered) degree pair `degrees` in the original graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerturbClass {
    pub mode: PerturbMode,
    /// Endpoint degrees in the original graph, smaller first.
    pub degrees: (u64, u64),
    /// Number of vertex pairs (additions) or edges (deletions) in the class.
    pub multiplicity: u64,
}

/// Enumerates the realizable single-edge edit classes of `graph`, sorted by
/// degree pair.
///
/// Deletions group the existing edges by endpoint degrees. Additions count,
/// for each degree pair `(a, b)`, the vertex pairs with those degrees minus
/// the pairs already adjacent; a class is emitted only when some
/// non-adjacent pair remains.
pub fn perturbation_classes(graph: &Graph, mode: PerturbMode) -> Result<Vec<PerturbClass>> {
    if graph.edge_count() == 0 {
        return Err(RhError::EmptyGraph);
    }
    let degrees = graph.degrees();
    let mut adjacent: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for (u, v) in graph.edges() {
        let (a, b) = (degrees[u as usize], degrees[v as usize]);
        *adjacent.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    match mode {
        PerturbMode::Delete => Ok(adjacent
            .into_iter()
            .map(|(degrees, multiplicity)| PerturbClass {
                mode,
                degrees,
                multiplicity,
            })
            .collect()),
        PerturbMode::Add => {
            let mut per_degree: BTreeMap<u64, u64> = BTreeMap::new();
            for &d in &degrees {
                *per_degree.entry(d).or_insert(0) += 1;
            }
            let distinct: Vec<(u64, u64)> = per_degree.into_iter().collect();
            let mut out = Vec::new();
            for (i, &(a, cnt_a)) in distinct.iter().enumerate() {
                for &(b, cnt_b) in &distinct[i..] {
                    let total = if a == b {
                        cnt_a * (cnt_a - 1) / 2
                    } else {
                        cnt_a * cnt_b
                    };
                    let taken = adjacent.get(&(a, b)).copied().unwrap_or(0);
                    debug_assert!(taken <= total);
                    if total > taken {
                        out.push(PerturbClass {
                            mode,
                            degrees: (a, b),
                            multiplicity: total - taken,
                        });
                    }
                }
            }
            Ok(out)
        }
    }
}

/// The ccdh after applying one edit from `cls` to a graph whose ccdh is `c`.
///
/// Adding an edge at degrees `(a, b)` raises both endpoints one degree, so
/// `N(a+1)` and `N(b+1)` each gain a vertex (growing the curve when
/// `a + 1 > delta`); deleting lowers them, so `N(a)` and `N(b)` each lose
/// one and trailing zeros are trimmed. A deletion that zeroes the whole
/// curve (the lone-edge graph) is an error.
pub fn perturbed_ccdh(c: &Ccdh, cls: &PerturbClass) -> Result<Ccdh> {
    let (a, b) = cls.degrees;
    let mut values = c.values().to_vec();
    match cls.mode {
        PerturbMode::Add => {
            let new_delta = c.delta().max(a + 1).max(b + 1);
            values.resize(new_delta as usize, 0);
            values[a as usize] += 1;
            values[b as usize] += 1;
        }
        PerturbMode::Delete => {
            for d in [a, b] {
                let slot = values
                    .get_mut((d - 1) as usize)
                    .filter(|v| **v > 0)
                    .ok_or_else(|| {
                        RhError::Parameter(format!("no vertex of degree {d} to delete from"))
                    })?;
                *slot -= 1;
            }
            while values.last() == Some(&0) {
                values.pop();
            }
            if values.is_empty() {
                return Err(RhError::EmptyResult);
            }
        }
    }
    Ccdh::from_values(values)
}

/// Worst and average smooth RH distance over the single-edge edits of one
/// mode.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbStats {
    pub max_eps: f64,
    pub argmax_class: PerturbClass,
    /// Multiplicity-weighted mean, i.e. the mean over individual edits.
    pub avg_eps: f64,
}

pub fn perturb_stats(graph: &Graph, mode: PerturbMode) -> Result<PerturbStats> {
    let classes = perturbation_classes(graph, mode)?;
    if classes.is_empty() {
        return Err(RhError::NoPerturbations);
    }
    let original = graph.ccdh();
    let mut max_eps = f64::NEG_INFINITY;
    let mut argmax_class = classes[0];
    let mut weighted_sum = 0.0;
    let mut weight = 0u64;
    for cls in &classes {
        let changed = perturbed_ccdh(&original, cls)?;
        let eps = rh::smooth_rh(&original, &changed).distance;
        if eps > max_eps {
            max_eps = eps;
            argmax_class = *cls;
        }
        weighted_sum += eps * cls.multiplicity as f64;
        weight += cls.multiplicity;
    }
    Ok(PerturbStats {
        max_eps,
        argmax_class,
        avg_eps: weighted_sum / weight as f64,
    })
}
