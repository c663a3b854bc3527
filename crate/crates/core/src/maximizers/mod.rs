//! Descent-maximizing labelings.
//!
//! `m_d` is the largest number of descents over all canon labelings of `d`
//! and `M_d` the set of permutations attaining it. Two constructions land in
//! `M_d` directly ([`bperm`] and [`vperm`]); the brute-force [`max_set`] is
//! the reference, and [`b_set`] with [`max_poset`] splits `M_d` into blocks
//! of linear extensions.

mod bperm;
mod bset;
mod generalized;
mod poset;
mod valley;

use std::collections::BTreeSet;
use std::fmt;

pub use bperm::{bperm, bperm_labeling};
pub use bset::{b_set, is_in_b_set};
pub use generalized::{generalized_bperm, generalized_bperm_outputs, ChoiceOracle, FirstChoice};
pub use poset::{max_poset, MaxPoset};
pub use valley::{valley_swap, valley_walk, vperm, vperm_from};

use crate::canon::{mask_to_positions, slot_indices, DescentCounter};
use crate::descent::{check_bound, sweep_permutations};
use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{Coefficient, Polynomial};

/// A path with labels on its steps; `0` marks an unlabeled step.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledPath {
    path: DyckPath,
    labels: Vec<u32>,
}

impl LabeledPath {
    pub fn new(path: DyckPath, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != path.len() {
            return Err(Error::SizeMismatch { expected: path.len(), found: labels.len() });
        }
        Ok(LabeledPath { path, labels })
    }

    /// The canon labeling `can(d, sigma)`.
    pub fn canon(path: &DyckPath, sigma: &Permutation) -> Result<Self> {
        if path.semilength() != sigma.len() {
            return Err(Error::SizeMismatch { expected: path.semilength(), found: sigma.len() });
        }
        let labels = slot_indices(path).into_iter().map(|k| sigma.entries()[k as usize] as u32).collect();
        Ok(LabeledPath { path: path.clone(), labels })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn is_complete(&self) -> bool {
        !self.labels.contains(&0)
    }

    /// Labels read along the up-steps, if they form a valid canon labeling.
    pub fn permutation(&self) -> Option<Permutation> {
        let pick = |want: Step| -> Vec<u32> {
            self.path.steps().iter().zip(&self.labels).filter(|(s, _)| **s == want).map(|(_, &l)| l).collect()
        };
        let ups = pick(Step::Up);
        if ups != pick(Step::Down) || ups.iter().any(|&l| l == 0 || l > u8::MAX as u32) {
            return None;
        }
        Permutation::new(ups.into_iter().map(|l| l as u8).collect()).ok()
    }

    pub fn descent_set(&self) -> Vec<usize> {
        self.labels.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1).collect()
    }
}

impl fmt::Debug for LabeledPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledPath({} {:?})", self.path, self.labels)
    }
}

/// `2n - 1 - bpk d`.
pub fn max_descents_formula(d: &DyckPath) -> usize {
    (2 * d.semilength()).saturating_sub(1 + d.bpk())
}

/// Descent histogram and maximizers of one path, from a single sweep over `S_n`.
#[derive(Debug, Clone)]
pub struct PathProfile {
    pub histogram: Vec<u64>,
    pub max_descents: usize,
    /// `M_d`, sorted.
    pub maximizers: Vec<Permutation>,
}

impl PathProfile {
    pub fn poly<C: Coefficient>(&self) -> Polynomial<C> {
        Polynomial::from_counts(&self.histogram)
    }
}

pub fn path_profile(d: &DyckPath, bound: usize) -> Result<PathProfile> {
    let n = d.semilength();
    check_bound(n, bound)?;
    let counter = DescentCounter::new(d);
    struct Acc {
        histogram: Vec<u64>,
        best: usize,
        winners: Vec<Vec<u8>>,
    }
    let len = d.len().max(1);
    let acc = sweep_permutations(
        n,
        || Acc { histogram: vec![0; len], best: 0, winners: Vec::new() },
        |acc, sigma| {
            let k = counter.count(sigma);
            acc.histogram[k] += 1;
            if k > acc.best {
                acc.best = k;
                acc.winners.clear();
            }
            if k == acc.best {
                acc.winners.push(sigma.to_vec());
            }
        },
        |mut a, b| {
            for (x, y) in a.histogram.iter_mut().zip(&b.histogram) {
                *x += y;
            }
            if b.best > a.best {
                a.best = b.best;
                a.winners = b.winners;
            } else if b.best == a.best {
                a.winners.extend(b.winners);
            }
            a
        },
    );
    let mut maximizers: Vec<Permutation> =
        acc.winners.into_iter().map(|w| Permutation::new(w).expect("sweep yields permutations")).collect();
    maximizers.sort();
    Ok(PathProfile { histogram: acc.histogram, max_descents: acc.best, maximizers })
}

/// `M_d` by brute force.
pub fn max_set(d: &DyckPath, bound: usize) -> Result<BTreeSet<Permutation>> {
    Ok(path_profile(d, bound)?.maximizers.into_iter().collect())
}

/// `{Des(d, sigma) : sigma in M_d}`, positions 1-based.
pub fn des_set_of_max(d: &DyckPath, bound: usize) -> Result<BTreeSet<Vec<usize>>> {
    let counter = DescentCounter::new(d);
    Ok(path_profile(d, bound)?.maximizers.iter().map(|s| mask_to_positions(counter.mask(s.entries()))).collect())
}

/// `{Des(b, delta_n) : b in B_d}`: the complements of the peak positions of each `b`.
pub fn peak_sets_of_b(d: &DyckPath) -> BTreeSet<Vec<usize>> {
    let delta = Permutation::decreasing(d.semilength());
    b_set(d).iter().map(|b| mask_to_positions(DescentCounter::new(b).mask(delta.entries()))).collect()
}
