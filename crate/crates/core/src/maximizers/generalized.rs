//! The greedy labeling with a choice of step size.
//!
//! Instead of always labeling the next up-step with `i - 1` (where `i` is the
//! label just before it), any `i - k` may be used provided both copies of
//! each of `i - 1, ..., i - k + 1` already sit to the left of that up-step.
//! Whether every such labeling is descent-maximizing is unproven; callers
//! verify the outputs rather than assume it.

use std::collections::BTreeSet;

use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::bperm::GreedyLabeling;

/// Picks a step size `k` from the admissible ones (always starting with 1).
pub trait ChoiceOracle {
    fn choose(&mut self, position: usize, admissible: &[usize]) -> usize;
}

impl<F: FnMut(usize, &[usize]) -> usize> ChoiceOracle for F {
    fn choose(&mut self, position: usize, admissible: &[usize]) -> usize {
        self(position, admissible)
    }
}

/// Always `k = 1`, which reproduces the plain greedy labeling.
pub struct FirstChoice;

impl ChoiceOracle for FirstChoice {
    fn choose(&mut self, _: usize, _: &[usize]) -> usize {
        1
    }
}

fn admissible(state: &GreedyLabeling, pos: usize, previous: i64) -> Vec<usize> {
    let mut ks = vec![1];
    let mut k = 1;
    loop {
        let label = previous - k as i64;
        let copies: Vec<usize> =
            state.labels.iter().enumerate().filter(|(_, l)| **l == Some(label)).map(|(i, _)| i).collect();
        if copies.len() == 2 && copies.iter().all(|&i| i < pos) {
            k += 1;
            ks.push(k);
        } else {
            return ks;
        }
    }
}

pub fn generalized_bperm(d: &DyckPath, oracle: &mut impl ChoiceOracle) -> Result<Permutation> {
    let mut state = GreedyLabeling::start(d);
    while let Some(pos) = state.first_unlabeled() {
        let previous = state.labels[pos - 1].expect("steps before the first gap are labeled");
        let ks = admissible(&state, pos, previous);
        let k = oracle.choose(pos, &ks);
        if !ks.contains(&k) {
            return Err(Error::InvalidChoice { step: pos, k, admissible: ks });
        }
        state.assign(pos, previous - k as i64);
    }
    Ok(state.finish(d).0)
}

/// Every permutation reachable through some sequence of admissible choices.
pub fn generalized_bperm_outputs(d: &DyckPath) -> BTreeSet<Permutation> {
    fn walk(d: &DyckPath, state: GreedyLabeling, out: &mut BTreeSet<Permutation>) {
        let Some(pos) = state.first_unlabeled() else {
            out.insert(state.finish(d).0);
            return;
        };
        let previous = state.labels[pos - 1].expect("labeled prefix");
        for k in admissible(&state, pos, previous) {
            let mut next = GreedyLabeling { labels: state.labels.clone(), partner: state.partner.clone() };
            next.assign(pos, previous - k as i64);
            walk(d, next, out);
        }
    }
    let mut out = BTreeSet::new();
    walk(d, GreedyLabeling::start(d), &mut out);
    out
}
