use crate::dyck::{DyckPath, Step};
use crate::perm::Permutation;

use super::LabeledPath;

/// Index of the down-step paired with each up-step (k-th up with k-th down).
pub(super) fn partners(d: &DyckPath) -> Vec<usize> {
    let downs: Vec<usize> = (0..d.len()).filter(|&i| d.step(i) == Step::Down).collect();
    let mut partner = vec![usize::MAX; d.len()];
    let mut k = 0;
    for i in 0..d.len() {
        if d.step(i) == Step::Up {
            partner[i] = downs[k];
            k += 1;
        }
    }
    partner
}

/// Greedy labeling state shared by [`bperm`] and the generalized variant.
/// Labels are kept as signed integers because relabeling may push the
/// smallest ones below 1 before the final standardization.
pub(super) struct GreedyLabeling {
    pub labels: Vec<Option<i64>>,
    pub partner: Vec<usize>,
}

impl GreedyLabeling {
    pub fn start(d: &DyckPath) -> Self {
        let partner = partners(d);
        let mut labels = vec![None; d.len()];
        if !d.is_empty() {
            let n = d.semilength() as i64;
            labels[0] = Some(n);
            labels[partner[0]] = Some(n);
        }
        GreedyLabeling { labels, partner }
    }

    pub fn first_unlabeled(&self) -> Option<usize> {
        self.labels.iter().position(Option::is_none)
    }

    /// Put `label` on the up-step `pos` and its partner, first shifting every
    /// existing label `<= label` down by one if `label` is already taken.
    pub fn assign(&mut self, pos: usize, label: i64) {
        if self.labels.contains(&Some(label)) {
            for l in self.labels.iter_mut().flatten() {
                if *l <= label {
                    *l -= 1;
                }
            }
        }
        self.labels[pos] = Some(label);
        self.labels[self.partner[pos]] = Some(label);
    }

    pub fn finish(self, d: &DyckPath) -> (Permutation, LabeledPath) {
        let ups: Vec<i64> = (0..d.len())
            .filter(|&i| d.step(i) == Step::Up)
            .map(|i| self.labels[i].expect("every step labeled"))
            .collect();
        let sigma = Permutation::standardize(&ups);
        let lp = LabeledPath::canon(d, &sigma).expect("semilength matches");
        (sigma, lp)
    }
}

/// The labeled path produced by the greedy bounce labeling.
pub fn bperm_labeling(d: &DyckPath) -> LabeledPath {
    let mut state = GreedyLabeling::start(d);
    while let Some(pos) = state.first_unlabeled() {
        let previous = state.labels[pos - 1].expect("steps before the first gap are labeled");
        state.assign(pos, previous - 1);
    }
    state.finish(d).1
}

/// Greedy labeling: each new up-step takes one less than the label just
/// before it, shifting lower labels down to make room when needed.
pub fn bperm(d: &DyckPath) -> Permutation {
    bperm_labeling(d).permutation().expect("bperm produces a canon labeling")
}
