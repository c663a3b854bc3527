use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::LabeledPath;

/// Turn the valley whose down-step sits at `valley_index` into a peak.
///
/// With up-step label `i` below down-step label `j`, the permutation is
/// relabeled by `i -> j` and `k -> k - 1` for `k` in `i+1..=j`; the new peak
/// then carries `j` and `j - 1`.
pub fn valley_swap(c: &LabeledPath, valley_index: usize) -> Result<LabeledPath> {
    let swapped = c.path().swap_valley(valley_index)?;
    let down = c.labels()[valley_index];
    let up = c.labels()[valley_index + 1];
    if down <= up {
        return Err(Error::LabelOrderViolated { up, down });
    }
    let sigma = c.permutation().ok_or(Error::SizeMismatch { expected: c.path().semilength(), found: 0 })?;
    let (i, j) = (up as u8, down as u8);
    let relabeled: Vec<u8> = sigma
        .entries()
        .iter()
        .map(|&k| match k {
            k if k == i => j,
            k if k > i && k <= j => k - 1,
            k => k,
        })
        .collect();
    let sigma = Permutation::new(relabeled).expect("relabeling is a bijection");
    LabeledPath::canon(&swapped, &sigma)
}

/// Walk from `can(start, delta_n)` up to `target`, each time swapping the
/// leftmost valley whose swap keeps the path under `target`. Returns every
/// intermediate labeling, starting with the initial one.
pub fn valley_walk(start: &DyckPath, target: &DyckPath) -> Result<Vec<LabeledPath>> {
    if !start.is_under(target)? {
        return Err(Error::NotInBSet { d: target.to_string(), b: start.to_string() });
    }
    let mut current = LabeledPath::canon(start, &Permutation::decreasing(start.semilength()))?;
    let mut trace = vec![current.clone()];
    while current.path() != target {
        let valley = current
            .path()
            .valleys()
            .into_iter()
            .find(|&v| {
                let up = current.path().swap_valley(v).expect("listed valley");
                up.is_under(target).expect("same semilength")
            })
            .expect("a path strictly under the target has an admissible valley");
        current = valley_swap(&current, valley)?;
        trace.push(current.clone());
    }
    Ok(trace)
}

/// The permutation reached by walking from `start` (a path under `target`)
/// to `target` by valley swaps.
pub fn vperm_from(start: &DyckPath, target: &DyckPath) -> Result<Permutation> {
    let trace = valley_walk(start, target)?;
    Ok(trace.last().and_then(LabeledPath::permutation).expect("walk ends on a canon labeling"))
}

/// Valley-swap construction starting from the bounce path.
pub fn vperm(d: &DyckPath) -> Permutation {
    vperm_from(&d.bounce(), d).expect("the bounce path lies under d and the walk keeps labels ordered")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn figure_swap() {
        let before =
            LabeledPath::new(p("UUUDUUDDDUDUDDUD"), vec![8, 4, 3, 8, 7, 5, 4, 3, 7, 6, 5, 2, 6, 2, 1, 1]).unwrap();
        assert_eq!(before.permutation().unwrap().to_string(), "84375621");
        let after = valley_swap(&before, 10).unwrap();
        assert_eq!(after.path(), &p("UUUDUUDDDUUDDDUD"));
        assert_eq!(after.labels(), &[8, 3, 2, 8, 7, 4, 3, 2, 7, 6, 5, 4, 6, 5, 1, 1]);
        assert_eq!(&after.labels()[10..12], &[5, 4]);
    }

    #[test]
    fn adjacent_labels_only_touch_the_valley() {
        // UDUD labeled 2,2,1,1: the swap sends 21 to 12 and the new peak reads 2,1.
        let c = LabeledPath::canon(&p("UDUD"), &"21".parse().unwrap()).unwrap();
        let after = valley_swap(&c, 1).unwrap();
        assert_eq!(after.labels(), &[1, 2, 1, 2]);
        assert_eq!(after.path(), &p("UUDD"));
    }

    #[test]
    fn swap_errors() {
        let c = LabeledPath::canon(&p("UDUD"), &"12".parse().unwrap()).unwrap();
        assert_eq!(valley_swap(&c, 1), Err(Error::LabelOrderViolated { up: 2, down: 1 }));
        assert_eq!(valley_swap(&c, 0), Err(Error::NotAValley { index: 0 }));
    }

    #[test]
    fn goldens() {
        assert_eq!(vperm(&p("UUUDUDUDDUUDDUDD")).to_string(), "86172534");
        assert_eq!(vperm(&p("UUDUDUDUDD")).to_string(), "53412");
        let d = p("UUDUUDDUDDUUDUDUUDDDUUDUDD");
        assert_eq!(vperm(&d).to_comma_string(), "13,9,12,10,11,8,6,7,5,4,3,1,2");
        for n in 1..=8 {
            assert_eq!(vperm(&DyckPath::pyramid(n)), Permutation::decreasing(n));
        }
        let bounce = p("UUDDUUUDDDUD");
        assert_eq!(valley_walk(&bounce, &bounce).unwrap().len(), 1);
        assert_eq!(vperm(&bounce), Permutation::decreasing(6));
    }

    #[test]
    fn walk_rejects_paths_not_under() {
        assert!(valley_walk(&p("UUDD"), &p("UDUD")).is_err());
    }
}
