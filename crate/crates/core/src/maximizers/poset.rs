use std::collections::BTreeSet;
use std::fmt;

use crate::canon::slot_indices;
use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::bset::is_in_b_set;

/// A strict partial order on generators `a_1..a_n`, stored with its
/// transitive closure. A pair `(i, j)` means `a_i > a_j` (1-based).
#[derive(Clone, PartialEq, Eq)]
pub struct MaxPoset {
    size: usize,
    relations: BTreeSet<(usize, usize)>,
    above: Vec<Vec<bool>>,
}

impl MaxPoset {
    pub fn new(size: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let relations: BTreeSet<(usize, usize)> = relations.into_iter().collect();
        let mut above = vec![vec![false; size]; size];
        for &(i, j) in &relations {
            if i == 0 || j == 0 || i > size || j > size {
                return Err(Error::SizeMismatch { expected: size, found: i.max(j) });
            }
            above[i - 1][j - 1] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if above[i][k] {
                    for j in 0..size {
                        if above[k][j] {
                            above[i][j] = true;
                        }
                    }
                }
            }
        }
        if let Some(i) = (0..size).find(|&i| above[i][i]) {
            return Err(Error::CyclicRelation(i + 1));
        }
        Ok(MaxPoset { size, relations, above })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The generating relations, before closure.
    pub fn relations(&self) -> &BTreeSet<(usize, usize)> {
        &self.relations
    }

    /// `a_i >_P a_j` in the closure (1-based).
    pub fn greater(&self, i: usize, j: usize) -> bool {
        self.above[i - 1][j - 1]
    }

    /// Cover relations of the closure.
    pub fn hasse(&self) -> BTreeSet<(usize, usize)> {
        let n = self.size;
        let mut covers = BTreeSet::new();
        for i in 0..n {
            for j in 0..n {
                if self.above[i][j] && !(0..n).any(|k| self.above[i][k] && self.above[k][j]) {
                    covers.insert((i + 1, j + 1));
                }
            }
        }
        covers
    }

    pub fn is_chain(&self) -> bool {
        (0..self.size).all(|i| (i + 1..self.size).all(|j| self.above[i][j] || self.above[j][i]))
    }

    /// Every `sigma` with `sigma_i > sigma_j` whenever `a_i >_P a_j`, sorted.
    pub fn linear_extensions(&self) -> Vec<Permutation> {
        let n = self.size;
        let mut out = Vec::new();
        let mut values = vec![0u8; n];
        let mut placed = vec![false; n];
        // Hand out values n, n-1, ..., 1; the next value may go to any element
        // with nothing unplaced above it.
        fn rec(p: &MaxPoset, next: usize, values: &mut [u8], placed: &mut [bool], out: &mut Vec<Permutation>) {
            if next == 0 {
                out.push(Permutation::new(values.to_vec()).expect("values are 1..=n"));
                return;
            }
            for i in 0..p.size {
                if placed[i] || (0..p.size).any(|k| !placed[k] && p.above[k][i]) {
                    continue;
                }
                placed[i] = true;
                values[i] = next as u8;
                rec(p, next - 1, values, placed, out);
                placed[i] = false;
            }
        }
        rec(self, n, &mut values, &mut placed, &mut out);
        out.sort();
        out
    }

    pub fn is_linear_extension(&self, sigma: &Permutation) -> bool {
        let e = sigma.entries();
        e.len() == self.size && (0..self.size).all(|i| (0..self.size).all(|j| !self.above[i][j] || e[i] > e[j]))
    }
}

impl fmt::Debug for MaxPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MaxPoset(n={}, {self})", self.size)
    }
}

impl fmt::Display for MaxPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.hasse().iter().map(|(i, j)| format!("a{i}>a{j}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `P_{d,b}`: label `d` by the identity, cut the word at the peaks of `b`,
/// and require each piece to decrease from left to right.
pub fn max_poset(d: &DyckPath, b: &DyckPath) -> Result<MaxPoset> {
    if !is_in_b_set(b, d)? {
        return Err(Error::NotInBSet { d: d.to_string(), b: b.to_string() });
    }
    let word: Vec<usize> = slot_indices(d).into_iter().map(|k| k as usize + 1).collect();
    let cuts: BTreeSet<usize> = b.peaks().into_iter().map(|i| i + 1).collect();
    let mut relations = Vec::new();
    for s in 0..word.len().saturating_sub(1) {
        if cuts.contains(&(s + 1)) {
            continue;
        }
        if word[s] == word[s + 1] {
            return Err(Error::CyclicRelation(word[s]));
        }
        relations.push((word[s], word[s + 1]));
    }
    MaxPoset::new(d.semilength(), relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn strs(v: &[Permutation]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn figure_poset() {
        let poset = max_poset(&p("UUDUDUDUDD"), &p("UUDDUDUUDD")).unwrap();
        let rel: Vec<(usize, usize)> = poset.relations().iter().copied().collect();
        assert_eq!(rel, vec![(1, 2), (1, 3), (3, 2), (3, 5), (4, 3), (4, 5)]);
        assert!(poset.greater(4, 2));
        assert_eq!(strs(&poset.linear_extensions()), ["41352", "42351", "51342", "52341"]);
        assert!(!poset.is_chain());
    }

    #[test]
    fn three_block_partition() {
        let d = p("UUDUDDUUDD");
        let blocks: Vec<(String, Vec<String>)> = crate::maximizers::b_set(&d)
            .iter()
            .map(|b| (b.to_string(), strs(&max_poset(&d, b).unwrap().linear_extensions())))
            .collect();
        assert_eq!(
            blocks,
            vec![
                ("UUDUDDUUDD".to_string(), vec!["54321".to_string()]),
                ("UUDDUDUUDD".to_string(), vec!["51432".into(), "52431".into(), "53421".into()]),
                ("UDUUDDUUDD".to_string(), vec!["45321".to_string()]),
            ]
        );
    }

    #[test]
    fn bounce_path_gives_chain() {
        let d = p("UUUDDDUUDD");
        let poset = max_poset(&d, &d).unwrap();
        assert!(poset.is_chain());
        assert_eq!(poset.linear_extensions(), vec![Permutation::decreasing(5)]);
    }

    #[test]
    fn antichain_and_chain_extensions() {
        let anti = MaxPoset::new(4, []).unwrap();
        assert_eq!(anti.linear_extensions().len(), 24);
        let chain = MaxPoset::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(strs(&chain.linear_extensions()), ["4321"]);
        assert_eq!(MaxPoset::new(3, [(1, 2), (2, 3), (3, 1)]).unwrap_err(), Error::CyclicRelation(1));
    }

    #[test]
    fn rejects_paths_outside_b_set() {
        let err = max_poset(&p("UUDUDD"), &p("UDUDUD")).unwrap_err();
        assert!(matches!(err, Error::NotInBSet { .. }));
    }
}
