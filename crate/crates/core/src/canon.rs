//! Canon words: a Dyck path whose up-steps and down-steps are both labeled,
//! in order, by the same permutation.

use std::fmt;

use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// For each step, the 0-based index of the permutation entry it carries:
/// the k-th up-step and the k-th down-step both carry entry k.
pub fn slot_indices(d: &DyckPath) -> Vec<u8> {
    let (mut ups, mut downs) = (0u8, 0u8);
    d.steps()
        .iter()
        .map(|s| match s {
            Step::Up => {
                ups += 1;
                ups - 1
            }
            Step::Down => {
                downs += 1;
                downs - 1
            }
        })
        .collect()
}

/// Strict descent positions, 1-based: `i` such that `w[i-1] > w[i]`.
pub fn word_descent_set(word: &[u8]) -> Vec<usize> {
    word.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1).collect()
}

pub fn word_descents(word: &[u8]) -> usize {
    word.windows(2).filter(|w| w[0] > w[1]).count()
}

#[derive(Clone)]
pub struct CanonWord {
    word: Vec<u8>,
    path: DyckPath,
    perm: Permutation,
}

impl CanonWord {
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn descent_set(&self) -> Vec<usize> {
        word_descent_set(&self.word)
    }

    pub fn descent_count(&self) -> usize {
        word_descents(&self.word)
    }

    pub fn to_comma_string(&self) -> String {
        self.word.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
    }
}

impl PartialEq for CanonWord {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for CanonWord {}

impl fmt::Display for CanonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.perm.len() <= 9 {
            for e in &self.word {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.to_comma_string())
        }
    }
}

impl fmt::Debug for CanonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonWord({self})")
    }
}

pub fn can(d: &DyckPath, sigma: &Permutation) -> Result<CanonWord> {
    if d.semilength() != sigma.len() {
        return Err(Error::SizeMismatch { expected: d.semilength(), found: sigma.len() });
    }
    let entries = sigma.entries();
    let word = slot_indices(d).into_iter().map(|k| entries[k as usize]).collect();
    Ok(CanonWord { word, path: d.clone(), perm: sigma.clone() })
}

pub fn des(d: &DyckPath, sigma: &Permutation) -> Result<usize> {
    Ok(can(d, sigma)?.descent_count())
}

/// Precomputed comparisons for counting descents of `can(d, sigma)` over
/// many `sigma` with a fixed path. Plateaus never contribute, so only the
/// adjacent steps carrying different entries are kept.
#[derive(Debug, Clone)]
pub struct DescentCounter {
    pairs: Vec<(u8, u8, u8)>,
}

impl DescentCounter {
    pub fn new(d: &DyckPath) -> Self {
        let slots = slot_indices(d);
        let pairs = slots
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] != w[1])
            .map(|(i, w)| (w[0], w[1], i as u8 + 1))
            .collect();
        DescentCounter { pairs }
    }

    #[inline]
    pub fn count(&self, sigma: &[u8]) -> usize {
        self.pairs.iter().filter(|&&(a, b, _)| sigma[a as usize] > sigma[b as usize]).count()
    }

    /// Descent set as a bitmask, bit `i` for 1-based position `i`.
    #[inline]
    pub fn mask(&self, sigma: &[u8]) -> u64 {
        self.pairs
            .iter()
            .filter(|&&(a, b, _)| sigma[a as usize] > sigma[b as usize])
            .fold(0u64, |m, &(_, _, pos)| m | (1u64 << pos))
    }
}

pub fn mask_to_positions(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Standard Young tableau of rectangular shape; row `i` lists the 1-based
/// word positions that receive `sigma_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectTableau {
    rows: Vec<Vec<usize>>,
}

impl RectTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTableau("no rows".into()));
        }
        let m = rows[0].len();
        if m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidTableau("rows must be nonempty and of equal length".into()));
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(Error::InvalidTableau("rows must increase".into()));
        }
        if (0..m).any(|j| rows.windows(2).any(|w| w[0][j] >= w[1][j])) {
            return Err(Error::InvalidTableau("columns must increase".into()));
        }
        let mut seen = vec![false; n * m + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > n * m || seen[e] {
                return Err(Error::InvalidTableau(format!("entries must be a permutation of 1..={}", n * m)));
            }
            seen[e] = true;
        }
        Ok(RectTableau { rows })
    }

    /// The two-column tableau of a path: row `k` holds the positions of the
    /// k-th up-step and the k-th down-step.
    pub fn from_dyck(d: &DyckPath) -> Self {
        let n = d.semilength();
        let mut rows = vec![Vec::with_capacity(2); n];
        for (pos, slot) in slot_indices(d).into_iter().enumerate() {
            rows[slot as usize].push(pos + 1);
        }
        RectTableau { rows }
    }

    /// Parses rows separated by `/`, entries by `,`: `1,4,7/2,5,8/3,6,9`.
    pub fn parse(text: &str) -> Result<Self> {
        let rows = text
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidTableau(format!("bad entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows[0].len()
    }

    /// For each word position, the row (0-based) that owns it.
    pub fn slot_indices(&self) -> Vec<u8> {
        let mut slots = vec![0u8; self.num_rows() * self.num_cols()];
        for (i, row) in self.rows.iter().enumerate() {
            for &pos in row {
                slots[pos - 1] = i as u8;
            }
        }
        slots
    }
}

pub fn can_tableau(t: &RectTableau, sigma: &Permutation) -> Result<Vec<u8>> {
    if t.num_rows() != sigma.len() {
        return Err(Error::SizeMismatch { expected: t.num_rows(), found: sigma.len() });
    }
    Ok(t.slot_indices().into_iter().map(|k| sigma.entries()[k as usize]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Whether `word` contains an occurrence of the pattern `abba` with a < b
    /// (1221) or a > b (2112).
    fn has_nesting(word: &[u8]) -> bool {
        let l = word.len();
        for i in 0..l {
            for j in i + 1..l {
                for k in j + 1..l {
                    for m in k + 1..l {
                        if word[i] == word[m] && word[j] == word[k] && word[i] != word[j] {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn canon_goldens() {
        assert_eq!(can(&p("UUDUDD"), &perm("123")).unwrap().to_string(), "121323");
        assert_eq!(can(&p("UUDUDD"), &perm("213")).unwrap().to_string(), "212313");
        assert_eq!(can(&p("UUDUDDUDUUDD"), &perm("541623")).unwrap().to_string(), "545141662323");
        assert_eq!(can(&p("UD"), &perm("1")).unwrap().to_string(), "11");
        assert_eq!(can(&p("UD"), &perm("12")), Err(Error::SizeMismatch { expected: 1, found: 2 }));
    }

    #[test]
    fn descent_examples() {
        let w = can(&p("UUDUDD"), &perm("123")).unwrap();
        assert_eq!(w.descent_set(), vec![2, 4]);
        assert_eq!(w.descent_count(), 2);
        let stair = DyckPath::staircase(6);
        assert_eq!(des(&stair, &Permutation::identity(6)).unwrap(), 0);
        for s in ["3421", "4132", "4231", "4321"] {
            assert_eq!(des(&p("UUDUDDUD"), &perm(s)).unwrap(), 4);
        }
    }

    #[test]
    fn counter_agrees_with_words() {
        for d in DyckPath::enumerate(4) {
            let counter = DescentCounter::new(&d);
            for s in Permutation::all(4) {
                let w = can(&d, &s).unwrap();
                assert_eq!(counter.count(s.entries()), w.descent_count());
                assert_eq!(mask_to_positions(counter.mask(s.entries())), w.descent_set());
            }
        }
    }

    #[test]
    fn copy_subsequences_equal_sigma() {
        for n in 1..=7 {
            let sigma = Permutation::standardize(&(0..n).map(|i| (i * 5 + 3) % 11).collect::<Vec<_>>());
            for d in DyckPath::enumerate(n) {
                let w = can(&d, &sigma).unwrap();
                let ups: Vec<u8> =
                    d.steps().iter().zip(w.word()).filter(|(s, _)| **s == Step::Up).map(|(_, &x)| x).collect();
                let downs: Vec<u8> =
                    d.steps().iter().zip(w.word()).filter(|(s, _)| **s == Step::Down).map(|(_, &x)| x).collect();
                assert_eq!(ups, sigma.entries());
                assert_eq!(downs, sigma.entries());
            }
        }
    }

    #[test]
    fn canon_words_are_nonnesting() {
        for n in 1..=5 {
            for d in DyckPath::enumerate(n) {
                for s in Permutation::all(n) {
                    assert!(!has_nesting(can(&d, &s).unwrap().word()), "{d} {s}");
                }
            }
        }
    }

    #[test]
    fn complement_identity_exhaustive() {
        for n in 1..=7 {
            for d in DyckPath::enumerate(n) {
                let counter = DescentCounter::new(&d);
                let k = 2 * n - 1 - d.low_peaks();
                for s in Permutation::all(n) {
                    let c = s.complement();
                    assert_eq!(counter.count(s.entries()) + counter.count(c.entries()), k);
                }
            }
        }
    }

    #[test]
    fn letter_positions_do_not_depend_on_sigma() {
        let d = p("UUDUUDDUDD");
        let positions = |s: &Permutation| {
            let w = can(&d, s).unwrap();
            let mut pairs: Vec<Vec<usize>> = (1..=5u8)
                .map(|v| w.word().iter().enumerate().filter(|(_, &x)| x == v).map(|(i, _)| i).collect())
                .collect();
            pairs.sort();
            pairs
        };
        let base = positions(&Permutation::identity(5));
        for s in Permutation::all(5) {
            assert_eq!(positions(&s), base);
        }
    }

    #[test]
    fn tableau_placement() {
        let t = RectTableau::parse("1,4,7/2,5,8/3,6,9").unwrap();
        assert_eq!(can_tableau(&t, &perm("123")).unwrap(), vec![1, 2, 3, 1, 2, 3, 1, 2, 3]);
        for n in 1..=6 {
            for d in DyckPath::enumerate(n) {
                let t = RectTableau::from_dyck(&d);
                assert!(RectTableau::new(t.rows().to_vec()).is_ok());
                for s in Permutation::all(n).step_by(7) {
                    assert_eq!(can_tableau(&t, &s).unwrap(), can(&d, &s).unwrap().word());
                }
            }
        }
    }

    #[test]
    fn tableau_validation() {
        assert!(RectTableau::parse("1,2/3,4").is_ok());
        assert!(RectTableau::parse("1,3/2,4").is_ok());
        assert!(matches!(RectTableau::parse("2,1/3,4"), Err(Error::InvalidTableau(_))));
        assert!(matches!(RectTableau::parse("1,4/2,3"), Err(Error::InvalidTableau(_))));
        assert!(matches!(RectTableau::parse("1,2/3,5"), Err(Error::InvalidTableau(_))));
        let t = RectTableau::parse("1,4/2,5/3,6").unwrap();
        assert!(matches!(can_tableau(&t, &perm("12")), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn tableau_letter_multiset() {
        let t = RectTableau::parse("1,2,5/3,4,8/6,7,9").unwrap();
        for s in Permutation::all(3) {
            let mut w = can_tableau(&t, &s).unwrap();
            w.sort();
            assert_eq!(w, vec![1, 1, 1, 2, 2, 2, 3, 3, 3]);
        }
    }
}
