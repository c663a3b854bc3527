use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<u8>,
}

impl Permutation {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let e = e as usize;
            if e == 0 || e > n || seen[e] {
                return Err(Error::InvalidPermutation { n, entries: entries.iter().map(|&x| x as usize).collect() });
            }
            seen[e] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn from_slice(entries: &[usize]) -> Result<Self> {
        if entries.iter().any(|&e| e > u8::MAX as usize) {
            return Err(Error::InvalidPermutation { n: entries.len(), entries: entries.to_vec() });
        }
        Self::new(entries.iter().map(|&e| e as u8).collect())
    }

    /// Relative order of arbitrary distinct values, e.g. `[7, -2, 3] -> 312`.
    pub fn standardize<T: Ord>(values: &[T]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[a].cmp(&values[b]));
        let mut entries = vec![0u8; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            entries[i] = rank as u8 + 1;
        }
        Permutation { entries }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { entries: (1..=n as u8).collect() }
    }

    /// `n (n-1) ... 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation { entries: (1..=n as u8).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.entries.iter().map(|&e| e as usize).collect()
    }

    /// `i -> n + 1 - i` applied to every entry.
    pub fn complement(&self) -> Self {
        let n = self.entries.len() as u8;
        Permutation { entries: self.entries.iter().map(|&e| n + 1 - e).collect() }
    }

    pub fn descents(&self) -> usize {
        self.entries.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Permutations {
        Permutations { current: Some((1..=n as u8).collect()) }
    }

    pub fn to_comma_string(&self) -> String {
        self.entries.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
    }
}

/// In-place lexicographic successor; `false` once the last permutation is reached.
pub fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

pub struct Permutations {
    current: Option<Vec<u8>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let entries = self.current.take()?;
        let mut succ = entries.clone();
        if next_permutation(&mut succ) {
            self.current = Some(succ);
        }
        Some(Permutation { entries })
    }
}

/// Digits run together when every entry is a single digit, commas otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.len() <= 9 {
            for e in &self.entries {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.to_comma_string())
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Parses `4132` or `13,1,12,2`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad_char(t))).collect::<Result<_>>()?
        } else {
            s.chars()
                .enumerate()
                .map(|(position, ch)| ch.to_digit(10).map(|d| d as usize).ok_or(Error::BadCharacter { ch, position }))
                .collect::<Result<_>>()?
        };
        Permutation::from_slice(&values)
    }
}

fn bad_char(token: &str) -> Error {
    let ch = token.chars().find(|c| !c.is_ascii_digit()).unwrap_or(' ');
    Error::BadCharacter { ch, position: 0 }
}
