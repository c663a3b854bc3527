//! Dyck paths and their statistics.
//!
//! A path is stored as its step sequence together with the height profile,
//! `heights[x]` being the height after `x` steps. Step indices are 0-based
//! throughout; the point `x` sits between step `x - 1` and step `x`.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn flipped(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// A balanced up/down word that never dips below the axis.
///
/// Ordering is lexicographic on the steps with `Up < Down`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
    heights: Vec<u32>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut heights = Vec::with_capacity(steps.len() + 1);
        heights.push(0u32);
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < 0 {
                let ups = steps.iter().filter(|s| **s == Step::Up).count();
                let downs = steps.len() - ups;
                // A word that is unbalanced overall is reported as such first.
                if ups != downs {
                    return Err(Error::UnbalancedWord { ups, downs });
                }
                return Err(Error::NegativePrefix { position: i + 1 });
            }
            heights.push(h as u32);
        }
        if h != 0 {
            let ups = steps.iter().filter(|s| **s == Step::Up).count();
            return Err(Error::UnbalancedWord { ups, downs: steps.len() - ups });
        }
        Ok(DyckPath { steps, heights })
    }

    /// Accepts `U`/`D` (any case) or `1`/`0`; whitespace is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(text.len());
        for (position, ch) in text.chars().enumerate() {
            match ch {
                'U' | 'u' | '1' => steps.push(Step::Up),
                'D' | 'd' | '0' => steps.push(Step::Down),
                c if c.is_whitespace() => {}
                ch => return Err(Error::BadCharacter { ch, position }),
            }
        }
        if steps.is_empty() {
            return Err(Error::EmptyWord);
        }
        DyckPath::new(steps)
    }

    /// `U^c1 D^c1 U^c2 D^c2 ...`, the bounce path with the given peak heights.
    pub fn from_composition(c: &Composition) -> Self {
        let mut steps = Vec::with_capacity(2 * c.total() as usize);
        for &part in c.parts() {
            steps.extend(std::iter::repeat_n(Step::Up, part as usize));
            steps.extend(std::iter::repeat_n(Step::Down, part as usize));
        }
        DyckPath::new(steps).expect("bounce word is a Dyck path")
    }

    pub fn staircase(n: usize) -> Self {
        Self::from_composition(&Composition::new(vec![1; n]).expect("n >= 1"))
    }

    pub fn pyramid(n: usize) -> Self {
        Self::from_composition(&Composition::new(vec![n as u32]).expect("n >= 1"))
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn step(&self, index: usize) -> Step {
        self.steps[index]
    }

    /// Height profile, `2n + 1` entries.
    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn height_at(&self, x: usize) -> u32 {
        self.heights[x]
    }

    /// Maximum height reached by the path.
    pub fn height(&self) -> u32 {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    /// Up-step indices `i` with `steps[i..i + 2] == UD`.
    pub fn peaks(&self) -> Vec<usize> {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::Up && w[1] == Step::Down)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn pk(&self) -> usize {
        self.peaks().len()
    }

    /// Peaks whose up-step starts on the axis.
    pub fn low_peaks(&self) -> usize {
        self.peaks().into_iter().filter(|&i| self.heights[i] == 0).count()
    }

    /// Down-step indices `i` with `steps[i..i + 2] == DU`.
    pub fn valleys(&self) -> Vec<usize> {
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::Down && w[1] == Step::Up)
            .map(|(i, _)| i)
            .collect()
    }

    /// Whether the point `x` is the bottom of a valley.
    pub fn is_valley_point(&self, x: usize) -> bool {
        x > 0 && x < self.steps.len() && self.steps[x - 1] == Step::Down && self.steps[x] == Step::Up
    }

    pub fn is_primitive(&self) -> bool {
        !self.steps.is_empty() && self.heights[1..self.steps.len()].iter().all(|&h| h > 0)
    }

    pub fn primitive_factors(&self) -> Vec<DyckPath> {
        let mut factors = Vec::new();
        let mut start = 0;
        for x in 1..=self.steps.len() {
            if self.heights[x] == 0 {
                factors.push(DyckPath::new(self.steps[start..x].to_vec()).expect("factor between axis touches"));
                start = x;
            }
        }
        factors
    }

    /// Heights of the bounce peaks together with the index of each bounce
    /// peak's down-step. From `(x0, 0)` the bounce climbs to the first height
    /// `k` where `d` passes through `(x0 + k, k)` and takes a down-step next.
    fn bounce_peaks(&self) -> Vec<(u32, usize)> {
        let total = self.steps.len();
        let mut peaks = Vec::new();
        let mut x0 = 0;
        while x0 < total {
            let mut k = 1;
            while !(self.heights[x0 + k] as usize == k && self.steps[x0 + k] == Step::Down) {
                k += 1;
                debug_assert!(x0 + k < total, "bounce climb ran past the end");
            }
            peaks.push((k as u32, x0 + k));
            x0 += 2 * k;
        }
        peaks
    }

    pub fn bounce(&self) -> DyckPath {
        DyckPath::from_composition(&self.bcomp())
    }

    pub fn bcomp(&self) -> Composition {
        Composition { parts: self.bounce_peaks().into_iter().map(|(h, _)| h).collect() }
    }

    pub fn bpk(&self) -> usize {
        self.bounce_peaks().len()
    }

    pub fn is_bounce(&self) -> bool {
        *self == self.bounce()
    }

    pub fn bounce_factors(&self) -> BounceFactorization {
        BounceFactorization {
            boundaries: self.bounce_peaks().into_iter().map(|(_, x)| x).collect(),
            len: self.steps.len(),
        }
    }

    /// Lattice order: `self` lies weakly below `other`.
    pub fn is_under(&self, other: &DyckPath) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::SemilengthMismatch { left: self.semilength(), right: other.semilength() });
        }
        Ok(self.heights.iter().zip(&other.heights).all(|(a, b)| a <= b))
    }

    /// Mirror image: steps reversed with up and down exchanged.
    pub fn reverse(&self) -> DyckPath {
        let steps = self.steps.iter().rev().map(|s| s.flipped()).collect();
        DyckPath::new(steps).expect("mirror of a Dyck path")
    }

    pub fn reverse_bounce(&self) -> DyckPath {
        self.reverse().bounce().reverse()
    }

    /// The path with the valley whose down-step is at `index` turned into a peak.
    pub fn swap_valley(&self, index: usize) -> Result<DyckPath> {
        if index + 1 >= self.steps.len() || self.steps[index] != Step::Down || self.steps[index + 1] != Step::Up {
            return Err(Error::NotAValley { index });
        }
        let mut steps = self.steps.clone();
        steps.swap(index, index + 1);
        DyckPath::new(steps)
    }

    /// All paths of semilength `n` in lexicographic order (`U < D`).
    pub fn enumerate(n: usize) -> DyckIter {
        DyckIter::new(n)
    }

    pub fn to_bits(&self) -> String {
        self.steps.iter().map(|s| if *s == Step::Up { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DyckPath::parse(s)
    }
}

/// Lexicographic successor enumeration of `Dyck_n`.
#[derive(Debug, Clone)]
pub struct DyckIter {
    current: Option<Vec<Step>>,
}

impl DyckIter {
    fn new(n: usize) -> Self {
        let mut first = vec![Step::Up; n];
        first.extend(std::iter::repeat_n(Step::Down, n));
        DyckIter { current: Some(first) }
    }

    fn advance(steps: &mut [Step]) -> bool {
        let n = steps.len() / 2;
        // Find the rightmost U that can become D, then refill the suffix
        // with the smallest completion U^a D^b.
        let mut ups_before = vec![0usize; steps.len() + 1];
        for (i, s) in steps.iter().enumerate() {
            ups_before[i + 1] = ups_before[i] + usize::from(*s == Step::Up);
        }
        for i in (0..steps.len()).rev() {
            if steps[i] != Step::Up {
                continue;
            }
            let ups = ups_before[i];
            let height = 2 * ups as i64 - i as i64;
            if height >= 1 {
                steps[i] = Step::Down;
                let remaining_ups = n - ups;
                for (j, s) in steps[i + 1..].iter_mut().enumerate() {
                    *s = if j < remaining_ups { Step::Up } else { Step::Down };
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for DyckIter {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let steps = self.current.take()?;
        let mut successor = steps.clone();
        if Self::advance(&mut successor) {
            self.current = Some(successor);
        }
        Some(DyckPath::new(steps).expect("enumerated word is a Dyck path"))
    }
}

/// Sequence of positive parts, e.g. the bounce composition of a path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// All compositions of `n`, in lexicographic order of parts.
    pub fn all(n: u32) -> Vec<Composition> {
        fn rec(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: prefix.clone() });
                return;
            }
            for p in 1..=rest {
                prefix.push(p);
                rec(rest - p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Split of a path at the down-step of every bounce peak.
///
/// There is one boundary per bounce peak, so `bpk` boundaries cut the path
/// into `bpk + 1` factors; the final factor is the closing run of
/// down-steps after the last bounce peak.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BounceFactorization {
    boundaries: Vec<usize>,
    len: usize,
}

impl BounceFactorization {
    /// Step indices of the bounce-peak down-steps, strictly increasing.
    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    pub fn ranges(&self) -> Vec<Range<usize>> {
        let mut out = Vec::with_capacity(self.boundaries.len() + 1);
        let mut start = 0;
        for &b in &self.boundaries {
            out.push(start..b);
            start = b;
        }
        out.push(start..self.len);
        out
    }

    /// Index of the factor containing step `index`.
    pub fn factor_of(&self, index: usize) -> usize {
        self.boundaries.iter().take_while(|&&b| b <= index).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn parse_accepts_both_alphabets() {
        assert_eq!(p("UUDUDD").semilength(), 3);
        assert_eq!(p("uudd"), p("1100"));
        assert_eq!(p("UD").semilength(), 1);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(DyckPath::parse("UDDU"), Err(Error::NegativePrefix { position: 3 }));
        assert_eq!(DyckPath::parse("UUD"), Err(Error::UnbalancedWord { ups: 2, downs: 1 }));
        assert_eq!(DyckPath::parse("UXD"), Err(Error::BadCharacter { ch: 'X', position: 1 }));
        assert_eq!(DyckPath::parse(""), Err(Error::EmptyWord));
    }

    #[test]
    fn peak_statistics() {
        let d = p("UUDUDDUDUUDD");
        assert_eq!(d.pk(), 4);
        assert_eq!(d.low_peaks(), 1);
        assert_eq!(DyckPath::pyramid(5).pk(), 1);
        assert_eq!(DyckPath::pyramid(5).low_peaks(), 0);
        assert_eq!(DyckPath::staircase(5).pk(), 5);
        assert_eq!(DyckPath::staircase(5).low_peaks(), 5);
    }

    #[test]
    fn primitive_factors_split_on_axis() {
        let factors = p("UUDUDDUDUUDD").primitive_factors();
        assert_eq!(factors, vec![p("UUDUDD"), p("UD"), p("UUDD")]);
        assert_eq!(p("UUDUDD").primitive_factors(), vec![p("UUDUDD")]);
        assert_eq!(DyckPath::staircase(3).primitive_factors(), vec![p("UD"); 3]);
    }

    #[test]
    fn bounce_of_figure_path() {
        let d = p("UUUDDUUDUUDDUUDUDDDD");
        assert_eq!(d.bcomp().parts(), &[3, 4, 3]);
        assert_eq!(d.bpk(), 3);
        assert_eq!(d.bounce(), p("UUUDDDUUUUDDDDUUUDDD"));
    }

    #[test]
    fn bounce_small_cases() {
        assert_eq!(p("UUDUDD").bounce(), p("UUDDUD"));
        assert_eq!(p("UUDUDDUD").bcomp().parts(), &[2, 1, 1]);
        assert_eq!(p("UUDUDDUD").bpk(), 3);
        assert_eq!(DyckPath::pyramid(4).bcomp().parts(), &[4]);
    }

    #[test]
    fn bounce_factor_boundaries_match_figure() {
        // Cuts at x = 4, 11, 17 in the drawing.
        let d = p("UUUUDDUDUUDDUDDUUDDD");
        let f = d.bounce_factors();
        assert_eq!(f.boundaries(), &[4, 11, 17]);
        assert_eq!(f.ranges(), vec![0..4, 4..11, 11..17, 17..20]);
        assert_eq!(f.factor_of(3), 0);
        assert_eq!(f.factor_of(4), 1);
        assert_eq!(f.factor_of(19), 3);
    }

    #[test]
    fn under_relation() {
        assert!(p("UUDUDDUD").is_under(&p("UUUDDUDD")).unwrap());
        assert!(!p("UUUDDUDD").is_under(&p("UUDUDDUD")).unwrap());
        assert_eq!(p("UD").is_under(&p("UUDD")), Err(Error::SemilengthMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn reverse_is_mirror() {
        assert_eq!(p("UUDUDD").reverse(), p("UUDUDD"));
        assert_eq!(p("UUDDUD").reverse(), p("UDUUDD"));
    }

    #[test]
    fn enumeration_counts_and_order() {
        let three: Vec<String> = DyckPath::enumerate(3).map(|d| d.to_string()).collect();
        assert_eq!(three, ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]);
        assert_eq!(DyckPath::enumerate(1).map(|d| d.to_string()).collect::<Vec<_>>(), ["UD"]);
        assert_eq!(DyckPath::enumerate(6).count(), 132);
        assert_eq!(DyckPath::enumerate(0).count(), 1);
    }

    #[test]
    fn swap_valley_rejects_non_valleys() {
        assert_eq!(p("UDUD").swap_valley(1).unwrap(), p("UUDD"));
        assert_eq!(p("UDUD").swap_valley(0), Err(Error::NotAValley { index: 0 }));
    }

    #[test]
    fn compositions() {
        assert_eq!(Composition::all(3).len(), 4);
        assert!(Composition::new(vec![1, 0]).is_err());
        assert_eq!(Composition::new(vec![3, 4, 3]).unwrap().to_string(), "(3,4,3)");
    }
}
