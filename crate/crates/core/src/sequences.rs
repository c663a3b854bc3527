//! Integer sequences computed by exhaustive enumeration.
//!
//! Every report carries its terms, the checks run against independent
//! oracles, and any conjecture that failed. A failed conjecture is recorded
//! as a [`ConjectureViolation`], never as an error: it is a finding.

use std::collections::BTreeSet;
use std::fmt;
use std::io::{self, Write};

use rayon::prelude::*;

use crate::counting::{catalan, count_peakmatch_by_bcomp, count_pk_eq_bpk_by_bcomp};
use crate::dyck::{Composition, DyckPath};
use crate::error::Result;
use crate::maximizers::{b_set, bperm, generalized_bperm_outputs, max_poset, path_profile, vperm, PathProfile};
use crate::perm::Permutation;

/// One named sequence: scalar terms indexed by semilength, or one row per
/// semilength for triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Terms {
    Scalar(Vec<(usize, u64)>),
    Rows(Vec<(usize, Vec<u64>)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    pub name: String,
    pub terms: Terms,
}

impl Series {
    fn scalar(name: &str, terms: Vec<(usize, u64)>) -> Self {
        Series { name: name.to_string(), terms: Terms::Scalar(terms) }
    }

    /// b-file lines `index value`. Scalar sequences are indexed by
    /// semilength; triangles are read row by row with a running index from 1.
    pub fn bfile_lines(&self) -> Vec<String> {
        match &self.terms {
            Terms::Scalar(t) => t.iter().map(|(n, v)| format!("{n} {v}")).collect(),
            Terms::Rows(rows) => {
                rows.iter().flat_map(|(_, r)| r.iter()).enumerate().map(|(i, v)| format!("{} {v}", i + 1)).collect()
            }
        }
    }

    pub fn write_bfile(&self, out: &mut impl Write) -> io::Result<()> {
        for line in self.bfile_lines() {
            writeln!(out, "{line}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureViolation {
    pub conjecture: String,
    pub n: usize,
    pub detail: String,
}

impl fmt::Display for ConjectureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CONJECTURE_VIOLATED {} n={}: {}", self.conjecture, self.n, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceReport {
    pub name: String,
    pub method: String,
    pub conjectural: bool,
    /// The first series is the headline sequence.
    pub series: Vec<Series>,
    pub checks: Vec<Check>,
    pub violations: Vec<ConjectureViolation>,
}

impl SequenceReport {
    fn new(name: &str, method: &str, conjectural: bool) -> Self {
        SequenceReport {
            name: name.to_string(),
            method: method.to_string(),
            conjectural,
            series: Vec::new(),
            checks: Vec::new(),
            violations: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    fn conjecture(&mut self, conjecture: &str, n: usize, holds: bool, detail: impl Into<String>) {
        if !holds {
            self.violations.push(ConjectureViolation { conjecture: conjecture.to_string(), n, detail: detail.into() });
        }
    }

    /// All non-conjectural checks passed. Violations do not count.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn headline(&self) -> &Series {
        &self.series[0]
    }

    pub fn series(&self, name: &str) -> Option<&Series> {
        self.series.iter().find(|s| s.name == name)
    }

    /// Scalar terms of the named series, or an empty vector.
    pub fn values(&self, name: &str) -> Vec<u64> {
        match self.series(name).map(|s| &s.terms) {
            Some(Terms::Scalar(t)) => t.iter().map(|&(_, v)| v).collect(),
            _ => Vec::new(),
        }
    }
}

/// Brute-force profile (histogram and `M_d`) of every path, per semilength.
pub struct Census {
    levels: Vec<Vec<(DyckPath, PathProfile)>>,
}

impl Census {
    /// Runs the sweep for semilengths `1..=max_n`.
    pub fn new(max_n: usize, bound: usize) -> Result<Self> {
        let mut levels = Vec::with_capacity(max_n);
        for n in 1..=max_n {
            let paths: Vec<DyckPath> = DyckPath::enumerate(n).collect();
            let level: Result<Vec<_>> =
                paths.into_par_iter().map(|d| path_profile(&d, bound).map(|p| (d, p))).collect();
            levels.push(level?);
        }
        Ok(Census { levels })
    }

    pub fn max_n(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, n: usize) -> &[(DyckPath, PathProfile)] {
        &self.levels[n - 1]
    }
}

/// `(1 - 2x)/(1 - 3x + x^2)` expanded: `a_0 = a_1 = 1`, `a_n = 3a_(n-1) - a_(n-2)`.
pub fn pk_eq_bpk_generating_function(max_n: usize) -> Vec<u64> {
    let mut a = vec![1u64, 1];
    while a.len() <= max_n {
        let k = a.len();
        a.push(3 * a[k - 1] - a[k - 2]);
    }
    a.truncate(max_n + 1);
    a
}

/// Number of `d` with `pk d = bpk d` (A001519), by enumeration, by composition sums,
/// and from the generating function.
pub fn seq_pk_eq_bpk(max_n: usize) -> SequenceReport {
    let mut r = SequenceReport::new(
        "pk-eq-bpk",
        "enumeration; sum of c1...c(k-1) over compositions; generating function",
        false,
    );
    let gf = pk_eq_bpk_generating_function(max_n);
    let mut terms = Vec::new();
    for n in 1..=max_n {
        let direct = DyckPath::enumerate(n).filter(|d| d.pk() == d.bpk()).count() as u64;
        let by_comp: u64 = Composition::all(n as u32).iter().map(count_pk_eq_bpk_by_bcomp::<u64>).sum();
        r.check(format!("n={n} composition formula"), direct == by_comp, format!("{direct} vs {by_comp}"));
        r.check(format!("n={n} generating function"), direct == gf[n], format!("{direct} vs {}", gf[n]));
        terms.push((n, direct));
    }
    r.series.push(Series::scalar("pk-eq-bpk", terms));
    r
}

/// Every peak of `bounce d` is also a peak of `d`.
pub fn bounce_peaks_are_peaks(d: &DyckPath) -> bool {
    let peaks: BTreeSet<usize> = d.peaks().into_iter().collect();
    d.bounce().peaks().iter().all(|i| peaks.contains(i))
}

/// The first peak of `d` is as high as the path ever gets.
pub fn first_peak_is_highest(d: &DyckPath) -> bool {
    d.peaks().first().is_none_or(|&i| d.height_at(i + 1) == d.height())
}

/// Number of `d` with `|B_d| = 1` (A287709), four ways.
pub fn seq_bd_singleton(max_n: usize) -> SequenceReport {
    let mut r = SequenceReport::new(
        "bd-singleton",
        "size of B_d; bounce peaks coincide with peaks; product of binomials over compositions; first peak is highest",
        false,
    );
    let mut terms = Vec::new();
    for n in 1..=max_n {
        let paths: Vec<DyckPath> = DyckPath::enumerate(n).collect();
        let by_set = paths.par_iter().filter(|d| b_set(d).len() == 1).count() as u64;
        let by_peaks = paths.iter().filter(|d| bounce_peaks_are_peaks(d)).count() as u64;
        let by_formula: u64 = Composition::all(n as u32).iter().map(count_peakmatch_by_bcomp::<u64>).sum();
        let mismatched = paths.par_iter().filter(|d| (b_set(d).len() == 1) != bounce_peaks_are_peaks(d)).count();
        r.check(format!("n={n} criterion per path"), mismatched == 0, format!("{mismatched} paths disagree"));
        r.check(format!("n={n} peak criterion count"), by_set == by_peaks, format!("{by_set} vs {by_peaks}"));
        r.check(format!("n={n} product formula"), by_set == by_formula, format!("{by_set} vs {by_formula}"));
        let by_height = paths.iter().filter(|d| first_peak_is_highest(d)).count() as u64;
        r.check(format!("n={n} first peak highest"), by_set == by_height, format!("{by_set} vs {by_height}"));
        terms.push((n, by_set));
    }
    r.series.push(Series::scalar("bd-singleton", terms));
    r
}

/// Distribution of `m_d` (the height triangle A080936), listed as the number of paths with
/// `m_d = 2n - 1 - k` for `k = 1..=n`, against `bpk` and height.
pub fn seq_md_distribution(census: &Census) -> SequenceReport {
    let mut r = SequenceReport::new("md-dist", "brute-force m_d reindexed by 2n-1-m; bpk; height", false);
    let mut rows = Vec::new();
    for n in 1..=census.max_n() {
        let mut by_m = vec![0u64; n];
        let mut by_bpk = vec![0u64; n];
        let mut by_height = vec![0u64; n];
        let mut out_of_range = 0;
        for (d, prof) in census.level(n) {
            match (2 * n - 1).checked_sub(prof.max_descents) {
                Some(k) if (1..=n).contains(&k) => by_m[k - 1] += 1,
                _ => out_of_range += 1,
            }
            by_bpk[d.bpk() - 1] += 1;
            by_height[d.height() as usize - 1] += 1;
        }
        r.check(format!("n={n} m_d in range"), out_of_range == 0, format!("{out_of_range} outside"));
        r.check(format!("n={n} m_d vs bpk"), by_m == by_bpk, format!("{by_m:?} vs {by_bpk:?}"));
        r.check(format!("n={n} bpk vs height"), by_bpk == by_height, format!("{by_bpk:?} vs {by_height:?}"));
        rows.push((n, by_m));
    }
    r.series.push(Series { name: "md-dist".to_string(), terms: Terms::Rows(rows) });
    r
}

/// `|M_d| = 1`, read off the posets: `M_d` is the disjoint union of the
/// linear extensions of `P_{d,b}`, and a poset has exactly one linear
/// extension when it is a chain.
pub fn unique_maximizer(d: &DyckPath) -> Result<bool> {
    let bs = b_set(d);
    Ok(bs.len() == 1 && max_poset(d, &bs[0])?.is_chain())
}

/// Number of `d` with a single descent-maximizer, a conjectural match for A088456;
/// the terms are emitted for outside comparison.
pub fn seq_md_equals_one(max_n: usize, census: &Census) -> Result<SequenceReport> {
    let mut r = SequenceReport::new("md-one", "poset chains over B_d; brute force where the census reaches", true);
    let mut terms = Vec::new();
    for n in 1..=max_n {
        let paths: Vec<DyckPath> = DyckPath::enumerate(n).collect();
        let flags: Result<Vec<bool>> = paths.par_iter().map(unique_maximizer).collect();
        let flags = flags?;
        let count = flags.iter().filter(|&&f| f).count() as u64;
        if n <= census.max_n() {
            let level = census.level(n);
            let brute = level.iter().filter(|(_, p)| p.maximizers.len() == 1).count() as u64;
            let disagree = level.iter().zip(&flags).filter(|((_, p), &f)| (p.maximizers.len() == 1) != f).count();
            r.check(format!("n={n} brute force"), brute == count && disagree == 0, format!("{brute} vs {count}"));
            let implication = level.iter().filter(|(d, p)| p.maximizers.len() == 1 && b_set(d).len() != 1).count();
            r.check(
                format!("n={n} unique maximizer implies |B_d| = 1"),
                implication == 0,
                format!("{implication} counterexamples"),
            );
        }
        terms.push((n, count));
    }
    r.series.push(Series::scalar("md-one", terms));
    Ok(r)
}

/// Sizes of the union of all `M_d` and of the images of bperm and vperm,
/// and the number of paths where the two agree (conjecturally A005773).
pub fn seq_candy_sizes(census: &Census) -> SequenceReport {
    const KNOWN: [u64; 8] = [1, 1, 3, 9, 34, 152, 771, 4371];
    let mut r = SequenceReport::new("candy", "union of brute-force M_d; images of bperm and vperm", true);
    let (mut all, mut via_b, mut via_v, mut agree) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for n in 1..=census.max_n() {
        let level = census.level(n);
        let union: BTreeSet<&Permutation> = level.iter().flat_map(|(_, p)| p.maximizers.iter()).collect();
        let pairs: Vec<(Permutation, Permutation)> = level.par_iter().map(|(d, _)| (bperm(d), vperm(d))).collect();
        let bs: BTreeSet<&Permutation> = pairs.iter().map(|(b, _)| b).collect();
        let vs: BTreeSet<&Permutation> = pairs.iter().map(|(_, v)| v).collect();
        let same = pairs.iter().filter(|(b, v)| b == v).count() as u64;
        let outside = pairs.iter().zip(level).filter(|((b, v), (_, p))| {
            p.maximizers.binary_search(b).is_err() || p.maximizers.binary_search(v).is_err()
        });
        let outside = outside.count();
        r.check(format!("n={n} bperm and vperm in M_d"), outside == 0, format!("{outside} paths"));
        if let Some(&expected) = KNOWN.get(n - 1) {
            r.check(
                format!("n={n} known size"),
                union.len() as u64 == expected,
                format!("{} vs {expected}", union.len()),
            );
        }
        let cat: u64 = catalan(n as u32 - 1);
        r.conjecture(
            "candy-b-catalan",
            n,
            bs.len() as u64 == cat,
            format!("{} distinct bperm, Catalan {cat}", bs.len()),
        );
        r.conjecture(
            "candy-v-catalan",
            n,
            vs.len() as u64 == cat,
            format!("{} distinct vperm, Catalan {cat}", vs.len()),
        );
        all.push((n, union.len() as u64));
        via_b.push((n, bs.len() as u64));
        via_v.push((n, vs.len() as u64));
        agree.push((n, same));
    }
    r.series.push(Series::scalar("candy", all));
    r.series.push(Series::scalar("candy-b", via_b));
    r.series.push(Series::scalar("candy-v", via_v));
    r.series.push(Series::scalar("bperm-eq-vperm", agree));
    r
}

/// Every labeling reachable by the generalized greedy algorithm, checked
/// against `M_d`. Terms count the distinct outputs per semilength.
pub fn generalized_bperm_harness(census: &Census) -> SequenceReport {
    let mut r = SequenceReport::new("generalized-bperm", "choice-tree walk checked against brute-force M_d", true);
    let mut terms = Vec::new();
    for n in 1..=census.max_n() {
        let results: Vec<(usize, Vec<String>)> = census
            .level(n)
            .par_iter()
            .map(|(d, p)| {
                let outs = generalized_bperm_outputs(d);
                let bad = outs
                    .iter()
                    .filter(|s| p.maximizers.binary_search(s).is_err())
                    .map(|s| format!("{d}: {s}"))
                    .collect();
                (outs.len(), bad)
            })
            .collect();
        let mut bad_total = Vec::new();
        let mut count = 0u64;
        for (k, bad) in results {
            count += k as u64;
            bad_total.extend(bad);
        }
        r.conjecture("generalized-bperm-maximizes", n, bad_total.is_empty(), bad_total.join("; "));
        terms.push((n, count));
    }
    r.series.push(Series::scalar("generalized-bperm-outputs", terms));
    r
}

/// Named report for the CLI. `md-one` runs to `max_n` but only cross-checks
/// by brute force up to `brute_force_n`.
pub fn report_by_name(name: &str, max_n: usize, brute_force_n: usize, bound: usize) -> Result<Option<SequenceReport>> {
    let census = |m: usize| Census::new(m, bound);
    Ok(Some(match name {
        "pk-eq-bpk" => seq_pk_eq_bpk(max_n),
        "bd-singleton" => seq_bd_singleton(max_n),
        "md-dist" => seq_md_distribution(&census(max_n)?),
        "md-one" => seq_md_equals_one(max_n, &census(max_n.min(brute_force_n))?)?,
        "candy" => seq_candy_sizes(&census(max_n)?),
        "generalized-bperm" => generalized_bperm_harness(&census(max_n)?),
        _ => return Ok(None),
    }))
}

pub const SEQUENCE_NAMES: [&str; 6] = ["pk-eq-bpk", "bd-singleton", "md-dist", "md-one", "candy", "generalized-bperm"];
