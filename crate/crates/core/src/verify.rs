//! Exhaustive verification suites.
//!
//! Checks that need every labeling of a path run up to `exhaustive_n`;
//! checks that only need the paths themselves run up to `max_n`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::canon::{des, DescentCounter};
use crate::counting::factorial;
use crate::descent::{canon_poly_all, eulerian, eulerian_tilde, fixed_sigma_poly, narayana, tilde_poly};
use crate::dyck::DyckPath;
use crate::error::Result;
use crate::maximizers::{
    b_set, bperm, bperm_labeling, des_set_of_max, max_descents_formula, max_poset, peak_sets_of_b, valley_walk, vperm,
};
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::sequences::{
    bounce_peaks_are_peaks, generalized_bperm_harness, seq_bd_singleton, seq_candy_sizes, seq_md_distribution,
    seq_md_equals_one, seq_pk_eq_bpk, Census, ConjectureViolation, SequenceReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Symmetry,
    Degree,
    InternalZeros,
    MinDes,
    Partition,
    DesSets,
    Corollaries,
    Identities,
    Sequences,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Symmetry,
        Suite::Degree,
        Suite::InternalZeros,
        Suite::MinDes,
        Suite::Partition,
        Suite::DesSets,
        Suite::Corollaries,
        Suite::Identities,
        Suite::Sequences,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Symmetry => "symmetry",
            Suite::Degree => "degree",
            Suite::InternalZeros => "internal-zeros",
            Suite::MinDes => "mindes",
            Suite::Partition => "partition",
            Suite::DesSets => "dessets",
            Suite::Corollaries => "corollaries",
            Suite::Identities => "identities",
            Suite::Sequences => "sequences",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Largest semilength for checks that only walk paths.
    pub max_n: usize,
    /// Largest semilength for checks that sweep all of `S_n`.
    pub exhaustive_n: usize,
    /// Semilength cap for the identity suite.
    pub identity_n: usize,
    pub brute_force_bound: usize,
}

impl VerifyConfig {
    pub fn new(max_n: usize) -> Self {
        VerifyConfig { max_n, exhaustive_n: 7, identity_n: 6, brute_force_bound: crate::DEFAULT_BRUTE_FORCE_BOUND }
    }

    fn exhaustive(&self) -> usize {
        self.exhaustive_n.min(self.max_n).min(self.brute_force_bound)
    }

    fn identities(&self) -> usize {
        self.identity_n.min(self.exhaustive())
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteResult {
    pub suite: Option<Suite>,
    pub checks: u64,
    pub failures: Vec<String>,
    pub violations: Vec<ConjectureViolation>,
}

impl SuiteResult {
    fn new(suite: Suite) -> Self {
        SuiteResult { suite: Some(suite), ..Default::default() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, report: SequenceReport) {
        for c in report.checks {
            self.record(c.passed, || format!("{} {}: {}", report.name, c.name, c.detail));
        }
        self.violations.extend(report.violations);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs suites against one lazily built census.
pub struct Verifier {
    config: VerifyConfig,
    census: OnceLock<Census>,
}

impl Verifier {
    pub fn new(config: VerifyConfig) -> Self {
        Verifier { config, census: OnceLock::new() }
    }

    pub fn config(&self) -> &VerifyConfig {
        &self.config
    }

    /// Profiles for `1..=exhaustive_n`.
    pub fn census(&self) -> &Census {
        self.census.get_or_init(|| {
            Census::new(self.config.exhaustive(), self.config.brute_force_bound)
                .expect("exhaustive_n is within the bound")
        })
    }

    pub fn run(&self, suite: Suite) -> Result<SuiteResult> {
        match suite {
            Suite::Symmetry => Ok(self.symmetry()),
            Suite::Degree => Ok(self.degree()),
            Suite::InternalZeros => Ok(self.internal_zeros()),
            Suite::MinDes => Ok(self.min_des()),
            Suite::Partition => self.partition(),
            Suite::DesSets => self.des_sets(),
            Suite::Corollaries => self.corollaries(),
            Suite::Identities => self.identities(),
            Suite::Sequences => self.sequences(),
        }
    }

    fn each_profile(
        &self,
        suite: Suite,
        mut f: impl FnMut(&mut SuiteResult, usize, &DyckPath, &Polynomial<u64>),
    ) -> SuiteResult {
        let mut r = SuiteResult::new(suite);
        let census = self.census();
        for n in 1..=census.max_n() {
            for (d, prof) in census.level(n) {
                f(&mut r, n, d, &prof.poly())
            }
        }
        r
    }

    fn symmetry(&self) -> SuiteResult {
        self.each_profile(Suite::Symmetry, |r, n, d, c| {
            let center = 2 * n - 1 - d.low_peaks();
            r.record(c.is_palindromic(center), || format!("{d}: C_d = {c} not palindromic about {center}"));
        })
    }

    fn degree(&self) -> SuiteResult {
        let mut r = self.each_profile(Suite::Degree, |r, n, d, c| {
            let want = max_descents_formula(d);
            r.record(c.degree().ok() == Some(want), || format!("{d}: degree of {c} is not {want}"));
            let total: u64 = factorial(n as u32);
            r.record(c.coefficient_sum() == total, || format!("{d}: coefficient sum is not {total}"));
        });
        for (_, d) in paths_upto(self.config.max_n) {
            let want = max_descents_formula(&d);
            let b = des(&d, &bperm(&d)).expect("same semilength");
            let v = des(&d, &vperm(&d)).expect("same semilength");
            r.record(b == want && v == want, || format!("{d}: des of bperm {b}, vperm {v}, want {want}"));
        }
        r
    }

    fn internal_zeros(&self) -> SuiteResult {
        self.each_profile(Suite::InternalZeros, |r, n, d, c| {
            r.record(!c.has_internal_zero(), || format!("{d}: C_d = {c} has an internal zero"));
            let constant = c.coefficient(0) != 0;
            let alternating = *d == DyckPath::staircase(n);
            r.record(constant == alternating, || format!("{d}: constant term {}", c.coefficient(0)));
        })
    }

    fn min_des(&self) -> SuiteResult {
        self.each_profile(Suite::MinDes, |r, _, d, c| {
            let want = d.bpk() - d.low_peaks();
            r.record(c.min_degree().ok() == Some(want), || format!("{d}: min degree of {c} is not {want}"));
        })
    }

    fn partition(&self) -> Result<SuiteResult> {
        let mut r = SuiteResult::new(Suite::Partition);
        let census = self.census();
        for n in 1..=census.max_n() {
            for (d, prof) in census.level(n) {
                let bs = b_set(d);
                let mut union = BTreeSet::new();
                let mut sizes = 0;
                for b in &bs {
                    let ext = max_poset(d, b)?.linear_extensions();
                    sizes += ext.len();
                    union.extend(ext);
                }
                let m: BTreeSet<Permutation> = prof.maximizers.iter().cloned().collect();
                r.record(union == m && sizes == m.len(), || format!("{d}: blocks do not partition M_d"));
                r.record(m.len() >= bs.len(), || format!("{d}: |M_d| = {} < |B_d| = {}", m.len(), bs.len()));
            }
        }
        for (_, d) in paths_upto(self.config.max_n) {
            for b in b_set(&d) {
                let p = max_poset(&d, &b)?;
                r.record(!p.linear_extensions().is_empty(), || format!("{d}, {b}: poset has no linear extension"));
            }
            let chain = max_poset(&d, &d.bounce())?;
            let (b, v) = (bperm(&d), vperm(&d));
            r.record(chain.is_linear_extension(&b) && chain.is_linear_extension(&v), || {
                format!("{d}: bperm {b} or vperm {v} outside the bounce block")
            });
        }
        let fig = max_poset(&"UUDUDUDUDD".parse()?, &"UUDDUDUUDD".parse()?)?;
        let ext: Vec<String> = fig.linear_extensions().iter().map(ToString::to_string).collect();
        r.record(ext == ["41352", "42351", "51342", "52341"], || format!("poset example gives {ext:?}"));
        let d: DyckPath = "UUDUDDUUDD".parse()?;
        let blocks: Vec<Vec<String>> = b_set(&d)
            .iter()
            .map(|b| max_poset(&d, b).map(|p| p.linear_extensions().iter().map(ToString::to_string).collect()))
            .collect::<Result<_>>()?;
        let want = [vec!["54321"], vec!["51432", "52431", "53421"], vec!["45321"]];
        r.record(blocks == want, || format!("three-block example gives {blocks:?}"));
        Ok(r)
    }

    fn des_sets(&self) -> Result<SuiteResult> {
        let mut r = SuiteResult::new(Suite::DesSets);
        let census = self.census();
        for n in 1..=census.max_n() {
            for (d, prof) in census.level(n) {
                let counter = DescentCounter::new(d);
                let left: BTreeSet<Vec<usize>> = prof
                    .maximizers
                    .iter()
                    .map(|s| crate::canon::mask_to_positions(counter.mask(s.entries())))
                    .collect();
                let right = peak_sets_of_b(d);
                r.record(left == right, || format!("{d}: descent sets of M_d differ from those of B_d"));
                let bs = b_set(d).len();
                r.record(left.len() == bs, || format!("{d}: {} descent sets, |B_d| = {bs}", left.len()));
            }
        }
        // the public entry point agrees with the census on a small path
        let d: DyckPath = "UUDUUDDUDUDD".parse()?;
        r.record(des_set_of_max(&d, self.config.brute_force_bound)? == peak_sets_of_b(&d), || format!("{d}"));
        Ok(r)
    }

    fn corollaries(&self) -> Result<SuiteResult> {
        let mut r = SuiteResult::new(Suite::Corollaries);
        let census = self.census();
        for n in 1..=census.max_n() {
            let delta = Permutation::decreasing(n);
            for (d, prof) in census.level(n) {
                let has_delta = prof.maximizers.binary_search(&delta).is_ok();
                r.record(has_delta == (d.pk() == d.bpk()), || format!("{d}: delta in M_d is {has_delta}"));
                let only_delta = prof.maximizers == [delta.clone()];
                r.record(only_delta == d.is_bounce(), || format!("{d}: M_d = {{delta}} is {only_delta}"));
                let lead = prof.histogram[prof.max_descents];
                r.record(lead == prof.maximizers.len() as u64, || format!("{d}: leading coefficient {lead}"));
            }
        }
        for (n, d) in paths_upto(self.config.max_n) {
            let b = d.bounce();
            r.record(b.is_under(&d)?, || format!("{d}: bounce not under d"));
            r.record(b.bounce() == b, || format!("{d}: bounce not idempotent"));
            r.record(d.bcomp().total() as usize == n, || format!("{d}: bcomp does not sum to n"));
            r.record(d.bounce_factors().boundaries().len() == d.bpk(), || format!("{d}: bounce cut count"));
            r.record((b_set(&d).len() == 1) == bounce_peaks_are_peaks(&d), || format!("{d}: |B_d| = 1 criterion"));

            let labeling = bperm_labeling(&d);
            let decreasing = d
                .bounce_factors()
                .ranges()
                .iter()
                .all(|range| labeling.labels()[range.clone()].windows(2).all(|w| w[0] > w[1]));
            r.record(decreasing, || format!("{d}: bperm labels not decreasing within a bounce factor"));

            let trace = valley_walk(&b, &d)?;
            let start = trace[0].descent_set();
            let mut ok = trace.iter().all(|c| c.descent_set() == start);
            for w in trace.windows(2) {
                ok &= w[0].path() != w[1].path() && w[0].path().is_under(w[1].path())?;
            }
            r.record(ok, || format!("{d}: valley walk not monotone with a fixed descent set"));
        }
        Ok(r)
    }

    fn identities(&self) -> Result<SuiteResult> {
        let mut r = SuiteResult::new(Suite::Identities);
        let bound = self.config.brute_force_bound;
        for n in 1..=self.config.identities() {
            let nar = narayana::<BigUint>(n);
            for sigma in Permutation::all(n) {
                let lhs = fixed_sigma_poly::<BigUint>(&sigma, bound)?;
                let rhs = nar.shift(sigma.descents());
                r.record(lhs == rhs, || format!("sigma = {sigma}: {lhs} vs {rhs}"));
            }
            let all = canon_poly_all::<BigUint>(n, bound)?;
            let product = &eulerian::<BigUint>(n) * &nar;
            r.record(all == product, || format!("n={n}: sum of C_d is {all}, not {product}"));
            let census = self.census();
            let level = census.level(n);
            let stair = level.iter().find(|(d, _)| *d == DyckPath::staircase(n)).expect("staircase present");
            let c: Polynomial<BigUint> = stair.1.poly();
            r.record(c == eulerian(n), || format!("n={n}: staircase gives {c}"));
            if n >= 2 {
                let pyr = level.iter().find(|(d, _)| *d == DyckPath::pyramid(n)).expect("pyramid present");
                let c: Polynomial<BigUint> = pyr.1.poly();
                let want = eulerian_tilde::<BigUint>(n).at_square_and_t();
                r.record(c == want, || format!("n={n}: pyramid gives {c}, not {want}"));
            }
            for (d, prof) in level {
                let t: Polynomial<BigUint> = tilde_poly(d, bound)?;
                let c: Polynomial<BigUint> = prof.poly();
                r.record(t.support() == c.support(), || format!("{d}: supports differ"));
                let deg = t.degree().ok();
                r.record(deg == Some(prof.max_descents), || format!("{d}: tilde degree {deg:?}"));
            }
        }
        Ok(r)
    }

    fn sequences(&self) -> Result<SuiteResult> {
        let mut r = SuiteResult::new(Suite::Sequences);
        let census = self.census();
        let max_n = self.config.max_n;
        r.absorb(seq_pk_eq_bpk(max_n));
        r.absorb(seq_bd_singleton(max_n));
        r.absorb(seq_md_distribution(census));
        r.absorb(seq_md_equals_one(max_n, census)?);
        r.absorb(seq_candy_sizes(census));
        r.absorb(generalized_bperm_harness(census));
        Ok(r)
    }
}

fn paths_upto(max_n: usize) -> Vec<(usize, DyckPath)> {
    (1..=max_n).flat_map(|n| DyckPath::enumerate(n).map(move |d| (n, d))).collect()
}

/// Runs `suites` in order.
pub fn run_suites(config: VerifyConfig, suites: &[Suite]) -> Result<Vec<SuiteResult>> {
    let v = Verifier::new(config);
    suites.iter().map(|&s| v.run(s)).collect()
}
