//! Verification suites run in parallel over independent cases.
//!
//! Every suite collects per-case outcomes in case order, so reports are
//! identical whatever the thread count.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use lrq_core::ktableaux::statistic_sum;
use lrq_core::lr::{admissible_keys, check_cross, check_unimodal, SkewTable, UnimodalOutcome};
use lrq_core::partitions::{partitions_of, partitions_up_to, subpartitions};
use lrq_core::symfunc::{
    g_in_h_expansion, macdonald_inner, rho_homomorphism, skew_schur, verify_commutation_with, Convention,
};
use lrq_core::{Basis, Partition, SkewShape, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Cross,
    Unimodal,
    /// `(s_{λ/μ}, h_ν)` against k-tableau sums; `lemma24` on the command line
    HPairing,
    Commutation,
    Gm,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::Cross, Check::Unimodal, Check::HPairing, Check::Commutation, Check::Gm];

    pub fn name(self) -> &'static str {
        match self {
            Check::Cross => "cross",
            Check::Unimodal => "unimodal",
            Check::HPairing => "lemma24",
            Check::Commutation => "commutation",
            Check::Gm => "gm",
        }
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}; expected one of cross, unimodal, lemma24, commutation, gm"))
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn collect(name: &str, start: Instant, outcomes: Vec<Option<String>>) -> Self {
        let failures = outcomes.iter().filter(|o| o.is_some()).count();
        SuiteReport {
            name: name.to_string(),
            cases: outcomes.len(),
            failures,
            first_failure: outcomes.into_iter().flatten().next(),
            elapsed: start.elapsed(),
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{}: {verdict} {} cases, {} failures, {:.2}s",
            self.name,
            self.cases,
            self.failures,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(first) = &self.first_failure {
            write!(f, "; first counterexample: {first}")?;
        }
        Ok(())
    }
}

/// Runs `check` at the given scale. The commutation check yields two
/// reports, one per convention.
pub fn run(check: Check, max_size: usize, k_max: usize) -> Vec<SuiteReport> {
    match check {
        Check::Cross => vec![cross(max_size, k_max)],
        Check::Unimodal => vec![unimodal(max_size, k_max)],
        Check::HPairing => vec![h_pairing(max_size, k_max)],
        Check::Commutation => vec![
            commutation(Convention::Hermitian, "commutation", max_size, k_max),
            commutation(Convention::Macdonald, "commutation (Macdonald form)", max_size, k_max),
        ],
        Check::Gm => vec![gm(max_size, k_max)],
    }
}

pub fn cross(max_size: usize, k_max: usize) -> SuiteReport {
    let start = Instant::now();
    let table = SkewTable::build(max_size);
    let keys = admissible_keys(max_size, k_max);
    let outcomes = keys
        .par_iter()
        .map(|key| {
            check_cross(&table, key).map(|m| {
                let oracle = match m.oracle {
                    Ok(c) => c.to_string(),
                    Err(e) => e.to_string(),
                };
                format!("{}: tableau {} vs pairing {}", m.key, m.tableau, oracle)
            })
        })
        .collect();
    SuiteReport::collect("cross", start, outcomes)
}

pub fn unimodal(max_size: usize, k_max: usize) -> SuiteReport {
    let start = Instant::now();
    let keys = admissible_keys(max_size, k_max);
    let outcomes = keys
        .par_iter()
        .map(|key| match check_unimodal(key) {
            UnimodalOutcome::Fail(r) => Some(format!("{}: C = {}", r.key, r.big_c)),
            _ => None,
        })
        .collect();
    SuiteReport::collect("unimodal", start, outcomes)
}

/// `(s_{λ/μ}, h_ν)_{t^k,t}` against the unrestricted k-tableau sum.
pub fn h_pairing(max_size: usize, k_max: usize) -> SuiteReport {
    let start = Instant::now();
    let mut cases = Vec::new();
    for k in 1..=k_max {
        for lambda in partitions_up_to(max_size) {
            for mu in subpartitions(&lambda) {
                let shape = SkewShape::new(lambda.clone(), mu).expect("subpartition");
                for nu in partitions_of(shape.size(), None) {
                    cases.push((k, shape.clone(), nu));
                }
            }
        }
    }
    let outcomes = cases
        .par_iter()
        .map(|(k, shape, nu)| {
            let pairing = macdonald_inner(&skew_schur(shape), &SymFunc::complete(nu.clone()), *k);
            let count = statistic_sum(shape, nu, &Partition::empty(), *k, false)
                .expect("valid query")
                .to_rational();
            (pairing != count).then(|| format!("k={k} {shape} h[{nu}]: pairing {pairing} vs tableaux {count}"))
        })
        .collect();
    SuiteReport::collect("lemma24", start, outcomes)
}

/// Raising/lowering commutation for `n, m ≤ min(3, max_size)` on test
/// functions of degree at most `max_size`.
pub fn commutation(convention: Convention, name: &str, max_size: usize, k_max: usize) -> SuiteReport {
    let start = Instant::now();
    let top = max_size.min(3);
    let cases: Vec<(usize, usize, usize)> = (1..=k_max)
        .flat_map(|k| (0..=top).flat_map(move |n| (0..=top).map(move |m| (k, n, m))))
        .collect();
    let outcomes = cases
        .par_iter()
        .map(|&(k, n, m)| {
            (!verify_commutation_with(convention, n, m, k, max_size)).then(|| format!("n={n} m={m} k={k}"))
        })
        .collect();
    SuiteReport::collect(name, start, outcomes)
}

/// Closed form of `ρ(h_m)` in the complete basis against the homomorphism.
pub fn gm(max_size: usize, k_max: usize) -> SuiteReport {
    let start = Instant::now();
    let cases: Vec<(usize, usize)> = (1..=k_max).flat_map(|k| (0..=max_size).map(move |m| (k, m))).collect();
    let outcomes = cases
        .par_iter()
        .map(|&(k, m)| {
            let row = Partition::from_unsorted(vec![m]);
            let closed = g_in_h_expansion(m, k);
            let via_rho = rho_homomorphism(&SymFunc::complete(row), k).to_basis(Basis::H);
            (closed != via_rho).then(|| format!("m={m} k={k}: {closed} vs {via_rho}"))
        })
        .collect();
    SuiteReport::collect("gm", start, outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_scale_passes() {
        for check in Check::ALL {
            for report in run(check, 3, 2) {
                assert!(report.passed(), "{report}");
            }
        }
    }

    #[test]
    fn check_names_parse() {
        for check in Check::ALL {
            assert_eq!(check.name().parse::<Check>().unwrap(), check);
        }
        assert!("everything".parse::<Check>().is_err());
    }
}
