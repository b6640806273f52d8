//! Runs every checker over a catalog and aggregates the results.

use std::time::{Duration, Instant};

use crate::error::{Error, Limits};
use crate::lab::catalog::{Catalog, CatalogEntry};
use crate::lab::checks::{
    check_atoms_bound, check_closure_and_double_centralizer, check_corollary2, check_corollary3,
    check_open_problem, check_theorem1, check_union_argument,
};
use crate::lab::report::{CheckReport, Claim, Witness};
use crate::lab::run_parallel;
use crate::lab::search::{capability_search, is_generalized_quaternion};
use crate::subgroup::center;

#[derive(Debug, Clone)]
pub struct GroupResult {
    pub spec: String,
    pub order: Option<usize>,
    pub abelian: Option<bool>,
    pub center_order: Option<usize>,
    pub checks: Vec<CheckReport>,
    /// Checks that were not run, with the reason.
    pub skipped: Vec<(Claim, String)>,
    /// Set when the group could not be built.
    pub error: Option<Error>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub spec: String,
    pub claim: String,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub groups: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errors: usize,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub groups: Vec<GroupResult>,
    /// Capability searches for every generalized quaternion group in the catalog.
    pub capability: Vec<CheckReport>,
    /// `(spec, breaking-point labels)` for every group whose normal-centralizer
    /// lattice has a breaking point.
    pub open_problem: Vec<(String, Vec<String>)>,
    /// Failures of published claims, plus violations of the implication
    /// "no decomposition ⟹ no breaking point".
    pub counterexamples: Vec<Counterexample>,
    pub summary: Summary,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn run_group(entry: &CatalogEntry, limits: &Limits) -> GroupResult {
    let mut res = GroupResult {
        spec: entry.spec.canonical(),
        order: None,
        abelian: None,
        center_order: None,
        checks: Vec::new(),
        skipped: Vec::new(),
        error: None,
    };
    let g = match &entry.group {
        Ok(g) => g,
        Err(e) => {
            res.error = Some(e.clone());
            return res;
        }
    };
    let abelian = g.is_abelian();
    res.order = Some(g.order());
    res.abelian = Some(abelian);
    res.center_order = Some(center(g).len());
    res.checks.push(check_theorem1(g));
    res.checks.push(check_corollary2(g));
    res.checks.push(check_corollary3(g));
    res.checks.push(check_closure_and_double_centralizer(g));
    match check_union_argument(g, limits) {
        Ok(r) => res.checks.push(r),
        Err(e) => res.skipped.push((Claim::UnionArgument, e.to_string())),
    }
    if abelian {
        res.skipped
            .push((Claim::AtomsBound, Error::GroupIsAbelian.to_string()));
    } else {
        res.checks
            .push(check_atoms_bound(g).expect("nonabelian group"));
    }
    match check_open_problem(g, limits) {
        Ok(r) => res.checks.push(r),
        Err(e) => res.skipped.push((Claim::OpenProblem, e.to_string())),
    }
    res
}

pub fn run_suite(catalog: &Catalog, limits: &Limits, jobs: usize) -> SuiteReport {
    let start = Instant::now();
    let entries = catalog.resolve(limits, jobs);
    let mut report = run_suite_on(&entries, limits, jobs);
    report.elapsed = start.elapsed();
    report
}

pub fn run_suite_on(entries: &[CatalogEntry], limits: &Limits, jobs: usize) -> SuiteReport {
    let start = Instant::now();
    let groups: Vec<GroupResult> = run_parallel(jobs, entries, |e| run_group(e, limits));

    let mut capability = Vec::new();
    for entry in entries {
        if let Ok(g) = &entry.group {
            if is_generalized_quaternion(g) {
                capability.push(capability_search(g, entries, jobs));
            }
        }
    }

    let mut summary = Summary {
        groups: groups.len(),
        ..Summary::default()
    };
    let mut counterexamples = Vec::new();
    let mut open_problem = Vec::new();
    for res in &groups {
        if res.error.is_some() {
            summary.errors += 1;
        }
        summary.skipped += res.skipped.len();
        for c in &res.checks {
            summary.checks += 1;
            if c.passed {
                summary.passed += 1;
            } else {
                summary.failed += 1;
            }
            if c.is_counterexample() {
                counterexamples.push(Counterexample {
                    spec: res.spec.clone(),
                    claim: c.claim.to_string(),
                    witnesses: c.witnesses.clone(),
                });
            }
            if c.claim == Claim::OpenProblem {
                let bps = crate::lab::checks::breaking_point_labels(c);
                if !bps.is_empty() {
                    open_problem.push((res.spec.clone(), bps));
                }
            }
        }
        let passed = |claim: Claim| {
            res.checks
                .iter()
                .find(|c| c.claim == claim)
                .map(|c| c.passed)
        };
        if passed(Claim::Theorem1) == Some(true) && passed(Claim::Corollary2) == Some(false) {
            counterexamples.push(Counterexample {
                spec: res.spec.clone(),
                claim: "theorem1-implies-corollary2".into(),
                witnesses: vec![Witness::note(
                    "no interval decomposition was found, yet a breaking point exists",
                )],
            });
        }
    }
    for c in &capability {
        summary.checks += 1;
        if c.passed {
            summary.passed += 1;
        } else {
            summary.failed += 1;
            counterexamples.push(Counterexample {
                spec: c.group.spec.clone(),
                claim: c.claim.to_string(),
                witnesses: c.witnesses.clone(),
            });
        }
    }

    SuiteReport {
        groups,
        capability,
        open_problem,
        counterexamples,
        summary,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::GroupSpec;

    #[test]
    fn empty_catalog() {
        let r = run_suite(&Catalog::new(vec![], 64), &Limits::default(), 1);
        assert!(r.groups.is_empty());
        assert_eq!(r.summary, Summary::default());
        assert!(r.all_passed());
    }

    #[test]
    fn s3_only() {
        let cat = Catalog::new(vec![GroupSpec::parse("S3").unwrap()], 64);
        let r = run_suite(&cat, &Limits::default(), 1);
        assert_eq!(r.groups.len(), 1);
        assert!(r.all_passed());
        assert_eq!(r.summary.failed, 0);
        assert_eq!(r.summary.checks, 7);
        assert_eq!(
            r.open_problem,
            vec![("S3".to_string(), vec!["A3".to_string()])]
        );
    }

    #[test]
    fn quaternion_entries_trigger_capability_search() {
        let cat = Catalog::new(
            ["Q8", "D8", "Q16"]
                .iter()
                .map(|s| GroupSpec::parse(s).unwrap())
                .collect(),
            64,
        );
        let r = run_suite(&cat, &Limits::default(), 2);
        assert_eq!(r.capability.len(), 2);
        assert!(r.capability.iter().all(|c| c.passed));
        assert!(r.all_passed());
    }

    #[test]
    fn unbuildable_entries_are_errors_not_failures() {
        let cat = Catalog::new(
            vec![GroupSpec::parse("file:/nonexistent.json").unwrap()],
            64,
        );
        let r = run_suite(&cat, &Limits::default(), 1);
        assert_eq!(r.summary.errors, 1);
        assert!(r.all_passed());
    }
}
