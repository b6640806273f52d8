//! Catalog-wide searches: groups with a given central quotient, and groups
//! whose normal-centralizer lattice has breaking points.

use std::time::Instant;

use crate::error::Limits;
use crate::families;
use crate::group::{quotient, GroupTable};
use crate::iso::is_isomorphic;
use crate::lab::catalog::CatalogEntry;
use crate::lab::checks::check_open_problem;
use crate::lab::report::{CheckReport, Claim, GroupRef, Witness};
use crate::lab::run_parallel;
use crate::subgroup::center;

pub const CAPABILITY_DISCLAIMER: &str =
    "bounded search, not a proof: only the catalog groups listed were examined";

/// True if `g` is a generalized quaternion group.
pub fn is_generalized_quaternion(g: &GroupTable) -> bool {
    let n = g.order();
    n >= 8
        && n.is_power_of_two()
        && is_isomorphic(g, &families::quaternion(n).expect("power of two ≥ 8"))
}

/// Every catalog group `G` with `G/Z(G) ≅ target`.
///
/// For a generalized quaternion target the report passes only when no hit is
/// found; for any other target the hits are informational and the report
/// passes.
pub fn capability_search(
    target: &GroupTable,
    catalog: &[CatalogEntry],
    jobs: usize,
) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport {
        claim: Claim::Capability,
        group: GroupRef::of(target),
        passed: true,
        witnesses: Vec::new(),
        notes: Vec::new(),
        elapsed: Default::default(),
    };
    let outcomes = run_parallel(jobs, catalog, |entry| match &entry.group {
        Err(e) => Err(format!("{}: {e}", entry.spec)),
        Ok(g) => {
            let z = center(g);
            if g.order() != target.order() * z.len() {
                return Ok(None);
            }
            let q = quotient(g, &z).map_err(|e| format!("{}: {e}", entry.spec))?;
            Ok(is_isomorphic(&q, target).then(|| GroupRef::of(g)))
        }
    });
    let mut examined = 0;
    let mut max_order = 0;
    for (entry, outcome) in catalog.iter().zip(outcomes) {
        match outcome {
            Err(msg) => report.notes.push(format!("skipped {msg}")),
            Ok(hit) => {
                examined += 1;
                max_order = max_order.max(entry.order().unwrap_or(0));
                if let Some(g) = hit {
                    report.witnesses.push(Witness::Group {
                        role: "central-quotient-match".into(),
                        spec: g.spec,
                        order: g.order,
                    });
                }
            }
        }
    }
    let hits = report.witnesses.len();
    report.notes.insert(
        0,
        format!(
            "{CAPABILITY_DISCLAIMER} ({examined} groups, order ≤ {max_order}); {hits} hit{}",
            if hits == 1 { "" } else { "s" }
        ),
    );
    if is_generalized_quaternion(target) && hits > 0 {
        report.passed = false;
    }
    report.elapsed = start.elapsed();
    report
}

#[derive(Debug, Clone)]
pub struct Skipped {
    pub spec: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct OpenProblemResult {
    /// Groups whose normal-centralizer lattice has a breaking point, ordered
    /// by `(order, spec)`.
    pub hits: Vec<CheckReport>,
    pub skipped: Vec<Skipped>,
    pub examined: usize,
}

pub fn open_problem_search(
    catalog: &[CatalogEntry],
    limits: &Limits,
    jobs: usize,
) -> OpenProblemResult {
    let outcomes = run_parallel(jobs, catalog, |entry| match &entry.group {
        Err(e) => Err(e.to_string()),
        Ok(g) => check_open_problem(g, limits).map_err(|e| e.to_string()),
    });
    let mut result = OpenProblemResult::default();
    for (entry, outcome) in catalog.iter().zip(outcomes) {
        match outcome {
            Err(reason) => result.skipped.push(Skipped {
                spec: entry.spec.canonical(),
                reason,
            }),
            Ok(r) => {
                result.examined += 1;
                if r.witnesses
                    .iter()
                    .any(|w| matches!(w, Witness::Subgroup { .. }))
                {
                    result.hits.push(r);
                }
            }
        }
    }
    result
        .hits
        .sort_by(|a, b| (a.group.order, &a.group.spec).cmp(&(b.group.order, &b.group.spec)));
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::catalog::Catalog;
    use crate::lab::checks::breaking_point_labels;
    use crate::spec::GroupSpec;

    fn catalog(specs: &[&str], max_order: usize) -> Vec<CatalogEntry> {
        Catalog::new(
            specs.iter().map(|s| GroupSpec::parse(s).unwrap()).collect(),
            max_order,
        )
        .resolve(&Limits::default(), 1)
    }

    fn hit_specs(r: &CheckReport) -> Vec<String> {
        r.witnesses
            .iter()
            .filter_map(|w| match w {
                Witness::Group { spec, .. } => Some(spec.clone()),
                _ => None,
            })
            .collect()
    }

    #[test]
    fn dihedral_target_has_hits() {
        let cat = catalog(&["D4", "D8", "Q16", "Q8", "C8", "D6"], 64);
        let r = capability_search(&families::dihedral(4), &cat, 1);
        assert!(r.passed);
        assert_eq!(hit_specs(&r), vec!["D8", "Q16"]);
        assert!(r.notes[0].starts_with(CAPABILITY_DISCLAIMER));
    }

    #[test]
    fn quaternion_target_has_no_hits() {
        let cat = catalog(&["D4", "D8", "Q16", "Q8", "Q32", "C2 x Q8", "D16"], 64);
        let q8 = families::quaternion(8).unwrap();
        let r = capability_search(&q8, &cat, 2);
        assert!(r.passed);
        assert!(hit_specs(&r).is_empty());
    }

    #[test]
    fn trivial_target_hits_every_abelian_group() {
        let cat = catalog(&["C2", "C6", "E2^3", "C4 x C2", "S3"], 64);
        let r = capability_search(&families::cyclic(1), &cat, 1);
        assert_eq!(hit_specs(&r), vec!["C2", "C6", "C4 x C2", "E2^3"]);
    }

    #[test]
    fn capability_hits_are_monotone() {
        let small = catalog(&["D8", "C4"], 64);
        let large = catalog(&["D8", "C4", "Q16", "D4 x C3"], 64);
        let target = families::dihedral(4);
        let a = hit_specs(&capability_search(&target, &small, 1));
        let b = hit_specs(&capability_search(&target, &large, 1));
        assert!(a.iter().all(|h| b.contains(h)));
    }

    #[test]
    fn open_problem_reports_s3_and_s4() {
        let cat = catalog(&["S4", "S3", "C4", "E2^2"], 64);
        let res = open_problem_search(&cat, &Limits::default(), 1);
        assert_eq!(res.examined, 4);
        let got: Vec<(String, Vec<String>)> = res
            .hits
            .iter()
            .map(|r| (r.group.spec.clone(), breaking_point_labels(r)))
            .collect();
        assert_eq!(
            got,
            vec![
                ("S3".to_string(), vec!["A3".to_string()]),
                ("S4".to_string(), vec!["V4".to_string()])
            ]
        );
        let abelian = catalog(&["C2", "C12", "E3^2"], 64);
        assert!(open_problem_search(&abelian, &Limits::default(), 1)
            .hits
            .is_empty());
    }

    #[test]
    fn open_problem_skips_over_cap() {
        let cat = catalog(&["S5"], 200);
        let res = open_problem_search(
            &cat,
            &Limits {
                subgroup_cap: 64,
                ..Limits::default()
            },
            1,
        );
        assert_eq!(res.skipped.len(), 1);
        assert!(res.hits.is_empty());
    }
}
