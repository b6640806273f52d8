//! Checkers for the published statements about centralizer lattices.
//!
//! Each checker runs the full search and reports what it finds; none of them
//! assumes the statement it checks.

use std::collections::HashSet;
use std::time::Instant;

use crate::bitset::SubgroupSet;
use crate::error::{Error, Limits, Result};
use crate::group::GroupTable;
use crate::lab::report::{CheckReport, Claim, Witness};
use crate::lattice::BoundedLattice;
use crate::subgroup::{
    all_subgroups, center, centralizer, centralizer_lattice_elements, element_centralizer,
    normal_centralizer_lattice_elements,
};

pub fn centralizer_lattice(g: &GroupTable) -> BoundedLattice {
    BoundedLattice::build(centralizer_lattice_elements(g))
        .expect("centralizers form a bounded meet-closed family")
}

pub fn normal_centralizer_lattice(g: &GroupTable, limits: &Limits) -> Result<BoundedLattice> {
    BoundedLattice::build(normal_centralizer_lattice_elements(g, limits)?)
}

pub fn subgroup_lattice(g: &GroupTable, limits: &Limits) -> Result<BoundedLattice> {
    BoundedLattice::build(all_subgroups(g, limits)?)
}

fn timed(mut f: impl FnMut() -> CheckReport) -> CheckReport {
    let start = Instant::now();
    let mut r = f();
    r.elapsed = start.elapsed();
    r
}

/// No pair of proper centralizers `M, N` with `𝔠(G) = [Z(G), M] ∪ [N, G]`.
pub fn check_theorem1(g: &GroupTable) -> CheckReport {
    timed(|| {
        let mut r = CheckReport::new(Claim::Theorem1, g);
        let lat = centralizer_lattice(g);
        r.witnesses
            .push(Witness::metric("centralizer_lattice_size", lat.len()));
        if lat.len() == 1 {
            r.notes
                .push("abelian group: the centralizer lattice is a single node".into());
        }
        for (m, n) in lat.interval_decompositions() {
            r.fail(Witness::pair("decomposition", g, lat.node(m), lat.node(n)));
        }
        r
    })
}

/// The centralizer lattice has no breaking point.
pub fn check_corollary2(g: &GroupTable) -> CheckReport {
    timed(|| {
        let mut r = CheckReport::new(Claim::Corollary2, g);
        let lat = centralizer_lattice(g);
        r.witnesses
            .push(Witness::metric("centralizer_lattice_size", lat.len()));
        for h in lat.breaking_points() {
            r.fail(Witness::subgroup("breaking-point", g, lat.node(h)));
        }
        r
    })
}

/// `𝔠(G)` is a chain iff `G` is abelian, and `|𝔠(G)| ≠ 2`.
pub fn check_corollary3(g: &GroupTable) -> CheckReport {
    timed(|| {
        let mut r = CheckReport::new(Claim::Corollary3, g);
        let lat = centralizer_lattice(g);
        let chain = lat.chain_classification();
        let abelian = g.is_abelian();
        r.witnesses
            .push(Witness::metric("centralizer_lattice_size", lat.len()));
        if let Some(length) = chain.length {
            r.witnesses.push(Witness::metric("chain_length", length));
        }
        if chain.is_chain != abelian {
            r.fail(Witness::note(format!(
                "centralizer lattice is {}a chain but the group is {}abelian",
                if chain.is_chain { "" } else { "not " },
                if abelian { "" } else { "non" },
            )));
        }
        if lat.len() == 2 {
            r.fail(Witness::note("centralizer lattice is a chain of length 1"));
        }
        r
    })
}

/// Every member of `𝔠(G)` and every pairwise intersection of members is a
/// centralizer (`S = C(C(S))`), and `x ∈ C(C(x))` for every element.
pub fn check_closure_and_double_centralizer(g: &GroupTable) -> CheckReport {
    timed(|| {
        let mut r = CheckReport::new(Claim::Closure, g);
        let members = centralizer_lattice_elements(g);
        let listed: HashSet<&SubgroupSet> = members.iter().collect();
        let is_centralizer = |s: &SubgroupSet| centralizer(g, &centralizer(g, s)) == *s;
        let mut pairs = 0;
        for (i, a) in members.iter().enumerate() {
            if !is_centralizer(a) {
                r.fail(Witness::subgroup("listed-non-centralizer", g, a));
            }
            for b in &members[..i] {
                pairs += 1;
                let m = a.intersection(b);
                if !listed.contains(&m) || !is_centralizer(&m) {
                    r.fail(Witness::pair("intersection-not-centralizer", g, a, b));
                }
            }
        }
        for x in g.elements() {
            let cc = centralizer(g, &element_centralizer(g, x));
            if !cc.contains(x) {
                r.fail(Witness::Element {
                    role: "x-not-in-C(C(x))".into(),
                    element: g.element_name(x),
                });
            }
        }
        r.witnesses
            .push(Witness::metric("intersections_checked", pairs));
        r
    })
}

/// No two proper subgroups cover the group.
pub fn check_union_argument(g: &GroupTable, limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let subs = all_subgroups(g, limits)?;
    let mut r = CheckReport::new(Claim::UnionArgument, g);
    let proper: Vec<&SubgroupSet> = subs.iter().filter(|h| h.len() < g.order()).collect();
    let mut max_union = 0;
    let mut first_cover = None;
    for (i, a) in proper.iter().enumerate() {
        for b in &proper[i..] {
            let u = a.union_len(b);
            max_union = max_union.max(u);
            if u == g.order() && first_cover.is_none() {
                first_cover = Some((*a, *b));
            }
        }
    }
    r.witnesses
        .push(Witness::metric("proper_subgroups", proper.len()));
    r.witnesses
        .push(Witness::metric("max_union_size", max_union));
    if let Some((a, b)) = first_cover {
        r.fail(Witness::pair("covering-pair", g, a, b));
    }
    r.elapsed = start.elapsed();
    Ok(r)
}

/// A nonabelian group has at least three atoms in `𝔠(G)`, and they meet in `Z(G)`.
pub fn check_atoms_bound(g: &GroupTable) -> Result<CheckReport> {
    if g.is_abelian() {
        return Err(Error::GroupIsAbelian);
    }
    Ok(timed(|| {
        let mut r = CheckReport::new(Claim::AtomsBound, g);
        let lat = centralizer_lattice(g);
        let atoms = lat.atoms();
        r.witnesses.push(Witness::metric("k", atoms.len()));
        for &a in &atoms {
            r.witnesses
                .push(Witness::subgroup("minimal-centralizer", g, lat.node(a)));
        }
        if atoms.len() < 3 {
            r.fail(Witness::note(format!(
                "only {} minimal centralizers",
                atoms.len()
            )));
        }
        let mut meet = SubgroupSet::full(g.order());
        for &a in &atoms {
            meet.intersect_with(lat.node(a));
        }
        let z = center(g);
        if meet != z {
            r.fail(Witness::subgroup("atom-intersection", g, &meet));
        }
        r
    }))
}

/// Breaking points of `𝔠′(G)`. Informational: the report always passes.
pub fn check_open_problem(g: &GroupTable, limits: &Limits) -> Result<CheckReport> {
    let start = Instant::now();
    let lat = normal_centralizer_lattice(g, limits)?;
    let mut r = CheckReport::new(Claim::OpenProblem, g);
    r.witnesses.push(Witness::metric(
        "normal_centralizer_lattice_size",
        lat.len(),
    ));
    for h in lat.breaking_points() {
        r.witnesses
            .push(Witness::subgroup("breaking-point", g, lat.node(h)));
    }
    r.elapsed = start.elapsed();
    Ok(r)
}

/// Breaking points listed in an open-problem report.
pub fn breaking_point_labels(r: &CheckReport) -> Vec<String> {
    r.witnesses
        .iter()
        .filter_map(|w| match w {
            Witness::Subgroup { role, subgroup } if role == "breaking-point" => {
                Some(subgroup.label.clone())
            }
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::group::direct_product;

    fn l() -> Limits {
        Limits::default()
    }

    fn metric(r: &CheckReport, name: &str) -> usize {
        r.witnesses
            .iter()
            .find_map(|w| match w {
                Witness::Metric { name: n, value } if n == name => Some(*value),
                _ => None,
            })
            .unwrap()
    }

    #[test]
    fn theorem1_examples() {
        for g in [
            symmetric(3, &l()).unwrap(),
            quaternion(8).unwrap(),
            cyclic(6),
        ] {
            let r = check_theorem1(&g);
            assert!(r.passed, "{}", g.name());
        }
        let r = check_theorem1(&cyclic(6));
        assert_eq!(metric(&r, "centralizer_lattice_size"), 1);
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn corollary2_examples() {
        for g in [dihedral(4), symmetric(4, &l()).unwrap(), cyclic(1)] {
            assert!(check_corollary2(&g).passed, "{}", g.name());
        }
    }

    #[test]
    fn corollary3_examples() {
        let r = check_corollary3(&cyclic(12));
        assert!(r.passed);
        assert_eq!(metric(&r, "chain_length"), 0);
        let r = check_corollary3(&symmetric(3, &l()).unwrap());
        assert!(r.passed);
        assert!(metric(&r, "centralizer_lattice_size") >= 3);
    }

    #[test]
    fn closure_examples() {
        let q8 = quaternion(8).unwrap();
        let r = check_closure_and_double_centralizer(&q8);
        assert!(r.passed);
        // ⟨a⟩ ∩ ⟨b⟩ = Z(Q8) is among the listed centralizers
        let a = q8.generate(&[q8.element_by_name("a").unwrap()]);
        let b = q8.generate(&[q8.element_by_name("b").unwrap()]);
        assert_eq!(a.intersection(&b), center(&q8));
        assert!(centralizer_lattice_elements(&q8).contains(&center(&q8)));
        assert!(check_closure_and_double_centralizer(&cyclic(7)).passed);
        assert!(check_closure_and_double_centralizer(&symmetric(4, &l()).unwrap()).passed);
    }

    #[test]
    fn union_argument_examples() {
        let r = check_union_argument(&symmetric(3, &l()).unwrap(), &l()).unwrap();
        assert!(r.passed);
        assert_eq!(metric(&r, "max_union_size"), 4);
        let v4 = direct_product(&cyclic(2), &cyclic(2), &l()).unwrap();
        let r = check_union_argument(&v4, &l()).unwrap();
        assert!(r.passed);
        assert_eq!(metric(&r, "max_union_size"), 3);
        let r = check_union_argument(&cyclic(1), &l()).unwrap();
        assert!(r.passed);
        assert_eq!(metric(&r, "proper_subgroups"), 0);
        let tight = Limits {
            subgroup_cap: 4,
            ..l()
        };
        assert!(check_union_argument(&cyclic(5), &tight).is_err());
    }

    #[test]
    fn atoms_bound_examples() {
        let r = check_atoms_bound(&quaternion(8).unwrap()).unwrap();
        assert!(r.passed);
        assert_eq!(metric(&r, "k"), 3);
        let r = check_atoms_bound(&symmetric(3, &l()).unwrap()).unwrap();
        assert!(r.passed);
        assert_eq!(metric(&r, "k"), 4);
        let r = check_atoms_bound(&dihedral(4)).unwrap();
        assert!(r.passed);
        assert_eq!(metric(&r, "k"), 3);
        assert_eq!(
            check_atoms_bound(&cyclic(6)).unwrap_err(),
            Error::GroupIsAbelian
        );
    }

    #[test]
    fn open_problem_examples() {
        let s3 = symmetric(3, &l()).unwrap();
        let r = check_open_problem(&s3, &l()).unwrap();
        assert_eq!(breaking_point_labels(&r), vec!["A3"]);
        let s4 = symmetric(4, &l()).unwrap();
        let r = check_open_problem(&s4, &l()).unwrap();
        assert_eq!(breaking_point_labels(&r), vec!["V4"]);
        let r = check_open_problem(&cyclic(8), &l()).unwrap();
        assert!(breaking_point_labels(&r).is_empty());
    }

    #[test]
    fn failed_reports_carry_witnesses() {
        // a hand-built failing report keeps the invariant through `fail`
        let mut r = CheckReport::new(Claim::Theorem1, &cyclic(2));
        r.fail(Witness::note("synthetic"));
        assert!(!r.passed);
        assert!(!r.witnesses.is_empty());
        assert!(r.is_counterexample());
    }
}
