use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;

use crate::bitset::SubgroupSet;
use crate::group::GroupTable;
use crate::naming::subgroup_label;

/// The statement a checker verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// No decomposition of the centralizer lattice into two proper intervals.
    Theorem1,
    /// The centralizer lattice has no breaking point.
    Corollary2,
    /// The centralizer lattice is a chain exactly for abelian groups, and never
    /// has exactly two members.
    Corollary3,
    /// Intersections of centralizers are centralizers; `x ∈ C(C(x))`.
    Closure,
    /// No group is the union of two proper subgroups.
    UnionArgument,
    /// A nonabelian group has at least three minimal centralizers, meeting in the center.
    AtomsBound,
    /// Search for groups whose central quotient is a given group.
    Capability,
    /// Breaking points of the normal-centralizer lattice.
    OpenProblem,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::Theorem1,
        Claim::Corollary2,
        Claim::Corollary3,
        Claim::Closure,
        Claim::UnionArgument,
        Claim::AtomsBound,
        Claim::Capability,
        Claim::OpenProblem,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Claim::Theorem1 => "theorem1",
            Claim::Corollary2 => "corollary2",
            Claim::Corollary3 => "corollary3",
            Claim::Closure => "closure",
            Claim::UnionArgument => "union-argument",
            Claim::AtomsBound => "atoms-bound",
            Claim::Capability => "capability",
            Claim::OpenProblem => "open-problem",
        }
    }

    /// Claims backed by a published proof; a failure is a counterexample.
    pub fn is_published(&self) -> bool {
        !matches!(self, Claim::OpenProblem)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Claim, String> {
        Claim::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Claim::ALL.iter().map(|c| c.as_str()).collect();
                format!("unknown claim `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupRef {
    pub spec: String,
    pub order: usize,
}

impl GroupRef {
    pub fn of(g: &GroupTable) -> GroupRef {
        GroupRef {
            spec: g.name().to_string(),
            order: g.order(),
        }
    }
}

/// A subgroup rendered by its isomorphism-type label and element names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupWitness {
    pub label: String,
    pub size: usize,
    pub elements: Vec<String>,
}

impl SubgroupWitness {
    pub fn new(g: &GroupTable, h: &SubgroupSet) -> SubgroupWitness {
        SubgroupWitness {
            label: subgroup_label(g, h),
            size: h.len(),
            elements: h.iter().map(|x| g.element_name(x)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Subgroup {
        role: String,
        #[serde(flatten)]
        subgroup: SubgroupWitness,
    },
    Pair {
        role: String,
        first: SubgroupWitness,
        second: SubgroupWitness,
    },
    Element {
        role: String,
        element: String,
    },
    Group {
        role: String,
        spec: String,
        order: usize,
    },
    Metric {
        name: String,
        value: usize,
    },
    Note {
        text: String,
    },
}

impl Witness {
    pub fn subgroup(role: &str, g: &GroupTable, h: &SubgroupSet) -> Witness {
        Witness::Subgroup {
            role: role.to_string(),
            subgroup: SubgroupWitness::new(g, h),
        }
    }

    pub fn pair(role: &str, g: &GroupTable, a: &SubgroupSet, b: &SubgroupSet) -> Witness {
        Witness::Pair {
            role: role.to_string(),
            first: SubgroupWitness::new(g, a),
            second: SubgroupWitness::new(g, b),
        }
    }

    pub fn metric(name: &str, value: usize) -> Witness {
        Witness::Metric {
            name: name.to_string(),
            value,
        }
    }

    pub fn note(text: impl Into<String>) -> Witness {
        Witness::Note { text: text.into() }
    }

    /// One-line rendering for text reports.
    pub fn describe(&self) -> String {
        fn sub(s: &SubgroupWitness) -> String {
            format!(
                "{} (order {}) {{{}}}",
                s.label,
                s.size,
                s.elements.join(", ")
            )
        }
        match self {
            Witness::Subgroup { role, subgroup } => format!("{role}: {}", sub(subgroup)),
            Witness::Pair {
                role,
                first,
                second,
            } => format!("{role}: M = {}; N = {}", sub(first), sub(second)),
            Witness::Element { role, element } => format!("{role}: {element}"),
            Witness::Group { role, spec, order } => format!("{role}: {spec} (order {order})"),
            Witness::Metric { name, value } => format!("{name} = {value}"),
            Witness::Note { text } => text.clone(),
        }
    }
}

/// Outcome of one checker run on one group. A failed report always carries
/// at least one witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub claim: Claim,
    pub group: GroupRef,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub(crate) fn new(claim: Claim, g: &GroupTable) -> CheckReport {
        CheckReport {
            claim,
            group: GroupRef::of(g),
            passed: true,
            witnesses: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub(crate) fn fail(&mut self, w: Witness) {
        self.passed = false;
        self.witnesses.push(w);
    }

    /// True when this is a failed check of a published claim.
    pub fn is_counterexample(&self) -> bool {
        !self.passed && self.claim.is_published()
    }
}
