//! Text, JSON and DOT rendering. All output is built from sorted data so
//! identical invocations give identical bytes.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use sha2::{Digest, Sha256};

use grouplat::lab::catalog::Catalog;
use grouplat::lab::checks::{breaking_point_labels, centralizer_lattice};
use grouplat::lab::report::{CheckReport, GroupRef, Witness};
use grouplat::lab::search::OpenProblemResult;
use grouplat::lab::suite::SuiteReport;
use grouplat::naming::{identify, subgroup_label};
use grouplat::subgroup::{all_subgroups, center, derived_subgroup, normal_subgroups};
use grouplat::{BoundedLattice, GroupTable, Limits, SubgroupSet};

pub const TOOL_VERSION: &str = concat!("grouplat ", env!("CARGO_PKG_VERSION"));

/// Node sets up to this size are labeled by element names in DOT output.
const DOT_NAME_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeKind {
    Subgroups,
    Centralizers,
    NormalCentralizers,
}

impl LatticeKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            LatticeKind::Subgroups => "subgroups",
            LatticeKind::Centralizers => "centralizers",
            LatticeKind::NormalCentralizers => "normal-centralizers",
        }
    }
}

pub struct Renderer {
    pub format: Format,
    pub timings: bool,
}

#[derive(Serialize)]
struct GroupJson {
    spec: String,
    order: usize,
    abelian: bool,
    center_order: usize,
}

impl GroupJson {
    fn of(g: &GroupTable) -> GroupJson {
        GroupJson {
            spec: g.name().to_string(),
            order: g.order(),
            abelian: g.is_abelian(),
            center_order: center(g).len(),
        }
    }
}

#[derive(Serialize)]
struct NodeJson {
    id: usize,
    size: usize,
    label: String,
    elements: Vec<String>,
    indices: Vec<usize>,
}

#[derive(Serialize)]
struct ChainJson {
    is_chain: bool,
    length: Option<usize>,
}

#[derive(Serialize)]
struct LatticeJson {
    kind: &'static str,
    size: usize,
    nodes: Vec<NodeJson>,
    hasse: Vec<(usize, usize)>,
    atoms: Vec<usize>,
    breaking_points: Vec<usize>,
    decompositions: Vec<(usize, usize)>,
    chain: ChainJson,
}

#[derive(Serialize)]
struct CheckJson<'a> {
    #[serde(flatten)]
    report: &'a CheckReport,
    elapsed_ms: Option<f64>,
}

#[derive(Serialize)]
struct GroupReportJson<'a> {
    tool_version: &'static str,
    group: GroupJson,
    lattice: Option<LatticeJson>,
    checks: Vec<CheckJson<'a>>,
}

#[derive(Serialize)]
struct CatalogJson {
    max_order: usize,
    products: bool,
    dedup: bool,
}

impl CatalogJson {
    fn of(c: &Catalog) -> CatalogJson {
        CatalogJson {
            max_order: c.max_order,
            products: c.include_products,
            dedup: c.dedup,
        }
    }
}

#[derive(Serialize)]
struct SkippedJson {
    spec: String,
    reason: String,
}

#[derive(Serialize)]
struct OpenProblemHitJson<'a> {
    group: &'a GroupRef,
    breaking_points: Vec<String>,
    check: CheckJson<'a>,
}

#[derive(Serialize)]
struct OpenProblemJson<'a> {
    tool_version: &'static str,
    search: &'static str,
    catalog: CatalogJson,
    examined: usize,
    hits: Vec<OpenProblemHitJson<'a>>,
    skipped: Vec<SkippedJson>,
}

#[derive(Serialize)]
struct CapabilityJson<'a> {
    tool_version: &'static str,
    search: &'static str,
    catalog: CatalogJson,
    target: &'a GroupRef,
    checks: Vec<CheckJson<'a>>,
}

#[derive(Serialize)]
struct SuiteGroupJson<'a> {
    spec: &'a str,
    order: Option<usize>,
    abelian: Option<bool>,
    center_order: Option<usize>,
    error: Option<String>,
    checks: Vec<CheckJson<'a>>,
    skipped: Vec<SkippedJson>,
}

#[derive(Serialize)]
struct SummaryJson {
    groups: usize,
    checks: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
    errors: usize,
}

#[derive(Serialize)]
struct OpenProblemEntryJson<'a> {
    spec: &'a str,
    breaking_points: &'a [String],
}

#[derive(Serialize)]
struct CounterexampleJson<'a> {
    spec: &'a str,
    claim: &'a str,
    witnesses: &'a [Witness],
}

#[derive(Serialize)]
struct SuiteJson<'a> {
    tool_version: &'static str,
    catalog: CatalogJson,
    large: bool,
    summary: SummaryJson,
    counterexamples: Vec<CounterexampleJson<'a>>,
    open_problem: Vec<OpenProblemEntryJson<'a>>,
    capability: Vec<CheckJson<'a>>,
    groups: Vec<SuiteGroupJson<'a>>,
    elapsed_ms: Option<f64>,
}

#[derive(Serialize)]
struct InfoJson {
    tool_version: &'static str,
    group: GroupJson,
    label: String,
    derived_order: usize,
    element_orders: Vec<(usize, usize)>,
    generators: Vec<String>,
    centralizer_lattice_size: usize,
    subgroup_count: Option<usize>,
    normal_subgroup_count: Option<usize>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn ms(d: std::time::Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

fn set_names(g: &GroupTable, h: &SubgroupSet) -> Vec<String> {
    h.iter().map(|x| g.element_name(x)).collect()
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn set_hash(h: &SubgroupSet) -> String {
    let mut hasher = Sha256::new();
    for x in h.iter() {
        hasher.update((x as u64).to_le_bytes());
    }
    hasher.finalize()[..6]
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl Renderer {
    fn check_json<'a>(&self, r: &'a CheckReport) -> CheckJson<'a> {
        CheckJson {
            report: r,
            elapsed_ms: self.timings.then(|| ms(r.elapsed)),
        }
    }

    fn check_text(&self, out: &mut String, r: &CheckReport) {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        let _ = write!(
            out,
            "{} on {} (order {}): {verdict}",
            r.claim, r.group.spec, r.group.order
        );
        if self.timings {
            let _ = write!(out, " [{:.3} ms]", ms(r.elapsed));
        }
        out.push('\n');
        for w in &r.witnesses {
            let _ = writeln!(out, "  {}", w.describe());
        }
        for n in &r.notes {
            let _ = writeln!(out, "  note: {n}");
        }
    }

    pub fn lattice(&self, g: &GroupTable, kind: LatticeKind, lat: &BoundedLattice) -> String {
        let labels: Vec<String> = lat.nodes().iter().map(|h| subgroup_label(g, h)).collect();
        let bps = lat.breaking_points();
        let decs = lat.interval_decompositions();
        let chain = lat.chain_classification();
        match self.format {
            Format::Json => to_json(&GroupReportJson {
                tool_version: TOOL_VERSION,
                group: GroupJson::of(g),
                lattice: Some(LatticeJson {
                    kind: kind.as_str(),
                    size: lat.len(),
                    nodes: lat
                        .nodes()
                        .iter()
                        .enumerate()
                        .map(|(id, h)| NodeJson {
                            id,
                            size: h.len(),
                            label: labels[id].clone(),
                            elements: set_names(g, h),
                            indices: h.iter().collect(),
                        })
                        .collect(),
                    hasse: lat.hasse_edges().to_vec(),
                    atoms: lat.atoms(),
                    breaking_points: bps,
                    decompositions: decs,
                    chain: ChainJson {
                        is_chain: chain.is_chain,
                        length: chain.length,
                    },
                }),
                checks: Vec::new(),
            }),
            Format::Dot => {
                let mut out = String::new();
                let _ = writeln!(
                    out,
                    "digraph \"{} {}\" {{",
                    dot_escape(g.name()),
                    kind.as_str()
                );
                out.push_str("  rankdir=BT;\n  node [shape=box];\n");
                for (id, h) in lat.nodes().iter().enumerate() {
                    let body = if h.len() <= DOT_NAME_LIMIT {
                        set_names(g, h).join(",")
                    } else {
                        set_hash(h)
                    };
                    let _ = writeln!(
                        out,
                        "  n{id} [label=\"{}:{}\"];",
                        h.len(),
                        dot_escape(&body)
                    );
                }
                for &(lo, hi) in lat.hasse_edges() {
                    let _ = writeln!(out, "  n{lo} -> n{hi};");
                }
                out.push_str("}\n");
                out
            }
            Format::Text => {
                let mut out = String::new();
                let name = |id: usize| format!("#{id} {}", labels[id]);
                let list = |ids: &[usize]| -> String {
                    if ids.is_empty() {
                        "none".to_string()
                    } else {
                        ids.iter().map(|&i| name(i)).collect::<Vec<_>>().join(", ")
                    }
                };
                group_header(&mut out, g);
                let _ = writeln!(out, "lattice: {} ({} nodes)", kind.as_str(), lat.len());
                for (id, h) in lat.nodes().iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "  #{id} {} (order {}) {{{}}}",
                        labels[id],
                        h.len(),
                        set_names(g, h).join(", ")
                    );
                }
                let edges: Vec<String> = lat
                    .hasse_edges()
                    .iter()
                    .map(|(a, b)| format!("#{a} < #{b}"))
                    .collect();
                let _ = writeln!(
                    out,
                    "hasse: {}",
                    if edges.is_empty() {
                        "none".into()
                    } else {
                        edges.join(", ")
                    }
                );
                let _ = writeln!(out, "atoms: {}", list(&lat.atoms()));
                let _ = writeln!(out, "breaking points: {}", list(&bps));
                let decs: Vec<String> = decs
                    .iter()
                    .map(|&(m, n)| format!("({}, {})", name(m), name(n)))
                    .collect();
                let _ = writeln!(
                    out,
                    "decompositions: {}",
                    if decs.is_empty() {
                        "none".into()
                    } else {
                        decs.join(", ")
                    }
                );
                match chain.length {
                    Some(len) if chain.is_chain => {
                        let _ = writeln!(out, "chain: yes, length {len}");
                    }
                    _ => out.push_str("chain: no\n"),
                }
                out
            }
        }
    }

    pub fn check(&self, g: &GroupTable, r: &CheckReport) -> String {
        match self.format {
            Format::Json => to_json(&GroupReportJson {
                tool_version: TOOL_VERSION,
                group: GroupJson::of(g),
                lattice: None,
                checks: vec![self.check_json(r)],
            }),
            _ => {
                let mut out = String::new();
                self.check_text(&mut out, r);
                out
            }
        }
    }

    pub fn open_problem(&self, cat: &Catalog, res: &OpenProblemResult) -> String {
        let skipped = || {
            res.skipped
                .iter()
                .map(|s| SkippedJson {
                    spec: s.spec.clone(),
                    reason: s.reason.clone(),
                })
                .collect()
        };
        match self.format {
            Format::Json => to_json(&OpenProblemJson {
                tool_version: TOOL_VERSION,
                search: "open-problem",
                catalog: CatalogJson::of(cat),
                examined: res.examined,
                hits: res
                    .hits
                    .iter()
                    .map(|r| OpenProblemHitJson {
                        group: &r.group,
                        breaking_points: breaking_point_labels(r),
                        check: self.check_json(r),
                    })
                    .collect(),
                skipped: skipped(),
            }),
            _ => {
                let mut out = String::new();
                let _ = writeln!(
                    out,
                    "open-problem search: {} groups examined (order <= {}{}), {} with breaking points",
                    res.examined,
                    cat.max_order,
                    if cat.include_products { ", with products" } else { "" },
                    res.hits.len()
                );
                for r in &res.hits {
                    let _ = writeln!(
                        out,
                        "  {} (order {}): {}",
                        r.group.spec,
                        r.group.order,
                        breaking_point_labels(r).join(", ")
                    );
                }
                for s in &res.skipped {
                    let _ = writeln!(out, "  skipped {}: {}", s.spec, s.reason);
                }
                out
            }
        }
    }

    pub fn capability(&self, cat: &Catalog, r: &CheckReport) -> String {
        match self.format {
            Format::Json => to_json(&CapabilityJson {
                tool_version: TOOL_VERSION,
                search: "capability",
                catalog: CatalogJson::of(cat),
                target: &r.group,
                checks: vec![self.check_json(r)],
            }),
            _ => {
                let mut out = String::new();
                self.check_text(&mut out, r);
                out
            }
        }
    }

    pub fn suite(&self, cat: &Catalog, large: bool, s: &SuiteReport) -> String {
        let sm = &s.summary;
        match self.format {
            Format::Json => to_json(&SuiteJson {
                tool_version: TOOL_VERSION,
                catalog: CatalogJson::of(cat),
                large,
                summary: SummaryJson {
                    groups: sm.groups,
                    checks: sm.checks,
                    passed: sm.passed,
                    failed: sm.failed,
                    skipped: sm.skipped,
                    errors: sm.errors,
                },
                counterexamples: s
                    .counterexamples
                    .iter()
                    .map(|c| CounterexampleJson {
                        spec: &c.spec,
                        claim: &c.claim,
                        witnesses: &c.witnesses,
                    })
                    .collect(),
                open_problem: s
                    .open_problem
                    .iter()
                    .map(|(spec, bps)| OpenProblemEntryJson {
                        spec,
                        breaking_points: bps,
                    })
                    .collect(),
                capability: s.capability.iter().map(|r| self.check_json(r)).collect(),
                groups: s
                    .groups
                    .iter()
                    .map(|gr| SuiteGroupJson {
                        spec: &gr.spec,
                        order: gr.order,
                        abelian: gr.abelian,
                        center_order: gr.center_order,
                        error: gr.error.as_ref().map(|e| e.to_string()),
                        checks: gr.checks.iter().map(|r| self.check_json(r)).collect(),
                        skipped: gr
                            .skipped
                            .iter()
                            .map(|(claim, reason)| SkippedJson {
                                spec: claim.to_string(),
                                reason: reason.clone(),
                            })
                            .collect(),
                    })
                    .collect(),
                elapsed_ms: self.timings.then(|| ms(s.elapsed)),
            }),
            _ => {
                let mut out = String::new();
                let _ = writeln!(
                    out,
                    "suite: {} groups (order <= {}{}{}), {} checks: {} passed, {} failed, {} skipped, {} build errors",
                    sm.groups,
                    cat.max_order,
                    if cat.include_products { ", with products" } else { "" },
                    if large { ", plus S5, A6, S6" } else { "" },
                    sm.checks,
                    sm.passed,
                    sm.failed,
                    sm.skipped,
                    sm.errors
                );
                if self.timings {
                    let _ = writeln!(out, "elapsed: {:.3} ms", ms(s.elapsed));
                }
                if s.counterexamples.is_empty() {
                    out.push_str("counterexamples: none\n");
                } else {
                    out.push_str("counterexamples:\n");
                    for c in &s.counterexamples {
                        let _ = writeln!(out, "  {} {}", c.claim, c.spec);
                        for w in &c.witnesses {
                            let _ = writeln!(out, "    {}", w.describe());
                        }
                    }
                }
                out.push_str("normal-centralizer breaking points:\n");
                for (spec, bps) in &s.open_problem {
                    let _ = writeln!(out, "  {spec}: {}", bps.join(", "));
                }
                for r in &s.capability {
                    self.check_text(&mut out, r);
                }
                for gr in &s.groups {
                    if let Some(e) = &gr.error {
                        let _ = writeln!(out, "error {}: {e}", gr.spec);
                    }
                    for (claim, reason) in &gr.skipped {
                        if !matches!(claim, grouplat::lab::report::Claim::AtomsBound) {
                            let _ = writeln!(out, "skipped {claim} on {}: {reason}", gr.spec);
                        }
                    }
                }
                out
            }
        }
    }

    pub fn info(&self, g: &GroupTable, limits: &Limits) -> String {
        let fp = g.fingerprint();
        let subgroups = all_subgroups(g, limits).ok().map(|s| s.len());
        let normals = normal_subgroups(g, limits).ok().map(|s| s.len());
        let info = InfoJson {
            tool_version: TOOL_VERSION,
            group: GroupJson::of(g),
            label: identify(g),
            derived_order: derived_subgroup(g).len(),
            element_orders: fp.element_orders.clone(),
            generators: g.generators().iter().map(|&x| g.element_name(x)).collect(),
            centralizer_lattice_size: centralizer_lattice(g).len(),
            subgroup_count: subgroups,
            normal_subgroup_count: normals,
        };
        match self.format {
            Format::Json => to_json(&info),
            _ => {
                let mut out = String::new();
                group_header(&mut out, g);
                let _ = writeln!(out, "isomorphism type: {}", info.label);
                let _ = writeln!(out, "derived subgroup order: {}", info.derived_order);
                let orders: Vec<String> = info
                    .element_orders
                    .iter()
                    .map(|(o, n)| format!("{n} of order {o}"))
                    .collect();
                let _ = writeln!(out, "elements: {}", orders.join(", "));
                let _ = writeln!(out, "generators: {}", info.generators.join(", "));
                let _ = writeln!(
                    out,
                    "centralizer lattice: {} nodes",
                    info.centralizer_lattice_size
                );
                let count = |c: Option<usize>| {
                    c.map_or("over the subgroup cap".to_string(), |n| n.to_string())
                };
                let _ = writeln!(out, "subgroups: {}", count(subgroups));
                let _ = writeln!(out, "normal subgroups: {}", count(normals));
                out
            }
        }
    }
}

fn group_header(out: &mut String, g: &GroupTable) {
    let _ = writeln!(
        out,
        "group: {} (order {}, {}, center order {})",
        g.name(),
        g.order(),
        if g.is_abelian() {
            "abelian"
        } else {
            "nonabelian"
        },
        center(g).len()
    );
}
