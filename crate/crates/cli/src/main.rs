use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use grouplat::lab::catalog::{default_families, large_families, Catalog};
use grouplat::lab::checks::{
    centralizer_lattice, check_atoms_bound, check_closure_and_double_centralizer, check_corollary2,
    check_corollary3, check_open_problem, check_theorem1, check_union_argument,
    normal_centralizer_lattice, subgroup_lattice,
};
use grouplat::lab::report::{CheckReport, Claim};
use grouplat::lab::search::{capability_search, open_problem_search};
use grouplat::lab::suite::run_suite_on;
use grouplat::{catalog_group, Error, GroupSpec, GroupTable, Limits};

mod render;

use render::{Format, LatticeKind, Renderer};

const GROUP_SPECS: &str = "\
Group specs (case-insensitive):
  C<n>          cyclic of order n
  D<m>          dihedral of order 2m, m >= 3
  Q<2^n>        generalized quaternion of order 2^n >= 8
  S<n>, A<n>    symmetric and alternating, n <= 6
  E<p>^<k>      elementary abelian of order p^k
  X x Y         direct product, left-associative
  file:<path>   JSON file with {\"degree\", \"generators\"} or {\"order\", \"table\", \"names\"?}

Exit codes: 0 ok, 1 counterexample to a published claim, 2 usage, 3 invalid input, 4 cap exceeded.";

/// Subgroup, centralizer and normal-centralizer lattices of finite groups.
#[derive(Debug, Parser)]
#[command(name = "grouplat", version, about, after_help = GROUP_SPECS)]
struct Cli {
    /// Output format. `dot` is only available for `lattice`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads for per-group work.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Largest group that may be constructed.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_ORDER_CAP)]
    cap_order: usize,
    /// Largest group whose subgroups are enumerated.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_SUBGROUP_CAP)]
    cap_subgroup_order: usize,
    /// Include wall-clock timings in reports.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one of the three lattices of a group.
    Lattice {
        #[arg(long, short)]
        group: String,
        #[arg(long, value_enum, default_value_t = LatticeKind::Centralizers)]
        which: LatticeKind,
    },
    /// Run one checker on one group.
    Check {
        #[arg(long, short)]
        group: String,
        #[arg(long, value_parser = parse_claim)]
        claim: Claim,
        /// Catalog bound for `--claim capability`.
        #[arg(long, default_value_t = 64)]
        max_order: usize,
    },
    /// Search a catalog of groups.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Run every checker over a catalog.
    Suite {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        /// Leave out two-factor direct products.
        #[arg(long)]
        no_products: bool,
        /// Add S5, A6 and S6 (without products).
        #[arg(long)]
        large: bool,
    },
    /// Basic invariants of a group.
    Info {
        #[arg(long, short)]
        group: String,
    },
}

#[derive(Debug, Subcommand)]
enum SearchKind {
    /// Groups whose normal-centralizer lattice has a breaking point.
    OpenProblem {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        /// Add two-factor direct products to the catalog.
        #[arg(long)]
        products: bool,
    },
    /// Groups whose central quotient is isomorphic to the target.
    Capability {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        #[arg(long)]
        products: bool,
    },
}

fn parse_claim(s: &str) -> Result<Claim, String> {
    s.parse()
}

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_INVALID_INPUT: u8 = 3;
const EXIT_CAP_EXCEEDED: u8 = 4;

fn error_exit(e: &Error) -> u8 {
    if e.is_cap_exceeded() {
        EXIT_CAP_EXCEEDED
    } else {
        EXIT_INVALID_INPUT
    }
}

struct Outcome {
    text: String,
    code: u8,
}

fn load(spec: &str, limits: &Limits) -> Result<GroupTable, Error> {
    catalog_group(&GroupSpec::parse(spec)?, limits)
}

fn catalog(max_order: usize, products: bool) -> Catalog {
    Catalog {
        specs: default_families(max_order),
        max_order,
        include_products: products,
        dedup: true,
    }
}

fn run_check(
    g: &GroupTable,
    claim: Claim,
    limits: &Limits,
    max_order: usize,
    jobs: usize,
) -> Result<CheckReport, Error> {
    Ok(match claim {
        Claim::Theorem1 => check_theorem1(g),
        Claim::Corollary2 => check_corollary2(g),
        Claim::Corollary3 => check_corollary3(g),
        Claim::Closure => check_closure_and_double_centralizer(g),
        Claim::UnionArgument => check_union_argument(g, limits)?,
        Claim::AtomsBound => check_atoms_bound(g)?,
        Claim::OpenProblem => check_open_problem(g, limits)?,
        Claim::Capability => {
            let mut cat = catalog(max_order, true);
            cat.dedup = false;
            capability_search(g, &cat.resolve(limits, jobs), jobs)
        }
    })
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let limits = Limits {
        order_cap: cli.cap_order,
        subgroup_cap: cli.cap_subgroup_order,
    };
    let jobs = cli.jobs as usize;
    let r = Renderer {
        format: cli.format,
        timings: cli.timings,
    };
    if cli.format == Format::Dot && !matches!(cli.command, Command::Lattice { .. }) {
        return Err(Error::ParameterOutOfRange(
            "--format dot is only available for the lattice command".into(),
        ));
    }
    let outcome = match &cli.command {
        Command::Lattice { group, which } => {
            let g = load(group, &limits)?;
            let lat = match which {
                LatticeKind::Subgroups => subgroup_lattice(&g, &limits)?,
                LatticeKind::Centralizers => centralizer_lattice(&g),
                LatticeKind::NormalCentralizers => normal_centralizer_lattice(&g, &limits)?,
            };
            Outcome {
                text: r.lattice(&g, *which, &lat),
                code: 0,
            }
        }
        Command::Check {
            group,
            claim,
            max_order,
        } => {
            let g = load(group, &limits)?;
            let report = run_check(&g, *claim, &limits, *max_order, jobs)?;
            Outcome {
                code: if report.is_counterexample() {
                    EXIT_COUNTEREXAMPLE
                } else {
                    0
                },
                text: r.check(&g, &report),
            }
        }
        Command::Search {
            kind:
                SearchKind::OpenProblem {
                    max_order,
                    products,
                },
        } => {
            let cat = catalog(*max_order, *products);
            let entries = cat.resolve(&limits, jobs);
            let res = open_problem_search(&entries, &limits, jobs);
            Outcome {
                text: r.open_problem(&cat, &res),
                code: 0,
            }
        }
        Command::Search {
            kind:
                SearchKind::Capability {
                    target,
                    max_order,
                    products,
                },
        } => {
            let t = load(target, &limits)?;
            let mut cat = catalog(*max_order, *products);
            cat.dedup = false;
            let report = capability_search(&t, &cat.resolve(&limits, jobs), jobs);
            Outcome {
                code: if report.is_counterexample() {
                    EXIT_COUNTEREXAMPLE
                } else {
                    0
                },
                text: r.capability(&cat, &report),
            }
        }
        Command::Suite {
            max_order,
            no_products,
            large,
        } => {
            let cat = catalog(*max_order, !no_products);
            let mut entries = cat.resolve(&limits, jobs);
            if *large {
                let extra = Catalog::new(large_families(), usize::MAX);
                entries.extend(extra.resolve(&limits, jobs));
                entries.sort_by(|a, b| {
                    (a.order(), a.spec.canonical()).cmp(&(b.order(), b.spec.canonical()))
                });
            }
            let report = run_suite_on(&entries, &limits, jobs);
            Outcome {
                code: if report.all_passed() {
                    0
                } else {
                    EXIT_COUNTEREXAMPLE
                },
                text: r.suite(&cat, *large, &report),
            }
        }
        Command::Info { group } => {
            let g = load(group, &limits)?;
            Outcome {
                text: r.info(&g, &limits),
                code: 0,
            }
        }
    };
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) => {
                    fs::write(path, &outcome.text).map_err(|e| (path.display().to_string(), e))
                }
                None => io::stdout()
                    .lock()
                    .write_all(outcome.text.as_bytes())
                    .map_err(|e| ("stdout".to_string(), e)),
            };
            if let Err((path, e)) = written {
                eprintln!("error: cannot write {path}: {e}");
                return ExitCode::from(EXIT_INVALID_INPUT);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit(&e))
        }
    }
}
