use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use satlab::family_spec::{parse_family, pattern_from_flags};
use satlab::oscillation::{oscillation_rows, write_csv, OscillationMode};
use satlab::parallel::{resolve_jobs, run_parallel};
use satlab::report::{decimal, fraction, CheckReport, SearchReport};
use satlab::verify::{run_suite, SUITES};
use satlab::{exhaustive_cap, graph6};
use satlab_core::constructions::{ConstructionSpec, RangeMode, CONSTRUCTIONS};
use satlab_core::counting::count_subgraph_copies;
use satlab_core::formulas::*;
use satlab_core::saturation::{
    check_lemma2, family_structure_report, is_strongly_saturated, unsaturated_pair, Family,
};
use satlab_core::search::SearchConfig;
use satlab_core::{EdgePair, Graph, Pattern};
use serde_json::json;

#[derive(Parser)]
#[command(name = "satlab", version, about = "Graph saturation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named construction as graph6.
    Construct {
        name: String,
        params: Vec<usize>,
    },
    /// Count copies of a pattern in each input graph.
    Count {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check a property of each input graph and print a JSON report.
    Check {
        #[arg(value_enum)]
        mode: CheckMode,
        #[command(flatten)]
        forbidden: ForbiddenArgs,
        /// Clique size `r` for the edge-class check.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Evaluate a closed-form value or bound exactly.
    Formula {
        name: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Exhaustive minimum of a target count over saturated graphs.
    Search {
        order: usize,
        #[command(flatten)]
        forbidden: ForbiddenArgs,
        /// Count cliques of this size instead of edges.
        #[arg(long, conflicts_with_all = ["count_cycle", "count_pattern"])]
        count_clique: Option<usize>,
        #[arg(long, conflicts_with = "count_pattern")]
        count_cycle: Option<usize>,
        #[arg(long)]
        count_pattern: Option<String>,
        /// Admit strongly saturated graphs (which may contain the pattern).
        #[arg(long)]
        strong: bool,
        #[arg(long)]
        prune_edges: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// Run one shard, given as `depth:index`.
        #[arg(long)]
        shard: Option<String>,
        #[arg(long)]
        quiet: bool,
    },
    /// Parameter sweeps.
    Experiment {
        #[command(subcommand)]
        which: Experiment,
    },
    /// Run a named verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Experiment {
    /// Saturation values of the three-member families as CSV.
    Oscillation {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Range `a..b` (inclusive) or a single order.
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value_t = SweepMode::Exhaustive)]
        mode: SweepMode,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepMode {
    Exhaustive,
    Bounds,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum CheckMode {
    Free,
    Saturated,
    StronglySaturated,
    Lemma2,
    FamilyStructure,
}

#[derive(Args)]
struct PatternArgs {
    #[arg(long)]
    clique: Option<usize>,
    #[arg(long)]
    cycle: Option<usize>,
    /// Pattern graph in graph6.
    #[arg(long)]
    pattern: Option<String>,
}

#[derive(Args)]
struct ForbiddenArgs {
    #[command(flatten)]
    pattern: PatternArgs,
    /// `F m`, `Fr m r` or `custom <file>`.
    #[arg(long, num_args = 2..=3, value_names = ["KIND", "ARG"])]
    family: Option<Vec<String>>,
}

/// Exit status of a failed command.
enum Fail {
    Verdict,
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct { name, params } => construct(&name, &params),
        Command::Count { pattern, input } => count(&pattern, input),
        Command::Check {
            mode,
            forbidden,
            r,
            input,
        } => check(mode, &forbidden, r, input),
        Command::Formula { name, params } => formula(&name, &params),
        Command::Search {
            order,
            forbidden,
            count_clique,
            count_cycle,
            count_pattern,
            strong,
            prune_edges,
            jobs,
            shard,
            quiet,
        } => {
            let target = (|| {
                Ok::<_, Fail>(
                    pattern_from_flags(count_clique, count_cycle, count_pattern.as_deref())?
                        .unwrap_or(Pattern::Clique(2)),
                )
            })();
            target.and_then(|t| search(order, &forbidden, t, strong, prune_edges, jobs, shard, quiet))
        }
        Command::Experiment {
            which:
                Experiment::Oscillation {
                    m,
                    r,
                    n,
                    mode,
                    jobs,
                },
        } => oscillation(m, r, &n, mode, jobs),
        Command::Verify { suite, jobs } => verify(&suite, jobs),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Verdict) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn construct(name: &str, params: &[usize]) -> CmdResult {
    if !CONSTRUCTIONS.iter().any(|(n, _)| *n == name) {
        let names: Vec<&str> = CONSTRUCTIONS.iter().map(|(n, _)| *n).collect();
        return Err(Fail::Usage(format!(
            "unknown construction {name:?}; expected one of {}",
            names.join(", ")
        )));
    }
    let g = ConstructionSpec::new(name, params).build()?;
    println!("{}", graph6::encode(&g));
    Ok(())
}

fn read_graphs(input: Option<PathBuf>) -> Result<Vec<Graph>, Fail> {
    let lines: Vec<String> = match input {
        Some(path) => std::fs::read_to_string(&path)
            .map_err(|e| Fail::Usage(format!("cannot read {}: {e}", path.display())))?
            .lines()
            .map(str::to_owned)
            .collect(),
        None => io::stdin().lock().lines().collect::<Result<_, _>>()?,
    };
    let graphs: Vec<Graph> = lines
        .iter()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| graph6::decode(l).map_err(|e| Fail::Usage(format!("input graph {}: {e}", i + 1))))
        .collect::<Result<_, _>>()?;
    if graphs.is_empty() {
        return Err(Fail::Usage("no input graphs".into()));
    }
    Ok(graphs)
}

fn count(p: &PatternArgs, input: Option<PathBuf>) -> CmdResult {
    let pattern = pattern_from_flags(p.clique, p.cycle, p.pattern.as_deref())?
        .ok_or_else(|| Fail::Usage("give one of --clique, --cycle, --pattern".into()))?;
    for g in read_graphs(input)? {
        println!("{}", count_subgraph_copies(&g, &pattern));
    }
    Ok(())
}

fn forbidden_family(f: &ForbiddenArgs) -> Result<Family, Fail> {
    let pattern = pattern_from_flags(f.pattern.clique, f.pattern.cycle, f.pattern.pattern.as_deref())?;
    match (&f.family, pattern) {
        (Some(_), Some(_)) => Err(Fail::Usage("give either --family or a pattern flag".into())),
        (Some(words), None) => Ok(parse_family(words)?),
        (None, Some(p)) => Ok(Family::single(&p)?),
        (None, None) => Err(Fail::Usage("give --family or one of --clique, --cycle, --pattern".into())),
    }
}

fn single_pattern(f: &ForbiddenArgs) -> Result<Pattern, Fail> {
    if f.family.is_some() {
        return Err(Fail::Usage("this mode needs a single pattern flag".into()));
    }
    pattern_from_flags(f.pattern.clique, f.pattern.cycle, f.pattern.pattern.as_deref())?
        .ok_or_else(|| Fail::Usage("give one of --clique, --cycle, --pattern".into()))
}

fn pair(e: EdgePair) -> serde_json::Value {
    json!([e.u, e.v])
}

fn vertices(mask: u64) -> serde_json::Value {
    json!((0..64).filter(|v| mask >> v & 1 == 1).collect::<Vec<_>>())
}

fn check(mode: CheckMode, f: &ForbiddenArgs, r: Option<usize>, input: Option<PathBuf>) -> CmdResult {
    let mode_name = mode.to_possible_value().expect("named").get_name().to_owned();
    let family = match mode {
        CheckMode::Free | CheckMode::Saturated => Some(forbidden_family(f)?),
        _ => None,
    };
    let (m_struct, r_struct) = if mode == CheckMode::FamilyStructure {
        match f.family.as_deref() {
            Some([k, m]) if k == "F" => (m.parse::<usize>()?, 2),
            Some([k, m, r]) if k == "Fr" => (m.parse::<usize>()?, r.parse::<usize>()?),
            _ => return Err(Fail::Usage("family-structure needs --family F m or --family Fr m r".into())),
        }
    } else {
        (0, 0)
    };
    let graphs = read_graphs(input)?;
    let mut all = true;
    let mut out = io::stdout().lock();
    for g in graphs {
        let mut rep = CheckReport {
            graph6: graph6::encode(&g),
            mode: mode_name.clone(),
            passed: true,
            witness: None,
            checks: Vec::new(),
        };
        match mode {
            CheckMode::Free | CheckMode::Saturated => {
                let fam = family.as_ref().expect("family parsed");
                if let Some(i) = fam.member_in(&g) {
                    rep.passed = false;
                    rep.witness = Some(json!({ "reason": "contains member", "member": i,
                        "member_graph6": graph6::encode(fam.members()[i].graph()) }));
                } else if mode == CheckMode::Saturated {
                    if let Some(e) = unsaturated_pair(&g, fam) {
                        rep.passed = false;
                        rep.witness = Some(json!({ "reason": "adding the pair creates no member", "pair": pair(e) }));
                    }
                }
            }
            CheckMode::StronglySaturated => {
                let p = single_pattern(f)?;
                if !is_strongly_saturated(&g, &p) {
                    let e = g
                        .non_edges()
                        .into_iter()
                        .find(|&e| !satlab_core::counting::creates_new_copy_through_edge(&g, e, &p).unwrap_or(true))
                        .expect("a failing pair exists");
                    rep.passed = false;
                    rep.witness = Some(json!({ "reason": "adding the pair creates no new copy", "pair": pair(e) }));
                }
            }
            CheckMode::Lemma2 => {
                let s = match single_pattern(f)? {
                    Pattern::Clique(s) => s,
                    _ => return Err(Fail::Usage("lemma2 needs --clique s".into())),
                };
                let r = r.ok_or_else(|| Fail::Usage("lemma2 needs --r".into()))?;
                let v = check_lemma2(&g, r, s)?;
                rep.passed = v.passed;
                if let Some((e, ab, ks)) = v.witness {
                    rep.witness = Some(json!({ "edge": pair(e), "added": pair(ab), "clique": vertices(ks) }));
                }
            }
            CheckMode::FamilyStructure => {
                let sr = family_structure_report(&g, m_struct, r_struct)?;
                rep.passed = sr.all_passed();
                rep.checks = sr
                    .checks
                    .iter()
                    .map(|c| {
                        json!({ "id": c.check.id(), "passed": c.passed,
                            "vertices": vertices(c.witness_vertices),
                            "edges": c.witness_edges.iter().map(|&e| pair(e)).collect::<Vec<_>>() })
                    })
                    .collect();
                rep.witness = Some(json!({ "b": vertices(sr.b_set), "a": vertices(sr.a_set) }));
            }
        }
        all &= rep.passed;
        writeln!(out, "{}", serde_json::to_string(&rep)?)?;
    }
    if all {
        Ok(())
    } else {
        Err(Fail::Verdict)
    }
}

fn nums(params: &[String], want: usize) -> Result<Vec<usize>, Fail> {
    if params.len() != want {
        return Err(Fail::Usage(format!("expected {want} parameters, got {}", params.len())));
    }
    params
        .iter()
        .map(|p| p.parse::<usize>().map_err(|_| Fail::Usage(format!("not a number: {p:?}"))))
        .collect()
}

fn print_q(label: &str, q: &Q) {
    println!("{label}{} ({})", fraction(q), decimal(q));
}

fn print_bounds(b: &BoundsPair) {
    if let Some(l) = &b.lower {
        print_q("lower ", l);
    }
    if let Some(u) = &b.upper {
        print_q("upper ", u);
    }
}

fn formula(name: &str, params: &[String]) -> CmdResult {
    match name {
        "falling-factorial" => {
            let p = nums(params, 2)?;
            println!("{}", falling_factorial(p[0] as i128, p[1] as u32));
        }
        "ehm-sat" => {
            let p = nums(params, 2)?;
            println!("{}", ehm_sat(p[0], p[1])?);
        }
        "sat-cliques" => {
            let p = nums(params, 3)?;
            println!("{}", sat_cliques(p[0], p[1], p[2])?);
        }
        "clique-bounds" => {
            let p = nums(params, 3)?;
            print_bounds(&kmtt_clique_bounds(p[0], p[1], p[2])?);
        }
        "join-cycle-leading" => {
            let p = nums(params, 3)?;
            print_q("", &join_cycle_leading(p[0], p[1], p[2])?);
        }
        "cycle-bounds" => {
            let p = nums(params, 3)?;
            print_bounds(&kmtt_cycle_bounds(p[0], p[1], p[2])?);
        }
        "c4-leading" => {
            let p = nums(params, 2)?;
            print_q("", &c4_leading(p[0], p[1])?);
        }
        "essential-f" => {
            if params.len() < 2 {
                return Err(Fail::Usage("essential-f needs s and at least one entry".into()));
            }
            let p = nums(params, params.len())?;
            print_q("", &essential_count_f(&FVector::new(p[0], p[1..].to_vec())?));
        }
        "minimize-f-grid" => {
            let p = nums(params, 2)?;
            let g = minimize_f_grid(p[0], p[1])?;
            print_q("min ", &g.min);
            for a in &g.argmin {
                println!("argmin {a:?}");
            }
            if let Some(e) = &g.gap {
                print_q("gap ", e);
            }
        }
        "family-edge-bounds" => {
            let p = nums(params, 2)?;
            print_bounds(&family_edge_bounds(p[0], p[1])?);
        }
        "family-clique-coeffs" => {
            let p = nums(params, 2)?;
            let (a, b) = family_clique_bound_coeffs(p[0], p[1], RangeMode::Strict)?;
            print_q("divides ", &a);
            print_q("non-divides ", &b);
        }
        "binomial-claim" => {
            let p = nums(params, 2)?;
            if p[1] < 2 {
                return Err(Fail::Usage("need r >= 2".into()));
            }
            println!("{}", binomial_inequality_check(p[0], p[1]));
        }
        "indep-bound" => {
            if params.len() != 4 {
                return Err(Fail::Usage("indep-bound needs n edges l convention".into()));
            }
            let p = nums(&params[..3], 3)?;
            let conv = match params[3].as_str() {
                "paper" => TauConvention::Paper,
                "half-square" => TauConvention::HalfSquare,
                other => return Err(Fail::Usage(format!("unknown convention {other:?}"))),
            };
            let b = indep_set_lower_bound(p[0], p[1], p[2], conv)?;
            if b.degenerate {
                eprintln!("warning: tau is undefined for this input; bound set to 0");
            }
            print_q("", &b.value);
        }
        other => return Err(Fail::Usage(format!("unknown formula {other:?}"))),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn search(
    order: usize,
    f: &ForbiddenArgs,
    target: Pattern,
    strong: bool,
    prune_edges: bool,
    jobs: Option<usize>,
    shard: Option<String>,
    quiet: bool,
) -> CmdResult {
    let mut cfg = if strong {
        SearchConfig::strongly_saturated(order, single_pattern(f)?, target)
    } else {
        SearchConfig::saturated(order, forbidden_family(f)?, target)
    };
    cfg.cap = exhaustive_cap();
    cfg.prune_edges = prune_edges;
    if let Some(s) = shard {
        let (d, i) = s
            .split_once(':')
            .and_then(|(d, i)| Some((d.parse().ok()?, i.parse().ok()?)))
            .ok_or_else(|| Fail::Usage(format!("shard must be depth:index, got {s:?}")))?;
        cfg.shard = Some((d, i));
    }
    let report = |done: usize, total: usize| {
        if !quiet {
            eprintln!("shard {done}/{total}");
        }
    };
    let res = run_parallel(&cfg, resolve_jobs(jobs), Some(&report))?;
    println!("{}", serde_json::to_string_pretty(&SearchReport::new(order, &res))?);
    Ok(())
}

fn parse_range(s: &str) -> Result<Vec<usize>, Fail> {
    let bad = || Fail::Usage(format!("bad range {s:?}; use a..b or a single number"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.parse().map_err(|_| bad())?;
            let b: usize = b.trim_start_matches('=').parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![s.parse().map_err(|_| bad())?]),
    }
}

fn oscillation(m: usize, r: usize, n: &str, mode: SweepMode, jobs: Option<usize>) -> CmdResult {
    let ns = parse_range(n)?;
    let cap = exhaustive_cap();
    let mode = match mode {
        SweepMode::Exhaustive => {
            if let Some(&big) = ns.iter().find(|&&x| x > cap) {
                return Err(Fail::Usage(format!(
                    "exhaustive mode is limited to n <= {cap} (got {big}); use --mode bounds"
                )));
            }
            OscillationMode::Exhaustive
        }
        SweepMode::Bounds => OscillationMode::Bounds,
    };
    let rows = oscillation_rows(m, r, ns, mode, resolve_jobs(jobs), cap)?;
    write_csv(&rows, io::stdout().lock())?;
    Ok(())
}

fn verify(suite: &str, jobs: Option<usize>) -> CmdResult {
    let Some(rep) = run_suite(suite, resolve_jobs(jobs)) else {
        return Err(Fail::Usage(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "))));
    };
    let rep = rep?;
    match rep.first_failure() {
        None => {
            println!("{suite}: pass ({rep})");
            Ok(())
        }
        Some(c) => {
            println!("{suite}: FAIL ({rep})");
            println!("first failing case: {}: {}", c.name, c.detail);
            Err(Fail::Verdict)
        }
    }
}
