use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use reconquiver::catalog::{self, GroupId};
use reconquiver::graph::{self, DualGraph, STAR};
use reconquiver::knitting::{self, NamedSpecial, TranslationQuiver};
use reconquiver::quiver::{self, ReconQuiver};
use reconquiver::{rules, Error};

#[derive(Parser)]
#[command(
    name = "reconquiver",
    version,
    about = "Reconstruction-algebra quivers from labelled dual graphs"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check a dual graph and report every failed invariant.
    Validate {
        /// Graph JSON file, or `-` for stdin.
        input: String,
    },
    /// Fundamental cycle, canonical cycle, embedding dimension and the
    /// rationality identity.
    Cycle {
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The quiver computed from the ext table.
    Quiver {
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The quiver from the combinatorial rules, compared with the ext table.
    Rules {
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Include every arrow group added by the rule.
        #[arg(long)]
        trace: bool,
    },
    /// Dual graph and quiver of a group `A:r,a`, `D:n,q`, `T:m`, `O:m` or `I:m`.
    Group {
        spec: String,
        /// Output format (default: json, or text for --cross-check).
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Print only the dual graph.
        #[arg(long, conflicts_with = "quiver")]
        graph: bool,
        /// Print only the quiver.
        #[arg(long)]
        quiver: bool,
        /// Knit from every named special of the Auslander-Reiten quiver.
        #[arg(long)]
        knit: bool,
        /// Compare knitted totals with the geometric quiver; prints PASS or FAIL.
        #[arg(long)]
        cross_check: bool,
    },
    /// Run the knitting recursion from one special vertex.
    Knit {
        /// Translation quiver JSON file, `-` for stdin, or a group spec `I:m`.
        input: String,
        /// Start vertex: an id, or a special's name for built-in quivers.
        #[arg(long)]
        start: String,
        /// Comma-separated special vertices (built-in quivers use their named specials).
        #[arg(long, value_delimiter = ',')]
        specials: Vec<String>,
        #[arg(long)]
        max_steps: Option<usize>,
        /// Include the lambda grid.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cross-validate the whole catalog and print a pass/fail table.
    Sweep {
        /// Check the star-shaped families at this b only (default: 2 to 6).
        #[arg(long)]
        b: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Failure modes, mapped to exit codes.
enum Failure {
    /// The input was well formed but failed a check.
    Check(String),
    /// Bad flags or a format the command cannot produce.
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

fn read_input(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Check(format!("cannot read stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(input).map_err(|e| Failure::Check(format!("cannot read {input}: {e}")))
    }
}

fn read_graph(input: &str) -> Result<DualGraph, Failure> {
    Ok(DualGraph::from_json(&read_input(input)?)?)
}

fn parse_value(text: &str) -> Value {
    serde_json::from_str(text).expect("library JSON is valid")
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn reject_dot(format: Format) -> Outcome {
    if format == Format::Dot {
        return Err(Failure::Usage("--format dot is only available for quivers".into()));
    }
    Ok(())
}

fn validate(input: &str) -> Outcome {
    let g = read_graph(input)?;
    let report = g.validate();
    print_json(&serde_json::to_value(&report).expect("reports serialize"));
    if report.valid {
        Ok(())
    } else {
        Err(Failure::Check(report.summary()))
    }
}

fn cycle(input: &str, format: Format) -> Outcome {
    reject_dot(format)?;
    let g = read_graph(input)?;
    let zf = graph::fundamental_cycle(&g)?;
    let zk = graph::canonical_cycle(&g)?;
    let e = graph::embedding_dimension(&g)?;
    let rational = graph::rationality_identity_check(&g)?;
    match format {
        Format::Text => {
            let zf_vals = zf.ordered(&g)?;
            let zk_vals = zk.ordered(&g)?;
            for (i, id) in g.ids().iter().enumerate() {
                println!("{id}\tZ_f {}\tZ_K {}", zf_vals[i], zk_vals[i]);
            }
            println!("e = {e}");
            println!("rationality identity: {}", if rational { "holds" } else { "fails" });
        }
        _ => print_json(&json!({
            "zf": zf,
            "zk": zk,
            "embedding_dimension": e,
            "rationality_identity": rational,
        })),
    }
    Ok(())
}

fn print_quiver(q: &ReconQuiver, format: Format) {
    match format {
        Format::Json => println!("{}", q.to_json()),
        Format::Dot => print!("{}", quiver::emit_dot(q)),
        Format::Text => print!("{}", q.to_text()),
    }
}

fn quiver_cmd(input: &str, format: Format) -> Outcome {
    let g = read_graph(input)?;
    print_quiver(&quiver::build_quiver(&g)?, format);
    Ok(())
}

fn rules_cmd(input: &str, format: Format, trace: bool) -> Outcome {
    reject_dot(format)?;
    let g = read_graph(input)?;
    let (q, steps) = rules::apply_rules_traced(&g)?;
    let geometric = quiver::build_quiver(&g)?;
    let agrees = q.same_arrows(&geometric);
    match format {
        Format::Text => {
            println!("rule ({})", steps.rule);
            if trace {
                for s in &steps.steps {
                    println!("  {} -> {} x{}  [{}]", s.from, s.to, s.count, s.clause);
                }
            }
            print!("{}", q.to_text());
            println!("agrees with the ext table: {agrees}");
        }
        _ => {
            let mut out = json!({
                "rule": steps.rule,
                "class": steps.class,
                "quiver": parse_value(&q.to_json()),
                "agrees": agrees,
            });
            if trace {
                out["trace"] = serde_json::to_value(&steps.steps).expect("traces serialize");
            }
            print_json(&out);
        }
    }
    if agrees {
        Ok(())
    } else {
        let diffs: Vec<String> = q
            .arrow_differences(&geometric)
            .into_iter()
            .map(|(a, b, r, e)| format!("{a}->{b}: rules {r}, ext {e}"))
            .collect();
        Err(Failure::Check(format!(
            "rules disagree with the ext table: {}",
            diffs.join(", ")
        )))
    }
}

fn parse_group(spec: &str) -> Result<GroupId, Failure> {
    let id: GroupId = spec.parse()?;
    catalog::validate_params(&id)?;
    Ok(id)
}

fn named_specials(m: u64, spec: &str) -> Result<(TranslationQuiver, Vec<NamedSpecial>), Failure> {
    let (tq, named) = knitting::build_i_ar_quiver(m)?;
    let named = named.ok_or_else(|| Error::UnsupportedSpecials(spec.to_string()))?;
    Ok((tq, named))
}

fn group(spec: &str, format: Option<Format>, only_graph: bool, only_quiver: bool, knit: bool, cross: bool) -> Outcome {
    let id = parse_group(spec)?;
    if knit || cross {
        let format = format.unwrap_or(if cross { Format::Text } else { Format::Json });
        reject_dot(format)?;
        return group_knit(&id, cross, format);
    }
    let format = format.unwrap_or(Format::Json);
    let g = catalog::dual_graph(&id)?;
    if only_graph {
        reject_dot(format)?;
        println!("{}", g.to_json());
        return Ok(());
    }
    let q = quiver::build_quiver(&g)?;
    if only_quiver || format != Format::Json {
        print_quiver(&q, format);
        return Ok(());
    }
    print_json(&json!({
        "group": id.to_string(),
        "graph": parse_value(&g.to_json()),
        "quiver": parse_value(&q.to_json()),
    }));
    Ok(())
}

fn group_knit(id: &GroupId, cross: bool, format: Format) -> Outcome {
    if cross {
        let report = knitting::cross_check_report(id)?;
        let passed = report.passed();
        if format == Format::Json {
            let mut v = serde_json::to_value(&report).expect("reports serialize");
            v["passed"] = json!(passed);
            print_json(&v);
        } else {
            for e in report.mismatches() {
                println!(
                    "{} -> {}: knitted {}, geometric {}",
                    e.from, e.to, e.knitted, e.geometric
                );
            }
            println!("{}", if passed { "PASS" } else { "FAIL" });
        }
        return if passed {
            Ok(())
        } else {
            Err(Failure::Check(format!(
                "knitting disagrees with the geometric quiver for {id}"
            )))
        };
    }
    let GroupId::I(m) = *id else {
        return Err(Error::UnsupportedSpecials(id.to_string()).into());
    };
    let (tq, named) = named_specials(m, &id.to_string())?;
    let specials: BTreeSet<String> = named.iter().map(|s| s.vertex.clone()).collect();
    let mut table = BTreeMap::new();
    for s in &named {
        let state = knitting::knit_counts(&tq, &specials, &s.vertex, tq.default_max_steps())?;
        let totals = state.totals();
        let row: BTreeMap<String, u64> = named.iter().map(|t| (t.name.clone(), totals[&t.vertex])).collect();
        table.insert(s.name.clone(), row);
    }
    if format == Format::Json {
        print_json(&json!({ "group": id.to_string(), "specials": named, "totals": table }));
    } else {
        for (from, row) in &table {
            let targets: Vec<String> = row
                .iter()
                .filter(|(_, &k)| k > 0)
                .map(|(t, k)| format!("{t}:{k}"))
                .collect();
            println!("{from} -> {}", targets.join(" "));
        }
    }
    Ok(())
}

fn knit(
    input: &str,
    start: &str,
    specials: &[String],
    max_steps: Option<usize>,
    trace: bool,
    format: Format,
) -> Outcome {
    reject_dot(format)?;
    let (tq, specials, start) = match input.parse::<GroupId>() {
        Ok(id) => {
            let GroupId::I(m) = id else {
                return Err(Error::UnsupportedSpecials(id.to_string()).into());
            };
            catalog::validate_params(&id)?;
            let (tq, named) = named_specials(m, input)?;
            let start = named
                .iter()
                .find(|s| s.name == start)
                .map_or(start.to_string(), |s| s.vertex.clone());
            let specials: BTreeSet<String> = if specials.is_empty() {
                named.iter().map(|s| s.vertex.clone()).collect()
            } else {
                specials.iter().cloned().collect()
            };
            (tq, specials, start)
        }
        Err(_) => {
            let tq = TranslationQuiver::from_json(&read_input(input)?)?;
            (tq, specials.iter().cloned().collect(), start.to_string())
        }
    };
    let steps = max_steps.unwrap_or_else(|| tq.default_max_steps());
    let state = knitting::knit_counts(&tq, &specials, &start, steps)?;
    let totals = state.totals();
    let grid = if trace {
        Some(knitting::grid_trace(&tq, &specials, &start, steps)?)
    } else {
        None
    };
    if format == Format::Text {
        println!("start {start}, zero layer at step {}", state.stop);
        for s in &specials {
            println!("{s}\t{}", totals[s]);
        }
        if let Some(grid) = grid {
            print!("{}", grid.render());
        }
    } else {
        let per_step: BTreeMap<String, Vec<u64>> = (0..tq.len())
            .filter(|&v| state.total_at(v) > 0)
            .map(|v| (tq.ids()[v].clone(), state.per_step(v)))
            .collect();
        let mut out = json!({
            "start": start,
            "stop": state.stop,
            "special_totals": state.special_totals(),
            "totals": totals.into_iter().filter(|(_, k)| *k > 0).collect::<BTreeMap<_, _>>(),
            "per_step": per_step,
        });
        if let Some(grid) = grid {
            out["grid"] = json!(grid.render());
        }
        print_json(&out);
    }
    Ok(())
}

struct SweepRow {
    case: String,
    check: &'static str,
    passed: bool,
    detail: String,
}

fn sweep_case(id: &GroupId) -> Vec<SweepRow> {
    let mut rows = Vec::new();
    let mut push = |check, result: Result<Option<String>, Error>| {
        let (passed, detail) = match result {
            Ok(None) => (true, String::new()),
            Ok(Some(d)) => (false, d),
            Err(e) => (false, e.to_string()),
        };
        rows.push(SweepRow {
            case: id.to_string(),
            check,
            passed,
            detail,
        });
    };
    let g = match catalog::dual_graph(id) {
        Ok(g) => g,
        Err(e) => {
            push("graph", Err(e));
            return rows;
        }
    };
    let built = quiver::build_quiver(&g);
    push(
        "expected quiver",
        (|| {
            let diffs = built
                .as_ref()
                .map_err(clone_err)?
                .arrow_differences(&catalog::expected_quiver(id)?);
            Ok((!diffs.is_empty()).then(|| format!("{diffs:?}")))
        })(),
    );
    push(
        "rules",
        (|| {
            let diffs = rules::apply_rules(&g)?.arrow_differences(built.as_ref().map_err(clone_err)?);
            Ok((!diffs.is_empty()).then(|| format!("{diffs:?}")))
        })(),
    );
    push(
        "dimensions",
        (|| {
            let gorenstein = g.self_intersections().iter().all(|&s| s == -2);
            let gd = quiver::global_dimension(&g)?;
            if gd != if gorenstein { 2 } else { 3 } {
                return Ok(Some(format!("global dimension {gd}")));
            }
            let same = quiver::projective_dimensions(&g)? == quiver::projective_dimensions_by_cases(&g)?;
            Ok((!same).then(|| "projective dimensions differ from the case description".to_string()))
        })(),
    );
    push(
        "euler identity",
        (|| {
            let table = quiver::ext_table(&g)?;
            let zf = graph::fundamental_cycle(&g)?;
            for id in g.ids() {
                let e = |t| table.get(id, STAR, t).unwrap_or(0) as i64;
                let rhs = -graph::pairing_with_curve(&g, &zf, id)?;
                if e(1) - e(2) + e(3) != rhs {
                    return Ok(Some(format!("fails at {id}")));
                }
            }
            Ok(None)
        })(),
    );
    if let GroupId::I(m) = id {
        if knitting::build_i_ar_quiver(*m).is_ok_and(|(_, named)| named.is_some()) {
            push(
                "knitting",
                knitting::cross_check_report(id).map(|r| {
                    let bad: Vec<String> = r.mismatches().map(|e| format!("{}->{}", e.from, e.to)).collect();
                    (!bad.is_empty()).then(|| bad.join(", "))
                }),
            );
        }
    }
    rows
}

/// Runs every case on scoped worker threads; rows keep the order of `ids`.
fn sweep_all(ids: &[GroupId]) -> Vec<SweepRow> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = ids.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = ids
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().flat_map(sweep_case).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("sweep workers do not panic"))
            .collect()
    })
}

fn clone_err(e: &Error) -> Error {
    Error::InvalidGraph(e.to_string())
}

fn sweep(b: Option<u64>, format: Format) -> Outcome {
    reject_dot(format)?;
    if b.is_some_and(|b| b < 2) {
        return Err(Failure::Usage("--b must be at least 2".into()));
    }
    let mut ids = catalog::cyclic_groups(60);
    ids.extend(catalog::dihedral_groups(60));
    match b {
        Some(b) => ids.extend(catalog::star_groups([b])),
        None => ids.extend(catalog::star_groups(2..=6)),
    }
    if b.is_none() || b == Some(2) {
        ids.push(GroupId::I(7));
    }
    let rows = sweep_all(&ids);
    let failed = rows.iter().filter(|r| !r.passed).count();
    if format == Format::Json {
        let cases: Vec<Value> = rows
            .iter()
            .map(|r| json!({ "case": r.case, "check": r.check, "passed": r.passed, "detail": r.detail }))
            .collect();
        print_json(&json!({ "checks": rows.len(), "failed": failed, "results": cases }));
    } else {
        let mut by_check: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for r in &rows {
            let entry = by_check.entry(r.check).or_default();
            entry.0 += 1;
            entry.1 += usize::from(!r.passed);
        }
        println!("{:<18} {:>6} {:>6}  result", "check", "cases", "failed");
        for (check, (n, bad)) in &by_check {
            println!(
                "{check:<18} {n:>6} {bad:>6}  {}",
                if *bad == 0 { "PASS" } else { "FAIL" }
            );
        }
        for r in rows.iter().filter(|r| !r.passed) {
            println!("FAIL {} {}: {}", r.case, r.check, r.detail);
        }
        println!("{} groups, {} checks, {failed} failed", ids.len(), rows.len());
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} sweep checks failed")))
    }
}

fn run(args: Args) -> Outcome {
    match args.command {
        Command::Validate { input } => validate(&input),
        Command::Cycle { input, format } => cycle(&input, format),
        Command::Quiver { input, format } => quiver_cmd(&input, format),
        Command::Rules { input, format, trace } => rules_cmd(&input, format, trace),
        Command::Group {
            spec,
            format,
            graph,
            quiver,
            knit,
            cross_check,
        } => group(&spec, format, graph, quiver, knit, cross_check),
        Command::Knit {
            input,
            start,
            specials,
            max_steps,
            trace,
            format,
        } => knit(&input, &start, &specials, max_steps, trace, format),
        Command::Sweep { b, format } => sweep(b, format),
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            let kind = match &e {
                Error::Json(_) => "malformed json",
                Error::BadGroupSpec(_) | Error::InvalidParams(_) => "bad group spec",
                Error::NonTermination { .. } => "knitting did not terminate",
                _ => "error",
            };
            eprintln!("{kind}: {e}");
            ExitCode::from(1)
        }
    }
}
