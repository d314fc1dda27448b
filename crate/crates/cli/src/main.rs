use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hnk_core::counts::{monotonicity_check, symmetry_holds, u_sequence, SequenceFamily};
use hnk_core::report::{aut_report_entry, run_verification, VerifyConfig};
use hnk_core::symmetries::predicted_aut_order;
use hnk_core::transitivity::{check_classification, classification_graph, is_s_geodesic_transitive};
use hnk_core::{build_graph, Component, GraphParams, HnkError};

#[derive(Parser)]
#[command(name = "hnk", version, about = "Build and check the symmetric-difference graphs H(n,k)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct GraphArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Restrict to the odd or even subsets (even k only).
    #[arg(long, value_parser = parse_component)]
    component: Option<Component>,
}

impl GraphArgs {
    fn params(self) -> hnk_core::Result<GraphParams> {
        GraphParams::new(self.n, self.k, self.component.unwrap_or(Component::Whole))
    }
}

fn parse_component(s: &str) -> Result<Component, String> {
    s.parse().map_err(|e: HnkError| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Export a graph as DOT or JSON.
    Graph {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Compare the predicted automorphism-group order with a brute-force count.
    Aut {
        #[command(flatten)]
        graph: GraphArgs,
        /// Run the search instead of only printing the prediction.
        #[arg(long)]
        brute_force: bool,
        #[arg(long)]
        json: bool,
        /// Treat disagreements on open cases as failures.
        #[arg(long)]
        strict: bool,
    },
    /// Arc- and geodesic-transitivity verdicts.
    Geodesic {
        #[command(flatten)]
        graph: GraphArgs,
        /// Check s-geodesic transitivity for this s.
        #[arg(long, conflicts_with = "full", required_unless_present = "full")]
        s: Option<usize>,
        /// Check up to the diameter and compare with the classification.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        json: bool,
    },
    /// Neighbour-count sequence tables.
    Seq {
        #[arg(long, value_parser = parse_family)]
        family: SequenceFamily,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
    /// Run the verification suite and write its report.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random permutations drawn per grid point.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long)]
        strict: bool,
        /// Include per-claim runtimes (makes the output run-dependent).
        #[arg(long)]
        timings: bool,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_family(s: &str) -> Result<SequenceFamily, String> {
    s.parse().map_err(|e: HnkError| e.to_string())
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: Cli) -> hnk_core::Result<u8> {
    match cli.command {
        Command::Graph { graph, format } => {
            let g = build_graph(graph.params()?)?;
            match format {
                GraphFormat::Dot => print!("{}", g.to_dot()),
                GraphFormat::Json => println!("{}", json_line(&g.to_export())),
            }
            Ok(0)
        }
        Command::Aut { graph, brute_force, json, strict } => {
            let params = graph.params()?;
            let prediction = predicted_aut_order(graph.n, graph.k);
            if !brute_force {
                if json {
                    println!("{}", json_line(&prediction));
                } else {
                    let value = match params.component {
                        Component::Whole => &prediction.value,
                        _ => &prediction.component_value,
                    };
                    let case = serde_json::to_value(prediction.case_tag).expect("serializable");
                    println!("graph      {}", params.label());
                    match value {
                        Some(v) => println!("predicted  {v}  [{}]", case.as_str().unwrap_or("")),
                        None => println!("predicted  unknown  [{}]", case.as_str().unwrap_or("")),
                    }
                    println!("oracle     not run (pass --brute-force)");
                }
                return Ok(0);
            }
            let g = build_graph(params)?;
            let entry = aut_report_entry(&g)?;
            let failed = entry.agrees == Some(false) && (strict || !entry.open_question);
            if json {
                println!("{}", json_line(&entry));
            } else {
                println!("graph      {}", params.label());
                match &entry.predicted_order {
                    Some(p) => println!("predicted  {p}"),
                    None => println!("predicted  unknown"),
                }
                println!(
                    "oracle     {}  = {} x {}",
                    entry.oracle_order,
                    g.vertex_count(),
                    entry.stabilizer_order
                );
                println!(
                    "outside    {} stabilizer {} outside the known group",
                    entry.elements_outside_known_group, entry.counted_over
                );
                if let Some(w) = &entry.witness {
                    println!("witness    {}", w.reason);
                    let moved: Vec<String> = w.moved.iter().map(|(a, b)| format!("{a}->{b}")).collect();
                    println!("           {}", moved.join(" "));
                }
                let verdict = match entry.agrees {
                    Some(true) => "AGREE",
                    Some(false) if entry.open_question => "DISAGREE (open question)",
                    Some(false) => "DISAGREE",
                    None => "NO PREDICTION",
                };
                println!("verdict    {verdict}");
            }
            Ok(u8::from(failed))
        }
        Command::Geodesic { graph, s, full, json } => {
            let g = match graph.component {
                Some(_) => build_graph(graph.params()?)?,
                None => classification_graph(graph.n, graph.k)?,
            };
            if full {
                let (check, verdict) = check_classification(graph.n, graph.k)?;
                if json {
                    println!("{}", json_line(&check));
                } else {
                    println!("graph                {}", verdict.graph);
                    println!("diameter             {}", verdict.diameter);
                    println!("arc-transitive       {}", yes(verdict.arc_transitive));
                    for (i, c) in verdict.orbit_counts.iter().enumerate() {
                        println!("s={:<19}{c} orbit{}", i + 1, if *c == 1 { "" } else { "s" });
                    }
                    for p in &verdict.representatives {
                        println!("  representative     {p}");
                    }
                    println!("geodesic-transitive  {}", yes(verdict.geodesic_transitive));
                    let agreement = match check.agrees_with_claim {
                        Some(true) => "AGREE",
                        Some(false) => "DISAGREE",
                        None => "UNCLASSIFIED",
                    };
                    println!("classification       {}  {agreement}", check.classification.as_str());
                }
                return Ok(u8::from(check.agrees_with_claim == Some(false)));
            }
            let s = s.expect("clap requires --s without --full");
            let check = is_s_geodesic_transitive(&g, s)?;
            if json {
                println!("{}", json_line(&check));
            } else {
                println!("graph                {}", g.params().label());
                for (i, c) in check.orbit_counts.iter().enumerate() {
                    println!("s={:<19}{c} orbit{}", i + 1, if *c == 1 { "" } else { "s" });
                }
                for p in &check.representatives {
                    println!("  representative     {p}");
                }
                println!("{s}-geodesic-transitive {}", yes(check.holds));
            }
            Ok(0)
        }
        Command::Seq { family, k, n, format } => {
            let table = u_sequence(family, k, n)?;
            let verdict = monotonicity_check(&table);
            match format {
                TableFormat::Json => println!("{}", json_line(&table)),
                TableFormat::Text => {
                    print!("{}", table.render());
                    match &verdict.first_violation {
                        None => println!("shape holds over {} checked steps", verdict.steps_checked),
                        Some(v) => println!("shape fails at step {}: expected {:?}, found {:?}", v.index, v.expected, v.found),
                    }
                    if let Some(sym) = symmetry_holds(&table) {
                        println!("mirror symmetry {}", yes(sym));
                    }
                }
            }
            Ok(u8::from(!verdict.holds()))
        }
        Command::Verify { max_n, seed, samples, strict, timings, out } => {
            let report = run_verification(&VerifyConfig { max_n, seed, samples, timings })?;
            let text = json_line(&report);
            match out {
                Some(path) => {
                    std::fs::write(&path, text + "\n")
                        .map_err(|e| HnkError::Usage(format!("cannot write {}: {e}", path.display())))?;
                    for e in &report.entries {
                        println!("{}", e.line());
                    }
                    let s = &report.summary;
                    println!(
                        "verified {}  refuted {}  refuted (open question) {}  unknown {}  skipped {}",
                        s.verified, s.refuted, s.refuted_open_question, s.unknown, s.skipped
                    );
                }
                None => println!("{text}"),
            }
            Ok(report.exit_code(strict) as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(HnkError::Internal(msg)) => {
            eprintln!("error: internal check failed: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
