//! Command-line front end: check, certify, oracle, gen, selftest.
//!
//! Exit codes: 0 success/certified, 1 hypotheses or condition failed,
//! 2 input/parse error, 3 internal guarantee violation (the instance is
//! dumped), 4 search budget exhausted. JSON on stdout is the machine
//! interface; everything else is decorative.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};
use serde_json::json;

use bipan::budget::{SearchBudget, DEFAULT_BUDGET};
use bipan::certifier::{certify_even_pancyclic_with_budget, CertStatus};
use bipan::conditions::{check_condition_a, check_dominating_pair_max_degree, check_meyniel_nonadjacent};
use bipan::families;
use bipan::graph::{parse, AnyGraph, BipartiteDigraph};
use bipan::oracle::{cycle_length_spectrum, cycle_length_spectrum_bipartite, validate_certificate, OracleError};

const EXIT_OK: u8 = 0;
const EXIT_CONDITION_FAILED: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_GUARANTEE_VIOLATION: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "bipan", about = "Even-pancyclicity certificates for balanced bipartite digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the degree and connectivity conditions of a graph file
    Check {
        file: PathBuf,
        /// Degree-sum margin k of condition A_k
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Certify even pancyclicity of a bipartite graph file
    Certify {
        file: PathBuf,
        /// Emit the full report as JSON
        #[arg(long)]
        json: bool,
        /// Node-expansion budget (overrides BIPAN_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print the exact cycle-length spectrum of a graph file
    Oracle {
        file: PathBuf,
        /// Largest cycle length to search (default: graph order)
        #[arg(long)]
        max_len: Option<usize>,
        /// Also print a witness cycle per length
        #[arg(long)]
        verbose: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Generate a named graph family into a file
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run the bundled fixture and sweep corpus end to end
    Selftest {
        /// Restrict the sweep to a <= 5 instances
        #[arg(long)]
        quick: bool,
        /// Test hook: corrupt one certificate before validation
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Complete bipartite digraph K*_{a,b}
    Complete {
        a: usize,
        b: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The order-8 fixture digraph
    D8 {
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Arc-maximal member of the forbidden-cycle-length family
    Phi {
        n: usize,
        m: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Degree-sum-tight non-strong construction of half-order a (even)
    Remark {
        a: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Seeded random instance satisfying condition A_k
    Random {
        a: usize,
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn default_budget(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("BIPAN_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_BUDGET)
}

fn read_graph(path: &PathBuf) -> Result<AnyGraph, u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_INPUT_ERROR
    })?;
    parse(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        EXIT_INPUT_ERROR
    })
}

fn cmd_check(file: PathBuf, k: usize) -> u8 {
    let graph = match read_graph(&file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match graph {
        AnyGraph::Bipartite(g) => {
            let a = check_condition_a(&g, k);
            let strong = g.strongly_connected();
            let out = json!({
                "condition_a": a,
                "k": k,
                "strong": strong,
                "dominating_pair_max_degree": check_dominating_pair_max_degree(&g),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            if a.holds && strong {
                EXIT_OK
            } else {
                EXIT_CONDITION_FAILED
            }
        }
        AnyGraph::General(g) => {
            let m = check_meyniel_nonadjacent(&g);
            let strong = g.strongly_connected();
            let out = json!({
                "meyniel_nonadjacent": m,
                "strong": strong,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            if m.holds && strong {
                EXIT_OK
            } else {
                EXIT_CONDITION_FAILED
            }
        }
    }
}

fn dump_counterexample(g: &BipartiteDigraph, missing: &[usize]) -> PathBuf {
    let stamp = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis())
        .unwrap_or(0);
    let path = PathBuf::from(format!("bipan-counterexample-{stamp}.bdg"));
    let mut text = String::new();
    text.push_str("# instance with a missing guaranteed cycle length\n");
    text.push_str(&format!("# missing even lengths: {missing:?}\n"));
    text.push_str(&g.serialize());
    let _ = fs::write(&path, text);
    path
}

fn cmd_certify(file: PathBuf, as_json: bool, budget: Option<u64>) -> u8 {
    let g = match read_graph(&file) {
        Ok(AnyGraph::Bipartite(g)) => g,
        Ok(AnyGraph::General(_)) => {
            eprintln!("error: certify needs a bipartite (bdg) input");
            return EXIT_INPUT_ERROR;
        }
        Err(code) => return code,
    };
    let report = certify_even_pancyclic_with_budget(&g, default_budget(budget));
    let valid = validate_certificate(&g, &report);
    if as_json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        let lengths: Vec<usize> = report.certificate.keys().copied().collect();
        println!("status: {}", serde_json::to_value(report.status).unwrap().as_str().unwrap());
        println!("certified lengths: {lengths:?}");
    }
    if !valid {
        let missing: Vec<usize> = report.certificate.keys().copied().collect();
        let path = dump_counterexample(&g, &missing);
        eprintln!(
            "error: certificate failed independent validation; instance dumped to {}",
            path.display()
        );
        return EXIT_GUARANTEE_VIOLATION;
    }
    match report.status {
        CertStatus::Certified => EXIT_OK,
        CertStatus::HypothesesNotMet => EXIT_CONDITION_FAILED,
        CertStatus::BudgetExhausted => EXIT_BUDGET,
        CertStatus::GuaranteeViolated => {
            let a = g.half_order();
            let missing: Vec<usize> = (1..=a)
                .map(|k| 2 * k)
                .filter(|l| !report.certificate.contains_key(l))
                .collect();
            let path = dump_counterexample(&g, &missing);
            eprintln!(
                "error: guarantee violated (missing lengths {missing:?}); instance dumped to {}",
                path.display()
            );
            EXIT_GUARANTEE_VIOLATION
        }
    }
}

fn cmd_oracle(file: PathBuf, max_len: Option<usize>, verbose: bool, budget: Option<u64>) -> u8 {
    let graph = match read_graph(&file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let mut b = SearchBudget::new(default_budget(budget));
    let result = match &graph {
        AnyGraph::Bipartite(g) => {
            let max = max_len.unwrap_or(g.order()).min(g.order());
            cycle_length_spectrum_bipartite(g, max, &mut b)
        }
        AnyGraph::General(g) => {
            let max = max_len.unwrap_or(g.order()).min(g.order());
            cycle_length_spectrum(g, max, &mut b)
        }
    };
    match result {
        Ok(spectrum) => {
            let lens: Vec<String> = spectrum.lengths.iter().map(|l| l.to_string()).collect();
            println!("{}", lens.join(" "));
            if verbose {
                for &l in &spectrum.lengths {
                    let w = spectrum.witness(l).unwrap();
                    let tokens: Vec<String> = match &graph {
                        AnyGraph::Bipartite(g) => {
                            w.iter().map(|&i| g.from_general_index(i).to_string()).collect()
                        }
                        AnyGraph::General(_) => w.iter().map(|i| i.to_string()).collect(),
                    };
                    println!("# {l}: {}", tokens.join(" "));
                }
            }
            EXIT_OK
        }
        Err(e @ OracleError::Budget { .. }) => {
            eprintln!("error: {e}");
            EXIT_BUDGET
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn cmd_gen(kind: GenKind) -> u8 {
    let (graph, output): (Result<AnyGraph, String>, PathBuf) = match kind {
        GenKind::Complete { a, b, output } => {
            if a == 0 || b == 0 {
                (Err("partite sets must be nonempty".into()), output)
            } else {
                (Ok(families::complete_bipartite(a, b)), output)
            }
        }
        GenKind::D8 { output } => (Ok(AnyGraph::Bipartite(families::d8())), output),
        GenKind::Phi { n, m, output } => (
            families::phi_maximal(n, m)
                .map(|(g, _)| AnyGraph::General(g))
                .map_err(|e| e.to_string()),
            output,
        ),
        GenKind::Remark { a, output } => (
            families::remark_family(a)
                .map(AnyGraph::Bipartite)
                .map_err(|e| e.to_string()),
            output,
        ),
        GenKind::Random { a, k, seed, output } => (
            families::random_condition_a(a, k, seed)
                .map(AnyGraph::Bipartite)
                .map_err(|e| e.to_string()),
            output,
        ),
    };
    let graph = match graph {
        Ok(g) => g,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_INPUT_ERROR;
        }
    };
    if let Err(e) = fs::write(&output, graph.serialize()) {
        eprintln!("error: cannot write {}: {e}", output.display());
        return EXIT_INPUT_ERROR;
    }
    println!(
        "{} order={} arcs={}",
        output.display(),
        graph.order(),
        graph.arc_count()
    );
    EXIT_OK
}

fn cmd_selftest(quick: bool, inject_fault: bool) -> u8 {
    use bipan::oracle;

    let mut failures = 0usize;
    let mut ok = |name: &str, pass: bool| {
        println!("{}: {}", name, if pass { "pass" } else { "FAIL" });
        if !pass {
            failures += 1;
        }
    };

    // D(8) fixture claims
    let d8 = families::d8();
    let mut b = oracle::default_budget();
    let spectrum = cycle_length_spectrum_bipartite(&d8, 8, &mut b).unwrap();
    ok(
        "d8 spectrum {2,4,6}",
        spectrum.lengths.iter().copied().collect::<Vec<_>>() == vec![2, 4, 6],
    );
    ok("d8 strongly connected", d8.strongly_connected());
    ok("d8 dominating-pair bound", check_dominating_pair_max_degree(&d8).holds);
    ok("d8 fails condition A_0", !check_condition_a(&d8, 0).holds);

    // remark family
    for a in [2usize, 4] {
        let g = families::remark_family(a).unwrap();
        ok(&format!("remark({a}) not strong"), !g.strongly_connected());
        ok(&format!("remark({a}) satisfies A_0"), check_condition_a(&g, 0).holds);
    }

    // seeded random sweep
    let max_a = if quick { 5 } else { 8 };
    let seeds = if quick { 4u64 } else { 8 };
    for a in 3..=max_a {
        for seed in 0..seeds {
            let g = families::random_condition_a(a, 0, seed).unwrap();
            let mut report = certify_even_pancyclic_with_budget(&g, DEFAULT_BUDGET);
            if inject_fault {
                // corrupt the first certificate entry: duplicate a vertex
                if let Some(entry) = report.certificate.values_mut().next() {
                    let mut vs = entry.cycle.vertices().to_vec();
                    vs[0] = vs[1];
                    entry.cycle = serde_json::from_value(
                        serde_json::to_value(&vs).unwrap(),
                    )
                    .unwrap();
                }
            }
            let certified = report.status == CertStatus::Certified;
            let valid = validate_certificate(&g, &report);
            if !(certified && valid) {
                let path = dump_counterexample(&g, &[]);
                println!("selftest a={a} seed={seed}: FAIL (dumped {})", path.display());
                return EXIT_GUARANTEE_VIOLATION;
            }
        }
    }
    println!("selftest sweep: pass (a in [3,{max_a}], {seeds} seeds each)");

    if failures == 0 {
        EXIT_OK
    } else {
        EXIT_GUARANTEE_VIOLATION
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check { file, k } => cmd_check(file, k),
        Command::Certify { file, json, budget } => cmd_certify(file, json, budget),
        Command::Oracle { file, max_len, verbose, budget } => {
            cmd_oracle(file, max_len, verbose, budget)
        }
        Command::Gen { kind } => cmd_gen(kind),
        Command::Selftest { quick, inject_fault } => cmd_selftest(quick, inject_fault),
    };
    ExitCode::from(code)
}
