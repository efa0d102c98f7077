use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use spinclique::cartan::{self, GraphSpinor};
use spinclique::matroot::sqrt_root;
use spinclique::motzkin::{maximize_ms, Objective, DEFAULT_STARTS};
use spinclique::verify::{verify_instance, Status};
use spinclique::{oracle, Graph, Limits, VertexSet};

#[derive(Parser, Debug)]
#[command(name = "spinclique", version, about = "Maximum clique through null vectors and pure spinors")]
struct Cli {
    /// Seed for every randomized path.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cap on enumerated maximal cliques.
    #[arg(long, global = true)]
    max_cliques: Option<usize>,

    /// Largest n for dense 2^n computations (Φ(𝟙), Cartan kernels, subset scans).
    #[arg(long, global = true)]
    max_n_dense: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Maximum clique size and witness.
    Solve {
        /// DIMACS edge file, or `-` for stdin.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        #[arg(long)]
        json: bool,
        /// Restarts for the motzkin method.
        #[arg(long, default_value_t = DEFAULT_STARTS)]
        starts: usize,
        /// Use the unregularized objective xᵀAx for the motzkin method.
        #[arg(long)]
        plain: bool,
    },
    /// Dump the graph spinor Ψ(Ā) as JSON.
    Spinor {
        file: PathBuf,
        /// Random nonzero ξ per component (from --seed) instead of all ones.
        #[arg(long)]
        random_xi: bool,
    },
    /// Eigen-data and residuals of the square root A = B².
    Decompose {
        file: PathBuf,
        /// Include B as row-major [re, im] pairs.
        #[arg(long)]
        with_b: bool,
    },
    /// Run the invariant suite on one instance; exits 1 on any failure.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Spinor,
    Motzkin,
    Binary,
    All,
}

enum Failure {
    /// Bad input or a guard tripped: exit 2.
    Input(String),
    /// A check ran and failed: exit 1.
    Verification(String),
}

impl From<spinclique::Error> for Failure {
    fn from(e: spinclique::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if let Some(m) = cli.max_cliques {
        l.max_cliques = m;
    }
    if let Some(n) = cli.max_n_dense {
        l = l.with_dense_n(n);
    }
    l
}

fn load(path: &PathBuf) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    Graph::parse_dimacs(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let limits = limits(cli);
    match &cli.command {
        Command::Solve { file, method, json, starts, plain } => {
            let g = load(file)?;
            let objective = if *plain { Objective::Plain } else { Objective::Regularized };
            solve(&g, *method, *json, *starts, objective, cli.seed, &limits)
        }
        Command::Spinor { file, random_xi } => {
            let g = load(file)?;
            let psi = if *random_xi {
                cartan::psi_of_graph_seeded(&g, cli.seed)?
            } else {
                GraphSpinor::new(&g, &limits)?.psi
            };
            Ok(to_json(&psi.to_json()))
        }
        Command::Decompose { file, with_b } => {
            let g = load(file)?;
            let d = sqrt_root(&g.adjacency_matrix())?;
            Ok(to_json(&d.report(*with_b)))
        }
        Command::Verify { file, json } => {
            let g = load(file)?;
            let report = verify_instance(&g, cli.seed, &limits);
            let out = if *json {
                to_json(&report)
            } else {
                let mut s = String::new();
                for c in &report.checks {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Skipped => "SKIP",
                    };
                    s.push_str(&format!("{tag}  {:<28} {}\n", c.name, c.detail));
                }
                let failed = report.checks.iter().filter(|c| c.status == Status::Fail).count();
                s.push_str(&format!("{} checks, {failed} failed\n", report.checks.len()));
                s
            };
            if report.passed { Ok(out) } else { Err(Failure::Verification(out)) }
        }
    }
}

fn answer(method: &str, k: usize, witness: &VertexSet) -> Value {
    json!({ "method": method, "k": k, "witness": witness.labels() })
}

fn solve(
    g: &Graph,
    method: Method,
    as_json: bool,
    starts: usize,
    objective: Objective,
    seed: u64,
    limits: &Limits,
) -> Result<String, Failure> {
    let oracle_answer = || -> Result<Value, Failure> {
        let (k, w) = oracle::max_clique_exact_with(g, limits)?;
        Ok(answer("oracle", k, &w))
    };
    let spinor_answer = || -> Result<Value, Failure> {
        let gs = GraphSpinor::new(g, limits)?;
        let (k, w) = gs.max_clique();
        let mut v = answer("spinor", k, &w);
        v["components"] = json!(gs.psi.nnz());
        Ok(v)
    };
    let binary_answer = || -> Result<Value, Failure> {
        let (k, w) = cartan::solve_binary_form_with(g, limits)?;
        Ok(answer("binary", k, &w))
    };
    let motzkin_answer = || -> Result<Value, Failure> {
        let r = maximize_ms(g, objective, starts, seed)?;
        let mut v = answer("motzkin", r.k_estimate, &r.support);
        v["detail"] = serde_json::to_value(&r).expect("serializable");
        Ok(v)
    };

    let (value, agree) = match method {
        Method::Oracle => (oracle_answer()?, true),
        Method::Spinor => (spinor_answer()?, true),
        Method::Binary => (binary_answer()?, true),
        Method::Motzkin => (motzkin_answer()?, true),
        Method::All => {
            let (o, s, b, m) = (oracle_answer()?, spinor_answer()?, binary_answer()?, motzkin_answer()?);
            let agree = o["k"] == s["k"] && o["k"] == b["k"];
            (json!({ "agree": agree, "oracle": o, "spinor": s, "binary": b, "motzkin": m }), agree)
        }
    };

    let out = if as_json {
        to_json(&value)
    } else if method == Method::All {
        let mut s = String::new();
        for key in ["oracle", "spinor", "binary", "motzkin"] {
            s.push_str(&format!("{key:<8} {}\n", human(&value[key])));
        }
        s.push_str(if agree { "oracle = spinor = binary\n" } else { "MISMATCH between exact methods\n" });
        s
    } else {
        format!("{}\n", human(&value))
    };
    if agree { Ok(out) } else { Err(Failure::Verification(out)) }
}

fn human(v: &Value) -> String {
    let labels: Vec<String> =
        v["witness"].as_array().map(|a| a.iter().map(|x| x.to_string()).collect()).unwrap_or_default();
    let mut s = format!("k = {}, witness = {{{}}}", v["k"], labels.join(","));
    if let Some(c) = v.get("components") {
        s.push_str(&format!(", Ψ components = {c}"));
    }
    if let Some(d) = v.get("detail") {
        s.push_str(&format!(", value = {}", d["value"]));
        if d["verified"] != true {
            s.push_str(" (unverified estimate: support is not a clique of size k)");
        }
    }
    s
}
