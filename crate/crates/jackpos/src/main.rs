use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jackpos::checks::{exit_code, CheckId, Harness, Params};
use jackpos::report::{results_table, Report};
use jackpos::{HarnessError, JackStore, Result};
use jackpos_core::exactmath::{to_falling_basis, to_shifted_basis, BigRational};
use jackpos_core::rook::{content_board, hit_numbers, hook_boards, rook_numbers, FerrersBoard};
use jackpos_core::tableaux::{generate_qyt, generate_syt, qyt_counts, render};
use jackpos_core::words::{restricted_to_pair, rsk};
use jackpos_core::{Partition, Perm};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(name = "jackpos", version, about = "Exact checks of Jack polynomial positivity in binomial bases")]
struct Cli {
    /// Directory for cached Jack expansions (one JSON file per degree).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schur coefficients of tilde J_mu in a chosen basis.
    Compute {
        #[arg(long)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = CoeffBasis::Shifted)]
        basis: CoeffBasis,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run one check.
    Verify {
        #[arg(long)]
        check: CheckId,
        #[arg(long)]
        n: Option<usize>,
        /// Extra `key=value` parameters: n, marginals, fault (mu;lambda;k).
        #[arg(long = "params", value_delimiter = ',')]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run checks for every n up to a bound.
    Sweep(SweepArgs),
    /// List the catalog.
    Checks,
    /// Standard and quasi-Yamanouchi tableaux of a shape.
    Tableaux {
        #[arg(long)]
        shape: Partition,
        /// Print every tableau, not only counts.
        #[arg(long)]
        list: bool,
    },
    /// Rook and hit numbers of a Ferrers board.
    Rook {
        /// Column heights, e.g. 1,1,2,3.
        #[arg(long, conflicts_with_all = ["content", "hook"])]
        board: Option<FerrersBoard>,
        /// Content board of a partition.
        #[arg(long, conflicts_with = "hook")]
        content: Option<Partition>,
        /// The two boards of the hook (n - l, 1^l), given as n,l.
        #[arg(long, value_delimiter = ',')]
        hook: Option<Vec<usize>>,
    },
    /// RSK of a permutation, optionally the restricted pair for a shape.
    Rsk {
        #[arg(long)]
        perm: Perm,
        #[arg(long)]
        lambda: Option<Partition>,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Restrict to these checks (comma separated).
    #[arg(long, value_delimiter = ',')]
    checks: Vec<CheckId>,
    /// Also check the per-index marginals in C5/C6.
    #[arg(long)]
    marginals: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffBasis {
    Shifted,
    Falling,
    Poly,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let store = match &cli.cache_dir {
        Some(d) => JackStore::with_dir(d),
        None => JackStore::in_memory(),
    };
    let harness = Harness::new(store);
    match run(&harness, cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(harness: &Harness, command: Command) -> Result<i32> {
    match command {
        Command::Compute { mu, basis, format } => compute(harness, &mu, basis, format),
        Command::Verify { check, n, params, format } => {
            let mut p = Params::new(n.unwrap_or(0));
            for kv in &params {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| HarnessError::BadParam(format!("{kv:?} is not key=value")))?;
                p.set(k, v)?;
            }
            if p.n == 0 {
                return Err(HarnessError::BadParam("n is required (--n or --params n=...)".into()));
            }
            let r = harness.run_check(check, &p);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&r)?),
                Format::Csv => print!("{}", csv_results(std::slice::from_ref(&r))),
                Format::Table => print!("{}", results_table(std::slice::from_ref(&r))),
            }
            Ok(exit_code(r.status))
        }
        Command::Sweep(a) => {
            let checks = if a.checks.is_empty() { CheckId::ALL.to_vec() } else { a.checks };
            let base = Params { marginals: a.marginals, ..Params::default() };
            let start = Instant::now();
            let results = harness.sweep(a.n_max, &checks, a.jobs, &base)?;
            let report = Report::new(a.n_max, a.jobs, start.elapsed().as_secs_f64(), results);
            if let Some(path) = &a.out {
                report.write_json(path)?;
            }
            match a.format {
                Format::Json => println!("{}", report.to_json()?),
                Format::Csv => print!("{}", csv_results(&report.results)),
                Format::Table => print!("{}", report.table()),
            }
            Ok(exit_code(report.status))
        }
        Command::Checks => {
            for c in CheckId::ALL {
                println!("{:<15} n <= {:<2}  {}", c.name(), c.max_n(), c.about());
            }
            Ok(0)
        }
        Command::Tableaux { shape, list } => {
            let syt = generate_syt(&shape);
            println!("shape {shape}: {} standard tableaux", syt.len());
            let q = qyt_counts(&shape);
            let counts: Vec<String> = q.iter().enumerate().map(|(i, c)| format!("m={}:{c}", i + 1)).collect();
            println!("quasi-Yamanouchi with max m: {}", counts.join(" "));
            if list {
                for t in generate_qyt(&shape) {
                    println!("{}\n", render(&t));
                }
            }
            Ok(0)
        }
        Command::Rook { board, content, hook } => {
            let boards: Vec<(String, FerrersBoard)> = if let Some(b) = board {
                vec![("board".into(), b)]
            } else if let Some(lam) = content {
                vec![(format!("content board of {lam}"), content_board(&lam)?)]
            } else if let Some(h) = hook {
                if h.len() != 2 {
                    return Err(HarnessError::BadParam("--hook takes n,l".into()));
                }
                let (c, d) = hook_boards(h[0], h[1])?;
                vec![("B_c".into(), c), ("B_d".into(), d)]
            } else {
                return Err(HarnessError::BadParam("one of --board, --content, --hook is required".into()));
            };
            for (label, b) in boards {
                println!("{label}: {b}");
                println!("  rook {}", join(&rook_numbers(&b)));
                println!("  hit  {}", join(&hit_numbers(&b)));
            }
            Ok(0)
        }
        Command::Rsk { perm, lambda } => {
            let (p, q) = match &lambda {
                Some(lam) => restricted_to_pair(&perm, lam)?,
                None => rsk(&perm),
            };
            println!("P =\n{}\nQ =\n{}", render(&p), render(&q));
            Ok(0)
        }
    }
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn compute(harness: &Harness, mu: &Partition, basis: CoeffBasis, format: Format) -> Result<i32> {
    let n = mu.size();
    let data = harness.store().schur(n)?;
    let e = data
        .get(mu)
        .ok_or_else(|| HarnessError::BadParam(format!("{mu} is not a partition of {n}")))?;
    let mut rows: Vec<(Partition, Vec<String>)> = Vec::new();
    for lam in data.kostka.partitions() {
        let c = e.coeff(lam);
        let cells: Vec<String> = match basis {
            CoeffBasis::Poly => vec![c.to_string()],
            CoeffBasis::Shifted => to_shifted_basis(&c, n)?.iter().map(BigRational::to_string).collect(),
            CoeffBasis::Falling => to_falling_basis(&c, n)?.iter().map(BigRational::to_string).collect(),
        };
        rows.push((lam.clone(), cells));
    }
    match format {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = rows
                .into_iter()
                .map(|(lam, cells)| (lam.to_string(), serde_json::Value::from(cells)))
                .collect();
            let doc = serde_json::json!({
                "mu": mu.to_string(),
                "basis": match basis { CoeffBasis::Shifted => "shifted", CoeffBasis::Falling => "falling", CoeffBasis::Poly => "poly" },
                "coeffs": map,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        Format::Csv => {
            for (lam, cells) in rows {
                println!("\"{lam}\",{}", cells.join(","));
            }
        }
        Format::Table => {
            let w = rows.iter().map(|(l, _)| l.to_string().len()).max().unwrap_or(0).max(6);
            let head = match basis {
                CoeffBasis::Shifted => format!("a_0 .. a_{}", n - 1),
                CoeffBasis::Falling => format!("b_0 .. b_{}", n - 1),
                CoeffBasis::Poly => "coefficient".into(),
            };
            println!("{:<w$}  {head}", "lambda");
            for (lam, cells) in rows {
                println!("{:<w$}  {}", lam.to_string(), cells.join(" "));
            }
        }
    }
    Ok(0)
}

fn csv_results(results: &[jackpos::CheckResult]) -> String {
    let mut out = String::from("check,n,status,count,secs,witness\n");
    for r in results {
        let note = r
            .witness
            .as_ref()
            .map(ToString::to_string)
            .or_else(|| r.error.clone())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{:.3},\"{}\"\n",
            r.check_id,
            r.params.get("n").map(String::as_str).unwrap_or(""),
            r.status,
            r.counts,
            r.elapsed,
            note.replace('"', "\"\"")
        ));
    }
    out
}
