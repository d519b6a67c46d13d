//! `hypercover` — catalogs, cover sampling, trace-formula statistics and the
//! associated experiments, from the command line.
//!
//! Exit codes: 0 success, 2 catalog instability, 3 sampling budget
//! exhausted, 64 usage/config errors, 1 other failures.

mod config;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use hypercover::analysis::RadialTestFn as _;
use hypercover::analysis::{
    f_lambda0_inverse_fourier_support, selberg_kernel, SmoothBumpPhi, TestFunction,
};
use hypercover::covers::{
    moment_exact, sample_hom_rejection, CoverError, SampleBudget,
};
use hypercover::experiments::{
    markov_brothers_check, prediction_table_csv, run_variance_experiment, variance_csv,
    variance_summary_json, ExperimentError, GeodesicKernel, Poly, VarianceConfig,
};
use hypercover::rng::stream_rng;
use hypercover::surface_group::{build_catalog, build_genus2_group, SurfaceGroupError};
use hypercover::trace_formula::weyl_prediction;
use hypercover::GroupWord;
use rand::Rng;

use config::{resolve, ConfigFile};

#[derive(Parser)]
#[command(name = "hypercover", version, disable_help_subcommand = true)]
struct Cli {
    /// Master seed for all randomized commands.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (capped by HYPERCOVER_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// `key = value` config file; flags override its entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output path (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format for tabular commands.
    #[arg(long, global = true, value_parser = ["csv", "jsonl"])]
    format: Option<String>,
    /// Numeric tolerance echoed into consistency checks.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the primitive-geodesic catalog up to a length cutoff.
    Catalog {
        #[arg(long)]
        cutoff: Option<f64>,
    },
    /// Draw uniform random covers and dump the generator tuples.
    Sample {
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        count: Option<usize>,
    },
    /// Exact moments of permutation characters over small-degree covers.
    Moments {
        /// Semicolon-separated words, letters comma-separated (e.g. "1;1,2").
        #[arg(long)]
        words: Option<String>,
        /// Comma-separated degrees, each at most 5.
        #[arg(long)]
        degrees: Option<String>,
    },
    /// Monte Carlo variance decay of the geometric-side statistic.
    Variance {
        #[arg(long)]
        degrees: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        lambda0: Option<f64>,
        /// "window" for the (h∘f_Λ0)-transform kernel, "bump" for a plain even bump.
        #[arg(long)]
        kernel: Option<String>,
        #[arg(long)]
        center: Option<f64>,
        #[arg(long)]
        width: Option<f64>,
    },
    /// Weyl-law main-term counts over a Lambda grid.
    Weyl {
        #[arg(long)]
        lambda_max: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Predicted eigenvalue table with the Weyl roundtrip column.
    Predict {
        #[arg(long)]
        jmax: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Dump f, f-check, and a kernel transform on grids.
    Kernel {
        #[arg(long)]
        center: Option<f64>,
        #[arg(long)]
        width: Option<f64>,
    },
    /// Markov-brothers inequality fuzzing.
    Markov {
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        qmax: Option<usize>,
        #[arg(long)]
        kmax: Option<u32>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap help/version requests are normal exits
            if e.use_stderr() {
                eprintln!("{e}");
                std::process::exit(64);
            }
            print!("{e}");
            std::process::exit(0);
        }
    };
    match run(cli) {
        Ok(()) => {}
        Err((code, msg)) => {
            eprintln!("hypercover: {msg}");
            std::process::exit(code);
        }
    }
}

type CmdResult = Result<(), (i32, String)>;

fn usage<T: std::fmt::Display>(msg: T) -> (i32, String) {
    (64, msg.to_string())
}

fn map_experiment_err(e: ExperimentError) -> (i32, String) {
    match &e {
        ExperimentError::Cover(CoverError::BudgetExceeded(_, _)) => (3, e.to_string()),
        ExperimentError::Trace(hypercover::trace_formula::TraceError::BudgetExceeded(_)) => {
            (3, e.to_string())
        }
        _ => (1, e.to_string()),
    }
}

fn run(cli: Cli) -> CmdResult {
    let cfg = match &cli.config {
        Some(path) => ConfigFile::load(path).map_err(usage)?,
        None => ConfigFile::default(),
    };

    let threads = resolve(cli.threads, cfg.parse("threads").map_err(usage)?, 0usize);
    let env_cap = std::env::var("HYPERCOVER_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    let mut n_threads = if threads == 0 {
        std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
    } else {
        threads
    };
    if let Some(cap) = env_cap {
        n_threads = n_threads.min(cap.max(1));
    }
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n_threads).build_global();

    let seed = resolve(cli.seed, cfg.parse("seed").map_err(usage)?, 42u64);
    let format = resolve(
        cli.format.clone(),
        cfg.get("format").map(str::to_string),
        "csv".to_string(),
    );
    let tol = resolve(cli.tol, cfg.parse("tol").map_err(usage)?, 1e-8f64);

    match &cli.cmd {
        Cmd::Catalog { cutoff } => {
            let cutoff = resolve(*cutoff, cfg.parse("cutoff").map_err(usage)?, 3.2f64);
            let group = build_genus2_group().map_err(|e| (1, e.to_string()))?;
            let cat = build_catalog(&group, cutoff).map_err(|e| match e {
                SurfaceGroupError::CatalogUnstable(_, _, _, _)
                | SurfaceGroupError::CatalogBudget(_, _) => (2, e.to_string()),
                other => (1, other.to_string()),
            })?;
            emit(&cli, cat.to_file_string())
        }
        Cmd::Sample { degree, count } => {
            let n = resolve(*degree, cfg.parse("degree").map_err(usage)?, 3usize);
            let count = resolve(*count, cfg.parse("count").map_err(usage)?, 10usize);
            let mut out = header(&cli, "sample", &[("degree", n.to_string()),
                ("count", count.to_string()), ("seed", seed.to_string())]);
            for i in 0..count {
                let mut rng = stream_rng(seed, i as u64);
                let (hom, trials) = sample_hom_rejection(2, n, &mut rng, SampleBudget::default())
                    .map_err(|e| match e {
                        CoverError::BudgetExceeded(_, _) => (3, e.to_string()),
                        other => (1, other.to_string()),
                    })?;
                let gens = hom
                    .generators()
                    .iter()
                    .map(|p| {
                        p.images()
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect::<Vec<_>>()
                    .join(";");
                writeln!(out, "n={n} gens={gens} trials={trials}").unwrap();
            }
            emit(&cli, out)
        }
        Cmd::Moments { words, degrees } => {
            let words_spec = resolve(
                words.clone(),
                cfg.get("words").map(str::to_string),
                "1".to_string(),
            );
            let degrees_spec = resolve(
                degrees.clone(),
                cfg.get("degrees").map(str::to_string),
                "2,3,4,5".to_string(),
            );
            let degree_list = parse_usize_list(&degrees_spec).map_err(usage)?;
            let mut out = header(&cli, "moments", &[("words", words_spec.clone()),
                ("degrees", degrees_spec.clone()), ("seed", seed.to_string())]);
            out.push_str("word,n,value\n");
            for word_text in words_spec.split(';') {
                let letters: Result<Vec<i32>, _> =
                    word_text.split(',').map(|t| t.trim().parse::<i32>()).collect();
                let letters = letters.map_err(usage)?;
                let w = GroupWord::new(letters, 2).map_err(|e| usage(e.to_string()))?;
                for &n in &degree_list {
                    let v = moment_exact(2, n, std::slice::from_ref(&w), None)
                        .map_err(|e| (1, e.to_string()))?;
                    // the word field is quoted: letters are comma-separated
                    writeln!(out, "\"{}\",{},{:.16e}", word_text, n, v).unwrap();
                }
            }
            emit(&cli, out)
        }
        Cmd::Variance { degrees, samples, q, lambda0, kernel, center, width } => {
            let degrees_spec = resolve(
                degrees.clone(),
                cfg.get("degrees").map(str::to_string),
                "4,6,8,10".to_string(),
            );
            let degree_list = parse_usize_list(&degrees_spec).map_err(usage)?;
            let samples = resolve(*samples, cfg.parse("samples").map_err(usage)?, 10_000usize);
            let q = resolve(*q, cfg.parse("q").map_err(usage)?, 2usize);
            let lambda0 = resolve(*lambda0, cfg.parse("lambda0").map_err(usage)?, 0.25f64);
            let kernel_kind = resolve(
                kernel.clone(),
                cfg.get("kernel").map(str::to_string),
                "window".to_string(),
            );
            let center = resolve(*center, cfg.parse("center").map_err(usage)?, 3.1f64);
            let width = resolve(*width, cfg.parse("width").map_err(usage)?, 0.3f64);
            let kernel = match kernel_kind.as_str() {
                "window" => GeodesicKernel::PolyWindow { q, lambda0 },
                "bump" => GeodesicKernel::Bump { center, width },
                other => return Err(usage(format!("unknown kernel '{other}'"))),
            };
            let vc = VarianceConfig {
                genus: 2,
                degrees: degree_list,
                samples_per_degree: samples,
                kernel,
                seed,
                budget: SampleBudget::default(),
            };
            let run = run_variance_experiment(&vc).map_err(map_experiment_err)?;
            let mut out = header(&cli, "variance", &[
                ("degrees", degrees_spec.clone()),
                ("samples", samples.to_string()),
                ("q", q.to_string()),
                ("lambda0", format!("{lambda0:.16e}")),
                ("kernel", kernel_kind.clone()),
                ("seed", seed.to_string()),
            ]);
            if format == "jsonl" {
                for row in &run.rows {
                    writeln!(
                        out,
                        "{{\"n\":{},\"samples\":{},\"mean_sq\":{:.16e},\"std_err\":{:.16e},\"seed\":{}}}",
                        row.n, row.samples, row.mean_sq, row.std_err, seed
                    )
                    .unwrap();
                }
            } else {
                out.push_str(&variance_csv(&run));
            }
            let summary = variance_summary_json(&run);
            match &cli.out {
                Some(path) => {
                    write_file(path, &out)?;
                    let mut spath = path.clone().into_os_string();
                    spath.push(".summary.json");
                    write_file(&PathBuf::from(spath), &summary)?;
                    Ok(())
                }
                None => {
                    print!("{out}");
                    println!("{summary}");
                    Ok(())
                }
            }
        }
        Cmd::Weyl { lambda_max, steps, n } => {
            let lambda_max =
                resolve(*lambda_max, cfg.parse("lambda_max").map_err(usage)?, 10.0f64);
            let steps = resolve(*steps, cfg.parse("steps").map_err(usage)?, 20usize);
            let n = resolve(*n, cfg.parse("n").map_err(usage)?, 1u64);
            let mut out = header(&cli, "weyl", &[
                ("lambda_max", format!("{lambda_max:.16e}")),
                ("steps", steps.to_string()),
                ("n", n.to_string()),
                ("seed", seed.to_string()),
            ]);
            if format != "jsonl" {
                out.push_str("lambda,n,count,error_order\n");
            }
            for i in 0..=steps {
                let lambda = 0.25 + (lambda_max - 0.25) * i as f64 / steps as f64;
                let p = weyl_prediction(lambda, n, 2);
                if format == "jsonl" {
                    writeln!(
                        out,
                        "{{\"lambda\":{:.16e},\"n\":{},\"count\":{:.16e}}}",
                        lambda, n, p.count
                    )
                    .unwrap();
                } else {
                    writeln!(out, "{:.16e},{},{:.16e},{}", lambda, n, p.count, p.error_order)
                        .unwrap();
                }
            }
            emit(&cli, out)
        }
        Cmd::Predict { jmax, n } => {
            let jmax = resolve(*jmax, cfg.parse("jmax").map_err(usage)?, 20u64);
            let n = resolve(*n, cfg.parse("n").map_err(usage)?, 1u64);
            let js: Vec<u64> = (0..=jmax).collect();
            let body = prediction_table_csv(&js, n, 2);
            // the roundtrip column is a built-in consistency check
            for line in body.lines().skip(1) {
                let last: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
                if last.abs() > tol {
                    return Err((1, format!("roundtrip check failed: {line}")));
                }
            }
            let mut out = header(&cli, "predict", &[
                ("jmax", jmax.to_string()),
                ("n", n.to_string()),
                ("tol", format!("{tol:.3e}")),
                ("seed", seed.to_string()),
            ]);
            out.push_str(&body);
            emit(&cli, out)
        }
        Cmd::Kernel { center, width } => {
            let center = resolve(*center, cfg.parse("center").map_err(usage)?, 0.0f64);
            let width = resolve(*width, cfg.parse("width").map_err(usage)?, 1.0f64);
            let tf = TestFunction::standard();
            let phi = SmoothBumpPhi::new(center, width, 1.0);
            let mut out = header(&cli, "kernel", &[
                ("center", format!("{center:.16e}")),
                ("width", format!("{width:.16e}")),
                ("seed", seed.to_string()),
            ]);
            out.push_str("kind,x,value\n");
            for i in 0..=400 {
                let x = 20.0 * i as f64 / 400.0;
                let v = tf
                    .eval_f(hypercover::analysis::EvalPoint::Real(x))
                    .map_err(|e| (1, e.to_string()))?;
                writeln!(out, "f,{:.16e},{:.16e}", x, v).unwrap();
            }
            for i in 0..=300 {
                let xi = -1.5 + 3.0 * i as f64 / 300.0;
                let v = hypercover::analysis::f_inverse_transform(tf, xi);
                writeln!(out, "fcheck,{:.16e},{:.16e}", xi, v).unwrap();
            }
            let radius = phi.radius();
            for i in 0..=300 {
                let t = radius * i as f64 / 300.0;
                writeln!(out, "k,{:.16e},{:.16e}", t, selberg_kernel(&phi, t)).unwrap();
            }
            let (a, b) = f_lambda0_inverse_fourier_support(tf, 0.25, 1);
            writeln!(out, "support,{:.16e},{:.16e}", a, b).unwrap();
            emit(&cli, out)
        }
        Cmd::Markov { trials, qmax, kmax } => {
            let trials = resolve(*trials, cfg.parse("trials").map_err(usage)?, 1000usize);
            let qmax = resolve(*qmax, cfg.parse("qmax").map_err(usage)?, 8usize);
            let kmax = resolve(*kmax, cfg.parse("kmax").map_err(usage)?, 3u32);
            let mut rng = stream_rng(seed, 0);
            let mut violations = 0usize;
            let mut out = header(&cli, "markov", &[
                ("trials", trials.to_string()),
                ("qmax", qmax.to_string()),
                ("kmax", kmax.to_string()),
                ("seed", seed.to_string()),
            ]);
            out.push_str("trial,q,k,left,right,satisfied\n");
            for t in 0..trials {
                let q = rng.gen_range(1..=qmax);
                let k = rng.gen_range(1..=kmax);
                let deg = rng.gen_range(0..=q);
                let coeffs: Vec<f64> = (0..=deg).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let p = Poly::new(coeffs);
                let c = markov_brothers_check(&p, q, k, (q * q) as u64 * 16)
                    .map_err(map_experiment_err)?;
                if !c.satisfied {
                    violations += 1;
                }
                writeln!(
                    out,
                    "{},{},{},{:.16e},{:.16e},{}",
                    t, c.q, c.k, c.left, c.right, c.satisfied
                )
                .unwrap();
            }
            writeln!(out, "# violations={violations}").unwrap();
            emit(&cli, out)?;
            if violations > 0 {
                return Err((1, format!("{violations} Markov violations")));
            }
            Ok(())
        }
    }
}

fn parse_usize_list(spec: &str) -> Result<Vec<usize>, String> {
    spec.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("bad list entry '{t}': {e}")))
        .collect()
}

/// Output header: tool version plus the resolved semantic config. Thread
/// count and paths are deliberately excluded so reruns are byte-identical.
fn header(_cli: &Cli, cmd: &str, kv: &[(&str, String)]) -> String {
    let mut h = format!("# hypercover v{}\n# cmd={cmd}", env!("CARGO_PKG_VERSION"));
    for (k, v) in kv {
        write!(h, " {k}={v}").unwrap();
    }
    h.push('\n');
    h
}

fn write_file(path: &PathBuf, content: &str) -> CmdResult {
    std::fs::write(path, content).map_err(|e| (1, format!("write {}: {e}", path.display())))
}

fn emit(cli: &Cli, content: String) -> CmdResult {
    match &cli.out {
        Some(path) => write_file(path, &content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
