//! Command-line front end: pairwise distances, corpus matrices, single-edge
//! perturbation scans, closed-form calculators, and the timing harness.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rhdist::bench::{self, BenchConfig};
use rhdist::ccdh::Ccdh;
use rhdist::error::RhError;
use rhdist::families::{self, FamilySpec};
use rhdist::graph;
use rhdist::matrix;
use rhdist::perturb::{perturb_stats, PerturbMode};
use rhdist::rh;

#[derive(Parser)]
#[command(
    name = "rhdist",
    version,
    about = "Relative Hausdorff distance between graph degree distributions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two graphs (or ccdh files with --ccdh-input)
    Dist {
        a: PathBuf,
        b: PathBuf,
        /// Use the discrete distance instead of the smooth one
        #[arg(long)]
        discrete: bool,
        /// Also print the two directional values
        #[arg(long)]
        directional: bool,
        /// Also print the ratio to the maximum attainable at these sizes
        #[arg(long)]
        normalized: bool,
        /// Inputs are ccdh TSV files rather than edge lists
        #[arg(long)]
        ccdh_input: bool,
    },
    /// Pairwise smooth-distance matrix over a corpus directory
    Matrix {
        /// Directory of *.txt / *.tsv edge lists (ccdh TSVs with --ccdh-input)
        corpus: PathBuf,
        /// Write the matrix TSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SortKey::Name)]
        sort: SortKey,
        /// Worker threads for pair evaluation
        #[arg(long, env = "RHDIST_JOBS")]
        jobs: Option<usize>,
        /// Divide each entry by the maximum distance possible at the sizes
        #[arg(long)]
        normalized: bool,
        #[arg(long)]
        ccdh_input: bool,
    },
    /// Max and average distance over single-edge perturbations
    Perturb {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
    },
    /// Closed-form values next to the algorithmic ones.
    ///
    /// Takes either two family specs (`complete 3 complete 5`) or a formula
    /// name: `maxrh N M`, `density C I`, `starperturb N`. Family kinds:
    /// complete N, cycle N, path N, star N, complete-bipartite A B,
    /// star-degreed N K, regular N R.
    #[command(trailing_var_arg = true)]
    Families { args: Vec<String> },
    /// Time the fast distance against the quadratic baseline
    Bench {
        /// Comma-separated maximum degrees
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<u64>,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        /// Also run the quadratic reference
        #[arg(long)]
        baseline: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Dump a graph's ccdh as TSV
    Ccdh {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SortKey {
    Name,
    Maxdeg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Add,
    Delete,
    Both,
}

enum AppError {
    Usage(String),
    Data(RhError),
}

impl From<RhError> for AppError {
    fn from(e: RhError) -> Self {
        AppError::Data(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Data(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

/// Fixed-point with six decimals, trailing zeros trimmed: 2/3 prints as
/// 0.666667 and an exact 0 as 0.
fn fmt_distance(x: f64) -> String {
    let s = format!("{x:.6}");
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn load_input(path: &Path, ccdh_input: bool) -> Result<Ccdh, RhError> {
    if ccdh_input {
        graph::load_ccdh(path)
    } else {
        Ok(graph::load_edge_list(path)?.ccdh())
    }
}

fn run(cmd: Command) -> Result<(), AppError> {
    match cmd {
        Command::Dist {
            a,
            b,
            discrete,
            directional,
            normalized,
            ccdh_input,
        } => {
            let f = load_input(&a, ccdh_input)?;
            let g = load_input(&b, ccdh_input)?;
            let r = if discrete {
                rh::discrete_rh(&f, &g)
            } else {
                rh::smooth_rh(&f, &g)
            };
            println!("{}", fmt_distance(r.distance));
            if directional {
                println!("forward\t{}", fmt_distance(r.forward));
                println!("backward\t{}", fmt_distance(r.backward));
            }
            if normalized {
                println!(
                    "normalized\t{}",
                    fmt_distance(families::normalized_ratio(&f, &g)?)
                );
            }
            Ok(())
        }
        Command::Matrix {
            corpus,
            out,
            sort,
            jobs,
            normalized,
            ccdh_input,
        } => {
            let mut entries = Vec::new();
            for (name, path) in graph::list_corpus(&corpus)? {
                entries.push((name, load_input(&path, ccdh_input)?));
            }
            if let SortKey::Maxdeg = sort {
                entries.sort_by(|a, b| (a.1.delta(), &a.0).cmp(&(b.1.delta(), &b.0)));
            }
            let report = with_pool(jobs, || matrix::pairwise_matrix(&entries, normalized))?;
            let tsv = matrix::render_tsv(&report);
            let summary = format!(
                "graphs\t{}\npairs\t{}\nmin\t{}\nmax\t{}\nmean\t{}\nmedian\t{}",
                report.len(),
                report.len() * (report.len() - 1) / 2,
                fmt_distance(report.summary.min),
                fmt_distance(report.summary.max),
                fmt_distance(report.summary.mean),
                fmt_distance(report.summary.median),
            );
            match out {
                Some(path) => {
                    std::fs::write(path, tsv).map_err(RhError::from)?;
                    println!("{summary}");
                }
                None => {
                    print!("{tsv}");
                    eprintln!("{summary}");
                }
            }
            Ok(())
        }
        Command::Perturb { graph: path, mode } => {
            let g = graph::load_edge_list(&path)?;
            let modes: &[(PerturbMode, &str)] = match mode {
                ModeArg::Add => &[(PerturbMode::Add, "add")],
                ModeArg::Delete => &[(PerturbMode::Delete, "delete")],
                ModeArg::Both => &[(PerturbMode::Add, "add"), (PerturbMode::Delete, "delete")],
            };
            for &(m, label) in modes {
                match perturb_stats(&g, m) {
                    Ok(s) => println!(
                        "{label}\tmax\t{}\tavg\t{}\targmax\t({},{})",
                        fmt_distance(s.max_eps),
                        fmt_distance(s.avg_eps),
                        s.argmax_class.degrees.0,
                        s.argmax_class.degrees.1
                    ),
                    Err(RhError::NoPerturbations) => {
                        println!("{label}\tno applicable perturbations")
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok(())
        }
        Command::Families { args } => run_families(&args),
        Command::Bench {
            sizes,
            trials,
            baseline,
            seed,
        } => {
            let cfg = BenchConfig {
                sizes: if sizes.is_empty() {
                    BenchConfig::default().sizes
                } else {
                    sizes
                },
                trials,
                baseline,
                seed,
            };
            let rows = bench::run(&cfg);
            println!("delta_sum\tfast_ns\tbaseline_ns\taccesses");
            for r in &rows {
                let base = r
                    .baseline_ns
                    .map(|b| format!("{b:.0}"))
                    .unwrap_or_else(|| "-".into());
                println!(
                    "{}\t{:.0}\t{}\t{}",
                    r.delta_sum, r.fast_ns, base, r.accesses
                );
            }
            println!(
                "# fitted C = {:.2} ccdh reads per unit of delta_f + delta_g",
                bench::fitted_constant(&rows)
            );
            Ok(())
        }
        Command::Ccdh { graph: path, out } => {
            let c = graph::load_edge_list(&path)?.ccdh();
            match out {
                Some(p) => {
                    graph::save_ccdh(&c, &p)?;
                }
                None => {
                    let mut buf = Vec::new();
                    graph::write_ccdh(&c, &mut buf)?;
                    print!("{}", String::from_utf8_lossy(&buf));
                }
            }
            Ok(())
        }
    }
}

fn with_pool<T, F>(jobs: Option<usize>, f: F) -> T
where
    F: FnOnce() -> T + Send,
    T: Send,
{
    match jobs {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}

fn usage(msg: impl Into<String>) -> AppError {
    AppError::Usage(msg.into())
}

fn run_families(args: &[String]) -> Result<(), AppError> {
    let mut it = args.iter().map(String::as_str).peekable();
    match it.peek() {
        Some(&"maxrh") => {
            it.next();
            let n = take_u64(&mut it, "maxrh N M")?;
            let m = take_u64(&mut it, "maxrh N M")?;
            println!("maxrh\t{}", fmt_distance(families::max_rh(n, m)?));
        }
        Some(&"density") => {
            it.next();
            let c: f64 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| usage("density C I"))?;
            let i = take_u64(&mut it, "density C I")? as u32;
            let pair = families::density_pair(c, i)?;
            let algo = rh::smooth_rh(&pair.f, &pair.g).distance;
            println!("order\t{}", pair.order);
            println!("tau\t{}", fmt_distance(pair.tau));
            println!("algorithm\t{}", fmt_distance(algo));
        }
        Some(&"starperturb") => {
            it.next();
            let n = take_u64(&mut it, "starperturb N")?;
            let v = families::star_perturbation_values(n)?;
            println!("smooth-forward\t{}", fmt_distance(v.smooth_forward));
            println!("smooth-backward\t{}", fmt_distance(v.smooth_backward));
            println!("discrete-forward\t{}", fmt_distance(v.discrete_forward));
            println!("discrete-backward\t{}", fmt_distance(v.discrete_backward));
        }
        Some(_) => {
            let a = parse_family(&mut it)?;
            let b = parse_family(&mut it)?;
            if it.next().is_some() {
                return Err(usage("trailing arguments after the two family specs"));
            }
            let closed = closed_form(&a, &b);
            let algo = rh::smooth_rh(&a.ccdh()?, &b.ccdh()?).distance;
            match closed {
                Some(Ok(v)) => println!("closed-form\t{}", fmt_distance(v)),
                Some(Err(e)) => println!("closed-form\tuncovered ({e})"),
                None => println!("closed-form\tn/a"),
            }
            println!("algorithm\t{}", fmt_distance(algo));
        }
        None => return Err(usage("families needs arguments; see --help")),
    }
    if it.next().is_some() {
        return Err(usage("unexpected trailing arguments"));
    }
    Ok(())
}

fn closed_form(a: &FamilySpec, b: &FamilySpec) -> Option<Result<f64, RhError>> {
    match (*a, *b) {
        (FamilySpec::Complete { n }, FamilySpec::Complete { n: m }) => {
            Some(families::rh_complete_complete(n.min(m), n.max(m)))
        }
        (FamilySpec::Complete { n }, FamilySpec::Cycle { n: m })
        | (FamilySpec::Cycle { n: m }, FamilySpec::Complete { n }) => {
            Some(families::rh_complete_cycle(n, m))
        }
        _ => None,
    }
}

fn take_u64<'a, I: Iterator<Item = &'a str>>(it: &mut I, form: &str) -> Result<u64, AppError> {
    it.next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| usage(format!("expected an integer; usage: {form}")))
}

fn parse_family<'a, I>(it: &mut std::iter::Peekable<I>) -> Result<FamilySpec, AppError>
where
    I: Iterator<Item = &'a str>,
{
    let kind = it.next().ok_or_else(|| usage("missing family kind"))?;
    let spec = match kind {
        "complete" => FamilySpec::Complete {
            n: take_u64(it, "complete N")?,
        },
        "cycle" => FamilySpec::Cycle {
            n: take_u64(it, "cycle N")?,
        },
        "path" => FamilySpec::Path {
            n: take_u64(it, "path N")?,
        },
        "star" => FamilySpec::Star {
            n: take_u64(it, "star N")?,
        },
        "complete-bipartite" => FamilySpec::CompleteBipartite {
            a: take_u64(it, "complete-bipartite A B")?,
            b: take_u64(it, "complete-bipartite A B")?,
        },
        "star-degreed" => FamilySpec::StarDegreed {
            n: take_u64(it, "star-degreed N K")?,
            k: take_u64(it, "star-degreed N K")?,
        },
        "regular" => FamilySpec::Regular {
            n: take_u64(it, "regular N R")?,
            r: take_u64(it, "regular N R")?,
        },
        other => return Err(usage(format!("unknown family kind {other:?}"))),
    };
    Ok(spec)
}
