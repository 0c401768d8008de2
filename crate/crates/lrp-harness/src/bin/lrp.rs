use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lattice_geometry::{
    block_decompose, boundaries, closure_and_holes, isoperimetry_report, parse_site_set, LatticeBox,
};
use lrp_harness::{
    render_components, run_geometry_suite, run_lln_experiment, run_renorm_experiment,
    run_second_largest_sweep, run_tail_experiment, CsvTable, ExperimentConfig, HarnessError,
    ReplicaPool, TailCurve, OUTPUT_DIR_ENV,
};
use lrp_oracles::{
    ballot_count, cached_census, enumerate_f_vectors, verify_second_event_inclusion, Verdict,
    Witness,
};
use lrp_sampler::{sample_graph, LrpParams, SampledGraph};

#[derive(Parser)]
#[command(
    name = "lrp",
    about = "Long-range percolation experiments on finite boxes"
)]
struct Cli {
    /// Cap on worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Default output directory for files without an explicit path.
    #[arg(long, global = true, env = OUTPUT_DIR_ENV)]
    output_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigArgs {
    /// JSON experiment config.
    #[arg(long)]
    config: PathBuf,
    /// Output CSV path (overrides the config's `output_path`).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Sample one graph and write it as an edge list.
    Sample {
        #[arg(long)]
        d: usize,
        /// Number of sites (a perfect d-th power).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Second-largest component sweep over the config's box sizes.
    Scaling(ConfigArgs),
    /// Joint tail of the origin's cluster size outside the giant.
    Tail(ConfigArgs),
    /// Mean and spread of the giant's density, and origin-in-giant frequencies.
    Lln(ConfigArgs),
    /// Coarse-grained cell statistics and the certified giant bound.
    Renorm(ConfigArgs),
    /// Block, closure and boundary report for a site-set file, or the random invariant suite.
    Geometry {
        /// Site-set file (`d L` header, one site per line).
        input: Option<PathBuf>,
        /// Run the invariant suite on this many random connected sets instead.
        #[arg(long, conflicts_with = "input")]
        suite: Option<usize>,
        #[arg(long, default_value_t = 12)]
        side: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact counts: hole-free animal census and forward-degree vectors.
    Enumerate {
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 8)]
        m_max: usize,
        #[arg(long, default_value_t = 12)]
        b_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive check that a large second component is covered by one of the two events.
    Verify {
        /// Edge-list graph file.
        graph: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Render a d = 2 graph's components as a portable pixmap.
    Render {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn resolve(
    explicit: Option<PathBuf>,
    configured: Option<PathBuf>,
    dir: &Option<PathBuf>,
    name: &str,
) -> PathBuf {
    explicit
        .or(configured)
        .unwrap_or_else(|| dir.clone().unwrap_or_default().join(name))
}

fn write_out(path: &Path, bytes: &[u8]) -> Result<(), HarnessError> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, bytes)?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn load_config(path: &Path) -> Result<ExperimentConfig, HarnessError> {
    ExperimentConfig::from_json(&fs::read_to_string(path)?)
}

fn load_graph(path: &Path) -> Result<SampledGraph, HarnessError> {
    Ok(SampledGraph::from_text(&fs::read_to_string(path)?)?)
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    path.with_file_name(format!("{stem}{suffix}.csv"))
}

fn run(cli: Cli) -> Result<(), HarnessError> {
    let pool = ReplicaPool::new(cli.threads)?;
    let dir = &cli.output_dir;
    match cli.command {
        Command::Sample {
            d,
            n,
            alpha,
            beta,
            p,
            seed,
            out,
        } => {
            let lattice = LatticeBox::with_sites(d, n)?;
            let params = LrpParams::new(d, alpha, beta, p)?;
            let graph = sample_graph(&lattice, &params, seed)?;
            match out {
                Some(path) => write_out(&path, graph.to_text().as_bytes())?,
                None => print!("{}", graph.to_text()),
            }
        }
        Command::Scaling(a) => {
            let cfg = load_config(&a.config)?;
            let table = run_second_largest_sweep(&cfg, &pool)?;
            let path = resolve(a.out, cfg.output_path.clone(), dir, "scaling.csv");
            write_out(&path, table.to_csv().render().as_bytes())?;
            write_out(
                &with_suffix(&path, "_replicas"),
                table.records_csv().render().as_bytes(),
            )?;
            for r in &table.rows {
                println!(
                    "n={} median_norm={:.4} regime={}",
                    r.n,
                    r.median_norm(),
                    r.regime()
                );
            }
            println!("band_ratio={:.4}", table.band_ratio());
        }
        Command::Tail(a) => {
            let cfg = load_config(&a.config)?;
            let curves = run_tail_experiment(&cfg, &pool)?;
            let mut table = CsvTable::new(TailCurve::HEADER);
            for c in &curves {
                table.rows.extend(c.to_csv().rows);
                match &c.fit {
                    Some(f) => println!(
                        "n={} zeta_hat={:.4} ci=[{:.4}, {:.4}] points={}",
                        c.n, f.zeta_hat, f.ci_low, f.ci_high, f.points
                    ),
                    None => println!("n={} zeta_hat=unavailable (too few points)", c.n),
                }
            }
            let path = resolve(a.out, cfg.output_path.clone(), dir, "tail.csv");
            write_out(&path, table.render().as_bytes())?;
        }
        Command::Lln(a) => {
            let cfg = load_config(&a.config)?;
            let table = run_lln_experiment(&cfg, &pool)?;
            let path = resolve(a.out, cfg.output_path.clone(), dir, "lln.csv");
            write_out(&path, table.to_csv().render().as_bytes())?;
        }
        Command::Renorm(a) => {
            let cfg = load_config(&a.config)?;
            let table = run_renorm_experiment(&cfg, &pool)?;
            let path = resolve(a.out, cfg.output_path.clone(), dir, "renorm.csv");
            write_out(&path, table.to_csv().render().as_bytes())?;
            let violations = table.rows.iter().filter(|r| !r.bound_holds()).count();
            println!(
                "mean_active_fraction={:.4} bound_violations={violations}",
                table.mean_active_fraction()
            );
        }
        Command::Geometry {
            input,
            suite,
            side,
            seed,
        } => {
            if let Some(count) = suite {
                let report = run_geometry_suite(count, side, seed, &pool)?;
                println!(
                    "sets={} pairs={} failures={} min_int_ratio={:.4} min_ext_ratio={:.4} delta_reference={:.4}",
                    report.sets,
                    report.pairs,
                    report.failures.len(),
                    report.min_int_ratio,
                    report.min_ext_ratio,
                    report.delta_reference
                );
                for f in &report.failures {
                    println!("{f}");
                }
            } else {
                let path = input.ok_or_else(|| {
                    HarnessError::Config("geometry needs an input file or --suite".into())
                })?;
                let (lattice, set) = parse_site_set(&fs::read_to_string(path)?)?;
                println!("block,size,closure,holes,int_box,ext_box,int_free,ext_free,int_iso_ok,ext_iso_ok");
                for (i, b) in block_decompose(&set).iter().enumerate() {
                    let h = closure_and_holes(b)?;
                    let r = boundaries(b, &lattice);
                    let iso = isoperimetry_report(b, &lattice);
                    println!(
                        "{i},{},{},{},{},{},{},{},{},{}",
                        b.len(),
                        h.closure.len(),
                        h.holes.len(),
                        r.int_box.len(),
                        r.ext_box.len(),
                        r.int_free.len(),
                        r.ext_free.len(),
                        iso.int_free_ok,
                        iso.ext_free_ok
                    );
                }
            }
        }
        Command::Enumerate {
            d,
            m_max,
            b_max,
            out,
        } => {
            let cache = dir.clone().unwrap_or_default();
            let census = cached_census(&cache, d, m_max)?;
            let mut table = CsvTable::new("kind,parameter,count");
            for (m, count) in &census.per_m {
                table.push(format!("hole_free_animals_d{d},{m},{count}"));
            }
            for b in 1..=b_max {
                let count = enumerate_f_vectors(b)?.len();
                table.push(format!("f_vectors,{b},{count}"));
                table.push(format!("ballot,{b},{}", ballot_count(b)));
            }
            match out {
                Some(path) => write_out(&path, table.render().as_bytes())?,
                None => print!("{}", table.render()),
            }
        }
        Command::Verify { graph, k } => {
            let graph = load_graph(&graph)?;
            match verify_second_event_inclusion(&graph, k)? {
                Verdict::NotApplicable => {
                    println!("not applicable: second component smaller than {k}")
                }
                Verdict::Holds(Witness::LargeClosure(a)) => {
                    println!("holds: large-closure block with {} sites", a.len())
                }
                Verdict::Holds(Witness::SmallBlocks(blocks)) => {
                    let sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
                    println!("holds: small blocks with sizes {sizes:?}")
                }
                Verdict::Violation => {
                    println!("violation: no witness found");
                    return Err(HarnessError::Unsupported("inclusion violated".into()));
                }
            }
        }
        Command::Render { graph, out } => {
            let graph = load_graph(&graph)?;
            let raster = render_components(&graph)?;
            let path = resolve(out, None, dir, "components.ppm");
            write_out(&path, &raster.to_ppm())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
