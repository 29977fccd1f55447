//! Command-line front end: configuration ingestion, subcommand dispatch, and
//! reproducible JSON/CSV/SVG reports.
//!
//! Exit codes: 0 success with all checks passing, 1 input or usage error,
//! 2 a certificate or bound check failed.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use squnion_core::bounds::{general_ratio_bound, t_star_closed, t_star_numeric};
use squnion_core::certify::strip_certificate;
use squnion_core::explore::{
    centered_family, circle_union_check, clipped_square_pair, corner_triangle_delta,
    isoperimetric_removal_bound, search, SearchSettings,
};
use squnion_core::format::{fmt_sig12, json_sig12};
use squnion_core::geometry::{monte_carlo_area, union, Configuration, Point};
use squnion_core::svg::region_to_svg;

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_CHECK_FAILED: i32 = 2;

#[derive(Parser)]
#[command(name = "squnion", version, about = "Perimeter-to-area ratios of unit-square unions")]
struct Cli {
    /// Write a run manifest (inputs, seed, outputs, wall time) to this path.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute area, perimeter, and ratio of a configuration.
    Compute {
        #[arg(long = "in")]
        input: PathBuf,
        /// JSON report path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// SVG render path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run the strip certificate on an oriented configuration.
    VerifyOriented {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the thickness-integral table and the general ratio bound.
    Bound {
        /// Number of grid rows in the table.
        #[arg(long, default_value_t = 21)]
        steps: usize,
        /// CSV output path (defaults to stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for high-ratio configurations.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        oriented: bool,
        /// Half-width of the box that confines square centers.
        #[arg(long = "box", default_value_t = 2.0)]
        box_half_width: f64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100_000)]
        max_evals: u64,
        #[arg(long, default_value_t = 4)]
        restarts: u64,
        /// Optimality filter: on or off.
        #[arg(long, default_value = "on")]
        filter: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// SVG render of the best configuration.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Recompute every named example and print an expected/computed table.
    Examples {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo area estimate against the exact kernel area.
    Oracle {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a configuration's union to SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are not usage errors
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let started = Instant::now();
    let mut run = RunRecord::default();
    let code = match dispatch(&cli.command, &mut run) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            EXIT_USAGE
        }
    };
    if let Some(path) = &cli.manifest {
        if let Err(e) = write_manifest(path, &cli.command, &run, started) {
            eprintln!("error: {:#}", e);
            std::process::exit(EXIT_USAGE);
        }
    }
    std::process::exit(code);
}

/// Inputs, outputs, and seed actually used by the subcommand.
#[derive(Default)]
struct RunRecord {
    inputs: Vec<PathBuf>,
    outputs: Vec<PathBuf>,
    seed: Option<u64>,
}

fn write_manifest(path: &Path, command: &Command, run: &RunRecord, started: Instant) -> Result<()> {
    let name = match command {
        Command::Compute { .. } => "compute",
        Command::VerifyOriented { .. } => "verify-oriented",
        Command::Bound { .. } => "bound",
        Command::Search { .. } => "search",
        Command::Examples { .. } => "examples",
        Command::Oracle { .. } => "oracle",
        Command::Render { .. } => "render",
    };
    let manifest = json!({
        "subcommand": name,
        "inputs": run.inputs.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
        "seed": run.seed,
        "version": env!("CARGO_PKG_VERSION"),
        "wall_time_ms": started.elapsed().as_millis() as u64,
        "outputs": run.outputs.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
    });
    std::fs::write(path, serde_json::to_string_pretty(&manifest)? + "\n")
        .with_context(|| format!("writing manifest {}", path.display()))?;
    Ok(())
}

/// Default seed, overridable through the environment.
fn default_seed(explicit: Option<u64>) -> Result<u64> {
    if let Some(seed) = explicit {
        return Ok(seed);
    }
    match std::env::var("SQUNION_SEED") {
        Ok(text) => text
            .parse()
            .with_context(|| format!("SQUNION_SEED = {:?} is not an integer", text)),
        Err(_) => Ok(0),
    }
}

fn load_configuration(path: &Path) -> Result<Configuration> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading configuration {}", path.display()))?;
    Configuration::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_report(path: &Path, report: &Value, run: &mut RunRecord) -> Result<()> {
    std::fs::write(path, json_sig12(report))
        .with_context(|| format!("writing report {}", path.display()))?;
    run.outputs.push(path.to_path_buf());
    Ok(())
}

fn dispatch(command: &Command, run: &mut RunRecord) -> Result<i32> {
    match command {
        Command::Compute { input, out, svg } => compute(input, out.as_deref(), svg.as_deref(), run),
        Command::VerifyOriented { input, out } => verify_oriented(input, out.as_deref(), run),
        Command::Bound { steps, out } => bound(*steps, out.as_deref(), run),
        Command::Search {
            n,
            oriented,
            box_half_width,
            seed,
            max_evals,
            restarts,
            filter,
            out,
            svg,
        } => {
            let filter_enabled = match filter.as_str() {
                "on" => true,
                "off" => false,
                other => anyhow::bail!("--filter must be on or off, got {:?}", other),
            };
            let settings = SearchSettings {
                n_squares: *n,
                oriented: *oriented,
                box_half_width: *box_half_width,
                seed: default_seed(*seed)?,
                max_evals: *max_evals,
                restarts: *restarts,
                filter_enabled,
            };
            run_search(&settings, out.as_deref(), svg.as_deref(), run)
        }
        Command::Examples { out } => examples(out.as_deref(), run),
        Command::Oracle {
            input,
            samples,
            seed,
            out,
        } => oracle(input, *samples, default_seed(*seed)?, out.as_deref(), run),
        Command::Render { input, out } => render(input, out, run),
    }
}

fn compute(input: &Path, out: Option<&Path>, svg: Option<&Path>, run: &mut RunRecord) -> Result<i32> {
    run.inputs.push(input.to_path_buf());
    let c = load_configuration(input)?;
    let region = union(&c)?;
    println!(
        "{}: n = {}, p = {}, a = {}, ratio = {}",
        if c.label.is_empty() { "configuration" } else { &c.label },
        c.len(),
        fmt_sig12(region.perimeter()),
        fmt_sig12(region.area()),
        fmt_sig12(region.ratio())
    );
    if let Some(path) = out {
        let report = json!({
            "label": c.label,
            "n_squares": c.len(),
            "oriented": c.oriented,
            "area": region.area(),
            "perimeter": region.perimeter(),
            "ratio": region.ratio(),
            "shells": region.shells.len(),
            "holes": region.holes.len(),
            "boundary_segments": region.boundary_segments.len(),
        });
        write_report(path, &report, run)?;
    }
    if let Some(path) = svg {
        std::fs::write(path, region_to_svg(&region))
            .with_context(|| format!("writing svg {}", path.display()))?;
        run.outputs.push(path.to_path_buf());
    }
    Ok(EXIT_OK)
}

fn verify_oriented(input: &Path, out: Option<&Path>, run: &mut RunRecord) -> Result<i32> {
    run.inputs.push(input.to_path_buf());
    let c = load_configuration(input)?;
    let cert = strip_certificate(&c)?;
    let pass = cert.passes();
    let ratio = cert.perimeter / cert.area;
    println!(
        "strip certificate: {} (averaged sum {} vs area {}, ratio {})",
        if pass { "pass" } else { "FAIL" },
        fmt_sig12(cert.averaged_sum),
        fmt_sig12(cert.area),
        fmt_sig12(ratio)
    );
    if let Some(path) = out {
        let report = json!({
            "certificate": "strip",
            "pass": pass,
            "per_direction": cert.per_direction.to_vec(),
            "averaged_sum": cert.averaged_sum,
            "area": cert.area,
            "perimeter": cert.perimeter,
            "ratio": ratio,
        });
        write_report(path, &report, run)?;
    }
    Ok(if pass { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn bound(steps: usize, out: Option<&Path>, run: &mut RunRecord) -> Result<i32> {
    let mut csv = String::from("x,closed,numeric,abs_diff\n");
    let steps = steps.max(2);
    for i in 0..steps {
        // stay inside [0, 1): the closed form diverges at x = 1
        let x = 0.99 * i as f64 / (steps - 1) as f64;
        let closed = t_star_closed(x)?;
        let numeric = t_star_numeric(x, 1e-9)?;
        csv.push_str(&format!(
            "{},{},{},{}\n",
            fmt_sig12(x),
            fmt_sig12(closed),
            fmt_sig12(numeric),
            fmt_sig12((closed - numeric).abs())
        ));
    }
    match out {
        Some(path) => {
            std::fs::write(path, &csv).with_context(|| format!("writing {}", path.display()))?;
            run.outputs.push(path.to_path_buf());
        }
        None => print!("{}", csv),
    }
    let b = general_ratio_bound();
    println!("general ratio bound: 2*pi / T*(0) = {} <= 5.6", fmt_sig12(b));
    Ok(EXIT_OK)
}

fn run_search(
    settings: &SearchSettings,
    out: Option<&Path>,
    svg: Option<&Path>,
    run: &mut RunRecord,
) -> Result<i32> {
    run.seed = Some(settings.seed);
    let report = search(settings)?;
    println!(
        "search: best ratio {} after {} evals (seed {}, {} filter prunes)",
        fmt_sig12(report.best_ratio),
        report.evals,
        report.seed,
        report.filter_prunes
    );
    if let Some(path) = out {
        let value = serde_json::to_value(&report)?;
        write_report(path, &value, run)?;
    }
    if let Some(path) = svg {
        let region = union(&report.best)?;
        std::fs::write(path, region_to_svg(&region))
            .with_context(|| format!("writing svg {}", path.display()))?;
        run.outputs.push(path.to_path_buf());
    }
    Ok(EXIT_OK)
}

struct ExampleRow {
    name: &'static str,
    parameter: String,
    expected: f64,
    computed: f64,
    tol: f64,
}

fn example_rows() -> Result<Vec<ExampleRow>> {
    let sqrt2 = std::f64::consts::SQRT_2;
    let mut rows = Vec::new();

    let (e1, union_ratio) = clipped_square_pair(0.1)?;
    rows.push(ExampleRow {
        name: "clipped-square-e1",
        parameter: "x = 0.1".into(),
        expected: (4.0 - 0.1 * (2.0 - sqrt2)) / (1.0 - 0.005),
        computed: e1,
        tol: 1e-9,
    });
    rows.push(ExampleRow {
        name: "clipped-square-union",
        parameter: "x = 0.1".into(),
        expected: 4.0,
        computed: union_ratio,
        tol: 1e-9,
    });
    rows.push(ExampleRow {
        name: "corner-triangle",
        parameter: "b = 0.1".into(),
        expected: (4.0 - 2.0 * sqrt2) / 0.1,
        computed: corner_triangle_delta(0.1)?,
        tol: 1e-6,
    });
    let star = centered_family(&[0.0, std::f64::consts::FRAC_PI_4])?;
    let star_region = union(&star)?;
    rows.push(ExampleRow {
        name: "star-area",
        parameter: "thetas 0, pi/4".into(),
        expected: 4.0 - 2.0 * sqrt2,
        computed: star_region.area(),
        tol: 1e-9,
    });
    rows.push(ExampleRow {
        name: "star-ratio",
        parameter: "thetas 0, pi/4".into(),
        expected: 4.0,
        computed: star_region.ratio(),
        tol: 1e-9,
    });
    rows.push(ExampleRow {
        name: "removal-bound-endpoint",
        parameter: "alpha = pi/4".into(),
        expected: 4.0,
        computed: isoperimetric_removal_bound(std::f64::consts::FRAC_PI_4)?,
        tol: 1e-9,
    });
    rows.push(ExampleRow {
        name: "circle-1024gon",
        parameter: "one circle, k = 1024".into(),
        expected: 2.0 / (std::f64::consts::PI / 1024.0).cos(),
        computed: circle_union_check(&[Point::new(0.0, 0.0)], 1024)?,
        tol: 1e-9,
    });
    rows.push(ExampleRow {
        name: "general-bound",
        parameter: "x = 0".into(),
        expected: 2.0 * std::f64::consts::PI / (0.5 * 2.0f64.ln() + std::f64::consts::FRAC_PI_4),
        computed: general_ratio_bound(),
        tol: 1e-12,
    });
    Ok(rows)
}

fn examples(out: Option<&Path>, run: &mut RunRecord) -> Result<i32> {
    let rows = example_rows()?;
    let mut all_pass = true;
    println!(
        "{:<24} {:<22} {:>16} {:>16}  pass",
        "name", "parameter", "expected", "computed"
    );
    let mut report_rows = Vec::new();
    for row in &rows {
        let pass = (row.expected - row.computed).abs() <= row.tol;
        all_pass &= pass;
        println!(
            "{:<24} {:<22} {:>16.9} {:>16.9}  {}",
            row.name,
            row.parameter,
            row.expected,
            row.computed,
            if pass { "yes" } else { "NO" }
        );
        report_rows.push(json!({
            "name": row.name,
            "parameter": row.parameter,
            "expected": row.expected,
            "computed": row.computed,
            "pass": pass,
        }));
    }
    if let Some(path) = out {
        write_report(path, &json!({ "examples": report_rows, "all_pass": all_pass }), run)?;
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn oracle(
    input: &Path,
    samples: u64,
    seed: u64,
    out: Option<&Path>,
    run: &mut RunRecord,
) -> Result<i32> {
    run.inputs.push(input.to_path_buf());
    run.seed = Some(seed);
    let c = load_configuration(input)?;
    let exact = union(&c)?.area();
    let (estimate, std_error) = monte_carlo_area(&c, samples, seed)?;
    let within = (estimate - exact).abs() <= 3.0 * std_error;
    println!(
        "oracle: exact {} estimate {} ({} samples, std error {}): {}",
        fmt_sig12(exact),
        fmt_sig12(estimate),
        samples,
        fmt_sig12(std_error),
        if within { "agree within 3 sigma" } else { "DISAGREE beyond 3 sigma" }
    );
    if let Some(path) = out {
        let report = json!({
            "exact_area": exact,
            "estimate": estimate,
            "std_error": std_error,
            "samples": samples,
            "seed": seed,
            "within_3_sigma": within,
        });
        write_report(path, &report, run)?;
    }
    Ok(if within { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn render(input: &Path, out: &Path, run: &mut RunRecord) -> Result<i32> {
    run.inputs.push(input.to_path_buf());
    let c = load_configuration(input)?;
    let region = union(&c)?;
    std::fs::write(out, region_to_svg(&region))
        .with_context(|| format!("writing svg {}", out.display()))?;
    run.outputs.push(out.to_path_buf());
    println!(
        "rendered {} rings to {} (ratio {})",
        region.shells.len() + region.holes.len(),
        out.display(),
        fmt_sig12(region.ratio())
    );
    Ok(EXIT_OK)
}
