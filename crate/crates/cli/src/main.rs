use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use subord_lab::proofcheck::GridSpec;
use subord_lab_cli::commands::{
    cmd_bounds, cmd_curve, cmd_figure, cmd_subcheck, cmd_verify, CliError, NumericParams,
    ALL_CLAIMS,
};

/// Sharp-bound calculators, verification scans, subordination checks, and
/// figures for the cosh-root starlike class.
#[derive(Parser)]
#[command(name = "subord-lab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct ParamArgs {
    /// target selector where the theorem has one (crescent, limacon, exp, ...)
    #[arg(long)]
    target: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    gamma: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    eta: Option<f64>,
    /// parameter A (real; t3.1 also accepts complex, e.g. `1+0.5i`)
    #[arg(long, short = 'A', alias = "A", value_name = "A", allow_hyphen_values = true)]
    a: Option<String>,
    /// parameter B (real; t3.1 also accepts complex)
    #[arg(long, short = 'B', alias = "B", value_name = "B", allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    s: Option<f64>,
}

impl From<&ParamArgs> for NumericParams {
    fn from(p: &ParamArgs) -> Self {
        NumericParams {
            target: p.target.clone(),
            gamma: p.gamma,
            eta: p.eta,
            a: p.a.clone(),
            b: p.b.clone(),
            s: p.s,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a sharp constant or admissible parameter window.
    Bounds {
        /// theorem id: t2.1, t2.2, t3.1, t3.2, t3.3, t3.4, t4.3, t4.4, t4.5, ex24, ex25
        theorem_id: String,
        #[command(flatten)]
        params: ParamArgs,
        /// write JSON here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run verification scans; exit 0 only when every claim passes.
    Verify {
        /// claim id (see --all for the full battery)
        claim: Option<String>,
        /// run every claim with default parameters
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        params: ParamArgs,
        /// primary-axis grid points (default 1024)
        #[arg(long)]
        t_points: Option<usize>,
        /// comma-separated k values, all >= 1 (default 1,1.5,2,3,5,10)
        #[arg(long)]
        k_values: Option<String>,
        /// disable golden-section refinement
        #[arg(long)]
        no_refine: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a sampled subordination f inside a region or a univalent target.
    Subcheck {
        /// inner function, e.g. `phi_eta_cosh:eta=0.758753`
        #[arg(long)]
        inner: String,
        /// `region:<spec>` for a predicate check or `fn:<spec>` for a winding check
        #[arg(long)]
        outer: String,
        /// sampling radius in (0, 1)
        #[arg(long, default_value_t = 0.999)]
        r: f64,
        /// samples on the circle
        #[arg(long, default_value_t = 2048)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Render a figure (fig1, fig2a..fig2e, fig3) as SVG.
    Figure {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export a region boundary as CSV (theta,re,im).
    Curve {
        /// region spec, e.g. `crescent` or `janowski:A=1,B=0.5`
        #[arg(long)]
        region: String,
        #[arg(long, default_value_t = 512)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::config(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn parse_k_values(raw: &str) -> Result<Vec<f64>, CliError> {
    raw.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| CliError::config(format!("bad k value `{x}`")))
        })
        .collect()
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Bounds {
            theorem_id,
            params,
            output,
        } => {
            let out = cmd_bounds(&theorem_id, &(&params).into())?;
            emit(&out, output.as_ref())?;
            Ok(true)
        }
        Command::Verify {
            claim,
            all,
            params,
            t_points,
            k_values,
            no_refine,
            output,
        } => {
            let claims: Vec<String> = if all {
                ALL_CLAIMS.iter().map(|s| s.to_string()).collect()
            } else {
                vec![claim.ok_or_else(|| {
                    CliError::config("give a claim id or --all".to_string())
                })?]
            };
            let mut grid = GridSpec::default();
            if let Some(n) = t_points {
                grid.t_points = n;
            }
            if let Some(raw) = &k_values {
                grid.k_values = parse_k_values(raw)?;
            }
            grid.refine = !no_refine;
            let (out, passed) = cmd_verify(&claims, &(&params).into(), &grid)?;
            emit(&out, output.as_ref())?;
            Ok(passed)
        }
        Command::Subcheck {
            inner,
            outer,
            r,
            n,
            output,
        } => {
            let (out, holds) = cmd_subcheck(&inner, &outer, r, n)?;
            emit(&out, output.as_ref())?;
            Ok(holds)
        }
        Command::Figure { name, output } => {
            let svg = cmd_figure(&name)?;
            emit(&svg, output.as_ref())?;
            Ok(true)
        }
        Command::Curve { region, n, output } => {
            let out = cmd_curve(&region, n)?;
            emit(&out, output.as_ref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    if let Ok(raw) = std::env::var("SUBORD_LAB_THREADS") {
        if let Ok(threads) = raw.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        } else {
            eprintln!("ignoring SUBORD_LAB_THREADS={raw}: not a thread count");
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
