//! Command implementations shared by the binary and the acceptance suite.
//! Every command echoes its fully-resolved configuration into the output.

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use subord_lab::bounds::{
    admissibility_threshold, b0_root, bb_eta_range, eta0_t14, eta_min_ratio_janowski,
    eta_min_t13, eta_star_cross_check, example_param_ranges, t9_conditions, AdmissibilityKind,
    BbTarget, EtaStarTarget, ExampleRange,
};
use subord_lab::error::Error;
use subord_lab::proofcheck::{
    admissible_psi_check, scan_nonneg, starlike_and_ratio_checks, transcription_check, FCase,
    GridSpec, PsiKind, RatioKind, VerificationReport,
};
use subord_lab::regions::boundary;
use subord_lab::subord::{check_by_predicate, check_by_winding, parse_region, FnSpec};

use crate::figures::{figure_svg, FigureName};
use crate::output::{curve_csv, to_json};

/// Command failure with the exit code the binary should report:
/// 1 for failed checks and gates, 2 for configuration errors.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn config(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn failed(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::config(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Optional numeric parameters a bounds/verify invocation may carry.
#[derive(Debug, Clone, Default)]
pub struct NumericParams {
    pub target: Option<String>,
    pub gamma: Option<f64>,
    pub eta: Option<f64>,
    pub a: Option<String>,
    pub b: Option<String>,
    pub s: Option<f64>,
}

impl NumericParams {
    fn real(&self, which: &str) -> CliResult<f64> {
        let raw = match which {
            "a" => self.a.as_deref(),
            "b" => self.b.as_deref(),
            _ => unreachable!(),
        }
        .ok_or_else(|| CliError::config(format!("missing --{which}")))?;
        raw.parse::<f64>()
            .map_err(|_| CliError::config(format!("--{which} must be a real number, got `{raw}`")))
    }

    fn complex(&self, which: &str) -> CliResult<Complex64> {
        let raw = match which {
            "a" => self.a.as_deref(),
            "b" => self.b.as_deref(),
            _ => unreachable!(),
        }
        .ok_or_else(|| CliError::config(format!("missing --{which}")))?;
        parse_complex(raw)
            .ok_or_else(|| CliError::config(format!("cannot parse `{raw}` as a complex number")))
    }

    fn require(&self, which: &str) -> CliResult<f64> {
        match which {
            "gamma" => self.gamma,
            "eta" => self.eta,
            "s" => self.s,
            _ => unreachable!(),
        }
        .ok_or_else(|| CliError::config(format!("missing --{which}")))
    }
}

/// Parses `1`, `-0.3`, `2i`, `1+0.5i`, `1-0.5i`, `i`, `-i`.
pub fn parse_complex(raw: &str) -> Option<Complex64> {
    let s = raw.trim().replace(' ', "");
    if let Ok(re) = s.parse::<f64>() {
        return Some(Complex64::new(re, 0.0));
    }
    if let Some(im_part) = s.strip_suffix('i') {
        // split at the last +/- that is not a leading sign or exponent sign
        let bytes = im_part.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx] as char;
            if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        return match split {
            Some(idx) => {
                let re: f64 = im_part[..idx].parse().ok()?;
                let im_str = &im_part[idx..];
                let im: f64 = match im_str {
                    "+" => 1.0,
                    "-" => -1.0,
                    other => other.parse().ok()?,
                };
                Some(Complex64::new(re, im))
            }
            None => {
                let im: f64 = match im_part {
                    "" => 1.0,
                    "-" => -1.0,
                    other => other.parse().ok()?,
                };
                Some(Complex64::new(0.0, im))
            }
        };
    }
    None
}

fn interval_value(w: &subord_lab::bounds::ParamInterval) -> Value {
    serde_json::to_value(w).expect("interval serializes")
}

fn envelope(command: &str, config: Value, result: Value) -> Value {
    json!({
        "schema": 1,
        "command": command,
        "config": config,
        "result": result,
    })
}

/// `bounds <theorem_id> ...`: evaluates the named constant or window.
pub fn cmd_bounds(theorem_id: &str, params: &NumericParams) -> CliResult<String> {
    let mut config = Map::new();
    config.insert("theorem_id".into(), json!(theorem_id));
    let result = match theorem_id {
        "t2.1" => {
            let gamma = params.require("gamma")?;
            config.insert("gamma".into(), json!(gamma));
            let target = params
                .target
                .as_deref()
                .ok_or_else(|| CliError::config("missing --target"))?;
            config.insert("target".into(), json!(target));
            let bb = match target {
                "crescent" => BbTarget::Crescent,
                "exp" => BbTarget::Exp,
                "limacon" => {
                    let s = params.require("s")?;
                    config.insert("s".into(), json!(s));
                    BbTarget::Limacon { s }
                }
                other => {
                    return Err(CliError::config(format!(
                        "unknown t2.1 target `{other}` (crescent, limacon, exp)"
                    )))
                }
            };
            let w = bb_eta_range(bb, gamma)?;
            json!({ "interval": interval_value(&w), "empty": w.is_empty() })
        }
        "t2.2" => {
            let eta = params.require("eta")?;
            let gamma = params.require("gamma")?;
            let a = params.real("a")?;
            let b = params.real("b")?;
            config.insert("eta".into(), json!(eta));
            config.insert("gamma".into(), json!(gamma));
            config.insert("A".into(), json!(a));
            config.insert("B".into(), json!(b));
            let feasible = subord_lab::bounds::bb_janowski_feasible(eta, gamma, a, b)?;
            json!({ "feasible": feasible, "conditions": t9_conditions(eta, gamma, a, b) })
        }
        "t3.1" => {
            let a = params.complex("a")?;
            let b = params.complex("b")?;
            config.insert("A".into(), json!([a.re, a.im]));
            config.insert("B".into(), json!([b.re, b.im]));
            json!({ "eta_min_abs": eta_min_ratio_janowski(a, b)? })
        }
        "t3.2" => {
            let target = params
                .target
                .as_deref()
                .ok_or_else(|| CliError::config("missing --target"))?;
            config.insert("target".into(), json!(target));
            let t = match target {
                "exp" => EtaStarTarget::Exp,
                "sqrt" => EtaStarTarget::Sqrt,
                "crescent" => EtaStarTarget::Crescent,
                "janowski" => {
                    let a = params.real("a")?;
                    let b = params.real("b")?;
                    config.insert("A".into(), json!(a));
                    config.insert("B".into(), json!(b));
                    EtaStarTarget::Janowski { a, b }
                }
                "limacon" => {
                    let s = params.require("s")?;
                    config.insert("s".into(), json!(s));
                    EtaStarTarget::Limacon { s }
                }
                other => {
                    return Err(CliError::config(format!(
                        "unknown t3.2 target `{other}` (exp, sqrt, crescent, janowski, limacon)"
                    )))
                }
            };
            let check = eta_star_cross_check(t)?;
            json!({
                "eta_star": check.derived,
                "reference_form": check.reference,
                "reference_form_mismatch": check.mismatch,
            })
        }
        "t3.3" => {
            let a = params.real("a")?;
            let b = params.real("b")?;
            config.insert("A".into(), json!(a));
            config.insert("B".into(), json!(b));
            json!({ "b0": b0_root(), "eta_min": eta_min_t13(a, b)? })
        }
        "t3.4" => json!({ "eta0": eta0_t14() }),
        "t4.3" => json!({ "threshold": admissibility_threshold(AdmissibilityKind::ZpMinus1) }),
        "t4.4" => json!({ "threshold": admissibility_threshold(AdmissibilityKind::ZpOverP) }),
        "t4.5" => json!({ "threshold": admissibility_threshold(AdmissibilityKind::ZpOverP2) }),
        "ex24" => {
            let w = example_param_ranges(ExampleRange::Ex24Eta);
            json!({ "interval": interval_value(&w) })
        }
        "ex25" => {
            let w = example_param_ranges(ExampleRange::Ex25Gamma);
            json!({ "interval": interval_value(&w) })
        }
        other => {
            return Err(CliError::config(format!(
                "unknown theorem id `{other}` (t2.1, t2.2, t3.1, t3.2, t3.3, t3.4, t4.3, t4.4, t4.5, ex24, ex25)"
            )))
        }
    };
    Ok(to_json(&envelope("bounds", Value::Object(config), result)))
}

/// Every claim id `verify --all` runs.
pub const ALL_CLAIMS: [&str; 15] = [
    "t2.1-crescent",
    "t2.1-limacon",
    "t2.1-exp",
    "t2.2-janowski",
    "t3.1-starlike",
    "t3.1-ratio",
    "t3.2-starlike",
    "t3.2-ratio",
    "t3.3-starlike",
    "t3.3-ratio",
    "t3.4-ratio",
    "t4.3",
    "t4.4",
    "t4.5",
    "nd-transcription",
];

/// Runs one claim with defaults overridden by `params`.
pub fn run_claim(
    claim: &str,
    params: &NumericParams,
    grid: &GridSpec,
) -> CliResult<VerificationReport> {
    let report = match claim {
        "t2.1-crescent" => scan_nonneg(
            FCase::Crescent,
            params.eta.unwrap_or(0.76),
            params.gamma.unwrap_or(-0.6),
            grid,
        )?,
        "t2.1-limacon" => scan_nonneg(
            FCase::Limacon {
                s: params.s.unwrap_or(0.5),
            },
            params.eta.unwrap_or(0.8),
            params.gamma.unwrap_or(-0.6),
            grid,
        )?,
        "t2.1-exp" => scan_nonneg(
            FCase::Exp,
            params.eta.unwrap_or(0.35),
            params.gamma.unwrap_or(-0.3),
            grid,
        )?,
        "t2.2-janowski" => scan_nonneg(
            FCase::Janowski {
                a: params.a.as_deref().map_or(Ok(1.0), |r| {
                    r.parse().map_err(|_| CliError::config("bad --a"))
                })?,
                b: params.b.as_deref().map_or(Ok(0.0), |r| {
                    r.parse().map_err(|_| CliError::config("bad --b"))
                })?,
            },
            params.eta.unwrap_or(0.4),
            params.gamma.unwrap_or(0.0),
            grid,
        )?,
        "t3.1-starlike" => starlike_and_ratio_checks(RatioKind::QTanh, grid)?,
        "t3.1-ratio" => starlike_and_ratio_checks(RatioKind::RatioT11, grid)?,
        "t3.2-starlike" => starlike_and_ratio_checks(RatioKind::QCoshMinus1, grid)?,
        "t3.2-ratio" => starlike_and_ratio_checks(RatioKind::RatioT12, grid)?,
        "t3.3-starlike" => starlike_and_ratio_checks(
            RatioKind::QJanowski {
                a: params.a.as_deref().map_or(Ok(1.0), |r| {
                    r.parse().map_err(|_| CliError::config("bad --a"))
                })?,
                b: params.b.as_deref().map_or(Ok(0.5), |r| {
                    r.parse().map_err(|_| CliError::config("bad --b"))
                })?,
            },
            grid,
        )?,
        "t3.3-ratio" => starlike_and_ratio_checks(
            RatioKind::RatioT13 {
                b: params.b.as_deref().map_or(Ok(-0.5), |r| {
                    r.parse().map_err(|_| CliError::config("bad --b"))
                })?,
            },
            grid,
        )?,
        "t3.4-ratio" => starlike_and_ratio_checks(
            RatioKind::RatioT14 {
                eta: params.eta.unwrap_or_else(eta0_t14),
            },
            grid,
        )?,
        "t4.3" => admissible_psi_check(PsiKind::OnePlusS, grid)?,
        "t4.4" => admissible_psi_check(PsiKind::SOverR, grid)?,
        "t4.5" => admissible_psi_check(PsiKind::OnePlusSOverR2, grid)?,
        "nd-transcription" => transcription_check(20, 0x5eed_2024)?,
        other => {
            return Err(CliError::config(format!(
                "unknown claim id `{other}`; known: {}, nd-transcription",
                ALL_CLAIMS.join(", ")
            )))
        }
    };
    Ok(report)
}

/// `verify [claim|--all]`: emits one report per claim; all_passed drives the
/// exit code.
pub fn cmd_verify(
    claims: &[String],
    params: &NumericParams,
    grid: &GridSpec,
) -> CliResult<(String, bool)> {
    let mut reports = Vec::new();
    for claim in claims {
        reports.push(run_claim(claim, params, grid)?);
    }
    let all_passed = reports.iter().all(|r| r.passed);
    let config = json!({
        "claims": claims,
        "grid": serde_json::to_value(grid).expect("grid serializes"),
    });
    let out = to_json(&envelope(
        "verify",
        config,
        json!({
            "reports": reports,
            "all_passed": all_passed,
        }),
    ));
    Ok((out, all_passed))
}

/// `subcheck --inner f --outer region:R|fn:g`: sampled subordination verdict.
pub fn cmd_subcheck(inner: &str, outer: &str, r: f64, n: usize) -> CliResult<(String, bool)> {
    let inner_spec: FnSpec = inner
        .parse()
        .map_err(|e: Error| CliError::config(e.to_string()))?;
    let verdict = if let Some(region_text) = outer.strip_prefix("region:") {
        let region = parse_region(region_text).map_err(|e| CliError::config(e.to_string()))?;
        check_by_predicate(&inner_spec, region, r, n)?
    } else if let Some(fn_text) = outer.strip_prefix("fn:") {
        let outer_spec: FnSpec = fn_text
            .parse()
            .map_err(|e: Error| CliError::config(e.to_string()))?;
        check_by_winding(&inner_spec, &outer_spec, r, n)?
    } else {
        return Err(CliError::config(
            "--outer must start with `region:` or `fn:`".to_string(),
        ));
    };
    let holds = verdict.holds;
    let out = to_json(&envelope(
        "subcheck",
        json!({ "inner": inner, "outer": outer, "r": r, "n": n }),
        serde_json::to_value(&verdict).expect("verdict serializes"),
    ));
    Ok((out, holds))
}

/// `figure <name>`: renders SVG, refusing when the depicted subordination
/// fails its winding gate.
pub fn cmd_figure(name: &str) -> CliResult<String> {
    let fig: FigureName = name
        .parse()
        .map_err(|e: Error| CliError::config(e.to_string()))?;
    figure_svg(fig).map_err(|e| match e {
        Error::BadArgument(msg) if msg.starts_with("figure gate failed") => CliError::failed(msg),
        other => CliError::config(other.to_string()),
    })
}

/// `curve --region R`: CSV export of a sampled region boundary.
pub fn cmd_curve(region: &str, n: usize) -> CliResult<String> {
    let spec = parse_region(region).map_err(|e| CliError::config(e.to_string()))?;
    let curve = boundary(spec, n)?;
    let thetas: Vec<f64> = curve.thetas().collect();
    Ok(curve_csv(
        &format!("command=curve,region={region},n={n}"),
        &thetas,
        &curve.points,
    ))
}
