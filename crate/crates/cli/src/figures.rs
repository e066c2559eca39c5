//! Figure construction: each figure overlays a target-domain boundary with
//! the extremal solution's image at the sharp parameter, gated by a winding
//! subordination check before anything is rendered.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use subord_lab::bounds::{eta_min_t13, eta_star, EtaStarTarget};
use subord_lab::error::{Error, Result};
use subord_lab::regions::{boundary, RegionSpec};
use subord_lab::subord::{check_by_winding, function_boundary, FnSpec};

const FIG_SAMPLES: usize = 512;
const GATE_R: f64 = 0.995;
const GATE_N: usize = 2048;
const SQRT2: f64 = std::f64::consts::SQRT_2;

/// The figure catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureName {
    /// the crescent as the intersection of its two defining disks
    Fig1,
    /// extremal solution inside the exponential image
    Fig2a,
    /// extremal solution inside the crescent
    Fig2b,
    /// extremal solution inside the sqrt(1+z) lens
    Fig2c,
    /// extremal solution inside the Janowski disk (A=1, B=1/2)
    Fig2d,
    /// extremal solution inside the limacon (s = 1/sqrt2)
    Fig2e,
    /// logarithmic extremal solution inside the cosh-root region
    Fig3,
}

impl FigureName {
    pub const ALL: [FigureName; 7] = [
        FigureName::Fig1,
        FigureName::Fig2a,
        FigureName::Fig2b,
        FigureName::Fig2c,
        FigureName::Fig2d,
        FigureName::Fig2e,
        FigureName::Fig3,
    ];
}

impl fmt::Display for FigureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FigureName::Fig1 => "fig1",
            FigureName::Fig2a => "fig2a",
            FigureName::Fig2b => "fig2b",
            FigureName::Fig2c => "fig2c",
            FigureName::Fig2d => "fig2d",
            FigureName::Fig2e => "fig2e",
            FigureName::Fig3 => "fig3",
        };
        f.write_str(s)
    }
}

impl FromStr for FigureName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "fig1" => FigureName::Fig1,
            "fig2a" => FigureName::Fig2a,
            "fig2b" => FigureName::Fig2b,
            "fig2c" => FigureName::Fig2c,
            "fig2d" => FigureName::Fig2d,
            "fig2e" => FigureName::Fig2e,
            "fig3" => FigureName::Fig3,
            other => {
                return Err(Error::BadArgument(format!(
                    "unknown figure `{other}` (expected fig1, fig2a..fig2e, fig3)"
                )))
            }
        })
    }
}

struct Curve {
    label: String,
    points: Vec<Complex64>,
    color: &'static str,
    filled: bool,
}

/// The (inner, outer) pair a comparison figure depicts.
pub fn figure_pair(name: FigureName) -> Result<Option<(FnSpec, FnSpec)>> {
    let pair = match name {
        FigureName::Fig1 => None,
        FigureName::Fig2a => Some((
            FnSpec::PhiEtaCosh {
                eta: eta_star(EtaStarTarget::Exp)?,
            },
            FnSpec::Exp,
        )),
        FigureName::Fig2b => Some((
            FnSpec::PhiEtaCosh {
                eta: eta_star(EtaStarTarget::Crescent)?,
            },
            FnSpec::Crescent,
        )),
        FigureName::Fig2c => Some((
            FnSpec::PhiEtaCosh {
                eta: eta_star(EtaStarTarget::Sqrt)?,
            },
            FnSpec::SqrtShift,
        )),
        FigureName::Fig2d => Some((
            FnSpec::PhiEtaCosh {
                eta: eta_star(EtaStarTarget::Janowski { a: 1.0, b: 0.5 })?,
            },
            FnSpec::Janowski { a: 1.0, b: 0.5 },
        )),
        FigureName::Fig2e => Some((
            FnSpec::PhiEtaCosh {
                eta: eta_star(EtaStarTarget::Limacon { s: 1.0 / SQRT2 })?,
            },
            FnSpec::Limacon { s: 1.0 / SQRT2 },
        )),
        FigureName::Fig3 => Some((
            FnSpec::PhiEtaJanowski {
                eta: eta_min_t13(0.5, -0.5)?,
                a: 0.5,
                b: -0.5,
            },
            FnSpec::CoshRoot,
        )),
    };
    Ok(pair)
}

/// Renders the named figure to SVG. A comparison figure is refused unless
/// the subordination it depicts passes the winding check at r = 0.995.
pub fn figure_svg(name: FigureName) -> Result<String> {
    match figure_pair(name)? {
        None => {
            // the crescent and its two defining circles
            let crescent = boundary(RegionSpec::Crescent, FIG_SAMPLES)?;
            for w in &crescent.points {
                if (w - 1.0).norm() > SQRT2 + 1e-9 || (w + 1.0).norm() < SQRT2 - 1e-9 {
                    return Err(Error::BadArgument(format!(
                        "figure gate failed: crescent sample {w} escapes its defining disks"
                    )));
                }
            }
            let disk1 = boundary(
                RegionSpec::Disk {
                    center: Complex64::new(1.0, 0.0),
                    radius: SQRT2,
                },
                FIG_SAMPLES,
            )?;
            let disk2 = boundary(
                RegionSpec::Disk {
                    center: Complex64::new(-1.0, 0.0),
                    radius: SQRT2,
                },
                FIG_SAMPLES,
            )?;
            let config = format!("figure=fig1,n={FIG_SAMPLES}");
            Ok(render_svg(
                "fig1: crescent as the intersection of two disks",
                &config,
                &[
                    Curve {
                        label: "|w-1| = sqrt2".into(),
                        points: disk1.points,
                        color: "#1f77b4",
                        filled: false,
                    },
                    Curve {
                        label: "|w+1| = sqrt2".into(),
                        points: disk2.points,
                        color: "#2ca02c",
                        filled: false,
                    },
                    Curve {
                        label: "crescent boundary".into(),
                        points: crescent.points,
                        color: "#d62728",
                        filled: true,
                    },
                ],
            ))
        }
        Some((inner, outer)) => {
            let verdict = check_by_winding(&inner, &outer, GATE_R, GATE_N)?;
            if !verdict.holds {
                return Err(Error::BadArgument(format!(
                    "figure gate failed: {inner} escapes {outer} near {:?}",
                    verdict.witness
                )));
            }
            let outer_curve = function_boundary(&outer, FIG_SAMPLES)?;
            let inner_curve = function_boundary(&inner, FIG_SAMPLES)?;
            let config = format!(
                "figure={name},outer={outer},inner={inner},n={FIG_SAMPLES},gate_r={GATE_R},gate_n={GATE_N}"
            );
            Ok(render_svg(
                &format!("{name}: boundary images of the unit circle"),
                &config,
                &[
                    Curve {
                        label: format!("outer: {outer}"),
                        points: outer_curve.points,
                        color: "#1f77b4",
                        filled: false,
                    },
                    Curve {
                        label: format!("inner: {inner}"),
                        points: inner_curve.points,
                        color: "#d62728",
                        filled: false,
                    },
                ],
            ))
        }
    }
}

const VIEW: f64 = 640.0;
const MARGIN: f64 = 0.08;

fn render_svg(title: &str, config: &str, curves: &[Curve]) -> String {
    let mut min_re = f64::INFINITY;
    let mut max_re = f64::NEG_INFINITY;
    let mut min_im = f64::INFINITY;
    let mut max_im = f64::NEG_INFINITY;
    for c in curves {
        for p in &c.points {
            min_re = min_re.min(p.re);
            max_re = max_re.max(p.re);
            min_im = min_im.min(p.im);
            max_im = max_im.max(p.im);
        }
    }
    let span = (max_re - min_re).max(max_im - min_im).max(1e-9);
    let pad = MARGIN * span;
    let scale = VIEW / (span + 2.0 * pad);
    let cx = 0.5 * (min_re + max_re);
    let cy = 0.5 * (min_im + max_im);
    let to_x = |re: f64| (re - cx) * scale + VIEW / 2.0;
    let to_y = |im: f64| VIEW / 2.0 - (im - cy) * scale;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{VIEW}\" height=\"{VIEW}\" \
         viewBox=\"0 0 {VIEW} {VIEW}\">\n"
    ));
    svg.push_str(&format!("<!-- config: {config} -->\n"));
    svg.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{VIEW}\" height=\"{VIEW}\" fill=\"#ffffff\"/>\n"
    ));
    // axes, when the origin lines cross the viewport
    if min_re - pad <= 0.0 && 0.0 <= max_re + pad {
        svg.push_str(&format!(
            "<line x1=\"{:.6}\" y1=\"0\" x2=\"{:.6}\" y2=\"{VIEW}\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
            to_x(0.0),
            to_x(0.0)
        ));
    }
    if min_im - pad <= 0.0 && 0.0 <= max_im + pad {
        svg.push_str(&format!(
            "<line x1=\"0\" y1=\"{:.6}\" x2=\"{VIEW}\" y2=\"{:.6}\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
            to_y(0.0),
            to_y(0.0)
        ));
    }
    for c in curves {
        let mut d = String::new();
        for (i, p) in c.points.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            d.push_str(&format!("{cmd}{:.6} {:.6} ", to_x(p.re), to_y(p.im)));
        }
        d.push('Z');
        let fill = if c.filled {
            format!("fill=\"{}\" fill-opacity=\"0.25\"", c.color)
        } else {
            "fill=\"none\"".to_string()
        };
        svg.push_str(&format!(
            "<path d=\"{d}\" {fill} stroke=\"{}\" stroke-width=\"1.5\"/>\n",
            c.color
        ));
    }
    svg.push_str(&format!(
        "<text x=\"16\" y=\"24\" font-family=\"monospace\" font-size=\"14\" fill=\"#000000\">{}</text>\n",
        xml_escape(title)
    ));
    for (i, c) in curves.iter().enumerate() {
        let y = 44.0 + 18.0 * i as f64;
        svg.push_str(&format!(
            "<line x1=\"16\" y1=\"{:.6}\" x2=\"44\" y2=\"{:.6}\" stroke=\"{}\" stroke-width=\"2\"/>\n",
            y - 4.0,
            y - 4.0,
            c.color
        ));
        svg.push_str(&format!(
            "<text x=\"50\" y=\"{y}\" font-family=\"monospace\" font-size=\"12\" fill=\"#000000\">{}</text>\n",
            xml_escape(&c.label)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
