//! Numerical subordination checking for concrete analytic functions, by
//! region predicate or by winding number against a target boundary curve,
//! plus the real-axis endpoint interval test for conjugate-symmetric pairs.
//!
//! Verdicts are sampled evidence, not certificates: every verdict records the
//! radius and sample count it was computed at.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quadrature::QuadratureConfig;
use crate::regions::{self, BoundaryCurve, RegionSpec};
use crate::solutions;
use crate::special::{aux_entire, cosh_sqrt, AuxKind, CPoint};

/// A named analytic function on the unit disk.
#[derive(Debug, Clone, PartialEq)]
pub enum FnSpec {
    /// cosh(sqrt z)
    CoshRoot,
    /// e^z
    Exp,
    /// z + sqrt(1 + z^2)
    Crescent,
    /// (1 + Az)/(1 + Bz)
    Janowski { a: f64, b: f64 },
    /// (1 + sz)^2
    Limacon { s: f64 },
    /// sqrt(1 + z)
    SqrtShift,
    /// solution of 1 + eta z phi' = cosh(sqrt z)
    PhiEtaCosh { eta: f64 },
    /// solution of 1 + eta z phi' = (1+Az)/(1+Bz)
    PhiEtaJanowski { eta: f64, a: f64, b: f64 },
    /// 1 + (A/eta) z
    MEta { eta: f64, a: f64 },
    /// integral solution of p + z p'/(eta p - 3/5) = (1 + z/2)^2
    Example24 { eta: f64 },
    /// integral solution of p + 2 z p'/(p + 2 gamma) = e^z
    Example25 { gamma: f64 },
    /// z G'(z)/G(z) for the integral operator G built from `inner`
    Bernardi {
        inner: Box<FnSpec>,
        eta: f64,
        gamma: f64,
    },
    /// c (1+z)/(1-z) + 2z/(1-z^2)
    OpenDoor { c: f64 },
    /// finite Maclaurin series with real coefficients
    CustomSeries { coefficients: Vec<f64> },
}

impl FnSpec {
    /// Value at z = 0 (1 for every disk-normalized family here).
    pub fn center(&self) -> CPoint {
        match self {
            FnSpec::OpenDoor { c } => Complex64::new(*c, 0.0),
            FnSpec::CustomSeries { coefficients } => {
                Complex64::new(coefficients.first().copied().unwrap_or(0.0), 0.0)
            }
            _ => Complex64::new(1.0, 0.0),
        }
    }

    /// True when a closed-form derivative exists (everything except the
    /// quadrature-backed families).
    pub fn has_closed_derivative(&self) -> bool {
        !matches!(
            self,
            FnSpec::Example24 { .. } | FnSpec::Example25 { .. } | FnSpec::Bernardi { .. }
        )
    }
}

/// Outcome of a sampled subordination check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubordVerdict {
    pub holds: bool,
    /// A sampled inner-image point violating containment, present iff !holds.
    pub witness: Option<CPoint>,
    pub r_used: f64,
    pub n_used: usize,
}

/// Value of the named function at z.
pub fn evaluate(f: &FnSpec, z: CPoint) -> Result<CPoint> {
    let cfg = QuadratureConfig::default();
    if z.norm() > 1.0 + 1e-9 && !matches!(f, FnSpec::CustomSeries { .. }) {
        return Err(Error::DomainError(format!("|z| = {} > 1", z.norm())));
    }
    match f {
        FnSpec::CoshRoot => Ok(cosh_sqrt(z)),
        FnSpec::Exp => Ok(z.exp()),
        FnSpec::Crescent => Ok(z + (1.0 + z * z).sqrt()),
        FnSpec::Janowski { a, b } => {
            let denom = 1.0 + b * z;
            if denom.norm() < 1e-12 {
                return Err(Error::PoleAtBoundary(z));
            }
            Ok((1.0 + a * z) / denom)
        }
        FnSpec::Limacon { s } => {
            let w = 1.0 + s * z;
            Ok(w * w)
        }
        FnSpec::SqrtShift => Ok((1.0 + z).sqrt()),
        FnSpec::PhiEtaCosh { eta } => solutions::phi_eta_cosh(z, *eta),
        FnSpec::PhiEtaJanowski { eta, a, b } => solutions::phi_eta_janowski(z, *eta, *a, *b),
        FnSpec::MEta { eta, a } => Ok(solutions::m_eta(z, *eta, *a)),
        FnSpec::Example24 { eta } => solutions::example24(z, *eta, &cfg),
        FnSpec::Example25 { gamma } => solutions::example25(z, *gamma, &cfg),
        FnSpec::Bernardi { inner, eta, gamma } => {
            // p = z G'/G, the unknown of the associated first-order equation
            let g = solutions::bernardi(inner, *eta, *gamma, z, &cfg)?;
            if g.norm() < 1e-14 {
                return Err(Error::NearZeroDenominator(g.norm()));
            }
            let dg = cauchy_ring_derivative(
                |w| solutions::bernardi(inner, *eta, *gamma, w, &cfg),
                z,
            )?;
            Ok(z * dg / g)
        }
        FnSpec::OpenDoor { c } => solutions::open_door(*c, z),
        FnSpec::CustomSeries { coefficients } => {
            let mut acc = Complex64::new(0.0, 0.0);
            for &c in coefficients.iter().rev() {
                acc = acc * z + c;
            }
            Ok(acc)
        }
    }
}

const STENCIL_RADIUS: f64 = 1e-3;

/// f'(z) by an 8-point equally-weighted ring around z; exact through degree 8
/// for analytic f, so the truncation error is O(h^8).
fn cauchy_ring_derivative(
    f: impl Fn(CPoint) -> Result<CPoint>,
    z: CPoint,
) -> Result<CPoint> {
    let h = STENCIL_RADIUS;
    if z.norm() >= 1.0 - 2.0 * h {
        return Err(Error::StencilOutOfDomain { modulus: z.norm() });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..8 {
        let w = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4 * j as f64);
        acc += f(z + h * w)? * w.conj();
    }
    Ok(acc / (8.0 * h))
}

/// Derivative of the named function at z; closed forms where they exist,
/// the Cauchy-ring stencil for the quadrature-backed families.
pub fn derivative(f: &FnSpec, z: CPoint) -> Result<CPoint> {
    match f {
        FnSpec::CoshRoot => Ok(0.5 * aux_entire(AuxKind::SinhOverSqrt, z)?),
        FnSpec::Exp => Ok(z.exp()),
        FnSpec::Crescent => {
            let root = (1.0 + z * z).sqrt();
            if root.norm() < 1e-12 {
                return Err(Error::PoleAtBoundary(z));
            }
            Ok(1.0 + z / root)
        }
        FnSpec::Janowski { a, b } => {
            let denom = 1.0 + b * z;
            if denom.norm() < 1e-12 {
                return Err(Error::PoleAtBoundary(z));
            }
            Ok((a - b) / (denom * denom))
        }
        FnSpec::Limacon { s } => Ok(2.0 * s * (1.0 + s * z)),
        FnSpec::SqrtShift => {
            let root = (1.0 + z).sqrt();
            if root.norm() < 1e-12 {
                return Err(Error::PoleAtBoundary(z));
            }
            Ok(0.5 / root)
        }
        FnSpec::PhiEtaCosh { eta } => {
            if *eta == 0.0 {
                return Err(Error::BadArgument("eta must be nonzero".into()));
            }
            // (cosh sqrt(z) - 1)/(eta z); series for small z to dodge the 0/0
            if z.norm() < 1e-3 {
                let mut sum = Complex64::new(0.5, 0.0);
                let mut term = Complex64::new(0.5, 0.0); // z^(n-1)/(2n)!
                for n in 1..30 {
                    let d = ((2 * n + 1) * (2 * n + 2)) as f64;
                    term = term * z / d;
                    sum += term;
                }
                Ok(sum / *eta)
            } else {
                Ok((cosh_sqrt(z) - 1.0) / (*eta * z))
            }
        }
        FnSpec::PhiEtaJanowski { eta, a, b } => {
            if *eta == 0.0 {
                return Err(Error::BadArgument("eta must be nonzero".into()));
            }
            let denom = 1.0 + *b * z;
            if denom.norm() < 1e-12 {
                return Err(Error::PoleAtBoundary(z));
            }
            Ok((*a - *b) / (*eta * denom))
        }
        FnSpec::MEta { eta, a } => Ok(Complex64::new(a / eta, 0.0)),
        FnSpec::OpenDoor { c } => {
            if (1.0 - z).norm() < 1e-12 || (1.0 + z).norm() < 1e-12 {
                return Err(Error::PoleAtBoundary(z));
            }
            let om = 1.0 - z;
            let d2 = 1.0 - z * z;
            Ok(2.0 * *c / (om * om) + 2.0 * (1.0 + z * z) / (d2 * d2))
        }
        FnSpec::CustomSeries { coefficients } => {
            let mut acc = Complex64::new(0.0, 0.0);
            for (n, &c) in coefficients.iter().enumerate().skip(1).rev() {
                acc = acc * z + c * n as f64;
            }
            Ok(acc)
        }
        _ => cauchy_ring_derivative(|w| evaluate(f, w), z),
    }
}

/// Samples f on |z| = r and tests every sample against the region predicate.
/// The verdict is numerical evidence at (r, n), not a proof.
pub fn check_by_predicate(
    f: &FnSpec,
    region: RegionSpec,
    r: f64,
    n: usize,
) -> Result<SubordVerdict> {
    if !(0.0..1.0).contains(&r) || r == 0.0 {
        return Err(Error::BadArgument(format!("need 0 < r < 1, got {r}")));
    }
    if n < 256 {
        return Err(Error::BadArgument(format!("need n >= 256 samples, got {n}")));
    }
    region.validate()?;
    let center = f.center();
    if !regions::contains(region, center) {
        return Ok(SubordVerdict {
            holds: false,
            witness: Some(center),
            r_used: r,
            n_used: n,
        });
    }
    let values: Result<Vec<CPoint>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let theta =
                -std::f64::consts::PI + 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            evaluate(f, Complex64::from_polar(r, theta))
        })
        .collect();
    let values = values?;
    // first witness by ascending theta keeps the verdict scheduling-independent
    let witness = values.iter().find(|w| !regions::contains(region, **w));
    Ok(SubordVerdict {
        holds: witness.is_none(),
        witness: witness.copied(),
        r_used: r,
        n_used: n,
    })
}

/// Builds the target's boundary curve at |z| = 1 and verifies that every
/// sample of f on |z| = r winds once around it. The caller asserts g is
/// injective on the closed disk.
pub fn check_by_winding(f: &FnSpec, g: &FnSpec, r: f64, n: usize) -> Result<SubordVerdict> {
    if !(0.0..1.0).contains(&r) || r == 0.0 {
        return Err(Error::BadArgument(format!("need 0 < r < 1, got {r}")));
    }
    if n < 256 {
        return Err(Error::BadArgument(format!("need n >= 256 samples, got {n}")));
    }
    if (f.center() - g.center()).norm() > 1e-12 {
        return Err(Error::BadArgument(
            "subordination needs f(0) = g(0)".into(),
        ));
    }
    let curve = function_boundary(g, n)?;
    let samples: Result<Vec<CPoint>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let theta =
                -std::f64::consts::PI + 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            evaluate(f, Complex64::from_polar(r, theta))
        })
        .collect();
    let samples = samples?;
    for &w in &samples {
        match regions::winding_number(&curve, w) {
            Ok(1) => {}
            Ok(_) => {
                return Ok(SubordVerdict {
                    holds: false,
                    witness: Some(w),
                    r_used: r,
                    n_used: n,
                })
            }
            Err(Error::TooCloseToBoundary { distance, .. }) => {
                return Err(Error::TooCloseToBoundary { point: w, distance })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(SubordVerdict {
        holds: true,
        witness: None,
        r_used: r,
        n_used: n,
    })
}

/// Image of the unit circle under g, as a closed polyline.
pub fn function_boundary(g: &FnSpec, n: usize) -> Result<BoundaryCurve> {
    if n < 64 {
        return Err(Error::BadArgument(format!("need n >= 64 samples, got {n}")));
    }
    let points: Result<Vec<CPoint>> = (0..n)
        .map(|k| {
            let theta =
                -std::f64::consts::PI + 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            evaluate(g, Complex64::from_polar(1.0, theta))
        })
        .collect();
    Ok(BoundaryCurve {
        points: points?,
        source: RegionSpec::Disk {
            center: g.center(),
            radius: 0.0,
        },
        n_samples: n,
    })
}

/// The real-axis endpoint test
/// outer(-1) <= inner(-1) < inner(1) <= outer(1),
/// the necessary condition for inner to be subordinate to outer when both
/// have real coefficients. The bounds treat it as sufficient for their
/// specific families; acceptance always corroborates with a winding check.
pub fn endpoint_interval_check(inner: &FnSpec, outer: &FnSpec) -> Result<bool> {
    let mut vals = [0.0_f64; 4];
    for (i, (spec, x)) in [
        (inner, -1.0_f64),
        (inner, 1.0),
        (outer, -1.0),
        (outer, 1.0),
    ]
    .iter()
    .enumerate()
    {
        let v = evaluate(spec, Complex64::new(*x, 0.0))?;
        if v.im.abs() > 1e-12 {
            return Err(Error::NotRealOnAxis {
                at: *x,
                imag: v.im.abs(),
            });
        }
        vals[i] = v.re;
    }
    let (inner_m1, inner_p1, outer_m1, outer_p1) = (vals[0], vals[1], vals[2], vals[3]);
    Ok(outer_m1 <= inner_m1 && inner_m1 < inner_p1 && inner_p1 <= outer_p1)
}

impl fmt::Display for FnSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FnSpec::CoshRoot => write!(f, "cosh_root"),
            FnSpec::Exp => write!(f, "exp"),
            FnSpec::Crescent => write!(f, "crescent"),
            FnSpec::Janowski { a, b } => write!(f, "janowski:A={a},B={b}"),
            FnSpec::Limacon { s } => write!(f, "limacon:s={s}"),
            FnSpec::SqrtShift => write!(f, "sqrt_shift"),
            FnSpec::PhiEtaCosh { eta } => write!(f, "phi_eta_cosh:eta={eta}"),
            FnSpec::PhiEtaJanowski { eta, a, b } => {
                write!(f, "phi_eta_janowski:eta={eta},A={a},B={b}")
            }
            FnSpec::MEta { eta, a } => write!(f, "m_eta:eta={eta},A={a}"),
            FnSpec::Example24 { eta } => write!(f, "example24:eta={eta}"),
            FnSpec::Example25 { gamma } => write!(f, "example25:gamma={gamma}"),
            FnSpec::Bernardi { inner, eta, gamma } => {
                let name = match inner.as_ref() {
                    FnSpec::CustomSeries { coefficients } if coefficients == &[0.0, 1.0] => {
                        "identity"
                    }
                    FnSpec::CustomSeries { .. } => "crescent_starlike",
                    other => return write!(f, "bernardi:inner=({other}),eta={eta},gamma={gamma}"),
                };
                write!(f, "bernardi:inner={name},eta={eta},gamma={gamma}")
            }
            FnSpec::OpenDoor { c } => write!(f, "open_door:c={c}"),
            FnSpec::CustomSeries { coefficients } => {
                write!(f, "custom_series:c=")?;
                for (i, c) in coefficients.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_params(s: &str) -> Result<Vec<(String, String)>> {
    s.split(',')
        .map(|kv| {
            let (k, v) = kv.split_once('=').ok_or_else(|| {
                Error::BadArgument(format!("expected key=value, got `{kv}`"))
            })?;
            Ok((k.trim().to_ascii_lowercase(), v.trim().to_string()))
        })
        .collect()
}

fn take(params: &[(String, String)], key: &str) -> Result<f64> {
    let raw = params
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
        .ok_or_else(|| Error::BadArgument(format!("missing parameter `{key}`")))?;
    raw.parse::<f64>()
        .map_err(|_| Error::BadArgument(format!("cannot parse `{raw}` as a number")))
}

impl FromStr for FnSpec {
    type Err = Error;

    /// Canonical text form, e.g. `phi_eta_cosh:eta=0.758753` or
    /// `janowski:A=1,B=0.5`.
    fn from_str(s: &str) -> Result<Self> {
        let (family, rest) = match s.split_once(':') {
            Some((f, r)) => (f.trim(), Some(r)),
            None => (s.trim(), None),
        };
        let params = match rest {
            Some(r) => parse_params(r)?,
            None => Vec::new(),
        };
        let spec = match family {
            "cosh_root" => FnSpec::CoshRoot,
            "exp" => FnSpec::Exp,
            "crescent" => FnSpec::Crescent,
            "janowski" => FnSpec::Janowski {
                a: take(&params, "a")?,
                b: take(&params, "b")?,
            },
            "limacon" => FnSpec::Limacon {
                s: take(&params, "s")?,
            },
            "sqrt_shift" => FnSpec::SqrtShift,
            "phi_eta_cosh" => FnSpec::PhiEtaCosh {
                eta: take(&params, "eta")?,
            },
            "phi_eta_janowski" => FnSpec::PhiEtaJanowski {
                eta: take(&params, "eta")?,
                a: take(&params, "a")?,
                b: take(&params, "b")?,
            },
            "m_eta" => FnSpec::MEta {
                eta: take(&params, "eta")?,
                a: take(&params, "a")?,
            },
            "example24" => FnSpec::Example24 {
                eta: take(&params, "eta")?,
            },
            "example25" => FnSpec::Example25 {
                gamma: take(&params, "gamma")?,
            },
            "bernardi" => {
                let inner = params
                    .iter()
                    .find(|(k, _)| k == "inner")
                    .map(|(_, v)| v.as_str())
                    .ok_or_else(|| Error::BadArgument("missing parameter `inner`".into()))?;
                let inner = match inner {
                    "identity" => FnSpec::CustomSeries {
                        coefficients: vec![0.0, 1.0],
                    },
                    "crescent_starlike" => FnSpec::CustomSeries {
                        coefficients: solutions::crescent_starlike_coefficients(),
                    },
                    other => {
                        return Err(Error::BadArgument(format!(
                            "unknown inner function `{other}` (expected identity or crescent_starlike)"
                        )))
                    }
                };
                FnSpec::Bernardi {
                    inner: Box::new(inner),
                    eta: take(&params, "eta")?,
                    gamma: take(&params, "gamma")?,
                }
            }
            "open_door" => FnSpec::OpenDoor {
                c: take(&params, "c")?,
            },
            "custom_series" => {
                let raw = params
                    .iter()
                    .find(|(k, _)| k == "c")
                    .map(|(_, v)| v.as_str())
                    .ok_or_else(|| Error::BadArgument("missing parameter `c`".into()))?;
                let coefficients: std::result::Result<Vec<f64>, _> =
                    raw.split(';').map(|x| x.trim().parse::<f64>()).collect();
                FnSpec::CustomSeries {
                    coefficients: coefficients
                        .map_err(|_| Error::BadArgument("bad series coefficients".into()))?,
                }
            }
            other => {
                return Err(Error::BadArgument(format!("unknown function family `{other}`")))
            }
        };
        Ok(spec)
    }
}

/// Canonical text form for regions, used by the CLI
/// (`region:janowski:A=1,B=0.5`, `region:disk:re=1,im=0,r=1.4142`).
pub fn parse_region(s: &str) -> Result<RegionSpec> {
    let (family, rest) = match s.split_once(':') {
        Some((f, r)) => (f.trim(), Some(r)),
        None => (s.trim(), None),
    };
    let params = match rest {
        Some(r) => parse_params(r)?,
        None => Vec::new(),
    };
    let region = match family {
        "cosh_root" => RegionSpec::CoshRoot,
        "exp" => RegionSpec::Exp,
        "crescent" => RegionSpec::Crescent,
        "janowski" => RegionSpec::Janowski {
            a: take(&params, "a")?,
            b: take(&params, "b")?,
        },
        "limacon" => RegionSpec::Limacon {
            s: take(&params, "s")?,
        },
        "sqrt_half_lens" => RegionSpec::SqrtHalfLens,
        "disk" => RegionSpec::Disk {
            center: Complex64::new(take(&params, "re")?, take(&params, "im")?),
            radius: take(&params, "r")?,
        },
        other => return Err(Error::BadArgument(format!("unknown region `{other}`"))),
    };
    region.validate()?;
    Ok(region)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn evaluate_reference_points() {
        assert_eq!(evaluate(&FnSpec::CoshRoot, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        let j = FnSpec::Janowski { a: 1.0, b: 0.0 };
        for &z in &[c(0.3, 0.2), c(-0.7, 0.1)] {
            assert!((evaluate(&j, z).unwrap() - (1.0 + z)).norm() < 1e-15);
        }
        let k = crate::special::Constants::new();
        let eta = 0.7;
        let v = evaluate(&FnSpec::PhiEtaCosh { eta }, c(1.0, 0.0)).unwrap();
        assert!((v.re - (1.0 + 2.0 * (k.chi1 - k.euler_gamma) / eta)).abs() < 1e-13);
    }

    #[test]
    fn evaluate_rejects_points_outside_the_disk() {
        assert!(matches!(
            evaluate(&FnSpec::CoshRoot, c(1.5, 0.0)),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            evaluate(&FnSpec::Example24 { eta: 0.8 }, c(1.0, 0.0)),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn derivative_reference_points() {
        let j = FnSpec::Janowski { a: 1.0, b: 0.0 };
        assert!((derivative(&j, c(0.4, 0.3)).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        // q'(1) = sinh(1)/2 for cosh(sqrt z)
        let d = derivative(&FnSpec::CoshRoot, c(1.0, 0.0)).unwrap();
        assert!((d.re - 1.0_f64.sinh() / 2.0).abs() < 1e-14);
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let k = bounds::constants();
        let families: Vec<FnSpec> = vec![
            FnSpec::CoshRoot,
            FnSpec::Exp,
            FnSpec::Crescent,
            FnSpec::Janowski { a: 1.0, b: 0.5 },
            FnSpec::Limacon { s: 0.5 },
            FnSpec::SqrtShift,
            FnSpec::PhiEtaCosh { eta: 0.76 },
            FnSpec::PhiEtaJanowski { eta: k.mu, a: 0.5, b: -0.5 },
            FnSpec::MEta { eta: 2.2, a: 1.0 },
            FnSpec::OpenDoor { c: 0.2 },
            FnSpec::CustomSeries { coefficients: vec![1.0, 0.5, -0.25, 0.125] },
        ];
        let mut state = 0xabcdef1234567890_u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let h = 1e-5;
        for f in &families {
            for _ in 0..100 {
                let z = Complex64::from_polar(
                    0.8 * next().sqrt(),
                    (next() - 0.5) * 2.0 * std::f64::consts::PI,
                );
                let fd = (evaluate(f, z + h).unwrap() - evaluate(f, z - h).unwrap()) / (2.0 * h);
                let d = derivative(f, z).unwrap();
                assert!((fd - d).norm() <= 1e-5, "family {f}, z = {z}");
            }
        }
    }

    #[test]
    fn stencil_derivative_matches_closed_form_families() {
        // use the ring stencil against a family with a known derivative
        let f = FnSpec::Exp;
        let z = c(0.3, 0.2);
        let d = cauchy_ring_derivative(|w| evaluate(&f, w), z).unwrap();
        assert!((d - z.exp()).norm() < 1e-10);
        assert!(matches!(
            cauchy_ring_derivative(|w| evaluate(&f, w), c(0.9995, 0.0)),
            Err(Error::StencilOutOfDomain { .. })
        ));
    }

    #[test]
    fn identity_subordination_holds() {
        let v = check_by_predicate(&FnSpec::CoshRoot, RegionSpec::CoshRoot, 0.99, 1024).unwrap();
        assert!(v.holds && v.witness.is_none());
        let v = check_by_winding(&FnSpec::CoshRoot, &FnSpec::CoshRoot, 0.99, 512).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn scaled_linear_map_stays_in_disk() {
        // m_{2 eta} maps into the disk of radius A/eta around 1
        let eta = 0.9;
        let a = 1.0;
        let v = check_by_predicate(
            &FnSpec::MEta { eta: 2.0 * eta, a },
            RegionSpec::Disk {
                center: c(1.0, 0.0),
                radius: a / eta,
            },
            0.99,
            512,
        )
        .unwrap();
        assert!(v.holds);
    }

    #[test]
    fn sharpness_probe_fails_below_threshold() {
        let k = bounds::constants();
        let eta_e = 2.0 * std::f64::consts::E * (k.euler_gamma - k.ci1)
            / (std::f64::consts::E - 1.0);
        let v = check_by_predicate(
            &FnSpec::PhiEtaCosh { eta: 0.5 * eta_e },
            RegionSpec::Exp,
            0.999,
            2048,
        )
        .unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert!(w.im.abs() < 1e-9, "expected a real-axis witness, got {w}");
        assert!(w.re < 0.5, "witness should sit near the left end, got {w}");
    }

    #[test]
    fn winding_check_at_sharp_thresholds() {
        let k = bounds::constants();
        let eta_e = 2.0 * std::f64::consts::E * (k.euler_gamma - k.ci1)
            / (std::f64::consts::E - 1.0);
        let v = check_by_winding(
            &FnSpec::PhiEtaCosh { eta: eta_e },
            &FnSpec::Exp,
            0.995,
            2048,
        )
        .unwrap();
        assert!(v.holds, "witness {:?}", v.witness);
    }

    #[test]
    fn endpoint_check_reference_cases() {
        // identity pair
        assert!(endpoint_interval_check(&FnSpec::CoshRoot, &FnSpec::CoshRoot).unwrap());
        // linear solution at the exact binding slope 2 eta = A csc^2(1/2)
        let a = 1.0;
        let eta = a / (2.0 * 0.5_f64.sin().powi(2));
        assert!(endpoint_interval_check(&FnSpec::MEta { eta, a }, &FnSpec::CoshRoot).unwrap());
        // slightly smaller eta pushes m(-1) below cos 1
        assert!(!endpoint_interval_check(
            &FnSpec::MEta { eta: eta * 0.999, a },
            &FnSpec::CoshRoot
        )
        .unwrap());
    }

    #[test]
    fn endpoint_check_rejects_decreasing_inner() {
        // inner(1) < inner(-1) breaks the strict middle comparison
        let increasing = FnSpec::CustomSeries {
            coefficients: vec![1.0, 0.3],
        };
        let decreasing = FnSpec::CustomSeries {
            coefficients: vec![1.0, -0.3],
        };
        assert!(!endpoint_interval_check(&decreasing, &increasing).unwrap());
    }

    #[test]
    fn text_forms_round_trip() {
        let specs = [
            "cosh_root",
            "exp",
            "crescent",
            "janowski:A=1,B=0.5",
            "limacon:s=0.5",
            "sqrt_shift",
            "phi_eta_cosh:eta=0.758753",
            "phi_eta_janowski:eta=2.5,A=0.5,B=-0.5",
            "m_eta:eta=2,A=1",
            "example24:eta=0.8",
            "example25:gamma=-0.35",
            "open_door:c=0.2",
            "bernardi:inner=identity,eta=1,gamma=1",
        ];
        for s in specs {
            let parsed: FnSpec = s.parse().unwrap();
            let printed = parsed.to_string();
            let reparsed: FnSpec = printed.parse().unwrap();
            assert_eq!(parsed, reparsed, "{s}");
        }
        assert!("nonsense".parse::<FnSpec>().is_err());
        assert!("janowski:A=1".parse::<FnSpec>().is_err());
    }

    #[test]
    fn region_text_forms() {
        assert_eq!(parse_region("crescent").unwrap(), RegionSpec::Crescent);
        assert!(parse_region("janowski:A=0.5,B=-0.5").is_ok());
        assert!(parse_region("janowski:A=0.5,B=0.5").is_err());
        assert!(parse_region("disk:re=1,im=0,r=1.5").is_ok());
        assert!(parse_region("disk:re=1,im=0,r=-1").is_err());
    }
}
