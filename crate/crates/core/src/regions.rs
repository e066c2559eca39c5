//! Image-domain membership predicates, boundary parametrizations, and the
//! superset disks used by the containment proofs.
//!
//! All regions are open; boundary points and branch-cut points classify as
//! outside, matching the strict subordination of open disks everywhere in the
//! bounds.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::special::{cosh_sqrt, CPoint};

const SQRT2: f64 = std::f64::consts::SQRT_2;

/// One of the image domains, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum RegionSpec {
    /// Image of cosh(sqrt z): |log(w + sqrt(w^2-1))|^2 < 1.
    CoshRoot,
    /// Image of e^z: |log w| < 1.
    Exp,
    /// Lune |w-1| < sqrt2 and |w+1| > sqrt2, the image of z + sqrt(1+z^2).
    Crescent,
    /// Disk/half-plane image of (1+Az)/(1+Bz): |w-1| < |A - Bw|.
    Janowski { a: f64, b: f64 },
    /// Limacon-bounded image of (1+sz)^2.
    Limacon { s: f64 },
    /// Image of sqrt(1+z): Re w > 0 and |w^2-1| < 1.
    SqrtHalfLens,
    /// Round disk |w - center| < radius.
    Disk { center: CPoint, radius: f64 },
}

impl RegionSpec {
    /// Validates the tag's parameter invariants.
    pub fn validate(&self) -> Result<()> {
        match *self {
            RegionSpec::Janowski { a, b } => {
                if !(-1.0..=1.0).contains(&b) || b >= a || a > 1.0 {
                    return Err(Error::BadArgument(format!(
                        "Janowski requires -1 <= B < A <= 1, got A={a}, B={b}"
                    )));
                }
            }
            RegionSpec::Limacon { s } => {
                if s == 0.0 || s.abs() > 1.0 / SQRT2 {
                    return Err(Error::BadArgument(format!(
                        "Limacon requires 0 < |s| <= 1/sqrt2, got s={s}"
                    )));
                }
            }
            RegionSpec::Disk { radius, .. } if radius <= 0.0 => {
                return Err(Error::BadArgument(format!(
                    "Disk radius must be positive, got {radius}"
                )));
            }
            _ => {}
        }
        Ok(())
    }

    /// The region's center, the image of z = 0 under its generating map.
    pub fn center(&self) -> CPoint {
        match *self {
            RegionSpec::Disk { center, .. } => center,
            _ => Complex64::new(1.0, 0.0),
        }
    }
}

/// |log(w + sqrt(w^2-1))|^2 with principal branches; the defining quantity of
/// the cosh(sqrt z) image domain. Errors when w + sqrt(w^2-1) falls on the
/// principal logarithm's cut.
pub fn coshroot_log_modulus_sq(w: CPoint) -> Result<f64> {
    let inner = w + (w * w - 1.0).sqrt();
    if inner.im == 0.0 && inner.re <= 0.0 {
        return Err(Error::BranchCut(w));
    }
    Ok(inner.ln().norm_sqr())
}

/// Strict membership test for `w` in the open region.
///
/// Total: points on a needed branch cut are definitively outside and map to
/// `false` (w real <= -1 for the cosh-root region, w real <= 0 for the
/// exponential one).
pub fn contains(region: RegionSpec, w: CPoint) -> bool {
    match region {
        RegionSpec::CoshRoot => match coshroot_log_modulus_sq(w) {
            Ok(m) => m < 1.0,
            Err(_) => false,
        },
        RegionSpec::Exp => {
            if w.im == 0.0 && w.re <= 0.0 {
                false
            } else {
                w.ln().norm_sqr() < 1.0
            }
        }
        RegionSpec::Crescent => (w - 1.0).norm() < SQRT2 && (w + 1.0).norm() > SQRT2,
        RegionSpec::Janowski { a, b } => (w - 1.0).norm() < (a - b * w).norm(),
        RegionSpec::Limacon { s } => {
            let u = w.re - 1.0;
            let v = w.im;
            let s2 = s * s;
            let lhs = u * u + v * v - s2 * s2;
            lhs * lhs < 4.0 * s2 * ((u + s2) * (u + s2) + v * v)
        }
        RegionSpec::SqrtHalfLens => w.re > 0.0 && (w * w - 1.0).norm() < 1.0,
        RegionSpec::Disk { center, radius } => (w - center).norm() < radius,
    }
}

/// Closed polyline sampled from a univalent map of the unit circle.
#[derive(Debug, Clone, Serialize)]
pub struct BoundaryCurve {
    /// Sample points in order; the last connects back to the first.
    pub points: Vec<CPoint>,
    /// Where the curve came from.
    pub source: RegionSpec,
    /// Number of samples.
    pub n_samples: usize,
}

impl BoundaryCurve {
    /// Builds a closed polyline directly from samples of a boundary map.
    /// theta_k = -pi + 2 pi k / n, k = 0..n-1.
    pub fn from_map(source: RegionSpec, n: usize, map: impl Fn(f64) -> CPoint) -> Self {
        let points = (0..n)
            .map(|k| {
                let theta = -std::f64::consts::PI
                    + 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                map(theta)
            })
            .collect();
        BoundaryCurve {
            points,
            source,
            n_samples: n,
        }
    }

    /// theta values matching `points`, for CSV export.
    pub fn thetas(&self) -> impl Iterator<Item = f64> + '_ {
        let n = self.n_samples;
        (0..n).map(move |k| {
            -std::f64::consts::PI + 2.0 * std::f64::consts::PI * k as f64 / n as f64
        })
    }
}

/// Samples the region's generating map at n equispaced boundary angles.
pub fn boundary(region: RegionSpec, n: usize) -> Result<BoundaryCurve> {
    if n < 64 {
        return Err(Error::BadArgument(format!("need n >= 64 samples, got {n}")));
    }
    region.validate()?;
    if let RegionSpec::Janowski { b, .. } = region {
        if b <= -1.0 {
            return Err(Error::BadArgument(
                "Janowski boundary with B = -1 is unbounded".into(),
            ));
        }
    }
    let curve = BoundaryCurve::from_map(region, n, |theta| {
        let z = Complex64::from_polar(1.0, theta);
        match region {
            RegionSpec::CoshRoot => cosh_sqrt(z),
            RegionSpec::Exp => z.exp(),
            RegionSpec::Crescent => z + (1.0 + z * z).sqrt(),
            RegionSpec::Janowski { a, b } => (1.0 + a * z) / (1.0 + b * z),
            RegionSpec::Limacon { s } => {
                let w = 1.0 + s * z;
                w * w
            }
            RegionSpec::SqrtHalfLens => (1.0 + z).sqrt(),
            RegionSpec::Disk { center, radius } => center + radius * z,
        }
    });
    Ok(curve)
}

/// Signed winding number of the closed polyline about `w`, by summing
/// oriented angle increments. The sum must land within 0.25 of an integer.
pub fn winding_number(curve: &BoundaryCurve, w: CPoint) -> Result<i32> {
    winding_number_of_points(&curve.points, w)
}

/// Winding number of an arbitrary closed polyline (last point connects to
/// first) about `w`.
pub fn winding_number_of_points(points: &[CPoint], w: CPoint) -> Result<i32> {
    const GUARD: f64 = 1e-9;
    let n = points.len();
    let mut total = 0.0_f64;
    for j in 0..n {
        let p = points[j] - w;
        let q = points[(j + 1) % n] - w;
        if segment_distance(p, q) < GUARD {
            return Err(Error::TooCloseToBoundary {
                point: w,
                distance: segment_distance(p, q),
            });
        }
        // oriented angle from p to q
        let cross = p.re * q.im - p.im * q.re;
        let dot = p.re * q.re + p.im * q.im;
        total += cross.atan2(dot);
    }
    let turns = total / (2.0 * std::f64::consts::PI);
    let nearest = turns.round();
    let residue = (turns - nearest).abs();
    // residue is NaN for non-finite curve data; that must error too
    if residue >= 0.25 || residue.is_nan() {
        return Err(Error::NonIntegerWinding { residue });
    }
    Ok(nearest as i32)
}

/// Distance from the origin to the segment [p, q].
fn segment_distance(p: Complex64, q: Complex64) -> f64 {
    let d = q - p;
    let len_sq = d.norm_sqr();
    if len_sq == 0.0 {
        return p.norm();
    }
    // projection parameter of 0 onto the segment
    let t = (-(p.re * d.re + p.im * d.im) / len_sq).clamp(0.0, 1.0);
    (p + t * d).norm()
}

/// Distance from `w` to the closed polyline.
pub fn distance_to_curve(curve: &BoundaryCurve, w: CPoint) -> f64 {
    let n = curve.points.len();
    let mut best = f64::INFINITY;
    for j in 0..n {
        let p = curve.points[j] - w;
        let q = curve.points[(j + 1) % n] - w;
        best = best.min(segment_distance(p, q));
    }
    best
}

/// The enclosing disk the containment proofs reduce to: the crescent sits in
/// |w-1| < sqrt2 and the limacon in |w-1| < |s|(|s|+2).
pub fn superset_disk(region: RegionSpec) -> Result<RegionSpec> {
    match region {
        RegionSpec::Crescent => Ok(RegionSpec::Disk {
            center: Complex64::new(1.0, 0.0),
            radius: SQRT2,
        }),
        RegionSpec::Limacon { s } => {
            region.validate()?;
            Ok(RegionSpec::Disk {
                center: Complex64::new(1.0, 0.0),
                radius: s.abs() * (s.abs() + 2.0),
            })
        }
        other => Err(Error::Unsupported(format!("{other:?} has no superset disk"))),
    }
}
