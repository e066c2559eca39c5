//! Complex elementary and special functions on principal branches, plus the
//! transcendental constants every sharp bound is built from.
//!
//! Everything here is a fixed-degree Maclaurin evaluation: the series involved
//! all have factorial-decay coefficients, so 60 terms are exact to machine
//! precision on the validated radii. Principal branches throughout; inputs on
//! a branch cut are errors, never silently perturbed.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex point; the universal value type of the crate.
pub type CPoint = Complex64;

/// Fixed series degree. Factorial decay makes this exact in f64 well past
/// the validated radii below.
const SERIES_TERMS: usize = 60;

/// Validated radius for the tanh/coth-style combinations; their nearest
/// singularity sits at |z| = pi^2/4 > 2.4.
pub const AUX_RADIUS: f64 = 1.5;

/// Validated radius for the chi/shi series.
pub const CHI_RADIUS: f64 = 2.0;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// cosh(sqrt(z)) evaluated through its integer-power series sum z^n/(2n)!.
///
/// Entire in z (the square-root branch is immaterial since cosh is even);
/// real on the real axis and conjugate-symmetric.
pub fn cosh_sqrt(z: CPoint) -> CPoint {
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for n in 0..SERIES_TERMS {
        let d = ((2 * n + 1) * (2 * n + 2)) as f64;
        term = term * z / d;
        sum += term;
    }
    sum
}

/// sinh(sqrt(z))/sqrt(z) via sum z^n/(2n+1)!; entire, equals 1 at z = 0.
fn sinh_over_sqrt_series(z: CPoint) -> CPoint {
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for n in 0..SERIES_TERMS {
        let d = ((2 * n + 2) * (2 * n + 3)) as f64;
        term = term * z / d;
        sum += term;
    }
    sum
}

/// Even-in-sqrt(z) combinations used by the first-order subordination proofs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuxKind {
    /// sinh(sqrt(z))/sqrt(z)
    SinhOverSqrt,
    /// sqrt(z) * tanh(sqrt(z))
    SqrtTanhSqrt,
    /// sqrt(z) * coth(sqrt(z)/2)
    SqrtCothHalfSqrt,
    /// sqrt(z) * csch(2 sqrt(z))
    SqrtCschTwoSqrt,
}

/// Evaluates the selected combination on the closed unit disk (validated to
/// |z| <= 1.5). Each is a single-valued function of z; the removable
/// singularity at z = 0 is absorbed by the series representation.
///
/// Every kind reduces to the two entire series S(z) = sinh(sqrt z)/sqrt(z)
/// and C(z) = cosh(sqrt z):
/// sqrt(z) tanh(sqrt z)      = z S(z) / C(z),
/// sqrt(z) coth(sqrt(z)/2)   = 2 C(z/4) / S(z/4),
/// sqrt(z) csch(2 sqrt z)    = 1 / (2 S(z) C(z)).
pub fn aux_entire(kind: AuxKind, z: CPoint) -> Result<CPoint> {
    if z.norm() > AUX_RADIUS {
        return Err(Error::DomainError(format!(
            "|z| = {} exceeds validated radius {AUX_RADIUS}",
            z.norm()
        )));
    }
    let v = match kind {
        AuxKind::SinhOverSqrt => sinh_over_sqrt_series(z),
        AuxKind::SqrtTanhSqrt => z * sinh_over_sqrt_series(z) / cosh_sqrt(z),
        AuxKind::SqrtCothHalfSqrt => {
            let q = z / 4.0;
            2.0 * cosh_sqrt(q) / sinh_over_sqrt_series(q)
        }
        AuxKind::SqrtCschTwoSqrt => {
            (2.0 * sinh_over_sqrt_series(z) * cosh_sqrt(z)).finv()
        }
    };
    Ok(v)
}

/// Integral of (e^t - 1)/t from 0 to z: the entire series sum z^m/(m * m!).
///
/// This is the branch-free tail shared by the hyperbolic-cosine and
/// hyperbolic-sine integrals: chi(z) + shi(z) = EULER_GAMMA + ln z + this.
pub fn exp_minus_one_integral(z: CPoint) -> CPoint {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut pw = Complex64::new(1.0, 0.0);
    for m in 1..=SERIES_TERMS {
        pw = pw * z / m as f64;
        sum += pw / m as f64;
    }
    sum
}

/// Integral of (cosh(sqrt t) - 1)/t from 0 to z: sum z^n/(n * (2n)!).
///
/// Equals 2*chi(sqrt z) - ln z - 2*EULER_GAMMA without any branch cut; it is
/// the primitive behind the extremal solution of 1 + eta*z*p'(z) = cosh sqrt(z).
pub fn cosh_sqrt_minus_one_integral(z: CPoint) -> CPoint {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut pw = Complex64::new(1.0, 0.0); // z^n / (2n)!
    for n in 1..=SERIES_TERMS {
        let d = ((2 * n - 1) * (2 * n)) as f64;
        pw = pw * z / d;
        sum += pw / n as f64;
    }
    sum
}

fn on_negative_axis(z: CPoint) -> bool {
    z.im == 0.0 && z.re < 0.0
}

/// Hyperbolic cosine integral
/// chi(z) = EULER_GAMMA + ln z + integral of (cosh t - 1)/t from 0 to z,
/// evaluated by series on |z| <= 2 with the principal logarithm.
pub fn chi(z: CPoint) -> Result<CPoint> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::DomainError("chi has a logarithmic singularity at 0".into()));
    }
    if on_negative_axis(z) {
        return Err(Error::DomainError(format!("chi branch cut at z = {z}")));
    }
    if z.norm() > CHI_RADIUS {
        return Err(Error::DomainError(format!(
            "|z| = {} exceeds validated radius {CHI_RADIUS}",
            z.norm()
        )));
    }
    let mut sum = Complex64::new(EULER_GAMMA, 0.0) + z.ln();
    let z2 = z * z;
    let mut pw = Complex64::new(1.0, 0.0); // z^(2n) / (2n)!
    for n in 1..=SERIES_TERMS {
        let d = ((2 * n - 1) * (2 * n)) as f64;
        pw = pw * z2 / d;
        sum += pw / (2 * n) as f64;
    }
    Ok(sum)
}

/// Hyperbolic sine integral shi(z) = integral of sinh t / t from 0 to z;
/// entire, odd, evaluated by series on |z| <= 2.
pub fn shi(z: CPoint) -> Result<CPoint> {
    if z.norm() > CHI_RADIUS {
        return Err(Error::DomainError(format!(
            "|z| = {} exceeds validated radius {CHI_RADIUS}",
            z.norm()
        )));
    }
    let z2 = z * z;
    let mut sum = z;
    let mut pw = z; // z^(2n+1) / (2n+1)!
    for n in 1..=SERIES_TERMS {
        let d = ((2 * n) * (2 * n + 1)) as f64;
        pw = pw * z2 / d;
        sum += pw / (2 * n + 1) as f64;
    }
    Ok(sum)
}

/// Cosine integral Ci(x) = EULER_GAMMA + ln x + integral of (cos t - 1)/t
/// from 0 to x, for real x > 0.
pub fn ci(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::DomainError(format!("ci requires x > 0, got {x}")));
    }
    if x > CHI_RADIUS {
        return Err(Error::DomainError(format!(
            "x = {x} exceeds validated radius {CHI_RADIUS}"
        )));
    }
    let x2 = x * x;
    let mut sum = EULER_GAMMA + x.ln();
    let mut pw = 1.0; // (-1)^n x^(2n) / (2n)!
    for n in 1..=SERIES_TERMS {
        let d = ((2 * n - 1) * (2 * n)) as f64;
        pw = -pw * x2 / d;
        sum += pw / (2 * n) as f64;
    }
    Ok(sum)
}

/// The transcendental constants appearing in the sharp bounds.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Constants {
    /// Euler-Mascheroni constant.
    pub euler_gamma: f64,
    /// chi(1), the hyperbolic cosine integral at 1.
    pub chi1: f64,
    /// Ci(1), the cosine integral at 1.
    pub ci1: f64,
    /// (chi1 + ci1 - 2*euler_gamma) / (chi1 - ci1); the branch point of the
    /// Janowski and limacon sharp-bound formulas.
    pub kappa: f64,
    /// (cosh 1 - 1)/(1 - cos 1); the exponent of the B0 root equation.
    pub mu: f64,
}

impl Constants {
    pub fn new() -> Self {
        let chi1 = chi(Complex64::new(1.0, 0.0))
            .expect("1 is inside the chi domain")
            .re;
        let ci1 = ci(1.0).expect("1 is a valid ci argument");
        Constants {
            euler_gamma: EULER_GAMMA,
            chi1,
            ci1,
            kappa: (chi1 + ci1 - 2.0 * EULER_GAMMA) / (chi1 - ci1),
            mu: (1.0_f64.cosh() - 1.0) / (1.0 - 1.0_f64.cos()),
        }
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const I: Complex64 = Complex64::new(0.0, 1.0);

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn cosh_sqrt_at_reference_points() {
        assert_eq!(cosh_sqrt(c(0.0, 0.0)), c(1.0, 0.0));
        assert!((cosh_sqrt(c(1.0, 0.0)).re - 1.0_f64.cosh()).abs() < 1e-15);
        assert!((cosh_sqrt(c(-1.0, 0.0)).re - 1.0_f64.cos()).abs() < 1e-15);
        assert_eq!(cosh_sqrt(c(1.0, 0.0)).im, 0.0);
    }

    #[test]
    fn cosh_sqrt_matches_principal_branch_composition() {
        // cosh is even, so cosh(principal sqrt) agrees with the series everywhere.
        let mut state = 0x2545f4914f6cdd1d_u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..10_000 {
            let r = next().sqrt();
            let th = (next() - 0.5) * 2.0 * std::f64::consts::PI;
            let z = Complex64::from_polar(r, th);
            let direct = z.sqrt().cosh();
            assert!((cosh_sqrt(z) - direct).norm() < 1e-13, "z = {z}");
        }
    }

    #[test]
    fn cosh_sqrt_conjugate_symmetry() {
        let z = c(0.3, 0.7);
        let lhs = cosh_sqrt(z.conj());
        let rhs = cosh_sqrt(z).conj();
        assert!((lhs - rhs).norm() < 1e-15);
    }

    #[test]
    fn aux_reference_values() {
        let one = c(1.0, 0.0);
        assert_eq!(aux_entire(AuxKind::SinhOverSqrt, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        let t = aux_entire(AuxKind::SqrtTanhSqrt, one).unwrap();
        assert!((t.re - 1.0_f64.tanh()).abs() < 1e-15 && t.im == 0.0);
        let cs = aux_entire(AuxKind::SqrtCschTwoSqrt, one).unwrap();
        assert!((cs.re - 1.0 / 2.0_f64.sinh()).abs() < 1e-15);
        let ch = aux_entire(AuxKind::SqrtCothHalfSqrt, one).unwrap();
        assert!((ch.re - 0.5_f64.cosh() / 0.5_f64.sinh()).abs() < 1e-14);
        // z = 0 is regular for every kind
        let ch0 = aux_entire(AuxKind::SqrtCothHalfSqrt, c(0.0, 0.0)).unwrap();
        assert_eq!(ch0, c(2.0, 0.0));
        let cs0 = aux_entire(AuxKind::SqrtCschTwoSqrt, c(0.0, 0.0)).unwrap();
        assert_eq!(cs0, c(0.5, 0.0));
    }

    #[test]
    fn aux_rejects_outside_radius() {
        assert!(matches!(
            aux_entire(AuxKind::SqrtTanhSqrt, c(1.6, 0.0)),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn aux_matches_direct_hyperbolics_off_origin() {
        // cross-check against direct principal-branch evaluation at generic points
        for &z in &[c(0.4, 0.3), c(-0.6, 0.2), c(0.1, -0.9), c(-1.0, 0.0)] {
            let u = z.sqrt();
            let tanh = aux_entire(AuxKind::SqrtTanhSqrt, z).unwrap();
            assert!((tanh - u * u.tanh()).norm() < 1e-13, "tanh at {z}");
            let csch = aux_entire(AuxKind::SqrtCschTwoSqrt, z).unwrap();
            assert!((csch - u / (2.0 * u).sinh()).norm() < 1e-13, "csch at {z}");
            let coth = aux_entire(AuxKind::SqrtCothHalfSqrt, z).unwrap();
            assert!((coth - u * (u / 2.0).cosh() / (u / 2.0).sinh()).norm() < 1e-13, "coth at {z}");
        }
    }

    #[test]
    fn shi_chi_reference_values() {
        assert_eq!(shi(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        // frozen 30-digit oracle values
        let chi1 = chi(c(1.0, 0.0)).unwrap();
        assert!((chi1.re - 0.837_866_940_980_208_2).abs() < 1e-15);
        assert_eq!(chi1.im, 0.0);
        let shi1 = shi(c(1.0, 0.0)).unwrap();
        assert!((shi1.re - 1.057_250_875_375_728_6).abs() < 1e-13);
    }

    #[test]
    fn ci_reference_values() {
        let ci1 = ci(1.0).unwrap();
        assert!((ci1 - 0.337_403_922_900_968_13).abs() < 1e-15);
        assert!(ci1 < EULER_GAMMA);
        assert!(ci(0.0).is_err());
        assert!(ci(-1.0).is_err());
    }

    #[test]
    fn chi_rejects_cut_and_origin() {
        assert!(chi(c(0.0, 0.0)).is_err());
        assert!(chi(c(-0.5, 0.0)).is_err());
        assert!(chi(c(-0.5, 0.1)).is_ok());
    }

    #[test]
    fn chi_shi_sum_identity() {
        // chi + shi == EULER_GAMMA + ln z + integral of (e^t-1)/t, two
        // independent series routes
        for &z in &[c(0.7, 0.0), c(0.3, 0.4), c(-0.2, 0.5), c(1.0, -1.0)] {
            let lhs = chi(z).unwrap() + shi(z).unwrap();
            let rhs = Complex64::new(EULER_GAMMA, 0.0) + z.ln() + exp_minus_one_integral(z);
            assert!((lhs - rhs).norm() < 1e-14, "z = {z}");
        }
    }

    #[test]
    fn chi_at_i_relates_to_ci() {
        // chi(i) = Ci(1) + i pi/2 under the principal logarithm
        let v = chi(I).unwrap();
        assert!((v.re - ci(1.0).unwrap()).abs() < 1e-14);
        assert!((v.im - std::f64::consts::FRAC_PI_2).abs() < 1e-14);
    }

    #[test]
    fn cosh_sqrt_integral_tail_matches_chi() {
        // sum z^n/(n (2n)!) == 2 chi(sqrt z) - ln z - 2 EULER_GAMMA
        for &z in &[c(0.8, 0.0), c(0.5, 0.5), c(-0.4, 0.3)] {
            let lhs = cosh_sqrt_minus_one_integral(z);
            let s = z.sqrt();
            let rhs = 2.0 * chi(s).unwrap() - z.ln() - 2.0 * EULER_GAMMA;
            assert!((lhs - rhs).norm() < 1e-14, "z = {z}");
        }
    }

    #[test]
    fn constants_invariants() {
        let k = Constants::new();
        assert!(k.chi1 > k.euler_gamma && k.euler_gamma > k.ci1);
        let kappa = (k.chi1 + k.ci1 - 2.0 * k.euler_gamma) / (k.chi1 - k.ci1);
        assert_eq!(k.kappa, kappa);
        assert!((k.kappa - 0.041_640_507_540_581_26).abs() < 1e-14);
        assert!((k.mu - 1.181_386_467_123_469_7).abs() < 1e-15);
    }

    #[test]
    fn derivative_identity_of_cosh_sqrt() {
        // z * d/dz cosh_sqrt(z) = (sqrt z / 2) sinh sqrt(z), checked against
        // central differences at interior points
        let mut state = 0x9e3779b97f4a7c15_u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let h = 1e-5;
        for _ in 0..100 {
            let r = 0.1 + 0.8 * next();
            let th = (next() - 0.5) * 2.0 * std::f64::consts::PI;
            let z = Complex64::from_polar(r, th);
            let fd = (cosh_sqrt(z + h) - cosh_sqrt(z - h)) / (2.0 * h);
            let closed = 0.5 * sinh_over_sqrt_series(z);
            let rel = (fd - closed).norm() / closed.norm().max(1.0);
            assert!(rel < 1e-6, "z = {z}, rel = {rel}");
        }
    }
}
