//! Numerical machinery for sharp first-order subordination bounds tied to the
//! cosh(sqrt z) image domain: special functions and constants, region
//! predicates with sampled boundary curves, subordination checks, closed-form
//! sharp thresholds, proof-obligation scans, and the integral-form extremal
//! solutions.
//!
//! Layering, bottom up:
//!
//! * [`special`] — series-backed complex functions and the constants
//!   (`chi(1)`, `Ci(1)`, kappa, mu) every threshold reduces to;
//! * [`regions`] — membership predicates, boundary polylines, winding numbers;
//! * [`quadrature`] — adaptive Gauss-Kronrod integration for the
//!   integral-form solutions;
//! * [`solutions`] — the extremal functions solving each first-order
//!   equation, with residual self-checks;
//! * [`subord`] — sampled subordination verdicts (predicate and winding
//!   routes) and the real-axis endpoint test;
//! * [`bounds`] — every sharp constant and admissible parameter window;
//! * [`proofcheck`] — grid scans of the containment functionals and the
//!   admissibility minima.

pub mod bounds;
pub mod error;
pub mod proofcheck;
pub mod quadrature;
pub mod regions;
pub mod solutions;
pub mod special;
pub mod subord;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use special::CPoint;
