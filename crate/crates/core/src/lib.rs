//! Bivariate orthogonal polynomials on the deltoid.
//!
//! Polynomials live in the formal variables `Z` and `Zbar` of the scaled
//! deltoid (boundary `z = (2e^{it} + e^{-2it})/3`). Everything exact is generic
//! over [`Scalar`]; the usual choice is [`Rational`].

pub mod characters;
pub mod error;
pub mod io;
pub mod linalg;
pub mod operator;
pub mod poly2;
pub mod quadrature;
pub mod ratfn;
pub mod recurrence;
pub mod report;
pub mod scalar;
pub mod series;
pub mod traces;

pub use error::{Error, Result};
pub use operator::AlphaParam;
pub use poly2::{Monomial, Poly2, Var};
pub use recurrence::PolyTable;
pub use report::CheckReport;
pub use scalar::{parse_rational, rat, Scalar};

/// Exact rational with arbitrary precision.
pub type Rational = num::BigRational;
/// Double precision complex number used for numeric evaluation.
pub type ComplexF = num::complex::Complex64;

pub type Poly2Q = Poly2<Rational>;
pub type Poly2F = Poly2<f64>;
pub type PolyTableQ = PolyTable<Rational>;
pub type PolyTableF = PolyTable<f64>;
pub type Series1Q = series::Series1<Rational>;
pub type Series2Q = series::Series2<Rational>;
