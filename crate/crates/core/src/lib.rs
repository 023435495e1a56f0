//! Exact multiplicity polynomials and square-free factorization over ℚ.
//!
//! Given monic `f`, [`multiplicity::compute_mf`] builds the polynomial `M_f`
//! that evaluates to the multiplicity of each root of `f`, using only
//! rational arithmetic on companion matrices. [`squarefree`] turns it into
//! `f = P_1 P_2^2 ... P_m^m` and cross-checks the result against the
//! classical gcd-chain and Yun decompositions.
//!
//! ```
//! use sqfree_core::{compute_mf, factor_companion, Polynomial};
//!
//! let f: Polynomial = "x^4 - 4*x + 3".parse().unwrap();
//! assert_eq!(compute_mf(&f).unwrap().mf.to_string(), "1/6*x^2 + 1/3*x + 3/2");
//! assert_eq!(factor_companion(&f).unwrap().to_string(), "(x^2 + 2*x + 3) * (x - 1)^2");
//! ```

pub mod error;
pub mod instance;
pub mod matrix;
pub mod multiplicity;
pub mod number;
pub mod polynomial;
pub mod squarefree;
pub mod trace;

pub use error::{Error, Result};
pub use matrix::{apply_to_vector, char_poly, companion, eval_at_companion, mat_vec, RationalMatrix};
pub use multiplicity::{
    compute_mf, compute_mf_traced, compute_mf_with, degree_forecast, forecast_from_report, normalize_input,
    squarefree_part, DegreeForecast, MultiplicityReport, Route,
};
pub use number::{int_gcd, rat_add, rat_div, rat_mul, Integer, Rational};
pub use polynomial::{
    derivative, make_monic, poly_add, poly_divrem, poly_eval, poly_exact_div, poly_ext_gcd, poly_gcd,
    poly_mul, CoordinateVector, ExtGcd, Polynomial,
};
pub use squarefree::{
    factor_companion, factor_tobey_horowitz, factor_yun, verify_factorization, Check, Method,
    SquareFreeFactorization, VerificationReport,
};
pub use trace::BitTrace;
