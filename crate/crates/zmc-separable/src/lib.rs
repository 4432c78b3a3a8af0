//! Separable zero-mean-curvature surfaces in Lorentz–Minkowski 3-space.
//!
//! This crate constructs, evaluates, verifies, classifies, and exports
//! surfaces of the form
//!
//! ```text
//! F(x, y, z) = f(x) + g(y) + h(z) = 0
//! ```
//!
//! that have vanishing mean curvature with respect to the Lorentzian metric
//! `dx² + dy² − dz²`. For such an implicit surface the zero-mean-curvature
//! equation reduces, through the substitution `X = f′²`, `Y = g′²`, `Z = h′²`,
//! to a functional equation whose solutions are exponential, quadratic, or
//! trigonometric in the profile values, with the nine coefficients tied
//! together by an algebraic constraint system. Every module works on one
//! layer of that picture:
//!
//! * [`types`] — shared value types (coefficient tables, causal classes,
//!   profiles, errors).
//! * [`quadrature`] — adaptive Gauss–Legendre integration with endpoint
//!   substitutions for integrable square-root singularities.
//! * [`constraints`] — the algebraic constraint systems, their residuals,
//!   a homothety rescaling, and a damped Gauss–Newton solver.
//! * [`profiles`] — evaluation of `X(u)` and of concrete coordinate
//!   functions `f(x)`, both in closed form and through numeric inversion of
//!   the profile integral; [`profiles::elliptic`] covers the quartic-kernel
//!   special functions needed by several families.
//! * [`surface`] — pointwise surface queries: residuals, mean-curvature
//!   numerator, causal classification, third-coordinate solves, lightlike
//!   locus checks.
//! * [`catalog`] — the built-in library of named example surfaces with
//!   verified coefficient data, sampling boxes, and expected causal classes.
//! * [`mesh`] — marching-cubes extraction of the level set and colored
//!   Wavefront OBJ export.
//! * [`report`] — the checking pipeline behind the `zmc verify` command and
//!   its machine-readable report types.
//!
//! # Quick start
//!
//! ```
//! use zmc_separable::catalog;
//! use zmc_separable::surface::Surface;
//!
//! // Look up a built-in surface and evaluate it.
//! let entry = catalog::find("scherk-timelike-1st").unwrap();
//! let surface = entry.surface().unwrap();
//!
//! // Points on the surface satisfy F = 0 up to round-off.
//! let z = surface.solve_third_coordinate(0.3, 0.4, None).unwrap();
//! let p = surface.eval(0.3, 0.4, z).unwrap();
//! assert!(p.f_value.abs() < 1e-9);
//! ```

pub mod catalog;
pub mod constraints;
pub mod mesh;
pub mod profiles;
pub mod quadrature;
pub mod report;
pub mod roots;
pub mod surface;
pub mod types;

pub use types::{CaseK, CausalClass, CoeffRow, ConstantsTriple, Result, ZmcError};
