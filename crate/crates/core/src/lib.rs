//! Exact analysis of rational lifts on separated-variable curves.
//!
//! Given `f, g ∈ ℚ[x]`, the curve `f(X) = g(Y)` splits into polynomial
//! graph components `Y = h(X)` (with `f = g ∘ h`) and the remaining
//! non-graph components. Integer inputs `n` admitting a rational `y` with
//! `g(y) = f(n)` off every graph are counted by the non-graph part only;
//! this crate classifies those components, predicts the growth exponent of
//! the count, and measures it by brute-force enumeration.

pub mod activity;
pub mod algebra;
pub mod census;
pub mod decompose;
mod error;
pub mod expr;
pub mod factor;
pub mod fibers;
pub mod pipeline;
pub mod sources;

pub use algebra::{BiPoly, Rational, UniPoly};
pub use error::{Error, Result};
