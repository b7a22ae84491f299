//! Exact arithmetic over the rationals with per-prime valuations.
//!
//! Everything downstream (Newton polygons, lattices, group elements) works
//! with exact rationals; the only place where finite precision enters is the
//! Hensel lifting of coprime polynomial factorizations, which produces
//! factors correct modulo `p^K` for the working precision `K` of a
//! [`PrimeContext`].

mod approx;
mod cancel;
mod error;
mod hensel;
mod poly;
mod prime;
mod rational;

pub use approx::PadicApprox;
pub use cancel::CancelToken;
pub use error::PadicError;
pub use hensel::{hensel_lift, hensel_lift_cancellable};
pub use poly::Polynomial;
pub use prime::PrimeContext;
pub use rational::{Rational, Valuation};
