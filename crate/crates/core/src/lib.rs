#![allow(clippy::manual_is_multiple_of)]

//! Exact-arithmetic classification of three-dimensional simple Lie algebras
//! over ℚ and its completions.
//!
//! The crate decides splitness, obtainability from Cartan-type involutions
//! of sl(2,ℚ), the quaternion-algebra correspondence, and the classification
//! by the group ℚ*/ℚ*₋₁, using only Legendre/Hilbert symbols and exact
//! local-global quadratic-form computations. There is no floating point
//! anywhere.

pub mod arith;
pub mod brauer;

pub mod cartan;
pub mod error;
pub mod lie3;
pub mod qforms;
pub mod quat;
pub mod symbols;

pub use arith::Rat;
pub use error::{Error, Result};
