//! Exact computations on split super Riemann surfaces over hyperelliptic
//! curves: Grassmann algebra and Berezinians, Riemann-Roch spaces, theta
//! characteristics, and pluricanonical embedding criteria.

pub mod arith;
pub mod curve;
pub mod error;
pub mod expr;
pub mod graded;
pub mod io;
pub mod pluricanonical;
pub mod riemann_roch;
pub mod supercurve;

pub use error::{Error, Result};
