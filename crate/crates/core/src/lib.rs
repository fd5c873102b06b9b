//! Exterior-algebra toolkit: alternating tensors, wedge products, compound
//! and pullback matrices, determinants through the top exterior power, exact
//! minor-summation identity checks, and a truncated determinantal Parseval
//! identity for functions on the unit interval.

pub mod cauchy_binet;
pub mod combinatorics;
pub mod error;
pub mod exterior;
pub mod gen;
pub mod io;
pub mod matrix;
pub mod parseval;
pub mod reduce;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod tensor;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{Rational, Scalar};
pub use tensor::AlternatingTensor;
