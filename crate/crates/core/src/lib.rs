//! Catalan tuples and Catalan tables, and the expansion of the quartic
//! matrix model's `N`-point functions into signed monomials indexed by them.
//!
//! - [`tuples`]: ballot sequences, the `∘` and `•` compositions, enumeration.
//! - [`tables`]: tuples of tuples, the `◊` and `◆` operations, counting.
//! - [`trees`]: pocket, direct and opposite trees and the side labeling.
//! - [`moments`]: monomials, exact evaluation, the defining recursion.
//! - [`render`]: SVG and DOT drawings.
//! - [`records`]: line-delimited JSON record formats.

pub mod error;
pub mod moments;
pub mod records;
pub mod render;
pub mod series;
pub mod tables;
pub mod trees;
pub mod tuples;

pub use error::{Error, Result};
pub use moments::{ModelData, Monomial, Rational};
pub use tables::CatalanTable;
pub use tuples::CatalanTuple;
