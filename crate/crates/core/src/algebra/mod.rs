//! Exact arithmetic: integer matrices, integer polynomials and truncated
//! rational power series. Nothing here ever rounds.

mod matrix;
mod poly;
mod series;

pub use matrix::{power_sums_from_det, IntMatrix};
pub use poly::Polynomial;
pub use series::PowerSeries;
