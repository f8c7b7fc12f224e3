//! Coefficient ring and truncated series arithmetic.

pub mod coeff;
pub mod json;
pub mod poly;
pub mod rank;
pub mod series;
pub mod univariate;

pub use coeff::Coeff;
pub use poly::{CoeffPoly, Monomial, RatPoly, SignedPower};
pub use rank::RankSeries;
pub use series::{TSeries, Var, EXACT};
pub use univariate::UniPoly;
