//! Twisted Higgs invariants: the partition products, the extraction of
//! `H_n^{(p)}(t)` through the plethystic logarithm, and its specializations.

mod hla;
mod hn;
mod properties;
mod specialize;
mod zeta;

use serde::{Deserialize, Serialize};

pub use hla::{finite_factor, hla, hla_lower_bound};
pub use hn::{default_tprec, dimension, hn, hn_with, HnPoly, HnStatus};
pub use properties::{check_hn_properties, PropertyReport};
pub use specialize::{character_mhp, epoly, epoly_diagonal, hodge, poincare, BiPoly};
pub use zeta::{zeta_numerator, zeta_series};

/// Genus of the curve and twist `p`, with `deg L = 2g - 2 + p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveParams {
    pub g: u32,
    pub p: u32,
}

impl CurveParams {
    pub fn new(g: u32, p: u32) -> Self {
        CurveParams { g, p }
    }
}

/// How the curve class is realized in the coefficient ring.
///
/// `Hodge` keeps `u` and `v` apart. `Diagonal` identifies them, storing
/// `u = v = z` as the monomial with doubled exponents `(1, 1)`; it carries
/// everything the Poincaré polynomial needs at a fraction of the cost.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Realization {
    Hodge,
    Diagonal,
}
