//! Bigraded `(s, T)` series attached to the asymptotic ADHM invariants, slope
//! filtration, the factors `C_μ`, and the wall-crossing identity relating them.
//!
//! Everything here lives in the Hodge realization. The variable `s = t y`
//! carries the charge `χ`; `T` carries the rank.

mod biseries;
mod factors;
mod multicover;
mod recursion;
mod wallcrossing;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::algebra::CoeffPoly;
use crate::error::{Error, Result};
use crate::higgs::CurveParams;

pub use biseries::{invert_s, s_to_t, slope_filter, t_to_s, BiSeries, Orientation};
pub use factors::{a_infinity, c_factor, exp_argument, omega_closed_form, omega_prime};
pub use multicover::{multicover_check, multicover_check_with, MulticoverRank, MulticoverReport};
pub use recursion::{recursion_rhs, solve_recursion, RecursionReport};
pub use wallcrossing::{
    verify_wallcrossing, verify_wallcrossing_with, RankComparison, WallcrossingReport,
};

/// Exact slope `a/b` with `b > 0`, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope(Ratio<i64>);

impl Slope {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "slope with zero denominator");
        Slope(Ratio::new(num, den))
    }

    pub fn integer(k: i64) -> Self {
        Slope(Ratio::from_integer(k))
    }

    pub fn numer(self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(self) -> i64 {
        *self.0.denom()
    }

    /// Compares `k / r` with this slope by cross-multiplication (`r ≥ 1`).
    pub fn cmp_charge(self, r: i64, k: i64) -> Ordering {
        (k as i128 * self.denom() as i128).cmp(&(self.numer() as i128 * r as i128))
    }

    /// `⌊μ r⌋`.
    pub fn floor_times(self, r: i64) -> i64 {
        Integer::div_floor(&(self.numer() * r), &self.denom())
    }

    /// `⌈μ r⌉`.
    pub fn ceil_times(self, r: i64) -> i64 {
        Integer::div_ceil(&(self.numer() * r), &self.denom())
    }
}

impl std::ops::Neg for Slope {
    type Output = Slope;
    fn neg(self) -> Slope {
        Slope(-self.0)
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
        let (a, b) = match s.trim().split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s.trim(), "1"),
        };
        let a: i64 = a.parse().map_err(|_| bad())?;
        let b: i64 = b.parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        Ok(Slope::new(a, b))
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A bidegree `(r, k)`: rank and charge `χ = d + (1 - g) r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlopeTerm {
    pub r: u32,
    pub k: i64,
}

impl SlopeTerm {
    pub fn new(r: u32, k: i64) -> Self {
        SlopeTerm { r, k }
    }

    /// Charge of a sheaf with rank `r` and degree `d` on a genus-`g` curve.
    pub fn from_degree(g: u32, r: u32, d: i64) -> Self {
        SlopeTerm::new(r, d + (1 - g as i64) * r as i64)
    }

    /// `k / r`, undefined in rank zero.
    pub fn slope(self) -> Option<Slope> {
        (self.r > 0).then(|| Slope::new(self.k, self.r as i64))
    }
}

/// The slope classes used by the filters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", content = "mu", rename_all = "lowercase")]
pub enum SlopeSet {
    Empty,
    Eq(Slope),
    Ne(Slope),
    Gt(Slope),
    Ge(Slope),
    Lt(Slope),
    Le(Slope),
}

impl SlopeSet {
    /// Whether `(r, k)` belongs to the class; rank zero belongs to none.
    pub fn contains(self, r: i64, k: i64) -> bool {
        if r <= 0 {
            return false;
        }
        match self {
            SlopeSet::Empty => false,
            SlopeSet::Eq(m) => m.cmp_charge(r, k).is_eq(),
            SlopeSet::Ne(m) => m.cmp_charge(r, k).is_ne(),
            SlopeSet::Gt(m) => m.cmp_charge(r, k).is_gt(),
            SlopeSet::Ge(m) => m.cmp_charge(r, k).is_ge(),
            SlopeSet::Lt(m) => m.cmp_charge(r, k).is_lt(),
            SlopeSet::Le(m) => m.cmp_charge(r, k).is_le(),
        }
    }

    pub fn contains_term(self, t: SlopeTerm) -> bool {
        self.contains(t.r as i64, t.k)
    }

    /// The image under `k ↦ -k`.
    pub fn reflect(self) -> SlopeSet {
        match self {
            SlopeSet::Empty => SlopeSet::Empty,
            SlopeSet::Eq(m) => SlopeSet::Eq(-m),
            SlopeSet::Ne(m) => SlopeSet::Ne(-m),
            SlopeSet::Gt(m) => SlopeSet::Lt(-m),
            SlopeSet::Ge(m) => SlopeSet::Le(-m),
            SlopeSet::Lt(m) => SlopeSet::Gt(-m),
            SlopeSet::Le(m) => SlopeSet::Ge(-m),
        }
    }

    /// Least charge at rank `r ≥ 1` in the class, `None` when unbounded below
    /// or empty.
    pub fn min_charge(self, r: i64) -> Option<i64> {
        match self {
            SlopeSet::Eq(m) => (m.numer() * r % m.denom() == 0).then(|| m.numer() * r / m.denom()),
            SlopeSet::Gt(m) => Some(m.floor_times(r) + 1),
            SlopeSet::Ge(m) => Some(m.ceil_times(r)),
            _ => None,
        }
    }
}

/// `Ω_r` for `1 ≤ r ≤ rmax`, independent of the degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaVector {
    pub params: CurveParams,
    omega: Vec<CoeffPoly>,
}

impl OmegaVector {
    /// `omega[i]` is `Ω_{i+1}`.
    pub fn new(params: CurveParams, omega: Vec<CoeffPoly>) -> Self {
        OmegaVector { params, omega }
    }

    pub fn rmax(&self) -> u32 {
        self.omega.len() as u32
    }

    /// `Ω_r`; zero above `rmax`.
    pub fn get(&self, r: u32) -> CoeffPoly {
        assert!(r >= 1, "Ω is indexed from rank 1");
        self.omega.get(r as usize - 1).cloned().unwrap_or_default()
    }

    pub fn values(&self) -> &[CoeffPoly] {
        &self.omega
    }

    pub fn truncate(&self, rmax: u32) -> Self {
        OmegaVector::new(
            self.params,
            self.omega.iter().take(rmax as usize).cloned().collect(),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let omega: Vec<_> = self
            .omega
            .iter()
            .enumerate()
            .map(|(i, c)| {
                serde_json::json!({
                    "r": i + 1,
                    "terms": crate::algebra::json::poly_to_records(c),
                })
            })
            .collect();
        serde_json::json!({ "g": self.params.g, "p": self.params.p, "omega": omega })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slopes_compare_exactly() {
        let half = Slope::new(1, 2);
        assert!(SlopeSet::Gt(half).contains(1, 1));
        assert!(!SlopeSet::Gt(half).contains(2, 1));
        assert!(SlopeSet::Ge(half).contains(2, 1));
        assert!(SlopeSet::Eq(half).contains(4, 2));
        assert!(SlopeSet::Lt(Slope::new(-1, 3)).contains(3, -2));
        assert!(!SlopeSet::Gt(Slope::integer(0)).contains(0, 5));
        assert_eq!(Slope::new(2, -4), Slope::new(-1, 2));
        assert_eq!(Slope::new(-1, 3).floor_times(2), -1);
        assert_eq!(Slope::new(-1, 3).ceil_times(2), 0);
    }

    #[test]
    fn min_charges() {
        assert_eq!(SlopeSet::Gt(Slope::new(1, 2)).min_charge(2), Some(2));
        assert_eq!(SlopeSet::Ge(Slope::new(1, 2)).min_charge(2), Some(1));
        assert_eq!(SlopeSet::Eq(Slope::new(1, 2)).min_charge(3), None);
        assert_eq!(SlopeSet::Ge(Slope::new(-1, 3)).min_charge(2), Some(0));
        assert_eq!(SlopeSet::Lt(Slope::integer(0)).min_charge(1), None);
    }

    #[test]
    fn slope_parsing() {
        assert_eq!("1/2".parse::<Slope>().unwrap(), Slope::new(1, 2));
        assert_eq!("-1/3".parse::<Slope>().unwrap(), Slope::new(-1, 3));
        assert_eq!("0".parse::<Slope>().unwrap(), Slope::integer(0));
        assert!("1/0".parse::<Slope>().is_err());
        assert!("x".parse::<Slope>().is_err());
        assert_eq!(Slope::new(-2, 6).to_string(), "-1/3");
    }

    #[test]
    fn charge_of_a_degree() {
        let t = SlopeTerm::from_degree(2, 3, 1);
        assert_eq!(t.k, -2);
        assert_eq!(t.slope(), Some(Slope::new(-2, 3)));
        assert_eq!(SlopeTerm::new(0, 0).slope(), None);
    }

    proptest::proptest! {
        #[test]
        fn reflection_matches_negated_charge(a in -6i64..6, b in 1i64..5, r in 1i64..5, k in -12i64..12) {
            let m = Slope::new(a, b);
            for set in [SlopeSet::Eq(m), SlopeSet::Gt(m), SlopeSet::Ge(m), SlopeSet::Lt(m), SlopeSet::Le(m)] {
                proptest::prop_assert_eq!(set.contains(r, k), set.reflect().contains(r, -k));
            }
        }
    }
}
