use std::collections::BTreeSet;

use super::factors::{a_infinity, c_factor};
use super::{OmegaVector, Slope, SlopeSet};
use crate::algebra::{CoeffPoly, Monomial};
use crate::error::{Error, Result};
use crate::higgs::{hla_lower_bound, CurveParams};
use crate::partitions::enumerate_partitions;

/// Lower bound for the exponents of `[T^m] A_{+∞}`.
fn a_low(params: CurveParams, m: u32) -> i64 {
    enumerate_partitions(m)
        .iter()
        .map(|lam| hla_lower_bound(params, lam))
        .min()
        .unwrap()
}

/// Coefficient of `s^k T^r` in `Ā C_S^{-1}` with `Ā = A_{+∞} - 1`.
///
/// Only `C_S` through rank `r - 1` enters, because `Ā` has no `T^0` term, and
/// only one coefficient of each product `Ā_m C^{-1}_{r-m}` is formed. The
/// expansions are taken just deep enough for that coefficient.
fn reduced_coeff(
    params: CurveParams,
    omegas: &OmegaVector,
    set: SlopeSet,
    r: u32,
    k: i64,
) -> Result<CoeffPoly> {
    let order_c = (1..r)
        .map(|m| k + 1 - a_low(params, m))
        .max()
        .unwrap_or(k + 1);
    let cinv = c_factor(omegas, set, order_c, r - 1, true)?;
    // lowest nonzero exponent of C^{-1}_j below order_c, if any
    let c_low: Vec<Option<i64>> = (0..r as usize)
        .map(|j| cinv.inner().coeff(j).iter().next().map(|(e, _)| e))
        .collect();
    let order_a = (1..=r)
        .filter_map(|m| c_low[(r - m) as usize].map(|lo| k - lo + 1))
        .max();
    let Some(order_a) = order_a else {
        return Ok(CoeffPoly::zero());
    };
    let a = a_infinity(params, r, order_a);
    let mut pairs = Vec::new();
    for m in 1..=r {
        let Some(lo_c) = c_low[(r - m) as usize] else {
            continue;
        };
        let am = a.inner().coeff(m as usize);
        let cj = cinv.inner().coeff((r - m) as usize);
        for j in a_low(params, m)..=k - lo_c {
            if let (Some(x), Some(y)) = (am.coeff_ref(j)?, cj.coeff_ref(k - j)?) {
                pairs.push((x, y));
            }
        }
    }
    Ok(CoeffPoly::dot(&pairs))
}

/// `(Ā C_{>μ}^{-1})_{(r,k)} - (Ā C_{≥-μ}^{-1})_{(r,-k)}` for `μ = k / r`.
fn right_side(params: CurveParams, omegas: &OmegaVector, r: u32, k: i64) -> Result<CoeffPoly> {
    let mu = Slope::new(k, r as i64);
    let x1 = reduced_coeff(params, omegas, SlopeSet::Gt(mu), r, k)?;
    let x2 = reduced_coeff(params, omegas, SlopeSet::Ge(-mu), r, -k)?;
    Ok(x1.sub(&x2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionReport {
    pub omegas: OmegaVector,
    pub window: i64,
    /// Distinct slopes at which the identity was checked.
    pub slopes_checked: usize,
    /// Number of charges checked at each rank `1..=rmax`.
    pub charges_checked: Vec<usize>,
}

impl RecursionReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.omegas.to_json();
        v["rmax"] = self.omegas.rmax().into();
        v["window"] = self.window.into();
        v["slopes_checked"] = self.slopes_checked.into();
        v["charges_checked"] = self.charges_checked.clone().into();
        v
    }
}

/// Solves `C_μ = (Ā C_{>μ}^{-1})_μ - (Ā C_{≥-μ}^{-1})_{-μ}(s^{-1})` for `Ω_r`
/// rank by rank.
///
/// At rank `r` the unknown enters only through the term `y^{-1} [k]_y Ω_r` of
/// `C_μ` at `(r, k)`; for `k = 1` no lower-rank product has slope `1/r`, so
/// `Ω_r = y (X_1 - X_2)`. Afterwards the identity is checked at every `(r, k)`
/// with `|k| ≤ window`, which tests that `Ω_r` does not depend on the charge.
pub fn solve_recursion(params: CurveParams, rmax: u32, window: i64) -> Result<RecursionReport> {
    if window < 1 {
        return Err(Error::WindowInsufficient(
            "the recursion reads charge 1, so the window must be at least 1".into(),
        ));
    }
    let mut omega = Vec::new();
    for r in 1..=rmax {
        let lower = OmegaVector::new(params, omega.clone());
        let x = right_side(params, &lower, r, 1)?;
        omega.push(x.mul_monomial(Monomial::y_pow(1)));
    }
    let omegas = OmegaVector::new(params, omega);

    let mut slopes = BTreeSet::new();
    let mut charges_checked = vec![0usize; rmax as usize];
    for r in 1..=rmax {
        for k in -window..=window {
            slopes.insert(Slope::new(k, r as i64));
            let mu = Slope::new(k, r as i64);
            let c = c_factor(&omegas, SlopeSet::Eq(mu), k.abs() + 1, r, false)?;
            let lhs = c.coeff(r as usize, k)?;
            let rhs = right_side(params, &omegas, r, k)?;
            if lhs != rhs {
                return Err(Error::InconsistentRecursion(format!(
                    "the identity fails at rank {r}, charge {k}: C gives {lhs:?}, the right side {rhs:?}"
                )));
            }
            charges_checked[r as usize - 1] += 1;
        }
    }
    Ok(RecursionReport {
        omegas,
        window,
        slopes_checked: slopes.len(),
        charges_checked,
    })
}

/// The coefficient the recursion assigns to `(r, k)` on its right side, given `Ω_{<r}`.
pub fn recursion_rhs(omegas: &OmegaVector, r: u32, k: i64) -> Result<CoeffPoly> {
    right_side(omegas.params, omegas, r, k)
}
