use serde::Serialize;

use super::biseries::{invert_s, BiSeries};
use super::factors::{a_infinity, c_factor, omega_closed_form};
use super::{OmegaVector, Slope, SlopeSet};
use crate::error::{Error, Result};
use crate::higgs::{dimension, CurveParams};

type Band = Option<(i64, i64)>;

fn hull(a: Band, b: Band) -> Band {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some((a0, a1)), Some((b0, b1))) => Some((a0.min(b0), a1.max(b1))),
    }
}

fn minkowski(a: Band, b: Band) -> Band {
    let ((a0, a1), (b0, b1)) = (a?, b?);
    Some((a0 + b0, a1 + b1))
}

/// Charges that can occur in `[T^n] Log(A C_{>μ}^{-1})`.
///
/// `Log A` has `T^n` coefficient `t H̃_n(t) / ((1 - t)(1 - tL))`; subtracting the
/// slope-positive part of the argument leaves the Laurent polynomial
/// `t (H̃_n(t) - H̃_n(1)) / ((1 - t)(1 - tL))`, with exponents in
/// `[1 - D/2, D/2 - 1]`, plus the finitely many terms with slope between 0 and μ.
fn log_band(params: CurveParams, omegas: &OmegaVector, mu: Slope, n: u32) -> Band {
    let d = dimension(params, n);
    let mut band = (d >= 2).then(|| (1 - d / 2, d / 2 - 1));
    if !omegas.get(n).is_zero() {
        let f = mu.floor_times(n as i64);
        let extra = if f >= 1 {
            Some((1, f))
        } else if f <= -2 {
            Some((f + 1, -1))
        } else {
            None
        };
        band = hull(band, extra);
    }
    band
}

/// Predicted charge band of `[T^r] A C_{>μ}^{-1}` for `r ≤ rmax`.
fn predicted_bands(params: CurveParams, omegas: &OmegaVector, mu: Slope, rmax: u32) -> Vec<Band> {
    let logs: Vec<Band> = (0..=rmax)
        .map(|n| {
            if n == 0 {
                None
            } else {
                log_band(params, omegas, mu, n)
            }
        })
        .collect();
    // Adams operations ψ_k scale charges by k.
    let adams: Vec<Band> = (0..=rmax)
        .map(|m| {
            (1..=m)
                .filter(|k| m % k == 0)
                .map(|k| logs[(m / k) as usize].map(|(a, b)| (a * k as i64, b * k as i64)))
                .fold(None, hull)
        })
        .collect();
    let mut out: Vec<Band> = vec![Some((0, 0))];
    for r in 1..=rmax as usize {
        let b = (1..=r)
            .map(|m| minkowski(out[r - m], adams[m]))
            .fold(None, hull);
        out.push(b);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankComparison {
    pub r: u32,
    /// Charges compared, inclusive.
    pub compared: (i64, i64),
    /// Where the left side may be nonzero.
    pub band: Option<(i64, i64)>,
    pub lhs_support: Option<(i64, i64)>,
    pub rhs_support: Option<(i64, i64)>,
    pub equal: bool,
    pub first_mismatch: Option<i64>,
    pub within_band: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WallcrossingReport {
    pub g: u32,
    pub p: u32,
    pub mu: Slope,
    pub rmax: u32,
    pub window: i64,
    /// The `Exp` arguments were truncated at charges `≥ charge_cutoff`.
    pub charge_cutoff: i64,
    pub ranks: Vec<RankComparison>,
    pub pass: bool,
}

fn within(support: Option<(i64, i64)>, band: Band) -> bool {
    match (support, band) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some((a, b)), Some((lo, hi))) => lo <= a && b <= hi,
    }
}

/// `A_{+∞} C_{>μ}^{-1}` and `A_{+∞} C_{≥-μ}^{-1}`, each known through `s^window`
/// in every rank, together with the cutoff used.
fn both_sides(
    params: CurveParams,
    omegas: &OmegaVector,
    mu: Slope,
    rmax: u32,
    window: i64,
) -> Result<(BiSeries, BiSeries, i64)> {
    let target = window + 1;
    let mut margin = 0;
    for _ in 0..6 {
        let order = target + margin;
        let a = a_infinity(params, rmax, order);
        let lhs = a.mul(&c_factor(omegas, SlopeSet::Gt(mu), order, rmax, true)?)?;
        let pre = a.mul(&c_factor(omegas, SlopeSet::Ge(-mu), order, rmax, true)?)?;
        let reached = lhs.inner().min_order().min(pre.inner().min_order());
        if reached >= target {
            return Ok((lhs, pre, order));
        }
        margin += target - reached;
    }
    Err(Error::WindowInsufficient(format!(
        "could not reach charge {window} in both expansions"
    )))
}

/// Checks `A_{+∞} C_{>μ}^{-1} = (A_{+∞} C_{≥-μ}^{-1})(s^{-1})` for ranks up to
/// `rmax` on the charges `[-window, window]`, with `Ω` from the closed form.
pub fn verify_wallcrossing(
    params: CurveParams,
    mu: Slope,
    rmax: u32,
    window: i64,
) -> Result<WallcrossingReport> {
    let omegas = omega_closed_form(params, rmax)?;
    verify_wallcrossing_with(&omegas, mu, window)
}

/// As [`verify_wallcrossing`] with caller-supplied `Ω`.
pub fn verify_wallcrossing_with(
    omegas: &OmegaVector,
    mu: Slope,
    window: i64,
) -> Result<WallcrossingReport> {
    let params = omegas.params;
    let rmax = omegas.rmax();
    if window < 0 {
        return Err(Error::InvalidArgument("window must be nonnegative".into()));
    }
    let bands = predicted_bands(params, omegas, mu, rmax);
    for (r, b) in bands.iter().enumerate() {
        if let Some((lo, hi)) = *b {
            if lo < -window || hi > window {
                return Err(Error::WindowInsufficient(format!(
                    "rank {r} may carry charges in [{lo}, {hi}], outside ±{window}"
                )));
            }
        }
    }
    let (lhs, pre, cutoff) = both_sides(params, omegas, mu, rmax, window)?;
    let rhs = invert_s(&pre);
    let mut ranks = Vec::new();
    for (r, &band) in bands.iter().enumerate() {
        let mut first_mismatch = None;
        for k in -window..=window {
            if lhs.coeff(r, k)? != rhs.coeff(r, k)? {
                first_mismatch = Some(k);
                break;
            }
        }
        let lhs_support = lhs.support(r);
        let rhs_support = rhs.support(r);
        let within_band = within(lhs_support, band) && within(rhs_support, band);
        let equal = first_mismatch.is_none();
        ranks.push(RankComparison {
            r: r as u32,
            compared: (-window, window),
            band,
            lhs_support,
            rhs_support,
            equal,
            first_mismatch,
            within_band,
            pass: equal && within_band,
        });
    }
    let pass = ranks.iter().all(|c| c.pass);
    Ok(WallcrossingReport {
        g: params.g,
        p: params.p,
        mu,
        rmax,
        window,
        charge_cutoff: cutoff,
        ranks,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CoeffPoly;

    #[test]
    fn genus_zero_twist_three() {
        let rep = verify_wallcrossing(CurveParams::new(0, 3), Slope::integer(0), 2, 6).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.ranks[0].lhs_support, Some((0, 0)));
    }

    #[test]
    fn fractional_slope() {
        let rep = verify_wallcrossing(CurveParams::new(1, 0), Slope::new(1, 2), 2, 8).unwrap();
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn narrow_window_is_rejected() {
        let err = verify_wallcrossing(CurveParams::new(2, 0), Slope::integer(0), 2, 2);
        assert!(matches!(err, Err(Error::WindowInsufficient(_))));
    }

    #[test]
    fn wrong_omega_fails() {
        let params = CurveParams::new(1, 0);
        let good = omega_closed_form(params, 2).unwrap();
        let bad = OmegaVector::new(
            params,
            vec![good.get(1), good.get(2).add(&CoeffPoly::one())],
        );
        let rep = verify_wallcrossing_with(&bad, Slope::integer(0), 8).unwrap();
        assert!(!rep.pass);
        assert!(rep.ranks[1].pass && !rep.ranks[2].pass);
    }

    #[test]
    fn report_serializes() {
        let rep = verify_wallcrossing(CurveParams::new(0, 0), Slope::new(-1, 3), 2, 4).unwrap();
        let v = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["mu"], "-1/3");
        assert_eq!(v["ranks"].as_array().unwrap().len(), 3);
    }
}
