use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use super::factors::{c_factor, omega_closed_form};
use super::{OmegaVector, Slope, SlopeSet};
use crate::algebra::{CoeffPoly, Monomial, RankSeries, RatPoly, TSeries, Var};
use crate::error::{Error, Result};
use crate::higgs::CurveParams;
use crate::plethysm::exp_series;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MulticoverRank {
    pub r: u32,
    /// Charges compared, inclusive.
    pub compared: (i64, i64),
    pub first_mismatch: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MulticoverReport {
    pub g: u32,
    pub p: u32,
    pub mu: Slope,
    pub rmax: u32,
    pub window: i64,
    pub ranks: Vec<MulticoverRank>,
    /// `exp(𝔊)` came out with integer coefficients.
    pub integral: bool,
    pub pass: bool,
}

/// `[χ]_y H_γ = Σ_{k | gcd(r, χ)} (1/k) ([χ]_y / [k]_y) y^{-k} ψ_k(Ω_{r/k})`,
/// using `ψ_k(H̄_{r/k}) = y^{-k} ψ_k(Ω_{r/k})`.
fn g_coeff(omegas: &OmegaVector, r: u32, chi: i64) -> Result<RatPoly> {
    let mut acc = RatPoly::zero();
    if chi == 0 {
        return Ok(acc);
    }
    let qchi = CoeffPoly::quantum_integer(chi);
    let d = (r as i64).gcd(&chi);
    for k in (1..=d).filter(|k| d % k == 0) {
        let ratio = qchi
            .div_exact(&CoeffPoly::quantum_integer(k))
            .ok_or_else(|| Error::Integrality(format!("[{k}]_y does not divide [{chi}]_y")))?;
        let term = ratio
            .mul(&omegas.get(r / k as u32).adams(k as i32))
            .mul_monomial(Monomial::y_pow(-k as i32))
            .to_rational()
            .scale(&BigRational::new(BigInt::from(1), BigInt::from(k)));
        acc.add_assign(&term);
    }
    Ok(acc)
}

/// `𝔊_{≥μ}` through rank `rmax`, cut off at `s^order`.
fn g_series(omegas: &OmegaVector, mu: Slope, order: i64) -> Result<RankSeries<BigRational>> {
    let rmax = omegas.rmax();
    let mut coeffs = vec![TSeries::zero(Var::S, crate::algebra::EXACT)];
    for r in 1..=rmax {
        let kmin = SlopeSet::Ge(mu).min_charge(r as i64).unwrap();
        let terms = (kmin..order)
            .map(|chi| Ok((chi, g_coeff(omegas, r, chi)?)))
            .collect::<Result<Vec<_>>>()?;
        coeffs.push(TSeries::from_sparse(Var::S, terms, order));
    }
    Ok(RankSeries::from_coeffs(Var::S, coeffs))
}

/// Checks `exp(𝔊_{≥μ}) = C_{≥μ}` on charges up to `window`, with `Ω` from the
/// closed form. `𝔊` carries the multicover denominators `1/(k [k]_y)`; the
/// comparison is made over the rationals and the exponential is also checked
/// to be integral.
pub fn multicover_check(
    params: CurveParams,
    mu: Slope,
    rmax: u32,
    window: i64,
) -> Result<MulticoverReport> {
    let omegas = omega_closed_form(params, rmax)?;
    multicover_check_with(&omegas, mu, window)
}

pub fn multicover_check_with(
    omegas: &OmegaVector,
    mu: Slope,
    window: i64,
) -> Result<MulticoverReport> {
    let rmax = omegas.rmax();
    let target = window + 1;
    let mut margin = 0;
    for _ in 0..6 {
        let order = target + margin;
        let lhs = exp_series(&g_series(omegas, mu, order)?)?;
        let rhs = c_factor(omegas, SlopeSet::Ge(mu), order, rmax, false)?;
        let reached = lhs.min_order().min(rhs.inner().min_order());
        if reached < target {
            margin += target - reached;
            continue;
        }
        let rhs = rhs.inner().map_rational();
        let mut ranks = Vec::new();
        for r in 0..=rmax as usize {
            let (a, b) = (lhs.coeff(r).truncate(target), rhs.coeff(r).truncate(target));
            let lo = a.lo().min(b.lo()).min(window);
            ranks.push(MulticoverRank {
                r: r as u32,
                compared: (lo, window),
                first_mismatch: a.first_mismatch(&b),
            });
        }
        let integral = lhs
            .coeffs()
            .iter()
            .all(|c| c.iter().all(|(_, p)| p.to_integer().is_some()));
        let pass = integral && ranks.iter().all(|r| r.first_mismatch.is_none());
        return Ok(MulticoverReport {
            g: omegas.params.g,
            p: omegas.params.p,
            mu,
            rmax,
            window,
            ranks,
            integral,
            pass,
        });
    }
    Err(Error::WindowInsufficient(format!(
        "could not reach charge {window} at slope {mu}"
    )))
}

trait MapRational {
    fn map_rational(&self) -> RankSeries<BigRational>;
}

impl MapRational for RankSeries {
    fn map_rational(&self) -> RankSeries<BigRational> {
        RankSeries::from_coeffs(
            self.var(),
            self.coeffs()
                .iter()
                .map(|c| c.map_coeffs(|_, p| p.to_rational()))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_terms_are_the_argument() {
        let o = omega_closed_form(CurveParams::new(1, 0), 1).unwrap();
        for chi in -3..=3 {
            let expect = CoeffPoly::quantum_integer(chi)
                .mul_monomial(Monomial::y_pow(-1))
                .mul(&o.get(1))
                .to_rational();
            assert_eq!(g_coeff(&o, 1, chi).unwrap(), expect);
        }
    }

    #[test]
    fn doubled_class_has_a_fraction() {
        let o = omega_closed_form(CurveParams::new(1, 0), 2).unwrap();
        let c = g_coeff(&o, 2, 2).unwrap();
        assert!(c.to_integer().is_none());
    }

    #[test]
    fn genus_one_untwisted() {
        let rep = multicover_check(CurveParams::new(1, 0), Slope::integer(0), 2, 6).unwrap();
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn vanishing_omega() {
        let o = OmegaVector::new(CurveParams::new(0, 0), vec![CoeffPoly::zero(); 2]);
        let rep = multicover_check_with(&o, Slope::integer(0), 4).unwrap();
        assert!(rep.pass);
        assert!(c_factor(&o, SlopeSet::Ge(Slope::integer(0)), 5, 2, false)
            .unwrap()
            .terms(2)
            .is_empty());
    }
}
