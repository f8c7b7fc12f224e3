use serde::{Deserialize, Serialize};

use super::hla::{hla, hla_lower_bound};
use super::{CurveParams, Realization};
use crate::algebra::json::{series_from_records, series_to_records, TermRecord};
use crate::algebra::{CoeffPoly, Monomial, RankSeries, TSeries, Var, EXACT};
use crate::error::{Error, Result};
use crate::partitions::enumerate_partitions;
use crate::plethysm::plog;

/// `dim M = 2((g-1) n^2 + p C(n,2) + 1)`.
pub fn dimension(params: CurveParams, n: u32) -> i64 {
    let (g, p, n) = (params.g as i64, params.p as i64, n as i64);
    2 * ((g - 1) * n * n + p * n * (n - 1) / 2 + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HnStatus {
    /// Every computed coefficient outside `[0, D]` vanishes, including a guard
    /// band above `D` of width at least `2g + 2`.
    ProvenPolynomialWithinTruncation,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnPoly {
    pub params: CurveParams,
    pub n: u32,
    pub realization: Realization,
    /// Conjectural degree `dim M`.
    pub dim: i64,
    /// Exponent below which coefficients were computed.
    pub tprec: i64,
    pub status: HnStatus,
    /// The polynomial; exact when proven, otherwise exact below `tprec`.
    pub poly: TSeries,
}

#[derive(Serialize, Deserialize)]
struct HnPolyJson {
    g: u32,
    p: u32,
    n: u32,
    realization: Realization,
    dim: i64,
    tprec: i64,
    status: HnStatus,
    terms: Vec<TermRecord>,
}

impl HnPoly {
    pub fn is_proven(&self) -> bool {
        self.status == HnStatus::ProvenPolynomialWithinTruncation
    }

    /// Coefficient of `t^j`.
    pub fn coeff(&self, j: i64) -> Result<CoeffPoly> {
        self.poly.coeff(j)
    }

    pub fn degree(&self) -> Option<i64> {
        self.poly.iter().last().map(|(k, _)| k)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let dto = HnPolyJson {
            g: self.params.g,
            p: self.params.p,
            n: self.n,
            realization: self.realization,
            dim: self.dim,
            tprec: self.tprec,
            status: self.status,
            terms: series_to_records(&self.poly),
        };
        serde_json::to_value(dto).expect("HnPoly serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let dto: HnPolyJson = serde_json::from_value(v.clone())
            .map_err(|e| Error::InvalidArgument(format!("malformed HnPoly: {e}")))?;
        let order = match dto.status {
            HnStatus::ProvenPolynomialWithinTruncation => EXACT,
            HnStatus::Inconclusive => dto.tprec,
        };
        Ok(HnPoly {
            params: CurveParams::new(dto.g, dto.p),
            n: dto.n,
            realization: dto.realization,
            dim: dto.dim,
            tprec: dto.tprec,
            status: dto.status,
            poly: series_from_records(Var::T, &dto.terms, order)?,
        })
    }
}

/// Default number of computed `t` exponents: `max(D, 0) + 2g + 6`.
pub fn default_tprec(params: CurveParams, n: u32) -> i64 {
    dimension(params, n).max(0) + 2 * params.g as i64 + 6
}

/// `H_n^{(p)}(t)` in the Hodge realization with the default truncation.
pub fn hn(params: CurveParams, n: u32, tprec: Option<i64>) -> Result<HnPoly> {
    hn_with(params, n, tprec, Realization::Hodge)
}

pub fn hn_with(
    params: CurveParams,
    n: u32,
    tprec: Option<i64>,
    realization: Realization,
) -> Result<HnPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    let dim = dimension(params, n);
    let tprec = tprec.unwrap_or_else(|| default_tprec(params, n));
    if tprec <= dim {
        return Err(Error::TruncationInsufficient(format!(
            "t-precision {tprec} does not exceed the expected degree {dim}"
        )));
    }
    let (g, p, nn) = (params.g as i64, params.p as i64, n as i64);
    let e0 = (1 - g) * nn * nn - p * nn * (nn - 1) / 2;
    // H_n = (-1)^{pn} t^{-e0} (1 - t)(1 - tL) [T^n] Log(Σ λH_λ T^{|λ|})
    let target = tprec + e0;
    let raw = log_coefficient(params, n, target, realization)?;
    let kernel = TSeries::polynomial(
        Var::T,
        [
            (0, CoeffPoly::one()),
            (
                1,
                CoeffPoly::from_int(-1).add(&CoeffPoly::lefschetz().neg()),
            ),
            (2, CoeffPoly::lefschetz()),
        ],
    );
    let poly = raw
        .mul(&kernel)
        .shift(-e0, Monomial::ONE)
        .neg_if((p * nn) % 2 == 1)
        .truncate(tprec);
    if poly.order() < tprec {
        return Err(Error::TruncationInsufficient(format!(
            "series exact only below t^{} (wanted {tprec})",
            poly.order()
        )));
    }
    let outside = poly.iter().any(|(k, _)| k < 0 || k > dim);
    let guard = tprec - dim - 1;
    let status = if !outside && guard >= 2 * g + 2 {
        HnStatus::ProvenPolynomialWithinTruncation
    } else {
        HnStatus::Inconclusive
    };
    let poly = if status == HnStatus::ProvenPolynomialWithinTruncation {
        TSeries::from_sparse(Var::T, poly.iter().map(|(k, c)| (k, c.clone())), EXACT)
    } else {
        poly
    };
    Ok(HnPoly {
        params,
        n,
        realization,
        dim,
        tprec,
        status,
        poly,
    })
}

/// `[T^n] Log(Σ_λ λH_λ T^{|λ|})`, exact below `target`.
fn log_coefficient(
    params: CurveParams,
    n: u32,
    target: i64,
    realization: Realization,
) -> Result<TSeries> {
    let nn = n as usize;
    let lows: Vec<i64> = (0..=n)
        .map(|m| {
            enumerate_partitions(m)
                .iter()
                .map(|lam| hla_lower_bound(params, lam))
                .min()
                .unwrap()
        })
        .collect();
    // w[j]: least total exponent a product of degree-j pieces can start at.
    let mut w = vec![0i64; nn + 1];
    for j in 1..=nn {
        w[j] = (1..=j).map(|m| w[j - m] + lows[m].min(0)).min().unwrap();
    }
    let mut margin = 0;
    for _ in 0..4 {
        let mut f = RankSeries::one(Var::T, nn);
        for m in 1..=nn {
            let order = target - w[nn - m] + margin;
            let mut acc = TSeries::zero(Var::T, EXACT);
            for lam in enumerate_partitions(m as u32) {
                acc = acc.add(&hla(params, &lam, order, realization));
            }
            f.set(m, acc);
        }
        let coeff = plog(&f)?.coeff(nn).clone();
        if coeff.order() >= target {
            return Ok(coeff);
        }
        margin += target - coeff.order();
    }
    Err(Error::TruncationInsufficient(format!(
        "could not reach t-order {target} at T^{n}"
    )))
}
