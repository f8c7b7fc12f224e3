use super::biseries::{invert_s, t_to_s, BiSeries};
use super::{OmegaVector, SlopeSet};
use crate::algebra::{CoeffPoly, Monomial, RankSeries, TSeries, Var, EXACT};
use crate::error::{Error, Result};
use crate::higgs::{hla, hn, CurveParams, Realization};
use crate::partitions::enumerate_partitions;
use crate::plethysm::pexp;

/// `A_{+∞} = Σ_λ λH_λ(t) T^{|λ|}` in the variable `s`, exact below `s^order`
/// in every rank.
pub fn a_infinity(params: CurveParams, rmax: u32, order: i64) -> BiSeries {
    let mut out = RankSeries::one(Var::S, rmax as usize);
    for r in 1..=rmax {
        let mut acc = TSeries::zero(Var::T, EXACT);
        for lam in enumerate_partitions(r) {
            acc = acc.add(&hla(params, &lam, order, Realization::Hodge));
        }
        out.set(r as usize, t_to_s(&acc));
    }
    BiSeries::ascending(out)
}

/// `Ω_r = (-1)^{pr} H_r(1, u, v)` for `1 ≤ r ≤ rmax`.
pub fn omega_closed_form(params: CurveParams, rmax: u32) -> Result<OmegaVector> {
    let mut omega = Vec::with_capacity(rmax as usize);
    for r in 1..=rmax {
        let h = hn(params, r, None)?;
        if !h.is_proven() {
            return Err(Error::TruncationInsufficient(format!(
                "H_{r} could not be certified polynomial"
            )));
        }
        let mut acc = CoeffPoly::zero();
        for (_, c) in h.poly.iter() {
            acc.add_assign(c);
        }
        omega.push(if (params.p * r) % 2 == 1 {
            acc.neg()
        } else {
            acc
        });
    }
    Ok(OmegaVector::new(params, omega))
}

/// Coefficient of `s^k T^r` in `Ω' = (S_χ - S_{-χ}) Ω`, namely `(y^k - y^{-k}) Ω_r`.
pub fn omega_prime(omegas: &OmegaVector, r: u32, k: i64) -> CoeffPoly {
    let diff = CoeffPoly::from_terms([
        (Monomial::y_pow(k as i32), 1.into()),
        (Monomial::y_pow(-k as i32), (-1).into()),
    ]);
    diff.mul(&omegas.get(r))
}

/// `y^{-1} [k]_y Ω_r`, the coefficient of `s^k T^r` in `(S_χ - S_{-χ}) Ω / (L - 1)`.
fn argument_coeff(omegas: &OmegaVector, r: u32, k: i64) -> CoeffPoly {
    CoeffPoly::quantum_integer(k)
        .mul_monomial(Monomial::y_pow(-1))
        .mul(&omegas.get(r))
}

/// Argument of `Exp` for [`c_factor`]: the terms `y^{-1} [k]_y Ω_r s^k T^r`
/// with `r ≤ rmax` and `k / r` in `set`.
///
/// Classes bounded below give an ascending series truncated at `s^order`;
/// classes bounded above give the descending mirror image. `Ne` is unbounded
/// on both sides and rejected.
pub fn exp_argument(
    omegas: &OmegaVector,
    set: SlopeSet,
    order: i64,
    rmax: u32,
) -> Result<BiSeries> {
    let (stored, flip) = match set {
        SlopeSet::Ne(_) => {
            return Err(Error::InvalidArgument(
                "a slope class unbounded on both sides has no expansion in s".into(),
            ))
        }
        SlopeSet::Lt(_) | SlopeSet::Le(_) => (set.reflect(), true),
        _ => (set, false),
    };
    let mut inner = RankSeries::zero(Var::S, rmax as usize);
    for r in 1..=rmax {
        let ri = r as i64;
        let series = match (stored, stored.min_charge(ri)) {
            (SlopeSet::Empty, _) | (SlopeSet::Eq(_), None) => TSeries::zero(Var::S, EXACT),
            (SlopeSet::Eq(_), Some(k)) => {
                let k_true = if flip { -k } else { k };
                TSeries::from_sparse(Var::S, [(k, argument_coeff(omegas, r, k_true))], EXACT)
            }
            (_, Some(kmin)) => TSeries::from_sparse(
                Var::S,
                (kmin..order).map(|k| {
                    let k_true = if flip { -k } else { k };
                    (k, argument_coeff(omegas, r, k_true))
                }),
                order,
            ),
            (_, None) => unreachable!("bounded-below class without a least charge"),
        };
        inner.set(r as usize, series);
    }
    let arg = BiSeries::ascending(inner);
    Ok(if flip { invert_s(&arg) } else { arg })
}

/// `C_S = Exp(Σ_{k/r ∈ S} y^{-1} [k]_y Ω_r s^k T^r)`, or its inverse when
/// `inverse` is set. The argument is cut off at `s^order` (mirrored for classes
/// bounded above).
pub fn c_factor(
    omegas: &OmegaVector,
    set: SlopeSet,
    order: i64,
    rmax: u32,
    inverse: bool,
) -> Result<BiSeries> {
    let arg = exp_argument(omegas, set, order, rmax)?;
    let arg = if inverse { arg.neg() } else { arg };
    let stored = pexp(arg.inner())?;
    let out = BiSeries::ascending(stored);
    Ok(match arg.orientation() {
        super::Orientation::Ascending => out,
        super::Orientation::Descending => invert_s(&out),
    })
}
