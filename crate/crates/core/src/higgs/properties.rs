use serde::Serialize;

use super::hn::HnPoly;
use super::zeta::zeta_numerator;
use crate::algebra::{Coeff, CoeffPoly, Monomial};
use crate::error::Result;

/// Outcome of the structural checks on a computed `H_n^{(p)}(t)`.
///
/// When `D < 0` the polynomial is expected to vanish and every check is
/// vacuous for the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub g: u32,
    pub p: u32,
    pub n: u32,
    pub dim: i64,
    pub degree: Option<i64>,
    pub degree_equals_d: bool,
    pub palindromy: bool,
    pub pxdiv: bool,
    pub signflip_nonneg: bool,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.degree_equals_d && self.palindromy && self.pxdiv && self.signflip_nonneg
    }
}

/// Dense coefficients `a_0..a_deg`, or `None` for a nonzero coefficient at a
/// negative exponent.
fn dense(h: &HnPoly) -> Option<Vec<CoeffPoly>> {
    let mut out = Vec::new();
    for (k, c) in h.poly.iter() {
        if k < 0 {
            return None;
        }
        out.resize(k as usize + 1, CoeffPoly::zero());
        out[k as usize] = c.clone();
    }
    Some(out)
}

/// Divides `num` by `den` in `CoeffPoly[t]`; `den`'s top coefficient must be a unit.
fn poly_div_exact(num: &[CoeffPoly], den: &[CoeffPoly]) -> Option<Vec<CoeffPoly>> {
    let dtop = den.len() - 1;
    let inv = den[dtop].unit_inverse()?;
    let mut rem = num.to_vec();
    if rem.len() <= dtop {
        return rem.iter().all(|c| c.is_zero()).then(Vec::new);
    }
    let mut quot = vec![CoeffPoly::zero(); rem.len() - dtop];
    for k in (0..quot.len()).rev() {
        let q = rem[k + dtop].mul(&inv);
        if q.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] = rem[k + i].sub(&q.mul(d));
        }
        quot[k] = q;
    }
    rem.iter().all(|c| c.is_zero()).then_some(quot)
}

pub fn check_hn_properties(h: &HnPoly) -> Result<PropertyReport> {
    let dim = h.dim;
    let degree = h.degree();
    let coeffs = dense(h);
    let zero = h.poly.is_zero();
    let degree_equals_d = if zero { dim < 0 } else { degree == Some(dim) };

    let palindromy = match &coeffs {
        None => false,
        Some(_) if zero => true,
        Some(a) => {
            dim >= 0
                && (0..=dim).all(|j| {
                    let get = |k: i64| a.get(k as usize).cloned().unwrap_or_default();
                    let twisted = get(j).mul_monomial(Monomial::lefschetz((dim / 2 - j) as i32));
                    get(dim - j) == twisted
                })
        }
    };

    let px: Vec<CoeffPoly> = {
        let p = zeta_numerator(h.params.g, h.realization);
        (0..=2 * h.params.g as i64)
            .map(|k| p.coeff(k).unwrap())
            .collect()
    };
    let pxdiv = match &coeffs {
        None => false,
        Some(a) => poly_div_exact(a, &px).is_some(),
    };

    // H(t, -u, -v): the monomial with doubled exponents (u2, v2) picks up the
    // sign (-1)^{(u2 + v2)/2}.
    let signflip_nonneg = h.poly.iter().all(|(_, c)| {
        c.terms().iter().all(|(m, a)| {
            let flip = ((m.u2 + m.v2) / 2) % 2 != 0;
            let flipped = if flip { a.neg_ref() } else { a.clone() };
            !Coeff::is_negative(&flipped)
        })
    });

    Ok(PropertyReport {
        g: h.params.g,
        p: h.params.p,
        n: h.n,
        dim,
        degree,
        degree_equals_d,
        palindromy,
        pxdiv,
        signflip_nonneg,
    })
}
