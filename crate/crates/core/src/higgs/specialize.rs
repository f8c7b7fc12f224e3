use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::hn::HnPoly;
use super::Realization;
use crate::algebra::{CoeffPoly, Monomial, UniPoly};
use crate::error::{Error, Result};

/// Integer polynomial in two variables `(q, w)`, terms sorted by exponent pair.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: Vec<((i64, i64), BigInt)>,
}

impl BiPoly {
    pub fn from_pairs<I: IntoIterator<Item = ((i64, i64), BigInt)>>(pairs: I) -> Self {
        let mut map: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
        for (e, c) in pairs {
            *map.entry(e).or_default() += c;
        }
        BiPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[((i64, i64), BigInt)] {
        &self.terms
    }

    /// Sets `q = 1`.
    pub fn at_q_one(&self) -> UniPoly {
        UniPoly::from_pairs(self.terms.iter().map(|((_, w), c)| (*w, c.clone())))
    }

    /// Sets `w = 1`.
    pub fn at_w_one(&self) -> UniPoly {
        UniPoly::from_pairs(self.terms.iter().map(|((q, _), c)| (*q, c.clone())))
    }
}

fn require_proven(h: &HnPoly) -> Result<()> {
    if h.is_proven() {
        Ok(())
    } else {
        Err(Error::TruncationInsufficient(format!(
            "H_{} is not certified polynomial below t^{}",
            h.n, h.tprec
        )))
    }
}

fn require_hodge(h: &HnPoly) -> Result<()> {
    match h.realization {
        Realization::Hodge => Ok(()),
        Realization::Diagonal => Err(Error::InvalidArgument(
            "this specialization needs u and v kept apart".into(),
        )),
    }
}

/// Terms `(i, j, c)` of `H_n(t, z, z)`: `t^i z^j` with coefficient `c`.
fn diagonal_terms(h: &HnPoly) -> Vec<(i64, i64, BigInt)> {
    let mut out = Vec::new();
    for (i, c) in h.poly.iter() {
        for (m, a) in c.terms() {
            out.push((i, ((m.u2 + m.v2) / 2) as i64, a.clone()));
        }
    }
    out
}

fn sign(negative: bool, c: &BigInt) -> BigInt {
    if negative {
        -c
    } else {
        c.clone()
    }
}

/// `E(u, v) = (uv)^{D/2} H_n(1, u, v)`.
pub fn epoly(h: &HnPoly) -> Result<CoeffPoly> {
    require_proven(h)?;
    require_hodge(h)?;
    let mut acc = CoeffPoly::zero();
    for (_, c) in h.poly.iter() {
        acc.add_assign(c);
    }
    Ok(acc.mul_monomial(Monomial::lefschetz((h.dim / 2) as i32)))
}

/// `E(z, z)` as a polynomial in `z`; available in both realizations.
pub fn epoly_diagonal(h: &HnPoly) -> Result<UniPoly> {
    require_proven(h)?;
    Ok(UniPoly::from_pairs(
        diagonal_terms(h)
            .into_iter()
            .map(|(_, j, c)| (j + h.dim, c)),
    ))
}

/// `P(y) = H_n(y^2, -y^{-1}, -y^{-1})`.
pub fn poincare(h: &HnPoly) -> Result<UniPoly> {
    require_proven(h)?;
    Ok(UniPoly::from_pairs(
        diagonal_terms(h)
            .into_iter()
            .map(|(i, j, c)| (2 * i - j, sign(j % 2 != 0, &c))),
    ))
}

/// Hodge polynomial `H_n(uv, -u^{-1}, -v^{-1})`.
pub fn hodge(h: &HnPoly) -> Result<CoeffPoly> {
    require_proven(h)?;
    require_hodge(h)?;
    let mut terms = Vec::new();
    for (i, c) in h.poly.iter() {
        for (m, a) in c.terms() {
            if !m.is_integral() {
                return Err(Error::Parity(format!("half power {m:?} in H_{}", h.n)));
            }
            let (ea, eb) = (m.u2 / 2, m.v2 / 2);
            let i = i as i32;
            terms.push((
                Monomial::u_pow(i - ea).mul(Monomial::v_pow(i - eb)),
                sign((ea + eb) % 2 != 0, a),
            ));
        }
    }
    Ok(CoeffPoly::from_terms(terms))
}

/// Mixed Hodge polynomial of the character variety, `H_n(q w^2, -w^{-1}, -w^{-1})`,
/// for untwisted parameters.
pub fn character_mhp(h: &HnPoly) -> Result<BiPoly> {
    require_proven(h)?;
    if h.params.p != 0 {
        return Err(Error::InvalidArgument(
            "the character variety specialization is defined for p = 0".into(),
        ));
    }
    Ok(BiPoly::from_pairs(
        diagonal_terms(h)
            .into_iter()
            .map(|(i, j, c)| ((i, 2 * i - j), sign(j % 2 != 0, &c))),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::higgs::hn::{hn, hn_with};
    use crate::higgs::CurveParams;

    #[test]
    fn rank_one_hodge_and_character() {
        for g in 0..=3 {
            let h = hn(CurveParams::new(g, 0), 1, None).unwrap();
            let one_plus = |m: Monomial| CoeffPoly::one().add(&CoeffPoly::monomial(m));
            let expect = one_plus(Monomial::u_pow(1))
                .pow(g)
                .mul(&one_plus(Monomial::v_pow(1)).pow(g));
            assert_eq!(hodge(&h).unwrap(), expect);
        }
        let h = hn(CurveParams::new(1, 0), 1, None).unwrap();
        // (1 + q w)^2
        let c = character_mhp(&h).unwrap();
        let expect = BiPoly::from_pairs([
            ((0, 0), BigInt::from(1)),
            ((1, 1), BigInt::from(2)),
            ((2, 2), BigInt::from(1)),
        ]);
        assert_eq!(c, expect);
        assert_eq!(c.at_q_one(), UniPoly::from_coeffs(&[1, 2, 1]));
    }

    #[test]
    fn small_genus_zero_values() {
        let h = hn(CurveParams::new(0, 3), 2, None).unwrap();
        assert_eq!(epoly(&h).unwrap(), CoeffPoly::one());
        assert_eq!(poincare(&h).unwrap(), UniPoly::one());
        let h = hn(CurveParams::new(0, 4), 2, None).unwrap();
        assert_eq!(poincare(&h).unwrap(), UniPoly::from_coeffs(&[1, 0, 1]));
        assert_eq!(
            epoly(&h).unwrap(),
            CoeffPoly::from_doubled(&[(2, 2, 1), (4, 4, 1)])
        );
        let hod = hodge(&h).unwrap();
        let y2 = hod.specialize(
            crate::algebra::SignedPower::new(1, 1),
            crate::algebra::SignedPower::new(1, 1),
        );
        assert_eq!(UniPoly::from_pairs(y2.unwrap()), poincare(&h).unwrap());
    }

    #[test]
    fn hodge_on_diagonal_is_poincare() {
        let params = CurveParams::new(1, 1);
        let h = hn(params, 2, None).unwrap();
        let hod = hodge(&h).unwrap();
        let diag = UniPoly::from_pairs(
            hod.specialize(
                crate::algebra::SignedPower::new(1, 1),
                crate::algebra::SignedPower::new(1, 1),
            )
            .unwrap(),
        );
        assert_eq!(diag, poincare(&h).unwrap());
        let d = hn_with(params, 2, None, Realization::Diagonal).unwrap();
        assert_eq!(poincare(&d).unwrap(), poincare(&h).unwrap());
        assert!(epoly(&d).is_err());
        assert_eq!(epoly_diagonal(&d).unwrap(), epoly_diagonal(&h).unwrap());
    }

    #[test]
    fn character_variety_at_q_one_is_poincare() {
        let h = hn(CurveParams::new(2, 0), 2, None).unwrap();
        let c = character_mhp(&h).unwrap();
        assert_eq!(c.at_q_one(), poincare(&h).unwrap());
        let w1 = c.at_w_one();
        let top = w1.degree().unwrap();
        assert_eq!(w1.reflect().shift(top), w1);
    }
}
