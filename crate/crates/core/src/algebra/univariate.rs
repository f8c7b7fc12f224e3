//! Univariate Laurent polynomials with integer coefficients, the target of
//! specializations such as the Poincaré polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Terms sorted by ascending exponent, zero-free.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    terms: Vec<(i64, BigInt)>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(e: i64, c: BigInt) -> Self {
        Self::from_pairs([(e, c)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, BigInt)>>(pairs: I) -> Self {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in pairs {
            *map.entry(e).or_default() += c;
        }
        UniPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Builds from dense coefficients starting at exponent 0.
    pub fn from_coeffs(cs: &[i64]) -> Self {
        Self::from_pairs(
            cs.iter()
                .enumerate()
                .map(|(i, &c)| (i as i64, BigInt::from(c))),
        )
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn low_degree(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_pairs(self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut pairs = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                pairs.push((a + b, x * y));
            }
        }
        Self::from_pairs(pairs)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        UniPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `x ↦ 1/x`.
    pub fn reflect(&self) -> Self {
        Self::from_pairs(self.terms.iter().map(|(e, c)| (-e, c.clone())))
    }

    /// `x ↦ -x`.
    pub fn negate_variable(&self) -> Self {
        UniPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if e.is_odd() { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Value at `x = 1`.
    pub fn sum(&self) -> BigInt {
        self.terms.iter().map(|t| &t.1).sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// Exact quotient by a polynomial whose top coefficient is `±1`, or `None`
    /// if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (&(dtop, ref dc), dlow) = (d.terms.last()?, d.low_degree()?);
        if !dc.abs().is_one() {
            return None;
        }
        let mut rem: BTreeMap<i64, BigInt> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        let floor = self.low_degree().unwrap_or(0) - dlow;
        while let Some((&top, c)) = rem.iter().next_back() {
            let shift = top - dtop;
            if shift < floor {
                return None;
            }
            let q = c * dc;
            for (e, a) in &d.terms {
                let v = rem.entry(e + shift).or_default();
                *v -= &q * a;
                if v.is_zero() {
                    rem.remove(&(e + shift));
                }
            }
            quot.push((shift, q));
        }
        Some(Self::from_pairs(quot))
    }

    /// Multiplicity of `f` as an exact factor, together with the cofactor.
    pub fn strip_factor(&self, f: &Self, max: u32) -> (u32, Self) {
        let mut cur = self.clone();
        let mut k = 0;
        while k < max && !cur.is_zero() {
            match cur.div_exact(f) {
                Some(q) => {
                    cur = q;
                    k += 1;
                }
                None => break,
            }
        }
        (k, cur)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        let one_plus = UniPoly::from_coeffs(&[1, 1]);
        let p = one_plus.pow(4).mul(&UniPoly::from_coeffs(&[1, 0, 1]));
        let (k, rest) = p.strip_factor(&one_plus, 10);
        assert_eq!(k, 4);
        assert_eq!(rest, UniPoly::from_coeffs(&[1, 0, 1]));
        assert!(UniPoly::from_coeffs(&[1, 0, 1])
            .div_exact(&one_plus)
            .is_none());
    }

    #[test]
    fn reflect_and_shift() {
        let p = UniPoly::from_coeffs(&[1, 2, 3]);
        assert_eq!(p.reflect().shift(2), UniPoly::from_coeffs(&[3, 2, 1]));
        assert_eq!(p.negate_variable(), UniPoly::from_coeffs(&[1, -2, 3]));
        assert_eq!(p.sum(), BigInt::from(6));
    }
}
