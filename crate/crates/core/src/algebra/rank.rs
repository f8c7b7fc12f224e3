//! Series in the rank variable `T`, truncated at a fixed maximal degree, with
//! [`TSeries`] coefficients.

use std::fmt;

use num_bigint::BigInt;

use super::coeff::Coeff;
use super::poly::{CoeffPoly, Monomial};
use super::series::{TSeries, Var, EXACT};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RankSeries<C: Coeff = BigInt> {
    var: Var,
    coeffs: Vec<TSeries<C>>,
}

impl<C: Coeff> RankSeries<C> {
    /// Builds from per-degree coefficients; degree `r` sits at index `r`.
    pub fn from_coeffs(var: Var, coeffs: Vec<TSeries<C>>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a rank series needs its T^0 coefficient"
        );
        for c in &coeffs {
            assert_eq!(c.var(), var, "rank series coefficients share one variable");
        }
        RankSeries { var, coeffs }
    }

    pub fn zero(var: Var, rmax: usize) -> Self {
        Self::from_coeffs(var, vec![TSeries::zero(var, EXACT); rmax + 1])
    }

    pub fn one(var: Var, rmax: usize) -> Self {
        let mut s = Self::zero(var, rmax);
        s.coeffs[0] = TSeries::one(var);
        s
    }

    pub fn rmax(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeff(&self, r: usize) -> &TSeries<C> {
        &self.coeffs[r]
    }

    pub fn coeffs(&self) -> &[TSeries<C>] {
        &self.coeffs
    }

    pub fn set(&mut self, r: usize, c: TSeries<C>) {
        assert_eq!(c.var(), self.var);
        self.coeffs[r] = c;
    }

    /// Drops degrees above `rmax`.
    pub fn truncate_rank(&self, rmax: usize) -> Self {
        let keep = (rmax + 1).min(self.coeffs.len());
        Self::from_coeffs(self.var, self.coeffs[..keep].to_vec())
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.var, other.var, "rank series in different variables");
        assert_eq!(self.rmax(), other.rmax(), "rank series with different rmax");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Self::from_coeffs(self.var, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.var, self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let rmax = self.rmax();
        let mut coeffs = Vec::with_capacity(rmax + 1);
        for n in 0..=rmax {
            let mut acc: Option<TSeries<C>> = None;
            for m in 0..=n {
                let (a, b) = (&self.coeffs[m], &other.coeffs[n - m]);
                if a.is_zero() && a.is_exact() || b.is_zero() && b.is_exact() {
                    continue;
                }
                let term = a.mul(b);
                acc = Some(match acc {
                    None => term,
                    Some(x) => x.add(&term),
                });
            }
            coeffs.push(acc.unwrap_or_else(|| TSeries::zero(self.var, EXACT)));
        }
        Self::from_coeffs(self.var, coeffs)
    }

    /// Multiplicative inverse; the `T^0` coefficient must itself be invertible.
    pub fn invert(&self, max_order: i64) -> Result<Self> {
        let inv0 = self.coeffs[0].invert(max_order)?;
        let mut out: Vec<TSeries<C>> = vec![inv0.clone()];
        for n in 1..=self.rmax() {
            let mut acc = TSeries::zero(self.var, EXACT);
            for m in 1..=n {
                if self.coeffs[m].is_zero() && self.coeffs[m].is_exact() {
                    continue;
                }
                acc = acc.add(&self.coeffs[m].mul(&out[n - m]));
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(Self::from_coeffs(self.var, out))
    }

    /// Adams operation acting on `T`, the series variable, `u` and `v`.
    /// Degrees pushed above `rmax` are dropped.
    pub fn adams(&self, k: u32) -> Self {
        assert!(k >= 1);
        let rmax = self.rmax();
        let mut out = Self::zero(self.var, rmax);
        for (r, c) in self.coeffs.iter().enumerate() {
            let kr = r * k as usize;
            if kr > rmax {
                break;
            }
            out.coeffs[kr] = c.adams(k);
        }
        out
    }

    pub fn scale(&self, c: &CoeffPoly<C>) -> Self {
        Self::from_coeffs(self.var, self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Applies `f` to every coefficient series.
    pub fn map<F: FnMut(usize, &TSeries<C>) -> TSeries<C>>(&self, mut f: F) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(r, c)| f(r, c))
            .collect();
        Self::from_coeffs(self.var, coeffs)
    }

    /// Multiplies the `T^r` coefficient by `var^{k r} · m^r`.
    pub fn shift_by_rank(&self, k: i64, m: Monomial) -> Self {
        self.map(|r, c| c.shift(k * r as i64, m.pow(r as i32)))
    }

    /// Least exactness order over all degrees.
    pub fn min_order(&self) -> i64 {
        self.coeffs.iter().map(|c| c.order()).min().unwrap()
    }

    /// First `(degree, exponent)` where the two series disagree on commonly
    /// known coefficients.
    pub fn first_mismatch(&self, other: &Self) -> Option<(usize, i64)> {
        self.check(other);
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find_map(|(r, (a, b))| a.first_mismatch(b).map(|k| (r, k)))
    }

    pub fn coeff_at(&self, r: usize, k: i64) -> Result<CoeffPoly<C>> {
        if r > self.rmax() {
            return Err(Error::InvalidArgument(format!(
                "degree {r} beyond rmax {}",
                self.rmax()
            )));
        }
        self.coeffs[r].coeff(k)
    }
}

impl<C: Coeff> fmt::Debug for RankSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = CoeffPoly;

    fn series(terms: &[(usize, i64, P)], rmax: usize) -> RankSeries {
        let mut out = RankSeries::zero(Var::T, rmax);
        for (r, k, c) in terms {
            let cur = out.coeff(*r).clone();
            out.set(
                *r,
                cur.add(&TSeries::monomial(Var::T, *k, c.clone(), EXACT)),
            );
        }
        out
    }

    #[test]
    fn adams_scales_rank_and_variables() {
        let u = P::monomial(Monomial::u_pow(1));
        let f = series(&[(1, 1, u)], 3);
        let g = f.adams(2);
        let expect = series(&[(2, 2, P::monomial(Monomial::u_pow(2)))], 3);
        assert_eq!(g, expect);
        assert!(f.adams(4).coeff(1).is_zero());
    }

    #[test]
    fn inverse_of_one_minus_t() {
        let f = series(&[(0, 0, P::one()), (1, 0, P::from_int(-1))], 4);
        let inv = f.invert(6).unwrap();
        for r in 0..=4 {
            assert_eq!(inv.coeff(r).coeff(0).unwrap(), P::one());
        }
        let prod = f.mul(&inv);
        assert_eq!(prod.coeff(0), &TSeries::new(Var::T, 0, 6, vec![P::one()]));
        for r in 1..=4 {
            assert!(prod.coeff(r).is_zero());
        }
    }
}
