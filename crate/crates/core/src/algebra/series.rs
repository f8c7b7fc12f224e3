//! Truncated Laurent series in one deformation variable over [`CoeffPoly`].
//!
//! A series carries a lower bound `lo` (every exponent below it has a zero
//! coefficient) and an exactness `order`: coefficients are known for exponents
//! `< order` and unknown from `order` on. Reading an unknown coefficient is an
//! error rather than a silent zero.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::coeff::Coeff;
use super::poly::{CoeffPoly, Monomial};
use crate::error::{Error, Result};

/// Sentinel order for series known exactly (polynomials).
pub const EXACT: i64 = i64::MAX / 4;

pub(crate) fn clamp(x: i64) -> i64 {
    x.min(EXACT)
}

pub(crate) fn sat_add(a: i64, b: i64) -> i64 {
    if a >= EXACT || b >= EXACT {
        EXACT
    } else {
        clamp(a + b)
    }
}

/// Which formal variable a series is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    T,
    S,
}

#[derive(Clone, PartialEq, Eq)]
pub struct TSeries<C: Coeff = BigInt> {
    var: Var,
    lo: i64,
    order: i64,
    // coeffs[i] belongs to exponent lo + i; exponents in [lo + len, order) are zero
    coeffs: Vec<CoeffPoly<C>>,
}

impl<C: Coeff> TSeries<C> {
    /// Builds a series from a dense coefficient run starting at `lo`. Entries at
    /// or beyond `order` are dropped.
    pub fn new(var: Var, lo: i64, order: i64, mut coeffs: Vec<CoeffPoly<C>>) -> Self {
        if order <= lo {
            return Self::zero(var, order);
        }
        let keep = (order - lo).min(coeffs.len() as i64) as usize;
        coeffs.truncate(keep);
        let mut s = TSeries {
            var,
            lo,
            order,
            coeffs,
        };
        s.normalize();
        s
    }

    pub fn zero(var: Var, order: i64) -> Self {
        TSeries {
            var,
            lo: order,
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, CoeffPoly::one())
    }

    pub fn constant(var: Var, c: CoeffPoly<C>) -> Self {
        Self::monomial(var, 0, c, EXACT)
    }

    /// `c · var^k`, exact below `order`.
    pub fn monomial(var: Var, k: i64, c: CoeffPoly<C>, order: i64) -> Self {
        Self::new(var, k, order, vec![c])
    }

    /// An exactly known Laurent polynomial.
    pub fn polynomial<I: IntoIterator<Item = (i64, CoeffPoly<C>)>>(var: Var, terms: I) -> Self {
        Self::from_sparse(var, terms, EXACT)
    }

    pub fn from_sparse<I: IntoIterator<Item = (i64, CoeffPoly<C>)>>(
        var: Var,
        terms: I,
        order: i64,
    ) -> Self {
        let mut terms: Vec<(i64, CoeffPoly<C>)> =
            terms.into_iter().filter(|(k, _)| *k < order).collect();
        if terms.is_empty() {
            return Self::zero(var, order);
        }
        terms.sort_by_key(|t| t.0);
        let lo = terms[0].0;
        let hi = terms.last().unwrap().0;
        let mut coeffs = vec![CoeffPoly::zero(); (hi - lo + 1) as usize];
        for (k, c) in terms {
            coeffs[(k - lo) as usize].add_assign(&c);
        }
        Self::new(var, lo, order, coeffs)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.lo = self.order;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i64;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Least exponent that may carry a nonzero coefficient.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order >= EXACT
    }

    /// Exponent one past the last stored nonzero coefficient.
    pub fn support_end(&self) -> i64 {
        self.lo + self.coeffs.len() as i64
    }

    fn nonzero_end(&self) -> i64 {
        if self.coeffs.is_empty() {
            i64::MIN
        } else {
            self.support_end()
        }
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn retag(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    /// Coefficient at exponent `k`; errors if `k` lies beyond the exact range.
    pub fn coeff(&self, k: i64) -> Result<CoeffPoly<C>> {
        Ok(self.coeff_ref(k)?.cloned().unwrap_or_default())
    }

    /// Borrowing variant of [`coeff`](Self::coeff); `None` means zero.
    pub fn coeff_ref(&self, k: i64) -> Result<Option<&CoeffPoly<C>>> {
        if k >= self.order {
            return Err(Error::Truncated {
                exponent: k,
                order: self.order,
            });
        }
        if k < self.lo {
            return Ok(None);
        }
        Ok(self
            .coeffs
            .get((k - self.lo) as usize)
            .filter(|c| !c.is_zero()))
    }

    /// Nonzero terms in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &CoeffPoly<C>)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        Self::new(self.var, self.lo, order, self.coeffs.clone())
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(
            self.var, other.var,
            "series in different variables cannot be combined"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_var(other);
        let order = self.order.min(other.order);
        let lo = self.lo.min(other.lo);
        let end = self.nonzero_end().max(other.nonzero_end()).min(order);
        if end <= lo {
            return Self::zero(self.var, order);
        }
        let mut coeffs = vec![CoeffPoly::zero(); (end - lo) as usize];
        for src in [self, other] {
            for (k, c) in src.iter() {
                if k < end {
                    coeffs[(k - lo) as usize].add_assign(c);
                }
            }
        }
        Self::new(self.var, lo, order, coeffs)
    }

    pub fn neg(&self) -> Self {
        TSeries {
            var: self.var,
            lo: self.lo,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Truncated product. The result is exact below
    /// `min(order(a) + lo(b), order(b) + lo(a))`.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_var(other);
        let lo = sat_add(self.lo, other.lo);
        let order = sat_add(self.order, other.lo).min(sat_add(other.order, self.lo));
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var, order);
        }
        let (na, nb) = (self.coeffs.len(), other.coeffs.len());
        let full = (na + nb - 1) as i64;
        let len = full.min(order - lo).max(0) as usize;
        let mut coeffs = Vec::with_capacity(len);
        let mut pairs = Vec::new();
        for n in 0..len {
            pairs.clear();
            let i_lo = n.saturating_sub(nb - 1);
            let i_hi = n.min(na - 1);
            for i in i_lo..=i_hi {
                let (a, b) = (&self.coeffs[i], &other.coeffs[n - i]);
                if !a.is_zero() && !b.is_zero() {
                    pairs.push((a, b));
                }
            }
            coeffs.push(CoeffPoly::dot(&pairs));
        }
        Self::new(self.var, lo, order, coeffs)
    }

    pub fn scale(&self, c: &CoeffPoly<C>) -> Self {
        if c.is_zero() {
            return Self::zero(self.var, self.order);
        }
        TSeries {
            var: self.var,
            lo: self.lo,
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiplication by the exact monomial `var^k · m`.
    pub fn shift(&self, k: i64, m: Monomial) -> Self {
        TSeries {
            var: self.var,
            lo: sat_add(self.lo, k),
            order: sat_add(self.order, k),
            coeffs: self.coeffs.iter().map(|a| a.mul_monomial(m)).collect(),
        }
    }

    pub fn neg_if(&self, negate: bool) -> Self {
        if negate {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Adams operation: `var ↦ var^k` together with `u ↦ u^k`, `v ↦ v^k`.
    pub fn adams(&self, k: u32) -> Self {
        assert!(k >= 1);
        let kk = k as i64;
        let order = if self.order >= EXACT {
            EXACT
        } else {
            clamp(self.order.saturating_mul(kk))
        };
        let terms: Vec<(i64, CoeffPoly<C>)> = self
            .iter()
            .map(|(e, c)| (e * kk, c.adams(k as i32)))
            .collect();
        Self::from_sparse(self.var, terms, order)
    }

    /// Substitution `var ↦ var^h · L^la`.
    pub fn substitute(&self, h: u32, la: i32) -> Self {
        assert!(h >= 1, "substitution exponent must be positive");
        let hh = h as i64;
        let order = if self.order >= EXACT {
            EXACT
        } else {
            clamp(self.order.saturating_mul(hh))
        };
        let terms: Vec<(i64, CoeffPoly<C>)> = self
            .iter()
            .map(|(e, c)| (e * hh, c.mul_monomial(Monomial::lefschetz(la * e as i32))))
            .collect();
        Self::from_sparse(self.var, terms, order)
    }

    /// Multiplicative inverse, exact below `min(max_order, order - 2·lo)`.
    ///
    /// The lowest nonzero term `var^lo · c` is factored out first, so `c` must
    /// be a unit (a signed monomial) of the coefficient ring.
    pub fn invert(&self, max_order: i64) -> Result<Self> {
        let lead = self
            .coeffs
            .first()
            .ok_or_else(|| Error::NotInvertible("series is zero within its exact range".into()))?;
        let inv_lead = lead.unit_inverse().ok_or_else(|| {
            Error::NotInvertible(format!("leading coefficient {lead:?} is not a unit"))
        })?;
        if max_order >= EXACT {
            return Err(Error::InvalidArgument(
                "inverse needs a finite truncation order".into(),
            ));
        }
        let lo = -self.lo;
        let order = if self.order >= EXACT {
            max_order
        } else {
            max_order.min(self.order - 2 * self.lo)
        };
        let len = (order - lo).max(0) as usize;
        let mut out: Vec<CoeffPoly<C>> = Vec::with_capacity(len);
        for n in 0..len {
            if n == 0 {
                out.push(inv_lead.clone());
                continue;
            }
            let pairs: Vec<_> = (1..=n.min(self.coeffs.len() - 1))
                .map(|i| (&self.coeffs[i], &out[n - i]))
                .collect();
            let acc = CoeffPoly::dot(&pairs);
            out.push(acc.mul(&inv_lead).neg());
        }
        Ok(Self::new(self.var, lo, order, out))
    }

    pub fn div_exact_int(&self, n: &BigInt) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.div_exact_int(n).ok_or_else(|| {
                Error::Integrality(format!(
                    "coefficient at exponent {} is not divisible by {n}",
                    self.lo + i as i64
                ))
            })?);
        }
        Ok(TSeries {
            var: self.var,
            lo: self.lo,
            order: self.order,
            coeffs,
        })
    }

    pub fn map_coeffs<D: Coeff, F: FnMut(i64, &CoeffPoly<C>) -> CoeffPoly<D>>(
        &self,
        mut f: F,
    ) -> TSeries<D> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| f(self.lo + i as i64, c))
            .collect();
        TSeries::new(self.var, self.lo, self.order, coeffs)
    }

    /// Compares two series on the exponents both know exactly, returning the
    /// first exponent where they differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<i64> {
        let order = self.order.min(other.order);
        let lo = self.lo.min(other.lo);
        let end = self.nonzero_end().max(other.nonzero_end()).min(order);
        (lo..end).find(|&k| self.coeff_ref(k).ok().flatten() != other.coeff_ref(k).ok().flatten())
    }

    /// Equality up to the common exactness order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }
}

impl<C: Coeff> fmt::Debug for TSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.var {
            Var::T => "t",
            Var::S => "s",
        };
        write!(f, "TSeries[{v}; lo={}, order={}](", self.lo, self.order)?;
        for (k, c) in self.iter() {
            write!(f, " {v}^{k}: ({c:?});")?;
        }
        write!(f, ")")
    }
}
