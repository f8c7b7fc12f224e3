use serde::Serialize;

use super::SlopeSet;
use crate::algebra::{CoeffPoly, Monomial, RankSeries, TSeries, Var, EXACT};
use crate::error::{Error, Result};

/// `t^k c ↦ s^k y^{-k} c`, from `s = t y`.
pub fn t_to_s(f: &TSeries) -> TSeries {
    assert_eq!(f.var(), Var::T, "t_to_s expects a series in t");
    f.map_coeffs(|k, c| c.mul_monomial(Monomial::y_pow(-k as i32)))
        .retag(Var::S)
}

/// Inverse of [`t_to_s`].
pub fn s_to_t(f: &TSeries) -> TSeries {
    assert_eq!(f.var(), Var::S, "s_to_t expects a series in s");
    f.map_coeffs(|k, c| c.mul_monomial(Monomial::y_pow(k as i32)))
        .retag(Var::T)
}

/// Which direction in `s` a series may be infinite in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Finitely many negative powers of `s`; known below some exponent.
    Ascending,
    /// Finitely many positive powers of `s`; known above some exponent.
    Descending,
}

/// Element of `V((s^{±1}))[[T]]` truncated in `T` at `rmax`.
///
/// Each `T^r` coefficient is a one-sided Laurent series in `s`. A descending
/// series is stored through its reflection `s ↦ s^{-1}`, so its known window
/// is `[1 - order, +∞)` where `order` belongs to the stored ascending series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    orientation: Orientation,
    inner: RankSeries,
}

impl BiSeries {
    pub fn ascending(inner: RankSeries) -> Self {
        assert_eq!(inner.var(), Var::S);
        BiSeries {
            orientation: Orientation::Ascending,
            inner,
        }
    }

    pub fn one(rmax: usize) -> Self {
        Self::ascending(RankSeries::one(Var::S, rmax))
    }

    /// Builds an exact series from `(r, k, c)` terms.
    pub fn from_terms<I: IntoIterator<Item = (usize, i64, CoeffPoly)>>(
        rmax: usize,
        terms: I,
    ) -> Self {
        let mut per_rank: Vec<Vec<(i64, CoeffPoly)>> = vec![Vec::new(); rmax + 1];
        for (r, k, c) in terms {
            per_rank[r].push((k, c));
        }
        Self::ascending(RankSeries::from_coeffs(
            Var::S,
            per_rank
                .into_iter()
                .map(|t| TSeries::from_sparse(Var::S, t, EXACT))
                .collect(),
        ))
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn rmax(&self) -> usize {
        self.inner.rmax()
    }

    /// The stored series; reflected when the orientation is descending.
    pub fn inner(&self) -> &RankSeries {
        &self.inner
    }

    fn stored_exponent(&self, k: i64) -> i64 {
        match self.orientation {
            Orientation::Ascending => k,
            Orientation::Descending => -k,
        }
    }

    /// Coefficient of `s^k T^r`, or `Truncated` outside the known window.
    pub fn coeff(&self, r: usize, k: i64) -> Result<CoeffPoly> {
        self.inner
            .coeff_at(r, self.stored_exponent(k))
            .map_err(|e| match e {
                Error::Truncated { .. } => Error::Truncated {
                    exponent: k,
                    order: self.inner.coeff(r).order(),
                },
                e => e,
            })
    }

    /// Known window `[kmin, kmax]` at rank `r`; `None` marks an unbounded side.
    pub fn window(&self, r: usize) -> (Option<i64>, Option<i64>) {
        let c = self.inner.coeff(r);
        let top = (!c.is_exact()).then(|| c.order() - 1);
        match self.orientation {
            Orientation::Ascending => (None, top),
            Orientation::Descending => (top.map(|t| -t), None),
        }
    }

    /// Whether every coefficient of `s^k T^r` with `k` in `[lo, hi]` is known.
    pub fn knows(&self, r: usize, lo: i64, hi: i64) -> bool {
        let (a, b) = self.window(r);
        a.is_none_or(|a| a <= lo) && b.is_none_or(|b| hi <= b)
    }

    /// Nonzero `(k, c)` at rank `r` in increasing `k`.
    pub fn terms(&self, r: usize) -> Vec<(i64, CoeffPoly)> {
        let mut out: Vec<_> = self
            .inner
            .coeff(r)
            .iter()
            .map(|(k, c)| (self.stored_exponent(k), c.clone()))
            .collect();
        out.sort_by_key(|t| t.0);
        out
    }

    /// Least and greatest exponent with a nonzero coefficient at rank `r`.
    pub fn support(&self, r: usize) -> Option<(i64, i64)> {
        let t = self.terms(r);
        Some((t.first()?.0, t.last()?.0))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.orientation != other.orientation {
            return Err(Error::InvalidArgument(
                "cannot multiply series expanded in opposite directions of s".into(),
            ));
        }
        Ok(BiSeries {
            orientation: self.orientation,
            inner: self.inner.mul(&other.inner),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.orientation != other.orientation {
            return Err(Error::InvalidArgument(
                "cannot add series expanded in opposite directions of s".into(),
            ));
        }
        Ok(BiSeries {
            orientation: self.orientation,
            inner: self.inner.add(&other.inner),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BiSeries {
            orientation: self.orientation,
            inner: self.inner.neg(),
        }
    }

    /// Drops the `T^0` coefficient (`f - 1` for the series used here).
    pub fn without_unit(&self) -> Self {
        let mut inner = self.inner.clone();
        inner.set(0, TSeries::zero(Var::S, EXACT));
        BiSeries {
            orientation: self.orientation,
            inner,
        }
    }
}

/// `s ↦ s^{-1}`.
pub fn invert_s(f: &BiSeries) -> BiSeries {
    BiSeries {
        orientation: match f.orientation {
            Orientation::Ascending => Orientation::Descending,
            Orientation::Descending => Orientation::Ascending,
        },
        inner: f.inner.clone(),
    }
}

/// Keeps the `s^k T^r` terms with `r ≥ 1` and `k / r` in `set`. Known windows
/// are unchanged.
pub fn slope_filter(f: &BiSeries, set: SlopeSet) -> BiSeries {
    let stored_set = match f.orientation {
        Orientation::Ascending => set,
        Orientation::Descending => set.reflect(),
    };
    let inner = f.inner.map(|r, c| {
        let kept: Vec<_> = c
            .iter()
            .filter(|(k, _)| stored_set.contains(r as i64, *k))
            .map(|(k, c)| (k, c.clone()))
            .collect();
        TSeries::from_sparse(Var::S, kept, c.order())
    });
    BiSeries {
        orientation: f.orientation,
        inner,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adhm::Slope;

    fn s(r: usize, k: i64) -> (usize, i64, CoeffPoly) {
        (r, k, CoeffPoly::one())
    }

    #[test]
    fn change_of_variables() {
        let t = TSeries::monomial(Var::T, 1, CoeffPoly::one(), EXACT);
        let expect = TSeries::monomial(Var::S, 1, CoeffPoly::monomial(Monomial::y_pow(-1)), EXACT);
        assert_eq!(t_to_s(&t), expect);
        let t = TSeries::monomial(Var::T, -1, CoeffPoly::lefschetz(), 4);
        let got = t_to_s(&t);
        assert_eq!(
            got.coeff(-1).unwrap(),
            CoeffPoly::from_doubled(&[(3, 3, 1)])
        );
        assert_eq!(got.order(), 4);
        assert_eq!(s_to_t(&got), t);
    }

    #[test]
    fn filters() {
        let f = BiSeries::from_terms(2, [s(1, 2), s(2, 1)]);
        let got = slope_filter(&f, SlopeSet::Gt(Slope::new(3, 2)));
        assert_eq!(got, BiSeries::from_terms(2, [s(1, 2)]));

        let f = BiSeries::from_terms(1, [s(0, 0), s(1, 1)]);
        let got = slope_filter(&f, SlopeSet::Gt(Slope::integer(0)));
        assert_eq!(got, BiSeries::from_terms(1, [s(1, 1)]));

        let f = BiSeries::from_terms(3, [s(0, 0), s(1, 1), s(2, 2), s(2, 3), s(3, -1)]);
        let m = Slope::integer(1);
        let parts = slope_filter(&f, SlopeSet::Eq(m))
            .add(&slope_filter(&f, SlopeSet::Ne(m)))
            .unwrap();
        assert_eq!(parts, f.without_unit());
    }

    #[test]
    fn filters_on_descending_series() {
        let f = invert_s(&BiSeries::from_terms(2, [s(1, 2), s(2, -1)]));
        let got = slope_filter(&f, SlopeSet::Lt(Slope::integer(0)));
        assert_eq!(got, invert_s(&BiSeries::from_terms(2, [s(1, 2)])));
    }

    #[test]
    fn inversion() {
        let f = BiSeries::from_terms(1, [s(1, 2)]);
        assert_eq!(invert_s(&f).terms(1), vec![(-2, CoeffPoly::one())]);
        assert_eq!(
            invert_s(&BiSeries::one(2)).terms(0),
            vec![(0, CoeffPoly::one())]
        );
        assert_eq!(invert_s(&invert_s(&f)), f);

        let mut inner = RankSeries::one(Var::S, 1);
        inner.set(1, TSeries::from_sparse(Var::S, [(-3, CoeffPoly::one())], 6));
        let f = BiSeries::ascending(inner);
        assert_eq!(f.window(1), (None, Some(5)));
        let g = invert_s(&f);
        assert_eq!(g.window(1), (Some(-5), None));
        assert_eq!(g.coeff(1, 3).unwrap(), CoeffPoly::one());
        assert!(g.coeff(1, -7).is_err());
        assert!(g.knows(1, -5, 100) && !g.knows(1, -6, 0));
    }
}
