//! Plethystic exponential and logarithm on [`RankSeries`].
//!
//! Both are evaluated through integral Newton identities. Writing
//! `F = Exp(a) = 1 + Σ F_n T^n` and `b_n = Σ_{d | n} d ψ_{n/d}(a_d)`, one has
//! `T F'/F = Σ b_n T^n`, hence `n F_n = Σ_{m=1}^{n} b_m F_{n-m}`. Every
//! division is by the integer `n` and must be exact.

use num_bigint::BigInt;

use crate::algebra::{Coeff, CoeffPoly, RankSeries, TSeries, EXACT};
use crate::error::{Error, Result};

pub fn adams<C: Coeff>(k: u32, f: &RankSeries<C>) -> RankSeries<C> {
    f.adams(k)
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

fn is_exact_zero<C: Coeff>(s: &TSeries<C>) -> bool {
    s.is_zero() && s.is_exact()
}

fn sum_products<C: Coeff>(f: &RankSeries<C>, pairs: &[(&TSeries<C>, &TSeries<C>)]) -> TSeries<C> {
    let mut acc = TSeries::zero(f.var(), EXACT);
    for (a, b) in pairs {
        if is_exact_zero(a) || is_exact_zero(b) {
            continue;
        }
        acc = acc.add(&a.mul(b));
    }
    acc
}

fn divide<C: Coeff>(s: &TSeries<C>, n: usize, what: &str) -> Result<TSeries<C>> {
    s.div_exact_int(&BigInt::from(n)).map_err(|e| match e {
        Error::Integrality(msg) => Error::Integrality(format!("{what} at T^{n}: {msg}")),
        other => other,
    })
}

/// `Σ_{d | n, d < n} d ψ_{n/d}(a_d)` when `proper`, all divisors otherwise.
fn adams_sum<C: Coeff>(
    a: &[TSeries<C>],
    n: usize,
    proper: bool,
    var: crate::algebra::Var,
) -> TSeries<C> {
    let mut acc = TSeries::zero(var, EXACT);
    for d in divisors(n) {
        if proper && d == n {
            continue;
        }
        if is_exact_zero(&a[d]) {
            continue;
        }
        let term = a[d]
            .adams((n / d) as u32)
            .scale(&CoeffPoly::constant(C::from_bigint(BigInt::from(d))));
        acc = acc.add(&term);
    }
    acc
}

/// `Exp(f)` for `f` with vanishing `T^0` coefficient.
pub fn pexp<C: Coeff>(f: &RankSeries<C>) -> Result<RankSeries<C>> {
    if !f.coeff(0).is_zero() {
        return Err(Error::InvalidArgument(
            "Exp needs a vanishing T^0 coefficient".into(),
        ));
    }
    let rmax = f.rmax();
    let var = f.var();
    let a = f.coeffs();
    let b: Vec<TSeries<C>> = (0..=rmax)
        .map(|n| {
            if n == 0 {
                TSeries::zero(var, EXACT)
            } else {
                adams_sum(a, n, false, var)
            }
        })
        .collect();
    let mut out = vec![TSeries::one(var)];
    for n in 1..=rmax {
        let pairs: Vec<_> = (1..=n).map(|m| (&b[m], &out[n - m])).collect();
        let acc = sum_products(f, &pairs);
        out.push(divide(&acc, n, "Exp")?);
    }
    Ok(RankSeries::from_coeffs(var, out))
}

/// `Log(f)` for `f` with `T^0` coefficient exactly 1.
pub fn plog<C: Coeff>(f: &RankSeries<C>) -> Result<RankSeries<C>> {
    let f0 = f.coeff(0);
    if f0.lo() != 0 || f0.iter().count() != 1 || !f0.coeff(0)?.is_one() {
        return Err(Error::InvalidArgument("Log needs T^0 coefficient 1".into()));
    }
    let rmax = f.rmax();
    let var = f.var();
    let fc = f.coeffs();
    let mut b: Vec<TSeries<C>> = vec![TSeries::zero(var, EXACT)];
    for n in 1..=rmax {
        let nf = fc[n].scale(&CoeffPoly::constant(C::from_bigint(BigInt::from(n))));
        let pairs: Vec<_> = (1..n).map(|m| (&b[m], &fc[n - m])).collect();
        b.push(nf.sub(&sum_products(f, &pairs)));
    }
    let mut a: Vec<TSeries<C>> = vec![TSeries::zero(var, EXACT)];
    for (n, bn) in b.iter().enumerate().skip(1) {
        let na = bn.sub(&adams_sum(&a, n, true, var));
        a.push(divide(&na, n, "Log")?);
    }
    Ok(RankSeries::from_coeffs(var, a))
}

/// Ordinary exponential `exp(g)` for `g` with vanishing `T^0` coefficient,
/// via `n F_n = Σ m g_m F_{n-m}`.
pub fn exp_series<C: Coeff>(g: &RankSeries<C>) -> Result<RankSeries<C>> {
    if !g.coeff(0).is_zero() {
        return Err(Error::InvalidArgument(
            "exp needs a vanishing T^0 coefficient".into(),
        ));
    }
    let rmax = g.rmax();
    let var = g.var();
    let mg: Vec<TSeries<C>> = g
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, c)| c.scale(&CoeffPoly::constant(C::from_bigint(BigInt::from(m)))))
        .collect();
    let mut out = vec![TSeries::one(var)];
    for n in 1..=rmax {
        let pairs: Vec<_> = (1..=n).map(|m| (&mg[m], &out[n - m])).collect();
        let acc = sum_products(g, &pairs);
        out.push(divide(&acc, n, "exp")?);
    }
    Ok(RankSeries::from_coeffs(var, out))
}
