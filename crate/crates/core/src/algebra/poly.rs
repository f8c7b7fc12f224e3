//! Laurent polynomials in the Hodge variables `u`, `v` with the joint square
//! root `y = (uv)^{1/2}` adjoined.
//!
//! Exponents are stored doubled: the monomial `u^{a/2} v^{b/2}` is kept as
//! `(a, b)` with `a ≡ b (mod 2)`. Terms are sorted by `(a, b)` and never hold a
//! zero coefficient, so two equal polynomials have identical term vectors.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::coeff::Coeff;
use crate::error::{Error, Result};

/// Monomial `u^{u2/2} v^{v2/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub u2: i32,
    pub v2: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { u2: 0, v2: 0 };

    /// Builds a monomial from doubled exponents.
    ///
    /// Panics if the parities differ: only the joint root `(uv)^{1/2}` exists.
    pub fn doubled(u2: i32, v2: i32) -> Self {
        assert!(
            (u2 - v2) % 2 == 0,
            "monomial u^({u2}/2) v^({v2}/2) adjoins a lone half power"
        );
        Monomial { u2, v2 }
    }

    pub fn try_doubled(u2: i32, v2: i32) -> Result<Self> {
        if (u2 - v2) % 2 == 0 {
            Ok(Monomial { u2, v2 })
        } else {
            Err(Error::Parity(format!("u^({u2}/2) v^({v2}/2)")))
        }
    }

    pub fn u_pow(e: i32) -> Self {
        Monomial { u2: 2 * e, v2: 0 }
    }

    pub fn v_pow(e: i32) -> Self {
        Monomial { u2: 0, v2: 2 * e }
    }

    /// `L^e = (uv)^e`.
    pub fn lefschetz(e: i32) -> Self {
        Monomial {
            u2: 2 * e,
            v2: 2 * e,
        }
    }

    /// `y^k = (uv)^{k/2}`.
    pub fn y_pow(k: i32) -> Self {
        Monomial { u2: k, v2: k }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            u2: self.u2 + other.u2,
            v2: self.v2 + other.v2,
        }
    }

    pub fn inv(self) -> Monomial {
        Monomial {
            u2: -self.u2,
            v2: -self.v2,
        }
    }

    pub fn pow(self, k: i32) -> Monomial {
        Monomial {
            u2: self.u2 * k,
            v2: self.v2 * k,
        }
    }

    pub fn is_integral(self) -> bool {
        self.u2 % 2 == 0 && self.v2 % 2 == 0
    }
}

/// A signed monomial in one output variable: `sign · w^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedPower {
    pub negative: bool,
    pub exp: i64,
}

impl SignedPower {
    pub fn new(sign: i32, exp: i64) -> Self {
        SignedPower {
            negative: sign < 0,
            exp,
        }
    }
}

/// Exact Laurent polynomial in `u`, `v`, `y = (uv)^{1/2}`.
#[derive(Clone, PartialEq, Eq)]
pub struct CoeffPoly<C: Coeff = BigInt> {
    terms: Vec<(Monomial, C)>,
}

pub type RatPoly = CoeffPoly<BigRational>;

impl<C: Coeff> Default for CoeffPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> CoeffPoly<C> {
    pub fn zero() -> Self {
        CoeffPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(C::from_bigint(BigInt::from(c)))
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            CoeffPoly {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    /// Collects arbitrary `(monomial, coefficient)` pairs into canonical form.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(iter: I) -> Self {
        let mut terms: Vec<(Monomial, C)> = iter.into_iter().collect();
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => lc.add_assign_ref(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        CoeffPoly { terms: out }
    }

    /// Small-integer convenience constructor: `[(u2, v2, c), ...]`.
    pub fn from_doubled(terms: &[(i32, i32, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(a, b, c)| (Monomial::doubled(a, b), C::from_bigint(BigInt::from(c)))),
        )
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, m: Monomial) -> C {
        match self.terms.binary_search_by(|t| t.0.cmp(&m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// Largest monomial in lexicographic `(u2, v2)` order.
    pub fn leading(&self) -> Option<&(Monomial, C)> {
        self.terms.last()
    }

    pub fn trailing(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    /// True for `±m` with `m` a monomial: the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && {
            let c = &self.terms[0].1;
            c.is_one() || c.neg_ref().is_one()
        }
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (m, c) = &self.terms[0];
        Some(CoeffPoly {
            terms: vec![(m.inv(), c.clone())],
        })
    }

    pub fn neg(&self) -> Self {
        CoeffPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg_ref())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let mut c = a[i].1.clone();
                    c.add_assign_ref(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        CoeffPoly { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn add_assign(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.clone();
            return;
        }
        *self = CoeffPoly::add(self, other);
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        CoeffPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a.mul_ref(c))).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&C::from_bigint(BigInt::from(n)))
    }

    /// Multiplication by `c · m`; monomial shifts preserve the term order.
    pub fn mul_term(&self, m: Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        CoeffPoly {
            terms: self
                .terms
                .iter()
                .map(|(tm, a)| (tm.mul(m), a.mul_ref(c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        CoeffPoly {
            terms: self
                .terms
                .iter()
                .map(|(tm, a)| (tm.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(*m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(*m, c);
        }
        Self::dot(&[(self, other)])
    }

    /// `Σ a_i · b_i`, accumulated in one pass.
    pub fn dot(pairs: &[(&Self, &Self)]) -> Self {
        if let Some(p) = dot_small(pairs) {
            return p;
        }
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (a, b) in pairs {
            for (ma, ca) in &a.terms {
                for (mb, cb) in &b.terms {
                    let prod = ca.mul_ref(cb);
                    acc.entry(ma.mul(*mb))
                        .and_modify(|c| c.add_assign_ref(&prod))
                        .or_insert(prod);
                }
            }
        }
        Self::from_terms(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Adams operation: `u ↦ u^k`, `v ↦ v^k` (hence `y ↦ y^k`).
    pub fn adams(&self, k: i32) -> Self {
        assert!(k >= 1, "Adams operation needs k >= 1");
        // scaling by k > 0 preserves lexicographic order
        CoeffPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.pow(k), c.clone()))
                .collect(),
        }
    }

    /// Applies `(u, v) ↦ (u^{-1}, v^{-1})`.
    pub fn invert_variables(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.inv(), c.clone())))
    }

    /// Monomial substitution with signs: each monomial maps to `±m'`.
    pub fn map_monomials<F>(&self, mut f: F) -> Self
    where
        F: FnMut(Monomial) -> (Monomial, bool),
    {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let (m2, neg) = f(*m);
            (m2, if neg { c.neg_ref() } else { c.clone() })
        }))
    }

    pub fn div_exact_int(&self, n: &BigInt) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((*m, c.div_exact_int(n)?));
        }
        Some(CoeffPoly { terms })
    }

    /// Exact division by `d`, or `None` if `d` does not divide `self`.
    ///
    /// Uses lexicographic `(u2, v2)` order, which is compatible with Laurent
    /// monomial multiplication. The quotient is confined between
    /// `trailing(self)/trailing(d)` and `leading(self)/leading(d)`, which bounds
    /// the loop for non-divisible inputs.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dl_m, dl_c) = d.leading()?.clone();
        let (dt_m, _) = d.trailing()?.clone();
        if self.is_zero() {
            return Some(Self::zero());
        }
        let floor = self.trailing().unwrap().0.mul(dt_m.inv());
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((rm, rc)) = rem.leading().cloned() {
            let qm = rm.mul(dl_m.inv());
            if qm < floor {
                return None;
            }
            let qc = div_coeff(&rc, &dl_c)?;
            rem = rem.sub(&d.mul_term(qm, &qc));
            quotient.push((qm, qc));
        }
        Some(Self::from_terms(quotient))
    }

    /// Substitutes `u ↦ ±w^a`, `v ↦ ±w^b`, returning a univariate Laurent
    /// polynomial in `w` as `(exponent, coefficient)` pairs.
    ///
    /// The joint root `(uv)^{1/2}` maps to the principal root of the image of
    /// `uv`, which must therefore be `+w^{even}`.
    pub fn specialize(&self, su: SignedPower, sv: SignedPower) -> Result<Vec<(i64, C)>> {
        let mut acc: Vec<(i64, C)> = Vec::with_capacity(self.terms.len());
        let root_ok = su.negative == sv.negative && (su.exp + sv.exp) % 2 == 0;
        for (m, c) in &self.terms {
            let (a, b) = (m.u2 as i64, m.v2 as i64);
            let mut negative = false;
            let (ia, ib) = if a.rem_euclid(2) == 1 {
                if !root_ok {
                    return Err(Error::Parity(format!(
                        "half power u^({a}/2) v^({b}/2) survives the substitution"
                    )));
                }
                ((a - 1) / 2, (b - 1) / 2)
            } else {
                (a / 2, b / 2)
            };
            if su.negative && ia.rem_euclid(2) == 1 {
                negative = !negative;
            }
            if sv.negative && ib.rem_euclid(2) == 1 {
                negative = !negative;
            }
            let twice = a * su.exp + b * sv.exp;
            debug_assert!(twice % 2 == 0);
            acc.push((twice / 2, if negative { c.neg_ref() } else { c.clone() }));
        }
        Ok(collect_univariate(acc))
    }

    pub fn map_coeffs<D: Coeff, F: FnMut(&C) -> D>(&self, mut f: F) -> CoeffPoly<D> {
        CoeffPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Every monomial has integral exponents in `u` and `v` separately.
    pub fn is_integral_in_uv(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_integral())
    }

    pub fn parity_ok(&self) -> bool {
        self.terms.iter().all(|(m, _)| (m.u2 - m.v2) % 2 == 0)
    }

    /// Swaps the roles of `u` and `v`.
    pub fn swap_uv(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial { u2: m.v2, v2: m.u2 }, c.clone())),
        )
    }
}

impl CoeffPoly<BigInt> {
    pub fn to_rational(&self) -> RatPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// Quantum integer `[k]_y = y^{k-1} + y^{k-3} + ... + y^{1-k}`, with
    /// `[-k]_y = -[k]_y` and `[0]_y = 0`.
    pub fn quantum_integer(k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let n = k.abs();
        let sign = if k < 0 { -1 } else { 1 };
        Self::from_terms((0..n).map(|i| {
            let e = (n - 1 - 2 * i) as i32;
            (Monomial::y_pow(e), BigInt::from(sign))
        }))
    }

    /// `E(X) = 1 - g(u + v) + uv` for a genus-`g` curve.
    pub fn curve_class(g: u32) -> Self {
        let g = g as i64;
        Self::from_doubled(&[(0, 0, 1), (2, 0, -g), (0, 2, -g), (2, 2, 1)])
    }

    pub fn lefschetz() -> Self {
        Self::monomial(Monomial::lefschetz(1))
    }
}

impl CoeffPoly<BigRational> {
    /// Returns the integer polynomial if every coefficient is integral.
    pub fn to_integer(&self) -> Option<CoeffPoly<BigInt>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((*m, c.to_bigint()?));
        }
        Some(CoeffPoly { terms })
    }
}

fn div_coeff<C: Coeff>(a: &C, b: &C) -> Option<C> {
    let bi = b.to_bigint()?;
    a.div_exact_int(&bi)
}

fn collect_univariate<C: Coeff>(mut acc: Vec<(i64, C)>) -> Vec<(i64, C)> {
    acc.sort_by_key(|t| t.0);
    let mut out: Vec<(i64, C)> = Vec::with_capacity(acc.len());
    for (e, c) in acc {
        match out.last_mut() {
            Some((le, lc)) if *le == e => lc.add_assign_ref(&c),
            _ => out.push((e, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// `Σ a_i · b_i` over machine integers with `i128` accumulation. Returns
/// `None` if any input coefficient is not a small integer or an accumulator
/// overflows; callers then fall back to the generic path.
fn dot_small<C: Coeff>(pairs: &[(&CoeffPoly<C>, &CoeffPoly<C>)]) -> Option<CoeffPoly<C>> {
    let small = |p: &CoeffPoly<C>| -> Option<Vec<(Monomial, i64)>> {
        p.terms
            .iter()
            .map(|(m, c)| c.as_small().map(|v| (*m, v)))
            .collect()
    };
    let mut conv = Vec::with_capacity(pairs.len());
    let (mut lu, mut hu, mut lv, mut hv) = (i32::MAX, i32::MIN, i32::MAX, i32::MIN);
    let mut work = 0usize;
    for (a, b) in pairs {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let (sa, sb) = (small(a)?, small(b)?);
        let bbox = |t: &[(Monomial, i64)]| {
            t.iter().fold(
                (i32::MAX, i32::MIN, i32::MAX, i32::MIN),
                |(a, b, c, d), (m, _)| (a.min(m.u2), b.max(m.u2), c.min(m.v2), d.max(m.v2)),
            )
        };
        let (alu, ahu, alv, ahv) = bbox(&sa);
        let (blu, bhu, blv, bhv) = bbox(&sb);
        lu = lu.min(alu + blu);
        hu = hu.max(ahu + bhu);
        lv = lv.min(alv + blv);
        hv = hv.max(ahv + bhv);
        work += sa.len() * sb.len();
        conv.push((sa, sb));
    }
    if conv.is_empty() {
        return Some(CoeffPoly::zero());
    }
    let width = (hu - lu + 1) as usize;
    let height = (hv - lv + 1) as usize;
    let area = width.saturating_mul(height);

    if area <= (1 << 22) && area <= 16 * work.max(64) {
        let mut grid = vec![0i128; area];
        for (sa, sb) in &conv {
            for &(ma, ca) in sa {
                for &(mb, cb) in sb {
                    let idx =
                        (ma.u2 + mb.u2 - lu) as usize * height + (ma.v2 + mb.v2 - lv) as usize;
                    grid[idx] = grid[idx].checked_add(ca as i128 * cb as i128)?;
                }
            }
        }
        let terms = grid
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(idx, &c)| {
                let u2 = lu + (idx / height) as i32;
                let v2 = lv + (idx % height) as i32;
                (Monomial { u2, v2 }, C::from_bigint(BigInt::from(c)))
            })
            .collect();
        // row-major over (u2, v2) is already lexicographic
        return Some(CoeffPoly { terms });
    }

    let mut acc: HashMap<Monomial, i128> = HashMap::with_capacity(work.min(1 << 16));
    for (sa, sb) in &conv {
        for &(ma, ca) in sa {
            for &(mb, cb) in sb {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = e.checked_add(ca as i128 * cb as i128)?;
            }
        }
    }
    Some(CoeffPoly::from_terms(
        acc.into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m, C::from_bigint(BigInt::from(c)))),
    ))
}

impl<C: Coeff> Add for &CoeffPoly<C> {
    type Output = CoeffPoly<C>;
    fn add(self, rhs: Self) -> CoeffPoly<C> {
        CoeffPoly::add(self, rhs)
    }
}

impl<C: Coeff> Sub for &CoeffPoly<C> {
    type Output = CoeffPoly<C>;
    fn sub(self, rhs: Self) -> CoeffPoly<C> {
        CoeffPoly::sub(self, rhs)
    }
}

impl<C: Coeff> Mul for &CoeffPoly<C> {
    type Output = CoeffPoly<C>;
    fn mul(self, rhs: Self) -> CoeffPoly<C> {
        CoeffPoly::mul(self, rhs)
    }
}

impl<C: Coeff> Neg for &CoeffPoly<C> {
    type Output = CoeffPoly<C>;
    fn neg(self) -> CoeffPoly<C> {
        CoeffPoly::neg(self)
    }
}

impl<C: Coeff> fmt::Debug for CoeffPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{c:?}*u^({}/2)v^({}/2)", m.u2, m.v2))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = CoeffPoly;

    fn u() -> P {
        P::monomial(Monomial::u_pow(1))
    }
    fn v() -> P {
        P::monomial(Monomial::v_pow(1))
    }
    fn y() -> P {
        P::monomial(Monomial::y_pow(1))
    }

    #[test]
    fn monomial_product() {
        let uv = u().mul(&v());
        assert_eq!(uv.mul(&uv), P::from_doubled(&[(4, 4, 1)]));
    }

    #[test]
    fn distributivity_example() {
        let one = P::one();
        let lhs = one.sub(&u()).mul(&one.sub(&v()));
        let rhs = P::from_doubled(&[(0, 0, 1), (2, 0, -1), (0, 2, -1), (2, 2, 1)]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn difference_of_squares_in_y() {
        let yinv = P::monomial(Monomial::y_pow(-1));
        let lhs = y().add(&yinv).mul(&y().sub(&yinv));
        assert_eq!(lhs, P::from_doubled(&[(2, 2, 1), (-2, -2, -1)]));
    }

    #[test]
    fn specialize_curve_class_genus_one() {
        let e = P::curve_class(1);
        let w = e
            .specialize(SignedPower::new(-1, 1), SignedPower::new(-1, 1))
            .unwrap();
        let expect: Vec<(i64, BigInt)> = vec![(0, 1.into()), (1, 2.into()), (2, 1.into())];
        assert_eq!(w, expect);
    }

    #[test]
    fn specialize_evaluation_and_root_branch() {
        let uv = P::monomial(Monomial::lefschetz(1));
        let one = uv
            .specialize(SignedPower::new(1, 0), SignedPower::new(1, 0))
            .unwrap();
        assert_eq!(one, vec![(0, BigInt::from(1))]);
        // y = (uv)^{1/2} under u, v -> -y takes the principal root +y
        let r = y()
            .specialize(SignedPower::new(-1, 1), SignedPower::new(-1, 1))
            .unwrap();
        assert_eq!(r, vec![(1, BigInt::from(1))]);
    }

    #[test]
    fn specialize_rejects_surviving_half_power() {
        let err = y().specialize(SignedPower::new(-1, 1), SignedPower::new(1, 1));
        assert!(matches!(err, Err(Error::Parity(_))));
        let err = y().specialize(SignedPower::new(1, 1), SignedPower::new(1, 0));
        assert!(matches!(err, Err(Error::Parity(_))));
    }

    #[test]
    fn exact_division() {
        let a = P::curve_class(2);
        let b = P::from_doubled(&[(0, 0, 3), (2, 4, -1), (-2, 0, 5)]);
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        let not = prod.add(&P::one());
        assert_eq!(not.div_exact(&a), None);
        assert_eq!(P::from_int(6).div_exact(&P::from_int(4)), None);
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(P::quantum_integer(1), P::one());
        assert_eq!(
            P::quantum_integer(2),
            P::from_doubled(&[(1, 1, 1), (-1, -1, 1)])
        );
        assert_eq!(P::quantum_integer(-3), P::quantum_integer(3).neg());
        assert!(P::quantum_integer(0).is_zero());
        // [k]_y (y - 1/y) = y^k - y^-k
        let d = y().sub(&P::monomial(Monomial::y_pow(-1)));
        let lhs = P::quantum_integer(5).mul(&d);
        assert_eq!(lhs, P::from_doubled(&[(5, 5, 1), (-5, -5, -1)]));
    }

    #[test]
    fn big_coefficients_survive_fast_path_overflow() {
        let big = P::from_int(i64::MAX);
        let sq = big.add(&u()).mul(&big.add(&v()));
        let m = BigInt::from(i64::MAX);
        assert_eq!(sq.coeff(Monomial::ONE), &m * &m);
        let many = P::from_terms((0..10).map(|i| (Monomial::u_pow(i), BigInt::from(i64::MAX))));
        let p = many.mul(&many);
        assert_eq!(p.coeff(Monomial::u_pow(9)), BigInt::from(10) * &m * &m);
    }
}
