use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Scalar ring underlying [`CoeffPoly`](super::CoeffPoly).
///
/// Two implementations exist: [`BigInt`] for everything the engine stores and
/// [`BigRational`] for the few places where transient denominators are part of
/// the formula being checked.
pub trait Coeff: Clone + Debug + PartialEq + Eq + Zero + One + Send + Sync + 'static {
    fn from_bigint(v: BigInt) -> Self;

    fn add_assign_ref(&mut self, other: &Self);

    fn mul_ref(&self, other: &Self) -> Self;

    fn neg_ref(&self) -> Self;

    /// Exact division by a nonzero integer; `None` when the quotient leaves the ring.
    fn div_exact_int(&self, n: &BigInt) -> Option<Self>;

    /// `Some(v)` if the value is an integer.
    fn to_bigint(&self) -> Option<BigInt>;

    fn is_negative(&self) -> bool;

    /// `Some(v)` if the value is an integer that fits in `i64`. Used by the
    /// multiplication fast path.
    fn as_small(&self) -> Option<i64> {
        None
    }
}

impl Coeff for BigInt {
    fn from_bigint(v: BigInt) -> Self {
        v
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn div_exact_int(&self, n: &BigInt) -> Option<Self> {
        let (q, r) = self.div_rem(n);
        r.is_zero().then_some(q)
    }

    fn to_bigint(&self) -> Option<BigInt> {
        Some(self.clone())
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn as_small(&self) -> Option<i64> {
        self.to_i64()
    }
}

impl Coeff for BigRational {
    fn from_bigint(v: BigInt) -> Self {
        BigRational::from_integer(v)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn div_exact_int(&self, n: &BigInt) -> Option<Self> {
        if n.is_zero() {
            return None;
        }
        Some(self / BigRational::from_integer(n.clone()))
    }

    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}
