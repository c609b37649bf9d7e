use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Ring element used by the elimination kernels. Operations return `None` on
/// overflow; the big-integer implementation never does.
pub(crate) trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn s_zero() -> Self;
    fn s_one() -> Self;
    fn s_is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn add(&self, rhs: &Self) -> Option<Self>;
    fn sub(&self, rhs: &Self) -> Option<Self>;
    fn mul(&self, rhs: &Self) -> Option<Self>;
    /// Exact quotient; the caller guarantees divisibility.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    /// Euclidean quotient, remainder in `0..|rhs|`.
    fn div_euclid(&self, rhs: &Self) -> Option<Self>;
    fn is_multiple_of(&self, rhs: &Self) -> bool;
    fn abs_lt(&self, rhs: &Self) -> bool;
    fn abs(&self) -> Option<Self> {
        if self.is_negative() {
            self.neg()
        } else {
            Some(self.clone())
        }
    }

    /// `(a*b - c*d) / p`, the fraction-free elimination step.
    fn bareiss(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self> {
        a.mul(b)?.sub(&c.mul(d)?)?.div_exact(p)
    }
}

impl Scalar for i128 {
    fn s_zero() -> Self {
        0
    }
    fn s_one() -> Self {
        1
    }
    fn s_is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(*rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        self.checked_sub(*rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        self.checked_mul(*rhs)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        debug_assert!(self % rhs == 0);
        self.checked_div(*rhs)
    }
    fn div_euclid(&self, rhs: &Self) -> Option<Self> {
        self.checked_div_euclid(*rhs)
    }
    fn is_multiple_of(&self, rhs: &Self) -> bool {
        match self.checked_rem(*rhs) {
            Some(r) => r == 0,
            None => false,
        }
    }
    fn abs_lt(&self, rhs: &Self) -> bool {
        self.unsigned_abs() < rhs.unsigned_abs()
    }
}

impl Scalar for BigInt {
    fn s_zero() -> Self {
        Zero::zero()
    }
    fn s_one() -> Self {
        num_traits::One::one()
    }
    fn s_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        Some(self - rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        debug_assert!((self % rhs).is_zero());
        Some(self / rhs)
    }
    fn div_euclid(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_mod_floor(rhs);
        // floor division leaves a negative remainder for negative divisors
        if Signed::is_negative(&r) {
            Some(q + 1)
        } else {
            Some(q)
        }
    }
    fn is_multiple_of(&self, rhs: &Self) -> bool {
        Zero::is_zero(&(self % rhs))
    }
    fn abs_lt(&self, rhs: &Self) -> bool {
        self.magnitude() < rhs.magnitude()
    }
}

/// Runs `f` on an `i128` copy when every entry fits in `i64`, falling back to
/// big integers when the fast pass overflows.
pub(crate) fn with_fallback<R>(
    entries: &[BigInt],
    fast: impl FnOnce(Vec<i128>) -> Option<R>,
    slow: impl FnOnce(Vec<BigInt>) -> R,
) -> R {
    use num_traits::ToPrimitive;
    let small: Option<Vec<i128>> = entries.iter().map(|v| v.to_i64().map(i128::from)).collect();
    if let Some(small) = small {
        if let Some(r) = fast(small) {
            return r;
        }
    }
    slow(entries.to_vec())
}
