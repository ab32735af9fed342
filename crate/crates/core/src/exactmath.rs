//! Exact arbitrary-precision integer and quadratic-ring arithmetic.
//!
//! Nothing in this module approximates: √D is never evaluated numerically.
//! An element a + b√D is carried as the integer pair (a, b), and the
//! conjugate-pair sequences s_i = α^i + ᾱ^i, u_i = (α^i − ᾱ^i)/√D are
//! plain integers satisfying the shared recurrence
//! x_{i+1} = 2(k−1)·x_i − x_{i−1}.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Floor of the square root by integer Newton iteration.
///
/// The first iterate 2^⌈bits/2⌉ is at least √x, and from above the
/// iteration decreases strictly until it reaches ⌊√x⌋, so the first
/// non-decreasing step is the answer.
pub fn isqrt(x: &BigInt) -> Result<BigInt, Error> {
    if x.is_negative() {
        return Err(Error::NegativeInput);
    }
    if x.is_zero() {
        return Ok(BigInt::zero());
    }
    let mut r = BigInt::one() << x.bits().div_ceil(2);
    loop {
        let next = (&r + x / &r) >> 1;
        if next >= r {
            return Ok(r);
        }
        r = next;
    }
}

/// The exact square root, or `None` when x is not a perfect square.
pub fn exact_sqrt(x: &BigInt) -> Result<Option<BigInt>, Error> {
    let r = isqrt(x)?;
    if &r * &r == *x {
        Ok(Some(r))
    } else {
        Ok(None)
    }
}

/// The ring discriminant k(k−2) = (k−1)² − 1 of a polygon order.
///
/// Strictly between (k−2)² and (k−1)² for k >= 3, hence never a square.
pub(crate) fn polygon_disc(k: u32) -> Result<BigInt, Error> {
    if k < 3 {
        return Err(Error::OrderTooSmall);
    }
    Ok(BigInt::from(k) * BigInt::from(k - 2))
}

/// An element a + b√D of the quadratic ring Z[√D], D a positive non-square.
///
/// All arithmetic is closed over the integer coefficient pairs; there is no
/// rounding anywhere. The norm a² − D·b² is multiplicative over [`mul`],
/// which is what makes these elements usable as Pell solution generators.
///
/// [`mul`]: QuadInt::mul
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadInt {
    a: BigInt,
    b: BigInt,
    disc: BigInt,
}

impl QuadInt {
    /// Validates that `disc` is a non-square integer >= 2.
    pub fn new(a: BigInt, b: BigInt, disc: BigInt) -> Result<Self, Error> {
        if disc < BigInt::from(2) || exact_sqrt(&disc)?.is_some() {
            return Err(Error::InvalidDiscriminant);
        }
        Ok(QuadInt { a, b, disc })
    }

    /// The unit (k−1) + √(k(k−2)) whose powers generate every solution of
    /// x² − k(k−2)y² = 1. Its conjugate is its inverse: the norm is 1.
    pub fn fundamental_unit(k: u32) -> Result<Self, Error> {
        let disc = polygon_disc(k)?;
        Ok(QuadInt {
            a: BigInt::from(k - 1),
            b: BigInt::one(),
            disc,
        })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    /// a − b√D.
    pub fn conjugate(&self) -> Self {
        QuadInt {
            a: self.a.clone(),
            b: -&self.b,
            disc: self.disc.clone(),
        }
    }

    /// a² − D·b², the product of the element with its conjugate.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.disc * &self.b * &self.b
    }

    /// Exact ring product; the operands must share a discriminant.
    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        if self.disc != rhs.disc {
            return Err(Error::DiscriminantMismatch);
        }
        Ok(self.mul_unchecked(rhs))
    }

    fn mul_unchecked(&self, rhs: &Self) -> Self {
        QuadInt {
            a: &self.a * &rhs.a + &self.disc * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &rhs.a * &self.b,
            disc: self.disc.clone(),
        }
    }

    /// Exact e-th power by repeated squaring; `pow(0)` is the identity 1 + 0√D.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = QuadInt {
            a: BigInt::one(),
            b: BigInt::zero(),
            disc: self.disc.clone(),
        };
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }
}

/// The pair (s_i, u_i) for the fundamental unit α of order k:
/// s_i = α^i + ᾱ^i and u_i = (α^i − ᾱ^i)/√(k(k−2)).
///
/// Both are integers for every i; s_i and u_i are always even, and
/// s_i² − k(k−2)·u_i² = 4 exactly, so (s_i/2, u_i/2) runs through the
/// solutions of the order-k Pell equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasPair {
    pub k: u32,
    pub index: u64,
    pub s: BigInt,
    pub u: BigInt,
}

/// (s_i, u_i) by the linear recurrence, from s_0 = 2, s_1 = 2(k−1),
/// u_0 = 0, u_1 = 2. O(i) big-integer operations.
pub fn lucas_pair(k: u32, index: u64) -> Result<LucasPair, Error> {
    if k < 3 {
        return Err(Error::OrderTooSmall);
    }
    let t = BigInt::from(2 * (u64::from(k) - 1));
    let mut s_prev = BigInt::from(2);
    let mut s_cur = t.clone();
    let mut u_prev = BigInt::zero();
    let mut u_cur = BigInt::from(2);
    if index == 0 {
        return Ok(LucasPair {
            k,
            index,
            s: s_prev,
            u: u_prev,
        });
    }
    for _ in 1..index {
        let s_next = &t * &s_cur - &s_prev;
        s_prev = core::mem::replace(&mut s_cur, s_next);
        let u_next = &t * &u_cur - &u_prev;
        u_prev = core::mem::replace(&mut u_cur, u_next);
    }
    Ok(LucasPair {
        k,
        index,
        s: s_cur,
        u: u_cur,
    })
}

/// The same pair read off α^i = a + b√D computed by [`QuadInt::pow`]:
/// s_i = 2a, u_i = 2b. Kept as an independent evaluation route so the two
/// paths can audit each other.
pub fn lucas_pair_via_pow(k: u32, index: u64) -> Result<LucasPair, Error> {
    let unit = QuadInt::fundamental_unit(k)?;
    let p = unit.pow(index);
    Ok(LucasPair {
        k,
        index,
        s: &p.a * 2u32,
        u: &p.b * 2u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn isqrt_small_cases() {
        assert_eq!(isqrt(&big(0)).unwrap(), big(0));
        assert_eq!(isqrt(&big(1)).unwrap(), big(1));
        assert_eq!(isqrt(&big(36)).unwrap(), big(6));
        // 162^2 = 26244 <= 26335 < 26569 = 163^2
        assert_eq!(isqrt(&big(26335)).unwrap(), big(162));
        assert_eq!(isqrt(&big(26243)).unwrap(), big(161));
        assert_eq!(isqrt(&big(26244)).unwrap(), big(162));
    }

    #[test]
    fn isqrt_rejects_negative() {
        assert_eq!(isqrt(&big(-1)), Err(Error::NegativeInput));
    }

    #[test]
    fn exact_sqrt_cases() {
        assert_eq!(exact_sqrt(&big(1)).unwrap(), Some(big(1)));
        assert_eq!(exact_sqrt(&big(48)).unwrap(), None);
        // arises for k=4, m=21: 58^2 = 3364
        assert_eq!(exact_sqrt(&big(3364)).unwrap(), Some(big(58)));
        assert_eq!(exact_sqrt(&big(-4)), Err(Error::NegativeInput));
    }

    #[test]
    fn unit_times_conjugate_is_one() {
        let alpha = QuadInt::fundamental_unit(3).unwrap();
        let beta = alpha.conjugate();
        let prod = alpha.mul(&beta).unwrap();
        assert_eq!(prod.a(), &big(1));
        assert_eq!(prod.b(), &big(0));
        assert_eq!(alpha.norm(), big(1));
    }

    #[test]
    fn mul_identity_and_square() {
        let alpha = QuadInt::fundamental_unit(3).unwrap();
        let one = QuadInt::new(big(1), big(0), big(3)).unwrap();
        assert_eq!(one.mul(&alpha).unwrap(), alpha);
        // (2 + sqrt(3))^2 = 7 + 4 sqrt(3)
        let sq = alpha.mul(&alpha).unwrap();
        assert_eq!((sq.a(), sq.b()), (&big(7), &big(4)));
    }

    #[test]
    fn mul_rejects_mixed_discriminants() {
        let p = QuadInt::new(big(1), big(1), big(3)).unwrap();
        let q = QuadInt::new(big(1), big(1), big(8)).unwrap();
        assert_eq!(p.mul(&q), Err(Error::DiscriminantMismatch));
    }

    #[test]
    fn new_rejects_square_or_small_discriminant() {
        assert_eq!(QuadInt::new(big(0), big(0), big(4)), Err(Error::InvalidDiscriminant));
        assert_eq!(QuadInt::new(big(0), big(0), big(1)), Err(Error::InvalidDiscriminant));
        assert_eq!(QuadInt::new(big(0), big(0), big(-3)), Err(Error::InvalidDiscriminant));
    }

    #[test]
    fn pow_cases() {
        let alpha = QuadInt::fundamental_unit(3).unwrap();
        let p0 = alpha.pow(0);
        assert_eq!((p0.a(), p0.b()), (&big(1), &big(0)));
        // (2 + sqrt(3))^3 = 26 + 15 sqrt(3)
        let p3 = alpha.pow(3);
        assert_eq!((p3.a(), p3.b()), (&big(26), &big(15)));
        // (3 + sqrt(8))^5 = 3363 + 1189 sqrt(8)
        let p5 = QuadInt::fundamental_unit(4).unwrap().pow(5);
        assert_eq!((p5.a(), p5.b()), (&big(3363), &big(1189)));
    }

    #[test]
    fn lucas_pair_frozen_values() {
        let p = lucas_pair(3, 0).unwrap();
        assert_eq!((p.s, p.u), (big(2), big(0)));
        // s: 2, 4, 14, 52; u: 0, 2, 8, 30
        let p = lucas_pair(3, 3).unwrap();
        assert_eq!((p.s, p.u), (big(52), big(30)));
        // 2(k-1) = 8: s: 2, 8, 62, 488; u: 0, 2, 16, 126
        let p = lucas_pair(5, 3).unwrap();
        assert_eq!((p.s, p.u), (big(488), big(126)));
    }

    #[test]
    fn lucas_pair_rejects_small_order() {
        assert_eq!(lucas_pair(2, 1), Err(Error::OrderTooSmall));
        assert_eq!(lucas_pair_via_pow(0, 1), Err(Error::OrderTooSmall));
    }

    #[test]
    fn lucas_routes_agree_spot() {
        for (k, i) in [(3u32, 7u64), (4, 11), (9, 20), (30, 13)] {
            assert_eq!(lucas_pair(k, i).unwrap(), lucas_pair_via_pow(k, i).unwrap());
        }
    }
}
