//! Polygonal and centered polygonal numbers.
//!
//! P(n;k) = ((k−2)n² + (4−k)n)/2 for n >= 1 and
//! C(m;k) = (km² − km + 2)/2 for m >= 1. Both numerators are always even,
//! both families are strictly increasing in the index, and both inversions
//! reduce to a perfect-square test on a quadratic discriminant.

use num_bigint::{BigInt, Sign};
use num_traits::Zero;

use crate::error::Error;
use crate::exactmath::{exact_sqrt, polygon_disc};

/// A polygon order k >= 3 together with its ring discriminant k(k−2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonParams {
    k: u32,
    disc: BigInt,
}

impl PolygonParams {
    pub fn new(k: u32) -> Result<Self, Error> {
        Ok(PolygonParams {
            k,
            disc: polygon_disc(k)?,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    /// The n-th k-gonal number, n >= 1.
    pub fn polygonal(&self, n: &BigInt) -> Result<BigInt, Error> {
        if n.sign() != Sign::Plus {
            return Err(Error::OutOfDomain);
        }
        Ok(self.eval_polygonal(n))
    }

    /// The m-th centered k-gonal number, m >= 1. The index 0 would denote
    /// the same value as index 1; only m = 1 is accepted as the witness.
    pub fn centered(&self, m: &BigInt) -> Result<BigInt, Error> {
        if m.sign() != Sign::Plus {
            return Err(Error::OutOfDomain);
        }
        Ok(self.eval_centered(m))
    }

    // numerator (k−2)n(n−1) + 2n is even for every n
    pub(crate) fn eval_polygonal(&self, n: &BigInt) -> BigInt {
        let k = BigInt::from(self.k);
        let num = (&k - 2u32) * n * n + (BigInt::from(4) - &k) * n;
        debug_assert!((&num % 2u32).is_zero());
        num / 2
    }

    // numerator k·m(m−1) + 2 is even for every m
    pub(crate) fn eval_centered(&self, m: &BigInt) -> BigInt {
        let k = BigInt::from(self.k);
        let num = &k * m * m - &k * m + 2u32;
        debug_assert!((&num % 2u32).is_zero());
        num / 2
    }

    /// The index n with P(n;k) = x, if x is k-gonal. Solves the quadratic
    /// exactly: the discriminant (4−k)² + 8(k−2)x must be a perfect square
    /// and the positive root must be integral.
    pub fn invert_polygonal(&self, x: &BigInt) -> Result<Option<BigInt>, Error> {
        if x.sign() != Sign::Plus {
            return Err(Error::OutOfDomain);
        }
        let k = BigInt::from(self.k);
        let four_minus_k = BigInt::from(4) - &k;
        let quad_disc = &four_minus_k * &four_minus_k + (&k - 2u32) * 8u32 * x;
        let root = match exact_sqrt(&quad_disc)? {
            Some(r) => r,
            None => return Ok(None),
        };
        let num = &k - 4u32 + root;
        let den = (&k - 2u32) * 2u32;
        if (&num % &den).is_zero() {
            let n = num / den;
            debug_assert_eq!(self.eval_polygonal(&n), *x);
            Ok(Some(n))
        } else {
            Ok(None)
        }
    }

    /// The index m >= 1 with C(m;k) = x, if x is centered k-gonal; the
    /// discriminant here is k² + 8k(x−1).
    pub fn invert_centered(&self, x: &BigInt) -> Result<Option<BigInt>, Error> {
        if x.sign() != Sign::Plus {
            return Err(Error::OutOfDomain);
        }
        let k = BigInt::from(self.k);
        let quad_disc = &k * &k + &k * 8u32 * (x - 1u32);
        let root = match exact_sqrt(&quad_disc)? {
            Some(r) => r,
            None => return Ok(None),
        };
        let num = &k + root;
        let den = k * 2u32;
        if (&num % &den).is_zero() {
            let m = num / den;
            debug_assert_eq!(self.eval_centered(&m), *x);
            Ok(Some(m))
        } else {
            Ok(None)
        }
    }
}
