//! Pell-equation machinery.
//!
//! The fundamental solution of x² − Dy² = 1 is computed from the continued
//! fraction of √D, further solutions by composing with the fundamental one
//! in the quadratic ring, and the sibling form x² − Dy² = 2 by composing a
//! seed with those norm-1 units. The continued-fraction route is the
//! authority here: closed-form claims about "smallest" solutions elsewhere
//! in the crate are checked against it, not assumed.

use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exactmath::{isqrt, polygon_disc};

/// The periodic continued fraction of √D for a non-square D >= 2:
/// √D = [a0; period] with the period repeating forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFExpansion {
    pub disc: BigInt,
    pub a0: BigInt,
    /// Minimal period; its last element is always 2·a0.
    pub period: Vec<BigInt>,
}

/// Expands √D by the exact surd recurrence
/// m' = d·a − m, d' = (D − m'²)/d, a' = ⌊(a0 + m')/d'⌋ from (m, d) = (0, 1).
/// The period closes at the first d' = 1, where the quotient is 2·a0.
pub fn cf_expand(disc: &BigInt) -> Result<CFExpansion, Error> {
    if *disc < BigInt::from(2) {
        return Err(Error::InvalidDiscriminant);
    }
    let a0 = isqrt(disc)?;
    if &a0 * &a0 == *disc {
        return Err(Error::InvalidDiscriminant);
    }
    let mut m = BigInt::zero();
    let mut d = BigInt::one();
    let mut a = a0.clone();
    let mut period = Vec::new();
    loop {
        m = &d * &a - &m;
        // d divides D − m² at every step of the surd recurrence
        d = (disc - &m * &m) / &d;
        a = (&a0 + &m) / &d;
        period.push(a.clone());
        if d.is_one() {
            break;
        }
    }
    Ok(CFExpansion {
        disc: disc.clone(),
        a0,
        period,
    })
}

/// One solution of x² − D·y² = norm with norm 1 or 2, x > 0, y >= 0.
/// The equation is re-checked on construction, so a value of this type is
/// always a genuine solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellSolution {
    x: BigInt,
    y: BigInt,
    disc: BigInt,
    norm: u8,
}

impl PellSolution {
    pub fn new(x: BigInt, y: BigInt, disc: BigInt, norm: u8) -> Result<Self, Error> {
        if !matches!(norm, 1 | 2) || x.sign() != Sign::Plus || y.sign() == Sign::Minus {
            return Err(Error::InvalidSolution);
        }
        if &x * &x - &disc * &y * &y != BigInt::from(norm) {
            return Err(Error::InvalidSolution);
        }
        Ok(PellSolution { x, y, disc, norm })
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn norm(&self) -> u8 {
        self.norm
    }
}

// Brahmagupta composition (x, y)∘(u, v) = (xu + D·yv, xv + yu); norms
// multiply, so norm-1 × norm-1 and norm-2 × norm-1 stay representable.
fn compose(p: &PellSolution, q: &PellSolution) -> PellSolution {
    debug_assert_eq!(p.disc, q.disc);
    let x = &p.x * &q.x + &p.disc * &p.y * &q.y;
    let y = &p.x * &q.y + &p.y * &q.x;
    PellSolution::new(x, y, p.disc.clone(), p.norm * q.norm)
        .expect("composition must preserve the norm equation")
}

/// The least positive solution of x² − D·y² = 1, read off the continued
/// fraction convergent p/q at the end of the first period. An odd period
/// yields x² − Dy² = −1 there; squaring that unit reaches +1.
pub fn pell_fundamental(disc: &BigInt) -> Result<PellSolution, Error> {
    let cf = cf_expand(disc)?;
    let len = cf.period.len();
    let mut p_prev = BigInt::one();
    let mut p = cf.a0.clone();
    let mut q_prev = BigInt::zero();
    let mut q = BigInt::one();
    for quot in &cf.period[..len - 1] {
        let p_next = quot * &p + &p_prev;
        p_prev = core::mem::replace(&mut p, p_next);
        let q_next = quot * &q + &q_prev;
        q_prev = core::mem::replace(&mut q, q_next);
    }
    let (x, y) = if len % 2 == 0 {
        (p, q)
    } else {
        (&p * &p + disc * &q * &q, p * q * 2u32)
    };
    PellSolution::new(x, y, disc.clone(), 1)
}

/// The first `count` nontrivial solutions of x² − D·y² = 1 in increasing
/// order: powers of the fundamental solution. The trivial (1, 0) is never
/// emitted.
pub fn pell_solutions(disc: &BigInt, count: usize) -> Result<Vec<PellSolution>, Error> {
    let fundamental = pell_fundamental(disc)?;
    let mut out = Vec::with_capacity(count);
    let mut cur = fundamental.clone();
    for _ in 0..count {
        let next = compose(&cur, &fundamental);
        out.push(core::mem::replace(&mut cur, next));
    }
    Ok(out)
}

/// The first `count` solutions of x² − d·y² = 2 on the orbit of `seed`:
/// the seed itself, then successive compositions with the fundamental
/// norm-1 solution. Every output is revalidated against the norm equation.
pub fn norm_two_solutions(
    d: &BigInt,
    seed: &PellSolution,
    count: usize,
) -> Result<Vec<PellSolution>, Error> {
    if seed.norm != 2 || seed.disc != *d {
        return Err(Error::InvalidSeed);
    }
    let fundamental = pell_fundamental(d)?;
    let mut out = Vec::with_capacity(count);
    let mut cur = seed.clone();
    for _ in 0..count {
        let next = compose(&cur, &fundamental);
        out.push(core::mem::replace(&mut cur, next));
    }
    Ok(out)
}

/// Audits a candidate pair (A, b) against the unit equation
///
/// ```text
/// [(kb − (k−2)A)/2]² − k(k−2)·[(A − b)/2]² = 1
/// ```
///
/// evaluated exactly. Both bracketed halves must be integers; a parity
/// violation flags a malformed candidate rather than a false result.
pub fn eq2_check(k: u32, big_a: &BigInt, b: &BigInt) -> Result<bool, Error> {
    let disc = polygon_disc(k)?;
    let double_z = BigInt::from(k) * b - BigInt::from(k - 2) * big_a;
    let double_w = big_a - b;
    if !(&double_z % 2u32).is_zero() || !(&double_w % 2u32).is_zero() {
        return Err(Error::ParityMismatch);
    }
    let z = double_z / 2i32;
    let w = double_w / 2i32;
    Ok(&z * &z - disc * &w * &w == BigInt::one())
}
