//! Generation of the numbers that are simultaneously k-gonal and centered
//! k-gonal, with full witness data.
//!
//! Writing α = (k−1) + √(k(k−2)) and s_i, u_i for its conjugate-pair
//! sequences, the i-th common value and its witnesses are
//!
//! ```text
//! N_i = (k·s_{2i+1} − 2k² + 18k − 32) / (16(k−2))
//! m_i = (2 + s_i + k·u_i) / 4              (centered index)
//! a_i = (s_i + s_{i+1}) / 2                (radical value)
//! n_i = (k − 4 + a_i) / (2(k−2))           (polygonal index)
//! b_i = (s_i + (k−2)·u_i) / 2              (companion of A_i = 2m_i − 1)
//! ```
//!
//! Every division above is exact; each one is asserted, never assumed.
//! The defining square identity k(k−2)·A_i² + 2k = a_i² ties the pieces
//! together and is asserted on every record this module hands out.
//!
//! Values also obey an order-2 affine recurrence
//! N_{i+1} = (4(k−1)² − 2)·N_i − N_{i−1} + c, which [`stream`] uses for
//! constant work per term; the closed form above stays available as the
//! independent route ([`record`]).

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::exactmath::{exact_sqrt, lucas_pair};
use crate::figurate::PolygonParams;
use crate::pell::{eq2_check, norm_two_solutions, PellSolution};

/// One fully witnessed common value of the two families for order k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionRecord {
    pub k: u32,
    /// Zero-based solution index; i = 0 is the shared value 1.
    pub i: u64,
    /// The common value N_i.
    pub value: BigInt,
    /// Centered index: C(m;k) = value.
    pub m: BigInt,
    /// Polygonal index: P(n;k) = value.
    pub n: BigInt,
    /// Radical value a_i with k(k−2)(2m−1)² + 2k = a_i².
    pub a: BigInt,
    /// The odd parameter A_i = 2m − 1.
    pub big_a: BigInt,
    /// Companion coordinate: (A_i, b_i) passes the unit-equation audit.
    pub b: BigInt,
}

/// Divides exactly or panics: a remainder here is an implementation bug,
/// not a data error.
fn exact_div(num: BigInt, den: &BigInt, what: &str) -> BigInt {
    assert!(
        (&num % den).is_zero(),
        "exact divisibility violated for {what}: {num} not divisible by {den}"
    );
    num / den
}

fn odd_index(i: u64) -> u64 {
    i.checked_mul(2)
        .and_then(|v| v.checked_add(1))
        .expect("solution index overflow")
}

fn succ_index(i: u64) -> u64 {
    i.checked_add(1).expect("solution index overflow")
}

// N_i from the trace s_{2i+1}
fn value_from_trace(k: u32, s_odd: &BigInt) -> BigInt {
    let kk = BigInt::from(k);
    let num = &kk * s_odd - (&kk * &kk) * 2u32 + &kk * 18u32 - 32u32;
    let den = BigInt::from(16 * (u64::from(k) - 2));
    exact_div(num, &den, "value numerator")
}

// m_i from (s_i, u_i)
fn m_from_pair(k: u32, s: &BigInt, u: &BigInt) -> BigInt {
    let num = s + BigInt::from(k) * u + 2u32;
    exact_div(num, &BigInt::from(4), "centered-index numerator")
}

// a_i from (s_i, s_{i+1})
fn a_from_traces(s: &BigInt, s_next: &BigInt) -> BigInt {
    exact_div(s + s_next, &BigInt::from(2), "radical numerator")
}

// n_i from a_i
fn n_from_radical(k: u32, a: &BigInt) -> BigInt {
    let num = a + BigInt::from(i64::from(k) - 4);
    let den = BigInt::from(2 * (u64::from(k) - 2));
    exact_div(num, &den, "polygonal-index numerator")
}

// b_i from (s_i, u_i)
fn b_from_pair(k: u32, s: &BigInt, u: &BigInt) -> BigInt {
    let num = s + BigInt::from(k - 2) * u;
    exact_div(num, &BigInt::from(2), "companion numerator")
}

/// The i-th common value N_i, evaluated through the closed form.
pub fn value_at(k: u32, i: u64) -> Result<BigInt, Error> {
    let pair = lucas_pair(k, odd_index(i))?;
    Ok(value_from_trace(k, &pair.s))
}

/// The centered witness index m for solution i.
pub fn index_m(k: u32, i: u64) -> Result<BigInt, Error> {
    let pair = lucas_pair(k, i)?;
    Ok(m_from_pair(k, &pair.s, &pair.u))
}

/// The radical value a_i = (s_i + s_{i+1})/2.
pub fn radical_a(k: u32, i: u64) -> Result<BigInt, Error> {
    let cur = lucas_pair(k, i)?;
    let next = lucas_pair(k, succ_index(i))?;
    Ok(a_from_traces(&cur.s, &next.s))
}

/// The polygonal witness index n = (k − 4 + a_i)/(2(k−2)).
pub fn index_n(k: u32, i: u64) -> Result<BigInt, Error> {
    Ok(n_from_radical(k, &radical_a(k, i)?))
}

// Builds a record from local sequence state, asserting the radical
// identity; the value/witness cross-check is `record`'s job.
fn assemble(
    params: &PolygonParams,
    i: u64,
    s: &BigInt,
    u: &BigInt,
    s_next: &BigInt,
    value: BigInt,
) -> IntersectionRecord {
    let k = params.k();
    let m = m_from_pair(k, s, u);
    let big_a = &m * 2u32 - 1u32;
    let a = a_from_traces(s, s_next);
    let n = n_from_radical(k, &a);
    let b = b_from_pair(k, s, u);
    assert_eq!(
        params.disc() * &big_a * &big_a + BigInt::from(k) * 2u32,
        &a * &a,
        "radical identity violated at k={k}, i={i}"
    );
    IntersectionRecord {
        k,
        i,
        value,
        m,
        n,
        a,
        big_a,
        b,
    }
}

/// The fully witnessed record for solution i, with every invariant
/// asserted: both witness evaluations, the radical identity, every exact
/// division, and the unit-equation audit of (A_i, b_i).
pub fn record(k: u32, i: u64) -> Result<IntersectionRecord, Error> {
    let params = PolygonParams::new(k)?;
    let cur = lucas_pair(k, i)?;
    let next = lucas_pair(k, succ_index(i))?;
    let value = value_at(k, i)?;
    let rec = assemble(&params, i, &cur.s, &cur.u, &next.s, value);
    assert_eq!(
        params.eval_polygonal(&rec.n),
        rec.value,
        "polygonal witness mismatch at k={k}, i={i}"
    );
    assert_eq!(
        params.eval_centered(&rec.m),
        rec.value,
        "centered witness mismatch at k={k}, i={i}"
    );
    assert_eq!(
        eq2_check(k, &rec.big_a, &rec.b),
        Ok(true),
        "unit-equation audit failed at k={k}, i={i}"
    );
    Ok(rec)
}

/// Infinite iterator over records from index `start` on, doing constant
/// work per term.
///
/// The sequences s, u advance by their shared two-term recurrence; values
/// advance by N_{i+1} = (4(k−1)² − 2)·N_i − N_{i−1} + c with the constant
/// c calibrated once from the first three closed-form values. This is an
/// evaluation route independent of [`record`]'s closed form, which makes
/// the two comparable in self-tests.
pub fn stream(k: u32, start: u64) -> Result<RecordStream, Error> {
    let params = PolygonParams::new(k)?;
    let cur = lucas_pair(k, start)?;
    let next = lucas_pair(k, succ_index(start))?;
    let t = BigInt::from(2 * (u64::from(k) - 1));
    let t2 = &t * &t - 2u32;
    let v0 = value_at(k, 0)?;
    let v1 = value_at(k, 1)?;
    let v2 = value_at(k, 2)?;
    let c = &v2 - &t2 * &v1 + &v0;
    let (v_cur, v_next) = match start {
        0 => (v0, v1),
        1 => (v1, v2),
        _ => (value_at(k, start)?, value_at(k, succ_index(start))?),
    };
    Ok(RecordStream {
        params,
        t,
        t2,
        c,
        i: start,
        s_cur: cur.s,
        s_next: next.s,
        u_cur: cur.u,
        u_next: next.u,
        v_cur,
        v_next,
    })
}

/// See [`stream`].
#[derive(Clone, Debug)]
pub struct RecordStream {
    params: PolygonParams,
    /// 2(k−1): step coefficient for s and u.
    t: BigInt,
    /// 4(k−1)² − 2: step coefficient for values.
    t2: BigInt,
    /// Affine constant of the value recurrence.
    c: BigInt,
    i: u64,
    s_cur: BigInt,
    s_next: BigInt,
    u_cur: BigInt,
    u_next: BigInt,
    v_cur: BigInt,
    v_next: BigInt,
}

impl Iterator for RecordStream {
    type Item = IntersectionRecord;

    fn next(&mut self) -> Option<IntersectionRecord> {
        let rec = assemble(
            &self.params,
            self.i,
            &self.s_cur,
            &self.u_cur,
            &self.s_next,
            self.v_cur.clone(),
        );
        let s2 = &self.t * &self.s_next - &self.s_cur;
        self.s_cur = core::mem::replace(&mut self.s_next, s2);
        let u2 = &self.t * &self.u_next - &self.u_cur;
        self.u_cur = core::mem::replace(&mut self.u_next, u2);
        let v2 = &self.t2 * &self.v_next - &self.v_cur + &self.c;
        self.v_cur = core::mem::replace(&mut self.v_next, v2);
        self.i += 1;
        Some(rec)
    }
}

/// The (m, value) pairs reached through the norm-2 route, available when k
/// is a perfect square >= 4.
///
/// With a² = k·b² the radical identity divides down to
/// b² − (k−2)(2m−1)² = 2, whose solutions form the orbit of the seed
/// (√k, 1) under the norm-1 units of k−2. Each chain element (b, y) has y
/// odd (an even y would force b² ≡ 2 mod 4) and maps to m = (y+1)/2.
pub fn case2_sequence(k: u32, count: usize) -> Result<Vec<(BigInt, BigInt)>, Error> {
    let params = PolygonParams::new(k)?;
    let root = match exact_sqrt(&BigInt::from(k))? {
        Some(r) if k >= 4 => r,
        _ => return Err(Error::OrderNotSquare),
    };
    let d = BigInt::from(k - 2);
    let seed = PellSolution::new(root, BigInt::one(), d.clone(), 2)
        .expect("(sqrt k)^2 - (k-2) = 2 by construction");
    let chain = norm_two_solutions(&d, &seed, count)?;
    let mut out = Vec::with_capacity(chain.len());
    for sol in &chain {
        let m = exact_div(sol.y() + 1u32, &BigInt::from(2), "norm-2 odd coordinate");
        let value = params.eval_centered(&m);
        out.push((m, value));
    }
    Ok(out)
}
