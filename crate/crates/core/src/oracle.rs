//! Brute-force ground truth for the closed forms.
//!
//! [`enumerate_common`] walks the two strictly increasing figurate
//! sequences with a two-pointer merge, touching nothing but the forward
//! evaluations, so it shares no code with the solution machinery it
//! audits. [`compare`] runs it side by side with [`stream`] and reports —
//! rather than throws — any divergence.
//!
//! [`stream`]: crate::intersect::stream

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use crate::figurate::PolygonParams;
use crate::intersect::stream;

/// One common value with its witness indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonValue {
    pub n: BigInt,
    pub m: BigInt,
    pub value: BigInt,
}

/// First position where brute force and closed form disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub index: usize,
    pub expected: Option<CommonValue>,
    pub actual: Option<CommonValue>,
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub k: u32,
    pub limit: BigInt,
    /// Brute-force matches, strictly increasing in value.
    pub matches: Vec<CommonValue>,
    /// True iff the closed-form records reproduce `matches` exactly.
    pub closed_form_agreement: bool,
    pub first_divergence: Option<Divergence>,
}

/// All values <= limit shared by the k-gonal and centered k-gonal
/// sequences, by merging the two monotone sequences. The witness for the
/// value 1 is the canonical (n, m) = (1, 1).
pub fn enumerate_common(params: &PolygonParams, limit: &BigInt) -> Vec<CommonValue> {
    let mut out = Vec::new();
    let mut n = BigInt::one();
    let mut m = BigInt::one();
    let mut pv = params.eval_polygonal(&n);
    let mut cv = params.eval_centered(&m);
    loop {
        match pv.cmp(&cv) {
            Ordering::Less => {
                if &pv > limit {
                    break;
                }
                n += 1u32;
                pv = params.eval_polygonal(&n);
            }
            Ordering::Greater => {
                if &cv > limit {
                    break;
                }
                m += 1u32;
                cv = params.eval_centered(&m);
            }
            Ordering::Equal => {
                if &pv > limit {
                    break;
                }
                out.push(CommonValue {
                    n: n.clone(),
                    m: m.clone(),
                    value: pv.clone(),
                });
                n += 1u32;
                m += 1u32;
                pv = params.eval_polygonal(&n);
                cv = params.eval_centered(&m);
            }
        }
    }
    out
}

/// Runs the brute-force enumeration and the closed-form stream side by
/// side over all values <= limit and reports whether the ordered
/// (n, m, value) triples coincide exactly.
pub fn compare(params: &PolygonParams, limit: &BigInt) -> OracleReport {
    let matches = enumerate_common(params, limit);
    let closed: Vec<CommonValue> = stream(params.k(), 0)
        .expect("validated params imply a valid stream")
        .take_while(|r| &r.value <= limit)
        .map(|r| CommonValue {
            n: r.n,
            m: r.m,
            value: r.value,
        })
        .collect();
    let mut first_divergence = None;
    for index in 0..matches.len().max(closed.len()) {
        let expected = matches.get(index);
        let actual = closed.get(index);
        if expected != actual {
            first_divergence = Some(Divergence {
                index,
                expected: expected.cloned(),
                actual: actual.cloned(),
            });
            break;
        }
    }
    OracleReport {
        k: params.k(),
        limit: limit.clone(),
        closed_form_agreement: first_divergence.is_none(),
        matches,
        first_divergence,
    }
}
