//! Exact enumeration of the numbers that are simultaneously k-gonal and
//! centered k-gonal.
//!
//! For every polygon order `k >= 3` the values shared by the two figurate
//! families form an infinite sequence (1, 10, 136, 1891, ... for k = 3)
//! generated by powers of the quadratic unit `(k-1) + sqrt(k(k-2))`. This
//! crate computes that sequence and all of its witness data in exact
//! arbitrary-precision arithmetic, and ships an independent brute-force
//! oracle so every closed-form claim can be audited at runtime.
//!
//! Modules:
//!
//! - [`exactmath`] — integer square roots, the quadratic ring Z\[√D\], and
//!   the conjugate-pair (Lucas-type) sequences that rationalize its powers.
//! - [`figurate`] — forward and inverse evaluation of polygonal and
//!   centered polygonal numbers.
//! - [`pell`] — continued-fraction Pell solver, unit-power solution chains,
//!   and the norm-2 sibling form.
//! - [`intersect`] — the closed-form common-value records, a constant-work
//!   streaming generator, and the perfect-square-order second route.
//! - [`oracle`] — brute-force enumeration of common values by merging the
//!   two monotone sequences, plus closed-form agreement reports.
//!
//! The crate is `no_std` (with `alloc`); all operations are pure functions
//! on immutable values. Divisibility and norm identities that the closed
//! forms rely on are asserted at every step, never assumed: a violation
//! panics, because it can only mean an implementation bug.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod exactmath;
pub mod figurate;
pub mod intersect;
pub mod oracle;
pub mod pell;

pub use error::Error;
