//! Exact-arithmetic toolkit for hook-length formulas on skew Young diagrams.
//!
//! Everything here is computed over arbitrary-precision integers and rationals,
//! so every identity check is an exact equality, never a float comparison.
//!
//! The main pieces:
//! - [`shapes`]: partitions, skew shapes, shifted shapes, cells, hooks
//! - [`tableaux`]: brute-force tableau enumerators, the Aitken determinant,
//!   Euler numbers and their two q-analogues
//! - [`excited`]: excited diagrams, flagged tableaux, determinantal counts
//! - [`strips`]: border-strip decompositions, non-intersecting lattice paths,
//!   ladder moves, and the Lindström–Gessel–Viennot determinant
//! - [`pleasant`]: pleasant diagrams and the reverse-plane-partition q-series
//! - [`qseries`]: truncated power series and polynomials in `q` over exact rationals
//! - [`schur`]: factorial Schur evaluations and randomized identity checkers
//! - [`verify`]: the identity test battery with machine-readable reports

pub mod config;
pub mod error;
pub mod excited;
pub mod pleasant;
pub mod qseries;
pub mod schur;
pub mod shapes;
pub mod strips;
pub mod tableaux;
pub mod verify;

pub use config::Config;
pub use error::{Error, Result};
pub use shapes::{Cell, Partition, ShiftedShape, SkewShape};

/// Arbitrary-precision integer used throughout.
pub type Int = num::BigInt;
/// Arbitrary-precision rational used throughout.
pub type Rat = num::BigRational;

/// Convenience constructor for exact rationals from machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// n! as a big integer.
pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::from(1), |acc, k| acc * Int::from(k))
}

/// Binomial coefficient C(n, k) over big integers; zero when k > n.
pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::from(0);
    }
    let k = k.min(n - k);
    let mut num = Int::from(1);
    let mut den = Int::from(1);
    for i in 0..k {
        num *= Int::from(n - i);
        den *= Int::from(i + 1);
    }
    num / den
}
