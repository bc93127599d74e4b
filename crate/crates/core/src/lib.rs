//! Exact combinatorial algebra for finite-type knot invariants.
//!
//! The crate works with chord diagrams on an oriented Wilson loop, Feynman
//! (uni-trivalent) diagrams resolved through STU, the quotient of chord
//! diagrams by the four-term relation, the cabling operators `psi^n`, the
//! deframing projector and the universal immanent weight system.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals
//! and immanents are integer vectors over partitions.
//!
//! The crate is `no_std` and only needs `alloc`; file formats, caching and
//! the command line live in the companion `vassiliev` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod diagrams;
pub mod error;
pub mod feynman;
pub mod immanent;
pub mod linalg;
pub mod operators;
pub mod partition;
pub mod quotient;
pub mod sum;

pub use diagrams::{canonical_form, connect_sum, coproduct, enumerate_diagrams, ChordDiagram, TensorSum};
pub use error::{Error, Violation};
pub use feynman::{Anchor, FeynmanDiagram, Pivot};
pub use immanent::{IntersectionMatrix, PartitionVector};
pub use operators::{Cabler, CablingPolynomial};
pub use partition::Partition;
pub use quotient::{QuotientBasis, WeightLabel, WeightSystem};
pub use sum::DiagramSum;

/// Exact rational scalar used for every diagram coefficient.
pub type Rational = num_rational::BigRational;

/// Builds the rational `n`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Builds the rational `num / den`, reduced.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub(crate) fn factorial(n: usize) -> Rational {
    let mut acc = num_bigint::BigInt::from(1u8);
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

pub(crate) fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return int(0);
    }
    let mut acc = num_bigint::BigInt::from(1u8);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Rational::from_integer(acc)
}
