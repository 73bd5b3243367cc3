//! Exact arithmetic: rational polynomials in α, the binomial bases, classical
//! counting sequences and Sturm-sequence real-rootedness.

pub mod basis;
pub mod numbers;
pub mod poly;
pub mod sturm;

pub use basis::{
    from_falling, from_shifted, shifted_to_falling, to_falling_basis, to_shifted_basis,
    BinomialCoeffs,
};
pub use numbers::{bell, binomial, eulerian, eulerian_row, factorial, stirling2, stirling2_row};
pub use poly::AlphaPoly;
pub use sturm::{count_real_roots, is_real_rooted, is_real_rooted_or_zero, square_free_part};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// `α^n · p(1/α)`; an involution for fixed `n`.
pub fn tilde_reverse(p: &AlphaPoly, n: usize) -> crate::Result<AlphaPoly> {
    p.reverse(n)
}
