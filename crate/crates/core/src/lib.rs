//! Exact Schur expansions of modified Jack polynomials together with the
//! tableau, permutation and rook-board combinatorics used to cross-check them.
//!
//! Everything here is pure computation over exact integers and rationals and
//! needs only `alloc`.
#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod error;
pub mod exactmath;

pub use error::{Error, Result};
pub use exactmath::AlphaPoly;
pub mod partitions;
pub mod tableaux;

pub use partitions::{all_partitions, Partition};
pub use tableaux::{DescentSet, Tableau};
pub mod words;
pub use words::Perm;
pub mod symfunc;
pub use symfunc::{Basis, QSymExpansion, SymExpansion};
pub mod rook;
pub use rook::FerrersBoard;
