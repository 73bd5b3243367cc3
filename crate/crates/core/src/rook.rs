//! Ferrers boards in an `n × n` grid with their rook and hit numbers.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, factorial, AlphaPoly};
use crate::partitions::Partition;
use crate::words::permutations;

/// A Ferrers board given by weakly increasing column heights `c_1 ≤ … ≤ c_n`,
/// each at most `n`. Column `i` holds the cells in rows `1..=c_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FerrersBoard {
    heights: Vec<usize>,
}

impl FerrersBoard {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        let n = heights.len();
        if heights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidBoard(alloc::format!("heights {heights:?} are not weakly increasing")));
        }
        if heights.iter().any(|&c| c > n) {
            return Err(Error::InvalidBoard(alloc::format!("heights {heights:?} exceed the grid size {n}")));
        }
        Ok(FerrersBoard { heights })
    }

    /// Grid size.
    pub fn n(&self) -> usize {
        self.heights.len()
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn cell_count(&self) -> usize {
        self.heights.iter().sum()
    }

    /// `Π_i (α + c_i - i + 1)`.
    pub fn factorization(&self) -> AlphaPoly {
        self.heights
            .iter()
            .enumerate()
            .map(|(i, &c)| AlphaPoly::shifted_alpha(c as i64 - i as i64))
            .fold(AlphaPoly::one(), |acc, f| &acc * &f)
    }
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.heights.iter().map(|c| alloc::format!("{c}")).collect();
        write!(f, "B({})", s.join(","))
    }
}

impl FromStr for FerrersBoard {
    type Err = Error;

    /// `"1,1,2,3"`, optionally wrapped as `"B(1,1,2,3)"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix("B(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        let heights = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("bad height {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FerrersBoard::new(heights)
    }
}

/// `r_0..r_n` by adding one column at a time: a new column of height `c`
/// extends a placement of `k - 1` rooks in `c - (k - 1)` ways, because the
/// earlier columns are no taller.
pub fn rook_numbers(b: &FerrersBoard) -> Vec<BigInt> {
    let n = b.n();
    let mut r = vec![BigInt::zero(); n + 1];
    r[0] = BigInt::one();
    for &c in b.heights() {
        for k in (1..=n).rev() {
            if c >= k {
                let add = &r[k - 1] * BigInt::from(c - (k - 1));
                r[k] += add;
            }
        }
    }
    r
}

/// `h_0..h_n` from `Σ_k h_k t^k = Σ_k r_k (n - k)! (t - 1)^k`.
pub fn hit_numbers(b: &FerrersBoard) -> Vec<BigInt> {
    let n = b.n();
    let r = rook_numbers(b);
    let mut h = vec![BigInt::zero(); n + 1];
    for (k, rk) in r.iter().enumerate() {
        if rk.is_zero() {
            continue;
        }
        let w = rk * factorial(n - k);
        for j in 0..=k {
            let term = &w * binomial(k, j);
            if (k - j) % 2 == 0 {
                h[j] += term;
            } else {
                h[j] -= term;
            }
        }
    }
    h
}

/// Hit numbers by enumerating all `n!` full placements.
pub fn hit_numbers_by_placement(b: &FerrersBoard) -> Vec<BigInt> {
    let n = b.n();
    let mut h = vec![BigInt::zero(); n + 1];
    for sigma in permutations(n) {
        let on = sigma
            .as_slice()
            .iter()
            .zip(b.heights())
            .filter(|(&row, &c)| row <= c)
            .count();
        h[on] += 1;
    }
    h
}

/// The board of the content product of `λ`: contents sorted non-increasingly
/// as `v_1 ≥ … ≥ v_n`, then `c_i = v_i + i - 1`.
pub fn content_board(lambda: &Partition) -> Result<FerrersBoard> {
    let mut v = lambda.content_multiset();
    v.reverse();
    let heights = v
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            usize::try_from(c + i as i64)
                .map_err(|_| Error::Integrity(alloc::format!("negative content height for {lambda}")))
        })
        .collect::<Result<Vec<_>>>()?;
    FerrersBoard::new(heights)
        .map_err(|e| Error::Integrity(alloc::format!("content board of {lambda}: {e}")))
}

/// The two boards for the hook `(n - ℓ, 1^ℓ)`:
/// `B_c` with `n - ℓ - 1` columns of height `n - ℓ - 2` followed by heights
/// `n - ℓ - 1, …, n - 1`, and `B_d` with `n - ℓ` columns of height
/// `n - ℓ - 1` followed by heights `n - ℓ, …, n - 1`.
pub fn hook_boards(n: usize, ell: usize) -> Result<(FerrersBoard, FerrersBoard)> {
    if n == 0 || ell >= n {
        return Err(Error::OutOfRange(alloc::format!("hook needs 0 <= l < n, got n = {n}, l = {ell}")));
    }
    let base = n - ell;
    let mut c = vec![base.saturating_sub(2); base - 1];
    c.extend((0..=ell).map(|i| base - 1 + i));
    let mut d = vec![base - 1; base];
    d.extend((1..=ell).map(|i| base - 1 + i));
    Ok((FerrersBoard::new(c)?, FerrersBoard::new(d)?))
}

/// Every Ferrers board in the `n × n` grid.
pub fn all_ferrers_boards(n: usize) -> Vec<FerrersBoard> {
    fn rec(n: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<FerrersBoard>) {
        if cur.len() == n {
            out.push(FerrersBoard { heights: cur.clone() });
            return;
        }
        for c in min..=n {
            cur.push(c);
            rec(n, c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `Σ_k v_k t^k` for an integer vector.
pub fn generating_poly(v: &[BigInt]) -> AlphaPoly {
    AlphaPoly::from_bigints(v.iter().cloned())
}
