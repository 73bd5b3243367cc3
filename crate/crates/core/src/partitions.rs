//! Integer partitions, drawn in French notation: row 0 is the bottom row and
//! rows grow upward. Cells are addressed by `(column, row)`, both 0-based.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::factorial;

/// A cell of a diagram as `(column, row)`.
pub type Cell = (usize, usize);

/// A weakly decreasing sequence of positive parts. The empty partition is
/// allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts must be weakly decreasing".into()));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`
    pub fn row(n: usize) -> Self {
        if n == 0 { Self::empty() } else { Partition(vec![n]) }
    }

    /// `(1^n)`
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The hook `(n - l, 1^l)`.
    pub fn hook(n: usize, l: usize) -> Result<Self> {
        if n == 0 || l >= n {
            return Err(Error::OutOfRange("hook needs 0 <= l < n".into()));
        }
        let mut parts = vec![n - l];
        parts.extend(core::iter::repeat_n(1, l));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    pub fn contains(&self, (col, row): Cell) -> bool {
        col < self.part(row)
    }

    /// Cells row by row, bottom row first, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| (col, row)))
    }

    /// Cells strictly to the right in the same row.
    pub fn arm(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.part(cell.1) - cell.0 - 1)
    }

    /// Cells strictly above in the same column.
    pub fn leg(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.0.iter().skip(cell.1 + 1).filter(|&&p| p > cell.0).count())
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        Ok(self.arm(cell)? + self.leg(cell)? + 1)
    }

    /// Contents `column - row` of every cell, sorted ascending.
    pub fn content_multiset(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.cells().map(|(c, r)| c as i64 - r as i64).collect();
        v.sort_unstable();
        v
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::CellOutside { col: cell.0, row: cell.1 })
        }
    }

    /// Prefix-sum comparison; both partitions must have the same size.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `λ! = λ_1! λ_2! ···`
    pub fn factorial_product(&self) -> BigInt {
        self.0.iter().map(|&p| factorial(p)).product()
    }

    /// `z_λ = Π_i i^{m_i} m_i!` where `m_i` is the multiplicity of part `i`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let m = self.0[i..].iter().take_while(|&&q| q == p).count();
            acc *= BigInt::from(p).pow(m as u32) * factorial(m);
            i += m;
        }
        acc
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn syt_count(&self) -> BigInt {
        let hooks: BigInt = self
            .cells()
            .map(|c| BigInt::from(self.hook_length(c).expect("own cell")))
            .product();
        factorial(self.size()) / hooks
    }

    /// The multiset of block indices: part `i` contributes `λ_i` copies of `i + 1`.
    pub fn block_of_values(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| core::iter::repeat_n(i + 1, p))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1"`; the empty string (or `"0"`) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Every partition of `n`, in descending lexicographic order. This order is a
/// linear extension of dominance: if `μ` dominates `λ` then `μ` comes first.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}
