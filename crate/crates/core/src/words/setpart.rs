use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::Perm;
use crate::error::{Error, Result};

/// A set partition of `{1, …, n}`. Blocks are sorted internally and ordered by
/// their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidSetPartition("empty block".into()));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::InvalidSetPartition(alloc::format!(
                        "value {v} repeated or outside 1..={n}"
                    )));
                }
                seen[v] = true;
            }
        }
        if seen[1..].iter().any(|&s| !s) {
            return Err(Error::InvalidSetPartition("blocks do not cover 1..=n".into()));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `|β|`, the number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            let s: Vec<String> = b.iter().map(|v| alloc::format!("{v}")).collect();
            f.write_str(&s.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// `"1 4|2 3 5"`
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split('|')
            .map(|b| {
                b.split_whitespace()
                    .map(|t| t.parse().map_err(|_| Error::Parse(alloc::format!("bad value {t:?}"))))
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::new(n, blocks)
    }
}

/// Every set partition of `{1, …, n}`, via restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = Vec::with_capacity(n);
    grow(n, 0, &mut rgs, &mut out);
    out
}

fn grow(n: usize, max_block: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
    if rgs.len() == n {
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); max_block];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        out.push(SetPartition { n, blocks });
        return;
    }
    for b in 0..=max_block {
        rgs.push(b);
        grow(n, max_block.max(b + 1), rgs, out);
        rgs.pop();
    }
}

/// Sort the values of each block of `β` into increasing order while keeping
/// the set of positions they occupy in `π`.
pub fn f_beta(pi: &Perm, beta: &SetPartition) -> Result<Perm> {
    if pi.len() != beta.n() {
        return Err(Error::SizeMismatch { left: pi.len(), right: beta.n() });
    }
    let pos = pi.positions();
    let mut w = pi.as_slice().to_vec();
    for block in beta.blocks() {
        let mut slots: Vec<usize> = block.iter().map(|&v| pos[v - 1]).collect();
        slots.sort_unstable();
        for (&slot, &v) in slots.iter().zip(block) {
            w[slot] = v;
        }
    }
    Perm::new(w)
}
