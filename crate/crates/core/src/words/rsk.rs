use alloc::vec::Vec;

use super::{is_restricted, Perm};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tableaux::Tableau;

/// Row-insert `x`: bump the leftmost entry strictly larger than the value
/// being inserted, row by row upward. Returns the `(column, row)` of the new
/// cell.
fn row_insert(rows: &mut Vec<Vec<usize>>, mut x: usize) -> (usize, usize) {
    let mut r = 0;
    loop {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let row = &mut rows[r];
        match row.iter().position(|&y| y > x) {
            None => {
                row.push(x);
                return (row.len() - 1, r);
            }
            Some(c) => {
                core::mem::swap(&mut row[c], &mut x);
                r += 1;
            }
        }
    }
}

/// RSK on a two-line array given as `(top, bottom)` columns, in the given
/// order: bottoms are inserted into `P`, tops recorded in `Q`.
pub fn rsk_biword(pairs: &[(usize, usize)]) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for &(top, bottom) in pairs {
        let (c, r) = row_insert(&mut p, bottom);
        if r == q.len() {
            q.push(Vec::new());
        }
        debug_assert_eq!(q[r].len(), c);
        q[r].push(top);
    }
    (Tableau::from_rows_unchecked(p), Tableau::from_rows_unchecked(q))
}

/// Insertion tableau `P` and recording tableau `Q` of a permutation.
pub fn rsk(pi: &Perm) -> (Tableau, Tableau) {
    let pairs: Vec<(usize, usize)> = pi
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &v)| (i + 1, v))
        .collect();
    rsk_biword(&pairs)
}

/// Undo [`rsk_biword`]: repeatedly remove the rightmost occurrence of the
/// largest entry of `Q` and reverse-bump out of `P`. Returns the two-line
/// array in lexicographic order.
pub fn rsk_inverse_biword(p: &Tableau, q: &Tableau) -> Result<Vec<(usize, usize)>> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau("P and Q have different shapes".into()));
    }
    let mut prow: Vec<Vec<usize>> = p.rows().to_vec();
    let mut qrow: Vec<Vec<usize>> = q.rows().to_vec();
    let mut out = Vec::with_capacity(p.size());
    for _ in 0..p.size() {
        let top = qrow.iter().flatten().copied().max().expect("nonempty");
        // rightmost occurrence of the largest value: it ends its row
        let r = (0..qrow.len())
            .filter(|&r| qrow[r].last() == Some(&top))
            .min_by_key(|&r| core::cmp::Reverse(qrow[r].len()))
            .expect("largest value ends some row");
        qrow[r].pop();
        let mut x = prow[r].pop().ok_or_else(|| Error::InvalidTableau("shape drift".into()))?;
        for rr in (0..r).rev() {
            let row = &mut prow[rr];
            let c = row
                .iter()
                .rposition(|&y| y < x)
                .ok_or_else(|| Error::InvalidTableau("reverse bump found no smaller entry".into()))?;
            core::mem::swap(&mut row[c], &mut x);
        }
        while prow.last().is_some_and(Vec::is_empty) {
            prow.pop();
            qrow.pop();
        }
        out.push((top, x));
    }
    out.reverse();
    Ok(out)
}

/// Inverse of [`rsk`] on pairs of standard tableaux of equal shape.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Perm> {
    if !p.is_standard() || !q.is_standard() {
        return Err(Error::NotStandard);
    }
    let pairs = rsk_inverse_biword(p, q)?;
    Perm::new(pairs.into_iter().map(|(_, b)| b).collect())
}

/// Map a λ-restricted permutation `σ` to `(P, Q)`: replace each value by its
/// block index to get `σ'`, sort the columns `(σ'_i, i)` lexicographically and
/// apply RSK. `P` is standard with `des(σ) + 1` runs and `Q` is semistandard
/// of weight `λ`.
pub fn restricted_to_pair(sigma: &Perm, lambda: &Partition) -> Result<(Tableau, Tableau)> {
    if !is_restricted(sigma, lambda) {
        return Err(Error::NotRestricted);
    }
    let blocks = lambda.block_of_values();
    let mut pairs: Vec<(usize, usize)> = sigma
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &v)| (blocks[v - 1], i + 1))
        .collect();
    pairs.sort_unstable();
    Ok(rsk_biword(&pairs))
}
