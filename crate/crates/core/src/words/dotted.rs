//! Dotted diagrams and the sweep that turns one into a λ-restricted
//! permutation together with a dotted column.
//!
//! A diagram for `λ` and an integer `α` has one column per part; column `i`
//! holds `α - 1 + λ_i` cells (rows numbered 1, 2, … from the top) of which
//! exactly `λ_i` carry a dot.

use alloc::vec::Vec;

use super::Perm;
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DottedDiagram {
    alpha: usize,
    lambda: Partition,
    /// `dots[i]`: rows (1-based, from the top) of the dots in column `i`,
    /// ascending.
    dots: Vec<Vec<usize>>,
}

/// Output of [`dotted_forward`]: a λ-restricted word and a column of cells,
/// top to bottom, `true` marking a dot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DottedImage {
    pub word: Perm,
    pub column: Vec<bool>,
}

impl DottedDiagram {
    pub fn new(alpha: usize, lambda: Partition, mut dots: Vec<Vec<usize>>) -> Result<Self> {
        let n = lambda.size();
        if alpha < n.max(1) {
            return Err(Error::InvalidDiagram(alloc::format!("alpha = {alpha} below n = {n}")));
        }
        if dots.len() != lambda.len() {
            return Err(Error::InvalidDiagram("one dot list per column required".into()));
        }
        for (i, col) in dots.iter_mut().enumerate() {
            col.sort_unstable();
            col.dedup();
            let height = alpha - 1 + lambda.part(i);
            if col.len() != lambda.part(i) {
                return Err(Error::InvalidDiagram(alloc::format!(
                    "column {} needs {} dots",
                    i + 1,
                    lambda.part(i)
                )));
            }
            if col.iter().any(|&r| r == 0 || r > height) {
                return Err(Error::InvalidDiagram(alloc::format!(
                    "dot outside column {} of height {height}",
                    i + 1
                )));
            }
        }
        Ok(DottedDiagram { alpha, lambda, dots })
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn dots(&self) -> &[Vec<usize>] {
        &self.dots
    }

    /// Every diagram for `(α, λ)`: `Π_i C(α + λ_i - 1, λ_i)` of them.
    pub fn enumerate(alpha: usize, lambda: &Partition) -> Result<Vec<DottedDiagram>> {
        let n = lambda.size();
        if alpha < n.max(1) {
            return Err(Error::InvalidDiagram(alloc::format!("alpha = {alpha} below n = {n}")));
        }
        let per_column: Vec<Vec<Vec<usize>>> = lambda
            .parts()
            .iter()
            .map(|&p| combinations(alpha - 1 + p, p))
            .collect();
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(per_column.len());
        product(&per_column, &mut pick, &mut |dots| {
            out.push(DottedDiagram { alpha, lambda: lambda.clone(), dots: dots.to_vec() });
        });
        Ok(out)
    }
}

/// `k`-subsets of `{1, …, m}`, each ascending.
fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=m {
            if m - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(1, m, k, &mut cur, &mut out);
    out
}

fn product(choices: &[Vec<Vec<usize>>], pick: &mut Vec<Vec<usize>>, f: &mut dyn FnMut(&[Vec<usize>])) {
    if pick.len() == choices.len() {
        f(pick);
        return;
    }
    for c in &choices[pick.len()] {
        pick.push(c.clone());
        product(choices, pick, f);
        pick.pop();
    }
}

struct Dot {
    label: usize,
    column: usize,
    row: usize,
}

/// Sweep the diagram top to bottom.
///
/// Dots are labelled column by column, top to bottom, and the diagram is
/// padded to height `α + n - 1`. For each row: if it holds no dot, append a
/// blank cell to the output column. Otherwise take the leftmost dot, append
/// its label to the word; when that is not a descent add a dotted cell,
/// when it is, dot the (necessarily blank) bottom cell instead. The dot is
/// then removed and every dot outside its column moves down one row.
pub fn dotted_forward(d: &DottedDiagram) -> Result<DottedImage> {
    let n = d.lambda.size();
    let height = d.alpha + n - 1;
    let mut dots: Vec<Dot> = Vec::with_capacity(n);
    let mut label = 0;
    for (column, rows) in d.dots.iter().enumerate() {
        for &row in rows {
            label += 1;
            dots.push(Dot { label, column, row });
        }
    }
    let mut word: Vec<usize> = Vec::with_capacity(n);
    let mut column: Vec<bool> = Vec::with_capacity(height);
    for row in 1..=height {
        let hit = dots
            .iter()
            .enumerate()
            .filter(|(_, dot)| dot.row == row)
            .min_by_key(|(_, dot)| dot.column)
            .map(|(i, _)| i);
        let Some(idx) = hit else {
            column.push(false);
            continue;
        };
        let dot = dots.swap_remove(idx);
        let descent = word.last().is_some_and(|&prev| prev > dot.label);
        word.push(dot.label);
        if descent {
            match column.last_mut() {
                Some(cell @ false) => *cell = true,
                _ => {
                    return Err(Error::Integrity(
                        "descent step found no blank bottom cell".into(),
                    ))
                }
            }
        } else {
            column.push(true);
        }
        for other in dots.iter_mut().filter(|o| o.column != dot.column) {
            other.row += 1;
            if other.row > height {
                return Err(Error::Integrity("dot pushed below the padded diagram".into()));
            }
        }
    }
    if !dots.is_empty() {
        return Err(Error::Integrity("sweep ended with unread dots".into()));
    }
    Ok(DottedImage { word: Perm::new(word)?, column })
}

/// Count of each side of the identity at integer `α`:
/// `(Π_i C(α + λ_i - 1, λ_i), Σ_k A(λ, k) C(α + n - 1 - k, n))`.
pub fn dotted_counts(alpha: usize, lambda: &Partition) -> (num_bigint::BigInt, num_bigint::BigInt) {
    use crate::exactmath::binomial;
    let n = lambda.size();
    let left = lambda
        .parts()
        .iter()
        .map(|&p| binomial(alpha + p - 1, p))
        .product();
    let right = super::restricted_eulerian_row(lambda)
        .iter()
        .enumerate()
        .map(|(k, &a)| num_bigint::BigInt::from(a) * binomial(alpha + n - 1 - k, n))
        .sum();
    (left, right)
}
