//! Permutations and words: λ-restricted permutations, dual equivalence
//! involutions, RSK, set partitions and the two explicit bijections relating
//! restricted permutations to dotted diagrams and to tableau pairs.

mod dotted;
mod rsk;
mod setpart;

pub use dotted::{dotted_forward, dotted_counts, DottedDiagram, DottedImage};
pub use rsk::{restricted_to_pair, rsk, rsk_biword, rsk_inverse, rsk_inverse_biword};
pub use setpart::{f_beta, set_partitions, SetPartition};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tableaux::DescentSet;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(alloc::format!("{word:?}")));
            }
            seen[v] = true;
        }
        Ok(Perm(word))
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn descent_set(&self) -> DescentSet {
        DescentSet::of_word(&self.0)
    }

    pub fn des(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// `pos[v - 1]` is the 0-based position of value `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v - 1] = i;
        }
        pos
    }

    /// Lexicographic successor, if any.
    pub fn next_lex(&self) -> Option<Perm> {
        let mut w = self.0.clone();
        let i = w.windows(2).rposition(|p| p[0] < p[1])?;
        let j = w.iter().rposition(|&x| x > w[i]).expect("pivot has a larger successor");
        w.swap(i, j);
        w[i + 1..].reverse();
        Some(Perm(w))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // one-line form; separate with spaces once values reach two digits
        let sep = if self.0.len() > 9 { " " } else { "" };
        let s: Vec<String> = self.0.iter().map(|v| alloc::format!("{v}")).collect();
        f.write_str(&s.join(sep))
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// `"45123"`, or space/comma separated values for `n > 9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<usize> = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(alloc::format!("bad value {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(alloc::format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Perm::new(word)
    }
}

/// All of `S_n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = Some(Perm::identity(n));
    while let Some(p) = cur {
        cur = p.next_lex();
        out.push(p);
    }
    out
}

/// Block index (1-based) of every value of `1..=n` under `λ`.
fn value_blocks(lambda: &Partition) -> Vec<usize> {
    lambda.block_of_values()
}

/// Is `π` λ-restricted: each consecutive block of values appears in
/// increasing order?
pub fn is_restricted(pi: &Perm, lambda: &Partition) -> bool {
    if pi.len() != lambda.size() {
        return false;
    }
    let blocks = value_blocks(lambda);
    let pos = pi.positions();
    (1..pi.len()).all(|v| blocks[v] != blocks[v - 1] || pos[v - 1] < pos[v])
}

/// Every λ-restricted permutation. Each one is determined by the word of
/// block indices it induces, so these are generated from the multiset
/// permutations of `1^{λ_1} 2^{λ_2} ···`.
pub fn restricted_perms(lambda: &Partition) -> Vec<Perm> {
    let n = lambda.size();
    let mut starts = vec![0usize; lambda.len() + 1];
    for (i, &p) in lambda.parts().iter().enumerate() {
        starts[i + 1] = starts[i] + p;
    }
    let mut out = Vec::new();
    let mut word: Vec<usize> = value_blocks(lambda);
    loop {
        let mut next_val = starts.clone();
        let perm: Vec<usize> = word
            .iter()
            .map(|&b| {
                next_val[b - 1] += 1;
                next_val[b - 1]
            })
            .collect();
        out.push(Perm(perm));
        // lexicographic successor of the multiset word
        let Some(i) = word.windows(2).rposition(|p| p[0] < p[1]) else {
            break;
        };
        let j = word.iter().rposition(|&x| x > word[i]).expect("exists");
        word.swap(i, j);
        word[i + 1..].reverse();
    }
    debug_assert!(n == 0 || !out.is_empty());
    out
}

/// `A(λ, k)` for every `k`, index `k`.
pub fn restricted_eulerian_row(lambda: &Partition) -> Vec<u64> {
    let n = lambda.size();
    let mut row = vec![0u64; n.max(1)];
    for p in restricted_perms(lambda) {
        row[p.des()] += 1;
    }
    row
}

/// `A(λ, k)`: λ-restricted permutations with `k` descents.
pub fn restricted_eulerian(lambda: &Partition, k: usize) -> u64 {
    restricted_eulerian_row(lambda).get(k).copied().unwrap_or(0)
}

/// The elementary dual equivalence involution `d_i` for `1 < i < n`.
///
/// The identity when `i` sits positionally between `i - 1` and `i + 1`;
/// otherwise `i` trades places with whichever of `i ± 1` is further from it.
pub fn dual_equiv(pi: &Perm, i: usize) -> Result<Perm> {
    let n = pi.len();
    if i <= 1 || i >= n {
        return Err(Error::OutOfRange(alloc::format!("d_{i} needs 1 < i < {n}")));
    }
    let pos = pi.positions();
    let (lo, mid, hi) = (pos[i - 2], pos[i - 1], pos[i]);
    if (lo < mid && mid < hi) || (hi < mid && mid < lo) {
        return Ok(pi.clone());
    }
    let other = if lo.abs_diff(mid) > hi.abs_diff(mid) { lo } else { hi };
    let mut w = pi.0.clone();
    w.swap(mid, other);
    Ok(Perm(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{eulerian, factorial};
    use crate::partitions::all_partitions;
    use alloc::collections::BTreeSet;
    use num_bigint::BigInt;

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn permutation_basics() {
        assert!(Perm::new(vec![1, 1]).is_err());
        assert!(Perm::new(vec![0, 1]).is_err());
        assert_eq!(perm("45123").to_string(), "45123");
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0).len(), 1);
        let ten: Perm = "10 1 2 3 4 5 6 7 8 9".parse().unwrap();
        assert_eq!(ten.to_string(), "10 1 2 3 4 5 6 7 8 9");
    }

    #[test]
    fn restricted_listing_matches_reference() {
        let lam = Partition::new(vec![3, 2]).unwrap();
        let got: BTreeSet<Perm> = restricted_perms(&lam).into_iter().collect();
        let want: BTreeSet<Perm> = [
            "12345", "12435", "14235", "41235", "12453", "14253", "41253", "14523", "41523",
            "45123",
        ]
        .iter()
        .map(|s| perm(s))
        .collect();
        assert_eq!(got, want);
        // 14253, 41253 and 41523 are the three with two descents
        assert_eq!(restricted_eulerian_row(&lam), vec![1, 6, 3, 0, 0]);
    }

    #[test]
    fn restricted_counts() {
        for n in 1..=7 {
            for lam in all_partitions(n) {
                let perms = restricted_perms(&lam);
                assert_eq!(BigInt::from(perms.len()), factorial(n) / lam.factorial_product());
                assert!(perms.iter().all(|p| is_restricted(p, &lam)));
                let distinct: BTreeSet<&Perm> = perms.iter().collect();
                assert_eq!(distinct.len(), perms.len());
            }
            let row = restricted_eulerian_row(&Partition::column(n));
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(BigInt::from(c), eulerian(n, k));
            }
        }
    }

    #[test]
    fn dual_equivalence_examples() {
        assert_eq!(dual_equiv(&perm("132"), 2).unwrap(), perm("231"));
        assert_eq!(dual_equiv(&perm("123"), 2).unwrap(), perm("123"));
        assert_eq!(dual_equiv(&perm("321"), 2).unwrap(), perm("321"));
        assert!(dual_equiv(&perm("123"), 1).is_err());
        assert!(dual_equiv(&perm("123"), 3).is_err());
    }

    #[test]
    fn dual_equivalence_is_a_descent_preserving_involution() {
        for n in 3..=6 {
            for p in permutations(n) {
                for i in 2..n {
                    let q = dual_equiv(&p, i).unwrap();
                    assert_eq!(dual_equiv(&q, i).unwrap(), p);
                    assert_eq!(q.descent_set(), p.descent_set(), "d_{i}({p}) = {q}");
                }
            }
        }
    }
}
