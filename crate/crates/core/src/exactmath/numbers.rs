//! Classical integer sequences: factorials, binomials, Eulerian, Stirling and
//! Bell numbers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `C(n, k)` for integer `n` (possibly negative upper entry is not supported;
/// returns zero when `k > n`).
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Row `n` of the Eulerian triangle: entry `k` counts permutations of `n`
/// with exactly `k` descents. Row 0 is `[1]`.
pub fn eulerian_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        // A(m, k) = (k + 1) A(m-1, k) + (m - k) A(m-1, k-1)
        let mut next = vec![BigInt::zero(); m];
        for (k, slot) in next.iter_mut().enumerate() {
            let stay = row.get(k).map(|a| a * BigInt::from(k + 1)).unwrap_or_default();
            let grow = if k > 0 {
                row.get(k - 1).map(|a| a * BigInt::from(m - k)).unwrap_or_default()
            } else {
                BigInt::zero()
            };
            *slot = stay + grow;
        }
        row = next;
    }
    row
}

/// The Eulerian number `A(n, k)`.
pub fn eulerian(n: usize, k: usize) -> BigInt {
    eulerian_row(n).get(k).cloned().unwrap_or_default()
}

/// Row `n` of the Stirling triangle of the second kind, indices `0..=n`.
pub fn stirling2_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        // S(m, k) = k S(m-1, k) + S(m-1, k-1)
        let mut next = vec![BigInt::zero(); m + 1];
        for (k, slot) in next.iter_mut().enumerate().skip(1) {
            let stay = row.get(k).map(|s| s * BigInt::from(k)).unwrap_or_default();
            *slot = stay + &row[k - 1];
        }
        row = next;
    }
    row
}

/// The Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    stirling2_row(n).get(k).cloned().unwrap_or_default()
}

pub fn bell(n: usize) -> BigInt {
    stirling2_row(n).into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    // Oracle: all permutations of 0..n by recursive insertion.
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    // Oracle: restricted growth strings enumerate set partitions.
    fn count_set_partitions_by_blocks(n: usize) -> Vec<usize> {
        let mut counts = vec![0; n + 1];
        fn rec(pos: usize, n: usize, max: usize, rgs: &mut Vec<usize>, counts: &mut [usize]) {
            if pos == n {
                let blocks = if n == 0 { 0 } else { max + 1 };
                counts[blocks] += 1;
                return;
            }
            let top = if pos == 0 { 0 } else { max + 1 };
            for v in 0..=top {
                rgs.push(v);
                rec(pos + 1, n, max.max(v), rgs, counts);
                rgs.pop();
            }
        }
        rec(0, n, 0, &mut Vec::new(), &mut counts);
        counts
    }

    #[test]
    fn eulerian_matches_descent_enumeration() {
        for n in 0..=7 {
            let mut counts = vec![0usize; n.max(1)];
            for p in permutations(n) {
                let des = p.windows(2).filter(|w| w[0] > w[1]).count();
                counts[des] += 1;
            }
            for (k, &c) in counts.iter().enumerate() {
                assert_eq!(eulerian(n, k), BigInt::from(c), "A({n},{k})");
            }
        }
        assert_eq!(eulerian(3, 1), BigInt::from(4));
        for n in 1..10 {
            assert_eq!(eulerian(n, 0), BigInt::one());
            assert_eq!(eulerian_row(n).iter().sum::<BigInt>(), factorial(n));
        }
    }

    #[test]
    fn stirling_matches_set_partition_enumeration() {
        for n in 0..=8 {
            let counts = count_set_partitions_by_blocks(n);
            for (k, &c) in counts.iter().enumerate() {
                assert_eq!(stirling2(n, k), BigInt::from(c), "S({n},{k})");
            }
            assert_eq!(bell(n), BigInt::from(counts.iter().sum::<usize>()));
        }
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        for n in 0..10 {
            assert_eq!(stirling2(n, n), BigInt::one());
        }
        assert_eq!(bell(5), BigInt::from(52));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }
}
