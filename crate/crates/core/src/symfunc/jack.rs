//! Integral-form Jack polynomials in the monomial basis.
//!
//! For a fixed degree `n` the monic Jack polynomials `P_μ` are obtained by
//! Gram–Schmidt on the monomial basis, taken in ascending lexicographic
//! order, with respect to the inner product `⟨p_λ, p_ρ⟩ = δ_{λρ} z_λ α^{ℓ(λ)}`.
//! The computation is done exactly at the integer points `α = 1, …, n + 2`
//! and each coefficient is recovered by interpolation. Every coefficient of
//! the integral form `J_μ` is a polynomial of degree at most `n` with integer
//! coefficients; an interpolant that is not is reported as an integrity
//! failure.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Basis, SymExpansion};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, AlphaPoly};
use crate::partitions::{all_partitions, Partition};

/// All `J_μ^(α)` of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JackTable {
    n: usize,
    /// Partitions of `n` in descending lexicographic order.
    partitions: Vec<Partition>,
    /// `rows[i][j] = [m_{partitions[j]}] J_{partitions[i]}`.
    rows: Vec<Vec<AlphaPoly>>,
}

impl JackTable {
    pub fn build(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("Jack tables start at degree 1".into()));
        }
        let desc = all_partitions(n);
        let size = desc.len();
        // work in ascending order, index 0 = 1^n
        let asc: Vec<Partition> = desc.iter().rev().cloned().collect();
        let m_in_p = monomial_in_power_sums(&asc);
        let ells: Vec<u32> = asc.iter().map(|p| p.len() as u32).collect();
        let zs: Vec<BigRational> = asc.iter().map(|p| BigRational::from_integer(p.z())).collect();

        let points: Vec<i64> = (1..=n as i64 + 2).collect();
        // samples[i][j][t]: coefficient of m_asc[j] in J_asc[i] at α = points[t]
        let mut samples = vec![vec![Vec::with_capacity(points.len()); size]; size];
        let n_fact = BigRational::from_integer(factorial(n));
        for &a in &points {
            let alpha = BigRational::from_integer(BigInt::from(a));
            let weights: Vec<BigRational> = zs
                .iter()
                .zip(&ells)
                .map(|(z, &l)| z * num_traits::pow(alpha.clone(), l as usize))
                .collect();
            let gram = gram_matrix(&m_in_p, &weights);
            let monic = gram_schmidt(&gram)?;
            for (i, p) in monic.iter().enumerate() {
                let scale = &n_fact / &p[0];
                for j in 0..size {
                    samples[i][j].push(&p[j] * &scale);
                }
            }
        }

        let xs: Vec<BigRational> = points.iter().map(|&a| BigRational::from_integer(BigInt::from(a))).collect();
        let mut rows = vec![vec![AlphaPoly::zero(); size]; size];
        for i in 0..size {
            for j in 0..size {
                let poly = AlphaPoly::interpolate(&xs, &samples[i][j]);
                if poly.degree().is_some_and(|d| d > n) || !poly.has_integer_coeffs() {
                    return Err(Error::Integrity(alloc::format!(
                        "coefficient of m_{} in J_{} is not an integer polynomial of degree <= {n}",
                        asc[j], asc[i]
                    )));
                }
                rows[size - 1 - i][size - 1 - j] = poly;
            }
        }
        Ok(JackTable { n, partitions: desc, rows })
    }

    /// Reassemble a table from stored rows, e.g. read back from disk. Rows are
    /// keyed by `μ`; each maps `λ` to the coefficient of `m_λ`.
    pub fn from_entries(n: usize, entries: &BTreeMap<Partition, BTreeMap<Partition, AlphaPoly>>) -> Result<Self> {
        let partitions = all_partitions(n);
        let mut rows = Vec::with_capacity(partitions.len());
        for mu in &partitions {
            let entry = entries
                .get(mu)
                .ok_or_else(|| Error::Integrity(alloc::format!("missing J_{mu} in degree {n}")))?;
            if let Some(bad) = entry.keys().find(|l| l.size() != n) {
                return Err(Error::SizeMismatch { left: bad.size(), right: n });
            }
            rows.push(
                partitions
                    .iter()
                    .map(|l| entry.get(l).cloned().unwrap_or_else(AlphaPoly::zero))
                    .collect(),
            );
        }
        if entries.len() != partitions.len() {
            return Err(Error::Integrity(alloc::format!("unexpected partitions in degree {n}")));
        }
        Ok(JackTable { n, partitions, rows })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Partitions of `n`, descending lexicographic.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    fn index(&self, mu: &Partition) -> Result<usize> {
        if mu.size() != self.n {
            return Err(Error::SizeMismatch { left: mu.size(), right: self.n });
        }
        Ok(self.partitions.iter().position(|p| p == mu).expect("every partition of n is listed"))
    }

    /// `J_μ` in the monomial basis.
    pub fn monomial(&self, mu: &Partition) -> Result<SymExpansion> {
        let i = self.index(mu)?;
        SymExpansion::from_terms(
            self.n,
            Basis::Monomial,
            self.partitions.iter().cloned().zip(self.rows[i].iter().cloned()),
        )
    }

    /// Every `(μ, J_μ)`.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, SymExpansion)> + '_ {
        self.partitions
            .iter()
            .map(move |mu| (mu, self.monomial(mu).expect("own partition")))
    }
}

/// `J_μ^(α)` in the monomial basis.
pub fn jack_monomial(mu: &Partition) -> Result<SymExpansion> {
    JackTable::build(mu.size())?.monomial(mu)
}

/// Number of maps `f` from the parts of `lambda` to the parts of `mu` with
/// `Σ_{f(i) = j} λ_i = μ_j`, i.e. the coefficient of `m_μ` in `p_λ`.
fn power_sum_coefficient(lambda: &[usize], mu: &[usize]) -> u64 {
    fn rec(parts: &[usize], caps: &mut Vec<usize>, memo: &mut BTreeMap<(usize, Vec<usize>), u64>) -> u64 {
        let Some((&first, rest)) = parts.split_first() else {
            return u64::from(caps.iter().all(|&c| c == 0));
        };
        let mut key_caps = caps.clone();
        key_caps.sort_unstable();
        let key = (parts.len(), key_caps);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for j in 0..caps.len() {
            if caps[j] >= first {
                caps[j] -= first;
                total += rec(rest, caps, memo);
                caps[j] += first;
            }
        }
        memo.insert(key, total);
        total
    }
    let mut caps = mu.to_vec();
    rec(lambda, &mut caps, &mut BTreeMap::new())
}

/// `minv[a][b]`: coefficient of `p_{asc[b]}` in `m_{asc[a]}`. The matrix
/// of `p` in terms of `m` is upper triangular in ascending order, so its
/// inverse is found by back substitution.
fn monomial_in_power_sums(asc: &[Partition]) -> Vec<Vec<BigRational>> {
    let size = asc.len();
    let l: Vec<Vec<BigRational>> = asc
        .iter()
        .map(|lam| {
            asc.iter()
                .map(|mu| BigRational::from_integer(BigInt::from(power_sum_coefficient(lam.parts(), mu.parts()))))
                .collect()
        })
        .collect();
    // solve X L = I row by row is awkward; solve L X = I column by column
    let mut inv = vec![vec![BigRational::zero(); size]; size];
    for col in 0..size {
        for row in (0..size).rev() {
            let mut acc = if row == col { BigRational::one() } else { BigRational::zero() };
            for k in row + 1..size {
                if !l[row][k].is_zero() && !inv[k][col].is_zero() {
                    acc -= &l[row][k] * &inv[k][col];
                }
            }
            inv[row][col] = acc / &l[row][row];
        }
    }
    inv
}

fn gram_matrix(m_in_p: &[Vec<BigRational>], weights: &[BigRational]) -> Vec<Vec<BigRational>> {
    let size = m_in_p.len();
    let mut g = vec![vec![BigRational::zero(); size]; size];
    for a in 0..size {
        for b in a..size {
            let mut acc = BigRational::zero();
            for k in b.max(a)..size {
                if !m_in_p[a][k].is_zero() && !m_in_p[b][k].is_zero() {
                    acc += &m_in_p[a][k] * &m_in_p[b][k] * &weights[k];
                }
            }
            g[b][a] = acc.clone();
            g[a][b] = acc;
        }
    }
    g
}

/// Orthogonalize the monomial basis in index order; `out[i]` is the monic
/// vector with leading entry at index `i`.
fn gram_schmidt(gram: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
    let size = gram.len();
    let mut basis: Vec<Vec<BigRational>> = Vec::with_capacity(size);
    let mut norms: Vec<BigRational> = Vec::with_capacity(size);
    for i in 0..size {
        let mut v = vec![BigRational::zero(); size];
        v[i] = BigRational::one();
        for (j, pj) in basis.iter().enumerate() {
            let ip: BigRational = (0..=j).map(|k| &pj[k] * &gram[i][k]).sum();
            if ip.is_zero() {
                continue;
            }
            let c = ip / &norms[j];
            for k in 0..=j {
                if !pj[k].is_zero() {
                    v[k] -= &c * &pj[k];
                }
            }
        }
        let norm: BigRational = (0..=i).map(|k| &v[k] * &gram[i][k]).sum();
        if norm.is_zero() {
            return Err(Error::Integrity("degenerate inner product".into()));
        }
        norms.push(norm);
        basis.push(v);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::all_partitions;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn power_sum_matrix_entries() {
        // p_{21} = m_3 + m_21
        assert_eq!(power_sum_coefficient(&[2, 1], &[3]), 1);
        assert_eq!(power_sum_coefficient(&[2, 1], &[2, 1]), 1);
        // p_{111} = 6 m_111 + 3 m_21 + m_3
        assert_eq!(power_sum_coefficient(&[1, 1, 1], &[1, 1, 1]), 6);
        assert_eq!(power_sum_coefficient(&[1, 1, 1], &[2, 1]), 3);
        assert_eq!(power_sum_coefficient(&[1, 1, 1], &[3]), 1);
        assert_eq!(power_sum_coefficient(&[3], &[2, 1]), 0);
    }

    #[test]
    fn degree_two() {
        let j2 = jack_monomial(&part("2")).unwrap();
        assert_eq!(j2.coeff(&part("2")), AlphaPoly::from_ints(&[1, 1]));
        assert_eq!(j2.coeff(&part("1,1")), AlphaPoly::from_int(2));
        let j11 = jack_monomial(&part("1,1")).unwrap();
        assert_eq!(j11.coeff(&part("2")), AlphaPoly::zero());
        assert_eq!(j11.coeff(&part("1,1")), AlphaPoly::from_int(2));
    }

    #[test]
    fn column_is_n_factorial_times_m_1n() {
        for n in 1..=6 {
            let j = jack_monomial(&Partition::column(n)).unwrap();
            assert_eq!(j.terms().len(), 1);
            assert_eq!(j.coeff(&Partition::column(n)), AlphaPoly::from_bigint(factorial(n)));
        }
    }

    #[test]
    fn leading_coefficient_is_hook_product() {
        // [m_μ] J_μ = Π_s (α·arm(s) + leg(s) + 1)
        for n in 1..=6 {
            let table = JackTable::build(n).unwrap();
            for mu in all_partitions(n) {
                let want: AlphaPoly = mu
                    .cells()
                    .map(|c| {
                        let (a, l) = (mu.arm(c).unwrap() as i64, mu.leg(c).unwrap() as i64);
                        AlphaPoly::from_ints(&[l + 1, a])
                    })
                    .fold(AlphaPoly::one(), |acc, f| &acc * &f);
                assert_eq!(table.monomial(&mu).unwrap().coeff(&mu), want, "{mu}");
            }
        }
    }

    #[test]
    fn alpha_one_is_hook_product_times_schur() {
        // J_μ^(1) = H_μ s_μ, so its monomial coefficients are H_μ K_{μλ}
        use crate::tableaux::kostka;
        for n in 1..=6 {
            let table = JackTable::build(n).unwrap();
            for mu in all_partitions(n) {
                let hooks: BigInt = mu.cells().map(|c| BigInt::from(mu.hook_length(c).unwrap())).product();
                let j = table.monomial(&mu).unwrap();
                for lam in all_partitions(n) {
                    let want = &hooks * BigInt::from(kostka(&mu, &lam).unwrap());
                    assert_eq!(j.coeff(&lam).eval_int(1), BigRational::from_integer(want));
                }
            }
        }
    }

    #[test]
    fn round_trip_through_entries() {
        let table = JackTable::build(4).unwrap();
        let entries: BTreeMap<Partition, BTreeMap<Partition, AlphaPoly>> = table
            .entries()
            .map(|(mu, e)| (mu.clone(), e.terms().clone()))
            .collect();
        assert_eq!(JackTable::from_entries(4, &entries).unwrap(), table);
        let mut missing = entries.clone();
        missing.remove(&part("2,2"));
        assert!(JackTable::from_entries(4, &missing).is_err());
    }
}
