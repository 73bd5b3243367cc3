use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::{Basis, SymExpansion};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, AlphaPoly};
use crate::partitions::{all_partitions, Partition};
use crate::tableaux::{descent_set, generate_syt, qyt_counts, DescentSet};
use crate::words::{f_beta, permutations, rsk, set_partitions};

/// `Σ_σ c_σ F_σ` over subsets `σ ⊆ {1, …, n-1}`.
///
/// Coefficients are univariate polynomials. They are read in `α` for Jack
/// expansions and in a marker variable `t` for the descent generating
/// functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymExpansion {
    n: usize,
    terms: BTreeMap<DescentSet, AlphaPoly>,
}

impl QSymExpansion {
    pub fn zero(n: usize) -> Self {
        QSymExpansion { n, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<DescentSet, AlphaPoly> {
        &self.terms
    }

    pub fn coeff(&self, sigma: &DescentSet) -> AlphaPoly {
        self.terms.get(sigma).cloned().unwrap_or_else(AlphaPoly::zero)
    }

    pub fn add_term(&mut self, sigma: DescentSet, c: &AlphaPoly) -> Result<()> {
        if sigma.n() != self.n {
            return Err(Error::SizeMismatch { left: sigma.n(), right: self.n });
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(sigma).or_insert_with(AlphaPoly::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }
}

impl fmt::Display for QSymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (sigma, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) F{sigma}")?;
        }
        Ok(())
    }
}

/// For each descent set, the number of standard tableaux of `shape` having it.
pub fn syt_descent_counts(shape: &Partition) -> BTreeMap<DescentSet, u64> {
    let mut out = BTreeMap::new();
    for t in generate_syt(shape) {
        *out.entry(descent_set(&t).expect("standard")).or_insert(0) += 1;
    }
    out
}

/// `s_λ = Σ_{T ∈ SYT(λ)} F_{Des(T)}`, extended linearly.
pub fn schur_to_fundamental(e: &SymExpansion) -> Result<QSymExpansion> {
    if e.basis() != Basis::Schur {
        return Err(Error::WrongBasis("Schur"));
    }
    let mut out = QSymExpansion::zero(e.degree());
    for (lam, c) in e.terms() {
        for (sigma, count) in syt_descent_counts(lam) {
            out.add_term(sigma, &c.scale_int(&BigInt::from(count)))?;
        }
    }
    Ok(out)
}

fn t_power(k: usize) -> AlphaPoly {
    AlphaPoly::monomial(num_rational::BigRational::from_integer(BigInt::from(1)), k)
}

/// `Σ_{π ∈ S_n} t^{des(π)} F_{Des(P(π))}`.
pub fn theorem8_lhs(n: usize) -> QSymExpansion {
    let mut out = QSymExpansion::zero(n);
    for pi in permutations(n) {
        let (p, _) = rsk(&pi);
        out.add_term(descent_set(&p).expect("standard"), &t_power(pi.des()))
            .expect("same degree");
    }
    out
}

/// `Σ_μ Σ_k QYT_{=k+1}(μ) t^k s_μ`, expanded in the fundamental basis.
pub fn theorem8_rhs(n: usize) -> QSymExpansion {
    let mut out = QSymExpansion::zero(n);
    for mu in all_partitions(n) {
        let gen = AlphaPoly::from_bigints(qyt_counts(&mu).into_iter().map(BigInt::from));
        for (sigma, count) in syt_descent_counts(&mu) {
            out.add_term(sigma, &gen.scale_int(&BigInt::from(count)))
                .expect("same degree");
        }
    }
    out
}

/// `n! Σ_{π ∈ S_n} C(α + n - 1 - des(π), n) F_{Des(P(π))}`.
pub fn rsk_fundamental_expansion(n: usize) -> QSymExpansion {
    let n_fact = factorial(n);
    let mut out = QSymExpansion::zero(n);
    for pi in permutations(n) {
        let (p, _) = rsk(&pi);
        let c = AlphaPoly::binomial_shifted((n - 1 - pi.des()) as i64, n).scale_int(&n_fact);
        out.add_term(descent_set(&p).expect("standard"), &c).expect("same degree");
    }
    out
}

/// `Σ_{π ∈ S_n, β ⊢ [n]} C(α, |β|)·|β|! F_{Des(P(f_β(π)))}`.
pub fn f_beta_expansion(n: usize) -> QSymExpansion {
    let betas = set_partitions(n);
    let falling: Vec<AlphaPoly> = (0..=n).map(AlphaPoly::falling_factorial).collect();
    // tally first, one polynomial per (σ, |β|)
    let mut tally: BTreeMap<(DescentSet, usize), u64> = BTreeMap::new();
    for pi in permutations(n) {
        for beta in &betas {
            let w = f_beta(&pi, beta).expect("same size");
            let (p, _) = rsk(&w);
            *tally.entry((descent_set(&p).expect("standard"), beta.len())).or_insert(0) += 1;
        }
    }
    let mut out = QSymExpansion::zero(n);
    for ((sigma, blocks), count) in tally {
        out.add_term(sigma, &falling[blocks].scale_int(&BigInt::from(count)))
            .expect("same degree");
    }
    out
}
