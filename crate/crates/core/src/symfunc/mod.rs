//! Symmetric functions of a fixed degree with coefficients in `Q[α]`: Jack
//! polynomials, the tilde transform, monomial/Schur conversion and the
//! fundamental quasisymmetric expansion.

mod jack;
mod qsym;

pub use jack::{jack_monomial, JackTable};
pub use qsym::{
    rsk_fundamental_expansion, f_beta_expansion, schur_to_fundamental, syt_descent_counts,
    theorem8_lhs, theorem8_rhs, QSymExpansion,
};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactmath::{factorial, tilde_reverse, AlphaPoly};
use crate::partitions::{all_partitions, Partition};
use crate::tableaux::{kostka, qyt_counts};
use crate::words::restricted_eulerian_row;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    Schur,
}

impl Basis {
    fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
        }
    }
}

/// `Σ_λ c_λ(α) b_λ` over partitions `λ ⊢ n` in one basis. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpansion {
    n: usize,
    basis: Basis,
    terms: BTreeMap<Partition, AlphaPoly>,
}

impl SymExpansion {
    pub fn zero(n: usize, basis: Basis) -> Self {
        SymExpansion { n, basis, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(n: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, AlphaPoly)>,
    {
        let mut e = Self::zero(n, basis);
        for (lam, c) in terms {
            e.add_term(lam, &c)?;
        }
        Ok(e)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, AlphaPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> AlphaPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(AlphaPoly::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: &AlphaPoly) -> Result<()> {
        if lambda.size() != self.n {
            return Err(Error::SizeMismatch { left: lambda.size(), right: self.n });
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(lambda).or_insert_with(AlphaPoly::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.n, self.basis);
        for (lam, v) in &self.terms {
            out.add_term(lam.clone(), &v.scale_int(c)).expect("same degree");
        }
        out
    }

    fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::WrongBasis(match basis {
                Basis::Monomial => "monomial",
                Basis::Schur => "Schur",
            }))
        }
    }
}

impl fmt::Display for SymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lam, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) {}[{lam}]", self.basis.symbol())?;
        }
        Ok(())
    }
}

/// Kostka numbers `K_{νλ}` for all `ν, λ ⊢ n`, rows and columns in
/// descending lexicographic order.
#[derive(Clone, Debug)]
pub struct KostkaMatrix {
    partitions: Vec<Partition>,
    k: Vec<Vec<u64>>,
}

impl KostkaMatrix {
    pub fn new(n: usize) -> Self {
        let partitions = all_partitions(n);
        let k = partitions
            .iter()
            .map(|nu| partitions.iter().map(|lam| kostka(nu, lam).expect("same size")).collect())
            .collect();
        KostkaMatrix { partitions, k }
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    fn check(&self, e: &SymExpansion) -> Result<()> {
        let n = self.partitions.first().map_or(0, Partition::size);
        if e.n != n {
            return Err(Error::SizeMismatch { left: e.n, right: n });
        }
        Ok(())
    }

    /// Solve `Σ_ν d_ν K_{νλ} = e_λ` from the top of dominance down.
    pub fn to_schur(&self, e: &SymExpansion) -> Result<SymExpansion> {
        e.expect_basis(Basis::Monomial)?;
        self.check(e)?;
        let mut d: Vec<AlphaPoly> = Vec::with_capacity(self.partitions.len());
        for (j, lam) in self.partitions.iter().enumerate() {
            let mut c = e.coeff(lam);
            for (i, di) in d.iter().enumerate() {
                let k = self.k[i][j];
                if k != 0 && !di.is_zero() {
                    c -= &di.scale_int(&BigInt::from(k));
                }
            }
            d.push(c);
        }
        SymExpansion::from_terms(e.n, Basis::Schur, self.partitions.iter().cloned().zip(d))
    }

    /// `s_ν = Σ_λ K_{νλ} m_λ`.
    pub fn to_monomial(&self, e: &SymExpansion) -> Result<SymExpansion> {
        e.expect_basis(Basis::Schur)?;
        self.check(e)?;
        let mut out = SymExpansion::zero(e.n, Basis::Monomial);
        for (i, nu) in self.partitions.iter().enumerate() {
            let c = e.coeff(nu);
            if c.is_zero() {
                continue;
            }
            for (j, lam) in self.partitions.iter().enumerate() {
                if self.k[i][j] != 0 {
                    out.add_term(lam.clone(), &c.scale_int(&BigInt::from(self.k[i][j])))?;
                }
            }
        }
        Ok(out)
    }
}

pub fn monomial_to_schur(e: &SymExpansion) -> Result<SymExpansion> {
    KostkaMatrix::new(e.n).to_schur(e)
}

pub fn schur_to_monomial(e: &SymExpansion) -> Result<SymExpansion> {
    KostkaMatrix::new(e.n).to_monomial(e)
}

/// `α^n · e(1/α)`, coefficientwise.
pub fn tilde(e: &SymExpansion) -> Result<SymExpansion> {
    let mut out = SymExpansion::zero(e.n, e.basis);
    for (lam, c) in &e.terms {
        out.add_term(lam.clone(), &tilde_reverse(c, e.n)?)?;
    }
    Ok(out)
}

/// `J_(n)` from the product formula: the coefficient of `m_λ` is
/// `n!/λ! · Π_{s ∈ λ} (α·arm(s) + 1)`.
pub fn jack_row_closed_form(n: usize) -> Result<SymExpansion> {
    if n == 0 {
        return Err(Error::OutOfRange("degree must be positive".into()));
    }
    let n_fact = factorial(n);
    let terms = all_partitions(n).into_iter().map(|lam| {
        let prod = lam
            .cells()
            .map(|c| AlphaPoly::from_ints(&[1, lam.arm(c).expect("own cell") as i64]))
            .fold(AlphaPoly::one(), |acc, f| &acc * &f);
        let c = prod.scale_int(&(&n_fact / lam.factorial_product()));
        (lam, c)
    });
    SymExpansion::from_terms(n, Basis::Monomial, terms)
}

/// `J̃_μ` in the Schur basis, read from a prepared table.
pub fn tilde_schur_expansion(table: &JackTable, kostka: &KostkaMatrix, mu: &Partition) -> Result<SymExpansion> {
    kostka.to_schur(&tilde(&table.monomial(mu)?)?)
}

/// `⟨J̃_μ, s_λ⟩`.
pub fn schur_coeff(mu: &Partition, lambda: &Partition) -> Result<AlphaPoly> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch { left: mu.size(), right: lambda.size() });
    }
    let n = mu.size();
    let table = JackTable::build(n)?;
    Ok(tilde_schur_expansion(&table, &KostkaMatrix::new(n), mu)?.coeff(lambda))
}

/// `Π_{s ∈ μ} (arm(s) + α·(leg(s) + 1))`.
pub fn diagonal_product(mu: &Partition) -> AlphaPoly {
    mu.cells()
        .map(|c| {
            let arm = mu.arm(c).expect("own cell") as i64;
            let leg = mu.leg(c).expect("own cell") as i64;
            AlphaPoly::from_ints(&[arm, leg + 1])
        })
        .fold(AlphaPoly::one(), |acc, f| &acc * &f)
}

/// `Σ_λ Σ_k A(λ, k) C(α + n - 1 - k, n) m_λ`.
pub fn restricted_monomial_side(n: usize) -> Result<SymExpansion> {
    let terms = all_partitions(n).into_iter().map(|lam| {
        let c: AlphaPoly = restricted_eulerian_row(&lam)
            .iter()
            .enumerate()
            .map(|(k, &a)| AlphaPoly::binomial_shifted((n - 1 - k) as i64, n).scale_int(&BigInt::from(a)))
            .sum();
        (lam, c)
    });
    SymExpansion::from_terms(n, Basis::Monomial, terms)
}

/// `Σ_ν Σ_k QYT_{=k+1}(ν) C(α + n - 1 - k, n) s_ν`.
pub fn qyt_schur_side(n: usize) -> Result<SymExpansion> {
    let terms = all_partitions(n).into_iter().map(|nu| {
        let c: AlphaPoly = qyt_counts(&nu)
            .iter()
            .enumerate()
            .map(|(k, &q)| AlphaPoly::binomial_shifted((n - 1 - k) as i64, n).scale_int(&BigInt::from(q)))
            .sum();
        (nu, c)
    });
    SymExpansion::from_terms(n, Basis::Schur, terms)
}
