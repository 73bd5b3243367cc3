//! Conversions between the power basis and the two binomial bases
//! `{C(α + k, n)}_{k=0}^{n-1}` ("shifted") and `{C(α, k)·k!}_{k=1}^{n}`
//! ("falling"). Both bases span the polynomials of degree at most `n` that
//! vanish at `α = 0`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::numbers::{binomial, factorial, stirling2_row};
use super::poly::AlphaPoly;
use crate::error::{Error, Result};

fn check_representable(p: &AlphaPoly, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("binomial basis degree must be positive".into()));
    }
    if let Some(d) = p.degree() {
        if d > n {
            return Err(Error::DegreeTooLarge { degree: d, bound: n });
        }
    }
    if !p.coeff(0).is_zero() {
        return Err(Error::NotRepresentable("nonzero constant term"));
    }
    Ok(())
}

/// Coefficients `a_0..a_{n-1}` with `p(α) = Σ a_k C(α + k, n)`.
///
/// At `α = j` only the terms with `k ≥ n - j` survive and the newest one has
/// coefficient `C(n, n) = 1`, so evaluating at `α = 1, 2, …, n` gives a unit
/// triangular system.
pub fn to_shifted_basis(p: &AlphaPoly, n: usize) -> Result<Vec<BigRational>> {
    check_representable(p, n)?;
    let mut a = vec![BigRational::zero(); n];
    for j in 1..=n {
        let target = n - j;
        let mut value = p.eval_int(j as i64);
        for (k, ak) in a.iter().enumerate().skip(target + 1) {
            if !ak.is_zero() {
                value -= ak * BigRational::from_integer(binomial(j + k, n));
            }
        }
        a[target] = value;
    }
    Ok(a)
}

/// Coefficients indexed by subscript: entry `j` is `b_j`, and
/// `p(α) = Σ_{k=1}^{n} b_{n-k} C(α, k)·k!`.
///
/// Each power `α^m` expands as `Σ_k S(m, k)·α(α-1)···(α-k+1)`.
pub fn to_falling_basis(p: &AlphaPoly, n: usize) -> Result<Vec<BigRational>> {
    check_representable(p, n)?;
    let mut b = vec![BigRational::zero(); n];
    for (m, c) in p.coeffs().iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        for (k, s) in stirling2_row(m).into_iter().enumerate().skip(1) {
            if !s.is_zero() {
                b[n - k] += c * BigRational::from_integer(s);
            }
        }
    }
    Ok(b)
}

/// Falling-basis coefficients from shifted-basis ones through
/// `C(α + j, n) = Σ_i C(α, i) C(j, n - i)`, i.e.
/// `k!·b_{n-k} = Σ_j a_j C(j, n - k)`.
pub fn shifted_to_falling(a: &[BigRational]) -> Vec<BigRational> {
    let n = a.len();
    let mut b = vec![BigRational::zero(); n];
    for k in 1..=n {
        let mut acc = BigRational::zero();
        for (j, aj) in a.iter().enumerate() {
            if !aj.is_zero() {
                acc += aj * BigRational::from_integer(binomial(j, n - k));
            }
        }
        b[n - k] = acc / BigRational::from_integer(factorial(k));
    }
    b
}

/// `Σ a_k C(α + k, n)`.
pub fn from_shifted(a: &[BigRational], n: usize) -> AlphaPoly {
    a.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| AlphaPoly::binomial_shifted(k as i64, n).scale(c))
        .sum()
}

/// `Σ_{k=1}^{n} b_{n-k} C(α, k)·k!`.
pub fn from_falling(b: &[BigRational], n: usize) -> AlphaPoly {
    (1..=n)
        .filter(|&k| !b[n - k].is_zero())
        .map(|k| AlphaPoly::falling_factorial(k).scale(&b[n - k]))
        .sum()
}

/// Both binomial-basis coordinate vectors of one polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialCoeffs {
    pub n: usize,
    /// `a_0..a_{n-1}`
    pub shifted: Vec<BigRational>,
    /// `b_0..b_{n-1}`, indexed by subscript.
    pub falling: Vec<BigRational>,
}

impl BinomialCoeffs {
    pub fn expand(p: &AlphaPoly, n: usize) -> Result<Self> {
        Ok(BinomialCoeffs {
            n,
            shifted: to_shifted_basis(p, n)?,
            falling: to_falling_basis(p, n)?,
        })
    }

    /// Build from shifted coordinates alone, deriving the falling ones.
    pub fn from_shifted(shifted: Vec<BigRational>) -> Result<Self> {
        if shifted.is_empty() {
            return Err(Error::OutOfRange("binomial basis degree must be positive".into()));
        }
        let falling = shifted_to_falling(&shifted);
        Ok(BinomialCoeffs {
            n: shifted.len(),
            shifted,
            falling,
        })
    }

    pub fn shifted_integers(&self) -> Option<Vec<BigInt>> {
        ints(&self.shifted)
    }

    pub fn falling_integers(&self) -> Option<Vec<BigInt>> {
        ints(&self.falling)
    }

    /// `Σ_{k=0}^{n} a_k z^k` with `a_n = 0`.
    pub fn shifted_generating_poly(&self) -> AlphaPoly {
        AlphaPoly::from_coeffs(self.shifted.clone())
    }

    /// `Σ_{k=0}^{n} b_{n-k} z^k` with the `k = 0` coefficient `b_n = 0`.
    pub fn falling_generating_poly(&self) -> AlphaPoly {
        let n = self.n;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for k in 1..=n {
            coeffs[k] = self.falling[n - k].clone();
        }
        AlphaPoly::from_coeffs(coeffs)
    }
}

fn ints(v: &[BigRational]) -> Option<Vec<BigInt>> {
    v.iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}
