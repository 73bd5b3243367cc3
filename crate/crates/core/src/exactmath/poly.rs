//! Exact univariate polynomials with rational coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in one variable (usually the Jack parameter α) with exact
/// rational coefficients. `coeffs[i]` is the coefficient of `α^i`; the last
/// stored coefficient is never zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlphaPoly {
    coeffs: Vec<BigRational>,
}

impl AlphaPoly {
    pub fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The polynomial `α`.
    pub fn alpha() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::constant(BigRational::from_integer(c))
    }

    /// `c · α^deg`
    pub fn monomial(c: BigRational, deg: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_bigints<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    /// The monic linear factor `α + c`.
    pub fn linear(c: BigRational) -> Self {
        Self::from_coeffs(vec![c, BigRational::one()])
    }

    /// `α + c` for an integer shift.
    pub fn shifted_alpha(c: i64) -> Self {
        Self::from_ints(&[c, 1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    /// Coefficient of `α^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &AlphaPoly) -> Result<(AlphaPoly, AlphaPoly)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &AlphaPoly) -> Result<AlphaPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Integrity("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &AlphaPoly, b: &AlphaPoly) -> AlphaPoly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("divisor is nonzero");
            x = y;
            y = r;
        }
        x.monic()
    }

    /// `α^n · p(1/α)`: coefficient `i` of the result is coefficient `n - i`
    /// of `self`.
    pub fn reverse(&self, n: usize) -> Result<AlphaPoly> {
        match self.degree() {
            None => Ok(Self::zero()),
            Some(d) if d > n => Err(Error::DegreeTooLarge { degree: d, bound: n }),
            Some(_) => {
                let mut coeffs = vec![BigRational::zero(); n + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    coeffs[n - i] = c.clone();
                }
                Ok(Self::from_coeffs(coeffs))
            }
        }
    }

    /// The coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// `(α + shift)(α + shift - 1)···(α + shift - k + 1)`.
    pub fn falling_factorial_shifted(shift: i64, k: usize) -> AlphaPoly {
        let mut acc = Self::one();
        for j in 0..k as i64 {
            acc = &acc * &Self::shifted_alpha(shift - j);
        }
        acc
    }

    /// `α(α - 1)···(α - k + 1) = C(α, k)·k!`.
    pub fn falling_factorial(k: usize) -> AlphaPoly {
        Self::falling_factorial_shifted(0, k)
    }

    /// The binomial coefficient `C(α + k, n)` as a polynomial in α.
    pub fn binomial_shifted(k: i64, n: usize) -> AlphaPoly {
        let denom = super::numbers::factorial(n);
        Self::falling_factorial_shifted(k, n)
            .scale(&BigRational::new(BigInt::one(), denom))
    }

    /// Lagrange interpolation through `(xs[i], ys[i])`; the `xs` must be
    /// distinct.
    pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> AlphaPoly {
        assert_eq!(xs.len(), ys.len(), "interpolation needs paired samples");
        // Newton divided differences.
        let m = xs.len();
        let mut table: Vec<BigRational> = ys.to_vec();
        for level in 1..m {
            for i in (level..m).rev() {
                table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
            }
        }
        let mut acc = AlphaPoly::zero();
        for i in (0..m).rev() {
            acc = &(&acc * &Self::linear(-xs[i].clone())) + &Self::constant(table[i].clone());
        }
        acc
    }
}

impl fmt::Display for AlphaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}")?;
                    }
                    f.write_str("α")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn add(self, rhs: &'a AlphaPoly) -> AlphaPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        AlphaPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn sub(self, rhs: &'a AlphaPoly) -> AlphaPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        AlphaPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a AlphaPoly> for &'a AlphaPoly {
    type Output = AlphaPoly;
    fn mul(self, rhs: &'a AlphaPoly) -> AlphaPoly {
        if self.is_zero() || rhs.is_zero() {
            return AlphaPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        AlphaPoly::from_coeffs(out)
    }
}

impl Neg for &AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for AlphaPoly {
    type Output = AlphaPoly;
    fn neg(self) -> AlphaPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<AlphaPoly> for AlphaPoly {
            type Output = AlphaPoly;
            fn $m(self, rhs: AlphaPoly) -> AlphaPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a AlphaPoly> for AlphaPoly {
            type Output = AlphaPoly;
            fn $m(self, rhs: &'a AlphaPoly) -> AlphaPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&AlphaPoly> for AlphaPoly {
    fn add_assign(&mut self, rhs: &AlphaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl SubAssign<&AlphaPoly> for AlphaPoly {
    fn sub_assign(&mut self, rhs: &AlphaPoly) {
        *self += &(-rhs);
    }
}

impl Sum for AlphaPoly {
    fn sum<I: Iterator<Item = AlphaPoly>>(iter: I) -> AlphaPoly {
        let mut acc = AlphaPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl<'a> Sum<&'a AlphaPoly> for AlphaPoly {
    fn sum<I: Iterator<Item = &'a AlphaPoly>>(iter: I) -> AlphaPoly {
        let mut acc = AlphaPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = AlphaPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(AlphaPoly::from_ints(&[0, 0]).is_zero());
        assert_eq!(AlphaPoly::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = AlphaPoly::from_ints(&[1, 1]);
        let b = AlphaPoly::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, AlphaPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(&a + &b, AlphaPoly::from_ints(&[0, 2]));
        assert_eq!(&a - &a, AlphaPoly::zero());
        assert_eq!(a.eval_int(3), q(4, 1));
        assert_eq!(AlphaPoly::from_ints(&[0, 0, 3]).derivative(), AlphaPoly::from_ints(&[0, 6]));
    }

    #[test]
    fn division_and_gcd() {
        let a = AlphaPoly::from_ints(&[-1, 0, 1]); // (α-1)(α+1)
        let b = AlphaPoly::from_ints(&[1, 2, 1]); // (α+1)^2
        let (qt, r) = a.div_rem(&b).unwrap();
        assert_eq!(qt, AlphaPoly::from_ints(&[1]));
        assert_eq!(r, AlphaPoly::from_ints(&[-2, -2]));
        assert_eq!(AlphaPoly::gcd(&a, &b), AlphaPoly::from_ints(&[1, 1]));
        assert!(a.div_rem(&AlphaPoly::zero()).is_err());
        assert!(a.div_exact(&b).is_err());
    }

    #[test]
    fn reverse_examples() {
        // n! constant at n = 3 reverses to 6α³
        assert_eq!(AlphaPoly::from_int(6).reverse(3).unwrap(), AlphaPoly::from_ints(&[0, 0, 0, 6]));
        assert_eq!(AlphaPoly::from_ints(&[1, 1]).reverse(2).unwrap(), AlphaPoly::from_ints(&[0, 1, 1]));
        assert_eq!(AlphaPoly::zero().reverse(5).unwrap(), AlphaPoly::zero());
        assert_eq!(
            AlphaPoly::from_ints(&[0, 0, 0, 1]).reverse(2),
            Err(Error::DegreeTooLarge { degree: 3, bound: 2 })
        );
    }

    #[test]
    fn binomial_polynomials() {
        // C(α+1, 2) at α = 3 is C(4,2) = 6
        assert_eq!(AlphaPoly::binomial_shifted(1, 2).eval_int(3), q(6, 1));
        // C(α, 2) at α = 1 vanishes
        assert!(AlphaPoly::binomial_shifted(0, 2).eval_int(1).is_zero());
        assert_eq!(AlphaPoly::falling_factorial(2), AlphaPoly::from_ints(&[0, -1, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = AlphaPoly::from_coeffs(vec![q(1, 2), q(-3, 1), q(0, 1), q(7, 5)]);
        let xs: Vec<BigRational> = (1..=5).map(|x| q(x, 1)).collect();
        let ys: Vec<BigRational> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(AlphaPoly::interpolate(&xs, &ys), p);
    }

    #[test]
    fn display() {
        assert_eq!(AlphaPoly::from_ints(&[0, 1, 1]).to_string(), "α^2 + α");
        assert_eq!(AlphaPoly::from_ints(&[-1, 0, 2]).to_string(), "2α^2 - 1");
        assert_eq!(AlphaPoly::zero().to_string(), "0");
        assert_eq!(AlphaPoly::from_coeffs(vec![q(-1, 2)]).to_string(), "-1/2");
    }
}
