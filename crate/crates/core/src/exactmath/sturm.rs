//! Exact real-rootedness via Sturm sequences.

use alloc::vec::Vec;

use num_traits::Signed;

use super::poly::AlphaPoly;
use crate::error::{Error, Result};

/// `p / gcd(p, p')`: same roots as `p`, each simple.
pub fn square_free_part(p: &AlphaPoly) -> Result<AlphaPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = AlphaPoly::gcd(p, &p.derivative());
    if g.is_zero() {
        // p is a nonzero constant
        return Ok(p.monic());
    }
    Ok(p.div_exact(&g)?.monic())
}

/// The Sturm chain `p, p', -rem(p, p'), …`.
pub fn sturm_sequence(p: &AlphaPoly) -> Vec<AlphaPoly> {
    let mut seq = Vec::new();
    if p.is_zero() {
        return seq;
    }
    seq.push(p.clone());
    let mut prev = p.clone();
    let mut cur = p.derivative();
    while !cur.is_zero() {
        let (_, r) = prev.div_rem(&cur).expect("nonzero divisor");
        seq.push(cur.clone());
        prev = cur;
        cur = -r;
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn count_real_roots(p: &AlphaPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let seq = sturm_sequence(p);
    let at_pos_inf = seq.iter().map(|q| {
        let lc = q.leading().expect("chain members are nonzero");
        if lc.is_positive() { 1 } else { -1 }
    });
    let at_neg_inf = seq.iter().map(|q| {
        let lc = q.leading().expect("chain members are nonzero");
        let s: i8 = if lc.is_positive() { 1 } else { -1 };
        if q.degree().unwrap_or(0) % 2 == 1 { -s } else { s }
    });
    let neg = sign_changes(at_neg_inf);
    let pos = sign_changes(at_pos_inf);
    Ok(neg - pos)
}

/// True iff every complex root of `p` is real.
pub fn is_real_rooted(p: &AlphaPoly) -> Result<bool> {
    let q = square_free_part(p)?;
    let d = q.degree().expect("nonzero");
    Ok(count_real_roots(&q)? == d)
}

/// Real-rootedness where the zero polynomial counts as vacuously real-rooted.
pub fn is_real_rooted_or_zero(p: &AlphaPoly) -> bool {
    p.is_zero() || is_real_rooted(p).expect("nonzero input")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert!(is_real_rooted(&AlphaPoly::from_ints(&[0, 1, 1])).unwrap());
        assert!(!is_real_rooted(&AlphaPoly::from_ints(&[1, 0, 1])).unwrap());
        assert!(is_real_rooted(&AlphaPoly::from_ints(&[0, -1, 0, 1])).unwrap());
        assert_eq!(is_real_rooted(&AlphaPoly::zero()), Err(Error::ZeroPolynomial));
        assert!(is_real_rooted(&AlphaPoly::from_int(5)).unwrap());
    }

    #[test]
    fn multiplicity_does_not_hide_real_roots() {
        // (α - 1)^3 (α + 2)^2
        let p = &AlphaPoly::shifted_alpha(-1).pow(3) * &AlphaPoly::shifted_alpha(2).pow(2);
        assert!(is_real_rooted(&p).unwrap());
        assert_eq!(count_real_roots(&square_free_part(&p).unwrap()).unwrap(), 2);
        // (α² + 1)² has no real roots
        let p = AlphaPoly::from_ints(&[1, 0, 1]).pow(2);
        assert!(!is_real_rooted(&p).unwrap());
        assert_eq!(count_real_roots(&p).unwrap(), 0);
    }

    // Each factor is either a real linear factor or an irreducible quadratic
    // (α - r)² + s with s > 0; the product is real-rooted exactly when no
    // quadratic factor is present.
    proptest! {
        #[test]
        fn agrees_with_explicit_factorization(
            factors in proptest::collection::vec((any::<bool>(), -6i64..6, 1i64..4, 1i64..5), 1..=4),
            scale in prop_oneof![Just(1i64), Just(-3), Just(7)],
        ) {
            let mut p = AlphaPoly::from_int(scale);
            let mut expect_real = true;
            for (quadratic, r, den, s) in factors {
                let root = BigRational::new(BigInt::from(r), BigInt::from(den));
                let lin = AlphaPoly::linear(-root);
                if quadratic {
                    expect_real = false;
                    let q = &(&lin * &lin) + &AlphaPoly::from_int(s);
                    p = &p * &q;
                } else {
                    p = &p * &lin;
                }
            }
            prop_assert_eq!(is_real_rooted(&p).unwrap(), expect_real);
        }

        #[test]
        fn products_of_linear_factors_are_real_rooted(
            roots in proptest::collection::vec((-9i64..9, 1i64..5), 1..=4)
        ) {
            let p = roots.iter().fold(AlphaPoly::one(), |acc, &(r, d)| {
                &acc * &AlphaPoly::linear(BigRational::new(BigInt::from(r), BigInt::from(d)))
            });
            prop_assert!(is_real_rooted(&p).unwrap());
        }
    }
}
