//! Exact rational scalars.
//!
//! Every computation in this crate runs over the rationals; nothing is ever
//! rounded. `Scalar` is an arbitrary-precision rational kept in lowest terms
//! with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational scalar `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Is this scalar an integer in `Z_+ = {0, 1, 2, ...}`?
pub fn is_nonneg_int(x: &Scalar) -> bool {
    x.is_integer() && !x.is_negative()
}

/// Is this scalar an integer in `-N = {-1, -2, ...}`?
pub fn is_neg_int(x: &Scalar) -> bool {
    x.is_integer() && x.is_negative()
}

/// Falling factorial `x (x-1) ... (x-k+1)`, with the empty product for `k = 0`.
pub fn falling_factorial(x: &Scalar, k: u64) -> Scalar {
    let mut acc = Scalar::one();
    let mut cur = x.clone();
    for _ in 0..k {
        if cur.is_zero() {
            return Scalar::zero();
        }
        acc *= &cur;
        cur -= Scalar::one();
    }
    acc
}

/// Generalized binomial coefficient `binom(x, k) = x (x-1) ... (x-k+1) / k!`,
/// valid for any rational `x`.
pub fn binom(x: &Scalar, k: u64) -> Scalar {
    let mut acc = falling_factorial(x, k);
    for j in 1..=k {
        acc /= int(j as i64);
    }
    acc
}

/// Parse a rational written as `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(n))
    }
}

/// Parse a comma-separated rational vector, e.g. `1/2,-1`. Empty input is the
/// empty vector.
pub fn parse_rational_vec(s: &str) -> Result<Vec<Scalar>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Render a scalar as `p` or `p/q`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Render a vector of scalars as a comma-separated list.
pub fn format_scalar_vec(xs: &[Scalar]) -> String {
    xs.iter().map(format_scalar).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-3", "1/2", "-7/3"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(format_scalar(&x), s);
        }
        assert_eq!(parse_rational("2/4").unwrap(), frac(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational_vec("1/2,-1").unwrap(), vec![frac(1, 2), int(-1)]);
        assert_eq!(parse_rational_vec("").unwrap(), Vec::<Scalar>::new());
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(&int(5), 0), int(1));
        assert_eq!(falling_factorial(&int(5), 2), int(20));
        assert_eq!(falling_factorial(&int(1), 2), int(0));
        assert_eq!(falling_factorial(&frac(1, 2), 2), frac(-1, 4));
        // negative tops never truncate
        assert_eq!(falling_factorial(&int(-1), 3), int(-6));
    }

    #[test]
    fn binom_values() {
        assert_eq!(binom(&int(4), 2), int(6));
        assert_eq!(binom(&frac(4, 3), 1), frac(4, 3));
        assert_eq!(binom(&frac(1, 4), 1), frac(1, 4));
        assert_eq!(binom(&frac(1, 2), 2), frac(-1, 8));
        assert_eq!(binom(&int(2), 5), int(0));
    }
}
