//! Exact rational scalars.
//!
//! Every coefficient produced by the generator formulas is a ratio of
//! products of small integers, so the whole engine runs on arbitrary
//! precision rationals kept in lowest terms. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always reduced, denominator positive.
pub type Ratio = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Ratio {
    Ratio::from_integer(BigInt::from(n))
}

/// `base^exp` with the empty-product convention `x^0 = 1` for every `x`,
/// including `x = 0`.
pub fn rat_pow(base: &Ratio, exp: u32) -> Ratio {
    if exp == 0 {
        return Ratio::one();
    }
    let mut acc = base.clone();
    for _ in 1..exp {
        acc *= base;
    }
    acc
}

/// Renders as `p/q` with the sign on the numerator, e.g. `-3/2`, `5/1`.
pub fn format_ratio(r: &Ratio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_ratio(s: &str) -> Option<Ratio> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (
            a.trim().parse::<BigInt>().ok()?,
            b.trim().parse::<BigInt>().ok()?,
        ),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Ratio::new(num, den))
}

/// Sign `(-1)^k` as a rational.
pub fn neg_one_pow(k: i64) -> Ratio {
    if k.rem_euclid(2) == 0 {
        Ratio::one()
    } else {
        -Ratio::one()
    }
}

/// True if `r` is a (possibly negative) integer.
pub fn is_integer(r: &Ratio) -> bool {
    r.denom().is_one()
}

/// Absolute value, used by a few diagnostics.
pub fn rat_abs(r: &Ratio) -> Ratio {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_zero_exponent_is_one() {
        assert_eq!(rat_pow(&rat(0), 0), rat(1));
        assert_eq!(rat_pow(&rat(-7), 0), rat(1));
        assert_eq!(rat_pow(&(rat(2) / rat(3)), 3), rat(8) / rat(27));
    }

    #[test]
    fn format_parse_roundtrip() {
        for r in [rat(0), rat(5), -rat(3) / rat(2), rat(22) / rat(7)] {
            assert_eq!(parse_ratio(&format_ratio(&r)).unwrap(), r);
        }
        assert_eq!(parse_ratio("4").unwrap(), rat(4));
        assert!(parse_ratio("1/0").is_none());
    }
}
