use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always reduced with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical wire form: "p/q" reduced, "p" when q = 1.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Accepts "p", "p/q" and finite decimals such as "-0.125".
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = ip.starts_with('-');
        let ip_digits = ip.trim_start_matches(['-', '+']);
        if !ip_digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{ip_digits}{fp}");
        let mut n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
        if neg {
            n = -n;
        }
        let d = BigInt::from(10u32).pow(fp.len() as u32);
        return Ok(Rational::new(n, d));
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if r.pow(k) == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational k-th root if one exists.
pub fn rational_root(r: &Rational, k: u32) -> Option<Rational> {
    let n = exact_root(r.numer(), k)?;
    let d = exact_root(r.denom(), k)?;
    Some(Rational::new(n, d))
}

pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    rational_root(r, 2)
}

pub fn rational_cbrt(r: &Rational) -> Option<Rational> {
    rational_root(r, 3)
}

pub fn to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // scale both down to a comparable size
            let nb = r.numer().bits() as i64;
            let db = r.denom().bits() as i64;
            let shift_n = (nb - 60).max(0) as usize;
            let shift_d = (db - 60).max(0) as usize;
            let n = (r.numer() >> shift_n).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift_d).to_f64().unwrap_or(1.0);
            n / d * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
        }
    }
}

/// Number of bits of numerator plus denominator; a crude height.
pub fn height_bits(r: &Rational) -> u64 {
    r.numer().bits() + r.denom().bits()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn sign_of(r: &Rational) -> Sign {
    r.numer().sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format_round_trip() {
        for s in ["0", "1", "-3/4", "343/243", "1000000/999999"] {
            assert_eq!(fmt_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(fmt_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(fmt_rational(&parse_rational("2/-4").unwrap()), "-1/2");
        assert_eq!(parse_rational("-0.125").unwrap(), rat(-1, 8));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn exact_roots() {
        assert_eq!(rational_cbrt(&rat(-8, 27)), Some(rat(-2, 3)));
        assert_eq!(rational_cbrt(&rat(343, 243)), None);
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(-1, 1)), None);
    }

    #[test]
    fn f64_conversion_of_huge_values() {
        let big = Rational::new(BigInt::from(10).pow(400), BigInt::from(10).pow(399));
        assert!((to_f64(&big) - 10.0).abs() < 1e-9);
    }
}
