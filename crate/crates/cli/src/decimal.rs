//! Correctly rounded decimal rendering of exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};

fn pow10(e: u32) -> BigInt {
    BigInt::from(10u32).pow(e)
}

/// `x * 10^e` for any sign of `e`.
fn scale(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        x * BigRational::from_integer(pow10(e as u32))
    } else {
        x / BigRational::from_integer(pow10((-e) as u32))
    }
}

/// Renders `x` with `digits` significant digits, rounding half to even.
///
/// Magnitudes in `[1e-6, 1e21)` are written positionally, everything else
/// as `d.ddde[+-]x`.
pub fn significant(x: &BigRational, digits: u32) -> String {
    assert!(digits >= 1);
    if x.is_zero() {
        return "0".to_string();
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let x = x.abs();

    // exponent with 10^e <= x < 10^(e+1)
    let mut e = x.numer().to_string().len() as i64 - x.denom().to_string().len() as i64;
    let one = BigRational::from_integer(BigInt::from(1));
    while scale(&x, -e) < one {
        e -= 1;
    }
    while scale(&x, -e - 1) >= one {
        e += 1;
    }

    let scaled = scale(&x, digits as i64 - 1 - e);
    let (mut q, r) = scaled.numer().div_rem(scaled.denom());
    let twice = r * 2u32;
    if twice > *scaled.denom() || (twice == *scaled.denom() && q.is_odd()) {
        q += 1u32;
    }
    if q == pow10(digits) {
        q /= 10u32;
        e += 1;
    }
    let s = q.to_string();
    let d = digits as i64;

    let body = if (-6..21).contains(&e) {
        if e >= d - 1 {
            format!("{s}{}", "0".repeat((e - d + 1) as usize))
        } else if e >= 0 {
            let (int, frac) = s.split_at(e as usize + 1);
            format!("{int}.{frac}")
        } else {
            format!("0.{}{s}", "0".repeat((-e - 1) as usize))
        }
    } else {
        let (lead, rest) = s.split_at(1);
        let exp_sign = if e < 0 { '-' } else { '+' };
        if rest.is_empty() {
            format!("{lead}e{exp_sign}{}", e.abs())
        } else {
            format!("{lead}.{rest}e{exp_sign}{}", e.abs())
        }
    };
    format!("{sign}{body}")
}

/// `num/den` in lowest terms, or just `num` for integers.
pub fn exact(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
