//! Factorization and the multiplicative functions behind the count formula.
//!
//! `B(p, n)` is the number of index-`n` subgroups of `Z^p`, equivalently the
//! sum of `s1 * s2 * ... * s(p-1)` over divisor chains
//! `s1 | s2 | ... | s(p-1) | n`. `H(n)` is the leading constant in
//! `B(p, n) / n ~ H(n) * n^p` as `p` grows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::out_of_range;
use crate::{Error, ExactInt, ExactRatio, Result};

/// `n = q1^m1 * ... * ql^ml` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimeFactorization {
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> ExactInt {
        self.factors
            .iter()
            .map(|&(q, m)| BigInt::from(q).pow(m))
            .product()
    }
}

/// Trial-division factorization.
pub fn factorize(n: u64) -> Result<PrimeFactorization> {
    if n == 0 {
        return Err(out_of_range("n", 0, "n >= 1"));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut q = 2u64;
    while q * q <= rest {
        if rest.is_multiple_of(q) {
            let mut m = 0;
            while rest.is_multiple_of(q) {
                rest /= q;
                m += 1;
            }
            factors.push((q, m));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(PrimeFactorization { factors })
}

/// Smallest-prime-factor sieve for repeated factorization up to a fixed bound.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    spf: Vec<u32>,
}

impl PrimeSieve {
    pub fn new(limit: usize) -> Self {
        let limit = limit.max(1);
        let mut spf = vec![0u32; limit + 1];
        for i in 2..=limit {
            if spf[i] == 0 {
                let mut j = i;
                while j <= limit {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        PrimeSieve { spf }
    }

    pub fn limit(&self) -> usize {
        self.spf.len() - 1
    }

    pub fn factorize(&self, n: usize) -> Result<PrimeFactorization> {
        if n == 0 {
            return Err(out_of_range("n", 0, "n >= 1"));
        }
        if n > self.limit() {
            return Err(out_of_range("n", n, format!("n <= {}", self.limit())));
        }
        let mut factors: Vec<(u64, u32)> = Vec::new();
        let mut rest = n;
        while rest > 1 {
            let q = self.spf[rest] as usize;
            let mut m = 0;
            while rest.is_multiple_of(q) {
                rest /= q;
                m += 1;
            }
            factors.push((q as u64, m));
        }
        Ok(PrimeFactorization { factors })
    }

    /// Signed prime-exponent vector of `base^exp`, appended to `out`.
    pub(crate) fn push_power(&self, base: usize, exp: i64, out: &mut Vec<(u32, i64)>) {
        let mut rest = base;
        while rest > 1 {
            let q = self.spf[rest];
            let mut m = 0i64;
            while rest.is_multiple_of(q as usize) {
                rest /= q as usize;
                m += 1;
            }
            out.push((q, m * exp));
        }
    }
}

fn check_p(p: u32) -> Result<()> {
    if p == 0 {
        Err(out_of_range("p", 0, "p >= 1"))
    } else {
        Ok(())
    }
}

/// `B(p, q^m)`: the q-analogue product divided exactly in sequence.
pub fn prime_power_subgroup_count(p: u32, q: u64, m: u32) -> Result<ExactInt> {
    check_p(p)?;
    let q = BigInt::from(q);
    let mut value: BigInt = (0..m).map(|i| q.clone().pow(p + i) - 1u32).product();
    for j in 1..=m {
        let divisor = q.clone().pow(j) - 1u32;
        let (quot, rem) = value.div_rem(&divisor);
        if !rem.is_zero() {
            return Err(Error::Inconsistent(format!(
                "B({p}, {q}^{m}) division by {q}^{j}-1 not exact"
            )));
        }
        value = quot;
    }
    Ok(value)
}

/// `B(p, n)`, the number of subgroups of index `n` in `Z^p`.
pub fn subgroup_count(p: u32, n: u64) -> Result<ExactInt> {
    check_p(p)?;
    let f = factorize(n)?;
    f.factors()
        .iter()
        .map(|&(q, m)| prime_power_subgroup_count(p, q, m))
        .product()
}

/// `B(p, m)` for every `0 <= m <= nmax` (index 0 holds zero).
pub fn subgroup_counts(p: u32, nmax: usize) -> Result<Vec<ExactInt>> {
    check_p(p)?;
    let sieve = PrimeSieve::new(nmax);
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(BigInt::zero());
    for n in 1..=nmax {
        let f = sieve.factorize(n)?;
        let mut b = BigInt::one();
        for &(q, m) in f.factors() {
            b *= prime_power_subgroup_count(p, q, m)?;
        }
        out.push(b);
    }
    Ok(out)
}

/// `B(p, n)` by enumerating every divisor chain `s1 | ... | s(p-1) | n`.
///
/// Exponential in `p`; kept free of any closed form so it can check
/// [`subgroup_count`].
pub fn flag_sum_oracle(p: u32, n: u64) -> Result<ExactInt> {
    check_p(p)?;
    if n == 0 {
        return Err(out_of_range("n", 0, "n >= 1"));
    }
    fn chains(top: u64, remaining: u32) -> BigInt {
        if remaining == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        let mut d = 1;
        while d * d <= top {
            if top.is_multiple_of(d) {
                total += chains(d, remaining - 1) * d;
                let co = top / d;
                if co != d {
                    total += chains(co, remaining - 1) * co;
                }
            }
            d += 1;
        }
        total
    }
    Ok(chains(n, p - 1))
}

/// `H(n)`: product over `q^m || n` of `q^(C(m,2) - m) / ((q-1)(q^2-1)...(q^m-1))`.
pub fn h_value(n: u64) -> Result<ExactRatio> {
    let f = factorize(n)?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for &(q, m) in f.factors() {
        let qb = BigInt::from(q);
        let exp = i64::from(m) * (i64::from(m) - 1) / 2 - i64::from(m);
        if exp >= 0 {
            num *= qb.clone().pow(exp as u64);
        } else {
            den *= qb.clone().pow((-exp) as u64);
        }
        for j in 1..=m {
            den *= qb.clone().pow(j) - 1u32;
        }
    }
    Ok(BigRational::new(num, den))
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(int(a), int(b))
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(
            factorize(1500).unwrap().factors(),
            &[(2, 2), (3, 1), (5, 3)]
        );
        assert!(factorize(0).is_err());
    }

    #[test]
    fn sieve_matches_trial_division() {
        let sieve = PrimeSieve::new(5000);
        for n in 1..=5000u64 {
            let f = sieve.factorize(n as usize).unwrap();
            assert_eq!(f, factorize(n).unwrap());
            assert_eq!(f.value(), int(n as i64));
        }
        assert!(sieve.factorize(5001).is_err());
        assert!(sieve.factorize(0).is_err());
    }

    #[test]
    fn subgroup_count_examples() {
        assert_eq!(subgroup_count(1, 360).unwrap(), int(1));
        assert_eq!(subgroup_count(3, 4).unwrap(), int(35));
        assert_eq!(subgroup_count(2, 6).unwrap(), int(12));
        assert!(subgroup_count(0, 4).is_err());
        assert!(subgroup_count(2, 0).is_err());
    }

    #[test]
    fn flag_sum_examples() {
        assert_eq!(flag_sum_oracle(1, 17).unwrap(), int(1));
        assert_eq!(flag_sum_oracle(2, 4).unwrap(), int(7));
        assert_eq!(flag_sum_oracle(4, 2).unwrap(), int(15));
        assert_eq!(flag_sum_oracle(3, 4).unwrap(), int(35));
        assert!(flag_sum_oracle(0, 3).is_err());
        assert!(flag_sum_oracle(3, 0).is_err());
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_value(1).unwrap(), ratio(1, 1));
        assert_eq!(h_value(2).unwrap(), ratio(1, 2));
        assert_eq!(h_value(4).unwrap(), ratio(1, 6));
        assert_eq!(h_value(6).unwrap(), ratio(1, 12));
        // m = 3: 2^(3-3) / (1 * 3 * 7)
        assert_eq!(h_value(8).unwrap(), ratio(1, 21));
        assert!(h_value(0).is_err());
    }

    #[test]
    fn subgroup_counts_table_matches_pointwise() {
        let table = subgroup_counts(3, 300).unwrap();
        for n in 1..=300u64 {
            assert_eq!(table[n as usize], subgroup_count(3, n).unwrap());
        }
    }

    #[test]
    fn binomial_and_factorial() {
        assert_eq!(binomial(10, 3), int(120));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(6), int(720));
    }
}
