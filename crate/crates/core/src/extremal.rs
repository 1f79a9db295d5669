//! Extremal quantities controlling `A(p, n, k)` for large `p`.
//!
//! `E(n, k)` is the largest product of `k` positive integers summing to `n`
//! (equivalently the most `k`-cliques in a `K_(k+1)`-free graph on `n`
//! vertices), and `A(p, n, k) ~ F(n, k) * E(n, k)^p`. This module computes
//! both, checks log-concavity of `E` in `k`, and reproduces the case analysis
//! that turns it into log-concavity of `A` in the large-`p` limit.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::arith::{factorial, h_value, PrimeSieve};
use crate::counts::{for_each_partition, CountTable};
use crate::error::out_of_range;
use crate::scan::Verdict;
use crate::{Error, ExactInt, ExactRatio, Result, Runner};

/// Largest `n` accepted by [`e_enumerate`].
pub const ENUMERATE_MAX_N: usize = 80;

/// Largest `n` accepted by [`ex_bruteforce`].
pub const EX_BRUTEFORCE_MAX_N: usize = 7;

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(out_of_range("k", k, format!("1 <= k <= n = {n}")));
    }
    Ok(())
}

fn check_interior(n: usize, k: usize) -> Result<()> {
    if n < 3 || k < 2 || k + 1 > n {
        return Err(out_of_range(
            "k",
            k,
            format!("2 <= k <= n - 1 with n = {n} >= 3"),
        ));
    }
    Ok(())
}

fn ratio_int(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// Threshold from which `E(n, k)^2 > E(n, k-1) E(n, k+1)` is strict.
pub fn strict_threshold(k: usize) -> usize {
    (k * k + 2).saturating_sub(2 * k)
}

/// `E(n, k) = b^(k-r) (b+1)^r` with `n = b k + r`.
pub fn e_max(n: usize, k: usize) -> Result<ExactInt> {
    check_k(n, k)?;
    let (b, r) = (n / k, n % k);
    Ok(BigInt::from(b).pow((k - r) as u32) * BigInt::from(b + 1).pow(r as u32))
}

/// Exhaustive maximum of `a1 * ... * ak` over partitions of `n` into `k`
/// positive parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedMax {
    pub value: ExactInt,
    /// A maximizing multiset, nonincreasing.
    pub parts: Vec<usize>,
    /// Number of distinct maximizing multisets.
    pub maximizers: usize,
}

pub fn e_enumerate(n: usize, k: usize) -> Result<EnumeratedMax> {
    check_k(n, k)?;
    if n > ENUMERATE_MAX_N {
        return Err(Error::Guard(format!(
            "partition enumeration for n = {n} (limit {ENUMERATE_MAX_N})"
        )));
    }
    // the product of parts summing to 80 stays below 3^27 < 2^43
    let mut best = 0u128;
    let mut parts = Vec::new();
    let mut maximizers = 0;
    for_each_partition(n, k, |p| {
        let prod: u128 = p.iter().map(|&x| x as u128).product();
        if prod > best {
            best = prod;
            parts = p.to_vec();
            maximizers = 1;
        } else if prod == best {
            maximizers += 1;
        }
    });
    Ok(EnumeratedMax {
        value: BigInt::from(best),
        parts,
        maximizers,
    })
}

/// `F(n, k) = n!/(r!(k-r)!) * H(b)^(k-r) * H(b+1)^r` with `n = b k + r`.
pub fn f_const(n: usize, k: usize) -> Result<ExactRatio> {
    check_k(n, k)?;
    let (b, r) = (n / k, n % k);
    let lead = BigRational::new(
        factorial(n as u64),
        factorial(r as u64) * factorial((k - r) as u64),
    );
    Ok(lead * h_value(b as u64)?.pow((k - r) as i32) * h_value((b + 1) as u64)?.pow(r as i32))
}

/// `A(p, n, k) / (F(n, k) * E(n, k)^p)`, which tends to 1 as `p` grows.
pub fn asymptotic_ratio(table: &CountTable, n: usize, k: usize) -> Result<ExactRatio> {
    check_k(n, k)?;
    if n > table.nmax() {
        return Err(out_of_range(
            "n",
            n,
            format!("n <= nmax = {}", table.nmax()),
        ));
    }
    let denom = f_const(n, k)? * ratio_int(e_max(n, k)?.pow(table.p()));
    Ok(ratio_int(table.get(n, k)) / denom)
}

/// Quotients and remainders of `n` by `k - 1`, `k` and `k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisionTriple {
    pub b: [usize; 3],
    pub r: [usize; 3],
}

pub fn divisions(n: usize, k: usize) -> Result<DivisionTriple> {
    check_interior(n, k)?;
    let div = |d: usize| (n / d, n % d);
    let (b1, r1) = div(k - 1);
    let (b2, r2) = div(k);
    let (b3, r3) = div(k + 1);
    Ok(DivisionTriple {
        b: [b1, b2, b3],
        r: [r1, r2, r3],
    })
}

/// Which branch of the large-`p` case analysis applies to `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    /// `n >= k^2 - 2k + 2`.
    AboveThreshold,
    /// `(b1, b2, b3) = (b, b, b)`.
    Flat,
    /// `(b + 1, b, b)` with `r1 > 0`.
    LeadingDropPositive,
    /// `(b + 1, b, b)` with `r1 = 0`.
    LeadingDropExact,
    /// `(b + 1, b + 1, b)`.
    TrailingDrop,
    /// `(b + 2, b + 1, b)`.
    DoubleDrop,
}

impl Case {
    /// Case number, 1 through 6.
    pub fn number(self) -> u8 {
        match self {
            Case::AboveThreshold => 1,
            Case::Flat => 2,
            Case::LeadingDropPositive => 3,
            Case::LeadingDropExact => 4,
            Case::TrailingDrop => 5,
            Case::DoubleDrop => 6,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

fn case_of(n: usize, k: usize, d: &DivisionTriple) -> Result<Case> {
    if n >= strict_threshold(k) {
        return Ok(Case::AboveThreshold);
    }
    let [b1, b2, b3] = d.b;
    let case = if b1 == b2 && b2 == b3 {
        Case::Flat
    } else if b1 == b2 + 1 && b2 == b3 {
        if d.r[0] > 0 {
            Case::LeadingDropPositive
        } else {
            Case::LeadingDropExact
        }
    } else if b1 == b2 && b2 == b3 + 1 {
        Case::TrailingDrop
    } else if b1 == b2 + 1 && b2 == b3 + 1 {
        Case::DoubleDrop
    } else {
        return Err(Error::Inconsistent(format!(
            "(n, k) = ({n}, {k}) below the threshold has quotients {:?} matching no case",
            d.b
        )));
    };
    Ok(case)
}

/// Everything the case analysis says about one interior `(n, k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalProfile {
    pub n: usize,
    pub k: usize,
    pub divisions: DivisionTriple,
    pub case: Case,
    pub e: ExactInt,
    pub f: ExactRatio,
    /// `E(n,k)^2 / (E(n,k-1) E(n,k+1))`.
    pub r_e: ExactRatio,
    /// `F(n,k)^2 / (F(n,k-1) F(n,k+1))`, computed from `F` directly.
    pub r_f: ExactRatio,
    /// Factorial part of `r_f`.
    pub r_f1: ExactRatio,
    /// `H` part of `r_f`.
    pub r_f2: ExactRatio,
    /// Case-specific closed form of `r_e` (cases 3, 5, 6).
    pub closed_form_r_e: Option<ExactRatio>,
    /// Case-specific closed form of `r_f1` (cases 2, 4).
    pub closed_form_r_f1: Option<ExactRatio>,
}

impl ExtremalProfile {
    /// `R_E > 1`, or `R_E = 1` and `R_F >= 1`.
    pub fn limit_log_concave(&self) -> bool {
        let one = BigRational::one();
        self.r_e > one || (self.r_e == one && self.r_f >= one)
    }

    pub fn factorization_agrees(&self) -> bool {
        self.r_f == &self.r_f1 * &self.r_f2
    }

    pub fn closed_forms_agree(&self) -> bool {
        self.closed_form_r_e.as_ref().is_none_or(|c| *c == self.r_e)
            && self
                .closed_form_r_f1
                .as_ref()
                .is_none_or(|c| *c == self.r_f1)
    }

    /// The conclusion the case analysis predicts for this case.
    pub fn case_conclusion_holds(&self) -> bool {
        let one = BigRational::one();
        match self.case {
            Case::AboveThreshold
            | Case::LeadingDropPositive
            | Case::TrailingDrop
            | Case::DoubleDrop => self.r_e > one,
            Case::Flat => self.r_e == one && self.r_f2 == one && self.r_f1 >= one,
            Case::LeadingDropExact => {
                let b = self.divisions.b[1] as u64;
                let central = crate::arith::binomial(2 * b + 2, b + 1);
                self.r_e == one && self.r_f2 == one && self.r_f1 >= ratio_int(central)
            }
        }
    }

    /// All internal consistency checks together.
    pub fn verified(&self) -> bool {
        self.limit_log_concave()
            && self.factorization_agrees()
            && self.closed_forms_agree()
            && self.case_conclusion_holds()
    }
}

/// Memoized `H` and factorial values for building many profiles.
struct ProfileContext {
    h: Vec<BigRational>,
    fact: Vec<BigInt>,
}

impl ProfileContext {
    fn new(nmax: usize) -> Result<Self> {
        let h = (0..=nmax + 1)
            .map(|m| {
                if m == 0 {
                    Ok(BigRational::zero())
                } else {
                    h_value(m as u64)
                }
            })
            .collect::<Result<_>>()?;
        let mut fact = vec![BigInt::one()];
        for i in 1..=nmax + 1 {
            let next = &fact[i - 1] * i;
            fact.push(next);
        }
        Ok(ProfileContext { h, fact })
    }

    fn fr(&self, i: usize) -> BigRational {
        ratio_int(self.fact[i].clone())
    }

    fn h_pow(&self, m: usize, e: usize) -> BigRational {
        self.h[m].clone().pow(e as i32)
    }

    fn f(&self, n: usize, k: usize) -> BigRational {
        let (b, r) = (n / k, n % k);
        BigRational::new(self.fact[n].clone(), &self.fact[r] * &self.fact[k - r])
            * self.h_pow(b, k - r)
            * self.h_pow(b + 1, r)
    }

    /// Profiles for every `2 <= k <= n - 1` of one `n`.
    fn row(&self, n: usize) -> Result<Vec<ExtremalProfile>> {
        let e: Vec<BigInt> = (0..=n)
            .map(|k| {
                if k == 0 {
                    Ok(BigInt::zero())
                } else {
                    e_max(n, k)
                }
            })
            .collect::<Result<_>>()?;
        let f: Vec<BigRational> = (0..=n)
            .map(|k| {
                if k == 0 {
                    BigRational::zero()
                } else {
                    self.f(n, k)
                }
            })
            .collect();
        (2..n).map(|k| self.profile(n, k, &e, &f)).collect()
    }

    fn profile(
        &self,
        n: usize,
        k: usize,
        e: &[BigInt],
        f: &[BigRational],
    ) -> Result<ExtremalProfile> {
        let d = divisions(n, k)?;
        let case = case_of(n, k, &d)?;
        let [b1, b2, b3] = d.b;
        let [r1, r2, r3] = d.r;

        let r_e = BigRational::new(&e[k] * &e[k], &e[k - 1] * &e[k + 1]);
        let r_f = &f[k] * &f[k] / (&f[k - 1] * &f[k + 1]);
        let r_f1 = BigRational::new(
            &self.fact[r1] * &self.fact[k - 1 - r1] * &self.fact[r3] * &self.fact[k + 1 - r3],
            (&self.fact[r2] * &self.fact[k - r2]).pow(2u32),
        );
        let r_f2 = self.h_pow(b2, 2 * (k - r2)) * self.h_pow(b2 + 1, 2 * r2)
            / (self.h_pow(b1, k - 1 - r1)
                * self.h_pow(b1 + 1, r1)
                * self.h_pow(b3, k + 1 - r3)
                * self.h_pow(b3 + 1, r3));

        let step = |b: usize| {
            let b = BigInt::from(b);
            BigRational::new((&b + 1u32).pow(2u32), &b * (&b + 2u32))
        };
        let (n_i, k_i) = (n as i64, k as i64);
        let closed_form_r_e = match case {
            Case::LeadingDropPositive => {
                let b = b2 as i64;
                Some(step(b2).pow((n_i - (k_i - 1) * (b + 1)) as i32))
            }
            Case::TrailingDrop => {
                let b = b3 as i64;
                Some(step(b3).pow(((k_i + 1) * (b + 1) - n_i) as i32))
            }
            Case::DoubleDrop => {
                let b = b3 as i64;
                Some(
                    step(b3).pow(((k_i + 1) * (b + 1) - n_i) as i32)
                        * step(b3 + 1).pow((n_i - (k_i - 1) * (b + 2)) as i32),
                )
            }
            _ => None,
        };
        let closed_form_r_f1 = match case {
            Case::Flat => {
                let b = b2;
                Some(
                    self.fr(n - (k - 1) * b)
                        * self.fr((k - 1) * (b + 1) - n)
                        * self.fr(n - (k + 1) * b)
                        * self.fr((k + 1) * (b + 1) - n)
                        / (self.fr(n - k * b).pow(2) * self.fr(k * (b + 1) - n).pow(2)),
                )
            }
            Case::LeadingDropExact => {
                let b = b2;
                Some(
                    self.fr(k - 1) * self.fr(k - 2 * b - 1) * self.fr(2 * b + 2)
                        / (self.fr(k - b - 1).pow(2) * self.fr(b + 1).pow(2)),
                )
            }
            _ => None,
        };

        Ok(ExtremalProfile {
            n,
            k,
            divisions: d,
            case,
            e: e[k].clone(),
            f: f[k].clone(),
            r_e,
            r_f,
            r_f1,
            r_f2,
            closed_form_r_e,
            closed_form_r_f1,
        })
    }
}

/// Case label, ratios and closed forms for one interior `(n, k)`.
pub fn classify_case(n: usize, k: usize) -> Result<ExtremalProfile> {
    check_interior(n, k)?;
    let ctx = ProfileContext::new(n)?;
    let e: Vec<BigInt> = (0..=n)
        .map(|j| {
            if (k - 1..=k + 1).contains(&j) {
                e_max(n, j)
            } else {
                Ok(BigInt::zero())
            }
        })
        .collect::<Result<_>>()?;
    let f: Vec<BigRational> = (0..=n)
        .map(|j| {
            if (k - 1..=k + 1).contains(&j) {
                ctx.f(n, j)
            } else {
                BigRational::zero()
            }
        })
        .collect();
    ctx.profile(n, k, &e, &f)
}

/// Profiles of every interior `(n, k)` with `3 <= n <= nmax`, sorted by
/// `(n, k)`.
pub fn profiles(nmax: usize, runner: &Runner) -> Result<Vec<ExtremalProfile>> {
    if nmax < 3 {
        return Ok(Vec::new());
    }
    let ctx = ProfileContext::new(nmax)?;
    let rows = runner.map_range(3..nmax + 1, |n| ctx.row(n));
    let mut out = Vec::new();
    for row in rows {
        out.extend(row?);
    }
    Ok(out)
}

/// Summary of the large-`p` case analysis over `3 <= n <= nmax`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseReport {
    pub nmax: usize,
    pub checked: usize,
    /// How many pairs fell in cases 1 through 6.
    pub case_counts: [usize; 6],
    /// Pairs failing `R_E > 1 or (R_E = 1 and R_F >= 1)`.
    pub limit_failures: Vec<(usize, usize)>,
    /// Pairs where `R_F != R_F1 * R_F2`.
    pub factorization_mismatches: Vec<(usize, usize)>,
    /// Pairs whose case closed forms disagree with direct computation.
    pub closed_form_mismatches: Vec<(usize, usize)>,
    /// Pairs whose case-specific conclusion fails.
    pub case_failures: Vec<(usize, usize)>,
}

impl CaseReport {
    pub fn violation_count(&self) -> usize {
        self.limit_failures.len()
            + self.factorization_mismatches.len()
            + self.closed_form_mismatches.len()
            + self.case_failures.len()
    }
}

/// Runs [`profiles`] and tallies every check. Unclassifiable pairs surface
/// as an error.
pub fn case_report(nmax: usize, runner: &Runner) -> Result<CaseReport> {
    let mut report = CaseReport {
        nmax,
        ..Default::default()
    };
    for prof in profiles(nmax, runner)? {
        report.checked += 1;
        report.case_counts[prof.case.number() as usize - 1] += 1;
        let at = (prof.n, prof.k);
        if !prof.limit_log_concave() {
            report.limit_failures.push(at);
        }
        if !prof.factorization_agrees() {
            report.factorization_mismatches.push(at);
        }
        if !prof.closed_forms_agree() {
            report.closed_form_mismatches.push(at);
        }
        if !prof.case_conclusion_holds() {
            report.case_failures.push(at);
        }
    }
    Ok(report)
}

/// One interior comparison `E(n,k)^2` against `E(n,k-1) E(n,k+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ERow {
    pub n: usize,
    pub k: usize,
    pub lhs: ExactInt,
    pub rhs: ExactInt,
    pub verdict: Verdict,
}

/// Explicit sides of every E log-concavity comparison for `3 <= n <= nmax`.
pub fn e_log_concavity_rows(nmax: usize, runner: &Runner) -> Vec<ERow> {
    if nmax < 3 {
        return Vec::new();
    }
    runner
        .map_range(3..nmax + 1, |n| {
            let e: Vec<BigInt> = (0..=n)
                .map(|k| {
                    if k == 0 {
                        BigInt::zero()
                    } else {
                        e_max(n, k).unwrap()
                    }
                })
                .collect();
            (2..n)
                .map(|k| {
                    let lhs = &e[k] * &e[k];
                    let rhs = &e[k - 1] * &e[k + 1];
                    let verdict = Verdict::from_sides(&lhs, &rhs);
                    ERow {
                        n,
                        k,
                        lhs,
                        rhs,
                        verdict,
                    }
                })
                .collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect()
}

/// Compares `E(n,k)^2` with `E(n,k-1) E(n,k+1)` after cancelling common
/// prime factors of the two sides.
pub fn e_log_concavity_verdict(sieve: &PrimeSieve, n: usize, k: usize) -> Result<Verdict> {
    let d = divisions(n, k)?;
    if n + 1 > sieve.limit() {
        return Err(out_of_range(
            "n",
            n,
            format!("n < sieve limit {}", sieve.limit()),
        ));
    }
    let [b1, b2, b3] = d.b;
    let [r1, r2, r3] = d.r;
    let mut exps: Vec<(u32, i64)> = Vec::with_capacity(24);
    sieve.push_power(b2, 2 * (k - r2) as i64, &mut exps);
    sieve.push_power(b2 + 1, 2 * r2 as i64, &mut exps);
    sieve.push_power(b1, -((k - 1 - r1) as i64), &mut exps);
    sieve.push_power(b1 + 1, -(r1 as i64), &mut exps);
    sieve.push_power(b3, -((k + 1 - r3) as i64), &mut exps);
    sieve.push_power(b3 + 1, -(r3 as i64), &mut exps);
    exps.sort_unstable_by_key(|&(q, _)| q);

    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let mut i = 0;
    while i < exps.len() {
        let q = exps[i].0;
        let mut e = 0i64;
        while i < exps.len() && exps[i].0 == q {
            e += exps[i].1;
            i += 1;
        }
        if e > 0 {
            num *= BigUint::from(q).pow(e as u64);
        } else if e < 0 {
            den *= BigUint::from(q).pow((-e) as u64);
        }
    }
    Ok(Verdict::from_sides(&num, &den))
}

/// Outcome of checking log-concavity of `E(n, .)` for every
/// `3 <= n <= nmax`, `2 <= k <= n - 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EScanReport {
    pub nmax: usize,
    pub checked: u64,
    pub strict: u64,
    /// Every `(n, k)` with `E(n,k)^2 = E(n,k-1) E(n,k+1)`, sorted.
    pub equalities: Vec<(usize, usize)>,
    /// Every `(n, k)` with `E(n,k)^2 < E(n,k-1) E(n,k+1)`, sorted.
    pub violations: Vec<(usize, usize)>,
}

impl EScanReport {
    /// Equalities at or above the strictness threshold `k^2 - 2k + 2`.
    pub fn equalities_above_threshold(&self) -> Vec<(usize, usize)> {
        self.equalities
            .iter()
            .copied()
            .filter(|&(n, k)| n >= strict_threshold(k))
            .collect()
    }
}

/// Strict count, equality pairs and violation pairs for one `n`.
type ScanTally = (u64, Vec<(usize, usize)>, Vec<(usize, usize)>);

pub fn check_e_logconcavity(nmax: usize, runner: &Runner) -> Result<EScanReport> {
    if nmax < 3 {
        return Err(out_of_range("nmax", nmax, "nmax >= 3"));
    }
    let sieve = PrimeSieve::new(nmax + 2);
    let per_n = runner.map_range(3..nmax + 1, |n| -> Result<ScanTally> {
        let mut strict = 0;
        let mut eq = Vec::new();
        let mut bad = Vec::new();
        for k in 2..n {
            match e_log_concavity_verdict(&sieve, n, k)? {
                Verdict::Strict => strict += 1,
                Verdict::Equal => eq.push((n, k)),
                Verdict::Violation => bad.push((n, k)),
            }
        }
        Ok((strict, eq, bad))
    });
    let mut report = EScanReport {
        nmax,
        ..Default::default()
    };
    for (n, res) in (3..=nmax).zip(per_n) {
        let (strict, eq, bad) = res?;
        report.checked += (n - 2) as u64;
        report.strict += strict;
        report.equalities.extend(eq);
        report.violations.extend(bad);
    }
    Ok(report)
}

/// One failed lemma instance, described in words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaViolation {
    pub lemma: u8,
    pub n: usize,
    pub k: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaTally {
    pub checked: u64,
    pub violations: Vec<LemmaViolation>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub nmax: usize,
    pub kmax: usize,
    pub factorial_sum_max: usize,
    /// Monotonicity of `E(n,k)/E(n,k-1)` in `n`, for `n >= k`.
    pub monotone_ratio: LemmaTally,
    /// Strict monotonicity once `n >= k^2 - 2k + 1`.
    pub strict_monotone_ratio: LemmaTally,
    /// Quotient drops of at most one when `n <= k^2 - k`.
    pub quotient_drops: LemmaTally,
    /// `a! b! <= c! d!` when `a + b = c + d` and `min(a,b) >= min(c,d)`.
    pub factorial_products: LemmaTally,
}

impl LemmaReport {
    pub fn tallies(&self) -> [&LemmaTally; 4] {
        [
            &self.monotone_ratio,
            &self.strict_monotone_ratio,
            &self.quotient_drops,
            &self.factorial_products,
        ]
    }

    pub fn violation_count(&self) -> usize {
        self.tallies().iter().map(|t| t.violations.len()).sum()
    }
}

/// Default bound on `a + b` for the factorial-product check.
pub const FACTORIAL_SUM_MAX: usize = 60;

/// Exhaustive checks of the four supporting lemmas.
///
/// The ratio lemmas run over `2 <= k <= kmax` and `n <= nmax` (comparing
/// rows `n` and `n + 1`); the drop lemma over interior `(n, k)` with
/// `n <= min(nmax, k^2 - k)`; the factorial lemma over all
/// `a + b = c + d <= factorial_sum_max`.
pub fn lemma_checks(
    nmax: usize,
    kmax: usize,
    factorial_sum_max: usize,
    runner: &Runner,
) -> Result<LemmaReport> {
    if nmax < 2 || kmax < 2 {
        return Err(Error::InvalidArgument(format!(
            "lemma checks need nmax, kmax >= 2 (got {nmax}, {kmax})"
        )));
    }
    let kmax = kmax.min(nmax);
    // E(n, k) for n <= nmax + 1, k <= kmax
    let e: Vec<Vec<BigInt>> = (0..=nmax + 1)
        .map(|n| {
            (0..=kmax.min(n))
                .map(|k| {
                    if k == 0 {
                        BigInt::zero()
                    } else {
                        e_max(n, k).unwrap()
                    }
                })
                .collect()
        })
        .collect();

    type Partial = (LemmaTally, LemmaTally, LemmaTally);
    let per_k: Vec<Partial> = runner.map_range(2..kmax + 1, |k| {
        let mut weak = LemmaTally::default();
        let mut strict = LemmaTally::default();
        let mut drops = LemmaTally::default();
        for n in k..=nmax {
            // E(n,k)/E(n,k-1) vs E(n+1,k)/E(n+1,k-1), cross-multiplied
            let left = &e[n][k] * &e[n + 1][k - 1];
            let right = &e[n + 1][k] * &e[n][k - 1];
            weak.checked += 1;
            if left > right {
                weak.violations.push(LemmaViolation {
                    lemma: 1,
                    n,
                    k,
                    detail: format!("E({n},{k})E({},{}) = {left} > {right}", n + 1, k - 1),
                });
            }
            if n + 1 >= strict_threshold(k) {
                strict.checked += 1;
                if left >= right {
                    strict.violations.push(LemmaViolation {
                        lemma: 2,
                        n,
                        k,
                        detail: format!("E({n},{k})E({},{}) = {left} >= {right}", n + 1, k - 1),
                    });
                }
            }
            if n > k && n <= k * k - k {
                let d = divisions(n, k).expect("interior pair");
                drops.checked += 1;
                if d.b[0] - d.b[1] > 1 || d.b[1] - d.b[2] > 1 {
                    drops.violations.push(LemmaViolation {
                        lemma: 3,
                        n,
                        k,
                        detail: format!("quotients {:?}", d.b),
                    });
                }
            }
        }
        (weak, strict, drops)
    });

    let mut report = LemmaReport {
        nmax,
        kmax,
        factorial_sum_max,
        ..Default::default()
    };
    for (weak, strict, drops) in per_k {
        merge(&mut report.monotone_ratio, weak);
        merge(&mut report.strict_monotone_ratio, strict);
        merge(&mut report.quotient_drops, drops);
    }
    report.factorial_products = factorial_lemma(factorial_sum_max);
    Ok(report)
}

fn merge(into: &mut LemmaTally, from: LemmaTally) {
    into.checked += from.checked;
    into.violations.extend(from.violations);
}

fn factorial_lemma(max_sum: usize) -> LemmaTally {
    let fact: Vec<BigInt> = (0..=max_sum as u64).map(factorial).collect();
    let mut tally = LemmaTally::default();
    for s in 0..=max_sum {
        for a in 0..=s {
            let b = s - a;
            for c in 0..=s {
                let d = s - c;
                if a.min(b) < c.min(d) {
                    continue;
                }
                tally.checked += 1;
                let lhs = &fact[a] * &fact[b];
                let rhs = &fact[c] * &fact[d];
                if lhs > rhs {
                    tally.violations.push(LemmaViolation {
                        lemma: 4,
                        n: s,
                        k: a,
                        detail: format!("{a}!{b}! = {lhs} > {c}!{d}! = {rhs}"),
                    });
                }
            }
        }
    }
    tally
}

/// `k`-cliques of the Turán graph `T(n, k)`: vertices dealt round-robin into
/// `k` parts, one vertex chosen per part.
pub fn turan_clique_count(n: usize, k: usize) -> Result<ExactInt> {
    check_k(n, k)?;
    let mut sizes = vec![0usize; k];
    for v in 0..n {
        sizes[v % k] += 1;
    }
    Ok(sizes.into_iter().map(BigInt::from).product())
}

/// For each `k` in `0..=n`, the most `k`-cliques over all graphs on `n`
/// labelled vertices with no `(k+1)`-clique (index 0 unused).
pub fn ex_bruteforce_all(n: usize, runner: &Runner) -> Result<Vec<u64>> {
    if n == 0 || n > EX_BRUTEFORCE_MAX_N {
        return Err(Error::Guard(format!(
            "exhaustive graph search on n = {n} vertices (supported 1..={EX_BRUTEFORCE_MAX_N})"
        )));
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let graphs = 1u64 << edges.len();
    let chunk_count = graphs.min(256);
    let chunk = graphs / chunk_count;

    fn cliques(adj: &[u8; 8], cand: u8, size: usize, counts: &mut [u64; 9]) {
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            counts[size + 1] += 1;
            cliques(adj, rest & adj[v], size + 1, counts);
        }
    }

    let partials = runner.map_range(0..chunk_count as usize, |c| {
        let mut best = vec![0u64; n + 1];
        let start = c as u64 * chunk;
        for mask in start..start + chunk {
            let mut adj = [0u8; 8];
            for (bit, &(i, j)) in edges.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
            let mut counts = [0u64; 9];
            cliques(&adj, ((1u16 << n) - 1) as u8, 0, &mut counts);
            let omega = (1..=n).rev().find(|&s| counts[s] > 0).unwrap_or(0);
            for k in omega.max(1)..=n {
                best[k] = best[k].max(counts[k]);
            }
        }
        best
    });
    let mut best = vec![0u64; n + 1];
    for part in partials {
        for (b, v) in best.iter_mut().zip(part) {
            *b = (*b).max(v);
        }
    }
    Ok(best)
}

/// `ex(n, K_k, K_(k+1))` by exhausting all `2^C(n,2)` graphs.
pub fn ex_bruteforce(n: usize, k: usize) -> Result<ExactInt> {
    if n > EX_BRUTEFORCE_MAX_N {
        return Err(Error::Guard(format!(
            "exhaustive graph search on n = {n} vertices (limit {EX_BRUTEFORCE_MAX_N})"
        )));
    }
    check_k(n, k)?;
    Ok(BigInt::from(
        ex_bruteforce_all(n, &Runner::sequential())?[k],
    ))
}
