//! Tables of `A(p, n, k)`.
//!
//! With `P_n(x) = sum_k A(p, n, k) x^k`, the exponential formula applied to
//! `A(p, n, k) = n!/k! * sum over compositions n1 + ... + nk = n of
//! prod B(p, ni)/ni` gives the integer recurrence
//!
//! ```text
//! P_0 = 1,   P_n(x) = sum_{m=1..n} (n-1)!/(n-m)! * B(p, m) * x * P_(n-m)(x)
//! ```
//!
//! which is what [`build_table`] evaluates. [`a_composition`] evaluates the
//! composition sum directly (grouped by partition) as an independent check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorial, subgroup_count, subgroup_counts};
use crate::error::out_of_range;
use crate::{Error, ExactInt, Result, Runner};

/// `A(p, n, k)` for fixed `p` and all `1 <= k <= n <= nmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    p: u32,
    rows: Vec<Vec<ExactInt>>,
}

impl CountTable {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn nmax(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficients of `P_n`: `row(n)[k] = A(p, n, k)`, with `row(n)[0] = 0`
    /// for `n >= 1`.
    pub fn row(&self, n: usize) -> &[ExactInt] {
        &self.rows[n]
    }

    /// `A(p, n, k)`, zero for `k = 0`, `k > n`, or `n` beyond the table.
    pub fn get(&self, n: usize, k: usize) -> ExactInt {
        if n == 0 || k == 0 {
            return BigInt::zero();
        }
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_default()
    }
}

fn check_args(p: u32, nmax: usize) -> Result<()> {
    if p == 0 {
        return Err(out_of_range("p", 0, "p >= 1"));
    }
    if nmax == 0 {
        return Err(out_of_range("nmax", 0, "nmax >= 1"));
    }
    Ok(())
}

/// Runs the recurrence, handing each finished row `P_n` (for `n >= 1`) to
/// `on_row` in increasing `n`. Returns all polynomials `P_0..=P_nmax`.
pub fn build_rows<F>(p: u32, nmax: usize, runner: &Runner, mut on_row: F) -> Result<CountTable>
where
    F: FnMut(usize, &[ExactInt]) -> Result<()>,
{
    check_args(p, nmax)?;
    let b = subgroup_counts(p, nmax)?;
    let mut rows: Vec<Vec<ExactInt>> = Vec::with_capacity(nmax + 1);
    rows.push(vec![BigInt::one()]);

    for n in 1..=nmax {
        // weights[m] = (n-1)!/(n-m)! * B(p, m)
        let mut weights = Vec::with_capacity(n + 1);
        weights.push(BigInt::zero());
        let mut falling = BigInt::one();
        for m in 1..=n {
            if m > 1 {
                falling *= n - m + 1;
            }
            weights.push(&falling * &b[m]);
        }

        let history = &rows;
        let coeffs = runner.map_range(1..n + 1, |k| {
            let mut acc = BigInt::zero();
            for m in 1..=n + 1 - k {
                acc += &weights[m] * &history[n - m][k - 1];
            }
            acc
        });
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigInt::zero());
        row.extend(coeffs);
        on_row(n, &row)?;
        rows.push(row);
    }
    Ok(CountTable { p, rows })
}

/// Full table of `A(p, n, k)` for `1 <= k <= n <= nmax`.
pub fn build_table(p: u32, nmax: usize, runner: &Runner) -> Result<CountTable> {
    build_rows(p, nmax, runner, |_, _| Ok(()))
}

/// Calls `f` with every partition of `n` into exactly `k` parts, parts
/// nonincreasing.
pub fn for_each_partition<F: FnMut(&[usize])>(n: usize, k: usize, mut f: F) {
    fn rec<F: FnMut(&[usize])>(
        rest: usize,
        slots: usize,
        cap: usize,
        parts: &mut Vec<usize>,
        f: &mut F,
    ) {
        if slots == 0 {
            if rest == 0 {
                f(parts);
            }
            return;
        }
        // each remaining slot needs at least 1, and no part may exceed cap
        if rest < slots || rest > slots * cap {
            return;
        }
        let hi = cap.min(rest - (slots - 1));
        let lo = rest.div_ceil(slots);
        for part in (lo..=hi).rev() {
            parts.push(part);
            rec(rest - part, slots - 1, part, parts, f);
            parts.pop();
        }
    }
    if k == 0 || k > n {
        return;
    }
    let mut parts = Vec::with_capacity(k);
    rec(n, k, n, &mut parts, &mut f);
}

/// `A(p, n, k)` straight from the composition sum, grouping compositions by
/// their underlying partition.
pub fn a_composition(p: u32, n: usize, k: usize) -> Result<ExactInt> {
    if p == 0 {
        return Err(out_of_range("p", 0, "p >= 1"));
    }
    if k == 0 || k > n {
        return Err(out_of_range("k", k, format!("1 <= k <= n = {n}")));
    }
    let b: Vec<BigRational> = (0..=n)
        .map(|m| {
            if m == 0 {
                Ok(BigRational::zero())
            } else {
                subgroup_count(p, m as u64).map(|v| BigRational::new(v, BigInt::from(m)))
            }
        })
        .collect::<Result<_>>()?;
    let k_fact = factorial(k as u64);
    let mut total = BigRational::zero();
    for_each_partition(n, k, |parts| {
        let mut orderings = k_fact.clone();
        let mut run = 1u64;
        for i in 1..=parts.len() {
            if i < parts.len() && parts[i] == parts[i - 1] {
                run += 1;
            } else {
                orderings /= factorial(run);
                run = 1;
            }
        }
        let mut term = BigRational::from_integer(orderings);
        for &part in parts {
            term *= &b[part];
        }
        total += term;
    });
    let scaled = total * BigRational::new(factorial(n as u64), k_fact);
    if !scaled.is_integer() {
        return Err(Error::Inconsistent(format!(
            "composition sum for A({p}, {n}, {k}) is not an integer"
        )));
    }
    Ok(scaled.to_integer())
}

/// Unsigned Stirling numbers of the first kind `c(n, 0..=n)`.
pub fn stirling_row(n: usize) -> Vec<ExactInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let mut v = row[k - 1].clone();
            if k < m {
                v += &row[k] * (m - 1);
            }
            next[k] = v;
        }
        row = next;
    }
    row
}

/// Unsigned Stirling number of the first kind `c(n, k)`.
pub fn stirling_first(n: usize, k: usize) -> Result<ExactInt> {
    if k > n {
        return Err(out_of_range("k", k, format!("0 <= k <= n = {n}")));
    }
    Ok(stirling_row(n).swap_remove(k))
}

/// `sum_k A(p, n, k)`: the number of commuting `p`-tuples in `S_n`.
pub fn row_total(table: &CountTable, n: usize) -> Result<ExactInt> {
    if n > table.nmax() {
        return Err(out_of_range(
            "n",
            n,
            format!("n <= nmax = {}", table.nmax()),
        ));
    }
    Ok(table.row(n).iter().sum())
}
