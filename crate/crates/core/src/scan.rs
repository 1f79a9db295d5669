//! Log-concavity verdicts shared by the count and extremal scans.

use std::cmp::Ordering;
use std::fmt;

use crate::counts::CountTable;
use crate::{ExactInt, Runner};

/// Outcome of comparing `a_k^2` against `a_(k-1) * a_(k+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Strict,
    Equal,
    Violation,
}

impl Verdict {
    pub fn from_sides<T: Ord>(lhs: &T, rhs: &T) -> Self {
        match lhs.cmp(rhs) {
            Ordering::Greater => Verdict::Strict,
            Ordering::Equal => Verdict::Equal,
            Ordering::Less => Verdict::Violation,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Strict => "strict",
            Verdict::Equal => "equal",
            Verdict::Violation => "violation",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One interior comparison of a log-concavity scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub p: u32,
    pub n: usize,
    pub k: usize,
    pub lhs: ExactInt,
    pub rhs: ExactInt,
    pub verdict: Verdict,
}

/// Checks `a[k]^2 >= a[k-1] * a[k+1]` for every interior `k` of one row.
///
/// `row[k]` is the term for `k`; index 0 is ignored.
pub fn row_verdicts(p: u32, n: usize, row: &[ExactInt]) -> Vec<ScanRow> {
    (2..n)
        .map(|k| {
            let lhs = &row[k] * &row[k];
            let rhs = &row[k - 1] * &row[k + 1];
            let verdict = Verdict::from_sides(&lhs, &rhs);
            ScanRow {
                p,
                n,
                k,
                lhs,
                rhs,
                verdict,
            }
        })
        .collect()
}

/// Log-concavity in `k` of every row `3 <= n <= nmax` of a count table,
/// sorted by `(n, k)`.
pub fn table_log_concavity(table: &CountTable, runner: &Runner) -> Vec<ScanRow> {
    let nmax = table.nmax();
    if nmax < 3 {
        return Vec::new();
    }
    runner
        .map_range(3..nmax + 1, |n| row_verdicts(table.p(), n, table.row(n)))
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::build_table;

    #[test]
    fn verdict_ordering() {
        assert_eq!(Verdict::from_sides(&81, &8), Verdict::Strict);
        assert_eq!(Verdict::from_sides(&4, &4), Verdict::Equal);
        assert_eq!(Verdict::from_sides(&3, &4), Verdict::Violation);
    }

    #[test]
    fn p2_n3_row() {
        let table = build_table(2, 3, &Runner::sequential()).unwrap();
        let rows = table_log_concavity(&table, &Runner::sequential());
        assert_eq!(rows.len(), 1);
        let r = &rows[0];
        assert_eq!((r.n, r.k), (3, 2));
        assert_eq!(r.lhs, ExactInt::from(81));
        assert_eq!(r.rhs, ExactInt::from(8));
        assert_eq!(r.verdict, Verdict::Strict);
    }
}
