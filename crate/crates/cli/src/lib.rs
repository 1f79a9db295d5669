//! Report-producing commands behind the `orbitcount` binary.
//!
//! Every command writes a complete CSV or JSON document to the given sink and
//! returns an [`Outcome`]; the binary maps outcomes and errors to exit codes.
//! Big integers are always written as decimal strings.

pub mod decimal;

use std::fmt::Write as _;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use orbitcount::arith::{flag_sum_oracle, subgroup_count};
use orbitcount::bruteforce::{brute_counts, in_guard};
use orbitcount::counts::{build_rows, build_table};
use orbitcount::extremal::{
    asymptotic_ratio, e_log_concavity_rows, lemma_checks, profiles, strict_threshold,
    FACTORIAL_SUM_MAX,
};
use orbitcount::scan::{table_log_concavity, Verdict};
use orbitcount::Runner;
use serde_json::{json, Value};
use thiserror::Error;

/// Significant digits in rendered ratios.
pub const RATIO_DIGITS: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error(transparent)]
    Core(#[from] orbitcount::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Core(orbitcount::Error::Inconsistent(_)) => 1,
            CliError::Core(_) => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// What a finished command reports besides its document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub violations: usize,
    pub summary: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.violations == 0 {
            0
        } else {
            1
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Streams rows as CSV lines under a header, or as a JSON array that may be
/// wrapped in an object with extra leading and trailing fields.
struct Document<'a> {
    format: Format,
    out: &'a mut dyn Write,
    rows: usize,
    object: bool,
}

impl<'a> Document<'a> {
    fn csv(out: &'a mut dyn Write, header: &str) -> io::Result<Self> {
        writeln!(out, "{header}")?;
        Ok(Document {
            format: Format::Csv,
            out,
            rows: 0,
            object: false,
        })
    }

    /// A bare JSON array when `head` is empty, otherwise an object with the
    /// `head` fields, then `rows`, then the tail fields.
    fn json(out: &'a mut dyn Write, head: &[(&str, Value)]) -> io::Result<Self> {
        if head.is_empty() {
            writeln!(out, "[")?;
        } else {
            write!(out, "{{")?;
            for (key, value) in head {
                write!(out, "{}:{},", json!(key), value)?;
            }
            writeln!(out, "\"rows\":[")?;
        }
        Ok(Document {
            format: Format::Json,
            out,
            rows: 0,
            object: !head.is_empty(),
        })
    }

    fn open(
        format: Format,
        out: &'a mut dyn Write,
        header: &str,
        head: &[(&str, Value)],
    ) -> io::Result<Self> {
        match format {
            Format::Csv => Self::csv(out, header),
            Format::Json => Self::json(out, head),
        }
    }

    /// Adds one pre-rendered row (a CSV line or a JSON object, no newline).
    fn row(&mut self, line: &str) -> io::Result<()> {
        if self.format == Format::Json && self.rows > 0 {
            writeln!(self.out, ",")?;
        }
        self.rows += 1;
        match self.format {
            Format::Csv => writeln!(self.out, "{line}"),
            Format::Json => write!(self.out, "{line}"),
        }
    }

    fn finish(self, tail: &[(&str, Value)]) -> io::Result<()> {
        if self.format == Format::Csv {
            return self.out.flush();
        }
        if self.rows > 0 {
            writeln!(self.out)?;
        }
        if !self.object {
            writeln!(self.out, "]")?;
        } else {
            write!(self.out, "]")?;
            for (key, value) in tail {
                write!(self.out, ",{}:{}", json!(key), value)?;
            }
            writeln!(self.out, "}}")?;
        }
        self.out.flush()
    }
}

fn render(format: Format, csv: impl FnOnce() -> String, json: impl FnOnce() -> Value) -> String {
    match format {
        Format::Csv => csv(),
        Format::Json => json().to_string(),
    }
}

/// `table`: every `A(p, n, k)` for `1 <= k <= n <= nmax`, streamed by row.
pub fn cmd_table(
    p: u32,
    nmax: usize,
    format: Format,
    runner: &Runner,
    out: &mut dyn Write,
) -> CliResult<Outcome> {
    if p == 0 || nmax == 0 {
        return Err(usage("table needs --p >= 1 and --nmax >= 1"));
    }
    let mut doc = Document::open(format, out, "p,n,k,A", &[])?;
    let mut io_err = None;
    let built = build_rows(p, nmax, runner, |n, row| {
        for (k, a) in row.iter().enumerate().skip(1) {
            let line = render(
                format,
                || format!("{p},{n},{k},{a}"),
                || json!({"p": p, "n": n, "k": k, "A": a.to_string()}),
            );
            if let Err(e) = doc.row(&line) {
                io_err = Some(e);
                return Err(orbitcount::Error::InvalidArgument("output closed".into()));
            }
        }
        Ok(())
    });
    if let Some(e) = io_err {
        return Err(e.into());
    }
    built?;
    doc.finish(&[])?;
    Ok(Outcome {
        violations: 0,
        summary: format!("table p={p} nmax={nmax}: {} entries", nmax * (nmax + 1) / 2),
    })
}

/// `logconcavity`: `A(p,n,k)^2` against `A(p,n,k-1) A(p,n,k+1)` for all
/// `3 <= n <= nmax`, `2 <= k <= n - 1`.
pub fn cmd_logconcavity(
    p: u32,
    nmax: usize,
    format: Format,
    runner: &Runner,
    out: &mut dyn Write,
) -> CliResult<Outcome> {
    if p == 0 || nmax < 3 {
        return Err(usage("logconcavity needs --p >= 1 and --nmax >= 3"));
    }
    let table = build_table(p, nmax, runner)?;
    let rows = table_log_concavity(&table, runner);
    let violations = rows
        .iter()
        .filter(|r| r.verdict == Verdict::Violation)
        .count();
    let lines = runner.map(&rows, |r| {
        render(
            format,
            || format!("{},{},{},{},{},{}", r.p, r.n, r.k, r.lhs, r.rhs, r.verdict),
            || {
                json!({"p": r.p, "n": r.n, "k": r.k, "lhs": r.lhs.to_string(),
                       "rhs": r.rhs.to_string(), "verdict": r.verdict.as_str()})
            },
        )
    });
    let head = [
        ("scan", json!("logconcavity")),
        ("p", json!(p)),
        ("nmax", json!(nmax)),
    ];
    let mut doc = Document::open(format, out, "p,n,k,lhs,rhs,verdict", &head)?;
    for line in &lines {
        doc.row(line)?;
    }
    doc.finish(&[("violation_count", json!(violations))])?;
    let equal = rows.iter().filter(|r| r.verdict == Verdict::Equal).count();
    Ok(Outcome {
        violations,
        summary: format!(
            "logconcavity p={p} nmax={nmax}: {} comparisons, {equal} equal, {violations} violations",
            rows.len()
        ),
    })
}

struct ExtremalLine {
    check: &'static str,
    n: usize,
    k: usize,
    lhs: String,
    rhs: String,
    verdict: &'static str,
    case: String,
    detail: Option<String>,
}

impl ExtremalLine {
    fn render(&self, format: Format) -> String {
        render(
            format,
            || {
                format!(
                    "{},{},{},{},{},{},{}",
                    self.check, self.n, self.k, self.lhs, self.rhs, self.verdict, self.case
                )
            },
            || {
                let mut v = json!({"check": self.check, "n": self.n, "k": self.k, "lhs": self.lhs,
                                   "rhs": self.rhs, "verdict": self.verdict, "case": self.case});
                if let Some(d) = &self.detail {
                    v["detail"] = json!(d);
                }
                v
            },
        )
    }
}

/// `extremal`: log-concavity of `E`, the large-`p` case analysis and the
/// supporting lemmas, all for `n <= nmax`.
pub fn cmd_extremal(
    nmax: usize,
    format: Format,
    runner: &Runner,
    out: &mut dyn Write,
) -> CliResult<Outcome> {
    if nmax < 3 {
        return Err(usage("extremal needs --nmax >= 3"));
    }
    let e_rows = e_log_concavity_rows(nmax, runner);
    let profs = profiles(nmax, runner)?;
    let lemmas = lemma_checks(nmax, nmax, FACTORIAL_SUM_MAX, runner)?;
    let one = BigRational::one();

    let mut lines: Vec<ExtremalLine> = Vec::new();
    let mut case_counts = [0usize; 6];
    for (row, prof) in e_rows.iter().zip(&profs) {
        debug_assert_eq!((row.n, row.k), (prof.n, prof.k));
        case_counts[prof.case.number() as usize - 1] += 1;
        lines.push(ExtremalLine {
            check: "e_logconcavity",
            n: row.n,
            k: row.k,
            lhs: row.lhs.to_string(),
            rhs: row.rhs.to_string(),
            verdict: row.verdict.as_str(),
            case: prof.case.to_string(),
            detail: None,
        });
    }
    let mut strictness_failures = 0;
    for row in &e_rows {
        if row.verdict == Verdict::Equal && row.n >= strict_threshold(row.k) {
            strictness_failures += 1;
            lines.push(ExtremalLine {
                check: "e_strictness",
                n: row.n,
                k: row.k,
                lhs: row.lhs.to_string(),
                rhs: row.rhs.to_string(),
                verdict: Verdict::Violation.as_str(),
                case: "1".into(),
                detail: Some("equality at or above k^2-2k+2".into()),
            });
        }
    }
    let mut f_violations = 0;
    for prof in profs.iter().filter(|p| p.r_e == one) {
        let lhs = &prof.f * &prof.f;
        let rhs = &lhs / &prof.r_f;
        let verdict = Verdict::from_sides(&lhs, &rhs);
        if verdict == Verdict::Violation {
            f_violations += 1;
        }
        lines.push(ExtremalLine {
            check: "f_logconcavity",
            n: prof.n,
            k: prof.k,
            lhs: decimal::exact(&lhs),
            rhs: decimal::exact(&rhs),
            verdict: verdict.as_str(),
            case: prof.case.to_string(),
            detail: None,
        });
    }
    let mut case_check_failures = 0;
    for prof in &profs {
        let mut failed = Vec::new();
        if !prof.factorization_agrees() {
            failed.push("R_F != R_F1 * R_F2");
        }
        if !prof.closed_forms_agree() {
            failed.push("closed form mismatch");
        }
        if !prof.case_conclusion_holds() {
            failed.push("case conclusion fails");
        }
        if !failed.is_empty() {
            case_check_failures += 1;
            lines.push(ExtremalLine {
                check: "case_check",
                n: prof.n,
                k: prof.k,
                lhs: decimal::exact(&prof.r_e),
                rhs: decimal::exact(&prof.r_f),
                verdict: Verdict::Violation.as_str(),
                case: prof.case.to_string(),
                detail: Some(failed.join("; ")),
            });
        }
    }
    let names = ["lemma1", "lemma2", "lemma3", "lemma4"];
    for (name, tally) in names.iter().zip(lemmas.tallies()) {
        for v in &tally.violations {
            lines.push(ExtremalLine {
                check: name,
                n: v.n,
                k: v.k,
                lhs: String::new(),
                rhs: String::new(),
                verdict: Verdict::Violation.as_str(),
                case: String::new(),
                detail: Some(v.detail.clone()),
            });
        }
    }

    let e_violations = e_rows
        .iter()
        .filter(|r| r.verdict == Verdict::Violation)
        .count();
    let violations = e_violations
        + strictness_failures
        + f_violations
        + case_check_failures
        + lemmas.violation_count();

    let rendered = runner.map(&lines, |l| l.render(format));
    let head = [("scan", json!("extremal")), ("nmax", json!(nmax))];
    let mut doc = Document::open(format, out, "check,n,k,lhs,rhs,verdict,case", &head)?;
    for line in &rendered {
        doc.row(line)?;
    }
    let lemma_json: Vec<Value> = names
        .iter()
        .zip(lemmas.tallies())
        .map(|(name, t)| json!({"check": name, "checked": t.checked, "violations": t.violations.len()}))
        .collect();
    doc.finish(&[
        ("case_counts", json!(case_counts)),
        ("lemmas", Value::Array(lemma_json)),
        ("violation_count", json!(violations)),
    ])?;

    let mut summary = format!(
        "extremal nmax={nmax}: {} E comparisons, cases {:?}, ",
        e_rows.len(),
        case_counts
    );
    for (name, t) in names.iter().zip(lemmas.tallies()) {
        let _ = write!(
            summary,
            "{name} {}/{} ok, ",
            t.checked as usize - t.violations.len(),
            t.checked
        );
    }
    let _ = write!(summary, "{violations} violations");
    Ok(Outcome {
        violations,
        summary,
    })
}

/// `asymptotics`: `A(p,n,k) / (F(n,k) E(n,k)^p)` for `p = step, 2 step, ..`.
#[allow(clippy::too_many_arguments)]
pub fn cmd_asymptotics(
    n: usize,
    k: usize,
    pmax: u32,
    step: u32,
    format: Format,
    runner: &Runner,
    out: &mut dyn Write,
) -> CliResult<Outcome> {
    if k == 0 || k > n {
        return Err(usage("asymptotics needs 1 <= --k <= --n"));
    }
    if step == 0 || pmax < step {
        return Err(usage("asymptotics needs --step >= 1 and --pmax >= --step"));
    }
    let ps: Vec<u32> = (1..=pmax / step).map(|i| i * step).collect();
    let ratios = runner.map(&ps, |&p| -> orbitcount::Result<BigRational> {
        let table = build_table(p, n, &Runner::sequential())?;
        asymptotic_ratio(&table, n, k)
    });
    let mut doc = Document::open(format, out, "p,n,k,ratio,exact", &[])?;
    for (p, ratio) in ps.iter().zip(ratios) {
        let ratio = ratio?;
        let dec = decimal::significant(&ratio, RATIO_DIGITS);
        let exact = decimal::exact(&ratio);
        let line = render(
            format,
            || format!("{p},{n},{k},{dec},{exact}"),
            || json!({"p": p, "n": n, "k": k, "ratio": dec, "exact": exact}),
        );
        doc.row(&line)?;
    }
    doc.finish(&[])?;
    Ok(Outcome {
        violations: 0,
        summary: format!("asymptotics n={n} k={k}: {} values of p", ps.len()),
    })
}

/// Largest `--nmax` and `--pmax` accepted by `oracle`.
pub const ORACLE_MAX_N: usize = 6;
pub const ORACLE_MAX_P: u32 = 3;

/// `oracle`: brute-force tallies against table rows for every in-guard
/// `(p, n)`.
pub fn cmd_oracle(
    nmax: usize,
    pmax: u32,
    format: Format,
    runner: &Runner,
    out: &mut dyn Write,
) -> CliResult<Outcome> {
    if nmax == 0 || pmax == 0 {
        return Err(usage("oracle needs --nmax >= 1 and --pmax >= 1"));
    }
    if nmax > ORACLE_MAX_N || pmax > ORACLE_MAX_P {
        return Err(orbitcount::Error::Guard(format!(
            "oracle supports --nmax <= {ORACLE_MAX_N} and --pmax <= {ORACLE_MAX_P} (n <= 5 when p = 3)"
        ))
        .into());
    }
    let mut doc = Document::open(format, out, "p,n,k,brute,table,match", &[])?;
    let mut mismatches = 0;
    let mut compared = 0;
    for p in 1..=pmax {
        let table = build_table(p, nmax, runner)?;
        for n in (1..=nmax).filter(|&n| in_guard(p, n)) {
            let brute = brute_counts(p, n, runner)?;
            for k in 1..=n {
                let b = brute.get(&k).cloned().unwrap_or_default();
                let t = table.get(n, k);
                let ok = b == t;
                compared += 1;
                if !ok {
                    mismatches += 1;
                }
                let flag = if ok { "yes" } else { "no" };
                let line = render(
                    format,
                    || format!("{p},{n},{k},{b},{t},{flag}"),
                    || json!({"p": p, "n": n, "k": k, "brute": b.to_string(), "table": t.to_string(), "match": ok}),
                );
                doc.row(&line)?;
            }
        }
    }
    doc.finish(&[])?;
    Ok(Outcome {
        violations: mismatches,
        summary: format!(
            "oracle nmax={nmax} pmax={pmax}: {compared} entries, {mismatches} mismatches"
        ),
    })
}

/// `bp`: a single `B(p, n)`, from the closed form or the flag sum.
pub fn cmd_bp(
    p: u32,
    n: u64,
    flags_oracle: bool,
    format: Format,
    out: &mut dyn Write,
) -> CliResult<Outcome> {
    if p == 0 || n == 0 {
        return Err(usage("bp needs --p >= 1 and --n >= 1"));
    }
    let value: BigInt = if flags_oracle {
        flag_sum_oracle(p, n)?
    } else {
        subgroup_count(p, n)?
    };
    let mut doc = Document::open(format, out, "p,n,B", &[])?;
    let line = render(
        format,
        || format!("{p},{n},{value}"),
        || json!({"p": p, "n": n, "B": value.to_string()}),
    );
    doc.row(&line)?;
    doc.finish(&[])?;
    let route = if flags_oracle {
        "flag sum"
    } else {
        "closed form"
    };
    Ok(Outcome {
        violations: 0,
        summary: format!("bp p={p} n={n} via {route}"),
    })
}
