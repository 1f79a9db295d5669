use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use orbitcount::extremal::{
    case_report, check_e_logconcavity, classify_case, e_enumerate, e_max, ex_bruteforce_all,
    lemma_checks, profiles, strict_threshold, turan_clique_count, Case, FACTORIAL_SUM_MAX,
};
use orbitcount::Runner;

#[test]
fn closed_form_e_matches_exhaustive_maximum() {
    for n in 1..=60 {
        for k in 1..=n {
            let m = e_enumerate(n, k).unwrap();
            assert_eq!(m.value, e_max(n, k).unwrap(), "E({n},{k})");
            assert_eq!(m.maximizers, 1, "E({n},{k}) maximizer not unique");
            let spread = m.parts.first().unwrap() - m.parts.last().unwrap();
            assert!(spread <= 1, "E({n},{k}) maximizer {:?}", m.parts);
        }
    }
}

#[test]
fn turan_graph_counts_match() {
    for n in 1..=50 {
        for k in 1..=n {
            assert_eq!(turan_clique_count(n, k).unwrap(), e_max(n, k).unwrap());
        }
    }
}

#[test]
fn exhaustive_graphs_match_small_n() {
    let runner = Runner::new(8).unwrap();
    for n in 1..=6 {
        let best = ex_bruteforce_all(n, &runner).unwrap();
        for k in 1..=n {
            assert_eq!(
                BigInt::from(best[k]),
                e_max(n, k).unwrap(),
                "ex({n}, K{k}, K{})",
                k + 1
            );
        }
    }
}

#[test]
fn e_ratio_at_least_one_and_equality_only_below_threshold() {
    let report = check_e_logconcavity(2000, &Runner::new(8).unwrap()).unwrap();
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    assert!(report.equalities_above_threshold().is_empty());
    for &(n, k) in &report.equalities {
        assert!(n < strict_threshold(k));
    }
    assert_eq!(
        report.checked,
        report.strict + report.equalities.len() as u64
    );
}

#[test]
fn e_scan_is_independent_of_workers() {
    let a = check_e_logconcavity(600, &Runner::sequential()).unwrap();
    let b = check_e_logconcavity(600, &Runner::new(8).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn case_analysis_covers_small_range() {
    let report = case_report(120, &Runner::new(8).unwrap()).unwrap();
    assert_eq!(report.violation_count(), 0, "{report:?}");
    assert_eq!(report.checked, (3..=120).map(|n| n - 2).sum::<usize>());
}

#[test]
fn profiles_below_threshold_use_cases_two_to_six() {
    let one = BigRational::one();
    for prof in profiles(80, &Runner::sequential()).unwrap() {
        let below = prof.n < strict_threshold(prof.k);
        assert_eq!(
            below,
            prof.case != Case::AboveThreshold,
            "({}, {})",
            prof.n,
            prof.k
        );
        match prof.case {
            Case::Flat | Case::LeadingDropExact => assert_eq!(prof.r_e, one),
            _ => assert!(prof.r_e > one),
        }
        let needs_closed_form = matches!(
            prof.case,
            Case::LeadingDropPositive | Case::TrailingDrop | Case::DoubleDrop
        );
        assert_eq!(prof.closed_form_r_e.is_some(), needs_closed_form);
    }
}

#[test]
fn single_profile_matches_batch() {
    let batch = profiles(40, &Runner::sequential()).unwrap();
    for prof in batch.iter().filter(|p| p.n % 7 == 0) {
        assert_eq!(&classify_case(prof.n, prof.k).unwrap(), prof);
    }
}

#[test]
fn lemmas_hold_on_moderate_range() {
    let report = lemma_checks(200, 200, FACTORIAL_SUM_MAX, &Runner::new(4).unwrap()).unwrap();
    assert_eq!(report.violation_count(), 0);
    assert!(report.tallies().iter().all(|t| t.checked > 0));
}
