use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use orbitcount::arith::{
    binomial, factorial, flag_sum_oracle, h_value, subgroup_count, subgroup_counts,
};
use orbitcount::bruteforce::{brute_counts, in_guard};
use orbitcount::counts::{a_composition, build_table, row_total, stirling_row};
use orbitcount::Runner;

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Number of integer partitions of `n`, by the coin-change recurrence.
fn partition_numbers(nmax: usize) -> Vec<BigInt> {
    let mut ways = vec![BigInt::zero(); nmax + 1];
    ways[0] = BigInt::one();
    for part in 1..=nmax {
        for total in part..=nmax {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways
}

#[test]
fn subgroup_count_and_h_are_multiplicative() {
    for p in 1..=5 {
        for a in 1..=100u64 {
            for b in 1..=100u64 {
                if gcd(a, b) != 1 {
                    continue;
                }
                assert_eq!(
                    subgroup_count(p, a * b).unwrap(),
                    subgroup_count(p, a).unwrap() * subgroup_count(p, b).unwrap(),
                    "B({p}, {a}*{b})"
                );
                if p == 1 {
                    assert_eq!(
                        h_value(a * b).unwrap(),
                        h_value(a).unwrap() * h_value(b).unwrap(),
                        "H({a}*{b})"
                    );
                }
            }
        }
    }
}

#[test]
fn b_small_p_closed_forms() {
    let ones = subgroup_counts(1, 10_000).unwrap();
    let twos = subgroup_counts(2, 10_000).unwrap();
    for n in 1..=10_000usize {
        assert_eq!(ones[n], BigInt::one(), "B(1, {n})");
        let sigma: u64 = (1..=n as u64)
            .filter(|d| (n as u64).is_multiple_of(*d))
            .sum();
        assert_eq!(twos[n], BigInt::from(sigma), "B(2, {n})");
    }
}

#[test]
fn b_over_n_approaches_h_times_n_to_the_p() {
    for n in 1..=30u64 {
        let h = h_value(n).unwrap();
        let dev = |p: u32| {
            let b = subgroup_count(p, n).unwrap();
            let value = BigRational::new(b, BigInt::from(n))
                / (h.clone() * BigRational::from_integer(BigInt::from(n).pow(p)));
            (value - BigRational::one()).abs()
        };
        let (d10, d40) = (dev(10), dev(40));
        assert!(d40 < BigRational::new(1.into(), 1000.into()), "n = {n}");
        assert!(d40 < d10 || d40.is_zero(), "n = {n}");
    }
}

#[test]
fn stirling_rows_for_p1() {
    let t = build_table(1, 30, &Runner::sequential()).unwrap();
    for n in 1..=30 {
        assert_eq!(t.row(n), &stirling_row(n)[..], "n = {n}");
    }
}

#[test]
fn recurrence_matches_composition_sum() {
    for p in 1..=4 {
        let t = build_table(p, 12, &Runner::sequential()).unwrap();
        for n in 1..=12 {
            for k in 1..=n {
                assert_eq!(
                    t.get(n, k),
                    a_composition(p, n, k).unwrap(),
                    "A({p},{n},{k})"
                );
            }
        }
    }
}

#[test]
fn recurrence_matches_brute_force() {
    let runner = Runner::new(4).unwrap();
    for p in 1..=3 {
        let t = build_table(p, 6, &runner).unwrap();
        for n in 1..=6 {
            if !in_guard(p, n) {
                continue;
            }
            let brute = brute_counts(p, n, &runner).unwrap();
            for k in 1..=n {
                let b = brute.get(&k).cloned().unwrap_or_default();
                assert_eq!(b, t.get(n, k), "A({p},{n},{k})");
            }
        }
    }
}

#[test]
fn commuting_pair_totals() {
    let t = build_table(2, 40, &Runner::sequential()).unwrap();
    let parts = partition_numbers(40);
    for n in 1..=40 {
        assert_eq!(
            row_total(&t, n).unwrap(),
            &parts[n] * factorial(n as u64),
            "n = {n}"
        );
    }
    let seq = Runner::sequential();
    for n in 1..=6 {
        let total: BigInt = brute_counts(2, n, &seq).unwrap().values().sum();
        assert_eq!(total, &parts[n] * factorial(n as u64));
    }
}

#[test]
fn single_orbit_and_one_merge_columns() {
    for p in 1..=5 {
        let t = build_table(p, 100, &Runner::sequential()).unwrap();
        let pair = BigInt::from(2).pow(p) - 1;
        for n in 1..=100 {
            let b = subgroup_count(p, n as u64).unwrap();
            assert_eq!(t.get(n, 1), factorial(n as u64 - 1) * b, "A({p},{n},1)");
            assert_eq!(t.get(n, n), BigInt::one());
            if n >= 2 {
                assert_eq!(t.get(n, n - 1), binomial(n as u64, 2) * &pair);
            }
            for k in 1..=n {
                assert!(t.get(n, k) >= BigInt::one());
            }
        }
    }
}

#[test]
fn brute_force_boundary_columns() {
    let seq = Runner::sequential();
    for p in 1..=3u32 {
        for n in 2..=6 {
            if !in_guard(p, n) {
                continue;
            }
            let counts = brute_counts(p, n, &seq).unwrap();
            assert_eq!(counts[&n], BigInt::one());
            assert_eq!(
                counts[&(n - 1)],
                binomial(n as u64, 2) * (BigInt::from(2).pow(p) - 1)
            );
        }
    }
}

#[test]
fn worker_count_does_not_change_tables() {
    let seq = build_table(3, 60, &Runner::sequential()).unwrap();
    let par = build_table(3, 60, &Runner::new(8).unwrap()).unwrap();
    assert_eq!(seq, par);
}

mod props {
    use super::*;
    use orbitcount::bruteforce::{count_orbits, Permutation};
    use proptest::prelude::*;

    fn perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u8).collect::<Vec<u8>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn flag_sum_is_multiplicative(a in 1u64..=100, b in 1u64..=100, p in 1u32..=5) {
            prop_assume!(gcd(a, b) == 1);
            prop_assert_eq!(
                flag_sum_oracle(p, a * b).unwrap(),
                flag_sum_oracle(p, a).unwrap() * flag_sum_oracle(p, b).unwrap()
            );
        }

        #[test]
        fn commutation_is_symmetric(a in perm(6), b in perm(6)) {
            prop_assert_eq!(a.commutes_with(&b), b.commutes_with(&a));
            prop_assert_eq!(a.commutes_with(&b), a.compose(&b) == b.compose(&a));
        }

        #[test]
        fn orbit_count_ignores_tuple_order(perms in proptest::collection::vec(perm(7), 1..4), rot in 0usize..4) {
            let mut shuffled = perms.clone();
            let len = shuffled.len();
            shuffled.rotate_left(rot % len);
            shuffled.reverse();
            let k = count_orbits(&perms).unwrap();
            prop_assert_eq!(k, count_orbits(&shuffled).unwrap());
            prop_assert!((1..=7).contains(&k));
        }
    }
}
