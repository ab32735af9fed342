//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (visible with `--nocapture`). All comparisons are exact;
//! the only tolerances anywhere are the wall-clock budgets.
//!
//! Run with: cargo test -p kgonal-cli --test acceptance -- --nocapture

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use kgonal_core::exactmath::{lucas_pair, lucas_pair_via_pow};
use kgonal_core::figurate::PolygonParams;
use kgonal_core::intersect::{self, record, stream};
use kgonal_core::oracle;
use kgonal_core::pell;

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn criterion_1_known_table_reproduced_by_cli() {
    let started = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_kgonal"))
        .args(["gen", "--k", "3", "--count", "6"])
        .output()
        .expect("binary should run");
    let elapsed = started.elapsed();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<String>> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().map(str::to_owned).collect())
        .collect();
    let expected: [(&str, &str, &str); 6] = [
        ("1", "1", "1"),
        ("4", "3", "10"),
        ("16", "10", "136"),
        ("61", "36", "1891"),
        ("229", "133", "26335"),
        ("856", "495", "366796"),
    ];
    assert_eq!(rows.len(), 6);
    for (row, (n, m, value)) in rows.iter().zip(expected.iter()) {
        assert_eq!((&row[1][..], &row[2][..], &row[3][..]), (*n, *m, *value));
    }
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1: PASS — gen --k 3 --count 6 lists the six known (n, m, value) rows in {elapsed:?}");
}

#[test]
fn criterion_2_oracle_equivalence_to_1e8() {
    let started = Instant::now();
    let limit = BigInt::from(100_000_000u64);
    let mut total = 0;
    for k in 3u32..=12 {
        let params = PolygonParams::new(k).unwrap();
        let report = oracle::compare(&params, &limit);
        assert!(
            report.closed_form_agreement,
            "k={k}: {:?}",
            report.first_divergence
        );
        total += report.matches.len();
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 2: PASS — brute force and closed form agree on {total} triples for k=3..12 up to 1e8 in {elapsed:?}");
}

#[test]
fn criterion_3_integrality_of_every_exact_division() {
    for k in 3u32..=30 {
        let kk = BigInt::from(k);
        for i in 0u64..=40 {
            let cur = lucas_pair(k, i).unwrap();
            let next = lucas_pair(k, i + 1).unwrap();
            let odd = lucas_pair(k, 2 * i + 1).unwrap();
            // value numerator divisible by 16(k−2)
            let value_num = &kk * &odd.s - (&kk * &kk) * 2u32 + &kk * 18u32 - 32u32;
            assert!((value_num % (16 * (u64::from(k) - 2))).eq(&big(0)), "k={k}, i={i}");
            // centered-index numerator divisible by 4
            let m_num = &cur.s + &kk * &cur.u + 2u32;
            assert!((m_num % 4u32).eq(&big(0)), "k={k}, i={i}");
            // polygonal-index numerator divisible by 2(k−2)
            let a = (&cur.s + &next.s) / 2u32;
            let n_num = a + (i64::from(k) - 4);
            assert!((n_num % (2 * (u64::from(k) - 2))).eq(&big(0)), "k={k}, i={i}");
        }
    }
    println!("criterion 3: PASS — all three exact-divisibility claims hold for k=3..30, i=0..40");
}

#[test]
fn criterion_4_cross_family_identity() {
    for k in 3u32..=30 {
        let params = PolygonParams::new(k).unwrap();
        let disc = BigInt::from(k) * BigInt::from(k - 2);
        for i in 0u64..=40 {
            let value = intersect::value_at(k, i).unwrap();
            let n = intersect::index_n(k, i).unwrap();
            let m = intersect::index_m(k, i).unwrap();
            let a = intersect::radical_a(k, i).unwrap();
            assert_eq!(params.polygonal(&n).unwrap(), value, "k={k}, i={i}");
            assert_eq!(params.centered(&m).unwrap(), value, "k={k}, i={i}");
            let odd = &m * 2u32 - 1u32;
            assert_eq!(&disc * &odd * &odd + BigInt::from(2 * k), &a * &a, "k={k}, i={i}");
        }
    }
    println!("criterion 4: PASS — P(n_i;k) = C(m_i;k) = N_i and the radical identity hold on the full grid");
}

#[test]
fn criterion_5_radical_steps_factor_through_lucas_halves() {
    for k in 3u32..=30 {
        let step = BigInt::from(2 * u64::from(k) * (u64::from(k) - 2));
        for i in 0u64..=40 {
            let delta =
                intersect::radical_a(k, i + 1).unwrap() - intersect::radical_a(k, i).unwrap();
            assert!((&delta % &step).eq(&big(0)), "k={k}, i={i}");
            let quotient = delta / &step;
            assert_eq!(quotient, lucas_pair(k, i + 1).unwrap().u / 2u32, "k={k}, i={i}");
        }
    }
    println!("criterion 5: PASS — 2k(k−2) divides each radical step and the quotient is u/2, k=3..30, i=0..40");
}

#[test]
fn criterion_6_continued_fraction_reproduces_the_least_solution() {
    for k in 3u32..=50 {
        let disc = BigInt::from(k) * BigInt::from(k - 2);
        let f = pell::pell_fundamental(&disc).unwrap();
        assert_eq!(f.x(), &big(i64::from(k) - 1), "k={k}");
        assert_eq!(f.y(), &big(1), "k={k}");
    }
    println!("criterion 6: PASS — CF-derived fundamental solution is (k−1, 1) for every k=3..50");
}

#[test]
fn criterion_7_norm_two_route_agrees_with_direct_generation() {
    for k in [4u32, 9, 16, 25] {
        let via_norm_two = intersect::case2_sequence(k, 10).unwrap();
        let direct: Vec<(BigInt, BigInt)> = stream(k, 0)
            .unwrap()
            .take(10)
            .map(|r| (r.m, r.value))
            .collect();
        assert_eq!(via_norm_two, direct, "k={k}");
    }
    println!("criterion 7: PASS — the norm-2 route equals the first 10 (m, value) pairs for k in {{4, 9, 16, 25}}");
}

#[test]
fn criterion_8_dual_paths_agree_at_depth() {
    let started = Instant::now();
    for k in 3u32..=12 {
        for (offset, rec) in stream(k, 0).unwrap().take(201).enumerate() {
            let i = offset as u64;
            assert_eq!(rec, record(k, i).unwrap(), "k={k}, i={i}");
            assert_eq!(lucas_pair(k, i).unwrap(), lucas_pair_via_pow(k, i).unwrap());
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("criterion 8: PASS — stream = record and recurrence = ring powers for k=3..12, i<=200 in {elapsed:?}");
}

#[test]
fn criterion_9_even_order_half_discriminant_form() {
    for k in (4u32..=30).step_by(2) {
        let quarter_disc = BigInt::from(u64::from(k) * (u64::from(k) - 2) / 4);
        for i in 0u64..=20 {
            let rec = record(k, i).unwrap();
            let z = (BigInt::from(k) * &rec.b - BigInt::from(k - 2) * &rec.big_a) / 2u32;
            let w = &rec.big_a - &rec.b;
            assert_eq!(&z * &z - &quarter_disc * &w * &w, big(1), "k={k}, i={i}");
        }
    }
    println!("criterion 9: PASS — Z'² − (k(k−2)/4)·W'² = 1 for even k<=30, i<=20");
}
