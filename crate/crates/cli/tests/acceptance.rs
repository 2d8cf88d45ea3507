//! Acceptance suite: one test per shipped guarantee, each printing a
//! single PASS/FAIL line (visible with `--nocapture`) and enforcing its
//! time budget.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cubechaos_core::rational::{parse_decimal, parse_ratio, ratio, sixteenth_pow, Rational};
use cubechaos_core::{
    check_semiconjugacy, code_interval, dense_code, dense_code_length, diameter_squared,
    encode_point, sensitivity_witness, shift_by, subcube_distance_squared, verify_diagonal,
    verify_liyorke, verify_periodic_density, verify_separation, verify_transitivity, Code,
    Dimension, VerifyLimits,
};

fn criterion(name: &str, budget: Duration, body: impl FnOnce() + UnwindSafe) {
    let start = Instant::now();
    let result = catch_unwind(body);
    let elapsed = start.elapsed();
    match result {
        Ok(()) if elapsed <= budget => {
            println!("acceptance {name}: PASS ({elapsed:.2?} within {budget:?})");
        }
        Ok(()) => {
            println!("acceptance {name}: FAIL (exceeded budget: {elapsed:.2?} > {budget:?})");
            panic!("{name} exceeded its time budget");
        }
        Err(cause) => {
            println!("acceptance {name}: FAIL ({elapsed:.2?})");
            resume_unwind(cause);
        }
    }
}

fn dim(n: u32) -> Dimension {
    Dimension::new(n).unwrap()
}

fn line_code(digits: &[u64]) -> Code {
    Code::new(dim(1), digits.to_vec()).unwrap()
}

fn random_code(rng: &mut ChaCha8Rng, dimension: Dimension, order: usize) -> Code {
    let arity = dimension.arity();
    let digits = (0..order).map(|_| rng.next_u64() % arity + 1).collect();
    Code::new(dimension, digits).unwrap()
}

#[test]
fn c01_first_order_distances_on_the_line() {
    criterion("1: first-order distances", Duration::from_secs(1), || {
        let d =
            |a: &[u64], b: &[u64]| subcube_distance_squared(&line_code(a), &line_code(b)).unwrap();
        // squared distances between the closed interval hulls
        assert_eq!(d(&[1], &[3]), ratio(1, 16));
        assert_eq!(d(&[2], &[4]), ratio(1, 16));
        assert_eq!(d(&[1], &[4]), ratio(1, 4));
        // every value meets the first-order separation bound 1/16
        for (a, b) in [(1u64, 3u64), (2, 4), (1, 4)] {
            assert!(d(&[a], &[b]) >= ratio(1, 16));
        }
        // adjacent intervals touch
        assert_eq!(d(&[1], &[2]), ratio(0, 1));
    });
}

#[test]
fn c02_diameters_shrink_as_sixteenth_powers() {
    criterion("2: diagonal property", Duration::from_secs(1), || {
        for n in 1..=5u32 {
            let report = verify_diagonal(dim(n), 10, 100, 0xD1A6).unwrap();
            assert!(report.pass, "dimension {n}");
            assert!(report.counterexample.is_none());
            // independent spot check of the sampled claim
            let mut rng = ChaCha8Rng::seed_from_u64(u64::from(n));
            for k in 1..=10usize {
                let code = random_code(&mut rng, dim(n), k);
                let expected = Rational::from_integer(n.into()) * sixteenth_pow(k);
                assert_eq!(diameter_squared(&code), expected);
            }
        }
    });
}

#[test]
fn c03_every_first_order_cube_has_a_distant_partner() {
    criterion("3: separation property", Duration::from_secs(10), || {
        for n in 1..=4u32 {
            let report = verify_separation(dim(n), &VerifyLimits::default()).unwrap();
            assert!(report.pass, "dimension {n}");
            assert_eq!(report.witnesses.len(), 1usize << (2 * n));
            let bound = Rational::from_integer(n.into()) * sixteenth_pow(1);
            for witness in &report.witnesses {
                let d = parse_ratio(&witness.values["distance_squared"]).unwrap();
                assert!(d >= bound, "dimension {n}: {:?}", witness.codes);
            }
        }
    });
}

#[test]
fn c04_semiconjugacy_sweep() {
    criterion("4: semiconjugacy sweep", Duration::from_secs(10), || {
        let denominator = BigInt::from(1u64 << 40);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        for _ in 0..1000 {
            let numerator = rng.next_u64() % ((1u64 << 40) + 1);
            let x = Rational::new(BigInt::from(numerator), denominator.clone());
            assert!(check_semiconjugacy(&x, 19).unwrap(), "x = {x}");
        }
    });
}

/// Independent interval oracle: refine [0,1] forward, tracking the affine
/// form of the iterated map on the current interval and intersecting with
/// each branch domain preimage in turn.
fn forward_interval(digits: &[u64]) -> (Rational, Rational) {
    let mut lo = ratio(0, 1);
    let mut hi = ratio(1, 1);
    let mut a = ratio(1, 1);
    let mut b = ratio(0, 1);
    for &d in digits {
        let dom_lo = ratio(d as i64 - 1, 4);
        let dom_hi = ratio(d as i64, 4);
        let x1 = (&dom_lo - &b) / &a;
        let x2 = (&dom_hi - &b) / &a;
        let (p_lo, p_hi) = if x1 <= x2 { (x1, x2) } else { (x2, x1) };
        if p_lo > lo {
            lo = p_lo;
        }
        if p_hi < hi {
            hi = p_hi;
        }
        let (s, t) = match d {
            1 => (ratio(4, 1), ratio(0, 1)),
            2 => (ratio(-4, 1), ratio(2, 1)),
            3 => (ratio(4, 1), ratio(-2, 1)),
            _ => (ratio(-4, 1), ratio(4, 1)),
        };
        b = &s * &b + &t;
        a = &s * &a;
    }
    (lo, hi)
}

#[test]
fn c05_tent_intervals_match_a_forward_oracle() {
    criterion("5: tent interval oracle", Duration::from_secs(30), || {
        let mut stack = vec![Vec::new()];
        while let Some(digits) = stack.pop() {
            if !digits.is_empty() {
                let interval = code_interval(&line_code(&digits)).unwrap();
                let (lo, hi) = forward_interval(&digits);
                assert_eq!(interval.lower, lo, "{digits:?}");
                assert_eq!(interval.upper, hi, "{digits:?}");
                assert_eq!(
                    interval.width(),
                    Rational::new(1.into(), BigInt::from(1u64) << (2 * digits.len())),
                    "{digits:?}"
                );
            }
            if digits.len() < 6 {
                for d in 1..=4u64 {
                    let mut child = digits.clone();
                    child.push(d);
                    stack.push(child);
                }
            }
        }
    });
}

#[test]
fn c06_dense_codes_cover_every_subcube() {
    criterion(
        "6: transitivity at desk scale",
        Duration::from_secs(30),
        || {
            assert_eq!(dense_code_length(dim(1), 3), Some(228));
            assert_eq!(dense_code(dim(1), 3, 1 << 20).unwrap().order(), 228);

            let line = verify_transitivity(dim(1), 3, &VerifyLimits::default()).unwrap();
            assert!(line.pass);
            assert_eq!(line.witnesses.len(), 64);

            let square = verify_transitivity(dim(2), 2, &VerifyLimits::default()).unwrap();
            assert!(square.pass);
            assert_eq!(square.witnesses.len(), 256);
        },
    );
}

#[test]
fn c07_periodic_approximants_land_in_their_targets() {
    criterion("7: periodic density", Duration::from_secs(5), || {
        let report = verify_periodic_density(dim(2), 8, 100, 0xBEE5).unwrap();
        assert!(report.pass);
        assert_eq!(report.witnesses.len(), 100);
        let epsilon = ratio(2, 1) * sixteenth_pow(8);
        assert_eq!(
            parse_ratio(&report.params["epsilon_squared"]).unwrap(),
            epsilon
        );
        for witness in &report.witnesses {
            assert_eq!(
                parse_ratio(&witness.values["diameter_squared"]).unwrap(),
                epsilon
            );
        }
    });
}

#[test]
fn c08_sensitivity_pairs_agree_then_separate() {
    criterion("8: sensitivity witnesses", Duration::from_secs(5), || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5E11);
        for n in 1..=3u32 {
            for k in [0usize, 2, 5] {
                let bound = Rational::from_integer(n.into()) * sixteenth_pow(1);
                let shared = Rational::from_integer(n.into()) * sixteenth_pow(k);
                for _ in 0..100 {
                    let code = random_code(&mut rng, dim(n), k + 6);
                    let witness = sensitivity_witness(&code, k).unwrap();
                    assert_eq!(diameter_squared(&witness.original.prefix(k)), shared);
                    assert_eq!(
                        witness.original.digits()[..k],
                        witness.perturbed.digits()[..k]
                    );
                    let after_original = shift_by(&witness.original, k).unwrap();
                    let after_perturbed = shift_by(&witness.perturbed, k).unwrap();
                    let separation = subcube_distance_squared(
                        &after_original.prefix(1),
                        &after_perturbed.prefix(1),
                    )
                    .unwrap();
                    assert!(separation >= bound, "n={n} k={k}");
                }
            }
        }
    });
}

#[test]
fn c09_scrambled_pair_checkpoints() {
    criterion(
        "9: finite-horizon scrambling",
        Duration::from_secs(5),
        || {
            let report = verify_liyorke(dim(1), 10).unwrap();
            assert!(report.pass);
            let summary = report.witnesses.last().unwrap();
            let min_agree = parse_ratio(&summary.values["min_agree_distance_squared"]).unwrap();
            assert!(min_agree <= sixteenth_pow(10));
            for witness in &report.witnesses {
                if let Some(d) = witness.values.get("box_distance_squared") {
                    assert!(parse_ratio(d).unwrap() >= ratio(1, 16));
                }
            }
        },
    );
}

#[test]
fn c10_trajectory_reproduction() {
    criterion(
        "10: trajectory reproduction",
        Duration::from_secs(10),
        || {
            let args = [
                "orbit",
                "--dim",
                "2",
                "--init",
                "0.5746337359,0.3027738565",
                "--steps",
                "1000",
                "--depth",
                "1030",
            ];
            let run = || {
                let out = Command::new(env!("CARGO_BIN_EXE_cubechaos"))
                    .args(args)
                    .output()
                    .expect("binary runs");
                assert!(out.status.success());
                out.stdout
            };
            let first = run();
            let second = run();
            assert_eq!(first, second, "identical runs must emit identical bytes");

            let text = String::from_utf8(first).unwrap();
            let lines: Vec<&str> = text.lines().collect();
            assert_eq!(lines.len(), 1002);
            assert_eq!(lines[0], "step,x1,x2");
            for line in &lines[1..] {
                for coord in line.split(',').skip(1) {
                    let value: f64 = coord.parse().unwrap();
                    assert!((0.0..=1.0).contains(&value), "{line}");
                }
            }

            // non-periodicity of the driving digits
            let point = [
                parse_decimal("0.5746337359").unwrap(),
                parse_decimal("0.3027738565").unwrap(),
            ];
            let code = encode_point(&point, 1030).unwrap();
            let digits = code.digits();
            for period in 1..=20usize {
                let repeats = (0..digits.len() - period).all(|i| digits[i] == digits[i + period]);
                assert!(!repeats, "digits repeat with period {period}");
            }
        },
    );
}
