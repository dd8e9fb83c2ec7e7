use liftscope::census::{census_curve, decade_checkpoints, fit_exponent, new_lift_inputs, CensusSeries};
use liftscope::decompose::decompositions;
use liftscope::UniPoly;
use proptest::prelude::*;

/// `2 + 2·#{k ≥ 1 : x_k ≤ b}` for the solutions of `x² - 5y² = 1`.
fn pell_count(b: u64) -> u64 {
    let (mut prev, mut cur, mut k) = (1u128, 9u128, 0);
    while cur <= b as u128 {
        k += 1;
        (prev, cur) = (cur, 18 * cur - prev);
    }
    2 + 2 * k
}

fn series(checkpoints: Vec<u64>, counts: Vec<u64>) -> CensusSeries {
    CensusSeries { checkpoints, counts, fit: None, prediction: None }
}

#[test]
fn pell_inputs_are_the_recurrence() {
    let (f, g) = (UniPoly::from_ints(&[0, 0, 1]), UniPoly::from_ints(&[1, 0, 5]));
    let inputs = new_lift_inputs(&f, &g, &decompositions(&f, &g), 1_000_000).unwrap();
    let mut expected = vec![1i64, 9];
    while let [.., a, b] = expected[..] {
        if 18 * b - a > 1_000_000 {
            break;
        }
        expected.push(18 * b - a);
    }
    let mut signed: Vec<i64> = expected.iter().flat_map(|&x| [-x, x]).collect();
    signed.sort();
    assert_eq!(inputs, signed);
}

#[test]
fn pell_slope_is_logarithmic() {
    // at desk scale the log-log slope is still about 0.1
    let (f, g) = (UniPoly::from_ints(&[0, 0, 1]), UniPoly::from_ints(&[1, 0, 5]));
    let cps = decade_checkpoints(2, 6);
    let desk = census_curve(&f, &g, &decompositions(&f, &g), &cps, None).unwrap();
    assert_eq!(desk.counts, cps.iter().map(|&b| pell_count(b)).collect::<Vec<_>>());
    let fit = desk.fit.unwrap();
    assert!((fit.slope - 0.1).abs() < 0.01, "{}", fit.slope);

    // extended with the recurrence up to 10^19
    let cps = decade_checkpoints(2, 19);
    let counts = cps.iter().map(|&b| pell_count(b)).collect();
    let fit = fit_exponent(&series(cps, counts)).unwrap();
    assert!(fit.slope < 0.05, "{}", fit.slope);
    assert!(fit.slope > 0.0);
}

#[test]
fn fifth_power_slope() {
    let (f, g) = (UniPoly::x(), UniPoly::from_ints(&[0, 0, 0, 0, 0, 1]));
    let cps = decade_checkpoints(2, 6);
    let s = census_curve(&f, &g, &decompositions(&f, &g), &cps, None).unwrap();
    assert!((s.fit.unwrap().slope - 0.2).abs() <= 0.05);
}

proptest! {
    #[test]
    fn recovers_power_law_exponent(s in 0.1f64..1.0, c in 1.0f64..50.0) {
        let cps = decade_checkpoints(2, 9);
        let counts: Vec<u64> = cps.iter().map(|&b| (c * (b as f64).powf(s)).round() as u64).collect();
        prop_assume!(counts.iter().filter(|&&n| n >= 5).count() >= 3);
        let fit = fit_exponent(&series(cps, counts)).unwrap();
        prop_assert!((fit.slope - s).abs() < 0.02, "{} vs {}", fit.slope, s);
    }
}
