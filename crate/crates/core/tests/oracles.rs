mod common;

use common::oracle;
use kappa::series::{
    decay_series_solution, exp_kappa_taylor, ln_kappa_shifted_taylor, picard_iterate,
    series_multiply, sqrt_weight_series,
};
use kappa::Kappa;

fn k(v: f64) -> Kappa {
    Kappa::new(v).unwrap()
}

#[test]
fn oracle_reproduces_mpmath_coefficients() {
    // Taylor coefficients of exp_κ(−x) at κ = 0.5 from mpmath
    let expected = [1.0, -1.0, 0.5, -0.125, 0.0, 0.0078125, 0.0, -0.0009765625, 0.0];
    let got = oracle::decay_taylor(0.5, 8);
    for (g, e) in got.iter().zip(expected) {
        assert!((g - e).abs() < 1e-16);
    }
}

#[test]
fn exp_taylor_matches_oracle_to_high_order() {
    for kv in [0.0, 0.2, 0.5, 0.9, -0.7] {
        let s = exp_kappa_taylor(k(kv), 30).unwrap();
        let o = oracle::exp_kappa_taylor(kv, 30);
        for j in 0..=30 {
            assert!((s.coefficient(j) - o[j]).abs() < 1e-14, "κ={kv} j={j}");
        }
    }
}

#[test]
fn decay_recurrence_matches_oracle_at_max_order() {
    for kv in [0.1, 0.5, 0.9] {
        let s = decay_series_solution(k(kv), 64).unwrap();
        let o = oracle::decay_taylor(kv, 64);
        for j in 0..=64 {
            assert!((s.coefficient(j) - o[j]).abs() < 1e-12, "κ={kv} j={j}");
        }
    }
}

#[test]
fn decay_series_is_reflected_exp_series() {
    for kv in [0.3, 0.9] {
        let d = decay_series_solution(k(kv), 20).unwrap();
        let e = exp_kappa_taylor(k(kv), 20).unwrap().reflect();
        for j in 0..=20 {
            assert!((d.coefficient(j) - e.coefficient(j)).abs() < 1e-14);
        }
    }
}

#[test]
fn decay_series_tracks_function_near_origin() {
    for kv in [0.1, 0.5, 0.9] {
        let s = decay_series_solution(k(kv), 8).unwrap();
        let f = kappa::deformed::kappa_exp(k(kv), -0.1);
        assert!((s.evaluate(0.1) - f).abs() < 1e-9);
    }
}

#[test]
fn ln_series_matches_printed_formula() {
    for kv in [0.0, 0.25, 0.5, 0.9] {
        let s = ln_kappa_shifted_taylor(k(kv), 5).unwrap();
        let p = oracle::printed_ln1p_coefficients(kv);
        assert_eq!(s.coefficient(0), 0.0);
        for j in 1..=5 {
            assert!((s.coefficient(j) - p[j - 1]).abs() < 1e-14);
        }
    }
}

#[test]
fn sqrt_weight_squares_to_one_plus_k2x2() {
    for kv in [0.0, 0.3, 0.75, 0.9] {
        for order in [4, 10, 32] {
            let s = sqrt_weight_series(k(kv), order).unwrap();
            let sq = series_multiply(&s, &s, order).unwrap();
            for j in 0..=order {
                let want = match j {
                    0 => 1.0,
                    2 => kv * kv,
                    _ => 0.0,
                };
                assert!((sq.coefficient(j) - want).abs() < 1e-13, "κ={kv} order={order} j={j}");
            }
        }
    }
}

#[test]
fn picard_coefficients_are_truncated_exponential() {
    for n in 0..=20 {
        let p = picard_iterate(k(0.4), n).unwrap();
        let want = oracle::truncated_exp_neg(n);
        for (j, (&a, &b)) in p.polynomial().coefficients().iter().zip(&want).enumerate() {
            assert!((a - b).abs() <= 1e-15 * b.abs(), "n={n} j={j}");
        }
    }
}

#[test]
fn classical_series_are_maclaurin() {
    let z = Kappa::ZERO;
    let e = exp_kappa_taylor(z, 10).unwrap();
    let d = decay_series_solution(z, 10).unwrap();
    let mut fact = 1.0;
    for j in 0..=10 {
        if j > 0 {
            fact *= j as f64;
        }
        assert!((e.coefficient(j) - 1.0 / fact).abs() < 1e-17);
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        assert!((d.coefficient(j) - sign / fact).abs() < 1e-17);
    }
    let l = ln_kappa_shifted_taylor(z, 10).unwrap();
    for j in 1..=10 {
        let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
        assert!((l.coefficient(j) - sign / j as f64).abs() < 1e-16);
    }
}
