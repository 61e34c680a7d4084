//! Sequence and matrix identities checked against independent oracles.

use hyperfib::cassini::{build_window, cassini_det, classical_cassini, unit_sign};
use hyperfib::qmatrix::{advance, build_q, infer_recurrence, integral_coefficients, q_closed_tail, reconstruct};
use hyperfib::sequences::{binomial_poly, fibonacci, hyperfib, polytopic};
use hyperfib::{DetMethod, HyperfibSequence, IntMatrix, Polynomial, StateVector, Strategy};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::strategy::Strategy as _;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Direct reading of the definition: r rounds of prefix sums over a
/// materialised Fibonacci table.
fn nested_sum_oracle(r: u32, len: usize) -> Vec<BigInt> {
    let mut fib = vec![BigInt::zero(), BigInt::one()];
    while fib.len() < len {
        let k = fib.len();
        let next = &fib[k - 1] + &fib[k - 2];
        fib.push(next);
    }
    fib.truncate(len);
    let mut cur = fib;
    for _ in 0..r {
        let mut acc = BigInt::zero();
        cur = cur
            .iter()
            .map(|x| {
                acc += x;
                acc.clone()
            })
            .collect();
    }
    cur
}

/// Backward run of the inhomogeneous recurrence, one binomial at a time.
/// Element k is `F_{-k}`.
fn backward_oracle(r: u32, steps: i64) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero()];
    let (mut cur, mut next) = (BigInt::zero(), BigInt::one());
    for k in 1..=steps {
        // F_{-k} = F_{-k+2} - F_{-k+1} - C(-k + r, r - 1)
        let forcing = if r == 0 { BigInt::zero() } else { binomial_poly(r as i64 - k, r - 1) };
        let prev = &next - &cur - forcing;
        next = std::mem::replace(&mut cur, prev.clone());
        out.push(prev);
    }
    out
}

fn falling_factorial_binomial(t: i64, k: u32) -> BigInt {
    let num: BigInt = (0..k as i64).map(|i| big(t - i)).product();
    let den: BigInt = (1..=k as i64).map(big).product();
    num / den
}

#[test]
fn negafibonacci_oracle() {
    for n in 1..60 {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        assert_eq!(fibonacci(-n), fibonacci(n) * sign);
    }
}

#[test]
fn binomial_poly_matches_falling_factorial() {
    for t in -12..12 {
        for k in 0..8 {
            assert_eq!(binomial_poly(t, k), falling_factorial_binomial(t, k), "t={t} k={k}");
        }
    }
}

#[test]
fn forward_values_match_nested_sums() {
    for r in 0..=5 {
        let oracle = nested_sum_oracle(r, 120);
        for s in Strategy::ALL {
            for n in [0usize, 1, 2, 9, 37, 119] {
                assert_eq!(hyperfib(r, n as i64, s).unwrap(), oracle[n], "r={r} n={n} {s}");
            }
        }
        let seq = HyperfibSequence::new(r);
        assert_eq!(seq.range(0, 119), oracle);
    }
}

#[test]
fn backward_values_match_oracle() {
    for r in 0..=6 {
        let oracle = backward_oracle(r, 30);
        let seq = HyperfibSequence::new(r);
        for k in 1..=30i64 {
            let expected = &oracle[k as usize];
            assert_eq!(seq.term(-k), *expected, "r={r} n=-{k}");
            assert_eq!(hyperfib(r, -k, Strategy::Recurrence).unwrap(), *expected);
            assert_eq!(hyperfib(r, -k, Strategy::MatrixPower).unwrap(), *expected);
        }
    }
}

#[test]
fn difference_identity() {
    for r in 1..=5 {
        let hi = HyperfibSequence::new(r);
        let lo = HyperfibSequence::new(r - 1);
        for n in -20..=100 {
            assert_eq!(hi.term(n + 1) - hi.term(n), lo.term(n + 1), "r={r} n={n}");
        }
    }
}

#[test]
fn low_generation_recurrences() {
    let g1 = HyperfibSequence::new(1);
    for n in -10..=100 {
        assert_eq!(g1.term(n + 3), g1.term(n + 2) * 2 - g1.term(n));
    }
    let g2 = HyperfibSequence::new(2);
    for n in 0..=100i64 {
        assert_eq!(g2.term(n + 2), g2.term(n + 1) + g2.term(n) + big(n + 2));
    }
    for n in 0..=200 {
        assert_eq!(g1.term(n), fibonacci(n + 2) - 1);
    }
}

#[test]
fn zero_run_before_the_origin() {
    for r in 1..=8u32 {
        let seq = HyperfibSequence::new(r);
        for n in -(r as i64)..=0 {
            assert_eq!(seq.term(n), BigInt::zero(), "r={r} n={n}");
        }
        assert_eq!(seq.term(-(r as i64) - 1), unit_sign(r as i64));
    }
}

#[test]
fn forcing_term_is_polytopic() {
    for r in 2..=8u32 {
        for n in -15..=40i64 {
            assert_eq!(binomial_poly(n + r as i64, r - 1), polytopic(r - 1, n + 2));
        }
    }
}

#[test]
fn q_row_matches_inferred_recurrence() {
    for r in 0..=6u32 {
        let order = r as usize + 2;
        let terms = HyperfibSequence::new(r).range(0, 2 * order as i64 + 3);
        let inferred = infer_recurrence(&terms, order).unwrap();
        assert_eq!(integral_coefficients(&inferred).unwrap(), build_q(r).q, "r={r}");
    }
}

#[test]
fn q_row_drives_the_sequence() {
    for r in 0..=6u32 {
        let q = build_q(r);
        let seq = HyperfibSequence::new(r);
        for n in -15..=40i64 {
            let combo: BigInt = q.q.iter().enumerate().map(|(i, c)| c * seq.term(n + i as i64)).sum();
            assert_eq!(seq.term(n + r as i64 + 2), combo);
        }
    }
}

#[test]
fn closed_tail_matches_scheme() {
    for r in 1..=12u32 {
        let q = build_q(r).q;
        let k = q.len();
        let (q_r, q_r1, q_r2) = q_closed_tail(r).unwrap();
        assert_eq!((&q[k - 3], &q[k - 2], &q[k - 1]), (&q_r, &q_r1, &q_r2), "r={r}");
    }
}

#[test]
fn q_determinant_is_minus_one() {
    for r in 1..=10 {
        assert_eq!(build_q(r).matrix.det(DetMethod::Bareiss).unwrap(), big(-1));
    }
}

#[test]
fn reconstruct_matches_windows() {
    for r in 0..=4u32 {
        let seq = HyperfibSequence::new(r);
        for n in -10..=40 {
            let direct = hyperfib::cassini::window_from(&seq, r as usize + 2, n).matrix;
            assert_eq!(reconstruct(r, n), direct, "r={r} n={n}");
        }
    }
}

#[test]
fn advance_unrolls_the_power() {
    for r in 0..=4u32 {
        let q = build_q(r);
        let seq = HyperfibSequence::new(r);
        let mut state = StateVector::at(&seq, 0);
        for n in 1..=30 {
            state = advance(&q, &state).unwrap();
            assert_eq!(state, StateVector::at(&seq, n));
        }
    }
}

#[test]
fn determinant_of_reconstruction() {
    for r in 1..=5u32 {
        let base = cassini_det(r, 0);
        for n in [-7i64, -1, 0, 3, 12] {
            let q_det_pow = unit_sign(n);
            let d = reconstruct(r, n).det(DetMethod::Bareiss).unwrap();
            assert_eq!(d, q_det_pow * &base);
        }
    }
}

#[test]
fn classical_cassini_and_matrix_form() {
    for n in 1..=100 {
        assert_eq!(classical_cassini(n), unit_sign(n));
    }
    // The 2x2 window determinant is (-1)^(n+1).
    for n in 0..=30 {
        assert_eq!(cassini_det(0, n), unit_sign(n + 1));
    }
}

/// det(tI - A) evaluated at integer points by cofactor expansion.
fn char_poly_at(a: &IntMatrix, t: i64) -> BigInt {
    let n = a.rows();
    let shifted = IntMatrix::from_fn(n, n, |i, j| {
        let d = if i == j { big(t) } else { BigInt::zero() };
        d - &a[(i, j)]
    });
    shifted.det(DetMethod::Cofactor).unwrap()
}

#[test]
fn companion_char_poly_by_evaluation() {
    for r in 0..=3u32 {
        let q = build_q(r);
        let p = q.matrix.char_poly().unwrap();
        for t in -4..=4 {
            assert_eq!(p.eval(&big(t)), char_poly_at(&q.matrix, t));
        }
        let expected = Polynomial::from_i64(&[-1, -1, 1]).mul(&Polynomial::linear(1).pow(r));
        assert_eq!(p, expected);
    }
}

fn small_matrix(max_dim: usize) -> impl proptest::strategy::Strategy<Value = IntMatrix> {
    (1..=max_dim).prop_flat_map(|n| {
        proptest::collection::vec(-50i64..=50, n * n).prop_map(move |v| {
            IntMatrix::from_fn(n, n, |i, j| big(v[i * n + j]))
        })
    })
}

fn pair_of_matrices() -> impl proptest::strategy::Strategy<Value = (IntMatrix, IntMatrix)> {
    (1usize..=5).prop_flat_map(|n| {
        let cells = proptest::collection::vec(-9i64..=9, n * n);
        (cells.clone(), cells).prop_map(move |(a, b)| {
            (
                IntMatrix::from_fn(n, n, |i, j| big(a[i * n + j])),
                IntMatrix::from_fn(n, n, |i, j| big(b[i * n + j])),
            )
        })
    })
}

proptest! {
    #[test]
    fn bareiss_matches_cofactor(m in small_matrix(6)) {
        prop_assert_eq!(m.det(DetMethod::Bareiss).unwrap(), m.det(DetMethod::Cofactor).unwrap());
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in pair_of_matrices()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(
            ab.det(DetMethod::Bareiss).unwrap(),
            a.det(DetMethod::Bareiss).unwrap() * b.det(DetMethod::Bareiss).unwrap()
        );
    }

    #[test]
    fn char_poly_matches_pointwise_determinant(m in small_matrix(4), t in -6i64..=6) {
        prop_assert_eq!(m.char_poly().unwrap().eval(&big(t)), char_poly_at(&m, t));
    }

    #[test]
    fn companion_char_poly_reads_off_the_row(q in proptest::collection::vec(-20i64..=20, 1..=5)) {
        let qm = hyperfib::QMatrix::from_coefficients(0, q.iter().map(|&x| big(x)).collect());
        let direct = qm.matrix.char_poly().unwrap();
        prop_assert_eq!(&direct, &qm.char_poly());
        for t in -3..=3 {
            prop_assert_eq!(direct.eval(&big(t)), char_poly_at(&qm.matrix, t));
        }
    }

    #[test]
    fn unimodular_power_law(r in 0u32..=4, m in -5i64..=5, n in -5i64..=5) {
        let q = build_q(r).matrix;
        let lhs = q.pow(m + n).unwrap();
        let rhs = q.pow(m).unwrap().mul(&q.pow(n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn windows_are_symmetric(m in 1usize..=7, n in -12i64..=30, r in 0u32..=5) {
        let w = build_window(m, n, r);
        prop_assert_eq!(w.matrix.transpose(), w.matrix.clone());
        let seq = HyperfibSequence::new(r);
        prop_assert_eq!(&w.matrix[(0, 0)], &seq.term(n));
        prop_assert_eq!(&w.matrix[(m - 1, m - 1)], &seq.term(n + 2 * m as i64 - 2));
    }

    #[test]
    fn memo_is_transparent(r in 0u32..=6, ns in proptest::collection::vec(-40i64..=80, 1..12)) {
        let seq = HyperfibSequence::new(r);
        for n in ns {
            prop_assert_eq!(seq.term(n), hyperfib(r, n, Strategy::Recurrence).unwrap());
        }
    }
}
