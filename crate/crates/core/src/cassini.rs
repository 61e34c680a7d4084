//! Hankel windows of hyperfibonacci terms and their determinants.
//!
//! `M^(m,n,r)` is the m×m matrix with entry `(i, j) = F_{n+i+j}^(r)`
//! (0-based), so `A_{r,n}` is the window of size `r + 2`. Arguments are
//! always passed in `(size, start, generation)` order.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{DetMethod, IntMatrix};
use crate::sequences::{fibonacci, HyperfibSequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub m: usize,
    pub n: i64,
    pub r: u32,
    pub matrix: IntMatrix,
}

pub fn build_window(m: usize, n: i64, r: u32) -> Window {
    window_from(&HyperfibSequence::new(r), m, n)
}

/// Like [`build_window`], reusing an existing sequence's memo.
pub fn window_from(seq: &HyperfibSequence, m: usize, n: i64) -> Window {
    let terms = if m == 0 {
        Vec::new()
    } else {
        seq.range(n, n + 2 * m as i64 - 2)
    };
    Window {
        m,
        n,
        r: seq.generation(),
        matrix: IntMatrix::from_fn(m, m, |i, j| terms[i + j].clone()),
    }
}

fn sign_of(exp: i64) -> i32 {
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Claimed value of `det(A_{r,n})`: `(-1)^(n + floor((r+3)/2))`, for `r >= 1`.
pub fn predicted_sign(r: u32, n: i64) -> Result<i32> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "the sign formula is stated for r >= 1".into(),
        ));
    }
    Ok(sign_of(n + i64::from((r + 3) / 2)))
}

/// `det(A_{r,n})` by Bareiss elimination.
pub fn cassini_det(r: u32, n: i64) -> BigInt {
    window_det(&build_window(r as usize + 2, n, r))
}

fn window_det(w: &Window) -> BigInt {
    w.matrix
        .det(DetMethod::Bareiss)
        .expect("windows are square")
}

/// 3×3 determinant with entries `F_{n+i+j} - 1` (0-based).
pub fn shifted_fib_det(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("n must be >= 0, got {n}")));
    }
    let m = IntMatrix::from_fn(3, 3, |i, j| fibonacci(n + (i + j) as i64) - 1);
    m.det(DetMethod::Bareiss)
}

/// `det(M^(m,n,r))` for a window larger than `r + 2`, which should vanish.
pub fn zero_det_check(m: usize, n: i64, r: u32) -> Result<BigInt> {
    if m <= r as usize + 2 {
        return Err(Error::InvalidArgument(format!(
            "window size {m} must exceed r + 2 = {}",
            r + 2
        )));
    }
    Ok(window_det(&build_window(m, n, r)))
}

/// Two solutions of `x_{k+2} = alpha x_{k+1} + beta x_k` sharing coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SecondOrderPair {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub a0: BigInt,
    pub a1: BigInt,
    pub b0: BigInt,
    pub b1: BigInt,
}

impl SecondOrderPair {
    pub fn new(alpha: i64, beta: i64, a: (i64, i64), b: (i64, i64)) -> Self {
        Self {
            alpha: alpha.into(),
            beta: beta.into(),
            a0: a.0.into(),
            a1: a.1.into(),
            b0: b.0.into(),
            b1: b.1.into(),
        }
    }

    /// `(x_{m-1}, x_m)` of the solution seeded with `(x0, x1)`.
    fn pair_at(&self, x0: &BigInt, x1: &BigInt, m: usize) -> (BigInt, BigInt) {
        let (mut prev, mut cur) = (x0.clone(), x1.clone());
        for _ in 1..m {
            let next = &self.alpha * &cur + &self.beta * &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        (prev, cur)
    }

    /// Both sides of `a_m b_{m-1} - a_{m-1} b_m = (-beta)^{m-1} (a_1 b_0 - a_0 b_1)`.
    pub fn general_cassini(&self, m: usize) -> Result<(BigInt, BigInt)> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be >= 1".into()));
        }
        let (a_prev, a_m) = self.pair_at(&self.a0, &self.a1, m);
        let (b_prev, b_m) = self.pair_at(&self.b0, &self.b1, m);
        let lhs = &a_m * &b_prev - &a_prev * &b_m;
        let neg_beta = -&self.beta;
        let scale = num_traits::pow(neg_beta, m - 1);
        let rhs = scale * (&self.a1 * &self.b0 - &self.a0 * &self.b1);
        Ok((lhs, rhs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignCase {
    pub r: u32,
    pub n: i64,
    pub computed: BigInt,
    pub predicted: i32,
    pub pass: bool,
}

/// Outcome of checking `det(A_{r,n})` against [`predicted_sign`] over a grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignReport {
    pub r_range: (u32, u32),
    pub n_range: (i64, i64),
    pub cases: Vec<SignCase>,
}

impl SignReport {
    pub fn failures(&self) -> impl Iterator<Item = &SignCase> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }
}

/// Evaluates every `(r, n)` in the inclusive ranges, in parallel.
/// Case order is row-major in `(r, n)` regardless of scheduling.
pub fn sign_sweep(r_range: (u32, u32), n_range: (i64, i64)) -> Result<SignReport> {
    if r_range.0 == 0 {
        return Err(Error::InvalidArgument("sign sweep needs r >= 1".into()));
    }
    let grid: Vec<(u32, i64)> = (r_range.0..=r_range.1)
        .flat_map(|r| (n_range.0..=n_range.1).map(move |n| (r, n)))
        .collect();
    let cases = grid
        .into_par_iter()
        .map(|(r, n)| {
            let computed = cassini_det(r, n);
            let predicted = predicted_sign(r, n).expect("r >= 1");
            let pass = computed == BigInt::from(predicted);
            SignCase {
                r,
                n,
                computed,
                predicted,
                pass,
            }
        })
        .collect();
    Ok(SignReport {
        r_range,
        n_range,
        cases,
    })
}

/// `F_{n-1} F_{n+1} - F_n^2`.
pub fn classical_cassini(n: i64) -> BigInt {
    fibonacci(n - 1) * fibonacci(n + 1) - fibonacci(n) * fibonacci(n)
}

/// `(-1)^k` as a [`BigInt`].
pub fn unit_sign(k: i64) -> BigInt {
    if sign_of(k) == 1 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}
