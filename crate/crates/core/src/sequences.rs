//! Fibonacci, polytopic and hyperfibonacci numbers over all integer indices.
//!
//! `F_n^(r)` is the r-fold partial sum of the Fibonacci numbers, with
//! `F_0^(r) = 0` and `F_1^(r) = 1`. It satisfies the inhomogeneous recurrence
//!
//! ```text
//! F_{n+2}^(r) = F_{n+1}^(r) + F_n^(r) + C(n + r, r - 1)
//! ```
//!
//! and negative indices are defined by running that recurrence backwards,
//! with `C(t, k)` extended polynomially to negative `t`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cassini::build_window;
use crate::error::{Error, Result};
use crate::qmatrix::build_q;

/// Evaluation path for [`hyperfib`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// r nested cumulative sums over the Fibonacci numbers. `n >= 0` only.
    PrefixSum,
    /// The inhomogeneous second-order recurrence, forwards or backwards.
    Recurrence,
    /// `Q_{r+2}^n · A_{r,0}`.
    MatrixPower,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::PrefixSum, Strategy::Recurrence, Strategy::MatrixPower];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::PrefixSum => "prefix",
            Strategy::Recurrence => "recurrence",
            Strategy::MatrixPower => "matpow",
        }
    }

    pub fn supports(self, n: i64) -> bool {
        self != Strategy::PrefixSum || n >= 0
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prefix" => Ok(Strategy::PrefixSum),
            "recurrence" => Ok(Strategy::Recurrence),
            "matpow" => Ok(Strategy::MatrixPower),
            other => Err(Error::InvalidArgument(format!("unknown strategy `{other}`"))),
        }
    }
}

/// `F_n` for any integer `n`, by fast doubling on `|n|`.
pub fn fibonacci(n: i64) -> BigInt {
    let (f, _) = fib_pair(n.unsigned_abs());
    // F_{-k} = (-1)^{k+1} F_k, the values the backward recurrence produces.
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

/// `(F_k, F_{k+1})`.
fn fib_pair(k: u64) -> (BigInt, BigInt) {
    if k == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(k / 2);
    let two_b_minus_a = (&b << 1u32) - &a;
    let c = &a * two_b_minus_a;
    let d = &a * &a + &b * &b;
    if k.is_multiple_of(2) {
        (c, d)
    } else {
        let next = &c + &d;
        (d, next)
    }
}

/// `t (t-1) ... (t-k+1) / k!`, the binomial coefficient as a polynomial in `t`.
pub fn binomial_poly(t: i64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        // The product of i+1 consecutive integers is divisible by (i+1)!.
        acc = acc * BigInt::from(t - i64::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// The n-th regular r-topic number `P_n^(r) = C(n + r - 1, r)`.
///
/// `r = 0` gives the constant 1.
pub fn polytopic(r: u32, n: i64) -> BigInt {
    binomial_poly(n + i64::from(r) - 1, r)
}

/// Inhomogeneous term of the step producing `F_{k+2}^(r)`.
fn forcing(r: u32, k: i64) -> BigInt {
    if r == 0 {
        BigInt::zero()
    } else {
        binomial_poly(k + i64::from(r), r - 1)
    }
}

/// `F_n^(r)` evaluated with the requested strategy.
pub fn hyperfib(r: u32, n: i64, strategy: Strategy) -> Result<BigInt> {
    match strategy {
        Strategy::PrefixSum => prefix_sum(r, n),
        Strategy::Recurrence => Ok(by_recurrence(r, n)),
        Strategy::MatrixPower => by_matrix_power(r, n),
    }
}

fn prefix_sum(r: u32, n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeIndex {
            strategy: Strategy::PrefixSum,
            n,
        });
    }
    // sums[g] holds F_k^(g+1) for the current k.
    let mut sums = vec![BigInt::zero(); r as usize];
    let (mut fib, mut next) = (BigInt::zero(), BigInt::one());
    for k in 0..=n {
        let mut carry = &fib;
        for s in sums.iter_mut() {
            *s += carry;
            carry = s;
        }
        if k < n {
            let after = &fib + &next;
            fib = std::mem::replace(&mut next, after);
        }
    }
    Ok(sums.pop().unwrap_or(fib))
}

/// Pascal-row binomials `C(t, 0..=k)`, slid one step of `t` at a time.
struct BinomialRow {
    row: Vec<BigInt>,
}

impl BinomialRow {
    fn new(t: i64, k: u32) -> Self {
        Self {
            row: (0..=k).map(|j| binomial_poly(t, j)).collect(),
        }
    }

    fn top(&self) -> &BigInt {
        self.row.last().expect("row is never empty")
    }

    /// `C(t+1, j) = C(t, j) + C(t, j-1)`.
    fn step_up(&mut self) {
        for j in (1..self.row.len()).rev() {
            let (lo, hi) = self.row.split_at_mut(j);
            hi[0] += &lo[j - 1];
        }
    }

    /// `C(t-1, j) = C(t, j) - C(t-1, j-1)`.
    fn step_down(&mut self) {
        for j in 1..self.row.len() {
            let (lo, hi) = self.row.split_at_mut(j);
            hi[0] -= &lo[j - 1];
        }
    }
}

fn by_recurrence(r: u32, n: i64) -> BigInt {
    if r == 0 {
        return iterate_plain(n);
    }
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    if n >= 0 {
        // (a, b) = (F_k, F_{k+1}); the next forcing term is C(k + r, r - 1).
        let mut binom = BinomialRow::new(i64::from(r), r - 1);
        for _ in 0..n {
            let c = &a + &b + binom.top();
            a = std::mem::replace(&mut b, c);
            binom.step_up();
        }
        a
    } else {
        // (a, b) = (F_k, F_{k+1}); F_{k-1} = F_{k+1} - F_k - C(k - 1 + r, r - 1).
        let mut binom = BinomialRow::new(i64::from(r) - 1, r - 1);
        for _ in 0..n.unsigned_abs() {
            let prev = &b - &a - binom.top();
            b = std::mem::replace(&mut a, prev);
            binom.step_down();
        }
        a
    }
}

fn iterate_plain(n: i64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    if n >= 0 {
        for _ in 0..n {
            let c = &a + &b;
            a = std::mem::replace(&mut b, c);
        }
    } else {
        for _ in 0..n.unsigned_abs() {
            let prev = &b - &a;
            b = std::mem::replace(&mut a, prev);
        }
    }
    a
}

fn by_matrix_power(r: u32, n: i64) -> Result<BigInt> {
    let q = build_q(r);
    let a0 = build_window(r as usize + 2, 0, r).matrix;
    // Only entry (0, 0) of Q^n · A_{r,0} is needed.
    let power = q.matrix.pow(n)?;
    Ok(power
        .row(0)
        .iter()
        .zip(a0.row(0))
        .map(|(x, y)| x * y)
        .sum())
}

/// Contiguous run of cached terms `F_start .. F_{start+len-1}`.
#[derive(Debug, Clone)]
struct TermCache {
    start: i64,
    values: VecDeque<BigInt>,
}

impl TermCache {
    fn seeded() -> Self {
        Self {
            start: 0,
            values: VecDeque::from([BigInt::zero(), BigInt::one()]),
        }
    }

    fn end(&self) -> i64 {
        self.start + self.values.len() as i64
    }

    fn get(&self, n: i64) -> Option<&BigInt> {
        if n < self.start {
            return None;
        }
        self.values.get((n - self.start) as usize)
    }

    fn extend_to(&mut self, r: u32, n: i64) {
        while self.end() <= n {
            let k = self.end() - 2;
            let len = self.values.len();
            let next = &self.values[len - 1] + &self.values[len - 2] + forcing(r, k);
            self.values.push_back(next);
        }
        while self.start > n {
            let k = self.start - 1;
            let prev = &self.values[1] - &self.values[0] - forcing(r, k);
            self.values.push_front(prev);
            self.start -= 1;
        }
    }
}

/// Generation-r hyperfibonacci sequence with a transparent, thread-safe
/// memo of every term computed so far.
#[derive(Debug)]
pub struct HyperfibSequence {
    r: u32,
    cache: RwLock<TermCache>,
}

impl HyperfibSequence {
    pub fn new(r: u32) -> Self {
        Self {
            r,
            cache: RwLock::new(TermCache::seeded()),
        }
    }

    pub fn generation(&self) -> u32 {
        self.r
    }

    pub fn term(&self, n: i64) -> BigInt {
        {
            let cache = self.cache.read().unwrap_or_else(|e| e.into_inner());
            if let Some(v) = cache.get(n) {
                return v.clone();
            }
        }
        let mut cache = self.cache.write().unwrap_or_else(|e| e.into_inner());
        cache.extend_to(self.r, n);
        cache.get(n).cloned().expect("extended range covers n")
    }

    /// Terms `F_from ..= F_to`; empty when `from > to`.
    pub fn range(&self, from: i64, to: i64) -> Vec<BigInt> {
        if from > to {
            return Vec::new();
        }
        self.term(from);
        self.term(to);
        let cache = self.cache.read().unwrap_or_else(|e| e.into_inner());
        (from..=to)
            .map(|n| cache.get(n).cloned().expect("range is cached"))
            .collect()
    }
}

impl Clone for HyperfibSequence {
    fn clone(&self) -> Self {
        let cache = self.cache.read().unwrap_or_else(|e| e.into_inner()).clone();
        Self {
            r: self.r,
            cache: RwLock::new(cache),
        }
    }
}
