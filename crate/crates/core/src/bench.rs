//! Wall-clock comparison of the evaluation strategies.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::sequences::{hyperfib, Strategy};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub strategy: Strategy,
    pub repeat: usize,
    pub total: Duration,
}

impl BenchRow {
    pub fn mean(&self) -> Duration {
        self.total / self.repeat as u32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub r: u32,
    pub n: i64,
    pub value: BigInt,
    pub rows: Vec<BenchRow>,
}

/// Times each strategy `repeat` times and checks that all of them return
/// the same value.
pub fn bench(r: u32, n: i64, strategies: &[Strategy], repeat: usize) -> Result<BenchReport> {
    if strategies.is_empty() {
        return Err(Error::InvalidArgument("no strategies selected".into()));
    }
    if repeat == 0 {
        return Err(Error::InvalidArgument("repeat must be >= 1".into()));
    }
    if let Some(&strategy) = strategies.iter().find(|s| !s.supports(n)) {
        return Err(Error::NegativeIndex { strategy, n });
    }
    let mut value: Option<BigInt> = None;
    let mut rows = Vec::with_capacity(strategies.len());
    for &strategy in strategies {
        let start = Instant::now();
        let mut last = None;
        for _ in 0..repeat {
            last = Some(hyperfib(r, n, strategy)?);
        }
        let total = start.elapsed();
        let got = last.expect("repeat >= 1");
        match &value {
            Some(v) if *v != got => return Err(Error::StrategyMismatch { r, n }),
            Some(_) => {}
            None => value = Some(got),
        }
        rows.push(BenchRow {
            strategy,
            repeat,
            total,
        });
    }
    Ok(BenchReport {
        r,
        n,
        value: value.expect("at least one strategy"),
        rows,
    })
}
