//! Sweep drivers that check every identity over a parameter grid.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cassini::{cassini_det, predicted_sign, zero_det_check, SecondOrderPair};
use crate::error::{Error, Result};
use crate::linalg::{DetMethod, Polynomial, COFACTOR_MAX_DIM};
use crate::qmatrix::build_q;
use crate::sequences::{hyperfib, Strategy};

pub const DEFAULT_SEED: u64 = 0x0CA5_5141;
pub const GENERAL_PAIRS: usize = 200;
pub const GENERAL_MAX_M: usize = 50;
const GENERAL_RANGE: std::ops::RangeInclusive<i64> = -9..=9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// `det(A_{r,n})` against the predicted sign.
    Cassini,
    /// `det(Q_{r+2}) = -1`.
    Qdet,
    /// Oversized windows are singular.
    Zero,
    /// The three evaluation strategies agree.
    Crosscheck,
    /// Two-solution identity for random second-order recurrences.
    General,
    /// `char_poly(Q_{r+2}) = (x^2 - x - 1)(x - 1)^r`.
    Charpoly,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Cassini,
        Suite::Qdet,
        Suite::Zero,
        Suite::Crosscheck,
        Suite::General,
        Suite::Charpoly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cassini => "cassini",
            Suite::Qdet => "qdet",
            Suite::Zero => "zero",
            Suite::Crosscheck => "crosscheck",
            Suite::General => "general",
            Suite::Charpoly => "charpoly",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub r_max: u32,
    pub n_min: i64,
    pub n_max: i64,
    pub suites: Vec<Suite>,
    pub seed: u64,
}

impl VerifyConfig {
    pub fn new(r_max: u32, n_min: i64, n_max: i64) -> Self {
        Self {
            r_max,
            n_min,
            n_max,
            suites: Suite::ALL.to_vec(),
            seed: DEFAULT_SEED,
        }
    }

    pub fn with_suites(mut self, suites: impl IntoIterator<Item = Suite>) -> Self {
        self.suites = suites.into_iter().collect();
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub computed: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn cases(&self) -> usize {
        self.suites.iter().map(|s| s.cases).sum()
    }

    pub fn failures(&self) -> impl Iterator<Item = (Suite, &Failure)> {
        self.suites
            .iter()
            .flat_map(|s| s.failures.iter().map(move |f| (s.suite, f)))
    }

    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failures.is_empty())
    }

    pub fn elapsed(&self) -> Duration {
        self.suites.iter().map(|s| s.elapsed).sum()
    }
}

/// Runs the selected suites. Duplicate suite names run once, in the
/// order of [`Suite::ALL`].
pub fn verify_all(cfg: &VerifyConfig) -> Result<VerifyReport> {
    if cfg.suites.is_empty() {
        return Err(Error::InvalidArgument("no suites selected".into()));
    }
    if cfg.r_max == 0 {
        return Err(Error::InvalidArgument("r-max must be >= 1".into()));
    }
    if cfg.n_min > cfg.n_max {
        return Err(Error::InvalidArgument(format!(
            "empty index range {}..={}",
            cfg.n_min, cfg.n_max
        )));
    }
    let mut suites = cfg.suites.clone();
    suites.sort();
    suites.dedup();
    let reports = suites
        .into_iter()
        .map(|suite| {
            let start = Instant::now();
            let outcomes = match suite {
                Suite::Cassini => cassini_cases(cfg),
                Suite::Qdet => qdet_cases(cfg),
                Suite::Zero => zero_cases(cfg),
                Suite::Crosscheck => crosscheck_cases(cfg),
                Suite::General => general_cases(cfg.seed),
                Suite::Charpoly => charpoly_cases(cfg),
            };
            SuiteReport {
                suite,
                cases: outcomes.len(),
                failures: outcomes.into_iter().flatten().collect(),
                elapsed: start.elapsed(),
            }
        })
        .collect();
    Ok(VerifyReport { suites: reports })
}

/// One entry per case; `Some` marks a failure.
type Outcomes = Vec<Option<Failure>>;

fn check(case: impl FnOnce() -> String, computed: &BigInt, expected: &BigInt) -> Option<Failure> {
    (computed != expected).then(|| Failure {
        case: case(),
        computed: computed.to_string(),
        expected: expected.to_string(),
    })
}

fn indices(cfg: &VerifyConfig) -> std::ops::RangeInclusive<i64> {
    cfg.n_min..=cfg.n_max
}

fn cassini_cases(cfg: &VerifyConfig) -> Outcomes {
    let grid: Vec<(u32, i64)> = (1..=cfg.r_max)
        .flat_map(|r| indices(cfg).map(move |n| (r, n)))
        .collect();
    grid.into_par_iter()
        .map(|(r, n)| {
            let expected = BigInt::from(predicted_sign(r, n).expect("r >= 1"));
            check(|| format!("r={r} n={n}"), &cassini_det(r, n), &expected)
        })
        .collect()
}

fn qdet_cases(cfg: &VerifyConfig) -> Outcomes {
    let minus_one = BigInt::from(-1);
    (1..=cfg.r_max)
        .into_par_iter()
        .map(|r| {
            let q = build_q(r).matrix;
            let bareiss = q.det(DetMethod::Bareiss).expect("square");
            if let Some(f) = check(|| format!("r={r} bareiss"), &bareiss, &minus_one) {
                return Some(f);
            }
            if q.rows() <= COFACTOR_MAX_DIM {
                let cofactor = q.det(DetMethod::Cofactor).expect("small");
                return check(|| format!("r={r} cofactor"), &cofactor, &minus_one);
            }
            None
        })
        .collect()
}

fn zero_cases(cfg: &VerifyConfig) -> Outcomes {
    let grid: Vec<(usize, i64, u32)> = (0..=cfg.r_max)
        .flat_map(|r| {
            let lo = r as usize + 3;
            (lo..=lo + 3).flat_map(move |m| indices(cfg).map(move |n| (m, n, r)))
        })
        .collect();
    let zero = BigInt::zero();
    grid.into_par_iter()
        .map(|(m, n, r)| {
            let d = zero_det_check(m, n, r).expect("m > r + 2");
            check(|| format!("m={m} n={n} r={r}"), &d, &zero)
        })
        .collect()
}

fn crosscheck_cases(cfg: &VerifyConfig) -> Outcomes {
    let grid: Vec<(u32, i64)> = (0..=cfg.r_max)
        .flat_map(|r| indices(cfg).map(move |n| (r, n)))
        .collect();
    grid.into_par_iter()
        .map(|(r, n)| {
            let reference = hyperfib(r, n, Strategy::Recurrence).expect("all n");
            Strategy::ALL
                .into_iter()
                .filter(|s| *s != Strategy::Recurrence && s.supports(n))
                .find_map(|s| {
                    let v = hyperfib(r, n, s).expect("supported");
                    check(|| format!("r={r} n={n} {s} vs recurrence"), &v, &reference)
                })
        })
        .collect()
}

/// The `GENERAL_PAIRS` random pairs drawn from `seed`, in draw order.
pub fn random_pairs(seed: u64) -> Vec<SecondOrderPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || rng.gen_range(GENERAL_RANGE);
    (0..GENERAL_PAIRS)
        .map(|_| SecondOrderPair::new(draw(), draw(), (draw(), draw()), (draw(), draw())))
        .collect()
}

fn general_cases(seed: u64) -> Outcomes {
    let pairs = random_pairs(seed);
    pairs
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, pair)| {
            (1..=GENERAL_MAX_M).map(move |m| {
                let (lhs, rhs) = pair.general_cassini(m).expect("m >= 1");
                check(|| format!("pair #{i} {pair:?} m={m}"), &lhs, &rhs)
            })
        })
        .collect()
}

/// `(x^2 - x - 1)(x - 1)^r`.
pub fn expected_q_char_poly(r: u32) -> Polynomial {
    Polynomial::from_i64(&[-1, -1, 1]).mul(&Polynomial::linear(1).pow(r))
}

fn charpoly_cases(cfg: &VerifyConfig) -> Outcomes {
    (0..=cfg.r_max)
        .into_par_iter()
        .map(|r| {
            let q = build_q(r);
            let computed = q.matrix.char_poly().expect("square");
            let expected = expected_q_char_poly(r);
            (computed != expected || q.char_poly() != expected).then(|| Failure {
                case: format!("r={r}"),
                computed: computed.to_string(),
                expected: expected.to_string(),
            })
        })
        .collect()
}
