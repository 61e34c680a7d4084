//! The companion matrix `Q_{r+2}` of the generation-r hyperfibonacci
//! sequence, the state vectors it advances, and generic recurrence inference.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cassini::build_window;
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Polynomial};
use crate::sequences::HyperfibSequence;

/// Companion matrix with last row `q_1 .. q_{r+2}`, so that
/// `F_{n+r+2} = q_1 F_n + q_2 F_{n+1} + ... + q_{r+2} F_{n+r+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub r: u32,
    pub q: Vec<BigInt>,
    pub matrix: IntMatrix,
}

impl QMatrix {
    /// Companion matrix for an arbitrary coefficient row.
    pub fn from_coefficients(r: u32, q: Vec<BigInt>) -> Self {
        let k = q.len();
        let matrix = IntMatrix::from_fn(k, k, |i, j| {
            if i + 1 == k {
                q[j].clone()
            } else if j == i + 1 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        Self { r, q, matrix }
    }

    pub fn order(&self) -> usize {
        self.q.len()
    }

    /// `x^k - q_k x^{k-1} - ... - q_1`, read off the coefficient row.
    pub fn char_poly(&self) -> Polynomial {
        let mut coeffs: Vec<BigInt> = self.q.iter().map(|c| -c).collect();
        coeffs.push(BigInt::one());
        Polynomial::new(coeffs)
    }
}

/// Builds `Q_{r+2}` by back-substitution over the terms `F_2 .. F_{r+3}`.
///
/// Starting from the state `(0, .., 0, 1)` at index `-r`, each step exposes
/// one more coefficient:
/// `q_{r+2-k} = F_{k+2} - sum_{j<k} F_{k+1-j} q_{r+2-j}`.
pub fn build_q(r: u32) -> QMatrix {
    let order = r as usize + 2;
    let seq = HyperfibSequence::new(r);
    let terms = seq.range(0, order as i64 + 1);
    // from_top[j] = q_{r+2-j}
    let mut from_top: Vec<BigInt> = Vec::with_capacity(order);
    for k in 0..order {
        let mut value = terms[k + 2].clone();
        for (j, qj) in from_top.iter().enumerate() {
            value -= &terms[k + 1 - j] * qj;
        }
        from_top.push(value);
    }
    from_top.reverse();
    QMatrix::from_coefficients(r, from_top)
}

/// Closed forms `(q_r, q_{r+1}, q_{r+2}) = ((r^3 - 7r)/6, 1 - C(r+1, 2), 1 + r)`.
pub fn q_closed_tail(r: u32) -> Result<(BigInt, BigInt, BigInt)> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "q_r is undefined for r = 0".into(),
        ));
    }
    let r = BigInt::from(r);
    let cube = &r * &r * &r - BigInt::from(7) * &r;
    let (q_r, rem) = cube.div_rem(&BigInt::from(6));
    debug_assert!(rem.is_zero());
    let q_r1 = BigInt::one() - (&r + 1u32) * &r / 2u32;
    let q_r2 = r + 1u32;
    Ok((q_r, q_r1, q_r2))
}

/// `r + 2` consecutive terms `(F_n, .., F_{n+r+1})` of generation r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector {
    pub r: u32,
    pub n: i64,
    pub values: Vec<BigInt>,
}

impl StateVector {
    pub fn at(seq: &HyperfibSequence, n: i64) -> Self {
        let r = seq.generation();
        Self {
            r,
            n,
            values: seq.range(n, n + i64::from(r) + 1),
        }
    }
}

/// One step of the vector recurrence: the state at `n + 1`.
pub fn advance(q: &QMatrix, s: &StateVector) -> Result<StateVector> {
    if q.r != s.r {
        return Err(Error::GenerationMismatch {
            expected: q.r,
            found: s.r,
        });
    }
    Ok(StateVector {
        r: s.r,
        n: s.n + 1,
        values: q.matrix.mul_vec(&s.values)?,
    })
}

/// `A_{r,n} = Q_{r+2}^n · A_{r,0}`, for any integer n.
pub fn reconstruct(r: u32, n: i64) -> IntMatrix {
    let q = build_q(r);
    let a0 = build_window(r as usize + 2, 0, r).matrix;
    q.matrix
        .pow(n)
        .and_then(|p| p.mul(&a0))
        .expect("Q is square and unimodular")
}

/// Minimal-order homogeneous linear recurrence satisfied by `terms`.
///
/// Returns `c_1 .. c_k` with `t_{n+k} = c_1 t_n + ... + c_k t_{n+k-1}` for
/// every window of `terms`, trying `k = 1 ..= max_order` in order. An empty
/// vector means no recurrence of order at most `max_order` fits.
pub fn infer_recurrence(terms: &[BigInt], max_order: usize) -> Result<Vec<BigRational>> {
    if max_order == 0 {
        return Err(Error::InvalidArgument("max_order must be positive".into()));
    }
    let needed = 2 * max_order;
    if terms.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            got: terms.len(),
        });
    }
    for order in 1..=max_order {
        if let Some(c) = fit_order(terms, order) {
            return Ok(c);
        }
    }
    Ok(Vec::new())
}

/// Integer view of [`infer_recurrence`]'s output, if every coefficient is integral.
pub fn integral_coefficients(coeffs: &[BigRational]) -> Option<Vec<BigInt>> {
    coeffs
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

/// Solves every window equation of the given order by rational row reduction.
fn fit_order(terms: &[BigInt], order: usize) -> Option<Vec<BigRational>> {
    let mut rows: Vec<Vec<BigRational>> = (0..terms.len() - order)
        .map(|n| {
            (0..=order)
                .map(|i| BigRational::from_integer(terms[n + i].clone()))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..order {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|row| !row[order].is_zero()) {
        return None;
    }
    // Free coefficients are set to zero.
    let mut c = vec![BigRational::zero(); order];
    for (i, &col) in pivots.iter().enumerate() {
        c[col] = rows[i][order].clone();
    }
    Some(c)
}
