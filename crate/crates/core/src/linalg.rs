//! Dense matrices over arbitrary-precision integers.
//!
//! Everything here is exact. Determinants use Bareiss fraction-free
//! elimination, with cofactor expansion kept as a small-matrix oracle.
//! Characteristic polynomials use the Faddeev-LeVerrier recursion, whose
//! divisions are exact over the integers.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest dimension accepted by [`DetMethod::Cofactor`].
pub const COFACTOR_MAX_DIM: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DetMethod {
    #[default]
    Bareiss,
    /// Laplace expansion along the first row. Exponential; test oracle only.
    Cofactor,
}

/// Row-major dense matrix of [`BigInt`] entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from nested rows. All rows must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.iter().cloned().map(Into::into))
            .collect();
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Integer power by square-and-multiply. Negative exponents go through
    /// [`IntMatrix::adjugate_inverse`] and therefore need `det = ±1`.
    pub fn pow(&self, exp: i64) -> Result<IntMatrix> {
        let n = self.require_square()?;
        let mut base = if exp < 0 {
            self.adjugate_inverse()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::identity(n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn det(&self, method: DetMethod) -> Result<BigInt> {
        let n = self.require_square()?;
        match method {
            DetMethod::Bareiss => Ok(self.det_bareiss()),
            DetMethod::Cofactor if n > COFACTOR_MAX_DIM => Err(Error::CofactorTooLarge(n)),
            DetMethod::Cofactor => Ok(cofactor_det(&self.to_rows())),
        }
    }

    fn det_bareiss(&self) -> BigInt {
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.to_rows();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num.div_floor(&prev);
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// `adj(A)` with `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> Result<IntMatrix> {
        let n = self.require_square()?;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        Ok(Self::from_fn(n, n, |i, j| {
            let cof = self.minor(j, i).det_bareiss();
            if (i + j) % 2 == 0 {
                cof
            } else {
                -cof
            }
        }))
    }

    /// Exact inverse of a unimodular matrix, `det(A) · adj(A)`.
    pub fn adjugate_inverse(&self) -> Result<IntMatrix> {
        self.require_square()?;
        let d = self.det_bareiss();
        if d.abs() != BigInt::one() {
            return Err(Error::NotUnimodular(d));
        }
        let mut adj = self.adjugate()?;
        if d.is_negative() {
            for x in &mut adj.data {
                *x = -std::mem::take(x);
            }
        }
        Ok(adj)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        Self::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let si = if i < skip_row { i } else { i + 1 };
            let sj = if j < skip_col { j } else { j + 1 };
            self[(si, sj)].clone()
        })
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    /// Monic characteristic polynomial `det(xI - A)`.
    pub fn char_poly(&self) -> Result<Polynomial> {
        let n = self.require_square()?;
        // c[k] is the coefficient of x^k.
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            for i in 0..n {
                m[(i, i)] += &c[n - k + 1];
            }
            let am = self.mul(&m)?;
            let tr = am.trace();
            let (q, rem) = tr.div_rem(&BigInt::from(k));
            debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
            c[n - k] = -q;
            m = am;
        }
        Ok(Polynomial::new(c))
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    /// Whitespace-separated rows, right-aligned per column.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| cells[i * self.cols + j].len())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>w$}", cells[i * self.cols + j], w = widths[j])?;
            }
        }
        Ok(())
    }
}

fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => {
            let mut total = BigInt::zero();
            for (j, pivot) in m[0].iter().enumerate() {
                if pivot.is_zero() {
                    continue;
                }
                let sub: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                debug_assert_eq!(sub.len(), n - 1);
                let term = pivot * cofactor_det(&sub);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// Dense univariate polynomial with coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monic linear factor `x - root`.
    pub fn linear(root: i64) -> Self {
        Self::from_i64(&[-root, 1])
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Division by a monic divisor: returns `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = match divisor.degree() {
            Some(d) if divisor.coeffs[d].is_one() => d,
            _ => return Err(Error::InvalidArgument("divisor must be monic".into())),
        };
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::new(Vec::new()), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let lead = std::mem::take(&mut rem[k + dd]);
            if lead.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[k + j] -= &lead * d;
            }
            quot[k] = lead;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }
}

impl fmt::Display for Polynomial {
    /// Renders as `x^4 - 3x^3 + 2x^2 + x - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if deg == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn q4() -> IntMatrix {
        m(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, -1, -2, 3]])
    }

    #[test]
    fn hand_product() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let b = m(&[&[1, 0], &[1, 1]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[&[2, 1], &[1, 1]]));
        let i3 = IntMatrix::identity(3);
        let x = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(i3.mul(&x).unwrap(), x);
    }

    #[test]
    fn mismatched_product_is_rejected() {
        let a = IntMatrix::zeros(2, 3);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn pow_zero_is_identity() {
        assert_eq!(q4().pow(0).unwrap(), IntMatrix::identity(4));
    }

    #[test]
    fn negative_pow_inverts() {
        let q = q4();
        let prod = q.pow(-2).unwrap().mul(&q.pow(2).unwrap()).unwrap();
        assert_eq!(prod, IntMatrix::identity(4));
    }

    #[test]
    fn negative_pow_needs_unimodular() {
        let a = m(&[&[2, 0], &[0, 1]]);
        assert!(matches!(a.pow(-1), Err(Error::NotUnimodular(_))));
        assert!(matches!(IntMatrix::zeros(2, 3).pow(2), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn determinants() {
        for n in 1..5 {
            assert_eq!(IntMatrix::identity(n).det(DetMethod::Bareiss).unwrap(), BigInt::one());
        }
        assert_eq!(q4().det(DetMethod::Bareiss).unwrap(), BigInt::from(-1));
        assert_eq!(q4().det(DetMethod::Cofactor).unwrap(), BigInt::from(-1));
        let a20 = m(&[&[0, 1, 3, 7], &[1, 3, 7, 14], &[3, 7, 14, 26], &[7, 14, 26, 46]]);
        assert_eq!(a20.det(DetMethod::Cofactor).unwrap(), BigInt::one());
        assert_eq!(a20.det(DetMethod::Bareiss).unwrap(), BigInt::one());
    }

    #[test]
    fn zero_pivot_column_gives_zero() {
        let a = m(&[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        assert_eq!(a.det(DetMethod::Bareiss).unwrap(), BigInt::zero());
    }

    #[test]
    fn cofactor_size_limit() {
        let big = IntMatrix::identity(7);
        assert_eq!(big.det(DetMethod::Cofactor), Err(Error::CofactorTooLarge(7)));
        assert!(matches!(
            IntMatrix::zeros(2, 3).det(DetMethod::Bareiss),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn adjugate_inverse_cases() {
        assert_eq!(IntMatrix::identity(3).adjugate_inverse().unwrap(), IntMatrix::identity(3));
        let shear = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(shear.adjugate_inverse().unwrap(), m(&[&[1, -1], &[0, 1]]));
        let q = q4();
        assert_eq!(q.adjugate_inverse().unwrap().mul(&q).unwrap(), IntMatrix::identity(4));
        assert!(matches!(
            m(&[&[2, 1], &[1, 2]]).adjugate_inverse(),
            Err(Error::NotUnimodular(_))
        ));
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            IntMatrix::identity(2).char_poly().unwrap(),
            Polynomial::from_i64(&[1, -2, 1])
        );
        let p = q4().char_poly().unwrap();
        assert_eq!(p, Polynomial::from_i64(&[-1, 1, 2, -3, 1]));
        assert_eq!(p.to_string(), "x^4 - 3x^3 + 2x^2 + x - 1");
        let golden = Polynomial::from_i64(&[-1, -1, 1]);
        let (quot, rem) = p.div_rem_monic(&golden).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, Polynomial::linear(1).pow(2));
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(Polynomial::new(vec![]).to_string(), "0");
        assert_eq!(Polynomial::from_i64(&[-1]).to_string(), "-1");
        assert_eq!(Polynomial::from_i64(&[0, -1, 0, 2]).to_string(), "2x^3 - x");
    }

    #[test]
    fn matrix_display_aligns_columns() {
        let a = m(&[&[1, -1], &[10, 2]]);
        assert_eq!(a.to_string(), " 1 -1\n10  2");
    }
}
