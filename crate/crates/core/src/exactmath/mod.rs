//! Exact integer and rational linear algebra.
//!
//! Lattice vectors are stored as `i64` entries with checked arithmetic; every
//! computation whose intermediates can grow (determinants, simplex pivots)
//! runs on arbitrary-precision integers or rationals. Nothing here touches
//! floating point.

mod simplex;

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use simplex::{find_separating_functional, nonneg_rational_solve};

/// Reduced fraction of arbitrary-precision integers with positive denominator.
pub type Rat = BigRational;

/// A vector of exact rationals.
pub type RatVec = Vec<Rat>;

/// A lattice vector in `ℤⁿ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVec(Vec<i64>);

impl IntVec {
    pub fn new(entries: Vec<i64>) -> Self {
        IntVec(entries)
    }

    pub fn zero(n: usize) -> Self {
        IntVec(vec![0; n])
    }

    /// The standard basis vector `e_i` (0-based `i`).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        IntVec(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &IntVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &IntVec) -> Result<IntVec> {
        Error::check_dim(self.dim(), other.dim())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("vector addition")))
            .collect::<Result<Vec<_>>>()
            .map(IntVec)
    }

    pub fn checked_sub(&self, other: &IntVec) -> Result<IntVec> {
        Error::check_dim(self.dim(), other.dim())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| {
                a.checked_sub(*b)
                    .ok_or(Error::Overflow("vector subtraction"))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntVec)
    }

    pub fn checked_scale(&self, k: i64) -> Result<IntVec> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow("vector scaling")))
            .collect::<Result<Vec<_>>>()
            .map(IntVec)
    }

    /// Componentwise maximum (the exponent of the lcm of two monomials).
    pub fn join(&self, other: &IntVec) -> Result<IntVec> {
        Error::check_dim(self.dim(), other.dim())?;
        Ok(IntVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        ))
    }

    pub fn neg(&self) -> IntVec {
        IntVec(self.0.iter().map(|a| -a).collect())
    }

    /// Sum of the entries.
    pub fn norm(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Dot product with an integer functional, in arbitrary precision.
    pub fn dot_big(&self, w: &[BigInt]) -> BigInt {
        self.0
            .iter()
            .zip(w)
            .map(|(a, b)| BigInt::from(*a) * b)
            .sum()
    }

    pub fn dot_rat(&self, w: &[Rat]) -> Rat {
        self.0
            .iter()
            .zip(w)
            .map(|(a, b)| Rat::from_integer(BigInt::from(*a)) * b)
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    /// Gcd of the absolute values of the entries (0 for the zero vector).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &x| g.gcd(&x))
    }

    /// A nonzero integer vector is primitive when its entries are coprime.
    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }
}

impl Index<usize> for IntVec {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<Vec<i64>> for IntVec {
    fn from(v: Vec<i64>) -> Self {
        IntVec(v)
    }
}

impl<const N: usize> From<[i64; N]> for IntVec {
    fn from(v: [i64; N]) -> Self {
        IntVec(v.to_vec())
    }
}

impl fmt::Debug for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Rectangular integer matrix, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<IntVec>,
    cols: usize,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<IntVec>) -> Result<Self> {
        let cols = rows.first().map_or(0, IntVec::dim);
        for r in &rows {
            Error::check_dim(cols, r.dim())?;
        }
        Ok(IntMatrix { rows, cols })
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix {
            rows: (0..n).map(|i| IntVec::unit(n, i)).collect(),
            cols: n,
        }
    }

    pub fn rows(&self) -> &[IntVec] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        let n = self.nrows();
        if n != self.cols {
            return Err(Error::Dimension {
                expected: n,
                found: self.cols,
            });
        }
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    // exact by Sylvester's identity
                    m[i][j] = t / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        Ok(sign * &m[n - 1][n - 1])
    }
}

/// Multiplies a rational vector by the lcm `L` of its denominators.
/// Returns `(L, L·w)`.
pub fn clear_denominators(w: &[Rat]) -> (BigInt, Vec<BigInt>) {
    let lcm = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled = w.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    (lcm, scaled)
}

/// The smallest positive integer multiple of `w` with integral entries.
pub fn integer_scaling(w: &[Rat]) -> Vec<BigInt> {
    clear_denominators(w).1
}

/// Converts a big integer vector to `i64`, failing on overflow.
pub(crate) fn to_i64_vec(w: &[BigInt]) -> Result<Vec<i64>> {
    w.iter()
        .map(|x| i64::try_from(x.clone()).map_err(|_| Error::Overflow("functional scaling")))
        .collect()
}

pub(crate) fn rat(x: i64) -> Rat {
    Rat::from_integer(BigInt::from(x))
}
