//! Small dense square integer matrices with exact, overflow-checked
//! arithmetic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::NotSquare);
            }
            data.extend_from_slice(r);
        }
        Ok(Self { n, data })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, i64::checked_sub)
    }

    fn zip_with(&self, other: &Self, f: fn(i64, i64) -> Option<i64>) -> Result<Self> {
        self.check_size(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f(*a, *b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { n: self.n, data })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc: i128 = 0;
                for k in 0..n {
                    acc += self[(i, k)] as i128 * other[(k, j)] as i128;
                }
                out[(i, j)] = i64::try_from(acc).map_err(|_| Error::Overflow)?;
            }
        }
        Ok(out)
    }

    /// `self * m * self^T`.
    pub fn congruence(&self, m: &Self) -> Result<Self> {
        self.checked_mul(m)?.checked_mul(&self.transpose())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<i128> {
        let n = self.n;
        if n == 0 {
            return Ok(1);
        }
        let mut a: Vec<i128> = self.data.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k * n + k] == 0 {
                match (k + 1..n).find(|&r| a[r * n + k] != 0) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            let piv = a[k * n + k];
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = piv
                        .checked_mul(a[i * n + j])
                        .and_then(|x| x.checked_sub(a[i * n + k].checked_mul(a[k * n + j])?))
                        .ok_or(Error::Overflow)?;
                    a[i * n + j] = v / prev;
                }
                a[i * n + k] = 0;
            }
            prev = piv;
        }
        Ok(sign * a[n * n - 1])
    }

    /// Block-diagonal stacking `self ⊕ other`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut out = Self::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = self[(i, j)];
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                out[(self.n + i, self.n + j)] = other[(i, j)];
            }
        }
        out
    }

    /// The leading `k × k` block.
    pub fn leading_block(&self, k: usize) -> Self {
        assert!(k <= self.n);
        let mut out = Self::zeros(k);
        for i in 0..k {
            for j in 0..k {
                out[(i, j)] = self[(i, j)];
            }
        }
        out
    }

    /// Signature of a symmetric matrix by exact congruence diagonalization
    /// over the rationals.
    pub fn symmetric_signature(&self) -> i64 {
        debug_assert_eq!(*self, self.transpose());
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from_integer(BigInt::from(self[(i, j)])))
                    .collect()
            })
            .collect();
        let mut sig = 0i64;
        for k in 0..n {
            if a[k][k].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                    a.swap(k, j);
                    for row in a.iter_mut() {
                        row.swap(k, j);
                    }
                } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                    // row_k += row_j, col_k += col_j; new pivot is 2 a[k][j] != 0
                    let row_j = a[j].clone();
                    for (x, v) in a[k].iter_mut().zip(row_j) {
                        *x += v;
                    }
                    for row in a.iter_mut() {
                        let v = row[j].clone();
                        row[k] += v;
                    }
                } else {
                    continue;
                }
            }
            let piv = a[k][k].clone();
            sig += if piv.is_positive() { 1 } else { -1 };
            // Schur complement of the pivot; the trailing block stays symmetric
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &piv;
                let (top, rest) = a.split_at_mut(i);
                for (x, y) in rest[0][k + 1..].iter_mut().zip(&top[k][k + 1..]) {
                    *x -= &f * y;
                }
            }
            for row in &mut a[k + 1..] {
                row[k] = BigRational::zero();
            }
            for x in &mut a[k][k + 1..] {
                *x = BigRational::zero();
            }
        }
        sig
    }

    /// `det(self - t * self^T)` as a polynomial in `t`.
    pub fn alexander_determinant(&self) -> LaurentPoly {
        let n = self.n;
        let t = LaurentPoly::monomial(1, 1);
        let mut a: Vec<LaurentPoly> = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(&LaurentPoly::constant(self[(i, j)]) - &(&t * &LaurentPoly::constant(self[(j, i)])));
            }
        }
        poly_det(n, a)
    }
}

/// Bareiss determinant over integer Laurent polynomials; every division is
/// exact by construction.
pub(crate) fn poly_det(n: usize, mut a: Vec<LaurentPoly>) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                Some(r) => {
                    for c in 0..n {
                        a.swap(k * n + c, r * n + c);
                    }
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        let piv = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&piv * &a[i * n + j]) - &(&a[i * n + k] * &a[k * n + j]);
                a[i * n + j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i * n + k] = LaurentPoly::zero();
        }
        prev = piv;
    }
    let d = a.pop().unwrap();
    if negate {
        -d
    } else {
        d
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        assert!(i < self.n && j < self.n, "matrix index out of range");
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        assert!(i < self.n && j < self.n, "matrix index out of range");
        &mut self.data[i * self.n + j]
    }
}

impl TryFrom<Vec<Vec<i64>>> for IntMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::from_rows(&rows)
    }
}

impl From<IntMatrix> for Vec<Vec<i64>> {
    fn from(m: IntMatrix) -> Self {
        m.rows()
    }
}

/// Inline form, e.g. `[[0,2],[1,0]]`.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({self})")
    }
}

/// Accepts the inline bracket form or one row per line with
/// whitespace-separated integers.
impl FromStr for IntMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let rows: Vec<Vec<i64>> = if trimmed.starts_with('[') {
            parse_inline(trimmed)?
        } else {
            trimmed
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(|l| {
                    l.split_whitespace()
                        .map(|tok| {
                            tok.parse::<i64>()
                                .map_err(|_| Error::Parse(format!("matrix: bad integer {tok:?}")))
                        })
                        .collect()
                })
                .collect::<Result<_>>()?
        };
        Self::from_rows(&rows)
    }
}

fn parse_inline(s: &str) -> Result<Vec<Vec<i64>>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("matrix: malformed inline matrix {s:?}"));
    let inner = compact
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(bad)?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let inner = inner
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(bad)?;
    inner
        .split("],[")
        .map(|row| {
            if row.is_empty() {
                return Ok(Vec::new());
            }
            row.split(',')
                .map(|tok| tok.parse::<i64>().map_err(|_| bad()))
                .collect()
        })
        .collect()
}
