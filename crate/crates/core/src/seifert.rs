//! Seifert matrices, their classical invariants, and the S-equivalence
//! moves: unimodular congruence and the two corner enlargements.

use std::fmt;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::IntMatrix;

/// A square integer matrix of even size whose skew-symmetrization
/// `M - M^T` has determinant 1. The 0×0 form is the unknot.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IntMatrix", into = "IntMatrix")]
pub struct SeifertMatrix(IntMatrix);

/// A unimodular integer matrix `T`, the witness for `T M T^T = M'`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IntMatrix", into = "IntMatrix")]
pub struct CongruenceCertificate(IntMatrix);

/// Which corner template an enlargement used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Enlargement {
    Lambda2,
    Lambda3,
}

/// Result of peeling one corner template off a form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub inner: SeifertMatrix,
    pub kind: Enlargement,
    pub q: Vec<i64>,
}

impl SeifertMatrix {
    pub fn validate(m: IntMatrix) -> Result<Self> {
        if !m.size().is_multiple_of(2) {
            return Err(Error::OddSize(m.size()));
        }
        let skew = m.checked_sub(&m.transpose())?;
        let d = skew.det()?;
        if d != 1 {
            return Err(Error::SkewNotUnimodular(d));
        }
        Ok(Self(m))
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::validate(IntMatrix::from_rows(rows)?)
    }

    pub fn unknot() -> Self {
        Self(IntMatrix::zeros(0))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn genus(&self) -> usize {
        self.0.size() / 2
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0[(i, j)]
    }

    /// `a12 + a21` of a genus-one form.
    pub fn off_diagonal_sum(&self) -> Result<i64> {
        self.require_genus_one()?;
        Ok(self.get(0, 1) + self.get(1, 0))
    }

    pub(crate) fn require_genus_one(&self) -> Result<()> {
        match self.genus() {
            1 => Ok(()),
            g => Err(Error::GenusNotOne(g)),
        }
    }

    /// `det(M - t M^T)`, normalized up to units `±t^k`.
    pub fn alexander(&self) -> LaurentPoly {
        self.0
            .alexander_determinant()
            .normalize_units()
            .expect("det(M - tM^T) is nonzero when det(M - M^T) = 1")
    }

    /// Signature of `M + M^T`.
    pub fn signature(&self) -> i64 {
        self.0
            .checked_add(&self.0.transpose())
            .expect("entries of a validated form fit in i64 after doubling")
            .symmetric_signature()
    }

    /// `|Δ(-1)|`.
    pub fn determinant_invariant(&self) -> u64 {
        let v = self.alexander().evaluate(-1).expect("-1 is nonzero");
        debug_assert!(v.is_integer());
        v.to_integer()
            .abs()
            .to_u64()
            .expect("knot determinant fits in u64")
    }

    /// `T M T^T`, revalidated.
    pub fn apply_lambda1(&self, t: &CongruenceCertificate) -> Result<Self> {
        if t.size() != self.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                found: t.size(),
            });
        }
        Self::validate(t.0.congruence(&self.0)?)
    }

    /// Appends the corner `(0 1; 0 0)` with `q` in the last row.
    pub fn enlarge_lambda2(&self, q: &[i64]) -> Result<Self> {
        let (n, mut out) = self.enlarged(q)?;
        out[(n, n + 1)] = 1;
        for (j, &v) in q.iter().enumerate() {
            out[(n + 1, j)] = v;
        }
        Self::validate(out)
    }

    /// Appends the corner `(0 0; 1 0)` with `q` in the last column.
    pub fn enlarge_lambda3(&self, q: &[i64]) -> Result<Self> {
        let (n, mut out) = self.enlarged(q)?;
        out[(n + 1, n)] = 1;
        for (i, &v) in q.iter().enumerate() {
            out[(i, n + 1)] = v;
        }
        Self::validate(out)
    }

    fn enlarged(&self, q: &[i64]) -> Result<(usize, IntMatrix)> {
        let n = self.size();
        if q.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: q.len(),
            });
        }
        Ok((n, self.0.block_diag(&IntMatrix::zeros(2))))
    }

    /// Inverse of the enlargements, matching the literal corner templates
    /// only (no change of basis is searched).
    pub fn try_reduce(&self) -> Option<Reduction> {
        let size = self.size();
        if size < 2 {
            return None;
        }
        let n = size - 2;
        let m = &self.0;
        let corner = [m[(n, n)], m[(n, n + 1)], m[(n + 1, n)], m[(n + 1, n + 1)]];
        let col_zero = |c: usize| (0..n).all(|i| m[(i, c)] == 0);
        let row_zero = |r: usize| (0..n).all(|j| m[(r, j)] == 0);
        let inner =
            || Self::validate(m.leading_block(n)).expect("inner block of an enlargement is a valid form");

        if corner == [0, 1, 0, 0] && col_zero(n) && col_zero(n + 1) && row_zero(n) {
            let q = (0..n).map(|j| m[(n + 1, j)]).collect();
            return Some(Reduction {
                inner: inner(),
                kind: Enlargement::Lambda2,
                q,
            });
        }
        if corner == [0, 0, 1, 0] && row_zero(n) && row_zero(n + 1) && col_zero(n) {
            let q = (0..n).map(|i| m[(i, n + 1)]).collect();
            return Some(Reduction {
                inner: inner(),
                kind: Enlargement::Lambda3,
                q,
            });
        }
        None
    }

    /// Block-diagonal form of a connected sum.
    pub fn connect_sum(&self, other: &Self) -> Self {
        Self(self.0.block_diag(&other.0))
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeifertMatrix({})", self.0)
    }
}

impl std::str::FromStr for SeifertMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::validate(s.parse()?)
    }
}

impl TryFrom<IntMatrix> for SeifertMatrix {
    type Error = Error;

    fn try_from(m: IntMatrix) -> Result<Self> {
        Self::validate(m)
    }
}

impl From<SeifertMatrix> for IntMatrix {
    fn from(m: SeifertMatrix) -> Self {
        m.0
    }
}

impl CongruenceCertificate {
    pub fn new(t: IntMatrix) -> Result<Self> {
        let d = t.det()?;
        if d.abs() != 1 {
            return Err(Error::NotUnimodular(d));
        }
        Ok(Self(t))
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    pub fn identity(n: usize) -> Self {
        Self(IntMatrix::identity(n))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// `T ⊕ I`, lifting a certificate on the first summand of a connected
    /// sum to the whole block form.
    pub fn lift_to_connect_sum(&self, other_size: usize) -> Self {
        Self(self.0.block_diag(&IntMatrix::identity(other_size)))
    }

    /// True iff `T M T^T = target` (the unimodularity is a type invariant).
    pub fn verifies(&self, m: &SeifertMatrix, target: &SeifertMatrix) -> Result<bool> {
        if m.size() != target.size() {
            return Err(Error::SizeMismatch {
                expected: m.size(),
                found: target.size(),
            });
        }
        if self.size() != m.size() {
            return Err(Error::SizeMismatch {
                expected: m.size(),
                found: self.size(),
            });
        }
        Ok(self.0.congruence(m.matrix())? == *target.matrix())
    }
}

impl fmt::Display for CongruenceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for CongruenceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CongruenceCertificate({})", self.0)
    }
}

impl TryFrom<IntMatrix> for CongruenceCertificate {
    type Error = Error;

    fn try_from(m: IntMatrix) -> Result<Self> {
        Self::new(m)
    }
}

impl From<CongruenceCertificate> for IntMatrix {
    fn from(c: CongruenceCertificate) -> Self {
        c.0
    }
}
