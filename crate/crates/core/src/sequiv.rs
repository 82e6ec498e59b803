//! The band-twist operation on genus-one forms and the decision procedure
//! for first S-equivalence (equivalence under unimodular congruence alone).
//!
//! For a genus-one form `M = (a11 a12; a21 a22)` and `ℓ ≠ 0`, twisting the
//! first band by `ℓ` full twists gives `M' = (a11-ℓ a12; a21 a22)`. `M` and
//! `M'` are congruent over `GL_2(Z)` iff `a22 = 0` and `s = a12 + a21`
//! divides `ℓ`, witnessed by `T = (1 -ℓ/s; 0 1)`. Twisting the second band
//! is the transposed situation. Since `|a12 - a21| = 1`, `s` is odd and in
//! particular nonzero.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::seifert::{CongruenceCertificate, SeifertMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Band {
    First,
    Second,
}

impl Band {
    /// Index of the diagonal entry this band's twists shift.
    fn index(self) -> usize {
        match self {
            Band::First => 0,
            Band::Second => 1,
        }
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Band::First => "first",
            Band::Second => "second",
        })
    }
}

impl std::str::FromStr for Band {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" | "1" => Ok(Band::First),
            "second" | "2" => Ok(Band::Second),
            _ => Err(Error::Parse(format!(
                "band must be 'first' or 'second', got {s:?}"
            ))),
        }
    }
}

/// `ell` signed full twists added to `band`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistParams {
    pub ell: i64,
    pub band: Band,
}

impl TwistParams {
    pub fn new(ell: i64, band: Band) -> Self {
        Self { ell, band }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    FirstSEquivalent,
    NotFirstSEquivalent,
}

/// Outcome of the decision procedure. A positive decision always carries a
/// certificate that has been checked against the twisted form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SEquivReport {
    pub form: SeifertMatrix,
    pub twist: TwistParams,
    pub twisted: SeifertMatrix,
    pub decision: Decision,
    pub certificate: Option<CongruenceCertificate>,
    pub reason: String,
}

impl SEquivReport {
    pub fn is_first_s_equivalent(&self) -> bool {
        self.decision == Decision::FirstSEquivalent
    }

    /// First S-equivalence implies S-equivalence; a negative answer says
    /// nothing about S-equivalence through the enlargement moves.
    pub fn implies_s_equivalence(&self) -> bool {
        self.is_first_s_equivalent()
    }
}

impl fmt::Display for SEquivReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "form: {}", self.form)?;
        writeln!(f, "twist: ell={} band={}", self.twist.ell, self.twist.band)?;
        writeln!(f, "twisted form: {}", self.twisted)?;
        match &self.certificate {
            Some(t) => {
                writeln!(f, "decision: first-S-equivalent ({})", self.reason)?;
                writeln!(f, "certificate: {t}")?;
                write!(f, "implies: S-equivalent")
            }
            None => {
                writeln!(f, "decision: not first-S-equivalent: {}", self.reason)?;
                write!(f, "note: full S-equivalence is not decided by this procedure")
            }
        }
    }
}

/// Shifts the band's diagonal entry by `-ell`.
pub fn twist_form(m: &SeifertMatrix, p: TwistParams) -> Result<SeifertMatrix> {
    m.require_genus_one()?;
    let i = p.band.index();
    let mut out = m.matrix().clone();
    out[(i, i)] = out[(i, i)].checked_sub(p.ell).ok_or(Error::Overflow)?;
    SeifertMatrix::validate(out)
}

/// Why the condition holds or fails, without building a certificate.
fn evaluate_condition(m: &SeifertMatrix, p: TwistParams) -> Result<std::result::Result<String, String>> {
    let s = m.off_diagonal_sum()?;
    if p.ell == 0 {
        return Ok(Ok("ell = 0 leaves the form unchanged".into()));
    }
    let (opposite, name) = match p.band {
        Band::First => (m.get(1, 1), "a22"),
        Band::Second => (m.get(0, 0), "a11"),
    };
    if opposite != 0 {
        return Ok(Err(format!("{name} ≠ 0")));
    }
    if p.ell % s.abs() != 0 {
        return Ok(Err(format!("s = {s} does not divide ell = {}", p.ell)));
    }
    Ok(Ok(format!("{name} = 0 and s = {s} divides ell = {}", p.ell)))
}

/// True iff `ell = 0`, or the entry opposite the twisted band is 0 and
/// `s = a12 + a21` divides `ell`.
pub fn first_sequiv_condition(m: &SeifertMatrix, p: TwistParams) -> Result<bool> {
    Ok(evaluate_condition(m, p)?.is_ok())
}

/// Runs the decision procedure and produces a verified certificate when the
/// twisted form is congruent to the original.
pub fn first_sequiv_certificate(m: &SeifertMatrix, p: TwistParams) -> Result<SEquivReport> {
    let twisted = twist_form(m, p)?;
    let (decision, certificate, reason) = match evaluate_condition(m, p)? {
        Ok(reason) => {
            let k = if p.ell == 0 {
                0
            } else {
                -p.ell / m.off_diagonal_sum()?
            };
            let t = match p.band {
                Band::First => IntMatrix::from_rows(&[[1, k], [0, 1]])?,
                Band::Second => IntMatrix::from_rows(&[[1, 0], [k, 1]])?,
            };
            let t = CongruenceCertificate::new(t)?;
            assert!(
                t.verifies(m, &twisted)?,
                "certificate {t} must carry {m} to {twisted}"
            );
            (Decision::FirstSEquivalent, Some(t), reason)
        }
        Err(reason) => (Decision::NotFirstSEquivalent, None, reason),
    };
    Ok(SEquivReport {
        form: m.clone(),
        twist: p,
        twisted,
        decision,
        certificate,
        reason,
    })
}

/// Checks `det(T) = ±1` and `T M T^T = target` with exact arithmetic.
pub fn verify_certificate(m: &SeifertMatrix, target: &SeifertMatrix, t: &IntMatrix) -> Result<bool> {
    if t.size() != m.size() || target.size() != m.size() {
        return Err(Error::SizeMismatch {
            expected: m.size(),
            found: if t.size() != m.size() {
                t.size()
            } else {
                target.size()
            },
        });
    }
    if t.det()?.abs() != 1 {
        return Ok(false);
    }
    Ok(t.congruence(m.matrix())? == *target.matrix())
}

/// Largest number of candidate rows the brute-force oracle enumerates.
pub const BRUTE_FORCE_ROW_LIMIT: u128 = 10_000_000;

/// Exhaustive search over integer `T` with entries in `[-bound, bound]`, in
/// lexicographic (row-major, ascending) order. Returns the first unimodular
/// `T` with `T M T^T = target`.
///
/// Row `i` of `T` alone fixes `target[i][i]` and each pair of rows fixes one
/// off-diagonal pair, so the odometer is run row by row with those checks
/// pruning the tree. The visiting order, and hence the returned witness, is
/// the same as for a flat enumeration of all entries.
pub fn brute_force_congruence(
    m: &SeifertMatrix,
    target: &SeifertMatrix,
    bound: u32,
) -> Result<Option<CongruenceCertificate>> {
    let n = m.size();
    if target.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: target.size(),
        });
    }
    if n > 4 {
        return Err(Error::SearchTooLarge(format!("size {n} exceeds 4")));
    }
    if bound == 0 {
        return Err(Error::SearchTooLarge("bound must be at least 1".into()));
    }
    let width = 2 * bound as u128 + 1;
    if width
        .checked_pow(n as u32)
        .is_none_or(|c| c > BRUTE_FORCE_ROW_LIMIT)
    {
        return Err(Error::SearchTooLarge(format!(
            "{width}^{n} candidate rows exceed {BRUTE_FORCE_ROW_LIMIT}"
        )));
    }
    if n == 0 {
        return Ok(Some(CongruenceCertificate::identity(0)));
    }
    let a = m.matrix();
    let b = target.matrix();
    let form = |x: &[i64], y: &[i64]| -> i128 {
        let mut acc = 0i128;
        for i in 0..n {
            for j in 0..n {
                acc += x[i] as i128 * a[(i, j)] as i128 * y[j] as i128;
            }
        }
        acc
    };

    // base-(2·bound+1) counting with the first entry most significant is
    // lexicographic order
    let w = width as usize;
    let all_rows: Vec<Vec<i64>> = (0..w.pow(n as u32))
        .map(|mut idx| {
            let mut r = vec![0i64; n];
            for k in (0..n).rev() {
                r[k] = (idx % w) as i64 - bound as i64;
                idx /= w;
            }
            r
        })
        .collect();
    // candidates per position, already in lexicographic order
    let candidates: Vec<Vec<&Vec<i64>>> = (0..n)
        .map(|i| {
            all_rows
                .iter()
                .filter(|r| form(r, r) == b[(i, i)] as i128)
                .collect()
        })
        .collect();

    let mut chosen: Vec<&Vec<i64>> = Vec::with_capacity(n);
    let mut cursor = vec![0usize; n];
    let mut depth = 0usize;
    loop {
        if cursor[depth] == candidates[depth].len() {
            if depth == 0 {
                return Ok(None);
            }
            cursor[depth] = 0;
            depth -= 1;
            chosen.pop();
            cursor[depth] += 1;
            continue;
        }
        let r = candidates[depth][cursor[depth]];
        let fits = chosen
            .iter()
            .enumerate()
            .all(|(i, c)| form(c, r) == b[(i, depth)] as i128 && form(r, c) == b[(depth, i)] as i128);
        if !fits {
            cursor[depth] += 1;
            continue;
        }
        chosen.push(r);
        if depth + 1 == n {
            let t = IntMatrix::from_rows(&chosen)?;
            if t.det()?.abs() == 1 {
                debug_assert_eq!(t.congruence(a)?, *b);
                return Ok(Some(CongruenceCertificate::new(t)?));
            }
            chosen.pop();
            cursor[depth] += 1;
            continue;
        }
        depth += 1;
    }
}

/// `T1 ⊕ I(size2)`.
pub fn connect_sum_certificate(t1: &CongruenceCertificate, size2: usize) -> CongruenceCertificate {
    t1.lift_to_connect_sum(size2)
}
