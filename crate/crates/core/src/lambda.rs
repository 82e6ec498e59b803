//! The two-band knots λ(n, m, p).
//!
//! A disk carries two bands. The first band has `n` half twists, the
//! second `m`, and the bands pass `p` times through each other in signed
//! double crossings. The Seifert matrix on the core curves of the bands is
//! `[[-n/2, (p+1)/2], [(p-1)/2, -m/2]]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{BracketOptions, CrossKind, MorseDiagram, PlanarDiagram};
use crate::error::{Error, Result};
use crate::seifert::SeifertMatrix;
use crate::sequiv::Band;

pub use crate::report::paper_report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct LambdaSpec {
    n: i64,
    m: i64,
    p: i64,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    n: i64,
    m: i64,
    p: i64,
}

impl TryFrom<RawSpec> for LambdaSpec {
    type Error = Error;

    fn try_from(r: RawSpec) -> Result<Self> {
        Self::new(r.n, r.m, r.p)
    }
}

impl From<LambdaSpec> for RawSpec {
    fn from(s: LambdaSpec) -> Self {
        RawSpec {
            n: s.n,
            m: s.m,
            p: s.p,
        }
    }
}

impl LambdaSpec {
    pub fn new(n: i64, m: i64, p: i64) -> Result<Self> {
        if n % 2 != 0 || m % 2 != 0 {
            return Err(Error::InvalidLambda(format!("n = {n} and m = {m} must be even")));
        }
        if p % 2 == 0 || p.abs() < 3 {
            return Err(Error::InvalidLambda(format!("p = {p} must be odd with |p| >= 3")));
        }
        Ok(Self { n, m, p })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// Crossings in the compiled diagram.
    pub fn crossing_count(&self) -> usize {
        (self.n.unsigned_abs() + self.m.unsigned_abs() + 4 * self.p.unsigned_abs()) as usize
    }
}

impl fmt::Display for LambdaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ({},{},{})", self.n, self.m, self.p)
    }
}

pub fn lambda_seifert(spec: LambdaSpec) -> SeifertMatrix {
    let LambdaSpec { n, m, p } = spec;
    SeifertMatrix::from_rows(&[[-n / 2, (p + 1) / 2], [(p - 1) / 2, -m / 2]])
        .expect("det(M - M^T) = 1 for every λ spec")
}

/// `2ℓ` extra half twists on one band.
pub fn lambda_twist(spec: LambdaSpec, ell: i64, band: Band) -> Result<LambdaSpec> {
    let overflow = || Error::Overflow;
    let shift = ell.checked_mul(2).ok_or_else(overflow)?;
    match band {
        Band::First => LambdaSpec::new(spec.n.checked_add(shift).ok_or_else(overflow)?, spec.m, spec.p),
        Band::Second => LambdaSpec::new(spec.n, spec.m.checked_add(shift).ok_or_else(overflow)?, spec.p),
    }
}

/// Over-strand of each strand crossing inside a positive double crossing,
/// with the band at the left of the pass going up.
const POSITIVE_PASS: CrossKind = CrossKind::RightOver;

/// Layout of the boundary knot as a Morse diagram.
///
/// Eight strands rise from four cups: the outer pair bounds the disk and
/// the first band, and the three inner pairs are band edges and the disk
/// gap. Band twists come first (first band on strands 0-1, second band on
/// 6-7), then the band passes on strands 2-5, then four caps close the
/// bands over the top.
pub fn lambda_morse(spec: LambdaSpec) -> MorseDiagram {
    let mut d = MorseDiagram::new();
    d.cup(0).cup(1).cup(3).cup(5);
    for _ in 0..spec.n.abs() {
        d.cross(0, CrossKind::Sign(spec.n.signum() as i8));
    }
    for _ in 0..spec.m.abs() {
        d.cross(6, CrossKind::Sign(spec.m.signum() as i8));
    }
    let kind = match (spec.p > 0, POSITIVE_PASS) {
        (true, k) => k,
        (false, CrossKind::LeftOver) => CrossKind::RightOver,
        (false, _) => CrossKind::LeftOver,
    };
    for _ in 0..spec.p.abs() {
        for i in [3, 2, 4, 3] {
            d.cross(i, kind);
        }
    }
    d.cap(1).cap(0).cap(1).cap(0);
    d
}

pub fn lambda_diagram(spec: LambdaSpec) -> Result<PlanarDiagram> {
    lambda_diagram_with(spec, &BracketOptions::default())
}

pub fn lambda_diagram_with(spec: LambdaSpec, opts: &BracketOptions) -> Result<PlanarDiagram> {
    if spec.crossing_count() > opts.crossing_cap {
        return Err(Error::CrossingCap {
            count: spec.crossing_count(),
            cap: opts.crossing_cap,
        });
    }
    lambda_morse(spec).compile()
}
