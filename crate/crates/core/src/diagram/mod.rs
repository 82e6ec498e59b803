//! Oriented planar knot diagrams in PD notation.
//!
//! A crossing `X[a,b,c,d]` lists its four arcs counterclockwise, starting
//! from the under-strand where it enters the crossing; the under-strand
//! leaves through `c`. The over-strand runs between `b` and `d`, and its
//! direction decides the sign: entering at `d` is a positive crossing,
//! entering at `b` a negative one.
//!
//! The left-handed trefoil, with three negative crossings:
//!
//! ```
//! use knotlab::PlanarDiagram;
//!
//! let d: PlanarDiagram = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]".parse().unwrap();
//! assert_eq!(d.writhe(), -3);
//! assert_eq!(knotlab::jones(&d).unwrap().to_string(), "-t^-4 + t^-3 + t^-1");
//! ```

mod bracket;
mod dsu;
mod jones;
mod morse;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bracket::{
    delta, kauffman_bracket, kauffman_bracket_with, state_sum, BracketOptions, BracketState, Smoothing,
    CROSSING_CAP_ENV, DEFAULT_CROSSING_CAP,
};
pub use dsu::DisjointSets;
pub use jones::{jones, jones_twist, jones_with, JonesPolynomial};
pub use morse::{CrossKind, MorseDiagram, MorseEvent};

/// Four arc labels in PD order.
pub type Crossing = [u32; 4];

/// A validated single-component oriented diagram.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Crossing>", into = "Vec<Crossing>")]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    // Slot (1 or 3) through which the over-strand enters each crossing.
    over_in: Vec<u8>,
}

struct Traced {
    over_in: Vec<u8>,
    components: usize,
}

fn trace(raw: &[Crossing]) -> Result<Traced> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (i, x) in raw.iter().enumerate() {
        for (s, &arc) in x.iter().enumerate() {
            *counts.entry(arc).or_default() += 1;
            occ.entry(arc).or_default().push((i, s));
        }
    }
    if let Some((&arc, &count)) = counts.iter().find(|(_, &n)| n != 2) {
        return Err(Error::ArcMultiplicity { arc, count });
    }

    let mut seen = vec![[false; 4]; raw.len()];
    let mut over_in = vec![0u8; raw.len()];
    let mut components = 0;
    loop {
        let start = (0..raw.len())
            .find(|&i| !seen[i][0])
            .map(|i| (i, 0))
            .or_else(|| (0..raw.len()).find_map(|i| (1..4).find(|&s| !seen[i][s]).map(|s| (i, s))));
        let Some(start) = start else { break };
        components += 1;
        let (mut i, mut s) = start;
        loop {
            let out = (s + 2) % 4;
            if s == 2 || seen[i][s] || seen[i][out] {
                return Err(Error::InconsistentOrientation(i));
            }
            seen[i][s] = true;
            seen[i][out] = true;
            if s % 2 == 1 {
                over_in[i] = s as u8;
            }
            let here = &occ[&raw[i][out]];
            (i, s) = if here[0] == (i, out) { here[1] } else { here[0] };
            if (i, s) == start {
                break;
            }
        }
    }
    Ok(Traced { over_in, components })
}

/// Checks a raw crossing list and orients it.
///
/// Errors report the first failing check in the order: arc multiplicity,
/// orientation, component count.
pub fn validate_pd(raw: Vec<Crossing>) -> Result<PlanarDiagram> {
    let t = trace(&raw)?;
    if t.components > 1 {
        return Err(Error::MultipleComponents(t.components));
    }
    Ok(PlanarDiagram {
        crossings: raw,
        over_in: t.over_in,
    })
}

impl PlanarDiagram {
    /// The crossingless unknot.
    pub fn unknot() -> Self {
        Self {
            crossings: Vec::new(),
            over_in: Vec::new(),
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Sign of crossing `i`: +1 when the over-strand enters at slot `d`.
    pub fn sign(&self, i: usize) -> i8 {
        if self.over_in[i] == 3 {
            1
        } else {
            -1
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.crossings.len()).map(|i| self.sign(i)).collect()
    }

    pub fn writhe(&self) -> i64 {
        self.signs().iter().map(|&s| s as i64).sum()
    }

    /// Arc labels in ascending order.
    pub fn arcs(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.crossings.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn max_arc(&self) -> u32 {
        self.crossings.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Crossing and slot where `arc` ends, following the orientation.
    fn head(&self, arc: u32) -> Result<(usize, usize)> {
        self.crossings
            .iter()
            .enumerate()
            .find_map(|(i, x)| {
                [0, self.over_in[i] as usize]
                    .into_iter()
                    .find(|&s| x[s] == arc)
                    .map(|s| (i, s))
            })
            .ok_or(Error::UnknownArc(arc))
    }

    /// Crossings relabelled onto `0..2c` in first-seen order.
    pub(crate) fn dense(&self) -> (Vec<[usize; 4]>, usize) {
        let mut ids: HashMap<u32, usize> = HashMap::new();
        let dense = self
            .crossings
            .iter()
            .map(|x| {
                x.map(|a| {
                    let next = ids.len();
                    *ids.entry(a).or_insert(next)
                })
            })
            .collect();
        (dense, ids.len())
    }

    /// Swaps over and under at every crossing.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.over_in)
            .map(|(&[a, b, c, d], &o)| if o == 3 { [d, a, b, c] } else { [b, c, d, a] })
            .collect();
        let over_in = self.over_in.iter().map(|&o| 4 - o).collect();
        Self { crossings, over_in }
    }

    /// Inserts a Reidemeister-I curl of the given sign on `arc`.
    pub fn add_kink(&self, arc: u32, sign: i8) -> Result<Self> {
        let (i, s) = self.head(arc)?;
        let z = self.max_arc() + 1;
        let w = z + 1;
        let mut crossings = self.crossings.clone();
        crossings[i][s] = w;
        crossings.push(if sign >= 0 { [arc, w, z, z] } else { [arc, z, z, w] });
        validate_pd(crossings)
    }

    /// Connected sum, cutting `arc1` of `self` and `arc2` of `other`.
    ///
    /// Arcs of `other` are relabelled above those of `self`; the result
    /// carries the orientations of both summands.
    pub fn connect_sum(&self, arc1: u32, other: &Self, arc2: u32) -> Result<Self> {
        if self.crossings.is_empty() {
            return Ok(other.clone());
        }
        if other.crossings.is_empty() {
            return Ok(self.clone());
        }
        let (i1, s1) = self.head(arc1)?;
        let (i2, s2) = other.head(arc2)?;
        let off = self.max_arc();
        let mut crossings = self.crossings.clone();
        let base = crossings.len();
        crossings.extend(other.crossings.iter().map(|x| x.map(|a| a + off)));
        crossings[i1][s1] = arc2 + off;
        crossings[base + i2][s2] = arc1;
        validate_pd(crossings).map_err(|_| Error::OrientationMismatch)
    }

    /// Same diagram with crossings listed in a different order.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        validate_pd(order.iter().map(|&i| self.crossings[i]).collect())
    }
}

/// Connected sum of two diagrams; see [`PlanarDiagram::connect_sum`].
pub fn connect_sum_diagram(
    d1: &PlanarDiagram,
    arc1: u32,
    d2: &PlanarDiagram,
    arc2: u32,
) -> Result<PlanarDiagram> {
    d1.connect_sum(arc1, d2, arc2)
}

impl TryFrom<Vec<Crossing>> for PlanarDiagram {
    type Error = Error;

    fn try_from(raw: Vec<Crossing>) -> Result<Self> {
        validate_pd(raw)
    }
}

impl From<PlanarDiagram> for Vec<Crossing> {
    fn from(d: PlanarDiagram) -> Self {
        d.crossings
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("PD[")?;
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "X[{a},{b},{c},{d}]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses PD text without validating it.
///
/// Accepts `X[a,b,c,d]` tokens separated by whitespace or commas,
/// optionally wrapped in `PD[...]`, as well as the bare nested-list form
/// `[[a,b,c,d],...]`.
pub fn parse_pd(s: &str) -> Result<Vec<Crossing>> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut body = text.as_str();
    if let Some(inner) = body.strip_prefix("PD[") {
        body = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse("unterminated PD[".into()))?;
    } else if body.starts_with("[[") {
        body = &body[1..body.len() - 1];
        if !text.ends_with("]]") {
            return Err(Error::Parse("unterminated crossing list".into()));
        }
    }

    let mut out = Vec::new();
    let mut rest = body;
    loop {
        rest = rest.trim_start_matches(',');
        if rest.is_empty() {
            break;
        }
        rest = rest.strip_prefix('X').unwrap_or(rest);
        let inner = rest
            .strip_prefix('[')
            .ok_or_else(|| Error::Parse(format!("expected '[' at {rest:?}")))?;
        let close = inner
            .find(']')
            .ok_or_else(|| Error::Parse("unterminated crossing".into()))?;
        let labels = inner[..close]
            .split(',')
            .map(|t| match t.parse::<u32>() {
                Ok(0) | Err(_) => Err(Error::Parse(format!("bad arc label {t:?}"))),
                Ok(v) => Ok(v),
            })
            .collect::<Result<Vec<u32>>>()?;
        let x: Crossing = labels
            .try_into()
            .map_err(|v: Vec<u32>| Error::Parse(format!("crossing has {} arcs", v.len())))?;
        out.push(x);
        rest = &inner[close + 1..];
    }
    Ok(out)
}

impl FromStr for PlanarDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        validate_pd(parse_pd(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    fn pd(s: &str) -> PlanarDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn trefoil_is_valid() {
        let d = pd(TREFOIL);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.signs(), vec![-1, -1, -1]);
    }

    #[test]
    fn parse_variants_agree() {
        let a = pd(TREFOIL);
        assert_eq!(pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]"), a);
        assert_eq!(pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"), a);
        assert_eq!(pd("X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]"), a);
        assert_eq!(pd(&a.to_string()), a);
        assert_eq!(pd(""), PlanarDiagram::unknot());
        assert_eq!(pd("PD[]"), PlanarDiagram::unknot());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_pd("X[1,2,3]"), Err(Error::Parse(_))));
        assert!(matches!(parse_pd("X[0,1,1,0]"), Err(Error::Parse(_))));
        assert!(matches!(parse_pd("X[1,2,a,4]"), Err(Error::Parse(_))));
        assert!(matches!(parse_pd("X[1,2,2,1"), Err(Error::Parse(_))));
        assert!(matches!(parse_pd("Y[1,2,2,1]"), Err(Error::Parse(_))));
    }

    #[test]
    fn rejects_triple_arc() {
        let err = validate_pd(vec![[1, 1, 2, 2], [1, 3, 3, 2]]).unwrap_err();
        assert_eq!(err, Error::ArcMultiplicity { arc: 1, count: 3 });
    }

    #[test]
    fn rejects_two_component_link() {
        // Hopf link.
        let err = validate_pd(vec![[1, 3, 2, 4], [2, 4, 1, 3]]).unwrap_err();
        assert_eq!(err, Error::MultipleComponents(2));
    }

    #[test]
    fn rejects_inconsistent_orientation() {
        // Second crossing is entered through its outgoing under-slot.
        let err = validate_pd(vec![[1, 4, 2, 5], [4, 1, 3, 6], [5, 2, 6, 3]]).unwrap_err();
        assert!(matches!(err, Error::InconsistentOrientation(_)), "{err:?}");
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(PlanarDiagram::unknot().writhe(), 0);
        let d = pd(TREFOIL);
        for arc in d.arcs() {
            assert_eq!(d.add_kink(arc, 1).unwrap().writhe(), d.writhe() + 1);
            assert_eq!(d.add_kink(arc, -1).unwrap().writhe(), d.writhe() - 1);
        }
        assert_eq!(d.mirror().writhe(), 3);
    }

    #[test]
    fn kink_signs() {
        assert_eq!(pd("X[1,1,2,2]").signs(), vec![1]);
        assert_eq!(pd("X[1,2,2,1]").signs(), vec![-1]);
    }

    #[test]
    fn mirror_is_involution() {
        let d = pd(TREFOIL).add_kink(2, 1).unwrap();
        assert_eq!(d.mirror().mirror(), d);
        assert_eq!(PlanarDiagram::unknot().mirror(), PlanarDiagram::unknot());
        validate_pd(d.mirror().crossings().to_vec()).unwrap();
    }

    #[test]
    fn unknown_arc() {
        let d = pd(TREFOIL);
        assert_eq!(d.add_kink(9, 1).unwrap_err(), Error::UnknownArc(9));
        assert_eq!(d.connect_sum(9, &d, 1).unwrap_err(), Error::UnknownArc(9));
    }

    #[test]
    fn connect_sum_is_a_knot() {
        let d = pd(TREFOIL);
        let s = d.connect_sum(1, &d.mirror(), 4).unwrap();
        assert_eq!(s.crossing_count(), 6);
        assert_eq!(s.writhe(), 0);
        assert_eq!(d.connect_sum(3, &PlanarDiagram::unknot(), 1).unwrap(), d);
        assert_eq!(PlanarDiagram::unknot().connect_sum(1, &d, 3).unwrap(), d);
    }
}
