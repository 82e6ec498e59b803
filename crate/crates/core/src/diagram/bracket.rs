//! Kauffman bracket in the variable `A`.
//!
//! [`state_sum`] enumerates all `2^c` states and is the reference
//! definition. [`kauffman_bracket`] sweeps the crossings once, keeping for
//! each partial state only how the open arc ends are paired up; it agrees
//! with the state sum and handles the λ diagrams in milliseconds.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::dsu::DisjointSets;
use super::PlanarDiagram;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

pub const DEFAULT_CROSSING_CAP: usize = 32;

/// Environment variable read by the command-line front end to raise the cap.
pub const CROSSING_CAP_ENV: &str = "KNOTLAB_CROSSING_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BracketOptions {
    pub crossing_cap: usize,
}

impl Default for BracketOptions {
    fn default() -> Self {
        Self {
            crossing_cap: DEFAULT_CROSSING_CAP,
        }
    }
}

impl BracketOptions {
    fn check(&self, d: &PlanarDiagram) -> Result<()> {
        if d.crossing_count() > self.crossing_cap {
            return Err(Error::CrossingCap {
                count: d.crossing_count(),
                cap: self.crossing_cap,
            });
        }
        Ok(())
    }
}

/// `A` joins `(a,b)` and `(c,d)`; `B` joins `(a,d)` and `(b,c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Smoothing {
    A,
    B,
}

impl Smoothing {
    fn pairs(self, [a, b, c, d]: [usize; 4]) -> [(usize, usize); 2] {
        match self {
            Smoothing::A => [(a, b), (c, d)],
            Smoothing::B => [(a, d), (b, c)],
        }
    }
}

/// One fully smoothed state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketState {
    pub choices: Vec<Smoothing>,
    pub loop_count: usize,
}

impl BracketState {
    pub fn resolve(d: &PlanarDiagram, choices: Vec<Smoothing>) -> Self {
        assert_eq!(choices.len(), d.crossing_count(), "one smoothing per crossing");
        let (dense, arcs) = d.dense();
        let mut dsu = DisjointSets::new(arcs.max(1));
        for (x, s) in dense.iter().zip(&choices) {
            for (u, v) in s.pairs(*x) {
                dsu.union(u, v);
            }
        }
        Self {
            choices,
            loop_count: dsu.count(),
        }
    }

    /// `A^(a-b) δ^(loops-1)`.
    pub fn weight(&self) -> LaurentPoly {
        let a = self.choices.iter().filter(|&&s| s == Smoothing::A).count() as i64;
        let b = self.choices.len() as i64 - a;
        delta().pow(self.loop_count as u32 - 1).shift(a - b)
    }
}

/// `δ = -A^2 - A^-2`, the value of an extra circle.
pub fn delta() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// Bracket by enumerating every state.
pub fn state_sum(d: &PlanarDiagram, opts: &BracketOptions) -> Result<LaurentPoly> {
    opts.check(d)?;
    let c = d.crossing_count();
    if c == 0 {
        return Ok(LaurentPoly::one());
    }
    let (dense, arcs) = d.dense();
    let width = c + 2;
    // counts[a * width + loops] = number of states with `a` A-smoothings.
    let counts = (0..1u64 << c)
        .into_par_iter()
        .fold(
            || (vec![0u64; (c + 1) * width], DisjointSets::new(arcs)),
            |(mut counts, mut dsu), mask| {
                dsu.reset();
                for (i, x) in dense.iter().enumerate() {
                    let s = if mask >> i & 1 == 0 {
                        Smoothing::A
                    } else {
                        Smoothing::B
                    };
                    for (u, v) in s.pairs(*x) {
                        dsu.union(u, v);
                    }
                }
                let a = c - mask.count_ones() as usize;
                counts[a * width + dsu.count()] += 1;
                (counts, dsu)
            },
        )
        .map(|(counts, _)| counts)
        .reduce(
            || vec![0u64; (c + 1) * width],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(p, q)| *p += q);
                x
            },
        );

    let d_pows: Vec<LaurentPoly> = std::iter::successors(Some(LaurentPoly::one()), |p| Some(p * &delta()))
        .take(width)
        .collect();
    let mut total = LaurentPoly::zero();
    for a in 0..=c {
        for loops in 1..width {
            let n = counts[a * width + loops];
            if n > 0 {
                let exp = 2 * a as i64 - c as i64;
                total += &d_pows[loops - 1].shift(exp).scale(&n.into());
            }
        }
    }
    Ok(total)
}

/// Bracket with the default crossing cap.
pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPoly> {
    kauffman_bracket_with(d, &BracketOptions::default())
}

/// Processing order that keeps few arcs open at once.
fn sweep_order(dense: &[[usize; 4]], arcs: usize) -> Vec<usize> {
    let mut touched = vec![0u8; arcs];
    let mut done = vec![false; dense.len()];
    let mut order = Vec::with_capacity(dense.len());
    for _ in 0..dense.len() {
        let next = (0..dense.len())
            .filter(|&i| !done[i])
            .max_by_key(|&i| {
                let shared = dense[i].iter().filter(|&&a| touched[a] == 1).count();
                (shared, std::cmp::Reverse(i))
            })
            .expect("unprocessed crossing");
        done[next] = true;
        for &a in &dense[next] {
            touched[a] += 1;
        }
        order.push(next);
    }
    order
}

type Matching = Vec<(usize, usize)>;

fn take_partner(m: &mut Matching, x: usize) -> Option<usize> {
    let pos = m.iter().position(|&(u, v)| u == x || v == x)?;
    let (u, v) = m.swap_remove(pos);
    Some(if u == x { v } else { u })
}

/// Adds the two strands of a smoothing to a partial state. Returns the
/// new pairing of open arc ends and the number of circles closed.
fn join(state: &Matching, pairs: [(usize, usize); 2]) -> (Matching, u32) {
    let mut m = state.clone();
    let mut loops = 0;
    for (x, y) in pairs {
        if x == y {
            loops += 1;
            continue;
        }
        let fx = match take_partner(&mut m, x) {
            Some(p) if p == y => {
                loops += 1;
                continue;
            }
            Some(p) => p,
            None => x,
        };
        let fy = take_partner(&mut m, y).unwrap_or(y);
        m.push((fx.min(fy), fx.max(fy)));
    }
    m.sort_unstable();
    (m, loops)
}

/// Bracket by a single sweep over the crossings.
pub fn kauffman_bracket_with(d: &PlanarDiagram, opts: &BracketOptions) -> Result<LaurentPoly> {
    opts.check(d)?;
    if d.crossing_count() == 0 {
        return Ok(LaurentPoly::one());
    }
    let (dense, arcs) = d.dense();
    let delta = delta();

    let mut states: HashMap<Matching, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());
    for i in sweep_order(&dense, arcs) {
        let mut next: HashMap<Matching, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (m, poly) in &states {
            for (s, exp) in [(Smoothing::A, 1), (Smoothing::B, -1)] {
                let (m2, loops) = join(m, s.pairs(dense[i]));
                let mut p = poly.shift(exp);
                for _ in 0..loops {
                    p = &p * &delta;
                }
                let slot = next.entry(m2).or_default();
                *slot += &p;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }

    // Every arc is closed now; the sum counts one circle too many.
    let closed = states.remove(&Vec::new()).unwrap_or_default();
    debug_assert!(states.is_empty());
    Ok(closed.div_exact(&delta).expect("bracket sum divisible by delta"))
}
