//! Knot diagrams assembled from a bottom-to-top sequence of cups, caps and
//! crossings between neighbouring strands, then compiled to PD form.

use super::{validate_pd, Crossing, PlanarDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossKind {
    /// The strand coming up from the lower left passes over.
    LeftOver,
    RightOver,
    /// Over-strand chosen after orientation so the crossing has this sign.
    Sign(i8),
}

/// Positions are counted from the left among the strands currently open.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorseEvent {
    /// New strands at `i` and `i + 1`, joined below.
    Cup(usize),
    /// Strands `i` and `i + 1` joined above and closed off.
    Cap(usize),
    /// Strands `i` and `i + 1` swap places.
    Cross(usize, CrossKind),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorseDiagram {
    events: Vec<MorseEvent>,
}

// Crossing corners.
const BL: usize = 0;
const BR: usize = 1;
const TL: usize = 2;
const TR: usize = 3;
const POS: [(i64, i64); 4] = [(-1, -1), (1, -1), (-1, 1), (1, 1)];
const CCW: [usize; 4] = [BR, TR, TL, BL];

#[derive(Clone, Copy, Debug)]
enum End {
    Turn(usize),
    Corner(usize, usize),
}

#[derive(Clone, Copy, Debug)]
struct Segment {
    bottom: End,
    top: End,
}

struct Site {
    // Segment attached at each corner.
    segs: [usize; 4],
    kind: CrossKind,
}

fn opposite(corner: usize) -> usize {
    3 - corner
}

impl MorseDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn events(&self) -> &[MorseEvent] {
        &self.events
    }

    pub fn push(&mut self, e: MorseEvent) -> &mut Self {
        self.events.push(e);
        self
    }

    pub fn cup(&mut self, i: usize) -> &mut Self {
        self.push(MorseEvent::Cup(i))
    }

    pub fn cap(&mut self, i: usize) -> &mut Self {
        self.push(MorseEvent::Cap(i))
    }

    pub fn cross(&mut self, i: usize, kind: CrossKind) -> &mut Self {
        self.push(MorseEvent::Cross(i, kind))
    }

    /// Compiles to a validated PD diagram.
    ///
    /// Crossing `k` of the result is the `k`-th crossing event. Arcs are
    /// numbered consecutively along the knot, starting after the first
    /// crossing, which is entered from its lower left corner.
    pub fn compile(&self) -> Result<PlanarDiagram> {
        let placeholder = End::Turn(usize::MAX);
        let mut segs: Vec<Segment> = Vec::new();
        let mut sites: Vec<Site> = Vec::new();
        let mut open: Vec<usize> = Vec::new();
        let new_seg = |segs: &mut Vec<Segment>, bottom: End| {
            segs.push(Segment {
                bottom,
                top: placeholder,
            });
            segs.len() - 1
        };

        for (step, &ev) in self.events.iter().enumerate() {
            let bad = |what: &str| Error::Morse(format!("event {step}: {what}"));
            match ev {
                MorseEvent::Cup(i) => {
                    if i > open.len() {
                        return Err(bad("cup position out of range"));
                    }
                    let s = segs.len();
                    new_seg(&mut segs, End::Turn(s + 1));
                    new_seg(&mut segs, End::Turn(s));
                    open.splice(i..i, [s, s + 1]);
                }
                MorseEvent::Cap(i) => {
                    if i + 1 >= open.len() {
                        return Err(bad("cap position out of range"));
                    }
                    let (l, r) = (open[i], open[i + 1]);
                    segs[l].top = End::Turn(r);
                    segs[r].top = End::Turn(l);
                    open.drain(i..i + 2);
                }
                MorseEvent::Cross(i, kind) => {
                    if i + 1 >= open.len() {
                        return Err(bad("crossing position out of range"));
                    }
                    if matches!(kind, CrossKind::Sign(s) if s != 1 && s != -1) {
                        return Err(bad("crossing sign must be +1 or -1"));
                    }
                    let k = sites.len();
                    let (l, r) = (open[i], open[i + 1]);
                    segs[l].top = End::Corner(k, BL);
                    segs[r].top = End::Corner(k, BR);
                    let nl = new_seg(&mut segs, End::Corner(k, TL));
                    let nr = new_seg(&mut segs, End::Corner(k, TR));
                    open[i] = nl;
                    open[i + 1] = nr;
                    sites.push(Site {
                        segs: [l, r, nl, nr],
                        kind,
                    });
                }
            }
        }
        if !open.is_empty() {
            return Err(Error::Morse(format!("{} strands left open", open.len())));
        }

        // Walk the knot. `entered[k][line]` is the corner through which the
        // walk enters crossing k along line 0 (BL-TR) or line 1 (BR-TL).
        let mut arc_of = vec![0u32; segs.len()];
        let mut entered = vec![[usize::MAX; 2]; sites.len()];
        let mut next_label = 0u32;
        let mut components = 0;
        let follow = |k: usize, exit: usize, label: u32, arc_of: &mut Vec<u32>| {
            let mut seg = sites[k].segs[exit];
            let mut up = exit >= TL;
            loop {
                arc_of[seg] = label;
                let end = if up { segs[seg].top } else { segs[seg].bottom };
                match end {
                    End::Turn(other) => {
                        seg = other;
                        up = !up;
                    }
                    End::Corner(k2, c2) => return (k2, c2),
                }
            }
        };
        for k0 in 0..sites.len() {
            for start_corner in [BL, BR] {
                if entered[k0][start_corner] != usize::MAX {
                    continue;
                }
                components += 1;
                let (mut k, mut c) = (k0, start_corner);
                loop {
                    let line = if c == BL || c == TR { 0 } else { 1 };
                    entered[k][line] = c;
                    next_label += 1;
                    (k, c) = follow(k, opposite(c), next_label, &mut arc_of);
                    if (k, c) == (k0, start_corner) {
                        break;
                    }
                }
            }
        }
        // Closed loops that never meet a crossing.
        let mut seen: Vec<bool> = arc_of.iter().map(|&a| a != 0).collect();
        for s in 0..segs.len() {
            if seen[s] {
                continue;
            }
            components += 1;
            let mut cur = s;
            let mut up = true;
            while !seen[cur] {
                seen[cur] = true;
                let End::Turn(other) = (if up { segs[cur].top } else { segs[cur].bottom }) else {
                    unreachable!("crossingless loop meets only turns")
                };
                cur = other;
                up = !up;
            }
        }
        if components > 1 {
            return Err(Error::MultipleComponents(components));
        }
        if sites.is_empty() {
            return Ok(PlanarDiagram::unknot());
        }

        let pd: Vec<Crossing> = sites
            .iter()
            .zip(&entered)
            .map(|(site, &[in0, in1])| {
                let dir = |c: usize| {
                    let (a, b) = (POS[c], POS[opposite(c)]);
                    (b.0 - a.0, b.1 - a.1)
                };
                let sign_if_over0 = {
                    let (o, u) = (dir(in0), dir(in1));
                    (o.0 * u.1 - o.1 * u.0).signum() as i8
                };
                let over0 = match site.kind {
                    CrossKind::LeftOver => true,
                    CrossKind::RightOver => false,
                    CrossKind::Sign(s) => s == sign_if_over0,
                };
                let under_in = if over0 { in1 } else { in0 };
                let start = CCW.iter().position(|&c| c == under_in).unwrap();
                std::array::from_fn(|j| arc_of[site.segs[CCW[(start + j) % 4]]])
            })
            .collect();
        validate_pd(pd)
    }
}
