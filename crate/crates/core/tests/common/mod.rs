#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use knotlab::diagram::{CrossKind, MorseDiagram};
use knotlab::{LaurentPoly, PlanarDiagram};
use num_traits::ToPrimitive;
use proptest::prelude::*;

pub type Poly = BTreeMap<i64, i128>;

pub fn to_map(p: &LaurentPoly) -> Poly {
    p.terms().map(|(e, c)| (e, c.to_i128().unwrap())).collect()
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_add(a: &mut Poly, b: &Poly) {
    for (e, c) in b {
        *a.entry(*e).or_default() += c;
    }
    a.retain(|_, c| *c != 0);
}

/// Bracket by walking every state's circles explicitly. Shares nothing with
/// the library: no union-find, no caching between states.
pub fn naive_bracket(d: &PlanarDiagram) -> Poly {
    let xs = d.crossings();
    if xs.is_empty() {
        return Poly::from([(0, 1)]);
    }
    let delta: Poly = Poly::from([(2, -1), (-2, -1)]);
    let mut total = Poly::new();
    for mask in 0u32..1 << xs.len() {
        // Each arc label is a node; each smoothing strand an edge.
        let mut adj: HashMap<u32, Vec<u32>> = HashMap::new();
        let mut a_count = 0i64;
        for (i, &[a, b, c, dd]) in xs.iter().enumerate() {
            let pairs = if mask >> i & 1 == 0 {
                a_count += 1;
                [(a, b), (c, dd)]
            } else {
                [(a, dd), (b, c)]
            };
            for (u, v) in pairs {
                adj.entry(u).or_default().push(v);
                adj.entry(v).or_default().push(u);
            }
        }
        let mut seen: Vec<u32> = Vec::new();
        let mut circles = 0u32;
        let mut nodes: Vec<u32> = adj.keys().copied().collect();
        nodes.sort_unstable();
        for start in nodes {
            if seen.contains(&start) {
                continue;
            }
            circles += 1;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                if seen.contains(&x) {
                    continue;
                }
                seen.push(x);
                stack.extend(adj[&x].iter().copied());
            }
        }
        let b_count = xs.len() as i64 - a_count;
        let mut term = Poly::from([(a_count - b_count, 1)]);
        for _ in 1..circles {
            term = poly_mul(&term, &delta);
        }
        poly_add(&mut total, &term);
    }
    total
}

/// Jones polynomial in `t` from the naive bracket.
pub fn naive_jones_t(d: &PlanarDiagram) -> Poly {
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    naive_bracket(d)
        .into_iter()
        .map(|(e, c)| {
            let e = e - 3 * w;
            assert_eq!(e % 4, 0, "knot bracket exponents are 0 mod 4 after correction");
            (-e / 4, sign * c)
        })
        .collect()
}

// Dense polynomials in t with nonnegative exponents.
type Dense = Vec<i128>;

fn d_trim(mut a: Dense) -> Dense {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn d_mul(a: &Dense, b: &Dense) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    d_trim(out)
}

fn d_add(a: &Dense, b: &Dense) -> Dense {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    d_trim(out)
}

fn d_sub(a: &Dense, b: &Dense) -> Dense {
    d_add(a, &b.iter().map(|c| -c).collect())
}

fn d_div(a: &Dense, b: &Dense) -> Dense {
    let mut rem = a.clone();
    if rem.is_empty() {
        return rem;
    }
    assert!(rem.len() >= b.len(), "inexact division");
    let mut q = vec![0; rem.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let top = rem[i + b.len() - 1];
        assert_eq!(top % b[b.len() - 1], 0, "inexact division");
        let c = top / b[b.len() - 1];
        for (j, y) in b.iter().enumerate() {
            rem[i + j] -= c * y;
        }
        q[i] = c;
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact division");
    d_trim(q)
}

fn d_det(mut m: Vec<Vec<Dense>>) -> Dense {
    let n = m.len();
    if n == 0 {
        return vec![1];
    }
    let mut prev: Dense = vec![1];
    let mut sign = 1;
    for k in 0..n - 1 {
        if m[k][k].is_empty() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_empty()) else {
                return Vec::new();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = d_sub(&d_mul(&m[i][j], &m[k][k]), &d_mul(&m[i][k], &m[k][j]));
                m[i][j] = d_div(&v, &prev);
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    det.into_iter().map(|c| sign * c).collect()
}

/// Alexander polynomial from the Wirtinger presentation of a PD diagram,
/// normalized to lowest exponent 0 with a positive lowest coefficient.
pub fn pd_alexander(d: &PlanarDiagram) -> Vec<i128> {
    let xs = d.crossings();
    if xs.is_empty() {
        return vec![1];
    }
    // Classical arcs: edges joined through over-passes.
    let mut parent: HashMap<u32, u32> = HashMap::new();
    fn root(p: &mut HashMap<u32, u32>, x: u32) -> u32 {
        let mut r = x;
        while let Some(&q) = p.get(&r) {
            if q == r {
                break;
            }
            r = q;
        }
        p.insert(x, r);
        r
    }
    for x in xs {
        for a in x {
            parent.entry(*a).or_insert(*a);
        }
    }
    for &[_, b, _, dd] in xs {
        let (rb, rd) = (root(&mut parent, b), root(&mut parent, dd));
        if rb != rd {
            parent.insert(rb, rd);
        }
    }
    let mut ids: HashMap<u32, usize> = HashMap::new();
    let edges: Vec<u32> = parent.keys().copied().collect();
    for e in edges {
        let r = root(&mut parent, e);
        let next = ids.len();
        ids.entry(r).or_insert(next);
    }
    let n = ids.len();
    assert_eq!(n, xs.len(), "a knot diagram has as many arcs as crossings");
    let mut m: Vec<Vec<Dense>> = vec![vec![Vec::new(); n]; n];
    for (row, (&[a, b, c, _], sign)) in xs.iter().zip(d.signs()).enumerate() {
        let k = ids[&root(&mut parent, b)];
        let i = ids[&root(&mut parent, a)];
        let j = ids[&root(&mut parent, c)];
        // Positive: (1-t) x_k + t x_i - x_j. Negative, times t: (t-1) x_k + x_i - t x_j.
        let (ck, ci, cj): (Dense, Dense, Dense) = if sign > 0 {
            (vec![1, -1], vec![0, 1], vec![-1])
        } else {
            (vec![-1, 1], vec![1], vec![0, -1])
        };
        for (col, v) in [(k, ck), (i, ci), (j, cj)] {
            m[row][col] = d_add(&m[row][col], &v);
        }
    }
    let minor: Vec<Vec<Dense>> = m[..n - 1].iter().map(|r| r[..n - 1].to_vec()).collect();
    let det = d_det(minor);
    let lo = det
        .iter()
        .position(|&c| c != 0)
        .expect("Alexander polynomial is nonzero");
    let mut out = det[lo..].to_vec();
    if out[0] < 0 {
        out.iter_mut().for_each(|c| *c = -*c);
    }
    out
}

pub fn dense_of(p: &LaurentPoly) -> Vec<i128> {
    let lo = p.min_exp().unwrap();
    let hi = p.max_exp().unwrap();
    (lo..=hi).map(|e| p.coeff(e).to_i128().unwrap()).collect()
}

/// Braid closure with nested cups; `None` when the closure is a link.
pub fn braid_closure(strands: usize, word: &[(usize, bool)]) -> Option<PlanarDiagram> {
    let mut m = MorseDiagram::new();
    for i in 0..strands {
        m.cup(i);
    }
    for &(i, left) in word {
        let kind = if left {
            CrossKind::LeftOver
        } else {
            CrossKind::RightOver
        };
        m.cross(i % (strands - 1), kind);
    }
    for i in (0..strands).rev() {
        m.cap(i);
    }
    m.compile().ok()
}

/// Knot diagrams with up to `max` crossings from braid closures.
pub fn small_knot(max: usize) -> impl Strategy<Value = PlanarDiagram> {
    (
        2usize..=4,
        prop::collection::vec((0usize..3, any::<bool>()), 0..=max),
    )
        .prop_filter_map("closure is a link", |(s, w)| braid_closure(s, &w))
}

pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
pub const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
pub const CINQUEFOIL: &str = "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]";
