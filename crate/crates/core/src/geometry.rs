//! Intersection predicates, intersection graphs and exact piercing depth.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{BoxFamily, BoxNd};
use crate::graph::{popcount, words_for, IntersectionGraph, WORD};
use crate::par::{map_range, Mode};

pub fn boxes_intersect(a: &BoxNd, b: &BoxNd) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::IncomparableBoxes {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(a.meets(b))
}

pub fn intersection_graph(f: &BoxFamily) -> IntersectionGraph {
    intersection_graph_with(f, Mode::default())
}

/// Pairwise scan, one row per task.
pub fn intersection_graph_with(f: &BoxFamily, mode: Mode) -> IntersectionGraph {
    let n = f.len();
    let boxes = f.boxes();
    let rows = map_range(mode, n, |u| {
        let mut row = vec![0u64; words_for(n)];
        for (v, other) in boxes.iter().enumerate() {
            if v != u && boxes[u].meets(other) {
                row[v / WORD] |= 1 << (v % WORD);
            }
        }
        row
    });
    IntersectionGraph::from_rows(n, rows)
}

/// A point together with every box of the family that contains it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DepthCertificate {
    pub point: Vec<i64>,
    pub members: Vec<usize>,
}

impl DepthCertificate {
    pub fn depth(&self) -> usize {
        self.members.len()
    }

    /// Re-checks the certificate against `f`: members are distinct, in
    /// range and all contain the point.
    pub fn verify(&self, f: &BoxFamily) -> bool {
        self.point.len() == f.dim()
            && self.members.windows(2).all(|w| w[0] < w[1])
            && self
                .members
                .iter()
                .all(|&i| i < f.len() && f.get(i).contains_point(&self.point))
    }
}

struct Axis {
    /// Distinct lower endpoints in increasing order.
    values: Vec<i64>,
    /// For each value, the boxes whose interval on this axis contains it.
    masks: Vec<Vec<u64>>,
    /// Values not dominated by the next one (see `depth_with`).
    maximal: Vec<usize>,
}

fn axis_table(f: &BoxFamily, axis: usize) -> Axis {
    let n = f.len();
    let mut values: Vec<i64> = f.boxes().iter().map(|b| b.axis(axis).lo()).collect();
    values.sort_unstable();
    values.dedup();
    let masks: Vec<Vec<u64>> = values
        .iter()
        .map(|&c| {
            let mut m = vec![0u64; words_for(n)];
            for (i, b) in f.boxes().iter().enumerate() {
                if b.axis(axis).contains(c) {
                    m[i / WORD] |= 1 << (i % WORD);
                }
            }
            m
        })
        .collect();
    let maximal = (0..values.len())
        .filter(|&j| {
            j + 1 == values.len()
                || f.boxes().iter().any(|b| {
                    let iv = b.axis(axis);
                    iv.contains(values[j]) && iv.hi() < values[j + 1]
                })
        })
        .collect();
    Axis {
        values,
        masks,
        maximal,
    }
}

fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

/// Largest stab count reachable below `current`, exploring only maximal
/// candidates and pruning subtrees that cannot beat `best`.
fn best_count(axes: &[Axis], axis: usize, current: &[u64], best: &mut usize) {
    if axis == axes.len() {
        *best = (*best).max(popcount(current));
        return;
    }
    let table = &axes[axis];
    for &j in &table.maximal {
        let next = and(current, &table.masks[j]);
        if popcount(&next) > *best {
            best_count(axes, axis + 1, &next, best);
        }
    }
}

/// Lexicographically first candidate point with at least `target` boxes.
fn first_point(
    axes: &[Axis],
    axis: usize,
    current: &[u64],
    target: usize,
    point: &mut Vec<i64>,
) -> Option<Vec<u64>> {
    if axis == axes.len() {
        return Some(current.to_vec());
    }
    let table = &axes[axis];
    for (j, mask) in table.masks.iter().enumerate() {
        let next = and(current, mask);
        if popcount(&next) >= target {
            point.push(table.values[j]);
            if let Some(found) = first_point(axes, axis + 1, &next, target, point) {
                return Some(found);
            }
            point.pop();
        }
    }
    None
}

/// Maximum number of boxes sharing a point, with a certificate.
pub fn depth(f: &BoxFamily) -> Result<(usize, DepthCertificate)> {
    depth_with(f, Mode::default())
}

/// Exact depth by coordinate compression.
///
/// On each axis the count attains its maximum at a lower endpoint, so the
/// candidate grid is the product of per-axis lower endpoints. A candidate
/// `c` whose containing set is a subset of the next candidate's (no box
/// containing `c` ends before the next lower endpoint) can be dropped when
/// computing the maximum; a second pass over the full grid then recovers
/// the lexicographically smallest maximizing point. The first pass is split
/// across the first axis's candidates.
pub fn depth_with(f: &BoxFamily, mode: Mode) -> Result<(usize, DepthCertificate)> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let n = f.len();
    let axes: Vec<Axis> = (0..f.dim()).map(|a| axis_table(f, a)).collect();
    let mut all = vec![0u64; words_for(n)];
    for i in 0..n {
        all[i / WORD] |= 1 << (i % WORD);
    }

    let first = &axes[0];
    let best = if mode.is_parallel() {
        map_range(mode, first.maximal.len(), |t| {
            let next = and(&all, &first.masks[first.maximal[t]]);
            let mut local = 0;
            best_count(&axes[1..], 0, &next, &mut local);
            local
        })
        .into_iter()
        .max()
        .unwrap_or(0)
    } else {
        let mut best = 0;
        best_count(&axes, 0, &all, &mut best);
        best
    };

    let mut point = Vec::with_capacity(f.dim());
    let members = first_point(&axes, 0, &all, best, &mut point)
        .expect("the maximum is attained on the candidate grid");
    let members: Vec<usize> = crate::graph::ones(&members).collect();
    debug_assert_eq!(members.len(), best);
    Ok((best, DepthCertificate { point, members }))
}

/// Reference depth: scans the full product of all endpoint values in
/// lexicographic order and counts boxes directly. Exponential in the
/// dimension; meant for cross-checking [`depth`].
pub fn depth_naive(f: &BoxFamily) -> Result<(usize, DepthCertificate)> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let grids: Vec<Vec<i64>> = (0..f.dim()).map(|a| f.axis_values(a)).collect();
    let mut idx = vec![0usize; f.dim()];
    let mut best: Option<DepthCertificate> = None;
    loop {
        let point: Vec<i64> = idx.iter().zip(&grids).map(|(&i, g)| g[i]).collect();
        let members: Vec<usize> = (0..f.len())
            .filter(|&i| f.get(i).contains_point(&point))
            .collect();
        if best.as_ref().is_none_or(|b| members.len() > b.members.len()) {
            best = Some(DepthCertificate { point, members });
        }
        // Odometer, last axis fastest.
        let mut axis = f.dim();
        loop {
            if axis == 0 {
                let cert = best.expect("grid is nonempty");
                return Ok((cert.members.len(), cert));
            }
            axis -= 1;
            idx[axis] += 1;
            if idx[axis] < grids[axis].len() {
                break;
            }
            idx[axis] = 0;
        }
    }
}

/// Clique number of the intersection graph. Pairwise intersecting boxes
/// share a point (on every axis the intervals pairwise meet), so this is
/// the depth.
pub fn max_clique_boxes(f: &BoxFamily) -> Result<usize> {
    depth(f).map(|(d, _)| d)
}

/// Largest `m` accepted by [`find_induced_k2m`].
pub const K2M_MAX_VERTICES: usize = 12;

/// Searches for `m` disjoint non-adjacent pairs such that every two
/// vertices from different pairs are adjacent, i.e. an induced complete
/// `m`-partite graph with classes of size two. Exhaustive.
pub fn find_induced_k2m(g: &IntersectionGraph, m: usize) -> Result<Option<Vec<(usize, usize)>>> {
    if m == 0 || 2 * m > K2M_MAX_VERTICES {
        return Err(Error::OutOfRange(format!(
            "m = {m} outside 1..={}",
            K2M_MAX_VERTICES / 2
        )));
    }
    if 2 * m > g.vertex_count() {
        return Err(Error::OutOfRange(format!(
            "m = {m} needs {} vertices, graph has {}",
            2 * m,
            g.vertex_count()
        )));
    }
    let mut pairs = Vec::with_capacity(m);
    Ok(extend_pairs(g, m, 0, &mut pairs).then_some(pairs))
}

fn extend_pairs(g: &IntersectionGraph, m: usize, start: usize, pairs: &mut Vec<(usize, usize)>) -> bool {
    if pairs.len() == m {
        return true;
    }
    let n = g.vertex_count();
    let fits = |v: usize, pairs: &[(usize, usize)]| {
        pairs
            .iter()
            .all(|&(a, b)| v != a && v != b && g.has_edge(v, a) && g.has_edge(v, b))
    };
    // Pairs are listed by increasing smaller vertex, so each pattern is
    // visited once.
    for a in start..n {
        if !fits(a, pairs) {
            continue;
        }
        for b in a + 1..n {
            if g.has_edge(a, b) || !fits(b, pairs) {
                continue;
            }
            pairs.push((a, b));
            if extend_pairs(g, m, a + 1, pairs) {
                return true;
            }
            pairs.pop();
        }
    }
    false
}
