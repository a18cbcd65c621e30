//! Brute-force ground truth for `T(n, k, d)`.
//!
//! [`exact_t_1d`] enumerates every interval family on a complete grid;
//! [`search_t`] is a seeded hill climber that only ever certifies lower
//! bounds in higher dimension.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::construct_extremal;
use crate::family::{BoxFamily, BoxNd, Interval};
use crate::geometry::{depth_with, intersection_graph};
use crate::par::{map_range, Mode};
use crate::sample::{chain_rng, random_generic_family_from};
use crate::turan::FormulaTriple;

/// Largest `n` accepted by [`exact_t_1d`].
pub const EXACT_1D_MAX_N: u64 = 7;

/// Independent chains run by [`search_t`]; chain 0 starts from the
/// extremal construction.
pub const SEARCH_CHAINS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub n: u64,
    pub k: u64,
    pub d: u64,
    pub best_edges: u64,
    pub witness: BoxFamily,
    pub exhaustive: bool,
    pub explored: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Replaces coordinates on each axis by their rank among the values used on
/// that axis, starting at 1. Monotone per axis, so the intersection graph
/// and the depth are unchanged.
pub fn normalize_family(f: &BoxFamily) -> BoxFamily {
    let ranks: Vec<Vec<i64>> = (0..f.dim()).map(|a| f.axis_values(a)).collect();
    let rank = |axis: usize, v: i64| ranks[axis].binary_search(&v).expect("value present") as i64 + 1;
    let boxes = f
        .boxes()
        .iter()
        .map(|b| {
            BoxNd::new(
                b.intervals()
                    .iter()
                    .enumerate()
                    .map(|(a, iv)| Interval::new(rank(a, iv.lo()), rank(a, iv.hi())).expect("monotone"))
                    .collect(),
            )
        })
        .collect();
    BoxFamily::new(f.dim(), boxes).expect("same shape")
}

/// Relabels each axis onto `0..2n` so that all endpoints are distinct. At a
/// shared value lower endpoints go first, so closed intervals that touched
/// still overlap; the graph and the depth are unchanged.
pub fn general_position(f: &BoxFamily) -> BoxFamily {
    let n = f.len();
    let mut axes: Vec<Vec<Interval>> = Vec::with_capacity(f.dim());
    for axis in 0..f.dim() {
        // (value, 0 for lo / 1 for hi, box)
        let mut events: Vec<(i64, u8, usize)> = Vec::with_capacity(2 * n);
        for (i, b) in f.boxes().iter().enumerate() {
            events.push((b.axis(axis).lo(), 0, i));
            events.push((b.axis(axis).hi(), 1, i));
        }
        events.sort_unstable();
        let mut lo = vec![0; n];
        let mut hi = vec![0; n];
        for (rank, &(_, side, i)) in events.iter().enumerate() {
            if side == 0 {
                lo[i] = rank as i64;
            } else {
                hi[i] = rank as i64;
            }
        }
        axes.push((0..n).map(|i| Interval::new(lo[i], hi[i]).expect("lo sorts first")).collect());
    }
    let boxes = (0..n)
        .map(|i| BoxNd::new(axes.iter().map(|a| a[i]).collect()))
        .collect();
    BoxFamily::new(f.dim(), boxes).expect("same shape")
}

pub fn exact_t_1d(n: u64, k: u64) -> Result<OracleResult> {
    exact_t_1d_with(n, k, Mode::default())
}

struct Enumeration<'a> {
    intervals: &'a [(usize, usize)],
    n: usize,
    k: u32,
    cover: Vec<u32>,
    chosen: Vec<usize>,
    best: Option<(usize, Vec<usize>)>,
    explored: u64,
}

impl Enumeration<'_> {
    fn place(&mut self, idx: usize) -> usize {
        let (a, b) = self.intervals[idx];
        let added = self.cover[a] as usize;
        for c in &mut self.cover[a..=b] {
            *c += 1;
        }
        self.chosen.push(idx);
        added
    }

    fn unplace(&mut self) {
        let idx = self.chosen.pop().expect("nonempty");
        let (a, b) = self.intervals[idx];
        for c in &mut self.cover[a..=b] {
            *c -= 1;
        }
    }

    /// Intervals are added in lexicographic order of `(lo, hi)`, so every
    /// placed interval starts at or before the new one's `lo`: the new one
    /// meets exactly the `cover[lo]` placed intervals covering `lo`, and the
    /// depth over its span peaks at `lo`.
    fn run(&mut self, start: usize, edges: usize) {
        self.explored += 1;
        let placed = self.chosen.len();
        if placed == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| edges > *b) {
                self.best = Some((edges, self.chosen.clone()));
            }
            return;
        }
        if let Some((best, _)) = &self.best {
            // Later intervals start at or after the last `lo`, so among the
            // placed ones they can only meet those still covering it.
            let rem = self.n - placed;
            let last_lo = self.intervals[*self.chosen.last().expect("placed > 0")].0;
            let alive = self.cover[last_lo] as usize;
            if edges + rem * alive + rem * (rem - 1) / 2 <= *best {
                return;
            }
        }
        for idx in start..self.intervals.len() {
            let lo = self.intervals[idx].0;
            if self.cover[lo] >= self.k {
                continue;
            }
            let added = self.place(idx);
            self.run(idx, edges + added);
            self.unplace();
        }
    }
}

/// Exhaustive maximum of intersecting pairs over all multisets of `n`
/// closed intervals with endpoints in `1..=2n` and depth at most `k`.
///
/// Any family of `n` closed intervals can be relabeled monotonically onto
/// that grid without changing intersections or depth, so the grid is
/// complete. Branches on the first interval run as independent tasks.
pub fn exact_t_1d_with(n: u64, k: u64, mode: Mode) -> Result<OracleResult> {
    FormulaTriple::new(n, k, 1).validate()?;
    if n > EXACT_1D_MAX_N {
        return Err(Error::OutOfRange(format!(
            "exhaustive interval search limited to n <= {EXACT_1D_MAX_N}, got {n}"
        )));
    }
    let nn = n as usize;
    let grid = 2 * nn;
    let intervals: Vec<(usize, usize)> = (1..=grid)
        .flat_map(|a| (a..=grid).map(move |b| (a, b)))
        .collect();

    let branches = map_range(mode, intervals.len(), |first| {
        let mut e = Enumeration {
            intervals: &intervals,
            n: nn,
            k: k as u32,
            cover: vec![0; grid + 2],
            chosen: Vec::with_capacity(nn),
            best: None,
            explored: 0,
        };
        e.place(first);
        e.run(first, 0);
        (e.best, e.explored)
    });

    let explored = branches.iter().map(|(_, x)| x).sum();
    // Max edges, ties to the earliest branch (the lexicographically first family).
    let (best_edges, chosen) = branches
        .into_iter()
        .filter_map(|(b, _)| b)
        .fold(None::<(usize, Vec<usize>)>, |acc, cand| match acc {
            Some(a) if a.0 >= cand.0 => Some(a),
            _ => Some(cand),
        })
        .expect("k >= 1 always admits n disjoint intervals");
    let boxes = chosen
        .iter()
        .map(|&i| {
            let (a, b) = intervals[i];
            BoxNd::from_pairs(&[(a as i64, b as i64)])
        })
        .collect();
    Ok(OracleResult {
        n,
        k,
        d: 1,
        best_edges: best_edges as u64,
        witness: BoxFamily::new(1, boxes)?,
        exhaustive: true,
        explored,
        seed: None,
    })
}

pub fn search_t(n: u64, k: u64, d: u64, budget: u64, seed: u64) -> Result<OracleResult> {
    search_t_with(n, k, d, budget, seed, Mode::default())
}

/// Largest number of boxes sharing a point inside box `b`.
fn depth_through(f: &BoxFamily, b: usize) -> usize {
    let target = f.get(b);
    let clipped: Vec<BoxNd> = f
        .boxes()
        .iter()
        .filter(|other| other.meets(target))
        .map(|other| {
            BoxNd::new(
                other
                    .intervals()
                    .iter()
                    .zip(target.intervals())
                    .map(|(x, t)| Interval::new(x.lo().max(t.lo()), x.hi().min(t.hi())).expect("they meet"))
                    .collect(),
            )
        })
        .collect();
    let clipped = BoxFamily::new(f.dim(), clipped).expect("same dimension");
    depth_with(&clipped, Mode::Sequential).expect("contains b").0
}

fn degree(f: &BoxFamily, b: usize) -> usize {
    let target = f.get(b);
    f.boxes()
        .iter()
        .enumerate()
        .filter(|&(i, other)| i != b && other.meets(target))
        .count()
}

fn random_start<R: Rng>(rng: &mut R, n: usize, d: usize, k: u64) -> BoxFamily {
    for _ in 0..64 {
        let f = random_generic_family_from(rng, n, d, 1);
        if depth_with(&f, Mode::Sequential).expect("n >= 1").0 as u64 <= k {
            return f;
        }
    }
    // Disjoint on the first axis: depth 1.
    let grid = 2 * n as i64;
    let boxes = (0..n as i64)
        .map(|i| {
            let mut ivs = vec![Interval::new(2 * i + 1, 2 * i + 2).expect("ordered")];
            for _ in 1..d {
                let a = rng.gen_range(1..=grid);
                let b = rng.gen_range(1..=grid);
                ivs.push(Interval::new(a.min(b), a.max(b)).expect("ordered"));
            }
            BoxNd::new(ivs)
        })
        .collect();
    BoxFamily::new(d, boxes).expect("same dimension")
}

/// Seeded hill climbing for families with many intersecting pairs and depth
/// at most `k`, over endpoints in `1..=2n`.
///
/// Moves reset one endpoint of one box; moves losing edges or pushing the
/// depth above `k` are rejected, sideways moves are kept. The result is a
/// lower bound on `T(n, k, d)` and never anything more. The budget is the
/// total number of proposed moves, split across [`SEARCH_CHAINS`] chains.
pub fn search_t_with(n: u64, k: u64, d: u64, budget: u64, seed: u64, mode: Mode) -> Result<OracleResult> {
    FormulaTriple::new(n, k, d).validate()?;
    let nn = n as usize;
    let dd = d as usize;
    let grid = 2 * n as i64;
    let start = normalize_family(&construct_extremal(n, k, d)?.family);

    let chains = map_range(mode, SEARCH_CHAINS, |chain| {
        let mut rng = chain_rng(seed, chain as u64);
        let share = budget / SEARCH_CHAINS as u64 + u64::from((chain as u64) < budget % SEARCH_CHAINS as u64);
        let mut fam = if chain == 0 {
            start.clone()
        } else {
            random_start(&mut rng, nn, dd, k)
        };
        let mut edges = intersection_graph(&fam).edge_count();
        let mut best = (edges, fam.clone());
        for _ in 0..share {
            let b = rng.gen_range(0..nn);
            let axis = rng.gen_range(0..dd);
            let old = fam.get(b).axis(axis);
            let v = rng.gen_range(1..=grid);
            let proposal = if rng.gen_bool(0.5) {
                Interval::new(v, old.hi())
            } else {
                Interval::new(old.lo(), v)
            };
            let Some(new) = proposal.filter(|iv| *iv != old) else {
                continue;
            };
            let before = degree(&fam, b);
            fam.set_interval(b, axis, new);
            let after = edges - before + degree(&fam, b);
            if after < edges || depth_through(&fam, b) as u64 > k {
                fam.set_interval(b, axis, old);
                continue;
            }
            edges = after;
            if edges > best.0 {
                best = (edges, fam.clone());
            }
        }
        best
    });

    let (best_edges, witness) = chains
        .into_iter()
        .fold(None::<(usize, BoxFamily)>, |acc, cand| match acc {
            Some(a) if a.0 >= cand.0 => Some(a),
            _ => Some(cand),
        })
        .expect("at least one chain");
    Ok(OracleResult {
        n,
        k,
        d,
        best_edges: best_edges as u64,
        witness,
        exhaustive: false,
        explored: budget,
        seed: Some(seed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::depth;

    #[test]
    fn normalize_example() {
        let f = BoxFamily::new(1, vec![BoxNd::from_pairs(&[(0, 100)]), BoxNd::from_pairs(&[(50, 200)])]).unwrap();
        let g = normalize_family(&f);
        assert_eq!(g.get(0), &BoxNd::from_pairs(&[(1, 3)]));
        assert_eq!(g.get(1), &BoxNd::from_pairs(&[(2, 4)]));
        assert_eq!(normalize_family(&g), g);
    }

    #[test]
    fn exact_small_cases() {
        let r = exact_t_1d(5, 3).unwrap();
        assert_eq!(r.best_edges, 7);
        assert!(r.exhaustive);
        assert_eq!(exact_t_1d(4, 1).unwrap().best_edges, 0);
        assert_eq!(exact_t_1d(4, 4).unwrap().best_edges, 6);
        assert_eq!(exact_t_1d(1, 1).unwrap().best_edges, 0);
    }

    #[test]
    fn exact_witness_is_valid() {
        let r = exact_t_1d(5, 2).unwrap();
        assert_eq!(r.witness.len(), 5);
        assert_eq!(intersection_graph(&r.witness).edge_count() as u64, r.best_edges);
        assert!(depth(&r.witness).unwrap().0 <= 2);
    }

    #[test]
    fn exact_modes_agree() {
        assert_eq!(
            exact_t_1d_with(5, 3, Mode::Sequential).unwrap(),
            exact_t_1d_with(5, 3, Mode::Parallel).unwrap()
        );
    }

    #[test]
    fn exact_guards() {
        assert!(exact_t_1d(8, 3).is_err());
        assert!(exact_t_1d(3, 4).is_err());
        assert!(exact_t_1d(3, 0).is_err());
    }

    #[test]
    fn search_is_deterministic_and_sound() {
        let a = search_t(6, 4, 2, 4000, 11).unwrap();
        let b = search_t_with(6, 4, 2, 4000, 11, Mode::Sequential).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.best_edges, 13);
        assert_eq!(intersection_graph(&a.witness).edge_count() as u64, a.best_edges);
        assert!(depth(&a.witness).unwrap().0 <= 4);
        assert_eq!(a.seed, Some(11));
    }

    #[test]
    fn zero_budget_returns_construction() {
        let r = search_t(7, 5, 3, 0, 1).unwrap();
        assert_eq!(r.best_edges, crate::turan::psi(7, 5, 3).unwrap());
    }
}
