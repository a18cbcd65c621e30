//! Homogeneous equipartitions and complete multipartite subgraphs.
//!
//! A pair of vertex classes is homogeneous when either every cross pair is
//! an edge or none is. [`partition_search`] looks for an equipartition in
//! which all but an `epsilon` fraction of class pairs are homogeneous; the
//! complete pairs then form a supergraph on the classes, and any clique on
//! `d + 1` classes lifts to a complete `(d + 1)`-partite subgraph of the
//! original graph ([`erdos_stone_extract`]). The search is a heuristic: a
//! failure says nothing about existence.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::IntersectionGraph;
use crate::par::{map_range, Mode};
use crate::sample::chain_rng;
use crate::turan::{binom2, ser_rational, turan_partition};
use crate::Rational;

/// Parallel annealing chains run by [`partition_search`].
pub const PARTITION_CHAINS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PairStatus {
    Complete,
    Empty,
    Irregular,
}

impl PairStatus {
    fn from_count(edges: u64, pairs: u64) -> PairStatus {
        match edges {
            0 => PairStatus::Empty,
            e if e == pairs => PairStatus::Complete,
            _ => PairStatus::Irregular,
        }
    }
}

/// Classifies the pair `(a, b)` by scanning all `|a| |b|` cross pairs.
pub fn pair_status(g: &IntersectionGraph, a: &[usize], b: &[usize]) -> Result<PairStatus> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Hypothesis("pair status needs two nonempty sets".into()));
    }
    if let Some(&v) = a.iter().find(|v| b.contains(v)) {
        return Err(Error::Overlap(v));
    }
    let edges = g.cross_edge_count(a, b) as u64;
    Ok(PairStatus::from_count(edges, (a.len() * b.len()) as u64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairEntry {
    pub a: usize,
    pub b: usize,
    pub status: PairStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityPartition {
    pub classes: Vec<Vec<usize>>,
    /// One entry per unordered class pair `a < b`.
    pub pairs: Vec<PairEntry>,
    #[serde(serialize_with = "ser_rational")]
    pub irregular_fraction: Rational,
}

impl RegularityPartition {
    /// Validates that `classes` is an equipartition of `0..n` and computes
    /// every pair status. Classes are sorted internally and ordered by their
    /// smallest vertex.
    pub fn from_classes(g: &IntersectionGraph, mut classes: Vec<Vec<usize>>) -> Result<Self> {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        for class in &mut classes {
            if class.is_empty() {
                return Err(Error::Hypothesis("empty class".into()));
            }
            class.sort_unstable();
            for &v in class.iter() {
                if v >= n {
                    return Err(Error::OutOfRange(format!("vertex {v} not in graph of {n} vertices")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Overlap(v));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Hypothesis(format!("vertex {v} is in no class")));
        }
        let (min, max) = classes
            .iter()
            .map(Vec::len)
            .fold((usize::MAX, 0), |(lo, hi), s| (lo.min(s), hi.max(s)));
        if max > min + 1 {
            return Err(Error::Hypothesis(format!(
                "class sizes range from {min} to {max}; not an equipartition"
            )));
        }
        classes.sort_unstable_by_key(|c| c[0]);
        let mut pairs = Vec::new();
        for a in 0..classes.len() {
            for b in a + 1..classes.len() {
                pairs.push(PairEntry {
                    a,
                    b,
                    status: pair_status(g, &classes[a], &classes[b])?,
                });
            }
        }
        let irregular = pairs.iter().filter(|p| p.status == PairStatus::Irregular).count();
        let total = binom2(classes.len() as u64)?;
        let irregular_fraction = if total == 0 {
            Rational::from_integer(0)
        } else {
            Rational::new(irregular as i128, total as i128)
        };
        Ok(RegularityPartition {
            classes,
            pairs,
            irregular_fraction,
        })
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn status(&self, a: usize, b: usize) -> PairStatus {
        let (a, b) = (a.min(b), a.max(b));
        let k = self.classes.len();
        // Row-major index of (a, b) among pairs with a < b.
        let idx = a * (2 * k - a - 1) / 2 + (b - a - 1);
        self.pairs[idx].status
    }

    pub fn irregular_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.status == PairStatus::Irregular).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionSearch {
    pub partition: RegularityPartition,
    pub success: bool,
    #[serde(serialize_with = "ser_rational")]
    pub epsilon: Rational,
    pub budget: u64,
    pub seed: u64,
}

/// Swap-move state: class of each vertex and edge counts between classes.
struct SwapState<'a> {
    adj: &'a [Vec<usize>],
    class_of: Vec<usize>,
    sizes: Vec<u64>,
    /// `counts[a * k + b]`, symmetric; the diagonal counts edges inside a class.
    counts: Vec<u64>,
    k: usize,
}

impl<'a> SwapState<'a> {
    fn new(adj: &'a [Vec<usize>], class_of: Vec<usize>, sizes: Vec<u64>) -> Self {
        let k = sizes.len();
        let mut counts = vec![0; k * k];
        for (u, nbrs) in adj.iter().enumerate() {
            for &v in nbrs.iter().filter(|&&v| v > u) {
                let (a, b) = (class_of[u], class_of[v]);
                counts[a * k + b] += 1;
                if a != b {
                    counts[b * k + a] += 1;
                }
            }
        }
        SwapState {
            adj,
            class_of,
            sizes,
            counts,
            k,
        }
    }

    fn shift(&mut self, a: usize, b: usize, up: bool) {
        let k = self.k;
        let apply = |c: &mut u64| if up { *c += 1 } else { *c -= 1 };
        apply(&mut self.counts[a * k + b]);
        if a != b {
            apply(&mut self.counts[b * k + a]);
        }
    }

    fn relocate(&mut self, x: usize, to: usize) {
        let from = self.class_of[x];
        for &y in &self.adj[x] {
            let c = self.class_of[y];
            self.shift(from, c, false);
            self.shift(to, c, true);
        }
        self.class_of[x] = to;
    }

    fn swap(&mut self, u: usize, v: usize) {
        let (a, b) = (self.class_of[u], self.class_of[v]);
        self.relocate(u, b);
        self.relocate(v, a);
    }

    /// (irregular pairs, total defect), where the defect of a pair is the
    /// number of cross pairs to flip to make it homogeneous.
    fn cost(&self) -> (usize, u64) {
        let mut irregular = 0;
        let mut defect = 0;
        for a in 0..self.k {
            for b in a + 1..self.k {
                let e = self.counts[a * self.k + b];
                let missing = self.sizes[a] * self.sizes[b] - e;
                let d = e.min(missing);
                defect += d;
                irregular += usize::from(d > 0);
            }
        }
        (irregular, defect)
    }

    fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.class_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

pub fn partition_search(
    g: &IntersectionGraph,
    classes: usize,
    epsilon: Rational,
    budget: u64,
    seed: u64,
) -> Result<PartitionSearch> {
    partition_search_with(g, classes, epsilon, budget, seed, Mode::default())
}

/// Local search over equipartitions into `classes` parts.
///
/// Moves swap two vertices from different classes, which preserves the
/// class sizes. Each chain anneals on the total defect (the number of cross
/// pairs that would have to flip to make every pair homogeneous), starting
/// from a random equipartition; the best state by (irregular pairs, defect)
/// is kept. Chains run independently and the winner is chosen by cost,
/// then by the canonical class encoding.
pub fn partition_search_with(
    g: &IntersectionGraph,
    classes: usize,
    epsilon: Rational,
    budget: u64,
    seed: u64,
    mode: Mode,
) -> Result<PartitionSearch> {
    let n = g.vertex_count();
    if classes == 0 || classes > n {
        return Err(Error::OutOfRange(format!(
            "class count {classes} must lie in 1..={n}"
        )));
    }
    let sizes = turan_partition(n as u64, classes as u64)?.into_sizes();
    let adj: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).collect()).collect();

    let results = map_range(mode, PARTITION_CHAINS, |chain| {
        let mut rng = chain_rng(seed, chain as u64);
        let share = budget / PARTITION_CHAINS as u64
            + u64::from((chain as u64) < budget % PARTITION_CHAINS as u64);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut class_of = vec![0; n];
        let mut next = 0;
        for (c, &s) in sizes.iter().enumerate() {
            for &v in &order[next..next + s as usize] {
                class_of[v] = c;
            }
            next += s as usize;
        }
        let mut state = SwapState::new(&adj, class_of, sizes.clone());
        let mut current = state.cost();
        let mut best = (current, state.classes());
        for step in 0..share {
            if best.0 .1 == 0 || classes == 1 {
                break;
            }
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if state.class_of[u] == state.class_of[v] {
                continue;
            }
            state.swap(u, v);
            let proposed = state.cost();
            let delta = proposed.1 as f64 - current.1 as f64;
            let temperature = 2.0 * (1.0 - step as f64 / share as f64) + 1e-3;
            if delta <= 0.0 || rng.gen::<f64>() < (-delta / temperature).exp() {
                current = proposed;
                if current < best.0 {
                    best = (current, state.classes());
                }
            } else {
                state.swap(u, v);
            }
        }
        best
    });

    let (_, best) = results
        .into_iter()
        .map(|(cost, mut classes)| {
            for c in &mut classes {
                c.sort_unstable();
            }
            classes.sort_unstable_by_key(|c| c[0]);
            (cost, classes)
        })
        .min()
        .expect("at least one chain");
    let partition = RegularityPartition::from_classes(g, best)?;
    Ok(PartitionSearch {
        success: partition.irregular_fraction <= epsilon,
        partition,
        epsilon,
        budget,
        seed,
    })
}

/// One vertex per class, joined when the class pair is complete.
pub fn class_supergraph(p: &RegularityPartition) -> IntersectionGraph {
    let mut g = IntersectionGraph::empty(p.classes.len());
    for pair in p.pairs.iter().filter(|e| e.status == PairStatus::Complete) {
        g.insert(pair.a, pair.b);
    }
    g
}

/// Disjoint vertex sets with every cross pair an edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultipartiteWitness {
    pub parts: Vec<Vec<usize>>,
}

impl MultipartiteWitness {
    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    /// Exhaustive check of every cross pair.
    pub fn verify(&self, g: &IntersectionGraph) -> bool {
        let mut seen = vec![false; g.vertex_count()];
        for part in &self.parts {
            if part.is_empty() {
                return false;
            }
            for &v in part {
                if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
        }
        self.parts.iter().enumerate().all(|(i, a)| {
            self.parts[i + 1..]
                .iter()
                .all(|b| a.iter().all(|&u| b.iter().all(|&v| g.has_edge(u, v))))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtractionAttempt {
    pub classes: usize,
    #[serde(serialize_with = "ser_rational")]
    pub irregular_fraction: Rational,
    pub success: bool,
    pub supergraph_clique: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErdosStoneOutcome {
    pub d: usize,
    #[serde(serialize_with = "ser_rational")]
    pub epsilon: Rational,
    pub edges: usize,
    /// More than `(1 - 1/d + ε) n² / 2` edges, the regime where a witness is
    /// guaranteed for large enough class counts.
    pub above_threshold: bool,
    pub attempts: Vec<ExtractionAttempt>,
    pub witness: Option<MultipartiteWitness>,
}

/// Class counts tried by [`erdos_stone_extract`]: `d + 1`, doubled until
/// exceeding `n`.
pub fn class_ladder(n: usize, d: usize) -> Vec<usize> {
    std::iter::successors(Some(d + 1), |&k| Some(2 * k))
        .take_while(|&k| k <= n)
        .collect()
}

/// Looks for a complete `(d + 1)`-partite subgraph whose parts are whole
/// classes of a homogeneous equipartition.
pub fn erdos_stone_extract(
    g: &IntersectionGraph,
    d: usize,
    epsilon: Rational,
    budget: u64,
    seed: u64,
) -> Result<ErdosStoneOutcome> {
    if d == 0 {
        return Err(Error::Hypothesis("d must be at least 1".into()));
    }
    let n = g.vertex_count() as i128;
    let edges = g.edge_count();
    // edges > (1 - 1/d + ε) n² / 2
    let density = Rational::from_integer(1) - Rational::new(1, d as i128) + epsilon;
    let above_threshold = Rational::from_integer(2 * edges as i128) > density * Rational::from_integer(n * n);

    let mut attempts = Vec::new();
    for classes in class_ladder(g.vertex_count(), d) {
        let search = partition_search(g, classes, epsilon, budget, seed)?;
        let mut clique = Vec::new();
        if search.success {
            clique = class_supergraph(&search.partition).max_clique();
        }
        attempts.push(ExtractionAttempt {
            classes,
            irregular_fraction: search.partition.irregular_fraction,
            success: search.success,
            supergraph_clique: clique.len(),
        });
        if clique.len() > d {
            let witness = MultipartiteWitness {
                parts: clique[..=d]
                    .iter()
                    .map(|&c| search.partition.classes[c].clone())
                    .collect(),
            };
            if witness.verify(g) {
                return Ok(ErdosStoneOutcome {
                    d,
                    epsilon,
                    edges,
                    above_threshold,
                    attempts,
                    witness: Some(witness),
                });
            }
        }
    }
    Ok(ErdosStoneOutcome {
        d,
        epsilon,
        edges,
        above_threshold,
        attempts,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::construct_extremal;
    use crate::family::{BoxFamily, BoxNd};
    use crate::geometry::intersection_graph;

    #[test]
    fn pair_status_examples() {
        let g = IntersectionGraph::turan(12, 3).unwrap();
        let classes: Vec<Vec<usize>> = (0..3).map(|c| (4 * c..4 * c + 4).collect()).collect();
        assert_eq!(pair_status(&g, &classes[0], &classes[2]).unwrap(), PairStatus::Complete);
        assert_eq!(pair_status(&g, &[0, 1], &[2, 3]).unwrap(), PairStatus::Empty);

        let f = BoxFamily::new(
            1,
            vec![
                BoxNd::from_pairs(&[(0, 10)]),
                BoxNd::from_pairs(&[(5, 6)]),
                BoxNd::from_pairs(&[(20, 21)]),
            ],
        )
        .unwrap();
        let g = intersection_graph(&f);
        assert_eq!(pair_status(&g, &[0], &[1, 2]).unwrap(), PairStatus::Irregular);
        assert_eq!(pair_status(&g, &[0, 1], &[1, 2]), Err(Error::Overlap(1)));
        assert!(pair_status(&g, &[], &[1]).is_err());
    }

    #[test]
    fn partition_validation() {
        let g = IntersectionGraph::empty(5);
        assert!(RegularityPartition::from_classes(&g, vec![vec![0, 1, 2, 3], vec![4]]).is_err());
        assert!(RegularityPartition::from_classes(&g, vec![vec![0, 1], vec![2, 3]]).is_err());
        assert!(RegularityPartition::from_classes(&g, vec![vec![0, 1, 2], vec![2, 3, 4]]).is_err());
        let p = RegularityPartition::from_classes(&g, vec![vec![4, 1, 2], vec![3, 0]]).unwrap();
        assert_eq!(p.classes, vec![vec![0, 3], vec![1, 2, 4]]);
        assert_eq!(p.status(1, 0), PairStatus::Empty);
    }

    #[test]
    fn status_index_matches_pairs() {
        let g = IntersectionGraph::turan(10, 5).unwrap();
        let classes: Vec<Vec<usize>> = (0..5).map(|c| vec![2 * c, 2 * c + 1]).collect();
        let p = RegularityPartition::from_classes(&g, classes).unwrap();
        for e in &p.pairs {
            assert_eq!(p.status(e.a, e.b), e.status);
        }
    }

    #[test]
    fn turan_graph_partitions_perfectly() {
        let g = IntersectionGraph::turan(12, 3).unwrap();
        let s = partition_search(&g, 3, Rational::from_integer(0), 10_000, 5).unwrap();
        assert_eq!(s.partition.irregular_fraction, Rational::from_integer(0));
        assert!(s.success);
        assert_eq!(class_supergraph(&s.partition), IntersectionGraph::complete(3));
    }

    #[test]
    fn singletons_are_homogeneous() {
        let g = intersection_graph(&crate::sample::random_family(&mut chain_rng(3, 0), 9, 2, 12));
        let s = partition_search(&g, 9, Rational::from_integer(0), 0, 1).unwrap();
        assert!(s.success);
        assert_eq!(class_supergraph(&s.partition), g);
    }

    #[test]
    fn search_modes_agree() {
        let e = construct_extremal(12, 6, 2).unwrap();
        let g = intersection_graph(&e.family);
        let a = partition_search_with(&g, 6, Rational::new(1, 3), 20_000, 9, Mode::Sequential).unwrap();
        let b = partition_search_with(&g, 6, Rational::new(1, 3), 20_000, 9, Mode::Parallel).unwrap();
        assert_eq!(a, b);
        assert!(a.success);
    }

    #[test]
    fn role_partition_supergraph_has_triangle() {
        let e = construct_extremal(12, 6, 2).unwrap();
        let g = intersection_graph(&e.family);
        let p = RegularityPartition::from_classes(&g, e.role_classes()).unwrap();
        assert_eq!(p.irregular_count(), 0);
        assert!(class_supergraph(&p).clique_number() >= 3);
    }

    #[test]
    fn all_empty_partition_gives_empty_supergraph() {
        let g = IntersectionGraph::empty(6);
        let p = RegularityPartition::from_classes(&g, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert_eq!(class_supergraph(&p).edge_count(), 0);
    }

    #[test]
    fn witness_verification() {
        let g = IntersectionGraph::turan(6, 3).unwrap();
        let good = MultipartiteWitness {
            parts: vec![vec![0, 1], vec![2, 3], vec![4, 5]],
        };
        assert!(good.verify(&g));
        let bad = MultipartiteWitness {
            parts: vec![vec![0, 2], vec![1, 3]],
        };
        assert!(!bad.verify(&g));
        let overlapping = MultipartiteWitness {
            parts: vec![vec![0], vec![0]],
        };
        assert!(!overlapping.verify(&g));
    }

    #[test]
    fn ladder() {
        assert_eq!(class_ladder(20, 2), vec![3, 6, 12]);
        assert_eq!(class_ladder(2, 2), Vec::<usize>::new());
    }

    #[test]
    fn turan_graphs_extract_or_not() {
        let g = IntersectionGraph::turan(9, 3).unwrap();
        let out = erdos_stone_extract(&g, 2, Rational::new(1, 10), 20_000, 1).unwrap();
        let w = out.witness.unwrap();
        assert_eq!(w.part_sizes(), vec![3, 3, 3]);
        let g = IntersectionGraph::turan(12, 2).unwrap();
        let out = erdos_stone_extract(&g, 2, Rational::new(1, 10), 20_000, 1).unwrap();
        assert!(out.witness.is_none());
        assert!(!out.above_threshold);
    }
}
