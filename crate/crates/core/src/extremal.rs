//! Extremal families and the per-instance upper-bound certificate.
//!
//! The general construction stacks `k - d` full cubes on top of `d` groups
//! of slabs, one group per axis. Slabs in the same group are pairwise
//! disjoint, slabs in different groups cross, and the cubes meet
//! everything, so the intersection graph is a Turán graph on the slabs
//! joined to a clique of cubes. With `q_max` slabs on the fullest axis and
//! `M = 4 q_max + 2`, slot `j` on axis `i` is `[4j + 1, 4j + 2]` on axis `i`.
//! Every other extent is `[0, M]`, widened to `[-(b + 1), M + b + 1]` for the
//! box with index `b` so that all endpoints on each axis are distinct. The
//! widening only moves endpoints outside `[0, M]`, where no slab lives, so
//! neither the graph nor the depth changes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{BoxFamily, BoxNd, Interval};
use crate::geometry::{depth, intersection_graph, DepthCertificate};
use crate::turan::{self, binom2, turan_edges, turan_partition, FormulaTriple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum Role {
    /// Meets every other box of the family.
    Cube,
    /// Slot `slot` in the group of slabs perpendicular to `axis`.
    Slab { axis: usize, slot: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalFamily {
    pub family: BoxFamily,
    pub roles: Vec<Role>,
    pub params: FormulaTriple,
    /// Number of slabs per axis.
    pub slab_counts: Vec<u64>,
}

impl ExtremalFamily {
    pub fn cube_count(&self) -> usize {
        self.roles.iter().filter(|r| matches!(r, Role::Cube)).count()
    }

    /// Boxes grouped by role: the cubes (if any) followed by one group per
    /// nonempty slab axis.
    pub fn role_classes(&self) -> Vec<Vec<usize>> {
        let mut cubes = Vec::new();
        let mut slabs = vec![Vec::new(); self.family.dim()];
        for (i, role) in self.roles.iter().enumerate() {
            match *role {
                Role::Cube => cubes.push(i),
                Role::Slab { axis, .. } => slabs[axis].push(i),
            }
        }
        std::iter::once(cubes)
            .chain(slabs)
            .filter(|c| !c.is_empty())
            .collect()
    }
}

/// The interval family attaining `T(n, k, 1)`: `k - 1` copies of
/// `[0, 2(n - k + 1)]` and `n - k + 1` disjoint unit intervals `[2j, 2j + 1]`
/// inside them. Copies share endpoints; see [`construct_extremal`] for a
/// realization in general position.
pub fn construct_extremal_1d(n: u64, k: u64) -> Result<ExtremalFamily> {
    let params = FormulaTriple::new(n, k, 1);
    params.validate()?;
    let short = n - k + 1;
    let long = Interval::new(0, 2 * short as i64).expect("ordered");
    let mut boxes = Vec::with_capacity(n as usize);
    let mut roles = Vec::with_capacity(n as usize);
    for _ in 0..k - 1 {
        boxes.push(BoxNd::new(vec![long]));
        roles.push(Role::Cube);
    }
    for j in 0..short as i64 {
        boxes.push(BoxNd::new(vec![Interval::new(2 * j, 2 * j + 1).expect("ordered")]));
        roles.push(Role::Slab {
            axis: 0,
            slot: j as usize,
        });
    }
    Ok(ExtremalFamily {
        family: BoxFamily::new(1, boxes)?,
        roles,
        params,
        slab_counts: vec![short],
    })
}

/// The extremal family for `(n, k, d)`.
///
/// For `k > d` this is `k - d` cubes plus `n - k + d` slabs spread over the
/// `d` axes as evenly as possible (fuller axes first). For `k <= d` there are
/// no cubes and the `n` slabs are spread over the first `k` axes, realizing
/// the Turán graph `T(n, k)`.
pub fn construct_extremal(n: u64, k: u64, d: u64) -> Result<ExtremalFamily> {
    let params = FormulaTriple::new(n, k, d);
    params.validate()?;
    let dim = usize::try_from(d).map_err(|_| Error::OutOfRange(format!("d = {d} too large")))?;
    let (cubes, slab_axes, slab_total) = if k > d { (k - d, d, n - k + d) } else { (0, k, n) };
    let mut slab_counts = turan_partition(slab_total, slab_axes)?.into_sizes();
    slab_counts.resize(dim, 0);
    let q_max = slab_counts.iter().copied().max().unwrap_or(0) as i64;
    let extent = 4 * q_max + 2;

    let full = |index: usize| {
        let b = index as i64 + 1;
        Interval::new(-b, extent + b).expect("ordered")
    };
    let mut boxes = Vec::with_capacity(n as usize);
    let mut roles = Vec::with_capacity(n as usize);
    for _ in 0..cubes {
        boxes.push(BoxNd::new((0..dim).map(|_| full(boxes.len())).collect()));
        roles.push(Role::Cube);
    }
    for (axis, &count) in slab_counts.iter().enumerate() {
        for slot in 0..count as usize {
            let j = slot as i64;
            let thin = Interval::new(4 * j + 1, 4 * j + 2).expect("ordered");
            let index = boxes.len();
            boxes.push(BoxNd::new(
                (0..dim).map(|a| if a == axis { thin } else { full(index) }).collect(),
            ));
            roles.push(Role::Slab { axis, slot });
        }
    }
    Ok(ExtremalFamily {
        family: BoxFamily::new(dim, boxes)?,
        roles,
        params,
        slab_counts,
    })
}

/// One removal step of the inductive upper-bound argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionStep {
    /// Family size before the step.
    pub n_before: usize,
    /// `B_1..B_d`: `B_i` has the smallest upper endpoint on axis `i` among
    /// the boxes not chosen earlier in this step.
    pub chosen: Vec<usize>,
    /// `c_i`, the upper endpoint of `B_i` on axis `i`.
    pub corner: Vec<i64>,
    /// Remaining boxes meeting every chosen box; all contain `corner`.
    pub f1: Vec<usize>,
    /// Remaining boxes missing at least one chosen box.
    pub f2: Vec<usize>,
    /// Clique number among the chosen boxes.
    pub r: usize,
    pub edges_within_chosen: usize,
    pub edges_to_f1: usize,
    pub edges_to_f2: usize,
    /// All edges with an endpoint among the chosen boxes.
    pub s: usize,
    /// `(d - 1) n' + k + C(d, 2) - d` with `n' = n_before - d`.
    pub bound: u64,
    pub holds: bool,
    /// The finer inequalities the bound is assembled from.
    pub f1_bound_holds: bool,
    pub f2_bound_holds: bool,
    pub chosen_bound_holds: bool,
    pub clique_bound_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionBase {
    pub boxes: Vec<usize>,
    pub edges: usize,
    /// `t(n_base, k)`
    pub bound: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionTrace {
    pub n: usize,
    pub k: u64,
    pub d: usize,
    pub measured_depth: usize,
    pub steps: Vec<DecompositionStep>,
    pub base: DecompositionBase,
    /// Edge count of the whole family.
    pub edges: usize,
    /// Sum of the step bounds and the base bound.
    pub total_bound: u64,
    /// `T(n, k, d)`.
    pub formula: u64,
    /// Every step and the base satisfied their bounds.
    pub holds: bool,
}

fn checked_distinct_uppers(f: &BoxFamily) -> Result<()> {
    for axis in 0..f.dim() {
        let mut ends: Vec<(i64, usize)> = f
            .boxes()
            .iter()
            .enumerate()
            .map(|(i, b)| (b.axis(axis).hi(), i))
            .collect();
        ends.sort_unstable();
        if let Some(w) = ends.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateUpperEndpoint {
                axis,
                first: w[0].1,
                second: w[1].1,
                value: w[0].0,
            });
        }
    }
    Ok(())
}

/// Runs the inductive removal on `f` and records every bound it uses.
///
/// While at least `k + d` boxes remain, pick `B_1..B_d` greedily by smallest
/// upper endpoint, count the edges `S` touching them and compare with
/// `(d - 1) n' + k + C(d, 2) - d`; then drop them. The leftover family must
/// have at most `t(n_base, k)` edges. Requires `n >= k`, pairwise distinct
/// upper endpoints on every axis and depth at most `k` (checked; a deeper
/// family yields [`Error::DepthExceeded`] with the witness).
pub fn decompose_certificate(f: &BoxFamily, k: u64) -> Result<DecompositionTrace> {
    let n = f.len();
    let d = f.dim();
    let formula = turan::extremal_pairs(n as u64, k, d as u64)?;
    checked_distinct_uppers(f)?;
    let (measured_depth, witness) = depth(f)?;
    if measured_depth as u64 > k {
        return Err(Error::DepthExceeded { k, witness });
    }
    let g = intersection_graph(f);
    let du = d as u64;
    let step_constant = (k + binom2(du)?)
        .checked_sub(du)
        .expect("k + C(d, 2) >= d for k, d >= 1");

    let mut remaining: Vec<usize> = (0..n).collect();
    let mut steps = Vec::new();
    while remaining.len() as u64 >= k + du {
        let mut chosen = Vec::with_capacity(d);
        let mut corner = Vec::with_capacity(d);
        for axis in 0..d {
            let (hi, b) = remaining
                .iter()
                .filter(|b| !chosen.contains(*b))
                .map(|&b| (f.get(b).axis(axis).hi(), b))
                .min()
                .expect("at least d boxes remain");
            chosen.push(b);
            corner.push(hi);
        }
        let rest: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|b| !chosen.contains(b))
            .collect();
        let (f1, f2): (Vec<usize>, Vec<usize>) = rest
            .iter()
            .partition(|&&b| chosen.iter().all(|&c| g.has_edge(b, c)));
        let r = g.subgraph_clique_number(&chosen);
        let edges_within_chosen = g.induced_edge_count(&chosen);
        let edges_to_f1 = g.cross_edge_count(&chosen, &f1);
        let edges_to_f2 = g.cross_edge_count(&chosen, &f2);
        let s = edges_within_chosen + edges_to_f1 + edges_to_f2;
        let bound = (du - 1) * rest.len() as u64 + step_constant;
        steps.push(DecompositionStep {
            n_before: remaining.len(),
            holds: s as u64 <= bound,
            f1_bound_holds: edges_to_f1 <= d * f1.len(),
            f2_bound_holds: edges_to_f2 <= (d - 1) * f2.len(),
            chosen_bound_holds: edges_within_chosen as u64 <= turan_edges(du, r as u64)?,
            clique_bound_holds: (f1.len() + r) as u64 <= k,
            chosen,
            corner,
            f1,
            f2,
            r,
            edges_within_chosen,
            edges_to_f1,
            edges_to_f2,
            s,
            bound,
        });
        remaining = rest;
    }

    let base_edges = g.induced_edge_count(&remaining);
    let base_bound = turan_edges(remaining.len() as u64, k)?;
    let base = DecompositionBase {
        edges: base_edges,
        bound: base_bound,
        holds: base_edges as u64 <= base_bound,
        boxes: remaining,
    };
    let counted: usize = steps.iter().map(|s| s.s).sum::<usize>() + base.edges;
    debug_assert_eq!(counted, g.edge_count());
    let total_bound = steps.iter().map(|s| s.bound).sum::<u64>() + base.bound;
    let holds = base.holds && steps.iter().all(|s| s.holds);
    Ok(DecompositionTrace {
        n,
        k,
        d,
        measured_depth,
        steps,
        base,
        edges: g.edge_count(),
        total_bound,
        formula,
        holds,
    })
}

/// Measured properties of the construction against the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub params: FormulaTriple,
    pub branch: turan::Branch,
    pub formula: u64,
    pub edges: usize,
    pub depth: usize,
    pub certificate: DepthCertificate,
    pub edges_match: bool,
    pub depth_match: bool,
    pub pass: bool,
}

pub fn verify_extremal(params: FormulaTriple) -> Result<VerifyReport> {
    let FormulaTriple { n, k, d } = params;
    let eval = turan::evaluate(n, k, d)?;
    let built = construct_extremal(n, k, d)?;
    let edges = intersection_graph(&built.family).edge_count();
    let (depth, certificate) = depth(&built.family)?;
    let edges_match = edges as u64 == eval.value;
    let depth_match = depth as u64 == k.min(n);
    Ok(VerifyReport {
        params,
        branch: eval.branch,
        formula: eval.value,
        edges,
        depth,
        certificate,
        edges_match,
        depth_match,
        pass: edges_match && depth_match,
    })
}
