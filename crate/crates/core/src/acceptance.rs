//! The acceptance suite: nine numbered criteria, each a bundle of exact
//! checks with a wall-clock budget. Shared by the `acceptance` test target
//! and the `selftest` CLI command.
//!
//! Expected values are computed here from first principles (binomials,
//! explicit sums, brute force) rather than through the functions under test
//! wherever that is possible.

use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;
use serde::Serialize;

use crate::error::Result;
use crate::extremal::{construct_extremal, decompose_certificate};
use crate::family::BoxFamily;
use crate::geometry::{depth_with, find_induced_k2m, intersection_graph, intersection_graph_with};
use crate::graph::IntersectionGraph;
use crate::helly::{beta_asymptotic, guaranteed_depth, pair_threshold};
use crate::oracle::{exact_t_1d_with, general_position, search_t_with};
use crate::par::{map_range, map_slice, Mode};
use crate::regularity::erdos_stone_extract;
use crate::sample::{chain_rng, random_family, random_generic_family, random_slab_mix};
use crate::turan::{corollary_gap, extremal_pairs, interval_extremal, psi, turan_edges};
use crate::Rational;

/// Seed shared by every randomized criterion.
pub const SEED: u64 = 20_240_611;

/// Search budget for criteria 4 and 9.
pub const SEARCH_BUDGET: u64 = 100_000;

/// Triples on which the randomized search must reach `T(n, k, d)`.
pub const SEARCH_TRIPLES: [(u64, u64, u64); 6] =
    [(5, 3, 2), (6, 4, 2), (6, 5, 2), (7, 4, 2), (6, 4, 3), (7, 5, 3)];

/// Further triples on which the search only has to stay at or below `T`.
pub const SOUNDNESS_TRIPLES: [(u64, u64, u64); 5] = [(8, 3, 2), (8, 5, 2), (9, 4, 3), (6, 2, 3), (7, 3, 4)];

/// `(k, d)` pairs of the quadratic-gap criterion.
pub const GAP_PAIRS: [(u64, u64); 3] = [(4, 2), (5, 3), (7, 4)];

/// Largest `n` of the quadratic-gap criterion.
pub const GAP_MAX_N: u64 = 10_000;

/// `(α, d)` grid of the convergence check.
pub const BETA_GRID: [((i128, i128), u64); 7] = [
    ((11, 20), 2),
    ((3, 4), 2),
    ((9, 10), 2),
    ((1, 1), 2),
    ((7, 10), 3),
    ((17, 20), 3),
    ((1, 1), 3),
];

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub mode: Mode,
    /// Smaller ranges for a fast smoke run. Budgets still apply.
    pub quick: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
    pub within_budget: bool,
    pub passed: bool,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} [{}] {} ({} ms, budget {} ms)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed_ms,
            self.budget_ms
        )?;
        if !self.within_budget {
            write!(f, "\n    over budget")?;
        }
        for c in &self.checks {
            write!(
                f,
                "\n    [{}] {}: {}",
                if c.passed { "ok" } else { "FAILED" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn failed(name: &str, err: crate::Error) -> Check {
    check(name, false, format!("error: {err}"))
}

fn timed(id: u8, title: &'static str, budget: Duration, run: impl FnOnce() -> Vec<Check>) -> Outcome {
    let start = Instant::now();
    let checks = run();
    let elapsed = start.elapsed();
    let within_budget = elapsed <= budget;
    Outcome {
        id,
        title,
        passed: within_budget && !checks.is_empty() && checks.iter().all(|c| c.passed),
        checks,
        elapsed_ms: elapsed.as_millis(),
        budget_ms: budget.as_millis(),
        within_budget,
    }
}

/// `C(n, 2)` in i128, independent of the crate's checked helper.
fn c2(n: i128) -> i128 {
    n * (n - 1) / 2
}

/// `t(n, m)` by summing `C(s, 2)` over an explicit near-equal partition.
fn turan_reference(n: i128, m: i128) -> i128 {
    if m >= n {
        return c2(n);
    }
    let inside: i128 = (0..m).map(|i| c2(n / m + i128::from(i < n % m))).sum();
    c2(n) - inside
}

/// `T(n, k, d)` assembled from the reference pieces.
fn formula_reference(n: i128, k: i128, d: i128) -> i128 {
    if k <= d {
        turan_reference(n, k)
    } else {
        turan_reference(n - k + d, d) + c2(n) - c2(n - (k - d + 1) + 1)
    }
}

/// `(n, k, d)` with `1 <= d <= 4`, `d < k <= n <= max_n`.
fn main_range(max_n: u64) -> Vec<(u64, u64, u64)> {
    let mut triples = Vec::new();
    for d in 1..=4 {
        for n in 1..=max_n {
            for k in d + 1..=n {
                triples.push((n, k, d));
            }
        }
    }
    triples
}

fn first_failures<T: fmt::Debug>(bad: &[T]) -> String {
    let shown: Vec<String> = bad.iter().take(3).map(|b| format!("{b:?}")).collect();
    format!("{} failures, first: {}", bad.len(), shown.join("; "))
}

fn main_max_n(opts: Options) -> u64 {
    if opts.quick {
        20
    } else {
        40
    }
}

pub fn criterion_1(opts: Options) -> Outcome {
    timed(1, "construction attains T(n,k,d) with depth exactly k", Duration::from_secs(60), || {
        let triples = main_range(main_max_n(opts));
        let rows = map_slice(opts.mode, &triples, |&(n, k, d)| -> Result<(bool, bool)> {
            let e = construct_extremal(n, k, d)?;
            let edges = intersection_graph_with(&e.family, Mode::Sequential).edge_count() as i128;
            let (depth, cert) = depth_with(&e.family, Mode::Sequential)?;
            let expected = formula_reference(n as i128, k as i128, d as i128);
            Ok((edges == expected, depth as u64 == k && cert.verify(&e.family)))
        });
        let mut edge_bad = Vec::new();
        let mut depth_bad = Vec::new();
        let mut errors = Vec::new();
        for (t, r) in triples.iter().zip(rows) {
            match r {
                Ok((e, dp)) => {
                    if !e {
                        edge_bad.push(*t);
                    }
                    if !dp {
                        depth_bad.push(*t);
                    }
                }
                Err(err) => errors.push((*t, err.to_string())),
            }
        }
        let total = triples.len();
        vec![
            check(
                "edge count equals the formula",
                edge_bad.is_empty() && errors.is_empty(),
                if edge_bad.is_empty() && errors.is_empty() {
                    format!("{total} triples, n <= {}", main_max_n(opts))
                } else {
                    format!("{}; errors {:?}", first_failures(&edge_bad), errors.first())
                },
            ),
            check(
                "measured depth equals k",
                depth_bad.is_empty() && errors.is_empty(),
                if depth_bad.is_empty() {
                    format!("{total} triples")
                } else {
                    first_failures(&depth_bad)
                },
            ),
        ]
    })
}

pub fn criterion_2(opts: Options) -> Outcome {
    timed(2, "exhaustive interval oracle matches C(n,2) - C(n-k+1,2)", Duration::from_secs(120), || {
        let max_n = if opts.quick { 5 } else { 6 };
        let mut bad = Vec::new();
        let mut witnesses_ok = true;
        let mut explored = 0;
        for n in 1..=max_n {
            for k in 1..=n {
                match exact_t_1d_with(n, k, opts.mode) {
                    Ok(r) => {
                        let expected = c2(n as i128) - c2((n - k + 1) as i128);
                        if r.best_edges as i128 != expected {
                            bad.push((n, k, r.best_edges, expected));
                        }
                        let g = intersection_graph(&r.witness);
                        let depth = depth_with(&r.witness, Mode::Sequential).map(|x| x.0);
                        witnesses_ok &= g.edge_count() as u64 == r.best_edges
                            && matches!(depth, Ok(x) if x as u64 <= k)
                            && r.exhaustive;
                        explored += r.explored;
                    }
                    Err(e) => return vec![failed("oracle", e)],
                }
            }
        }
        vec![
            check(
                "maximum over all interval families",
                bad.is_empty(),
                if bad.is_empty() {
                    format!("all 1 <= k <= n <= {max_n}, {explored} families explored")
                } else {
                    first_failures(&bad)
                },
            ),
            check("witnesses re-verified", witnesses_ok, "edge count and depth recomputed"),
        ]
    })
}

/// Random families of depth at most `k` for the certificate, half of them
/// generic, half slab mixes moved into general position.
fn certificate_inputs(count: usize, mode: Mode) -> Vec<(BoxFamily, u64)> {
    map_range(mode, count, |i| {
        let mut rng = chain_rng(SEED, 3_000 + i as u64);
        let d = rng.gen_range(1..=3usize);
        let n = rng.gen_range(d + 2..=20usize);
        let f = if i % 2 == 0 {
            random_generic_family(&mut rng, n, d)
        } else {
            general_position(&random_slab_mix(&mut rng, n, d, 6))
        };
        let depth = depth_with(&f, Mode::Sequential).expect("nonzero dimension").0 as u64;
        // Mostly the tight choice k = depth, sometimes a looser one.
        let slack = if rng.gen_bool(0.25) { rng.gen_range(1..=2) } else { 0 };
        let k = (depth + slack).min(n as u64);
        (f, k)
    })
}

pub fn criterion_3(opts: Options) -> Outcome {
    timed(3, "decomposition certificate on constructions and random families", Duration::from_secs(120), || {
        let triples = main_range(main_max_n(opts));
        let results = map_slice(opts.mode, &triples, |&(n, k, d)| -> Result<bool> {
            let e = construct_extremal(n, k, d)?;
            let trace = decompose_certificate(&e.family, k)?;
            Ok(trace.holds && trace.edges as u64 <= trace.total_bound && trace.total_bound == psi(n, k, d)?)
        });
        let construct_bad: Vec<String> = triples
            .iter()
            .zip(&results)
            .filter_map(|(t, r)| match r {
                Ok(true) => None,
                Ok(false) => Some(format!("{t:?}")),
                Err(e) => Some(format!("{t:?}: {e}")),
            })
            .collect();

        let count = if opts.quick { 200 } else { 1000 };
        let inputs = certificate_inputs(count, opts.mode);
        let traces = map_slice(opts.mode, &inputs, |(f, k)| decompose_certificate(f, *k));
        let mut random_bad = Vec::new();
        let mut steps = 0;
        let mut sub_bad = 0;
        for (i, t) in traces.iter().enumerate() {
            match t {
                Ok(t) => {
                    steps += t.steps.len();
                    sub_bad += t
                        .steps
                        .iter()
                        .filter(|s| {
                            !(s.f1_bound_holds && s.f2_bound_holds && s.chosen_bound_holds && s.clique_bound_holds)
                        })
                        .count();
                    if !t.holds || t.edges as u64 > t.formula {
                        random_bad.push(format!("family {i}"));
                    }
                }
                Err(e) => random_bad.push(format!("family {i}: {e}")),
            }
        }
        vec![
            check(
                "constructions",
                construct_bad.is_empty(),
                if construct_bad.is_empty() {
                    format!("{} families, step bounds sum to the formula", triples.len())
                } else {
                    first_failures(&construct_bad)
                },
            ),
            check(
                "random families",
                random_bad.is_empty(),
                if random_bad.is_empty() {
                    format!("{count} families, {steps} steps, zero violations")
                } else {
                    first_failures(&random_bad)
                },
            ),
            check("sub-bounds of every step", sub_bad == 0, format!("{sub_bad} violations")),
        ]
    })
}

pub fn criterion_4(opts: Options) -> Outcome {
    timed(4, "randomized search never beats T and reaches it", Duration::from_secs(300), || {
        let budget = if opts.quick { SEARCH_BUDGET / 5 } else { SEARCH_BUDGET };
        let mut checks = Vec::new();
        let triples = SEARCH_TRIPLES.iter().map(|&t| (t, true)).chain(SOUNDNESS_TRIPLES.iter().map(|&t| (t, false)));
        for (i, ((n, k, d), must_attain)) in triples.enumerate() {
            let name = format!("search ({n},{k},{d}){}", if must_attain { "" } else { ", soundness only" });
            let r = match search_t_with(n, k, d, budget, SEED + i as u64, opts.mode) {
                Ok(r) => r,
                Err(e) => {
                    checks.push(failed(&name, e));
                    continue;
                }
            };
            let expected = formula_reference(n as i128, k as i128, d as i128);
            let edges = intersection_graph(&r.witness).edge_count() as u64;
            let depth = depth_with(&r.witness, Mode::Sequential).map(|x| x.0 as u64);
            let sound = edges == r.best_edges && matches!(depth, Ok(x) if x <= k) && (r.best_edges as i128) <= expected;
            checks.push(check(
                name,
                sound && (!must_attain || r.best_edges as i128 == expected),
                format!("best {} of T = {expected}, witness depth {:?}, budget {budget}", r.best_edges, depth.ok()),
            ));
        }
        checks
    })
}

pub fn criterion_5(_opts: Options) -> Outcome {
    timed(5, "quadratic approximation of T(n,k,d)", Duration::from_secs(10), || {
        let mut checks = Vec::new();
        for &(k, d) in &GAP_PAIRS {
            let mut gaps: Vec<Rational> = Vec::new();
            let mut strict_bad = Vec::new();
            let mut refined_bad = Vec::new();
            for n in k + d..=GAP_MAX_N {
                match corollary_gap(n, k, d) {
                    Ok(g) => {
                        let quad = Rational::new((d as i128 - 1) * (n * n) as i128, 2 * d as i128)
                            + Rational::new(k as i128 - d as i128, d as i128) * Rational::from_integer(n as i128);
                        let exact = formula_reference(n as i128, k as i128, d as i128);
                        if g.quadratic != quad || g.exact as i128 != exact {
                            checks.push(check(format!("(k,d) = ({k},{d}) arithmetic"), false, format!("mismatch at n = {n}")));
                        }
                        let gap = Rational::from_integer(exact) - quad;
                        gaps.push(if gap < Rational::default() { -gap } else { gap });
                        if !g.strict_holds {
                            strict_bad.push(n);
                        }
                        if !g.refined_holds {
                            refined_bad.push(n);
                        }
                    }
                    Err(e) => {
                        checks.push(failed("gap", e));
                        break;
                    }
                }
            }
            let mut distinct = gaps.clone();
            distinct.sort();
            distinct.dedup();
            let min = distinct.first().copied().unwrap_or_default();
            let max = distinct.last().copied().unwrap_or_default();
            let shown: Vec<String> = distinct.iter().map(ToString::to_string).collect();
            checks.push(check(
                format!("(k,d) = ({k},{d}) gap constant"),
                distinct.len() == 1,
                format!("{} distinct values over n in [{}, {GAP_MAX_N}]: {}", distinct.len(), k + d, shown.join(", ")),
            ));
            let period_ok = gaps.iter().skip(d as usize).zip(&gaps).all(|(a, b)| a == b);
            checks.push(check(
                format!("(k,d) = ({k},{d}) gap bounded"),
                period_ok,
                format!("between {min} and {max}, periodic in n with period d = {d}"),
            ));
            checks.push(check(
                format!("(k,d) = ({k},{d}) T <= quadratic + k(d-k)/(2d)"),
                refined_bad.is_empty(),
                format!("{} violations", refined_bad.len()),
            ));
            checks.push(check(
                format!("(k,d) = ({k},{d}) strict bound"),
                strict_bad.is_empty(),
                format!("{} violations", strict_bad.len()),
            ));
        }
        checks
    })
}

pub fn criterion_6(opts: Options) -> Outcome {
    timed(6, "Turán and interval identities", Duration::from_secs(5), || {
        let sweep = main_max_n(opts);
        let obs_max = if opts.quick { 100 } else { 300 };
        let mut checks = Vec::new();

        let mut bad = Vec::new();
        for d in 1..=64u64 {
            for r in 1..=d {
                let lhs = turan_edges(d, r).map(|t| t as i128 - r as i128);
                let rhs = turan_edges(d, d).map(|t| t as i128 - d as i128);
                if !matches!((lhs, rhs), (Ok(a), Ok(b)) if a <= b) {
                    bad.push((d, r));
                }
            }
        }
        checks.push(check("t(d,r) - r <= t(d,d) - d, r <= d <= 64", bad.is_empty(), format!("{} violations", bad.len())));

        let mut bad = Vec::new();
        for n in 1..=1_000u64 {
            for d in 1..=n {
                let diff = turan_edges(n + d, d).and_then(|a| turan_edges(n, d).map(|b| a as i128 - b as i128));
                let expected = (d as i128 - 1) * n as i128 + c2(d as i128);
                if !matches!(diff, Ok(x) if x == expected) {
                    bad.push((n, d));
                }
            }
        }
        checks.push(check(
            "t(n+d,d) - t(n,d) = (d-1)n + C(d,2), d <= n <= 1000",
            bad.is_empty(),
            format!("{} violations", bad.len()),
        ));

        let mut bad = Vec::new();
        for n in 1..=obs_max {
            for k in 1..=n {
                for d in 1..=40u64 {
                    let diff = interval_extremal(n + d, k).and_then(|a| interval_extremal(n, k).map(|b| a as i128 - b as i128));
                    if !matches!(diff, Ok(x) if x == d as i128 * (k as i128 - 1)) {
                        bad.push((n, k, d));
                    }
                }
            }
        }
        checks.push(check(
            "T1(n+d,k) - T1(n,k) = d(k-1)",
            bad.is_empty(),
            format!("k <= n <= {obs_max}, d <= 40: {} violations", bad.len()),
        ));

        let mut bad = Vec::new();
        for k in 2..=30u64 {
            for d in 1..k {
                for s in 0..d {
                    let expected = c2((k + s) as i128) - s as i128;
                    let ok = matches!(psi(k + s, k, d), Ok(p) if p as i128 == expected)
                        && matches!(turan_edges(k + s, k), Ok(t) if t as i128 == expected);
                    if !ok {
                        bad.push((k, d, s));
                    }
                }
            }
        }
        checks.push(check(
            "psi(k+s,k,d) = t(k+s,k) = C(k+s,2) - s, k <= 30",
            bad.is_empty(),
            format!("{} violations", bad.len()),
        ));

        let mut bad = Vec::new();
        let mut matched = 0;
        for d in 1..=4u64 {
            for n in 1..=sweep {
                for k in 1..=n {
                    let Ok(t) = extremal_pairs(n, k, d) else {
                        bad.push((n, k, d));
                        continue;
                    };
                    matched += 1;
                    let up_k = k == n || matches!(extremal_pairs(n, k + 1, d), Ok(u) if u >= t);
                    let up_n = matches!(extremal_pairs(n + 1, k, d), Ok(u) if u >= t);
                    if t as i128 != formula_reference(n as i128, k as i128, d as i128) || !up_k || !up_n {
                        bad.push((n, k, d));
                    }
                }
            }
        }
        checks.push(check(
            "T matches the reference and is monotone in n and k",
            bad.is_empty(),
            format!("{matched} triples with d <= 4, n <= {sweep}: {} violations", bad.len()),
        ));
        checks
    })
}

fn helly_inputs(count: usize, mode: Mode) -> Vec<BoxFamily> {
    map_range(mode, count, |i| {
        let mut rng = chain_rng(SEED, 7_000 + i as u64);
        let d = rng.gen_range(1..=3usize);
        let n = rng.gen_range(1..=15usize);
        match i % 3 {
            0 => random_family(&mut rng, n, d, 6),
            1 => random_slab_mix(&mut rng, n, d, 5),
            _ => random_generic_family(&mut rng, n, d),
        }
    })
}

pub fn criterion_7(opts: Options) -> Outcome {
    timed(7, "fractional Helly guarantee: sound, tight, converging", Duration::from_secs(60), || {
        let mut checks = Vec::new();
        let count = if opts.quick { 500 } else { 2000 };
        let families = helly_inputs(count, opts.mode);
        let verdicts = map_slice(opts.mode, &families, |f| -> Result<(u64, u64)> {
            let edges = intersection_graph(f).edge_count() as u64;
            let g = guaranteed_depth(f.len() as u64, f.dim() as u64, edges)?;
            Ok((g.guaranteed_depth, depth_with(f, Mode::Sequential)?.0 as u64))
        });
        let mut bad = Vec::new();
        let mut tight = 0;
        for (i, v) in verdicts.iter().enumerate() {
            match v {
                Ok((g, m)) if g <= m => tight += usize::from(g == m),
                other => bad.push(format!("family {i}: {other:?}")),
            }
        }
        checks.push(check(
            "guarantee <= measured depth",
            bad.is_empty(),
            if bad.is_empty() {
                format!("{count} families, {tight} met with equality")
            } else {
                first_failures(&bad)
            },
        ));

        let triples = main_range(main_max_n(opts));
        let mut bad = Vec::new();
        for &(n, k, d) in &triples {
            let t = formula_reference(n as i128, k as i128, d as i128) as u64;
            let at = guaranteed_depth(n, d, t).map(|g| g.guaranteed_depth);
            let above = if t < c2(n as i128) as u64 {
                guaranteed_depth(n, d, t + 1).map(|g| g.guaranteed_depth == k + 1).unwrap_or(false)
            } else {
                true
            };
            if !matches!(at, Ok(x) if x == k) || !above {
                bad.push((n, k, d));
            }
        }
        checks.push(check(
            "guarantee is k at T and k+1 at T+1",
            bad.is_empty(),
            format!("{} triples: {} violations", triples.len(), bad.len()),
        ));

        let n = 10_000u64;
        let tolerance = 5.0 / (n as f64).sqrt();
        for &((p, q), d) in &BETA_GRID {
            let alpha = Rational::new(p, q);
            let row = beta_asymptotic(alpha, d).and_then(|beta| {
                let edges = pair_threshold(alpha, n)?;
                let g = guaranteed_depth(n, d, edges)?.guaranteed_depth;
                Ok((beta, g as f64 / n as f64))
            });
            checks.push(match row {
                Ok((beta, ratio)) => check(
                    format!("beta({alpha}, d = {d}) at n = {n}"),
                    (ratio - beta).abs() <= tolerance,
                    format!("ratio {ratio:.6}, beta {beta:.6}, error {:.2e} <= {tolerance:.2e}", (ratio - beta).abs()),
                ),
                Err(e) => failed("beta", e),
            });
        }
        checks
    })
}

pub fn criterion_8(opts: Options) -> Outcome {
    timed(8, "box graphs have no induced K_{2,d+1}", Duration::from_secs(60), || {
        let per_d = if opts.quick { 100 } else { 500 };
        let mut checks = Vec::new();
        for d in 1..=4usize {
            let m = d + 1;
            let graphs: Vec<IntersectionGraph> = map_range(opts.mode, per_d, |i| {
                let mut rng = chain_rng(SEED, 8_000 + 1_000 * d as u64 + i as u64);
                let n = rng.gen_range(2 * m..=12);
                let f = if i % 2 == 0 {
                    random_slab_mix(&mut rng, n, d, 4)
                } else {
                    random_family(&mut rng, n, d, 5)
                };
                intersection_graph(&f)
            });
            let found = map_slice(opts.mode, &graphs, |g| find_induced_k2m(g, m).map(|w| w.is_some()));
            let present = found.iter().filter(|r| !matches!(r, Ok(false))).count();
            // Non-vacuity: the same families do contain K_{2,d}.
            let smaller = if d >= 2 {
                graphs
                    .iter()
                    .filter(|g| matches!(find_induced_k2m(g, d), Ok(Some(_))))
                    .count()
            } else {
                0
            };
            checks.push(check(
                format!("d = {d}: K_(2,{m}) absent"),
                present == 0,
                format!("{per_d} families, {present} contain it; K_(2,{d}) found in {smaller}"),
            ));
            let turan = IntersectionGraph::turan(2 * m, m).and_then(|g| find_induced_k2m(&g, m));
            checks.push(check(
                format!("d = {d}: Turán T({},{m}) contains K_(2,{m})", 2 * m),
                matches!(turan, Ok(Some(_))),
                format!("{:?}", turan.map(|w| w.map(|p| p.len()))),
            ));
        }
        checks
    })
}

pub fn criterion_9(_opts: Options) -> Outcome {
    timed(9, "fractional Erdős–Stone extraction", Duration::from_secs(60), || {
        let epsilon = Rational::new(1, 10);
        let cases: [(&str, Result<IntersectionGraph>, bool); 3] = [
            (
                "construct_extremal(20,12,2)",
                construct_extremal(20, 12, 2).map(|e| intersection_graph(&e.family)),
                true,
            ),
            ("Turán T(12,3)", construct_extremal(12, 3, 3).map(|e| intersection_graph(&e.family)), true),
            ("Turán T(12,2)", construct_extremal(12, 2, 2).map(|e| intersection_graph(&e.family)), false),
        ];
        let mut checks = Vec::new();
        for (i, (name, g, expect)) in cases.into_iter().enumerate() {
            let outcome = g.and_then(|g| {
                let o = erdos_stone_extract(&g, 2, epsilon, SEARCH_BUDGET, SEED + i as u64)?;
                let verified = o.witness.as_ref().is_none_or(|w| w.verify(&g) && w.parts.len() == 3);
                Ok((o, verified))
            });
            checks.push(match outcome {
                Ok((o, verified)) => check(
                    format!("{name}: witness {}", if expect { "found" } else { "absent" }),
                    o.witness.is_some() == expect && verified,
                    format!(
                        "{} edges, above threshold {}, parts {:?}, class counts tried {:?}",
                        o.edges,
                        o.above_threshold,
                        o.witness.as_ref().map(|w| w.part_sizes()),
                        o.attempts.iter().map(|a| a.classes).collect::<Vec<_>>()
                    ),
                ),
                Err(e) => failed(name, e),
            });
        }
        checks
    })
}

pub const CRITERIA: [fn(Options) -> Outcome; 9] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
];

pub fn run_all(opts: Options) -> Vec<Outcome> {
    CRITERIA.iter().map(|c| c(opts)).collect()
}
