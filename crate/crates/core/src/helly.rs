//! Quantitative fractional Helly for boxes.
//!
//! If a family of `n` boxes in `R^d` has more than `T(n, k, d)` intersecting
//! pairs, some point lies in at least `k + 1` of them. Inverting the exact
//! extremal number therefore gives the best possible depth guarantee for a
//! given pair count.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::BoxFamily;
use crate::geometry::{depth, intersection_graph, DepthCertificate};
use crate::turan::{binom2, extremal_pairs, ser_rational};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HellyGuarantee {
    pub n: u64,
    pub d: u64,
    pub edges: u64,
    /// Every family with these parameters has a point in this many boxes.
    pub guaranteed_depth: u64,
    /// Largest `k` with `T(n, k, d) < edges`, or 0.
    pub k_star: u64,
}

/// Depth forced by `edges` intersecting pairs among `n` boxes in `R^d`.
pub fn guaranteed_depth(n: u64, d: u64, edges: u64) -> Result<HellyGuarantee> {
    if n == 0 || d == 0 {
        return Err(Error::Hypothesis(format!("need n >= 1 and d >= 1, got n = {n}, d = {d}")));
    }
    let max = binom2(n)?;
    if edges > max {
        return Err(Error::OutOfRange(format!(
            "{edges} intersecting pairs impossible among {n} boxes (at most {max})"
        )));
    }
    // T(n, k, d) is non-decreasing in k; find the last k with T < edges.
    let (mut lo, mut hi) = (0u64, n);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if extremal_pairs(n, mid, d)? < edges {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(HellyGuarantee {
        n,
        d,
        edges,
        guaranteed_depth: lo + 1,
        k_star: lo,
    })
}

fn alpha_floor(d: u64) -> Rational {
    Rational::new(d as i128 - 1, d as i128)
}

/// `lim guaranteed_depth(n, d, ⌈α C(n, 2)⌉) / n = 1 - sqrt(d (1 - α))`.
///
/// Obtained by solving `α n² / 2 = n² / 2 - (n - k)² / (2d)`, the leading
/// terms of `T(n, k, d)`. Defined for `1 - 1/d <= α <= 1`; the lower end
/// is the limit value 0.
pub fn beta_asymptotic(alpha: Rational, d: u64) -> Result<f64> {
    if d == 0 {
        return Err(Error::Hypothesis("d must be at least 1".into()));
    }
    let one = Rational::from_integer(1);
    if alpha < alpha_floor(d) || alpha > one {
        return Err(Error::OutOfRange(format!(
            "alpha = {alpha} outside [{}, 1] for d = {d}",
            alpha_floor(d)
        )));
    }
    let slack = (one - alpha) * Rational::from_integer(d as i128);
    let slack = *slack.numer() as f64 / *slack.denom() as f64;
    Ok(1.0 - slack.sqrt())
}

/// `⌈α C(n, 2)⌉`
pub fn pair_threshold(alpha: Rational, n: u64) -> Result<u64> {
    let pairs = Rational::from_integer(binom2(n)? as i128);
    let t = (alpha * pairs).ceil().to_integer();
    u64::try_from(t.max(0)).map_err(|_| Error::Overflow("pair threshold"))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BetaRow {
    pub n: u64,
    pub edges: u64,
    pub guaranteed_depth: u64,
    pub ratio: f64,
    pub beta: f64,
    pub error: f64,
}

/// `guaranteed_depth(n, d, ⌈α C(n, 2)⌉) / n` for each `n`, next to the
/// asymptotic value.
pub fn beta_convergence(alpha: Rational, d: u64, ns: &[u64]) -> Result<Vec<BetaRow>> {
    let beta = beta_asymptotic(alpha, d)?;
    ns.iter()
        .map(|&n| {
            let edges = pair_threshold(alpha, n)?;
            let g = guaranteed_depth(n, d, edges)?;
            let ratio = g.guaranteed_depth as f64 / n as f64;
            Ok(BetaRow {
                n,
                edges,
                guaranteed_depth: g.guaranteed_depth,
                ratio,
                beta,
                error: (ratio - beta).abs(),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HellyWitness {
    #[serde(serialize_with = "ser_rational")]
    pub alpha: Rational,
    pub pairs: u64,
    /// `⌈α C(n, 2)⌉`
    pub threshold: u64,
    pub met_alpha: bool,
    pub guarantee: HellyGuarantee,
    pub certificate: DepthCertificate,
    /// The certificate is at least as deep as the guarantee.
    pub sound: bool,
}

/// Measures the pair density of `f` and returns its deepest point.
pub fn helly_witness(f: &BoxFamily, alpha: Rational) -> Result<HellyWitness> {
    let n = f.len() as u64;
    let (_, certificate) = depth(f)?;
    let pairs = intersection_graph(f).edge_count() as u64;
    let threshold = pair_threshold(alpha, n)?;
    let guarantee = guaranteed_depth(n, f.dim() as u64, pairs)?;
    Ok(HellyWitness {
        alpha,
        pairs,
        threshold,
        met_alpha: pairs >= threshold,
        sound: certificate.depth() as u64 >= guarantee.guaranteed_depth,
        guarantee,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::construct_extremal;
    use crate::family::BoxNd;

    #[test]
    fn complete_graph_forces_full_depth() {
        for n in 1..30 {
            for d in 1..5 {
                let g = guaranteed_depth(n, d, binom2(n).unwrap()).unwrap();
                assert_eq!(g.guaranteed_depth, n);
            }
        }
    }

    #[test]
    fn inversion_examples() {
        let g = guaranteed_depth(6, 2, 14).unwrap();
        assert_eq!(g.k_star, 4);
        assert_eq!(g.guaranteed_depth, 5);
        let g = guaranteed_depth(6, 2, 13).unwrap();
        assert_eq!(g.guaranteed_depth, 4);
        assert_eq!(guaranteed_depth(6, 2, 0).unwrap().guaranteed_depth, 1);
        assert!(guaranteed_depth(6, 2, 16).is_err());
        assert!(guaranteed_depth(0, 2, 0).is_err());
    }

    #[test]
    fn beta_endpoints() {
        assert_eq!(beta_asymptotic(Rational::from_integer(1), 3).unwrap(), 1.0);
        assert_eq!(beta_asymptotic(Rational::new(1, 2), 2).unwrap(), 0.0);
        assert_eq!(beta_asymptotic(Rational::new(2, 3), 3).unwrap(), 0.0);
        let b = beta_asymptotic(Rational::new(3, 4), 2).unwrap();
        assert!((b - (1.0 - 0.5f64.sqrt())).abs() < 1e-15);
        assert!(beta_asymptotic(Rational::new(1, 3), 2).is_err());
        assert!(beta_asymptotic(Rational::new(5, 4), 2).is_err());
    }

    #[test]
    fn witness_on_construction() {
        let e = construct_extremal(6, 4, 2).unwrap();
        let w = helly_witness(&e.family, Rational::new(13, 15)).unwrap();
        assert!(w.met_alpha);
        assert_eq!(w.threshold, 13);
        assert_eq!(w.certificate.depth(), 4);
        assert_eq!(w.guarantee.guaranteed_depth, 4);
        assert!(w.sound);
    }

    #[test]
    fn witness_on_disjoint_and_identical_families() {
        let disjoint = BoxFamily::new(1, (0..5).map(|i| BoxNd::from_pairs(&[(2 * i, 2 * i + 1)])).collect()).unwrap();
        let w = helly_witness(&disjoint, Rational::new(1, 2)).unwrap();
        assert!(!w.met_alpha);
        assert_eq!(w.certificate.depth(), 1);
        let same = BoxFamily::new(2, vec![BoxNd::from_pairs(&[(0, 3), (1, 2)]); 6]).unwrap();
        let w = helly_witness(&same, Rational::new(1, 7)).unwrap();
        assert!(w.met_alpha && w.sound);
        assert_eq!(w.certificate.depth(), 6);
    }
}
