//! Closed forms: Turán numbers `t(n, m)`, the interval case `T(n, k, 1)`,
//! `Ψ(n, k, d)` and the box extremal number `T(n, k, d)`.
//!
//! Everything is exact `u64` arithmetic; an overflow is reported as
//! [`Error::Overflow`] rather than wrapping.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::Rational;

/// Parameters `(n, k, d)`: `n` boxes in `R^d`, no point in more than `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FormulaTriple {
    pub n: u64,
    pub k: u64,
    pub d: u64,
}

impl FormulaTriple {
    pub fn new(n: u64, k: u64, d: u64) -> Self {
        FormulaTriple { n, k, d }
    }

    /// Checks `n >= k >= 1` and `d >= 1`.
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.d == 0 {
            return Err(Error::Hypothesis(format!(
                "need k >= 1 and d >= 1, got k = {}, d = {}",
                self.k, self.d
            )));
        }
        if self.n < self.k {
            return Err(Error::Hypothesis(format!(
                "need n >= k, got n = {}, k = {}",
                self.n, self.k
            )));
        }
        Ok(())
    }
}

/// Class sizes of the Turán graph, larger classes first, empty classes
/// dropped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TuranPartition {
    sizes: Vec<u64>,
}

impl TuranPartition {
    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn into_sizes(self) -> Vec<u64> {
        self.sizes
    }
}

fn overflow(what: &'static str) -> Error {
    Error::Overflow(what)
}

/// `C(n, 2)`.
pub fn binom2(n: u64) -> Result<u64> {
    if n < 2 {
        return Ok(0);
    }
    let (a, b) = if n.is_multiple_of(2) { (n / 2, n - 1) } else { (n, (n - 1) / 2) };
    a.checked_mul(b).ok_or(overflow("binomial coefficient"))
}

pub fn turan_partition(n: u64, m: u64) -> Result<TuranPartition> {
    if m == 0 {
        return Err(Error::Hypothesis("Turán partition needs m >= 1".into()));
    }
    let (q, r) = (n / m, n % m);
    let classes = m.min(n);
    let sizes = (0..classes).map(|i| if i < r { q + 1 } else { q }).collect();
    Ok(TuranPartition { sizes })
}

/// Edge count of the Turán graph `T(n, m)`. `t(n, 1) = 0`, and for `m > n`
/// every class is a singleton so the value is `C(n, 2)`.
pub fn turan_edges(n: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::Hypothesis("Turán number needs m >= 1".into()));
    }
    let (q, r) = (n / m, n % m);
    let big = binom2(q + 1)?
        .checked_mul(r)
        .ok_or(overflow("Turán number"))?;
    let small = binom2(q)?
        .checked_mul(m - r)
        .ok_or(overflow("Turán number"))?;
    let within = big.checked_add(small).ok_or(overflow("Turán number"))?;
    Ok(binom2(n)? - within)
}

/// `T(n, k, 1) = C(n, 2) - C(n - k + 1, 2)`, the interval case.
pub fn interval_extremal(n: u64, k: u64) -> Result<u64> {
    FormulaTriple::new(n, k, 1).validate()?;
    Ok(binom2(n)? - binom2(n - k + 1)?)
}

/// `Ψ(n, k, d) = t(n - k + d, d) + T(n, k - d + 1, 1)` for `n >= k > d >= 1`.
pub fn psi(n: u64, k: u64, d: u64) -> Result<u64> {
    FormulaTriple::new(n, k, d).validate()?;
    if k <= d {
        return Err(Error::Hypothesis(format!(
            "Ψ needs k > d, got k = {k}, d = {d}"
        )));
    }
    turan_edges(n - k + d, d)?
        .checked_add(interval_extremal(n, k - d + 1)?)
        .ok_or(overflow("Ψ"))
}

/// Which closed form produced `T(n, k, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// `k > d`: `Ψ(n, k, d)`.
    #[serde(rename = "k>d")]
    Mixed,
    /// `k <= d`: the Turán number `t(n, k)`.
    #[serde(rename = "k<=d")]
    Turan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Evaluation {
    pub value: u64,
    pub branch: Branch,
}

pub fn evaluate(n: u64, k: u64, d: u64) -> Result<Evaluation> {
    FormulaTriple::new(n, k, d).validate()?;
    if k > d {
        Ok(Evaluation {
            value: psi(n, k, d)?,
            branch: Branch::Mixed,
        })
    } else {
        Ok(Evaluation {
            value: turan_edges(n, k)?,
            branch: Branch::Turan,
        })
    }
}

/// `T(n, k, d)`: the maximum number of intersecting pairs among `n` boxes
/// in `R^d` with no `k + 1` sharing a point.
pub fn extremal_pairs(n: u64, k: u64, d: u64) -> Result<u64> {
    evaluate(n, k, d).map(|e| e.value)
}

/// `T(n, k, d)` against its quadratic approximation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryGap {
    pub exact: u64,
    /// `((d-1)/(2d)) n^2 + (k/d - 1) n`
    #[serde(serialize_with = "ser_rational")]
    pub quadratic: Rational,
    /// `exact - quadratic`
    #[serde(serialize_with = "ser_rational")]
    pub gap: Rational,
    /// `quadratic + (k/2)(1 - k/d)`
    #[serde(serialize_with = "ser_rational")]
    pub refined_bound: Rational,
    /// `((d-1)/(2d)) n^2 + ((2k+d)/(2d)) n`
    #[serde(serialize_with = "ser_rational")]
    pub strict_bound: Rational,
    pub refined_holds: bool,
    pub strict_holds: bool,
}

pub(crate) fn ser_rational<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(overflow("corollary bounds"))
}

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(overflow("corollary bounds"))
}

pub fn corollary_gap(n: u64, k: u64, d: u64) -> Result<CorollaryGap> {
    let exact = psi(n, k, d)?;
    let (n, k, d) = (n as i128, k as i128, d as i128);
    let den = 2 * d;
    let n2 = mul(n, n)?;
    // Numerators over the common denominator 2d.
    let quad = add(mul(d - 1, n2)?, mul(mul(2, k - d)?, n)?)?;
    let refined = add(quad, mul(k, d - k)?)?;
    let strict = add(mul(d - 1, n2)?, mul(2 * k + d, n)?)?;
    let exact_r = Rational::from_integer(exact as i128);
    let quadratic = Rational::new(quad, den);
    let refined_bound = Rational::new(refined, den);
    let strict_bound = Rational::new(strict, den);
    Ok(CorollaryGap {
        exact,
        quadratic,
        gap: exact_r - quadratic,
        refined_bound,
        strict_bound,
        refined_holds: exact_r <= refined_bound,
        strict_holds: exact_r < strict_bound,
    })
}
