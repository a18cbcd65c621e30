//! Seeded random box families for property tests, oracles and the
//! acceptance suite.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::family::{BoxFamily, BoxNd, Interval};

/// Independent, replayable stream `stream` for `seed`.
pub fn chain_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn interval_in<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Interval {
    let a = rng.gen_range(lo..=hi);
    let b = rng.gen_range(lo..=hi);
    Interval::new(a.min(b), a.max(b)).expect("ordered")
}

/// `n` boxes with endpoints drawn uniformly from `0..=grid` (ties and
/// degenerate intervals allowed).
pub fn random_family<R: Rng>(rng: &mut R, n: usize, d: usize, grid: i64) -> BoxFamily {
    let boxes = (0..n)
        .map(|_| BoxNd::new((0..d).map(|_| interval_in(rng, 0, grid)).collect()))
        .collect();
    BoxFamily::new(d, boxes).expect("dimensions agree")
}

/// `n` boxes whose `2n` endpoints on every axis are a permutation of
/// `lo..lo + 2n`.
pub fn random_generic_family_from<R: Rng>(rng: &mut R, n: usize, d: usize, lo: i64) -> BoxFamily {
    let mut axes: Vec<Vec<Interval>> = Vec::with_capacity(d);
    for _ in 0..d {
        let mut values: Vec<i64> = (lo..lo + 2 * n as i64).collect();
        values.shuffle(rng);
        axes.push(
            values
                .chunks_exact(2)
                .map(|p| Interval::new(p[0].min(p[1]), p[0].max(p[1])).expect("ordered"))
                .collect(),
        );
    }
    let boxes = (0..n)
        .map(|i| BoxNd::new(axes.iter().map(|a| a[i]).collect()))
        .collect();
    BoxFamily::new(d, boxes).expect("dimensions agree")
}

pub fn random_generic_family<R: Rng>(rng: &mut R, n: usize, d: usize) -> BoxFamily {
    random_generic_family_from(rng, n, d, 0)
}

/// Mix of random boxes and random slabs (thin on one axis, spanning the
/// grid on the others). Slab-heavy families sit close to the extremal
/// structures, so they make sharper test inputs than uniform boxes.
pub fn random_slab_mix<R: Rng>(rng: &mut R, n: usize, d: usize, grid: i64) -> BoxFamily {
    let boxes = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                let axis = rng.gen_range(0..d);
                let lo = rng.gen_range(0..grid);
                let thin = Interval::new(lo, lo + rng.gen_range(0..=1)).expect("ordered");
                BoxNd::new(
                    (0..d)
                        .map(|a| {
                            if a == axis {
                                thin
                            } else {
                                let lo = rng.gen_range(-1..=0);
                                Interval::new(lo, grid + rng.gen_range(0..=1)).expect("ordered")
                            }
                        })
                        .collect(),
                )
            } else {
                BoxNd::new((0..d).map(|_| interval_in(rng, 0, grid)).collect())
            }
        })
        .collect();
    BoxFamily::new(d, boxes).expect("dimensions agree")
}
