//! Boxes with exact integer coordinates and their JSON encoding.
//!
//! A family is serialized as
//! `{"dim": d, "boxes": [[[lo, hi], ... d pairs ...], ...]}`. Boxes are closed
//! products of integer intervals and a box's identity is its index in
//! `boxes`.

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// A closed interval `[lo, hi]`, possibly degenerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lo: i64,
    hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Option<Self> {
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }

    #[inline]
    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo.max(other.lo) <= self.hi.min(other.hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.lo, self.hi).serialize(s)
    }
}

/// An axis-parallel box: one interval per axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct BoxNd {
    intervals: Vec<Interval>,
}

impl BoxNd {
    pub fn new(intervals: Vec<Interval>) -> Self {
        BoxNd { intervals }
    }

    /// Builds a box from `(lo, hi)` pairs, panicking on an inverted pair.
    /// Meant for literals in tests and generators.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        BoxNd::new(
            pairs
                .iter()
                .map(|&(lo, hi)| Interval::new(lo, hi).expect("lo <= hi"))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn axis(&self, axis: usize) -> Interval {
        self.intervals[axis]
    }

    pub fn contains_point(&self, point: &[i64]) -> bool {
        self.intervals.len() == point.len()
            && self.intervals.iter().zip(point).all(|(iv, &x)| iv.contains(x))
    }

    /// Intersection test without the dimension check.
    #[inline]
    pub(crate) fn meets(&self, other: &BoxNd) -> bool {
        self.intervals
            .iter()
            .zip(&other.intervals)
            .all(|(a, b)| a.intersects(b))
    }

    pub(crate) fn set_axis(&mut self, axis: usize, iv: Interval) {
        self.intervals[axis] = iv;
    }
}

/// A dimension plus an ordered list of boxes of that dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BoxFamily {
    dim: usize,
    boxes: Vec<BoxNd>,
}

impl BoxFamily {
    pub fn new(dim: usize, boxes: Vec<BoxNd>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for (index, b) in boxes.iter().enumerate() {
            if b.dim() != dim {
                return Err(Error::DimensionMismatch {
                    index,
                    found: b.dim(),
                    dim,
                });
            }
        }
        Ok(BoxFamily { dim, boxes })
    }

    pub fn empty(dim: usize) -> Result<Self> {
        BoxFamily::new(dim, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn boxes(&self) -> &[BoxNd] {
        &self.boxes
    }

    pub fn get(&self, index: usize) -> &BoxNd {
        &self.boxes[index]
    }

    pub fn into_boxes(self) -> Vec<BoxNd> {
        self.boxes
    }

    /// Sorted distinct coordinates (both endpoints) used on `axis`.
    pub fn axis_values(&self, axis: usize) -> Vec<i64> {
        let mut v: Vec<i64> = self
            .boxes
            .iter()
            .flat_map(|b| {
                let iv = b.axis(axis);
                [iv.lo, iv.hi]
            })
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The subfamily made of the listed boxes, in the listed order.
    pub fn subfamily(&self, indices: &[usize]) -> BoxFamily {
        BoxFamily {
            dim: self.dim,
            boxes: indices.iter().map(|&i| self.boxes[i].clone()).collect(),
        }
    }

    pub(crate) fn set_interval(&mut self, index: usize, axis: usize, iv: Interval) {
        self.boxes[index].set_axis(axis, iv);
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    dim: usize,
    boxes: Vec<Vec<(i64, i64)>>,
}

/// Parses the JSON family document, validating every interval and the
/// per-box dimension.
pub fn parse_family(text: &str) -> Result<BoxFamily> {
    let raw: RawFamily =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    if raw.dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut boxes = Vec::with_capacity(raw.boxes.len());
    for (index, pairs) in raw.boxes.into_iter().enumerate() {
        if pairs.len() != raw.dim {
            return Err(Error::DimensionMismatch {
                index,
                found: pairs.len(),
                dim: raw.dim,
            });
        }
        let mut intervals = Vec::with_capacity(pairs.len());
        for (axis, (lo, hi)) in pairs.into_iter().enumerate() {
            let iv = Interval::new(lo, hi).ok_or(Error::InvertedInterval {
                index,
                axis,
                lo,
                hi,
            })?;
            intervals.push(iv);
        }
        boxes.push(BoxNd::new(intervals));
    }
    BoxFamily::new(raw.dim, boxes)
}

/// Compact JSON encoding; `parse_family` inverts it exactly.
pub fn serialize_family(f: &BoxFamily) -> String {
    serde_json::to_string(f).expect("family serialization is infallible")
}
