//! Simple undirected graphs on vertices `0..n`, stored as adjacency bitsets.
//!
//! The text format is a header line `n <count>` followed by one `u v` line
//! per edge with `u < v`, sorted.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::turan;

pub(crate) const WORD: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntersectionGraph {
    n: usize,
    rows: Vec<Vec<u64>>,
    edges: usize,
}

impl IntersectionGraph {
    pub fn empty(n: usize) -> Self {
        IntersectionGraph {
            n,
            rows: vec![vec![0; words_for(n)]; n],
            edges: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = IntersectionGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = IntersectionGraph::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::EdgeList(format!("self-loop at {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::EdgeList(format!("edge {u} {v} out of range for n = {n}")));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// The Turán graph: complete `m`-partite on `n` vertices with
    /// near-equal classes laid out as contiguous index blocks.
    pub fn turan(n: usize, m: usize) -> Result<Self> {
        let partition = turan::turan_partition(n as u64, m as u64)?;
        let mut class = Vec::with_capacity(n);
        for (c, &size) in partition.sizes().iter().enumerate() {
            class.extend(std::iter::repeat_n(c, size as usize));
        }
        let mut g = IntersectionGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if class[u] != class[v] {
                    g.insert(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Inserts `{u, v}`; returns whether it was new.
    pub(crate) fn insert(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.has_edge(u, v) {
            return false;
        }
        self.rows[u][v / WORD] |= 1 << (v % WORD);
        self.rows[v][u / WORD] |= 1 << (u % WORD);
        self.edges += 1;
        true
    }

    pub(crate) fn from_rows(n: usize, rows: Vec<Vec<u64>>) -> Self {
        let twice: usize = rows
            .iter()
            .map(|r| r.iter().map(|w| w.count_ones() as usize).sum::<usize>())
            .sum();
        IntersectionGraph {
            n,
            rows,
            edges: twice / 2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    /// Number of edges with both ends in `vertices`.
    pub fn induced_edge_count(&self, vertices: &[usize]) -> usize {
        let mut count = 0;
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                if self.has_edge(u, v) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Number of edges between two vertex sets.
    pub fn cross_edge_count(&self, a: &[usize], b: &[usize]) -> usize {
        a.iter()
            .map(|&u| b.iter().filter(|&&v| self.has_edge(u, v)).count())
            .sum()
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        self.induced_edge_count(vertices) == vertices.len() * vertices.len().saturating_sub(1) / 2
    }

    /// A maximum clique, found by Bron–Kerbosch with pivoting. Ties are
    /// resolved deterministically.
    pub fn max_clique(&self) -> Vec<usize> {
        let words = words_for(self.n);
        let mut candidates = vec![0u64; words];
        for v in 0..self.n {
            candidates[v / WORD] |= 1 << (v % WORD);
        }
        let mut best = Vec::new();
        let mut current = Vec::new();
        self.bron_kerbosch(&mut current, candidates, vec![0; words], &mut best);
        best.sort_unstable();
        best
    }

    fn bron_kerbosch(
        &self,
        current: &mut Vec<usize>,
        mut p: Vec<u64>,
        mut x: Vec<u64>,
        best: &mut Vec<usize>,
    ) {
        let p_count = popcount(&p);
        if p_count == 0 {
            if popcount(&x) == 0 && current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        if current.len() + p_count <= best.len() {
            return;
        }
        // Pivot: the vertex of P ∪ X with the most neighbours in P.
        let pivot = ones(&p)
            .chain(ones(&x))
            .max_by_key(|&u| (and_count(&p, &self.rows[u]), std::cmp::Reverse(u)))
            .expect("P is nonempty");
        let branch: Vec<usize> = ones(&p)
            .filter(|&v| !self.has_edge(pivot, v))
            .collect();
        for v in branch {
            let row = &self.rows[v];
            let np: Vec<u64> = p.iter().zip(row).map(|(a, b)| a & b).collect();
            let nx: Vec<u64> = x.iter().zip(row).map(|(a, b)| a & b).collect();
            current.push(v);
            self.bron_kerbosch(current, np, nx, best);
            current.pop();
            p[v / WORD] &= !(1 << (v % WORD));
            x[v / WORD] |= 1 << (v % WORD);
        }
    }

    pub fn clique_number(&self) -> usize {
        self.max_clique().len()
    }

    /// The subgraph induced by `vertices`, relabeled `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> IntersectionGraph {
        let mut g = IntersectionGraph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    pub fn subgraph_clique_number(&self, vertices: &[usize]) -> usize {
        self.induced(vertices).clique_number()
    }

    /// Renders the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n {}", self.n).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Parses the edge-list text format. Blank lines and `#` comments are
    /// skipped; duplicate edges collapse.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeList("missing `n <count>` header".into()))?;
        let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["n", count] => count
                .parse::<usize>()
                .map_err(|_| Error::EdgeList(format!("bad vertex count {count:?}")))?,
            _ => return Err(Error::EdgeList(format!("bad header {header:?}"))),
        };
        let mut edges = Vec::new();
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [u, v] = parts.as_slice() else {
                return Err(Error::EdgeList(format!("bad edge line {line:?}")));
            };
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::EdgeList(format!("bad vertex {s:?}")))
            };
            edges.push((parse(u)?, parse(v)?));
        }
        IntersectionGraph::from_edges(n, &edges)
    }
}

pub(crate) fn popcount(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

pub(crate) fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * WORD + t)
        })
    })
}
