use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::NodeTest;
use crate::error::{cap, Result};
use crate::gf2::{dot, vec_string};

/// The test `<u, x> = b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LinearTest {
    pub u: u64,
    pub b: bool,
}

impl LinearTest {
    pub fn new(u: u64, b: bool) -> Self {
        LinearTest { u, b }
    }

    /// The always-true test `<0, x> = 0`.
    pub fn always() -> Self {
        LinearTest { u: 0, b: false }
    }

    pub fn weight(&self) -> u32 {
        self.u.count_ones()
    }
}

impl NodeTest for LinearTest {
    fn holds(&self, x: usize) -> bool {
        dot(self.u, x as u64) == self.b
    }

    fn label(&self, n: usize) -> String {
        format!("(lin {} b={})", vec_string(self.u, n), self.b as u8)
    }
}

/// Affine subspace `{x : Ax = b}` in canonical reduced echelon form.
///
/// Each row stores `a` in bits `0..n` and the right-hand side in bit `n`.
/// The pivot of a row is its lowest set bit; pivots are eliminated from all
/// other rows and rows are sorted, so equal subspaces have equal rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineSubspace {
    n: usize,
    rows: Vec<u64>,
}

impl AffineSubspace {
    pub fn full(n: usize) -> Self {
        assert!(n < 64);
        AffineSubspace { n, rows: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.n - self.rows.len()
    }

    fn amask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    /// `u` reduced modulo the row space of `A`; zero iff `<u, x>` is
    /// constant on the subspace.
    pub fn reduce_vec(&self, u: u64) -> u64 {
        let m = self.amask();
        let mut r = u & m;
        for &row in &self.rows {
            let p = row.trailing_zeros();
            if (r >> p) & 1 == 1 {
                r ^= row & m;
            }
        }
        r
    }

    pub fn is_independent(&self, u: u64) -> bool {
        self.reduce_vec(u) != 0
    }

    /// Adds the constraint `<u, x> = b`; `None` when the result is empty.
    pub fn with_constraint(&self, u: u64, b: bool) -> Option<Self> {
        let mut r = (u & self.amask()) | ((b as u64) << self.n);
        for &row in &self.rows {
            let p = row.trailing_zeros();
            if (r >> p) & 1 == 1 {
                r ^= row;
            }
        }
        if r & self.amask() == 0 {
            return if r == 0 { Some(self.clone()) } else { None };
        }
        let p = r.trailing_zeros();
        let mut rows: Vec<u64> = self
            .rows
            .iter()
            .map(|&row| if (row >> p) & 1 == 1 { row ^ r } else { row })
            .collect();
        rows.push(r);
        rows.sort_unstable();
        Some(AffineSubspace { n: self.n, rows })
    }

    pub fn contains(&self, x: u64) -> bool {
        self.rows
            .iter()
            .all(|&row| dot(row & self.amask(), x) == ((row >> self.n) & 1 == 1))
    }

    /// Some point of the subspace: free coordinates 0, pivots solved.
    pub fn base_point(&self) -> u64 {
        let mut x = 0;
        for &row in &self.rows {
            if (row >> self.n) & 1 == 1 {
                x |= 1 << row.trailing_zeros();
            }
        }
        x
    }

    /// All points, increasing.
    pub fn points(&self) -> Vec<u64> {
        (0..1u64 << self.n).filter(|&x| self.contains(x)).collect()
    }
}

impl fmt::Debug for AffineSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|&r| format!("{}|{}", vec_string(r, self.n), (r >> self.n) & 1))
            .collect();
        write!(f, "AffineSubspace(n={}, [{}])", self.n, rows.join(", "))
    }
}

/// A split of a lattice node by `<u, x> = 0` (child `zero`) or `= 1` (`one`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeEdge {
    pub u: u64,
    pub zero: u32,
    pub one: u32,
}

/// Layered DAG of affine subspaces; layer `i` holds dimension `n - i`.
#[derive(Clone, Debug)]
pub struct LatticeGraph {
    n: usize,
    max_weight: Option<usize>,
    nodes: Vec<AffineSubspace>,
    edges: Vec<Vec<LatticeEdge>>,
    layer_starts: Vec<usize>,
}

impl LatticeGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.max_weight
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: usize) -> &AffineSubspace {
        &self.nodes[id]
    }

    pub fn edges(&self, id: usize) -> &[LatticeEdge] {
        &self.edges[id]
    }

    pub fn layer_count(&self) -> usize {
        self.layer_starts.len() - 1
    }

    pub fn layer(&self, i: usize) -> std::ops::Range<usize> {
        self.layer_starts[i]..self.layer_starts[i + 1]
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        (0..self.layer_count()).map(|i| self.layer(i).len()).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }
}

/// Caps for lattice construction: unbounded tests up to 6 variables,
/// weight-1 tests up to 12, heavier bounded weights up to 7.
pub(crate) fn check_lattice_cap(n: usize, max_weight: Option<usize>) -> Result<()> {
    match max_weight {
        Some(w) if w < n => cap("affine lattice", n, if w <= 1 { 12 } else { 7 }),
        _ => cap("affine lattice", n, 6),
    }
}

/// Builds every affine subspace reachable from the full space by tests of
/// Hamming weight at most `max_weight` (`None`: unbounded).
pub fn build_affine_lattice(n: usize, max_weight: Option<usize>) -> Result<LatticeGraph> {
    check_lattice_cap(n, max_weight)?;
    if max_weight == Some(0) {
        return Err(crate::Error::InvalidArgument("max_weight must be >= 1".into()));
    }
    let w = max_weight.unwrap_or(n).min(n);
    let tests: Vec<u64> = (1u64..1 << n)
        .filter(|u| u.count_ones() as usize <= w)
        .collect();
    let mut nodes = vec![AffineSubspace::full(n)];
    let mut edges: Vec<Vec<LatticeEdge>> = Vec::new();
    let mut layer_starts = vec![0, 1];
    for _ in 0..n {
        let (lo, hi) = (layer_starts[layer_starts.len() - 2], nodes.len());
        let mut index: HashMap<AffineSubspace, u32> = HashMap::new();
        for id in lo..hi {
            let v = nodes[id].clone();
            let mut seen: Vec<u64> = Vec::new();
            let mut out = Vec::new();
            for &u in &tests {
                let rep = v.reduce_vec(u);
                if rep == 0 || seen.contains(&rep) {
                    continue;
                }
                seen.push(rep);
                let mut child = |b: bool| {
                    let s = v.with_constraint(u, b).expect("independent test");
                    let next = nodes.len() as u32;
                    *index.entry(s).or_insert_with_key(|s| {
                        nodes.push(s.clone());
                        next
                    })
                };
                let zero = child(false);
                let one = child(true);
                out.push(LatticeEdge { u, zero, one });
            }
            edges.push(out);
        }
        layer_starts.push(nodes.len());
    }
    // bottom layer has no outgoing edges
    edges.resize(nodes.len(), Vec::new());
    Ok(LatticeGraph {
        n,
        max_weight,
        nodes,
        edges,
        layer_starts,
    })
}
