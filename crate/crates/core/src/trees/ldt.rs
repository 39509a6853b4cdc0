use super::lattice::{check_lattice_cap, LatticeGraph, LinearTest};
use super::{LinearDecisionTree, Tree};
use crate::error::{Error, Result};
use crate::par::{map_range, Exec};
use crate::truth_table::TruthTable;

const MIXED: u8 = 2;

/// Largest `n` accepted for tests of weight at most `max_weight`.
pub fn lattice_cap(max_weight: Option<usize>) -> usize {
    (1..=12)
        .rev()
        .find(|&n| check_lattice_cap(n, max_weight).is_ok())
        .unwrap_or(0)
}

/// Minimum-size linear decision tree over unrestricted parity tests.
pub fn minimize_ldt(tt: &TruthTable) -> Result<LinearDecisionTree> {
    let g = super::build_affine_lattice(tt.n(), None)?;
    minimize_ldt_on(&g, tt, Exec::default())
}

/// Minimum-size linear decision tree whose tests have weight at most `c`.
pub fn minimize_ldt_c(tt: &TruthTable, c: usize) -> Result<LinearDecisionTree> {
    let g = super::build_affine_lattice(tt.n(), Some(c))?;
    minimize_ldt_on(&g, tt, Exec::default())
}

/// Bottom-up dynamic program on a prebuilt lattice: a node is a leaf when
/// the function is constant on it, otherwise the best split among its
/// outgoing edges (first minimum in edge order).
pub fn minimize_ldt_on(g: &LatticeGraph, tt: &TruthTable, exec: Exec) -> Result<LinearDecisionTree> {
    if tt.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: tt.n(),
        });
    }
    let total = g.node_count();
    let mut status = vec![0u8; total];
    let mut size = vec![0u32; total];
    let mut choice = vec![u32::MAX; total];
    for layer in (0..g.layer_count()).rev() {
        let range = g.layer(layer);
        let start = range.start;
        let rows = map_range(exec, range, |id| {
            let edges = g.edges(id);
            if edges.is_empty() {
                let x = g.node(id).base_point() as usize;
                return (tt.get(x) as u8, 1, u32::MAX);
            }
            let e0 = edges[0];
            let (a, b) = (status[e0.zero as usize], status[e0.one as usize]);
            if a == b && a != MIXED {
                return (a, 1, u32::MAX);
            }
            let mut best = (u32::MAX, u32::MAX);
            for (k, e) in edges.iter().enumerate() {
                let c = 1 + size[e.zero as usize] + size[e.one as usize];
                if c < best.0 {
                    best = (c, k as u32);
                }
            }
            (MIXED, best.0, best.1)
        });
        for (k, (st, sz, ch)) in rows.into_iter().enumerate() {
            status[start + k] = st;
            size[start + k] = sz;
            choice[start + k] = ch;
        }
    }
    Ok(rebuild(g, 0, &status, &choice))
}

fn rebuild(g: &LatticeGraph, id: usize, status: &[u8], choice: &[u32]) -> LinearDecisionTree {
    if status[id] != MIXED {
        return Tree::Leaf(status[id] == 1);
    }
    let e = g.edges(id)[choice[id] as usize];
    Tree::node(
        LinearTest::new(e.u, true),
        rebuild(g, e.zero as usize, status, choice),
        rebuild(g, e.one as usize, status, choice),
    )
}
