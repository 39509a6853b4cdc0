use std::collections::HashSet;
use std::fmt::Write;

use serde::Serialize;

use super::obdd::{obdd_build, NodeRef, ObddNode};
use super::BranchingProgram;
use crate::error::{cap, Reject, Result};
use crate::truth_table::{TruthTable, MAX_VARS};

pub const MUBP_CAP: usize = MAX_VARS;

/// Branching program reading each variable at most once. Node `k` tests
/// `order[k]` and edges only point to later nodes or terminals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuBp {
    pub n: usize,
    pub order: Vec<usize>,
    pub root: NodeRef,
    pub nodes: Vec<ObddNode>,
}

impl MuBp {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// Same text form as an OBDD: `root r`, then `id x<var> lo hi`.
    pub fn to_text(&self) -> String {
        let mut s = format!("root {}\n", self.root);
        for (i, nd) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "{i} x{} {} {}", nd.var + 1, nd.lo, nd.hi);
        }
        s
    }
}

impl BranchingProgram for MuBp {
    fn eval(&self, x: usize) -> bool {
        let mut r = self.root;
        loop {
            match r {
                NodeRef::Terminal(v) => return v,
                NodeRef::Node(i) => {
                    let nd = &self.nodes[i as usize];
                    r = if x >> nd.var & 1 == 1 { nd.hi } else { nd.lo };
                }
            }
        }
    }

    fn node_count(&self) -> usize {
        self.nodes.len()
    }
}

/// Finds a variable order under which the reduced OBDD has at most one node
/// per level, and returns that OBDD; rejects when no order works.
///
/// Depth-first search over sets of already-read variables, smallest
/// variable first. The state keeps the distinct subfunctions left after
/// reading the set; reading `v` is allowed when at most one of them depends
/// on `v`, so the state grows by at most one function per step. Sets that
/// dead-end are memoized.
pub fn mubp_construct(tt: &TruthTable) -> Result<MuBp> {
    cap("mu-BP construction", tt.n(), MUBP_CAP)?;
    let (g, vars) = tt.reduce_to_support();
    let m = g.n();
    let mut failed = HashSet::new();
    let mut picked = Vec::with_capacity(m);
    let free: Vec<usize> = (0..m).collect();
    if !search(vec![g], &free, 0, &mut failed, &mut picked) {
        return Err(Reject::NoMuBp.into());
    }
    let mut order: Vec<usize> = picked.iter().map(|&k| vars[k]).collect();
    let support = order.clone();
    order.extend((0..tt.n()).filter(|v| !support.contains(v)));
    let obdd = obdd_build(tt, &order)?;
    debug_assert_eq!(obdd.size(), m);
    debug_assert!(obdd.max_width() <= 1);
    Ok(MuBp {
        n: tt.n(),
        order: support,
        root: obdd.root,
        nodes: obdd.nodes,
    })
}

/// `subs` are tables over the variables `free` (position `i` is reduced
/// variable `free[i]`); `read` marks the variables already placed.
fn search(
    subs: Vec<TruthTable>,
    free: &[usize],
    read: u64,
    failed: &mut HashSet<u64>,
    picked: &mut Vec<usize>,
) -> bool {
    if free.is_empty() {
        return true;
    }
    if failed.contains(&read) {
        return false;
    }
    for i in 0..free.len() {
        if subs.iter().filter(|s| s.depends_on(i)).count() > 1 {
            continue;
        }
        let mut next: Vec<TruthTable> = Vec::with_capacity(subs.len() + 1);
        for s in &subs {
            let parts = if s.depends_on(i) {
                vec![s.restrict_var(i, false), s.restrict_var(i, true)]
            } else {
                vec![s.restrict_var(i, false)]
            };
            for p in parts {
                if !next.contains(&p) {
                    next.push(p);
                }
            }
        }
        let rest: Vec<usize> = free.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
        picked.push(free[i]);
        if search(next, &rest, read | 1 << free[i], failed, picked) {
            return true;
        }
        picked.pop();
    }
    failed.insert(read);
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bp::eval_bp;

    #[test]
    fn mubp_examples() {
        let x = |i| TruthTable::var(3, i);
        let f = x(0).or(&x(1).and(&x(2)));
        let p = mubp_construct(&f).unwrap();
        assert_eq!(p.size(), 3);
        assert_eq!(p.to_text(), "root 0\n0 x1 1 T1\n1 x2 T0 2\n2 x3 T0 T1\n");
        assert!(eval_bp(&p, 0b001));
        for a in 0..8 {
            assert_eq!(p.eval(a), f.get(a));
        }
        assert_eq!(
            mubp_construct(&TruthTable::parity(2)).unwrap_err().reject(),
            Some(Reject::NoMuBp)
        );
        let nx = TruthTable::var(1, 0).not();
        let p = mubp_construct(&nx).unwrap();
        assert_eq!(p.size(), 1);
        assert_eq!(p.to_text(), "root 0\n0 x1 T1 T0\n");
        let c = mubp_construct(&TruthTable::constant_n(2, true)).unwrap();
        assert_eq!(c.size(), 0);
        assert_eq!(c.to_text(), "root T1\n");
        assert!(c.eval(3));
    }

    #[test]
    fn branching_shape() {
        // x1 ? !x3 : !x2, which no chain computes
        let f: TruthTable = "11011000".parse().unwrap();
        let p = mubp_construct(&f).unwrap();
        assert_eq!(p.order, vec![0, 1, 2]);
        assert_eq!(p.to_text(), "root 0\n0 x1 1 2\n1 x2 T1 T0\n2 x3 T1 T0\n");
        for a in 0..8 {
            assert_eq!(p.eval(a), f.get(a));
        }
    }
}
