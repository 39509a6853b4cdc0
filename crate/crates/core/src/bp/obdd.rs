use std::collections::HashMap;
use std::fmt::{self, Write};

use serde::Serialize;

use super::BranchingProgram;
use crate::error::{Error, Result};
use crate::truth_table::TruthTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeRef {
    Terminal(bool),
    Node(u32),
}

impl fmt::Display for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeRef::Terminal(v) => write!(f, "T{}", *v as u8),
            NodeRef::Node(i) => write!(f, "{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ObddNode {
    pub var: usize,
    pub lo: NodeRef,
    pub hi: NodeRef,
}

/// Reduced OBDD. Nodes are numbered layer by layer, root first; `layers[k]`
/// lists the nodes testing `order[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obdd {
    pub n: usize,
    pub order: Vec<usize>,
    pub root: NodeRef,
    pub nodes: Vec<ObddNode>,
    pub layers: Vec<Vec<u32>>,
}

pub(crate) fn check_order(n: usize, order: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::InvalidArgument(format!(
            "order has {} entries, expected {n}",
            order.len()
        )));
    }
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::InvalidArgument(format!("order is not a permutation of 1..{n}")));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Builds the reduced OBDD of `tt` testing `order[0]` first.
pub fn obdd_build(tt: &TruthTable, order: &[usize]) -> Result<Obdd> {
    let n = tt.n();
    check_order(n, order)?;
    // bit k of the permuted table is variable order[k]
    let permuted = TruthTable::from_fn(n, |y| {
        let x = order.iter().enumerate().fold(0, |acc, (k, &v)| acc | (y >> k & 1) << v);
        tt.get(x)
    });
    let mut b = Builder {
        order,
        memo: HashMap::new(),
        unique: HashMap::new(),
        raw: Vec::new(),
        level: Vec::new(),
    };
    let root = b.mk(0, &permuted);
    Ok(b.finish(n, root))
}

struct Builder<'a> {
    order: &'a [usize],
    memo: HashMap<TruthTable, NodeRef>,
    unique: HashMap<ObddNode, u32>,
    raw: Vec<ObddNode>,
    level: Vec<usize>,
}

impl Builder<'_> {
    fn mk(&mut self, k: usize, g: &TruthTable) -> NodeRef {
        if let Some(v) = g.constant_value() {
            return NodeRef::Terminal(v);
        }
        if let Some(&r) = self.memo.get(g) {
            return r;
        }
        let lo = self.mk(k + 1, &g.restrict_var(0, false));
        let hi = self.mk(k + 1, &g.restrict_var(0, true));
        let r = if lo == hi {
            lo
        } else {
            let node = ObddNode {
                var: self.order[k],
                lo,
                hi,
            };
            let next = self.raw.len() as u32;
            let id = *self.unique.entry(node).or_insert(next);
            if id == next {
                self.raw.push(node);
                self.level.push(k);
            }
            NodeRef::Node(id)
        };
        self.memo.insert(g.clone(), r);
        r
    }

    /// Renumbers nodes by layer, breadth-first discovery order within a
    /// layer.
    fn finish(self, n: usize, root: NodeRef) -> Obdd {
        let mut bfs: Vec<u32> = Vec::new();
        let mut seen = vec![false; self.raw.len()];
        if let NodeRef::Node(r) = root {
            bfs.push(r);
            seen[r as usize] = true;
        }
        let mut i = 0;
        while i < bfs.len() {
            let nd = self.raw[bfs[i] as usize];
            i += 1;
            for c in [nd.lo, nd.hi] {
                if let NodeRef::Node(c) = c {
                    if !seen[c as usize] {
                        seen[c as usize] = true;
                        bfs.push(c);
                    }
                }
            }
        }
        bfs.sort_by_key(|&id| self.level[id as usize]);
        let order_ids = bfs;
        let mut new_id = vec![u32::MAX; self.raw.len()];
        let mut layers: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (k, &old) in order_ids.iter().enumerate() {
            new_id[old as usize] = k as u32;
            layers[self.level[old as usize]].push(k as u32);
        }
        let map = |r: NodeRef| match r {
            NodeRef::Node(i) => NodeRef::Node(new_id[i as usize]),
            t => t,
        };
        let nodes = order_ids
            .iter()
            .map(|&old| {
                let nd = self.raw[old as usize];
                ObddNode {
                    var: nd.var,
                    lo: map(nd.lo),
                    hi: map(nd.hi),
                }
            })
            .collect();
        Obdd {
            n,
            order: self.order.to_vec(),
            root: map(root),
            nodes,
            layers,
        }
    }
}

impl Obdd {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn widths(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn max_width(&self) -> usize {
        self.widths().into_iter().max().unwrap_or(0)
    }

    /// One line per node, `id x<var> lo hi`, after a `root` line.
    pub fn to_text(&self) -> String {
        let mut s = format!("root {}\n", self.root);
        for (i, nd) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "{i} x{} {} {}", nd.var + 1, nd.lo, nd.hi);
        }
        s
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph obdd {\n  T0 [shape=box,label=\"0\"];\n  T1 [shape=box,label=\"1\"];\n");
        let name = |r: NodeRef| match r {
            NodeRef::Terminal(v) => format!("T{}", v as u8),
            NodeRef::Node(i) => format!("n{i}"),
        };
        for (i, nd) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"x{}\"];", nd.var + 1);
            let _ = writeln!(s, "  n{i} -> {} [style=dashed];", name(nd.lo));
            let _ = writeln!(s, "  n{i} -> {};", name(nd.hi));
        }
        s.push_str("}\n");
        s
    }
}

impl BranchingProgram for Obdd {
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bp::eval_bp;

    #[test]
    fn build_examples() {
        let and = TruthTable::and_all(2);
        let b = obdd_build(&and, &[0, 1]).unwrap();
        assert_eq!(b.size(), 2);
        assert!(!eval_bp(&b, 0b10));
        assert_eq!(b.to_text(), "root 0\n0 x1 T0 1\n1 x2 T0 T1\n");
        let p = TruthTable::parity(2);
        for order in [[0, 1], [1, 0]] {
            let b = obdd_build(&p, &order).unwrap();
            assert_eq!(b.size(), 3);
            assert_eq!(b.widths(), vec![1, 2]);
            assert!(!eval_bp(&b, 0b11));
        }
        let one = TruthTable::constant_n(3, true);
        assert_eq!(obdd_build(&one, &[2, 0, 1]).unwrap().size(), 0);
        assert!(obdd_build(&and, &[0, 0]).is_err());
        assert!(obdd_build(&and, &[0]).is_err());
    }

    #[test]
    fn evaluates_and_is_reduced() {
        let f = TruthTable::from_fn(4, |x| (x * 7 + 3) % 5 < 2);
        let b = obdd_build(&f, &[3, 1, 0, 2]).unwrap();
        for x in 0..16 {
            assert_eq!(b.eval(x), f.get(x));
        }
        let mut seen = std::collections::HashSet::new();
        for nd in &b.nodes {
            assert_ne!(nd.lo, nd.hi);
            assert!(seen.insert(*nd));
        }
        assert!(b.to_dot().starts_with("digraph"));
    }
}
