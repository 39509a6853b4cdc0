//! Decision-tree family: plain decision trees, linear (parity) decision
//! trees, symmetric read-once trees, trees over a fixed test family and
//! linear decision lists.

use std::fmt;

use serde::Serialize;

use crate::truth_table::TruthTable;

mod dt;
mod family;
mod lattice;
mod ldl;
mod ldt;
mod meta;
mod srodt;

pub use dt::{minimize_dt, DT_CAP};
pub use family::decide_test_family_tree;
pub use lattice::{build_affine_lattice, AffineSubspace, LatticeEdge, LatticeGraph, LinearTest};
pub use ldl::{ldl_size_lower_bound, minimize_ldl, model_minimize_ldl, LinearDecisionList, LDL_CAP};
pub use ldt::{lattice_cap, minimize_ldt, minimize_ldt_c, minimize_ldt_on};
pub use meta::{minimize_fixed_tests, FixedTest, META_NODE_CAP};
pub use srodt::{minimize_srodt, SymTest, SRODT_CAP};

/// A node test: decides which child an assignment (table index) takes.
pub trait NodeTest {
    fn holds(&self, x: usize) -> bool;
    fn label(&self, n: usize) -> String;
}

/// Binary tree; `zero` is taken when the test fails, `one` when it holds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree<T> {
    Leaf(bool),
    Node {
        test: T,
        zero: Box<Tree<T>>,
        one: Box<Tree<T>>,
    },
}

pub type DecisionTree = Tree<usize>;
pub type LinearDecisionTree = Tree<LinearTest>;
pub type SymmetricTree = Tree<SymTest>;
pub type FixedTestTree = Tree<FixedTest>;

impl<T> Tree<T> {
    pub fn node(test: T, zero: Tree<T>, one: Tree<T>) -> Self {
        Tree::Node {
            test,
            zero: Box::new(zero),
            one: Box::new(one),
        }
    }

    /// Inner nodes plus leaves.
    pub fn size(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node { zero, one, .. } => 1 + zero.size() + one.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node { zero, one, .. } => 1 + zero.depth().max(one.depth()),
        }
    }

    pub fn tests(&self) -> Vec<&T> {
        let mut out = Vec::new();
        self.collect_tests(&mut out);
        out
    }

    fn collect_tests<'a>(&'a self, out: &mut Vec<&'a T>) {
        if let Tree::Node { test, zero, one } = self {
            out.push(test);
            zero.collect_tests(out);
            one.collect_tests(out);
        }
    }
}

impl<T: NodeTest> Tree<T> {
    pub fn eval(&self, x: usize) -> bool {
        let mut t = self;
        loop {
            match t {
                Tree::Leaf(v) => return *v,
                Tree::Node { test, zero, one } => {
                    t = if test.holds(x) { one } else { zero };
                }
            }
        }
    }

    pub fn to_table(&self, n: usize) -> TruthTable {
        TruthTable::from_fn(n, |x| self.eval(x))
    }

    /// `(node TEST ZERO ONE)` / `(leaf v)`.
    pub fn sexpr(&self, n: usize) -> String {
        let mut s = String::new();
        self.write_sexpr(n, &mut s);
        s
    }

    fn write_sexpr(&self, n: usize, out: &mut String) {
        match self {
            Tree::Leaf(v) => out.push_str(if *v { "(leaf 1)" } else { "(leaf 0)" }),
            Tree::Node { test, zero, one } => {
                out.push_str("(node ");
                out.push_str(&test.label(n));
                out.push(' ');
                zero.write_sexpr(n, out);
                out.push(' ');
                one.write_sexpr(n, out);
                out.push(')');
            }
        }
    }

    pub fn report(&self, n: usize) -> TreeReport {
        TreeReport {
            sexpr: self.sexpr(n),
            size: self.size(),
            depth: self.depth(),
        }
    }
}

/// Serializable summary of a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeReport {
    pub sexpr: String,
    pub size: usize,
    pub depth: usize,
}

impl NodeTest for usize {
    fn holds(&self, x: usize) -> bool {
        (x >> self) & 1 == 1
    }

    fn label(&self, _n: usize) -> String {
        format!("(var {})", self + 1)
    }
}

impl fmt::Display for Tree<usize> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sexpr(0))
    }
}
