//! Branching programs: reduced OBDDs under a fixed order, optimal variable
//! ordering, and read-once branching programs.

mod mubp;
mod obdd;
mod order;

pub use mubp::{mubp_construct, MuBp, MUBP_CAP};
pub use obdd::{obdd_build, NodeRef, Obdd, ObddNode};
pub use order::{obdd_optimal_order, obdd_optimal_order_with, OrderResult, ORDER_CAP};

/// A program that maps an assignment (bit `i` of `x` is `x_{i+1}`) to a bit.
pub trait BranchingProgram {
    fn eval(&self, x: usize) -> bool;
    fn node_count(&self) -> usize;
}

pub fn eval_bp<P: BranchingProgram + ?Sized>(program: &P, x: usize) -> bool {
    program.eval(x)
}
