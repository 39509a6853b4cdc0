//! Formula-family minimizers: monotone and unate two-level forms, read-once
//! formulas (with and without xor, with costed negations), second-order
//! unate formulas and GF(2) arithmetic formulas.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::truth_table::TruthTable;

mod arith;
mod dnf;
mod negation;
mod rof;
mod uf2;

pub use arith::{min_weight_basis, minimize_f2a, minimize_pi2a, sigma2a};
pub use dnf::{
    find_unate_orientation, is_monotone, minimal_true_points, minimize_monotone_dnf,
    minimize_unate_cnf, minimize_unate_dnf, TwoLevel, TwoLevelKind, UnateOrientation,
};
pub use negation::{
    minimize_rof_neg, minimize_rof_neg_with, minimize_rof_xor_neg, minimize_rof_xor_neg_with,
    ROF_NEG_CAP, ROF_XOR_NEG_CAP,
};
pub use rof::{minimize_boolean_rof, minimize_rof_xor, minimize_rof_xor_a};
pub use uf2::minimize_uf2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Gate {
    And,
    Or,
    Xor,
}

impl Gate {
    fn name(self) -> &'static str {
        match self {
            Gate::And => "and",
            Gate::Or => "or",
            Gate::Xor => "xor",
        }
    }

    fn infix(self) -> &'static str {
        match self {
            Gate::And => " & ",
            Gate::Or => " | ",
            Gate::Xor => " ^ ",
        }
    }

    /// The De Morgan dual of a boolean gate.
    pub fn dual(self) -> Option<Gate> {
        match self {
            Gate::And => Some(Gate::Or),
            Gate::Or => Some(Gate::And),
            Gate::Xor => None,
        }
    }
}

/// Formula tree. Variables are 0-based; `Lit { neg: true }` is a negated
/// input, `Not` a negation gate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Const(bool),
    Lit { var: usize, neg: bool },
    Gate { op: Gate, children: Vec<Formula> },
    Not(Box<Formula>),
}

impl Formula {
    pub fn lit(var: usize, neg: bool) -> Self {
        Formula::Lit { var, neg }
    }

    /// Gate over `children`, absorbing children with the same gate and
    /// collapsing a single child.
    pub fn gate(op: Gate, children: Vec<Formula>) -> Self {
        let mut flat = Vec::with_capacity(children.len());
        for c in children {
            match c {
                Formula::Gate { op: o, children: cc } if o == op => flat.extend(cc),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            Formula::Gate { op, children: flat }
        }
    }

    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    /// Adds a negation gate, or removes one already on top.
    pub fn toggle(self) -> Self {
        match self {
            Formula::Not(inner) => *inner,
            other => Formula::not(other),
        }
    }

    pub fn eval(&self, x: usize) -> bool {
        match self {
            Formula::Const(v) => *v,
            Formula::Lit { var, neg } => ((x >> var) & 1 == 1) != *neg,
            Formula::Not(f) => !f.eval(x),
            Formula::Gate { op, children } => match op {
                Gate::And => children.iter().all(|c| c.eval(x)),
                Gate::Or => children.iter().any(|c| c.eval(x)),
                Gate::Xor => children.iter().fold(false, |a, c| a ^ c.eval(x)),
            },
        }
    }

    pub fn to_table(&self, n: usize) -> TruthTable {
        TruthTable::from_fn(n, |x| self.eval(x))
    }

    /// Binary-or-wider gates plus negation gates.
    pub fn gate_count(&self) -> usize {
        match self {
            Formula::Const(_) | Formula::Lit { .. } => 0,
            Formula::Not(f) => 1 + f.gate_count(),
            Formula::Gate { children, .. } => 1 + children.iter().map(Formula::gate_count).sum::<usize>(),
        }
    }

    /// Variable leaves; constants are not counted.
    pub fn leaf_count(&self) -> usize {
        match self {
            Formula::Const(_) => 0,
            Formula::Lit { .. } => 1,
            Formula::Not(f) => f.leaf_count(),
            Formula::Gate { children, .. } => children.iter().map(Formula::leaf_count).sum(),
        }
    }

    /// Negation gates plus negated literals.
    pub fn negation_count(&self) -> usize {
        match self {
            Formula::Const(_) => 0,
            Formula::Lit { neg, .. } => *neg as usize,
            Formula::Not(f) => 1 + f.negation_count(),
            Formula::Gate { children, .. } => children.iter().map(Formula::negation_count).sum(),
        }
    }

    pub fn not_gate_count(&self) -> usize {
        match self {
            Formula::Const(_) | Formula::Lit { .. } => 0,
            Formula::Not(f) => 1 + f.not_gate_count(),
            Formula::Gate { children, .. } => children.iter().map(Formula::not_gate_count).sum(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Const(_) | Formula::Lit { .. } => 0,
            Formula::Not(f) => f.depth(),
            Formula::Gate { children, .. } => {
                1 + children.iter().map(Formula::depth).max().unwrap_or(0)
            }
        }
    }

    /// Top gate, looking through negations.
    pub fn top_gate(&self) -> Option<Gate> {
        match self {
            Formula::Gate { op, .. } => Some(*op),
            Formula::Not(f) => f.top_gate(),
            _ => None,
        }
    }

    /// Variables of all leaves in left-to-right order.
    pub fn vars(&self) -> Vec<usize> {
        let mut v = Vec::new();
        self.collect_vars(&mut v);
        v
    }

    fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            Formula::Const(_) => {}
            Formula::Lit { var, .. } => out.push(*var),
            Formula::Not(f) => f.collect_vars(out),
            Formula::Gate { children, .. } => children.iter().for_each(|c| c.collect_vars(out)),
        }
    }

    pub fn is_read_once(&self) -> bool {
        let mut v = self.vars();
        let len = v.len();
        v.sort_unstable();
        v.dedup();
        v.len() == len
    }

    /// Renames variables through `map` (old index -> new index).
    pub fn relabel(&self, map: &[usize]) -> Formula {
        match self {
            Formula::Const(v) => Formula::Const(*v),
            Formula::Lit { var, neg } => Formula::lit(map[*var], *neg),
            Formula::Not(f) => Formula::not(f.relabel(map)),
            Formula::Gate { op, children } => Formula::Gate {
                op: *op,
                children: children.iter().map(|c| c.relabel(map)).collect(),
            },
        }
    }

    /// Replaces every negated literal by a negation gate over a positive one.
    pub fn lift_negations(&self) -> Formula {
        match self {
            Formula::Lit { var, neg: true } => Formula::not(Formula::lit(*var, false)),
            Formula::Const(_) | Formula::Lit { .. } => self.clone(),
            Formula::Not(f) => Formula::not(f.lift_negations()),
            Formula::Gate { op, children } => Formula::Gate {
                op: *op,
                children: children.iter().map(Formula::lift_negations).collect(),
            },
        }
    }

    /// `x1`, `!x1`, `(and ...)`, `(not ...)`, `0`/`1`.
    pub fn sexpr(&self) -> String {
        match self {
            Formula::Const(v) => (if *v { "1" } else { "0" }).to_string(),
            Formula::Lit { var, neg } => format!("{}x{}", if *neg { "!" } else { "" }, var + 1),
            Formula::Not(f) => format!("(not {})", f.sexpr()),
            Formula::Gate { op, children } => {
                let parts: Vec<String> = children.iter().map(Formula::sexpr).collect();
                format!("({} {})", op.name(), parts.join(" "))
            }
        }
    }

    /// Infix boolean rendering: `x1&x2 | !x3` style with parentheses.
    pub fn infix(&self) -> String {
        self.render(false)
    }

    /// Infix GF(2) rendering: `*` for and, `+` for xor.
    pub fn arith(&self) -> String {
        self.render(true)
    }

    fn render(&self, arith: bool) -> String {
        match self {
            Formula::Const(v) => (if *v { "1" } else { "0" }).to_string(),
            Formula::Lit { var, neg } => {
                if *neg && arith {
                    format!("(x{} + 1)", var + 1)
                } else {
                    format!("{}x{}", if *neg { "!" } else { "" }, var + 1)
                }
            }
            Formula::Not(f) => {
                if arith {
                    format!("({} + 1)", f.render(arith))
                } else {
                    format!("!{}", f.wrapped(arith))
                }
            }
            Formula::Gate { op, children } => {
                let sep = match (arith, op) {
                    (true, Gate::And) => "*",
                    (true, Gate::Xor) => " + ",
                    _ => op.infix(),
                };
                let parts: Vec<String> = children.iter().map(|c| c.wrapped(arith)).collect();
                parts.join(sep)
            }
        }
    }

    fn wrapped(&self, arith: bool) -> String {
        match self {
            Formula::Gate { .. } => format!("({})", self.render(arith)),
            _ => self.render(arith),
        }
    }

    /// Paths (child indices, looking through negations) of every and/or gate,
    /// in preorder.
    pub fn and_or_paths(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.collect_paths(&mut cur, &mut out);
        out
    }

    fn collect_paths(&self, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match self {
            Formula::Not(f) => f.collect_paths(cur, out),
            Formula::Gate { op, children } => {
                if *op != Gate::Xor {
                    out.push(cur.clone());
                }
                for (i, c) in children.iter().enumerate() {
                    cur.push(i);
                    c.collect_paths(cur, out);
                    cur.pop();
                }
            }
            _ => {}
        }
    }

    pub fn report(&self, measure: &'static str, size: usize) -> FormulaReport {
        FormulaReport {
            sexpr: self.sexpr(),
            infix: self.infix(),
            measure,
            size,
            gates: self.gate_count(),
            leaves: self.leaf_count(),
            negations: self.negation_count(),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sexpr())
    }
}

/// Serializable summary of a formula and its size under a named measure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaReport {
    pub sexpr: String,
    pub infix: String,
    pub measure: &'static str,
    pub size: usize,
    pub gates: usize,
    pub leaves: usize,
    pub negations: usize,
}

/// De Morgan flip of the and/or gate at `path` (child indices, negation
/// gates are stepped through): the label is swapped and the negation on
/// every incident edge, including the gate's output edge, is toggled.
pub fn flip(formula: &Formula, path: &[usize]) -> Result<Formula> {
    flip_at(formula.clone(), path)
}

fn flip_at(f: Formula, path: &[usize]) -> Result<Formula> {
    if path.is_empty() {
        let mut nots = 0;
        let mut core = f;
        while let Formula::Not(inner) = core {
            nots += 1;
            core = *inner;
        }
        let flipped = match core {
            Formula::Gate { op, children } => {
                let dual = op
                    .dual()
                    .ok_or_else(|| Error::InvalidArgument("flip needs an and/or gate".into()))?;
                Formula::Gate {
                    op: dual,
                    children: children.into_iter().map(Formula::toggle).collect(),
                }
            }
            _ => return Err(Error::InvalidArgument("flip needs an and/or gate".into())),
        };
        return Ok(if nots % 2 == 0 {
            Formula::not(flipped)
        } else {
            flipped
        });
    }
    match f {
        Formula::Not(inner) => Ok(Formula::not(flip_at(*inner, path)?)),
        Formula::Gate { op, mut children } => {
            let i = path[0];
            if i >= children.len() {
                return Err(Error::InvalidArgument(format!("no child {i} on flip path")));
            }
            let c = std::mem::replace(&mut children[i], Formula::Const(false));
            children[i] = flip_at(c, &path[1..])?;
            Ok(Formula::Gate { op, children })
        }
        _ => Err(Error::InvalidArgument("flip path runs past a leaf".into())),
    }
}
