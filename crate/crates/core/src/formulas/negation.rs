use super::rof::{minimize_boolean_rof, negate_leaves, no_neg, reduced};
use super::{Formula, Gate};
use crate::error::{cap, Error, Reject, Result};
use crate::par::{self, Exec};
use crate::truth_table::TruthTable;

pub const ROF_NEG_CAP: usize = 16;
pub const ROF_XOR_NEG_CAP: usize = 12;

#[derive(Clone, Debug)]
enum Kind {
    Leaf(usize),
    Gate(Gate, Vec<usize>),
}

/// Formula skeleton with a negation bit on every edge; the root's bit is
/// the output edge.
#[derive(Clone, Debug)]
struct Skeleton {
    kind: Vec<Kind>,
    parent: Vec<Option<usize>>,
    neg: Vec<bool>,
    /// and/or nodes, the flip candidates
    flippable: Vec<usize>,
    gates: usize,
}

impl Skeleton {
    fn from_formula(f: &Formula) -> Result<Self> {
        let mut s = Skeleton {
            kind: Vec::new(),
            parent: Vec::new(),
            neg: Vec::new(),
            flippable: Vec::new(),
            gates: 0,
        };
        s.add(f, None, false)?;
        Ok(s)
    }

    fn add(&mut self, f: &Formula, parent: Option<usize>, neg: bool) -> Result<usize> {
        match f {
            Formula::Not(inner) => self.add(inner, parent, !neg),
            Formula::Const(_) => Err(Error::InvalidArgument("constant inside read-once formula".into())),
            Formula::Lit { var, neg: n } => Ok(self.push(Kind::Leaf(*var), parent, neg ^ n)),
            Formula::Gate { op, children } => {
                let id = self.push(Kind::Gate(*op, Vec::new()), parent, neg);
                self.gates += 1;
                if *op != Gate::Xor {
                    self.flippable.push(id);
                }
                let mut ids = Vec::with_capacity(children.len());
                for c in children {
                    ids.push(self.add(c, Some(id), false)?);
                }
                self.kind[id] = Kind::Gate(*op, ids);
                Ok(id)
            }
        }
    }

    fn push(&mut self, k: Kind, parent: Option<usize>, neg: bool) -> usize {
        self.kind.push(k);
        self.parent.push(parent);
        self.neg.push(neg);
        self.kind.len() - 1
    }

    fn is_xor(&self, v: usize) -> bool {
        matches!(self.kind[v], Kind::Gate(Gate::Xor, _))
    }

    /// Edge negations after flipping the and/or nodes selected by `mask`,
    /// and the resulting size.
    fn flipped(&self, mask: u64) -> (Vec<bool>, usize) {
        let mut in_s = vec![false; self.kind.len()];
        for (k, &v) in self.flippable.iter().enumerate() {
            in_s[v] = mask >> k & 1 == 1;
        }
        let neg: Vec<bool> = (0..self.kind.len())
            .map(|v| self.neg[v] ^ in_s[v] ^ self.parent[v].is_some_and(|p| in_s[p]))
            .collect();
        let mut cost = self.gates;
        let mut xor_parity = vec![false; self.kind.len()];
        for v in 0..self.kind.len() {
            let x_parent = self.parent[v].filter(|&p| self.is_xor(p));
            let x_self = self.is_xor(v).then_some(v);
            debug_assert!(x_parent.is_none() || x_self.is_none());
            match x_parent.or(x_self) {
                Some(x) => xor_parity[x] ^= neg[v],
                None => cost += neg[v] as usize,
            }
        }
        cost += xor_parity.iter().filter(|&&b| b).count();
        (neg, cost)
    }

    /// Best flip set: smallest size, then smallest mask.
    fn best(&self, exec: Exec) -> (u64, usize) {
        let k = self.flippable.len();
        let costs = par::map_range(exec, 0..1usize << k, |m| self.flipped(m as u64).1);
        let (m, c) = costs
            .iter()
            .enumerate()
            .min_by_key(|&(m, &c)| (c, m))
            .expect("nonempty");
        (m as u64, *c)
    }

    /// Formula with flips in `mask` applied; negations at xor gates are
    /// reduced to their parity, which is placed on the gate's output edge.
    fn materialize(&self, mask: u64) -> Formula {
        let (mut neg, _) = self.flipped(mask);
        for v in 0..self.kind.len() {
            if let Kind::Gate(Gate::Xor, ch) = &self.kind[v] {
                for &c in ch {
                    neg[v] ^= neg[c];
                    neg[c] = false;
                }
            }
        }
        let mut in_s = vec![false; self.kind.len()];
        for (k, &v) in self.flippable.iter().enumerate() {
            in_s[v] = mask >> k & 1 == 1;
        }
        self.build(0, &neg, &in_s)
    }

    fn build(&self, v: usize, neg: &[bool], in_s: &[bool]) -> Formula {
        let f = match &self.kind[v] {
            Kind::Leaf(var) => Formula::lit(*var, false),
            Kind::Gate(op, ch) => Formula::Gate {
                op: if in_s[v] { op.dual().expect("and/or") } else { *op },
                children: ch.iter().map(|&c| self.build(c, neg, in_s)).collect(),
            },
        };
        if neg[v] {
            Formula::not(f)
        } else {
            f
        }
    }
}

/// Minimal read-once and/or formula with positive leaves and costed
/// negation gates; size is the gate count including negations.
pub fn minimize_rof_neg(tt: &TruthTable) -> Result<Formula> {
    minimize_rof_neg_with(tt, Exec::default())
}

pub fn minimize_rof_neg_with(tt: &TruthTable, exec: Exec) -> Result<Formula> {
    let (g, _) = reduced(tt)?;
    cap("costly-negation read-once formula", g.n(), ROF_NEG_CAP)?;
    let sk = Skeleton::from_formula(&minimize_boolean_rof(tt)?)?;
    let (mask, _) = sk.best(exec);
    Ok(sk.materialize(mask))
}

/// Minimal read-once and/or/xor formula with positive leaves and costed
/// negation gates, over all leaf-negation patterns `a` and flip sets.
pub fn minimize_rof_xor_neg(tt: &TruthTable) -> Result<Formula> {
    minimize_rof_xor_neg_with(tt, Exec::default())
}

pub fn minimize_rof_xor_neg_with(tt: &TruthTable, exec: Exec) -> Result<Formula> {
    let (g, vars) = reduced(tt)?;
    let n = g.n();
    cap("costly-negation xor read-once formula", n, ROF_XOR_NEG_CAP)?;
    let results = par::map_range(exec, 0..1usize << n, |a| -> Result<Option<(usize, Skeleton, u64)>> {
        let Some(f) = no_neg(&g.shift_inputs(a), &vars)? else {
            return Ok(None);
        };
        // leaf negations of the reduced pattern, in original indices
        let a_orig = vars.iter().enumerate().fold(0, |acc, (k, &v)| acc | (a >> k & 1) << v);
        let sk = Skeleton::from_formula(&negate_leaves(&f, a_orig))?;
        let (mask, cost) = sk.best(Exec::Sequential);
        Ok(Some((cost, sk, mask)))
    });
    let mut best: Option<(usize, Skeleton, u64)> = None;
    for r in results {
        if let Some(c) = r? {
            if best.as_ref().is_none_or(|b| c.0 < b.0) {
                best = Some(c);
            }
        }
    }
    let (_, sk, mask) = best.ok_or(Reject::NoNegationFreeForm)?;
    Ok(sk.materialize(mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rof_neg_examples() {
        let nor = TruthTable::from_fn(2, |x| x == 0);
        let f = minimize_rof_neg(&nor).unwrap();
        assert_eq!(f.sexpr(), "(not (or x1 x2))");
        assert_eq!(f.gate_count(), 2);
        let and = TruthTable::and_all(2);
        let f = minimize_rof_neg(&and).unwrap();
        assert_eq!(f.sexpr(), "(and x1 x2)");
        let nx = TruthTable::var(1, 0).not();
        let f = minimize_rof_neg(&nx).unwrap();
        assert_eq!(f.sexpr(), "(not x1)");
        assert_eq!(f.gate_count(), 1);
        assert!(minimize_rof_neg(&TruthTable::parity(2)).is_err());
    }

    #[test]
    fn rof_xor_neg_examples() {
        let nand = TruthTable::and_all(2).not();
        let f = minimize_rof_xor_neg(&nand).unwrap();
        assert_eq!(f.sexpr(), "(not (and x1 x2))");
        assert_eq!(f.gate_count(), 2);
        let f = minimize_rof_xor_neg(&TruthTable::parity(2)).unwrap();
        assert_eq!(f.sexpr(), "(xor x1 x2)");
        let f = minimize_rof_xor_neg(&TruthTable::parity(2).not()).unwrap();
        assert_eq!(f.gate_count(), 2);
        assert_eq!(f.to_table(2), TruthTable::parity(2).not());
        assert_eq!(
            minimize_rof_xor_neg(&TruthTable::majority(3)).unwrap_err().reject(),
            Some(Reject::NoNegationFreeForm)
        );
    }

    #[test]
    fn flips_preserve_function() {
        let x = |i| TruthTable::var(4, i);
        let g = x(0).and(&x(1).not()).or(&x(2).xor(&x(3)).not());
        let f = minimize_rof_xor_neg(&g).unwrap();
        assert_eq!(f.to_table(4), g);
        assert!(f.is_read_once());
        assert!(f.vars().len() == 4);
        let sk = Skeleton::from_formula(&super::super::minimize_rof_xor(&g).unwrap()).unwrap();
        for m in 0..1u64 << sk.flippable.len() {
            let h = sk.materialize(m);
            assert_eq!(h.to_table(4), g);
            assert_eq!(h.gate_count(), sk.flipped(m).1);
        }
    }
}
