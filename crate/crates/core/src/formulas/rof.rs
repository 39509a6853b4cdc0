use super::{Formula, Gate};
use crate::error::{Reject, Result};
use crate::mlpoly::{and_decompose, or_decompose, xor_decompose, Decomposition};
use crate::truth_table::TruthTable;

/// Support-reduced table with the original index of each variable;
/// constants are rejected.
pub(super) fn reduced(tt: &TruthTable) -> Result<(TruthTable, Vec<usize>)> {
    if tt.is_constant() {
        return Err(Reject::Constant.into());
    }
    Ok(tt.reduce_to_support())
}

fn sub_vars(vars: &[usize], block: &[usize]) -> Vec<usize> {
    block.iter().map(|&b| vars[b]).collect()
}

/// The decompositions of a table that depends on all of its (>= 2)
/// variables.
pub(super) struct Decomps {
    pub and: Option<Decomposition>,
    pub or: Option<Decomposition>,
    pub xor: Option<Decomposition>,
}

pub(super) fn decompositions(g: &TruthTable, with_xor: bool) -> Result<Decomps> {
    let d = Decomps {
        and: and_decompose(g)?,
        or: or_decompose(g)?,
        xor: if with_xor { xor_decompose(g)? } else { None },
    };
    let fired = d.and.is_some() as u8 + d.or.is_some() as u8 + d.xor.is_some() as u8;
    assert!(fired <= 1, "more than one decomposition applies");
    Ok(d)
}

fn rof_rec(g: &TruthTable, vars: &[usize], with_xor: bool) -> Result<Formula> {
    if g.n() == 1 {
        return Ok(Formula::lit(vars[0], !g.get(1)));
    }
    let d = decompositions(g, with_xor)?;
    let (op, dec) = if let Some(dec) = d.and {
        (Gate::And, dec)
    } else if let Some(dec) = d.or {
        (Gate::Or, dec)
    } else if let Some(dec) = d.xor {
        (Gate::Xor, dec)
    } else {
        return Err(Reject::Indecomposable.into());
    };
    let mut children = Vec::with_capacity(dec.factors.len());
    for (k, (f, b)) in dec.factors.iter().zip(&dec.blocks).enumerate() {
        let f = if op == Gate::Xor && k == 0 && dec.constant {
            f.not()
        } else {
            f.clone()
        };
        children.push(rof_rec(&f, &sub_vars(vars, b), with_xor)?);
    }
    Ok(Formula::gate(op, children))
}

/// Minimal read-once formula over and/or/xor with negations only at the
/// leaves; size is the gate count.
pub fn minimize_rof_xor(tt: &TruthTable) -> Result<Formula> {
    let (g, vars) = reduced(tt)?;
    rof_rec(&g, &vars, true)
}

/// The read-once formula over and/or, unique up to child order; children
/// are ordered by their smallest variable.
pub fn minimize_boolean_rof(tt: &TruthTable) -> Result<Formula> {
    let (g, vars) = reduced(tt)?;
    rof_rec(&g, &vars, false)
}

/// Negation-free read-once formula over and/or/xor, if one exists.
pub(super) fn no_neg(g: &TruthTable, vars: &[usize]) -> Result<Option<Formula>> {
    if g.n() == 1 {
        return Ok((g.get(1) && !g.get(0)).then(|| Formula::lit(vars[0], false)));
    }
    let d = decompositions(g, true)?;
    if let Some(dec) = d.and.as_ref().or(d.or.as_ref()) {
        let op = if d.and.is_some() { Gate::And } else { Gate::Or };
        let mut children = Vec::new();
        for (f, b) in dec.factors.iter().zip(&dec.blocks) {
            match no_neg(f, &sub_vars(vars, b))? {
                Some(c) => children.push(c),
                None => return Ok(None),
            }
        }
        return Ok(Some(Formula::gate(op, children)));
    }
    if let Some(dec) = d.xor {
        let mut parity = false;
        let mut children = Vec::new();
        for (f, b) in dec.factors.iter().zip(&dec.blocks) {
            let sv = sub_vars(vars, b);
            if let Some(c) = no_neg(f, &sv)? {
                children.push(c);
            } else if let Some(c) = no_neg(&f.not(), &sv)? {
                parity ^= true;
                children.push(c);
            } else {
                return Ok(None);
            }
        }
        return Ok((parity == dec.constant).then(|| Formula::gate(Gate::Xor, children)));
    }
    Ok(None)
}

/// The read-once and/or/xor formula in which `x_i` appears negated iff
/// `a_i = 1` and no other negation occurs.
pub fn minimize_rof_xor_a(tt: &TruthTable, a: usize) -> Result<Formula> {
    let (g, vars) = reduced(&tt.shift_inputs(a))?;
    let f = no_neg(&g, &vars)?.ok_or(Reject::NoNegationFreeForm)?;
    Ok(negate_leaves(&f, a))
}

pub(super) fn negate_leaves(f: &Formula, a: usize) -> Formula {
    match f {
        Formula::Lit { var, neg } => Formula::lit(*var, *neg != (a >> var & 1 == 1)),
        Formula::Gate { op, children } => Formula::Gate {
            op: *op,
            children: children.iter().map(|c| negate_leaves(c, a)).collect(),
        },
        Formula::Not(inner) => Formula::not(negate_leaves(inner, a)),
        Formula::Const(v) => Formula::Const(*v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> TruthTable {
        TruthTable::var(n, i)
    }

    #[test]
    fn rof_xor_examples() {
        let p3 = TruthTable::parity(3);
        let f = minimize_rof_xor(&p3).unwrap();
        assert_eq!(f.sexpr(), "(xor x1 x2 x3)");
        assert_eq!(f.gate_count(), 1);
        let g = x(3, 0).and(&x(3, 1)).xor(&x(3, 2));
        let f = minimize_rof_xor(&g).unwrap();
        assert_eq!(f.gate_count(), 2);
        assert_eq!(f.to_table(3), g);
        assert_eq!(
            minimize_rof_xor(&TruthTable::majority(3)).unwrap_err().reject(),
            Some(Reject::Indecomposable)
        );
        assert_eq!(
            minimize_rof_xor(&TruthTable::constant_n(2, true)).unwrap_err().reject(),
            Some(Reject::Constant)
        );
        // constant folded into the first factor
        let np = TruthTable::parity(2).not();
        let f = minimize_rof_xor(&np).unwrap();
        assert_eq!(f.sexpr(), "(xor !x1 x2)");
    }

    #[test]
    fn boolean_rof_examples() {
        let g = x(3, 0).or(&x(3, 1)).and(&x(3, 2));
        let f = minimize_boolean_rof(&g).unwrap();
        assert_eq!(f.sexpr(), "(and (or x1 x2) x3)");
        assert_eq!(minimize_boolean_rof(&f.to_table(3)).unwrap(), f);
        assert!(minimize_boolean_rof(&TruthTable::parity(2)).is_err());
        let nx = x(1, 0).not();
        assert_eq!(minimize_boolean_rof(&nx).unwrap().sexpr(), "!x1");
        // dummy variables keep their original indices
        let h = x(4, 1).and(&x(4, 3));
        assert_eq!(minimize_boolean_rof(&h).unwrap().sexpr(), "(and x2 x4)");
    }

    #[test]
    fn rof_xor_a_examples() {
        // !x1 ^ x2 with a = 10
        let f = TruthTable::parity(2).not();
        let r = minimize_rof_xor_a(&f, 0b01).unwrap();
        assert_eq!(r.sexpr(), "(xor !x1 x2)");
        assert_eq!(r.to_table(2), f);
        assert!(minimize_rof_xor_a(&TruthTable::parity(2), 0b01).is_err());
        let and = TruthTable::and_all(2);
        assert_eq!(minimize_rof_xor_a(&and, 0).unwrap().sexpr(), "(and x1 x2)");
        assert_eq!(
            minimize_rof_xor_a(&and.not(), 0).unwrap_err().reject(),
            Some(Reject::NoNegationFreeForm)
        );
        let nand = minimize_rof_xor_a(&and.not(), 0b11).unwrap();
        assert_eq!(nand.sexpr(), "(or !x1 !x2)");
    }
}
