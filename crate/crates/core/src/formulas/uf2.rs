use super::dnf::{find_unate_orientation, minimize_unate_cnf, minimize_unate_dnf};
use super::rof::decompositions;
use super::{Formula, Gate};
use crate::error::Result;
use crate::truth_table::TruthTable;

/// Minimal unate formula of order 2 by leaf count. Candidates are the unate
/// DNF, the unate CNF and the recursive and/or decomposition, preferred in
/// that order on equal size.
pub fn minimize_uf2(tt: &TruthTable) -> Result<Formula> {
    find_unate_orientation(tt)?;
    let (g, vars) = tt.reduce_to_support();
    if g.n() == 0 {
        return Ok(Formula::Const(tt.get(0)));
    }
    uf2_rec(&g, &vars)
}

fn uf2_rec(g: &TruthTable, vars: &[usize]) -> Result<Formula> {
    if g.n() == 1 {
        return Ok(Formula::lit(vars[0], !g.get(1)));
    }
    let mut best = minimize_unate_dnf(g)?.to_formula().relabel(vars);
    let cnf = minimize_unate_cnf(g)?.to_formula().relabel(vars);
    if cnf.leaf_count() < best.leaf_count() {
        best = cnf;
    }
    let d = decompositions(g, false)?;
    let split = match (d.and, d.or) {
        (Some(dec), _) => Some((Gate::And, dec)),
        (_, Some(dec)) => Some((Gate::Or, dec)),
        _ => None,
    };
    if let Some((op, dec)) = split {
        let mut children = Vec::with_capacity(dec.factors.len());
        for (f, b) in dec.factors.iter().zip(&dec.blocks) {
            let sv: Vec<usize> = b.iter().map(|&i| vars[i]).collect();
            children.push(uf2_rec(f, &sv)?);
        }
        let cand = Formula::gate(op, children);
        if cand.leaf_count() < best.leaf_count() {
            best = cand;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Reject;

    #[test]
    fn uf2_examples() {
        let x = |i| TruthTable::var(4, i);
        let g = x(0).or(&x(1)).and(&x(2).or(&x(3)));
        let f = minimize_uf2(&g).unwrap();
        assert_eq!(f.leaf_count(), 4);
        assert_eq!(f.to_table(4), g);
        let maj = TruthTable::majority(3);
        let f = minimize_uf2(&maj).unwrap();
        assert_eq!(f.leaf_count(), 6);
        assert_eq!(f.to_table(3), maj);
        assert_eq!(minimize_uf2(&TruthTable::and_all(2)).unwrap().leaf_count(), 2);
        assert_eq!(
            minimize_uf2(&TruthTable::parity(2)).unwrap_err().reject(),
            Some(Reject::NotUnate)
        );
        assert_eq!(minimize_uf2(&TruthTable::constant_n(3, true)).unwrap(), Formula::Const(true));
    }

    #[test]
    fn uf2_mixed_depth() {
        // x1 & (x2 | x3x4 | x3x5) is read-once: x1 & (x2 | x3 & (x4 | x5))
        let x = |i| TruthTable::var(5, i);
        let g = x(0).and(&x(1).or(&x(2).and(&x(3))).or(&x(2).and(&x(4))));
        let f = minimize_uf2(&g).unwrap();
        assert_eq!(f.to_table(5), g);
        assert_eq!(f.leaf_count(), 5);
    }
}
