use super::rof::decompositions;
use super::{Formula, Gate};
use crate::error::{Reject, Result};
use crate::gf2::{dot, XorBasis};
use crate::mlpoly::to_multilinear;
use crate::truth_table::TruthTable;

fn monomial(m: usize, vars: &[usize]) -> Formula {
    if m == 0 {
        return Formula::Const(true);
    }
    let lits = (0..vars.len())
        .filter(|&k| m >> k & 1 == 1)
        .map(|k| Formula::lit(vars[k], false))
        .collect();
    Formula::gate(Gate::And, lits)
}

/// Sum over GF(2) with all constant children folded into one trailing
/// constant.
fn sum(children: Vec<Formula>, c: bool) -> Formula {
    let mut parity = c;
    let mut parts = Vec::new();
    for ch in children {
        match ch {
            Formula::Gate { op: Gate::Xor, children } => {
                for g in children {
                    match g {
                        Formula::Const(v) => parity ^= v,
                        other => parts.push(other),
                    }
                }
            }
            Formula::Const(v) => parity ^= v,
            other => parts.push(other),
        }
    }
    if parity {
        parts.push(Formula::Const(true));
    }
    match parts.len() {
        0 => Formula::Const(false),
        1 => parts.pop().unwrap(),
        _ => Formula::Gate {
            op: Gate::Xor,
            children: parts,
        },
    }
}

fn sigma_on(g: &TruthTable, vars: &[usize]) -> Formula {
    let p = to_multilinear(g);
    let monos: Vec<Formula> = p.monomials().into_iter().map(|m| monomial(m, vars)).collect();
    sum(monos, false)
}

/// The multilinear polynomial as a sum of monomials; leaves are the total
/// degree.
pub fn sigma2a(tt: &TruthTable) -> Formula {
    let vars: Vec<usize> = (0..tt.n()).collect();
    sigma_on(tt, &vars)
}

/// Basis of the span of `vectors` with minimum total Hamming weight:
/// vectors sorted by weight then value, kept when independent.
pub fn min_weight_basis(vectors: &[u64]) -> Vec<u64> {
    let mut sorted: Vec<u64> = vectors.iter().copied().filter(|&v| v != 0).collect();
    sorted.sort_unstable_by_key(|&v| (v.count_ones(), v));
    sorted.dedup();
    let mut basis = XorBasis::new();
    sorted.into_iter().filter(|&v| basis.insert(v)).collect()
}

fn pi_on(g: &TruthTable, vars: &[usize]) -> Result<Formula> {
    let n = g.n();
    let Some(x0) = g.ones().next() else {
        return Err(Reject::NotAffine.into());
    };
    let mut dirs = XorBasis::new();
    for x in g.ones() {
        dirs.insert((x ^ x0) as u64);
    }
    if g.count_ones() != 1u64 << dirs.rank() {
        return Err(Reject::NotAffine.into());
    }
    // constraints <alpha, x> = <alpha, x0> on the support
    let alphas: Vec<u64> = (1u64..1 << n)
        .filter(|&a| dirs.rows().iter().all(|&d| !dot(a, d)))
        .collect();
    let factors = min_weight_basis(&alphas)
        .into_iter()
        .map(|a| {
            let lits = (0..n)
                .filter(|&k| a >> k & 1 == 1)
                .map(|k| Formula::lit(vars[k], false))
                .collect();
            sum(vec![Formula::gate(Gate::Xor, lits)], !dot(a, x0 as u64))
        })
        .collect::<Vec<_>>();
    Ok(match factors.len() {
        0 => Formula::Const(true),
        _ => Formula::gate(Gate::And, factors),
    })
}

/// Product of affine forms for the indicator of a nonempty affine subspace,
/// with the fewest variable occurrences.
pub fn minimize_pi2a(tt: &TruthTable) -> Result<Formula> {
    let vars: Vec<usize> = (0..tt.n()).collect();
    pi_on(tt, &vars)
}

/// Minimal arithmetic formula of order 2 over GF(2) by leaf count.
/// Candidates on equal size are preferred in the order: polynomial,
/// product of affine forms, the same for the complement plus one, product
/// decomposition, sum decomposition.
pub fn minimize_f2a(tt: &TruthTable) -> Result<Formula> {
    let (g, vars) = tt.reduce_to_support();
    if g.n() == 0 {
        return Ok(Formula::Const(tt.get(0)));
    }
    f2a_rec(&g, &vars)
}

fn f2a_rec(g: &TruthTable, vars: &[usize]) -> Result<Formula> {
    if g.n() == 1 {
        return Ok(sum(vec![Formula::lit(vars[0], false)], g.get(0)));
    }
    let sub = |b: &[usize]| -> Vec<usize> { b.iter().map(|&i| vars[i]).collect() };
    let mut best = sigma_on(g, vars);
    let mut consider = |cand: Formula| {
        if cand.leaf_count() < best.leaf_count() {
            best = cand;
        }
    };
    if let Ok(p) = pi_on(g, vars) {
        consider(p);
    }
    // a product of affine forms for f + 1, plus the constant
    if let Ok(p) = pi_on(&g.not(), vars) {
        consider(sum(vec![p], true));
    }
    let d = decompositions(g, true)?;
    // f = prod f_i, or f + 1 = prod f_i
    let mul = match (d.and, d.or) {
        (Some(dec), _) => Some((dec.factors, dec.blocks, false)),
        (_, Some(dec)) => Some((dec.factors.iter().map(TruthTable::not).collect(), dec.blocks, true)),
        _ => None,
    };
    if let Some((factors, blocks, b)) = mul {
        let mut children = Vec::new();
        for (f, bl) in factors.iter().zip(&blocks) {
            children.push(f2a_rec(f, &sub(bl))?);
        }
        consider(sum(vec![Formula::gate(Gate::And, children)], b));
    }
    if let Some(dec) = d.xor {
        let mut children = Vec::new();
        let mut c = dec.constant;
        for (f, bl) in dec.factors.iter().zip(&dec.blocks) {
            let sv = sub(bl);
            let t0 = f2a_rec(f, &sv)?;
            let t1 = f2a_rec(&f.not(), &sv)?;
            if t1.leaf_count() < t0.leaf_count() {
                c ^= true;
                children.push(t1);
            } else {
                children.push(t0);
            }
        }
        consider(sum(children, c));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_examples() {
        let or = TruthTable::or_all(2);
        let f = sigma2a(&or);
        assert_eq!(f.arith(), "x1 + x2 + (x1*x2)");
        assert_eq!(f.leaf_count(), 4);
        assert_eq!(sigma2a(&TruthTable::parity(3)).leaf_count(), 3);
        let one = sigma2a(&TruthTable::constant_n(2, true));
        assert_eq!(one, Formula::Const(true));
        assert_eq!(one.leaf_count(), 0);
    }

    #[test]
    fn pi_examples() {
        let and = TruthTable::and_all(2);
        let f = minimize_pi2a(&and).unwrap();
        assert_eq!(f.arith(), "x1*x2");
        let ind = TruthTable::parity(2);
        let f = minimize_pi2a(&ind).unwrap();
        assert_eq!(f.arith(), "x1 + x2");
        assert_eq!(f.leaf_count(), 2);
        assert_eq!(
            minimize_pi2a(&TruthTable::or_all(2)).unwrap_err().reject(),
            Some(Reject::NotAffine)
        );
        assert!(minimize_pi2a(&TruthTable::constant_n(2, false)).is_err());
        // x1 = x2 = x3: two weight-2 constraints
        let eq = TruthTable::from_fn(3, |x| x == 0 || x == 7);
        let f = minimize_pi2a(&eq).unwrap();
        assert_eq!(f.leaf_count(), 4);
        assert_eq!(f.to_table(3), eq);
    }

    #[test]
    fn greedy_basis() {
        assert_eq!(min_weight_basis(&[0b111, 0b011, 0b100, 0b001]), vec![0b001, 0b100, 0b011]);
    }

    #[test]
    fn f2a_examples() {
        let x = |i| TruthTable::var(3, i);
        let g = x(0).and(&x(1)).xor(&x(2));
        let f = minimize_f2a(&g).unwrap();
        assert_eq!(f.leaf_count(), 3);
        assert_eq!(f.to_table(3), g);
        let nand = TruthTable::and_all(2).not();
        let f = minimize_f2a(&nand).unwrap();
        assert_eq!(f.leaf_count(), 2);
        assert_eq!(f.to_table(2), nand);
        assert_eq!(minimize_f2a(&TruthTable::parity(3)).unwrap().leaf_count(), 3);
        // (x1 + x2 + 1)(x3 + x4): the product beats the 4-monomial expansion
        let y = |i| TruthTable::var(4, i);
        let h = y(0).xor(&y(1)).not().and(&y(2).xor(&y(3)));
        let f = minimize_f2a(&h).unwrap();
        assert_eq!(f.leaf_count(), 4);
        assert_eq!(f.to_table(4), h);
    }
}
