use std::fmt;

use serde::Serialize;

use super::{Formula, Gate};
use crate::error::{Reject, Result};
use crate::gf2::vec_string;
use crate::truth_table::TruthTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TwoLevelKind {
    Dnf,
    Cnf,
}

/// DNF (terms of literals) or CNF (clauses of literals). Each term is a
/// pair of masks: positive literals, negated literals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoLevel {
    pub kind: TwoLevelKind,
    pub n: usize,
    pub terms: Vec<(u64, u64)>,
}

impl TwoLevel {
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.terms
            .iter()
            .map(|(p, q)| (p.count_ones() + q.count_ones()) as usize)
            .sum()
    }

    pub fn eval(&self, x: usize) -> bool {
        let x = x as u64;
        match self.kind {
            TwoLevelKind::Dnf => self.terms.iter().any(|&(p, q)| x & p == p && x & q == 0),
            TwoLevelKind::Cnf => self.terms.iter().all(|&(p, q)| x & p != 0 || !x & q != 0),
        }
    }

    pub fn to_table(&self) -> TruthTable {
        TruthTable::from_fn(self.n, |x| self.eval(x))
    }

    fn literals(&self, p: u64, q: u64) -> Vec<Formula> {
        (0..self.n)
            .filter(|&i| (p | q) >> i & 1 == 1)
            .map(|i| Formula::lit(i, q >> i & 1 == 1))
            .collect()
    }

    pub fn to_formula(&self) -> Formula {
        let (outer, inner) = match self.kind {
            TwoLevelKind::Dnf => (Gate::Or, Gate::And),
            TwoLevelKind::Cnf => (Gate::And, Gate::Or),
        };
        // empty term/clause is the identity of the inner gate
        let empty_inner = inner == Gate::And;
        let parts: Vec<Formula> = self
            .terms
            .iter()
            .map(|&(p, q)| {
                let lits = self.literals(p, q);
                if lits.is_empty() {
                    Formula::Const(empty_inner)
                } else {
                    Formula::gate(inner, lits)
                }
            })
            .collect();
        if parts.is_empty() {
            return Formula::Const(outer == Gate::And);
        }
        if parts.len() == 1 {
            return parts.into_iter().next().unwrap();
        }
        Formula::Gate {
            op: outer,
            children: parts,
        }
    }
}

impl fmt::Display for TwoLevel {
    /// `x1x2 | x1!x3` for DNF, `(x1 | x2) & (!x3)` for CNF.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lit = |i: usize, neg: bool| format!("{}x{}", if neg { "!" } else { "" }, i + 1);
        let term = |&(p, q): &(u64, u64), sep: &str| {
            (0..self.n)
                .filter(|&i| (p | q) >> i & 1 == 1)
                .map(|i| lit(i, q >> i & 1 == 1))
                .collect::<Vec<_>>()
                .join(sep)
        };
        match self.kind {
            TwoLevelKind::Dnf => {
                if self.terms.is_empty() {
                    return f.write_str("0");
                }
                let parts: Vec<String> = self
                    .terms
                    .iter()
                    .map(|t| {
                        let s = term(t, "");
                        if s.is_empty() {
                            "1".to_string()
                        } else {
                            s
                        }
                    })
                    .collect();
                f.write_str(&parts.join(" | "))
            }
            TwoLevelKind::Cnf => {
                if self.terms.is_empty() {
                    return f.write_str("1");
                }
                let parts: Vec<String> = self
                    .terms
                    .iter()
                    .map(|t| {
                        let s = term(t, " | ");
                        if s.is_empty() {
                            "0".to_string()
                        } else {
                            format!("({s})")
                        }
                    })
                    .collect();
                f.write_str(&parts.join(" & "))
            }
        }
    }
}

pub fn is_monotone(tt: &TruthTable) -> bool {
    let n = tt.n();
    (0..tt.len()).all(|x| {
        !tt.get(x) || (0..n).all(|i| x >> i & 1 == 1 || tt.get(x | 1 << i))
    })
}

/// Points `x` with `f(x) = 1` whose lower neighbours are all 0, increasing.
pub fn minimal_true_points(tt: &TruthTable) -> Vec<usize> {
    let n = tt.n();
    tt.ones()
        .filter(|&x| (0..n).all(|i| x >> i & 1 == 0 || !tt.get(x & !(1 << i))))
        .collect()
}

pub fn minimize_monotone_dnf(tt: &TruthTable) -> Result<TwoLevel> {
    if !is_monotone(tt) {
        return Err(Reject::NotMonotone.into());
    }
    Ok(TwoLevel {
        kind: TwoLevelKind::Dnf,
        n: tt.n(),
        terms: minimal_true_points(tt).into_iter().map(|x| (x as u64, 0)).collect(),
    })
}

/// `a[i] = 1` iff `x_i` must appear negated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnateOrientation {
    pub n: usize,
    pub a: u64,
}

impl fmt::Display for UnateOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&vec_string(self.a, self.n))
    }
}

pub fn find_unate_orientation(tt: &TruthTable) -> Result<UnateOrientation> {
    let n = tt.n();
    let mut a = 0u64;
    for x in tt.ones() {
        for i in 0..n {
            if x >> i & 1 == 0 && !tt.get(x | 1 << i) {
                a |= 1 << i;
            }
        }
    }
    if !is_monotone(&tt.shift_inputs(a as usize)) {
        return Err(Reject::NotUnate.into());
    }
    Ok(UnateOrientation { n, a })
}

pub fn minimize_unate_dnf(tt: &TruthTable) -> Result<TwoLevel> {
    let o = find_unate_orientation(tt)?;
    let m = minimize_monotone_dnf(&tt.shift_inputs(o.a as usize))?;
    Ok(TwoLevel {
        terms: m.terms.iter().map(|&(p, _)| (p & !o.a, p & o.a)).collect(),
        ..m
    })
}

pub fn minimize_unate_cnf(tt: &TruthTable) -> Result<TwoLevel> {
    let d = minimize_unate_dnf(&tt.not())?;
    Ok(TwoLevel {
        kind: TwoLevelKind::Cnf,
        n: d.n,
        terms: d.terms.iter().map(|&(p, q)| (q, p)).collect(),
    })
}
