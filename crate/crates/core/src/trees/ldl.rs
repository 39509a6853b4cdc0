use std::collections::HashSet;

use serde::Serialize;

use super::lattice::{AffineSubspace, LinearTest};
use super::NodeTest;
use crate::error::{cap, Error, Reject, Result};
use crate::gf2::dot;
use crate::truth_table::TruthTable;

/// Largest `n` for the decision-list search (point sets fit one word).
pub const LDL_CAP: usize = 6;

/// Ordered `(test, value)` pairs; the output is the value of the first
/// satisfied test. A well-formed list ends with an always-true test.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinearDecisionList {
    pub n: usize,
    pub pairs: Vec<(LinearTest, bool)>,
}

impl LinearDecisionList {
    /// Number of inner nodes: all pairs but the last.
    pub fn size(&self) -> usize {
        self.pairs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: usize) -> Option<bool> {
        self.pairs
            .iter()
            .find(|(t, _)| t.holds(x))
            .map(|&(_, v)| v)
    }

    /// Panics on a list that leaves some point undecided.
    pub fn to_table(&self) -> TruthTable {
        TruthTable::from_fn(self.n, |x| self.eval(x).expect("undecided point"))
    }

    pub fn sexpr(&self) -> String {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(t, v)| {
                let test = if t.u == 0 && !t.b {
                    "(const1)".to_string()
                } else {
                    t.label(self.n)
                };
                format!("({} {})", test, *v as u8)
            })
            .collect();
        format!("(list {})", parts.join(" "))
    }
}

/// `n - v2(|f^-1(1)|)` for a nonzero count, 0 for the zero function: the
/// least `k` such that `2^(n-k)` divides the number of ones.
pub fn ldl_size_lower_bound(tt: &TruthTable) -> usize {
    let c = tt.count_ones();
    if c == 0 {
        0
    } else {
        tt.n() - c.trailing_zeros() as usize
    }
}

struct Search {
    n: usize,
    ones: u64,
    halves: Vec<[u64; 2]>,
    failed: HashSet<u64>,
}

impl Search {
    fn run(&mut self, region: u64) -> Option<Vec<(LinearTest, bool)>> {
        let hit = region & self.ones;
        if hit == 0 || hit == region {
            return Some(vec![(LinearTest::always(), hit != 0)]);
        }
        if self.failed.contains(&region) {
            return None;
        }
        for u in 1..(1u64 << self.n) {
            for b in [true, false] {
                let half = region & self.halves[u as usize][b as usize];
                let rest = region & !half;
                if half == 0 || rest == 0 {
                    continue;
                }
                let h = half & self.ones;
                if h != 0 && h != half {
                    continue;
                }
                if let Some(mut tail) = self.run(rest) {
                    tail.insert(0, (LinearTest::new(u, b), h != 0));
                    return Some(tail);
                }
            }
        }
        self.failed.insert(region);
        None
    }
}

/// Searches for a linear decision list; every list found is non-redundant,
/// hence of minimum size.
pub fn minimize_ldl(tt: &TruthTable) -> Result<LinearDecisionList> {
    let n = tt.n();
    cap("linear decision list", n, LDL_CAP)?;
    let points = 1u64 << n;
    let full = if n == 6 { !0 } else { (1u64 << points) - 1 };
    let halves = (0..points)
        .map(|u| {
            let mut one = 0u64;
            for x in 0..points {
                if dot(u, x) {
                    one |= 1 << x;
                }
            }
            [full & !one, one]
        })
        .collect();
    let mut s = Search {
        n,
        ones: tt.as_u64(),
        halves,
        failed: HashSet::new(),
    };
    match s.run(full) {
        Some(pairs) => Ok(LinearDecisionList { n, pairs }),
        None => Err(Reject::NoDecisionList.into()),
    }
}

/// Removes tests that are linearly determined by the tests before them
/// (a test forced true ends the list with its value; one forced false is
/// dropped), then merges trailing pairs that repeat the final value.
pub fn model_minimize_ldl(list: &LinearDecisionList) -> Result<LinearDecisionList> {
    let n = list.n;
    if n >= 64 || list.pairs.iter().any(|(t, _)| t.u >> n != 0) {
        return Err(Error::InvalidArgument("test vector wider than n".into()));
    }
    let mut region = AffineSubspace::full(n);
    let mut out = Vec::new();
    let mut closed = false;
    for &(t, v) in &list.pairs {
        if region.is_independent(t.u) {
            out.push((t, v));
            region = region
                .with_constraint(t.u, !t.b)
                .expect("independent constraint");
        } else if dot(t.u, region.base_point()) == t.b {
            out.push((LinearTest::always(), v));
            closed = true;
            break;
        }
    }
    if !closed {
        return Err(Error::InvalidArgument(
            "decision list leaves some assignment undecided".into(),
        ));
    }
    while out.len() >= 2 && out[out.len() - 2].1 == out[out.len() - 1].1 {
        out.remove(out.len() - 2);
    }
    Ok(LinearDecisionList { n, pairs: out })
}
