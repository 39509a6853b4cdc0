use std::collections::HashMap;

use serde::Serialize;

use super::{FixedTestTree, NodeTest, Tree};
use crate::error::{Error, Reject, Result};
use crate::truth_table::TruthTable;

/// Upper bound on distinct regions explored before giving up.
pub const META_NODE_CAP: usize = 1 << 21;

/// Membership test for a fixed set of points, identified by its position
/// in the caller's list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FixedTest {
    pub index: usize,
    #[serde(skip)]
    pub set: TruthTable,
}

impl NodeTest for FixedTest {
    fn holds(&self, x: usize) -> bool {
        self.set.get(x)
    }

    fn label(&self, _n: usize) -> String {
        format!("(test {})", self.index)
    }
}

type Region = Vec<u64>;

struct Solver<'a> {
    ones: &'a TruthTable,
    tests: &'a [TruthTable],
    memo: HashMap<Region, (u32, u32)>,
}

const LEAF: u32 = u32::MAX;

impl Solver<'_> {
    fn solve(&mut self, region: &Region) -> Result<u32> {
        if let Some(&(s, _)) = self.memo.get(region) {
            return Ok(s);
        }
        let hit = region
            .iter()
            .zip(self.ones.words())
            .map(|(r, o)| (r & o).count_ones())
            .sum::<u32>();
        let all = region.iter().map(|r| r.count_ones()).sum::<u32>();
        let entry = if hit == 0 || hit == all {
            (1, LEAF)
        } else {
            let mut best = (u32::MAX, LEAF);
            for (t, set) in self.tests.iter().enumerate() {
                let one: Region = region.iter().zip(set.words()).map(|(r, s)| r & s).collect();
                let zero: Region = region.iter().zip(set.words()).map(|(r, s)| r & !s).collect();
                if one.iter().all(|&w| w == 0) || zero.iter().all(|&w| w == 0) {
                    continue;
                }
                let c = 1 + self.solve(&zero)? + self.solve(&one)?;
                if c < best.0 {
                    best = (c, t as u32);
                }
            }
            best
        };
        if self.memo.len() >= META_NODE_CAP {
            return Err(Error::CapExceeded {
                what: "fixed-test regions",
                n: self.memo.len(),
                cap: META_NODE_CAP,
            });
        }
        self.memo.insert(region.clone(), entry);
        Ok(entry.0)
    }

    fn rebuild(&self, region: &Region) -> FixedTestTree {
        let (_, t) = self.memo[region];
        if t == LEAF {
            let v = region
                .iter()
                .zip(self.ones.words())
                .any(|(r, o)| r & o != 0);
            return Tree::Leaf(v);
        }
        let set = &self.tests[t as usize];
        let one: Region = region.iter().zip(set.words()).map(|(r, s)| r & s).collect();
        let zero: Region = region.iter().zip(set.words()).map(|(r, s)| r & !s).collect();
        Tree::node(
            FixedTest {
                index: t as usize,
                set: set.clone(),
            },
            self.rebuild(&zero),
            self.rebuild(&one),
        )
    }
}

/// Minimum-size tree whose nodes are membership tests for the given sets
/// (each a table on the same `n` variables).
///
/// Rejects when two points agree on every test but not on `f`. Regions are
/// the point sets reachable from the full space by splitting along tests.
pub fn minimize_fixed_tests(tt: &TruthTable, tests: &[TruthTable]) -> Result<FixedTestTree> {
    for t in tests {
        if t.n() != tt.n() {
            return Err(Error::DimensionMismatch {
                expected: tt.n(),
                got: t.n(),
            });
        }
    }
    let mut seen: HashMap<Vec<bool>, bool> = HashMap::new();
    for x in 0..tt.len() {
        let sig: Vec<bool> = tests.iter().map(|t| t.get(x)).collect();
        if *seen.entry(sig).or_insert(tt.get(x)) != tt.get(x) {
            return Err(Reject::IndistinguishablePoints.into());
        }
    }
    let mut s = Solver {
        ones: tt,
        tests,
        memo: HashMap::new(),
    };
    let full: Region = TruthTable::constant_n(tt.n(), true).words().to_vec();
    s.solve(&full)?;
    Ok(s.rebuild(&full))
}
