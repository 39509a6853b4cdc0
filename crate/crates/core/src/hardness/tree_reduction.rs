use serde::Serialize;

use super::SetCoverInstance;
use crate::error::{cap, Result};
use crate::truth_table::{TruthTable, MAX_VARS};

/// Element-to-position map of the reduction. `Standard` sends element `d`
/// (1-based) to position `d - 1 + u`; `OffByOne` sends it to `d + u` and
/// drops positions past the table, which breaks the reduction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shift {
    #[default]
    Standard,
    OffByOne,
}

/// Table `0^u 1^m` with each set shifted into the 1-block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedTreeInstance {
    pub tt: TruthTable,
    pub u: usize,
    /// Table positions of each test.
    pub tests: Vec<Vec<usize>>,
    pub k: usize,
}

impl ReducedTreeInstance {
    pub fn test_tables(&self) -> Vec<TruthTable> {
        self.tests
            .iter()
            .map(|t| {
                let mut tab = TruthTable::zeros(self.tt.n());
                for &p in t {
                    tab.set(p, true);
                }
                tab
            })
            .collect()
    }
}

pub fn reduce_sc_to_tree(inst: &SetCoverInstance) -> Result<ReducedTreeInstance> {
    reduce_sc_to_tree_with(inst, Shift::Standard)
}

pub fn reduce_sc_to_tree_with(inst: &SetCoverInstance, shift: Shift) -> Result<ReducedTreeInstance> {
    inst.validate()?;
    let m = inst.m;
    let size = (m + 1).next_power_of_two();
    let n = size.trailing_zeros() as usize;
    cap("set cover reduction table", n, MAX_VARS)?;
    let u = size - m;
    let tt = TruthTable::from_fn(n, |x| x >= u);
    let tests = inst
        .sets
        .iter()
        .map(|s| {
            s.iter()
                .map(|&d| match shift {
                    Shift::Standard => d - 1 + u,
                    Shift::OffByOne => d + u,
                })
                .filter(|&p| p < size)
                .collect()
        })
        .collect();
    Ok(ReducedTreeInstance { tt, u, tests, k: inst.k })
}
