use super::{DecisionTree, Tree};
use crate::error::{cap, Result};
use crate::truth_table::TruthTable;

/// Largest `n` for the cube dynamic program (3^n states).
pub const DT_CAP: usize = 14;

const MIXED: u8 = 2;

/// Minimum-size decision tree by dynamic programming over all cubes.
///
/// Cubes are indexed in base 3 with digit 2 for a free variable, so both
/// restrictions of a cube have smaller indices than the cube itself.
pub fn minimize_dt(tt: &TruthTable) -> Result<DecisionTree> {
    let n = tt.n();
    cap("decision tree", n, DT_CAP)?;
    let total = 3usize.pow(n as u32);
    let pow: Vec<usize> = (0..n).map(|i| 3usize.pow(i as u32)).collect();
    let mut value = vec![0u8; total];
    let mut size = vec![0u32; total];
    let mut choice = vec![u8::MAX; total];
    let mut digits = vec![0u8; n];
    for idx in 0..total {
        if idx > 0 {
            // increment base-3 counter
            let mut k = 0;
            loop {
                digits[k] += 1;
                if digits[k] == 3 {
                    digits[k] = 0;
                    k += 1;
                } else {
                    break;
                }
            }
        }
        let first_star = digits.iter().position(|&d| d == 2);
        match first_star {
            None => {
                let x = digits
                    .iter()
                    .enumerate()
                    .fold(0usize, |acc, (j, &d)| acc | ((d as usize) << j));
                value[idx] = tt.get(x) as u8;
                size[idx] = 1;
            }
            Some(s) => {
                let (a, b) = (value[idx - 2 * pow[s]], value[idx - pow[s]]);
                value[idx] = if a == b { a } else { MIXED };
                if value[idx] != MIXED {
                    size[idx] = 1;
                    continue;
                }
                let mut best = u32::MAX;
                for i in s..n {
                    if digits[i] != 2 {
                        continue;
                    }
                    let c = 1 + size[idx - 2 * pow[i]] + size[idx - pow[i]];
                    if c < best {
                        best = c;
                        choice[idx] = i as u8;
                    }
                }
                size[idx] = best;
            }
        }
    }
    Ok(rebuild(total - 1, &value, &choice, &pow))
}

fn rebuild(idx: usize, value: &[u8], choice: &[u8], pow: &[usize]) -> DecisionTree {
    if value[idx] != MIXED {
        return Tree::Leaf(value[idx] == 1);
    }
    let i = choice[idx] as usize;
    Tree::node(
        i,
        rebuild(idx - 2 * pow[i], value, choice, pow),
        rebuild(idx - pow[i], value, choice, pow),
    )
}
