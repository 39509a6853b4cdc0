use serde::Serialize;

use super::{NodeTest, SymmetricTree, Tree};
use crate::error::{cap, Result};
use crate::truth_table::TruthTable;

/// Largest `n` for the symmetric-tree dynamic program.
pub const SRODT_CAP: usize = 6;

/// A symmetric test on `vars`: the outcome is `values[w]`, `w` the number
/// of ones among `vars`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SymTest {
    pub vars: Vec<usize>,
    pub values: Vec<bool>,
}

impl SymTest {
    fn mask(&self) -> usize {
        self.vars.iter().map(|&v| 1 << v).sum()
    }
}

impl NodeTest for SymTest {
    fn holds(&self, x: usize) -> bool {
        self.values[(x & self.mask()).count_ones() as usize]
    }

    fn label(&self, _n: usize) -> String {
        let vars: Vec<String> = self.vars.iter().map(|v| (v + 1).to_string()).collect();
        let vals: String = self
            .values
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect();
        format!("(sym {} {})", vars.join(","), vals)
    }
}

struct Cube {
    stars: usize,
    fixed: usize,
}

fn decode(mut idx: usize, n: usize) -> Cube {
    let mut c = Cube { stars: 0, fixed: 0 };
    for j in 0..n {
        match idx % 3 {
            1 => c.fixed |= 1 << j,
            2 => c.stars |= 1 << j,
            _ => {}
        }
        idx /= 3;
    }
    c
}

/// Minimum-size symmetric read-once decision tree.
///
/// Dynamic program over cubes (base-3 index, digit 2 free). A node on a
/// free set `A` is usable only when the function left after fixing `A` to
/// `beta` depends on `beta` through its weight alone and takes exactly two
/// values; the node's symmetric function separates those two.
pub fn minimize_srodt(tt: &TruthTable) -> Result<SymmetricTree> {
    let n = tt.n();
    cap("symmetric read-once tree", n, SRODT_CAP)?;
    let total = 3usize.pow(n as u32);
    let pow: Vec<usize> = (0..n).map(|i| 3usize.pow(i as u32)).collect();
    // restricted table of every cube over its free variables, packed
    let tables: Vec<u64> = (0..total)
        .map(|idx| {
            let c = decode(idx, n);
            let free: Vec<usize> = (0..n).filter(|j| (c.stars >> j) & 1 == 1).collect();
            let mut t = 0u64;
            for y in 0..(1usize << free.len()) {
                let mut x = c.fixed;
                for (k, &v) in free.iter().enumerate() {
                    x |= ((y >> k) & 1) << v;
                }
                t |= (tt.get(x) as u64) << y;
            }
            t
        })
        .collect();
    let mut size = vec![0u32; total];
    let mut choice: Vec<Option<(usize, u32)>> = vec![None; total];
    for idx in 0..total {
        let c = decode(idx, n);
        let k = c.stars.count_ones();
        let full = if k == 6 { !0 } else { (1u64 << (1 << k)) - 1 };
        if tables[idx] == 0 || tables[idx] == full {
            size[idx] = 1;
            continue;
        }
        let mut best = u32::MAX;
        let mut a = c.stars;
        // submasks of the free set, increasing
        let subs: Vec<usize> = {
            let mut v = Vec::new();
            while a != 0 {
                v.push(a);
                a = (a - 1) & c.stars;
            }
            v.reverse();
            v
        };
        for amask in subs {
            let avars: Vec<usize> = (0..n).filter(|j| (amask >> j) & 1 == 1).collect();
            let Some((g, reps)) = weight_split(idx, &avars, &pow, &tables) else {
                continue;
            };
            let cost = 1 + size[reps.0] + size[reps.1];
            if cost < best {
                best = cost;
                choice[idx] = Some((amask, g));
            }
        }
        size[idx] = best;
    }
    Ok(rebuild(total - 1, n, &choice, &pow, &tables))
}

/// Index of the cube `idx` with `vars` fixed to the bits of `beta`.
fn child_index(idx: usize, vars: &[usize], beta: usize, pow: &[usize]) -> usize {
    vars.iter().enumerate().fold(idx, |acc, (k, &v)| {
        acc - if (beta >> k) & 1 == 1 { pow[v] } else { 2 * pow[v] }
    })
}

/// Weight vector `g` (bit `w` = class of weight `w`) and class
/// representatives, when fixing `vars` splits the function by weight into
/// exactly two restrictions.
fn weight_split(
    idx: usize,
    vars: &[usize],
    pow: &[usize],
    tables: &[u64],
) -> Option<(u32, (usize, usize))> {
    let m = vars.len();
    let mut by_weight: Vec<Option<u64>> = vec![None; m + 1];
    for beta in 0..(1usize << m) {
        let t = tables[child_index(idx, vars, beta, pow)];
        let w = beta.count_ones() as usize;
        match by_weight[w] {
            None => by_weight[w] = Some(t),
            Some(prev) if prev != t => return None,
            _ => {}
        }
    }
    let h0 = by_weight[0].unwrap();
    let mut g = 0u32;
    let mut other = None;
    for (w, t) in by_weight.iter().enumerate() {
        let t = t.unwrap();
        if t != h0 {
            match other {
                None => other = Some(t),
                Some(o) if o != t => return None,
                _ => {}
            }
            g |= 1 << w;
        }
    }
    other?;
    let w1 = g.trailing_zeros() as usize;
    let beta1 = (1usize << w1) - 1;
    Some((
        g,
        (
            child_index(idx, vars, 0, pow),
            child_index(idx, vars, beta1, pow),
        ),
    ))
}

fn rebuild(
    idx: usize,
    n: usize,
    choice: &[Option<(usize, u32)>],
    pow: &[usize],
    tables: &[u64],
) -> SymmetricTree {
    match choice[idx] {
        None => Tree::Leaf(tables[idx] & 1 == 1),
        Some((amask, g)) => {
            let vars: Vec<usize> = (0..n).filter(|j| (amask >> j) & 1 == 1).collect();
            let values = (0..=vars.len()).map(|w| (g >> w) & 1 == 1).collect();
            let w1 = g.trailing_zeros() as usize;
            let zero = child_index(idx, &vars, 0, pow);
            let one = child_index(idx, &vars, (1 << w1) - 1, pow);
            Tree::node(
                SymTest { vars, values },
                rebuild(zero, n, choice, pow, tables),
                rebuild(one, n, choice, pow, tables),
            )
        }
    }
}
