use std::collections::HashSet;

use crate::error::{cap, Result};
use crate::truth_table::PartialTruthTable;

pub const PARTIAL_DNF_CAP: usize = 18;

/// Minimum number of terms of a monotone DNF agreeing with every fixed
/// entry of `ptt`; `None` when no monotone DNF does.
///
/// A term (a set of variables, i.e. a point) is usable iff no 0-entry lies
/// above it. Usable terms are upward closed, so only the minimal usable
/// terms below some 1-entry matter; the rest is an exact set cover of the
/// 1-entries, solved by branch and bound.
pub fn brute_min_mondnf_partial(ptt: &PartialTruthTable) -> Result<Option<usize>> {
    let t = ptt.n();
    cap("partial monotone DNF", t, PARTIAL_DNF_CAP)?;
    let size = 1usize << t;
    let mut zero_above = vec![false; size];
    let mut one_above = vec![false; size];
    for x in 0..size {
        match ptt.get(x) {
            Some(false) => zero_above[x] = true,
            Some(true) => one_above[x] = true,
            None => {}
        }
    }
    for j in 0..t {
        for x in 0..size {
            if x >> j & 1 == 0 {
                zero_above[x] |= zero_above[x | 1 << j];
                one_above[x] |= one_above[x | 1 << j];
            }
        }
    }
    let ones: Vec<usize> = (0..size).filter(|&x| ptt.get(x) == Some(true)).collect();
    if ones.is_empty() {
        return Ok(Some(0));
    }
    if ones.iter().any(|&x| zero_above[x]) {
        return Ok(None);
    }
    let terms: Vec<usize> = (0..size)
        .filter(|&m| {
            !zero_above[m]
                && one_above[m]
                && (0..t).all(|j| m >> j & 1 == 0 || zero_above[m & !(1 << j)])
        })
        .collect();
    let words = ones.len().div_ceil(64);
    let mut covers: Vec<Vec<u64>> = terms
        .iter()
        .map(|&m| {
            let mut c = vec![0u64; words];
            for (i, &x) in ones.iter().enumerate() {
                if x & m == m {
                    c[i / 64] |= 1 << (i % 64);
                }
            }
            c
        })
        .collect();
    // drop duplicates and strictly dominated covers
    let mut seen = HashSet::new();
    covers.retain(|c| seen.insert(c.clone()));
    let subset = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & !y == 0);
    let keep: Vec<bool> = (0..covers.len())
        .map(|i| !(0..covers.len()).any(|j| j != i && subset(&covers[i], &covers[j])))
        .collect();
    let covers: Vec<Vec<u64>> = covers
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect();
    let mut best = covers.len();
    let uncovered: Vec<u64> = (0..words)
        .map(|w| {
            let bits = (ones.len() - w * 64).min(64);
            if bits == 64 {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            }
        })
        .collect();
    search(&covers, uncovered, 0, &mut best);
    Ok(Some(best))
}

fn search(covers: &[Vec<u64>], uncovered: Vec<u64>, used: usize, best: &mut usize) {
    let left: u32 = uncovered.iter().map(|w| w.count_ones()).sum();
    if left == 0 {
        *best = (*best).min(used);
        return;
    }
    let max_gain = covers
        .iter()
        .map(|c| c.iter().zip(&uncovered).map(|(a, b)| (a & b).count_ones()).sum::<u32>())
        .max()
        .unwrap_or(0);
    if max_gain == 0 || used + left.div_ceil(max_gain) as usize >= *best {
        return;
    }
    // branch on the uncovered point with the fewest covering terms
    let mut pick = (usize::MAX, 0);
    for (w, &bits) in uncovered.iter().enumerate() {
        let mut b = bits;
        while b != 0 {
            let i = w * 64 + b.trailing_zeros() as usize;
            b &= b - 1;
            let cnt = covers.iter().filter(|c| c[i / 64] >> (i % 64) & 1 == 1).count();
            if cnt < pick.0 {
                pick = (cnt, i);
            }
        }
    }
    let i = pick.1;
    for c in covers.iter().filter(|c| c[i / 64] >> (i % 64) & 1 == 1) {
        let next: Vec<u64> = uncovered.iter().zip(c).map(|(u, x)| u & !x).collect();
        search(covers, next, used + 1, best);
    }
}
