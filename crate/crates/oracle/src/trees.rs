use std::collections::VecDeque;

use crate::{full_mask, table_count, var_word};

/// Largest `n` for the whole-function-space oracles.
pub const TABLE_ORACLE_CAP: usize = 3;

fn check(n: usize) {
    assert!(n <= TABLE_ORACLE_CAP, "oracle limited to n <= {TABLE_ORACLE_CAP}");
}

/// Minimum tree size (inner nodes plus leaves) for every function when the
/// node tests are the given tables: grows trees by size, combining two
/// subtrees whose sizes sum to `s - 1`.
fn tree_sizes(n: usize, tests: &[u64]) -> Vec<usize> {
    let count = table_count(n);
    let full = full_mask(n);
    let mut best = vec![usize::MAX; count];
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); 2];
    best[0] = 1;
    best[full as usize] = 1;
    by_size[1] = vec![0, full];
    let mut found = 2;
    let mut s = 1;
    while found < count {
        s += 2;
        let mut layer = Vec::new();
        for a in (1..s - 1).step_by(2) {
            let b = s - 1 - a;
            for &g in &by_size[a] {
                for &h in &by_size[b] {
                    for &t in tests {
                        let f = (g & !t | h & t) & full;
                        if best[f as usize] == usize::MAX {
                            best[f as usize] = s;
                            layer.push(f);
                        }
                    }
                }
            }
        }
        found += layer.len();
        by_size.resize(s + 1, Vec::new());
        by_size[s] = layer;
    }
    best
}

/// Minimum decision-tree size of every function on `n` variables, indexed
/// by table word.
pub fn brute_dt_sizes(n: usize) -> Vec<usize> {
    check(n);
    let tests: Vec<u64> = (0..n).map(|i| var_word(n, i)).collect();
    tree_sizes(n, &tests)
}

fn parity_word(n: usize, u: usize) -> u64 {
    (0..1usize << n)
        .filter(|x| (x & u).count_ones() % 2 == 1)
        .fold(0, |w, x| w | 1 << x)
}

/// Minimum linear decision-tree size (tests `<u, x>` for every nonzero `u`).
pub fn brute_ldt_sizes(n: usize) -> Vec<usize> {
    check(n);
    let tests: Vec<u64> = (1..1usize << n).map(|u| parity_word(n, u)).collect();
    tree_sizes(n, &tests)
}

/// Minimum symmetric read-once tree size. `best[A][f]` is the smallest tree
/// for `f` whose tests only read variables in `A`; a node testing a
/// symmetric function of `S` passes `A \ S` to both subtrees.
pub fn brute_srodt_sizes(n: usize) -> Vec<usize> {
    check(n);
    let count = table_count(n);
    let full = full_mask(n);
    let mut best: Vec<Vec<usize>> = vec![vec![usize::MAX; count]; 1 << n];
    for a in 0..1usize << n {
        best[a][0] = 1;
        best[a][full as usize] = 1;
        let mut s = a;
        while s != 0 {
            let rest = a & !s;
            let kids: Vec<(u64, usize)> = (0..count)
                .filter(|&f| best[rest][f] != usize::MAX)
                .map(|f| (f as u64, best[rest][f]))
                .collect();
            let k = s.count_ones() as usize;
            for values in 1..(1usize << (k + 1)) - 1 {
                let t = (0..1usize << n)
                    .filter(|x| values >> (x & s).count_ones() & 1 == 1)
                    .fold(0u64, |w, x| w | 1 << x);
                for &(g, sg) in &kids {
                    for &(h, sh) in &kids {
                        let f = ((g & !t | h & t) & full) as usize;
                        best[a][f] = best[a][f].min(1 + sg + sh);
                    }
                }
            }
            s = (s - 1) & a;
        }
    }
    best.pop().expect("nonempty")
}

/// Minimum linear decision-list size (pairs before the final always-true
/// pair), `None` when no list exists. Breadth-first search over the set of
/// points not yet decided; a pair may fire only where `f` is constant.
pub fn brute_ldl_sizes(n: usize) -> Vec<Option<usize>> {
    check(n);
    let points = 1usize << n;
    let full = full_mask(n);
    let halves: Vec<u64> = (1..points)
        .flat_map(|u| {
            let one = parity_word(n, u);
            [one, full & !one]
        })
        .collect();
    (0..table_count(n) as u64)
        .map(|f| {
            let constant_on = |r: u64| f & r == 0 || f & r == r;
            let mut dist = vec![usize::MAX; 1 << points];
            let mut queue = VecDeque::new();
            dist[full as usize] = 0;
            queue.push_back(full);
            while let Some(r) = queue.pop_front() {
                let d = dist[r as usize];
                if constant_on(r) {
                    return Some(d);
                }
                for &h in &halves {
                    let hit = r & h;
                    if hit != 0 && constant_on(hit) {
                        let next = r & !hit;
                        if dist[next as usize] == usize::MAX {
                            dist[next as usize] = d + 1;
                            queue.push_back(next);
                        }
                    }
                }
            }
            None
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let dt = brute_dt_sizes(2);
        // AND2 = 0b1000
        assert_eq!(dt[0b1000], 5);
        assert_eq!(dt[0b0110], 7);
        assert_eq!(dt[0b1010], 3);
        let ldt = brute_ldt_sizes(2);
        assert_eq!(ldt[0b0110], 3);
        let sr = brute_srodt_sizes(2);
        assert_eq!(sr[0b0110], 3);
        assert_eq!(sr[0b1000], 3);
        let ldl = brute_ldl_sizes(2);
        assert_eq!(ldl[0], Some(0));
        assert_eq!(ldl[0b1000], Some(2));
        assert_eq!(ldl[0b0110], Some(1));
    }
}
