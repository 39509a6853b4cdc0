use std::collections::HashMap;

use serde::Serialize;

use crate::error::{cap, Result};
use crate::par::{self, Exec};
use crate::truth_table::{insert_bit, TruthTable};

pub const ORDER_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderResult {
    /// `order[0]` is tested first.
    pub order: Vec<usize>,
    pub size: usize,
}

/// Size-optimal variable order for the reduced OBDD; among optimal orders
/// the lexicographically smallest is returned.
pub fn obdd_optimal_order(tt: &TruthTable) -> Result<OrderResult> {
    obdd_optimal_order_with(tt, Exec::default())
}

/// Dynamic program over the set `R` of variables tested last. For every
/// `R`, each assignment to the other variables gets an id that is equal
/// exactly when the induced subfunctions on `R` are equal; the number of
/// nodes testing `v` first within `R` is the number of distinct subfunctions
/// on `R` that depend on `v`.
pub fn obdd_optimal_order_with(tt: &TruthTable, exec: Exec) -> Result<OrderResult> {
    let n = tt.n();
    cap("optimal OBDD order", n, ORDER_CAP)?;
    let full = (1usize << n) - 1;
    // ids[R] indexed by the assignment to the complement of R, packed in
    // increasing variable order
    let mut prev: HashMap<usize, Vec<u32>> = HashMap::new();
    prev.insert(0, (0..1usize << n).map(|x| tt.get(x) as u32).collect());
    let mut best = vec![u32::MAX; 1 << n];
    // nodes[R * n + v]: nodes testing v when R is the remaining set
    let mut nodes = vec![0u32; n << n];
    best[0] = 0;
    for k in 1..=n {
        let sets: Vec<usize> = (1usize..1 << n).filter(|r| r.count_ones() as usize == k).collect();
        let results = par::map_slice(exec, &sets, |&r| layer_entry(n, full, r, &prev));
        let mut next = HashMap::with_capacity(sets.len());
        for (&r, (ids, counts)) in sets.iter().zip(results) {
            let mut b = u32::MAX;
            for (v, &c) in counts.iter().enumerate() {
                if r >> v & 1 == 1 {
                    nodes[r * n + v] = c;
                    b = b.min(c + best[r & !(1 << v)]);
                }
            }
            best[r] = b;
            next.insert(r, ids);
        }
        prev = next;
    }
    let mut order = Vec::with_capacity(n);
    let mut r = full;
    while r != 0 {
        let v = (0..n)
            .find(|&v| r >> v & 1 == 1 && nodes[r * n + v] + best[r & !(1 << v)] == best[r])
            .expect("optimal choice exists");
        order.push(v);
        r &= !(1 << v);
    }
    Ok(OrderResult {
        order,
        size: best[full] as usize,
    })
}

/// Ids of subfunctions on `r` and, per variable, the node count when that
/// variable is tested first within `r`.
fn layer_entry(n: usize, full: usize, r: usize, prev: &HashMap<usize, Vec<u32>>) -> (Vec<u32>, Vec<u32>) {
    let comp = full & !r;
    let len = 1usize << comp.count_ones();
    let pos = |v: usize| (comp & ((1 << v) - 1)).count_ones() as usize;
    let low = r.trailing_zeros() as usize;
    let sub = &prev[&(r & !(1 << low))];
    let p = pos(low);
    let mut intern: HashMap<(u32, u32), u32> = HashMap::new();
    let ids: Vec<u32> = (0..len)
        .map(|a| {
            let key = (sub[insert_bit(a, p, false)], sub[insert_bit(a, p, true)]);
            let next = intern.len() as u32;
            *intern.entry(key).or_insert(next)
        })
        .collect();
    let mut counts = vec![0u32; n];
    let mut seen = vec![false; intern.len()];
    for (v, count) in counts.iter_mut().enumerate() {
        if r >> v & 1 == 0 {
            continue;
        }
        let sub = &prev[&(r & !(1 << v))];
        let p = pos(v);
        seen.iter_mut().for_each(|s| *s = false);
        for (a, &id) in ids.iter().enumerate() {
            if sub[insert_bit(a, p, false)] != sub[insert_bit(a, p, true)] && !seen[id as usize] {
                seen[id as usize] = true;
                *count += 1;
            }
        }
    }
    (ids, counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bp::obdd_build;

    #[test]
    fn order_examples() {
        // x3 ? x2 : x1
        let mux = TruthTable::from_fn(3, |x| if x & 4 != 0 { x & 2 != 0 } else { x & 1 != 0 });
        let r = obdd_optimal_order(&mux).unwrap();
        assert_eq!(r.size, 3);
        assert_eq!(r.order[0], 2);
        assert_eq!(obdd_build(&mux, &r.order).unwrap().size(), 3);
        assert_eq!(obdd_build(&mux, &[0, 1, 2]).unwrap().size(), 5);
        assert_eq!(obdd_optimal_order(&TruthTable::and_all(3)).unwrap().size, 3);
        let p = obdd_optimal_order(&TruthTable::parity(4)).unwrap();
        assert_eq!(p.size, 7);
        assert_eq!(p.order, vec![0, 1, 2, 3]);
        let c = obdd_optimal_order(&TruthTable::constant_n(2, false)).unwrap();
        assert_eq!(c.size, 0);
    }

    #[test]
    fn matches_permutation_sweep() {
        let f = TruthTable::from_fn(4, |x| (x * 11 + 5) % 7 < 3);
        let r = obdd_optimal_order(&f).unwrap();
        let seq = obdd_optimal_order_with(&f, Exec::Sequential).unwrap();
        assert_eq!(r, seq);
        let mut best = usize::MAX;
        let mut perm = vec![0, 1, 2, 3];
        permute(&mut perm, 0, &mut |p| {
            best = best.min(obdd_build(&f, p).unwrap().size());
        });
        assert_eq!(r.size, best);
        assert_eq!(obdd_build(&f, &r.order).unwrap().size(), best);
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }
}
