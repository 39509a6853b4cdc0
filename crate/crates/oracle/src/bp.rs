use std::collections::HashSet;

use ttmin_core::TruthTable;

/// Reduced OBDD size (non-terminal nodes) under `order` (first entry read
/// first), counted from the definition: at level `k` one node per distinct
/// subfunction, over assignments to the first `k` variables, that depends
/// on `order[k]`.
pub fn brute_obdd_size(tt: &TruthTable, order: &[usize]) -> usize {
    level_widths(tt, order).iter().sum()
}

fn level_widths(tt: &TruthTable, order: &[usize]) -> Vec<usize> {
    let n = tt.n();
    (0..n)
        .map(|k| {
            let rest = n - k;
            let mut subs: HashSet<Vec<bool>> = HashSet::new();
            for prefix in 0..1usize << k {
                let mut base = 0;
                for (j, &v) in order[..k].iter().enumerate() {
                    base |= (prefix >> j & 1) << v;
                }
                let sub: Vec<bool> = (0..1usize << rest)
                    .map(|s| {
                        let mut x = base;
                        for (j, &v) in order[k..].iter().enumerate() {
                            x |= (s >> j & 1) << v;
                        }
                        tt.get(x)
                    })
                    .collect();
                // bit 0 of `s` is order[k]
                let depends = (0..sub.len()).step_by(2).any(|s| sub[s] != sub[s + 1]);
                if depends {
                    subs.insert(sub);
                }
            }
            subs.len()
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest OBDD size over all `n!` orders.
pub fn brute_obdd_min_size(tt: &TruthTable) -> usize {
    assert!(tt.n() <= 8, "order enumeration limited to n <= 8");
    permutations(tt.n())
        .iter()
        .map(|o| brute_obdd_size(tt, o))
        .min()
        .expect("at least one order")
}

/// True iff some order gives an OBDD with at most one node per level.
pub fn brute_width_one(tt: &TruthTable) -> bool {
    assert!(tt.n() <= 8, "order enumeration limited to n <= 8");
    permutations(tt.n())
        .iter()
        .any(|o| level_widths(tt, o).iter().all(|&w| w <= 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let and2: TruthTable = "0001".parse().unwrap();
        assert_eq!(brute_obdd_size(&and2, &[0, 1]), 2);
        assert_eq!(brute_obdd_min_size(&TruthTable::parity(4)), 7);
        let mux = TruthTable::from_fn(3, |x| if x & 4 != 0 { x & 2 != 0 } else { x & 1 != 0 });
        assert_eq!(brute_obdd_min_size(&mux), 3);
        assert_eq!(brute_obdd_size(&mux, &[0, 1, 2]), 5);
        assert!(brute_width_one(&and2));
        assert!(!brute_width_one(&TruthTable::parity(2)));
    }
}
