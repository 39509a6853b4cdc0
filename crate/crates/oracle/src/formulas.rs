use std::collections::HashMap;

use crate::{full_mask, table_count, trees::TABLE_ORACLE_CAP, var_word};

/// Leaf budget of the enumeration; enough for every function on 3
/// variables in both models (checked at runtime).
pub const FORMULA_LEAF_BOUND: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Kind {
    Const,
    Lit,
    /// Gate with operator 0 or 1.
    Gate(u8),
}

/// What composition needs to know about a formula: its function, the
/// variables written in it, its depth (capped at 2) and its top symbol.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct Key {
    tt: u64,
    vars: u8,
    depth: u8,
    kind: Kind,
}

struct Enumerator {
    ops: [fn(u64, u64) -> u64; 2],
    /// Identity of each operator, the table a gate starts folding from.
    units: [u64; 2],
    with_const: bool,
    full: u64,
    seen: HashMap<Key, usize>,
    /// `(key, leaves)` in discovery order, which is nondecreasing in leaves.
    pool: Vec<(Key, usize)>,
}

struct Partial {
    tt: u64,
    vars: u8,
    shared: u8,
    deep: u8,
    depth: u8,
    count: usize,
    leaves: usize,
}

impl Enumerator {
    fn add(&mut self, key: Key, leaves: usize) -> bool {
        if self.seen.contains_key(&key) {
            return false;
        }
        self.seen.insert(key, leaves);
        self.pool.push((key, leaves));
        true
    }

    /// All gates of operator `op` with exactly `target` leaves whose
    /// children come from the first `limit` pool entries.
    fn gates(&self, op: u8, target: usize, limit: usize, out: &mut Vec<(Key, usize)>) {
        let kids: Vec<(Key, usize)> = self.pool[..limit]
            .iter()
            .copied()
            .filter(|(k, _)| match k.kind {
                Kind::Lit => true,
                Kind::Const => self.with_const && op == 1,
                Kind::Gate(o) => o != op,
            })
            .collect();
        let start = Partial {
            tt: self.units[op as usize],
            vars: 0,
            shared: 0,
            deep: 0,
            depth: 0,
            count: 0,
            leaves: 0,
        };
        self.extend(op, &kids, 0, start, target, out);
    }

    fn extend(&self, op: u8, kids: &[(Key, usize)], from: usize, p: Partial, target: usize, out: &mut Vec<(Key, usize)>) {
        if p.leaves == target && p.count >= 2 {
            out.push((
                Key {
                    tt: p.tt & self.full,
                    vars: p.vars,
                    depth: p.depth,
                    kind: Kind::Gate(op),
                },
                target,
            ));
        }
        for (i, &(k, l)) in kids.iter().enumerate().skip(from) {
            if p.leaves + l > target {
                // kids are sorted by leaves
                break;
            }
            let shared = p.shared | (p.vars & k.vars);
            let deep = if k.depth >= 2 { p.deep | k.vars } else { p.deep };
            if shared & deep != 0 {
                continue;
            }
            let next = Partial {
                tt: (self.ops[op as usize])(p.tt, k.tt),
                vars: p.vars | k.vars,
                shared,
                deep,
                depth: p.depth.max((k.depth + 1).min(2)),
                count: p.count + 1,
                leaves: p.leaves + l,
            };
            self.extend(op, kids, i + 1, next, target, out);
        }
    }

    /// Runs leaf counts `1..=bound` and returns the least leaf count of
    /// each function reached; `done` stops early once it holds.
    fn run(&mut self, n: usize, bound: usize, done: impl Fn(&[usize]) -> bool) -> Vec<usize> {
        let count = table_count(n);
        let mut best = vec![usize::MAX; count];
        best[0] = 0;
        best[self.full as usize] = 0;
        if self.with_const {
            self.add(
                Key {
                    tt: self.full,
                    vars: 0,
                    depth: 0,
                    kind: Kind::Const,
                },
                0,
            );
        }
        for i in 0..n {
            let key = Key {
                tt: var_word(n, i),
                vars: 1 << i,
                depth: 0,
                kind: Kind::Lit,
            };
            self.add(key, 1);
            best[key.tt as usize] = 1;
        }
        for leaves in 1..=bound {
            if done(&best) {
                break;
            }
            // operator 0 first: a sum may wrap a same-size product with a constant
            for op in 0..2 {
                let limit = self.pool.len();
                let mut found = Vec::new();
                self.gates(op, leaves, limit, &mut found);
                for (key, l) in found {
                    if self.add(key, l) {
                        let b = &mut best[key.tt as usize];
                        *b = (*b).min(l);
                    }
                }
            }
        }
        best
    }
}

fn to_option(v: Vec<usize>) -> Vec<Option<usize>> {
    v.into_iter().map(|x| (x != usize::MAX).then_some(x)).collect()
}

fn shift_word(n: usize, w: u64, a: usize) -> u64 {
    (0..1usize << n)
        .filter(|&x| w >> (x ^ a) & 1 == 1)
        .fold(0, |acc, x| acc | 1 << x)
}

fn is_unate(n: usize, w: u64) -> bool {
    (0..n).all(|i| {
        let pairs = (0..1usize << n).filter(|x| x >> i & 1 == 0);
        let up = pairs.clone().all(|x| w >> x & 1 <= w >> (x | 1 << i) & 1);
        let down = pairs.clone().all(|x| w >> x & 1 >= w >> (x | 1 << i) & 1);
        up || down
    })
}

/// Least number of leaves of a unate formula of order 2 (alternating
/// and/or gates of any fan-in, literal leaves, one polarity per variable,
/// every variable's occurrences inducing a sub-formula of depth at most 2)
/// for each function on `n` variables; `None` outside the class. Constant
/// functions count 0.
///
/// Monotone formulas are enumerated by leaf count and every polarity pattern
/// is applied afterwards.
pub fn brute_uf2_leaves(n: usize) -> Vec<Option<usize>> {
    assert!(n <= TABLE_ORACLE_CAP, "oracle limited to n <= {TABLE_ORACLE_CAP}");
    let full = full_mask(n);
    let mut e = Enumerator {
        ops: [|a, b| a & b, |a, b| a | b],
        units: [u64::MAX, 0],
        with_const: false,
        full,
        seen: HashMap::new(),
        pool: Vec::new(),
    };
    let monotone: Vec<u64> = (0..table_count(n) as u64)
        .filter(|&w| (0..n).all(|i| {
            (0..1usize << n)
                .filter(|x| x >> i & 1 == 0)
                .all(|x| w >> x & 1 <= w >> (x | 1 << i) & 1)
        }))
        .collect();
    let best = e.run(n, FORMULA_LEAF_BOUND, |b| monotone.iter().all(|&w| b[w as usize] != usize::MAX));
    assert!(
        monotone.iter().all(|&w| best[w as usize] != usize::MAX),
        "leaf bound too small"
    );
    let mut out = vec![usize::MAX; table_count(n)];
    for (w, &b) in best.iter().enumerate() {
        if b == usize::MAX {
            continue;
        }
        for a in 0..1usize << n {
            let s = shift_word(n, w as u64, a) as usize;
            out[s] = out[s].min(b);
        }
    }
    debug_assert!(out
        .iter()
        .enumerate()
        .all(|(w, &b)| (b != usize::MAX) == is_unate(n, w as u64)));
    to_option(out)
}

/// Least number of variable leaves of an arithmetic formula of order 2 over
/// GF(2) (alternating product and sum gates, constant 1 allowed under sums,
/// no negations, the same depth condition per variable) for each function
/// on `n` variables.
pub fn brute_f2a_leaves(n: usize) -> Vec<usize> {
    assert!(n <= TABLE_ORACLE_CAP, "oracle limited to n <= {TABLE_ORACLE_CAP}");
    let full = full_mask(n);
    let mut e = Enumerator {
        ops: [|a, b| a & b, |a, b| a ^ b],
        units: [u64::MAX, 0],
        with_const: true,
        full,
        seen: HashMap::new(),
        pool: Vec::new(),
    };
    let best = e.run(n, FORMULA_LEAF_BOUND, |b| b.iter().all(|&x| x != usize::MAX));
    assert!(best.iter().all(|&x| x != usize::MAX), "leaf bound too small");
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let u = brute_uf2_leaves(2);
        assert_eq!(u[0b1000], Some(2));
        assert_eq!(u[0b0110], None);
        assert_eq!(u[0b0111], Some(2));
        assert_eq!(u[0], Some(0));
        let f = brute_f2a_leaves(2);
        assert_eq!(f[0b0110], 2);
        assert_eq!(f[0b0111], 2);
        assert_eq!(f[0b1001], 2);
        let u3 = brute_uf2_leaves(3);
        // majority: 0b11101000
        assert_eq!(u3[0b1110_1000], Some(6));
    }
}
