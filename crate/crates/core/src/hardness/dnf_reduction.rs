use serde::Serialize;

use super::SetCoverInstance;
use crate::error::{cap, Error, Result};
use crate::gf2::vec_string;
use crate::truth_table::PartialTruthTable;

pub const DNF_REDUCTION_CAP: usize = 9;

/// Partial table on `t = 3q` variables: 1 on the element vectors `v`, 0 on
/// the vectors one step below a set vector `w`, 0 on the lower neighbours
/// of the `v`s that lie above no `w`, free elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedDnfInstance {
    pub ptt: PartialTruthTable,
    pub k: usize,
    pub q: usize,
    pub t: usize,
    pub v: Vec<u64>,
    pub w: Vec<u64>,
    pub a_points: Vec<u64>,
    pub b_points: Vec<u64>,
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The first `count` weight-`q/2` vectors of length `q`, in lexicographic
/// order of their bit strings (coordinate 1 first).
fn block_patterns(q: usize, count: usize) -> Vec<u64> {
    let mut pats: Vec<u64> = (0u64..1 << q)
        .filter(|p| p.count_ones() as usize == q / 2)
        .collect();
    pats.sort_by_key(|&p| vec_string(p, q));
    pats.truncate(count);
    pats
}

pub fn reduce_3psc_to_mondnf_star(inst: &SetCoverInstance) -> Result<ReducedDnfInstance> {
    inst.validate_3psc()?;
    let n = inst.m;
    cap("three-partite set cover reduction", n, DNF_REDUCTION_CAP)?;
    let q = (2..).step_by(2).find(|&q| binom(q, q / 2) >= n).expect("finite");
    let t = 3 * q;
    let part = inst.partition.as_ref().expect("validated");
    let pats = block_patterns(q, n);
    let block_mask = (1u64 << q) - 1;
    let all = (1u64 << t) - 1;
    let v: Vec<u64> = (0..n)
        .map(|i| {
            let shift = part[i] as usize * q;
            (all & !(block_mask << shift)) | pats[i] << shift
        })
        .collect();
    let w: Vec<u64> = inst
        .sets
        .iter()
        .map(|s| s.iter().fold(all, |acc, &d| acc & v[d - 1]))
        .collect();
    let mut ptt = PartialTruthTable::all_stars(t);
    let mut a_points = Vec::new();
    for &wi in &w {
        for j in 0..t {
            if wi >> j & 1 == 1 {
                a_points.push(wi & !(1 << j));
            }
        }
    }
    let mut b_points = Vec::new();
    for &vi in &v {
        for j in 0..t {
            let x = vi & !(1 << j);
            if vi >> j & 1 == 1 && w.iter().all(|&wk| wk & !x != 0) {
                b_points.push(x);
            }
        }
    }
    a_points.sort_unstable();
    a_points.dedup();
    b_points.sort_unstable();
    b_points.dedup();
    for &x in a_points.iter().chain(&b_points) {
        ptt.set(x as usize, Some(false));
    }
    for &x in &v {
        if ptt.get(x as usize) == Some(false) {
            return Err(Error::InvalidArgument("element vector collides with a 0-entry".into()));
        }
        ptt.set(x as usize, Some(true));
    }
    Ok(ReducedDnfInstance {
        ptt,
        k: inst.k,
        q,
        t,
        v,
        w,
        a_points,
        b_points,
    })
}

/// Checks that `d` lies in set `i` exactly when `w_i <= v_d`, and that the
/// `v`s and the `w`s each have constant weight (`5q/2` and `3q/2`).
pub fn verify_dnf_conditions(inst: &SetCoverInstance, red: &ReducedDnfInstance) -> Result<()> {
    for (i, s) in inst.sets.iter().enumerate() {
        for d in 1..=inst.m {
            let below = red.w[i] & !red.v[d - 1] == 0;
            if below != s.contains(&d) {
                return Err(Error::InvalidArgument(format!(
                    "membership of {d} in set {} disagrees with dominance",
                    i + 1
                )));
            }
        }
    }
    let q = red.q;
    if red.v.iter().any(|x| x.count_ones() as usize != 5 * q / 2) {
        return Err(Error::InvalidArgument("element vectors have unequal weight".into()));
    }
    if red.w.iter().any(|x| x.count_ones() as usize != 3 * q / 2) {
        return Err(Error::InvalidArgument("set vectors have unequal weight".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let inst = SetCoverInstance::three_partite(3, vec![0, 1, 2], vec![vec![1, 2, 3]], 1).unwrap();
        let r = reduce_3psc_to_mondnf_star(&inst).unwrap();
        assert_eq!((r.q, r.t), (4, 12));
        assert_eq!(r.w.len(), 1);
        assert_eq!(r.w[0].count_ones(), 6);
        assert!(r.v.iter().all(|v| v.count_ones() == 10));
        verify_dnf_conditions(&inst, &r).unwrap();
        assert_eq!(r.ptt.n(), 12);
        assert_eq!(r.a_points.len(), 6);
        assert!(block_patterns(4, 6) == vec![0b1100, 0b1010, 0b0110, 0b1001, 0b0101, 0b0011]);
    }

    #[test]
    fn malformed_rejected() {
        let bad = SetCoverInstance {
            m: 3,
            sets: vec![vec![1, 2, 3]],
            k: 1,
            partition: Some(vec![0, 0, 2]),
        };
        assert!(reduce_3psc_to_mondnf_star(&bad).is_err());
    }
}
