use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{cap, Error, Result};

pub const SET_COVER_CAP: usize = 20;

/// Set cover instance over the universe `1..=m`. `partition`, when present,
/// gives the block (0, 1 or 2) of each element for the three-partite
/// variant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetCoverInstance {
    pub m: usize,
    pub sets: Vec<Vec<usize>>,
    pub k: usize,
    pub partition: Option<Vec<u8>>,
}

impl SetCoverInstance {
    pub fn new(m: usize, sets: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        let inst = SetCoverInstance {
            m,
            sets,
            k,
            partition: None,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn three_partite(m: usize, partition: Vec<u8>, sets: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        let inst = SetCoverInstance {
            m,
            sets,
            k,
            partition: Some(partition),
        };
        inst.validate_3psc()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.m > 64 {
            return Err(Error::InvalidArgument(format!("universe size {} outside 1..=64", self.m)));
        }
        for s in &self.sets {
            if s.is_empty() {
                return Err(Error::InvalidArgument("empty set".into()));
            }
            if let Some(&d) = s.iter().find(|&&d| d == 0 || d > self.m) {
                return Err(Error::InvalidArgument(format!("element {d} outside 1..={}", self.m)));
            }
        }
        Ok(())
    }

    /// Three elements per set, one per block, distinct sets (hence an
    /// anti-chain) covering the universe.
    pub fn validate_3psc(&self) -> Result<()> {
        self.validate()?;
        let part = self
            .partition
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("missing partition".into()))?;
        if part.len() != self.m || part.iter().any(|&b| b > 2) {
            return Err(Error::InvalidArgument("partition must give a block 0..=2 per element".into()));
        }
        let mut seen = Vec::new();
        for s in &self.sets {
            let mut blocks: Vec<u8> = s.iter().map(|&d| part[d - 1]).collect();
            blocks.sort_unstable();
            if s.len() != 3 || blocks != [0, 1, 2] {
                return Err(Error::InvalidArgument(format!(
                    "set {s:?} must have one element from each block"
                )));
            }
            let mask = mask_of(s);
            if seen.contains(&mask) {
                return Err(Error::InvalidArgument(format!("duplicate set {s:?}")));
            }
            seen.push(mask);
        }
        if seen.iter().fold(0, |a, &b| a | b) != full(self.m) {
            return Err(Error::InvalidArgument("sets do not cover the universe".into()));
        }
        Ok(())
    }

    pub fn masks(&self) -> Vec<u64> {
        self.sets.iter().map(|s| mask_of(s)).collect()
    }
}

pub(crate) fn mask_of(s: &[usize]) -> u64 {
    s.iter().fold(0, |a, &d| a | 1 << (d - 1))
}

fn full(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1 << m) - 1
    }
}

/// Minimum number of sets covering `1..=m`, `None` when no cover exists.
pub fn brute_set_cover(inst: &SetCoverInstance) -> Result<Option<usize>> {
    inst.validate()?;
    let s = inst.sets.len();
    cap("set cover", s, SET_COVER_CAP)?;
    let masks = inst.masks();
    let goal = full(inst.m);
    // union over every subset, built from the subset without its top bit
    let mut union = vec![0u64; 1 << s];
    let mut best: Option<usize> = None;
    for sub in 0usize..1 << s {
        if sub > 0 {
            let top = usize::BITS - 1 - sub.leading_zeros();
            union[sub] = union[sub & !(1 << top)] | masks[top as usize];
        }
        if union[sub] == goal {
            let c = sub.count_ones() as usize;
            best = Some(best.map_or(c, |b| b.min(c)));
        }
    }
    Ok(best)
}

/// Text form: `m` and `k` on the first two lines, then one comma-separated
/// set per line; an optional `partition: b1,b2,...` line gives 1-based
/// blocks. `#` starts a comment.
impl FromStr for SetCoverInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let num = |l: Option<&str>, what: &str| -> Result<usize> {
            l.ok_or_else(|| Error::Parse(format!("missing {what}")))?
                .parse()
                .map_err(|_| Error::Parse(format!("bad {what}")))
        };
        let m = num(lines.next(), "m")?;
        let k = num(lines.next(), "k")?;
        let list = |l: &str| -> Result<Vec<usize>> {
            l.split(',')
                .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad element {t:?}"))))
                .collect()
        };
        let mut sets = Vec::new();
        let mut partition = None;
        for l in lines {
            if let Some(rest) = l.strip_prefix("partition:") {
                let blocks = list(rest)?;
                if blocks.iter().any(|&b| !(1..=3).contains(&b)) {
                    return Err(Error::Parse("partition blocks must be 1, 2 or 3".into()));
                }
                partition = Some(blocks.iter().map(|&b| (b - 1) as u8).collect());
            } else {
                sets.push(list(l)?);
            }
        }
        let inst = SetCoverInstance { m, sets, k, partition };
        if inst.partition.is_some() {
            inst.validate_3psc()?;
        } else {
            inst.validate()?;
        }
        Ok(inst)
    }
}

impl fmt::Display for SetCoverInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &mut dyn Iterator<Item = usize>| v.map(|d| d.to_string()).collect::<Vec<_>>().join(",");
        writeln!(f, "{}", self.m)?;
        writeln!(f, "{}", self.k)?;
        if let Some(p) = &self.partition {
            writeln!(f, "partition: {}", join(&mut p.iter().map(|&b| b as usize + 1)))?;
        }
        for s in &self.sets {
            writeln!(f, "{}", join(&mut s.iter().copied()))?;
        }
        Ok(())
    }
}
