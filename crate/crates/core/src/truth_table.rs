//! Truth tables, partial truth tables and cube restrictions.
//!
//! Variable `x_{j+1}` is bit `j` of the table index (x1 is the least
//! significant bit). Text renderings list entries in index order, so the
//! character at position `i` is `f(i)`. Variables are 0-based in the API.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 20;

#[inline]
fn word_count(n: usize) -> usize {
    if n <= 6 {
        1
    } else {
        1 << (n - 6)
    }
}

#[inline]
fn tail_mask(n: usize) -> u64 {
    if n >= 6 {
        !0
    } else {
        (1u64 << (1 << n)) - 1
    }
}

/// Inserts bit `b` at position `i` of `x`, shifting higher bits up.
#[inline]
pub(crate) fn insert_bit(x: usize, i: usize, b: bool) -> usize {
    let low = x & ((1 << i) - 1);
    ((x >> i) << (i + 1)) | ((b as usize) << i) | low
}

/// Full truth table on `n` variables, word packed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    n: usize,
    words: Vec<u64>,
}

impl TruthTable {
    pub fn zeros(n: usize) -> Self {
        assert!(n <= MAX_VARS, "n = {n} exceeds {MAX_VARS}");
        TruthTable {
            n,
            words: vec![0; word_count(n)],
        }
    }

    /// Constant function as a 0-variable table.
    pub fn constant(v: bool) -> Self {
        let mut t = Self::zeros(0);
        t.set(0, v);
        t
    }

    /// Constant function on `n` (dummy) variables.
    pub fn constant_n(n: usize, v: bool) -> Self {
        let t = Self::zeros(n);
        if v {
            t.not()
        } else {
            t
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> bool) -> Self {
        let mut t = Self::zeros(n);
        for i in 0..(1usize << n) {
            if f(i) {
                t.words[i >> 6] |= 1 << (i & 63);
            }
        }
        t
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let len = bits.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::BadLength(len));
        }
        let n = len.trailing_zeros() as usize;
        if n > MAX_VARS {
            return Err(Error::CapExceeded {
                what: "truth table",
                n,
                cap: MAX_VARS,
            });
        }
        Ok(Self::from_fn(n, |i| bits[i]))
    }

    /// Builds a table from raw words; bits beyond `2^n` must be clear.
    pub fn from_words(n: usize, words: Vec<u64>) -> Self {
        assert_eq!(words.len(), word_count(n));
        let mut t = TruthTable { n, words };
        let last = t.words.len() - 1;
        t.words[last] &= tail_mask(n);
        t
    }

    /// Table for `n <= 6` from the low `2^n` bits of `w`.
    pub fn from_u64(n: usize, w: u64) -> Self {
        assert!(n <= 6);
        Self::from_words(n, vec![w])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        1 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Low word; the whole table when `n <= 6`.
    pub fn as_u64(&self) -> u64 {
        self.words[0]
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        let m = 1u64 << (i & 63);
        if v {
            self.words[i >> 6] |= m;
        } else {
            self.words[i >> 6] &= !m;
        }
    }

    pub fn evaluate(&self, a: &[bool]) -> Result<bool> {
        if a.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: a.len(),
            });
        }
        Ok(self.get(index_of(a)))
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// `Some(v)` when the function is constant `v`.
    pub fn constant_value(&self) -> Option<bool> {
        let ones = self.count_ones();
        if ones == 0 {
            Some(false)
        } else if ones == self.len() as u64 {
            Some(true)
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.get(i))
    }

    pub fn not(&self) -> Self {
        Self::from_words(self.n, self.words.iter().map(|w| !w).collect())
    }

    fn zip(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "arity mismatch");
        Self::from_words(
            self.n,
            self.words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| op(*a, *b))
                .collect(),
        )
    }

    pub fn and(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn or(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn xor(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a ^ b)
    }

    /// `f(x) <= g(x)` pointwise.
    pub fn implies(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Fixes `x_i = b`; the result has `n - 1` variables.
    pub fn restrict_var(&self, i: usize, b: bool) -> Self {
        assert!(i < self.n);
        Self::from_fn(self.n - 1, |x| self.get(insert_bit(x, i, b)))
    }

    pub fn restrict(&self, c: &CubeRestriction) -> Result<Self> {
        if c.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: c.len(),
            });
        }
        let free: Vec<usize> = c.free_vars();
        let base = c.fixed_index();
        Ok(Self::from_fn(free.len(), |y| {
            let mut idx = base;
            for (k, &v) in free.iter().enumerate() {
                idx |= ((y >> k) & 1) << v;
            }
            self.get(idx)
        }))
    }

    pub fn depends_on(&self, i: usize) -> bool {
        assert!(i < self.n);
        if i < 6 {
            let s = 1 << i;
            let m = VAR_MASKS[i];
            self.words.iter().any(|w| ((w >> s) ^ w) & m != 0)
        } else {
            let s = 1 << (i - 6);
            (0..self.words.len())
                .filter(|k| k & s == 0)
                .any(|k| self.words[k] != self.words[k | s])
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.depends_on(i)).collect()
    }

    /// Drops dummy variables; the map lists surviving original indices.
    pub fn reduce_to_support(&self) -> (TruthTable, Vec<usize>) {
        let sup = self.support();
        if sup.len() == self.n {
            return (self.clone(), sup);
        }
        let t = Self::from_fn(sup.len(), |y| {
            let mut idx = 0;
            for (k, &v) in sup.iter().enumerate() {
                idx |= ((y >> k) & 1) << v;
            }
            self.get(idx)
        });
        (t, sup)
    }

    /// Places this table's variables at positions `vars` of an `n`-variable
    /// table; other variables are dummies.
    pub fn embed(&self, n: usize, vars: &[usize]) -> Self {
        assert_eq!(vars.len(), self.n);
        Self::from_fn(n, |x| {
            let mut y = 0;
            for (k, &v) in vars.iter().enumerate() {
                y |= ((x >> v) & 1) << k;
            }
            self.get(y)
        })
    }

    /// Table of the variables in `vars` only, reading the others at 0.
    /// Callers use it when the function does not depend on the others.
    pub fn project(&self, vars: &[usize]) -> Self {
        Self::from_fn(vars.len(), |y| {
            let mut idx = 0;
            for (k, &v) in vars.iter().enumerate() {
                idx |= ((y >> k) & 1) << v;
            }
            self.get(idx)
        })
    }

    /// `g(x) = f(x xor a)`.
    pub fn shift_inputs(&self, a: usize) -> Self {
        Self::from_fn(self.n, |x| self.get(x ^ a))
    }

    pub fn equal_functional(&self, other: &Self) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(self.words == other.words)
    }

    /// One character per entry, index order.
    pub fn to_text(&self) -> String {
        (0..self.len())
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::from_fn(n, |x| (x >> i) & 1 == 1)
    }

    pub fn and_all(n: usize) -> Self {
        Self::from_fn(n, |x| x == (1 << n) - 1)
    }

    pub fn or_all(n: usize) -> Self {
        Self::from_fn(n, |x| x != 0)
    }

    pub fn parity(n: usize) -> Self {
        Self::from_fn(n, |x| x.count_ones() % 2 == 1)
    }

    pub fn majority(n: usize) -> Self {
        Self::from_fn(n, |x| 2 * x.count_ones() as usize > n)
    }
}

/// Mask of table positions with bit `i` clear, for in-word variables.
pub(crate) const VAR_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// Table index of an assignment given as `[x1, x2, ...]`.
pub fn index_of(a: &[bool]) -> usize {
    a.iter()
        .enumerate()
        .fold(0, |acc, (j, &b)| acc | ((b as usize) << j))
}

/// Assignment `[x1, ..., xn]` of a table index.
pub fn assignment_of(i: usize, n: usize) -> Vec<bool> {
    (0..n).map(|j| (i >> j) & 1 == 1).collect()
}

/// Renders an index as a bit string, x1 first.
pub fn bits_string(i: usize, n: usize) -> String {
    (0..n)
        .map(|j| if (i >> j) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Parses a bit string written x1 first.
pub fn parse_bits(s: &str) -> Result<usize> {
    let mut x = 0;
    for (j, ch) in s.trim().chars().enumerate() {
        match ch {
            '0' => {}
            '1' => x |= 1 << j,
            c => return Err(Error::BadChar(c)),
        }
    }
    Ok(x)
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, {})", self.n, self.to_text())
    }
}

impl Serialize for TruthTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl Serialize for PartialTruthTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

/// Table over {0, 1, ★}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialTruthTable {
    n: usize,
    entries: Vec<Option<bool>>,
}

impl PartialTruthTable {
    pub fn all_stars(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        PartialTruthTable {
            n,
            entries: vec![None; 1 << n],
        }
    }

    pub fn from_entries(entries: Vec<Option<bool>>) -> Result<Self> {
        let len = entries.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::BadLength(len));
        }
        let n = len.trailing_zeros() as usize;
        crate::error::cap("partial truth table", n, MAX_VARS)?;
        Ok(PartialTruthTable { n, entries })
    }

    pub fn from_table(tt: &TruthTable) -> Self {
        PartialTruthTable {
            n: tt.n(),
            entries: (0..tt.len()).map(|i| Some(tt.get(i))).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        self.entries[i]
    }

    pub fn set(&mut self, i: usize, v: Option<bool>) {
        self.entries[i] = v;
    }

    pub fn entries(&self) -> &[Option<bool>] {
        &self.entries
    }

    pub fn count_stars(&self) -> usize {
        self.entries.iter().filter(|e| e.is_none()).count()
    }

    pub fn consistent_with(&self, tt: &TruthTable) -> Result<bool> {
        if tt.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: tt.n(),
            });
        }
        Ok(self
            .entries
            .iter()
            .enumerate()
            .all(|(i, e)| e.is_none_or(|v| v == tt.get(i))))
    }

    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|e| match e {
                None => '*',
                Some(true) => '1',
                Some(false) => '0',
            })
            .collect()
    }
}

impl fmt::Display for PartialTruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for PartialTruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialTruthTable(n={}, {})", self.n, self.to_text())
    }
}

/// Result of parsing table text: full when no star occurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedTable {
    Full(TruthTable),
    Partial(PartialTruthTable),
}

fn parse_entry(c: char) -> Result<Option<bool>> {
    match c {
        '0' => Ok(Some(false)),
        '1' => Ok(Some(true)),
        '*' | '★' => Ok(None),
        c => Err(Error::BadChar(c)),
    }
}

/// Parses the text format: an optional `n=<k>` line, then the table line.
pub fn from_text(s: &str) -> Result<ParsedTable> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
    let mut first = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut declared = None;
    if let Some(rest) = first.strip_prefix("n=") {
        let k: usize = rest
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad header {first:?}")))?;
        crate::error::cap("truth table", k, MAX_VARS)?;
        declared = Some(k);
        first = lines
            .next()
            .ok_or_else(|| Error::Parse("missing table line".into()))?;
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("unexpected line {extra:?}")));
    }
    let entries: Vec<Option<bool>> = first.chars().map(parse_entry).collect::<Result<_>>()?;
    let len = entries.len();
    match declared {
        Some(k) if len != 1 << k => return Err(Error::BadLength(len)),
        // A single entry is only accepted with an explicit `n=0` header.
        None if len < 2 => return Err(Error::BadLength(len)),
        _ => {}
    }
    if !len.is_power_of_two() {
        return Err(Error::BadLength(len));
    }
    let n = len.trailing_zeros() as usize;
    crate::error::cap("truth table", n, MAX_VARS)?;
    if entries.iter().all(Option::is_some) {
        Ok(ParsedTable::Full(TruthTable::from_fn(n, |i| {
            entries[i] == Some(true)
        })))
    } else {
        Ok(ParsedTable::Partial(PartialTruthTable { n, entries }))
    }
}

impl FromStr for TruthTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match from_text(s)? {
            ParsedTable::Full(t) => Ok(t),
            ParsedTable::Partial(_) => Err(Error::BadChar('*')),
        }
    }
}

impl FromStr for PartialTruthTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match from_text(s)? {
            ParsedTable::Full(t) => Ok(PartialTruthTable::from_table(&t)),
            ParsedTable::Partial(p) => Ok(p),
        }
    }
}

/// Pattern over {0, 1, ★}; position `j` constrains `x_{j+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CubeRestriction {
    pattern: Vec<Option<bool>>,
}

impl CubeRestriction {
    pub fn new(pattern: Vec<Option<bool>>) -> Self {
        CubeRestriction { pattern }
    }

    pub fn free(n: usize) -> Self {
        CubeRestriction {
            pattern: vec![None; n],
        }
    }

    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pattern.is_empty()
    }

    pub fn pattern(&self) -> &[Option<bool>] {
        &self.pattern
    }

    pub fn free_vars(&self) -> Vec<usize> {
        (0..self.pattern.len())
            .filter(|&j| self.pattern[j].is_none())
            .collect()
    }

    /// Index with every free variable at 0.
    pub fn fixed_index(&self) -> usize {
        self.pattern
            .iter()
            .enumerate()
            .fold(0, |acc, (j, e)| acc | ((*e == Some(true)) as usize) << j)
    }

    /// Applies `inner` to the free positions of `self`.
    pub fn compose(&self, inner: &CubeRestriction) -> Result<Self> {
        let free = self.free_vars();
        if inner.len() != free.len() {
            return Err(Error::DimensionMismatch {
                expected: free.len(),
                got: inner.len(),
            });
        }
        let mut pattern = self.pattern.clone();
        for (k, &v) in free.iter().enumerate() {
            pattern[v] = inner.pattern[k];
        }
        Ok(CubeRestriction { pattern })
    }
}

impl FromStr for CubeRestriction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(CubeRestriction {
            pattern: s.trim().chars().map(parse_entry).collect::<Result<_>>()?,
        })
    }
}

impl fmt::Display for CubeRestriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.pattern {
            let c = match e {
                None => '*',
                Some(true) => '1',
                Some(false) => '0',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let and2 = tt("0001");
        assert_eq!(and2.n(), 2);
        assert_eq!(and2, TruthTable::and_all(2));
        assert_eq!(tt("01"), TruthTable::var(1, 0));
        match from_text("0*11").unwrap() {
            ParsedTable::Partial(p) => {
                assert_eq!(p.n(), 2);
                assert_eq!(p.get(1), None);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(from_text("n=2\n0111").unwrap(), ParsedTable::Full(tt("0111")));
        assert_eq!(from_text("010"), Err(Error::BadLength(3)));
        assert_eq!(from_text("01x1"), Err(Error::BadChar('x')));
        assert!(matches!(from_text("n=3\n0101"), Err(Error::BadLength(4))));
        assert_eq!(from_text("n=0\n1").unwrap(), ParsedTable::Full(TruthTable::constant(true)));
    }

    #[test]
    fn evaluate_examples() {
        let and2 = tt("0001");
        assert!(and2.evaluate(&[true, true]).unwrap());
        assert!(!and2.evaluate(&[true, false]).unwrap());
        let par3 = TruthTable::parity(3);
        assert!(!par3.evaluate(&[true, false, true]).unwrap());
        assert!(matches!(
            and2.evaluate(&[true]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn restrict_examples() {
        let and2 = tt("0001");
        assert_eq!(and2.restrict(&"1*".parse().unwrap()).unwrap(), tt("01"));
        assert_eq!(and2.restrict(&"0★".parse().unwrap()).unwrap(), tt("00"));
        let maj3 = TruthTable::majority(3);
        assert_eq!(maj3.restrict(&"**1".parse().unwrap()).unwrap(), tt("0111"));
        assert!(and2.restrict(&"1".parse().unwrap()).is_err());
    }

    #[test]
    fn support_examples() {
        assert_eq!(tt("0101").reduce_to_support(), (tt("01"), vec![0]));
        assert_eq!(tt("0001").reduce_to_support(), (tt("0001"), vec![0, 1]));
        assert_eq!(
            tt("1111").reduce_to_support(),
            (TruthTable::constant(true), vec![])
        );
    }

    #[test]
    fn equality_and_counts() {
        let and2 = tt("0001");
        assert!(and2.equal_functional(&tt("0001")).unwrap());
        assert!(!and2.equal_functional(&tt("0111")).unwrap());
        let built = TruthTable::from_fn(2, |i| {
            let a = assignment_of(i, 2);
            a[0] ^ a[1]
        });
        assert!(TruthTable::parity(2).equal_functional(&built).unwrap());
        assert_eq!(and2.count_ones(), 1);
        assert_eq!(tt("0111").count_ones(), 3);
        assert_eq!(TruthTable::parity(3).count_ones(), 4);
    }

    #[test]
    fn consistency() {
        let p: PartialTruthTable = "0*".parse().unwrap();
        assert!(p.consistent_with(&tt("01")).unwrap());
        assert!(!p.consistent_with(&tt("11")).unwrap());
        let q: PartialTruthTable = "**".parse().unwrap();
        assert!(q.consistent_with(&tt("0110")).is_err());
    }

    #[test]
    fn depends_on_wide_tables() {
        let t = TruthTable::var(9, 7);
        assert_eq!(t.support(), vec![7]);
        let t = TruthTable::var(9, 3);
        assert_eq!(t.support(), vec![3]);
        assert_eq!(t.reduce_to_support().0, tt("01"));
    }
}
