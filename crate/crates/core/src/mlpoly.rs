//! Multilinear polynomials over GF(2) and variable-disjoint decompositions.
//!
//! A polynomial on `n` variables stores one coefficient bit per monomial,
//! monomials indexed like table positions (bit `j` set means `x_{j+1}`
//! occurs). Coefficients live in a [`TruthTable`] so the Möbius transform
//! runs on packed words.

use std::fmt;

use serde::Serialize;

use crate::error::{cap, Error, Result};
use crate::truth_table::{insert_bit, TruthTable, VAR_MASKS};

/// Largest support handled by the decomposition routines.
pub const DECOMPOSE_CAP: usize = 14;

fn moebius_in_place(t: &TruthTable) -> TruthTable {
    let n = t.n();
    let mut w = t.words().to_vec();
    for j in 0..n.min(6) {
        let m = VAR_MASKS[j];
        let s = 1 << j;
        for x in &mut w {
            *x ^= (*x & m) << s;
        }
    }
    for j in 6..n {
        let s = 1 << (j - 6);
        for k in 0..w.len() {
            if k & s == 0 {
                w[k | s] ^= w[k];
            }
        }
    }
    TruthTable::from_words(n, w)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultilinearPoly {
    coeffs: TruthTable,
}

pub fn to_multilinear(tt: &TruthTable) -> MultilinearPoly {
    MultilinearPoly {
        coeffs: moebius_in_place(tt),
    }
}

pub fn to_truth_table(p: &MultilinearPoly) -> TruthTable {
    moebius_in_place(&p.coeffs)
}

impl MultilinearPoly {
    pub fn zero(n: usize) -> Self {
        MultilinearPoly {
            coeffs: TruthTable::zeros(n),
        }
    }

    pub fn from_coeffs(coeffs: TruthTable) -> Self {
        MultilinearPoly { coeffs }
    }

    /// Sum of the given monomials (repeated monomials cancel).
    pub fn from_monomials(n: usize, monomials: &[usize]) -> Self {
        let mut c = TruthTable::zeros(n);
        for &m in monomials {
            assert!(m < 1 << n);
            c.set(m, !c.get(m));
        }
        MultilinearPoly { coeffs: c }
    }

    pub fn constant(n: usize, c: bool) -> Self {
        Self::from_monomials(n, if c { &[0] } else { &[] })
    }

    pub fn n(&self) -> usize {
        self.coeffs.n()
    }

    pub fn coeffs(&self) -> &TruthTable {
        &self.coeffs
    }

    pub fn coeff(&self, monomial: usize) -> bool {
        self.coeffs.get(monomial)
    }

    pub fn constant_term(&self) -> bool {
        self.coeffs.get(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.count_ones() == 0
    }

    /// Monomials with nonzero coefficient, by increasing index.
    pub fn monomials(&self) -> Vec<usize> {
        self.coeffs.ones().collect()
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .ones()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Total variable occurrences over all monomials.
    pub fn leaf_count(&self) -> usize {
        self.coeffs.ones().map(|m| m.count_ones() as usize).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        MultilinearPoly {
            coeffs: self.coeffs.xor(&other.coeffs),
        }
    }

    pub fn add_constant(&self, c: bool) -> Self {
        let mut p = self.clone();
        if c {
            p.coeffs.set(0, !p.coeffs.get(0));
        }
        p
    }

    /// Product reduced by `x^2 = x`.
    pub fn mul(&self, other: &Self) -> Self {
        to_multilinear(&to_truth_table(self).and(&to_truth_table(other)))
    }

    pub fn evaluate(&self, x: usize) -> bool {
        // Sum of coefficients over monomials contained in x.
        let mut s = false;
        let mut sub = x;
        loop {
            s ^= self.coeffs.get(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & x;
        }
        s
    }

    fn check_var(&self, i: usize) -> Result<()> {
        if i >= self.n() {
            Err(Error::VarOutOfRange {
                index: i,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// `p|_{x_i=1} + p|_{x_i=0}`, still on `n` variables.
    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        self.check_var(i)?;
        let n = self.n();
        let mut w = self.coeffs.words().to_vec();
        if i < 6 {
            let s = 1 << i;
            for x in &mut w {
                *x = (*x >> s) & VAR_MASKS[i];
            }
        } else {
            let s = 1 << (i - 6);
            for k in 0..w.len() {
                if k & s == 0 {
                    w[k] = w[k | s];
                    w[k | s] = 0;
                }
            }
        }
        Ok(MultilinearPoly {
            coeffs: TruthTable::from_words(n, w),
        })
    }

    /// Substitutes `x_i = b`, keeping `n` variables.
    pub fn restrict(&self, i: usize, b: bool) -> Result<Self> {
        let d = self.partial_derivative(i)?;
        let n = self.n();
        let without = TruthTable::from_fn(n, |m| (m >> i) & 1 == 0 && self.coeffs.get(m));
        let coeffs = if b { without.xor(d.coeffs()) } else { without };
        Ok(MultilinearPoly { coeffs })
    }

    /// Renders `c + x1*x2 + x3`, terms by monomial index; zero is `0`.
    pub fn render(&self) -> String {
        let terms: Vec<String> = self.monomials().into_iter().map(monomial_string).collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

pub(crate) fn monomial_string(m: usize) -> String {
    if m == 0 {
        return "1".to_string();
    }
    (0..usize::BITS as usize)
        .filter(|j| (m >> j) & 1 == 1)
        .map(|j| format!("x{}", j + 1))
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultilinearPoly(n={}, {})", self.n(), self.render())
    }
}

impl Serialize for MultilinearPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

// GF(4) = GF(2)[w]/(w^2 + w + 1); element a0 + a1*w stored as bits (a0, a1).
const W: u8 = 2;

#[inline]
fn gf4_mul(a: u8, b: u8) -> u8 {
    let (a0, a1) = (a & 1, a >> 1);
    let (b0, b1) = (b & 1, b >> 1);
    let c0 = (a0 & b0) ^ (a1 & b1);
    let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    c0 | (c1 << 1)
}

fn pow3(m: usize) -> usize {
    3usize.pow(m as u32)
}

/// Values of a multilinear polynomial on the grid `{0, 1, w}^m`, indexed in
/// base 3 (digit 2 stands for `w`).
fn grid_values(m: usize, coeff: impl Fn(usize) -> bool) -> Vec<u8> {
    let len = pow3(m);
    let mut v = vec![0u8; len];
    for s in 0..(1usize << m) {
        if coeff(s) {
            let mut idx = 0;
            let mut p = 1;
            for k in 0..m {
                if (s >> k) & 1 == 1 {
                    idx += p;
                }
                p *= 3;
            }
            v[idx] = 1;
        }
    }
    let mut stride = 1;
    for _ in 0..m {
        for hi in (0..len).step_by(3 * stride) {
            for base in hi..hi + stride {
                let a0 = v[base];
                let a1 = v[base + stride];
                v[base + stride] = a0 ^ a1;
                v[base + 2 * stride] = a0 ^ gf4_mul(W, a1);
            }
        }
        stride *= 3;
    }
    v
}

/// Inverse of the grid evaluation for per-variable degree <= 2.
fn grid_interpolate(m: usize, v: &mut [u8]) {
    let len = v.len();
    let mut stride = 1;
    for _ in 0..m {
        for hi in (0..len).step_by(3 * stride) {
            for base in hi..hi + stride {
                let v0 = v[base];
                let v1 = v[base + stride];
                let vw = v[base + 2 * stride];
                let c2 = vw ^ v0 ^ gf4_mul(W, v1 ^ v0);
                let c1 = v1 ^ v0 ^ c2;
                v[base + stride] = c1;
                v[base + 2 * stride] = c2;
            }
        }
        stride *= 3;
    }
}

/// Polynomial in the variables `vars` with exponents in {0, 1, 2}; the
/// coefficient at base-3 index `e` belongs to `prod x_{vars[k]}^{e_k}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaPoly {
    n: usize,
    vars: Vec<usize>,
    coeffs: Vec<bool>,
}

impl DeltaPoly {
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        !self.coeffs.iter().any(|&c| c)
    }

    /// Embeds a multilinear polynomial that mentions only `vars`.
    pub fn from_multilinear(p: &MultilinearPoly, vars: &[usize]) -> Self {
        let m = vars.len();
        let mut coeffs = vec![false; pow3(m)];
        for mono in p.monomials() {
            let mut idx = 0;
            let mut pw = 1;
            let mut rest = mono;
            for &v in vars {
                if (mono >> v) & 1 == 1 {
                    idx += pw;
                    rest &= !(1 << v);
                }
                pw *= 3;
            }
            assert_eq!(rest, 0, "monomial outside the variable set");
            coeffs[idx] ^= true;
        }
        DeltaPoly {
            n: p.n(),
            vars: vars.to_vec(),
            coeffs,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        DeltaPoly {
            n: self.n,
            vars: self.vars.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    /// Image under `x^2 = x`, as a polynomial on the original `n` variables.
    pub fn reduced(&self) -> MultilinearPoly {
        let mut monos = Vec::new();
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if !c {
                continue;
            }
            let mut e = idx;
            let mut mono = 0;
            for &v in &self.vars {
                if e % 3 != 0 {
                    mono |= 1 << v;
                }
                e /= 3;
            }
            monos.push(mono);
        }
        MultilinearPoly::from_monomials(self.n, &monos)
    }

    pub fn render(&self) -> String {
        let mut terms = Vec::new();
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if !c {
                continue;
            }
            let mut e = idx;
            let mut parts = Vec::new();
            for &v in &self.vars {
                match e % 3 {
                    1 => parts.push(format!("x{}", v + 1)),
                    2 => parts.push(format!("x{}^2", v + 1)),
                    _ => {}
                }
                e /= 3;
            }
            terms.push(if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Writes `p = A + B x_i + C x_j + D x_i x_j` and returns `(vars, A, B, C, D)`
/// as coefficient closures over the remaining variables.
fn split_pair(p: &MultilinearPoly, i: usize, j: usize) -> Result<(Vec<usize>, [Vec<bool>; 4])> {
    p.check_var(i)?;
    p.check_var(j)?;
    if i == j {
        return Err(Error::InvalidArgument(format!(
            "commutator needs distinct variables, got x{} twice",
            i + 1
        )));
    }
    let n = p.n();
    let vars: Vec<usize> = (0..n).filter(|&v| v != i && v != j).collect();
    let m = vars.len();
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    let mut parts: [Vec<bool>; 4] = Default::default();
    for part in parts.iter_mut() {
        *part = vec![false; 1 << m];
    }
    for s in 0..(1usize << m) {
        let full = insert_bit(insert_bit(s, lo, false), hi, false);
        let bi = 1 << i;
        let bj = 1 << j;
        parts[0][s] = p.coeff(full);
        parts[1][s] = p.coeff(full | bi);
        parts[2][s] = p.coeff(full | bj);
        parts[3][s] = p.coeff(full | bi | bj);
    }
    Ok((vars, parts))
}

fn delta_grid(m: usize, parts: &[Vec<bool>; 4]) -> Vec<u8> {
    let [a, b, c, d] = parts;
    let ga = grid_values(m, |s| a[s]);
    let gb = grid_values(m, |s| b[s]);
    let gc = grid_values(m, |s| c[s]);
    let gd = grid_values(m, |s| d[s]);
    (0..ga.len())
        .map(|k| gf4_mul(ga[k], gd[k]) ^ gf4_mul(gb[k], gc[k]))
        .collect()
}

/// `P|11 * P|00 - P|10 * P|01` as an exact polynomial (no `x^2 = x`).
pub fn commutator_delta(p: &MultilinearPoly, i: usize, j: usize) -> Result<DeltaPoly> {
    let (vars, parts) = split_pair(p, i, j)?;
    cap("commutator", p.n(), DECOMPOSE_CAP)?;
    let m = vars.len();
    let mut g = delta_grid(m, &parts);
    grid_interpolate(m, &mut g);
    let coeffs = g
        .iter()
        .map(|&c| {
            debug_assert!(c <= 1, "coefficient left GF(2)");
            c == 1
        })
        .collect();
    Ok(DeltaPoly {
        n: p.n(),
        vars,
        coeffs,
    })
}

/// The commutator after `x^2 = x`; a zero here does not imply decomposability.
pub fn commutator_delta_reduced(p: &MultilinearPoly, i: usize, j: usize) -> Result<MultilinearPoly> {
    let (vars, [a, b, c, d]) = split_pair(p, i, j)?;
    let n = p.n();
    let spread = |v: &Vec<bool>| {
        let mut monos = Vec::new();
        for (s, &bit) in v.iter().enumerate() {
            if bit {
                let mut mono = 0;
                for (k, &x) in vars.iter().enumerate() {
                    mono |= ((s >> k) & 1) << x;
                }
                monos.push(mono);
            }
        }
        MultilinearPoly::from_monomials(n, &monos)
    };
    let (a, b, c, d) = (spread(&a), spread(&b), spread(&c), spread(&d));
    Ok(a.mul(&d).add(&b.mul(&c)))
}

/// True iff the exact commutator vanishes.
pub fn is_pair_decomposable(p: &MultilinearPoly, i: usize, j: usize) -> Result<bool> {
    let (vars, parts) = split_pair(p, i, j)?;
    cap("commutator", p.n(), DECOMPOSE_CAP)?;
    Ok(delta_grid(vars.len(), &parts).iter().all(|&v| v == 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DecompOp {
    And,
    Or,
    Xor,
}

/// Blocks are sorted by smallest variable; each factor is a table over its
/// block's variables in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub op: DecompOp,
    pub blocks: Vec<Vec<usize>>,
    pub factors: Vec<TruthTable>,
    pub constant: bool,
}

impl Decomposition {
    /// Recombines the factors into a table on `n` variables.
    pub fn recombine(&self, n: usize) -> TruthTable {
        let mut acc = match self.op {
            DecompOp::And => TruthTable::constant_n(n, true),
            DecompOp::Or | DecompOp::Xor => TruthTable::constant_n(n, false),
        };
        for (f, b) in self.factors.iter().zip(&self.blocks) {
            let e = f.embed(n, b);
            acc = match self.op {
                DecompOp::And => acc.and(&e),
                DecompOp::Or => acc.or(&e),
                DecompOp::Xor => acc.xor(&e),
            };
        }
        if self.constant {
            acc.not()
        } else {
            acc
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }

    fn components(&mut self, n: usize) -> Vec<Vec<usize>> {
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut root_slot = vec![usize::MAX; n];
        for v in 0..n {
            let r = self.find(v);
            if root_slot[r] == usize::MAX {
                root_slot[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[root_slot[r]].push(v);
        }
        comps
    }
}

/// Support-reduced view of a table, validated for decomposition.
fn prepare(tt: &TruthTable) -> Result<(TruthTable, Vec<usize>)> {
    if tt.is_constant() {
        return Err(Error::Degenerate("constant function"));
    }
    let (g, sup) = tt.reduce_to_support();
    if sup.len() < 2 {
        return Err(Error::Degenerate("fewer than two relevant variables"));
    }
    cap("decomposition", sup.len(), DECOMPOSE_CAP)?;
    Ok((g, sup))
}

/// Maximal variable-disjoint conjunction, or `None` when `f^ML` is
/// irreducible.
pub fn and_decompose(tt: &TruthTable) -> Result<Option<Decomposition>> {
    let (g, sup) = prepare(tt)?;
    Ok(and_decompose_reduced(&g).map(|d| relabel(d, &sup)))
}

fn and_decompose_reduced(g: &TruthTable) -> Option<Decomposition> {
    let m = g.n();
    let p = to_multilinear(g);
    let mut uf = UnionFind::new(m);
    for i in 0..m {
        for j in i + 1..m {
            if uf.find(i) == uf.find(j) {
                continue;
            }
            if !functional_delta_zero(g, i, j)
                || !is_pair_decomposable(&p, i, j).expect("valid pair")
            {
                uf.union(i, j);
            }
        }
    }
    let blocks = uf.components(m);
    if blocks.len() < 2 {
        return None;
    }
    // Every other factor is 1 at the first satisfying point.
    let x0 = g.ones().next().expect("non-constant");
    let factors: Vec<TruthTable> = blocks
        .iter()
        .map(|b| {
            let mask: usize = b.iter().map(|&v| 1 << v).sum();
            TruthTable::from_fn(b.len(), |y| {
                let mut x = x0 & !mask;
                for (k, &v) in b.iter().enumerate() {
                    x |= ((y >> k) & 1) << v;
                }
                g.get(x)
            })
        })
        .collect();
    let d = Decomposition {
        op: DecompOp::And,
        blocks,
        factors,
        constant: false,
    };
    assert_eq!(d.recombine(m), *g, "conjunctive factors do not recombine");
    Some(d)
}

/// Cheap necessary test: the pointwise commutator of the function values.
fn functional_delta_zero(g: &TruthTable, i: usize, j: usize) -> bool {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    let r = |bi: bool, bj: bool| {
        let (blo, bhi) = if i < j { (bi, bj) } else { (bj, bi) };
        g.restrict_var(hi, bhi).restrict_var(lo, blo)
    };
    let d = r(true, true)
        .and(&r(false, false))
        .xor(&r(true, false).and(&r(false, true)));
    d.count_ones() == 0
}

pub fn or_decompose(tt: &TruthTable) -> Result<Option<Decomposition>> {
    let (g, sup) = prepare(tt)?;
    Ok(and_decompose_reduced(&g.not()).map(|d| {
        relabel(
            Decomposition {
                op: DecompOp::Or,
                factors: d.factors.iter().map(TruthTable::not).collect(),
                ..d
            },
            &sup,
        )
    }))
}

/// Canonical sum decomposition: blocks are the components of the
/// monomial co-occurrence graph, factors have zero constant term.
pub fn xor_decompose(tt: &TruthTable) -> Result<Option<Decomposition>> {
    let (g, sup) = prepare(tt)?;
    let m = g.n();
    let p = to_multilinear(&g);
    let mut uf = UnionFind::new(m);
    for mono in p.monomials() {
        if mono == 0 {
            continue;
        }
        let first = mono.trailing_zeros() as usize;
        for v in first + 1..m {
            if (mono >> v) & 1 == 1 {
                uf.union(first, v);
            }
        }
    }
    let blocks = uf.components(m);
    if blocks.len() < 2 {
        return Ok(None);
    }
    let factors = blocks
        .iter()
        .map(|b| {
            let mask: usize = b.iter().map(|&v| 1 << v).sum();
            let monos: Vec<usize> = p
                .monomials()
                .into_iter()
                .filter(|&mo| mo != 0 && mo & !mask == 0)
                .map(|mo| {
                    b.iter()
                        .enumerate()
                        .fold(0, |acc, (k, &v)| acc | ((mo >> v) & 1) << k)
                })
                .collect();
            to_truth_table(&MultilinearPoly::from_monomials(b.len(), &monos))
        })
        .collect();
    let d = Decomposition {
        op: DecompOp::Xor,
        blocks,
        factors,
        constant: p.constant_term(),
    };
    debug_assert_eq!(d.recombine(m), g);
    Ok(Some(relabel(d, &sup)))
}

fn relabel(mut d: Decomposition, sup: &[usize]) -> Decomposition {
    for b in &mut d.blocks {
        for v in b.iter_mut() {
            *v = sup[*v];
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    fn poly(n: usize, monos: &[usize]) -> MultilinearPoly {
        MultilinearPoly::from_monomials(n, monos)
    }

    #[test]
    fn anf_examples() {
        assert_eq!(to_multilinear(&tt("0001")).monomials(), vec![0b11]);
        assert_eq!(to_multilinear(&tt("0111")).monomials(), vec![0b01, 0b10, 0b11]);
        assert_eq!(to_multilinear(&tt("11")).monomials(), vec![0]);
        assert_eq!(to_truth_table(&MultilinearPoly::zero(3)), TruthTable::zeros(3));
        let or2 = poly(2, &[1, 2, 3]);
        for x in 0..4 {
            assert_eq!(or2.evaluate(x), x != 0);
        }
    }

    #[test]
    fn wide_round_trip() {
        let t = TruthTable::from_fn(9, |x| (x * 2654435761) >> 7 & 1 == 1);
        assert_eq!(to_truth_table(&to_multilinear(&t)), t);
        let p = to_multilinear(&t);
        for x in [0, 1, 77, 300, 511] {
            assert_eq!(p.evaluate(x), t.get(x));
        }
    }

    #[test]
    fn derivative_examples() {
        let p = poly(2, &[0b11]);
        assert_eq!(p.partial_derivative(0).unwrap(), poly(2, &[0b10]));
        assert_eq!(poly(2, &[1, 2]).partial_derivative(0).unwrap(), poly(2, &[0]));
        let q = poly(3, &[0b011, 0b110]);
        assert_eq!(q.partial_derivative(1).unwrap(), poly(3, &[0b001, 0b100]));
        assert!(q.partial_derivative(3).is_err());
        let w = poly(8, &[0b1100_0000, 0b1000_0001]);
        assert_eq!(w.partial_derivative(7).unwrap(), poly(8, &[0b0100_0000, 1]));
        assert_eq!(w.restrict(7, true).unwrap(), poly(8, &[0b0100_0000, 1]));
        assert_eq!(w.restrict(7, false).unwrap(), poly(8, &[]));
    }

    #[test]
    fn commutator_examples() {
        assert!(commutator_delta(&poly(2, &[3]), 0, 1).unwrap().is_zero());
        let d = commutator_delta(&poly(2, &[1, 2]), 0, 1).unwrap();
        assert_eq!(d.render(), "1");
        let d = commutator_delta(&poly(2, &[1, 2, 3]), 0, 1).unwrap();
        assert_eq!(d.render(), "1");
        assert!(commutator_delta(&poly(2, &[3]), 1, 1).is_err());
        assert!(is_pair_decomposable(&poly(2, &[3]), 0, 1).unwrap());
        assert!(!is_pair_decomposable(&poly(2, &[1, 2]), 0, 1).unwrap());
        // x1*x3 + x2 = A + B x1 + C x2 with B = x3, C = 1: the commutator is x3.
        let q = poly(3, &[0b101, 0b010]);
        assert_eq!(commutator_delta(&q, 0, 1).unwrap().render(), "x3");
        assert!(!is_pair_decomposable(&q, 0, 1).unwrap());
    }

    #[test]
    fn exact_commutator_sees_squares() {
        // x1'x2'x3'x4' + x1x2x3x4 is irreducible, yet the reduced commutator
        // of x1, x2 vanishes.
        let f = TruthTable::from_fn(4, |x| x == 0 || x == 15);
        let p = to_multilinear(&f);
        assert!(commutator_delta_reduced(&p, 0, 1).unwrap().is_zero());
        let d = commutator_delta(&p, 0, 1).unwrap();
        assert!(!d.is_zero());
        assert!(d.reduced().is_zero());
        assert_eq!(and_decompose(&f).unwrap(), None);
    }

    #[test]
    fn and_examples() {
        let d = and_decompose(&tt("0001")).unwrap().unwrap();
        assert_eq!(d.blocks, vec![vec![0], vec![1]]);
        assert_eq!(d.factors, vec![tt("01"), tt("01")]);
        // (x1 | x2) & x3
        let f = TruthTable::from_fn(3, |x| (x & 3 != 0) && x & 4 != 0);
        let d = and_decompose(&f).unwrap().unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1], vec![2]]);
        assert_eq!(d.recombine(3), f);
        assert_eq!(and_decompose(&tt("0111")).unwrap(), None);
        assert!(matches!(and_decompose(&tt("0000")), Err(Error::Degenerate(_))));
        assert!(matches!(and_decompose(&tt("0101")), Err(Error::Degenerate(_))));
    }

    #[test]
    fn or_examples() {
        let d = or_decompose(&tt("0111")).unwrap().unwrap();
        assert_eq!(d.blocks, vec![vec![0], vec![1]]);
        assert_eq!(or_decompose(&tt("0001")).unwrap(), None);
        let f = TruthTable::from_fn(3, |x| (x & 3 == 3) || x & 4 != 0);
        let d = or_decompose(&f).unwrap().unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1], vec![2]]);
        assert_eq!(d.recombine(3), f);
    }

    #[test]
    fn xor_examples() {
        let d = xor_decompose(&TruthTable::parity(3)).unwrap().unwrap();
        assert_eq!(d.blocks, vec![vec![0], vec![1], vec![2]]);
        assert!(!d.constant);
        let f = TruthTable::from_fn(3, |x| !((x & 3 == 3) ^ (x & 4 != 0)));
        let d = xor_decompose(&f).unwrap().unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1], vec![2]]);
        assert!(d.constant);
        assert_eq!(d.recombine(3), f);
        assert_eq!(xor_decompose(&TruthTable::majority(3)).unwrap(), None);
    }

    #[test]
    fn dummy_variables_keep_original_indices() {
        // x2 & x4 on four variables
        let f = TruthTable::from_fn(4, |x| x & 0b1010 == 0b1010);
        let d = and_decompose(&f).unwrap().unwrap();
        assert_eq!(d.blocks, vec![vec![1], vec![3]]);
        assert_eq!(d.recombine(4), f);
    }

    #[test]
    fn render_polys() {
        assert_eq!(poly(3, &[0, 3, 4]).render(), "1 + x1*x2 + x3");
        assert_eq!(MultilinearPoly::zero(2).render(), "0");
    }
}
