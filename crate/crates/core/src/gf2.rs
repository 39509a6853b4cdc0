//! Small GF(2) linear algebra on `u64` bit vectors (n <= 64).

/// Incrementally built basis kept in reduced echelon form, keyed by the
/// highest set bit of each row.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XorBasis {
    rows: Vec<u64>,
}

impl XorBasis {
    pub fn new() -> Self {
        XorBasis { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Residue of `v` after eliminating every pivot.
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            let p = 63 - r.leading_zeros();
            if (v >> p) & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let p = 63 - v.leading_zeros();
        for r in &mut self.rows {
            if (*r >> p) & 1 == 1 {
                *r ^= v;
            }
        }
        let pos = self
            .rows
            .iter()
            .position(|r| r.leading_zeros() > v.leading_zeros())
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, v);
        true
    }
}

pub fn rank(vectors: &[u64]) -> usize {
    let mut b = XorBasis::new();
    for &v in vectors {
        b.insert(v);
    }
    b.rank()
}

#[inline]
pub fn dot(u: u64, x: u64) -> bool {
    (u & x).count_ones() % 2 == 1
}

/// Renders `v` as `n` bits, coordinate 1 first.
pub fn vec_string(v: u64, n: usize) -> String {
    (0..n)
        .map(|j| if (v >> j) & 1 == 1 { '1' } else { '0' })
        .collect()
}
