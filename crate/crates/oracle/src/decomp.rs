use ttmin_core::TruthTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    And,
    Or,
    Xor,
}

/// True iff `f = g(A) op h(B)` for some split of the support of `tt` into
/// two nonempty blocks. Checked for every split: an and-split holds iff `f`
/// equals the and of its two projections, an xor-split iff the mixed second
/// difference vanishes everywhere.
pub fn brute_decomposable(tt: &TruthTable, op: Op) -> bool {
    let (g, _) = tt.reduce_to_support();
    let m = g.n();
    if m < 2 {
        return false;
    }
    let full = (1usize << m) - 1;
    (1..full).filter(|a| a & 1 == 1).any(|a| {
        let b = full & !a;
        let splits = |f: &TruthTable| -> bool {
            (0..1usize << m).all(|x| {
                let xa = x & a;
                let xb = x & b;
                match op {
                    Op::And | Op::Or => {
                        let want = op == Op::And;
                        let proj = |mask: usize, fixed: usize| {
                            (0..1usize << m).any(|y| y & mask == 0 && f.get(fixed | y) == want)
                        };
                        let v = if want {
                            proj(a, xa) && proj(b, xb)
                        } else {
                            !(proj(a, xa) && proj(b, xb))
                        };
                        f.get(x) == v
                    }
                    Op::Xor => !(f.get(x) ^ f.get(xa) ^ f.get(xb) ^ f.get(0)),
                }
            })
        };
        splits(&g)
    })
}

/// Number of decomposition kinds that hold (0 to 3).
pub fn brute_trichotomy_count(tt: &TruthTable) -> usize {
    [Op::And, Op::Or, Op::Xor]
        .iter()
        .filter(|&&op| brute_decomposable(tt, op))
        .count()
}
