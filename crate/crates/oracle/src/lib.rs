//! Brute-force reference solvers.
//!
//! Each oracle works from the definition of its model (enumerating trees,
//! lists, formulas or variable orders directly) and shares no search code
//! with `ttmin-core`. They are exponential and only meant for tiny `n`.

mod bp;
mod decomp;
mod formulas;
mod trees;

pub use bp::{brute_obdd_min_size, brute_obdd_size, brute_width_one};
pub use decomp::{brute_decomposable, brute_trichotomy_count, Op};
pub use formulas::{brute_f2a_leaves, brute_uf2_leaves, FORMULA_LEAF_BOUND};
pub use trees::{brute_dt_sizes, brute_ldl_sizes, brute_ldt_sizes, brute_srodt_sizes, TABLE_ORACLE_CAP};

/// All tables on `n` variables as words: entry `f` is the function whose
/// table, read as a number, equals `f`.
pub(crate) fn table_count(n: usize) -> usize {
    1 << (1 << n)
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

/// Table of `x_i` as a word.
pub(crate) fn var_word(n: usize, i: usize) -> u64 {
    (0..1usize << n)
        .filter(|x| x >> i & 1 == 1)
        .fold(0, |w, x| w | 1 << x)
}
