//! Check suites behind `ttmin run_suite`. Each suite returns a report with
//! one entry per check; work runs in parallel but results are gathered in
//! input order, so reports are byte-identical across runs and thread counts.

use std::collections::BTreeMap;

use anyhow::{bail, Result};
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use ttmin_core::bp::{mubp_construct, obdd_build, obdd_optimal_order, obdd_optimal_order_with};
use ttmin_core::formulas::{minimize_f2a, minimize_uf2};
use ttmin_core::hardness::{
    verify_dnf_reduction_exhaustive, verify_tree_reduction, HarnessConfig, HarnessReport, Shift,
};
use ttmin_core::mlpoly::{and_decompose, or_decompose, xor_decompose};
use ttmin_core::par::{self, Exec};
use ttmin_core::trees::{ldl_size_lower_bound, minimize_dt, minimize_ldl, minimize_ldt, minimize_ldt_c, minimize_srodt};
use ttmin_core::TruthTable;
use ttmin_oracle as oracle;

/// Counterexamples kept per check; the failure count is always exact.
pub const MAX_DUMP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// At most one of and/or/xor decomposes each function (all n = 4 tables).
    Trichotomy,
    /// Minimizers against brute-force enumeration.
    Oracles,
    /// Set cover reductions against brute-force set cover.
    Reductions,
    /// Optimal OBDD order against every order.
    ObddOrders,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Trichotomy, Suite::Oracles, Suite::Reductions, Suite::ObddOrders];

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Trichotomy => 4,
            Suite::Oracles => 4,
            Suite::Reductions => 6,
            Suite::ObddOrders => 5,
        }
    }

    fn max_n_cap(self) -> usize {
        match self {
            Suite::Trichotomy => 4,
            Suite::Oracles => 5,
            Suite::Reductions => 7,
            Suite::ObddOrders => 7,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub seed: u64,
    pub max_n: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, usize>,
    pub counterexamples: Vec<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            checked: 0,
            failures: 0,
            counts: BTreeMap::new(),
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, failure: Option<String>) {
        self.checked += 1;
        if let Some(f) = failure {
            self.fail(f);
        }
    }

    fn fail(&mut self, f: String) {
        self.failures += 1;
        if self.counterexamples.len() < MAX_DUMP {
            self.counterexamples.push(f);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub max_n: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: Suite, opts: &SuiteOptions, max_n: usize, checks: Vec<Check>) -> Self {
        SuiteReport {
            suite,
            seed: opts.seed,
            max_n,
            passed: checks.iter().all(Check::passed),
            checks,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let max_n = opts.max_n.unwrap_or(suite.default_max_n());
    if max_n == 0 || max_n > suite.max_n_cap() {
        bail!("--max-n for {suite:?} must be in 1..={}", suite.max_n_cap());
    }
    let checks = match suite {
        Suite::Trichotomy => trichotomy(max_n),
        Suite::Oracles => oracles(max_n),
        Suite::Reductions => reductions(opts.seed, max_n),
        Suite::ObddOrders => obdd_orders(opts.seed, max_n),
    };
    Ok(SuiteReport::new(suite, opts, max_n, checks))
}

fn all_tables(n: usize) -> Vec<TruthTable> {
    (0..1u64 << (1 << n)).map(|w| TruthTable::from_u64(n, w)).collect()
}

struct Split {
    ops: [bool; 3],
    recombine: Option<String>,
    oracle: Option<String>,
}

fn trichotomy(n: usize) -> Vec<Check> {
    let tables = all_tables(n);
    let results = par::map_slice(Exec::Parallel, &tables, |tt| {
        let (g, _) = tt.reduce_to_support();
        let mut out = Split { ops: [false; 3], recombine: None, oracle: None };
        if g.n() < 2 {
            return out;
        }
        let found = [and_decompose(&g), or_decompose(&g), xor_decompose(&g)];
        let kinds = [oracle::Op::And, oracle::Op::Or, oracle::Op::Xor];
        for (i, r) in found.into_iter().enumerate() {
            match r {
                Ok(Some(d)) => {
                    out.ops[i] = true;
                    if d.recombine(g.n()) != g {
                        out.recombine = Some(format!("{tt}: {:?} factors do not recombine", kinds[i]));
                    }
                }
                Ok(None) => {}
                Err(e) => out.recombine = Some(format!("{tt}: {e}")),
            }
            if oracle::brute_decomposable(&g, kinds[i]) != out.ops[i] {
                out.oracle = Some(format!("{tt}: {:?} decomposability disagrees with brute force", kinds[i]));
            }
        }
        out
    });
    let mut at_most_one = Check::new("at-most-one");
    let mut recombine = Check::new("recombine");
    let mut agree = Check::new("oracle-agreement");
    for (tt, r) in tables.iter().zip(results) {
        let k = r.ops.iter().filter(|&&b| b).count();
        let key = match r.ops {
            [true, false, false] => "and",
            [false, true, false] => "or",
            [false, false, true] => "xor",
            [false, false, false] => "none",
            _ => "several",
        };
        *at_most_one.counts.entry(key.to_string()).or_default() += 1;
        at_most_one.record((k > 1).then(|| format!("{tt}: {k} decompositions")));
        recombine.record(r.recombine);
        agree.record(r.oracle);
    }
    vec![at_most_one, recombine, agree]
}

fn oracles(max_n: usize) -> Vec<Check> {
    let names = ["dt", "ldt", "srodt", "ldl", "ldl-law", "ldt-c1", "uf2", "f2a"];
    let mut checks: Vec<Check> = names.iter().map(|n| Check::new(n)).collect();
    for n in 1..=max_n.min(oracle::TABLE_ORACLE_CAP) {
        let dt = oracle::brute_dt_sizes(n);
        let ldt = oracle::brute_ldt_sizes(n);
        let srodt = oracle::brute_srodt_sizes(n);
        let ldl = oracle::brute_ldl_sizes(n);
        let uf2 = oracle::brute_uf2_leaves(n);
        let f2a = oracle::brute_f2a_leaves(n);
        let tables = all_tables(n);
        let rows = par::map_slice(Exec::Parallel, &tables, |tt| {
            let w = tt.as_u64() as usize;
            let size = |r: ttmin_core::Result<usize>| r.map_err(|e| e.to_string());
            let cmp = |what: &str, got: std::result::Result<Option<usize>, String>, want: Option<usize>| match got {
                Ok(g) if g == want => None,
                Ok(g) => Some(format!("{tt}: {what} gives {g:?}, brute force {want:?}")),
                Err(e) => Some(format!("{tt}: {what}: {e}")),
            };
            let dt_size = size(minimize_dt(tt).map(|t| t.size()));
            let ldl_found = minimize_ldl(tt);
            let law = match &ldl_found {
                Ok(l) if l.size() == ldl_size_lower_bound(tt) => None,
                Ok(l) => Some(format!("{tt}: list size {} but bound {}", l.size(), ldl_size_lower_bound(tt))),
                Err(e) if e.reject().is_some() => None,
                Err(e) => Some(format!("{tt}: {e}")),
            };
            let opt = |r: ttmin_core::Result<usize>| match r {
                Ok(s) => Ok(Some(s)),
                Err(e) if e.reject().is_some() => Ok(None),
                Err(e) => Err(e.to_string()),
            };
            [
                cmp("dt", dt_size.clone().map(Some), Some(dt[w])),
                cmp("ldt", size(minimize_ldt(tt).map(|t| t.size())).map(Some), Some(ldt[w])),
                cmp("srodt", size(minimize_srodt(tt).map(|t| t.size())).map(Some), Some(srodt[w])),
                cmp("ldl", opt(ldl_found.map(|l| l.size())), ldl[w]),
                law,
                cmp("ldt c=1", size(minimize_ldt_c(tt, 1).map(|t| t.size())).map(Some), dt_size.ok()),
                cmp("uf2", opt(minimize_uf2(tt).map(|f| f.leaf_count())), uf2[w]),
                cmp("f2a", size(minimize_f2a(tt).map(|f| f.leaf_count())).map(Some), Some(f2a[w])),
            ]
        });
        for row in rows {
            for (c, r) in checks.iter_mut().zip(row) {
                c.record(r);
            }
        }
    }
    let mut mubp = Check::new("mubp");
    for n in 1..=max_n {
        let tables = all_tables(n);
        let rows = par::map_slice(Exec::Parallel, &tables, |tt| {
            let width_one = oracle::brute_width_one(tt);
            match mubp_construct(tt) {
                Ok(p) if !width_one => Some(format!("{tt}: accepted but no order has width one ({} nodes)", p.size())),
                Ok(p) => {
                    let wrong = (0..1usize << n).any(|x| ttmin_core::bp::eval_bp(&p, x) != tt.get(x));
                    if wrong {
                        Some(format!("{tt}: program computes another function"))
                    } else if p.size() != tt.support().len() {
                        Some(format!("{tt}: {} nodes for support {}", p.size(), tt.support().len()))
                    } else {
                        None
                    }
                }
                Err(e) if e.reject().is_some() => width_one.then(|| format!("{tt}: rejected but width one exists")),
                Err(e) => Some(format!("{tt}: {e}")),
            }
        });
        for r in rows {
            mubp.record(r);
        }
    }
    checks.push(mubp);
    checks
}

fn harness_check(name: &str, r: HarnessReport) -> Check {
    let mut c = Check::new(name);
    c.checked = r.checks;
    for f in r.failures {
        c.fail(f);
    }
    c
}

fn reductions(seed: u64, max_m: usize) -> Vec<Check> {
    let cfg = HarnessConfig { seed, ..HarnessConfig::default() };
    let tree = harness_check("tree-reduction", verify_tree_reduction(&cfg, Exec::Parallel));
    // the shifted map must be caught, otherwise the harness proves nothing
    let bad = verify_tree_reduction(&HarnessConfig { shift: Shift::OffByOne, ..cfg }, Exec::Parallel);
    let mut control = Check::new("tree-negative-control");
    control.record((bad.passed()).then(|| "off-by-one reduction went undetected".to_string()));
    let dnf = harness_check("dnf-reduction-exhaustive", verify_dnf_reduction_exhaustive(max_m, Exec::Parallel));
    vec![tree, control, dnf]
}

/// Random tables drawn per `n`.
pub const OBDD_TABLES_PER_N: usize = 50;

fn obdd_orders(seed: u64, max_n: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tables = Vec::new();
    for n in 1..=max_n {
        for _ in 0..OBDD_TABLES_PER_N {
            let bits: Vec<bool> = (0..1usize << n).map(|_| rng.gen()).collect();
            tables.push(TruthTable::from_bits(&bits).expect("power of two"));
        }
    }
    let rows = par::map_slice(Exec::Parallel, &tables, |tt| {
        let best = oracle::brute_obdd_min_size(tt);
        let opt = match obdd_optimal_order(tt) {
            Ok(r) => r,
            Err(e) => return [Some(format!("{tt}: {e}")), None],
        };
        let rebuilt = obdd_build(tt, &opt.order).map(|d| d.size()).ok();
        let size = if opt.size != best || rebuilt != Some(opt.size) {
            Some(format!("{tt}: order {:?} gives {} (rebuilt {rebuilt:?}), best over all orders {best}", opt.order, opt.size))
        } else {
            None
        };
        let seq = match obdd_optimal_order_with(tt, Exec::Sequential) {
            Ok(s) if s == opt => None,
            Ok(s) => Some(format!("{tt}: sequential {:?} vs parallel {:?}", s.order, opt.order)),
            Err(e) => Some(format!("{tt}: {e}")),
        };
        [size, seq]
    });
    let mut size = Check::new("optimal-order");
    let mut seq = Check::new("sequential-agrees");
    for [a, b] in rows {
        size.record(a);
        seq.record(b);
    }
    vec![size, seq]
}
