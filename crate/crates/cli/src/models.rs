use std::fmt::Write;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::Serialize;
use ttmin_core::bp::{mubp_construct, obdd_build, obdd_optimal_order};
use ttmin_core::formulas::{self, Formula, TwoLevel};
use ttmin_core::hardness::{
    brute_min_mondnf_partial, brute_set_cover, reduce_3psc_to_mondnf_star, reduce_sc_to_tree, SetCoverInstance,
};
use ttmin_core::trees::{self, decide_test_family_tree};
use ttmin_core::{Reject, TruthTable};
use ttmin_oracle as oracle;

use crate::{parse_point, read_input, read_table, TableArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    /// Decision tree.
    Dt,
    /// Linear (parity) decision tree; --c bounds the test weight.
    Ldt,
    /// Symmetric read-once decision tree.
    Srodt,
    /// Linear decision list.
    Ldl,
    /// Monotone DNF.
    Mondnf,
    /// Unate DNF.
    Udnf,
    /// Unate CNF.
    Ucnf,
    /// Read-once and/or formula.
    Rof,
    /// Read-once and/or/xor formula.
    Rofxor,
    /// Read-once and/or/xor formula with leaf negations fixed by --a.
    RofxorA,
    /// Read-once and/or formula with costed negation gates.
    Rofneg,
    /// Read-once and/or/xor formula with costed negation gates.
    Rofxorneg,
    /// Second-order unate formula.
    Uf2,
    /// GF(2) sum of monomials.
    Sigma2a,
    /// GF(2) product of affine forms.
    Pi2a,
    /// Second-order GF(2) arithmetic formula.
    F2a,
    /// Reduced OBDD; optimal order unless --order is given.
    Obdd,
    /// Branching program reading each variable once.
    Mubp,
    /// Set cover instance (--file), brute force.
    Setcover,
    /// Set cover instance (--file) through the decision-tree reduction.
    Sc2tree,
    /// Three-partite set cover instance (--file) through the DNF reduction.
    #[value(name = "3psc2dnf")]
    Psc2dnf,
}

impl Model {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    fn is_instance_model(self) -> bool {
        matches!(self, Model::Setcover | Model::Sc2tree | Model::Psc2dnf)
    }
}

#[derive(Debug, Clone, Serialize)]
struct Found {
    model: String,
    table: String,
    measure: &'static str,
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<Vec<usize>>,
    repr: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    infix: Option<String>,
}

impl Found {
    fn new(model: Model, tt: &TruthTable, measure: &'static str, size: usize, repr: String) -> Self {
        Found {
            model: model.name(),
            table: tt.to_text(),
            measure,
            size,
            order: None,
            repr,
            infix: None,
        }
    }

    fn render(&self, json: bool) -> String {
        if json {
            return json_line(self);
        }
        let mut s = format!("model {}\nsize {} ({})\n", self.model, self.size, self.measure);
        if let Some(o) = &self.order {
            let _ = writeln!(s, "order {}", join(o));
        }
        s.push_str(&self.repr);
        if !self.repr.ends_with('\n') {
            s.push('\n');
        }
        if let Some(i) = &self.infix {
            let _ = writeln!(s, "{i}");
        }
        s
    }
}

pub(crate) fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("plain data serializes");
    s.push('\n');
    s
}

pub(crate) fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn model_of(a: &TableArgs) -> Result<Model> {
    a.model.context("--model is required")
}

fn formula(model: Model, tt: &TruthTable, measure: &'static str, f: Formula) -> Found {
    let size = match measure {
        "leaves" => f.leaf_count(),
        _ => f.gate_count(),
    };
    let arith = matches!(model, Model::Sigma2a | Model::Pi2a | Model::F2a);
    let mut found = Found::new(model, tt, measure, size, f.sexpr());
    found.infix = Some(if arith { f.arith() } else { f.infix() });
    found
}

fn two_level(model: Model, tt: &TruthTable, measure: &'static str, d: TwoLevel) -> Found {
    let f = d.to_formula();
    let mut found = Found::new(model, tt, measure, d.term_count(), f.sexpr());
    found.infix = Some(f.infix());
    found
}

fn parse_order(s: &str, n: usize) -> Result<Vec<usize>> {
    let order: Vec<usize> = s
        .split(',')
        .map(|t| {
            let v: usize = t.trim().parse().with_context(|| format!("bad variable {t:?} in --order"))?;
            if v == 0 || v > n {
                bail!("variable {v} out of range 1..={n}");
            }
            Ok(v - 1)
        })
        .collect::<Result<_>>()?;
    Ok(order)
}

fn solve(model: Model, tt: &TruthTable, a: &TableArgs) -> Result<Found> {
    let n = tt.n();
    Ok(match model {
        Model::Dt => {
            let t = trees::minimize_dt(tt)?;
            Found::new(model, tt, "nodes", t.size(), t.sexpr(n))
        }
        Model::Ldt => {
            let t = match a.c {
                Some(c) => trees::minimize_ldt_c(tt, c)?,
                None => trees::minimize_ldt(tt)?,
            };
            Found::new(model, tt, "nodes", t.size(), t.sexpr(n))
        }
        Model::Srodt => {
            let t = trees::minimize_srodt(tt)?;
            Found::new(model, tt, "nodes", t.size(), t.sexpr(n))
        }
        Model::Ldl => {
            let l = trees::minimize_ldl(tt)?;
            Found::new(model, tt, "tests", l.size(), l.sexpr())
        }
        Model::Mondnf => two_level(model, tt, "terms", formulas::minimize_monotone_dnf(tt)?),
        Model::Udnf => two_level(model, tt, "terms", formulas::minimize_unate_dnf(tt)?),
        Model::Ucnf => two_level(model, tt, "clauses", formulas::minimize_unate_cnf(tt)?),
        Model::Rof => formula(model, tt, "gates", formulas::minimize_boolean_rof(tt)?),
        Model::Rofxor => formula(model, tt, "gates", formulas::minimize_rof_xor(tt)?),
        Model::RofxorA => {
            let pat = a.a.as_deref().context("rofxor-a needs --a")?;
            let f = formulas::minimize_rof_xor_a(tt, parse_point(pat, n)?)?;
            formula(model, tt, "gates", f)
        }
        Model::Rofneg => formula(model, tt, "gates", formulas::minimize_rof_neg(tt)?),
        Model::Rofxorneg => formula(model, tt, "gates", formulas::minimize_rof_xor_neg(tt)?),
        Model::Uf2 => formula(model, tt, "leaves", formulas::minimize_uf2(tt)?),
        Model::Sigma2a => formula(model, tt, "leaves", formulas::sigma2a(tt)),
        Model::Pi2a => formula(model, tt, "leaves", formulas::minimize_pi2a(tt)?),
        Model::F2a => formula(model, tt, "leaves", formulas::minimize_f2a(tt)?),
        Model::Obdd => {
            let order = match &a.order {
                Some(s) => parse_order(s, n)?,
                None => obdd_optimal_order(tt)?.order,
            };
            let d = obdd_build(tt, &order)?;
            let mut found = Found::new(model, tt, "nodes", d.size(), d.to_text());
            found.order = Some(order.iter().map(|v| v + 1).collect());
            found
        }
        Model::Mubp => {
            let p = mubp_construct(tt)?;
            let mut found = Found::new(model, tt, "nodes", p.size(), p.to_text());
            found.order = Some(p.order.iter().map(|v| v + 1).collect());
            found
        }
        Model::Setcover | Model::Sc2tree | Model::Psc2dnf => {
            bail!("model {} takes an instance; use `verify`", model.name())
        }
    })
}

pub fn minimize(a: &TableArgs) -> Result<String> {
    let model = model_of(a)?;
    let tt = read_table(a)?;
    Ok(solve(model, &tt, a)?.render(a.json))
}

pub fn oracle(a: &TableArgs) -> Result<String> {
    let model = model_of(a)?;
    let tt = read_table(a)?;
    let n = tt.n();
    let table_oracle = matches!(model, Model::Dt | Model::Ldt | Model::Srodt | Model::Ldl | Model::Uf2 | Model::F2a);
    if table_oracle && n > oracle::TABLE_ORACLE_CAP {
        bail!("{} oracle: n = {n} exceeds cap {}", model.name(), oracle::TABLE_ORACLE_CAP);
    }
    let w = if table_oracle { tt.as_u64() as usize } else { 0 };
    let (measure, size) = match model {
        Model::Dt => ("nodes", oracle::brute_dt_sizes(n)[w]),
        Model::Ldt => ("nodes", oracle::brute_ldt_sizes(n)[w]),
        Model::Srodt => ("nodes", oracle::brute_srodt_sizes(n)[w]),
        Model::Ldl => (
            "tests",
            oracle::brute_ldl_sizes(n)[w].ok_or(ttmin_core::Error::from(Reject::NoDecisionList))?,
        ),
        Model::Uf2 => (
            "leaves",
            oracle::brute_uf2_leaves(n)[w].ok_or(ttmin_core::Error::from(Reject::NotUnate))?,
        ),
        Model::F2a => ("leaves", oracle::brute_f2a_leaves(n)[w]),
        Model::Obdd | Model::Mubp => {
            if n > ORDER_ORACLE_CAP {
                bail!("order oracle: n = {n} exceeds cap {ORDER_ORACLE_CAP}");
            }
            if model == Model::Mubp {
                if !oracle::brute_width_one(&tt) {
                    return Err(ttmin_core::Error::from(Reject::NoMuBp).into());
                }
                ("nodes", tt.support().len())
            } else {
                ("nodes", oracle::brute_obdd_min_size(&tt))
            }
        }
        _ => bail!("no brute-force oracle for model {}", model.name()),
    };
    let found = Found {
        model: model.name(),
        table: tt.to_text(),
        measure,
        size,
        order: None,
        repr: String::new(),
        infix: None,
    };
    if a.json {
        Ok(json_line(&found))
    } else {
        Ok(format!("model {}\nsize {} ({})\n", found.model, size, measure))
    }
}

/// Largest `n` for the oracles that try every variable order.
pub const ORDER_ORACLE_CAP: usize = 8;

#[derive(Serialize)]
struct Verdict {
    model: String,
    k: usize,
    /// Minimum size, absent when no model exists.
    size: Option<usize>,
    member: bool,
}

pub fn verify(a: &TableArgs) -> Result<String> {
    let model = model_of(a)?;
    let (size, k) = if model.is_instance_model() {
        let inst: SetCoverInstance = read_input(a)?.parse()?;
        let k = a.k.unwrap_or(inst.k);
        let size = match model {
            Model::Setcover => brute_set_cover(&inst)?,
            Model::Sc2tree => {
                // smallest bound the reduced instance accepts
                let red = reduce_sc_to_tree(&inst)?;
                let tests = red.test_tables();
                let mut found = None;
                for j in 0..=inst.sets.len() {
                    if decide_test_family_tree(&red.tt, &tests, j)? {
                        found = Some(j);
                        break;
                    }
                }
                found
            }
            _ => brute_min_mondnf_partial(&reduce_3psc_to_mondnf_star(&inst)?.ptt)?,
        };
        (size, k)
    } else {
        let tt = read_table(a)?;
        let k = a.k.context("verify needs --k")?;
        let size = match solve(model, &tt, a) {
            Ok(f) => Some(f.size),
            Err(e) if e.downcast_ref::<ttmin_core::Error>().and_then(|e| e.reject()).is_some() => None,
            Err(e) => return Err(e),
        };
        (size, k)
    };
    let v = Verdict {
        model: model.name(),
        k,
        size,
        member: size.is_some_and(|s| s <= k),
    };
    if a.json {
        Ok(json_line(&v))
    } else {
        let size = size.map_or("none".to_string(), |s| s.to_string());
        Ok(format!("{}\nminimum {size}\n", if v.member { "yes" } else { "no" }))
    }
}
