use std::fmt::Write;

use anyhow::Result;
use serde::Serialize;
use ttmin_core::formulas::{find_unate_orientation, is_monotone};
use ttmin_core::mlpoly::{and_decompose, or_decompose, to_multilinear, xor_decompose, DecompOp};

use crate::models::{join, json_line};
use crate::{parse_point, read_table, TableArgs};

#[derive(Serialize)]
struct Decomp {
    op: DecompOp,
    /// 1-based variable blocks.
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct Facts {
    table: String,
    n: usize,
    ones: u64,
    support: Vec<usize>,
    anf: String,
    monotone: bool,
    /// Polarity vector making the function monotone, x1 first.
    unate: Option<String>,
    decomposition: Option<Decomp>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<bool>,
}

pub fn eval(a: &TableArgs) -> Result<String> {
    let tt = read_table(a)?;
    let value = match &a.a {
        Some(p) => Some(tt.get(parse_point(p, tt.n())?)),
        None => None,
    };
    let (g, vars) = tt.reduce_to_support();
    let mut decomposition = None;
    if g.n() >= 2 {
        for d in [and_decompose(&g)?, or_decompose(&g)?, xor_decompose(&g)?].into_iter().flatten() {
            decomposition = Some(Decomp {
                op: d.op,
                blocks: d.blocks.iter().map(|b| b.iter().map(|&i| vars[i] + 1).collect()).collect(),
            });
        }
    }
    let facts = Facts {
        table: tt.to_text(),
        n: tt.n(),
        ones: tt.count_ones(),
        support: vars.iter().map(|v| v + 1).collect(),
        anf: to_multilinear(&tt).render(),
        monotone: is_monotone(&tt),
        unate: find_unate_orientation(&tt).ok().map(|o| o.to_string()),
        decomposition,
        value,
    };
    if a.json {
        return Ok(json_line(&facts));
    }
    let mut s = String::new();
    let _ = writeln!(s, "table {}", facts.table);
    let _ = writeln!(s, "n {}", facts.n);
    let _ = writeln!(s, "ones {}", facts.ones);
    let _ = writeln!(s, "support {}", join(&facts.support));
    let _ = writeln!(s, "anf {}", facts.anf);
    let _ = writeln!(s, "monotone {}", facts.monotone);
    let _ = writeln!(s, "unate {}", facts.unate.as_deref().unwrap_or("no"));
    match &facts.decomposition {
        Some(d) => {
            let blocks: Vec<String> = d.blocks.iter().map(|b| format!("{{{}}}", join(b))).collect();
            let op = serde_json::to_value(d.op).expect("enum serializes");
            let _ = writeln!(s, "decomposition {} {}", op.as_str().unwrap_or("?"), blocks.join(" "));
        }
        None => s.push_str("decomposition none\n"),
    }
    if let Some(v) = facts.value {
        let _ = writeln!(s, "value {}", v as u8);
    }
    Ok(s)
}
