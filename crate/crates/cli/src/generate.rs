use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use ttmin_core::gf2::vec_string;
use ttmin_core::hardness::{
    random_3psc_instance, random_sc_instance, reduce_3psc_to_mondnf_star, reduce_sc_to_tree, SetCoverInstance,
};

use crate::models::json_line;
use crate::GenArgs;

/// Sets per random instance.
const RANDOM_MAX_SETS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Set cover to decision trees over a test family.
    Sc2tree,
    /// Three-partite set cover to partial monotone DNF.
    #[value(name = "3psc2dnf")]
    Psc2dnf,
    /// Random set cover instance.
    RandomSc,
    /// Random three-partite set cover instance.
    #[value(name = "random-3psc")]
    Random3psc,
}

#[derive(Serialize)]
struct TreeSidecar {
    kind: &'static str,
    m: usize,
    k: usize,
    sets: Vec<Vec<usize>>,
    n: usize,
    u: usize,
    /// Table positions (0-based) on which each test is 1.
    tests: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct DnfSidecar {
    kind: &'static str,
    m: usize,
    k: usize,
    sets: Vec<Vec<usize>>,
    partition: Vec<u8>,
    q: usize,
    t: usize,
    v: Vec<String>,
    w: Vec<String>,
    zeros_below_w: usize,
    zeros_below_v: usize,
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().with_context(|| format!("bad element {t:?}")))
        .collect()
}

fn instance(a: &GenArgs, three_partite: bool) -> Result<SetCoverInstance> {
    if let Some(p) = &a.file {
        let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        return Ok(text.parse()?);
    }
    let m = a.m.context("give --m and --sets, or --file")?;
    if a.sets.is_empty() {
        bail!("give at least one --sets");
    }
    let sets = a.sets.iter().map(|s| parse_list(s)).collect::<Result<Vec<_>>>()?;
    let k = a.k.unwrap_or(sets.len());
    if three_partite {
        let part = parse_list(a.partition.as_deref().context("3psc2dnf needs --partition")?)?;
        if part.iter().any(|&b| !(1..=3).contains(&b)) {
            bail!("partition blocks must be 1, 2 or 3");
        }
        Ok(SetCoverInstance::three_partite(m, part.iter().map(|&b| (b - 1) as u8).collect(), sets, k)?)
    } else {
        Ok(SetCoverInstance::new(m, sets, k)?)
    }
}

fn emit(a: &GenArgs, table: String, sidecar: String) -> Result<String> {
    match &a.out {
        Some(prefix) => {
            let tt_path = prefix.with_extension("tt");
            let json_path = prefix.with_extension("json");
            std::fs::write(&tt_path, format!("{table}\n")).with_context(|| format!("writing {}", tt_path.display()))?;
            std::fs::write(&json_path, &sidecar).with_context(|| format!("writing {}", json_path.display()))?;
            Ok(format!("wrote {}\nwrote {}\n", tt_path.display(), json_path.display()))
        }
        None if a.json => Ok(sidecar),
        None => Ok(format!("{table}\n{sidecar}")),
    }
}

pub fn generate(a: &GenArgs) -> Result<String> {
    match a.kind {
        GenKind::Sc2tree => {
            let inst = instance(a, false)?;
            let red = reduce_sc_to_tree(&inst)?;
            let side = TreeSidecar {
                kind: "sc2tree",
                m: inst.m,
                k: red.k,
                sets: inst.sets.clone(),
                n: red.tt.n(),
                u: red.u,
                tests: red.tests.clone(),
            };
            emit(a, red.tt.to_text(), json_line(&side))
        }
        GenKind::Psc2dnf => {
            let inst = instance(a, true)?;
            let red = reduce_3psc_to_mondnf_star(&inst)?;
            let bits = |v: &[u64]| v.iter().map(|&x| vec_string(x, red.t)).collect();
            let side = DnfSidecar {
                kind: "3psc2dnf",
                m: inst.m,
                k: red.k,
                sets: inst.sets.clone(),
                partition: inst.partition.clone().unwrap_or_default().iter().map(|b| b + 1).collect(),
                q: red.q,
                t: red.t,
                v: bits(&red.v),
                w: bits(&red.w),
                zeros_below_w: red.a_points.len(),
                zeros_below_v: red.b_points.len(),
            };
            emit(a, red.ptt.to_text(), json_line(&side))
        }
        GenKind::RandomSc | GenKind::Random3psc => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            let inst = if a.kind == GenKind::RandomSc {
                random_sc_instance(&mut rng, a.max_n, RANDOM_MAX_SETS)
            } else {
                random_3psc_instance(&mut rng, a.max_n.max(3), RANDOM_MAX_SETS)
            };
            let text = format!("# seed {}\n{inst}", a.seed);
            match &a.out {
                Some(p) => {
                    std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
                    Ok(format!("wrote {}\n", p.display()))
                }
                None => Ok(text),
            }
        }
    }
}
