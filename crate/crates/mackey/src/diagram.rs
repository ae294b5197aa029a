//! Lewis-diagram renderings (DOT and plain text) and a lossless JSON form.
//!
//! Matrix entries are serialized as decimal strings so the round trip is
//! exact whatever their size.

use crate::functor::{mat_label, MackeyFunctor};
use burnside::CyclicGroupCtx;
use exactlin::{FgAbGroup, GroupMap, Mat};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// One node per level, one edge per prime-step restriction and transfer,
/// matrices as edge labels.
pub fn lewis_dot(m: &MackeyFunctor) -> String {
    let mut out = String::from("digraph mackey {\n  rankdir=BT;\n  node [shape=box];\n");
    for &d in &m.ctx.divisors {
        let _ = writeln!(out, "  L{d} [label=\"M(C_{d}) = {}\"];", m.level(d).canonical());
    }
    for (&(d, p), map) in &m.res {
        let _ = writeln!(
            out,
            "  L{d} -> L{} [label=\"res {}\", color=blue];",
            d / p,
            mat_label(&map.mat)
        );
    }
    for (&(d, p), map) in &m.tr {
        let _ = writeln!(
            out,
            "  L{} -> L{d} [label=\"tr {}\", color=red];",
            d / p,
            mat_label(&map.mat)
        );
    }
    for (&d, map) in &m.weyl {
        if !map.equals_induced(&GroupMap::identity(map.src.clone())) {
            let _ = writeln!(out, "  L{d} -> L{d} [label=\"g {}\", style=dashed];", mat_label(&map.mat));
        }
    }
    out.push_str("}\n");
    out
}

/// Text Lewis diagram, levels descending; res and tr listed per prime step.
pub fn lewis_ascii(m: &MackeyFunctor) -> String {
    let mut out = String::new();
    for &d in m.ctx.divisors.iter().rev() {
        let _ = writeln!(out, "M(C_{d}) = {}", m.level(d).canonical());
        let id = GroupMap::identity(m.level(d).clone());
        if !m.weyl_at(d).equals_induced(&id) {
            let _ = writeln!(out, "    g acts by {}", mat_label(&m.weyl_at(d).mat));
        }
        let mut ps: Vec<u64> = m.ctx.primes().into_iter().filter(|p| d % p == 0).collect();
        ps.sort_unstable();
        for p in ps {
            let _ = writeln!(
                out,
                "    res -> C_{}: {}   tr <- C_{}: {}",
                d / p,
                mat_label(&m.res_step(d, p).mat),
                d / p,
                mat_label(&m.tr_step(d, p).mat),
            );
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct LevelJson {
    ngens: usize,
    rels: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    level: u64,
    prime: u64,
    mat: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
pub struct MackeyJson {
    n: u64,
    levels: BTreeMap<u64, LevelJson>,
    res: Vec<StepJson>,
    tr: Vec<StepJson>,
    weyl: BTreeMap<u64, Vec<Vec<String>>>,
}

fn mat_to_strings(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows).map(|i| m.row(i).iter().map(|v| v.to_string()).collect()).collect()
}

fn mat_from_strings(rows: &[Vec<String>], cols: usize) -> Result<Mat, String> {
    let mut out = Mat::zero(rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != cols {
            return Err(format!("row {i} has {} entries, want {cols}", row.len()));
        }
        for (j, s) in row.iter().enumerate() {
            out[(i, j)] =
                s.parse::<BigInt>().map_err(|e| format!("bad entry {s:?}: {e}"))?;
        }
    }
    Ok(out)
}

pub fn to_json(m: &MackeyFunctor) -> MackeyJson {
    MackeyJson {
        n: m.ctx.n,
        levels: m
            .levels
            .iter()
            .map(|(&d, g)| (d, LevelJson { ngens: g.ngens, rels: mat_to_strings(&g.rels) }))
            .collect(),
        res: m
            .res
            .iter()
            .map(|(&(d, p), map)| StepJson { level: d, prime: p, mat: mat_to_strings(&map.mat) })
            .collect(),
        tr: m
            .tr
            .iter()
            .map(|(&(d, p), map)| StepJson { level: d, prime: p, mat: mat_to_strings(&map.mat) })
            .collect(),
        weyl: m.weyl.iter().map(|(&d, map)| (d, mat_to_strings(&map.mat))).collect(),
    }
}

pub fn from_json(j: &MackeyJson) -> Result<MackeyFunctor, String> {
    let ctx = CyclicGroupCtx::new(j.n);
    let mut levels = BTreeMap::new();
    for (&d, lv) in &j.levels {
        ctx.check_divisor(d)?;
        levels.insert(d, FgAbGroup::new(lv.ngens, mat_from_strings(&lv.rels, lv.ngens)?));
    }
    let get = |d: u64| -> Result<&FgAbGroup, String> {
        levels.get(&d).ok_or_else(|| format!("missing level {d}"))
    };
    let mut res = BTreeMap::new();
    let mut tr = BTreeMap::new();
    for step in &j.res {
        let (d, p) = (step.level, step.prime);
        let src = get(d)?.clone();
        let dst = get(d / p)?.clone();
        let mat = mat_from_strings(&step.mat, dst.ngens)?;
        res.insert((d, p), GroupMap::new(src, dst, mat)?);
    }
    for step in &j.tr {
        let (d, p) = (step.level, step.prime);
        let src = get(d / p)?.clone();
        let dst = get(d)?.clone();
        let mat = mat_from_strings(&step.mat, dst.ngens)?;
        tr.insert((d, p), GroupMap::new(src, dst, mat)?);
    }
    let mut weyl = BTreeMap::new();
    for (&d, rows) in &j.weyl {
        let g = get(d)?.clone();
        let mat = mat_from_strings(rows, g.ngens)?;
        weyl.insert(d, GroupMap::new(g.clone(), g, mat)?);
    }
    MackeyFunctor::new(ctx, levels, res, tr, weyl)
}

pub fn to_json_string(m: &MackeyFunctor) -> String {
    serde_json::to_string_pretty(&to_json(m)).expect("serializable")
}

pub fn from_json_str(s: &str) -> Result<MackeyFunctor, String> {
    let j: MackeyJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
    from_json(&j)
}
