use std::fmt::Write;
use std::path::Path;

use kmsgraph::covertree::{cover_levels_with, prune_and_compare};
use serde_json::json;

use super::{load_graph, CliError, Ctx, Output};
use crate::report::{fmt_num, num};

fn ln_or_neg_inf(x: f64) -> f64 {
    if x > 0.0 {
        x.ln()
    } else {
        f64::NEG_INFINITY
    }
}

pub fn run(ctx: &Ctx, file: &Path, vertex: &str, depth: usize, window: usize, prune: bool) -> Result<Output, CliError> {
    let g = load_graph(file)?;
    let v = g.index_of(vertex)?;
    let r = ctx.scc(&g)?;
    let levels = cover_levels_with(&g, v, depth, window)?;
    let beta_v = r.critical_temperature(v).value;

    let shown: Vec<String> = levels.level_strings().into_iter().take(12).collect();
    let mut text = format!(
        "cover tree at {vertex}, depth {depth}\n  levels {}{}\n  upper rate {}  lower rate {}\n  log upper rate {}  beta_v {}\n",
        shown.join(" "),
        if depth + 1 > shown.len() { " ..." } else { "" },
        fmt_num(levels.upper_rate),
        fmt_num(levels.lower_rate),
        fmt_num(ln_or_neg_inf(levels.upper_rate)),
        fmt_num(beta_v),
    );
    let mut payload = levels.to_json(Some(&g));
    payload["log_upper_rate"] = num(ln_or_neg_inf(levels.upper_rate));
    payload["beta_v"] = num(beta_v);
    payload["window"] = json!(window);
    if prune {
        let p = prune_and_compare(&g, vertex, depth)?;
        writeln!(
            text,
            "  pruned upper rate {}  full upper rate {}  pruned <= full: {}",
            fmt_num(p.upper_pruned()),
            fmt_num(p.upper_full()),
            if p.holds { "yes" } else { "no" }
        )
        .unwrap();
        payload["prune"] = json!({
            "levels": p.pruned.level_strings(),
            "upper_rate": p.upper_pruned(),
            "full_upper_rate": p.upper_full(),
            "holds": p.holds,
        });
    }
    Ok(Output::ok(ctx.report("growth", Some(&g), payload), text))
}
