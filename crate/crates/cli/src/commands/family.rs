use std::fmt::Write;

use kmsgraph::covertree::cover_levels;
use kmsgraph::families::{
    ladder_graph, ladder_partition, ladder_truncation_check, skip_graph, skip_harmonic, skip_return_sums,
    staircase_bruteforce_identity, staircase_graph, staircase_summability, wild_graph, StaircaseRule, Verdict,
};
use kmsgraph::DirectedMultigraph;
use serde_json::{json, Value};

use super::{resolve_beta, CliError, Ctx, Output};
use crate::report::fmt_num;
use crate::{FamilyArgs, FamilyKind};

/// Longest explicit staircase checked against the path brute force.
const IDENTITY_TERMS: usize = 8;

fn verdict_name(v: Verdict) -> String {
    serde_json::to_value(v).expect("unit enum").as_str().expect("string").to_string()
}

pub fn run(ctx: &Ctx, f: &FamilyArgs) -> Result<Output, CliError> {
    let (graph, payload, text): (DirectedMultigraph, Value, String) = match &f.kind {
        FamilyKind::Ladder { n, beta, depth } => {
            let beta = resolve_beta(*beta)?;
            let z = ladder_partition(*n, beta)?;
            let check = ladder_truncation_check(*n, beta, *depth)?;
            let mut text = format!("Z_v{n}({}) = {}\n", fmt_num(beta), fmt_num(z.value));
            writeln!(
                text,
                "sup_n Z_vn {}\ntruncation: {} terms, partial sum {}, residual {}, tail bound {}",
                if z.sup_finite { "finite" } else { "infinite" },
                depth,
                fmt_num(check.partial_sum),
                fmt_num(check.residual),
                fmt_num(check.tail_bound)
            )
            .unwrap();
            let payload = json!({
                "kind": "ladder",
                "n": n,
                "beta": beta,
                "Z": z.value,
                "sup_finite": z.sup_finite,
                "truncation": {
                    "terms": depth,
                    "partial_sum": check.partial_sum,
                    "tail_bound": check.tail_bound,
                    "residual": check.residual,
                    "within_bound": check.within_bound(),
                },
            });
            (ladder_graph(*n), payload, text)
        }
        FamilyKind::Staircase { a, affine, beta, depth } => {
            let beta = resolve_beta(*beta)?;
            let rule = match (a, affine) {
                (Some(a), _) => StaircaseRule::Explicit(a.clone()),
                (None, Some(pq)) => match pq.as_slice() {
                    &[p, q] => StaircaseRule::Affine { p, q },
                    _ => return Err(CliError::input("--affine takes exactly two values p,q")),
                },
                (None, None) => return Err(CliError::input("give --a or --affine")),
            };
            let s = staircase_summability(&rule, beta, *depth)?;
            let shown: Vec<String> = s.partial_products.iter().map(|x| fmt_num(*x)).collect();
            let mut text = format!("partial products: {}\nverdict: {}", shown.join(" "), verdict_name(s.verdict));
            if let Some(t) = s.trend {
                write!(text, " (trend: {})", verdict_name(t)).unwrap();
            }
            text.push('\n');
            let terms = rule.prefix(*depth);
            let mut payload = json!({
                "kind": "staircase",
                "rule": rule,
                "beta": beta,
                "partial_products": s.partial_products,
                "verdict": s.verdict,
                "trend": s.trend,
            });
            if matches!(rule, StaircaseRule::Explicit(_)) && terms.len() <= IDENTITY_TERMS {
                let id = staircase_bruteforce_identity(&terms, beta)?;
                writeln!(
                    text,
                    "path sum {} vs product {}: {}",
                    fmt_num(id.lhs),
                    fmt_num(id.rhs),
                    if id.equal { "equal" } else { "DIFFERENT" }
                )
                .unwrap();
                payload["identity"] = json!({"lhs": id.lhs, "rhs": id.rhs, "equal": id.equal});
            }
            (staircase_graph(&terms).0, payload, text)
        }
        FamilyKind::Skip { beta, depth } => {
            let beta = resolve_beta(*beta)?;
            let h = skip_harmonic(beta);
            let sums = skip_return_sums(beta, *depth)?;
            let last = |xs: &[f64]| xs.last().copied().unwrap_or(0.0);
            let text = format!(
                "lambda_1 = {}  A = {}  residual {}\nreturn sums at depth {}: full {}, sub-staircase {}\nunbounded trend: {}\n",
                fmt_num(h.lambda1),
                fmt_num(h.a),
                fmt_num(h.residual),
                depth,
                fmt_num(last(&sums.full)),
                fmt_num(last(&sums.sub_staircase)),
                if sums.unbounded_trend() { "yes" } else { "no" }
            );
            let payload = json!({
                "kind": "skip",
                "beta": beta,
                "lambda1": h.lambda1,
                "A": h.a,
                "residual": h.residual,
                "return_sums": {"full": sums.full, "sub_staircase": sums.sub_staircase},
                "unbounded_trend": sums.unbounded_trend(),
            });
            (skip_graph(*depth), payload, text)
        }
        FamilyKind::Wild { d, depth } => {
            let w = wild_graph(d, *depth)?;
            let hub = w.graph.name(w.hub).to_string();
            let levels = cover_levels(&w.graph, &hub, *depth + 1)?;
            let mut text = String::new();
            let mut branches = Vec::new();
            for (i, b) in w.branches.iter().enumerate() {
                let empirical = b.multiplicities.iter().map(|&a| (a as f64).ln()).sum::<f64>() / *depth as f64;
                let lo = b.ratios.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = b.ratios.iter().copied().fold(0.0, f64::max);
                writeln!(
                    text,
                    "branch {i}: d = {}  predicted beta {}  empirical {}  ratios in [{}, {}]",
                    fmt_num(b.d),
                    fmt_num(b.predicted_beta),
                    fmt_num(empirical),
                    fmt_num(lo),
                    fmt_num(hi)
                )
                .unwrap();
                branches.push(json!({
                    "d": b.d,
                    "multiplicities": b.multiplicities,
                    "ratio_min": lo,
                    "ratio_max": hi,
                    "predicted_beta": b.predicted_beta,
                    "empirical_beta": empirical,
                }));
            }
            writeln!(text, "growth at {hub}: upper rate {}", fmt_num(levels.upper_rate)).unwrap();
            let payload = json!({
                "kind": "wild",
                "depth": depth,
                "branches": branches,
                "hub_upper_rate": levels.upper_rate,
            });
            (w.graph, payload, text)
        }
    };
    let mut payload = payload;
    if f.emit_graph {
        payload["graph"] = serde_json::to_value(graph.to_json()).expect("plain data");
    }
    Ok(Output::ok(ctx.report("family", Some(&graph), payload), text))
}
