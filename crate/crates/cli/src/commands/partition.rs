use std::fmt::Write;

use kmsgraph::series::{
    generating_function, partition_closed_form, partition_partial_unchecked, partition_value_with, uniform_sup_with,
    RationalFunction, UniformSup,
};
use serde_json::json;

use super::{load_graph, resolve_beta, CliError, Ctx, Output};
use crate::report::{fmt_num, num};
use crate::PartitionArgs;

fn series_text(coeffs: &[String]) -> String {
    coeffs.join(" ")
}

pub fn run(ctx: &Ctx, p: &PartitionArgs) -> Result<Output, CliError> {
    let g = load_graph(&p.file)?;
    let target = p.vertex.as_deref();
    if let Some(v) = target {
        g.index_of(v)?;
    }
    let closed = |v: Option<&str>| -> Result<RationalFunction, CliError> {
        Ok(match v {
            Some(v) => partition_closed_form(&g, v)?,
            None => generating_function(&g),
        })
    };
    let label = target.map_or("H_E".to_string(), |v| format!("Z_{v}"));

    if p.closed_form {
        let f = closed(target)?;
        let payload = serde_json::to_value(f.to_json()).expect("plain data");
        let text = format!("{label}(t) = {f}\n");
        return Ok(Output::ok(ctx.report("partition", Some(&g), payload), text));
    }
    if let Some(n) = p.series {
        let coeffs: Vec<String> = closed(target)?.taylor(n).iter().map(|c| c.to_string()).collect();
        let text = format!("{label}: {}\n", series_text(&coeffs));
        let payload = json!({"target": target, "terms": n, "coefficients": coeffs});
        return Ok(Output::ok(ctx.report("partition", Some(&g), payload), text));
    }

    let beta = resolve_beta(p.beta_args().expect("clap requires a mode"))?;
    let vertices: Vec<usize> = match target {
        Some(v) => vec![g.index_of(v)?],
        None => (0..g.vertex_count()).collect(),
    };

    if p.force {
        let mut text = String::new();
        let mut values = Vec::new();
        for &v in &vertices {
            let s = partition_partial_unchecked(&g, g.name(v), beta, p.terms)?;
            writeln!(text, "Z_{}({}) partial sum over {} terms: {}", g.name(v), fmt_num(beta), p.terms, fmt_num(s)).unwrap();
            values.push(json!({"vertex": g.name(v), "partial_sum": num(s)}));
        }
        let payload = json!({"beta": beta, "terms": p.terms, "unchecked": true, "values": values});
        let mut report = ctx.report("partition", Some(&g), payload);
        report.warnings.push("criticality check skipped; partial sums carry no tail bound".into());
        return Ok(Output::ok(report, text));
    }

    let r = ctx.scc(&g)?;
    let mut text = String::new();
    let mut values = Vec::new();
    for &v in &vertices {
        let z = partition_value_with(&g, &r, v, beta, p.tail_tol, &ctx.settings)?;
        match z.value {
            Some(x) => writeln!(text, "Z_{}({}) = {}  (tail < {}, {} terms)", g.name(v), fmt_num(beta), fmt_num(x), fmt_num(z.tail_bound), z.terms_used),
            None => writeln!(text, "Z_{}({}) diverges", g.name(v), fmt_num(beta)),
        }
        .unwrap();
        values.push(json!({
            "vertex": g.name(v),
            "value": z.value,
            "partial_sum": num(z.partial_sum),
            "tail_bound": num(z.tail_bound),
            "terms": z.terms_used,
            "diverges": z.diverges(),
        }));
    }
    let payload = if target.is_some() {
        let mut one = values.pop().expect("one vertex");
        one["beta"] = json!(beta);
        one
    } else {
        let sup = match uniform_sup_with(&g, &r, beta, p.tail_tol, &ctx.settings)? {
            UniformSup::Finite(x) => x,
            UniformSup::Infinite => f64::INFINITY,
        };
        writeln!(text, "sup_v Z_v({}) = {}", fmt_num(beta), fmt_num(sup)).unwrap();
        json!({"beta": beta, "values": values, "sup": num(sup)})
    };
    Ok(Output::ok(ctx.report("partition", Some(&g), payload), text))
}
