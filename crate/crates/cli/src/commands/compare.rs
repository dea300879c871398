use std::fmt::Write;
use std::path::Path;

use kmsgraph::compare::{isomorphic, match_vertices, VertexMatch};
use serde_json::json;

use super::{load_graph, CliError, Ctx, Output, EXIT_ISO_MISMATCH, EXIT_OK, EXIT_REFUTED};

pub fn run(ctx: &Ctx, first: &Path, second: &Path, depth: Option<usize>, iso: bool) -> Result<Output, CliError> {
    let g = load_graph(first)?;
    let h = load_graph(second)?;
    let depth = depth.unwrap_or(2 * g.vertex_count().max(h.vertex_count()));
    let mut text = String::new();
    let (mut payload, mut code) = match match_vertices(&g, &h, depth) {
        VertexMatch::Refuted { level } => {
            writeln!(text, "REFUTED: fingerprints differ at level {level}").unwrap();
            (json!({"depth": depth, "refuted": true, "level": level}), EXIT_REFUTED)
        }
        VertexMatch::Compatible { classes, bijections } => {
            writeln!(text, "not refuted up to depth {depth}; {bijections} compatible bijection(s)").unwrap();
            let classes: Vec<_> = classes
                .iter()
                .map(|(a, b)| {
                    writeln!(text, "  {} ~ {}", g.names_of(a).join(" "), h.names_of(b).join(" ")).unwrap();
                    json!({"first": g.names_of(a), "second": h.names_of(b)})
                })
                .collect();
            let payload = json!({
                "depth": depth,
                "refuted": false,
                "classes": classes,
                "bijections": bijections.to_string(),
            });
            (payload, EXIT_OK)
        }
    };
    if iso {
        let same = isomorphic(&g, &h)?;
        writeln!(text, "isomorphic: {}", if same { "yes" } else { "no" }).unwrap();
        payload["isomorphic"] = json!(same);
        if !same && code == EXIT_OK {
            code = EXIT_ISO_MISMATCH;
        }
    }
    let mut report = ctx.report("compare", Some(&g), payload);
    let digest = |x: &kmsgraph::DirectedMultigraph| json!({"vertices": x.vertex_count(), "edges": x.edge_count()});
    report.payload["graphs"] = json!([digest(&g), digest(&h)]);
    Ok(Output {
        report,
        text,
        code,
    })
}
