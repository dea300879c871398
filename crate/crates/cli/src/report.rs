//! The JSON envelope shared by every subcommand and the number formatting
//! that keeps it byte-for-byte deterministic.

use kmsgraph::DirectedMultigraph;
use serde_json::{json, Map, Value};

/// Significant digits kept for every float in a report.
pub const DIGITS: usize = 15;

/// `x` rounded to [`DIGITS`] significant digits; infinities and NaN become
/// the strings `"inf"`, `"-inf"` and `"nan"`.
pub fn num(x: f64) -> Value {
    if x.is_nan() {
        return Value::String("nan".into());
    }
    if x.is_infinite() {
        return Value::String(if x > 0.0 { "inf" } else { "-inf" }.into());
    }
    let rounded: f64 = format!("{:.*e}", DIGITS - 1, x).parse().expect("float text");
    json!(rounded)
}

/// Same rounding for human-readable output.
pub fn fmt_num(x: f64) -> String {
    match num(x) {
        Value::String(s) => s,
        v => v.to_string(),
    }
}

/// Rounds every float already inside `v`.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => num(n.as_f64().unwrap()),
        Value::Array(xs) => Value::Array(xs.into_iter().map(round_floats).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, x)| (k, round_floats(x))).collect()),
        other => other,
    }
}

pub struct Report {
    pub command: String,
    pub args: Vec<String>,
    pub graph: Option<(usize, u64)>,
    pub payload: Value,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &str, args: Vec<String>, graph: Option<&DirectedMultigraph>, payload: Value) -> Self {
        Self {
            command: command.to_string(),
            args,
            graph: graph.map(|g| (g.vertex_count(), g.edge_count())),
            payload,
            warnings: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!({"name": self.command, "args": self.args}));
        m.insert(
            "graph".into(),
            match self.graph {
                Some((v, e)) => json!({"vertices": v, "edges": e}),
                None => Value::Null,
            },
        );
        m.insert("payload".into(), round_floats(self.payload.clone()));
        m.insert("warnings".into(), json!(self.warnings));
        m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        Value::Object(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(num(0.1 + 0.2), json!(0.3));
        assert_eq!(num(3.0000000000000004), json!(3.0));
        assert_eq!(num(f64::NEG_INFINITY), json!("-inf"));
        assert_eq!(num(1.0 / 3.0).to_string(), "0.333333333333333");
        assert_eq!(fmt_num(2.0), "2.0");
        let v = round_floats(json!({"a": [1.0000000000000002, 2], "b": "x"}));
        assert_eq!(v, json!({"a": [1.0, 2], "b": "x"}));
    }
}
