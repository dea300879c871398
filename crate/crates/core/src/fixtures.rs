//! Small graphs with known invariants, shared by tests, docs and the CLI
//! test-suite.

use crate::graph::{DirectedMultigraph, GraphBuilder};

fn build(vertices: &[&str], edges: &[(&str, &str, u64)]) -> DirectedMultigraph {
    let mut b = GraphBuilder::new();
    for v in vertices {
        b.vertex(*v).expect("fixture vertex");
    }
    for &(s, d, m) in edges {
        b.edge(s, d, m).expect("fixture edge");
    }
    b.build()
}

/// `v` with two loops, one edge `v -> w`, `w` with three loops.
/// Adjacency `[[2, 1], [0, 3]]`.
pub fn loop_chain() -> DirectedMultigraph {
    build(&["v", "w"], &[("v", "v", 2), ("v", "w", 1), ("w", "w", 3)])
}

/// Four strongly connected components:
///
/// * green `g1 -> g2 -> g3 -> g1`, every step doubled (radius 2, period 3)
/// * blue `b1 -> b2 -> b3 -> b4 -> b1` with multiplicities 1, 2, 2, 2
///   (radius 8^(1/4), period 4)
/// * orange `o1..o4`, same pattern as blue
/// * red `r1 -> r2 -> r3 -> r1` with multiplicities 1, 2, 2 (radius 4^(1/3))
///
/// Connectors: blue -> orange, blue -> red, red -> green, orange -> green.
pub fn four_components() -> DirectedMultigraph {
    build(
        &[
            "g1", "g2", "g3", "o1", "o2", "o3", "o4", "b1", "b2", "b3", "b4", "r1", "r2", "r3",
        ],
        &[
            ("g1", "g2", 2),
            ("g2", "g3", 2),
            ("g3", "g1", 2),
            ("b1", "b2", 1),
            ("b2", "b3", 2),
            ("b3", "b4", 2),
            ("b4", "b1", 2),
            ("o1", "o2", 1),
            ("o2", "o3", 2),
            ("o3", "o4", 2),
            ("o4", "o1", 2),
            ("r1", "r2", 1),
            ("r2", "r3", 2),
            ("r3", "r1", 2),
            ("b2", "o1", 1),
            ("b4", "r1", 1),
            ("r3", "g1", 1),
            ("o4", "g1", 1),
        ],
    )
}

/// Vertex sets of [`four_components`] as `(green, orange, blue, red)`.
pub fn four_components_parts() -> [Vec<&'static str>; 4] {
    [
        vec!["g1", "g2", "g3"],
        vec!["o1", "o2", "o3", "o4"],
        vec!["b1", "b2", "b3", "b4"],
        vec!["r1", "r2", "r3"],
    ]
}

/// Two truncated Bratteli diagrams with levels `0..levels` that share every
/// fixed-target path count yet are not isomorphic.
///
/// Both have top vertex `o` with single edges to `x1` and `y1`. In the first
/// diagram `x1` sends one edge to `x2` and two to `y2` while `y1` sends one
/// edge to `y2`; in the second `x1` sends one edge to each of `x2`, `y2`
/// and `y1` sends two edges to `y2`. Below level 1 every vertex sends one
/// edge to each vertex of the next level.
pub fn bratteli_pair(levels: usize) -> (DirectedMultigraph, DirectedMultigraph) {
    assert!(levels >= 3, "need at least three levels");
    let diagram = |x1_y2: u64, y1_y2: u64| {
        let mut b = GraphBuilder::new();
        b.vertex("o").unwrap();
        for k in 1..levels {
            b.vertex(format!("x{k}")).unwrap();
            b.vertex(format!("y{k}")).unwrap();
        }
        b.edge("o", "x1", 1).unwrap();
        b.edge("o", "y1", 1).unwrap();
        b.edge("x1", "x2", 1).unwrap();
        b.edge("x1", "y2", x1_y2).unwrap();
        b.edge("y1", "y2", y1_y2).unwrap();
        for k in 2..levels - 1 {
            for s in ["x", "y"] {
                for d in ["x", "y"] {
                    b.edge(&format!("{s}{k}"), &format!("{d}{}", k + 1), 1).unwrap();
                }
            }
        }
        b.build()
    };
    (diagram(2, 1), diagram(1, 2))
}
