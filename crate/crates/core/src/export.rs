//! Serialized forms of a hypergraph: canonical JSON and a bipartite DOT
//! incidence graph.

use serde::Serialize;

use crate::hypergraph::Hypergraph;

#[derive(Serialize)]
struct JsonForm<'a> {
    kind: &'a str,
    algebra: &'a str,
    vertices: &'a [String],
    edges: &'a [Vec<usize>],
}

/// `{"kind","algebra","vertices","edges"}` on one line. Edge entries index
/// into `vertices`; the hypergraph's canonical form makes this byte-stable.
pub fn to_json(h: &Hypergraph, kind: &str, algebra: &str) -> String {
    serde_json::to_string(&JsonForm { kind, algebra, vertices: h.labels(), edges: h.edges() })
        .expect("plain data serializes")
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Vertex nodes `v<i>` are ellipses labeled by element, edge nodes `e<j>`
/// are boxes, and each incidence is an undirected link.
pub fn to_dot(h: &Hypergraph, kind: &str, algebra: &str) -> String {
    let mut out = format!("graph {} {{\n", quote(&format!("{kind} {algebra}")));
    for (i, label) in h.labels().iter().enumerate() {
        out.push_str(&format!("  v{i} [shape=ellipse, label={}];\n", quote(label)));
    }
    for j in 0..h.edge_count() {
        out.push_str(&format!("  e{j} [shape=box, label=\"e{j}\"];\n"));
    }
    for (j, edge) in h.edges().iter().enumerate() {
        for v in edge {
            out.push_str(&format!("  v{v} -- e{j};\n"));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::constructions::commuting_hypergraph;

    #[test]
    fn quaternion_json() {
        let q8 = Algebra::from_spec("quaternion").unwrap();
        let json = to_json(&commuting_hypergraph(&q8), "commuting", "quaternion");
        assert_eq!(
            json,
            r#"{"kind":"commuting","algebra":"quaternion","vertices":["1","-1","i","-i","j","-j","k","-k"],"edges":[[0,1,2,3],[0,1,4,5],[0,1,6,7]]}"#
        );
    }

    #[test]
    fn quaternion_dot_counts() {
        let q8 = Algebra::from_spec("quaternion").unwrap();
        let dot = to_dot(&commuting_hypergraph(&q8), "commuting", "quaternion");
        assert_eq!(dot.matches("shape=ellipse").count(), 8);
        assert_eq!(dot.matches("shape=box").count(), 3);
        assert_eq!(dot.matches(" -- ").count(), 12);
        assert!(dot.starts_with("graph \"commuting quaternion\" {"));
    }

    #[test]
    fn empty_family_and_escaping() {
        let h = Hypergraph::new(vec!["a\"b".into()], Vec::<Vec<usize>>::new()).unwrap();
        assert!(to_json(&h, "k", "x").ends_with(r#""edges":[]}"#));
        assert!(to_dot(&h, "k", "x").contains(r#"label="a\"b""#));
    }
}
