use std::fmt::Write;

use super::Graph;

/// Renders the graph in Graphviz DOT. `labels`, when given, annotates vertex
/// `i` with `labels[i]`.
pub fn to_dot(graph: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in graph.vertices() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
                writeln!(out, "  {v} [label=\"{escaped}\"];").unwrap();
            }
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for &(u, v) in graph.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_with_labels() {
        let labels = vec!["{1}".to_string(), "{2}".to_string(), "{4}".to_string()];
        let dot = to_dot(&Graph::path(3), Some(&labels));
        assert_eq!(
            dot,
            "graph G {\n  0 [label=\"{1}\"];\n  1 [label=\"{2}\"];\n  2 [label=\"{4}\"];\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
        assert_eq!(to_dot(&Graph::empty(1), None), "graph G {\n  0;\n}\n");
    }
}
