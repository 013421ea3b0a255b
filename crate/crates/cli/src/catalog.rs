//! Multi-graph documents: edge lists separated by lines starting with `%`,
//! whose remainder names the graph.

use mbgames_core::graph::{Graph, GraphError};

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub graph: Graph,
}

pub fn parse(text: &str) -> Result<Vec<Entry>, GraphError> {
    let mut out = Vec::new();
    let mut name: Option<String> = None;
    let mut body = String::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix('%') {
            if let Some(prev) = name.take() {
                out.push(Entry { name: prev, graph: Graph::from_edge_list(&body)? });
            }
            name = Some(rest.trim().to_string());
            body.clear();
        } else if name.is_some() {
            body.push_str(line);
            body.push('\n');
        }
    }
    if let Some(prev) = name {
        out.push(Entry { name: prev, graph: Graph::from_edge_list(&body)? });
    }
    Ok(out)
}

pub fn render(entries: &[Entry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&format!("% {}\n", e.name));
        out.push_str(&e.graph.to_edge_list());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbgames_core::graph::{complete_graph, cycle_graph};

    #[test]
    fn round_trip() {
        let entries = vec![
            Entry { name: "k4".into(), graph: complete_graph(4).unwrap() },
            Entry { name: "c5".into(), graph: cycle_graph(5).unwrap() },
        ];
        let text = format!("# leading comment\n{}", render(&entries));
        let back = parse(&text).unwrap();
        assert_eq!(back.len(), 2);
        assert_eq!(back[1].name, "c5");
        assert_eq!(back[0].graph, entries[0].graph);
    }
}
