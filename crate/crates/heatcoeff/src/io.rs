//! Graph serialization: the JSON schema used by the CLI and cache, and
//! the compact text form `"k; u>v*m, ..."`.

use crate::digraph::{GraphError, MultiDigraph, PointedGraph};
use num::BigRational;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub pointed: bool,
    pub edges: Vec<(usize, usize, u32)>,
}

impl GraphJson {
    pub fn from_graph(g: &MultiDigraph, pointed: bool) -> Self {
        GraphJson {
            vertices: g.vertex_count(),
            pointed,
            edges: g.edge_classes().collect(),
        }
    }

    pub fn to_graph(&self) -> Result<MultiDigraph, GraphError> {
        if self.edges.iter().any(|&(_, _, m)| m == 0) {
            return Err(GraphError::Parse("edge multiplicity must be >= 1".into()));
        }
        MultiDigraph::from_edges(self.vertices, &self.edges)
    }
}

pub fn graph_to_json(g: &MultiDigraph, pointed: bool) -> String {
    serde_json::to_string(&GraphJson::from_graph(g, pointed)).expect("plain data serializes")
}

pub fn parse_graph_json(s: &str) -> Result<(MultiDigraph, bool), GraphError> {
    let parsed: GraphJson =
        serde_json::from_str(s).map_err(|e| GraphError::Parse(e.to_string()))?;
    Ok((parsed.to_graph()?, parsed.pointed))
}

/// `"k; u>v*m, u>v"` with `*m` omitted for single edges; `k` counts every
/// vertex (`•` included for pointed use).
pub fn graph_to_text(g: &MultiDigraph) -> String {
    let edges: Vec<String> = g
        .edge_classes()
        .map(|(u, v, m)| {
            if m == 1 {
                format!("{u}>{v}")
            } else {
                format!("{u}>{v}*{m}")
            }
        })
        .collect();
    if edges.is_empty() {
        format!("{};", g.vertex_count())
    } else {
        format!("{}; {}", g.vertex_count(), edges.join(", "))
    }
}

pub fn parse_graph_text(s: &str) -> Result<MultiDigraph, GraphError> {
    let bad = |msg: &str| GraphError::Parse(format!("{msg} in {s:?}"));
    let (head, tail) = match s.split_once(';') {
        Some((h, t)) => (h, t),
        None => (s, ""),
    };
    let n: usize = head.trim().parse().map_err(|_| bad("bad vertex count"))?;
    let mut edges = Vec::new();
    for part in tail.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (uv, m) = match part.split_once('*') {
            Some((uv, m)) => {
                (uv, m.trim().parse::<u32>().map_err(|_| bad("bad multiplicity"))?)
            }
            None => (part, 1),
        };
        if m == 0 {
            return Err(bad("multiplicity must be >= 1"));
        }
        let (u, v) = uv.split_once('>').ok_or_else(|| bad("edge needs 'u>v'"))?;
        let u: usize = u.trim().parse().map_err(|_| bad("bad source vertex"))?;
        let v: usize = v.trim().parse().map_err(|_| bad("bad target vertex"))?;
        edges.push((u, v, m));
    }
    MultiDigraph::from_edges(n, &edges)
}

/// Accepts either the JSON schema or the compact text form. JSON carries
/// its own pointedness; the text form leaves it to the caller.
pub fn parse_graph_input(s: &str) -> Result<(MultiDigraph, Option<bool>), GraphError> {
    let trimmed = s.trim();
    if trimmed.starts_with('{') {
        let (g, pointed) = parse_graph_json(trimmed)?;
        Ok((g, Some(pointed)))
    } else {
        Ok((parse_graph_text(trimmed)?, None))
    }
}

pub fn parse_pointed_input(s: &str) -> Result<PointedGraph, GraphError> {
    let (g, pointed) = parse_graph_input(s)?;
    if pointed == Some(false) {
        return Err(GraphError::Parse("expected a pointed graph".into()));
    }
    PointedGraph::new(g)
}

pub fn parse_unpointed_input(s: &str) -> Result<MultiDigraph, GraphError> {
    let (g, pointed) = parse_graph_input(s)?;
    if pointed == Some(true) {
        return Err(GraphError::Parse("expected an unpointed graph".into()));
    }
    Ok(g)
}

pub fn parse_rational(s: &str) -> Result<BigRational, GraphError> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| GraphError::Parse(format!("bad rational {s:?}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = MultiDigraph::from_edges(2, &[(0, 1, 2), (1, 0, 1), (1, 1, 3)]).unwrap();
        let s = graph_to_text(&g);
        assert_eq!(s, "2; 0>1*2, 1>0, 1>1*3");
        assert_eq!(parse_graph_text(&s).unwrap(), g);
        assert_eq!(parse_graph_text("1;").unwrap(), MultiDigraph::new(1));
        assert_eq!(parse_graph_text("3").unwrap(), MultiDigraph::new(3));
    }

    #[test]
    fn json_round_trip() {
        let g = MultiDigraph::from_edges(2, &[(1, 0, 2), (0, 1, 2)]).unwrap();
        let s = graph_to_json(&g, true);
        let (back, pointed) = parse_graph_json(&s).unwrap();
        assert!(pointed);
        assert_eq!(back, g);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_graph_text("x; 0>0").is_err());
        assert!(parse_graph_text("1; 0-0").is_err());
        assert!(parse_graph_text("1; 0>0*0").is_err());
        assert!(parse_graph_text("1; 0>2").is_err());
        assert!(parse_rational("3/0x").is_err());
        assert_eq!(parse_rational("-1/3").unwrap().to_string(), "-1/3");
        assert_eq!(parse_rational("4").unwrap().to_string(), "4");
    }
}
