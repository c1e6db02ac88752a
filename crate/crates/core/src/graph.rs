//! Finite directed multigraphs presenting the generator category as the free
//! category on the graph. Arrows are edge paths and two arrows are equal
//! exactly when their paths are the same sequence of edges.

use std::collections::BTreeMap;

use crate::error::GraphError;
use crate::types::{Name, Ty, TyKind};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorGraph {
    nodes: Vec<Name>,
    edges: BTreeMap<Name, (Name, Name)>,
    edge_order: Vec<Name>,
}

impl GeneratorGraph {
    /// The empty graph; types and terms must then be generator-free.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn add_node(&mut self, name: impl Into<Name>) -> Result<(), GraphError> {
        let name = name.into();
        if self.has_node(&name) {
            return Err(GraphError::DuplicateNode(name.to_string()));
        }
        self.nodes.push(name);
        Ok(())
    }

    pub fn add_edge(
        &mut self,
        name: impl Into<Name>,
        source: impl Into<Name>,
        target: impl Into<Name>,
    ) -> Result<(), GraphError> {
        let (name, source, target) = (name.into(), source.into(), target.into());
        if self.edges.contains_key(&name) {
            return Err(GraphError::DuplicateEdge(name.to_string()));
        }
        for end in [&source, &target] {
            if !self.has_node(end) {
                return Err(GraphError::UnknownNode(end.to_string()));
            }
        }
        self.edge_order.push(name.clone());
        self.edges.insert(name, (source, target));
        Ok(())
    }

    pub fn has_node(&self, name: &str) -> bool {
        self.nodes.iter().any(|n| &**n == name)
    }

    pub fn nodes(&self) -> &[Name] {
        &self.nodes
    }

    /// Edges in declaration order as `(name, source, target)`.
    pub fn edges(&self) -> impl Iterator<Item = (&Name, &Name, &Name)> {
        self.edge_order.iter().map(move |e| {
            let (s, t) = &self.edges[e];
            (e, s, t)
        })
    }

    pub fn edge(&self, name: &str) -> Option<(&Name, &Name)> {
        self.edges.get(name).map(|(s, t)| (s, t))
    }

    /// Checks that `path` runs from `source` to `target`. The empty path is
    /// the identity and requires `source == target`.
    pub fn check_path(&self, path: &[Name], source: &str, target: &str) -> Result<(), GraphError> {
        let mut at: &str = source;
        for edge in path {
            let (s, t) = self
                .edge(edge)
                .ok_or_else(|| GraphError::UnknownEdge(edge.to_string()))?;
            if &**s != at {
                return Err(GraphError::BrokenPath {
                    edge: edge.to_string(),
                    expected: at.to_string(),
                    found: s.to_string(),
                });
            }
            at = t;
        }
        if at != target {
            return Err(GraphError::BrokenPath {
                edge: path.last().map(|e| e.to_string()).unwrap_or_default(),
                expected: target.to_string(),
                found: at.to_string(),
            });
        }
        Ok(())
    }

    /// Every generator in `ty` must be a declared node.
    pub fn check_type(&self, ty: &Ty) -> Result<(), GraphError> {
        match ty.kind() {
            TyKind::Zero | TyKind::One => Ok(()),
            TyKind::Gen(n) if self.has_node(n) => Ok(()),
            TyKind::Gen(n) => Err(GraphError::UnknownNode(n.to_string())),
            TyKind::Sum(a, b) | TyKind::Prod(a, b) => {
                self.check_type(a)?;
                self.check_type(b)
            }
        }
    }

    /// All paths from `source` to `target` with at most `max_len` edges, in
    /// length-then-declaration order.
    pub fn paths(&self, source: &str, target: &str, max_len: usize) -> Vec<Vec<Name>> {
        let mut out = Vec::new();
        let mut frontier: Vec<(Name, Vec<Name>)> = vec![(Name::from(source), Vec::new())];
        for len in 0..=max_len {
            let mut next = Vec::new();
            for (at, path) in frontier {
                if &*at == target {
                    out.push(path.clone());
                }
                if len == max_len {
                    continue;
                }
                for (e, s, t) in self.edges() {
                    if *s == at {
                        let mut p = path.clone();
                        p.push(e.clone());
                        next.push((t.clone(), p));
                    }
                }
            }
            frontier = next;
        }
        out
    }

    /// Whether some cycle exists; enumeration of arrows is only exhaustive on
    /// acyclic graphs.
    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm on the node set.
        let mut indegree: BTreeMap<&str, usize> = self.nodes.iter().map(|n| (&**n, 0)).collect();
        for (_, _, t) in self.edges() {
            *indegree.get_mut(&**t).expect("declared") += 1;
        }
        let mut ready: Vec<&str> = indegree.iter().filter(|(_, d)| **d == 0).map(|(n, _)| *n).collect();
        let mut seen = 0;
        while let Some(n) = ready.pop() {
            seen += 1;
            for (_, s, t) in self.edges() {
                if &**s == n {
                    let d = indegree.get_mut(&**t).expect("declared");
                    *d -= 1;
                    if *d == 0 {
                        ready.push(t);
                    }
                }
            }
        }
        seen == self.nodes.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> GeneratorGraph {
        let mut g = GeneratorGraph::empty();
        g.add_node("x").unwrap();
        g.add_node("y").unwrap();
        g.add_node("z").unwrap();
        g.add_edge("k", "x", "y").unwrap();
        g.add_edge("l", "y", "z").unwrap();
        g.add_edge("m", "x", "z").unwrap();
        g
    }

    #[test]
    fn paths_compose() {
        let g = sample();
        assert!(g.check_path(&["k".into(), "l".into()], "x", "z").is_ok());
        assert!(g.check_path(&[], "x", "x").is_ok());
        assert!(g.check_path(&[], "x", "y").is_err());
        assert!(g.check_path(&["l".into()], "x", "z").is_err());
        assert!(g.check_path(&["q".into()], "x", "z").is_err());
    }

    #[test]
    fn enumerates_paths() {
        let g = sample();
        let ps = g.paths("x", "z", 4);
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0], vec![Name::from("m")]);
        assert!(g.is_acyclic());
    }

    #[test]
    fn rejects_duplicates_and_detects_cycles() {
        let mut g = sample();
        assert!(g.add_node("x").is_err());
        assert!(g.add_edge("k", "x", "y").is_err());
        assert!(g.add_edge("w", "x", "nowhere").is_err());
        g.add_edge("back", "z", "x").unwrap();
        assert!(!g.is_acyclic());
    }
}
