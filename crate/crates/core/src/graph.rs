//! Finite simplicial graphs: parsing, induced subgraphs, links and stars,
//! clique enumeration and the link/delete clique-count recursion.
//!
//! A graph here always plays the role of a commutation graph of a Coxeter
//! system: vertices are the generators (order fixed by input order), and an
//! edge means the two generators commute.  The empty graph is allowed as an
//! intermediate value (the link of an isolated vertex) but is rejected by
//! every operation that needs a commutation graph proper.

use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Errors from graph construction, parsing and vertex lookups.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("vertex index {index} out of range for {vertex_count} vertices")]
    IndexOutOfRange { index: usize, vertex_count: usize },
    #[error("the graph is empty")]
    EmptyGraph,
    #[error("too many vertices: {0} (at most {MAX_VERTICES} supported)")]
    TooManyVertices(usize),
    #[error("{indices:?} is not a clique")]
    NotAClique { indices: Vec<usize> },
}

/// Largest supported vertex count (adjacency is stored in 64-bit masks).
pub const MAX_VERTICES: usize = 64;

/// A finite simplicial graph with labelled vertices in a fixed order.
///
/// The vertex order is part of the data: it fixes the generator order of the
/// Coxeter system and thereby the normal forms of [`crate::words`] and the
/// basis order of [`crate::ktheory`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from vertex labels (in order) and index edge pairs.
    pub fn new<I>(labels: Vec<String>, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if labels.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(labels.len()));
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(GraphError::DuplicateVertex(label.clone()));
            }
        }
        let mut graph = Graph {
            adj: vec![0; labels.len()],
            labels,
        };
        for (u, v) in edges {
            graph.check_index(u)?;
            graph.check_index(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(graph.labels[u].clone()));
            }
            graph.adj[u] |= 1 << v;
            graph.adj[v] |= 1 << u;
        }
        Ok(graph)
    }

    /// Parses the textual graph format.
    ///
    /// One line `vertices <label>...` followed by any number of lines
    /// `edge <label> <label>`; `#` starts a comment; labels are arbitrary
    /// non-whitespace tokens.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let err = |line: usize, message: String| GraphError::Parse { line, message };
        let mut labels: Vec<String> = Vec::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut seen_vertices = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = content.split_whitespace();
            let Some(keyword) = tokens.next() else {
                continue;
            };
            match keyword {
                "vertices" => {
                    if seen_vertices {
                        return Err(err(line_no, "second `vertices` line".into()));
                    }
                    seen_vertices = true;
                    for token in tokens {
                        if labels.iter().any(|l| l == token) {
                            return Err(err(line_no, format!("duplicate vertex `{token}`")));
                        }
                        labels.push(token.to_string());
                    }
                    if labels.is_empty() {
                        return Err(err(line_no, "expected at least one vertex label".into()));
                    }
                    if labels.len() > MAX_VERTICES {
                        return Err(err(
                            line_no,
                            format!("too many vertices ({}, at most {MAX_VERTICES})", labels.len()),
                        ));
                    }
                }
                "edge" => {
                    if !seen_vertices {
                        return Err(err(line_no, "`edge` before the `vertices` line".into()));
                    }
                    let ends: Vec<&str> = tokens.collect();
                    if ends.len() != 2 {
                        return Err(err(line_no, "`edge` takes exactly two labels".into()));
                    }
                    let mut pair = [0usize; 2];
                    for (slot, token) in pair.iter_mut().zip(&ends) {
                        *slot = labels
                            .iter()
                            .position(|l| l == token)
                            .ok_or_else(|| err(line_no, format!("unknown vertex `{token}`")))?;
                    }
                    if pair[0] == pair[1] {
                        return Err(err(line_no, format!("self-loop at vertex `{}`", ends[0])));
                    }
                    edges.push((pair[0], pair[1]));
                }
                other => {
                    return Err(err(line_no, format!("unknown directive `{other}`")));
                }
            }
        }
        if !seen_vertices {
            return Err(err(text.lines().count().max(1), "missing `vertices` line".into()));
        }
        Graph::new(labels, edges)
    }

    fn check_index(&self, v: usize) -> Result<(), GraphError> {
        if v < self.labels.len() {
            Ok(())
        } else {
            Err(GraphError::IndexOutOfRange {
                index: v,
                vertex_count: self.labels.len(),
            })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of vertex `v`.
    ///
    /// # Panics
    /// Panics if `v` is out of range.
    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Index of the vertex with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && v < self.adj.len() && self.adj[u] >> v & 1 == 1
    }

    /// Neighbour set of `v` as a bitmask over vertex indices.
    pub fn adjacency_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    fn full_mask(&self) -> u64 {
        if self.labels.is_empty() {
            0
        } else {
            u64::MAX >> (64 - self.labels.len())
        }
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.labels.len() {
            for v in (u + 1)..self.labels.len() {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced subgraph on the given vertices; order is inherited from `self`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph, GraphError> {
        let mut mask: u64 = 0;
        for &v in keep {
            self.check_index(v)?;
            mask |= 1 << v;
        }
        Ok(self.induced_by_mask(mask))
    }

    fn induced_by_mask(&self, mask: u64) -> Graph {
        let kept: Vec<usize> = (0..self.labels.len()).filter(|v| mask >> v & 1 == 1).collect();
        let labels = kept.iter().map(|&v| self.labels[v].clone()).collect();
        let mut adj = vec![0u64; kept.len()];
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph { labels, adj }
    }

    /// Induced subgraph on the neighbours of `v`.
    pub fn link(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_index(v)?;
        Ok(self.induced_by_mask(self.adj[v]))
    }

    /// Induced subgraph on the neighbours of `v` together with `v` itself.
    pub fn star(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_index(v)?;
        Ok(self.induced_by_mask(self.adj[v] | 1 << v))
    }

    /// Induced subgraph with vertex `v` removed.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_index(v)?;
        Ok(self.induced_by_mask(self.full_mask() & !(1 << v)))
    }

    /// Whether the Coxeter system of this commutation graph is irreducible,
    /// i.e. does not split as a direct product over a vertex partition.
    /// Equivalent to connectivity of the complement graph.
    pub fn is_irreducible(&self) -> Result<bool, GraphError> {
        let n = self.labels.len();
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let full = self.full_mask();
        let mut visited: u64 = 1;
        let mut frontier: Vec<usize> = vec![0];
        while let Some(v) = frontier.pop() {
            let complement_neighbours = full & !self.adj[v] & !(1 << v) & !visited;
            let mut rest = complement_neighbours;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                visited |= 1 << w;
                frontier.push(w);
            }
        }
        Ok(visited == full)
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices")?;
        for label in &self.labels {
            write!(f, " {label}")?;
        }
        for (u, v) in self.edges() {
            write!(f, "\nedge {} {}", self.labels[u], self.labels[v])?;
        }
        Ok(())
    }
}

/// A clique: a set of pairwise-adjacent vertices, stored as ascending indices
/// of the ambient graph.  The empty set is a clique.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clique {
    vertices: Vec<usize>,
}

impl Clique {
    /// The empty clique.
    pub fn empty() -> Self {
        Clique { vertices: Vec::new() }
    }

    /// Builds a clique after checking that all pairs are edges of `g`.
    pub fn from_indices(g: &Graph, mut vertices: Vec<usize>) -> Result<Self, GraphError> {
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            if v >= g.vertex_count() {
                return Err(GraphError::IndexOutOfRange {
                    index: v,
                    vertex_count: g.vertex_count(),
                });
            }
        }
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(GraphError::NotAClique { indices: vertices.clone() });
                }
            }
        }
        Ok(Clique { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex labels of this clique in the ambient graph.
    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.vertices.iter().map(|&v| g.label(v)).collect()
    }
}

/// All cliques of `g`, including the empty clique, sorted by size and then
/// lexicographically on vertex indices.  The order is deterministic and is
/// the basis order used by [`crate::ktheory`].
pub fn enumerate_cliques(g: &Graph) -> Vec<Clique> {
    let n = g.vertex_count();
    let mut masks: Vec<u64> = Vec::new();
    // Subset-extension DFS: a set extends to a clique with any later vertex
    // adjacent to all current members.
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some((clique, next)) = stack.pop() {
        masks.push(clique);
        for v in (next..n).rev() {
            if clique & !g.adjacency_mask(v) == 0 {
                stack.push((clique | 1 << v, v + 1));
            }
        }
    }
    let mut cliques: Vec<Clique> = masks
        .into_iter()
        .map(|mask| Clique {
            vertices: (0..n).filter(|v| mask >> v & 1 == 1).collect(),
        })
        .collect();
    cliques.sort_by(|a, b| (a.size(), &a.vertices).cmp(&(b.size(), &b.vertices)));
    cliques
}

/// Number of cliques of `g` via the recursion
/// `N(g) = N(link(v)) + N(g - v)`, with `N(empty) = 1`.
///
/// The pivot is the first vertex whose star is not all of `g`; complete
/// graphs short-circuit to `2^n`.  The result equals
/// `enumerate_cliques(g).len()` for every graph.
pub fn clique_count_recursive(g: &Graph) -> u128 {
    let n = g.vertex_count();
    if n == 0 {
        return 1;
    }
    let full = g.full_mask();
    let pivot = (0..n).find(|&v| g.adjacency_mask(v) | 1 << v != full);
    match pivot {
        None => 1u128 << n,
        Some(v) => {
            clique_count_recursive(&g.link(v).expect("pivot in range"))
                + clique_count_recursive(&g.delete_vertex(v).expect("pivot in range"))
        }
    }
}

/// Size of a maximal clique of `g` (0 for the empty graph).
pub fn max_clique_size(g: &Graph) -> usize {
    enumerate_cliques(g).iter().map(Clique::size).max().unwrap_or(0)
}
