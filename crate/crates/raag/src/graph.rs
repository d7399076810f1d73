//! The defining simplicial graph of a RAAG and its purely graph-theoretic
//! queries: links, stars, the domination preorder, central vertices, and the
//! adjacent dominated pairs that witness a Heisenberg subgroup of the
//! automorphism group.
//!
//! Graphs are immutable once constructed, so every derived table (neighbor
//! lists, stars, non-star complements) is computed up front and shared freely
//! across threads.
//!
//! # Text format
//!
//! One file describes one graph:
//!
//! ```text
//! # comment lines and blank lines are ignored
//! vertices: a b c d
//! edge: a b
//! edge: b c
//! edge: c d
//! ```
//!
//! The `vertices:` line must come first and appear exactly once; its order
//! fixes the vertex indices and thereby the letter order used by normal
//! forms. Duplicate `edge:` lines are idempotent; self-loops and unknown
//! endpoints are errors.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// A vertex of a [`SimplicialGraph`], identified by its dense index.
///
/// Indices run `0..|V|` in the order vertices were declared. A `VertexId` is
/// only meaningful together with the graph that issued it.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Errors from graph parsing and vertex lookups.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("unknown vertex `{name}`")]
    UnknownVertex { name: String },
    #[error("vertex index {index} out of range (graph has {order} vertices)")]
    ForeignVertex { index: usize, order: usize },
}

/// A finite loop-free graph with a symmetric adjacency relation.
///
/// The graph defines the RAAG `A_Γ`: one generator per vertex, adjacent
/// generators commute, and no other relations hold.
#[derive(Debug)]
pub struct SimplicialGraph {
    names: Vec<String>,
    index_of: HashMap<String, u32>,
    /// Row-major `order x order` adjacency matrix.
    adj: Vec<bool>,
    /// Sorted neighbor list per vertex.
    links: Vec<Vec<VertexId>>,
    /// `links[v]` with `v` inserted, sorted.
    stars: Vec<Vec<VertexId>>,
    /// Vertices that are neither `v` nor adjacent to `v`, sorted. These are
    /// exactly the vertices whose generators fail to commute with `v`
    /// (besides `v` itself).
    non_stars: Vec<Vec<VertexId>>,
}

impl SimplicialGraph {
    /// Builds a graph from vertex names and edges given as name pairs.
    pub fn build<S: AsRef<str>>(names: &[S], edges: &[(S, S)]) -> Result<Self, GraphError> {
        let mut g = Self::from_names(names.iter().map(|s| s.as_ref().to_owned()).collect(), 0)?;
        for (u, w) in edges {
            let u = g.vertex(u.as_ref())?;
            let w = g.vertex(w.as_ref())?;
            if u == w {
                return Err(GraphError::Parse {
                    line: 0,
                    reason: format!("self-loop at vertex `{}`", g.name(u)),
                });
            }
            g.set_edge(u, w);
        }
        g.finish();
        Ok(g)
    }

    /// Parses the graph text format described in the module docs.
    ///
    /// Errors carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut graph: Option<SimplicialGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vertices:") {
                if graph.is_some() {
                    return Err(GraphError::Parse {
                        line: line_no,
                        reason: "duplicate `vertices:` line".into(),
                    });
                }
                let names: Vec<String> =
                    rest.split_whitespace().map(|s| s.to_owned()).collect();
                graph = Some(Self::from_names(names, line_no)?);
            } else if let Some(rest) = line.strip_prefix("edge:") {
                let g = graph.as_mut().ok_or_else(|| GraphError::Parse {
                    line: line_no,
                    reason: "`edge:` before the `vertices:` line".into(),
                })?;
                let tokens: Vec<&str> = rest.split_whitespace().collect();
                if tokens.len() != 2 {
                    return Err(GraphError::Parse {
                        line: line_no,
                        reason: format!("`edge:` expects two vertex names, got {}", tokens.len()),
                    });
                }
                let u = g.vertex(tokens[0]).map_err(|_| GraphError::Parse {
                    line: line_no,
                    reason: format!("unknown vertex `{}` in edge", tokens[0]),
                })?;
                let w = g.vertex(tokens[1]).map_err(|_| GraphError::Parse {
                    line: line_no,
                    reason: format!("unknown vertex `{}` in edge", tokens[1]),
                })?;
                if u == w {
                    return Err(GraphError::Parse {
                        line: line_no,
                        reason: format!("self-loop at vertex `{}`", tokens[0]),
                    });
                }
                g.set_edge(u, w);
            } else {
                return Err(GraphError::Parse {
                    line: line_no,
                    reason: format!("expected `vertices:` or `edge:`, got `{line}`"),
                });
            }
        }
        let mut g = graph.ok_or(GraphError::Parse {
            line: text.lines().count() + 1,
            reason: "missing `vertices:` line".into(),
        })?;
        g.finish();
        Ok(g)
    }

    fn from_names(names: Vec<String>, line: usize) -> Result<Self, GraphError> {
        let mut index_of = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.contains('^') || name.starts_with('-') {
                return Err(GraphError::Parse {
                    line,
                    reason: format!(
                        "invalid vertex name `{name}` (must not contain `^` or start with `-`)"
                    ),
                });
            }
            if index_of.insert(name.clone(), i as u32).is_some() {
                return Err(GraphError::Parse {
                    line,
                    reason: format!("duplicate vertex name `{name}`"),
                });
            }
        }
        let n = names.len();
        Ok(SimplicialGraph {
            names,
            index_of,
            adj: vec![false; n * n],
            links: Vec::new(),
            stars: Vec::new(),
            non_stars: Vec::new(),
        })
    }

    fn set_edge(&mut self, u: VertexId, w: VertexId) {
        let n = self.order();
        self.adj[u.index() * n + w.index()] = true;
        self.adj[w.index() * n + u.index()] = true;
    }

    /// Populates the derived per-vertex tables; called once construction of
    /// the adjacency relation is complete.
    fn finish(&mut self) {
        let n = self.order();
        for v in 0..n {
            let mut link = Vec::new();
            let mut non_star = Vec::new();
            for u in 0..n {
                if self.adj[v * n + u] {
                    link.push(VertexId(u as u32));
                } else if u != v {
                    non_star.push(VertexId(u as u32));
                }
            }
            let mut star = link.clone();
            star.push(VertexId(v as u32));
            star.sort();
            self.links.push(link);
            self.stars.push(star);
            self.non_stars.push(non_star);
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.names.len()
    }

    /// All vertices in declaration order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.names.len()).map(|i| VertexId(i as u32))
    }

    /// Looks a vertex up by display name.
    pub fn vertex(&self, name: &str) -> Result<VertexId, GraphError> {
        self.index_of
            .get(name)
            .map(|&i| VertexId(i))
            .ok_or_else(|| GraphError::UnknownVertex { name: name.into() })
    }

    /// Display name of `v`.
    ///
    /// Panics if `v` does not belong to this graph; use [`Self::check`] first
    /// when the id comes from an untrusted source.
    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    /// Validates that `v` indexes into this graph.
    pub fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if v.index() < self.order() {
            Ok(())
        } else {
            Err(GraphError::ForeignVertex {
                index: v.index(),
                order: self.order(),
            })
        }
    }

    /// Whether `u` and `w` are adjacent. Never true for `u == w`.
    pub fn adjacent(&self, u: VertexId, w: VertexId) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(w)?;
        Ok(self.adj[u.index() * self.order() + w.index()])
    }

    /// The link `lk(v)`: all vertices adjacent to `v`.
    pub fn link(&self, v: VertexId) -> Result<&[VertexId], GraphError> {
        self.check(v)?;
        Ok(&self.links[v.index()])
    }

    /// The star `st(v) = lk(v) ∪ {v}`.
    pub fn star(&self, v: VertexId) -> Result<&[VertexId], GraphError> {
        self.check(v)?;
        Ok(&self.stars[v.index()])
    }

    /// Vertices outside `st(v)`; their generators do not commute with `v`.
    pub(crate) fn non_star(&self, v: VertexId) -> &[VertexId] {
        &self.non_stars[v.index()]
    }

    pub(crate) fn adjacent_unchecked(&self, u: VertexId, w: VertexId) -> bool {
        self.adj[u.index() * self.order() + w.index()]
    }

    /// The domination relation `v <= w`, i.e. `lk(v) ⊆ st(w)`.
    ///
    /// This is a preorder (reflexive and transitive, not antisymmetric);
    /// `v == w` is allowed and always dominated.
    pub fn is_dominated_by(&self, v: VertexId, w: VertexId) -> Result<bool, GraphError> {
        Ok(self.domination_offender(v, w)?.is_none())
    }

    /// First vertex (by index) in `lk(v)` but not in `st(w)`, if any.
    ///
    /// `None` means `v <= w`; `Some(u)` names a witness against domination,
    /// which is exactly what makes the transvection `v -> vw` illegal.
    pub fn domination_offender(
        &self,
        v: VertexId,
        w: VertexId,
    ) -> Result<Option<VertexId>, GraphError> {
        self.check(v)?;
        self.check(w)?;
        for &u in &self.links[v.index()] {
            if u != w && !self.adjacent_unchecked(u, w) {
                return Ok(Some(u));
            }
        }
        Ok(None)
    }

    /// Vertices adjacent to every other vertex. These generate the center of
    /// the RAAG.
    pub fn central_vertices(&self) -> Vec<VertexId> {
        self.vertices()
            .filter(|&v| self.links[v.index()].len() + 1 == self.order())
            .collect()
    }

    pub(crate) fn is_central_vertex(&self, v: VertexId) -> bool {
        self.links[v.index()].len() + 1 == self.order()
    }

    /// All ordered pairs `(v, w)` with `v` adjacent to `w` and `v <= w`.
    ///
    /// Each such pair yields an adjacent transvection `v -> vw` in the
    /// automorphism group. Pairs are listed row-major in index order.
    pub fn adjacent_transvection_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let mut pairs = Vec::new();
        for v in self.vertices() {
            for w in self.vertices() {
                if v != w
                    && self.adjacent_unchecked(v, w)
                    && self.domination_offender(v, w).unwrap().is_none()
                {
                    pairs.push((v, w));
                }
            }
        }
        pairs
    }

    /// The adjacent transvection pairs `(v, w)` whose dominating vertex `w`
    /// is not adjacent to all vertices.
    ///
    /// These are exactly the pairs for which [`crate::embed::Embedding`] can
    /// be built, embedding the integer Heisenberg group into `Aut(A_Γ)`.
    pub fn heisenberg_witnesses(&self) -> Vec<(VertexId, VertexId)> {
        self.adjacent_transvection_pairs()
            .into_iter()
            .filter(|&(_, w)| !self.is_central_vertex(w))
            .collect()
    }

    /// `vertices: ...` / `edge: ...` text round-trippable through
    /// [`Self::parse`]. Used by reports and certificates.
    pub fn describe(&self) -> GraphDescription<'_> {
        GraphDescription(self)
    }
}

/// Displays the vertex list and edge list of a graph on two lines.
pub struct GraphDescription<'a>(&'a SimplicialGraph);

impl fmt::Display for GraphDescription<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.0;
        write!(f, "  vertices:")?;
        for v in g.vertices() {
            write!(f, " {}", g.name(v))?;
        }
        writeln!(f)?;
        write!(f, "  edges:")?;
        let mut any = false;
        for v in g.vertices() {
            for w in g.vertices() {
                if v < w && g.adjacent_unchecked(v, w) {
                    write!(f, " {}-{}", g.name(v), g.name(w))?;
                    any = true;
                }
            }
        }
        if !any {
            write!(f, " (none)")?;
        }
        Ok(())
    }
}
