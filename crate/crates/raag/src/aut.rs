//! Automorphisms of a RAAG, stored as generator-image tables.
//!
//! A [`RaagAut`] keeps two tables: the image of every generator under the
//! map and under its inverse. [`RaagAut::new`] verifies both tables — images
//! of adjacent generators must commute (so each table extends to an
//! endomorphism) and the tables must undo each other on generators (so both
//! endomorphisms are automorphisms). Everything downstream builds on
//! verified tables, which keeps [`RaagAut::compose`] and friends free of
//! re-checking.
//!
//! The two constructors that matter here are [`RaagAut::inner`]
//! (conjugation by a fixed element) and [`RaagAut::transvection`] (multiply
//! one generator by a dominating one); the latter is exactly legal when
//! `lk(v) ⊆ st(w)`, and the error names the vertex that breaks containment.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{GraphError, SimplicialGraph, VertexId};
use crate::words::{RaagElement, Sign, WordError};

/// Errors from automorphism construction and application.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutError {
    #[error("operands belong to different graphs")]
    GraphMismatch,
    #[error("image table has {got} entries but the graph has {want} vertices")]
    WrongTableSize { got: usize, want: usize },
    #[error("images of adjacent generators {u} and {w} do not commute")]
    NotHomomorphism { u: String, w: String },
    #[error("tables are not mutually inverse at generator {vertex}")]
    NotInverse { vertex: String },
    #[error("transvection {from} -> {from} {to} is not an automorphism: {reason}")]
    IllegalTransvection {
        from: String,
        to: String,
        reason: String,
    },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A verified automorphism of the RAAG of a fixed graph.
#[derive(Clone, Debug)]
pub struct RaagAut {
    graph: Arc<SimplicialGraph>,
    /// `fwd[i]` is the image of generator `i`.
    fwd: Vec<RaagElement>,
    /// `bwd[i]` is the image of generator `i` under the inverse.
    bwd: Vec<RaagElement>,
}

impl PartialEq for RaagAut {
    /// Generator images determine the map, so only `fwd` is compared.
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.graph, &other.graph) && self.fwd == other.fwd
    }
}

impl Eq for RaagAut {}

impl RaagAut {
    /// Builds an automorphism from explicit image tables, verifying that
    /// both extend to endomorphisms and undo each other on generators.
    pub fn new(
        graph: &Arc<SimplicialGraph>,
        fwd: Vec<RaagElement>,
        bwd: Vec<RaagElement>,
    ) -> Result<RaagAut, AutError> {
        for table in [&fwd, &bwd] {
            if table.len() != graph.order() {
                return Err(AutError::WrongTableSize {
                    got: table.len(),
                    want: graph.order(),
                });
            }
            for image in table {
                if !Arc::ptr_eq(image.graph(), graph) {
                    return Err(AutError::GraphMismatch);
                }
            }
            for u in graph.vertices() {
                for w in graph.vertices() {
                    if u < w && graph.adjacent(u, w)? {
                        let uw = table[u.index()].multiply(&table[w.index()])?;
                        let wu = table[w.index()].multiply(&table[u.index()])?;
                        if uw != wu {
                            return Err(AutError::NotHomomorphism {
                                u: graph.name(u).to_owned(),
                                w: graph.name(w).to_owned(),
                            });
                        }
                    }
                }
            }
        }
        for v in graph.vertices() {
            let gen = RaagElement::generator(graph, v)?;
            if apply_table(graph, &bwd, &fwd[v.index()])? != gen
                || apply_table(graph, &fwd, &bwd[v.index()])? != gen
            {
                return Err(AutError::NotInverse {
                    vertex: graph.name(v).to_owned(),
                });
            }
        }
        Ok(RaagAut {
            graph: Arc::clone(graph),
            fwd,
            bwd,
        })
    }

    pub fn identity(graph: &Arc<SimplicialGraph>) -> RaagAut {
        let fwd: Vec<RaagElement> = graph
            .vertices()
            .map(|v| RaagElement::generator(graph, v).expect("own vertex"))
            .collect();
        RaagAut {
            graph: Arc::clone(graph),
            bwd: fwd.clone(),
            fwd,
        }
    }

    /// Conjugation by `g`: every generator maps to `g v g^-1`.
    pub fn inner(g: &RaagElement) -> RaagAut {
        let graph = g.graph();
        let ginv = g.inverse();
        let table = |by: &RaagElement, byinv: &RaagElement| -> Vec<RaagElement> {
            graph
                .vertices()
                .map(|v| {
                    let gen = RaagElement::generator(graph, v).expect("own vertex");
                    by.multiply(&gen)
                        .and_then(|x| x.multiply(byinv))
                        .expect("same graph")
                })
                .collect()
        };
        RaagAut {
            graph: Arc::clone(graph),
            fwd: table(g, &ginv),
            bwd: table(&ginv, g),
        }
    }

    /// The transvection `v -> v w` (all other generators fixed).
    ///
    /// Legal exactly when `lk(v) ⊆ st(w)`; otherwise the error names an
    /// offending neighbor of `v`.
    pub fn transvection(
        graph: &Arc<SimplicialGraph>,
        v: VertexId,
        w: VertexId,
    ) -> Result<RaagAut, AutError> {
        graph.check(v)?;
        graph.check(w)?;
        if v == w {
            return Err(AutError::IllegalTransvection {
                from: graph.name(v).to_owned(),
                to: graph.name(w).to_owned(),
                reason: "a generator cannot be multiplied onto itself".into(),
            });
        }
        if let Some(offender) = graph.domination_offender(v, w)? {
            return Err(AutError::IllegalTransvection {
                from: graph.name(v).to_owned(),
                to: graph.name(w).to_owned(),
                reason: format!(
                    "domination fails: {} in lk({}) but not st({})",
                    graph.name(offender),
                    graph.name(v),
                    graph.name(w)
                ),
            });
        }
        let table = |sign: Sign| -> Result<Vec<RaagElement>, AutError> {
            graph
                .vertices()
                .map(|u| {
                    let gen = RaagElement::generator(graph, u)?;
                    if u == v {
                        let onto = RaagElement::generator(graph, w)?;
                        let onto = match sign {
                            Sign::Plus => onto,
                            Sign::Minus => onto.inverse(),
                        };
                        Ok(gen.multiply(&onto)?)
                    } else {
                        Ok(gen)
                    }
                })
                .collect()
        };
        // The tables are correct by the domination check; `new` re-verifies
        // them anyway since transvections are built rarely.
        RaagAut::new(graph, table(Sign::Plus)?, table(Sign::Minus)?)
    }

    pub fn graph(&self) -> &Arc<SimplicialGraph> {
        &self.graph
    }

    /// Image of each generator, indexed by vertex index.
    pub fn images(&self) -> &[RaagElement] {
        &self.fwd
    }

    /// Image of each generator under the inverse automorphism.
    pub fn inverse_images(&self) -> &[RaagElement] {
        &self.bwd
    }

    /// Applies the automorphism to an element.
    pub fn apply(&self, x: &RaagElement) -> Result<RaagElement, AutError> {
        if !Arc::ptr_eq(self.graph(), x.graph()) {
            return Err(AutError::GraphMismatch);
        }
        apply_table(&self.graph, &self.fwd, x)
    }

    /// The composition `self ∘ other`, i.e. `x -> self(other(x))`.
    ///
    /// Composing verified automorphisms needs no re-verification.
    pub fn compose(&self, other: &RaagAut) -> Result<RaagAut, AutError> {
        if !Arc::ptr_eq(self.graph(), other.graph()) {
            return Err(AutError::GraphMismatch);
        }
        let fwd = other
            .fwd
            .iter()
            .map(|image| apply_table(&self.graph, &self.fwd, image))
            .collect::<Result<Vec<_>, _>>()?;
        let bwd = self
            .bwd
            .iter()
            .map(|image| apply_table(&self.graph, &other.bwd, image))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RaagAut {
            graph: Arc::clone(&self.graph),
            fwd,
            bwd,
        })
    }

    pub fn inverse(&self) -> RaagAut {
        RaagAut {
            graph: Arc::clone(&self.graph),
            fwd: self.bwd.clone(),
            bwd: self.fwd.clone(),
        }
    }

    pub fn pow(&self, k: i64) -> RaagAut {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = RaagAut::identity(&self.graph);
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base).expect("same graph");
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.graph
            .vertices()
            .all(|v| match RaagElement::generator(&self.graph, v) {
                Ok(gen) => self.fwd[v.index()] == gen,
                Err(_) => false,
            })
    }
}

/// One line per generator: `v -> image of v`.
impl fmt::Display for RaagAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.graph.vertices() {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "{} -> {}", self.graph.name(v), self.fwd[v.index()])?;
        }
        Ok(())
    }
}

fn apply_table(
    graph: &Arc<SimplicialGraph>,
    table: &[RaagElement],
    x: &RaagElement,
) -> Result<RaagElement, AutError> {
    let mut acc = RaagElement::identity(graph);
    for l in x.letters() {
        let image = &table[l.vertex.index()];
        acc = match l.sign {
            Sign::Plus => acc.multiply(image)?,
            Sign::Minus => acc.multiply(&image.inverse())?,
        };
    }
    Ok(acc)
}
