//! Arithmetic in right-angled Artin groups (RAAGs) and their automorphism
//! groups, plus the integer Heisenberg group `H3(Z)`.
//!
//! A RAAG is defined by a finite simplicial graph: one generator per vertex,
//! with two generators commuting exactly when their vertices are adjacent.
//! This crate provides:
//!
//! * [`graph`] — the defining graph, link/star queries, the domination
//!   preorder `v <= w` (meaning `lk(v) ⊆ st(w)`), and detection of adjacent
//!   dominated vertex pairs.
//! * [`words`] — group elements in canonical normal form (the shortlex-least
//!   geodesic), together with a brute-force rewriting oracle usable as an
//!   independent equality check.
//! * [`aut`] — automorphisms given by generator images with verified
//!   inverses: conjugations, transvections, composition, powers.
//! * [`heisenberg`] — `H3(Z)` in `A^m B^n C^p` coordinates with
//!   overflow-checked arithmetic.
//! * [`embed`] — construction of the homomorphism `H3(Z) -> Aut(A_Γ)`
//!   attached to a witness pair, bounded verification of its defining
//!   relations and injectivity, and plain-text certificates.

pub mod aut;
pub mod embed;
pub mod graph;
pub mod heisenberg;
pub mod words;

pub use aut::{AutError, RaagAut};
pub use embed::{
    analyze, AnalysisReport, CertificateBounds, CheckError, Classification, Embedding,
    EmbeddingCertificate, HypothesisError,
};
pub use graph::{GraphError, SimplicialGraph, VertexId};
pub use heisenberg::{HeisElement, HeisError};
pub use words::{oracle_equal, Letter, RaagElement, Sign, Word, WordError};
