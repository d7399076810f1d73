//! Embedding the discrete Heisenberg group into the automorphism group of a
//! RAAG, and the machine-checked certificate that the embedding works.
//!
//! The construction needs a *witness pair* `(a, b)`: two adjacent vertices
//! with `lk(a) ⊆ st(b)` and `st(b)` a proper subset of the vertex set. Given
//! one, three automorphisms generate a Heisenberg copy:
//!
//! * `c(a)` — conjugation by `a` (the image of `A`),
//! * `t(a,b)` — the transvection `a -> a b` (the image of `B`),
//! * `c(b)` — conjugation by `b` (the image of `C`).
//!
//! Adjacency makes `c(a)` and `c(b)` commute and makes `t(a,b)` commute
//! with `c(b)`; domination makes the transvection legal; and conjugating
//! `c(a)` by `t(a,b)` twists it by exactly one `c(b)`. Properness of
//! `st(b)` keeps `c(b)` nontrivial, which is what injectivity hangs on.
//!
//! [`Embedding::certify`] packages every check into an
//! [`EmbeddingCertificate`] whose rendering lists the generator-image tables
//! and exhaustive coordinate sweeps, so a skeptical reader can re-verify
//! each line by hand. [`analyze`] classifies a graph by whether any witness
//! pair exists.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use thiserror::Error;

use crate::aut::{AutError, RaagAut};
use crate::graph::{GraphError, SimplicialGraph, VertexId};
use crate::heisenberg::{HeisElement, HeisError};
use crate::words::{RaagElement, WordError};

/// Why a vertex pair fails the witness hypothesis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypothesisError {
    #[error("the pair must consist of two distinct vertices, got ({v}, {v})")]
    SamePair { v: String },
    #[error("vertices {v} and {w} are not adjacent")]
    NotAdjacent { v: String, w: String },
    #[error("domination fails: {offender} in lk({v}) but not st({w})")]
    NotDominated {
        v: String,
        w: String,
        offender: String,
    },
    #[error("st({w}) contains every vertex, so conjugation by {w} is the identity")]
    DominatorCentral { w: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors surfaced while running verification sweeps. For a hypothesis-valid
/// embedding and sane bounds none of these occur; they exist so oversized
/// bounds fail loudly instead of panicking.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Heis(#[from] HeisError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A validated witness pair together with the three automorphisms it
/// produces.
#[derive(Clone, Debug)]
pub struct Embedding {
    graph: Arc<SimplicialGraph>,
    a: VertexId,
    b: VertexId,
    c_a: RaagAut,
    t: RaagAut,
    c_b: RaagAut,
}

impl Embedding {
    /// Validates the witness hypothesis for `(a, b)` and builds the three
    /// generating automorphisms.
    pub fn build(
        graph: &Arc<SimplicialGraph>,
        a: VertexId,
        b: VertexId,
    ) -> Result<Embedding, HypothesisError> {
        graph.check(a)?;
        graph.check(b)?;
        if a == b {
            return Err(HypothesisError::SamePair {
                v: graph.name(a).to_owned(),
            });
        }
        if !graph.adjacent(a, b)? {
            return Err(HypothesisError::NotAdjacent {
                v: graph.name(a).to_owned(),
                w: graph.name(b).to_owned(),
            });
        }
        if let Some(offender) = graph.domination_offender(a, b)? {
            return Err(HypothesisError::NotDominated {
                v: graph.name(a).to_owned(),
                w: graph.name(b).to_owned(),
                offender: graph.name(offender).to_owned(),
            });
        }
        if graph.star(b)?.len() == graph.order() {
            return Err(HypothesisError::DominatorCentral {
                w: graph.name(b).to_owned(),
            });
        }
        let gen = |v| RaagElement::generator(graph, v).expect("validated vertex");
        Ok(Embedding {
            c_a: RaagAut::inner(&gen(a)),
            c_b: RaagAut::inner(&gen(b)),
            t: RaagAut::transvection(graph, a, b).expect("domination validated"),
            graph: Arc::clone(graph),
            a,
            b,
        })
    }

    pub fn graph(&self) -> &Arc<SimplicialGraph> {
        &self.graph
    }

    /// The witness pair `(a, b)`.
    pub fn witness(&self) -> (VertexId, VertexId) {
        (self.a, self.b)
    }

    fn a_name(&self) -> &str {
        self.graph.name(self.a)
    }

    fn b_name(&self) -> &str {
        self.graph.name(self.b)
    }

    /// Conjugation by `a`: the image of the Heisenberg generator `A`.
    pub fn c_a(&self) -> &RaagAut {
        &self.c_a
    }

    /// The transvection `a -> a b`: the image of `B`.
    pub fn t(&self) -> &RaagAut {
        &self.t
    }

    /// Conjugation by `b`: the image of the central generator `C`.
    pub fn c_b(&self) -> &RaagAut {
        &self.c_b
    }

    /// The embedding itself: `A^m B^n C^p -> c(a)^m ∘ t(a,b)^n ∘ c(b)^p`.
    pub fn iota(&self, h: &HeisElement) -> Result<RaagAut, AutError> {
        self.c_a
            .pow(h.m)
            .compose(&self.t.pow(h.n))?
            .compose(&self.c_b.pow(h.p))
    }

    fn iota_memo(
        &self,
        memo: &mut HashMap<(i64, i64, i64), RaagAut>,
        h: &HeisElement,
    ) -> Result<RaagAut, AutError> {
        let key = (h.m, h.n, h.p);
        if let Some(g) = memo.get(&key) {
            return Ok(g.clone());
        }
        let g = self.iota(h)?;
        memo.insert(key, g.clone());
        Ok(g)
    }

    /// The three defining identities of the generated subgroup.
    pub fn check_relations(&self) -> Result<RelationChecks, AutError> {
        check_relation_triple(&self.c_a, &self.t, &self.c_b, self.a_name(), self.b_name())
    }

    /// Checks `iota(x · y) = iota(x) ∘ iota(y)` for every pair of coordinate
    /// triples in the box `|m|, |n|, |p| <= range`, plus
    /// `iota(x^-1) = iota(x)^-1` across the box.
    pub fn verify_homomorphism(&self, range: i64) -> Result<HomomorphismCheck, CheckError> {
        let grid = coordinate_box(range);
        let mut memo = HashMap::new();
        let mut failures = Vec::new();
        let mut pairs_checked = 0usize;
        for x in &grid {
            for y in &grid {
                let product = x.multiply(y)?;
                let gx = self.iota_memo(&mut memo, x)?;
                let gy = self.iota_memo(&mut memo, y)?;
                let gproduct = self.iota_memo(&mut memo, &product)?;
                pairs_checked += 1;
                if gx.compose(&gy)? != gproduct {
                    failures.push(format!("iota{x} ∘ iota{y} differs from iota{product}"));
                }
            }
        }
        let mut inverses_checked = 0usize;
        for x in &grid {
            let gx = self.iota_memo(&mut memo, x)?;
            let ginv = self.iota_memo(&mut memo, &x.inverse()?)?;
            inverses_checked += 1;
            if gx.inverse() != ginv {
                failures.push(format!("iota({x})^-1 differs from iota of the inverse"));
            }
        }
        Ok(HomomorphismCheck {
            range,
            pairs_checked,
            inverses_checked,
            failures,
        })
    }

    /// Checks that every nonzero coordinate triple in the box
    /// `|m|, |n|, |p| <= bound` maps to a nontrivial automorphism, and pins
    /// the image against two independently derived closed forms:
    ///
    /// * `iota(m, n, p)(a) = a b^n` for every triple, and
    /// * for `n = 0`, `iota(m, 0, p)` is conjugation by `a^m b^p`, which is
    ///   never central.
    ///
    /// Those two facts are what make the kernel trivial for *all* triples:
    /// a kernel element first forces `n = 0`, then a central `a^m b^p`.
    pub fn verify_injectivity(&self, bound: i64) -> Result<InjectivityCheck, CheckError> {
        let gen_a = RaagElement::generator(&self.graph, self.a).expect("validated vertex");
        let gen_b = RaagElement::generator(&self.graph, self.b).expect("validated vertex");
        let mut triples_checked = 0usize;
        let mut nontrivial = 0usize;
        let mut formula_agreed = 0usize;
        let mut failures = Vec::new();
        for h in coordinate_box(bound) {
            if h.is_identity() {
                continue;
            }
            triples_checked += 1;
            let g = self.iota(&h)?;
            if g.is_identity() {
                failures.push(format!("iota{h} is the identity automorphism"));
            } else {
                nontrivial += 1;
            }
            let actual = g.apply(&gen_a)?;
            let expected = gen_a.multiply(&gen_b.pow(h.n))?;
            if actual == expected {
                formula_agreed += 1;
            } else {
                failures.push(format!(
                    "iota{h}({}) = {actual}, but the closed form gives {expected}",
                    self.a_name()
                ));
            }
            if h.n == 0 {
                let by = gen_a.pow(h.m).multiply(&gen_b.pow(h.p))?;
                if g != RaagAut::inner(&by) {
                    failures.push(format!(
                        "iota{h} differs from conjugation by {by}"
                    ));
                }
                if by.is_central() {
                    failures.push(format!(
                        "{by} is central, so iota{h} collapses"
                    ));
                }
            }
        }
        Ok(InjectivityCheck {
            bound,
            triples_checked,
            nontrivial,
            formula_agreed,
            failures,
        })
    }

    /// Checks the conjugation identity
    /// `t(a,b)^n ∘ c(a)^m ∘ t(a,b)^-n = c(a)^m ∘ c(b)^(m·n)`
    /// for all `1 <= m, n <= bound`.
    ///
    /// This is the engine behind the main relation: conjugating the `A`
    /// image by the `B` image deposits one `C` image per crossing, so `m·n`
    /// of them in total.
    pub fn verify_eq1(&self, bound: i64) -> Result<ConjugationPowerCheck, CheckError> {
        let mut cases_checked = 0usize;
        let mut failures = Vec::new();
        for m in 1..=bound {
            for n in 1..=bound {
                cases_checked += 1;
                let lhs = self
                    .t
                    .pow(n)
                    .compose(&self.c_a.pow(m))?
                    .compose(&self.t.pow(-n))?;
                let rhs = self.c_a.pow(m).compose(&self.c_b.pow(m.checked_mul(n).ok_or(HeisError::Overflow)?))?;
                if lhs != rhs {
                    failures.push(format!("m = {m}, n = {n}: the two sides differ"));
                }
            }
        }
        Ok(ConjugationPowerCheck {
            bound,
            cases_checked,
            failures,
        })
    }

    /// Checks that `k`-th powers of the three generators satisfy the scaled
    /// Heisenberg relations for `1 <= k <= bound`:
    /// `[t(a,b)^k, c(a)^k] = c(b)^(k²)` while `c(b)^k` commutes with both.
    ///
    /// So the subgroup generated by the `k`-th powers is again a Heisenberg
    /// copy, just with a deeper center.
    pub fn verify_power_subgroup(&self, bound: i64) -> Result<PowerSubgroupCheck, CheckError> {
        let mut cases_checked = 0usize;
        let mut failures = Vec::new();
        for k in 1..=bound {
            cases_checked += 1;
            let ak = self.c_a.pow(k);
            let bk = self.t.pow(k);
            let ck = self.c_b.pow(k);
            let commutator = bk
                .compose(&ak)?
                .compose(&bk.inverse())?
                .compose(&ak.inverse())?;
            let ksquared = k.checked_mul(k).ok_or(HeisError::Overflow)?;
            if commutator != self.c_b.pow(ksquared) {
                failures.push(format!(
                    "k = {k}: [t^k, c({})^k] is not c({})^(k^2)",
                    self.a_name(),
                    self.b_name()
                ));
            }
            if ak.compose(&ck)? != ck.compose(&ak)? {
                failures.push(format!(
                    "k = {k}: c({})^k does not commute with c({})^k",
                    self.a_name(),
                    self.b_name()
                ));
            }
            if bk.compose(&ck)? != ck.compose(&bk)? {
                failures.push(format!(
                    "k = {k}: t^k does not commute with c({})^k",
                    self.b_name()
                ));
            }
        }
        Ok(PowerSubgroupCheck {
            bound,
            cases_checked,
            failures,
        })
    }

    /// Runs every certificate check at the given bounds.
    pub fn certify(&self, bounds: CertificateBounds) -> Result<EmbeddingCertificate, CheckError> {
        Ok(EmbeddingCertificate {
            graph: Arc::clone(&self.graph),
            a: self.a,
            b: self.b,
            relations: self.check_relations()?,
            injectivity: self.verify_injectivity(bounds.injectivity)?,
            conjugation_powers: self.verify_eq1(bounds.eq1)?,
            power_subgroup: self.verify_power_subgroup(bounds.power)?,
        })
    }
}

/// All triples `(m, n, p)` with every coordinate in `[-range, range]`.
fn coordinate_box(range: i64) -> Vec<HeisElement> {
    let mut out = Vec::new();
    for m in -range..=range {
        for n in -range..=range {
            for p in -range..=range {
                out.push(HeisElement::new(m, n, p));
            }
        }
    }
    out
}

/// One verified identity between two compositions.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub label: String,
    pub lhs: RaagAut,
    pub rhs: RaagAut,
    pub holds: bool,
}

/// The three defining identities, in presentation order.
#[derive(Clone, Debug)]
pub struct RelationChecks {
    pub checks: Vec<RelationCheck>,
}

impl RelationChecks {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Computes the three Heisenberg identities for an arbitrary automorphism
/// triple, without assuming any hypothesis. This is deliberately usable
/// with *wrong* triples, so tests can confirm the checks catch corruption.
pub fn check_relation_triple(
    c_a: &RaagAut,
    t: &RaagAut,
    c_b: &RaagAut,
    a_name: &str,
    b_name: &str,
) -> Result<RelationChecks, AutError> {
    let ca = format!("c({a_name})");
    let cb = format!("c({b_name})");
    let tn = format!("t({a_name},{b_name})");
    let mut checks = Vec::new();
    let mut push = |label: String, lhs: RaagAut, rhs: RaagAut| {
        let holds = lhs == rhs;
        checks.push(RelationCheck {
            label,
            lhs,
            rhs,
            holds,
        });
    };
    push(
        format!("{ca} * {cb} = {cb} * {ca}"),
        c_a.compose(c_b)?,
        c_b.compose(c_a)?,
    );
    push(
        format!("{tn} * {cb} = {cb} * {tn}"),
        t.compose(c_b)?,
        c_b.compose(t)?,
    );
    push(
        format!("{tn} * {ca} * {tn}^-1 = {cb} * {ca}"),
        t.compose(c_a)?.compose(&t.inverse())?,
        c_b.compose(c_a)?,
    );
    Ok(RelationChecks { checks })
}

/// Result of [`Embedding::verify_homomorphism`].
#[derive(Clone, Debug)]
pub struct HomomorphismCheck {
    pub range: i64,
    pub pairs_checked: usize,
    pub inverses_checked: usize,
    pub failures: Vec<String>,
}

impl HomomorphismCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Result of [`Embedding::verify_injectivity`].
#[derive(Clone, Debug)]
pub struct InjectivityCheck {
    pub bound: i64,
    pub triples_checked: usize,
    pub nontrivial: usize,
    pub formula_agreed: usize,
    pub failures: Vec<String>,
}

impl InjectivityCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
            && self.nontrivial == self.triples_checked
            && self.formula_agreed == self.triples_checked
    }
}

/// Result of [`Embedding::verify_eq1`].
#[derive(Clone, Debug)]
pub struct ConjugationPowerCheck {
    pub bound: i64,
    pub cases_checked: usize,
    pub failures: Vec<String>,
}

impl ConjugationPowerCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Result of [`Embedding::verify_power_subgroup`].
#[derive(Clone, Debug)]
pub struct PowerSubgroupCheck {
    pub bound: i64,
    pub cases_checked: usize,
    pub failures: Vec<String>,
}

impl PowerSubgroupCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verification bounds for [`Embedding::certify`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CertificateBounds {
    /// Half-width of the coordinate box swept for injectivity.
    pub injectivity: i64,
    /// Largest exponents in the conjugation-power identity.
    pub eq1: i64,
    /// Largest power `k` for the power-subgroup relations.
    pub power: i64,
}

impl Default for CertificateBounds {
    fn default() -> Self {
        CertificateBounds {
            injectivity: 3,
            eq1: 4,
            power: 3,
        }
    }
}

/// Everything [`Embedding::certify`] established, renderable as a plain-text
/// certificate (or refutation, should any check fail).
#[derive(Clone, Debug)]
pub struct EmbeddingCertificate {
    pub graph: Arc<SimplicialGraph>,
    pub a: VertexId,
    pub b: VertexId,
    pub relations: RelationChecks,
    pub injectivity: InjectivityCheck,
    pub conjugation_powers: ConjugationPowerCheck,
    pub power_subgroup: PowerSubgroupCheck,
}

impl EmbeddingCertificate {
    pub fn passed(&self) -> bool {
        self.relations.all_hold()
            && self.injectivity.ok()
            && self.conjugation_powers.ok()
            && self.power_subgroup.ok()
    }
}

fn vertex_set(graph: &SimplicialGraph, vs: &[VertexId]) -> String {
    let names: Vec<&str> = vs.iter().map(|&v| graph.name(v)).collect();
    format!("{{{}}}", names.join(", "))
}

fn indented_lines(out: &mut String, text: &str, indent: &str) {
    for line in text.lines() {
        out.push_str(indent);
        out.push_str(line);
        out.push('\n');
    }
}

fn failure_lines(out: &mut String, failures: &[String]) {
    if !failures.is_empty() {
        out.push_str("  failures:\n");
        for line in failures {
            let _ = writeln!(out, "    {line}");
        }
    }
}

impl fmt::Display for EmbeddingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.graph;
        let a = g.name(self.a);
        let b = g.name(self.b);
        let mut out = String::new();

        if self.passed() {
            let _ = writeln!(out, "CERTIFICATE: Heisenberg embedding via witness pair ({a}, {b})");
        } else {
            let _ = writeln!(out, "REFUTATION: Heisenberg embedding checks failed for pair ({a}, {b})");
        }
        let _ = writeln!(out, "graph:");
        let _ = writeln!(out, "{}", g.describe());
        out.push('\n');

        let _ = writeln!(out, "WITNESS");
        let _ = writeln!(out, "  pair ({a}, {b}) is adjacent: yes");
        let _ = writeln!(
            out,
            "  lk({a}) = {} is contained in st({b}) = {}: yes",
            vertex_set(g, g.link(self.a).map_err(|_| fmt::Error)?),
            vertex_set(g, g.star(self.b).map_err(|_| fmt::Error)?),
        );
        let outside = g
            .vertices()
            .find(|&v| v != self.b && !g.adjacent(v, self.b).unwrap_or(false));
        match outside {
            Some(v) => {
                let _ = writeln!(out, "  st({b}) is proper: yes ({} lies outside)", g.name(v));
            }
            None => {
                let _ = writeln!(out, "  st({b}) is proper: NO");
            }
        }
        let _ = writeln!(out, "  images: A -> c({a}), B -> t({a},{b}), C -> c({b})");
        out.push('\n');

        let _ = writeln!(out, "RELATIONS");
        for (i, check) in self.relations.checks.iter().enumerate() {
            let verdict = if check.holds { "ok" } else { "FAILED" };
            let _ = writeln!(out, "  [{}] {}: {verdict}", i + 1, check.label);
            if check.holds {
                out.push_str("      both sides:\n");
                indented_lines(&mut out, &check.lhs.to_string(), "        ");
            } else {
                out.push_str("      lhs:\n");
                indented_lines(&mut out, &check.lhs.to_string(), "        ");
                out.push_str("      rhs:\n");
                indented_lines(&mut out, &check.rhs.to_string(), "        ");
            }
        }
        out.push('\n');

        let inj = &self.injectivity;
        let _ = writeln!(out, "INJECTIVITY");
        let _ = writeln!(
            out,
            "  bound {}: {}/{} nonzero coordinate triples map to nontrivial automorphisms",
            inj.bound, inj.nontrivial, inj.triples_checked
        );
        let _ = writeln!(
            out,
            "  closed form iota(m, n, p)({a}) = {a} {b}^n agreed in {}/{} cases",
            inj.formula_agreed, inj.triples_checked
        );
        failure_lines(&mut out, &inj.failures);
        out.push('\n');

        let eq1 = &self.conjugation_powers;
        let _ = writeln!(out, "EQ1");
        let _ = writeln!(
            out,
            "  bound {}: t({a},{b})^n * c({a})^m * t({a},{b})^-n = c({a})^m * c({b})^(m n) \
             for 1 <= m, n <= {} ({}/{} ok)",
            eq1.bound,
            eq1.bound,
            eq1.cases_checked - eq1.failures.len(),
            eq1.cases_checked
        );
        failure_lines(&mut out, &eq1.failures);
        out.push('\n');

        let pow = &self.power_subgroup;
        let _ = writeln!(out, "POWER_SUBGROUP");
        let _ = writeln!(
            out,
            "  bound {}: [t({a},{b})^k, c({a})^k] = c({b})^(k^2) and c({b})^k commutes \
             with both ({}/{} ok)",
            pow.bound,
            pow.cases_checked - pow.failures.len(),
            pow.cases_checked
        );
        failure_lines(&mut out, &pow.failures);
        out.push('\n');

        let _ = write!(
            out,
            "RESULT: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        );
        f.write_str(&out)
    }
}

/// Where a graph falls with respect to the witness hypothesis.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Some adjacent dominated pair has a non-central dominating vertex.
    HeisenbergWitnessFound,
    /// No adjacent pair admits a transvection at all.
    NoAdjacentTransvection,
    /// Adjacent transvections exist, but every dominating vertex is central.
    AdjacentTransvectionsButNoWitness,
}

impl Classification {
    pub fn tag(self) -> &'static str {
        match self {
            Classification::HeisenbergWitnessFound => "heisenberg-witness-found",
            Classification::NoAdjacentTransvection => "no-adjacent-transvection",
            Classification::AdjacentTransvectionsButNoWitness => {
                "adjacent-transvections-but-no-witness"
            }
        }
    }
}

/// Summary of the witness-hypothesis structure of one graph.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub graph: Arc<SimplicialGraph>,
    pub classification: Classification,
    pub adjacent_transvection_pairs: Vec<(VertexId, VertexId)>,
    pub witnesses: Vec<(VertexId, VertexId)>,
    pub central_vertices: Vec<VertexId>,
}

impl AnalysisReport {
    pub fn has_witness(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

/// Classifies a graph by scanning every ordered vertex pair.
pub fn analyze(graph: &Arc<SimplicialGraph>) -> AnalysisReport {
    let pairs = graph.adjacent_transvection_pairs();
    let witnesses = graph.heisenberg_witnesses();
    let classification = if !witnesses.is_empty() {
        Classification::HeisenbergWitnessFound
    } else if pairs.is_empty() {
        Classification::NoAdjacentTransvection
    } else {
        Classification::AdjacentTransvectionsButNoWitness
    };
    AnalysisReport {
        graph: Arc::clone(graph),
        classification,
        adjacent_transvection_pairs: pairs,
        witnesses,
        central_vertices: graph.central_vertices(),
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.graph;
        let names = |vs: &[VertexId]| -> String {
            if vs.is_empty() {
                "(none)".into()
            } else {
                vs.iter()
                    .map(|&v| g.name(v).to_owned())
                    .collect::<Vec<_>>()
                    .join(", ")
            }
        };
        let pairs = |ps: &[(VertexId, VertexId)]| -> String {
            if ps.is_empty() {
                "(none)".into()
            } else {
                ps.iter()
                    .map(|&(v, w)| format!("({}, {})", g.name(v), g.name(w)))
                    .collect::<Vec<_>>()
                    .join(", ")
            }
        };
        writeln!(f, "graph:")?;
        writeln!(f, "{}", g.describe())?;
        writeln!(f, "central vertices: {}", names(&self.central_vertices))?;
        writeln!(
            f,
            "adjacent transvection pairs: {}",
            pairs(&self.adjacent_transvection_pairs)
        )?;
        writeln!(f, "heisenberg witness pairs: {}", pairs(&self.witnesses))?;
        write!(f, "classification: {}", self.classification.tag())
    }
}
