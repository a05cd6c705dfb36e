//! The partial order of knot-group surjections: candidate enumeration for
//! 2-bridge pairs, minimality classification, curated literature relations,
//! and an exportable atlas over both knot families.
//!
//! For 2-bridge knots the necessary conditions are exact filters: the
//! target determinant must properly divide the source determinant, and the
//! target Alexander polynomial must divide the source's (up to units).
//! Pairs passing every filter remain *candidates* — the filters cannot
//! prove a surjection exists — unless the pair is settled exactly (both
//! knots are torus knots) or attested by curated literature. Torus pairs
//! are decided exactly by [`torus_ge`].

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::knots::{KnotId, TorusKnot, TwoBridgeKnot};
use crate::polyring::IntPoly;
use crate::riley::{parabolic_class_count, riley_divides_advisory, RileyAdvisory};
use crate::torus_epi::{build_epimorphism, torus_ge, torus_targets, EpiCertificate};

/// Errors from relation-file parsing and atlas construction.
#[derive(Debug, Error)]
pub enum OrderError {
    /// A known-relations line did not parse.
    #[error("known-relations parse error at line {line}: {message}")]
    ParseError {
        /// 1-based line number.
        line: usize,
        /// What went wrong.
        message: String,
    },
    /// The relations file could not be read.
    #[error("cannot read {path}: {message}")]
    Io {
        /// The offending path.
        path: String,
        /// The underlying I/O error.
        message: String,
    },
    /// Atlas bounds below the minimum sensible values.
    #[error("invalid atlas bounds: max determinant {max_det} (need ≥ 3), max torus product {max_torus} (need ≥ 6)")]
    InvalidBounds {
        /// Requested determinant bound.
        max_det: u64,
        /// Requested torus parameter-product bound.
        max_torus: u64,
    },
}

/// Outcome of one exact (necessary-condition) filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterState {
    /// The necessary condition holds.
    Pass,
    /// The necessary condition fails; the pair is refuted.
    Fail,
}

/// Outcome of the advisory parabolic-polynomial filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RileyFilterState {
    /// The advisory divisibility holds.
    Consistent,
    /// The advisory divisibility fails (never treated as a refutation).
    Inconsistent,
    /// The advisory comparison was not run.
    Skipped,
}

impl From<RileyAdvisory> for RileyFilterState {
    fn from(a: RileyAdvisory) -> Self {
        match a {
            RileyAdvisory::Consistent => RileyFilterState::Consistent,
            RileyAdvisory::Inconsistent => RileyFilterState::Inconsistent,
        }
    }
}

/// The filter outcomes recorded for a source/target pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterOutcomes {
    /// Determinant divisibility (target properly divides source).
    pub determinant: FilterState,
    /// Alexander-polynomial divisibility up to units.
    pub alexander: FilterState,
    /// Advisory parabolic-polynomial divisibility.
    pub riley_advisory: RileyFilterState,
}

/// Classification of a source/target pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeStatus {
    /// A necessary condition failed: no surjection exists.
    Refuted,
    /// All necessary conditions hold but no proof is available.
    Candidate,
    /// Settled exactly (torus pairs, via the divisor criterion).
    Proven,
    /// Attested by the curated literature file.
    KnownLiterature,
}

impl EdgeStatus {
    /// Stable lowercase name.
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeStatus::Refuted => "refuted",
            EdgeStatus::Candidate => "candidate",
            EdgeStatus::Proven => "proven",
            EdgeStatus::KnownLiterature => "known_literature",
        }
    }
}

/// One evaluated source/target pair: the filter outcomes and the resulting
/// status.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    /// The larger knot (surjection source).
    pub source: KnotId,
    /// The smaller knot (surjection target).
    pub target: KnotId,
    /// Necessary-condition outcomes.
    pub filters: FilterOutcomes,
    /// Resulting classification.
    pub status: EdgeStatus,
}

/// All canonical 2-bridge knots with determinant exactly `p`, ascending in `q`.
pub(crate) fn canonical_knots_with_det(p: u64) -> Vec<TwoBridgeKnot> {
    (1..p as i64)
        .step_by(2)
        .filter(|q| num_integer::gcd(*q, p as i64) == 1)
        .filter_map(|q| TwoBridgeKnot::new(p as i64, q).ok())
        .filter(|k| k.is_canonical())
        .collect()
}

/// Evaluates the pair filters for distinct 2-bridge knots (both canonical).
fn evaluate_tb_pair(
    source: &TwoBridgeKnot,
    target: &TwoBridgeKnot,
    source_alexander: &IntPoly,
    with_riley: bool,
) -> CandidateReport {
    let determinant = if target.p() < source.p() && source.p().is_multiple_of(target.p()) {
        FilterState::Pass
    } else {
        FilterState::Fail
    };
    // Divisibility up to units suffices for "properly divides": the two
    // determinants differ, so the quotient can never be a unit.
    let alexander = if target.alexander().divides_up_to_units(source_alexander) {
        FilterState::Pass
    } else {
        FilterState::Fail
    };
    let riley_advisory = if with_riley {
        riley_divides_advisory(source, target).into()
    } else {
        RileyFilterState::Skipped
    };
    let refuted = determinant == FilterState::Fail || alexander == FilterState::Fail;
    let status = if refuted {
        EdgeStatus::Refuted
    } else if source.as_torus().is_some() && target.as_torus().is_some() {
        // both knots are (2, n) torus knots, so the divisor criterion
        // settles the pair exactly — and it holds, since target.p divides
        // source.p
        debug_assert!(torus_ge(
            &source.as_torus().expect("checked"),
            &target.as_torus().expect("checked")
        ));
        EdgeStatus::Proven
    } else {
        EdgeStatus::Candidate
    };
    CandidateReport {
        source: KnotId::TwoBridge(source.canonical()),
        target: KnotId::TwoBridge(target.canonical()),
        filters: FilterOutcomes {
            determinant,
            alexander,
            riley_advisory,
        },
        status,
    }
}

/// Evaluates one specific 2-bridge pair (canonicalizing both sides).
pub fn tb_pair_report(
    source: &TwoBridgeKnot,
    target: &TwoBridgeKnot,
    with_riley: bool,
) -> CandidateReport {
    let source = source.canonical();
    let target = target.canonical();
    evaluate_tb_pair(&source, &target, &source.alexander(), with_riley)
}

/// Enumerates every 2-bridge knot that could receive a surjection from `k`
/// and records the filter outcomes for each. The target determinant must be
/// a proper divisor of `k`'s, so the enumeration is finite: each proper
/// divisor `p2 ≥ 3` contributes at most `(p2 − 1)/2` canonical knots, and
/// the total is asserted to stay below `p/2 · d(p)`.
pub fn tb_candidates(k: &TwoBridgeKnot, with_riley: bool) -> Vec<CandidateReport> {
    let k = k.canonical();
    let p = k.p();
    let delta = k.alexander();
    let mut reports = Vec::new();
    for p2 in (3..p).step_by(2).filter(|d| p.is_multiple_of(*d)) {
        let family = canonical_knots_with_det(p2);
        assert!(
            (family.len() as u64) <= (p2 - 1) / 2,
            "divisor {p2} contributed too many canonical knots"
        );
        for target in family {
            reports.push(evaluate_tb_pair(&k, &target, &delta, with_riley));
        }
    }
    let divisor_count = (1..=p).filter(|d| p.is_multiple_of(*d)).count() as u64;
    assert!(
        (reports.len() as u64) < (p / 2) * divisor_count + 1,
        "candidate enumeration exceeded the finiteness bound"
    );
    reports
}

/// One curated literature-attested relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownRelation {
    /// Surjection source.
    pub source: KnotId,
    /// Surjection target.
    pub target: KnotId,
    /// Where the relation is established.
    pub citation: String,
}

/// A curated set of literature-attested relations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownRelations {
    relations: Vec<KnownRelation>,
}

impl KnownRelations {
    /// The empty relation set.
    pub fn empty() -> Self {
        KnownRelations::default()
    }

    /// The relation set bundled with the library.
    pub fn shipped() -> Self {
        KnownRelations::parse(include_str!("../data/known_relations.txt"))
            .expect("the bundled relations file parses")
    }

    /// Parses the one-relation-per-line format
    /// `tb:175,81 >=p tb:7,3 # citation`; blank lines and `#` comment lines
    /// are ignored. Knot literals are canonicalized on parse.
    pub fn parse(text: &str) -> Result<Self, OrderError> {
        let mut relations = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let (body, citation) = match content.split_once('#') {
                Some((body, cite)) => (body.trim(), cite.trim().to_string()),
                None => (content, String::new()),
            };
            let (src, dst) = body.split_once(">=p").ok_or_else(|| OrderError::ParseError {
                line,
                message: format!("expected `<source> >=p <target>`, got {body:?}"),
            })?;
            let parse_knot = |s: &str| {
                s.trim().parse::<KnotId>().map_err(|e| OrderError::ParseError {
                    line,
                    message: e.to_string(),
                })
            };
            relations.push(KnownRelation {
                source: parse_knot(src)?,
                target: parse_knot(dst)?,
                citation,
            });
        }
        Ok(KnownRelations { relations })
    }

    /// Loads and parses a relations file.
    pub fn load(path: &Path) -> Result<Self, OrderError> {
        let text = std::fs::read_to_string(path).map_err(|e| OrderError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        KnownRelations::parse(&text)
    }

    /// The parsed relations, in file order.
    pub fn relations(&self) -> &[KnownRelation] {
        &self.relations
    }

    /// Looks up a relation for the pair, resolving the torus/2-bridge
    /// overlap.
    pub fn find(&self, source: &KnotId, target: &KnotId) -> Option<&KnownRelation> {
        self.relations
            .iter()
            .find(|r| r.source.same_knot(source) && r.target.same_knot(target))
    }
}

/// The three-valued minimality classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every surjection onto another knot group is excluded.
    PMinimal,
    /// A surjection onto a smaller knot's group exists (witness recorded).
    NotPMinimal,
    /// Candidates survive the filters but no proof either way is known.
    Undetermined,
}

impl Verdict {
    /// Stable lowercase name.
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::PMinimal => "p_minimal",
            Verdict::NotPMinimal => "not_p_minimal",
            Verdict::Undetermined => "undetermined",
        }
    }
}

/// The named rule that produced a verdict. `IrreducibleDeltaFastpath` and
/// `TwistKnot` are part of the reporting vocabulary but the classifier
/// never emits them: the genus-one rule subsumes twist knots, and the
/// restricted divisibility check plays the role of irreducibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictReason {
    /// Prime determinant excludes every proper divisor family.
    PrimeDeterminant,
    /// Alexander polynomial irreducibility (reporting vocabulary only).
    IrreducibleDeltaFastpath,
    /// Quadratic Alexander polynomial (genus one).
    GenusOne,
    /// Twist-knot rule (reporting vocabulary only; subsumed by genus one).
    TwistKnot,
    /// Every enumerated candidate was refuted by an exact filter.
    ExhaustiveElimination,
    /// Both torus parameters are prime.
    TorusPrimeParams,
    /// A concrete smaller target is proven or literature-attested.
    WitnessTarget,
    /// Unrefuted candidates remain and nothing proves them.
    SurvivingCandidates,
}

impl VerdictReason {
    /// Stable lowercase name.
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictReason::PrimeDeterminant => "prime_determinant",
            VerdictReason::IrreducibleDeltaFastpath => "irreducible_delta_fastpath",
            VerdictReason::GenusOne => "genus_one",
            VerdictReason::TwistKnot => "twist_knot",
            VerdictReason::ExhaustiveElimination => "exhaustive_elimination",
            VerdictReason::TorusPrimeParams => "torus_prime_params",
            VerdictReason::WitnessTarget => "witness_target",
            VerdictReason::SurvivingCandidates => "surviving_candidates",
        }
    }
}

/// A minimality classification with its justification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityVerdict {
    /// The classified knot.
    pub knot: KnotId,
    /// The three-valued verdict.
    pub verdict: Verdict,
    /// The rule that produced it.
    pub reason: VerdictReason,
    /// A concrete smaller target, recorded whenever the verdict is
    /// `NotPMinimal`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<KnotId>,
}

/// Classification used by the twist/genus-one rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwistGenusClass {
    /// Quadratic Alexander polynomial: genus one (twist knots included).
    TwistLikeGenusOne,
    /// Anything else.
    Other,
}

/// Classifies a 2-bridge knot by whether its Alexander polynomial is
/// quadratic — the property the twist-knot and genus-one minimality rules
/// actually use.
pub fn is_twist_or_genus_one(k: &TwoBridgeKnot) -> TwistGenusClass {
    if k.alexander().degree() == Some(2) {
        TwistGenusClass::TwistLikeGenusOne
    } else {
        TwistGenusClass::Other
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Minimality of a 2-bridge knot. Fast theorem-backed paths run first
/// (prime determinant, then genus one); otherwise every candidate from
/// [`tb_candidates`] is examined: proven or literature-attested survivors
/// give `NotPMinimal` with a witness, full refutation gives `PMinimal`,
/// and anything else is honestly `Undetermined`.
pub fn tb_is_p_minimal(k: &TwoBridgeKnot, known: &KnownRelations) -> MinimalityVerdict {
    let k = k.canonical();
    let id = KnotId::TwoBridge(k);
    if is_prime(k.p()) {
        return MinimalityVerdict {
            knot: id,
            verdict: Verdict::PMinimal,
            reason: VerdictReason::PrimeDeterminant,
            witness: None,
        };
    }
    if k.genus() == 1 {
        return MinimalityVerdict {
            knot: id,
            verdict: Verdict::PMinimal,
            reason: VerdictReason::GenusOne,
            witness: None,
        };
    }
    tb_exhaustive_elimination(&k, known)
}

/// The exhaustive branch of [`tb_is_p_minimal`], exposed so the fast paths
/// can be cross-checked against it directly.
pub fn tb_exhaustive_elimination(
    k: &TwoBridgeKnot,
    known: &KnownRelations,
) -> MinimalityVerdict {
    let k = k.canonical();
    let id = KnotId::TwoBridge(k);
    let reports = tb_candidates(&k, false);
    let mut survivor = None;
    for report in &reports {
        match report.status {
            EdgeStatus::Refuted => {}
            EdgeStatus::Proven => {
                return MinimalityVerdict {
                    knot: id,
                    verdict: Verdict::NotPMinimal,
                    reason: VerdictReason::WitnessTarget,
                    witness: Some(report.target),
                };
            }
            _ => {
                if known.find(&id, &report.target).is_some() {
                    return MinimalityVerdict {
                        knot: id,
                        verdict: Verdict::NotPMinimal,
                        reason: VerdictReason::WitnessTarget,
                        witness: Some(report.target),
                    };
                }
                survivor.get_or_insert(report.target);
            }
        }
    }
    match survivor {
        None => MinimalityVerdict {
            knot: id,
            verdict: Verdict::PMinimal,
            reason: VerdictReason::ExhaustiveElimination,
            witness: None,
        },
        Some(_) => MinimalityVerdict {
            knot: id,
            verdict: Verdict::Undetermined,
            reason: VerdictReason::SurvivingCandidates,
            witness: None,
        },
    }
}

/// Minimality of a torus knot: exactly joint primality of the parameters,
/// with the smallest proper target as witness otherwise.
pub fn torus_minimality(k: &TorusKnot) -> MinimalityVerdict {
    let id = KnotId::Torus(*k);
    if is_prime(k.p1()) && is_prime(k.p2()) {
        MinimalityVerdict {
            knot: id,
            verdict: Verdict::PMinimal,
            reason: VerdictReason::TorusPrimeParams,
            witness: None,
        }
    } else {
        let witness = torus_targets(k)
            .into_iter()
            .find(|t| t != k)
            .expect("a torus knot with a composite parameter has a proper target");
        MinimalityVerdict {
            knot: id,
            verdict: Verdict::NotPMinimal,
            reason: VerdictReason::WitnessTarget,
            witness: Some(KnotId::Torus(witness)),
        }
    }
}

/// Minimality for either family.
pub fn is_p_minimal(k: &KnotId, known: &KnownRelations) -> MinimalityVerdict {
    match k {
        KnotId::TwoBridge(t) => tb_is_p_minimal(t, known),
        KnotId::Torus(t) => torus_minimality(t),
    }
}

/// The bounds an atlas was built with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasBounds {
    /// 2-bridge knots with determinant up to this value are included.
    pub max_determinant: u64,
    /// Torus knots with parameter product up to this value are included.
    pub max_torus_product: u64,
}

/// Which family (or overlap) a node belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    /// A 2-bridge knot that is not a torus knot.
    TwoBridge,
    /// A torus knot that is not 2-bridge.
    Torus,
    /// A `(2, n)` torus knot, which is also the 2-bridge knot `(n, 1)`.
    Both,
}

/// One atlas node with its invariant summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasNode {
    /// Node identity (2-bridge canonical form preferred for overlaps).
    pub id: KnotId,
    /// Family classification.
    pub kind: NodeKind,
    /// First parameter (determinant for 2-bridge knots).
    pub p: u64,
    /// Second parameter.
    pub q: i64,
    /// Determinant `|Δ(−1)|`.
    pub determinant: u64,
    /// Genus `deg Δ / 2`.
    pub genus: u64,
    /// Alexander polynomial, rendered in `t`.
    pub alexander: String,
    /// Degree of the parabolic-representation polynomial (2-bridge only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub riley_degree: Option<u64>,
    /// The torus literal for overlap nodes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torus_alias: Option<String>,
}

/// One atlas edge: a classified pair, with a verifying certificate whenever
/// the pair is proven.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasEdge {
    /// Surjection source node.
    pub src: KnotId,
    /// Surjection target node.
    pub dst: KnotId,
    /// Classification of the pair.
    pub status: EdgeStatus,
    /// Necessary-condition outcomes for the pair.
    pub filters: FilterOutcomes,
    /// Verifying certificate (proven torus pairs only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<EpiCertificate>,
}

/// The computed partial-order atlas.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PosetAtlas {
    /// The bounds the node set was generated from.
    pub bounds: AtlasBounds,
    /// All nodes, sorted by id.
    pub nodes: Vec<AtlasNode>,
    /// All evaluated pairs (refuted ones included), sorted by (src, dst).
    pub edges: Vec<AtlasEdge>,
    /// The curated relations that were loaded (echoed verbatim).
    pub known_relations: Vec<KnownRelation>,
}

fn tb_node(k: &TwoBridgeKnot) -> AtlasNode {
    let alias = k.as_torus();
    AtlasNode {
        id: KnotId::TwoBridge(*k),
        kind: if alias.is_some() {
            NodeKind::Both
        } else {
            NodeKind::TwoBridge
        },
        p: k.p(),
        q: k.q(),
        determinant: k.determinant(),
        genus: k.genus(),
        alexander: k.alexander().render("t"),
        riley_degree: Some(parabolic_class_count(k)),
        torus_alias: alias.map(|t| t.to_string()),
    }
}

fn torus_node(k: &TorusKnot) -> AtlasNode {
    AtlasNode {
        id: KnotId::Torus(*k),
        kind: NodeKind::Torus,
        p: k.p1(),
        q: k.p2() as i64,
        determinant: k.determinant(),
        genus: k.genus(),
        alexander: k.alexander().render("t"),
        riley_degree: None,
        torus_alias: None,
    }
}

/// Pair filters for two torus knots (the advisory filter does not apply).
fn torus_pair_filters(src: &TorusKnot, dst: &TorusKnot) -> FilterOutcomes {
    let (ds, dd) = (src.determinant(), dst.determinant());
    FilterOutcomes {
        determinant: if dd != 0 && ds % dd == 0 {
            FilterState::Pass
        } else {
            FilterState::Fail
        },
        alexander: if dst.alexander().divides_up_to_units(&src.alexander()) {
            FilterState::Pass
        } else {
            FilterState::Fail
        },
        riley_advisory: RileyFilterState::Skipped,
    }
}

/// Builds the atlas: all canonical 2-bridge knots with determinant at most
/// `max_det`, all torus knots with parameter product at most `max_torus`,
/// the torus/2-bridge overlap collapsed onto the 2-bridge node, every
/// 2-bridge pair run through the filters, every torus pair decided exactly
/// (with a verifying certificate), and curated relations applied to
/// surviving candidates. `with_riley` additionally runs the advisory
/// polynomial comparison on 2-bridge pairs.
pub fn build_atlas(
    max_det: u64,
    max_torus: u64,
    known: &KnownRelations,
    with_riley: bool,
) -> Result<PosetAtlas, OrderError> {
    if max_det < 3 || max_torus < 6 {
        return Err(OrderError::InvalidBounds { max_det, max_torus });
    }

    // -- nodes --
    let mut nodes: BTreeMap<KnotId, AtlasNode> = BTreeMap::new();
    for p in (3..=max_det).step_by(2) {
        for k in canonical_knots_with_det(p) {
            nodes.insert(KnotId::TwoBridge(k), tb_node(&k));
        }
    }
    for p1 in 2..=max_torus {
        for p2 in (p1 + 1)..=max_torus {
            if p1 * p2 > max_torus || num_integer::gcd(p1, p2) != 1 {
                continue;
            }
            let t = TorusKnot::new(p1, p2).expect("validated");
            match t.as_two_bridge() {
                // overlap: one node, keyed by the 2-bridge canonical form
                Some(two_bridge) => {
                    nodes
                        .entry(KnotId::TwoBridge(two_bridge))
                        .or_insert_with(|| tb_node(&two_bridge));
                }
                None => {
                    nodes.insert(KnotId::Torus(t), torus_node(&t));
                }
            }
        }
    }

    // -- edges --
    let mut edges: BTreeMap<(KnotId, KnotId), AtlasEdge> = BTreeMap::new();

    // 2-bridge pairs through the filters
    for id in nodes.keys() {
        let KnotId::TwoBridge(k) = id else { continue };
        for report in tb_candidates(k, with_riley) {
            if !nodes.contains_key(&report.target) {
                continue;
            }
            edges.insert(
                (report.source, report.target),
                AtlasEdge {
                    src: report.source,
                    dst: report.target,
                    status: report.status,
                    filters: report.filters,
                    certificate: None,
                },
            );
        }
    }

    // curated relations upgrade surviving candidates (never refutations)
    for relation in known.relations() {
        for ((_, _), edge) in edges.iter_mut() {
            if edge.status == EdgeStatus::Candidate
                && relation.source.same_knot(&edge.src)
                && relation.target.same_knot(&edge.dst)
            {
                edge.status = EdgeStatus::KnownLiterature;
            }
        }
    }

    // torus pairs decided exactly, certificates attached
    let torus_ids: Vec<(KnotId, TorusKnot)> = nodes
        .keys()
        .filter_map(|id| id.as_torus().map(|t| (*id, t)))
        .collect();
    for (src_id, src_t) in &torus_ids {
        for (dst_id, dst_t) in &torus_ids {
            if src_id == dst_id || !torus_ge(src_t, dst_t) {
                continue;
            }
            let cert = build_epimorphism(src_t, dst_t)
                .expect("the divisor criterion just held");
            match edges.entry((*src_id, *dst_id)) {
                Entry::Occupied(mut e) => {
                    let edge = e.get_mut();
                    debug_assert_ne!(
                        edge.status,
                        EdgeStatus::Refuted,
                        "a provable torus pair must never be filter-refuted"
                    );
                    edge.status = EdgeStatus::Proven;
                    edge.certificate = Some(cert);
                }
                Entry::Vacant(v) => {
                    v.insert(AtlasEdge {
                        src: *src_id,
                        dst: *dst_id,
                        status: EdgeStatus::Proven,
                        filters: torus_pair_filters(src_t, dst_t),
                        certificate: Some(cert),
                    });
                }
            }
        }
    }

    Ok(PosetAtlas {
        bounds: AtlasBounds {
            max_determinant: max_det,
            max_torus_product: max_torus,
        },
        nodes: nodes.into_values().collect(),
        edges: edges.into_values().collect(),
        known_relations: known.relations().to_vec(),
    })
}

/// Renders the atlas in DOT format. Refuted edges are omitted; proven edges
/// are solid, literature edges bold, candidate edges dashed. Edges implied
/// by a longer path of proven/literature edges are dropped from the drawing
/// (transitive reduction); the atlas data always keeps the full edge set.
pub fn atlas_to_dot(atlas: &PosetAtlas) -> String {
    // adjacency over the settled (proven/known) subgraph
    let mut settled: BTreeMap<KnotId, Vec<KnotId>> = BTreeMap::new();
    for e in &atlas.edges {
        if matches!(e.status, EdgeStatus::Proven | EdgeStatus::KnownLiterature) {
            settled.entry(e.src).or_default().push(e.dst);
        }
    }
    // reachability src → dst through at least one intermediate settled edge
    let implied = |src: &KnotId, dst: &KnotId| -> bool {
        let Some(firsts) = settled.get(src) else {
            return false;
        };
        let mut stack: Vec<&KnotId> = firsts.iter().filter(|n| *n != dst).collect();
        let mut seen: Vec<&KnotId> = stack.clone();
        while let Some(node) = stack.pop() {
            if node == dst {
                return true;
            }
            for next in settled.get(node).into_iter().flatten() {
                if !seen.contains(&next) {
                    seen.push(next);
                    stack.push(next);
                }
            }
        }
        false
    };

    let mut out = String::from("digraph epimorphism_atlas {\n");
    out.push_str("  rankdir=TB;\n  node [shape=box];\n");
    for node in &atlas.nodes {
        let _ = writeln!(out, "  \"{}\";", node.id);
    }
    for e in &atlas.edges {
        let style = match e.status {
            EdgeStatus::Refuted => continue,
            EdgeStatus::Proven => "",
            EdgeStatus::KnownLiterature => " [style=bold]",
            EdgeStatus::Candidate => " [style=dashed]",
        };
        if implied(&e.src, &e.dst) {
            continue;
        }
        let _ = writeln!(out, "  \"{}\" -> \"{}\"{};", e.src, e.dst, style);
    }
    out.push_str("}\n");
    out
}
