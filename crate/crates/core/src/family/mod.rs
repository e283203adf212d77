//! Deletion families: remove the edges of a small pattern inside cliques of a
//! 1-walk-regular host, deduplicate up to isomorphism, and confirm that every
//! member shares one characteristic polynomial per matrix.

mod embed;
mod search;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::charpoly::{charpoly, SpectralKind};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::graph::{cliques_of_size, parse_graph6, to_graph6, Graph};
use crate::iso::{canonical_cert, CanonicalCert};
use crate::poly::CharPoly;
use crate::walk::{is_one_walk_regular, is_strongly_regular, OneWalkRegularCertificate, SrgParams};

pub use embed::{enumerate_embeddings, Embedding};
pub use search::{all_graph_classes, search_cospectral_pairs, MAX_SEARCH_ORDER};

/// A pattern graph with a display name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGraph {
    pub name: String,
    pub graph: Graph,
}

impl PatternGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        PatternGraph { name: name.into(), graph }
    }

    /// `K2`, `K3`, `K4`, `P3`, `Y1`, `Y2`, or else a graph6 word.
    pub fn parse(text: &str) -> Result<Self> {
        if let Some(g) = fixtures::pattern(text) {
            return Ok(PatternGraph::new(text.to_ascii_uppercase(), g));
        }
        Ok(PatternGraph::new(text, parse_graph6(text.as_bytes())?))
    }
}

pub type PolyMap = BTreeMap<String, CharPoly>;

#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub cert_hex: String,
    pub graph6: String,
    /// Name of the pattern whose deletion first produced this class.
    pub pattern: String,
    /// Degree sequence, non-increasing.
    pub degrees: Vec<usize>,
    pub charpolys: PolyMap,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement_charpolys: Option<PolyMap>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub host: String,
    pub patterns: Vec<String>,
    /// Embeddings tried, after collapsing those that delete the same edges.
    pub embeddings: usize,
    /// Distinct classes per pattern, in `patterns` order.
    pub pattern_class_counts: Vec<usize>,
    pub classes: Vec<ClassRecord>,
    /// Distinct polynomials per kind over the whole family.
    pub family_charpolys: BTreeMap<String, Vec<CharPoly>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement_charpolys: Option<BTreeMap<String, Vec<CharPoly>>>,
    /// Kinds left out because some member has an isolated vertex.
    pub skipped_kinds: Vec<String>,
    pub violations: Vec<String>,
}

impl FamilyReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Distinct polynomials of `kind` across the family.
    pub fn polys(&self, kind: SpectralKind) -> &[CharPoly] {
        self.family_charpolys.get(kind.symbol()).map_or(&[], Vec::as_slice)
    }

    pub fn complement_polys(&self, kind: SpectralKind) -> &[CharPoly] {
        self.complement_charpolys
            .as_ref()
            .and_then(|m| m.get(kind.symbol()))
            .map_or(&[], Vec::as_slice)
    }
}

/// Certifies a host once and then generates families from it.
#[derive(Clone, Debug)]
pub struct FamilyGenerator {
    host: Graph,
    host_id: String,
    certificate: OneWalkRegularCertificate,
    srg: Option<SrgParams>,
    workers: usize,
}

struct Member {
    cert: CanonicalCert,
    graph: Graph,
    pattern: usize,
}

impl FamilyGenerator {
    pub fn new(host: &Graph, host_id: impl Into<String>) -> Result<Self> {
        let certificate = is_one_walk_regular(host)?;
        if !certificate.pass {
            return Err(Error::NotOneWalkRegular);
        }
        Ok(FamilyGenerator {
            host: host.clone(),
            host_id: host_id.into(),
            certificate,
            srg: is_strongly_regular(host),
            workers: 1,
        })
    }

    /// Number of worker threads for the parallel stages (at least 1).
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn certificate(&self) -> &OneWalkRegularCertificate {
        &self.certificate
    }

    pub fn srg(&self) -> Option<SrgParams> {
        self.srg
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?;
        Ok(pool.install(f))
    }

    /// Deleted graphs for one pattern, deduplicated, in first-seen order.
    fn members(&self, pattern: &Graph) -> Result<(usize, Vec<(CanonicalCert, Graph)>)> {
        let embeddings = enumerate_embeddings(&self.host, pattern);
        let built: Vec<(CanonicalCert, Graph)> = self.run(|| {
            embeddings
                .par_iter()
                .map(|e| {
                    let g = e.apply(&self.host, pattern);
                    (canonical_cert(&g), g)
                })
                .collect()
        })?;
        let mut seen = BTreeSet::new();
        let unique = built.into_iter().filter(|(c, _)| seen.insert(c.bytes().to_vec())).collect();
        Ok((embeddings.len(), unique))
    }

    /// Number of pairwise non-isomorphic graphs obtained by deleting the
    /// edges of `pattern` inside a clique of the host.
    pub fn count_classes(&self, pattern: &Graph) -> Result<usize> {
        Ok(self.members(pattern)?.1.len())
    }

    fn report(&self, patterns: &[&PatternGraph], with_complements: bool) -> Result<FamilyReport> {
        let mut embeddings = 0;
        let mut counts = Vec::new();
        let mut seen = BTreeSet::new();
        let mut members: Vec<Member> = Vec::new();
        for (p, pat) in patterns.iter().enumerate() {
            let (tried, found) = self.members(&pat.graph)?;
            embeddings += tried;
            counts.push(found.len());
            for (cert, graph) in found {
                if seen.insert(cert.bytes().to_vec()) {
                    members.push(Member { cert, graph, pattern: p });
                }
            }
        }
        members.sort_by(|a, b| a.cert.cmp(&b.cert));

        let polys = |g: &Graph| -> Result<BTreeMap<SpectralKind, CharPoly>> {
            let mut out = BTreeMap::new();
            for kind in SpectralKind::ALL {
                match charpoly(g, kind) {
                    Ok(p) => {
                        out.insert(kind, p);
                    }
                    Err(Error::IsolatedVertex(_)) => {}
                    Err(e) => return Err(e),
                }
            }
            Ok(out)
        };
        type Polys = (BTreeMap<SpectralKind, CharPoly>, Option<BTreeMap<SpectralKind, CharPoly>>);
        let computed: Vec<Result<Polys>> = self.run(|| {
            members
                .par_iter()
                .map(|m| {
                    let own = polys(&m.graph)?;
                    let comp = if with_complements { Some(polys(&m.graph.complement())?) } else { None };
                    Ok((own, comp))
                })
                .collect()
        })?;
        let computed = computed.into_iter().collect::<Result<Vec<_>>>()?;

        let mut skipped = BTreeSet::new();
        for (own, comp) in &computed {
            for kind in SpectralKind::ALL {
                let missing_comp = comp.as_ref().is_some_and(|c| !c.contains_key(&kind));
                if !own.contains_key(&kind) || missing_comp {
                    skipped.insert(kind);
                }
            }
        }
        let kinds: Vec<SpectralKind> = SpectralKind::ALL.into_iter().filter(|k| !skipped.contains(k)).collect();
        let to_map = |m: &BTreeMap<SpectralKind, CharPoly>| -> PolyMap {
            kinds.iter().map(|k| (k.symbol().to_string(), m[k].clone())).collect()
        };
        let collect_family = |pick: &dyn Fn(&Polys) -> Option<&BTreeMap<SpectralKind, CharPoly>>| {
            let mut fam: BTreeMap<String, Vec<CharPoly>> = BTreeMap::new();
            for k in &kinds {
                let set: BTreeSet<CharPoly> = computed.iter().filter_map(pick).map(|m| m[k].clone()).collect();
                fam.insert(k.symbol().to_string(), set.into_iter().collect());
            }
            fam
        };

        let mut classes = Vec::with_capacity(members.len());
        for (m, c) in members.iter().zip(&computed) {
            let mut degrees = m.graph.degrees();
            degrees.sort_unstable_by(|a, b| b.cmp(a));
            classes.push(ClassRecord {
                cert_hex: m.cert.hex(),
                graph6: to_graph6(&m.graph)?,
                pattern: patterns[m.pattern].name.clone(),
                degrees,
                charpolys: to_map(&c.0),
                complement_charpolys: c.1.as_ref().map(to_map),
            });
        }
        let family_charpolys = collect_family(&|c| Some(&c.0));
        let complement_charpolys = with_complements.then(|| collect_family(&|c| c.1.as_ref()));
        let report = FamilyReport {
            host: self.host_id.clone(),
            patterns: patterns.iter().map(|p| p.name.clone()).collect(),
            embeddings,
            pattern_class_counts: counts,
            classes,
            family_charpolys,
            complement_charpolys,
            skipped_kinds: skipped.iter().map(|k| k.symbol().to_string()).collect(),
            violations: Vec::new(),
        };
        Ok(report)
    }

    /// The family of `pattern`. Every member must share one polynomial per
    /// kind; for strongly regular hosts the complements must too.
    pub fn generate_family(&self, pattern: &PatternGraph) -> Result<FamilyReport> {
        let report = self.report(&[pattern], self.srg.is_some())?;
        let mut problems = Vec::new();
        for (k, ps) in &report.family_charpolys {
            if ps.len() > 1 {
                problems.push(format!("{} distinct {k} polynomials", ps.len()));
            }
        }
        for (k, ps) in report.complement_charpolys.iter().flatten() {
            if ps.len() > 1 {
                problems.push(format!("{} distinct {k} polynomials among complements", ps.len()));
            }
        }
        if !problems.is_empty() {
            return Err(Error::FamilyViolation(problems.join("; ")));
        }
        Ok(report)
    }

    /// Union family from deleting `y1` or `y2` inside cliques.
    ///
    /// With `check_hypothesis`, the pair must be cospectral for `kind` (and for
    /// `Signless` have cospectral complements too), and a second polynomial of
    /// `kind` is an error. Without it, extra polynomials are only listed in
    /// `violations`.
    pub fn generate_pair_family(
        &self,
        y1: &PatternGraph,
        y2: &PatternGraph,
        kind: SpectralKind,
        check_hypothesis: bool,
    ) -> Result<FamilyReport> {
        if !matches!(kind, SpectralKind::Laplacian | SpectralKind::Signless) {
            return Err(Error::BadParameter(format!("pair families use L or S, not {kind}")));
        }
        let m = y1.graph.order();
        if m != y2.graph.order() {
            return Err(Error::HypothesisNotMet("patterns have different orders".into()));
        }
        if cliques_of_size(&self.host, m).is_empty() {
            return Err(Error::HypothesisNotMet(format!("host has no clique of size {m}")));
        }
        if check_hypothesis {
            if charpoly(&y1.graph, kind)? != charpoly(&y2.graph, kind)? {
                return Err(Error::HypothesisNotMet(format!("patterns are not {kind}-cospectral")));
            }
            if kind == SpectralKind::Signless
                && charpoly(&y1.graph.complement(), kind)? != charpoly(&y2.graph.complement(), kind)?
            {
                return Err(Error::HypothesisNotMet("pattern complements are not S-cospectral".into()));
            }
        }
        let mut report = self.report(&[y1, y2], false)?;
        let n_polys = report.polys(kind).len();
        if n_polys > 1 {
            let msg = format!("{n_polys} distinct {kind} polynomials across the union");
            if check_hypothesis {
                return Err(Error::FamilyViolation(msg));
            }
            report.violations.push(msg);
        }
        Ok(report)
    }
}

/// Table column order.
pub const TABLE_PATTERNS: [&str; 6] = fixtures::TABLE_PATTERNS;

/// Class counts of the six table patterns for one host.
pub fn table1_row(generator: &FamilyGenerator) -> Result<[usize; 6]> {
    let mut row = [0; 6];
    for (slot, name) in row.iter_mut().zip(TABLE_PATTERNS) {
        let pattern = fixtures::pattern(name).expect("built-in pattern");
        *slot = generator.count_classes(&pattern)?;
    }
    Ok(row)
}
