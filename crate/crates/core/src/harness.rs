//! Per-graph analysis reports and corpus sweeps: agreement between the
//! brute-force and odd-sun perfection verdicts on chordal graphs, and the
//! forbidden-structure comparison for arbitrary graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::chordal::{check_chordal, simplicial_vertices, ChordalityVerdict};
use crate::enumerate::{canonical_form, connected_graphs};
use crate::error::Result;
use crate::formats::{from_graph6, to_graph6};
use crate::graph::{bit, Bits, Graph, VertexSet};
use crate::perfection::{
    is_s_perfect_brute, is_s_perfect_chordal, PerfectionVerdict, Witness, BRUTE_PERFECTION_LIMIT,
};
use crate::solvers::{alpha_s, theta_s, PackingSet, StarCover};
use crate::sun::{find_induced_sun, find_induced_super_sun, ParityFilter, SpokeRule, SunCertificate, SuperSunCertificate};

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    /// Record wall-clock time; off by default so reports are reproducible
    /// byte for byte.
    pub timing: bool,
    /// Which sun parities to search for.
    pub parity: ParityFilter,
}

/// Everything the library can say about one graph. Field order is the
/// serialized order.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub chordality: ChordalityVerdict,
    pub simplicial: VertexSet,
    pub alpha_s: usize,
    pub packing: PackingSet,
    pub theta_s: usize,
    pub cover: StarCover,
    pub odd_sun: Option<SunCertificate>,
    pub even_sun: Option<SunCertificate>,
    /// Present when `n` is within the brute-force limit.
    pub perfection_brute: Option<PerfectionVerdict>,
    /// Present for chordal graphs.
    pub perfection_theorem: Option<PerfectionVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl AnalysisReport {
    /// Re-checks every embedded certificate against `g`.
    pub fn certificates_verify(&self, g: &Graph) -> bool {
        let hole_ok = self.chordality.hole.as_ref().is_none_or(|h| h.verify(g));
        let peo_ok = self
            .chordality
            .peo
            .as_ref()
            .is_none_or(|p| crate::chordal::is_perfect_elimination_ordering(g, p));
        let suns_ok = [&self.odd_sun, &self.even_sun]
            .iter()
            .all(|s| s.as_ref().is_none_or(|c| c.verify(g)));
        let theorem_sun_ok = self
            .perfection_theorem
            .as_ref()
            .and_then(|v| v.sun.as_ref())
            .is_none_or(|c| c.verify(g));
        hole_ok
            && peo_ok
            && suns_ok
            && theorem_sun_ok
            && crate::solvers::verify_packing(g, &self.packing).unwrap_or(false)
            && crate::solvers::verify_cover(g, &self.cover).unwrap_or(false)
            && self.packing.size == self.alpha_s
            && self.cover.size == self.theta_s
    }
}

pub fn analyze(g: &Graph, opts: AnalyzeOptions) -> Result<AnalysisReport> {
    let start = Instant::now();
    let chordality = check_chordal(g);
    let (alpha, packing) = alpha_s(g);
    let (theta, cover) = theta_s(g);
    let half = g.n() / 2;
    let odd_sun = opts.parity.accepts(1).then(|| find_induced_sun(g, ParityFilter::Odd, half)).flatten();
    let even_sun = opts.parity.accepts(2).then(|| find_induced_sun(g, ParityFilter::Even, half)).flatten();
    let perfection_brute = if g.n() <= BRUTE_PERFECTION_LIMIT { Some(is_s_perfect_brute(g)?) } else { None };
    let perfection_theorem = if chordality.is_chordal { Some(is_s_perfect_chordal(g)?) } else { None };
    Ok(AnalysisReport {
        graph6: to_graph6(g),
        n: g.n(),
        edges: g.edge_count(),
        simplicial: simplicial_vertices(g),
        chordality,
        alpha_s: alpha,
        packing,
        theta_s: theta,
        cover,
        odd_sun,
        even_sun,
        perfection_brute,
        perfection_theorem,
        elapsed_ms: opts.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderCounts {
    pub graphs: usize,
    pub perfect: usize,
    pub imperfect: usize,
    pub disagreements: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Disagreement {
    pub graph6: String,
    pub brute: PerfectionVerdict,
    pub theorem: PerfectionVerdict,
}

/// A minimal witness up to isomorphism, with one host it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistinctWitness {
    /// graph6 of the witness in canonical form.
    pub canonical_graph6: String,
    pub n: usize,
    pub alpha_s: usize,
    pub theta_s: usize,
    pub occurrences: usize,
    pub example_host: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct TheoremSummary {
    pub checked: usize,
    pub per_n: BTreeMap<usize, OrderCounts>,
    /// Corpus graphs that failed the chordality gate, with their holes.
    pub rejected_non_chordal: Vec<(String, Vec<usize>)>,
    pub rejected_oversize: Vec<String>,
    pub disagreements: Vec<Disagreement>,
    pub witnesses: Vec<DistinctWitness>,
    /// Certificates (witnesses and suns) that failed re-verification.
    pub certificate_failures: usize,
}

enum Outcome {
    NotChordal(String, Vec<usize>),
    Oversize(String),
    Checked { n: usize, brute: Box<PerfectionVerdict>, theorem: Box<PerfectionVerdict>, certs_ok: bool, g6: String },
}

fn theorem_check(g: &Graph) -> Outcome {
    let g6 = to_graph6(g);
    if let Some(hole) = check_chordal(g).hole {
        return Outcome::NotChordal(g6, hole.cycle);
    }
    if g.n() > BRUTE_PERFECTION_LIMIT {
        return Outcome::Oversize(g6);
    }
    let brute = is_s_perfect_brute(g).expect("size checked");
    let theorem = is_s_perfect_chordal(g).expect("chordality checked");
    let witness_ok = brute.witness.as_ref().is_none_or(|w| witness_is_sound(g, w));
    let sun_ok = theorem.sun.as_ref().is_none_or(|s| s.verify(g));
    Outcome::Checked { n: g.n(), brute: Box::new(brute), theorem: Box::new(theorem), certs_ok: witness_ok && sun_ok, g6 }
}

/// The witness has the stated parameter pair and is minimal S-imperfect.
pub fn witness_is_sound(host: &Graph, w: &Witness) -> bool {
    let Ok(sub) = w.graph(host) else { return false };
    let (a, _) = alpha_s(&sub);
    let (t, _) = theta_s(&sub);
    a == w.alpha_s
        && t == w.theta_s
        && to_graph6(&sub) == w.graph6
        && crate::perfection::verify_minimal_imperfect(&sub).unwrap_or(false)
}

/// Runs both perfection deciders on every chordal corpus graph and tallies
/// agreement per order. Non-chordal and oversize graphs are rejected and
/// listed, not counted.
pub fn verify_main_theorem(corpus: &[Graph]) -> TheoremSummary {
    let outcomes: Vec<(usize, Outcome)> = corpus.par_iter().map(theorem_check).enumerate().collect();
    let mut summary = TheoremSummary::default();
    let mut distinct: BTreeMap<String, DistinctWitness> = BTreeMap::new();
    for (i, outcome) in outcomes {
        match outcome {
            Outcome::NotChordal(g6, hole) => summary.rejected_non_chordal.push((g6, hole)),
            Outcome::Oversize(g6) => summary.rejected_oversize.push(g6),
            Outcome::Checked { n, brute, theorem, certs_ok, g6 } => {
                summary.checked += 1;
                if !certs_ok {
                    summary.certificate_failures += 1;
                }
                let counts = summary.per_n.entry(n).or_default();
                counts.graphs += 1;
                if brute.is_s_perfect {
                    counts.perfect += 1;
                } else {
                    counts.imperfect += 1;
                }
                if let Some(w) = &brute.witness {
                    let wg = w.graph(&corpus[i]).expect("witness inside host");
                    let canon = to_graph6(&canonical_form(&wg).expect("small witness"));
                    distinct
                        .entry(canon.clone())
                        .and_modify(|d| d.occurrences += 1)
                        .or_insert(DistinctWitness {
                            canonical_graph6: canon,
                            n: wg.n(),
                            alpha_s: w.alpha_s,
                            theta_s: w.theta_s,
                            occurrences: 1,
                            example_host: g6.clone(),
                        });
                }
                if brute.is_s_perfect != theorem.is_s_perfect {
                    counts.disagreements += 1;
                    summary.disagreements.push(Disagreement { graph6: g6, brute: *brute, theorem: *theorem });
                }
            }
        }
    }
    summary.witnesses = distinct.into_values().collect();
    summary
}

/// Induced cycle whose length `L >= 4` satisfies `accept(L)`; searched from
/// each smallest cycle vertex along induced paths through larger vertices.
pub fn find_induced_cycle<F: Fn(usize) -> bool>(g: &Graph, accept: F) -> Option<Vec<usize>> {
    fn extend<F: Fn(usize) -> bool>(g: &Graph, path: &mut Vec<usize>, body: u64, allowed: u64, accept: &F) -> bool {
        let s = path[0];
        let last = *path.last().unwrap();
        let r = g.rows();
        // vertices adjacent to an interior path vertex other than `last` are out
        let interior = body & !bit(s) & !bit(last);
        let blocked = Bits(interior).fold(0u64, |m, v| m | r[v]);
        for w in Bits(r[last] & allowed & !body & !blocked) {
            path.push(w);
            if r[w] & bit(s) != 0 {
                if path.len() >= 4 && accept(path.len()) {
                    return true;
                }
            } else if extend(g, path, body | bit(w), allowed, accept) {
                return true;
            }
            path.pop();
        }
        false
    }
    let r = g.rows();
    for (s, &row) in r.iter().enumerate() {
        let allowed = g.vertices().bits() & !crate::graph::low_mask(s + 1);
        for a in Bits(row & allowed) {
            let mut path = vec![s, a];
            if extend(g, &mut path, bit(s) | bit(a), allowed, &accept) {
                return Some(path);
            }
        }
    }
    None
}

/// Lengths `3k + 1` and `3k + 2` with `k >= 1`.
pub fn is_forbidden_cycle_length(len: usize) -> bool {
    len >= 4 && !len.is_multiple_of(3)
}

pub fn find_forbidden_cycle(g: &Graph) -> Option<Vec<usize>> {
    find_induced_cycle(g, is_forbidden_cycle_length)
}

/// Spoke readings compared side by side. The first two are the competing
/// parameter readings of the super-sun definition; the third lets spokes
/// collapse to single vertices, so odd suns count.
pub const READINGS: [SpokeRule; 3] = [SpokeRule::Decoupled, SpokeRule::Tied, SpokeRule::SunInclusive];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub agree: usize,
    pub disagree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReadingTally {
    pub reading: SpokeRule,
    pub smallest_odd_super_sun: usize,
    /// Whether any scanned graph was large enough to contain one.
    pub fits: bool,
    pub graphs_with_odd_super_sun: usize,
    pub tally: Tally,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReadingScan {
    pub reading: SpokeRule,
    /// False when the graph is too small to contain one.
    pub searched: bool,
    pub odd_super_sun: Option<SuperSunCertificate>,
    pub conjecture_predicts_perfect: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub n: usize,
    pub s_perfect: bool,
    pub witness: Option<Witness>,
    pub forbidden_cycle: Option<Vec<usize>>,
    pub scans: Vec<ReadingScan>,
    /// Readings under which the two sides disagree; `cycles` marks the
    /// cycle clauses alone.
    pub disagrees_under: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ConjectureReport {
    pub scanned: usize,
    pub skipped_malformed: usize,
    pub skipped_disconnected: usize,
    pub skipped_oversize: usize,
    pub max_n: usize,
    pub per_n: BTreeMap<usize, usize>,
    pub perfect: usize,
    pub imperfect: usize,
    pub with_forbidden_cycle: usize,
    /// Perfection against the cycle clauses alone.
    pub cycle_clauses: Tally,
    pub readings: Vec<ReadingTally>,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
}

impl ConjectureReport {
    pub fn has_disagreements(&self) -> bool {
        !self.counterexamples.is_empty()
    }
}

struct Scan {
    n: usize,
    graph6: String,
    verdict: PerfectionVerdict,
    cycle: Option<Vec<usize>>,
    scans: Vec<ReadingScan>,
}

fn scan_graph(g: &Graph) -> Scan {
    let verdict = is_s_perfect_brute(g).expect("size checked");
    let cycle = find_forbidden_cycle(g);
    let scans = READINGS
        .iter()
        .map(|&rule| {
            let searched = g.n() >= rule.smallest_odd_size();
            let odd_super_sun = if searched {
                find_induced_super_sun(g, rule, ParityFilter::Odd, g.n())
            } else {
                None
            };
            ReadingScan {
                reading: rule,
                searched,
                conjecture_predicts_perfect: cycle.is_none() && odd_super_sun.is_none(),
                odd_super_sun,
            }
        })
        .collect();
    Scan { n: g.n(), graph6: to_graph6(g), verdict, cycle, scans }
}

/// Compares brute-force S-perfection with freedom from forbidden cycles and
/// odd super suns on each connected graph of `graphs`.
pub fn explore_conjecture(graphs: &[Graph], skipped_malformed: usize) -> ConjectureReport {
    let mut report = ConjectureReport { skipped_malformed, ..Default::default() };
    let kept: Vec<&Graph> = graphs
        .iter()
        .filter(|g| {
            if g.n() > BRUTE_PERFECTION_LIMIT {
                report.skipped_oversize += 1;
                false
            } else if !g.is_connected() {
                report.skipped_disconnected += 1;
                false
            } else {
                true
            }
        })
        .collect();
    let scans: Vec<Scan> = kept.par_iter().map(|g| scan_graph(g)).collect();

    report.max_n = scans.iter().map(|s| s.n).max().unwrap_or(0);
    let mut readings: Vec<ReadingTally> = READINGS
        .iter()
        .map(|&rule| ReadingTally {
            reading: rule,
            smallest_odd_super_sun: rule.smallest_odd_size(),
            fits: report.max_n >= rule.smallest_odd_size(),
            graphs_with_odd_super_sun: 0,
            tally: Tally::default(),
        })
        .collect();
    for s in scans {
        report.scanned += 1;
        *report.per_n.entry(s.n).or_default() += 1;
        let perfect = s.verdict.is_s_perfect;
        if perfect {
            report.perfect += 1;
        } else {
            report.imperfect += 1;
        }
        let mut disagrees_under = Vec::new();
        if s.cycle.is_some() {
            report.with_forbidden_cycle += 1;
        }
        if perfect == s.cycle.is_none() {
            report.cycle_clauses.agree += 1;
        } else {
            report.cycle_clauses.disagree += 1;
            disagrees_under.push("cycles".to_string());
        }
        for (t, scan) in readings.iter_mut().zip(&s.scans) {
            if scan.odd_super_sun.is_some() {
                t.graphs_with_odd_super_sun += 1;
            }
            if perfect == scan.conjecture_predicts_perfect {
                t.tally.agree += 1;
            } else {
                t.tally.disagree += 1;
                disagrees_under.push(reading_name(scan.reading).to_string());
            }
        }
        if !disagrees_under.is_empty() {
            report.counterexamples.push(Counterexample {
                graph6: s.graph6,
                n: s.n,
                s_perfect: perfect,
                witness: s.verdict.witness,
                forbidden_cycle: s.cycle,
                scans: s.scans,
                disagrees_under,
            });
        }
    }
    for t in &readings {
        if !t.fits {
            report.notes.push(format!(
                "{} reading: the smallest odd super sun has {} vertices, more than the largest scanned graph ({}); only the cycle clauses are exercised",
                reading_name(t.reading),
                t.smallest_odd_super_sun,
                report.max_n
            ));
        }
    }
    report.readings = readings;
    report.counterexamples.sort_by(|a, b| (a.n, &a.graph6).cmp(&(b.n, &b.graph6)));
    report
}

pub fn reading_name(rule: SpokeRule) -> &'static str {
    match rule {
        SpokeRule::Sun => "sun",
        SpokeRule::Decoupled => "decoupled",
        SpokeRule::Tied => "tied",
        SpokeRule::SunInclusive => "sun-inclusive",
    }
}

/// Exhaustive mode: every connected graph with `1 <= n <= max_n`.
pub fn explore_conjecture_exhaustive(max_n: usize) -> Result<ConjectureReport> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(connected_graphs(n)?);
    }
    Ok(explore_conjecture(&all, 0))
}

/// Stream mode: one graph6 record per nonempty line; malformed lines are
/// counted and skipped.
pub fn explore_conjecture_graph6<'a, I: IntoIterator<Item = &'a str>>(lines: I) -> ConjectureReport {
    let mut graphs = Vec::new();
    let mut malformed = 0;
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match from_graph6(line) {
            Ok(g) => graphs.push(g),
            Err(_) => malformed += 1,
        }
    }
    explore_conjecture(&graphs, malformed)
}

/// Canonical graph6 strings of the distinct graphs in `graphs`.
pub fn distinct_up_to_isomorphism(graphs: &[Graph]) -> Result<BTreeSet<String>> {
    graphs.iter().map(|g| Ok(to_graph6(&canonical_form(g)?))).collect()
}
