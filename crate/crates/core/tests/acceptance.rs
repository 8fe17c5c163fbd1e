//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test -p sperfect --test acceptance`; exits nonzero if any
//! criterion fails.

use std::cell::Cell;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sperfect::chordal::random_chordal;
use sperfect::enumerate::{canonical_code, connected_chordal_graphs, connected_graphs, random_graph};
use sperfect::families::{make_cycle, make_extended_sun, make_path, make_star, make_sun, InnerChords};
use sperfect::formats::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use sperfect::harness::{explore_conjecture_exhaustive, verify_main_theorem, TheoremSummary};
use sperfect::perfection::{is_s_perfect_brute, is_s_perfect_chordal, minimal_imperfect_properties};
use sperfect::solvers::{alpha_s, brute_alpha, brute_theta, theta_s, verify_packing, verify_cover};
use sperfect::sun::{find_induced_sun, ParityFilter};
use sperfect::Graph;

/// Certificate tallies shared by every criterion (criterion 8).
#[derive(Default)]
struct Certs {
    checked: Cell<usize>,
    failed: Cell<usize>,
}

impl Certs {
    fn record(&self, ok: bool) {
        self.checked.set(self.checked.get() + 1);
        if !ok {
            self.failed.set(self.failed.get() + 1);
        }
    }

    /// `α_S` and `θ_S` with both certificates checked.
    fn values(&self, g: &Graph) -> (usize, usize) {
        let (a, p) = alpha_s(g);
        let (t, c) = theta_s(g);
        self.record(verify_packing(g, &p).unwrap() && p.size == a);
        self.record(verify_cover(g, &c).unwrap() && c.size == t);
        (a, t)
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn run(id: u32, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let in_time = took <= limit;
    let pass = out.pass && in_time;
    println!(
        "criterion {id:>2}: {} {title}: {}; {:.2}s of {}s{}",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        took.as_secs_f64(),
        limit.as_secs(),
        if in_time { "" } else { " (over time limit)" }
    );
    pass
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn closed_forms(certs: &Certs) -> Outcome {
    let mut bad = Vec::new();
    for k in 1..=18 {
        let (a, t) = certs.values(&make_path(k).unwrap());
        if a != ceil_div(k, 3) || t != ceil_div(k, 3) {
            bad.push(format!("P{k}: ({a},{t})"));
        }
    }
    for n in 3..=18 {
        let (a, t) = certs.values(&make_cycle(n).unwrap());
        if a != n / 3 || t != ceil_div(n, 3) || (a == t) != (n % 3 == 0) {
            bad.push(format!("C{n}: ({a},{t})"));
        }
    }
    Outcome { pass: bad.is_empty(), detail: format!("18 paths, 16 cycles, mismatches {bad:?}") }
}

fn oracle_equivalence(certs: &Certs) -> Outcome {
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 1..=7 {
        graphs.extend(connected_graphs(n).unwrap());
    }
    let exhaustive = graphs.len();
    for n in 8..=12 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + n as u64);
        for _ in 0..500 {
            let p = rng.gen_range(0.15..=0.6);
            graphs.push(random_graph(n, p, rng.gen()).unwrap());
        }
    }
    let mut mismatches = 0;
    for g in &graphs {
        let (a, t) = certs.values(g);
        if a != brute_alpha(g).unwrap() || t != brute_theta(g).unwrap() {
            mismatches += 1;
        }
    }
    Outcome {
        pass: mismatches == 0,
        detail: format!("{exhaustive} exhaustive + {} random graphs, {mismatches} mismatches", graphs.len() - exhaustive),
    }
}

fn theorem_sweep(certs: &Certs, witnesses: &mut Vec<Graph>) -> Outcome {
    let mut corpus: Vec<Graph> = Vec::new();
    for n in 1..=8 {
        corpus.extend(connected_chordal_graphs(n).unwrap());
    }
    let exhaustive = corpus.len();
    for i in 0..1000u64 {
        let n = 4 + (i % 9) as usize;
        let fill = [0.0, 0.2, 0.4, 0.5, 0.6, 0.8, 1.0][(i % 7) as usize];
        corpus.push(random_chordal(n, fill, 1000 + i).unwrap());
    }
    let s: TheoremSummary = verify_main_theorem(&corpus);
    for g in &corpus {
        if let Ok(v) = is_s_perfect_chordal(g) {
            if let Some(sun) = &v.sun {
                certs.record(sun.verify(g));
            }
        }
    }
    certs.record(s.certificate_failures == 0);
    for w in &s.witnesses {
        witnesses.push(from_graph6(&w.canonical_graph6).unwrap());
    }
    let imperfect: usize = s.per_n.values().map(|c| c.imperfect).sum();
    Outcome {
        pass: s.disagreements.is_empty() && s.rejected_non_chordal.is_empty() && s.checked == corpus.len(),
        detail: format!(
            "{exhaustive} exhaustive + 1000 random chordal graphs, {imperfect} not S-perfect, {} disagreements, {} distinct witnesses",
            s.disagreements.len(),
            s.witnesses.len()
        ),
    }
}

fn odd_sun_gap(certs: &Certs, witnesses: &mut Vec<Graph>) -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for k in [3, 5, 7] {
        let g = make_sun(k, &InnerChords::Fan).unwrap();
        let (a, t) = certs.values(&g);
        let v = is_s_perfect_brute(&g).unwrap();
        let sun = find_induced_sun(&g, ParityFilter::Odd, k).unwrap();
        certs.record(sun.verify(&g));
        ok &= t == a + 1 && !v.is_s_perfect;
        notes.push(format!("{k}-sun ({a},{t})"));
        if let Some(w) = v.witness {
            witnesses.push(w.graph(&g).unwrap());
        }
    }
    let s3 = make_sun(3, &InnerChords::None).unwrap();
    let restored = (0..6).all(|v| {
        let (h, _) = s3.remove_vertex(v).unwrap();
        let (a, t) = certs.values(&h);
        a == t
    });
    let w = is_s_perfect_brute(&s3).unwrap().witness.unwrap();
    ok &= restored && w.vertices == s3.vertices() && (w.alpha_s, w.theta_s) == (1, 2);
    notes.push(format!("3-sun deletions restore equality: {restored}"));
    Outcome { pass: ok, detail: notes.join(", ") }
}

fn even_extended_sun(certs: &Certs) -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (k, sizes) in [(4, vec![1, 2, 1, 2]), (6, vec![2, 1, 1, 2, 1, 1])] {
        let g = make_extended_sun(k, &sizes, &InnerChords::Complete).unwrap();
        let three_sun_free = find_induced_sun(&g, ParityFilter::Odd, 3).is_none();
        let (a, t) = certs.values(&g);
        let brute = is_s_perfect_brute(&g).unwrap().is_s_perfect;
        let theorem = is_s_perfect_chordal(&g).unwrap().is_s_perfect;
        ok &= three_sun_free && a == k / 2 && t == k / 2 && brute && theorem;
        notes.push(format!("k={k}: ({a},{t}), 3-sun-free {three_sun_free}, S-perfect {brute}/{theorem}"));
    }
    Outcome { pass: ok, detail: notes.join("; ") }
}

fn witness_properties(witnesses: &[Graph]) -> Outcome {
    let mut seen = std::collections::BTreeSet::new();
    let distinct: Vec<&Graph> =
        witnesses.iter().filter(|w| seen.insert((w.n(), canonical_code(w).unwrap()))).collect();
    let mut failures = Vec::new();
    for w in &distinct {
        let p = minimal_imperfect_properties(w).unwrap();
        let f = p.failures();
        if !f.is_empty() {
            failures.push(format!("{} n={} fails {:?} (nested pair {:?})", to_graph6(w), w.n(), f, p.nested_open));
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!("{} witnesses ({} up to isomorphism), {} failing: {}", witnesses.len(), distinct.len(), failures.len(), failures.join("; ")),
    }
}

fn non_monotonicity(certs: &Certs) -> Outcome {
    let star = make_star(5).unwrap();
    let whole = certs.values(&star);
    let (rest, _) = star.remove_vertex(0).unwrap();
    let after = certs.values(&rest);
    Outcome {
        pass: whole == (1, 1) && after == (5, 5),
        detail: format!("K_1,5 {whole:?}, minus center {after:?}"),
    }
}

fn conjecture_smoke() -> Outcome {
    let r = explore_conjecture_exhaustive(9).unwrap();
    let stated = r.readings.iter().filter(|t| t.reading != sperfect::SpokeRule::SunInclusive).all(|t| !t.fits)
        && r.notes.len() >= 2;
    let inclusive = r
        .readings
        .iter()
        .find(|t| t.reading == sperfect::SpokeRule::SunInclusive)
        .map(|t| format!("{} agree / {} disagree", t.tally.agree, t.tally.disagree))
        .unwrap_or_default();
    let first = r.counterexamples.first().map(|c| c.graph6.clone()).unwrap_or_default();
    Outcome {
        pass: r.cycle_clauses.disagree == 0 && stated,
        detail: format!(
            "{} connected graphs, cycle clauses {} agree / {} disagree (first {first:?}), super-sun readings out of reach stated: {stated}, sun-inclusive reading {inclusive}",
            r.scanned, r.cycle_clauses.agree, r.cycle_clauses.disagree
        ),
    }
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf0_4d_a7);
    let mut bad = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(0..=64);
        let p = rng.gen_range(0.0..=1.0);
        let g = random_graph(n, p, rng.gen()).unwrap();
        let g6 = to_graph6(&g);
        let el = to_edge_list(&g);
        let g6_back = from_graph6(&g6).unwrap();
        let el_back = from_edge_list(&el).unwrap();
        if g6_back != g || el_back != g || to_graph6(&g6_back) != g6 || to_edge_list(&el_back) != el {
            bad += 1;
        }
    }
    Outcome { pass: bad == 0, detail: format!("10000 graphs with 0..=64 vertices, {bad} failures") }
}

fn main() {
    let certs = Certs::default();
    let mut witnesses = Vec::new();
    let secs = Duration::from_secs;
    let results = [
        run(1, "path/cycle closed forms (exact)", secs(1), || closed_forms(&certs)),
        run(2, "solver vs brute oracles (exact)", secs(300), || oracle_equivalence(&certs)),
        run(3, "brute vs odd-sun verdicts on chordal graphs (zero disagreements)", secs(900), || {
            theorem_sweep(&certs, &mut witnesses)
        }),
        run(4, "odd sun gap and 3-sun minimality (exact)", secs(10), || odd_sun_gap(&certs, &mut witnesses)),
        run(5, "even extended sun perfection (exact)", secs(60), || even_extended_sun(&certs)),
        run(6, "minimal witness structure (zero failures)", secs(60), || witness_properties(&witnesses)),
        run(7, "star non-monotonicity (exact)", secs(1), || non_monotonicity(&certs)),
        run(8, "certificate soundness (100%)", secs(1), || Outcome {
            pass: certs.failed.get() == 0,
            detail: format!("{} certificates checked, {} failed", certs.checked.get(), certs.failed.get()),
        }),
        run(9, "conjecture explorer n <= 9 (zero cycle-clause disagreements)", secs(1800), conjecture_smoke),
        run(10, "graph6 and edge-list round trip (byte-exact)", secs(60), round_trip),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
