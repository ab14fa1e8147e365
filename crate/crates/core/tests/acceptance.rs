//! Acceptance criteria 1 to 8. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails. Each criterion produces a deterministic
//! report; criterion 8 reruns 1 to 7 and compares reports byte for byte.

mod common;

use berge_core::constructions::{construction1, construction2, construction3, construction4};
use berge_core::constructive::*;
use berge_core::oracle::{
    find_berge_cycle, find_hamiltonian_frame, graph_cycle_of_length, search_berge_cycle, search_graph_cycle,
    spectrum, Outcome, SearchOptions,
};
use berge_core::sample::{sample_planted, ExtraTarget};
use berge_core::{degree_threshold, Hypergraph, VertexSet};
use common::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::time::{Duration, Instant};

/// Pinned tolerances.
const BUDGETS_SECS: [u64; 7] = [10, 120, 300, 60, 120, 60, 600];
const MAX_FALLBACK_FRACTION: f64 = 0.20;
const SPOT_CHECK_EVERY: usize = 10;
const SPOT_CHECK_CAP: u64 = 5_000_000;

struct Report {
    pass: bool,
    text: String,
}

fn criterion_1() -> Report {
    let mut text = String::new();
    let mut pass = true;
    let cases: [(&str, Hypergraph); 3] = [
        ("c1(9,4)", construction1(9, 4, false).unwrap()),
        ("c2(9,4)", construction2(9, 4, false).unwrap()),
        ("c3(6,3)", construction3(6, 3).unwrap()),
    ];
    for (name, h) in cases {
        let thr = degree_threshold(h.n(), h.r()).unwrap();
        let delta = h.min_degree() as u64;
        let ham = find_hamiltonian_frame(&h).is_some();
        let ok = delta + 1 == thr && !ham;
        pass &= ok;
        let _ = write!(text, "{name}: min_degree={delta} threshold={thr} hamiltonian={ham}; ");
    }
    Report { pass, text }
}

fn criterion_2() -> Report {
    let h = construction4(6, 3).unwrap();
    let rep = spectrum(&h, 2, 18, &SearchOptions::default()).unwrap();
    let witnesses_ok = rep.present().iter().all(|&l| independent_validate(&h, rep.witness(l).unwrap()));
    let shadow_has_5 = graph_cycle_of_length(&h.shadow2(), 5).unwrap().is_some();
    let pass = rep.absent() == vec![5] && rep.unknown().is_empty() && witnesses_ok && !shadow_has_5;
    Report {
        pass,
        text: format!(
            "absent={:?} unknown={:?} present={} witnesses_valid={witnesses_ok} shadow_5_cycle={shadow_has_5}",
            rep.absent(),
            rep.unknown(),
            rep.present().len()
        ),
    }
}

fn criterion_3() -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut disagreements = 0;
    let mut invalid = 0;
    let mut present = 0;
    let mut checks = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(3..=6);
        let r = if n == 3 { 2 } else { rng.gen_range(2..=3) };
        let m = rng.gen_range(1..=8);
        let h = random_hypergraph(&mut rng, n, r, m);
        for l in 2..=n {
            checks += 1;
            let fast = find_berge_cycle(&h, l).unwrap();
            let slow = naive_has_cycle(&h, l);
            if let Some(c) = &fast {
                present += 1;
                if !independent_validate(&h, c) || c.len() != l {
                    invalid += 1;
                }
            }
            if fast.is_some() != slow {
                disagreements += 1;
            }
        }
    }
    Report {
        pass: disagreements == 0 && invalid == 0,
        text: format!("instances=1000 length_checks={checks} present={present} disagreements={disagreements} invalid_witnesses={invalid}"),
    }
}

fn criterion_4() -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut bound_failures = 0;
    let mut equality_cases = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(3..=30);
        let s = rng.gen_range(1..=n - 2);
        let density: f64 = rng.gen();
        let a: VertexSet = (0..n).filter(|_| rng.gen_bool(density)).collect();
        let image: VertexSet = a.iter().map(|i| shift_map(i, s, n).unwrap()).collect();
        let wraps = a.contains(0) && a.contains(n - 1);
        let ok = image.len() + 1 >= a.len()
            && ((image.len() + 1 == a.len()) == wraps)
            && image == shift_image(a, s, n);
        equality_cases += usize::from(wraps);
        bound_failures += usize::from(!ok);
    }
    let mut extract_failures = 0;
    let mut attempts = 0;
    let mut hits = 0;
    let mut kinds = BTreeMap::new();
    while hits < 1000 {
        attempts += 1;
        let n = rng.gen_range(5..=30);
        let r = rng.gen_range(2..n);
        let Ok(s) = sample_planted(n, r, ExtraTarget::Total(rng.gen_range(1..=6)), &mut rng) else { continue };
        let shift = rng.gen_range(1..=n - 2);
        let g = s.frame.reoriented(rng.gen_range(0..n), rng.gen_bool(0.5));
        let Some((f, j)) = find_shift_trigger(&g, shift) else { continue };
        hits += 1;
        let kind = match (j, j + shift < n) {
            (0, _) => "case1_collapse",
            (_, true) => "case1",
            _ if j == n - shift => "case2_collapse",
            _ => "case2",
        };
        *kinds.entry(kind).or_insert(0) += 1;
        match shift_lemma_extract(&g, shift, f, j) {
            Ok(c) => {
                let src = g.to_source(&c);
                if c.len() != n - shift + 1 || !independent_validate(g.base(), &c) || !independent_validate(&s.hypergraph, &src) {
                    extract_failures += 1;
                }
            }
            Err(_) => extract_failures += 1,
        }
    }
    Report {
        pass: bound_failures == 0 && extract_failures == 0,
        text: format!(
            "triples=10000 bound_failures={bound_failures} equality_cases={equality_cases}; frames={hits} attempts={attempts} extract_failures={extract_failures} cases={kinds:?}"
        ),
    }
}

fn criterion_5() -> Report {
    let mut failures = 0;
    let mut sets_total = 0;
    let mut per_n = BTreeMap::new();
    for n in (2..=20).step_by(2) {
        for k in 1..n {
            let sets = all_ssc_sets(n, k);
            let d = gcd(n, k);
            if (n / d) % 2 != 0 && !sets.is_empty() {
                failures += 1;
            }
            let mut seen: HashMap<(usize, u64), VertexSet> = HashMap::new();
            for &a in &sets {
                sets_total += 1;
                *per_n.entry(n).or_insert(0) += 1;
                let Ok(dec) = ssc_decompose(a, k, n) else {
                    failures += 1;
                    continue;
                };
                let mut ok = dec.d == d && (n / d) % 2 == 0;
                let mut union = VertexSet::EMPTY;
                for j in 0..d {
                    let start = if a.contains(j) { j } else { j + d };
                    let expect: VertexSet = (0..n).step_by(2 * d).map(|t| (start + t) % n).collect();
                    ok &= dec.blocks[j] == expect && !union.intersects(expect);
                    union = union | expect;
                    // membership alternates along the coset j + <d>
                    let coset: Vec<usize> = (0..n / d).map(|t| (j + t * d) % n).collect();
                    ok &= coset.windows(2).all(|w| a.contains(w[0]) != a.contains(w[1]));
                }
                ok &= union == a;
                // d consecutive residues determine the set
                for w in 0..n {
                    let window: VertexSet = (0..d).map(|t| (w + t) % n).collect();
                    let key = (w, (a & window).bits());
                    if let Some(&other) = seen.get(&key) {
                        ok &= other == a;
                    } else {
                        seen.insert(key, a);
                    }
                }
                failures += usize::from(!ok);
            }
        }
    }
    Report { pass: failures == 0, text: format!("ssc_sets={sets_total} per_n={per_n:?} failures={failures}") }
}

fn criterion_6() -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut pair_invalid = 0;
    let mut pair_errors = 0;
    for _ in 0..1000 {
        let (h, ids, union) = tight_union_instance(&mut rng);
        let pairs = admissible_pairs(&mut rng, union, ids.len());
        match match_pairs_to_edges(&h, &ids, &pairs) {
            Ok(out) => {
                let mut uniq = out.clone();
                uniq.sort_unstable();
                uniq.dedup();
                let ok = uniq.len() == pairs.len()
                    && out.iter().all(|e| ids.contains(e))
                    && pairs.iter().zip(&out).all(|(&(a, b), &e)| h.edge(e).contains(a) && h.edge(e).contains(b));
                pair_invalid += usize::from(!ok);
            }
            Err(_) => pair_errors += 1,
        }
    }
    let mut pair_adversarial_accepted = 0;
    for t in 0..50 {
        let (h, ids, union) = tight_union_instance(&mut rng);
        let u = union.to_vec();
        let all_pairs: Vec<(usize, usize)> =
            u.iter().flat_map(|&a| u.iter().filter(move |&&b| b > a).map(move |&b| (a, b))).collect();
        let outside = (0..h.n()).find(|&v| !union.contains(v)).unwrap();
        let (edges, pairs) = match t % 4 {
            0 => (ids.clone(), all_pairs.iter().copied().take(ids.len() + 1).collect::<Vec<_>>()),
            1 => {
                let edges = ids[..ids.len().min(h.r())].to_vec();
                let hub = u[0];
                let pairs = u[1..].iter().take(edges.len()).map(|&b| (hub, b)).collect();
                (edges, pairs)
            }
            2 => {
                let extra = (0..h.num_edges()).find(|e| !ids.contains(e)).unwrap();
                let mut edges = ids.clone();
                edges.push(extra);
                (edges, vec![(u[0], u[1])])
            }
            _ => (ids.clone(), vec![(u[0], outside)]),
        };
        if let Ok(out) = match_pairs_to_edges(&h, &edges, &pairs) {
            let valid = out.len() == pairs.len()
                && pairs.iter().zip(&out).all(|(&(a, b), &e)| h.edge(e).contains(a) && h.edge(e).contains(b));
            pair_adversarial_accepted += 1;
            pair_invalid += usize::from(!valid);
        }
    }

    let mut lifts = 0;
    let mut lift_invalid = 0;
    let mut lift_errors = 0;
    let mut free_used = 0;
    while lifts < 1000 {
        let n = rng.gen_range(9..=14);
        let r = rng.gen_range(3..=(n - 1) / 2);
        let target = (degree_threshold(n, r).unwrap() as usize).max(3 * r);
        let s = sample_planted(n, r, ExtraTarget::MinDegree(target), &mut rng).unwrap();
        let g = build_compat_graph(&s.frame);
        let mut graphs = vec![g.clone()];
        graphs.extend(triangle_augmentations(&s.frame, &g).into_iter().take(2));
        for gg in &graphs {
            for _ in 0..4 {
                let l = rng.gen_range(3..=n);
                let Outcome::Found(d) = search_graph_cycle(gg.graph(), l, &SearchOptions::capped(200_000)).unwrap().outcome
                else {
                    continue;
                };
                lifts += 1;
                free_used += (0..l).filter(|&i| gg.is_free(d[i], d[(i + 1) % l])).count();
                match lift_graph_cycle(s.frame.base(), gg, &d) {
                    Ok(c) => {
                        let fixed_ok = (0..l).all(|i| gg.phi(d[i], d[(i + 1) % l]).map_or(true, |e| c.edge_ids[i] == e));
                        if c.len() != l || !independent_validate(s.frame.base(), &c) || !fixed_ok {
                            lift_invalid += 1;
                        }
                    }
                    Err(_) => lift_errors += 1,
                }
            }
        }
    }
    let mut lift_adversarial_accepted = 0;
    for t in 0..50 {
        let n = 10;
        let r = 4;
        let s = sample_planted(n, r, ExtraTarget::Total(12), &mut rng).unwrap();
        let h = s.frame.base();
        let accepted = match t % 3 {
            0 => {
                // a free pair without enough co-degree
                let pair = (0..n)
                    .flat_map(|x| (x + 2..n).map(move |y| (x, y)))
                    .find(|&(x, y)| s.frame.extra_codegree(x, y) < r && !(x == 0 && y == n - 1))
                    .unwrap();
                let fixed = (0..n).map(|i| ((i, (i + 1) % n), s.frame.cycle_edge(i))).collect();
                CompatGraph::new(h, fixed, vec![pair]).is_ok()
            }
            1 => {
                // phi* not injective
                CompatGraph::new(h, vec![((0, 1), s.frame.cycle_edge(0)), ((1, 2), s.frame.cycle_edge(0))], vec![]).is_ok()
            }
            _ => {
                let g = build_compat_graph(&s.frame);
                let mut d: Vec<usize> = (0..n).collect();
                d.shuffle(&mut rng);
                d.truncate(rng.gen_range(3..n));
                match lift_graph_cycle(h, &g, &d) {
                    Ok(c) => {
                        lift_invalid += usize::from(!independent_validate(h, &c));
                        !g.graph().is_cycle(&d)
                    }
                    Err(_) => false,
                }
            }
        };
        lift_adversarial_accepted += usize::from(accepted);
    }
    Report {
        pass: pair_invalid == 0
            && pair_errors == 0
            && lift_invalid == 0
            && lift_errors == 0
            && pair_adversarial_accepted == 0
            && lift_adversarial_accepted == 0,
        text: format!(
            "pairs: instances=1000 errors={pair_errors} adversarial=50 accepted={pair_adversarial_accepted}; \
             lifts: cycles={lifts} free_edges={free_used} errors={lift_errors} adversarial=50 accepted={lift_adversarial_accepted}; \
             invalid_witnesses={}",
            pair_invalid + lift_invalid
        ),
    }
}

/// Random `n`, edges inside an `(r+1)`-set `U` (each missing one vertex of
/// `U`), plus random decoy edges. Returns the hypergraph, the ids of the
/// edges inside `U` and `U`.
fn tight_union_instance(rng: &mut ChaCha8Rng) -> (Hypergraph, Vec<usize>, VertexSet) {
    let n = rng.gen_range(8..=20);
    let r = rng.gen_range(3..=n - 3);
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let union: VertexSet = vs[..=r].iter().copied().collect();
    let mut missing = union.to_vec();
    missing.shuffle(rng);
    let count = rng.gen_range(3..=r + 1);
    let mut sets: Vec<VertexSet> = missing[..count]
        .iter()
        .map(|&x| {
            let mut e = union;
            e.remove(x);
            e
        })
        .collect();
    let decoys = rng.gen_range(1..=5);
    while sets.len() < count + decoys {
        vs.shuffle(rng);
        let e: VertexSet = vs[..r].iter().copied().collect();
        if !e.is_subset(union) && !sets.contains(&e) {
            sets.push(e);
        }
    }
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.shuffle(rng);
    let shuffled: Vec<VertexSet> = order.iter().map(|&i| sets[i]).collect();
    let ids = (0..sets.len()).filter(|&p| order[p] < count).collect();
    (Hypergraph::from_sets(n, r, shuffled).unwrap(), ids, union)
}

/// Distinct pairs in `union`, at most `edges` of them, no vertex in more
/// than `edges - 1`.
fn admissible_pairs(rng: &mut ChaCha8Rng, union: VertexSet, edges: usize) -> Vec<(usize, usize)> {
    let u = union.to_vec();
    let mut all: Vec<(usize, usize)> = u.iter().flat_map(|&a| u.iter().filter(move |&&b| b > a).map(move |&b| (a, b))).collect();
    all.shuffle(rng);
    let want = rng.gen_range(1..=edges);
    let mut load: HashMap<usize, usize> = HashMap::new();
    let mut out = Vec::new();
    for (a, b) in all {
        if out.len() == want {
            break;
        }
        if load.get(&a).copied().unwrap_or(0) + 1 < edges && load.get(&b).copied().unwrap_or(0) + 1 < edges {
            *load.entry(a).or_insert(0) += 1;
            *load.entry(b).or_insert(0) += 1;
            out.push((a, b));
        }
    }
    out
}

fn criterion_7() -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let opts = ExtractOptions { allow_fallback: true, ..ExtractOptions::default() };
    let mut lengths = 0;
    let mut invalid = 0;
    let mut errors = Vec::new();
    let mut fallback = 0;
    let mut spot = (0, 0, 0, 0); // checked, found, absent, unknown
    let mut branches: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    let mut regen = 0;
    for i in 0..200 {
        let n = 10 + i % 15;
        let mut regimes = vec![Regime::Chords];
        if n % 2 == 0 {
            regimes.extend([Regime::Half, Regime::EvenNear]);
        } else {
            regimes.push(Regime::OddNear);
        }
        if n >= SMALL_REGIME_MIN_N {
            regimes.push(Regime::Small);
        }
        let regime = regimes[(i / 15) % regimes.len()];
        let r = match regime {
            Regime::Chords => rng.gen_range(n / 2 + 1..n - 1),
            Regime::Half => n / 2,
            Regime::OddNear => (n - 1) / 2,
            Regime::EvenNear => n / 2 - 1,
            Regime::Small => (n - 1) / 2 - 1,
        };
        let (h, frame) = loop {
            let (h, f) = regime_frame(&mut rng, n, r, i / 15);
            if check_hypotheses(&f).is_ok() {
                break (h, f);
            }
            regen += 1;
        };
        let ex = Extractor::new(&frame, opts).unwrap();
        let tally = branches.entry(format!("{regime:?}")).or_default();
        for l in 2..=n {
            lengths += 1;
            match ex.extract(l) {
                Ok(rec) => {
                    *tally.entry(rec.branch.to_string()).or_insert(0) += 1;
                    fallback += usize::from(rec.branch == Branch::OracleFallback);
                    if rec.witness.len() != l || !independent_validate(&h, &rec.witness) {
                        invalid += 1;
                    }
                }
                Err(e) => errors.push(format!("n={n} r={r} l={l}: {e}")),
            }
            if lengths % SPOT_CHECK_EVERY == 0 {
                spot.0 += 1;
                match search_berge_cycle(&h, l, &SearchOptions::capped(SPOT_CHECK_CAP)).unwrap().outcome {
                    Outcome::Found(c) => {
                        spot.1 += 1;
                        invalid += usize::from(!independent_validate(&h, &c));
                    }
                    Outcome::Absent => spot.2 += 1,
                    Outcome::Unknown => spot.3 += 1,
                }
            }
        }
    }
    let fraction = fallback as f64 / lengths as f64;
    Report {
        pass: invalid == 0 && errors.is_empty() && spot.1 == spot.0 && fraction < MAX_FALLBACK_FRACTION,
        text: format!(
            "frames=200 regenerated={regen} lengths={lengths} invalid={invalid} errors={} first_errors={:?} \
             fallback={fallback} ({:.4} < {MAX_FALLBACK_FRACTION}) spot_checked={} confirmed={} absent={} unknown={} branches={branches:?}",
            errors.len(),
            errors.iter().take(3).collect::<Vec<_>>(),
            fraction,
            spot.0,
            spot.1,
            spot.2,
            spot.3
        ),
    }
}

type Criterion = fn() -> Report;

const CRITERIA: [(&str, Criterion); 7] = [
    ("sharpness of thresholds", criterion_1),
    ("necklace spectrum gap", criterion_2),
    ("oracle completeness", criterion_3),
    ("shift lemma properties", criterion_4),
    ("ssc structure", criterion_5),
    ("matching suites", criterion_6),
    ("end-to-end constructive pancyclicity", criterion_7),
];

#[test]
fn acceptance() {
    let mut all_pass = true;
    let mut first = Vec::new();
    for (i, (name, run)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let rep = run();
        let took = start.elapsed();
        let budget = Duration::from_secs(BUDGETS_SECS[i]);
        let pass = rep.pass && took <= budget;
        all_pass &= pass;
        println!(
            "criterion {} [{name}]: {} in {:.2}s (budget {}s): {}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            budget.as_secs(),
            rep.text
        );
        first.push(rep.text);
    }
    let start = Instant::now();
    let mismatched: Vec<usize> = CRITERIA
        .iter()
        .enumerate()
        .filter(|(i, (_, run))| run().text != first[*i])
        .map(|(i, _)| i + 1)
        .collect();
    let pass = mismatched.is_empty();
    all_pass &= pass;
    println!(
        "criterion 8 [determinism]: {} in {:.2}s: reran 1-7, mismatched reports {:?}",
        if pass { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64(),
        mismatched
    );
    assert!(all_pass, "at least one acceptance criterion failed");
}
