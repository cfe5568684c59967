//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if any fails. Runs without the libtest harness so the lines stay in order.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use branchpair::branchings::{
    count_out_branchings, enumerate_in_branchings, enumerate_out_branchings, find_good_pair,
    find_strong_arc_decomposition, good_pair_matrix,
};
use branchpair::catalog::{all_keys, build, build_ce2_instance, build_s4, build_structure_ce1, CatalogKey, Ce1Variant};
use branchpair::connectivity::{arc_strong_connectivity, is_k_arc_strong_bruteforce};
use branchpair::constructions::constructive_good_pair;
use branchpair::digraph::{recognize_semicomplete_split, Digraph, VertexId};
use branchpair::limits::Limits;
use branchpair::verify::{randomized_check, verify_catalog, Scope};
use num_bigint::BigUint;

use common::{arc_list, check_pair, is_good_pair, random_digraph, seeded_rng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn within(limit: Duration, started: Instant) -> Result<String, String> {
    let took = started.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(format!("{:.0} ms", took.as_secs_f64() * 1000.0))
}

fn ids(d: &Digraph, arcs: &str) -> Vec<usize> {
    arcs.split_whitespace()
        .map(|token| {
            let (t, h) = token.split_at(2);
            d.arc_by_labels(t, h).unwrap_or_else(|| panic!("no arc {token}")).0
        })
        .collect()
}

fn s4_and_multigraphs() -> Vec<(String, Digraph)> {
    std::iter::once(CatalogKey::S4)
        .chain((1..=6).map(CatalogKey::S4Multi))
        .map(|key| (key.slug(), build(key).expect("catalog builds")))
        .collect()
}

fn appendix() -> Vec<(String, Digraph)> {
    (1..=16)
        .map(CatalogKey::Appendix)
        .map(|key| (key.slug(), build(key).expect("catalog builds")))
        .collect()
}

fn whole_catalog() -> Vec<(String, Digraph)> {
    all_keys()
        .into_iter()
        .map(|key| (key.slug(), build(key).expect("catalog builds")))
        .collect()
}

fn s4_completeness() -> Outcome {
    let started = Instant::now();
    let d = build_s4();
    let matrix = good_pair_matrix(&d);
    ensure(matrix.good_count() == 16, || format!("{}/16 good", matrix.good_count()))?;
    for cell in matrix.cells().iter().flatten() {
        let pair = cell.as_ref().expect("all good");
        ensure(check_pair(&d, pair), || {
            "matrix certificate rejected by the oracle".into()
        })?;
    }
    let written = [
        ("v1", "v1", "v1v2 v2v3 v3v4", "v2v4 v4v1 v3v1"),
        ("v1", "v2", "v1v3 v3v4 v4v2", "v3v1 v4v1 v1v2"),
        ("v2", "v1", "v2v4 v4v1 v1v3", "v4v2 v2v3 v3v1"),
        ("v1", "v3", "v1v3 v3v4 v4v2", "v4v1 v1v2 v2v3"),
    ];
    for (u, v, out, inn) in written {
        let (u, v) = (d.resolve(u).unwrap().0, d.resolve(v).unwrap().0);
        ensure(is_good_pair(&d, u, v, &ids(&d, out), &ids(&d, inn)), || {
            format!("certificate ({u},{v}) does not validate")
        })?;
    }
    within(Duration::from_secs(1), started).map(|t| format!("16/16 good, 4 certificates verbatim, {t}"))
}

fn s4_non_decomposable() -> Outcome {
    let started = Instant::now();
    for (name, d) in s4_and_multigraphs() {
        let found = find_strong_arc_decomposition(&d).map_err(|e| e.to_string())?;
        ensure(found.is_none(), || format!("{name} has a strong arc decomposition"))?;
    }
    within(Duration::from_secs(5), started).map(|t| format!("S4 and 6 multigraphs: none, {t}"))
}

fn appendix_reproduction() -> Outcome {
    let started = Instant::now();
    let reports = verify_catalog(Scope::Paper16).map_err(|e| e.to_string())?;
    ensure(reports.len() == 16, || format!("{} reports", reports.len()))?;
    let mut sizes = (0, 0);
    for r in &reports {
        ensure(r.all_good && r.passed(), || format!("{}: {:?}", r.graph, r.failures))?;
        match r.n {
            5 => sizes.0 += 1,
            6 => sizes.1 += 1,
            n => return Err(format!("{} has {n} vertices", r.graph)),
        }
    }
    ensure(sizes == (5, 11), || format!("{sizes:?} graphs of order 5/6"))?;
    let status = Command::new(env!("CARGO_BIN_EXE_branchpair"))
        .args(["verify-catalog", "--scope", "paper16"])
        .output()
        .map_err(|e| e.to_string())?
        .status;
    ensure(status.success(), || format!("CLI exited with {status}"))?;
    within(Duration::from_secs(60), started).map(|t| format!("5x25 + 11x36 all good, CLI exit 0, {t}"))
}

fn all_combinations() -> Outcome {
    let started = Instant::now();
    let reports = verify_catalog(Scope::AllCombinations).map_err(|e| e.to_string())?;
    let combos: Vec<_> = reports.iter().filter(|r| r.graph.starts_with("combo_")).collect();
    ensure(combos.len() == 50, || format!("{} combinations", combos.len()))?;
    for r in &reports {
        ensure(r.all_good && r.passed(), || format!("{}: {:?}", r.graph, r.failures))?;
    }
    ensure(combos.iter().all(|r| r.n == 6), || {
        "a combination is not of order 6".into()
    })?;
    within(Duration::from_secs(300), started).map(|t| format!("50 x 36/36, {t}"))
}

fn constructive_matches() -> Outcome {
    let mut pairs = 0;
    for key in Scope::AllCombinations.keys() {
        let d = build(key).map_err(|e| e.to_string())?;
        for u in d.vertices() {
            for v in d.vertices() {
                let exhaustive = find_good_pair(&d, u, v).map_err(|e| e.to_string())?.is_some();
                let built = constructive_good_pair(key, &d, u, v).map_err(|e| e.to_string())?;
                let Some(pair) = built else {
                    return Err(format!(
                        "{} ({},{}): nothing constructed",
                        key.slug(),
                        d.name(u),
                        d.name(v)
                    ));
                };
                ensure(
                    check_pair(&d, &pair) && pair.out_root() == u && pair.in_root() == v,
                    || format!("{} ({},{}): invalid construction", key.slug(), d.name(u), d.name(v)),
                )?;
                ensure(exhaustive, || {
                    format!("{} ({},{}): verdicts disagree", key.slug(), d.name(u), d.name(v))
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, 0 disagreements"))
}

fn connectivity_ground_truth() -> Outcome {
    let mut graphs = s4_and_multigraphs();
    graphs.extend(appendix());
    let catalog_count = graphs.len();
    for (name, d) in &graphs {
        let k = arc_strong_connectivity(d).k;
        ensure(k == 2, || format!("{name}: k = {k}"))?;
    }
    let mut rng = seeded_rng();
    for i in 0..200 {
        let n = 2 + i % 5;
        graphs.push((
            format!("random #{i}"),
            random_digraph(&mut rng, n, 2 * n * (n - 1), i % 2 == 1),
        ));
    }
    let limits = Limits::default();
    let mut checks = 0;
    for (name, d) in &graphs {
        let cert = arc_strong_connectivity(d);
        ensure(cert.witness_is_valid(d), || format!("{name}: bad witness cut"))?;
        for k in 1..=3 {
            let brute = is_k_arc_strong_bruteforce(d, k, &limits).map_err(|e| e.to_string())?;
            ensure((cert.k >= k) == brute, || {
                format!("{name}: flow k={} vs brute force at {k}", cert.k)
            })?;
            checks += 1;
        }
    }
    Ok(format!(
        "k=2 on {catalog_count} catalog graphs, {checks} flow/brute-force checks agree"
    ))
}

fn counting_cross_check() -> Outcome {
    let mut roots = 0;
    for (name, d) in whole_catalog() {
        let reversed = d.reverse();
        for r in d.vertices() {
            let out = BigUint::from(enumerate_out_branchings(&d, r).len());
            ensure(out == count_out_branchings(&d, r), || {
                format!("{name} out at {}", d.name(r))
            })?;
            let inn = BigUint::from(enumerate_in_branchings(&d, r).len());
            ensure(inn == count_out_branchings(&reversed, r), || {
                format!("{name} in at {}", d.name(r))
            })?;
            roots += 1;
        }
    }
    Ok(format!("{roots} roots, out and in counts equal"))
}

fn split_structures() -> Outcome {
    let ce2 = build_ce2_instance();
    ensure(recognize_semicomplete_split(&ce2).is_none(), || {
        "ce2 instance recognized as split".into()
    })?;
    ensure(!common::is_semicomplete_split(ce2.n(), &arc_list(&ce2)), || {
        "oracle finds a split partition".into()
    })?;
    let ce1 = build_structure_ce1(Ce1Variant::V1Pair);
    let good = good_pair_matrix(&ce1).good_count();
    ensure(good == 25, || format!("ce1 V1 pair: {good}/25"))?;
    Ok("ce2 not split, ce1 V1 pair 25/25".into())
}

fn reversal_duality() -> Outcome {
    let mut pairs = 0;
    for (name, d) in whole_catalog() {
        let r = d.reverse();
        for u in d.vertices() {
            for v in d.vertices() {
                let forward = find_good_pair(&d, u, v).map_err(|e| e.to_string())?.is_some();
                let backward = find_good_pair(&r, v, u).map_err(|e| e.to_string())?.is_some();
                ensure(forward == backward, || format!("{name} ({},{})", d.name(u), d.name(v)))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, 0 disagreements"))
}

fn randomized_soundness() -> Outcome {
    let mut set = 0;
    for (name, d) in appendix() {
        let report = randomized_check(&d, 2000, 124);
        let exact = good_pair_matrix(&d).to_bools();
        for (i, row) in report.matrix.iter().enumerate() {
            for (j, &cell) in row.iter().enumerate() {
                ensure(!cell || exact[i][j], || {
                    format!(
                        "{name} ({},{}) set without a pair",
                        d.name(VertexId(i)),
                        d.name(VertexId(j))
                    )
                })?;
                set += usize::from(cell);
            }
        }
    }
    Ok(format!("{set} cells set, none spurious"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("S4 good-pair completeness", s4_completeness),
        ("S4 non-decomposability", s4_non_decomposable),
        ("appendix reproduction", appendix_reproduction),
        ("all combinations", all_combinations),
        ("constructive = exhaustive", constructive_matches),
        ("connectivity ground truth", connectivity_ground_truth),
        ("counting cross-check", counting_cross_check),
        ("split structures", split_structures),
        ("reversal duality", reversal_duality),
        ("randomized soundness", randomized_soundness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail})", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({reason})", i + 1);
            }
        }
    }
    println!("{}/10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
