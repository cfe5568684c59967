//! Monte Carlo good-pair check in the style of the original script: sample a
//! uniform spanning tree of the underlying multigraph, keep it if it is an
//! in-branching at the in-root, and test the remaining arcs for an
//! out-branching at the out-root. One-sided: a cell is only set together
//! with a validated certificate.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{base_report, certificate_json, millis, pair_key, Mode, VerificationReport};
use crate::branchings::{
    extract_out_branching, validate_branching, validate_good_pair, Branching, Direction, GoodPair,
};
use crate::digraph::{ArcId, Digraph, VertexId};

/// Uniform spanning tree of the underlying undirected multigraph (parallel
/// and antiparallel arcs count as separate edges), by Wilson's algorithm
/// rooted at vertex 0. Arc ids in insertion order of the walk; empty when
/// the underlying graph is disconnected or trivial.
pub fn sample_spanning_tree<R: Rng + ?Sized>(d: &Digraph, rng: &mut R) -> Vec<ArcId> {
    let n = d.n();
    if n <= 1 {
        return Vec::new();
    }
    let incident: Vec<Vec<ArcId>> = d
        .vertices()
        .map(|v| d.out_arcs(v).iter().chain(d.in_arcs(v)).copied().collect())
        .collect();
    if incident.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let other = |a: ArcId, from: VertexId| {
        let arc = d.arc(a);
        if arc.tail == from {
            arc.head
        } else {
            arc.tail
        }
    };

    let mut in_tree = vec![false; n];
    in_tree[0] = true;
    let mut next: Vec<Option<(ArcId, VertexId)>> = vec![None; n];
    let mut tree = Vec::with_capacity(n - 1);
    // a walk in a disconnected graph never hits the tree; bound it
    let step_limit = 64 * n * n * d.arc_count().max(1);
    for start in 1..n {
        let mut x = VertexId(start);
        let mut steps = 0;
        while !in_tree[x.0] {
            let choices = &incident[x.0];
            let a = choices[rng.random_range(0..choices.len())];
            let y = other(a, x);
            next[x.0] = Some((a, y));
            x = y;
            steps += 1;
            if steps > step_limit {
                return Vec::new();
            }
        }
        let mut x = VertexId(start);
        while !in_tree[x.0] {
            in_tree[x.0] = true;
            let (a, y) = next[x.0].expect("walk recorded");
            tree.push(a);
            x = y;
        }
    }
    tree
}

/// Randomized good-pair matrix. Cell `(out_root, in_root)` draws up to
/// `samples` trees from its own stream of a ChaCha8 generator seeded with
/// `seed`, so cells do not influence each other.
pub fn randomized_check(d: &Digraph, samples: u64, seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut report = base_report("user", d, Mode::Randomized { seed, samples });
    let n = d.n();
    let t = Instant::now();
    let mut matrix = vec![vec![false; n]; n];
    let mut certificates = BTreeMap::new();
    let mut usable = vec![true; d.arc_count()];

    for out_root in d.vertices() {
        for in_root in d.vertices() {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream((out_root.0 * n + in_root.0) as u64);
            for _ in 0..samples {
                let tree = sample_spanning_tree(d, &mut rng);
                if tree.len() + 1 != n {
                    continue;
                }
                let in_branching = Branching::new(in_root, Direction::In, tree);
                if !validate_branching(d, &in_branching).unwrap_or(false) {
                    continue;
                }
                usable.iter_mut().for_each(|u| *u = true);
                for &a in &in_branching.arcs {
                    usable[a.0] = false;
                }
                let Some(out_branching) = extract_out_branching(d, out_root, &usable) else {
                    continue;
                };
                let pair = GoodPair {
                    out_branching,
                    in_branching,
                };
                if validate_good_pair(d, &pair).unwrap_or(false) {
                    matrix[out_root.0][in_root.0] = true;
                    certificates.insert(pair_key(d, &pair), certificate_json(d, &pair));
                    break;
                }
            }
        }
    }

    report.timing.matrix_ms = millis(t);
    report.all_good = matrix.iter().flatten().all(|&c| c);
    report.matrix = matrix;
    report.certificates = Some(certificates);
    report.runtime_ms = millis(start);
    report
}
