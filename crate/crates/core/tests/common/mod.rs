//! Independent reference implementations used to check the library. They
//! work on plain `(tail, head)` lists and share no code with the crate.

#![allow(dead_code)]

use branchpair::digraph::Digraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed for every randomly generated digraph in the test suites.
pub const SEED: u64 = 124;

pub fn arc_list(d: &Digraph) -> Vec<(usize, usize)> {
    d.arcs().iter().map(|a| (a.tail.0, a.head.0)).collect()
}

/// Reachability matrix by repeated relaxation (Warshall).
pub fn closure(n: usize, arcs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(t, h) in arcs {
        r[t][h] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                let via = r[k].clone();
                for (reach, through) in r[i].iter_mut().zip(via) {
                    *reach |= through;
                }
            }
        }
    }
    r
}

pub fn strong(n: usize, arcs: &[(usize, usize)]) -> bool {
    closure(n, arcs).iter().all(|row| row.iter().all(|&x| x))
}

/// Out-branching check straight from the definition: n - 1 arcs, one arc
/// into every non-root vertex, none into the root, all reachable.
pub fn is_out_branching(n: usize, root: usize, arcs: &[(usize, usize)]) -> bool {
    if arcs.len() + 1 != n {
        return false;
    }
    let mut indeg = vec![0; n];
    for &(_, h) in arcs {
        indeg[h] += 1;
    }
    if (0..n).any(|v| indeg[v] != usize::from(v != root)) {
        return false;
    }
    closure(n, arcs)[root].iter().all(|&x| x)
}

pub fn is_in_branching(n: usize, root: usize, arcs: &[(usize, usize)]) -> bool {
    let flipped: Vec<(usize, usize)> = arcs.iter().map(|&(t, h)| (h, t)).collect();
    is_out_branching(n, root, &flipped)
}

/// Good-pair check on arc ids: distinct ids, disjoint, both branchings.
pub fn is_good_pair(d: &Digraph, out_root: usize, in_root: usize, out_ids: &[usize], in_ids: &[usize]) -> bool {
    let all = arc_list(d);
    if out_ids.iter().chain(in_ids).any(|&a| a >= all.len()) {
        return false;
    }
    let mut ids: Vec<usize> = out_ids.iter().chain(in_ids).copied().collect();
    ids.sort_unstable();
    let len = ids.len();
    ids.dedup();
    if ids.len() != len {
        return false;
    }
    let pick = |list: &[usize]| list.iter().map(|&a| all[a]).collect::<Vec<_>>();
    is_out_branching(d.n(), out_root, &pick(out_ids)) && is_in_branching(d.n(), in_root, &pick(in_ids))
}

pub fn pair_ids(pair: &branchpair::branchings::GoodPair) -> (Vec<usize>, Vec<usize>) {
    (
        pair.out_branching.arcs.iter().map(|a| a.0).collect(),
        pair.in_branching.arcs.iter().map(|a| a.0).collect(),
    )
}

pub fn check_pair(d: &Digraph, pair: &branchpair::branchings::GoodPair) -> bool {
    let (out_ids, in_ids) = pair_ids(pair);
    is_good_pair(d, pair.out_root().0, pair.in_root().0, &out_ids, &in_ids)
}

/// k-arc-strong by removing every arc subset of size < k (plain bitmask loop).
pub fn k_arc_strong(n: usize, arcs: &[(usize, usize)], k: u32) -> bool {
    let m = arcs.len();
    assert!(m < 32, "oracle is for small digraphs");
    (0u32..1 << m).filter(|mask| mask.count_ones() < k).all(|mask| {
        let kept: Vec<(usize, usize)> = (0..m).filter(|i| mask >> i & 1 == 0).map(|i| arcs[i]).collect();
        strong(n, &kept)
    })
}

/// Largest k with k-arc-strong (0 when not strong).
pub fn arc_strong_connectivity(n: usize, arcs: &[(usize, usize)]) -> u32 {
    if n <= 1 {
        return 0;
    }
    let mut k = 0;
    while k_arc_strong(n, arcs, k + 1) {
        k += 1;
    }
    k
}

/// All bipartitions, no pruning.
pub fn has_strong_arc_decomposition(n: usize, arcs: &[(usize, usize)]) -> bool {
    let m = arcs.len();
    (1u32..(1 << m) - 1).any(|mask| {
        let (a, b): (Vec<_>, Vec<_>) = (0..m).partition(|i| mask >> i & 1 == 1);
        let side = |ids: Vec<usize>| ids.into_iter().map(|i| arcs[i]).collect::<Vec<_>>();
        strong(n, &side(a)) && strong(n, &side(b))
    })
}

/// Semicomplete split recognition by trying every V1.
pub fn is_semicomplete_split(n: usize, arcs: &[(usize, usize)]) -> bool {
    let adjacent = |x: usize, y: usize| arcs.iter().any(|&(t, h)| (t, h) == (x, y) || (t, h) == (y, x));
    (1u32..(1 << n) - 1).any(|mask| {
        let in_v1 = |v: usize| mask >> v & 1 == 1;
        (0..n).all(|x| {
            (0..n).filter(|&y| y > x).all(|y| match (in_v1(x), in_v1(y)) {
                (true, true) => !adjacent(x, y),
                _ => adjacent(x, y),
            })
        })
    })
}

/// Good pair existence by trying every pair of arc subsets of size n - 1.
pub fn good_pair_exists(d: &Digraph, u: usize, v: usize) -> bool {
    let arcs = arc_list(d);
    let n = d.n();
    let m = arcs.len();
    let subsets: Vec<Vec<usize>> = (0u32..1 << m)
        .filter(|mask| mask.count_ones() as usize + 1 == n)
        .map(|mask| (0..m).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    let pick = |ids: &[usize]| ids.iter().map(|&i| arcs[i]).collect::<Vec<_>>();
    let outs: Vec<&Vec<usize>> = subsets.iter().filter(|s| is_out_branching(n, u, &pick(s))).collect();
    let ins: Vec<&Vec<usize>> = subsets.iter().filter(|s| is_in_branching(n, v, &pick(s))).collect();
    outs.iter()
        .any(|o| ins.iter().any(|i| i.iter().all(|a| !o.contains(a))))
}

/// Random loopless digraph, optionally with parallel arcs.
pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, max_arcs: usize, multigraph: bool) -> Digraph {
    let mut arcs = Vec::new();
    let m = rng.random_range(0..=max_arcs);
    for _ in 0..m {
        let t = rng.random_range(0..n);
        let h = rng.random_range(0..n);
        if t == h || (!multigraph && arcs.contains(&(t, h))) {
            continue;
        }
        arcs.push((t, h));
    }
    Digraph::new(n, &arcs, !multigraph).expect("valid by construction")
}

pub fn seeded_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}
