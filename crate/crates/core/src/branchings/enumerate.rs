use std::ops::ControlFlow;

use super::{Branching, Direction};
use crate::connectivity::reach;
use crate::digraph::{ArcId, Digraph, VertexId};

/// Calls `visit` with the arc set (sorted by id) of every spanning
/// out-branching rooted at `root`, each exactly once.
///
/// Non-root vertices pick their entering arc in vertex order, candidates in
/// arc-id order; a choice that closes a cycle is pruned immediately. The
/// visiting order is therefore lexicographic in the per-vertex choices.
pub fn for_each_out_branching<F>(d: &Digraph, root: VertexId, mut visit: F)
where
    F: FnMut(&[ArcId]) -> ControlFlow<()>,
{
    if root.0 >= d.n() || !reach(d, root, true, |_| true).iter().all(|&r| r) {
        return;
    }
    let n = d.n();
    let order: Vec<VertexId> = d.vertices().filter(|&v| v != root).collect();
    let mut candidates: Vec<Vec<ArcId>> = vec![Vec::new(); n];
    for &v in &order {
        let mut c: Vec<ArcId> = d.in_arcs(v).to_vec();
        c.sort_unstable();
        candidates[v.0] = c;
    }
    let mut parent: Vec<Option<VertexId>> = vec![None; n];
    let mut chosen: Vec<ArcId> = Vec::with_capacity(n.saturating_sub(1));
    let mut scratch = Vec::with_capacity(n);
    let _ = descend(
        d,
        root,
        &order,
        &candidates,
        &mut parent,
        &mut chosen,
        &mut scratch,
        &mut visit,
    );
}

#[allow(clippy::too_many_arguments)]
fn descend<F>(
    d: &Digraph,
    root: VertexId,
    order: &[VertexId],
    candidates: &[Vec<ArcId>],
    parent: &mut [Option<VertexId>],
    chosen: &mut Vec<ArcId>,
    scratch: &mut Vec<ArcId>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[ArcId]) -> ControlFlow<()>,
{
    let Some((&v, rest)) = order.split_first() else {
        scratch.clear();
        scratch.extend_from_slice(chosen);
        scratch.sort_unstable();
        return visit(scratch);
    };
    for &a in &candidates[v.0] {
        let tail = d.arc(a).tail;
        if closes_cycle(parent, root, v, tail) {
            continue;
        }
        parent[v.0] = Some(tail);
        chosen.push(a);
        let flow = descend(d, root, rest, candidates, parent, chosen, scratch, visit);
        chosen.pop();
        parent[v.0] = None;
        flow?;
    }
    ControlFlow::Continue(())
}

/// Following parents up from `tail` returns to `v`.
fn closes_cycle(parent: &[Option<VertexId>], root: VertexId, v: VertexId, tail: VertexId) -> bool {
    let mut x = tail;
    loop {
        if x == v {
            return true;
        }
        if x == root {
            return false;
        }
        match parent[x.0] {
            Some(p) => x = p,
            None => return false,
        }
    }
}

pub fn enumerate_out_branchings(d: &Digraph, root: VertexId) -> Vec<Branching> {
    let mut all = Vec::new();
    for_each_out_branching(d, root, |arcs| {
        all.push(Branching::new(root, Direction::Out, arcs.to_vec()));
        ControlFlow::Continue(())
    });
    all
}

/// In-branchings of `d` are the out-branchings of `reverse(d)` with the
/// same arc ids.
pub fn enumerate_in_branchings(d: &Digraph, root: VertexId) -> Vec<Branching> {
    enumerate_out_branchings(&d.reverse(), root)
        .into_iter()
        .map(|b| b.reversed())
        .collect()
}
