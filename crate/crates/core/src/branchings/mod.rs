//! Out-/in-branchings, good pairs and strong arc decompositions.

mod count;
mod decompose;
mod enumerate;

use std::collections::VecDeque;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::connectivity::{is_strong_with, reach};
use crate::digraph::{ArcId, Digraph, VertexId};
use crate::error::{Error, Result};

pub use count::count_out_branchings;
pub use decompose::{find_strong_arc_decomposition, find_strong_arc_decomposition_with, ArcDecomposition};
pub use enumerate::{enumerate_in_branchings, enumerate_out_branchings, for_each_out_branching};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Out,
    In,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Branching {
    pub root: VertexId,
    pub direction: Direction,
    /// Sorted by id.
    pub arcs: Vec<ArcId>,
}

impl Branching {
    pub fn new(root: VertexId, direction: Direction, mut arcs: Vec<ArcId>) -> Self {
        arcs.sort_unstable();
        Branching { root, direction, arcs }
    }

    pub fn contains(&self, arc: ArcId) -> bool {
        self.arcs.binary_search(&arc).is_ok()
    }

    /// The same arc set read in `reverse(d)`: an out-branching becomes an
    /// in-branching with the same root and vice versa.
    pub fn reversed(&self) -> Branching {
        Branching {
            root: self.root,
            direction: match self.direction {
                Direction::Out => Direction::In,
                Direction::In => Direction::Out,
            },
            arcs: self.arcs.clone(),
        }
    }
}

/// Arc-disjoint out-branching and in-branching.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GoodPair {
    pub out_branching: Branching,
    pub in_branching: Branching,
}

impl GoodPair {
    pub fn out_root(&self) -> VertexId {
        self.out_branching.root
    }

    pub fn in_root(&self) -> VertexId {
        self.in_branching.root
    }

    /// The pair as seen in `reverse(d)`, with the roles swapped.
    pub fn reversed(&self) -> GoodPair {
        GoodPair {
            out_branching: self.in_branching.reversed(),
            in_branching: self.out_branching.reversed(),
        }
    }
}

/// True iff `b` is a spanning out- or in-branching of `d` rooted at `b.root`.
pub fn validate_branching(d: &Digraph, b: &Branching) -> Result<bool> {
    if let Some(bad) = b.arcs.iter().find(|&&a| !d.contains_arc(a)) {
        return Err(Error::Validation(format!("unknown arc id {bad}")));
    }
    if b.root.0 >= d.n() {
        return Err(Error::Validation(format!("unknown root {}", b.root)));
    }
    if b.arcs.len() + 1 != d.n() {
        return Ok(false);
    }
    let mut sorted = b.arcs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != b.arcs.len() {
        return Ok(false);
    }

    // each non-root vertex has exactly one tree arc on the side facing the root
    let mut count = vec![0usize; d.n()];
    for &a in &b.arcs {
        let arc = d.arc(a);
        let v = match b.direction {
            Direction::Out => arc.head,
            Direction::In => arc.tail,
        };
        count[v.0] += 1;
    }
    let degrees_ok = d.vertices().all(|v| count[v.0] == usize::from(v != b.root));
    if !degrees_ok {
        return Ok(false);
    }

    let forward = b.direction == Direction::Out;
    let reached = reach(d, b.root, forward, |a| sorted.binary_search(&a).is_ok());
    Ok(reached.iter().all(|&r| r))
}

pub fn validate_good_pair(d: &Digraph, pair: &GoodPair) -> Result<bool> {
    if pair.out_branching.direction != Direction::Out || pair.in_branching.direction != Direction::In {
        return Ok(false);
    }
    let disjoint = pair.out_branching.arcs.iter().all(|&a| !pair.in_branching.contains(a));
    Ok(disjoint && validate_branching(d, &pair.out_branching)? && validate_branching(d, &pair.in_branching)?)
}

fn check_vertex(d: &Digraph, v: VertexId) -> Result<()> {
    if v.0 < d.n() {
        Ok(())
    } else {
        Err(Error::Argument(format!(
            "vertex {} not in a digraph on {} vertices",
            v.0,
            d.n()
        )))
    }
}

/// In-branching rooted at `root` inside the arcs `usable` marks, or `None`
/// when some vertex cannot reach `root`. Vertices are attached in
/// breadth-first order of a backward search, each through its smallest-id
/// usable arc into an already attached vertex.
fn extract_in_branching(d: &Digraph, root: VertexId, usable: &[bool]) -> Option<Branching> {
    let mut attached = vec![false; d.n()];
    let mut queue = VecDeque::new();
    let mut arcs = Vec::with_capacity(d.n().saturating_sub(1));
    attached[root.0] = true;
    queue.push_back(root);
    while let Some(x) = queue.pop_front() {
        let mut incoming: Vec<ArcId> = d.in_arcs(x).iter().copied().filter(|a| usable[a.0]).collect();
        incoming.sort_unstable();
        for a in incoming {
            let y = d.arc(a).tail;
            if !attached[y.0] {
                attached[y.0] = true;
                arcs.push(a);
                queue.push_back(y);
            }
        }
    }
    attached
        .iter()
        .all(|&x| x)
        .then(|| Branching::new(root, Direction::In, arcs))
}

/// Out-branching rooted at `root` inside `usable`, attached the same way.
pub(crate) fn extract_out_branching(d: &Digraph, root: VertexId, usable: &[bool]) -> Option<Branching> {
    extract_in_branching(&d.reverse(), root, usable).map(|b| b.reversed())
}

/// Exact good-pair decision. Out-branchings rooted at `u` are tried in
/// enumeration order; the first whose complement lets every vertex reach
/// `v` yields the pair.
pub fn find_good_pair(d: &Digraph, u: VertexId, v: VertexId) -> Result<Option<GoodPair>> {
    check_vertex(d, u)?;
    check_vertex(d, v)?;
    let mut found = None;
    let mut usable = vec![true; d.arc_count()];
    for_each_out_branching(d, u, |out_arcs| {
        usable.iter_mut().for_each(|x| *x = true);
        for &a in out_arcs {
            usable[a.0] = false;
        }
        match extract_in_branching(d, v, &usable) {
            Some(in_branching) => {
                found = Some(GoodPair {
                    out_branching: Branching::new(u, Direction::Out, out_arcs.to_vec()),
                    in_branching,
                });
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    Ok(found)
}

/// Good-pair results for all ordered pairs; row = out-root, column = in-root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodPairMatrix {
    cells: Vec<Vec<Option<GoodPair>>>,
}

impl GoodPairMatrix {
    pub fn from_cells(cells: Vec<Vec<Option<GoodPair>>>) -> Self {
        GoodPairMatrix { cells }
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    pub fn get(&self, out_root: VertexId, in_root: VertexId) -> Option<&GoodPair> {
        self.cells[out_root.0][in_root.0].as_ref()
    }

    pub fn is_good(&self, out_root: VertexId, in_root: VertexId) -> bool {
        self.cells[out_root.0][in_root.0].is_some()
    }

    pub fn to_bools(&self) -> Vec<Vec<bool>> {
        self.cells
            .iter()
            .map(|row| row.iter().map(Option::is_some).collect())
            .collect()
    }

    pub fn good_count(&self) -> usize {
        self.cells.iter().flatten().filter(|c| c.is_some()).count()
    }

    pub fn all_good(&self) -> bool {
        self.cells.iter().flatten().all(Option::is_some)
    }

    pub fn cells(&self) -> &[Vec<Option<GoodPair>>] {
        &self.cells
    }
}

/// Every cell equals `find_good_pair(d, u, v)`. Each out-branching at `u`
/// is enumerated once and tested against all in-roots still open.
pub fn good_pair_matrix(d: &Digraph) -> GoodPairMatrix {
    let n = d.n();
    let mut cells = vec![vec![None; n]; n];
    let mut usable = vec![true; d.arc_count()];
    for u in d.vertices() {
        let row = &mut cells[u.0];
        let mut open: Vec<VertexId> = d.vertices().collect();
        for_each_out_branching(d, u, |out_arcs| {
            usable.iter_mut().for_each(|x| *x = true);
            for &a in out_arcs {
                usable[a.0] = false;
            }
            open.retain(|&v| match extract_in_branching(d, v, &usable) {
                Some(in_branching) => {
                    row[v.0] = Some(GoodPair {
                        out_branching: Branching::new(u, Direction::Out, out_arcs.to_vec()),
                        in_branching,
                    });
                    false
                }
                None => true,
            });
            if open.is_empty() {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
    }
    GoodPairMatrix { cells }
}

/// Whether the spanning subdigraph on `arcs` is strong.
pub fn arcs_form_strong_subdigraph(d: &Digraph, arcs: &[ArcId]) -> bool {
    let mut keep = vec![false; d.arc_count()];
    for &a in arcs {
        if a.0 < keep.len() {
            keep[a.0] = true;
        }
    }
    is_strong_with(d, |a| keep[a.0])
}
