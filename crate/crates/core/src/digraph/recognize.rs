use serde::{Deserialize, Serialize};

use super::{Digraph, VertexId};

/// Every unordered vertex pair has at least one arc between its ends.
pub fn is_semicomplete(d: &Digraph) -> bool {
    let n = d.n();
    (0..n).all(|i| (i + 1..n).all(|j| d.adjacent(VertexId(i), VertexId(j))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    /// Independent side.
    pub v1: Vec<VertexId>,
    /// Semicomplete side.
    pub v2: Vec<VertexId>,
}

impl SplitPartition {
    /// Re-checks the split invariants against `d`. With `semicomplete_split`
    /// set, every `v1` vertex must also be adjacent to every `v2` vertex.
    pub fn validate(&self, d: &Digraph, semicomplete_split: bool) -> bool {
        let n = d.n();
        if self.v1.is_empty() || self.v2.is_empty() {
            return false;
        }
        let mut side = vec![0u8; n];
        for &v in &self.v1 {
            if v.0 >= n || side[v.0] != 0 {
                return false;
            }
            side[v.0] = 1;
        }
        for &v in &self.v2 {
            if v.0 >= n || side[v.0] != 0 {
                return false;
            }
            side[v.0] = 2;
        }
        if side.contains(&0) {
            return false;
        }
        let independent = self
            .v1
            .iter()
            .all(|&x| self.v1.iter().all(|&y| x == y || !d.adjacent(x, y)));
        let semicomplete = self
            .v2
            .iter()
            .all(|&x| self.v2.iter().all(|&y| x == y || d.adjacent(x, y)));
        let complete_between =
            !semicomplete_split || self.v1.iter().all(|&x| self.v2.iter().all(|&y| d.adjacent(x, y)));
        independent && semicomplete && complete_between
    }
}

/// Searches every nonempty independent `V1` in lexicographic order of its
/// sorted index list and returns the first one that makes `d` a
/// semicomplete split digraph.
pub fn recognize_semicomplete_split(d: &Digraph) -> Option<SplitPartition> {
    let n = d.n();
    if n < 2 {
        return None;
    }
    let mut chosen = Vec::new();
    search(d, 0, &mut chosen)
}

fn search(d: &Digraph, start: usize, chosen: &mut Vec<usize>) -> Option<SplitPartition> {
    let n = d.n();
    for next in start..n {
        // supersets of a dependent set are dependent
        if chosen.iter().any(|&c| d.adjacent(VertexId(c), VertexId(next))) {
            continue;
        }
        chosen.push(next);
        if chosen.len() < n {
            let candidate = partition_from(n, chosen);
            if candidate.validate(d, true) {
                return Some(candidate);
            }
        }
        if let Some(found) = search(d, next + 1, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

fn partition_from(n: usize, v1: &[usize]) -> SplitPartition {
    SplitPartition {
        v1: v1.iter().copied().map(VertexId).collect(),
        v2: (0..n).filter(|i| !v1.contains(i)).map(VertexId).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{labeled, Digraph};

    /// Oracle: all 2^n - 2 candidate sets, sorted lexicographically.
    fn brute_force(d: &Digraph) -> Option<SplitPartition> {
        let n = d.n();
        let mut sets: Vec<Vec<usize>> = (1u32..(1 << n) - 1)
            .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
            .collect();
        sets.sort();
        sets.into_iter()
            .map(|v1| partition_from(n, &v1))
            .find(|p| p.validate(d, true))
    }

    #[test]
    fn two_isolated_vertices_are_not_semicomplete() {
        let d = Digraph::new(2, &[], true).unwrap();
        assert!(!is_semicomplete(&d));
        assert_eq!(recognize_semicomplete_split(&d), brute_force(&d));
    }

    #[test]
    fn star_into_triangle() {
        // x adjacent to the whole triangle, y only to part of it
        let d = labeled(&[("a", "b"), ("b", "c"), ("c", "a"), ("x", "a"), ("b", "x"), ("x", "c")]);
        let p = recognize_semicomplete_split(&d).unwrap();
        assert!(p.validate(&d, true));
        assert_eq!(Some(p), brute_force(&d));
    }

    #[test]
    fn validate_rejects_bad_partitions() {
        let d = labeled(&[("a", "b"), ("b", "c"), ("c", "a")]);
        let overlapping = SplitPartition {
            v1: vec![VertexId(0)],
            v2: vec![VertexId(0), VertexId(1), VertexId(2)],
        };
        assert!(!overlapping.validate(&d, false));
        let dependent = SplitPartition {
            v1: vec![VertexId(0), VertexId(1)],
            v2: vec![VertexId(2)],
        };
        assert!(!dependent.validate(&d, false));
    }
}
