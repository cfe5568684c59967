//! Strong connectivity and arc-strong connectivity.
//!
//! [`arc_strong_connectivity`] uses unit-capacity augmenting paths;
//! [`is_k_arc_strong_bruteforce`] is the literal definition (delete every
//! arc set of size below `k` and test strongness) and serves as its oracle.

use std::collections::VecDeque;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::digraph::{ArcId, Digraph, VertexId};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Vertices reachable from `root` using arcs accepted by `keep`. With
/// `forward` false the arcs are followed backwards, i.e. the result marks
/// the vertices that reach `root`.
pub fn reach<F>(d: &Digraph, root: VertexId, forward: bool, keep: F) -> Vec<bool>
where
    F: Fn(ArcId) -> bool,
{
    let mut seen = vec![false; d.n()];
    let mut queue = VecDeque::new();
    seen[root.0] = true;
    queue.push_back(root);
    while let Some(x) = queue.pop_front() {
        let arcs = if forward { d.out_arcs(x) } else { d.in_arcs(x) };
        for &a in arcs {
            if !keep(a) {
                continue;
            }
            let arc = d.arc(a);
            let y = if forward { arc.head } else { arc.tail };
            if !seen[y.0] {
                seen[y.0] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Strongness of the spanning subdigraph formed by the arcs `keep` accepts.
pub fn is_strong_with<F>(d: &Digraph, keep: F) -> bool
where
    F: Fn(ArcId) -> bool,
{
    if d.n() <= 1 {
        return true;
    }
    let root = VertexId(0);
    reach(d, root, true, &keep).iter().all(|&r| r) && reach(d, root, false, &keep).iter().all(|&r| r)
}

pub fn is_strong(d: &Digraph) -> bool {
    is_strong_with(d, |_| true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityCertificate {
    /// Largest `k` such that `d` is `k`-arc-strong.
    pub k: u32,
    /// `k` arcs whose removal leaves `d` non-strong; `None` only for a
    /// single vertex, which no arc removal can disconnect.
    pub witness_cut: Option<Vec<ArcId>>,
}

impl ConnectivityCertificate {
    /// Checks the witness half of the certificate: the cut has exactly `k`
    /// arcs and removing them breaks strongness.
    pub fn witness_is_valid(&self, d: &Digraph) -> bool {
        match &self.witness_cut {
            None => d.n() <= 1,
            Some(cut) => {
                cut.len() == self.k as usize
                    && cut.iter().all(|&a| d.contains_arc(a))
                    && !is_strong_with(d, |a| !cut.contains(&a))
            }
        }
    }
}

/// Arc-strong connectivity with a minimum cut as witness.
///
/// Uses the identity that the minimum over all ordered pairs equals the
/// minimum over pairs `(v0, t)` and `(t, v0)` for a fixed `v0`. Flow is
/// capped at the minimum in/out-degree, which is itself a valid cut.
/// A single vertex reports `k = 0` with no witness.
pub fn arc_strong_connectivity(d: &Digraph) -> ConnectivityCertificate {
    if d.n() <= 1 {
        return ConnectivityCertificate {
            k: 0,
            witness_cut: None,
        };
    }
    if !is_strong(d) {
        return ConnectivityCertificate {
            k: 0,
            witness_cut: Some(Vec::new()),
        };
    }

    // degree bound
    let mut best_cut: Vec<ArcId> = Vec::new();
    let mut best = usize::MAX;
    for v in d.vertices() {
        if d.in_degree(v) < best {
            best = d.in_degree(v);
            best_cut = d.in_arcs(v).to_vec();
        }
        if d.out_degree(v) < best {
            best = d.out_degree(v);
            best_cut = d.out_arcs(v).to_vec();
        }
    }

    let root = VertexId(0);
    for t in d.vertices().skip(1) {
        for (s, t) in [(root, t), (t, root)] {
            let (value, source_side) = unit_max_flow(d, s, t, best);
            if value < best {
                best = value;
                best_cut = d
                    .arcs()
                    .iter()
                    .filter(|a| source_side[a.tail.0] && !source_side[a.head.0])
                    .map(|a| a.id)
                    .collect();
            }
        }
    }

    ConnectivityCertificate {
        k: best as u32,
        witness_cut: Some(best_cut),
    }
}

/// Number of arc-disjoint `s`-`t` paths, stopping early at `cap`. Also
/// returns the residual-reachable side of the last search, which is a
/// minimum cut's source side whenever the value is below `cap`.
pub fn unit_max_flow(d: &Digraph, s: VertexId, t: VertexId, cap: usize) -> (usize, Vec<bool>) {
    let mut flow = vec![false; d.arc_count()];
    let mut value = 0;
    loop {
        // parent[v] = (arc, used forward)
        let mut parent: Vec<Option<(ArcId, bool)>> = vec![None; d.n()];
        let mut seen = vec![false; d.n()];
        let mut queue = VecDeque::new();
        seen[s.0] = true;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &a in d.out_arcs(x) {
                let y = d.arc(a).head;
                if !flow[a.0] && !seen[y.0] {
                    seen[y.0] = true;
                    parent[y.0] = Some((a, true));
                    queue.push_back(y);
                }
            }
            for &a in d.in_arcs(x) {
                let y = d.arc(a).tail;
                if flow[a.0] && !seen[y.0] {
                    seen[y.0] = true;
                    parent[y.0] = Some((a, false));
                    queue.push_back(y);
                }
            }
        }
        if !seen[t.0] || value >= cap {
            return (value, seen);
        }
        let mut v = t;
        while v != s {
            let (a, forward) = parent[v.0].expect("augmenting path is connected");
            flow[a.0] = forward;
            let arc = d.arc(a);
            v = if forward { arc.tail } else { arc.head };
        }
        value += 1;
    }
}

/// `d` minus any arc set of size at most `k - 1` stays strong.
pub fn is_k_arc_strong_bruteforce(d: &Digraph, k: u32, limits: &Limits) -> Result<bool> {
    if k == 0 {
        return Err(Error::Argument("k must be positive".to_string()));
    }
    let m = d.arc_count();
    let max_removed = (k as usize - 1).min(m);
    let required: u128 = (0..=max_removed).map(|r| binomial(m, r)).sum();
    if required > u128::from(limits.max_subsets) {
        return Err(Error::ResourceLimit {
            what: "arc subsets",
            required,
            limit: limits.max_subsets,
        });
    }
    let mut removed = vec![false; m];
    for size in 0..=max_removed {
        for subset in (0..m).combinations(size) {
            for &i in &subset {
                removed[i] = true;
            }
            let strong = is_strong_with(d, |a| !removed[a.0]);
            for &i in &subset {
                removed[i] = false;
            }
            if !strong {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{labeled, Digraph};

    fn cycle3() -> Digraph {
        labeled(&[("v1", "v2"), ("v2", "v3"), ("v3", "v1")])
    }

    #[test]
    fn single_vertex_is_strong() {
        let d = Digraph::new(1, &[], true).unwrap();
        assert!(is_strong(&d));
        let cert = arc_strong_connectivity(&d);
        assert_eq!(cert.k, 0);
        assert!(cert.witness_is_valid(&d));
    }

    #[test]
    fn path_is_not_strong() {
        let d = labeled(&[("v1", "v2"), ("v2", "v3")]);
        assert!(!is_strong(&d));
        let cert = arc_strong_connectivity(&d);
        assert_eq!(cert.k, 0);
        assert_eq!(cert.witness_cut, Some(vec![]));
        assert!(cert.witness_is_valid(&d));
    }

    #[test]
    fn directed_triangle_is_one_arc_strong() {
        let d = cycle3();
        let cert = arc_strong_connectivity(&d);
        assert_eq!(cert.k, 1);
        assert!(cert.witness_is_valid(&d));
        let limits = Limits::default();
        assert!(is_k_arc_strong_bruteforce(&d, 1, &limits).unwrap());
        assert!(!is_k_arc_strong_bruteforce(&d, 2, &limits).unwrap());
    }

    #[test]
    fn brute_force_respects_the_limit() {
        let d = cycle3();
        let err = is_k_arc_strong_bruteforce(&d, 3, &Limits::uniform(3)).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { required: 7, .. }));
        assert!(is_k_arc_strong_bruteforce(&d, 0, &Limits::default()).is_err());
    }

    #[test]
    fn flow_finds_parallel_paths() {
        let d = Digraph::new(2, &[(0, 1), (0, 1), (1, 0)], false).unwrap();
        assert_eq!(unit_max_flow(&d, VertexId(0), VertexId(1), usize::MAX).0, 2);
        assert_eq!(unit_max_flow(&d, VertexId(0), VertexId(1), 1).0, 1);
        assert_eq!(arc_strong_connectivity(&d).k, 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(11, 2), 55);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(20, 10), 184_756);
    }
}
