//! Directed multigraphs with identity-carrying arcs.
//!
//! A [`Digraph`] is immutable once built. Vertices are dense indices with
//! optional unique labels; arcs are dense ids in insertion order, so two
//! parallel arcs stay distinguishable and "arc-disjoint" means disjoint by
//! id. Loops are always rejected; parallel arcs only in multigraph mode.

mod io;
mod iso;
mod recognize;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use io::{parse_digraph, to_arc_list, to_dot, to_dot_highlighted, MULTIGRAPH_HEADER};
pub use iso::{are_isomorphic, automorphisms};
pub use recognize::{is_semicomplete, recognize_semicomplete_split, SplitPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ArcId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub id: ArcId,
    pub tail: VertexId,
    pub head: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<Option<String>>,
    arcs: Vec<Arc>,
    simple: bool,
    out_adj: Vec<Vec<ArcId>>,
    in_adj: Vec<Vec<ArcId>>,
}

impl Digraph {
    /// Builds a digraph on `n` unlabeled vertices from `(tail, head)` index pairs.
    pub fn new(n: usize, arcs: &[(usize, usize)], simple: bool) -> Result<Digraph> {
        Digraph::from_parts(vec![None; n], arcs, simple)
    }

    pub fn from_parts(labels: Vec<Option<String>>, arcs: &[(usize, usize)], simple: bool) -> Result<Digraph> {
        let n = labels.len();
        let mut seen_labels = HashMap::new();
        for (i, label) in labels.iter().enumerate() {
            if let Some(label) = label {
                if label.is_empty() || label.chars().any(char::is_whitespace) {
                    return Err(Error::Validation(format!("malformed label {label:?}")));
                }
                if let Some(prev) = seen_labels.insert(label.as_str(), i) {
                    return Err(Error::Validation(format!(
                        "label {label:?} used by vertices {prev} and {i}"
                    )));
                }
            }
        }

        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut built = Vec::with_capacity(arcs.len());
        for (idx, &(tail, head)) in arcs.iter().enumerate() {
            if tail >= n || head >= n {
                return Err(Error::Validation(format!(
                    "arc {idx} ({tail}, {head}) references a vertex outside 0..{n}"
                )));
            }
            if tail == head {
                return Err(Error::Validation(format!("arc {idx} is a loop at vertex {tail}")));
            }
            let id = ArcId(idx);
            if simple && out_adj[tail].iter().any(|&a: &ArcId| built_head(&built, a) == head) {
                return Err(Error::Validation(format!(
                    "parallel arc {tail}->{head} in a simple digraph"
                )));
            }
            built.push(Arc {
                id,
                tail: VertexId(tail),
                head: VertexId(head),
            });
            out_adj[tail].push(id);
            in_adj[head].push(id);
        }

        Ok(Digraph {
            labels,
            arcs: built,
            simple,
            out_adj,
            in_adj,
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n()).map(VertexId)
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// # Panics
    /// If `id` does not belong to this digraph.
    pub fn arc(&self, id: ArcId) -> Arc {
        self.arcs[id.0]
    }

    pub fn contains_arc(&self, id: ArcId) -> bool {
        id.0 < self.arcs.len()
    }

    pub fn out_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.out_adj[v.0]
    }

    pub fn in_arcs(&self, v: VertexId) -> &[ArcId] {
        &self.in_adj[v.0]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v.0].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adj[v.0].len()
    }

    pub fn multiplicity(&self, tail: VertexId, head: VertexId) -> usize {
        self.out_adj[tail.0]
            .iter()
            .filter(|&&a| self.arcs[a.0].head == head)
            .count()
    }

    pub fn adjacent(&self, x: VertexId, y: VertexId) -> bool {
        self.multiplicity(x, y) > 0 || self.multiplicity(y, x) > 0
    }

    /// Smallest-id arc from `tail` to `head`.
    pub fn find_arc(&self, tail: VertexId, head: VertexId) -> Option<ArcId> {
        self.out_adj[tail.0]
            .iter()
            .copied()
            .find(|&a| self.arcs[a.0].head == head)
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels[v.0].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Label, or `#<index>` for unlabeled vertices.
    pub fn name(&self, v: VertexId) -> String {
        match &self.labels[v.0] {
            Some(label) => label.clone(),
            None => format!("#{}", v.0),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.labels
            .iter()
            .position(|l| l.as_deref() == Some(label))
            .map(VertexId)
    }

    /// Resolves a label, falling back to `#<index>` or a bare index.
    pub fn resolve(&self, name: &str) -> Result<VertexId> {
        if let Some(v) = self.vertex_by_label(name) {
            return Ok(v);
        }
        let digits = name.strip_prefix('#').unwrap_or(name);
        match digits.parse::<usize>() {
            Ok(i) if i < self.n() && self.labels[i].is_none() => Ok(VertexId(i)),
            _ => Err(Error::Argument(format!("unknown vertex {name:?}"))),
        }
    }

    pub fn arc_by_labels(&self, tail: &str, head: &str) -> Option<ArcId> {
        let t = self.vertex_by_label(tail)?;
        let h = self.vertex_by_label(head)?;
        self.find_arc(t, h)
    }

    /// `tail>head#id`, the arc serialization used in reports.
    pub fn arc_name(&self, id: ArcId) -> String {
        let arc = self.arc(id);
        format!("{}>{}#{}", self.name(arc.tail), self.name(arc.head), id.0)
    }

    /// Same vertices, every arc flipped, arc ids preserved.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            labels: self.labels.clone(),
            arcs: self
                .arcs
                .iter()
                .map(|a| Arc {
                    id: a.id,
                    tail: a.head,
                    head: a.tail,
                })
                .collect(),
            simple: self.simple,
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
        }
    }

    /// Renames vertices; indices and arc ids are unchanged.
    pub fn relabel<F>(&self, mut rename: F) -> Result<Digraph>
    where
        F: FnMut(&str) -> String,
    {
        let labels = self.labels.iter().map(|l| l.as_deref().map(&mut rename)).collect();
        Digraph::from_parts(labels, &self.arc_pairs(), self.simple)
    }

    pub fn arc_pairs(&self) -> Vec<(usize, usize)> {
        self.arcs.iter().map(|a| (a.tail.0, a.head.0)).collect()
    }

    /// Copy with an extra arc appended (used for monotonicity checks).
    pub fn with_arc(&self, tail: VertexId, head: VertexId) -> Result<Digraph> {
        let mut pairs = self.arc_pairs();
        pairs.push((tail.0, head.0));
        Digraph::from_parts(self.labels.clone(), &pairs, self.simple)
    }

    /// Copy without the listed arcs. Remaining arcs are renumbered densely.
    pub fn without_arcs(&self, removed: &[ArcId]) -> Digraph {
        let pairs: Vec<_> = self
            .arcs
            .iter()
            .filter(|a| !removed.contains(&a.id))
            .map(|a| (a.tail.0, a.head.0))
            .collect();
        Digraph::from_parts(self.labels.clone(), &pairs, self.simple).expect("removing arcs keeps a digraph valid")
    }

    /// Multiset of `(tail label, head label)` pairs, sorted. Two labeled
    /// digraphs with equal signatures are equal up to vertex and arc order.
    pub fn label_signature(&self) -> Vec<(String, String)> {
        let mut sig: Vec<_> = self
            .arcs
            .iter()
            .map(|a| (self.name(a.tail), self.name(a.head)))
            .collect();
        sig.sort();
        sig
    }
}

fn built_head(built: &[Arc], id: ArcId) -> usize {
    built[id.0].head.0
}

/// Incremental construction by vertex label, vertices declared on first use.
#[derive(Debug, Clone, Default)]
pub struct DigraphBuilder {
    labels: Vec<Option<String>>,
    index: HashMap<String, usize>,
    arcs: Vec<(usize, usize)>,
    multigraph: bool,
}

impl DigraphBuilder {
    pub fn simple() -> Self {
        DigraphBuilder::default()
    }

    pub fn multigraph() -> Self {
        DigraphBuilder {
            multigraph: true,
            ..DigraphBuilder::default()
        }
    }

    pub fn set_multigraph(&mut self, multigraph: bool) {
        self.multigraph = multigraph;
    }

    pub fn vertex(&mut self, label: &str) -> VertexId {
        if let Some(&i) = self.index.get(label) {
            return VertexId(i);
        }
        let i = self.labels.len();
        self.labels.push(Some(label.to_string()));
        self.index.insert(label.to_string(), i);
        VertexId(i)
    }

    pub fn arc(&mut self, tail: &str, head: &str) -> &mut Self {
        let t = self.vertex(tail);
        let h = self.vertex(head);
        self.arcs.push((t.0, h.0));
        self
    }

    pub fn arcs<'a, I>(&mut self, arcs: I) -> &mut Self
    where
        I: IntoIterator<Item = &'a (&'a str, &'a str)>,
    {
        for (t, h) in arcs {
            self.arc(t, h);
        }
        self
    }

    pub fn build(&self) -> Result<Digraph> {
        Digraph::from_parts(self.labels.clone(), &self.arcs, !self.multigraph)
    }
}

/// Builds a simple labeled digraph from a literal arc table.
///
/// # Panics
/// If the table contains a loop or a parallel arc.
pub fn labeled(arcs: &[(&str, &str)]) -> Digraph {
    DigraphBuilder::simple()
        .arcs(arcs)
        .build()
        .expect("literal arc table is a valid simple digraph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_parallel_arcs_in_simple_mode() {
        assert!(matches!(Digraph::new(2, &[(0, 0)], false), Err(Error::Validation(_))));
        assert!(matches!(
            Digraph::new(2, &[(0, 1), (0, 1)], true),
            Err(Error::Validation(_))
        ));
        let multi = Digraph::new(2, &[(0, 1), (0, 1)], false).unwrap();
        assert_eq!(multi.multiplicity(VertexId(0), VertexId(1)), 2);
    }

    #[test]
    fn rejects_duplicate_labels() {
        let labels = vec![Some("x".to_string()), Some("x".to_string())];
        assert!(Digraph::from_parts(labels, &[(0, 1)], true).is_err());
    }

    #[test]
    fn reverse_of_single_arc() {
        let d = labeled(&[("u", "v")]);
        let r = d.reverse();
        let arc = r.arc(ArcId(0));
        assert_eq!(r.name(arc.tail), "v");
        assert_eq!(r.name(arc.head), "u");
        assert_eq!(r.reverse(), d);
    }

    #[test]
    fn arc_names_use_labels_and_ids() {
        let d = labeled(&[("v1", "v2"), ("v2", "v1")]);
        assert_eq!(d.arc_name(ArcId(1)), "v2>v1#1");
        let unlabeled = Digraph::new(2, &[(1, 0)], true).unwrap();
        assert_eq!(unlabeled.arc_name(ArcId(0)), "#1>#0#0");
        assert_eq!(unlabeled.resolve("#1").unwrap(), VertexId(1));
        assert!(d.resolve("v9").is_err());
    }

    #[test]
    fn without_arcs_renumbers() {
        let d = labeled(&[("a", "b"), ("b", "c"), ("c", "a")]);
        let e = d.without_arcs(&[ArcId(1)]);
        assert_eq!(e.arc_count(), 2);
        assert_eq!(e.arc_name(ArcId(1)), "c>a#1");
    }
}
