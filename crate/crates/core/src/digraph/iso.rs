//! Isomorphism by permutation search, for small digraphs.

use super::{Digraph, VertexId};

struct Matcher<'a> {
    from: &'a Digraph,
    to: &'a Digraph,
    from_mult: Vec<Vec<usize>>,
    to_mult: Vec<Vec<usize>>,
    from_deg: Vec<(usize, usize)>,
    to_deg: Vec<(usize, usize)>,
}

fn multiplicity_matrix(d: &Digraph) -> Vec<Vec<usize>> {
    let mut m = vec![vec![0; d.n()]; d.n()];
    for arc in d.arcs() {
        m[arc.tail.0][arc.head.0] += 1;
    }
    m
}

fn degrees(d: &Digraph) -> Vec<(usize, usize)> {
    d.vertices().map(|v| (d.in_degree(v), d.out_degree(v))).collect()
}

impl<'a> Matcher<'a> {
    fn new(from: &'a Digraph, to: &'a Digraph) -> Option<Self> {
        if from.n() != to.n() || from.arc_count() != to.arc_count() {
            return None;
        }
        let from_deg = degrees(from);
        let to_deg = degrees(to);
        let mut a = from_deg.clone();
        let mut b = to_deg.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
        Some(Matcher {
            from,
            to,
            from_mult: multiplicity_matrix(from),
            to_mult: multiplicity_matrix(to),
            from_deg,
            to_deg,
        })
    }

    /// Visits every arc-multiplicity-preserving bijection in lexicographic
    /// order of the image sequence; stops when `visit` returns false.
    fn run(&self, visit: &mut dyn FnMut(&[usize]) -> bool) {
        let n = self.from.n();
        let mut image = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend(&mut image, &mut used, visit);
    }

    fn extend(&self, image: &mut Vec<usize>, used: &mut [bool], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let i = image.len();
        if i == self.from.n() {
            return visit(image);
        }
        for cand in 0..self.to.n() {
            if used[cand] || self.from_deg[i] != self.to_deg[cand] {
                continue;
            }
            let consistent = image.iter().enumerate().all(|(j, &img)| {
                self.from_mult[i][j] == self.to_mult[cand][img] && self.from_mult[j][i] == self.to_mult[img][cand]
            });
            if !consistent {
                continue;
            }
            image.push(cand);
            used[cand] = true;
            let keep_going = self.extend(image, used, visit);
            used[cand] = false;
            image.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// First bijection (lexicographic in the image sequence) mapping `d1` onto
/// `d2` with arc multiplicities preserved. `mapping[i]` is the image of
/// vertex `i` of `d1`.
pub fn are_isomorphic(d1: &Digraph, d2: &Digraph) -> Option<Vec<VertexId>> {
    let matcher = Matcher::new(d1, d2)?;
    let mut found = None;
    matcher.run(&mut |image| {
        found = Some(image.iter().copied().map(VertexId).collect());
        false
    });
    found
}

/// All automorphisms, in lexicographic order; the identity comes first.
pub fn automorphisms(d: &Digraph) -> Vec<Vec<VertexId>> {
    let matcher = Matcher::new(d, d).expect("a digraph matches itself");
    let mut all = Vec::new();
    matcher.run(&mut |image| {
        all.push(image.iter().copied().map(VertexId).collect());
        true
    });
    all
}
