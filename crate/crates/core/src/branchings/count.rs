use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::digraph::{Digraph, VertexId};

/// Number of spanning out-branchings rooted at `root`, by the directed
/// matrix-tree theorem: the determinant of the in-degree Laplacian with the
/// root's row and column deleted. Exact (fraction-free Bareiss elimination).
pub fn count_out_branchings(d: &Digraph, root: VertexId) -> BigUint {
    let keep: Vec<usize> = (0..d.n()).filter(|&i| i != root.0).collect();
    let size = keep.len();
    if size == 0 {
        return BigUint::one();
    }
    let pos = |v: usize| keep.iter().position(|&k| k == v);

    let mut m = vec![vec![BigInt::zero(); size]; size];
    for arc in d.arcs() {
        if let Some(h) = pos(arc.head.0) {
            m[h][h] += 1;
            if let Some(t) = pos(arc.tail.0) {
                m[t][h] -= 1;
            }
        }
    }

    let det = bareiss_determinant(m);
    debug_assert!(!det.is_negative());
    det.to_biguint().unwrap_or_default()
}

fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = value;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}
