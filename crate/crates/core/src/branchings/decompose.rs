use serde::{Deserialize, Serialize};

use crate::connectivity::is_strong_with;
use crate::digraph::{ArcId, Digraph};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Partition of the arc set into two spanning strong subdigraphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcDecomposition {
    pub first: Vec<ArcId>,
    pub second: Vec<ArcId>,
}

impl ArcDecomposition {
    pub fn validate(&self, d: &Digraph) -> bool {
        let mut side = vec![0u8; d.arc_count()];
        for (arcs, tag) in [(&self.first, 1u8), (&self.second, 2u8)] {
            for &a in arcs.iter() {
                if !d.contains_arc(a) || side[a.0] != 0 {
                    return false;
                }
                side[a.0] = tag;
            }
        }
        !self.first.is_empty()
            && !self.second.is_empty()
            && !side.contains(&0)
            && is_strong_with(d, |a| side[a.0] == 1)
            && is_strong_with(d, |a| side[a.0] == 2)
    }
}

pub fn find_strong_arc_decomposition(d: &Digraph) -> Result<Option<ArcDecomposition>> {
    find_strong_arc_decomposition_with(d, &Limits::from_env())
}

/// Exhaustive search over arc bipartitions, bit `i` of the mask putting arc
/// `i` into the first side. Masks are tried in increasing order and the
/// first valid one is returned. A mask is skipped unless both sides give
/// every vertex positive in- and out-degree.
pub fn find_strong_arc_decomposition_with(d: &Digraph, limits: &Limits) -> Result<Option<ArcDecomposition>> {
    let m = d.arc_count();
    let required = 1u128 << m.min(127);
    if m >= 64 || required > u128::from(limits.max_bipartitions) {
        return Err(Error::ResourceLimit {
            what: "arc bipartitions",
            required,
            limit: limits.max_bipartitions,
        });
    }
    if m < 2 || d.n() < 2 {
        return Ok(None);
    }

    let full: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let out_masks: Vec<u64> = d.vertices().map(|v| arc_mask(d.out_arcs(v))).collect();
    let in_masks: Vec<u64> = d.vertices().map(|v| arc_mask(d.in_arcs(v))).collect();

    for mask in 1..full {
        let other = full & !mask;
        let degrees_ok = out_masks
            .iter()
            .chain(in_masks.iter())
            .all(|&vm| vm & mask != 0 && vm & other != 0);
        if !degrees_ok {
            continue;
        }
        if is_strong_with(d, |a| mask >> a.0 & 1 == 1) && is_strong_with(d, |a| other >> a.0 & 1 == 1) {
            let split = |bits: u64| -> Vec<ArcId> { (0..m).filter(|i| bits >> i & 1 == 1).map(ArcId).collect() };
            return Ok(Some(ArcDecomposition {
                first: split(mask),
                second: split(other),
            }));
        }
    }
    Ok(None)
}

fn arc_mask(arcs: &[ArcId]) -> u64 {
    arcs.iter().fold(0, |acc, a| acc | 1 << a.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::labeled;

    #[test]
    fn complete_digraph_splits_into_opposite_triangles() {
        let d = labeled(&[
            ("v1", "v2"),
            ("v2", "v3"),
            ("v3", "v1"),
            ("v2", "v1"),
            ("v3", "v2"),
            ("v1", "v3"),
        ]);
        let dec = find_strong_arc_decomposition_with(&d, &Limits::default())
            .unwrap()
            .unwrap();
        assert_eq!(dec.first, vec![ArcId(0), ArcId(1), ArcId(2)]);
        assert_eq!(dec.second, vec![ArcId(3), ArcId(4), ArcId(5)]);
        assert!(dec.validate(&d));
    }

    #[test]
    fn triangle_has_no_decomposition() {
        let d = labeled(&[("v1", "v2"), ("v2", "v3"), ("v3", "v1")]);
        assert_eq!(
            find_strong_arc_decomposition_with(&d, &Limits::default()).unwrap(),
            None
        );
    }

    #[test]
    fn limit_is_enforced() {
        let d = labeled(&[("v1", "v2"), ("v2", "v3"), ("v3", "v1")]);
        let err = find_strong_arc_decomposition_with(&d, &Limits::uniform(4)).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { required: 8, .. }));
    }
}
