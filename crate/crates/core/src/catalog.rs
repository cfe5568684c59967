//! Builders for the named digraphs of the good-pair case analysis.
//!
//! Vertex labels follow the figures (`v1`..`v4`, `a`, `b`, `u`, `x1`, ...),
//! and arcs are listed in figure order so arc ids are stable. Every builder
//! creates vertices by first appearance, so exporting to the arc-list format
//! and parsing back reproduces the same digraph.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::{labeled, Digraph, DigraphBuilder};
use crate::error::{Error, Result};

pub type ArcTable = &'static [(&'static str, &'static str)];

/// The four-vertex core `v1..v4` shared by the basic cases and their
/// combinations (without `v3 -> v1`).
pub const CORE: ArcTable = &[
    ("v1", "v2"),
    ("v2", "v3"),
    ("v3", "v4"),
    ("v4", "v1"),
    ("v1", "v3"),
    ("v2", "v4"),
];

pub const S4: ArcTable = &[
    ("v1", "v2"),
    ("v2", "v3"),
    ("v3", "v4"),
    ("v4", "v1"),
    ("v1", "v3"),
    ("v2", "v4"),
    ("v3", "v1"),
    ("v4", "v2"),
];

/// The six multigraph companions of `S4`, drawn with bent duplicate arcs.
const S4_MULTI: [ArcTable; 6] = [
    &[
        ("v1", "v2"),
        ("v2", "v3"),
        ("v3", "v4"),
        ("v4", "v1"),
        ("v1", "v3"),
        ("v2", "v4"),
        ("v3", "v1"),
        ("v1", "v3"),
        ("v4", "v2"),
    ],
    &[
        ("v1", "v2"),
        ("v1", "v2"),
        ("v2", "v3"),
        ("v3", "v4"),
        ("v4", "v1"),
        ("v1", "v3"),
        ("v2", "v4"),
        ("v3", "v1"),
        ("v4", "v2"),
    ],
    &[
        ("v1", "v2"),
        ("v2", "v3"),
        ("v3", "v4"),
        ("v4", "v1"),
        ("v1", "v3"),
        ("v2", "v4"),
        ("v4", "v2"),
        ("v3", "v1"),
        ("v1", "v3"),
        ("v4", "v2"),
    ],
    &[
        ("v1", "v2"),
        ("v1", "v2"),
        ("v2", "v3"),
        ("v3", "v4"),
        ("v4", "v1"),
        ("v1", "v3"),
        ("v2", "v4"),
        ("v3", "v1"),
        ("v1", "v3"),
        ("v4", "v2"),
    ],
    &[
        ("v1", "v2"),
        ("v1", "v2"),
        ("v2", "v3"),
        ("v3", "v4"),
        ("v4", "v1"),
        ("v1", "v3"),
        ("v2", "v4"),
        ("v3", "v1"),
        ("v4", "v2"),
        ("v4", "v2"),
    ],
    &[
        ("v1", "v2"),
        ("v2", "v3"),
        ("v3", "v4"),
        ("v4", "v1"),
        ("v1", "v3"),
        ("v2", "v4"),
        ("v4", "v2"),
        ("v3", "v1"),
        ("v1", "v3"),
        ("v4", "v2"),
        ("v1", "v2"),
    ],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BasicCase {
    I,
    Ii,
    Iii,
    Iv,
    V,
}

impl BasicCase {
    pub const ALL: [BasicCase; 5] = [BasicCase::I, BasicCase::Ii, BasicCase::Iii, BasicCase::Iv, BasicCase::V];

    pub fn roman(self) -> &'static str {
        match self {
            BasicCase::I => "i",
            BasicCase::Ii => "ii",
            BasicCase::Iii => "iii",
            BasicCase::Iv => "iv",
            BasicCase::V => "v",
        }
    }

    pub fn from_roman(s: &str) -> Option<BasicCase> {
        BasicCase::ALL.into_iter().find(|c| c.roman() == s)
    }

    /// Arcs at `a` (solid first, then the dashed one if any).
    pub fn a_arcs(self) -> (ArcTable, Option<(&'static str, &'static str)>) {
        match self {
            BasicCase::I => (&[("a", "v2"), ("a", "v4"), ("v4", "a"), ("v2", "a")], None),
            BasicCase::Ii => (&[("a", "v2"), ("v2", "a"), ("v4", "a"), ("a", "v1")], None),
            BasicCase::Iii => (&[("a", "v2"), ("a", "v4"), ("v4", "a"), ("v1", "a")], None),
            BasicCase::Iv => (&[("a", "v2"), ("v2", "a"), ("v4", "a"), ("a", "v3")], Some(("a", "v4"))),
            BasicCase::V => (&[("a", "v2"), ("a", "v4"), ("v4", "a"), ("v3", "a")], Some(("v2", "a"))),
        }
    }

    /// Arcs at `b` in the mirrored structure `(e)*`.
    pub fn b_arcs(self) -> (ArcTable, Option<(&'static str, &'static str)>) {
        match self {
            BasicCase::I => (&[("b", "v1"), ("b", "v3"), ("v3", "b"), ("v1", "b")], None),
            BasicCase::Ii => (&[("b", "v1"), ("b", "v3"), ("v3", "b"), ("v4", "b")], None),
            BasicCase::Iii => (&[("b", "v1"), ("b", "v4"), ("v1", "b"), ("v3", "b")], None),
            BasicCase::Iv => (&[("b", "v1"), ("b", "v3"), ("v3", "b"), ("v2", "b")], Some(("v1", "b"))),
            BasicCase::V => (&[("b", "v1"), ("v1", "b"), ("v3", "b"), ("b", "v2")], Some(("b", "v3"))),
        }
    }

    pub fn has_dashed(self) -> bool {
        self.a_arcs().1.is_some()
    }
}

impl fmt::Display for BasicCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.roman())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Ce1Variant {
    /// `V1 = {u}`.
    V1Single,
    /// `V1 = {u, v}`.
    V1Pair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CatalogKey {
    S4,
    /// `S4,1` .. `S4,6`.
    S4Multi(u8),
    D1,
    Basic {
        case: BasicCase,
        barred: bool,
        dashed: bool,
    },
    BasicStar {
        case: BasicCase,
        barred: bool,
        dashed: bool,
    },
    Combination {
        e: BasicCase,
        f: BasicCase,
        dashed: bool,
    },
    /// Edge sets 1..=16 of the original verification script.
    Appendix(u8),
    StructureCe1(Ce1Variant),
    StructureCe2,
}

impl CatalogKey {
    /// File-name friendly identifier, e.g. `combo_iv_ii_dashed`.
    pub fn slug(&self) -> String {
        let dashed = |d: bool| if d { "_dashed" } else { "" };
        match *self {
            CatalogKey::S4 => "s4".to_string(),
            CatalogKey::S4Multi(i) => format!("s4_{i}"),
            CatalogKey::D1 => "d1".to_string(),
            CatalogKey::Basic {
                case,
                barred,
                dashed: d,
            } => {
                format!("basic_{case}{}{}", if barred { "_barred" } else { "" }, dashed(d))
            }
            CatalogKey::BasicStar {
                case,
                barred,
                dashed: d,
            } => {
                format!("star_{case}{}{}", if barred { "_barred" } else { "" }, dashed(d))
            }
            CatalogKey::Combination { e, f, dashed: d } => format!("combo_{e}_{f}{}", dashed(d)),
            CatalogKey::Appendix(i) => format!("appendix_{i:02}"),
            CatalogKey::StructureCe1(Ce1Variant::V1Single) => "ce1_single".to_string(),
            CatalogKey::StructureCe1(Ce1Variant::V1Pair) => "ce1_pair".to_string(),
            CatalogKey::StructureCe2 => "ce2".to_string(),
        }
    }

    pub fn from_slug(slug: &str) -> Option<CatalogKey> {
        all_keys().into_iter().find(|k| k.slug() == slug)
    }

    /// For appendix edge sets, the basic case or combination they spell out
    /// once `a1`, `a2` are renamed `a`, `b`.
    pub fn appendix_equivalent(&self) -> Option<CatalogKey> {
        let CatalogKey::Appendix(i) = *self else {
            return None;
        };
        let (e, f) = APPENDIX_TYPES.get(usize::from(i).checked_sub(1)?)?.to_owned();
        Some(match f {
            None => CatalogKey::Basic {
                case: e,
                barred: true,
                dashed: false,
            },
            Some(f) => CatalogKey::Combination { e, f, dashed: false },
        })
    }
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.slug())
    }
}

use BasicCase::{Ii, Iii, Iv, I, V};

/// `(a1 type, a2 type)` per edge set; `None` marks the basic cases, which
/// keep `v3 -> v1` instead of an `a2` vertex.
const APPENDIX_TYPES: [(BasicCase, Option<BasicCase>); 16] = [
    (I, None),
    (Ii, None),
    (Iii, None),
    (Iv, None),
    (V, None),
    (I, Some(I)),
    (I, Some(Ii)),
    (I, Some(Iii)),
    (I, Some(Iv)),
    (Ii, Some(Ii)),
    (Ii, Some(Iii)),
    (Ii, Some(Iv)),
    (Iii, Some(Iii)),
    (Iii, Some(Iv)),
    (Iii, Some(V)),
    (Iv, Some(Iv)),
];

/// Flat vertex-name vectors exactly as the verification script spells them.
const SCRIPT_COMMON: &[&str] = &["v1", "v2", "v2", "v4", "v3", "v4", "v1", "v3", "v4", "v1", "v2", "v3"];
const SCRIPT_A1: [&[&str]; 5] = [
    &["v2", "a1", "a1", "v2", "a1", "v4", "v4", "a1"],
    &["v2", "a1", "a1", "v2", "a1", "v1", "v4", "a1"],
    &["a1", "v2", "v1", "a1", "a1", "v4", "v4", "a1"],
    &["v2", "a1", "a1", "v2", "a1", "v3", "v4", "a1"],
    &["a1", "v2", "v3", "a1", "a1", "v4", "v4", "a1"],
];
const SCRIPT_A2: [&[&str]; 5] = [
    &["a2", "v1", "v1", "a2", "a2", "v3", "v3", "a2"],
    &["a2", "v1", "v4", "a2", "v3", "a2", "a2", "v3"],
    &["v1", "a2", "a2", "v1", "a2", "v4", "v3", "a2"],
    &["a2", "v1", "v2", "a2", "a2", "v3", "v3", "a2"],
    &["a2", "v1", "v1", "a2", "a2", "v2", "v3", "a2"],
];

fn case_index(c: BasicCase) -> usize {
    BasicCase::ALL.iter().position(|&x| x == c).expect("listed")
}

/// The 16 digraphs of the verification script, in script order.
pub fn all_appendix_graphs() -> Vec<Digraph> {
    (1..=16)
        .map(|i| build(CatalogKey::Appendix(i)).expect("valid index"))
        .collect()
}

fn build_appendix(i: u8) -> Result<Digraph> {
    let (e, f) = *usize::from(i)
        .checked_sub(1)
        .and_then(|k| APPENDIX_TYPES.get(k))
        .ok_or_else(|| Error::Argument(format!("appendix edge set {i} does not exist")))?;
    let mut flat: Vec<&str> = SCRIPT_COMMON.to_vec();
    match f {
        None => {
            flat.extend(["v3", "v1"]);
            flat.extend(SCRIPT_A1[case_index(e)]);
        }
        Some(f) => {
            flat.extend(SCRIPT_A1[case_index(e)]);
            flat.extend(SCRIPT_A2[case_index(f)]);
        }
    }
    let mut b = DigraphBuilder::simple();
    for pair in flat.chunks(2) {
        b.arc(pair[0], pair[1]);
    }
    b.build()
}

fn with_a_arcs(b: &mut DigraphBuilder, case: BasicCase, dashed: bool) {
    let (solid, extra) = case.a_arcs();
    b.arcs(solid);
    if let (true, Some((t, h))) = (dashed, extra) {
        b.arc(t, h);
    }
}

fn with_b_arcs(b: &mut DigraphBuilder, case: BasicCase, dashed: bool) {
    let (solid, extra) = case.b_arcs();
    b.arcs(solid);
    if let (true, Some((t, h))) = (dashed, extra) {
        b.arc(t, h);
    }
}

fn check_dashed(case: BasicCase, dashed: bool) -> Result<()> {
    if dashed && !case.has_dashed() {
        return Err(Error::Argument(format!("case ({case}) has no dashed arc")));
    }
    Ok(())
}

pub fn build(key: CatalogKey) -> Result<Digraph> {
    match key {
        CatalogKey::S4 => Ok(build_s4()),
        CatalogKey::S4Multi(i) => build_multigraph(i),
        CatalogKey::D1 => {
            let mut b = DigraphBuilder::simple();
            b.arcs(CORE).arc("v3", "v1").arc("a", "v2").arc("v4", "a");
            b.build()
        }
        CatalogKey::Basic { case, barred, dashed } => {
            check_dashed(case, dashed)?;
            let mut b = DigraphBuilder::simple();
            b.arcs(CORE);
            if barred {
                b.arc("v3", "v1");
            }
            with_a_arcs(&mut b, case, dashed);
            b.build()
        }
        CatalogKey::BasicStar { case, barred, dashed } => {
            check_dashed(case, dashed)?;
            let mut b = DigraphBuilder::simple();
            b.arcs(CORE);
            if barred {
                // mirror image of v3 -> v1
                b.arc("v4", "v2");
            }
            with_b_arcs(&mut b, case, dashed);
            b.build()
        }
        CatalogKey::Combination { e, f, dashed } => {
            let mut b = DigraphBuilder::simple();
            b.arcs(CORE);
            // the dashed arcs exist only in (iv), (v) and their mirrors
            with_a_arcs(&mut b, e, dashed);
            with_b_arcs(&mut b, f, dashed);
            b.build()
        }
        CatalogKey::Appendix(i) => build_appendix(i),
        CatalogKey::StructureCe1(variant) => Ok(build_structure_ce1(variant)),
        CatalogKey::StructureCe2 => Ok(build_ce2_instance()),
    }
}

pub fn build_s4() -> Digraph {
    labeled(S4)
}

/// `S4,i` for `i` in `1..=6`.
pub fn build_multigraph(i: u8) -> Result<Digraph> {
    let table = usize::from(i)
        .checked_sub(1)
        .and_then(|k| S4_MULTI.get(k))
        .ok_or_else(|| Error::Argument(format!("S4,{i} does not exist")))?;
    DigraphBuilder::multigraph().arcs(*table).build()
}

/// The structure with `N+(u) = {x1, x3}`, `N-(u) = {x1, x2}`,
/// `N+(x1) = {x2, u}`, `N+(x2) = {v, u}` inside a 2-arc-strong semicomplete
/// split digraph.
///
/// With `V1 = {u, v}`: the drawn arcs are `x1x2, x2v, x1u, x2u, ux1, ux3`.
/// `V2 = {x1, x2, x3}` must be semicomplete while the out-neighbourhoods of
/// `x1`, `x2` are closed, which forces `x3x1` and `x3x2`. `x3` needs a
/// second in-arc, forcing `vx3`. `v` must be adjacent to `x1`, and `x1v` is
/// excluded, forcing `vx1`. `v` needs a second in-arc and only `x3` is left,
/// forcing `x3v`. No pair is left with a free orientation.
///
/// With `V1 = {u}`: `v` can only be `x3`, and the same propagation yields
/// a copy of `S4`.
pub fn build_structure_ce1(variant: Ce1Variant) -> Digraph {
    match variant {
        Ce1Variant::V1Pair => labeled(&[
            ("x1", "x2"),
            ("x2", "v"),
            ("x1", "u"),
            ("x2", "u"),
            ("u", "x1"),
            ("u", "x3"),
            // forced completion
            ("x3", "x1"),
            ("x3", "x2"),
            ("v", "x3"),
            ("v", "x1"),
            ("x3", "v"),
        ]),
        Ce1Variant::V1Single => labeled(&[
            ("x1", "x2"),
            ("x2", "x3"),
            ("x1", "u"),
            ("x2", "u"),
            ("u", "x1"),
            ("u", "x3"),
            ("x3", "x1"),
            ("x3", "x2"),
        ]),
    }
}

/// One instance of the 7-vertex structure with `N+(b) = {u, v, c}`,
/// `N+(c) = {v, a}`, `N+(a) = {u, b}`, `N+(u) = {a, u+}`, `N+(v) = {b, v+}`
/// and distinct `u+`, `v+`. The eleven drawn arcs come first; the rest make
/// `{a, b, c, u+, v+}` semicomplete without touching the fixed
/// out-neighbourhoods. `u` and `c` stay non-adjacent.
pub fn build_ce2_instance() -> Digraph {
    labeled(&[
        ("a", "u"),
        ("u", "u+"),
        ("c", "v"),
        ("v", "b"),
        ("a", "b"),
        ("b", "u"),
        ("u", "a"),
        ("v", "v+"),
        ("b", "v"),
        ("c", "a"),
        ("b", "c"),
        // completion of the semicomplete side
        ("u+", "a"),
        ("v+", "a"),
        ("u+", "b"),
        ("v+", "b"),
        ("u+", "c"),
        ("v+", "c"),
        ("u+", "v+"),
    ])
}

pub fn basic_keys(barred: bool) -> Vec<CatalogKey> {
    let mut keys = Vec::new();
    for case in BasicCase::ALL {
        keys.push(CatalogKey::Basic {
            case,
            barred,
            dashed: false,
        });
        if case.has_dashed() {
            keys.push(CatalogKey::Basic {
                case,
                barred,
                dashed: true,
            });
        }
    }
    keys
}

/// All 25 `(e, f)` pairs in both dashed variants, dashed-free first.
pub fn combination_keys() -> Vec<CatalogKey> {
    let mut keys = Vec::new();
    for dashed in [false, true] {
        for e in BasicCase::ALL {
            for f in BasicCase::ALL {
                keys.push(CatalogKey::Combination { e, f, dashed });
            }
        }
    }
    keys
}

pub fn all_keys() -> Vec<CatalogKey> {
    let mut keys = vec![CatalogKey::S4];
    keys.extend((1..=6).map(CatalogKey::S4Multi));
    keys.push(CatalogKey::D1);
    keys.extend(basic_keys(true));
    keys.extend(basic_keys(false));
    for case in BasicCase::ALL {
        for barred in [false, true] {
            keys.push(CatalogKey::BasicStar {
                case,
                barred,
                dashed: false,
            });
            if case.has_dashed() {
                keys.push(CatalogKey::BasicStar {
                    case,
                    barred,
                    dashed: true,
                });
            }
        }
    }
    keys.extend(combination_keys());
    keys.extend((1..=16).map(CatalogKey::Appendix));
    keys.push(CatalogKey::StructureCe1(Ce1Variant::V1Single));
    keys.push(CatalogKey::StructureCe1(Ce1Variant::V1Pair));
    keys.push(CatalogKey::StructureCe2);
    keys
}

/// Human-readable notes written as comments into exported fixtures.
pub fn notes(key: CatalogKey) -> Vec<String> {
    let mut notes = vec![format!("{key}")];
    let extra: &[&str] = match key {
        CatalogKey::S4 => &["2-arc-strong semicomplete digraph without a strong arc decomposition"],
        CatalogKey::S4Multi(_) => &["S4 plus the doubled arcs of its drawing, listed in drawing order"],
        CatalogKey::D1 => &["subdigraph shared by the five barred basic cases"],
        CatalogKey::Basic { barred: true, .. } => &["core, v3 -> v1 and the four arcs at a"],
        CatalogKey::Basic { barred: false, .. } => &["core and the four arcs at a, without v3 -> v1"],
        CatalogKey::BasicStar { .. } => &["mirror image: reverse, then v1<->v4, v2<->v3, a->b"],
        CatalogKey::Combination { .. } => &["core, arcs at a from (e), arcs at b from (f)*"],
        CatalogKey::Appendix(_) => &["vertex names as in the verification script (a1, a2)"],
        CatalogKey::StructureCe1(Ce1Variant::V1Pair) => &[
            "V1 = {u, v}, V2 = {x1, x2, x3}",
            "arcs 1-6 as drawn; arcs 7-11 forced by semicompleteness of V2,",
            "full adjacency between V1 and V2 and in-degree at least 2",
        ],
        CatalogKey::StructureCe1(Ce1Variant::V1Single) => &["V1 = {u}; the forced completion is a copy of S4"],
        CatalogKey::StructureCe2 => &[
            "arcs 1-11 as drawn; arcs 12-18 complete {a, b, c, u+, v+} with u+ != v+",
            "u and c are non-adjacent, so no split partition exists",
        ],
    };
    if let Some(equivalent) = key.appendix_equivalent() {
        notes.push(format!("same as {equivalent} after renaming a1 -> a, a2 -> b"));
    }
    notes.extend(extra.iter().map(|s| s.to_string()));
    notes
}

/// Renames the script's `a1`/`a2` to `a`/`b`.
pub fn script_labels_to_figure(label: &str) -> String {
    match label {
        "a1" => "a".to_string(),
        "a2" => "b".to_string(),
        other => other.to_string(),
    }
}

/// The 180-degree mirror used to pass between `(e)` and `(e)*`:
/// `v1 <-> v4`, `v2 <-> v3`, `a <-> b`. Combined with arc reversal it maps
/// `(e) x (f)*` onto `(f) x (e)*`.
pub fn mirror_label(label: &str) -> String {
    match label {
        "v1" => "v4",
        "v4" => "v1",
        "v2" => "v3",
        "v3" => "v2",
        "a" => "b",
        "b" => "a",
        other => other,
    }
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_has_eight_arcs() {
        let d = build(CatalogKey::S4).unwrap();
        assert_eq!((d.n(), d.arc_count()), (4, 8));
    }

    #[test]
    fn multigraph_arc_counts() {
        let counts: Vec<usize> = (1..=6).map(|i| build_multigraph(i).unwrap().arc_count()).collect();
        assert_eq!(counts, vec![9, 9, 10, 10, 10, 11]);
        assert!(build_multigraph(7).is_err());
        assert!(build_multigraph(0).is_err());
    }

    #[test]
    fn invalid_keys_are_rejected() {
        assert!(build(CatalogKey::Appendix(17)).is_err());
        assert!(build(CatalogKey::Appendix(0)).is_err());
        assert!(build(CatalogKey::Basic {
            case: BasicCase::I,
            barred: true,
            dashed: true
        })
        .is_err());
    }

    #[test]
    fn slugs_round_trip() {
        for key in all_keys() {
            assert_eq!(CatalogKey::from_slug(&key.slug()), Some(key), "{key}");
        }
    }

    #[test]
    fn combination_i_i_has_fourteen_arcs() {
        let d = build(CatalogKey::Combination {
            e: I,
            f: I,
            dashed: false,
        })
        .unwrap();
        assert_eq!((d.n(), d.arc_count()), (6, 14));
    }

    #[test]
    fn ce2_has_seven_vertices() {
        let d = build_ce2_instance();
        assert_eq!(d.n(), 7);
        let u = d.vertex_by_label("u").unwrap();
        let c = d.vertex_by_label("c").unwrap();
        assert!(!d.adjacent(u, c));
    }
}
