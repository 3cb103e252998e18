//! Exact brute-force chromatic numbers for small graphs, via canonical
//! enumeration of proper colorings checked against the verifiers.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::verify::{self, DegenerateMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the feasibility limit {limit}")]
    FeasibilityRefused { n: usize, limit: usize },
}

/// Which coloring notion a chromatic search targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringKind {
    Proper,
    Acyclic,
    Star,
    Degenerate,
    DegenerateStar,
    DistanceTwo,
}

impl ColoringKind {
    pub const ALL: [ColoringKind; 6] = [
        ColoringKind::Proper,
        ColoringKind::Acyclic,
        ColoringKind::Star,
        ColoringKind::Degenerate,
        ColoringKind::DegenerateStar,
        ColoringKind::DistanceTwo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ColoringKind::Proper => "proper",
            ColoringKind::Acyclic => "acyclic",
            ColoringKind::Star => "star",
            ColoringKind::Degenerate => "degenerate",
            ColoringKind::DegenerateStar => "degenerate_star",
            ColoringKind::DistanceTwo => "distance_two",
        }
    }

    /// Whether a total proper coloring satisfies this notion.
    pub fn accepts(self, g: &Graph, c: &Coloring) -> bool {
        let k = c.used_colors().len().max(1);
        match self {
            ColoringKind::Proper => true,
            ColoringKind::Acyclic => verify::is_acyclic(g, c).expect("proper input").is_valid(),
            ColoringKind::Star => verify::is_star(g, c).expect("proper input").is_valid(),
            ColoringKind::Degenerate => {
                verify::is_degenerate(g, c, DegenerateMode::Exhaustive { max_classes: k })
                    .expect("proper input")
                    .is_valid()
            }
            ColoringKind::DegenerateStar => verify::is_degenerate_star(
                g,
                c,
                DegenerateMode::Exhaustive { max_classes: k },
            )
            .expect("proper input")
            .is_valid(),
            ColoringKind::DistanceTwo => {
                verify::is_distance_two(g, c).expect("total input").is_valid()
            }
        }
    }
}

/// An exact chromatic value with its witness and search effort.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub kind: ColoringKind,
    pub value: usize,
    pub witness: Coloring,
    /// Candidate colorings verified across all palette sizes.
    pub candidates: u64,
}

/// Default vertex-count guard for [`chromatic`].
pub const DEFAULT_FEASIBILITY_LIMIT: usize = 12;

/// Least number of colors admitting a coloring of the given kind, found by
/// ascending exhaustive search over canonical proper colorings. The value is
/// certified minimal because the search at `value - 1` was exhausted.
pub fn chromatic(g: &Graph, kind: ColoringKind) -> Result<OracleResult, OracleError> {
    chromatic_with_limit(g, kind, DEFAULT_FEASIBILITY_LIMIT)
}

/// [`chromatic`] with a caller-chosen feasibility guard.
pub fn chromatic_with_limit(
    g: &Graph,
    kind: ColoringKind,
    limit: usize,
) -> Result<OracleResult, OracleError> {
    if g.n() > limit {
        return Err(OracleError::FeasibilityRefused { n: g.n(), limit });
    }
    if g.n() == 0 {
        return Ok(OracleResult { kind, value: 0, witness: Coloring::uncolored(0), candidates: 0 });
    }
    let mut candidates = 0;
    for k in 1..=g.n() {
        for c in enumerate_colorings(g, k) {
            // Colorings on fewer colors were already covered at smaller k.
            if c.used_colors().len() != k {
                continue;
            }
            candidates += 1;
            if kind.accepts(g, &c) {
                return Ok(OracleResult { kind, value: k, witness: c, candidates });
            }
        }
    }
    unreachable!("a rainbow coloring satisfies every notion")
}

/// Lazy enumeration of proper colorings with at most `max_colors` colors, one
/// per partition into color classes: colors appear in first-use order
/// (vertex 0 has color 0, and each new color is the smallest unused).
pub fn enumerate_colorings(g: &Graph, max_colors: usize) -> ColoringIter<'_> {
    ColoringIter { g, max_colors, partial: Vec::new(), backtracking: false, done: false }
}

pub struct ColoringIter<'a> {
    g: &'a Graph,
    max_colors: usize,
    partial: Vec<usize>,
    backtracking: bool,
    done: bool,
}

impl ColoringIter<'_> {
    /// Smallest admissible color of vertex `v` that is at least `from`:
    /// proper against earlier neighbors and within the first-use cap.
    fn first_ok(&self, v: usize, from: usize) -> Option<usize> {
        let cap = self
            .partial
            .iter()
            .copied()
            .max()
            .map_or(0, |mx| mx + 1)
            .min(self.max_colors.checked_sub(1)?);
        'colors: for color in from..=cap {
            for &u in self.g.adj(v) {
                if u < v && self.partial[u] == color {
                    continue 'colors;
                }
            }
            return Some(color);
        }
        None
    }
}

impl Iterator for ColoringIter<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        let n = self.g.n();
        if self.done {
            return None;
        }
        if n == 0 {
            self.done = true;
            return Some(Coloring::uncolored(0));
        }
        loop {
            if self.backtracking {
                loop {
                    let Some(color) = self.partial.pop() else {
                        self.done = true;
                        return None;
                    };
                    let v = self.partial.len();
                    if let Some(next) = self.first_ok(v, color + 1) {
                        self.partial.push(next);
                        self.backtracking = false;
                        break;
                    }
                }
            }
            while self.partial.len() < n {
                let v = self.partial.len();
                match self.first_ok(v, 0) {
                    Some(color) => self.partial.push(color),
                    None => {
                        self.backtracking = true;
                        break;
                    }
                }
            }
            if self.partial.len() == n {
                self.backtracking = true;
                return Some(Coloring::from_vec(self.partial.clone()));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build;

    #[test]
    fn canonical_enumeration_counts() {
        assert_eq!(enumerate_colorings(&build::complete(2), 2).count(), 1);
        assert_eq!(enumerate_colorings(&Graph::empty(3), 2).count(), 4);
        assert_eq!(enumerate_colorings(&build::complete(3), 2).count(), 0);
        // All set partitions of a 3-vertex empty graph: Bell(3) = 5.
        assert_eq!(enumerate_colorings(&Graph::empty(3), 3).count(), 5);
    }

    #[test]
    fn enumeration_yields_canonical_proper_colorings() {
        let g = build::cycle(4);
        let all: Vec<Coloring> = enumerate_colorings(&g, 3).collect();
        for c in &all {
            assert!(verify::is_proper(&g, c).unwrap().is_valid());
            // First-use order: color c appears only after all colors < c.
            let mut next_new = 0;
            for v in 0..4 {
                let col = c.get(v).unwrap();
                assert!(col <= next_new);
                if col == next_new {
                    next_new += 1;
                }
            }
        }
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn tree_degenerate_chromatic_is_two() {
        for tree in [build::path(5), build::star(4), build::path(2)] {
            let r = chromatic(&tree, ColoringKind::Degenerate).unwrap();
            assert_eq!(r.value, 2);
            assert!(ColoringKind::Degenerate.accepts(&tree, &r.witness));
        }
    }

    #[test]
    fn known_star_values() {
        assert_eq!(chromatic(&build::path(4), ColoringKind::Star).unwrap().value, 3);
        assert_eq!(chromatic(&build::cycle(5), ColoringKind::Star).unwrap().value, 4);
        assert_eq!(chromatic(&build::cycle(4), ColoringKind::Star).unwrap().value, 3);
    }

    #[test]
    fn known_degenerate_star_values() {
        assert_eq!(chromatic(&build::complete(4), ColoringKind::DegenerateStar).unwrap().value, 4);
        assert_eq!(chromatic(&build::cycle(4), ColoringKind::DegenerateStar).unwrap().value, 3);
    }

    #[test]
    fn degenerate_and_star_are_incomparable_on_a_path() {
        // A path on 4 vertices is a tree but not a star, so its star value
        // exceeds its degenerate value.
        let p4 = build::path(4);
        let d = chromatic(&p4, ColoringKind::Degenerate).unwrap().value;
        let s = chromatic(&p4, ColoringKind::Star).unwrap().value;
        assert_eq!((d, s), (2, 3));
    }

    #[test]
    fn hierarchy_on_small_graphs() {
        for g in [build::cycle(5), build::complete(4), build::path(6), build::star(3)] {
            let val = |k| chromatic(&g, k).unwrap().value;
            let (chi, a, d, s, sd) = (
                val(ColoringKind::Proper),
                val(ColoringKind::Acyclic),
                val(ColoringKind::Degenerate),
                val(ColoringKind::Star),
                val(ColoringKind::DegenerateStar),
            );
            assert!(chi <= a && a <= d && d <= sd);
            assert!(a <= s && s <= sd);
        }
    }

    #[test]
    fn witnesses_reverify_and_minimality_holds() {
        let g = build::cycle(5);
        let r = chromatic(&g, ColoringKind::Star).unwrap();
        assert!(ColoringKind::Star.accepts(&g, &r.witness));
        // One fewer color admits nothing.
        assert!(enumerate_colorings(&g, r.value - 1).all(|c| !ColoringKind::Star.accepts(&g, &c)));
    }

    #[test]
    fn feasibility_guard() {
        let big = build::cycle(13);
        assert_eq!(
            chromatic(&big, ColoringKind::Proper),
            Err(OracleError::FeasibilityRefused { n: 13, limit: 12 })
        );
        // An odd cycle needs three colors.
        assert_eq!(chromatic_with_limit(&big, ColoringKind::Proper, 13).unwrap().value, 3);
    }

    #[test]
    fn distance_two_on_a_star_needs_all_colors() {
        let s3 = build::star(3);
        assert_eq!(chromatic(&s3, ColoringKind::DistanceTwo).unwrap().value, 4);
    }

    #[test]
    fn empty_and_tiny_graphs() {
        assert_eq!(chromatic(&Graph::empty(0), ColoringKind::Star).unwrap().value, 0);
        assert_eq!(chromatic(&Graph::empty(1), ColoringKind::DegenerateStar).unwrap().value, 1);
        assert_eq!(chromatic(&Graph::empty(3), ColoringKind::Proper).unwrap().value, 1);
    }
}
