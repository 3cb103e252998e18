//! Exact, witness-producing checkers for proper, acyclic, star, degenerate,
//! degenerate-star, and distance-two colorings, plus the rainbow-neighborhood
//! side condition.
//!
//! Degeneracy convention used throughout this crate: a graph is k-degenerate
//! if every subgraph has a vertex of degree strictly less than k. This is one
//! unit off the common convention; [`degeneracy`] returns the standard value
//! and a graph is k-degenerate here iff `degeneracy(g) <= k - 1`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("vertex {0} is uncolored")]
    PartialColoring(usize),
    #[error("coloring is not proper: edge {0}-{1} is monochromatic")]
    ImproperColoring(usize, usize),
    #[error("exhaustive check refused: {classes} classes exceed the limit {max_classes}")]
    TooManyClasses { classes: usize, max_classes: usize },
    #[error("orientation is missing edge {0}-{1}")]
    PartialOrientation(usize, usize),
    #[error("vertex {vertex} is not in color class {color}")]
    NotInClass { vertex: usize, color: usize },
    #[error("the vertex subset is empty")]
    EmptySubset,
}

/// How strongly a verdict was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    /// The full search space was covered.
    ValidExhaustive,
    /// An incomplete (sound-for-violations) search found nothing.
    ValidRestricted,
    Violated,
}

/// Evidence attached to a `Violated` verdict; always independently checkable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Witness {
    /// A monochromatic edge.
    Edge { u: usize, v: usize },
    /// A path, listed in order (used for two-colored paths on 4 vertices).
    Path { vertices: Vec<usize> },
    /// A cycle, listed in order, on two color classes.
    Cycle { vertices: Vec<usize> },
    /// A subgraph whose minimum degree is at least its number of colors.
    Core { vertices: Vec<usize> },
    /// Two same-colored vertices with a common neighbor.
    Cherry { u: usize, v: usize, via: usize },
    /// A single offending vertex (orientation conditions).
    Vertex { v: usize },
}

/// Checker outcome: status plus, when violated, a witness and a one-line
/// explanation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub detail: String,
}

impl Verdict {
    pub fn valid_exhaustive() -> Self {
        Verdict { status: Status::ValidExhaustive, witness: None, detail: String::new() }
    }

    pub fn valid_restricted() -> Self {
        Verdict { status: Status::ValidRestricted, witness: None, detail: String::new() }
    }

    pub fn violated(witness: Witness, detail: impl Into<String>) -> Self {
        Verdict { status: Status::Violated, witness: Some(witness), detail: detail.into() }
    }

    pub fn is_valid(&self) -> bool {
        self.status != Status::Violated
    }
}

fn require_total(g: &Graph, c: &Coloring) -> Result<(), VerifyError> {
    for v in 0..g.n() {
        if c.get(v).is_none() {
            return Err(VerifyError::PartialColoring(v));
        }
    }
    Ok(())
}

fn require_proper(g: &Graph, c: &Coloring) -> Result<(), VerifyError> {
    require_total(g, c)?;
    for (u, v) in g.edges() {
        if c.get(u) == c.get(v) {
            return Err(VerifyError::ImproperColoring(u, v));
        }
    }
    Ok(())
}

/// No edge is monochromatic.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<Verdict, VerifyError> {
    require_total(g, c)?;
    for (u, v) in g.edges() {
        if c.get(u) == c.get(v) {
            return Ok(Verdict::violated(
                Witness::Edge { u, v },
                format!("edge {u}-{v} has color {} at both ends", c.get(u).unwrap()),
            ));
        }
    }
    Ok(Verdict::valid_exhaustive())
}

/// The union of any two color classes induces a forest.
pub fn is_acyclic(g: &Graph, c: &Coloring) -> Result<Verdict, VerifyError> {
    require_proper(g, c)?;
    let classes = c.classes();
    let colors: Vec<usize> = classes.keys().copied().collect();
    for (a, &i) in colors.iter().enumerate() {
        for &j in &colors[a + 1..] {
            let verts: BTreeSet<usize> =
                classes[&i].iter().chain(classes[&j].iter()).copied().collect();
            if let Some(cycle) = find_cycle(g, &verts) {
                return Ok(Verdict::violated(
                    Witness::Cycle { vertices: cycle },
                    format!("classes {i} and {j} induce a cycle"),
                ));
            }
        }
    }
    Ok(Verdict::valid_exhaustive())
}

/// A cycle in the subgraph induced by `verts`, as an ordered closed walk.
fn find_cycle(g: &Graph, verts: &BTreeSet<usize>) -> Option<Vec<usize>> {
    // Depth-first search; in an undirected graph every non-tree edge goes to
    // an ancestor, so walking the parent chain recovers the cycle.
    let mut parent: BTreeMap<usize, Option<usize>> = BTreeMap::new();
    for &root in verts {
        if parent.contains_key(&root) {
            continue;
        }
        parent.insert(root, None);
        let mut stack = vec![(root, None::<usize>)];
        while let Some((u, pu)) = stack.pop() {
            for &w in g.adj(u) {
                if !verts.contains(&w) || Some(w) == pu {
                    continue;
                }
                if parent.contains_key(&w) {
                    // Found a cycle; close it along parent chains. With a
                    // plain stack-based search w need not be an ancestor of
                    // u, so join the two root paths at their split point.
                    let path_u = root_path(&parent, u);
                    let path_w = root_path(&parent, w);
                    return Some(join_cycle(path_u, path_w));
                }
                parent.insert(w, Some(u));
                stack.push((w, Some(u)));
            }
        }
    }
    None
}

/// Path from `v` up to its search root, starting at `v`.
fn root_path(parent: &BTreeMap<usize, Option<usize>>, v: usize) -> Vec<usize> {
    let mut path = vec![v];
    let mut cur = v;
    while let Some(Some(p)) = parent.get(&cur) {
        path.push(*p);
        cur = *p;
    }
    path
}

/// Combine two root paths sharing a suffix into the cycle through their
/// endpoints: u ... split ... w, closed by the edge u-w.
fn join_cycle(mut path_u: Vec<usize>, mut path_w: Vec<usize>) -> Vec<usize> {
    // Trim the common suffix, remembering the deepest shared vertex.
    let mut split = *path_u.last().expect("paths reach the root");
    while let (Some(&a), Some(&b)) = (path_u.last(), path_w.last()) {
        if a != b {
            break;
        }
        split = a;
        path_u.pop();
        path_w.pop();
    }
    let mut cycle = path_u;
    cycle.push(split);
    cycle.extend(path_w.into_iter().rev());
    cycle
}

/// No path on four vertices uses exactly two colors.
pub fn is_star(g: &Graph, c: &Coloring) -> Result<Verdict, VerifyError> {
    require_proper(g, c)?;
    for (e0, e1) in g.edges() {
        for (u, v) in [(e0, e1), (e1, e0)] {
            let cu = c.get(u).unwrap();
            let cv = c.get(v).unwrap();
            for &x in g.adj(u) {
                if x == v || c.get(x) != Some(cv) {
                    continue;
                }
                for &w in g.adj(v) {
                    if w == u || w == x || c.get(w) != Some(cu) {
                        continue;
                    }
                    return Ok(Verdict::violated(
                        Witness::Path { vertices: vec![x, u, v, w] },
                        format!("path {x}-{u}-{v}-{w} uses only colors {cv} and {cu}"),
                    ));
                }
            }
        }
    }
    Ok(Verdict::valid_exhaustive())
}

/// Search mode for [`is_degenerate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegenerateMode {
    /// Check every subset of color classes; refuse above `max_classes`.
    Exhaustive { max_classes: usize },
    /// Incomplete search, sound for violations; valid results are labeled
    /// [`Status::ValidRestricted`].
    Restricted,
}

impl DegenerateMode {
    /// Exhaustive with the default class limit of 20.
    pub fn exhaustive() -> Self {
        DegenerateMode::Exhaustive { max_classes: 20 }
    }
}

/// Remove vertices of induced degree `< k` repeatedly; return the survivors.
fn peel(g: &Graph, verts: &BTreeSet<usize>, k: usize) -> BTreeSet<usize> {
    let mut alive = verts.clone();
    let mut deg: BTreeMap<usize, usize> = alive
        .iter()
        .map(|&v| (v, g.adj(v).iter().filter(|u| alive.contains(u)).count()))
        .collect();
    let mut queue: Vec<usize> = deg.iter().filter(|&(_, &d)| d < k).map(|(&v, _)| v).collect();
    while let Some(v) = queue.pop() {
        if !alive.remove(&v) {
            continue;
        }
        for &u in g.adj(v) {
            if let Some(d) = deg.get_mut(&u) {
                if alive.contains(&u) {
                    *d -= 1;
                    if *d == k - 1 {
                        queue.push(u);
                    }
                }
            }
        }
    }
    alive
}

/// The union of any k color classes induces a k-degenerate subgraph
/// (every subgraph has a vertex of degree < k).
///
/// A violation witness is a vertex set whose induced subgraph has minimum
/// degree at least its number of colors; see [`core_is_witness`].
pub fn is_degenerate(g: &Graph, c: &Coloring, mode: DegenerateMode) -> Result<Verdict, VerifyError> {
    require_proper(g, c)?;
    let classes = c.classes();
    let colors: Vec<usize> = classes.keys().copied().collect();
    match mode {
        DegenerateMode::Exhaustive { max_classes } => {
            if colors.len() > max_classes {
                return Err(VerifyError::TooManyClasses {
                    classes: colors.len(),
                    max_classes,
                });
            }
            // Singleton subsets are independent sets and always peel away.
            for mask in 1u64..(1 << colors.len()) {
                let k = mask.count_ones() as usize;
                if k < 2 {
                    continue;
                }
                let subset: Vec<usize> = colors
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &col)| col)
                    .collect();
                if let Some(v) = check_class_subset(g, &classes, &subset) {
                    return Ok(v);
                }
            }
            Ok(Verdict::valid_exhaustive())
        }
        DegenerateMode::Restricted => Ok(restricted_degenerate(g, c, &classes)),
    }
}

/// Peel the union of `subset`'s classes with threshold `|subset|`.
fn check_class_subset(
    g: &Graph,
    classes: &BTreeMap<usize, Vec<usize>>,
    subset: &[usize],
) -> Option<Verdict> {
    let verts: BTreeSet<usize> =
        subset.iter().flat_map(|col| classes[col].iter().copied()).collect();
    let core = peel(g, &verts, subset.len());
    if core.is_empty() {
        None
    } else {
        Some(Verdict::violated(
            Witness::Core { vertices: core.into_iter().collect() },
            format!("classes {subset:?} induce a subgraph with no vertex of degree < {}", subset.len()),
        ))
    }
}

/// Incomplete degeneracy search: class pairs joined by an edge, then full
/// subset enumeration inside small co-occurrence components of multi-vertex
/// classes, then a global core scan. Sound for violations.
fn restricted_degenerate(
    g: &Graph,
    c: &Coloring,
    classes: &BTreeMap<usize, Vec<usize>>,
) -> Verdict {
    let colors: Vec<usize> = classes.keys().copied().collect();

    // Class co-occurrence: which color pairs have a crossing edge.
    let mut touching: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (u, v) in g.edges() {
        let (cu, cv) = (c.get(u).unwrap(), c.get(v).unwrap());
        touching.insert((cu.min(cv), cu.max(cv)));
    }

    for &(i, j) in &touching {
        if let Some(v) = check_class_subset(g, classes, &[i, j]) {
            return v;
        }
    }

    // Components of the co-occurrence graph restricted to classes with at
    // least two vertices; exhaust subsets inside small components.
    const COMPONENT_CAP: usize = 12;
    let multi: BTreeSet<usize> =
        colors.iter().copied().filter(|col| classes[col].len() >= 2).collect();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for &start in &multi {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        seen.insert(start);
        let mut head = 0;
        while head < comp.len() {
            let cur = comp[head];
            head += 1;
            for &other in &multi {
                if !seen.contains(&other)
                    && touching.contains(&(cur.min(other), cur.max(other)))
                {
                    seen.insert(other);
                    comp.push(other);
                }
            }
        }
        comp.sort_unstable();
        if comp.len() <= COMPONENT_CAP {
            for mask in 1u64..(1 << comp.len()) {
                if mask.count_ones() < 3 {
                    continue; // pairs were handled above
                }
                let subset: Vec<usize> = comp
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &col)| col)
                    .collect();
                if let Some(v) = check_class_subset(g, classes, &subset) {
                    return v;
                }
            }
        }
    }

    // Global scan: a k-core colored with at most k colors is a violation.
    let all: BTreeSet<usize> = (0..g.n()).collect();
    for k in 2..=colors.len() {
        let core = peel(g, &all, k);
        if core.is_empty() {
            break;
        }
        let used: BTreeSet<usize> = core.iter().map(|&v| c.get(v).unwrap()).collect();
        if used.len() <= k {
            return Verdict::violated(
                Witness::Core { vertices: core.into_iter().collect() },
                format!("a subgraph of minimum degree {k} uses only {} colors", used.len()),
            );
        }
    }

    Verdict::valid_restricted()
}

/// Re-validate a degeneracy witness: the induced subgraph's minimum degree
/// must be at least its number of distinct colors.
pub fn core_is_witness(g: &Graph, c: &Coloring, core: &[usize]) -> bool {
    if core.is_empty() {
        return false;
    }
    let set: BTreeSet<usize> = core.iter().copied().collect();
    let min_deg = set
        .iter()
        .map(|&v| g.adj(v).iter().filter(|u| set.contains(u)).count())
        .min()
        .unwrap();
    let used: BTreeSet<Option<usize>> = set.iter().map(|&v| c.get(v)).collect();
    min_deg >= used.len()
}

/// Both star and degenerate; the first violation found wins.
pub fn is_degenerate_star(
    g: &Graph,
    c: &Coloring,
    mode: DegenerateMode,
) -> Result<Verdict, VerifyError> {
    let star = is_star(g, c)?;
    if !star.is_valid() {
        return Ok(star);
    }
    let degen = is_degenerate(g, c, mode)?;
    if !degen.is_valid() {
        return Ok(degen);
    }
    Ok(if star.status == Status::ValidExhaustive && degen.status == Status::ValidExhaustive {
        Verdict::valid_exhaustive()
    } else {
        Verdict::valid_restricted()
    })
}

/// Proper, and any two vertices at distance two get distinct colors.
pub fn is_distance_two(g: &Graph, c: &Coloring) -> Result<Verdict, VerifyError> {
    let proper = is_proper(g, c)?;
    if !proper.is_valid() {
        return Ok(proper);
    }
    for v in 0..g.n() {
        let nbs: Vec<usize> = g.neighbors(v).collect();
        for (i, &x) in nbs.iter().enumerate() {
            for &y in &nbs[i + 1..] {
                if c.get(x) == c.get(y) {
                    return Ok(Verdict::violated(
                        Witness::Cherry { u: x, v: y, via: v },
                        format!(
                            "vertices {x} and {y} share color {} and the neighbor {v}",
                            c.get(x).unwrap()
                        ),
                    ));
                }
            }
        }
    }
    Ok(Verdict::valid_exhaustive())
}

/// Every vertex of degree at most `threshold` has rainbow neighborhood
/// (all neighbors colored differently).
pub fn neighbors_distinct(
    g: &Graph,
    c: &Coloring,
    threshold: usize,
) -> Result<Verdict, VerifyError> {
    require_total(g, c)?;
    for v in 0..g.n() {
        if g.degree(v) > threshold {
            continue;
        }
        let nbs: Vec<usize> = g.neighbors(v).collect();
        for (i, &x) in nbs.iter().enumerate() {
            for &y in &nbs[i + 1..] {
                if c.get(x) == c.get(y) {
                    return Ok(Verdict::violated(
                        Witness::Cherry { u: x, v: y, via: v },
                        format!(
                            "vertex {v} of degree {} has neighbors {x}, {y} with equal color",
                            g.degree(v)
                        ),
                    ));
                }
            }
        }
    }
    Ok(Verdict::valid_exhaustive())
}

/// Exact edge counts from `s` (a subset of class `color`) to every other
/// color class, omitting zero counts.
pub fn class_edge_profile(
    g: &Graph,
    c: &Coloring,
    s: &[usize],
    color: usize,
) -> Result<BTreeMap<usize, usize>, VerifyError> {
    if s.is_empty() {
        return Err(VerifyError::EmptySubset);
    }
    for &v in s {
        if c.get(v) != Some(color) {
            return Err(VerifyError::NotInClass { vertex: v, color });
        }
    }
    let mut counts = BTreeMap::new();
    for &v in s {
        for &u in g.adj(v) {
            if let Some(cu) = c.get(u) {
                if cu != color {
                    *counts.entry(cu).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(counts)
}

/// Standard degeneracy: the maximum over subgraphs of the minimum degree,
/// computed by repeated minimum-degree removal.
pub fn degeneracy(g: &Graph) -> usize {
    let mut alive: BTreeSet<usize> = (0..g.n()).collect();
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut best = 0;
    while !alive.is_empty() {
        let &v = alive.iter().min_by_key(|&&v| (deg[v], v)).unwrap();
        best = best.max(deg[v]);
        alive.remove(&v);
        for &u in g.adj(v) {
            if alive.contains(&u) {
                deg[u] -= 1;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build;

    fn col(list: &[usize]) -> Coloring {
        Coloring::from_vec(list.to_vec())
    }

    #[test]
    fn proper_detects_monochromatic_edges() {
        let k2 = build::complete(2);
        assert_eq!(is_proper(&k2, &col(&[1, 1])).unwrap().witness, Some(Witness::Edge { u: 0, v: 1 }));
        assert!(is_proper(&k2, &col(&[1, 2])).unwrap().is_valid());
        assert!(is_proper(&build::cycle(5), &col(&[1, 2, 1, 2, 3])).unwrap().is_valid());
        assert_eq!(
            is_proper(&k2, &Coloring::uncolored(2)),
            Err(VerifyError::PartialColoring(0))
        );
    }

    #[test]
    fn acyclic_finds_two_colored_cycles() {
        let c4 = build::cycle(4);
        let bad = is_acyclic(&c4, &col(&[1, 2, 1, 2])).unwrap();
        assert_eq!(bad.status, Status::Violated);
        match bad.witness.unwrap() {
            Witness::Cycle { vertices } => {
                assert_eq!(vertices.len(), 4);
                // Closed walk: consecutive entries adjacent, ends adjacent.
                for i in 0..4 {
                    assert!(c4.has_edge(vertices[i], vertices[(i + 1) % 4]));
                }
            }
            w => panic!("unexpected witness {w:?}"),
        }
        assert!(is_acyclic(&c4, &col(&[1, 2, 1, 3])).unwrap().is_valid());
        assert!(is_acyclic(&build::path(6), &col(&[1, 2, 1, 2, 1, 2])).unwrap().is_valid());
    }

    #[test]
    fn star_finds_two_colored_paths() {
        let c4 = build::cycle(4);
        let bad = is_star(&c4, &col(&[1, 2, 1, 2])).unwrap();
        assert_eq!(bad.status, Status::Violated);
        match bad.witness.unwrap() {
            Witness::Path { vertices } => {
                assert_eq!(vertices.len(), 4);
                for w in vertices.windows(2) {
                    assert!(c4.has_edge(w[0], w[1]));
                }
            }
            w => panic!("unexpected witness {w:?}"),
        }
        let star3 = build::star(3);
        assert!(is_star(&star3, &col(&[1, 2, 2, 2])).unwrap().is_valid());
        assert!(is_star(&build::path(4), &col(&[1, 2, 3, 1])).unwrap().is_valid());
    }

    #[test]
    fn degenerate_examples() {
        let c4 = build::cycle(4);
        let bad = is_degenerate(&c4, &col(&[1, 2, 1, 2]), DegenerateMode::exhaustive()).unwrap();
        assert_eq!(bad.witness, Some(Witness::Core { vertices: vec![0, 1, 2, 3] }));
        assert!(core_is_witness(&c4, &col(&[1, 2, 1, 2]), &[0, 1, 2, 3]));

        let good = is_degenerate(&c4, &col(&[1, 2, 1, 3]), DegenerateMode::exhaustive()).unwrap();
        assert_eq!(good.status, Status::ValidExhaustive);

        let k33 = build::complete_bipartite(3, 3);
        let sides = col(&[1, 1, 1, 2, 2, 2]);
        let bad = is_degenerate(&k33, &sides, DegenerateMode::exhaustive()).unwrap();
        assert_eq!(bad.witness, Some(Witness::Core { vertices: (0..6).collect() }));

        // Restricted mode finds the same violations but labels clean results.
        let r = is_degenerate(&k33, &sides, DegenerateMode::Restricted).unwrap();
        assert_eq!(r.status, Status::Violated);
        let r = is_degenerate(&c4, &col(&[1, 2, 1, 3]), DegenerateMode::Restricted).unwrap();
        assert_eq!(r.status, Status::ValidRestricted);
    }

    #[test]
    fn degenerate_refuses_oversized_exhaustive_runs() {
        let g = build::complete(4);
        let rainbow = col(&[0, 1, 2, 3]);
        let e = is_degenerate(&g, &rainbow, DegenerateMode::Exhaustive { max_classes: 3 });
        assert_eq!(e, Err(VerifyError::TooManyClasses { classes: 4, max_classes: 3 }));
        assert!(is_degenerate(&g, &rainbow, DegenerateMode::exhaustive()).unwrap().is_valid());
    }

    #[test]
    fn degenerate_star_combines_checks() {
        let k4 = build::complete(4);
        assert_eq!(
            is_degenerate_star(&k4, &col(&[0, 1, 2, 3]), DegenerateMode::exhaustive())
                .unwrap()
                .status,
            Status::ValidExhaustive
        );
        let c4 = build::cycle(4);
        assert_eq!(
            is_degenerate_star(&c4, &col(&[1, 2, 1, 2]), DegenerateMode::exhaustive())
                .unwrap()
                .status,
            Status::Violated
        );
        assert_eq!(
            is_degenerate_star(&c4, &col(&[1, 2, 1, 3]), DegenerateMode::exhaustive())
                .unwrap()
                .status,
            Status::ValidExhaustive
        );
    }

    #[test]
    fn distance_two_examples() {
        let p3 = build::path(3);
        let bad = is_distance_two(&p3, &col(&[1, 2, 1])).unwrap();
        assert_eq!(bad.witness, Some(Witness::Cherry { u: 0, v: 2, via: 1 }));
        assert!(is_distance_two(&p3, &col(&[1, 2, 3])).unwrap().is_valid());
        // A 3-coloring of the 3-star always repeats within the neighborhood.
        let s3 = build::star(3);
        assert_eq!(is_distance_two(&s3, &col(&[1, 2, 3, 2])).unwrap().status, Status::Violated);
    }

    #[test]
    fn neighbors_distinct_examples() {
        let s3 = build::star(3);
        let repeated = col(&[1, 2, 2, 2]);
        let bad = neighbors_distinct(&s3, &repeated, 12).unwrap();
        assert_eq!(bad.witness, Some(Witness::Cherry { u: 1, v: 2, via: 0 }));
        assert!(neighbors_distinct(&s3, &col(&[1, 2, 3, 4]), 12).unwrap().is_valid());
        assert!(neighbors_distinct(&s3, &repeated, 0).unwrap().is_valid());
    }

    #[test]
    fn hierarchy_on_a_star_coloring() {
        // A degenerate-star coloring is star, degenerate, and acyclic.
        let g = build::cycle(5);
        let c = col(&[1, 2, 1, 3, 4]);
        assert!(is_degenerate_star(&g, &c, DegenerateMode::exhaustive()).unwrap().is_valid());
        assert!(is_star(&g, &c).unwrap().is_valid());
        assert!(is_degenerate(&g, &c, DegenerateMode::exhaustive()).unwrap().is_valid());
        assert!(is_acyclic(&g, &c).unwrap().is_valid());
    }

    #[test]
    fn class_edge_profile_examples() {
        let k33 = build::complete_bipartite(3, 3);
        let sides = col(&[1, 1, 1, 2, 2, 2]);
        assert_eq!(
            class_edge_profile(&k33, &sides, &[0], 1).unwrap(),
            BTreeMap::from([(2, 3)])
        );
        let c4 = build::cycle(4);
        assert_eq!(
            class_edge_profile(&c4, &col(&[1, 2, 1, 2]), &[0, 2], 1).unwrap(),
            BTreeMap::from([(2, 4)])
        );
        let k4 = build::complete(4);
        assert_eq!(
            class_edge_profile(&k4, &col(&[0, 1, 2, 3]), &[0], 0).unwrap(),
            BTreeMap::from([(1, 1), (2, 1), (3, 1)])
        );
        assert_eq!(
            class_edge_profile(&c4, &col(&[1, 2, 1, 2]), &[1], 1),
            Err(VerifyError::NotInClass { vertex: 1, color: 1 })
        );
        assert_eq!(
            class_edge_profile(&c4, &col(&[1, 2, 1, 2]), &[], 1),
            Err(VerifyError::EmptySubset)
        );
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(&build::path(5)), 1);
        assert_eq!(degeneracy(&build::cycle(4)), 2);
        assert_eq!(degeneracy(&build::complete(4)), 3);
        assert_eq!(degeneracy(&Graph::empty(3)), 0);
    }

    #[test]
    fn improper_inputs_are_errors_for_structured_checks() {
        let c4 = build::cycle(4);
        let mono = col(&[1, 1, 2, 3]);
        assert_eq!(is_star(&c4, &mono), Err(VerifyError::ImproperColoring(0, 1)));
        assert_eq!(is_acyclic(&c4, &mono), Err(VerifyError::ImproperColoring(0, 1)));
        assert_eq!(
            is_degenerate(&c4, &mono, DegenerateMode::exhaustive()),
            Err(VerifyError::ImproperColoring(0, 1))
        );
        // Distance-two folds properness into its verdict instead.
        assert_eq!(is_distance_two(&c4, &mono).unwrap().status, Status::Violated);
    }
}
