//! Reduction-and-extension pipeline for graphs of bounded Euler genus:
//! repeatedly remove reducible vertices down to an irreducible core, color
//! the core (special high-degree vertices get globally unique colors, the
//! rest a distance-two or resampled base coloring), then replay the
//! reduction backward, extending the coloring while maintaining the star
//! orientation conditions and rainbow neighborhoods at low-degree vertices.
//!
//! A vertex is reducible if its degree is at most 2, or its degree is 5-i
//! and it has a neighbor of degree at most 9+i for some i in {0,1,2}.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Roots;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Coloring, ListAssignment};
use crate::graph::{Graph, VertexMap};
use crate::lll::{self, LllError};
use crate::orient::{self, Certificate, Orientation};
use crate::verify;

#[derive(Debug, Clone, Error)]
pub enum ReduceError {
    #[error("special vertex {vertex} has no unused list color left")]
    SpecialListTooSmall { vertex: usize },
    #[error("no admissible color available for vertex {vertex}")]
    NoAvailableColor { vertex: usize },
    #[error("base coloring is not a star coloring: {0}")]
    BaseNotStar(String),
    #[error("base colorer failed: {0}")]
    Base(#[from] LllError),
}

/// Why a vertex is reducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReductionKind {
    /// Degree at most 1: delete outright.
    DeleteLowDegree,
    /// Degree exactly 2: remove and join the two neighbors.
    SuppressDegree2,
    /// Degree 5-i with a neighbor of degree at most 9+i: contract into it.
    ContractIntoNeighbor,
}

/// A reducible vertex together with its applicable rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reducible {
    pub v: usize,
    pub kind: ReductionKind,
    pub partner: Option<usize>,
}

/// Lowest-index reducible vertex, if any. The rule is forced by the degree;
/// for contractions the partner is the lowest-index qualifying neighbor.
pub fn find_reducible(g: &Graph) -> Option<Reducible> {
    for v in 0..g.n() {
        let d = g.degree(v);
        if d <= 1 {
            return Some(Reducible { v, kind: ReductionKind::DeleteLowDegree, partner: None });
        }
        if d == 2 {
            return Some(Reducible { v, kind: ReductionKind::SuppressDegree2, partner: None });
        }
        if (3..=5).contains(&d) {
            let cap = 14 - d; // degree 5-i pairs with neighbor bound 9+i
            if let Some(&u) = g.adj(v).iter().find(|&&u| g.degree(u) <= cap) {
                return Some(Reducible {
                    v,
                    kind: ReductionKind::ContractIntoNeighbor,
                    partner: Some(u),
                });
            }
        }
    }
    None
}

/// One reduction step, recorded in original vertex ids so the whole trace
/// can be replayed in either direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionRecord {
    pub kind: ReductionKind,
    /// The removed vertex.
    pub vertex: usize,
    /// Contraction target (keeps its identity and its color list).
    pub partner: Option<usize>,
    /// Neighbors of `vertex` at removal time, sorted.
    pub neighbors: Vec<usize>,
    /// Suppression only: the joining edge was already present.
    pub edge_preexisting: bool,
    /// Contraction only: neighbors newly attached to the partner.
    pub added_to_partner: Vec<usize>,
}

/// The full reduction history: ordered records, the irreducible core, and
/// the map from original ids to core ids.
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub records: Vec<ReductionRecord>,
    pub core: Graph,
    pub map: VertexMap,
    pub original_n: usize,
}

impl ReductionTrace {
    /// Original ids of the core vertices, ascending (inverse of `map`).
    pub fn core_ids(&self) -> Vec<usize> {
        let mut ids = vec![usize::MAX; self.core.n()];
        for orig in 0..self.original_n {
            if let Some(cur) = self.map.get(orig) {
                ids[cur] = orig;
            }
        }
        ids
    }
}

/// Reduce until no reducible vertex remains. Lists ride along unchanged: a
/// contraction keeps the partner's identity, so the surviving vertices keep
/// their own lists and the returned assignment is the projection onto the
/// core.
pub fn reduce_fully(g: &Graph, lists: &ListAssignment) -> (Graph, ListAssignment, ReductionTrace) {
    let mut cur = g.clone();
    let mut map = VertexMap::identity(g.n());
    let mut records = Vec::new();
    loop {
        let Some(red) = find_reducible(&cur) else { break };
        // Current ids -> original ids, for the record.
        let mut inv = vec![usize::MAX; cur.n()];
        for orig in 0..g.n() {
            if let Some(c) = map.get(orig) {
                inv[c] = orig;
            }
        }
        let neighbors: Vec<usize> = cur.neighbors(red.v).map(|u| inv[u]).collect();
        let (next, step, record) = match red.kind {
            ReductionKind::DeleteLowDegree => {
                let (next, step) = cur.delete_vertex(red.v).expect("vertex exists");
                let record = ReductionRecord {
                    kind: red.kind,
                    vertex: inv[red.v],
                    partner: None,
                    neighbors,
                    edge_preexisting: false,
                    added_to_partner: Vec::new(),
                };
                (next, step, record)
            }
            ReductionKind::SuppressDegree2 => {
                let nbs: Vec<usize> = cur.neighbors(red.v).collect();
                let edge_preexisting = cur.has_edge(nbs[0], nbs[1]);
                let (next, step) = cur.suppress_degree2(red.v).expect("degree checked");
                let record = ReductionRecord {
                    kind: red.kind,
                    vertex: inv[red.v],
                    partner: None,
                    neighbors,
                    edge_preexisting,
                    added_to_partner: Vec::new(),
                };
                (next, step, record)
            }
            ReductionKind::ContractIntoNeighbor => {
                let u = red.partner.expect("contraction has a partner");
                let added: Vec<usize> = cur
                    .adj(red.v)
                    .iter()
                    .filter(|&&w| w != u && !cur.has_edge(u, w))
                    .map(|&w| inv[w])
                    .collect();
                let (next, step) = cur.contract_edge(u, red.v).expect("edge exists");
                let record = ReductionRecord {
                    kind: red.kind,
                    vertex: inv[red.v],
                    partner: Some(inv[u]),
                    neighbors,
                    edge_preexisting: false,
                    added_to_partner: added,
                };
                (next, step, record)
            }
        };
        records.push(record);
        map = map.then(&step);
        cur = next;
    }
    let trace = ReductionTrace { records, core: cur.clone(), map, original_n: g.n() };
    let core_lists = lists.project(&trace.core_ids());
    (cur, core_lists, trace)
}

/// Mutable adjacency in original-id space, used when replaying a trace.
struct Restored {
    adj: Vec<BTreeSet<usize>>,
}

impl Restored {
    fn from_core(trace: &ReductionTrace) -> Self {
        let mut adj = vec![BTreeSet::new(); trace.original_n];
        let ids = trace.core_ids();
        for (a, b) in trace.core.edges() {
            adj[ids[a]].insert(ids[b]);
            adj[ids[b]].insert(ids[a]);
        }
        Restored { adj }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn remove_edge(&mut self, u: usize, v: usize) {
        let had = self.adj[u].remove(&v) && self.adj[v].remove(&u);
        debug_assert!(had, "replay removed a missing edge {u}-{v}");
    }

    fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.adj.len());
        for (u, nbs) in self.adj.iter().enumerate() {
            for &v in nbs {
                if u < v {
                    g.add_edge(u, v).expect("simple by construction");
                }
            }
        }
        g
    }

    /// Undo one record structurally: drop edges the step introduced, then
    /// re-attach the removed vertex.
    fn undo(&mut self, r: &ReductionRecord, mut on_removed: impl FnMut(usize, usize)) {
        match r.kind {
            ReductionKind::DeleteLowDegree => {}
            ReductionKind::SuppressDegree2 => {
                if !r.edge_preexisting {
                    self.remove_edge(r.neighbors[0], r.neighbors[1]);
                    on_removed(r.neighbors[0], r.neighbors[1]);
                }
            }
            ReductionKind::ContractIntoNeighbor => {
                let u = r.partner.expect("contraction has a partner");
                for &w in &r.added_to_partner {
                    self.remove_edge(u, w);
                    on_removed(u, w);
                }
            }
        }
        for &x in &r.neighbors {
            self.add_edge(r.vertex, x);
        }
    }
}

/// Replay the trace backward from the core, returning the rebuilt graph
/// (equal to the original, since records are kept in original ids).
pub fn replay_backward(trace: &ReductionTrace) -> Graph {
    let mut state = Restored::from_core(trace);
    for r in trace.records.iter().rev() {
        state.undo(r, |_, _| {});
    }
    state.to_graph()
}

/// Threshold parameters for the genus pipeline; the `for_genus` values are
/// the guaranteed ones, and every field can be overridden for desk-scale
/// experiments (soundness is then carried by post-verification, not the
/// guarantee).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusParameters {
    pub genus: usize,
    /// Guaranteed list size: ⌈1000·g^{3/5} + 100000⌉.
    pub alpha: usize,
    /// Core degree scale: ⌈g^{2/5}/4 + 12⌉.
    pub delta0: usize,
    /// Number of special vertices: ⌈48·g^{3/5}⌉.
    pub alpha0: usize,
    /// Max core degree for the greedy distance-two base branch.
    pub distance_two_threshold: usize,
    /// Degree bound below which neighborhoods must stay rainbow.
    pub rainbow_degree: usize,
    /// Resampling budget factor (rounds = factor·n + 50).
    pub round_budget_factor: usize,
}

impl GenusParameters {
    pub fn for_genus(genus: usize) -> Self {
        let g3 = (genus as u128).pow(3);
        let g2 = (genus as u128).pow(2);
        GenusParameters {
            genus,
            alpha: ceil_fifth_root(10u128.pow(15) * g3, 1) as usize + 100_000,
            delta0: ceil_fifth_root(g2, 1024) as usize + 12,
            alpha0: ceil_fifth_root(254_803_968 * g3, 1) as usize,
            distance_two_threshold: 144,
            rainbow_degree: 12,
            round_budget_factor: 10,
        }
    }
}

/// Least s with b·s⁵ ≥ a, i.e. ⌈(a/b)^{1/5}⌉ for positive integers.
fn ceil_fifth_root(a: u128, b: u128) -> u128 {
    if a == 0 {
        return 0;
    }
    let mut s = (a / b).nth_root(5);
    while b * s.pow(5) < a {
        s += 1;
    }
    s
}

/// The min(alpha0, n) vertices of largest degree (ties to lower index),
/// returned ascending.
pub fn select_special(core: &Graph, params: &GenusParameters) -> Vec<usize> {
    let mut order: Vec<usize> = (0..core.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(core.degree(v)), v));
    order.truncate(params.alpha0.min(core.n()));
    order.sort_unstable();
    order
}

/// Choose pairwise distinct, list-respecting colors for the special
/// vertices, greedily in vertex order. Succeeds whenever every list is
/// larger than the special set.
pub fn assign_special_colors(
    lists: &ListAssignment,
    specials: &[usize],
) -> Result<BTreeMap<usize, usize>, ReduceError> {
    let mut used = BTreeSet::new();
    let mut out = BTreeMap::new();
    for &s in specials {
        let color = lists
            .first_avoiding(s, &used)
            .ok_or(ReduceError::SpecialListTooSmall { vertex: s })?;
        used.insert(color);
        out.insert(s, color);
    }
    Ok(out)
}

/// Remove the given colors from every list (the special colors stay
/// globally unique).
pub fn prune_lists(lists: &ListAssignment, colors: impl IntoIterator<Item = usize>) -> ListAssignment {
    let mut pruned = lists.clone();
    pruned.exclude(colors);
    pruned
}

/// Which strategy colored the core-minus-specials graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseBranch {
    Empty,
    DistanceTwo,
    Resampling,
}

/// Color the core minus specials: greedy distance-two when the max degree
/// is small (such a coloring is trivially a degenerate star coloring with
/// rainbow neighborhoods), otherwise the resampling colorer.
pub fn color_base<R: Rng + ?Sized>(
    g: &Graph,
    lists: &ListAssignment,
    params: &GenusParameters,
    rng: &mut R,
) -> Result<(Coloring, BaseBranch, Option<usize>), ReduceError> {
    if g.n() == 0 {
        return Ok((Coloring::uncolored(0), BaseBranch::Empty, None));
    }
    if g.max_degree() <= params.distance_two_threshold {
        let c = greedy_distance_two(g, lists)?;
        Ok((c, BaseBranch::DistanceTwo, None))
    } else {
        let budget = params.round_budget_factor * g.n() + 50;
        let run = lll::moser_tardos_color(g, lists, rng, budget)?;
        Ok((run.coloring, BaseBranch::Resampling, Some(run.rounds)))
    }
}

/// Greedy list coloring where each vertex also avoids the colors at
/// distance two.
fn greedy_distance_two(g: &Graph, lists: &ListAssignment) -> Result<Coloring, ReduceError> {
    let mut c = Coloring::uncolored(g.n());
    for v in 0..g.n() {
        let mut forbidden = BTreeSet::new();
        for &x in g.adj(v) {
            if let Some(col) = c.get(x) {
                forbidden.insert(col);
            }
            for &y in g.adj(x) {
                if let Some(col) = c.get(y) {
                    forbidden.insert(col);
                }
            }
        }
        let color = lists
            .first_avoiding(v, &forbidden)
            .ok_or(ReduceError::NoAvailableColor { vertex: v })?;
        c.set(v, color);
    }
    Ok(c)
}

const DEFAULT_RAINBOW_DEGREE: usize = 12;

/// Replay the trace backward, extending `base` (a degenerate star coloring
/// of the core with rainbow neighborhoods at degree ≤ 12) to a coloring of
/// the original graph. Each restored vertex takes the smallest admissible
/// color that differs from its neighbors' colors, from every in-color at a
/// neighbor, and from the other neighbor colors around low-degree
/// neighbors; its edges are then oriented toward it, which preserves the
/// star orientation conditions everywhere.
pub fn extend_coloring(
    trace: &ReductionTrace,
    base: &Coloring,
    lists: &ListAssignment,
) -> Result<Coloring, ReduceError> {
    extend_with_rainbow(trace, base, lists, DEFAULT_RAINBOW_DEGREE)
}

fn extend_with_rainbow(
    trace: &ReductionTrace,
    base: &Coloring,
    lists: &ListAssignment,
    rainbow_degree: usize,
) -> Result<Coloring, ReduceError> {
    let ids = trace.core_ids();
    let mut coloring = Coloring::uncolored(trace.original_n);
    for (i, &orig) in ids.iter().enumerate() {
        coloring.set(orig, base.get(i).expect("base coloring is total"));
    }
    // Orientation certifying the base as a star coloring, in original ids.
    let mut o = Orientation::new(trace.original_n);
    match orient::certify(&trace.core, base).map_err(|e| ReduceError::BaseNotStar(e.to_string()))?
    {
        Certificate::Oriented(core_o) => {
            for (t, h) in core_o.arcs() {
                o.orient(ids[t], ids[h]);
            }
        }
        Certificate::NotStar(verdict) => return Err(ReduceError::BaseNotStar(verdict.detail)),
    }

    let mut state = Restored::from_core(trace);
    for r in trace.records.iter().rev() {
        state.undo(r, |a, b| o.unorient(a, b));
        let v = r.vertex;
        // The undo already attached v; constraints look at everything else.
        let mut forbidden = BTreeSet::new();
        for &x in &r.neighbors {
            forbidden.insert(coloring.get(x).expect("neighbors are colored"));
            for &w in &state.adj[x] {
                if w == v {
                    continue;
                }
                let cw = coloring.get(w).expect("alive vertices are colored");
                // In-colors of x are always off limits; every neighbor color
                // is when x's neighborhood must stay rainbow.
                if state.adj[x].len() <= rainbow_degree || o.head(w, x) == Some(x) {
                    forbidden.insert(cw);
                }
            }
        }
        let color = lists
            .first_avoiding(v, &forbidden)
            .ok_or(ReduceError::NoAvailableColor { vertex: v })?;
        coloring.set(v, color);
        for &x in &r.neighbors {
            o.orient(x, v);
        }
    }
    Ok(coloring)
}

/// Stage statistics of a pipeline run.
#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub params: GenusParameters,
    pub reduction_steps: usize,
    pub core_vertices: usize,
    pub core_edges: usize,
    pub specials: usize,
    pub base_branch: BaseBranch,
    pub resample_rounds: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub coloring: Coloring,
    pub report: PipelineReport,
}

/// Full pipeline for a graph embeddable with Euler genus `genus`:
/// reduce, pick and color specials, prune their colors from all lists,
/// color the base, extend back. The output always passes the verifiers
/// (proper, star, restricted degenerate, rainbow-12); this is asserted.
pub fn color_genus_graph<R: Rng + ?Sized>(
    g: &Graph,
    lists: &ListAssignment,
    genus: usize,
    rng: &mut R,
) -> Result<PipelineRun, ReduceError> {
    color_genus_graph_with(g, lists, &GenusParameters::for_genus(genus), rng)
}

/// [`color_genus_graph`] with explicit parameters.
pub fn color_genus_graph_with<R: Rng + ?Sized>(
    g: &Graph,
    lists: &ListAssignment,
    params: &GenusParameters,
    rng: &mut R,
) -> Result<PipelineRun, ReduceError> {
    let (core, core_lists, trace) = reduce_fully(g, lists);
    let specials = select_special(&core, params);
    let special_colors = assign_special_colors(&core_lists, &specials)?;
    let pruned = prune_lists(lists, special_colors.values().copied());
    let core_pruned = prune_lists(&core_lists, special_colors.values().copied());

    // Color the core minus the specials, then splice the specials back in.
    let special_set: BTreeSet<usize> = specials.iter().copied().collect();
    let rest: Vec<usize> = (0..core.n()).filter(|v| !special_set.contains(v)).collect();
    let sub = core.induced(&rest);
    let (sub_coloring, branch, rounds) =
        color_base(&sub, &core_pruned.project(&rest), params, rng)?;

    let mut core_coloring = Coloring::uncolored(core.n());
    for (i, &v) in rest.iter().enumerate() {
        core_coloring.set(v, sub_coloring.get(i).expect("base total"));
    }
    for (&v, &color) in &special_colors {
        core_coloring.set(v, color);
    }

    let coloring = extend_with_rainbow(&trace, &core_coloring, &pruned, params.rainbow_degree)?;

    // Soundness firewall: never return an unverified coloring.
    assert!(
        verify::is_proper(g, &coloring).expect("total").is_valid(),
        "pipeline produced an improper coloring"
    );
    assert!(
        verify::is_star(g, &coloring).expect("proper").is_valid(),
        "pipeline produced a non-star coloring"
    );
    let classes = coloring.used_colors().len();
    let mode = if classes <= 20 {
        verify::DegenerateMode::Exhaustive { max_classes: 20 }
    } else {
        verify::DegenerateMode::Restricted
    };
    assert!(
        verify::is_degenerate(g, &coloring, mode).expect("proper").is_valid(),
        "pipeline produced a non-degenerate coloring"
    );
    assert!(
        verify::neighbors_distinct(g, &coloring, params.rainbow_degree)
            .expect("total")
            .is_valid(),
        "pipeline broke a low-degree rainbow neighborhood"
    );

    Ok(PipelineRun {
        coloring,
        report: PipelineReport {
            params: params.clone(),
            reduction_steps: trace.records.len(),
            core_vertices: core.n(),
            core_edges: core.m(),
            specials: specials.len(),
            base_branch: branch,
            resample_rounds: rounds,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn uniform(n: usize, palette: usize) -> ListAssignment {
        ListAssignment::uniform(n, palette)
    }

    #[test]
    fn reducible_detection() {
        assert_eq!(find_reducible(&build::complete(7)), None);
        assert_eq!(
            find_reducible(&build::path(2)),
            Some(Reducible { v: 0, kind: ReductionKind::DeleteLowDegree, partner: None })
        );
        assert_eq!(
            find_reducible(&build::cycle(5)).map(|r| r.kind),
            Some(ReductionKind::SuppressDegree2)
        );
        // K7 plus a degree-5 vertex: only the new vertex is reducible, by
        // contraction into its lowest neighbor (degree 7 ≤ 9).
        let mut g = Graph::empty(8);
        for u in 0..7 {
            for v in (u + 1)..7 {
                g.add_edge(u, v).unwrap();
            }
        }
        for u in 0..5 {
            g.add_edge(u, 7).unwrap();
        }
        assert_eq!(
            find_reducible(&g),
            Some(Reducible { v: 7, kind: ReductionKind::ContractIntoNeighbor, partner: Some(0) })
        );
    }

    #[test]
    fn k4_reduces_to_nothing_in_four_steps() {
        let g = build::complete(4);
        let (core, _, trace) = reduce_fully(&g, &uniform(4, 10));
        assert_eq!(core.n(), 0);
        assert_eq!(trace.records.len(), 4);
        assert_eq!(trace.records[0].kind, ReductionKind::ContractIntoNeighbor);
    }

    #[test]
    fn grid_reduces_to_nothing() {
        let g = build::grid(3, 3);
        let (core, _, trace) = reduce_fully(&g, &uniform(9, 10));
        assert_eq!(core.n(), 0);
        assert_eq!(trace.records.len(), 9);
    }

    #[test]
    fn k7_is_already_irreducible() {
        let g = build::complete(7);
        let (core, _, trace) = reduce_fully(&g, &uniform(7, 10));
        assert_eq!(core, g);
        assert!(trace.records.is_empty());
        assert_eq!(trace.core_ids(), (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn backward_replay_rebuilds_the_original() {
        for g in [
            build::complete(4),
            build::grid(3, 3),
            build::grid(4, 5),
            build::complete_bipartite(3, 4),
            build::cycle(9),
            build::star(6),
        ] {
            let (_, _, trace) = reduce_fully(&g, &uniform(g.n(), 10));
            assert_eq!(replay_backward(&trace), g, "round trip failed");
        }
    }

    #[test]
    fn genus_parameter_values() {
        let p0 = GenusParameters::for_genus(0);
        assert_eq!((p0.alpha, p0.delta0, p0.alpha0), (100_000, 12, 0));
        let p2 = GenusParameters::for_genus(2);
        assert_eq!(p2.alpha0, 73);
        assert_eq!(p2.delta0, 13);
        assert_eq!(p2.alpha, 101_516);
        let p1 = GenusParameters::for_genus(1);
        assert_eq!(p1.alpha0, 48);
    }

    #[test]
    fn special_selection() {
        let k7 = build::complete(7);
        assert_eq!(select_special(&k7, &GenusParameters::for_genus(2)), (0..7).collect::<Vec<_>>());
        assert!(select_special(&k7, &GenusParameters::for_genus(0)).is_empty());
        let grid = build::grid(10, 10);
        let s = select_special(&grid, &GenusParameters::for_genus(1));
        assert_eq!(s.len(), 48);
        // Interior vertices (degree 4) come before the degree-3 border ones.
        assert!(s.contains(&11));
        assert!(!s.contains(&0));
    }

    #[test]
    fn special_colors_are_distinct_and_list_respecting() {
        let lists = uniform(48, 49);
        let specials: Vec<usize> = (0..48).collect();
        let colors = assign_special_colors(&lists, &specials).unwrap();
        let distinct: BTreeSet<usize> = colors.values().copied().collect();
        assert_eq!(distinct.len(), 48);
        assert!(assign_special_colors(&uniform(0, 1), &[]).unwrap().is_empty());

        let tiny = uniform(3, 2);
        let err = assign_special_colors(&tiny, &[0, 1, 2]).unwrap_err();
        assert!(matches!(err, ReduceError::SpecialListTooSmall { vertex: 2 }));
    }

    #[test]
    fn pruning_removes_special_colors_everywhere() {
        let lists = uniform(2, 10);
        let pruned = prune_lists(&lists, [1, 2]);
        assert_eq!(pruned.size(0), 8);
        assert!(!pruned.contains(1, 2));
        let same = prune_lists(&lists, []);
        assert_eq!(same.size(0), 10);
    }

    #[test]
    fn base_coloring_branches() {
        let params = GenusParameters::for_genus(0);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let empty = color_base(&Graph::empty(0), &uniform(0, 5), &params, &mut rng).unwrap();
        assert_eq!(empty.1, BaseBranch::Empty);

        let c5 = build::cycle(5);
        let (c, branch, _) = color_base(&c5, &uniform(5, 20736), &params, &mut rng).unwrap();
        assert_eq!(branch, BaseBranch::DistanceTwo);
        assert!(verify::is_distance_two(&c5, &c).unwrap().is_valid());

        // Forcing the resampling branch by lowering the threshold.
        let forced = GenusParameters { distance_two_threshold: 1, ..params };
        let (c, branch, rounds) =
            color_base(&c5, &uniform(5, 8000), &forced, &mut rng).unwrap();
        assert_eq!(branch, BaseBranch::Resampling);
        assert!(rounds.is_some());
        assert!(verify::is_star(&c5, &c).unwrap().is_valid());
    }

    #[test]
    fn extension_on_empty_trace_returns_base() {
        let k7 = build::complete(7);
        let (_, _, trace) = reduce_fully(&k7, &uniform(7, 10));
        let base = Coloring::from_vec((0..7).collect());
        let out = extend_coloring(&trace, &base, &uniform(7, 10)).unwrap();
        assert_eq!(out, base);
    }

    #[test]
    fn small_lists_error_or_succeed_validly() {
        let k4 = build::complete(4);
        let lists = uniform(4, 3);
        let (_, _, trace) = reduce_fully(&k4, &lists);
        let base = Coloring::uncolored(0);
        match extend_coloring(&trace, &base, &lists) {
            Err(ReduceError::NoAvailableColor { .. }) => {}
            Ok(c) => {
                assert!(verify::is_star(&k4, &c).unwrap().is_valid());
            }
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn pipeline_colors_k4_from_large_lists() {
        let k4 = build::complete(4);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let run = color_genus_graph(&k4, &uniform(4, 100_001), 0, &mut rng).unwrap();
        assert_eq!(run.report.core_vertices, 0);
        assert_eq!(run.report.reduction_steps, 4);
        // K4 needs four distinct colors.
        assert_eq!(run.coloring.used_colors().len(), 4);
    }

    #[test]
    fn pipeline_makes_k7_rainbow_at_genus_two() {
        let k7 = build::complete(7);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let run = color_genus_graph(&k7, &uniform(7, 101_516), 2, &mut rng).unwrap();
        assert_eq!(run.report.specials, 7);
        assert_eq!(run.report.base_branch, BaseBranch::Empty);
        assert_eq!(run.coloring.used_colors().len(), 7);
    }

    #[test]
    fn pipeline_handles_single_vertex() {
        let g = Graph::empty(1);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let run = color_genus_graph(&g, &uniform(1, 100_001), 0, &mut rng).unwrap();
        assert!(run.coloring.get(0).is_some());
    }

    #[test]
    fn pipeline_colors_a_grid() {
        let g = build::grid(5, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let run = color_genus_graph(&g, &uniform(25, 100_001), 0, &mut rng).unwrap();
        assert!(verify::is_degenerate_star(&g, &run.coloring, verify::DegenerateMode::Restricted)
            .unwrap()
            .is_valid());
        assert!(verify::neighbors_distinct(&g, &run.coloring, 12).unwrap().is_valid());
        assert_eq!(run.report.core_vertices, 0);
    }

    #[test]
    fn special_colors_stay_globally_unique_in_pipeline_output() {
        // Genus 1 forces specials on an irreducible core; K7 is irreducible
        // and alpha0(1) = 48 covers all of it.
        let k7 = build::complete(7);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let run = color_genus_graph(&k7, &uniform(7, 100_049), 1, &mut rng).unwrap();
        assert_eq!(run.report.specials, 7);
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for v in 0..7 {
            *counts.entry(run.coloring.get(v).unwrap()).or_default() += 1;
        }
        assert!(counts.values().all(|&k| k == 1));
    }
}
