//! Shared helpers for the acceptance suite: an isomorphism-class corpus of
//! small graphs, definition-level reference checkers (kept deliberately
//! independent of the library's verifiers), and seeded graph generators.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::Rng;
use starcolor::Graph;

/// Upper-triangle adjacency bitmask of `g` relabeled by `pos` (vertex ->
/// position). Fits in a u64 for n <= 8.
fn mask_under(g: &Graph, pos: &[usize]) -> u64 {
    let n = g.n();
    let mut mask = 0u64;
    for (u, v) in g.edges() {
        let (i, j) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
        mask |= 1 << (i * n + j);
    }
    mask
}

/// Canonical form: the minimum relabeled adjacency mask over all vertex
/// orderings that sort degrees descending. Isomorphic graphs share degree
/// multisets, hence the same restricted ordering family and the same minimum.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.n();
    let mut by_degree: BTreeMap<Reverse<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_degree.entry(Reverse(g.degree(v))).or_default().push(v);
    }
    let groups: Vec<Vec<usize>> = by_degree.into_values().collect();
    let mut pos = vec![0usize; n];
    let mut best = u64::MAX;
    fill_positions(g, &groups, 0, &mut pos, &mut best);
    best
}

/// Assign each degree group to its block of positions, permuting within the
/// block, and fold the minimum mask into `best`.
fn fill_positions(g: &Graph, groups: &[Vec<usize>], base: usize, pos: &mut Vec<usize>, best: &mut u64) {
    let Some(group) = groups.first() else {
        *best = (*best).min(mask_under(g, pos));
        return;
    };
    permute_group(g, groups, base, group, &mut vec![false; group.len()], &mut Vec::new(), pos, best);
}

fn permute_group(
    g: &Graph,
    groups: &[Vec<usize>],
    base: usize,
    group: &[usize],
    used: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    pos: &mut Vec<usize>,
    best: &mut u64,
) {
    if chosen.len() == group.len() {
        for (off, &v) in chosen.iter().enumerate() {
            pos[v] = base + off;
        }
        fill_positions(g, &groups[1..], base + group.len(), pos, best);
        return;
    }
    for i in 0..group.len() {
        if !used[i] {
            used[i] = true;
            chosen.push(group[i]);
            permute_group(g, groups, base, group, used, chosen, pos, best);
            chosen.pop();
            used[i] = false;
        }
    }
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if mask >> (i * n + j) & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// One representative per isomorphism class, for every order 1..=n_max
/// (index k holds order k+1), built by vertex augmentation. The counts are
/// asserted against the known sequence so a corpus bug cannot pass silently.
pub fn iso_classes_up_to(n_max: usize) -> Vec<Vec<Graph>> {
    assert!((1..=7).contains(&n_max), "corpus is sized for u64 masks");
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(1)]];
    for n in 2..=n_max {
        let mut seen = BTreeSet::new();
        let mut reps = Vec::new();
        for g in &levels[n - 2] {
            for subset in 0u32..1 << (n - 1) {
                let mut h = Graph::empty(n);
                for (u, v) in g.edges() {
                    h.add_edge(u, v).unwrap();
                }
                for b in 0..n - 1 {
                    if subset >> b & 1 == 1 {
                        h.add_edge(b, n - 1).unwrap();
                    }
                }
                let mask = canonical_mask(&h);
                if seen.insert(mask) {
                    reps.push(graph_from_mask(n, mask));
                }
            }
        }
        levels.push(reps);
    }
    let all_counts = [1, 2, 4, 11, 34, 156, 1044];
    let connected_counts = [1, 1, 2, 6, 21, 112, 853];
    for (i, level) in levels.iter().enumerate() {
        assert_eq!(level.len(), all_counts[i], "graph count at order {}", i + 1);
        let connected = level.iter().filter(|g| g.is_connected()).count();
        assert_eq!(connected, connected_counts[i], "connected count at order {}", i + 1);
    }
    levels
}

/// All connected representatives of order 1..=n_max, smallest orders first.
pub fn connected_up_to(n_max: usize) -> Vec<Graph> {
    iso_classes_up_to(n_max)
        .into_iter()
        .flatten()
        .filter(|g| g.is_connected())
        .collect()
}

/// All representatives of order 1..=n_max.
pub fn all_up_to(n_max: usize) -> Vec<Graph> {
    iso_classes_up_to(n_max).into_iter().flatten().collect()
}

/// Definition-level check: some path on four distinct vertices uses exactly
/// two colors. Scans every ordered 4-tuple.
pub fn has_bicolored_p4(g: &Graph, col: &[usize]) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in 0..n {
            if b == a || !g.has_edge(a, b) {
                continue;
            }
            for c in 0..n {
                if c == a || c == b || !g.has_edge(b, c) {
                    continue;
                }
                for d in 0..n {
                    if d == a || d == b || d == c || !g.has_edge(c, d) {
                        continue;
                    }
                    let colors: BTreeSet<usize> =
                        [col[a], col[b], col[c], col[d]].into_iter().collect();
                    if colors.len() == 2 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Definition-level check: every two color classes induce a forest, decided
/// by comparing edge and vertex-minus-component counts.
pub fn direct_acyclic(g: &Graph, col: &[usize]) -> bool {
    let colors: Vec<usize> = col.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    for (i, &a) in colors.iter().enumerate() {
        for &b in &colors[i + 1..] {
            let verts: Vec<usize> =
                (0..g.n()).filter(|&v| col[v] == a || col[v] == b).collect();
            let index: BTreeMap<usize, usize> =
                verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
            let mut edges = 0;
            for &u in &verts {
                for w in g.neighbors(u) {
                    if u < w && index.contains_key(&w) {
                        edges += 1;
                    }
                }
            }
            let mut seen = vec![false; verts.len()];
            let mut components = 0;
            for s in 0..verts.len() {
                if seen[s] {
                    continue;
                }
                components += 1;
                let mut queue = VecDeque::from([s]);
                seen[s] = true;
                while let Some(k) = queue.pop_front() {
                    for w in g.neighbors(verts[k]) {
                        if let Some(&kw) = index.get(&w) {
                            if !seen[kw] {
                                seen[kw] = true;
                                queue.push_back(kw);
                            }
                        }
                    }
                }
            }
            // A forest has exactly |V| - components edges.
            if edges > verts.len() - components {
                return false;
            }
        }
    }
    true
}

/// Definition-level check: the union of any k color classes is k-degenerate,
/// where k-degenerate means every nonempty vertex subset contains a vertex
/// of degree strictly below k within the subset. Enumerates all subsets.
pub fn direct_degenerate(g: &Graph, col: &[usize]) -> bool {
    let colors: Vec<usize> = col.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    for class_bits in 1u32..1 << colors.len() {
        let chosen: BTreeSet<usize> = colors
            .iter()
            .enumerate()
            .filter(|&(i, _)| class_bits >> i & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        let k = chosen.len();
        let verts: Vec<usize> = (0..g.n()).filter(|&v| chosen.contains(&col[v])).collect();
        assert!(verts.len() < 64);
        for sub_bits in 1u64..1 << verts.len() {
            let inside: Vec<usize> = verts
                .iter()
                .enumerate()
                .filter(|&(i, _)| sub_bits >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let has_low = inside.iter().any(|&v| {
                inside.iter().filter(|&&u| u != v && g.has_edge(u, v)).count() < k
            });
            if !has_low {
                return false;
            }
        }
    }
    true
}

/// Seeded random planar triangulation: start from a triangle and repeatedly
/// split a random face with a new vertex joined to its three corners.
pub fn random_planar_triangulation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 3);
    let mut g = Graph::empty(n);
    g.add_edge(0, 1).unwrap();
    g.add_edge(1, 2).unwrap();
    g.add_edge(0, 2).unwrap();
    let mut faces = vec![[0, 1, 2]];
    for v in 3..n {
        let [a, b, c] = faces.swap_remove(rng.random_range(0..faces.len()));
        g.add_edge(v, a).unwrap();
        g.add_edge(v, b).unwrap();
        g.add_edge(v, c).unwrap();
        faces.push([a, b, v]);
        faces.push([b, c, v]);
        faces.push([a, c, v]);
    }
    assert_eq!(g.m(), 3 * n - 6);
    g
}

/// Seeded random graph with maximum degree at most `max_degree`: random
/// pairs are attempted and kept when both endpoints have room.
pub fn random_bounded_degree<R: Rng + ?Sized>(n: usize, max_degree: usize, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for _ in 0..4 * n {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v
            && !g.has_edge(u, v)
            && g.degree(u) < max_degree
            && g.degree(v) < max_degree
        {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Floor of the integer square root.
pub fn isqrt(x: usize) -> usize {
    let mut r = 0;
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}
