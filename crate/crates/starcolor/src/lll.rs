//! Constructive resampling colorer for bounded-degree graphs, plus an exact
//! numeric verifier of the local-lemma product condition that guarantees a
//! degenerate star list coloring with rainbow low-degree neighborhoods.
//!
//! Violations are grouped into five kinds: monochromatic edges (A),
//! two-colored paths on four vertices (B), monochromatic special pairs (S),
//! monochromatic cherries at low-degree centers (T), and degeneracy cores
//! found by the restricted search (D). Once no violation remains, the
//! coloring is a degenerate star coloring (restricted verdict) and every
//! vertex of degree at most √Δ has a rainbow neighborhood.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Coloring, ListAssignment, ListError};
use crate::graph::Graph;
use crate::verify::{self, DegenerateMode, Witness};

/// ⌈1000·Δ^{3/2}⌉: the guaranteed-regime palette size for max degree Δ,
/// computed exactly as the least s with s² ≥ 10⁶·Δ³.
pub fn palette_size(delta: usize) -> usize {
    let target = 1_000_000u128 * (delta as u128).pow(3);
    ceil_sqrt_u128(target) as usize
}

fn ceil_sqrt_u128(x: u128) -> u128 {
    let s = x.sqrt();
    if s * s < x {
        s + 1
    } else {
        s
    }
}

/// Violation kinds, in resampling priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ViolationKind {
    /// A: both endpoints of an edge share a color.
    MonochromaticEdge,
    /// T: a cherry x1-x2-x3 with c(x1) = c(x3) and deg(x2)² ≤ Δ.
    MonochromaticCherry,
    /// S: a special pair (√Δ-many common neighbors) with equal colors.
    MonochromaticSpecialPair,
    /// B: a path on four vertices using exactly two colors.
    BicoloredPath,
    /// D: a subgraph with minimum degree at least its number of colors.
    DegeneracyCore,
}

/// A forbidden pattern found in a coloring; `vertices` is the set to
/// resample, listed in shape order (path order for paths and cherries).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternViolation {
    pub kind: ViolationKind,
    pub vertices: Vec<usize>,
}

impl PatternViolation {
    /// Deterministic selection key: sorted vertex set first, kind second.
    fn selection_key(&self) -> (Vec<usize>, ViolationKind) {
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        (sorted, self.kind)
    }
}

/// Sample every vertex independently and uniformly from its list.
pub fn sample_coloring<R: Rng + ?Sized>(
    lists: &ListAssignment,
    rng: &mut R,
) -> Result<Coloring, ListError> {
    let mut c = Coloring::uncolored(lists.n());
    for v in 0..lists.n() {
        c.set(v, lists.sample(v, rng)?);
    }
    Ok(c)
}

/// Enumerate all violations in `c`, sorted by selection key. Kinds A, B, S,
/// and T are enumerated completely; the degeneracy-core search (D) runs only
/// once the coloring is proper and free of two-colored paths, via the
/// restricted degeneracy search.
///
/// An empty result means `c` is a degenerate star coloring (restricted
/// search) and every vertex of degree ≤ √delta has all-distinct neighbor
/// colors.
pub fn find_violations(g: &Graph, c: &Coloring, delta: usize) -> Vec<PatternViolation> {
    let mut out = Vec::new();
    let color =
        |v: usize| c.get(v).expect("find_violations requires a total coloring");

    for (u, v) in g.edges() {
        if color(u) == color(v) {
            out.push(PatternViolation {
                kind: ViolationKind::MonochromaticEdge,
                vertices: vec![u, v],
            });
        }
    }
    let any_edges = !out.is_empty();

    // Each two-colored 4-path is found exactly once: its middle edge (u, v)
    // with u < v fixes which endpoint hangs off u.
    let mut any_paths = false;
    for (u, v) in g.edges() {
        let (cu, cv) = (color(u), color(v));
        if cu == cv {
            continue;
        }
        for &x in g.adj(u) {
            if x == v || color(x) != cv {
                continue;
            }
            for &w in g.adj(v) {
                if w == u || w == x || color(w) != cu {
                    continue;
                }
                any_paths = true;
                out.push(PatternViolation {
                    kind: ViolationKind::BicoloredPath,
                    vertices: vec![x, u, v, w],
                });
            }
        }
    }

    for (u, v) in g.special_pairs(delta) {
        if color(u) == color(v) {
            out.push(PatternViolation {
                kind: ViolationKind::MonochromaticSpecialPair,
                vertices: vec![u, v],
            });
        }
    }

    for center in 0..g.n() {
        let d = g.degree(center);
        if d * d > delta {
            continue;
        }
        let nbs: Vec<usize> = g.neighbors(center).collect();
        for (i, &x) in nbs.iter().enumerate() {
            for &y in &nbs[i + 1..] {
                if color(x) == color(y) {
                    out.push(PatternViolation {
                        kind: ViolationKind::MonochromaticCherry,
                        vertices: vec![x, center, y],
                    });
                }
            }
        }
    }

    if !any_edges && !any_paths {
        let verdict = verify::is_degenerate(g, c, DegenerateMode::Restricted)
            .expect("proper: no monochromatic edge found");
        if let Some(Witness::Core { vertices }) = verdict.witness {
            out.push(PatternViolation { kind: ViolationKind::DegeneracyCore, vertices });
        }
    }

    out.sort_by_key(|v| v.selection_key());
    out
}

#[derive(Debug, Clone, Error)]
pub enum LllError {
    #[error(transparent)]
    EmptyList(#[from] ListError),
    #[error("no violation-free coloring within {rounds} rounds ({residual} violations left)")]
    RoundBudgetExhausted {
        rounds: usize,
        residual: usize,
        /// Last coloring tried.
        coloring: Coloring,
        /// Its violations.
        violations: Vec<PatternViolation>,
    },
}

/// A successful resampling run.
#[derive(Debug, Clone, Serialize)]
pub struct ResamplingRun {
    pub coloring: Coloring,
    /// Resampling rounds used (0 if the first sample was already clean).
    pub rounds: usize,
    /// Violation count observed at the start of each round.
    pub violations_per_round: Vec<usize>,
}

/// Sample a list coloring and repeatedly resample the first violation (by
/// selection key) until none remain or the round budget runs out. The output
/// is list-respecting and deterministic in (graph, lists, seed, budget).
pub fn moser_tardos_color<R: Rng + ?Sized>(
    g: &Graph,
    lists: &ListAssignment,
    rng: &mut R,
    max_rounds: usize,
) -> Result<ResamplingRun, LllError> {
    let delta = g.max_degree();
    let mut c = sample_coloring(lists, rng)?;
    let mut violations_per_round = Vec::new();
    for round in 0..=max_rounds {
        let violations = find_violations(g, &c, delta);
        if violations.is_empty() {
            return Ok(ResamplingRun { coloring: c, rounds: round, violations_per_round });
        }
        if round == max_rounds {
            return Err(LllError::RoundBudgetExhausted {
                rounds: max_rounds,
                residual: violations.len(),
                coloring: c,
                violations,
            });
        }
        violations_per_round.push(violations.len());
        let mut targets = violations[0].vertices.clone();
        targets.sort_unstable();
        targets.dedup();
        for v in targets {
            c.set(v, lists.sample(v, rng)?);
        }
    }
    unreachable!("loop returns at round == max_rounds");
}

/// One event class in the condition check: occurrence probability α^(-prob_exponent)
/// and vertex count `size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventClass {
    pub label: char,
    pub prob_exponent: u32,
    pub size: u32,
}

impl EventClass {
    fn new(label: char, prob_exponent: u32, size: u32) -> Self {
        EventClass { label, prob_exponent, size }
    }
}

/// The event family driving [`verify_lll_condition`] and
/// [`dependency_bounds`]. Three classes get bespoke dependency bounds
/// (long paths J: 90Δ^{15/2}, special pairs S: 10Δ^{3/2}, cherries T:
/// 30Δ^{3/2}); each remaining class Y gets the generic 100Δ^{|Y|-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LllBudget {
    pub long_path: EventClass,
    pub special_pair: EventClass,
    pub cherry: EventClass,
    pub generic: Vec<EventClass>,
}

impl Default for LllBudget {
    /// Sizes are the maximal values consistent with the weight bounds
    /// w_Y ≤ 2·10⁻⁶·Δ^{1-|Y|}, which makes the check conservative.
    fn default() -> Self {
        LllBudget {
            long_path: EventClass::new('J', 5, 9),
            special_pair: EventClass::new('S', 1, 2),
            cherry: EventClass::new('T', 1, 3),
            generic: vec![
                EventClass::new('A', 1, 2),
                EventClass::new('B', 2, 4),
                EventClass::new('C', 2, 4),
                EventClass::new('D', 4, 7),
                EventClass::new('E', 4, 7),
                EventClass::new('F', 4, 7),
                EventClass::new('I', 6, 10),
                EventClass::new('K', 6, 10),
                EventClass::new('L', 6, 10),
                EventClass::new('M', 4, 7),
            ],
        }
    }
}

/// Per-class dependency-count bounds at max degree `delta`, as exact
/// integers (half-integer powers are rounded up, since counts are integral).
pub fn dependency_bounds(delta: u64, budget: &LllBudget) -> BTreeMap<char, BigUint> {
    let d = BigUint::from(delta);
    let mut out = BTreeMap::new();
    // coef·Δ^{e + 1/2} has exact ceiling ⌈√(coef²·Δ^{2e+1})⌉.
    let half_power = |coef: u64, e: u32| {
        let sq = BigUint::from(coef * coef) * d.pow(2 * e + 1);
        ceil_sqrt_big(&sq)
    };
    out.insert(budget.long_path.label, half_power(90, 7));
    out.insert(budget.special_pair.label, half_power(10, 1));
    out.insert(budget.cherry.label, half_power(30, 1));
    for ev in &budget.generic {
        out.insert(ev.label, BigUint::from(100u32) * d.pow(ev.size - 1));
    }
    out
}

fn ceil_sqrt_big(x: &BigUint) -> BigUint {
    let s = x.sqrt();
    if &(&s * &s) < x {
        s + BigUint::one()
    } else {
        s
    }
}

/// Exact check of the product condition
///
/// ```text
/// 1/2 ≤ (1 − 90·w_J·Δ^{15/2}) (1 − 10·w_S·Δ^{3/2}) (1 − 30·w_T·Δ^{3/2})
///       · ∏_{Y generic} (1 − 100·w_Y·Δ^{|Y|−1})
/// ```
///
/// with weights w_X = 2·α^(-prob_exponent). Half-integer powers of Δ are
/// bracketed by rational intervals around √Δ, which are refined until the
/// comparison is decided; everything else is exact rational arithmetic.
pub fn verify_lll_condition(delta: u64, alpha: u64, budget: &LllBudget) -> bool {
    assert!(delta >= 1, "condition defined for delta >= 1");
    assert!(alpha >= 2, "condition defined for alpha >= 2");
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let d = BigInt::from(delta);
    // Exact generic factors do not depend on the precision ladder.
    let mut exact = BigRational::one();
    for ev in &budget.generic {
        let w = weight(alpha, ev.prob_exponent);
        exact *= BigRational::one()
            - BigRational::from_integer(BigInt::from(100) * d.pow(ev.size - 1)) * w;
    }
    for digits in [12u32, 24, 48, 96, 192] {
        let sqrt_d = sqrt_interval(delta, digits);
        let mut product = Interval::exact(exact.clone());
        for (coef, int_power, ev) in [
            (90u32, 7u32, &budget.long_path),
            (10, 1, &budget.special_pair),
            (30, 1, &budget.cherry),
        ] {
            let scale = BigRational::from_integer(BigInt::from(coef) * d.pow(int_power))
                * weight(alpha, ev.prob_exponent);
            let term = sqrt_d.scale(&scale);
            product = product.mul(&Interval {
                lo: BigRational::one() - term.hi,
                hi: BigRational::one() - term.lo,
            });
        }
        if product.lo >= half {
            return true;
        }
        if product.hi < half {
            return false;
        }
    }
    // Undecided at maximum precision (the product sits essentially on 1/2);
    // fail closed.
    false
}

fn weight(alpha: u64, prob_exponent: u32) -> BigRational {
    BigRational::new(BigInt::from(2), BigInt::from(alpha).pow(prob_exponent))
}

/// [lo, hi] bracket of √delta with `digits` decimal digits.
fn sqrt_interval(delta: u64, digits: u32) -> Interval {
    let scale = BigUint::from(10u32).pow(digits);
    let t = (BigUint::from(delta) * &scale * &scale).sqrt();
    let denom = BigInt::from(scale);
    Interval {
        lo: BigRational::new(BigInt::from(t.clone()), denom.clone()),
        hi: BigRational::new(BigInt::from(t + BigUint::one()), denom),
    }
}

#[derive(Debug, Clone)]
struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    fn exact(v: BigRational) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    fn scale(&self, by: &BigRational) -> Interval {
        debug_assert!(!by.is_negative());
        Interval { lo: &self.lo * by, hi: &self.hi * by }
    }

    fn mul(&self, other: &Interval) -> Interval {
        let mut products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        products.sort();
        let [lo, .., hi] = products;
        Interval { lo, hi }
    }
}
