//! Vertex colorings and per-vertex admissible-color lists.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

/// Errors from list handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("vertex {0} has an empty admissible list")]
    EmptyList(usize),
}

/// A (possibly partial) vertex coloring with nonnegative integer colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    slots: Vec<Option<usize>>,
}

impl Coloring {
    /// All `n` vertices uncolored.
    pub fn uncolored(n: usize) -> Self {
        Coloring { slots: vec![None; n] }
    }

    /// Total coloring from a full color vector.
    pub fn from_vec(colors: Vec<usize>) -> Self {
        Coloring { slots: colors.into_iter().map(Some).collect() }
    }

    /// Number of vertex slots.
    pub fn n(&self) -> usize {
        self.slots.len()
    }

    /// Color of `v`, if assigned.
    pub fn get(&self, v: usize) -> Option<usize> {
        self.slots.get(v).copied().flatten()
    }

    /// Assign a color to `v`.
    pub fn set(&mut self, v: usize, color: usize) {
        self.slots[v] = Some(color);
    }

    /// Remove the color of `v`.
    pub fn unset(&mut self, v: usize) {
        self.slots[v] = None;
    }

    /// Whether every slot is assigned.
    pub fn is_total(&self) -> bool {
        self.slots.iter().all(Option::is_some)
    }

    /// First uncolored vertex, if any.
    pub fn first_uncolored(&self) -> Option<usize> {
        self.slots.iter().position(Option::is_none)
    }

    /// The set of colors in use.
    pub fn used_colors(&self) -> BTreeSet<usize> {
        self.slots.iter().flatten().copied().collect()
    }

    /// Color classes as `color -> sorted vertex list` (assigned slots only).
    pub fn classes(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, slot) in self.slots.iter().enumerate() {
            if let Some(c) = slot {
                out.entry(*c).or_default().push(v);
            }
        }
        out
    }
}

/// One vertex's admissible colors: either a contiguous range or an explicit
/// set. Ranges keep palettes of size ~10⁵ cheap to store per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColorList {
    /// Colors `start..end` (half-open).
    Range { start: usize, end: usize },
    /// An explicit sorted set of colors.
    Set(BTreeSet<usize>),
}

impl ColorList {
    fn raw_len(&self) -> usize {
        match self {
            ColorList::Range { start, end } => end.saturating_sub(*start),
            ColorList::Set(s) => s.len(),
        }
    }

    fn raw_contains(&self, c: usize) -> bool {
        match self {
            ColorList::Range { start, end } => (*start..*end).contains(&c),
            ColorList::Set(s) => s.contains(&c),
        }
    }
}

/// Per-vertex admissible-color lists, with a shared exclusion set.
///
/// Pruning removes the same colors from every list (reserved colors stay
/// globally unique), so exclusions are stored once instead of materializing
/// each list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<ColorList>,
    excluded: BTreeSet<usize>,
}

impl ListAssignment {
    /// Every vertex gets the list `0..palette`.
    pub fn uniform(n: usize, palette: usize) -> Self {
        ListAssignment {
            lists: vec![ColorList::Range { start: 0, end: palette }; n],
            excluded: BTreeSet::new(),
        }
    }

    /// Explicit per-vertex sets.
    pub fn from_sets(sets: Vec<BTreeSet<usize>>) -> Self {
        ListAssignment {
            lists: sets.into_iter().map(ColorList::Set).collect(),
            excluded: BTreeSet::new(),
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.lists.len()
    }

    /// Remove `colors` from every list.
    pub fn exclude(&mut self, colors: impl IntoIterator<Item = usize>) {
        self.excluded.extend(colors);
    }

    /// The shared exclusion set.
    pub fn excluded(&self) -> &BTreeSet<usize> {
        &self.excluded
    }

    /// Admissible list size of `v` (exclusions applied).
    pub fn size(&self, v: usize) -> usize {
        let list = &self.lists[v];
        let dropped = match list {
            ColorList::Range { start, end } => self.excluded.range(*start..*end).count(),
            ColorList::Set(s) => s.iter().filter(|c| self.excluded.contains(c)).count(),
        };
        list.raw_len() - dropped
    }

    /// Smallest admissible list size over all vertices.
    pub fn min_size(&self) -> usize {
        (0..self.n()).map(|v| self.size(v)).min().unwrap_or(0)
    }

    /// Whether `color` is admissible for `v`.
    pub fn contains(&self, v: usize, color: usize) -> bool {
        self.lists[v].raw_contains(color) && !self.excluded.contains(&color)
    }

    /// `i`-th admissible color of `v` in ascending order.
    pub fn nth(&self, v: usize, i: usize) -> Option<usize> {
        match &self.lists[v] {
            ColorList::Range { start, end } => {
                // Walk the sorted exclusions; each one at or below the probe
                // shifts it up by one.
                let mut x = start + i;
                for &e in self.excluded.range(*start..) {
                    if e <= x {
                        x += 1;
                    } else {
                        break;
                    }
                }
                (x < *end).then_some(x)
            }
            ColorList::Set(s) => s.iter().filter(|c| !self.excluded.contains(c)).nth(i).copied(),
        }
    }

    /// Admissible colors of `v` in ascending order.
    pub fn iter(&self, v: usize) -> Box<dyn Iterator<Item = usize> + '_> {
        match &self.lists[v] {
            ColorList::Range { start, end } => {
                Box::new((*start..*end).filter(move |c| !self.excluded.contains(c)))
            }
            ColorList::Set(s) => {
                Box::new(s.iter().copied().filter(move |c| !self.excluded.contains(c)))
            }
        }
    }

    /// Uniform sample from `v`'s admissible colors.
    pub fn sample<R: Rng + ?Sized>(&self, v: usize, rng: &mut R) -> Result<usize, ListError> {
        let size = self.size(v);
        if size == 0 {
            return Err(ListError::EmptyList(v));
        }
        let i = rng.random_range(0..size);
        Ok(self.nth(v, i).expect("index within list size"))
    }

    /// Smallest admissible color of `v` outside `forbidden`.
    pub fn first_avoiding(&self, v: usize, forbidden: &BTreeSet<usize>) -> Option<usize> {
        self.iter(v).find(|c| !forbidden.contains(c))
    }

    /// Project onto a vertex subset: list `i` of the result is the list of
    /// `ids[i]`. The exclusion set carries over.
    pub fn project(&self, ids: &[usize]) -> ListAssignment {
        ListAssignment {
            lists: ids.iter().map(|&v| self.lists[v].clone()).collect(),
            excluded: self.excluded.clone(),
        }
    }
}
