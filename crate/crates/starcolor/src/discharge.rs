//! Exact charge bookkeeping on embedded graphs. Vertices start at deg - 6
//! and faces at 2·deg - 6, so the totals telescope to 6g - 12 by Euler's
//! formula. Four local rules then move charge toward low-degree vertices;
//! an auditor replays everything with exact rationals, logs each transfer,
//! and reports the minima and any party left negative.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;
use thiserror::Error;

use crate::embedding::{euler_genus, trace_faces, EmbeddingError, FaceSet, RotationSystem};
use crate::reduce::find_reducible;

pub use num_rational::Rational64 as Charge;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("charge accounting needs at least one edge")]
    Edgeless,
    #[error("graph is not irreducible: vertex {vertex} is reducible")]
    ReducibleInput { vertex: usize },
}

/// A charge holder: either a vertex or a face of the embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Party {
    Vertex(usize),
    Face(usize),
}

/// The discharging rules, named by what they move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    /// A face of degree >= 4 sends 1 to each distinct degree-3 vertex on
    /// its boundary.
    FaceToDegreeThree,
    /// A face of degree >= 4 sends 1 to the degree-11 middle of every
    /// consecutive boundary triple whose ends have degree 4 or 5.
    FaceToFlankedEleven,
    /// A vertex of degree >= 11 sends 1 to a degree-3 neighbor when their
    /// edge lies on two triangular face incidences (1/2 otherwise), and
    /// 1/2 to each neighbor of degree 4 or 5.
    VertexToLowNeighbor,
    /// A degree-10 vertex sends 1/5 to each degree-5 neighbor.
    TenToFiveNeighbor,
}

/// One logged movement of charge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub from: Party,
    pub to: Party,
    pub amount: Rational64,
    pub rule: Rule,
}

/// Charges per vertex and face, plus the transfer log that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub vertex_charge: Vec<Rational64>,
    pub face_charge: Vec<Rational64>,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    /// Sum of all charges; invariant under transfers.
    pub fn total(&self) -> Rational64 {
        self.vertex_charge.iter().chain(&self.face_charge).sum()
    }

    fn charge_mut(&mut self, p: Party) -> &mut Rational64 {
        match p {
            Party::Vertex(v) => &mut self.vertex_charge[v],
            Party::Face(f) => &mut self.face_charge[f],
        }
    }

    fn transfer(&mut self, from: Party, to: Party, amount: Rational64, rule: Rule) {
        *self.charge_mut(from) -= amount;
        *self.charge_mut(to) += amount;
        self.transfers.push(Transfer { from, to, amount, rule });
    }

    /// Smallest vertex charge with its vertex, and likewise for faces.
    pub fn minima(&self) -> (Option<(usize, Rational64)>, Option<(usize, Rational64)>) {
        let min_of = |charges: &[Rational64]| {
            charges
                .iter()
                .enumerate()
                .min_by_key(|&(i, c)| (*c, i))
                .map(|(i, c)| (i, *c))
        };
        (min_of(&self.vertex_charge), min_of(&self.face_charge))
    }

    /// Every party whose charge is negative, vertices before faces.
    pub fn negatives(&self) -> Vec<(Party, Rational64)> {
        let zero = Rational64::from_integer(0);
        let verts = self
            .vertex_charge
            .iter()
            .enumerate()
            .filter(|&(_, c)| *c < zero)
            .map(|(v, c)| (Party::Vertex(v), *c));
        let faces = self
            .face_charge
            .iter()
            .enumerate()
            .filter(|&(_, c)| *c < zero)
            .map(|(f, c)| (Party::Face(f), *c));
        verts.chain(faces).collect()
    }
}

/// Assign the starting charges deg(v) - 6 and 2·deg(f) - 6. Requires a
/// connected embedding with at least one edge (otherwise the invisible
/// sphere face would be missed and the totals would not telescope).
pub fn initial_charges(r: &RotationSystem) -> Result<(ChargeLedger, FaceSet), DischargeError> {
    let g = r.graph();
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected.into());
    }
    if g.m() == 0 {
        return Err(DischargeError::Edgeless);
    }
    let fs = trace_faces(r);
    let ledger = ChargeLedger {
        vertex_charge: (0..g.n())
            .map(|v| Rational64::from_integer(g.degree(v) as i64 - 6))
            .collect(),
        face_charge: (0..fs.len())
            .map(|f| Rational64::from_integer(2 * fs.degree(f) as i64 - 6))
            .collect(),
        transfers: Vec::new(),
    };
    Ok((ledger, fs))
}

/// Replace the charge of each special vertex by deg(v)/2 (an increase for
/// every degree below 13, reflecting that specials are colored upfront and
/// never need help).
pub fn modified_charges(
    ledger: &ChargeLedger,
    r: &RotationSystem,
    specials: &BTreeSet<usize>,
) -> ChargeLedger {
    let g = r.graph();
    let mut out = ledger.clone();
    for &s in specials {
        out.vertex_charge[s] = Rational64::new(g.degree(s) as i64, 2);
    }
    out
}

/// Number of triangular face incidences per edge, counted dart-wise: each
/// of an edge's two darts lies on one face, and contributes 1 when that
/// face has length 3. (In a simple graph a triangular face cannot repeat
/// an edge, so the count is 0, 1, or 2.)
pub fn triangle_incidences(fs: &FaceSet) -> BTreeMap<(usize, usize), usize> {
    let mut count = BTreeMap::new();
    for walk in fs.faces() {
        if walk.len() == 3 {
            for &(u, v) in walk {
                *count.entry((u.min(v), u.max(v))).or_insert(0) += 1;
            }
        }
    }
    count
}

/// Run all four rules on an irreducible embedded graph, logging every
/// transfer. Refuses reducible input, since the rules' guarantees only
/// concern graphs where no reduction applies.
pub fn apply_discharging(
    r: &RotationSystem,
    fs: &FaceSet,
    ledger: ChargeLedger,
) -> Result<ChargeLedger, DischargeError> {
    let g = r.graph();
    if let Some(red) = find_reducible(&g) {
        return Err(DischargeError::ReducibleInput { vertex: red.v });
    }
    let mut led = ledger;
    let one = Rational64::from_integer(1);
    let half = Rational64::new(1, 2);
    let fifth = Rational64::new(1, 5);

    for f in 0..fs.len() {
        if fs.degree(f) < 4 {
            continue;
        }
        let boundary = fs.boundary(f);
        let low: BTreeSet<usize> =
            boundary.iter().copied().filter(|&v| g.degree(v) == 3).collect();
        for v in low {
            led.transfer(Party::Face(f), Party::Vertex(v), one, Rule::FaceToDegreeThree);
        }
        let len = boundary.len();
        for i in 0..len {
            let (a, mid, b) = (boundary[i], boundary[(i + 1) % len], boundary[(i + 2) % len]);
            if g.degree(mid) == 11
                && matches!(g.degree(a), 4 | 5)
                && matches!(g.degree(b), 4 | 5)
            {
                led.transfer(Party::Face(f), Party::Vertex(mid), one, Rule::FaceToFlankedEleven);
            }
        }
    }

    let triangles = triangle_incidences(fs);
    for x in 0..g.n() {
        match g.degree(x) {
            d if d >= 11 => {
                for &y in g.adj(x) {
                    let amount = match g.degree(y) {
                        3 => {
                            let tris =
                                triangles.get(&(x.min(y), x.max(y))).copied().unwrap_or(0);
                            if tris == 2 {
                                one
                            } else {
                                half
                            }
                        }
                        4 | 5 => half,
                        _ => continue,
                    };
                    led.transfer(Party::Vertex(x), Party::Vertex(y), amount, Rule::VertexToLowNeighbor);
                }
            }
            10 => {
                for &y in g.adj(x) {
                    if g.degree(y) == 5 {
                        led.transfer(Party::Vertex(x), Party::Vertex(y), fifth, Rule::TenToFiveNeighbor);
                    }
                }
            }
            _ => {}
        }
    }
    Ok(led)
}

/// End-to-end audit report for one embedding.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub genus: usize,
    pub faces: usize,
    /// Total before and after; transfers conserve it, the special-vertex
    /// modification may not.
    pub initial_total: Rational64,
    pub final_total: Rational64,
    pub min_vertex: Option<(usize, Rational64)>,
    pub min_face: Option<(usize, Rational64)>,
    pub negatives: Vec<(Party, Rational64)>,
    pub ledger: ChargeLedger,
}

/// Initial charges, special modification, all discharging rules, then the
/// minima and every party left negative.
pub fn audit(r: &RotationSystem, specials: &BTreeSet<usize>) -> Result<AuditReport, DischargeError> {
    let (initial, fs) = initial_charges(r)?;
    let genus = euler_genus(r)?;
    let initial_total = initial.total();
    let modified = modified_charges(&initial, r, specials);
    let ledger = apply_discharging(r, &fs, modified)?;
    let (min_vertex, min_face) = ledger.minima();
    Ok(AuditReport {
        genus,
        faces: fs.len(),
        initial_total,
        final_total: ledger.total(),
        min_vertex,
        min_face,
        negatives: ledger.negatives(),
        ledger,
    })
}

/// The Euler identity: the starting total is exactly 6g - 12.
pub fn expected_total(genus: usize) -> Rational64 {
    Rational64::from_integer(6 * genus as i64 - 12)
}
