//! Puzzle tiles, triangular/rhombic domains, and exact enumeration.
//!
//! A puzzle is a tiling of a triangular lattice by unit up- and
//! down-triangles whose edges carry one of four states — empty, green, red,
//! or superposed red-green — subject only to edge-state continuity.  Edge
//! states form a two-bit mask (green = bit 0, red = bit 1), and every tile
//! satisfies `H = L xor R`: the green and red sub-graphs are families of
//! continuous lines through the puzzle.
//!
//! The seven up-tiles and seven down-tiles used in puzzles (ids
//! `0,1,2,3,4,7,8`; id 8 is the "K-tile") are exactly the states that occur
//! in the rank-two `R`-matrices of [`crate::vertexmodel`], which also carry
//! two further states (ids 5, 6) that never appear in a puzzle.
//!
//! Enumeration is deterministic backtracking over a fixed cell scan order;
//! the result is independent of that order (tested), and each configuration
//! records both its tile ids and the full edge-state assignment.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::young::{diagram_of_frame, Partition, YoungError};

/// Edge states as a two-bit mask: green is bit 0, red is bit 1.
pub const EMPTY: u8 = 0;
pub const GREEN: u8 = 1;
pub const RED: u8 = 2;
pub const REDGREEN: u8 = 3;

/// A typed view of the two-bit edge state, used in serialized records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeState {
    Empty,
    Green,
    Red,
    RedGreen,
}

impl EdgeState {
    pub fn bits(self) -> u8 {
        match self {
            EdgeState::Empty => EMPTY,
            EdgeState::Green => GREEN,
            EdgeState::Red => RED,
            EdgeState::RedGreen => REDGREEN,
        }
    }

    pub fn from_bits(b: u8) -> Option<Self> {
        match b {
            EMPTY => Some(EdgeState::Empty),
            GREEN => Some(EdgeState::Green),
            RED => Some(EdgeState::Red),
            REDGREEN => Some(EdgeState::RedGreen),
            _ => None,
        }
    }
}

/// Edges of an up-tile, as `(H, L60, R120)`: horizontal, lower-left 60°,
/// lower-right 120° sides.  `None` for ids outside the puzzle tile set.
pub fn up_tile(id: u8) -> Option<[u8; 3]> {
    match id {
        0 => Some([GREEN, GREEN, EMPTY]),
        1 => Some([RED, EMPTY, RED]),
        2 => Some([GREEN, REDGREEN, RED]),
        3 => Some([RED, GREEN, REDGREEN]),
        4 => Some([EMPTY, EMPTY, EMPTY]),
        7 => Some([REDGREEN, GREEN, RED]),
        8 => Some([EMPTY, REDGREEN, REDGREEN]),
        _ => None,
    }
}

/// Edges of a down-tile, as `(H, L120, R60)`.
pub fn down_tile(id: u8) -> Option<[u8; 3]> {
    match id {
        0 => Some([GREEN, EMPTY, GREEN]),
        1 => Some([RED, RED, EMPTY]),
        2 => Some([GREEN, RED, REDGREEN]),
        3 => Some([RED, REDGREEN, GREEN]),
        4 => Some([EMPTY, EMPTY, EMPTY]),
        7 => Some([REDGREEN, RED, GREEN]),
        8 => Some([EMPTY, REDGREEN, REDGREEN]),
        _ => None,
    }
}

/// The extended up-tile table including the two `R`-matrix-only states.
pub fn up_tile_extended(id: u8) -> Option<[u8; 3]> {
    match id {
        5 => Some([GREEN, EMPTY, GREEN]),
        6 => Some([RED, RED, EMPTY]),
        _ => up_tile(id),
    }
}

/// The extended down-tile table including the two `R`-matrix-only states.
pub fn down_tile_extended(id: u8) -> Option<[u8; 3]> {
    match id {
        5 => Some([GREEN, GREEN, EMPTY]),
        6 => Some([RED, EMPTY, RED]),
        _ => down_tile(id),
    }
}

/// Tile ids legal in puzzles, by orientation.  In the standard reading the
/// K-tile (id 8) points up; under the `macro_` (rotated) reading it points
/// down.  `ordinary` restricts to the non-equivariant tile set (drops the
/// horizontal-rhombus tile 7).
pub fn tile_sets(ordinary: bool, macro_: bool) -> (Vec<u8>, Vec<u8>) {
    let mut up: Vec<u8> = if macro_ {
        vec![0, 1, 2, 3, 4, 7]
    } else {
        vec![0, 1, 2, 3, 4, 7, 8]
    };
    let mut down: Vec<u8> = if macro_ {
        vec![0, 1, 2, 3, 4, 7, 8]
    } else {
        vec![0, 1, 2, 3, 4, 7]
    };
    if ordinary {
        up.retain(|&t| t != 7);
        down.retain(|&t| t != 7);
    }
    (up, down)
}

// ---------------------------------------------------------------------------
// Edges and domains
// ---------------------------------------------------------------------------

/// The three edge directions of the triangular lattice.
///
/// `Sixty` edges rise at 60° (the left side of an up-tile), `OneTwenty`
/// edges at 120° (its right side).  A down-tile's 120° side at cell `(r,c)`
/// is addressed as `(OneTwenty, r+1, c)` and its 60° side as
/// `(Sixty, r, c+1)`, which is what makes adjacent tiles share edge keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeKind {
    Horizontal,
    Sixty,
    OneTwenty,
}

/// An addressed edge of the lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub kind: EdgeKind,
    pub row: u16,
    pub col: u16,
}

impl Edge {
    pub fn new(kind: EdgeKind, row: usize, col: usize) -> Self {
        Edge { kind, row: row as u16, col: col as u16 }
    }
}

/// The three edges of the up-tile at `(r,c)`: `(H, L60, R120)`.
pub fn up_edges(r: usize, c: usize) -> [Edge; 3] {
    [
        Edge::new(EdgeKind::Horizontal, r, c),
        Edge::new(EdgeKind::Sixty, r, c),
        Edge::new(EdgeKind::OneTwenty, r, c),
    ]
}

/// The three edges of the down-tile at `(r,c)`: `(H, L120, R60)`.
pub fn down_edges(r: usize, c: usize) -> [Edge; 3] {
    [
        Edge::new(EdgeKind::Horizontal, r, c),
        Edge::new(EdgeKind::OneTwenty, r + 1, c),
        Edge::new(EdgeKind::Sixty, r, c + 1),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Up,
    Down,
}

/// The supported puzzle regions, each of linear size `n`.
///
/// `TriUp` and `TriDown` share one triangular cell lattice; `TriDown` is the
/// rotated reading used by the primed rules, whose boundary words run in the
/// opposite direction and whose K-tile points down.  `Lozenge` is the
/// `n x n` rhombus of the doubly-primed rules, and `BottomHalf` is the part
/// of the lozenge below its horizontal diagonal (used to check the
/// splitting identities).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PuzzleDomain {
    TriUp(usize),
    TriDown(usize),
    Lozenge(usize),
    BottomHalf(usize),
}

impl PuzzleDomain {
    pub fn n(&self) -> usize {
        match *self {
            PuzzleDomain::TriUp(n)
            | PuzzleDomain::TriDown(n)
            | PuzzleDomain::Lozenge(n)
            | PuzzleDomain::BottomHalf(n) => n,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            PuzzleDomain::TriUp(_) => "TriUp",
            PuzzleDomain::TriDown(_) => "TriDown",
            PuzzleDomain::Lozenge(_) => "Lozenge",
            PuzzleDomain::BottomHalf(_) => "BottomHalf",
        }
    }

    /// Cells in the deterministic scan order used by [`enumerate`].
    pub fn cells(&self) -> Vec<(usize, usize, Orientation)> {
        let n = self.n();
        let mut order = Vec::new();
        match self {
            PuzzleDomain::TriUp(_) | PuzzleDomain::TriDown(_) => {
                for r in 0..n {
                    for c in 0..n - r {
                        order.push((r, c, Orientation::Up));
                        if c + r + 1 < n {
                            order.push((r, c, Orientation::Down));
                        }
                    }
                }
            }
            PuzzleDomain::BottomHalf(_) => {
                for r in (0..n).rev() {
                    for c in (0..n).rev() {
                        if r + c >= n - 1 {
                            order.push((r, c, Orientation::Down));
                        }
                        if r + c >= n {
                            order.push((r, c, Orientation::Up));
                        }
                    }
                }
            }
            PuzzleDomain::Lozenge(_) => {
                for r in (0..n).rev() {
                    for c in (0..n).rev() {
                        order.push((r, c, Orientation::Down));
                        order.push((r, c, Orientation::Up));
                    }
                }
            }
        }
        order
    }

    /// Allowed states on boundary edges, as bitsets over the four states:
    /// 60° sides admit `{empty, green}`, 120° sides `{empty, red}`, and
    /// horizontal sides `{green, red}`.
    pub fn boundary_allowed(&self) -> BTreeMap<Edge, u8> {
        let n = self.n();
        let mut allowed = BTreeMap::new();
        let set = |states: &[u8]| states.iter().fold(0u8, |m, &s| m | (1 << s));
        let eg = set(&[EMPTY, GREEN]);
        let er = set(&[EMPTY, RED]);
        let gr = set(&[GREEN, RED]);
        match self {
            PuzzleDomain::TriUp(_) | PuzzleDomain::TriDown(_) => {
                for r in 0..n {
                    allowed.insert(Edge::new(EdgeKind::Sixty, r, 0), eg);
                    allowed.insert(Edge::new(EdgeKind::Horizontal, r, n - 1 - r), gr);
                }
                for c in 0..n {
                    allowed.insert(Edge::new(EdgeKind::OneTwenty, 0, c), er);
                }
            }
            PuzzleDomain::BottomHalf(_) => {
                for r in 0..n {
                    allowed.insert(Edge::new(EdgeKind::Horizontal, r, n - 1 - r), gr);
                    allowed.insert(Edge::new(EdgeKind::Sixty, r, n), eg);
                }
                for c in 0..n {
                    allowed.insert(Edge::new(EdgeKind::OneTwenty, n, c), er);
                }
            }
            PuzzleDomain::Lozenge(_) => {
                for r in 0..n {
                    allowed.insert(Edge::new(EdgeKind::Sixty, r, 0), eg);
                    allowed.insert(Edge::new(EdgeKind::Sixty, r, n), eg);
                }
                for c in 0..n {
                    allowed.insert(Edge::new(EdgeKind::OneTwenty, 0, c), er);
                    allowed.insert(Edge::new(EdgeKind::OneTwenty, n, c), er);
                }
            }
        }
        allowed
    }
}

// ---------------------------------------------------------------------------
// Configurations and enumeration
// ---------------------------------------------------------------------------

/// One complete legal tiling: tile ids per cell plus the full edge-state
/// assignment they induce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuzzleConfig {
    pub domain: PuzzleDomain,
    pub cells: BTreeMap<(usize, usize, Orientation), u8>,
    pub edges: BTreeMap<Edge, u8>,
}

impl PuzzleConfig {
    /// Number of K-tiles (id 8), either orientation.
    pub fn k_tile_count(&self) -> usize {
        self.cells.values().filter(|&&t| t == 8).count()
    }

    /// Cells `(r,c)` holding both an up- and a down-tile, with their ids.
    /// These are the vertical rhombi whose pair weights multiply to the
    /// configuration weight.
    pub fn a_pairs(&self) -> Vec<(usize, usize, u8, u8)> {
        self.cells
            .iter()
            .filter_map(|(&(r, c, o), &up)| {
                if o == Orientation::Up {
                    self.cells
                        .get(&(r, c, Orientation::Down))
                        .map(|&down| (r, c, up, down))
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn tile_at(&self, r: usize, c: usize, o: Orientation) -> Option<u8> {
        self.cells.get(&(r, c, o)).copied()
    }

    pub fn state_of(&self, e: &Edge) -> Option<u8> {
        self.edges.get(e).copied()
    }
}

/// Scan direction for [`enumerate`]; `Reverse` exists to test that the
/// enumerated set of configurations is independent of fill order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ScanOrder {
    #[default]
    Forward,
    Reverse,
}

/// Enumerate every legal tiling of `domain` given pinned edge states
/// (boundary conditions, possibly also interior pins) and the allowed tile
/// ids per orientation.  Boundary edges that are not pinned are constrained
/// to their side's allowed state set.  A pin that contradicts its side's
/// allowed set yields no configurations.
pub fn enumerate(
    domain: PuzzleDomain,
    pinned: &BTreeMap<Edge, u8>,
    up_set: &[u8],
    down_set: &[u8],
    scan: ScanOrder,
) -> Vec<PuzzleConfig> {
    let allowed = domain.boundary_allowed();
    for (e, s) in pinned {
        if let Some(mask) = allowed.get(e) {
            if mask & (1 << s) == 0 {
                return Vec::new();
            }
        }
    }
    let mut order = domain.cells();
    if scan == ScanOrder::Reverse {
        order.reverse();
    }

    struct Search<'a> {
        order: Vec<(usize, usize, Orientation)>,
        allowed: BTreeMap<Edge, u8>,
        up_set: &'a [u8],
        down_set: &'a [u8],
        states: BTreeMap<Edge, u8>,
        cells: BTreeMap<(usize, usize, Orientation), u8>,
        domain: PuzzleDomain,
        out: Vec<PuzzleConfig>,
    }

    impl Search<'_> {
        fn fits(&self, edges: &[Edge; 3], vals: &[u8; 3]) -> bool {
            edges.iter().zip(vals).all(|(e, v)| match self.states.get(e) {
                Some(s) => s == v,
                None => match self.allowed.get(e) {
                    Some(mask) => mask & (1 << v) != 0,
                    None => true,
                },
            })
        }

        fn rec(&mut self, i: usize) {
            if i == self.order.len() {
                self.out.push(PuzzleConfig {
                    domain: self.domain,
                    cells: self.cells.clone(),
                    edges: self.states.clone(),
                });
                return;
            }
            let (r, c, o) = self.order[i];
            let (edges, tset): ([Edge; 3], &[u8]) = match o {
                Orientation::Up => (up_edges(r, c), self.up_set),
                Orientation::Down => (down_edges(r, c), self.down_set),
            };
            for &tid in tset {
                let vals = match o {
                    Orientation::Up => up_tile(tid),
                    Orientation::Down => down_tile(tid),
                }
                .expect("tile sets contain only puzzle tiles");
                if !self.fits(&edges, &vals) {
                    continue;
                }
                let mut added: [Option<Edge>; 3] = [None; 3];
                for (slot, (e, v)) in edges.iter().zip(vals).enumerate() {
                    if !self.states.contains_key(e) {
                        self.states.insert(*e, v);
                        added[slot] = Some(*e);
                    }
                }
                self.cells.insert((r, c, o), tid);
                self.rec(i + 1);
                self.cells.remove(&(r, c, o));
                for e in added.into_iter().flatten() {
                    self.states.remove(&e);
                }
            }
        }
    }

    let mut search = Search {
        order,
        allowed,
        up_set,
        down_set,
        states: pinned.clone(),
        cells: BTreeMap::new(),
        domain,
        out: Vec::new(),
    };
    search.rec(0);
    search.out
}

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

use crate::algebra::Polynomial;

/// The two weight tables for vertical rhombi (an up/down tile pair sharing
/// a horizontal edge), as functions of the local parameter `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightTable {
    /// `(2,0) -> w`, `(3,1) -> w`, `(8,4) -> -w`, `(7,7) -> 1-w`, rest 1.
    Equivariant,
    /// Same as `Equivariant` except `(3,1) -> 1`, `(1,3) -> w`, `(8,4) -> -1`.
    Modified,
}

/// Weight of a tile pair under the given table.  The pair key is
/// `(up id, down id)` in the standard reading; callers using the rotated
/// (macro) reading pass the ids swapped.  Returns `None` for pairs outside
/// the eleven legal ones.
pub fn pair_weight(table: WeightTable, key: (u8, u8), w: &Polynomial) -> Option<Polynomial> {
    let one = Polynomial::one;
    let value = match (table, key) {
        (_, (2, 2) | (0, 2) | (0, 0) | (1, 1) | (4, 4) | (3, 3)) => one(),
        (_, (2, 0)) => w.clone(),
        (_, (7, 7)) => one().sub(w),
        (WeightTable::Equivariant, (3, 1)) => w.clone(),
        (WeightTable::Equivariant, (1, 3)) => one(),
        (WeightTable::Equivariant, (8, 4)) => w.neg(),
        (WeightTable::Modified, (3, 1)) => one(),
        (WeightTable::Modified, (1, 3)) => w.clone(),
        (WeightTable::Modified, (8, 4)) => Polynomial::int(-1),
        _ => return None,
    };
    Some(value)
}

/// Decode a list of boundary-side frames into diagrams, one per side.
pub fn encode_boundary(
    k: usize,
    n: usize,
    side_frames: &[Vec<usize>],
) -> Result<Vec<Partition>, YoungError> {
    side_frames
        .iter()
        .map(|fr| diagram_of_frame(fr, k, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tile_continuity() {
        // every tile satisfies H = L xor R, in both tables
        for id in 0..=8u8 {
            for tile in [up_tile_extended(id), down_tile_extended(id)] {
                if let Some([h, l, r]) = tile {
                    assert_eq!(h, l ^ r, "tile {id}");
                }
            }
        }
    }

    #[test]
    fn tile_set_sizes() {
        let (up, down) = tile_sets(false, false);
        assert_eq!(up.len(), 7);
        assert_eq!(down.len(), 6);
        let (up_o, down_o) = tile_sets(true, false);
        assert_eq!((up_o.len(), down_o.len()), (6, 5));
        let (up_m, down_m) = tile_sets(false, true);
        assert_eq!((up_m.len(), down_m.len()), (6, 7));
    }

    #[test]
    fn unconstrained_small_triangle_counts_match_both_scan_orders() {
        let dom = PuzzleDomain::TriUp(2);
        let pins = BTreeMap::new();
        let (up, down) = tile_sets(false, false);
        let fwd = enumerate(dom, &pins, &up, &down, ScanOrder::Forward);
        let rev = enumerate(dom, &pins, &up, &down, ScanOrder::Reverse);
        assert!(!fwd.is_empty());
        let mut a = fwd.clone();
        let mut b = rev.clone();
        a.sort_by(|x, y| x.cells.cmp(&y.cells));
        b.sort_by(|x, y| x.cells.cmp(&y.cells));
        assert_eq!(a, b);
    }

    #[test]
    fn encode_boundary_example() {
        let sides = vec![vec![3, 4], vec![1, 3], vec![1, 4]];
        let got = encode_boundary(2, 4, &sides).unwrap();
        assert_eq!(got[0], Partition::new(&[2, 2]).unwrap());
        assert_eq!(got[1], Partition::new(&[1]).unwrap());
        assert_eq!(got[2], Partition::new(&[2]).unwrap());
    }

    #[test]
    fn pair_weight_tables() {
        let w = Polynomial::var(crate::algebra::Variable::y(1));
        assert_eq!(
            pair_weight(WeightTable::Equivariant, (8, 4), &w).unwrap(),
            w.neg()
        );
        assert_eq!(
            pair_weight(WeightTable::Modified, (8, 4), &w).unwrap(),
            Polynomial::int(-1)
        );
        assert_eq!(
            pair_weight(WeightTable::Equivariant, (7, 7), &w).unwrap(),
            Polynomial::one().sub(&w)
        );
        assert!(pair_weight(WeightTable::Equivariant, (5, 5), &w).is_none());
    }
}
