//! Trigonal `R`-matrices, Yang-Baxter equations, and tile derivation.
//!
//! The puzzle formalism rests on three rank-two `R`-matrices `R^A`, `R^B`,
//! `R^C`, each `9x9` with exactly eleven nonzero entries, acting on pairs of
//! three-dimensional line spaces.  Lines of the first kind carry the 60°
//! edges of the triangular lattice, lines of the second kind the 120° edges,
//! and lines of the third kind the horizontal edges; `R^A` acts on kinds
//! (1,2), `R^B` on (2,3), `R^C` on (1,3).  This module transcribes the
//! matrices literally, verifies the rank-one (five-vertex) and rank-two
//! Yang-Baxter equations symbolically, and *derives* the puzzle tile
//! catalogue and its weight table from the entries of `R^A` alone —
//! guaranteeing the enumeration in [`crate::puzzle`] uses exactly the tiles
//! the integrable structure dictates.

use thiserror::Error;

use crate::algebra::{Family, Polynomial, Variable};
use crate::puzzle::{
    down_tile_extended, pair_weight, up_tile_extended, WeightTable, EMPTY, GREEN, RED, REDGREEN,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VertexModelError {
    /// Decoding an `R`-matrix did not reproduce a consistent tile catalogue.
    #[error("R-matrix entries do not decode to a consistent tile catalogue: {0}")]
    InconsistentCatalogue(String),
}

/// The five entry values that occur in the transcribed matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntrySym {
    One,
    NegOne,
    Z,
    NegZ,
    OneMinusZ,
}

impl EntrySym {
    pub fn value(self, z: &Polynomial) -> Polynomial {
        match self {
            EntrySym::One => Polynomial::one(),
            EntrySym::NegOne => Polynomial::int(-1),
            EntrySym::Z => z.clone(),
            EntrySym::NegZ => z.neg(),
            EntrySym::OneMinusZ => Polynomial::one().sub(z),
        }
    }
}

use EntrySym::{NegOne, NegZ, One, OneMinusZ, Z};

/// Entry list of a `9x9` matrix: `((row, col), value)`, 1-based, where the
/// row indexes the incoming pair `(a,b)` as `3(a-1)+b` and the column the
/// outgoing pair.
pub type EntryTable = [((usize, usize), EntrySym); 11];

/// `R^A(z)`, acting on a (60°-edge, 120°-edge) pair of lines.
pub const R_A: EntryTable = [
    ((1, 5), NegZ),
    ((1, 9), Z),
    ((3, 3), One),
    ((4, 4), One),
    ((5, 9), One),
    ((6, 6), One),
    ((7, 7), One),
    ((8, 8), One),
    ((9, 1), One),
    ((9, 5), Z),
    ((9, 9), OneMinusZ),
];

/// `R^B(z)`, acting on a (120°-edge, horizontal-edge) pair of lines.
pub const R_B: EntryTable = [
    ((1, 1), OneMinusZ),
    ((1, 5), One),
    ((1, 9), One),
    ((2, 2), One),
    ((3, 3), One),
    ((4, 4), One),
    ((5, 1), Z),
    ((7, 7), One),
    ((8, 8), One),
    ((9, 1), Z),
    ((9, 5), NegOne),
];

/// `R^C(z)`, acting on a (60°-edge, horizontal-edge) pair of lines.
pub const R_C: EntryTable = [
    ((2, 2), One),
    ((2, 4), One),
    ((3, 7), NegOne),
    ((4, 2), Z),
    ((4, 4), One),
    ((5, 5), OneMinusZ),
    ((6, 6), One),
    ((6, 8), Z),
    ((7, 7), One),
    ((8, 6), One),
    ((8, 8), One),
];

/// Materialize an entry table as a dense `9x9` polynomial matrix.
pub fn rmatrix9(table: &EntryTable, z: &Polynomial) -> Vec<Vec<Polynomial>> {
    let mut m = vec![vec![Polynomial::zero(); 9]; 9];
    for ((i, j), sym) in table {
        m[i - 1][j - 1] = sym.value(z);
    }
    m
}

/// The rank-one (five-vertex) `R`-matrix on `C^2 (x) C^2`, index `2a+b`
/// over `(horizontal, vertical)` states with 0 empty and 1 occupied.
pub fn rank1_matrix(z: &Polynomial) -> Vec<Vec<Polynomial>> {
    let mut m = vec![vec![Polynomial::zero(); 4]; 4];
    let entries: [(usize, usize, Polynomial); 5] = [
        (0, 0, Polynomial::one()),
        (3, 3, Polynomial::one()),
        (1, 2, z.clone()),
        (2, 1, Polynomial::one()),
        (2, 2, Polynomial::one().sub(z)),
    ];
    for (i, j, v) in entries {
        m[i][j] = v;
    }
    m
}

pub fn mat_mul(a: &[Vec<Polynomial>], b: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
    let (n, m, p) = (a.len(), b.len(), b[0].len());
    let mut out = vec![vec![Polynomial::zero(); p]; n];
    for i in 0..n {
        for (kk, bk) in b.iter().enumerate().take(m) {
            if a[i][kk].is_zero() {
                continue;
            }
            for j in 0..p {
                if bk[j].is_zero() {
                    continue;
                }
                let t = a[i][kk].mul(&bk[j]);
                out[i][j] = out[i][j].add(&t);
            }
        }
    }
    out
}

/// Lift a `d^2 x d^2` matrix acting on tensor slots `(s0, s1)` to the full
/// `d^nslots`-dimensional space (identity on the other slots).  Indices
/// decompose big-endian: slot 0 is the most significant digit.
pub fn lift(
    m: &[Vec<Polynomial>],
    d: usize,
    slots: (usize, usize),
    nslots: usize,
) -> Vec<Vec<Polynomial>> {
    let dim = d.pow(nslots as u32);
    let mut out = vec![vec![Polynomial::zero(); dim]; dim];
    for row in 0..dim {
        let mut idx = vec![0usize; nslots];
        let mut r = row;
        for slot in (0..nslots).rev() {
            idx[slot] = r % d;
            r /= d;
        }
        let (a, b) = (idx[slots.0], idx[slots.1]);
        for ja in 0..d {
            for jb in 0..d {
                let v = &m[d * a + b][d * ja + jb];
                if v.is_zero() {
                    continue;
                }
                let mut jdx = idx.clone();
                jdx[slots.0] = ja;
                jdx[slots.1] = jb;
                let col = jdx.iter().fold(0, |acc, &t| d * acc + t);
                out[row][col] = out[row][col].add(v);
            }
        }
    }
    out
}

fn ratio(a: Variable, b: Variable) -> Polynomial {
    Polynomial::var(a).mul(&Polynomial::var_pow(b, -1))
}

/// Verify the rank-one Yang-Baxter equation
/// `R_ab(t_a/t_b) R_ac(t_a/t_c) R_bc(t_b/t_c) = R_bc R_ac R_ab`
/// symbolically on `(C^2)^(x3)` — 64 polynomial identities.
pub fn ybe_rank1() -> bool {
    let (ta, tb, tc) = (Variable::t(1), Variable::t(2), Variable::t(3));
    let rab = lift(&rank1_matrix(&ratio(ta, tb)), 2, (0, 1), 3);
    let rac = lift(&rank1_matrix(&ratio(ta, tc)), 2, (0, 2), 3);
    let rbc = lift(&rank1_matrix(&ratio(tb, tc)), 2, (1, 2), 3);
    mat_mul(&mat_mul(&rab, &rac), &rbc) == mat_mul(&mat_mul(&rbc, &rac), &rab)
}

/// Verify the rank-two Yang-Baxter equation
/// `R^A_ab(t2/t1) R^C_ac(t1/t3) R^B_bc(t3/t2) = R^B_bc R^C_ac R^A_ab`
/// symbolically on `(C^3)^(x3)` — 729 polynomial identities.
pub fn ybe_rank2() -> bool {
    ybe_rank2_with(&R_A, &R_B, &R_C)
}

/// Same check against caller-supplied entry tables (so tests can confirm
/// that corrupting any entry breaks the equation).
pub fn ybe_rank2_with(a: &EntryTable, b: &EntryTable, c: &EntryTable) -> bool {
    let (t1, t2, t3) = (Variable::t(1), Variable::t(2), Variable::t(3));
    let ra = lift(&rmatrix9(a, &ratio(t2, t1)), 3, (0, 1), 3);
    let rc = lift(&rmatrix9(c, &ratio(t1, t3)), 3, (0, 2), 3);
    let rb = lift(&rmatrix9(b, &ratio(t3, t2)), 3, (1, 2), 3);
    mat_mul(&mat_mul(&ra, &rc), &rb) == mat_mul(&mat_mul(&rb, &rc), &ra)
}

// ---------------------------------------------------------------------------
// Edge dictionaries and tile derivation
// ---------------------------------------------------------------------------

/// Line index (1..=3) of a 60°-edge state.  (A bare red never occurs on a
/// 60° edge of a catalogued rhombus.)
fn d60(s: u8) -> Option<usize> {
    match s {
        REDGREEN => Some(1),
        EMPTY => Some(2),
        GREEN => Some(3),
        _ => None,
    }
}

fn inv60(i: usize) -> u8 {
    [REDGREEN, EMPTY, GREEN][i - 1]
}

/// Line index of a 120°-edge state (a bare green never occurs).
fn d120(s: u8) -> Option<usize> {
    match s {
        EMPTY => Some(1),
        REDGREEN => Some(2),
        RED => Some(3),
        _ => None,
    }
}

fn inv120(i: usize) -> u8 {
    [EMPTY, REDGREEN, RED][i - 1]
}

/// Line index of a horizontal-edge state (a superposition never occurs).
fn dh(s: u8) -> Option<usize> {
    match s {
        RED => Some(1),
        GREEN => Some(2),
        EMPTY => Some(3),
        _ => None,
    }
}

/// A tile catalogue derived from `R`-matrix entries: the up- and down-tile
/// ids that occur, and the weighted (up, down) pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileCatalogue {
    pub up_tiles: Vec<u8>,
    pub down_tiles: Vec<u8>,
    pub pairs: Vec<((u8, u8), EntrySym)>,
}

fn find_up(edges: [u8; 3]) -> Option<u8> {
    (0..=8u8).find(|&id| up_tile_extended(id) == Some(edges))
}

fn find_down(edges: [u8; 3]) -> Option<u8> {
    (0..=8u8).find(|&id| down_tile_extended(id) == Some(edges))
}

/// Decode an `R^A`-style entry table into the tile catalogue.
///
/// An `A`-kind rhombus is an up- and a down-triangle sharing their
/// horizontal edge; the incoming index encodes `(up.L60, down.L120)` and
/// the outgoing index `(down.R60, up.R120)`.  Each nonzero entry must
/// decode to a unique catalogued pair with matching shared edge, the up
/// tiles must be exactly `{0,1,2,3,4,7,8}`, the down tiles
/// `{0,1,2,3,4,7}`, and the weights must reproduce the equivariant weight
/// table of [`crate::puzzle`].
pub fn derive_tiles_from(table: &EntryTable) -> Result<TileCatalogue, VertexModelError> {
    let mut pairs: Vec<((u8, u8), EntrySym)> = Vec::new();
    for ((i, j), sym) in table {
        let (ia, ib) = ((i - 1) / 3 + 1, (i - 1) % 3 + 1);
        let (ja, jb) = ((j - 1) / 3 + 1, (j - 1) % 3 + 1);
        let (l60, l120) = (inv60(ia), inv120(ib));
        let (r60, r120) = (inv60(ja), inv120(jb));
        let up = [l60 ^ r120, l60, r120];
        let down = [l120 ^ r60, l120, r60];
        if up[0] != down[0] {
            return Err(VertexModelError::InconsistentCatalogue(format!(
                "entry ({i},{j}): shared horizontal edge mismatch"
            )));
        }
        let (uid, did) = match (find_up(up), find_down(down)) {
            (Some(u), Some(d)) => (u, d),
            _ => {
                return Err(VertexModelError::InconsistentCatalogue(format!(
                    "entry ({i},{j}): no catalogued tile with the decoded edges"
                )))
            }
        };
        if pairs.iter().any(|(p, _)| *p == (uid, did)) {
            return Err(VertexModelError::InconsistentCatalogue(format!(
                "duplicate pair ({uid},{did})"
            )));
        }
        pairs.push(((uid, did), *sym));
    }
    let mut up_tiles: Vec<u8> = pairs.iter().map(|((u, _), _)| *u).collect();
    let mut down_tiles: Vec<u8> = pairs.iter().map(|((_, d), _)| *d).collect();
    up_tiles.sort_unstable();
    up_tiles.dedup();
    down_tiles.sort_unstable();
    down_tiles.dedup();
    if up_tiles != [0, 1, 2, 3, 4, 7, 8] {
        return Err(VertexModelError::InconsistentCatalogue(format!(
            "up tiles {up_tiles:?}"
        )));
    }
    if down_tiles != [0, 1, 2, 3, 4, 7] {
        return Err(VertexModelError::InconsistentCatalogue(format!(
            "down tiles {down_tiles:?}"
        )));
    }
    let w = Polynomial::var(Variable::new(Family::Generic, 9));
    for ((u, d), sym) in &pairs {
        let expect = pair_weight(WeightTable::Equivariant, (*u, *d), &w);
        if expect.as_ref() != Some(&sym.value(&w)) {
            return Err(VertexModelError::InconsistentCatalogue(format!(
                "pair ({u},{d}) weight differs from the equivariant table"
            )));
        }
    }
    Ok(TileCatalogue { up_tiles, down_tiles, pairs })
}

/// Derive the tile catalogue from the transcribed `R^A`.
pub fn derive_tiles() -> Result<TileCatalogue, VertexModelError> {
    derive_tiles_from(&R_A)
}

// ---------------------------------------------------------------------------
// The three rhombus orientations against the three R-matrices
// ---------------------------------------------------------------------------

/// Rhombus table of a kind: `((up id, down id), entry value)`.
pub type RhombusTable = [((u8, u8), EntrySym); 11];

/// Vertical rhombi (shared horizontal edge; same cell), matching `R^A`.
pub const RHOMBUS_A: RhombusTable = [
    ((2, 2), One),
    ((0, 2), One),
    ((2, 0), Z),
    ((0, 0), One),
    ((7, 7), OneMinusZ),
    ((1, 1), One),
    ((4, 4), One),
    ((3, 1), Z),
    ((1, 3), One),
    ((3, 3), One),
    ((8, 4), NegZ),
];

/// Rhombi leaning right (up-tile at `(r, c+1)`, down-tile at `(r, c)`,
/// sharing a 60° edge), matching `R^B`.
pub const RHOMBUS_B: RhombusTable = [
    ((3, 3), One),
    ((0, 3), Z),
    ((3, 0), One),
    ((0, 0), One),
    ((6, 6), OneMinusZ),
    ((1, 1), One),
    ((2, 2), One),
    ((4, 1), Z),
    ((1, 4), One),
    ((4, 4), One),
    ((8, 2), NegOne),
];

/// Rhombi leaning left (up-tile at `(r+1, c)`, down-tile at `(r, c)`,
/// sharing a 120° edge), matching `R^C`.
pub const RHOMBUS_C: RhombusTable = [
    ((4, 4), One),
    ((0, 4), One),
    ((4, 0), Z),
    ((0, 0), One),
    ((5, 5), OneMinusZ),
    ((1, 1), One),
    ((3, 3), One),
    ((2, 1), One),
    ((1, 2), Z),
    ((2, 2), One),
    ((8, 3), NegOne),
];

/// Entry position of an `A`-kind pair: in = `(up.L60, down.L120)`,
/// out = `(down.R60, up.R120)`.
pub fn amap(u: u8, d: u8) -> Option<(usize, usize)> {
    let [_, ul, ur] = up_tile_extended(u)?;
    let [_, dl, dr] = down_tile_extended(d)?;
    Some((3 * (d60(ul)? - 1) + d120(dl)?, 3 * (d60(dr)? - 1) + d120(ur)?))
}

/// Entry position of a `B`-kind pair: in = `(down.L120, up.H)`,
/// out = `(up.R120, down.H)`.
pub fn bmap(u: u8, d: u8) -> Option<(usize, usize)> {
    let [uh, _, ur] = up_tile_extended(u)?;
    let [dh_, dl, _] = down_tile_extended(d)?;
    Some((3 * (d120(dl)? - 1) + dh(uh)?, 3 * (d120(ur)? - 1) + dh(dh_)?))
}

/// Entry position of a `C`-kind pair: in = `(up.L60, up.H)`,
/// out = `(down.R60, down.H)`.
pub fn cmap(u: u8, d: u8) -> Option<(usize, usize)> {
    let [uh, ul, _] = up_tile_extended(u)?;
    let [dh_, _, dr] = down_tile_extended(d)?;
    Some((3 * (d60(ul)? - 1) + dh(uh)?, 3 * (d60(dr)? - 1) + dh(dh_)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn yang_baxter_rank1_symbolic() {
        assert!(ybe_rank1());
    }

    #[test]
    fn yang_baxter_rank2_symbolic() {
        assert!(ybe_rank2());
    }

    #[test]
    fn yang_baxter_detects_mutations() {
        // corrupting any single entry of R^B must break the equation
        let mut b = R_B;
        b[0].1 = EntrySym::One; // (1,1): 1-z -> 1
        assert!(!ybe_rank2_with(&R_A, &b, &R_C));
        let mut a = R_A;
        a[10].1 = EntrySym::Z; // (9,9): 1-z -> z
        assert!(!ybe_rank2_with(&a, &R_B, &R_C));
        let mut c = R_C;
        c[2].1 = EntrySym::One; // (3,7): -1 -> 1
        assert!(!ybe_rank2_with(&R_A, &R_B, &c));
    }

    #[test]
    fn entry_counts() {
        assert_eq!(R_A.len(), 11);
        assert_eq!(R_B.len(), 11);
        assert_eq!(R_C.len(), 11);
    }

    #[test]
    fn derive_tiles_produces_the_catalogue() {
        let cat = derive_tiles().unwrap();
        assert_eq!(cat.up_tiles, vec![0, 1, 2, 3, 4, 7, 8]);
        assert_eq!(cat.down_tiles, vec![0, 1, 2, 3, 4, 7]);
        assert_eq!(cat.pairs.len(), 11);
    }

    #[test]
    fn derive_tiles_rejects_corruption() {
        let mut bad = R_A;
        bad[2].0 = (3, 4); // move entry (3,3) to (3,4): decodes badly
        assert!(derive_tiles_from(&bad).is_err());
        let mut bad2 = R_A;
        bad2[9].1 = EntrySym::NegZ; // (9,5): z -> -z: wrong weight
        assert!(derive_tiles_from(&bad2).is_err());
    }

    fn check_table(
        table: &RhombusTable,
        entries: &EntryTable,
        display: &[((usize, usize), (u8, u8)); 11],
        map: fn(u8, u8) -> Option<(usize, usize)>,
    ) {
        let entry_map: BTreeMap<(usize, usize), EntrySym> = entries.iter().copied().collect();
        let display_map: BTreeMap<(usize, usize), (u8, u8)> = display.iter().copied().collect();
        let mut seen = BTreeMap::new();
        for ((u, d), sym) in table {
            let ij = map(*u, *d).expect("pair must be mappable");
            assert_eq!(entry_map.get(&ij), Some(sym), "pair ({u},{d}) at {ij:?}");
            assert_eq!(display_map.get(&ij), Some(&(*u, *d)), "display at {ij:?}");
            seen.insert(ij, *sym);
        }
        assert_eq!(seen.len(), 11);
        assert_eq!(
            seen.keys().collect::<Vec<_>>(),
            entry_map.keys().collect::<Vec<_>>()
        );
    }

    #[test]
    fn rhombus_tables_match_r_matrices() {
        // the exact entry <-> tile-pair correspondence of all three kinds
        let display_a: [((usize, usize), (u8, u8)); 11] = [
            ((1, 5), (8, 4)),
            ((1, 9), (2, 0)),
            ((3, 3), (2, 2)),
            ((4, 4), (4, 4)),
            ((5, 9), (1, 3)),
            ((6, 6), (1, 1)),
            ((7, 7), (0, 0)),
            ((8, 8), (3, 3)),
            ((9, 1), (0, 2)),
            ((9, 5), (3, 1)),
            ((9, 9), (7, 7)),
        ];
        let display_b: [((usize, usize), (u8, u8)); 11] = [
            ((1, 1), (6, 6)),
            ((1, 5), (3, 0)),
            ((1, 9), (1, 4)),
            ((2, 2), (0, 0)),
            ((3, 3), (4, 4)),
            ((4, 4), (3, 3)),
            ((5, 1), (0, 3)),
            ((7, 7), (1, 1)),
            ((8, 8), (2, 2)),
            ((9, 1), (4, 1)),
            ((9, 5), (8, 2)),
        ];
        let display_c: [((usize, usize), (u8, u8)); 11] = [
            ((2, 2), (2, 2)),
            ((2, 4), (2, 1)),
            ((3, 7), (8, 3)),
            ((4, 2), (1, 2)),
            ((4, 4), (1, 1)),
            ((5, 5), (5, 5)),
            ((6, 6), (4, 4)),
            ((6, 8), (4, 0)),
            ((7, 7), (3, 3)),
            ((8, 6), (0, 4)),
            ((8, 8), (0, 0)),
        ];
        check_table(&RHOMBUS_A, &R_A, &display_a, amap);
        check_table(&RHOMBUS_B, &R_B, &display_b, bmap);
        check_table(&RHOMBUS_C, &R_C, &display_c, cmap);
    }

    #[test]
    fn glue_edges_are_shared() {
        for ((u, d), _) in &RHOMBUS_B {
            // B-kind: down.R60 (at (r,c+1)) is up's L60
            assert_eq!(down_tile_extended(*d).unwrap()[2], up_tile_extended(*u).unwrap()[1]);
        }
        for ((u, d), _) in &RHOMBUS_C {
            // C-kind: down.L120 (at (r+1,c)) is up's R120
            assert_eq!(down_tile_extended(*d).unwrap()[1], up_tile_extended(*u).unwrap()[2]);
        }
    }

    #[test]
    fn vertical_rhombus_table_is_the_derived_weight_table() {
        let cat = derive_tiles().unwrap();
        let derived: BTreeMap<(u8, u8), EntrySym> = cat.pairs.into_iter().collect();
        let table: BTreeMap<(u8, u8), EntrySym> = RHOMBUS_A.into_iter().collect();
        assert_eq!(derived, table);
    }

    #[test]
    fn extra_tiles_only_in_leaning_rhombi() {
        assert!(RHOMBUS_A.iter().all(|((u, d), _)| *u != 5 && *u != 6 && *d != 5 && *d != 6));
        assert!(RHOMBUS_B.iter().any(|((u, d), _)| *u == 6 || *d == 6));
        assert!(RHOMBUS_C.iter().any(|((u, d), _)| *u == 5 || *d == 5));
    }
}
