//! Double Grothendieck polynomials for Grassmannians and their duals.
//!
//! `G^lambda(x; y)` is computed three independent ways — a five-vertex
//! lattice-model partition function, a ratio-of-determinants formula, and a
//! divided-difference recursion from the full box — and the dual basis
//! `G_lambda(x; y)` two ways (its defining relation to `G^{lambda*}` and a
//! separate determinant).  Agreement of the constructions is part of the
//! test suite.  All symbolic computation stays inside the Laurent-polynomial
//! ring; for the exact linear algebra in [`crate::oracle`] there are
//! evaluation-optimized counterparts over `BigRational`.

use std::collections::{BTreeMap, HashMap};

use num::rational::BigRational;
use num::{One, Zero};
use thiserror::Error;

use crate::algebra::{demazure, determinant, AlgebraError, Family, Polynomial, Variable};
use crate::young::{frame_of, dual as dual_diagram, Partition, YoungError};

#[derive(Debug, Error)]
pub enum GrothError {
    /// The lattice-model construction keeps one bit of state per column and
    /// is guarded at 16 columns.
    #[error("lattice partition function limited to n <= 16 columns, got {0}")]
    StateSpaceTooLarge(usize),
    #[error(transparent)]
    Young(#[from] YoungError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A finite alphabet of Laurent-polynomial entries, indexed from 1.
///
/// Entries are usually plain variables (`Alphabet::symbolic`), the constant
/// 1 (`Alphabet::ones`, the non-equivariant specialisation), or a reversal
/// of another alphabet.
#[derive(Clone, Debug, PartialEq)]
pub struct Alphabet(Vec<Polynomial>);

impl Alphabet {
    pub fn symbolic(family: Family, n: usize) -> Self {
        Alphabet(
            (1..=n)
                .map(|i| Polynomial::var(Variable::new(family, i as u32)))
                .collect(),
        )
    }

    pub fn ones(n: usize) -> Self {
        Alphabet(vec![Polynomial::one(); n])
    }

    pub fn from_polys(entries: Vec<Polynomial>) -> Self {
        Alphabet(entries)
    }

    /// The same alphabet read back to front.
    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        Alphabet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based entry access.
    pub fn entry(&self, i: usize) -> &Polynomial {
        &self.0[i - 1]
    }
}

fn one_minus_ratio(x: &Polynomial, y: &Polynomial) -> Result<Polynomial, AlgebraError> {
    // 1 - x/y, exact in the Laurent ring whenever y is a monomial (a
    // variable or the constant 1), which is the only way alphabets are used.
    Ok(Polynomial::one().sub(&x.exact_div(y)?))
}

// ---------------------------------------------------------------------------
// Lattice-model construction
// ---------------------------------------------------------------------------

/// Five-vertex weight with horizontal state `a` and vertical state `b`
/// (0 = empty, 1 = occupied), reading `in = (left, bottom)`,
/// `out = (right, top)`; the spectral parameter enters as `x/y`.
fn five_vertex(
    x: &Polynomial,
    y: &Polynomial,
    a_in: u8,
    b_in: u8,
    a_out: u8,
    b_out: u8,
) -> Result<Option<Polynomial>, AlgebraError> {
    let w = match (a_in, b_in, a_out, b_out) {
        (0, 0, 0, 0) | (1, 1, 1, 1) | (1, 0, 0, 1) => Some(Polynomial::one()),
        (0, 1, 1, 0) => Some(x.exact_div(y)?),
        (1, 0, 1, 0) => Some(one_minus_ratio(x, y)?),
        _ => None,
    };
    Ok(w)
}

/// Partition function of the five-vertex model on a `k x n` grid: row `i`
/// carries `x_i` (bottom to top), column `j` carries `y_j`.  `bottom`/`top`
/// are bitmasks of occupied columns (bit `j-1` for column `j`), and
/// `row_in`/`row_out` fix the horizontal state at the two ends of every row.
fn lattice_pf(
    k: usize,
    n: usize,
    bottom: u32,
    top: u32,
    x: &Alphabet,
    y: &Alphabet,
    row_in: u8,
    row_out: u8,
) -> Result<Polynomial, GrothError> {
    if n > 16 {
        return Err(GrothError::StateSpaceTooLarge(n));
    }
    let mut layers: BTreeMap<u32, Polynomial> = BTreeMap::new();
    layers.insert(bottom, Polynomial::one());
    for i in 1..=k {
        let mut next_layers: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (mask, amp) in &layers {
            // Sweep the row left to right, carrying the horizontal state.
            let mut partial: BTreeMap<(u8, u32), Polynomial> = BTreeMap::new();
            partial.insert((row_in, *mask), amp.clone());
            for j in 1..=n {
                let mut swept: BTreeMap<(u8, u32), Polynomial> = BTreeMap::new();
                for ((h, vmask), a) in &partial {
                    let b = ((vmask >> (j - 1)) & 1) as u8;
                    for h2 in 0..2u8 {
                        for b2 in 0..2u8 {
                            if let Some(w) =
                                five_vertex(x.entry(i), y.entry(j), *h, b, h2, b2)?
                            {
                                let nm = (vmask & !(1 << (j - 1))) | ((b2 as u32) << (j - 1));
                                let term = a.mul(&w);
                                swept
                                    .entry((h2, nm))
                                    .and_modify(|t| *t = t.add(&term))
                                    .or_insert(term);
                            }
                        }
                    }
                }
                partial = swept;
            }
            for ((h, vmask), a) in partial {
                if h != row_out {
                    continue;
                }
                next_layers
                    .entry(vmask)
                    .and_modify(|t| *t = t.add(&a))
                    .or_insert(a);
            }
        }
        layers = next_layers;
    }
    Ok(layers.remove(&top).unwrap_or_else(Polynomial::zero))
}

fn frame_mask(lambda: &Partition, k: usize, n: usize) -> Result<u32, YoungError> {
    let fr = frame_of(lambda, k, n)?;
    Ok(fr.iter().fold(0u32, |m, &f| m | (1 << (f - 1))))
}

/// `G^lambda(x; y)` as a lattice partition function: empty bottom boundary,
/// occupied columns `frame(lambda)` on top, rows absorbing from the left.
pub fn groth_lattice(
    k: usize,
    n: usize,
    lambda: &Partition,
    x: &Alphabet,
    y: &Alphabet,
) -> Result<Polynomial, GrothError> {
    lattice_pf(k, n, 0, frame_mask(lambda, k, n)?, x, y, 1, 0)
}

/// `G_lambda(x; y)` as a lattice partition function: occupied columns
/// `frame(lambda)` on the bottom, empty top, rows emitting to the right.
pub fn dual_groth_lattice(
    k: usize,
    n: usize,
    lambda: &Partition,
    x: &Alphabet,
    y: &Alphabet,
) -> Result<Polynomial, GrothError> {
    lattice_pf(k, n, frame_mask(lambda, k, n)?, 0, x, y, 0, 1)
}

// ---------------------------------------------------------------------------
// Determinant construction
// ---------------------------------------------------------------------------

/// `G^lambda = det( x_j^{k-i} prod_{m<f_i} (1 - x_j/y_m) ) / prod_{i<j} (x_i - x_j)`
/// where `f` is the frame of `lambda` read in increasing order.
pub fn groth_det(
    k: usize,
    n: usize,
    lambda: &Partition,
    x: &Alphabet,
    y: &Alphabet,
) -> Result<Polynomial, GrothError> {
    let fr = frame_of(lambda, k, n)?;
    let mut mat = Vec::with_capacity(k);
    for i in 1..=k {
        let mut row = Vec::with_capacity(k);
        for j in 1..=k {
            let mut entry = x.entry(j).pow((k - i) as u32);
            for m in 1..fr[i - 1] {
                entry = entry.mul(&one_minus_ratio(x.entry(j), y.entry(m))?);
            }
            row.push(entry);
        }
        mat.push(row);
    }
    let mut vandermonde = Polynomial::one();
    for i in 1..=k {
        for j in i + 1..=k {
            vandermonde = vandermonde.mul(&x.entry(i).sub(x.entry(j)));
        }
    }
    Ok(determinant(&mat).exact_div(&vandermonde)?)
}

/// Determinant formula for the dual basis:
/// `G_lambda = prod_i (x_i / y_{f_i}) det( x_j^{i-1} prod_{m>f_i} (1 - x_j/y_m) ) / prod_{i<j} (x_j - x_i)`.
pub fn dual_groth_det(
    k: usize,
    n: usize,
    lambda: &Partition,
    x: &Alphabet,
    y: &Alphabet,
) -> Result<Polynomial, GrothError> {
    let fr = frame_of(lambda, k, n)?;
    let mut pref = Polynomial::one();
    for i in 1..=k {
        pref = pref.mul(&x.entry(i).exact_div(y.entry(fr[i - 1]))?);
    }
    let mut mat = Vec::with_capacity(k);
    for i in 1..=k {
        let mut row = Vec::with_capacity(k);
        for j in 1..=k {
            let mut entry = x.entry(j).pow((i - 1) as u32);
            for m in fr[i - 1] + 1..=n {
                entry = entry.mul(&one_minus_ratio(x.entry(j), y.entry(m))?);
            }
            row.push(entry);
        }
        mat.push(row);
    }
    let mut vandermonde = Polynomial::one();
    for i in 1..=k {
        for j in i + 1..=k {
            vandermonde = vandermonde.mul(&x.entry(j).sub(x.entry(i)));
        }
    }
    Ok(pref.mul(&determinant(&mat).exact_div(&vandermonde)?))
}

// ---------------------------------------------------------------------------
// Divided-difference construction
// ---------------------------------------------------------------------------

/// Which reducible frame entry the recursion raises first.  The results are
/// independent of the choice; the non-default order exists so path
/// independence can be tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionOrder {
    LargestFirst,
    SmallestFirst,
}

/// `G^lambda` by divided differences: the full-box class is the explicit
/// product `prod_{i<=k, j<=n-k} (1 - x_i/y_j)`, and one step of the
/// recursion replaces a frame entry `e` (with `e+1` not in the frame) using
/// the operator `f -> (y_e f - y_{e+1} f^{s_e}) / (y_e - y_{e+1})`.
pub struct InductiveEvaluator {
    k: usize,
    n: usize,
    x: Alphabet,
    order: ReductionOrder,
    cache: HashMap<Vec<usize>, Polynomial>,
}

impl InductiveEvaluator {
    /// The `y` alphabet is fixed symbolic: divided differences act on the
    /// `Y` variables themselves.
    pub fn new(k: usize, n: usize, x: Alphabet, order: ReductionOrder) -> Self {
        InductiveEvaluator { k, n, x, order, cache: HashMap::new() }
    }

    pub fn eval(&mut self, lambda: &Partition) -> Result<Polynomial, GrothError> {
        let fr = frame_of(lambda, self.k, self.n)?;
        self.eval_frame(&fr)
    }

    fn eval_frame(&mut self, fr: &[usize]) -> Result<Polynomial, GrothError> {
        if let Some(hit) = self.cache.get(fr) {
            return Ok(hit.clone());
        }
        let (k, n) = (self.k, self.n);
        let full: Vec<usize> = (n - k + 1..=n).collect();
        let val = if fr == full.as_slice() {
            let mut p = Polynomial::one();
            for i in 1..=k {
                for j in 1..=n - k {
                    p = p.mul(&one_minus_ratio(
                        self.x.entry(i),
                        &Polynomial::var(Variable::y(j as u32)),
                    )?);
                }
            }
            p
        } else {
            let reducible = fr
                .iter()
                .copied()
                .filter(|&e| e + 1 <= n && !fr.contains(&(e + 1)));
            let e = match self.order {
                ReductionOrder::LargestFirst => reducible.max(),
                ReductionOrder::SmallestFirst => reducible.min(),
            }
            .expect("a non-full frame always has a raisable entry");
            let mut fr2: Vec<usize> = fr.iter().copied().filter(|&v| v != e).collect();
            fr2.push(e + 1);
            fr2.sort_unstable();
            let inner = self.eval_frame(&fr2)?;
            demazure(e as u32, &inner)
        };
        self.cache.insert(fr.to_vec(), val.clone());
        Ok(val)
    }
}

/// `G^lambda` by the divided-difference recursion (default order).
pub fn groth_inductive(
    k: usize,
    n: usize,
    lambda: &Partition,
    x: &Alphabet,
) -> Result<Polynomial, GrothError> {
    InductiveEvaluator::new(k, n, x.clone(), ReductionOrder::LargestFirst).eval(lambda)
}

// ---------------------------------------------------------------------------
// Dual basis via its definition
// ---------------------------------------------------------------------------

/// `G_lambda(x; y) = prod_i x_i * prod_{f in frame(lambda)} y_f^{-1} *
/// G^{lambda*}(x; y-reversed)`.
pub fn dual_groth(
    k: usize,
    n: usize,
    lambda: &Partition,
    x: &Alphabet,
    y: &Alphabet,
) -> Result<Polynomial, GrothError> {
    let fr = frame_of(lambda, k, n)?;
    let star = dual_diagram(lambda, k, n)?;
    let mut pref = Polynomial::one();
    for i in 1..=k {
        pref = pref.mul(x.entry(i));
    }
    for &f in &fr {
        pref = pref.exact_div(y.entry(f))?;
    }
    Ok(pref.mul(&groth_det(k, n, &star, x, &y.reversed())?))
}

/// The default `G^lambda` construction used across the crate (determinant;
/// no column-count guard, valid for all alphabets of monomial entries).
pub fn groth(
    k: usize,
    n: usize,
    lambda: &Partition,
    x: &Alphabet,
    y: &Alphabet,
) -> Result<Polynomial, GrothError> {
    groth_det(k, n, lambda, x, y)
}

// ---------------------------------------------------------------------------
// Numeric evaluation (exact rationals) for the oracle's linear algebra
// ---------------------------------------------------------------------------

fn det_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let sz = m.len();
    let mut det = BigRational::one();
    for col in 0..sz {
        let piv = (col..sz).find(|&r| !m[r][col].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => return BigRational::zero(),
        };
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        det *= m[col][col].clone();
        let inv = m[col][col].clone().recip();
        for r in col + 1..sz {
            let f = m[r][col].clone() * inv.clone();
            if f.is_zero() {
                continue;
            }
            for cc in col..sz {
                let sub = f.clone() * m[col][cc].clone();
                m[r][cc] -= sub;
            }
        }
    }
    det
}

/// `G^lambda(x; y)` at an exact rational point (`x`, `y` are 0-indexed
/// slices of length `k` and `n`).  Requires pairwise distinct `x`.
pub fn groth_eval(
    k: usize,
    n: usize,
    lambda: &Partition,
    x: &[BigRational],
    y: &[BigRational],
) -> Result<BigRational, YoungError> {
    let fr = frame_of(lambda, k, n)?;
    let mut mat = vec![vec![BigRational::zero(); k]; k];
    for i in 1..=k {
        for j in 1..=k {
            let mut e = num::pow::pow(x[j - 1].clone(), k - i);
            for m in 1..fr[i - 1] {
                e *= BigRational::one() - x[j - 1].clone() / y[m - 1].clone();
            }
            mat[i - 1][j - 1] = e;
        }
    }
    let mut den = BigRational::one();
    for i in 1..=k {
        for j in i + 1..=k {
            den *= x[i - 1].clone() - x[j - 1].clone();
        }
    }
    Ok(det_rational(mat) / den)
}

/// `G_lambda(x; y)` at an exact rational point, by the dual determinant.
pub fn dual_groth_eval(
    k: usize,
    n: usize,
    lambda: &Partition,
    x: &[BigRational],
    y: &[BigRational],
) -> Result<BigRational, YoungError> {
    let fr = frame_of(lambda, k, n)?;
    let mut pref = BigRational::one();
    for i in 1..=k {
        pref *= x[i - 1].clone() / y[fr[i - 1] - 1].clone();
    }
    let mut mat = vec![vec![BigRational::zero(); k]; k];
    for i in 1..=k {
        for j in 1..=k {
            let mut e = num::pow::pow(x[j - 1].clone(), i - 1);
            for m in fr[i - 1] + 1..=n {
                e *= BigRational::one() - x[j - 1].clone() / y[m - 1].clone();
            }
            mat[i - 1][j - 1] = e;
        }
    }
    let mut den = BigRational::one();
    for i in 1..=k {
        for j in i + 1..=k {
            den *= x[j - 1].clone() - x[i - 1].clone();
        }
    }
    Ok(pref * det_rational(mat) / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn sym(k: usize, n: usize) -> (Alphabet, Alphabet) {
        (Alphabet::symbolic(Family::X, k), Alphabet::symbolic(Family::Y, n))
    }

    #[test]
    fn constructions_agree_symbolically() {
        let (x, y) = sym(2, 4);
        for lam in crate::young::partitions_in_box(2, 2) {
            let a = groth_lattice(2, 4, &lam, &x, &y).unwrap();
            let b = groth_det(2, 4, &lam, &x, &y).unwrap();
            let c = groth_inductive(2, 4, &lam, &x).unwrap();
            assert_eq!(a, b, "lattice vs det for {lam}");
            assert_eq!(b, c, "det vs inductive for {lam}");
        }
    }

    #[test]
    fn dual_constructions_agree() {
        let (x, y) = sym(2, 4);
        for lam in crate::young::partitions_in_box(2, 2) {
            let a = dual_groth(2, 4, &lam, &x, &y).unwrap();
            let b = dual_groth_det(2, 4, &lam, &x, &y).unwrap();
            let c = dual_groth_lattice(2, 4, &lam, &x, &y).unwrap();
            assert_eq!(a, b, "definition vs det for {lam}");
            assert_eq!(b, c, "det vs lattice for {lam}");
        }
    }

    #[test]
    fn nonequivariant_closed_forms() {
        // G^{(1)}(x; 1) = 1 - x1 x2; G^{(2)}(x; 1) = 1 + (-(k+1) + x1 + x2) x1 x2
        let x = Alphabet::symbolic(Family::X, 2);
        let ones = Alphabet::ones(4);
        let x1x2 = x.entry(1).mul(x.entry(2));
        let g1 = groth_det(2, 4, &p(&[1]), &x, &ones).unwrap();
        assert_eq!(g1, Polynomial::one().sub(&x1x2));
        let g2 = groth_det(2, 4, &p(&[2]), &x, &ones).unwrap();
        let inner = Polynomial::int(-3).add(x.entry(1)).add(x.entry(2));
        assert_eq!(g2, Polynomial::one().add(&inner.mul(&x1x2)));
    }

    #[test]
    fn rank_one_product_form() {
        // k=1: G^{(p)}(x1; y) = prod_{m=1}^p (1 - x1/y_m)
        let x = Alphabet::symbolic(Family::X, 1);
        let y = Alphabet::symbolic(Family::Y, 4);
        for pp in 0..=3u32 {
            let lam = if pp == 0 { Partition::empty() } else { p(&[pp]) };
            let got = groth_det(1, 4, &lam, &x, &y).unwrap();
            let mut expect = Polynomial::one();
            for m in 1..=pp {
                expect = expect.mul(&one_minus_ratio(x.entry(1), y.entry(m as usize)).unwrap());
            }
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn dual_empty_rank_one() {
        // G_empty(x1; y) for n=2 is (x1/y1)(1 - x1/y2)
        let x = Alphabet::symbolic(Family::X, 1);
        let y = Alphabet::symbolic(Family::Y, 2);
        let got = dual_groth(1, 2, &Partition::empty(), &x, &y).unwrap();
        let expect = x
            .entry(1)
            .exact_div(y.entry(1))
            .unwrap()
            .mul(&one_minus_ratio(x.entry(1), y.entry(2)).unwrap());
        assert_eq!(got, expect);
    }

    #[test]
    fn inductive_path_independence() {
        let x = Alphabet::symbolic(Family::X, 2);
        for lam in crate::young::partitions_in_box(2, 3) {
            let a = InductiveEvaluator::new(2, 5, x.clone(), ReductionOrder::LargestFirst)
                .eval(&lam)
                .unwrap();
            let b = InductiveEvaluator::new(2, 5, x.clone(), ReductionOrder::SmallestFirst)
                .eval(&lam)
                .unwrap();
            assert_eq!(a, b, "reduction orders disagree for {lam}");
        }
    }

    #[test]
    fn numeric_evaluators_match_symbolic() {
        let (x, y) = sym(2, 4);
        let xq: Vec<BigRational> =
            ["23/12", "25/13"].iter().map(|s| parse_rational(s).unwrap()).collect();
        let yq: Vec<BigRational> = ["3/2", "5/3", "7/4", "9/5"]
            .iter()
            .map(|s| parse_rational(s).unwrap())
            .collect();
        let at = |v: Variable| -> BigRational {
            match v.family {
                Family::X => xq[(v.index - 1) as usize].clone(),
                Family::Y => yq[(v.index - 1) as usize].clone(),
                _ => unreachable!(),
            }
        };
        for lam in crate::young::partitions_in_box(2, 2) {
            let sym_g = groth_det(2, 4, &lam, &x, &y).unwrap();
            let sym_d = dual_groth(2, 4, &lam, &x, &y).unwrap();
            assert_eq!(sym_g.eval(&at).unwrap(), groth_eval(2, 4, &lam, &xq, &yq).unwrap());
            assert_eq!(
                sym_d.eval(&at).unwrap(),
                dual_groth_eval(2, 4, &lam, &xq, &yq).unwrap()
            );
        }
    }

    #[test]
    fn lattice_guard() {
        let (x, y) = (Alphabet::symbolic(Family::X, 1), Alphabet::symbolic(Family::Y, 17));
        let err = groth_lattice(1, 17, &Partition::empty(), &x, &y);
        assert!(matches!(err, Err(GrothError::StateSpaceTooLarge(17))));
    }
}
