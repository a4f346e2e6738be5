//! Puzzle-free expansion coefficients by exact linear algebra.
//!
//! The oracle never looks at a puzzle: it expands a product of Grothendieck
//! polynomials over the basis `{G^nu}` (or the dual basis `{G_nu}`) by
//! evaluating everything exactly at rational points and solving a linear
//! system.  Two samplers are provided:
//!
//! * [`FixedPointBasis`] evaluates at the fixed points `x = y_S` (one per
//!   `k`-subset `S` of the `y`-alphabet).  Restriction to fixed points is
//!   *triangular* — `G^nu(y_S; y)` vanishes unless `nu` fits inside the
//!   diagram of `S` — so the solve is a substitution sweep, cheap enough to
//!   run at the stability bound where puzzle and ring coefficients agree.
//! * [`expand_in_basis`] evaluates at random rational `x`-points (a
//!   Schwartz–Zippel-style sampler with a fixed seed), solves by exact
//!   Gaussian elimination, and confirms the solution on extra points.
//!
//! All arithmetic is exact (`BigRational`); randomized checks are
//! screening, reproducible from the seed, with errors distinguishing a
//! singular sample ([`OracleError::SingularSystem`], re-draw) from an
//! expansion that genuinely does not close
//! ([`OracleError::NonzeroResidual`], the `n` in play is too small).

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{AlgebraError, Family, RationalFunction, Variable};
use crate::coeffs::{expansion, stability_bound, CoeffsError, Rule};
use crate::grothendieck::{dual_groth_eval, groth_eval};
use crate::young::{diagram_of_frame, partitions_in_box, Partition, YoungError};

/// Fixed default seed: all randomized screening in the crate is
/// reproducible from it.
pub const DEFAULT_SEED: u64 = 20250825;

#[derive(Debug, Error)]
pub enum OracleError {
    /// The sampled evaluation matrix was singular; re-draw points.
    #[error("singular evaluation system")]
    SingularSystem,
    /// The candidate expansion does not reproduce the product — the
    /// expansion does not close over the chosen basis (n too small).
    #[error("nonzero residual: the expansion does not close over the basis")]
    NonzeroResidual,
    #[error(transparent)]
    Young(#[from] YoungError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Coeffs(#[from] CoeffsError),
}

/// Draws exact rational evaluation points with numerator and denominator
/// in `[1, 97]`, optionally distinct, never zero.
pub struct PointGen {
    rng: ChaCha8Rng,
}

impl PointGen {
    pub fn new(seed: u64) -> Self {
        PointGen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rational(&mut self) -> BigRational {
        let num = self.rng.gen_range(1..=97i64);
        let den = self.rng.gen_range(1..=97i64);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// `count` pairwise distinct rationals avoiding `exclude`.
    pub fn distinct(&mut self, count: usize, exclude: &[BigRational]) -> Vec<BigRational> {
        let mut out: Vec<BigRational> = Vec::with_capacity(count);
        while out.len() < count {
            let q = self.rational();
            if !out.contains(&q) && !exclude.contains(&q) {
                out.push(q);
            }
        }
        out
    }
}

/// The fixed point indexed by the `k`-subset `S` (1-based): `x = y_S`.
pub fn fixed_point(subset: &[usize], y: &[BigRational]) -> Vec<BigRational> {
    subset.iter().map(|&s| y[s - 1].clone()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Triangular {
    Lower,
    Upper,
}

/// Exact expansion over the full box basis by evaluation at the torus
/// fixed points of `Gr(k,n)`, for a fixed numeric `y`-alphabet.
///
/// Rows are indexed by `k`-subsets `S` paired with their diagrams and
/// sorted by diagram size; in that order the evaluation matrix is lower
/// triangular for the basis `{G^nu}` and upper triangular for the dual
/// basis `{G_nu}`, with nonzero diagonal — both facts are checked, so a
/// successful construction certifies the basis is independent.
pub struct FixedPointBasis {
    pub k: usize,
    pub n: usize,
    pub y: Vec<BigRational>,
    pub dual_basis: bool,
    pub basis: Vec<Partition>,
    pub subsets: Vec<Vec<usize>>,
    matrix: Vec<Vec<BigRational>>,
    shape: Triangular,
}

fn k_subsets_asc(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::coeffs::k_subsets(n, k)
}

impl FixedPointBasis {
    pub fn new(
        k: usize,
        n: usize,
        y: Vec<BigRational>,
        dual_basis: bool,
    ) -> Result<Self, OracleError> {
        assert_eq!(y.len(), n, "need one y value per column");
        let mut pairs: Vec<(Partition, Vec<usize>)> = k_subsets_asc(n, k)
            .into_iter()
            .map(|s| Ok((diagram_of_frame(&s, k, n)?, s)))
            .collect::<Result<_, YoungError>>()?;
        pairs.sort_by_key(|(d, _)| (d.size(), d.clone()));
        let basis: Vec<Partition> = pairs.iter().map(|(d, _)| d.clone()).collect();
        let subsets: Vec<Vec<usize>> = pairs.into_iter().map(|(_, s)| s).collect();
        let m = basis.len();
        let mut matrix = vec![vec![BigRational::zero(); m]; m];
        for (i, s) in subsets.iter().enumerate() {
            let pt = fixed_point(s, &y);
            for (j, nu) in basis.iter().enumerate() {
                matrix[i][j] = if dual_basis {
                    dual_groth_eval(k, n, nu, &pt, &y)?
                } else {
                    groth_eval(k, n, nu, &pt, &y)?
                };
            }
        }
        let shape = if dual_basis { Triangular::Upper } else { Triangular::Lower };
        for i in 0..m {
            if matrix[i][i].is_zero() {
                return Err(OracleError::SingularSystem);
            }
            let bad = match shape {
                Triangular::Lower => (i + 1..m).any(|j| !matrix[i][j].is_zero()),
                Triangular::Upper => (0..i).any(|j| !matrix[i][j].is_zero()),
            };
            if bad {
                return Err(OracleError::SingularSystem);
            }
        }
        Ok(FixedPointBasis { k, n, y, dual_basis, basis, subsets, matrix, shape })
    }

    /// The fixed points, in row order.
    pub fn points(&self) -> Vec<Vec<BigRational>> {
        self.subsets.iter().map(|s| fixed_point(s, &self.y)).collect()
    }

    /// Solve for the coefficients given the product's values at the fixed
    /// points (in row order).  Returns the nonzero coefficients.
    pub fn expand(&self, rhs: &[BigRational]) -> Result<BTreeMap<Partition, BigRational>, OracleError> {
        let m = self.basis.len();
        assert_eq!(rhs.len(), m);
        let mut c = vec![BigRational::zero(); m];
        let rows: Vec<usize> = match self.shape {
            Triangular::Lower => (0..m).collect(),
            Triangular::Upper => (0..m).rev().collect(),
        };
        for &i in &rows {
            let mut acc = rhs[i].clone();
            match self.shape {
                Triangular::Lower => {
                    for j in 0..i {
                        if !self.matrix[i][j].is_zero() && !c[j].is_zero() {
                            acc -= &self.matrix[i][j] * &c[j];
                        }
                    }
                }
                Triangular::Upper => {
                    for j in i + 1..m {
                        if !self.matrix[i][j].is_zero() && !c[j].is_zero() {
                            acc -= &self.matrix[i][j] * &c[j];
                        }
                    }
                }
            }
            c[i] = acc / &self.matrix[i][i];
        }
        Ok(self
            .basis
            .iter()
            .cloned()
            .zip(c)
            .filter(|(_, ci)| !ci.is_zero())
            .collect())
    }

    /// Expand a product given as an evaluator of the `x`-alphabet.
    pub fn expand_product(
        &self,
        f: &dyn Fn(&[BigRational]) -> Result<BigRational, OracleError>,
    ) -> Result<BTreeMap<Partition, BigRational>, OracleError> {
        let rhs = self
            .points()
            .iter()
            .map(|pt| f(pt))
            .collect::<Result<Vec<_>, _>>()?;
        self.expand(&rhs)
    }
}

/// Exact Gaussian elimination solve of `A c = b`; `None` when singular.
pub fn gauss_solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = a.len();
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..m {
        let piv = (col..m).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, piv);
        let inv = aug[col][col].clone();
        for v in aug[col].iter_mut() {
            *v /= &inv;
        }
        for r in 0..m {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for j in col..=m {
                    let sub = &f * &aug[col][j];
                    aug[r][j] -= sub;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[m].clone()).collect())
}

/// A product to expand and the basis to expand it in, both as exact
/// evaluators of the length-`arity` `x`-alphabet (any `y` parameters are
/// fixed inside the closures).
pub struct ExpansionProblem<'a> {
    pub arity: usize,
    pub basis: Vec<(Partition, Box<dyn Fn(&[BigRational]) -> Result<BigRational, OracleError> + 'a>)>,
    pub product: Box<dyn Fn(&[BigRational]) -> Result<BigRational, OracleError> + 'a>,
}

/// Expand the product over the basis by sampling random `x`-points: solve
/// a square system, then confirm the candidate on `extra` fresh points
/// (any mismatch is [`OracleError::NonzeroResidual`]).  Singular samples
/// are re-drawn up to `tries` times.
pub fn expand_in_basis(
    problem: &ExpansionProblem,
    seed: u64,
    tries: usize,
) -> Result<BTreeMap<Partition, BigRational>, OracleError> {
    let m = problem.basis.len();
    let mut gen = PointGen::new(seed);
    let mut last = OracleError::SingularSystem;
    for _ in 0..tries {
        let pts: Vec<Vec<BigRational>> =
            (0..m).map(|_| gen.distinct(problem.arity, &[])).collect();
        let mut a = vec![vec![BigRational::zero(); m]; m];
        let mut b = vec![BigRational::zero(); m];
        for (i, pt) in pts.iter().enumerate() {
            for (j, (_, f)) in problem.basis.iter().enumerate() {
                a[i][j] = f(pt)?;
            }
            b[i] = (problem.product)(pt)?;
        }
        let c = match gauss_solve(&a, &b) {
            Some(c) => c,
            None => {
                last = OracleError::SingularSystem;
                continue;
            }
        };
        let mut ok = true;
        for _ in 0..2 {
            let pt = gen.distinct(problem.arity, &[]);
            let mut lhs = BigRational::zero();
            for (ci, (_, f)) in c.iter().zip(&problem.basis) {
                lhs += ci * &f(&pt)?;
            }
            if lhs != (problem.product)(&pt)? {
                ok = false;
                break;
            }
        }
        if !ok {
            last = OracleError::NonzeroResidual;
            continue;
        }
        return Ok(problem
            .basis
            .iter()
            .map(|(nu, _)| nu.clone())
            .zip(c)
            .filter(|(_, ci)| !ci.is_zero())
            .collect());
    }
    Err(last)
}

/// Evaluate both sides at `trials` random points (all variables drawn
/// distinct and nonzero) and compare exactly.  `false` means a mismatch
/// was found; `true` means the identity passed screening.
pub fn verify_identity_randomized(
    lhs: &RationalFunction,
    rhs: &RationalFunction,
    trials: usize,
    seed: u64,
) -> Result<bool, OracleError> {
    let mut vars: Vec<Variable> = Vec::new();
    for p in [lhs.numerator(), lhs.denominator(), rhs.numerator(), rhs.denominator()] {
        for v in p.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
    }
    let mut gen = PointGen::new(seed);
    let mut trial = 0;
    let mut redraws = 0;
    while trial < trials {
        let vals = gen.distinct(vars.len(), &[]);
        let assign: BTreeMap<Variable, BigRational> =
            vars.iter().cloned().zip(vals).collect();
        let point = |v: Variable| assign.get(&v).cloned().unwrap_or_else(BigRational::one);
        match (lhs.eval(&point), rhs.eval(&point)) {
            (Ok(a), Ok(b)) => {
                if a != b {
                    return Ok(false);
                }
                trial += 1;
            }
            _ => {
                redraws += 1;
                if redraws > 50 {
                    return Err(OracleError::Algebra(AlgebraError::DenominatorVanishes));
                }
            }
        }
    }
    Ok(true)
}

/// Whether an exact rational is an integer (expansion coefficients of the
/// non-equivariant rules must be).
pub fn is_integer(q: &BigRational) -> bool {
    q.denom().abs() == BigInt::one()
}

// ---------------------------------------------------------------------------
// Puzzle-vs-oracle cross-checks
// ---------------------------------------------------------------------------

/// Evaluate a coefficient's rational function at numeric `y`/`z` alphabets
/// (1-based variable indices index into the slices).
fn eval_coefficient(
    rf: &RationalFunction,
    y: &[BigRational],
    z: &[BigRational],
) -> Result<BigRational, OracleError> {
    let point = |v: Variable| match v.family {
        Family::Y => y[(v.index - 1) as usize].clone(),
        Family::Z => z[(v.index - 1) as usize].clone(),
        _ => BigRational::one(),
    };
    Ok(rf.eval(&point)?)
}

fn alphabet_values(n: usize, seed: u64) -> Vec<BigRational> {
    PointGen::new(seed).distinct(n, &[])
}

/// Compare a puzzle expansion (evaluated at the numeric alphabets) against
/// solved coefficients, over *every* diagram in the `k x (n-k)` box — the
/// zero coefficients are part of the claim.
fn expansions_agree(
    terms: &[(Partition, RationalFunction)],
    solved: &BTreeMap<Partition, BigRational>,
    k: usize,
    n: usize,
    y: &[BigRational],
    z: &[BigRational],
) -> Result<bool, OracleError> {
    for nu in partitions_in_box(k, (n - k) as u32) {
        let have = match terms.iter().find(|(p, _)| *p == nu) {
            Some((_, rf)) => eval_coefficient(rf, y, z)?,
            None => BigRational::zero(),
        };
        let want = solved.get(&nu).cloned().unwrap_or_else(BigRational::zero);
        if have != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `T2`/`T2'`: triangular fixed-point solve.  Restriction to fixed points
/// is an isomorphism onto functions-on-fixed-points (over the fraction
/// field), so pointwise products expand exactly at *every* `n` and the
/// comparison needs no stable-range assumption.  `T2` runs at the
/// stability bound so the instance also exercises the size-independent
/// regime; the dual coefficients' unreduced puzzle sums grow exponentially
/// with `n` (a restriction to a point is a product of `O(k(n-k))` binomial
/// factors), so `T2'` runs at the small mirror size `k + w(lam) + w(mu)`.
fn cross_equivariant(
    rule: Rule,
    k: usize,
    lam: &Partition,
    mu: &Partition,
    seed: u64,
) -> Result<bool, OracleError> {
    let n = match rule {
        Rule::T2d => k + ((lam.width() + mu.width()) as usize).max(1),
        _ => stability_bound(k, lam, mu).max(k + 1),
    };
    cross_equivariant_at(rule, k, n, lam, mu, seed)
}

fn cross_equivariant_at(
    rule: Rule,
    k: usize,
    n: usize,
    lam: &Partition,
    mu: &Partition,
    seed: u64,
) -> Result<bool, OracleError> {
    let y = alphabet_values(n, seed ^ n as u64);
    let dual = rule == Rule::T2d;
    let ctx = FixedPointBasis::new(k, n, y.clone(), dual)?;
    let solved = ctx.expand_product(&|pt| {
        Ok(if dual {
            dual_groth_eval(k, n, lam, pt, &y)? * dual_groth_eval(k, n, mu, pt, &y)?
        } else {
            groth_eval(k, n, lam, pt, &y)? * groth_eval(k, n, mu, pt, &y)?
        })
    })?;
    let terms = expansion(rule, k, n, lam, mu)?;
    expansions_agree(&terms, &solved, k, n, &y, &y)
}

/// `T1`: random-point solve of the `y = 1` product over the stable basis
/// restricted to widths `<= w(lam) + w(mu)` (full-width bases are
/// dependent as functions of `x` alone).
fn cross_stable_t1(
    k: usize,
    lam: &Partition,
    mu: &Partition,
    seed: u64,
) -> Result<bool, OracleError> {
    let wmax = ((lam.width() + mu.width()) as usize).max(1);
    let n = k + wmax;
    let ones = vec![BigRational::one(); n];
    let basis = partitions_in_box(k, wmax as u32)
        .into_iter()
        .map(|nu| {
            let (nu2, y2) = (nu.clone(), ones.clone());
            let f: Box<dyn Fn(&[BigRational]) -> Result<BigRational, OracleError>> =
                Box::new(move |pt: &[BigRational]| Ok(groth_eval(k, n, &nu2, pt, &y2)?));
            (nu, f)
        })
        .collect();
    let (l2, m2, y2) = (lam.clone(), mu.clone(), ones.clone());
    let problem = ExpansionProblem {
        arity: k,
        basis,
        product: Box::new(move |pt: &[BigRational]| {
            Ok(groth_eval(k, n, &l2, pt, &y2)? * groth_eval(k, n, &m2, pt, &y2)?)
        }),
    };
    let solved = expand_in_basis(&problem, seed, 6)?;
    let terms = expansion(Rule::T1, k, n, lam, mu)?;
    expansions_agree(&terms, &solved, k, n, &ones, &ones)
}

/// `T1'`: the dual-basis product has no independent solve at `y = 1` (the
/// function-level identity needs a co-stable window no small `n` reaches),
/// so the check composes two verified facts: the `T2'` fixed-point
/// cross-check, and the specialization of the `T2'` coefficients at
/// `y = 1` to the signed counts.
fn cross_dual_nonequivariant(
    k: usize,
    lam: &Partition,
    mu: &Partition,
    seed: u64,
) -> Result<bool, OracleError> {
    if !cross_equivariant(Rule::T2d, k, lam, mu, seed)? {
        return Ok(false);
    }
    let n = k + ((lam.width() + mu.width()) as usize).max(1);
    let ones = vec![BigRational::one(); n];
    let a = expansion(Rule::T2d, k, n, lam, mu)?;
    let b = expansion(Rule::T1d, k, n, lam, mu)?;
    for nu in partitions_in_box(k, (n - k) as u32) {
        let specialized = match a.iter().find(|(p, _)| *p == nu) {
            Some((_, rf)) => eval_coefficient(rf, &ones, &ones)?,
            None => BigRational::zero(),
        };
        let signed = match b.iter().find(|(p, _)| *p == nu) {
            Some((_, rf)) => eval_coefficient(rf, &ones, &ones)?,
            None => BigRational::zero(),
        };
        if specialized != signed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `T3`/`T3'`: the target basis carries the reversed alphabet, so the
/// fixed-point matrix is dense; solve by Gaussian elimination at a small
/// `n` (the ring-level identity is exact at every size).
fn cross_reversed(
    rule: Rule,
    k: usize,
    lam: &Partition,
    mu: &Partition,
    seed: u64,
) -> Result<bool, OracleError> {
    let wmax = ((lam.width() + mu.width()) as usize).max(1);
    let n = k + wmax;
    let dual = rule == Rule::T3d;
    for attempt in 0..4u64 {
        let y = alphabet_values(n, seed ^ (0xb00 + attempt));
        let yr: Vec<BigRational> = y.iter().rev().cloned().collect();
        let shapes = partitions_in_box(k, (n - k) as u32);
        let subs = crate::coeffs::k_subsets(n, k);
        let mut a = vec![vec![BigRational::zero(); shapes.len()]; subs.len()];
        let mut b = vec![BigRational::zero(); subs.len()];
        for (i, s) in subs.iter().enumerate() {
            let pt = fixed_point(s, &y);
            for (j, nu) in shapes.iter().enumerate() {
                a[i][j] = if dual {
                    dual_groth_eval(k, n, nu, &pt, &yr)?
                } else {
                    groth_eval(k, n, nu, &pt, &yr)?
                };
            }
            b[i] = if dual {
                dual_groth_eval(k, n, lam, &pt, &y)? * dual_groth_eval(k, n, mu, &pt, &yr)?
            } else {
                groth_eval(k, n, lam, &pt, &y)? * groth_eval(k, n, mu, &pt, &yr)?
            };
        }
        let c = match gauss_solve(&a, &b) {
            Some(c) => c,
            None => continue,
        };
        let solved: BTreeMap<Partition, BigRational> = shapes
            .into_iter()
            .zip(c)
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let terms = expansion(rule, k, n, lam, mu)?;
        return expansions_agree(&terms, &solved, k, n, &y, &y);
    }
    Err(OracleError::SingularSystem)
}

/// `T2''`/`T3''`: the two-alphabet identity is between *functions* and is
/// exact only in the co-stable window `w(lam*) + w(mu*) <= n - k - 1`,
/// which small inputs miss at every admissible `n`.  Shifting all three
/// diagrams by a full column block `s^k` moves the instance into the
/// window at `n + s`, so the check always solves there (with a residual
/// confirmation at fresh points, since fixed points alone cannot certify a
/// function identity) and compares the whole shifted expansion.  The
/// original pair is then tied in by whichever relation it satisfies:
/// column shifts act on a full-height first input by a pure alphabet-index
/// shift, so for `h(lam) = k` the original coefficients are the shifted
/// ones re-indexed; a height-deficient first input lies outside every
/// window (its instance is a quotient-ring statement with no function
/// oracle), and is instead checked through the equal-alphabet
/// specialization `z := y`, which collapses the mixed rule onto the dual
/// rule — itself cross-checked at the same size.
fn cross_mixed(
    rule: Rule,
    k: usize,
    lam: &Partition,
    mu: &Partition,
    seed: u64,
) -> Result<bool, OracleError> {
    let cols = (lam.width().max(mu.width()) as usize).max(1);
    let n = k + cols;
    let lam_k = lam.part(k) as usize;
    let mu_k = mu.part(k) as usize;
    let s = (n - k + 1).saturating_sub(lam_k + mu_k).max(1);
    let ns = n + s;
    let lam2 = lam.shift_rows(s as u32, k);
    let mu2 = mu.shift_rows(s as u32, k);
    let mut gen = PointGen::new(seed ^ 0xd1f7);
    let y = gen.distinct(ns, &[]);
    let z = gen.distinct(ns, &y);
    let ctx = FixedPointBasis::new(k, ns, y.clone(), true)?;
    let product = |pt: &[BigRational]| -> Result<BigRational, OracleError> {
        Ok(dual_groth_eval(k, ns, &lam2, pt, &z)? * dual_groth_eval(k, ns, &mu2, pt, &y)?)
    };
    let solved = ctx.expand_product(&product)?;
    for _ in 0..2 {
        let pt = gen.distinct(k, &[]);
        let mut rhs = BigRational::zero();
        for (nu, c) in &solved {
            rhs += c * &dual_groth_eval(k, ns, nu, &pt, &y)?;
        }
        if product(&pt)? != rhs {
            return Err(OracleError::NonzeroResidual);
        }
    }
    let star = expansion(rule, k, ns, &lam2, &mu2)?;
    if !expansions_agree(&star, &solved, k, ns, &y, &z)? {
        return Ok(false);
    }
    let terms = expansion(rule, k, n, lam, mu)?;
    if lam_k >= 1 {
        let (ys, zs) = (&y[s..], &z[s..]);
        for nu in partitions_in_box(k, (n - k) as u32) {
            let have = match terms.iter().find(|(p, _)| *p == nu) {
                Some((_, rf)) => eval_coefficient(rf, ys, zs)?,
                None => BigRational::zero(),
            };
            let want = solved
                .get(&nu.shift_rows(s as u32, k))
                .cloned()
                .unwrap_or_else(BigRational::zero);
            if have != want {
                return Ok(false);
            }
        }
    } else {
        if !cross_equivariant_at(Rule::T2d, k, n, lam, mu, seed)? {
            return Ok(false);
        }
        let yv = alphabet_values(n, seed ^ 0x5ca1e);
        let dual_terms = expansion(Rule::T2d, k, n, lam, mu)?;
        for nu in partitions_in_box(k, (n - k) as u32) {
            let mixed_at_yy = match terms.iter().find(|(p, _)| *p == nu) {
                Some((_, rf)) => eval_coefficient(rf, &yv, &yv)?,
                None => BigRational::zero(),
            };
            let dual_at_y = match dual_terms.iter().find(|(p, _)| *p == nu) {
                Some((_, rf)) => eval_coefficient(rf, &yv, &yv)?,
                None => BigRational::zero(),
            };
            if mixed_at_yy != dual_at_y {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Cross-check one product of the rule against an independent, puzzle-free
/// expansion of the same product, over every target diagram (zeros
/// included).  Each rule gets the strongest oracle its identity admits;
/// see the per-rule helpers for the regime each one certifies.
pub fn cross_check_pair(
    rule: Rule,
    k: usize,
    lam: &Partition,
    mu: &Partition,
    seed: u64,
) -> Result<bool, OracleError> {
    match rule {
        Rule::T1 => cross_stable_t1(k, lam, mu, seed),
        Rule::T1d => cross_dual_nonequivariant(k, lam, mu, seed),
        Rule::T2 | Rule::T2d => cross_equivariant(rule, k, lam, mu, seed),
        Rule::T3 | Rule::T3d => cross_reversed(rule, k, lam, mu, seed),
        Rule::T2dd | Rule::T3dd => cross_mixed(rule, k, lam, mu, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;
    use crate::young::partitions_in_box;

    fn yvals(n: usize, seed: u64) -> Vec<BigRational> {
        PointGen::new(seed).distinct(n, &[])
    }

    #[test]
    fn fixed_point_expansion_of_single_basis_element() {
        // expanding G^mu itself must give the delta expansion {mu: 1}
        let (k, n) = (2, 4);
        let y = yvals(n, 7);
        let ctx = FixedPointBasis::new(k, n, y.clone(), false).unwrap();
        for mu in partitions_in_box(k, (n - k) as u32) {
            let got = ctx
                .expand_product(&|pt| Ok(groth_eval(k, n, &mu, pt, &y)?))
                .unwrap();
            assert_eq!(got, BTreeMap::from([(mu.clone(), BigRational::one())]));
        }
    }

    #[test]
    fn dual_fixed_point_expansion_is_delta_too() {
        let (k, n) = (2, 4);
        let y = yvals(n, 8);
        let ctx = FixedPointBasis::new(k, n, y.clone(), true).unwrap();
        for mu in partitions_in_box(k, (n - k) as u32) {
            let got = ctx
                .expand_product(&|pt| Ok(dual_groth_eval(k, n, &mu, pt, &y)?))
                .unwrap();
            assert_eq!(got, BTreeMap::from([(mu.clone(), BigRational::one())]));
        }
    }

    #[test]
    fn product_expansion_matches_puzzle_rule() {
        // ring-level fixed-point expansion of G^lam G^mu vs the T2 puzzles
        use crate::coeffs::{coefficient, Rule};
        let (k, n) = (2, 4);
        let y = yvals(n, 9);
        let ctx = FixedPointBasis::new(k, n, y.clone(), false).unwrap();
        let (lam, mu) = (
            Partition::parse("2,1").unwrap(),
            Partition::parse("1").unwrap(),
        );
        let got = ctx
            .expand_product(&|pt| {
                Ok(groth_eval(k, n, &lam, pt, &y)? * groth_eval(k, n, &mu, pt, &y)?)
            })
            .unwrap();
        let point = |v: Variable| {
            assert_eq!(v.family, crate::algebra::Family::Y);
            y[(v.index - 1) as usize].clone()
        };
        for nu in partitions_in_box(k, (n - k) as u32) {
            let c = coefficient(Rule::T2, k, n, &lam, &mu, &nu).unwrap();
            let want = c.eval(&point).unwrap();
            let have = got.get(&nu).cloned().unwrap_or_else(BigRational::zero);
            assert_eq!(have, want, "{nu}");
        }
    }

    #[test]
    fn random_point_expansion_of_nonequivariant_square() {
        // (G^(1))^2 at y = 1 in the stable range
        let (k, wmax) = (2usize, 2u32);
        let n = k + wmax as usize;
        let ones = vec![BigRational::one(); n];
        let basis = partitions_in_box(k, wmax)
            .into_iter()
            .map(|nu| {
                let y = ones.clone();
                let nu2 = nu.clone();
                let f: Box<dyn Fn(&[BigRational]) -> Result<BigRational, OracleError>> =
                    Box::new(move |pt: &[BigRational]| Ok(groth_eval(k, n, &nu2, pt, &y)?));
                (nu, f)
            })
            .collect();
        let problem = ExpansionProblem {
            arity: k,
            basis,
            product: Box::new(move |pt| {
                let lam = Partition::parse("1").unwrap();
                let v = groth_eval(k, n, &lam, pt, &ones)?;
                Ok(&v * &v)
            }),
        };
        let got = expand_in_basis(&problem, DEFAULT_SEED, 4).unwrap();
        let want: BTreeMap<Partition, BigRational> = BTreeMap::from([
            (Partition::parse("2").unwrap(), BigRational::one()),
            (Partition::parse("1,1").unwrap(), BigRational::one()),
            (
                Partition::parse("2,1").unwrap(),
                -BigRational::one(),
            ),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn screening_accepts_equal_and_rejects_unequal() {
        let y1 = RationalFunction::var(Variable::y(1));
        let y2 = RationalFunction::var(Variable::y(2));
        let sum = y1.add(&y2).unwrap();
        assert!(verify_identity_randomized(&sum, &sum, 5, DEFAULT_SEED).unwrap());
        assert!(!verify_identity_randomized(&sum, &y1, 5, DEFAULT_SEED).unwrap());
        let p = RationalFunction::from_laurent(&Polynomial::var(Variable::y(1)));
        assert!(verify_identity_randomized(&p, &y1, 3, DEFAULT_SEED).unwrap());
    }

    #[test]
    fn gauss_solve_small() {
        let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        let a = vec![vec![q(1, 1), q(2, 1)], vec![q(3, 1), q(5, 1)]];
        let b = vec![q(1, 1), q(2, 1)];
        let c = gauss_solve(&a, &b).unwrap();
        assert_eq!(c, vec![q(-1, 1), q(1, 1)]);
        let sing = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert!(gauss_solve(&sing, &b).is_none());
    }
}
