//! Exact multivariate Laurent-polynomial and rational-function arithmetic.
//!
//! All symbolic computation in this crate runs over the ring
//! `Z[x_i^{±1}, y_j^{±1}, z_m^{±1}, t_s^{±1}]` of integer Laurent polynomials.
//! [`Polynomial`] is the primary carrier; [`RationalFunction`] wraps a
//! numerator/denominator pair for quantities that genuinely are ratios (linear
//! solves, display of coefficients such as `-y4/y2`).  Rational functions are
//! kept *unreduced*: no polynomial gcd is ever computed.  Normalisation is
//! limited to integer content and the sign of the denominator's leading
//! coefficient, and equality is decided by cross multiplication, so equal
//! values always compare equal regardless of how they were produced.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

/// Errors raised by exact arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    /// `exact_div` was asked for a quotient that does not exist in the
    /// Laurent-polynomial ring.
    #[error("polynomial division is not exact")]
    NotDivisible,
    /// A rational function was constructed with a zero denominator.
    #[error("division by the zero polynomial")]
    DivisionByZero,
    /// A substitution or evaluation made a denominator vanish.
    #[error("denominator vanishes under the requested substitution")]
    DenominatorVanishes,
}

// ---------------------------------------------------------------------------
// Variables
// ---------------------------------------------------------------------------

/// The four indexed families of symbolic variables.
///
/// `X` is the Grassmannian alphabet, `Y` and `Z` are equivariant parameter
/// alphabets, and `Generic` (printed `t`) is for free parameters such as
/// spectral variables in Yang-Baxter checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Y,
    Z,
    Generic,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
            Family::Z => 'z',
            Family::Generic => 't',
        }
    }
}

/// A single symbolic variable, e.g. `y3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub family: Family,
    pub index: u32,
}

impl Variable {
    pub fn new(family: Family, index: u32) -> Self {
        Variable { family, index }
    }
    pub fn x(index: u32) -> Self {
        Self::new(Family::X, index)
    }
    pub fn y(index: u32) -> Self {
        Self::new(Family::Y, index)
    }
    pub fn z(index: u32) -> Self {
        Self::new(Family::Z, index)
    }
    pub fn t(index: u32) -> Self {
        Self::new(Family::Generic, index)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)
    }
}

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

/// A Laurent monomial: a finite map from variables to nonzero exponents.
///
/// Monomials are totally ordered by graded lexicographic order: first by
/// total degree, then by the exponent of the smallest variable on which the
/// two monomials differ (larger exponent first wins).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeMap<Variable, i32>);

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    /// The monomial `v^e`.
    pub fn var(v: Variable, e: i32) -> Self {
        let mut m = BTreeMap::new();
        if e != 0 {
            m.insert(v, e);
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: Variable) -> i32 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.values().map(|&e| e as i64).sum()
    }

    pub fn variables(&self) -> impl Iterator<Item = (Variable, i32)> + '_ {
        self.0.iter().map(|(&v, &e)| (v, e))
    }

    /// Product of two monomials (exponents add; zero exponents are dropped).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (&v, &e) in &other.0 {
            let slot = out.entry(v).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.remove(&v);
            }
        }
        Monomial(out)
    }

    /// Laurent quotient `self / other` (always defined).
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inverse())
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|(&v, &e)| (v, -e)).collect())
    }

    /// Quotient within the ordinary polynomial ring: `None` if any exponent
    /// of `other` exceeds the matching exponent of `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        for (&v, &e) in &other.0 {
            if self.exponent(v) < e {
                return None;
            }
        }
        Some(self.div(other))
    }

    fn rename(&self, map: &dyn Fn(Variable) -> Variable) -> Monomial {
        let mut out = BTreeMap::new();
        for (&v, &e) in &self.0 {
            let slot = out.entry(map(v)).or_insert(0);
            *slot += e;
        }
        out.retain(|_, e| *e != 0);
        Monomial(out)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.0.iter().peekable();
        let mut b = other.0.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some((&va, &ea)), Some((&vb, &eb))) => {
                    if va == vb {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        a.next();
                        b.next();
                    } else if va < vb {
                        // `other` has exponent 0 on the smaller variable `va`.
                        return ea.cmp(&0);
                    } else {
                        return 0.cmp(&eb);
                    }
                }
                (Some((_, &ea)), None) => return ea.cmp(&0),
                (None, Some((_, &eb))) => return 0.cmp(&eb),
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (v, e) in self.variables() {
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// An integer Laurent polynomial: a finite sum of monomials with nonzero
/// `BigInt` coefficients, stored in canonical (graded-lex) order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial(BTreeMap<Monomial, BigInt>);

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(Monomial::one(), c);
        }
        Polynomial(m)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    /// The single variable `v` as a polynomial.
    pub fn var(v: Variable) -> Self {
        Self::term(Monomial::var(v, 1), BigInt::one())
    }

    /// The Laurent monomial `v^e` as a polynomial.
    pub fn var_pow(v: Variable, e: i32) -> Self {
        Self::term(Monomial::var(v, e), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut map = BTreeMap::new();
        if !c.is_zero() {
            map.insert(m, c);
        }
        Polynomial(map)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1
            && self
                .0
                .get(&Monomial::one())
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.0.iter()
    }

    /// Terms in descending canonical order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.0.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.0.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading (maximal) term under the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.0.iter().next_back()
    }

    fn insert_add(map: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match map.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.0.clone();
        for (m, c) in &other.0 {
            Self::insert_add(&mut out, m.clone(), c.clone());
        }
        Polynomial(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.0.clone();
        for (m, c) in &other.0 {
            Self::insert_add(&mut out, m.clone(), -c.clone());
        }
        Polynomial(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial(self.0.iter().map(|(m, c)| (m.clone(), -c.clone())).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = BTreeMap::new();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                Self::insert_add(&mut out, m1.mul(m2), c1 * c2);
            }
        }
        Polynomial(out)
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial(
            self.0
                .iter()
                .map(|(m0, c0)| (m0.mul(m), c0 * c))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Gcd of all integer coefficients (zero polynomial has content 0).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.0.values() {
            g = g.gcd(c);
        }
        g
    }

    fn divide_content(&self, g: &BigInt) -> Polynomial {
        Polynomial(self.0.iter().map(|(m, c)| (m.clone(), c / g)).collect())
    }

    /// Per-variable minimum exponents (negative entries only); exponents
    /// that never go below zero are omitted.
    fn negative_shifts(&self) -> Monomial {
        let mut mins: BTreeMap<Variable, i32> = BTreeMap::new();
        for m in self.0.keys() {
            for (v, e) in m.variables() {
                let slot = mins.entry(v).or_insert(0);
                if e < *slot {
                    *slot = e;
                }
            }
        }
        mins.retain(|_, e| *e < 0);
        Monomial(mins)
    }

    /// True per-variable minimum exponents over all monomials (any sign).
    fn min_exponents(&self) -> Monomial {
        let mut mins: BTreeMap<Variable, Option<i32>> = BTreeMap::new();
        for m in self.0.keys() {
            for v in m.variables().map(|(v, _)| v) {
                mins.entry(v).or_insert(None);
            }
        }
        for m in self.0.keys() {
            for (v, slot) in mins.iter_mut() {
                let e = m.exponent(*v);
                *slot = Some(slot.map_or(e, |s| s.min(e)));
            }
        }
        Monomial(
            mins.into_iter()
                .filter_map(|(v, e)| e.filter(|&e| e != 0).map(|e| (v, e)))
                .collect(),
        )
    }

    /// Exact division in the Laurent-polynomial ring.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial, AlgebraError> {
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        // Shift numerator and divisor so every variable has minimum exponent
        // zero; the Laurent quotient exists iff the shifted polynomial
        // quotient does, because minimum v-degrees are additive on products.
        let sn = self.min_exponents().inverse();
        let sd = divisor.min_exponents().inverse();
        let num = self.mul_term(&sn, &BigInt::one());
        let den = divisor.mul_term(&sd, &BigInt::one());
        let mut rem = num;
        let mut quo: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        let (dm, dc) = {
            let (m, c) = den.leading_term().expect("nonzero divisor");
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading_term().expect("nonzero remainder");
                (m.clone(), c.clone())
            };
            let qm = rm.checked_div(&dm).ok_or(AlgebraError::NotDivisible)?;
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Err(AlgebraError::NotDivisible);
            }
            Self::insert_add(&mut quo, qm.clone(), qc.clone());
            rem = rem.sub(&den.mul_term(&qm, &qc));
        }
        // Undo the shifts: self/divisor = (num/den) * sd / sn.
        Ok(Polynomial(quo).mul_term(&sd.div(&sn), &BigInt::one()))
    }

    /// Apply a variable renaming to every monomial.
    pub fn rename_variables(&self, map: &dyn Fn(Variable) -> Variable) -> Polynomial {
        let mut out = BTreeMap::new();
        for (m, c) in &self.0 {
            Self::insert_add(&mut out, m.rename(map), c.clone());
        }
        Polynomial(out)
    }

    /// Swap two variables everywhere.
    pub fn swap_variables(&self, a: Variable, b: Variable) -> Polynomial {
        self.rename_variables(&move |v| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        })
    }

    /// Set every variable of `family` to 1 (valid for Laurent exponents).
    pub fn set_family_to_one(&self, family: Family) -> Polynomial {
        let mut out = BTreeMap::new();
        for (m, c) in &self.0 {
            let filtered =
                Monomial(m.0.iter().filter(|(v, _)| v.family != family).map(|(&v, &e)| (v, e)).collect());
            Self::insert_add(&mut out, filtered, c.clone());
        }
        Polynomial(out)
    }

    /// The set of variables that actually occur.
    pub fn variables(&self) -> Vec<Variable> {
        let mut vs: Vec<Variable> = Vec::new();
        for m in self.0.keys() {
            for (v, _) in m.variables() {
                if !vs.contains(&v) {
                    vs.push(v);
                }
            }
        }
        vs.sort();
        vs
    }

    /// Evaluate at a rational point.  Fails on `0^negative`.
    pub fn eval(&self, point: &dyn Fn(Variable) -> BigRational) -> Result<BigRational, AlgebraError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.0 {
            let mut v = BigRational::from(c.clone());
            for (var, e) in m.variables() {
                let base = point(var);
                if base.is_zero() {
                    if e < 0 {
                        return Err(AlgebraError::DenominatorVanishes);
                    }
                    v = BigRational::zero();
                    break;
                }
                let p = num::pow::pow(base.clone(), e.unsigned_abs() as usize);
                if e >= 0 {
                    v *= p;
                } else {
                    v /= p;
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitute a rational function for one variable.
    pub fn substitute(
        &self,
        var: Variable,
        value: &RationalFunction,
    ) -> Result<RationalFunction, AlgebraError> {
        if value.den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut emin = i32::MAX;
        let mut emax = i32::MIN;
        for m in self.0.keys() {
            let e = m.exponent(var);
            emin = emin.min(e);
            emax = emax.max(e);
        }
        if self.is_zero() || (emin == 0 && emax == 0) {
            return Ok(RationalFunction::from_poly(self.clone()));
        }
        if value.num.is_zero() && emin < 0 {
            return Err(AlgebraError::DenominatorVanishes);
        }
        // self = sum c * m' * var^e; multiply through by den^(emax-emin) and
        // var^{-emin} to clear both kinds of denominator.
        let mut num = Polynomial::zero();
        for (m, c) in &self.0 {
            let e = m.exponent(var);
            let stripped = Monomial(
                m.0.iter().filter(|(v, _)| **v != var).map(|(&v, &x)| (v, x)).collect(),
            );
            let part = value
                .num
                .pow((e - emin) as u32)
                .mul(&value.den.pow((emax - e) as u32))
                .mul_term(&stripped, c);
            num = num.add(&part);
        }
        let den = value.den.pow((emax - emin) as u32);
        let base = RationalFunction::new(num, den)?;
        // Restore the var^{emin} factor as value^{emin}.
        Ok(base.mul(&value.pow_i32(emin)?)?)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}{m}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

/// An unreduced ratio of Laurent polynomials.
///
/// Invariants: the denominator is nonzero, the integer content of the pair is
/// 1, and the denominator's leading coefficient is positive.  No polynomial
/// gcd is removed; equality is decided by cross multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut rf = RationalFunction { num, den };
        rf.normalize();
        Ok(rf)
    }

    /// A polynomial, viewed as a rational function with denominator 1.
    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    /// A Laurent polynomial rewritten with a monomial denominator so that the
    /// numerator has no negative exponents (`-y2^-1y4` becomes `-y4/y2`).
    pub fn from_laurent(p: &Polynomial) -> Self {
        let shift = p.negative_shifts().inverse();
        RationalFunction {
            num: p.mul_term(&shift, &BigInt::one()),
            den: Polynomial::term(shift, BigInt::one()),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::from_poly(Polynomial::int(c))
    }

    pub fn var(v: Variable) -> Self {
        Self::from_poly(Polynomial::var(v))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        RationalFunction {
            num: Polynomial::constant(q.numer().clone()),
            den: Polynomial::constant(q.denom().clone()),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// If the denominator is the constant 1, the underlying polynomial.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Exact conversion to a Laurent polynomial, when the denominator divides
    /// the numerator (it always does for the puzzle-weight sums in this
    /// crate, whose denominators are monomials).
    pub fn to_laurent(&self) -> Result<Polynomial, AlgebraError> {
        self.num.exact_div(&self.den)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Polynomial::one();
            return;
        }
        let g = self.num.content().gcd(&self.den.content());
        if !g.is_one() {
            self.num = self.num.divide_content(&g);
            self.den = self.den.divide_content(&g);
        }
        if self
            .den
            .leading_term()
            .is_some_and(|(_, c)| c.is_negative())
        {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow_i32(&self, e: i32) -> Result<Self, AlgebraError> {
        if e >= 0 {
            Self::new(self.num.pow(e as u32), self.den.pow(e as u32))
        } else {
            self.inverse()?.pow_i32(-e)
        }
    }

    pub fn eval(&self, point: &dyn Fn(Variable) -> BigRational) -> Result<BigRational, AlgebraError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(AlgebraError::DenominatorVanishes);
        }
        Ok(self.num.eval(point)? / d)
    }

    pub fn substitute(
        &self,
        var: Variable,
        value: &RationalFunction,
    ) -> Result<RationalFunction, AlgebraError> {
        let n = self.num.substitute(var, value)?;
        let d = self.den.substitute(var, value)?;
        if d.is_zero() {
            return Err(AlgebraError::DenominatorVanishes);
        }
        n.div(&d)
    }
}

impl PartialEq for RationalFunction {
    /// Equality by cross multiplication; independent of representation.
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RationalFunction {}

fn den_needs_parens(p: &Polynomial) -> bool {
    if p.num_terms() != 1 {
        return true;
    }
    let (m, c) = p.leading_term().expect("nonempty");
    let factors = m.variables().count() + usize::from(!c.is_one());
    factors > 1
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/")?;
        if den_needs_parens(&self.den) {
            write!(f, "({})", self.den)
        } else {
            write!(f, "{}", self.den)
        }
    }
}

// ---------------------------------------------------------------------------
// Determinants and divided differences
// ---------------------------------------------------------------------------

/// Fraction-free (Bareiss) determinant of a square matrix of Laurent
/// polynomials.  All intermediate divisions are exact.
pub fn determinant(matrix: &[Vec<Polynomial>]) -> Polynomial {
    let n = matrix.len();
    for row in matrix {
        assert_eq!(row.len(), n, "determinant requires a square matrix");
    }
    if n == 0 {
        return Polynomial::one();
    }
    let mut m: Vec<Vec<Polynomial>> = matrix.to_vec();
    let mut sign = false;
    let mut prev = Polynomial::one();
    for p in 0..n {
        if m[p][p].is_zero() {
            let swap = (p + 1..n).find(|&r| !m[r][p].is_zero());
            match swap {
                Some(r) => {
                    m.swap(p, r);
                    sign = !sign;
                }
                None => return Polynomial::zero(),
            }
        }
        for r in p + 1..n {
            for c in p + 1..n {
                let t = m[r][c].mul(&m[p][p]).sub(&m[r][p].mul(&m[p][c]));
                m[r][c] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[r][p] = Polynomial::zero();
        }
        prev = m[p][p].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// The divided-difference (Demazure) operator on the `Y` alphabet:
/// `D_i f = (y_i f - y_{i+1} f^{s_i}) / (y_i - y_{i+1})`,
/// where `f^{s_i}` swaps `y_i` and `y_{i+1}`.  The division is always exact.
pub fn demazure(i: u32, f: &Polynomial) -> Polynomial {
    let yi = Variable::y(i);
    let yi1 = Variable::y(i + 1);
    let swapped = f.swap_variables(yi, yi1);
    let num = Polynomial::var(yi)
        .mul(f)
        .sub(&Polynomial::var(yi1).mul(&swapped));
    let den = Polynomial::var(yi).sub(&Polynomial::var(yi1));
    num.exact_div(&den)
        .expect("Demazure numerator is divisible by y_i - y_{i+1}")
}

/// Parse an integer or `p/q` fraction string into a `BigRational`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(BigRational::from(p))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(i: u32) -> Polynomial {
        Polynomial::var(Variable::y(i))
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let m1 = Monomial::var(Variable::y(1), 1);
        let m4 = Monomial::var(Variable::y(4), 1);
        let m11 = Monomial::var(Variable::y(1), 2);
        assert!(m11 > m1);
        assert!(m1 > m4);
        assert!(m4 > Monomial::one());
        let inv = Monomial::var(Variable::y(1), -1);
        assert!(inv < Monomial::one());
    }

    #[test]
    fn laurent_exact_division() {
        // (y1^2 - y2^2) / (y1 - y2) = y1 + y2
        let num = y(1).mul(&y(1)).sub(&y(2).mul(&y(2)));
        let den = y(1).sub(&y(2));
        assert_eq!(num.exact_div(&den).unwrap(), y(1).add(&y(2)));
        // (1 + y1) / y1 = y1^-1 + 1 in the Laurent ring
        let q = Polynomial::one().add(&y(1)).exact_div(&y(1)).unwrap();
        assert_eq!(q, Polynomial::one().add(&Polynomial::var_pow(Variable::y(1), -1)));
        // x^2 + 1 is not divisible by x + 1
        let f = y(1).mul(&y(1)).add(&Polynomial::one());
        let g = y(1).add(&Polynomial::one());
        assert_eq!(f.exact_div(&g), Err(AlgebraError::NotDivisible));
    }

    #[test]
    fn rational_function_display_and_equality() {
        // -y2^-1 y4 renders as -y4/y2
        let p = Polynomial::term(
            Monomial::var(Variable::y(2), -1).mul(&Monomial::var(Variable::y(4), 1)),
            BigInt::from(-1),
        );
        let rf = RationalFunction::from_laurent(&p);
        assert_eq!(rf.to_string(), "-y4/y2");
        // equality by cross multiplication: (y1 y2)/(y2) == y1
        let a = RationalFunction::new(y(1).mul(&y(2)), y(2)).unwrap();
        let b = RationalFunction::from_poly(y(1));
        assert_eq!(a, b);
    }

    #[test]
    fn determinant_vandermonde() {
        // det [[1, y1], [1, y2]] = y2 - y1
        let m = vec![
            vec![Polynomial::one(), y(1)],
            vec![Polynomial::one(), y(2)],
        ];
        assert_eq!(determinant(&m), y(2).sub(&y(1)));
        let zero_row = vec![
            vec![Polynomial::zero(), Polynomial::zero()],
            vec![y(1), y(2)],
        ];
        assert_eq!(determinant(&zero_row), Polynomial::zero());
    }

    #[test]
    fn demazure_idempotent_on_symmetric_output() {
        // D_1 applied to y1^2 y2: result is symmetric in y1,y2 up to the
        // defining property D_i(D_i f) = D_i f.
        let f = y(1).pow(2).mul(&y(2));
        let d = demazure(1, &f);
        assert_eq!(demazure(1, &d), d);
    }

    #[test]
    fn substitute_rational_value() {
        // f = y1 + y1^-1 at y1 -> t1/(1+t1)
        let f = y(1).add(&Polynomial::var_pow(Variable::y(1), -1));
        let t = Polynomial::var(Variable::t(1));
        let val = RationalFunction::new(t.clone(), Polynomial::one().add(&t)).unwrap();
        let got = f.substitute(Variable::y(1), &val).unwrap();
        let expect = val.add(&val.inverse().unwrap()).unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn eval_laurent() {
        let f = y(1).sub(&Polynomial::var_pow(Variable::y(2), -2));
        let v = f
            .eval(&|v| match v.index {
                1 => BigRational::new(BigInt::from(3), BigInt::from(2)),
                _ => BigRational::new(BigInt::from(2), BigInt::from(1)),
            })
            .unwrap();
        assert_eq!(v, BigRational::new(BigInt::from(5), BigInt::from(4)));
    }
}
