//! Exact equivariant K-theoretic Schubert calculus on Grassmannians.
//!
//! This crate computes structure constants ("Littlewood-Richardson
//! coefficients") for products of Schubert classes in the equivariant
//! K-theory of the Grassmannian `Gr(k,n)`, two independent ways:
//!
//! * by weighted enumeration of triangular and rhombic *puzzles* under a
//!   family of rules (`T1`, `T1'`, `T2`, `T2'`, `T2''`, `T3`, `T3'`,
//!   `T3''`), and
//! * by expanding products of (double) Grothendieck polynomials in a basis,
//!   via exact linear algebra.
//!
//! The puzzle tile set and its weights are not ad hoc: they are derived from
//! the entries of rank-two trigonal `R`-matrices whose Yang-Baxter equations
//! this crate also verifies symbolically.  All arithmetic is exact, over
//! integer Laurent polynomials and their ratios.
//!
//! Entry points: [`coeffs::coefficient`] and [`coeffs::expansion`] for the
//! puzzle side, [`oracle`] for independent cross checks, [`grothendieck`]
//! for the polynomial constructions themselves, and the runnable examples
//! under `examples/`.

pub mod algebra;
pub mod coeffs;
pub mod grothendieck;
pub mod io;
pub mod oracle;
pub mod puzzle;
pub mod vertexmodel;
pub mod young;
