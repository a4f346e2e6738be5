//! Build the same double Grothendieck polynomial three independent ways —
//! by the Demazure-operator recursion, by the ratio-of-determinants
//! formula, and as a lattice partition function — and watch them agree.
//!
//! Run with: `cargo run --example grothendieck_constructions`

use klrc::algebra::{Family, RationalFunction};
use klrc::grothendieck::{
    dual_groth, groth_det, groth_inductive, groth_lattice, Alphabet,
};
use klrc::young::{partitions_in_box, Partition};

fn main() {
    let (k, n) = (2usize, 4usize);
    let x = Alphabet::symbolic(Family::X, k);
    let y = Alphabet::symbolic(Family::Y, n);

    println!("G^lambda(x; y) on Gr({k},{n}), all constructions:\n");
    for lam in partitions_in_box(k, (n - k) as u32) {
        let a = groth_inductive(k, n, &lam, &x, &y).unwrap();
        let b = groth_det(k, n, &lam, &x, &y).unwrap();
        let c = groth_lattice(k, n, &lam, &x, &y).unwrap();
        assert_eq!(a, b, "inductive vs determinant at {lam}");
        assert_eq!(b, c, "determinant vs lattice at {lam}");
        println!("  G^{lam} = {}", RationalFunction::from_laurent(&a));
    }

    // the dual basis element for one shape, and its defining normalization
    let lam = Partition::parse("2,1").unwrap();
    let d = dual_groth(k, n, &lam, &x, &y).unwrap();
    println!("\nG_{lam} = {}", RationalFunction::from_laurent(&d));

    // specializing y to 1 gives the one-alphabet (non-equivariant) polynomial
    let ones = Alphabet::ones(n);
    let g1 = groth_det(k, n, &lam, &x, &ones).unwrap();
    println!("G^{lam}|_(y=1) = {}", RationalFunction::from_laurent(&g1));
}
