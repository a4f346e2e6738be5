//! Expand a product of Schubert classes two ways — signed puzzle counts in
//! ordinary K-theory, weighted puzzle sums equivariantly — and watch the
//! equivariant answer specialize to the ordinary one at y = 1.
//!
//! Run with: `cargo run --example expand_product`

use klrc::algebra::{Family, RationalFunction};
use klrc::coeffs::{expansion, Rule};
use klrc::young::Partition;

fn main() {
    let (k, n) = (2usize, 4usize);
    let lam = Partition::parse("1").unwrap();
    let mu = Partition::parse("1").unwrap();

    println!("[{lam}] * [{mu}] in K(Gr({k},{n})), rule T1 (signed counts):");
    for (nu, c) in expansion(Rule::T1, k, n, &lam, &mu).unwrap() {
        println!("  {nu}: {c}");
    }

    println!("\nsame product equivariantly, rule T2 (weights in y):");
    let eq = expansion(Rule::T2, k, n, &lam, &mu).unwrap();
    for (nu, c) in &eq {
        println!("  {nu}: {c}");
    }

    // specializing every y to 1 recovers the signed counts
    println!("\nT2 at y = 1:");
    for (nu, c) in &eq {
        let at_one = RationalFunction::from_laurent(
            &c.numerator().set_family_to_one(Family::Y),
        )
        .div(&RationalFunction::from_laurent(
            &c.denominator().set_family_to_one(Family::Y),
        ))
        .unwrap();
        println!("  {nu}: {at_one}");
    }

    // the dual-basis expansion of the same pair (rule T2')
    println!("\nG_{lam} * G_{mu} over the dual basis, rule T2':");
    for (nu, c) in expansion(Rule::T2d, k, n, &lam, &mu).unwrap() {
        println!("  {nu}: {c}");
    }
}
