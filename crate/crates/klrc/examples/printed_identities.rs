//! Reproduce the worked coefficient computations that document each rule:
//! one instance per rule family, with the exact rational functions the
//! puzzle weights must sum to.
//!
//! Run with: `cargo run --example printed_identities`

use klrc::coeffs::{coefficient, expansion, puzzles, Rule};
use klrc::young::Partition;

fn p(s: &str) -> Partition {
    Partition::parse(s).unwrap()
}

fn main() {
    // T2 on Gr(2,5): the coefficient of G^(3,1) in G^(2) G^(1), both orders
    for (lam, mu) in [("2", "1"), ("1", "2")] {
        let c = coefficient(Rule::T2, 2, 5, &p(lam), &p(mu), &p("3,1")).unwrap();
        println!("T2   c^(3,1) of G^({lam}) G^({mu})  = {c}");
    }

    // T2 on Gr(2,5): two puzzles whose weights sum to (y4/(y1y3))(-y1+y4+y5)
    let c = coefficient(Rule::T2, 2, 5, &p("2"), &p("2,1"), &p("3,2")).unwrap();
    let count = puzzles(Rule::T2, 2, 5, &p("2"), &p("2,1"), &p("3,2")).unwrap().len();
    println!("T2   c^(3,2) of G^(2) G^(2,1) = {c}   ({count} puzzles)");

    // T2' on Gr(2,5): six puzzles for the coefficient of G_(2) in G_(3,1) G_(3,2)
    let c = coefficient(Rule::T2d, 2, 5, &p("3,1"), &p("3,2"), &p("2")).unwrap();
    let count = puzzles(Rule::T2d, 2, 5, &p("3,1"), &p("3,2"), &p("2")).unwrap().len();
    println!("T2'  c_(2) of G_(3,1) G_(3,2) = {c}   ({count} puzzles)");

    // T2'' on Gr(2,5): five lozenge puzzles, two equivariant alphabets
    let c = coefficient(Rule::T2dd, 2, 5, &p("3,1"), &p("2,2"), &p("1,1")).unwrap();
    let count = puzzles(Rule::T2dd, 2, 5, &p("3,1"), &p("2,2"), &p("1,1")).unwrap().len();
    println!("T2'' c_(1,1) of G_(3,1)(x;z) G_(2,2)(x;y) = {c}   ({count} puzzles)");

    // T3 on Gr(2,4): the full mixed-reversal expansion of G^(1)(x;y) G^(1)(x;yrev)
    println!("T3   G^(1)(x;y) G^(1)(x;yrev) expands as:");
    for (nu, c) in expansion(Rule::T3, 2, 4, &p("1"), &p("1")).unwrap() {
        println!("       {nu}: {c}");
    }
}
