//! Splitting the one-alphabet lozenge at its central line.
//!
//! The `n x n` lozenge with a single alphabet `z` computes a four-sided
//! partition function.  Grouping configurations by the state string of the
//! central horizontal line exhibits two structural facts:
//!
//! 1. strings containing an empty or doubly-occupied edge cancel: after
//!    summing weights, only *saturated* strings (every edge green or red)
//!    survive, and each survivor factorizes into a top triangle times a
//!    bottom half-lozenge;
//! 2. when one lower side carries the empty diagram, the bottom half
//!    collapses: a central string `sigma` admits exactly one configuration
//!    when the dual of `sigma` covers the other side diagram by a strip
//!    that is both horizontal and vertical (and none otherwise), its weight
//!    is a signed monomial in `z` in closed form, and the number of
//!    supported strings is a power of two counted by the greens of the side
//!    string that are followed by an empty site.
//!
//! Run with `cargo run --example splitting_lemma`.

use klrc::algebra::Polynomial;
use klrc::coeffs::{
    bottom_half_closed_form, bottom_half_sum, bottom_half_supported, k_subsets,
    lozenge_by_central_string, one_alphabet_weight, puzzles, unmatched_green_count, Rule,
};
use klrc::young::{diagram_of_frame, partitions_in_box, Partition};

fn p(s: &str) -> Partition {
    Partition::parse(s).unwrap()
}

/// Render a central state string with one letter per edge.
fn letters(sig: &[u8]) -> String {
    sig.iter()
        .map(|s| match s {
            0 => 'e',
            1 => 'G',
            2 => 'R',
            _ => 'X', // doubly occupied
        })
        .collect()
}

fn main() {
    let (k, n) = (2usize, 4usize);

    // -- the four-sided lozenge, grouped by its central line ---------------
    let (lam, mu, nu, rho) = (p("1"), p("1"), p("2"), p("1"));
    println!("lozenge on Gr({k},{n}) with sides {lam}, {mu} / {nu}, {rho}");
    let by_string = lozenge_by_central_string(k, n, &lam, &mu, &nu, &rho).unwrap();
    for (sig, weight) in &by_string {
        let saturated = sig.iter().all(|&s| s == 1 || s == 2);
        if !saturated {
            assert!(weight.is_zero(), "non-saturated string must cancel");
            println!("  {}   cancels to 0", letters(sig));
            continue;
        }
        // a saturated string is the frame of a diagram sigma; the grouped
        // weight is (top triangle with lambda, mu, sigma) x (bottom half)
        let frame: Vec<usize> = (1..=n).filter(|&q| sig[q - 1] == 1).collect();
        let sigma = diagram_of_frame(&frame, k, n).unwrap();
        let top = puzzles(Rule::T2, k, n, &lam, &mu, &sigma)
            .unwrap()
            .iter()
            .fold(Polynomial::zero(), |acc, cfg| acc.add(&one_alphabet_weight(cfg)));
        let (bottom, count) = bottom_half_sum(k, n, &frame, &nu, &rho).unwrap();
        assert_eq!(*weight, top.mul(&bottom), "saturated string must factorize");
        println!(
            "  {}   = (top triangle at sigma = {sigma}) x (bottom half, {count} configs)",
            letters(sig)
        );
    }

    // -- the bottom half with an empty side --------------------------------
    println!();
    println!("bottom halves with the lower-right side empty:");
    let empty = Partition::empty();
    for side in partitions_in_box(k, (n - k) as u32) {
        let mut supported = 0usize;
        for frame in k_subsets(n, k) {
            let (sum, count) = bottom_half_sum(k, n, &frame, &side, &empty).unwrap();
            if bottom_half_supported(k, n, &frame, &side).unwrap() {
                supported += 1;
                let closed = bottom_half_closed_form(k, n, &frame, &side).unwrap();
                assert_eq!(count, 1, "supported strings admit a unique configuration");
                assert_eq!(sum, closed, "closed-form weight");
            } else {
                assert_eq!(count, 0, "unsupported strings admit no configuration");
                assert!(sum.is_zero());
            }
        }
        let m = unmatched_green_count(&side, k, n).unwrap();
        assert_eq!(supported, 1 << m);
        println!("  side {side}: {supported} supported strings = 2^{m}");
    }
    println!();
    println!("all splitting checks passed");
}
