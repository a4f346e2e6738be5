//! Scratch probe for the lozenge factorization (to be deleted).

use klrc::algebra::Polynomial;
use klrc::coeffs::{
    bottom_half_sum, lozenge_by_central_string, one_alphabet_weight, puzzles, Rule,
};
use klrc::young::{diagram_of_frame, Partition};

fn p(s: &str) -> Partition {
    Partition::parse(s).unwrap()
}

fn letters(sig: &[u8]) -> String {
    sig.iter()
        .map(|s| match s {
            0 => "e",
            1 => "G",
            2 => "R",
            3 => "X",
            _ => "?",
        })
        .collect()
}

fn main() {
    let (k, n) = (2usize, 4usize);
    let cases = [
        (p("1"), p("1"), p("2,1"), Partition::empty()),
        (p("1"), p("1"), p("2"), p("1")),
        (p("2,1"), p("1"), p("2,2"), p("1")),
        (p("1"), Partition::empty(), p("1"), p("1")),
    ];
    for (lam, mu, nu, rho) in &cases {
        let by_string = lozenge_by_central_string(k, n, lam, mu, nu, rho).unwrap();
        println!("lozenge {lam} {mu} {nu} {rho}: {} central strings", by_string.len());
        for (sig, wt) in &by_string {
            let saturated = sig.iter().all(|&s| s == 1 || s == 2);
            if !saturated {
                println!("  {} non-saturated, weight zero after summing: {}", letters(sig), wt.is_zero());
                continue;
            }
            let frame: Vec<usize> = (1..=n).filter(|&p| sig[p - 1] == 1).collect();
            if frame.len() != k {
                println!("  {} saturated but {} greens, weight zero: {}", letters(sig), frame.len(), wt.is_zero());
                continue;
            }
            let sigma = diagram_of_frame(&frame, k, n).unwrap();
            let top: Polynomial = puzzles(Rule::T2, k, n, lam, mu, &sigma)
                .unwrap()
                .iter()
                .fold(Polynomial::zero(), |acc, cfg| acc.add(&one_alphabet_weight(cfg)));
            let (bot, cnt) = bottom_half_sum(k, n, &frame, nu, rho).unwrap();
            let ok = *wt == top.mul(&bot);
            println!("  {} frame {:?}: bottom cnt={} factorizes={}", letters(sig), frame, cnt, ok);
            if !ok {
                println!("    grouped = {wt}");
                println!("    product = {}", top.mul(&bot));
            }
        }
    }
}
