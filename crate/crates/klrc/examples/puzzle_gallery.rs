//! Enumerate the puzzles of one structure coefficient, print each
//! configuration's weight, and render the whole family as SVG files.
//!
//! The instance is the documented two-puzzle computation on Gr(2,5):
//! the coefficient of G^(3,2) in G^(2) * G^(2,1) under the equivariant
//! rule T2, whose weights sum to (y4/(y1y3))(-y1+y4+y5).
//!
//! Run with: `cargo run --example puzzle_gallery [output-dir]`

use klrc::algebra::RationalFunction;
use klrc::coeffs::{coefficient, config_weight, puzzles, Rule};
use klrc::io::{render_svg, svg_filename, to_record, RenderStyle};
use klrc::young::Partition;

fn main() {
    let (k, n) = (2usize, 5usize);
    let rule = Rule::T2;
    let lam = Partition::parse("2").unwrap();
    let mu = Partition::parse("2,1").unwrap();
    let nu = Partition::parse("3,2").unwrap();

    let configs = puzzles(rule, k, n, &lam, &mu, &nu).unwrap();
    println!(
        "{} puzzles for c^{nu}_({lam},{mu}) on Gr({k},{n}) under {}:",
        configs.len(),
        rule.label()
    );
    for (i, cfg) in configs.iter().enumerate() {
        let w = RationalFunction::from_laurent(&config_weight(rule, cfg));
        println!("  #{i}: {} K-tiles, weight {w}", cfg.k_tile_count());
    }
    let total = coefficient(rule, k, n, &lam, &mu, &nu).unwrap();
    println!("sum of weights: {total}");

    let dir = std::env::args().nth(1).unwrap_or_else(|| "puzzle_gallery_out".into());
    std::fs::create_dir_all(&dir).unwrap();
    let style = RenderStyle::default();
    for (i, cfg) in configs.iter().enumerate() {
        let name = svg_filename(rule, &lam, &mu, &nu, i);
        let path = std::path::Path::new(&dir).join(&name);
        std::fs::write(&path, render_svg(cfg, &style)).unwrap();
        println!("wrote {}", path.display());
    }

    // the JSON form round-trips exactly
    let rec = to_record(&configs[0], total.to_string());
    let text = serde_json::to_string_pretty(&rec).unwrap();
    println!("\nfirst puzzle as JSON:\n{text}");
}
