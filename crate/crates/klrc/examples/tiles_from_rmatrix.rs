//! The puzzle tile set is not a convention — it is computed.  Each nonzero
//! entry of the vertical-rhombus R-matrix, read through the edge-state
//! dictionaries, names one (up-tile, down-tile) pair and its weight.  This
//! example derives the catalogue from the matrix entries and prints it.
//!
//! Run with: `cargo run --example tiles_from_rmatrix`

use klrc::puzzle::{down_tile, up_tile, EdgeState};
use klrc::vertexmodel::derive_tiles;

fn edge_name(bits: u8) -> &'static str {
    match EdgeState::from_bits(bits) {
        Some(EdgeState::Empty) => "-",
        Some(EdgeState::Green) => "G",
        Some(EdgeState::Red) => "R",
        Some(EdgeState::RedGreen) => "RG",
        None => "?",
    }
}

fn main() {
    let cat = derive_tiles().expect("catalogue is consistent");

    println!("up tiles   (H, left-60, right-120):");
    for &t in &cat.up_tiles {
        let [h, l, r] = up_tile(t).unwrap();
        println!(
            "  {t}: ({:>2}, {:>2}, {:>2}){}",
            edge_name(h),
            edge_name(l),
            edge_name(r),
            if t == 8 { "   <- the K-theory tile" } else { "" }
        );
    }
    println!("down tiles (H, left-120, right-60):");
    for &t in &cat.down_tiles {
        let [h, l, r] = down_tile(t).unwrap();
        println!("  {t}: ({:>2}, {:>2}, {:>2})", edge_name(h), edge_name(l), edge_name(r));
    }

    println!("\nweighted vertical pairs (up over down, weight in the local parameter w):");
    for ((up, down), sym) in &cat.pairs {
        println!("  ({up}, {down}) -> {sym:?}");
    }
    println!("\n{} up tiles, {} down tiles, {} pairs", cat.up_tiles.len(), cat.down_tiles.len(), cat.pairs.len());
}
