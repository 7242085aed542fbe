//! Builds the base segment set from star pairs up to length 8, spreads
//! it across the unit square with the halving and doubling maps, and
//! writes the depth-4 approximant as SVG and JSON.
//!
//! Run with: cargo run --release --example fractal_approximant [out_dir]

use wordpascal::fractal::{build_a0, build_an, maximal_segments, PieceSet};
use wordpascal::render::render_pieces_svg;
use wordpascal::word::Modulus;

fn main() {
    let out_dir = std::env::args().nth(1).unwrap_or_else(|| ".".into());

    let a0 = build_a0(8, Modulus::odd()).unwrap();
    println!(
        "base truncation: {} segments (missing ones are shorter than sqrt(2)/2^9)",
        a0.len()
    );
    let maximal = maximal_segments(&a0);
    println!("of these, {} are maximal under inclusion", maximal.len());

    let a4 = build_an(&a0, 4);
    println!(
        "depth-4 approximant: {} segments after deduplication",
        a4.len()
    );

    let pieces = PieceSet::from_segments(&a4).unwrap();
    let svg_path = format!("{out_dir}/a4.svg");
    std::fs::write(&svg_path, render_pieces_svg(&pieces, 0.6, 1024)).unwrap();
    let json_path = format!("{out_dir}/a4.json");
    std::fs::write(&json_path, a4.to_json()).unwrap();
    println!("wrote {svg_path} and {json_path}");
}
