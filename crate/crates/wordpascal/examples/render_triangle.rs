//! Renders residue grids: a P1 bitmap of U_5 (mod 2) and an SVG of the
//! mod-3 residue-2 coloring at depth 7.
//!
//! Run with: cargo run --release --example render_triangle [out_dir]

use wordpascal::fractal::PieceSet;
use wordpascal::render::{render_grid_pbm, render_pieces_svg};
use wordpascal::triangle::{build_grid, squares};

fn main() {
    let out_dir = std::env::args().nth(1).unwrap_or_else(|| ".".into());
    let out = |name: &str| format!("{out_dir}/{name}");

    let grid = build_grid(5, 2).unwrap();
    let bitmap = render_grid_pbm(&grid, 1).unwrap();
    std::fs::write(out("u5_p2_r1.pbm"), bitmap.to_p1()).unwrap();
    println!(
        "wrote {} ({}x{})",
        out("u5_p2_r1.pbm"),
        bitmap.width(),
        bitmap.height()
    );

    let grid = build_grid(7, 3).unwrap();
    let set = squares(&grid, 2).unwrap();
    println!("{} squares with residue 2 mod 3 at depth 7", set.len());
    let svg = render_pieces_svg(
        &PieceSet::from_squares(&set.normalized()).unwrap(),
        1.0,
        1024,
    );
    std::fs::write(out("u7_p3_r2.svg"), svg).unwrap();
    println!("wrote {}", out("u7_p3_r2.svg"));
}
