//! Zooms on the accumulation point (1/32, 1/2): the gap family
//! (1 0^{4+r} 1, 1 0^r 1) with r <= 3 produces segments whose lower
//! endpoints pile up against it.
//!
//! Run with: cargo run --release --example zoom_accumulation [out_dir]

use wordpascal::fractal::{build_a0, segment_for, PieceSet};
use wordpascal::render::render_zoom;
use wordpascal::star::family_gap;
use wordpascal::word::Modulus;
use wordpascal::{Box2, Dyadic, Point};

fn main() {
    let out_dir = std::env::args().nth(1).unwrap_or_else(|| ".".into());

    for r in 0..=7 {
        let (u, v, star) = family_gap(0, r);
        print!(
            "r = {r}: ({u}, {v}) is {}",
            if star {
                "a star pair"
            } else {
                "not a star pair"
            }
        );
        if star {
            let s = segment_for(&u, &v).unwrap();
            print!("; lower endpoint ({}, {})", s.a.x, s.a.y);
        }
        println!();
    }

    let window = Box2::new(
        Point::new(Dyadic::new(17, 9), Dyadic::new(27, 9)),
        Point::new(Dyadic::new(1, 4), Dyadic::new(17, 5)),
    );
    let a0 = build_a0(10, Modulus::odd()).unwrap();
    let svg = render_zoom(&PieceSet::from_segments(&a0).unwrap(), &window, 768).unwrap();
    let path = format!("{out_dir}/zoom_1_32.svg");
    std::fs::write(&path, svg).unwrap();
    println!("wrote {path}");
}
