//! Regenerates the pinned convergence diagnostics at the oracle
//! resolution (grid exponent 16, four steps finer than the default).
//!
//! The output overwrites tests/golden/convergence_g16.csv when run from
//! the crate root. Sampling lattices nest as the exponent grows, so each
//! pinned estimate brackets the default-resolution estimate from above.
//!
//! Run with: cargo run --release --example pin_convergence

use std::time::Instant;

use wordpascal::hausdorff::{convergence_csv, convergence_rows};
use wordpascal::word::Modulus;

fn main() {
    let started = Instant::now();
    let rows = convergence_rows(3, 9, 8, 4, 16, Modulus::odd()).expect("diagnostic parameters");
    let csv = convergence_csv(&rows);
    print!("{csv}");
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/golden/convergence_g16.csv"
    );
    std::fs::write(path, &csv).expect("write pins");
    eprintln!("wrote {path} in {:.1?}", started.elapsed());
}
