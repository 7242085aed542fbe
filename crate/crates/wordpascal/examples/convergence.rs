//! Hausdorff-distance diagnostics: how far the normalized colorings U_n
//! sit from a fixed segment approximant, with certified sampling bounds.
//!
//! Run with: cargo run --release --example convergence

use wordpascal::hausdorff::{convergence_csv, convergence_rows};
use wordpascal::word::Modulus;

fn main() {
    let rows = convergence_rows(3, 9, 8, 4, 12, Modulus::odd()).unwrap();
    print!("{}", convergence_csv(&rows));
    println!(
        "# d(U_9) = {:.6} vs d(U_3) = {:.6}; every estimate carries the same bound ±{:.6}",
        rows[6].estimate, rows[0].estimate, rows[0].error_bound
    );
}
