//! The two counting sequences of the triangle mod 2: unit squares in T_n
//! and positive coefficients over L_n × L_n (always 3^n).
//!
//! Run with: cargo run --release --example triangle_counts

use wordpascal::triangle::{build_vn_by_maps, counters_csv};

fn main() {
    print!("{}", counters_csv(10));
    for n in 1..=6 {
        let v = build_vn_by_maps(n);
        println!(
            "# V_{n} built by the four maps: {} pairs (= 2·3^{})",
            v.len(),
            n - 1
        );
    }
}
