//! The star condition: enumeration, the extension closure, and the
//! completion construction that turns any odd-coefficient pair into a
//! star pair.
//!
//! Run with: cargo run --release --example star_pairs

use wordpascal::star::{complete_to_star, enumerate_star_pairs, extend_star, pairs_to_csv};
use wordpascal::word::{Modulus, Word};

fn main() {
    let m = Modulus::odd();
    for max_len in 1..=8 {
        let pairs = enumerate_star_pairs(max_len, m).unwrap();
        println!("|u| <= {max_len}: {} star pairs", pairs.len());
    }

    let pairs = enumerate_star_pairs(4, m).unwrap();
    println!("\nall pairs up to length 4:\n{}", pairs_to_csv(&pairs));

    // Each star pair extends to two longer ones by appending the same
    // letter on both sides.
    let seed = &pairs[1]; // (10, 10)
    let (zero, one) = extend_star(seed).unwrap();
    println!(
        "({}, {}) extends to ({}, {}) and ({}, {})",
        seed.u(),
        seed.v(),
        zero.u(),
        zero.v(),
        one.u(),
        one.v()
    );

    // A pair with an odd coefficient that is not itself a star pair
    // becomes one after appending a long zero block and a closing 1.
    let u = Word::parse("111").unwrap();
    let v = Word::parse("1").unwrap();
    let (uk, vk) = complete_to_star(&u, &v, 2).unwrap();
    println!("({u}, {v}) completes to ({uk}, {vk})");
}
