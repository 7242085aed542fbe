//! Word binomial coefficients: exact values, residues, and the integer
//! special case via Lucas' theorem.
//!
//! Run with: cargo run --example coefficients

use wordpascal::word::{
    binom_int_lucas, binom_words, binom_words_mod, rep2, sum_of_digits_base2, Modulus, Word,
};

fn main() {
    let u = Word::parse("101001").unwrap();
    let v = Word::parse("101").unwrap();
    println!("binom({u}, {v}) = {}", binom_words(&u, &v));

    // The one-letter alphabet recovers integer binomials.
    let ones = |k: usize| Word::from_bits(vec![1; k]);
    println!(
        "binom(1^8, 1^3) = {} = C(8, 3)",
        binom_words(&ones(8), &ones(3))
    );
    println!("C(12, 8) mod 2 = {}", binom_int_lucas(12, 8, 2).unwrap());

    // The column at v = 1 mod 2 is the parity of the digit sum.
    let one = Word::parse("1").unwrap();
    let column: String = (0..32u64)
        .map(|n| char::from(b'0' + binom_words_mod(&rep2(n), &one, Modulus::odd()) as u8))
        .collect();
    println!("column v=1 mod 2: {column}");
    let digit_sums: String = (0..32u64)
        .map(|n| char::from(b'0' + (sum_of_digits_base2(n) % 2) as u8))
        .collect();
    assert_eq!(column, digit_sums);
    println!("matches digit-sum parity exactly");
}
