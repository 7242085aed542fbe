//! Binary words, binomial coefficients of words, and Lucas' theorem.
//!
//! The binomial coefficient of two words counts the occurrences of the
//! second as a scattered subword of the first. On one-letter alphabets it
//! collapses to the integer binomial coefficient, which is why the type
//! names below mirror the integer vocabulary.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite word over the alphabet {0,1}.
///
/// Words are ordered genealogically: first by length, then
/// lexicographically with 0 < 1. A word is *canonical* when it is empty or
/// starts with 1, i.e. when it is the base-2 expansion of an integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    bits: Vec<u8>,
}

impl Word {
    pub fn empty() -> Self {
        Word { bits: Vec::new() }
    }

    /// Builds a word from bits; panics if any entry is not 0 or 1.
    pub fn from_bits(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "bits must be 0 or 1");
        Word { bits }
    }

    /// Parses a string of '0'/'1' characters. The empty string is the empty word.
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(Error::NotBinary(s.to_string())),
            }
        }
        Ok(Word { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// True when the word is empty or starts with 1.
    pub fn is_canonical(&self) -> bool {
        self.bits.first().is_none_or(|&b| b == 1)
    }

    /// Returns `self` with one letter appended.
    pub fn extended(&self, bit: u8) -> Self {
        assert!(bit <= 1);
        let mut bits = self.bits.clone();
        bits.push(bit);
        Word { bits }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Self {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        Word { bits }
    }

    /// `self · b^count`.
    pub fn extended_run(&self, bit: u8, count: usize) -> Self {
        assert!(bit <= 1);
        let mut bits = self.bits.clone();
        bits.extend(std::iter::repeat_n(bit, count));
        Word { bits }
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.bits.starts_with(&prefix.bits)
    }

    /// The word's digits as a plain string; empty word gives "".
    pub fn digits(&self) -> String {
        self.bits.iter().map(|b| char::from(b'0' + b)).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{}", self.digits())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Genealogical order: length first, then lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.digits())
    }
}

/// A prime modulus together with a residue class `r` in 1..p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Modulus {
    p: u32,
    r: u32,
}

impl Modulus {
    /// Validates that `p` is prime (trial division) and `1 <= r < p`.
    pub fn new(p: u32, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 || r >= p {
            return Err(Error::ResidueRange { r, p });
        }
        Ok(Modulus { p, r })
    }

    /// The default setting: odd coefficients, i.e. p = 2, r = 1.
    pub fn odd() -> Self {
        Modulus { p: 2, r: 1 }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }
}

/// Deterministic trial-division primality test; inputs here are tiny.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The greedy base-2 expansion of `n`; `rep2(0)` is the empty word.
pub fn rep2(n: u64) -> Word {
    if n == 0 {
        return Word::empty();
    }
    let top = 63 - n.leading_zeros();
    let bits = (0..=top).rev().map(|i| ((n >> i) & 1) as u8).collect();
    Word { bits }
}

/// The integer value of a binary word; leading zeroes are ignored.
///
/// Panics if the value would not fit in a u64.
pub fn val2(w: &Word) -> u64 {
    let mut acc: u64 = 0;
    for &b in &w.bits {
        assert!(acc.leading_zeros() >= 1, "word value exceeds u64");
        acc = (acc << 1) | b as u64;
    }
    acc
}

/// The i-th word of L in genealogical order, which is `rep2(i)`.
pub fn nth_word(i: u64) -> Word {
    rep2(i)
}

/// Number of occurrences of `v` as a scattered subword of `u`, exactly.
///
/// ```
/// use wordpascal::{binom_words, Word};
///
/// let u = Word::parse("101001")?;
/// let v = Word::parse("101")?;
/// assert_eq!(binom_words(&u, &v), 6u32.into());
/// # Ok::<(), wordpascal::Error>(())
/// ```
pub fn binom_words(u: &Word, v: &Word) -> BigUint {
    let n = v.len();
    if n > u.len() {
        return BigUint::zero();
    }
    // Rolling row over prefixes of v; the recurrence adds the diagonal
    // entry whenever the letters match.
    let mut row: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    row[0] = BigUint::one();
    for &a in &u.bits {
        for j in (1..=n).rev() {
            if v.bits[j - 1] == a {
                let prev = row[j - 1].clone();
                row[j] += prev;
            }
        }
    }
    row.pop().unwrap()
}

/// `binom_words(u, v) mod p`, computed with residue arithmetic throughout.
pub fn binom_words_mod(u: &Word, v: &Word, m: Modulus) -> u32 {
    let p = m.p as u64;
    let n = v.len();
    if n > u.len() {
        return 0;
    }
    let mut row: Vec<u64> = vec![0; n + 1];
    row[0] = 1;
    for &a in &u.bits {
        for j in (1..=n).rev() {
            if v.bits[j - 1] == a {
                row[j] = (row[j] + row[j - 1]) % p;
            }
        }
    }
    row[n] as u32
}

/// True when `v` occurs at least once as a scattered subword of `u`,
/// i.e. when the word binomial coefficient is positive.
pub fn is_subword(v: &Word, u: &Word) -> bool {
    let mut it = v.bits.iter();
    let mut next = it.next();
    for &a in &u.bits {
        match next {
            Some(&b) if a == b => next = it.next(),
            Some(_) => {}
            None => return true,
        }
    }
    next.is_none()
}

/// `C(m, n) mod p` by Lucas' theorem: the product over base-p digit pairs
/// of the digitwise binomials, with `C(a, b) = 0` when `a < b`.
pub fn binom_int_lucas(m: u64, n: u64, p: u32) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p64 = p as u64;
    let mut m = m;
    let mut n = n;
    let mut acc: u64 = 1;
    while m > 0 || n > 0 {
        let (md, nd) = (m % p64, n % p64);
        if md < nd {
            return Ok(0);
        }
        acc = acc * small_binom_mod(md, nd, p64) % p64;
        m /= p64;
        n /= p64;
    }
    Ok(acc as u32)
}

// C(a, b) mod p for digits a, b < p, via modular inverses (p prime).
fn small_binom_mod(a: u64, b: u64, p: u64) -> u64 {
    debug_assert!(b <= a && a < p);
    let mut acc = 1u64;
    for i in 1..=b {
        acc = acc * ((a - b + i) % p) % p;
        acc = acc * pow_mod(i % p, p - 2, p) % p;
    }
    acc
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Number of ones in the base-2 expansion of `n`.
pub fn sum_of_digits_base2(n: u64) -> u32 {
    n.count_ones()
}

/// All canonical words of length at most `max_len`, in genealogical order.
/// There are 2^max_len of them.
pub fn canonical_words(max_len: u32) -> Vec<Word> {
    (0..1u64 << max_len).map(rep2).collect()
}
