//! The star condition on pairs of words: decision, enumeration, closure
//! properties, and the two explicit families used for accumulation and
//! completion arguments.
//!
//! A pair (u, v) satisfies the condition for a modulus (p, r) when
//! `binom(u, v) ≡ r mod p` and both one-letter extensions of v have an
//! exactly zero coefficient in u. The zero clauses are exact integer
//! zeroes, which is equivalent to `vb` not being a subword of u at all.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{binom_words_mod, is_subword, rep2, Modulus, Word};

/// Default cap on the enumeration length.
pub const LEN_CAP: u32 = 14;

/// A validated star pair for a given modulus.
#[derive(Clone, Debug)]
pub struct StarPair {
    u: Word,
    v: Word,
    modulus: Modulus,
}

impl StarPair {
    /// Validates canonicity and the star condition.
    pub fn new(u: Word, v: Word, m: Modulus) -> Result<StarPair> {
        if !u.is_canonical() {
            return Err(Error::NotCanonical(u.digits()));
        }
        if !v.is_canonical() {
            return Err(Error::NotCanonical(v.digits()));
        }
        if !satisfies_star(&u, &v, m) {
            return Err(Error::NotStar {
                u: u.to_string(),
                v: v.to_string(),
                p: m.p(),
                r: m.r(),
            });
        }
        Ok(StarPair { u, v, modulus: m })
    }

    pub fn u(&self) -> &Word {
        &self.u
    }

    pub fn v(&self) -> &Word {
        &self.v
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }
}

// The star conditions without the canonicity requirement; the completion
// construction can produce zero-padded words that satisfy them verbatim.
fn raw_star(u: &Word, v: &Word, m: Modulus) -> bool {
    if u.is_empty() && v.is_empty() {
        return false;
    }
    if v.len() > u.len() {
        return false;
    }
    if binom_words_mod(u, v, m) != m.r() {
        return false;
    }
    !is_subword(&v.extended(0), u) && !is_subword(&v.extended(1), u)
}

/// Decides the star condition for canonical words.
///
/// Panics if either word is not canonical; the condition is defined on L
/// only.
pub fn satisfies_star(u: &Word, v: &Word, m: Modulus) -> bool {
    assert!(u.is_canonical(), "u must be canonical: {u}");
    assert!(v.is_canonical(), "v must be canonical: {v}");
    raw_star(u, v, m)
}

/// All star pairs with |u| <= max_len, sorted by (|u|, u, |v|, v) in the
/// genealogical order on each component. Deterministic; enumeration is
/// parallel over u with an order-preserving merge.
pub fn enumerate_star_pairs(max_len: u32, m: Modulus) -> Result<Vec<StarPair>> {
    enumerate_star_pairs_with_cap(max_len, m, LEN_CAP)
}

pub fn enumerate_star_pairs_with_cap(max_len: u32, m: Modulus, cap: u32) -> Result<Vec<StarPair>> {
    if max_len > cap {
        return Err(Error::CapExceeded {
            what: "enumeration length",
            value: max_len,
            cap,
        });
    }
    if max_len == 0 {
        return Ok(Vec::new());
    }
    // u = ε pairs only with v = ε, which is excluded; start at index 1.
    let per_u: Vec<Vec<StarPair>> = (1u64..1 << max_len)
        .into_par_iter()
        .map(|ui| {
            let u = rep2(ui);
            let mut found = Vec::new();
            for vi in 1..1u64 << u.len() {
                let v = rep2(vi);
                if v.len() > u.len() || !is_subword(&v, &u) {
                    continue;
                }
                if is_subword(&v.extended(0), &u) || is_subword(&v.extended(1), &u) {
                    continue;
                }
                if binom_words_mod(&u, &v, m) == m.r() {
                    found.push(StarPair {
                        u: u.clone(),
                        v,
                        modulus: m,
                    });
                }
            }
            found
        })
        .collect();
    Ok(per_u.into_iter().flatten().collect())
}

/// The two one-letter extensions (u0, v0) and (u1, v1) of a star pair.
/// Both are re-verified rather than trusted.
pub fn extend_star(pair: &StarPair) -> Result<(StarPair, StarPair)> {
    let m = pair.modulus;
    let zero = StarPair::new(pair.u.extended(0), pair.v.extended(0), m)?;
    let one = StarPair::new(pair.u.extended(1), pair.v.extended(1), m)?;
    Ok((zero, one))
}

/// Checks that binom(u, vw) = 0 for every nonempty word w with
/// |w| <= max_w. Always true for a star pair; exposed as a harness for the
/// property suite.
pub fn zero_prolongation_check(pair: &StarPair, max_w: u32) -> bool {
    for len in 1..=max_w {
        for mask in 0u64..1 << len {
            let mut vw = pair.v.clone();
            for i in (0..len).rev() {
                vw = vw.extended(((mask >> i) & 1) as u8);
            }
            if is_subword(&vw, &pair.u) {
                return false;
            }
        }
    }
    true
}

fn one_zeros_one(zeros: usize) -> Word {
    let mut bits = Vec::with_capacity(zeros + 2);
    bits.push(1);
    bits.extend(std::iter::repeat_n(0, zeros));
    bits.push(1);
    Word::from_bits(bits)
}

/// The gap family (1 0^{8n+4+rr} 1, 1 0^{8n+rr} 1) together with its star
/// verdict mod 2; the verdict is true exactly when rr <= 3. These pairs
/// accumulate at (1/32, 1/2).
pub fn family_gap(n: u32, rr: u32) -> (Word, Word, bool) {
    assert!(n <= 8, "family index {n} too large");
    assert!(rr <= 7, "residue offset {rr} out of range");
    let u = one_zeros_one((8 * n + 4 + rr) as usize);
    let v = one_zeros_one((8 * n + rr) as usize);
    let star = satisfies_star(&u, &v, Modulus::odd());
    (u, v, star)
}

fn count_zeros(w: &Word) -> usize {
    w.bits().iter().filter(|&&b| b == 0).count()
}

fn completion(u: &Word, v: &Word, zeros: usize) -> (Word, Word) {
    (
        u.extended_run(0, zeros).extended(1),
        v.extended_run(0, zeros).extended(1),
    )
}

/// Completes a pair with an odd coefficient to a star pair mod 2 by
/// appending 0^{2^k} 1 to both words.
///
/// The block must be long enough that no occurrence of the extended v can
/// close inside u: `2^k` has to exceed the number of zeroes in u (the
/// conservative choice k = ceil(log2 |u|) + 1 always works). The returned
/// pair is verified against the star conditions.
pub fn complete_to_star(u: &Word, v: &Word, k: u32) -> Result<(Word, Word)> {
    complete_with_block(u, v, Modulus::odd(), 1usize << k)
}

/// The mod-p analogue: appends 0^{p^k} 1 to a pair whose coefficient is
/// congruent to r.
pub fn complete_to_star_mod(u: &Word, v: &Word, k: u32, m: Modulus) -> Result<(Word, Word)> {
    let block = (m.p() as u64)
        .checked_pow(k)
        .filter(|&b| b <= 1 << 20)
        .ok_or_else(|| Error::BadCompletion(format!("block p^{k} too large")))?
        as usize;
    complete_with_block(u, v, m, block)
}

fn complete_with_block(u: &Word, v: &Word, m: Modulus, block: usize) -> Result<(Word, Word)> {
    if binom_words_mod(u, v, m) != m.r() {
        return Err(Error::BadCompletion(format!(
            "binom({u}, {v}) is not congruent to {} mod {}",
            m.r(),
            m.p()
        )));
    }
    if block <= count_zeros(u) {
        return Err(Error::BadCompletion(format!(
            "zero block {block} does not exceed the {} zeroes of {u}",
            count_zeros(u)
        )));
    }
    let (uk, vk) = completion(u, v, block);
    if !raw_star(&uk, &vk, m) {
        return Err(Error::BadCompletion(format!(
            "completed pair ({uk}, {vk}) failed verification"
        )));
    }
    Ok((uk, vk))
}

#[derive(Serialize)]
struct PairRecord<'a> {
    u: &'a Word,
    v: &'a Word,
    p: u32,
    r: u32,
}

/// JSON array of pair records with fields u, v, p, r.
pub fn pairs_to_json(pairs: &[StarPair]) -> String {
    let records: Vec<_> = pairs
        .iter()
        .map(|s| PairRecord {
            u: &s.u,
            v: &s.v,
            p: s.modulus.p(),
            r: s.modulus.r(),
        })
        .collect();
    serde_json::to_string(&records).expect("pairs serialize")
}

/// CSV with header u,v,p,r.
pub fn pairs_to_csv(pairs: &[StarPair]) -> String {
    let mut out = String::from("u,v,p,r\n");
    for s in pairs {
        out.push_str(&format!(
            "{},{},{},{}\n",
            s.u.digits(),
            s.v.digits(),
            s.modulus.p(),
            s.modulus.r()
        ));
    }
    out
}
