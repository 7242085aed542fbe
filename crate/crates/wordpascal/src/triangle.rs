//! The generalized Pascal triangle: residue grids, square sets, counters.
//!
//! Rows and columns are indexed by the genealogical enumeration of L, so
//! cell (i, j) holds the binomial coefficient of (w_i, w_j) reduced mod p.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{is_subword, rep2, Modulus};

/// Default cap on the grid depth n; a grid holds 4^n cells.
pub const DEPTH_CAP: u32 = 12;

/// The dense 2^n × 2^n table of residues `binom(w_i, w_j) mod p`.
///
/// All residue classes are stored; extraction of a single class happens in
/// [`squares`].
pub struct ResidueGrid {
    n: u32,
    p: u32,
    cells: Vec<u8>,
}

impl ResidueGrid {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Side length 2^n.
    pub fn size(&self) -> usize {
        1usize << self.n
    }

    /// Residue of binom(w_i, w_j) mod p.
    pub fn cell(&self, i: usize, j: usize) -> u8 {
        self.cells[i * self.size() + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        let size = self.size();
        &self.cells[i * size..(i + 1) * size]
    }
}

/// Builds the grid incrementally: the row of w_i = w_{i/2}·a follows from
/// the row of its prefix w_{i/2} by the one-letter recurrence
/// `binom(ua, vb) = binom(u, vb) + [a = b] binom(u, v)`, applied with
/// v = w_{j/2}, b = j mod 2. This is 4^n residue operations in total.
pub fn build_grid(n: u32, p: u32) -> Result<ResidueGrid> {
    build_grid_with_cap(n, p, DEPTH_CAP)
}

pub fn build_grid_with_cap(n: u32, p: u32, cap: u32) -> Result<ResidueGrid> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "grid depth",
            value: n,
            cap,
        });
    }
    // Residues are stored as u8.
    Modulus::new(p, 1)?;
    assert!(p <= 251, "grid residues are stored as bytes");

    let size = 1usize << n;
    let mut cells = vec![0u8; size * size];
    cells[0] = 1; // binom(ε, ε) = 1
    for i in 1..size {
        let (head, tail) = cells.split_at_mut(i * size);
        let parent = &head[(i >> 1) * size..(i >> 1) * size + size];
        let row = &mut tail[..size];
        let a = (i & 1) as u8;
        row[0] = 1; // binom(u, ε) = 1
        for j in 1..size {
            let mut val = parent[j] as u32;
            if a == (j & 1) as u8 {
                val += parent[j >> 1] as u32;
            }
            row[j] = (val % p) as u8;
        }
    }
    Ok(ResidueGrid { n, p, cells })
}

/// Reference implementation: every cell computed independently by the
/// full dynamic program. Used to validate the incremental build.
pub fn build_grid_bruteforce(n: u32, p: u32) -> Result<ResidueGrid> {
    if n > DEPTH_CAP {
        return Err(Error::CapExceeded {
            what: "grid depth",
            value: n,
            cap: DEPTH_CAP,
        });
    }
    let m = Modulus::new(p, 1)?;
    assert!(p <= 251);
    let size = 1usize << n;
    let words: Vec<_> = (0..size as u64).map(rep2).collect();
    let mut cells = vec![0u8; size * size];
    for i in 0..size {
        for j in 0..size {
            cells[i * size + j] = crate::word::binom_words_mod(&words[i], &words[j], m) as u8;
        }
    }
    Ok(ResidueGrid { n, p, cells })
}

/// A finite set of congruent squares on a dyadic lattice.
///
/// Anchors are lower-left corners in lattice units: the square for anchor
/// (x, y) occupies [x, x+1] × [y, y+1] scaled by 2^-side_exp. The set
/// T_{n,r} has `side_exp = 0` (unit squares at integer anchors);
/// normalizing to U_{n,r} sets `side_exp = n` and keeps the same anchors.
#[derive(Clone, Debug, Serialize)]
pub struct SquareSet {
    pub n: u32,
    pub p: u32,
    pub r: u32,
    #[serde(skip)]
    side_exp: u32,
    anchors: Vec<(u64, u64)>,
}

impl SquareSet {
    /// Squares have side 2^-side_exp.
    pub fn side_exp(&self) -> u32 {
        self.side_exp
    }

    pub fn anchors(&self) -> &[(u64, u64)] {
        &self.anchors
    }

    pub fn len(&self) -> usize {
        self.anchors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.anchors.is_empty()
    }

    /// U_{n,r} = T_{n,r} / 2^n.
    pub fn normalized(&self) -> SquareSet {
        SquareSet {
            side_exp: self.n,
            ..self.clone()
        }
    }

    /// JSON document with integer anchors (the pre-normalization lattice).
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            n: u32,
            p: u32,
            r: u32,
            anchors: &'a [(u64, u64)],
        }
        serde_json::to_string(&Doc {
            n: self.n,
            p: self.p,
            r: self.r,
            anchors: &self.anchors,
        })
        .expect("square set serializes")
    }
}

/// Extracts T_{n,r}: one unit square anchored at (val2(w_j), val2(w_i)) per
/// cell with residue r. Anchors are emitted in row-major cell order.
pub fn squares(grid: &ResidueGrid, r: u32) -> Result<SquareSet> {
    if r == 0 || r >= grid.p() {
        return Err(Error::ResidueRange { r, p: grid.p() });
    }
    let size = grid.size();
    let mut anchors = Vec::new();
    for i in 0..size {
        let row = grid.row(i);
        for (j, &cell) in row.iter().enumerate() {
            if cell as u32 == r {
                anchors.push((j as u64, i as u64));
            }
        }
    }
    Ok(SquareSet {
        n: grid.n(),
        p: grid.p(),
        r,
        side_exp: 0,
        anchors,
    })
}

/// Number of unit squares in T_n (p = 2, r = 1).
pub fn count_unit_squares(n: u32) -> u64 {
    assert!(n <= DEPTH_CAP, "depth {n} exceeds cap {DEPTH_CAP}");
    let grid = build_grid(n, 2).expect("depth within cap");
    squares(&grid, 1).expect("residue 1 valid").len() as u64
}

/// Number of pairs (u, v) in L_n × L_n with a positive binomial
/// coefficient; equals 3^n.
pub fn count_positive_pairs(n: u32) -> u64 {
    assert!(n <= DEPTH_CAP, "depth {n} exceeds cap {DEPTH_CAP}");
    let size = 1u64 << n;
    let words: Vec<_> = (0..size).map(rep2).collect();
    let mut count = 0u64;
    for i in 0..size as usize {
        // Pairs above the diagonal have |w_j| >= |w_i| with w_j != w_i,
        // hence a zero coefficient.
        for j in 0..=i {
            if is_subword(&words[j], &words[i]) {
                count += 1;
            }
        }
    }
    count
}

/// V_n built by the four-map recursion seeded with V_1 = {(0,1), (1,1)}:
/// (x,y) spawns (2x,2y), (2x+1,2y+1), (x,2y), (x,2y+1). Serves as an
/// independent oracle for the positive-pair count: #V_n = 2·3^{n-1}.
pub fn build_vn_by_maps(n: u32) -> BTreeSet<(u64, u64)> {
    assert!(n >= 1, "V_n is defined for n >= 1");
    let mut v: BTreeSet<(u64, u64)> = [(0, 1), (1, 1)].into_iter().collect();
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for &(x, y) in &v {
            next.insert((2 * x, 2 * y));
            next.insert((2 * x + 1, 2 * y + 1));
            next.insert((x, 2 * y));
            next.insert((x, 2 * y + 1));
        }
        v = next;
    }
    v
}

/// Brute-force V_n: pairs (x, y) with 2^{n-1} <= y < 2^n, 0 <= x <= y and
/// a positive binomial coefficient of (rep2(y), rep2(x)).
pub fn build_vn_bruteforce(n: u32) -> BTreeSet<(u64, u64)> {
    assert!(n >= 1);
    let mut v = BTreeSet::new();
    for y in 1u64 << (n - 1)..1u64 << n {
        let u = rep2(y);
        for x in 0..=y {
            if is_subword(&rep2(x), &u) {
                v.insert((x, y));
            }
        }
    }
    v
}

/// CSV table of the two counters for n = 1..=n_max.
pub fn counters_csv(n_max: u32) -> String {
    let mut out = String::from("n,squares,positive_pairs\n");
    for n in 1..=n_max {
        out.push_str(&format!(
            "{},{},{}\n",
            n,
            count_unit_squares(n),
            count_positive_pairs(n)
        ));
    }
    out
}
