//! Binomial coefficients of binary words, the generalized Pascal triangle
//! they induce modulo a prime, and the fractal limit of its normalized
//! colorings.
//!
//! The binomial coefficient of two finite words counts the occurrences of
//! the second as a scattered subword of the first; on the words 1^m it
//! collapses to the integer binomial coefficient. Arranging the
//! coefficients of all binary expansions in genealogical order gives a
//! triangle that extends Pascal's, and reducing it modulo a prime colors
//! a 2^n × 2^n lattice. Normalized into the unit square, these colorings
//! converge in the Hausdorff metric; the limit is the closure of a union
//! of slope-1 segments indexed by pairs with a stable residue (the "star"
//! pairs), spread across the square by a halving homothety and a vertical
//! doubling map.
//!
//! The crate provides:
//!
//! - exact and modular word binomials, the base-2 word/integer codec, and
//!   Lucas' theorem ([`word`]);
//! - dense residue grids, square extraction, and exact combinatorial
//!   counters ([`triangle`]);
//! - the star condition: decision, enumeration, closure, completion, and
//!   explicit families ([`star`]);
//! - exact dyadic geometry for the segment approximants and their images
//!   under the two maps ([`dyadic`], [`geom`], [`fractal`]);
//! - a deterministic Hausdorff-distance estimator with a certified
//!   sampling bound ([`mod@hausdorff`]);
//! - bit-exact P1 bitmaps and SVG drawings ([`render`]).
//!
//! The `examples/` directory walks through each capability; the
//! `wordpascal` binary exposes the same operations as subcommands.
//!
//! ```
//! use wordpascal::{build_a0, build_an, build_un_pieces, hausdorff, Modulus, PieceSet};
//!
//! let m = Modulus::odd();
//! let base = build_a0(4, m)?;
//! let approximant = PieceSet::from_segments(&build_an(&base, 2))?;
//! let coloring = build_un_pieces(4, m)?;
//! let d = hausdorff(&coloring, &approximant, 8)?;
//! assert!(d.estimate > 0.0 && d.error_bound < 0.01);
//! # Ok::<(), wordpascal::Error>(())
//! ```

pub mod dyadic;
pub mod error;
pub mod fractal;
pub mod geom;
pub mod hausdorff;
pub mod render;
pub mod star;
pub mod triangle;
pub mod word;

pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use fractal::{
    apply_c, apply_h, build_a0, build_an, build_un_pieces, maximal_segments, segment_for,
    segment_nesting, stabilisation_check, Nesting, PieceSet, SegmentSet,
};
pub use geom::{Box2, Point, Segment};
pub use hausdorff::{
    convergence_csv, convergence_rows, hausdorff, ConvergenceRow, HausdorffEstimate,
};
pub use render::{clip_pieces, render_grid_pbm, render_pieces_svg, render_zoom, RasterImage};
pub use star::{
    complete_to_star, complete_to_star_mod, enumerate_star_pairs, extend_star, family_gap,
    satisfies_star, zero_prolongation_check, StarPair,
};
pub use triangle::{
    build_grid, build_vn_by_maps, count_positive_pairs, count_unit_squares, counters_csv, squares,
    ResidueGrid, SquareSet,
};
pub use word::{
    binom_int_lucas, binom_words, binom_words_mod, is_subword, nth_word, rep2, sum_of_digits_base2,
    val2, Modulus, Word,
};
