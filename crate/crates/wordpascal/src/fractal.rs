//! Fractal approximants: base segments of star pairs, the halving and
//! vertical-doubling maps, approximant unions, segment nesting, and the
//! stabilisation identity on clipped strips.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::geom::{Box2, Point, Segment};
use crate::star::{enumerate_star_pairs, StarPair};
use crate::triangle::{build_grid, squares, SquareSet};
use crate::word::{val2, Modulus, Word};

/// The slope-1 base segment of a pair (u, v) with |u| >= |v| >= 1: its
/// lower endpoint is (0.0^{|u|-|v|}v, 0.u) and it spans 2^{-|u|} in each
/// coordinate.
pub fn segment_for(u: &Word, v: &Word) -> Result<Segment> {
    if !u.is_canonical() {
        return Err(Error::NotCanonical(u.digits()));
    }
    if !v.is_canonical() {
        return Err(Error::NotCanonical(v.digits()));
    }
    if v.is_empty() || v.len() > u.len() {
        return Err(Error::BadSegmentWords {
            u: u.to_string(),
            v: v.to_string(),
        });
    }
    let e = u.len() as u32;
    let step = Dyadic::pow2(-(e as i32));
    let a = Point::new(
        Dyadic::new(val2(v) as i64, e),
        Dyadic::new(val2(u) as i64, e),
    );
    let b = Point::new(a.x + step, a.y + step);
    Ok(Segment::new(a, b))
}

/// Which approximant a segment set is: star pairs up to `max_len` for
/// modulus (p, r), transformed up to depth `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub max_len: u32,
    pub p: u32,
    pub r: u32,
    pub n: u32,
}

/// A finite, deterministically ordered list of segments.
#[derive(Clone, Debug, Serialize)]
pub struct SegmentSet {
    provenance: Provenance,
    segments: Vec<Segment>,
}

impl SegmentSet {
    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("segment set serializes")
    }
}

/// The truncation of the base fractal set to star pairs with
/// |u| <= max_len. Omitted segments have length at most
/// sqrt(2)·2^-(max_len+1).
pub fn build_a0(max_len: u32, m: Modulus) -> Result<SegmentSet> {
    let pairs = enumerate_star_pairs(max_len, m)?;
    let segments = pairs
        .iter()
        .map(|s| segment_for(s.u(), s.v()).expect("star pairs have |u| >= |v| >= 1"))
        .collect();
    Ok(SegmentSet {
        provenance: Provenance {
            max_len,
            p: m.p(),
            r: m.r(),
            n: 0,
        },
        segments,
    })
}

/// The union of h^j(c^i(a0)) over 0 <= j <= i <= n, with exact duplicates
/// removed, in (i, j, source) order.
pub fn build_an(a0: &SegmentSet, n: u32) -> SegmentSet {
    let mut seen = HashSet::new();
    let mut segments = Vec::new();
    for i in 0..=n {
        for j in 0..=i {
            for s in &a0.segments {
                let t = s.halved(i).y_doubled(j);
                if seen.insert(t) {
                    segments.push(t);
                }
            }
        }
    }
    SegmentSet {
        provenance: Provenance { n, ..a0.provenance },
        segments,
    }
}

/// A finite union of boxes and segments, the operand of the Hausdorff
/// estimator and the renderers. Always nonempty.
#[derive(Clone, Debug)]
pub struct PieceSet {
    boxes: Vec<Box2>,
    segments: Vec<Segment>,
}

impl PieceSet {
    pub fn new(boxes: Vec<Box2>, segments: Vec<Segment>) -> Result<PieceSet> {
        if boxes.is_empty() && segments.is_empty() {
            return Err(Error::EmptyPieces);
        }
        Ok(PieceSet { boxes, segments })
    }

    pub fn from_squares(set: &SquareSet) -> Result<PieceSet> {
        if set.is_empty() {
            return Err(Error::EmptyPieces);
        }
        let e = set.side_exp();
        let boxes = set
            .anchors()
            .iter()
            .map(|&(x, y)| {
                let min = Point::new(Dyadic::new(x as i64, e), Dyadic::new(y as i64, e));
                let max = Point::new(Dyadic::new(x as i64 + 1, e), Dyadic::new(y as i64 + 1, e));
                Box2::new(min, max)
            })
            .collect();
        Ok(PieceSet {
            boxes,
            segments: Vec::new(),
        })
    }

    pub fn from_segments(set: &SegmentSet) -> Result<PieceSet> {
        if set.is_empty() {
            return Err(Error::EmptyPieces);
        }
        Ok(PieceSet {
            boxes: Vec::new(),
            segments: set.segments.clone(),
        })
    }

    pub fn boxes(&self) -> &[Box2] {
        &self.boxes
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn piece_count(&self) -> usize {
        self.boxes.len() + self.segments.len()
    }
}

/// Applies the ratio-1/2 homothety centered at the origin `times` times.
pub fn apply_c(s: &PieceSet, times: u32) -> PieceSet {
    PieceSet {
        boxes: s.boxes.iter().map(|b| b.halved(times)).collect(),
        segments: s.segments.iter().map(|g| g.halved(times)).collect(),
    }
}

/// Doubles all y-coordinates `times` times. The result must stay in the
/// unit square; callers compose at most as many doublings as halvings.
pub fn apply_h(s: &PieceSet, times: u32) -> Result<PieceSet> {
    let boxes: Vec<_> = s.boxes.iter().map(|b| b.y_doubled(times)).collect();
    let segments: Vec<_> = s.segments.iter().map(|g| g.y_doubled(times)).collect();
    let top = Dyadic::ONE;
    let ok = boxes.iter().all(|b| b.max.y <= top) && segments.iter().all(|g| g.b.y <= top);
    if !ok {
        return Err(Error::HeightRange);
    }
    Ok(PieceSet { boxes, segments })
}

/// U_{n,r} as a piece set: the square extraction of the depth-n grid,
/// normalized into the unit square by n halvings.
pub fn build_un_pieces(n: u32, m: Modulus) -> Result<PieceSet> {
    let grid = build_grid(n, m.p())?;
    let t_n = PieceSet::from_squares(&squares(&grid, m.r())?)?;
    Ok(apply_c(&t_n, n))
}

/// Relative position of two base segments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nesting {
    /// The first contains the second (equality included).
    Contains,
    /// The second strictly contains the first.
    Contained,
    /// Intersection empty or a single shared endpoint.
    DisjointOrEndpoint,
}

// Word-level containment criterion: (s, t) extends (u, v) by tails of
// equal length.
fn word_criterion(outer: &StarPair, inner: &StarPair) -> bool {
    inner.u().starts_with(outer.u())
        && inner.v().starts_with(outer.v())
        && inner.u().len() - outer.u().len() == inner.v().len() - outer.v().len()
}

/// Classifies the relative position of the base segments of two star
/// pairs. Computed geometrically on exact dyadics and cross-checked
/// against the word-level criterion; the two must agree, and
/// non-nested segments may only meet at a common endpoint.
pub fn segment_nesting(first: &StarPair, second: &StarPair) -> Nesting {
    let s1 = segment_for(first.u(), first.v()).expect("star pair words");
    let s2 = segment_for(second.u(), second.v()).expect("star pair words");

    let forward = s1.contains_segment(&s2);
    let backward = s2.contains_segment(&s1);
    assert_eq!(forward, word_criterion(first, second), "criterion mismatch");
    assert_eq!(
        backward,
        word_criterion(second, first),
        "criterion mismatch"
    );

    if forward {
        return Nesting::Contains;
    }
    if backward {
        return Nesting::Contained;
    }
    // Same line: the overlap must be empty or a shared endpoint.
    if s1.line_intercept() == s2.line_intercept() {
        let lo = s1.a.x.max(s2.a.x);
        let hi = s1.b.x.min(s2.b.x);
        assert!(lo >= hi, "segments overlap without nesting");
        if lo == hi {
            let meet = (s1.a.x == hi || s1.b.x == hi) && (s2.a.x == hi || s2.b.x == hi);
            assert!(meet, "single intersection point is not a shared endpoint");
        }
    }
    Nesting::DisjointOrEndpoint
}

/// Drops every segment strictly contained in another segment of the set.
pub fn maximal_segments(set: &SegmentSet) -> SegmentSet {
    // Containment needs a shared line; group by (slope, intercept).
    let mut groups: BTreeMap<(u32, Dyadic), Vec<usize>> = BTreeMap::new();
    for (idx, s) in set.segments.iter().enumerate() {
        groups
            .entry((s.slope_exp(), s.line_intercept()))
            .or_default()
            .push(idx);
    }
    let mut keep = vec![true; set.segments.len()];
    for members in groups.values() {
        for &i in members {
            for &j in members {
                if i != j
                    && set.segments[j] != set.segments[i]
                    && set.segments[j].contains_segment(&set.segments[i])
                {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    SegmentSet {
        provenance: set.provenance,
        segments: set
            .segments
            .iter()
            .enumerate()
            .filter(|(i, _)| keep[*i])
            .map(|(_, s)| *s)
            .collect(),
    }
}

// Canonical description of a clipped segment union: per line, the merged
// closed x-intervals in increasing order. Degenerate (single-point) clips
// are dropped: they are exactly the boundary touches that the closure of
// the full set would supply from deeper terms.
type NormalForm = BTreeMap<(u32, Dyadic), Vec<(Dyadic, Dyadic)>>;

fn clipped_normal_form(set: &SegmentSet, x_lo: Dyadic) -> NormalForm {
    let mut lines: NormalForm = BTreeMap::new();
    for s in &set.segments {
        if let Some(c) = s.clip_x(x_lo, Dyadic::ONE) {
            lines
                .entry((c.slope_exp(), c.line_intercept()))
                .or_default()
                .push((c.a.x, c.b.x));
        }
    }
    for intervals in lines.values_mut() {
        intervals.sort();
        let mut merged: Vec<(Dyadic, Dyadic)> = Vec::with_capacity(intervals.len());
        for &(a, b) in intervals.iter() {
            match merged.last_mut() {
                Some(last) if a <= last.1 => last.1 = last.1.max(b),
                _ => merged.push((a, b)),
            }
        }
        *intervals = merged;
    }
    lines
}

/// Verifies the stabilisation identity: the approximants of depths
/// `m_small` and `n_large` agree as point sets on the strip
/// [1/2^{m_small+1}, 1] × [0, 1].
pub fn stabilisation_check(a0: &SegmentSet, m_small: u32, n_large: u32) -> bool {
    assert!(m_small <= n_large, "depths must be ordered");
    let lo = Dyadic::pow2(-(m_small as i32 + 1));
    let small = clipped_normal_form(&build_an(a0, m_small), lo);
    let large = clipped_normal_form(&build_an(a0, n_large), lo);
    small == large
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::rep2;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn d(num: i64, exp: u32) -> Dyadic {
        Dyadic::new(num, exp)
    }

    fn pair(u: &str, v: &str) -> StarPair {
        StarPair::new(w(u), w(v), Modulus::odd()).unwrap()
    }

    #[test]
    fn segment_examples() {
        let s = segment_for(&w("1"), &w("1")).unwrap();
        assert_eq!(s.a, Point::new(d(1, 1), d(1, 1)));
        assert_eq!(s.b, Point::new(d(1, 0), d(1, 0)));

        let s = segment_for(&w("1101"), &w("111")).unwrap();
        assert_eq!(s.a, Point::new(d(7, 4), d(13, 4)));
        assert_eq!(s.b.x - s.a.x, d(1, 4));

        let s = segment_for(&w("101"), &w("11")).unwrap();
        assert_eq!(s.a, Point::new(d(3, 3), d(5, 3)));
    }

    #[test]
    fn segment_preconditions() {
        assert!(segment_for(&w("1"), &Word::empty()).is_err());
        assert!(segment_for(&w("1"), &w("11")).is_err());
        assert!(segment_for(&w("01"), &w("1")).is_err());
    }

    #[test]
    fn base_segments_live_in_their_band() {
        let m = Modulus::odd();
        for p in enumerate_star_pairs(10, m).unwrap() {
            let s = segment_for(p.u(), p.v()).unwrap();
            let gap = (p.u().len() - p.v().len()) as i32;
            assert!(s.a.x >= Dyadic::pow2(-gap - 1), "{p:?}");
            assert!(s.b.x <= Dyadic::pow2(-gap), "left band");
            assert!(s.a.y >= d(1, 1) && s.b.y <= Dyadic::ONE);
            assert_eq!(s.slope_exp(), 0);
        }
    }

    #[test]
    fn map_examples() {
        let s11 = segment_for(&w("1"), &w("1")).unwrap();
        let a0 = PieceSet::new(Vec::new(), vec![s11]).unwrap();

        // c twice: endpoints (1/8,1/8) and (1/4,1/4).
        let c2 = apply_c(&a0, 2);
        assert_eq!(c2.segments()[0].a, Point::new(d(1, 3), d(1, 3)));
        assert_eq!(c2.segments()[0].b, Point::new(d(1, 2), d(1, 2)));

        // c then h: endpoints (1/4,1/2) and (1/2,1).
        let hc = apply_h(&apply_c(&a0, 1), 1).unwrap();
        assert_eq!(hc.segments()[0].a, Point::new(d(1, 2), d(1, 1)));
        assert_eq!(hc.segments()[0].b, Point::new(d(1, 1), d(1, 0)));

        // h^p(c^{p+j}(S_11)) has endpoints (2^-(p+j+1), 2^-(j+1)) and
        // (2^-(p+j), 2^-j).
        for p in 0..=4u32 {
            for j in 0..=4u32 {
                let t = apply_h(&apply_c(&a0, p + j), p).unwrap();
                let s = t.segments()[0];
                assert_eq!(
                    s.a,
                    Point::new(
                        Dyadic::pow2(-(p as i32 + j as i32 + 1)),
                        Dyadic::pow2(-(j as i32 + 1))
                    )
                );
                assert_eq!(
                    s.b,
                    Point::new(
                        Dyadic::pow2(-(p as i32 + j as i32)),
                        Dyadic::pow2(-(j as i32))
                    )
                );
            }
        }

        // times = 0 is the identity.
        let id = apply_h(&apply_c(&a0, 0), 0).unwrap();
        assert_eq!(id.segments()[0], s11);

        // Doubling straight out of the unit square is rejected.
        assert!(matches!(apply_h(&a0, 1), Err(Error::HeightRange)));
    }

    #[test]
    fn square_halving() {
        let grid = build_grid(0, 2).unwrap();
        let unit = PieceSet::from_squares(&squares(&grid, 1).unwrap()).unwrap();
        let halved = apply_c(&unit, 1);
        assert_eq!(halved.boxes()[0].max, Point::new(d(1, 1), d(1, 1)));
    }

    #[test]
    fn a0_truncations() {
        let m = Modulus::odd();
        assert!(build_a0(0, m).unwrap().is_empty());

        let a0 = build_a0(1, m).unwrap();
        assert_eq!(a0.len(), 1);
        assert_eq!(a0.segments()[0], segment_for(&w("1"), &w("1")).unwrap());
    }

    #[test]
    fn an_from_single_segment() {
        let m = Modulus::odd();
        let a0 = build_a0(1, m).unwrap();
        assert_eq!(build_an(&a0, 0).segments(), a0.segments());

        let a1 = build_an(&a0, 1);
        assert_eq!(a1.len(), 3);
        let s = a1.segments();
        assert_eq!(s[0], segment_for(&w("1"), &w("1")).unwrap());
        assert_eq!(s[1].a, Point::new(d(1, 2), d(1, 2))); // c(S)
        assert_eq!(s[1].b, Point::new(d(1, 1), d(1, 1)));
        assert_eq!(s[2].a, Point::new(d(1, 2), d(1, 1))); // h(c(S))
        assert_eq!(s[2].b, Point::new(d(1, 1), d(1, 0)));
    }

    #[test]
    fn an_transform_images_never_collide() {
        // Images of the same slope under different halving depths land in
        // disjoint coordinate bands, so deduplication keeps every
        // transform: (n+1)(n+2)/2 copies of the base set.
        let a0 = build_a0(8, Modulus::odd()).unwrap();
        for n in [1u32, 2] {
            let an = build_an(&a0, n);
            let transforms = ((n + 1) * (n + 2) / 2) as usize;
            assert_eq!(an.len(), transforms * a0.len());
        }
    }

    #[test]
    fn un_pieces_examples() {
        let m = Modulus::odd();
        let u0 = build_un_pieces(0, m).unwrap();
        assert_eq!(u0.boxes(), &[Box2::unit()]);

        let u1 = build_un_pieces(1, m).unwrap();
        let mins: Vec<_> = u1.boxes().iter().map(|b| b.min).collect();
        assert_eq!(
            mins,
            vec![
                Point::new(d(0, 0), d(0, 0)),
                Point::new(d(0, 0), d(1, 1)),
                Point::new(d(1, 1), d(1, 1)),
            ]
        );
        for b in u1.boxes() {
            assert_eq!(b.max.x - b.min.x, d(1, 1));
        }

        let u3 = build_un_pieces(3, m).unwrap();
        assert_eq!(u3.boxes().len(), 22);
        assert_eq!(u3.boxes()[1].max.x - u3.boxes()[1].min.x, d(1, 3));
    }

    #[test]
    fn nesting_examples() {
        assert_eq!(
            segment_nesting(&pair("1101", "111"), &pair("110100", "11100")),
            Nesting::Contains
        );
        assert_eq!(
            segment_nesting(&pair("110100", "11100"), &pair("1101", "111")),
            Nesting::Contained
        );
        assert_eq!(
            segment_nesting(&pair("1", "1"), &pair("101", "11")),
            Nesting::DisjointOrEndpoint
        );
        let p = pair("101", "11");
        assert_eq!(segment_nesting(&p, &p), Nesting::Contains);
    }

    #[test]
    fn maximal_segment_examples() {
        let m = Modulus::odd();
        // (1101, 111) and its four |w| = 2 extensions.
        let mut pairs = vec![pair("1101", "111")];
        for w2 in ["00", "01", "10", "11"] {
            pairs.push(pair(&format!("1101{w2}"), &format!("111{w2}")));
        }
        let set = SegmentSet {
            provenance: Provenance {
                max_len: 6,
                p: 2,
                r: 1,
                n: 0,
            },
            segments: pairs
                .iter()
                .map(|p| segment_for(p.u(), p.v()).unwrap())
                .collect(),
        };
        let max = maximal_segments(&set);
        assert_eq!(max.segments(), &set.segments()[..1]);

        let single = SegmentSet {
            provenance: set.provenance,
            segments: vec![set.segments()[0]],
        };
        assert_eq!(maximal_segments(&single).segments(), single.segments());

        let two = SegmentSet {
            provenance: set.provenance,
            segments: vec![
                segment_for(&w("1"), &w("1")).unwrap(),
                segment_for(&w("101"), &w("11")).unwrap(),
            ],
        };
        assert_eq!(maximal_segments(&two).len(), 2);

        let _ = m;
    }

    #[test]
    fn stabilisation_small() {
        let a0 = build_a0(4, Modulus::odd()).unwrap();
        assert!(stabilisation_check(&a0, 0, 0));
        assert!(stabilisation_check(&a0, 0, 1));
        assert!(stabilisation_check(&a0, 2, 5));
        assert!(stabilisation_check(&a0, 3, 4));
    }

    #[test]
    fn accumulation_family_endpoints() {
        // Lower endpoints (1/32 + 2^-m, 1/2 + 2^-m) with m = 8n + 6 + r.
        for n in 0..=3u32 {
            for r in 0..=3u32 {
                let (u, v, star) = crate::star::family_gap(n, r);
                assert!(star);
                let s = segment_for(&u, &v).unwrap();
                let m = (8 * n + 6 + r) as i32;
                assert_eq!(s.a.x, d(1, 5) + Dyadic::pow2(-m));
                assert_eq!(s.a.y, d(1, 1) + Dyadic::pow2(-m));
            }
        }
    }

    #[test]
    fn segment_set_json_roundtrippable_shape() {
        let a0 = build_a0(1, Modulus::odd()).unwrap();
        let json = a0.to_json();
        assert!(json.contains(r#""max_len":1"#));
        assert!(json.contains(r#""num":1"#));
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["segments"][0]["a"]["x"]["exp"], 1);
    }

    #[test]
    fn rep2_helper_consistency() {
        // build_a0 order is the enumeration order.
        let m = Modulus::odd();
        let a0 = build_a0(4, m).unwrap();
        let pairs = enumerate_star_pairs(4, m).unwrap();
        assert_eq!(a0.len(), pairs.len());
        for (s, p) in a0.segments().iter().zip(&pairs) {
            assert_eq!(*s, segment_for(p.u(), p.v()).unwrap());
        }
        assert_eq!(a0.segments()[0], segment_for(&rep2(1), &rep2(1)).unwrap());
    }
}
