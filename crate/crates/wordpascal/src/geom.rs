//! Exact points, axis-aligned boxes, and slope-2^j segments.

use serde::Serialize;

use crate::dyadic::Dyadic;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Debug)]
pub struct Point {
    pub x: Dyadic,
    pub y: Dyadic,
}

impl Point {
    pub fn new(x: Dyadic, y: Dyadic) -> Self {
        Point { x, y }
    }

    pub fn halved(&self, times: u32) -> Self {
        Point {
            x: self.x.halved(times),
            y: self.y.halved(times),
        }
    }

    pub fn y_doubled(&self, times: u32) -> Self {
        Point {
            x: self.x,
            y: self.y.mul_pow2(times as i32),
        }
    }
}

/// A closed axis-aligned box `[min.x, max.x] × [min.y, max.y]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Debug)]
pub struct Box2 {
    pub min: Point,
    pub max: Point,
}

impl Box2 {
    pub fn new(min: Point, max: Point) -> Self {
        assert!(min.x <= max.x && min.y <= max.y, "inverted box");
        Box2 { min, max }
    }

    pub fn unit() -> Self {
        Box2::new(
            Point::new(Dyadic::ZERO, Dyadic::ZERO),
            Point::new(Dyadic::ONE, Dyadic::ONE),
        )
    }

    /// Zero width or zero height.
    pub fn is_degenerate(&self) -> bool {
        self.min.x == self.max.x || self.min.y == self.max.y
    }

    pub fn halved(&self, times: u32) -> Self {
        Box2 {
            min: self.min.halved(times),
            max: self.max.halved(times),
        }
    }

    pub fn y_doubled(&self, times: u32) -> Self {
        Box2 {
            min: self.min.y_doubled(times),
            max: self.max.y_doubled(times),
        }
    }

    /// Exact intersection; `None` when the boxes do not meet. The result
    /// may be degenerate (a shared edge or corner).
    pub fn intersect(&self, other: &Box2) -> Option<Box2> {
        let min = Point::new(self.min.x.max(other.min.x), self.min.y.max(other.min.y));
        let max = Point::new(self.max.x.min(other.max.x), self.max.y.min(other.max.y));
        if min.x <= max.x && min.y <= max.y {
            Some(Box2 { min, max })
        } else {
            None
        }
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.min.x <= p.x && p.x <= self.max.x && self.min.y <= p.y && p.y <= self.max.y
    }

    pub fn contains_box(&self, other: &Box2) -> bool {
        self.contains_point(&other.min) && self.contains_point(&other.max)
    }
}

/// A closed segment with strictly increasing endpoints and slope 2^j, j >= 0.
///
/// Every segment in this crate arises from a base slope-1 segment by
/// halvings and vertical doublings, so the slope is always an exact power
/// of two; constructors check this.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        assert!(a.x < b.x && a.y < b.y, "segment endpoints must increase");
        let s = Segment { a, b };
        s.slope_exp();
        s
    }

    /// j such that the slope is exactly 2^j.
    pub fn slope_exp(&self) -> u32 {
        let dx = self.b.x - self.a.x;
        let dy = self.b.y - self.a.y;
        assert_eq!(dx.num(), dy.num(), "slope is not a power of two");
        assert!(dx.exp() >= dy.exp(), "slope below one");
        dx.exp() - dy.exp()
    }

    /// `y - 2^j x`, constant along the segment's line.
    pub fn line_intercept(&self) -> Dyadic {
        let j = self.slope_exp();
        self.a.y - self.a.x.mul_pow2(j as i32)
    }

    pub fn halved(&self, times: u32) -> Self {
        Segment {
            a: self.a.halved(times),
            b: self.b.halved(times),
        }
    }

    pub fn y_doubled(&self, times: u32) -> Self {
        Segment {
            a: self.a.y_doubled(times),
            b: self.b.y_doubled(times),
        }
    }

    /// The point of the segment's line at abscissa `x`.
    pub fn point_at_x(&self, x: Dyadic) -> Point {
        let j = self.slope_exp();
        let y = self.a.y + (x - self.a.x).mul_pow2(j as i32);
        Point::new(x, y)
    }

    /// The point of the segment's line at ordinate `y`.
    pub fn point_at_y(&self, y: Dyadic) -> Point {
        let j = self.slope_exp();
        let x = self.a.x + (y - self.a.y).mul_pow2(-(j as i32));
        Point::new(x, y)
    }

    /// Exact clip to `min.x <= x <= max.x`; degenerate results are dropped.
    pub fn clip_x(&self, lo: Dyadic, hi: Dyadic) -> Option<Segment> {
        let xa = self.a.x.max(lo);
        let xb = self.b.x.min(hi);
        if xa >= xb {
            return None;
        }
        Some(Segment {
            a: if xa == self.a.x {
                self.a
            } else {
                self.point_at_x(xa)
            },
            b: if xb == self.b.x {
                self.b
            } else {
                self.point_at_x(xb)
            },
        })
    }

    /// Exact clip to a closed box; degenerate results are dropped.
    pub fn clip_to_box(&self, w: &Box2) -> Option<Segment> {
        let s = self.clip_x(w.min.x, w.max.x)?;
        let ya = s.a.y.max(w.min.y);
        let yb = s.b.y.min(w.max.y);
        if ya >= yb {
            return None;
        }
        Some(Segment {
            a: if ya == s.a.y { s.a } else { s.point_at_y(ya) },
            b: if yb == s.b.y { s.b } else { s.point_at_y(yb) },
        })
    }

    /// True when `p` lies on the closed segment. Exact.
    pub fn contains_point(&self, p: &Point) -> bool {
        if p.x < self.a.x || p.x > self.b.x {
            return false;
        }
        self.point_at_x(p.x).y == p.y
    }

    /// True when `other` is contained in `self` (as point sets). Exact.
    pub fn contains_segment(&self, other: &Segment) -> bool {
        self.contains_point(&other.a) && self.contains_point(&other.b)
    }
}
