//! Renderers: plain-text bitmaps of residue grids and vector documents of
//! piece sets.
//!
//! Bitmaps use the P1 format, chosen because it is human-diffable and
//! bit-exact. The top bitmap row is grid row 0 (the empty word), i.e. the
//! table orientation; relative to mathematical axes with y upward this is
//! a vertical flip. Vector documents map mathematical coordinates with
//! the same flip (y up on screen).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fractal::PieceSet;
use crate::geom::{Box2, Point, Segment};
use crate::triangle::ResidueGrid;

/// A width × height bitmap, row-major, one u8 bit per cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RasterImage {
    width: usize,
    height: usize,
    bits: Vec<u8>,
}

impl RasterImage {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn bit(&self, row: usize, col: usize) -> u8 {
        self.bits[row * self.width + col]
    }

    /// Serializes as plain-text P1: header line, dimension line, then one
    /// line per row with single-space-separated bits.
    pub fn to_p1(&self) -> String {
        let mut out = String::with_capacity(self.bits.len() * 2 + 16);
        out.push_str("P1\n");
        let _ = writeln!(out, "{} {}", self.width, self.height);
        for row in 0..self.height {
            for col in 0..self.width {
                if col > 0 {
                    out.push(' ');
                }
                out.push(char::from(b'0' + self.bit(row, col)));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the exact format written by [`RasterImage::to_p1`].
    pub fn parse_p1(text: &str) -> Result<RasterImage> {
        let mut lines = text.lines();
        match lines.next() {
            Some("P1") => {}
            other => return Err(Error::BadBitmap(format!("bad magic {other:?}"))),
        }
        let dims = lines
            .next()
            .ok_or_else(|| Error::BadBitmap("missing dimensions".into()))?;
        let mut parts = dims.split_whitespace();
        let width: usize = parts
            .next()
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| Error::BadBitmap("bad width".into()))?;
        let height: usize = parts
            .next()
            .and_then(|h| h.parse().ok())
            .ok_or_else(|| Error::BadBitmap("bad height".into()))?;
        let mut bits = Vec::with_capacity(width * height);
        for row in 0..height {
            let line = lines
                .next()
                .ok_or_else(|| Error::BadBitmap(format!("missing row {row}")))?;
            for token in line.split(' ') {
                match token {
                    "0" => bits.push(0),
                    "1" => bits.push(1),
                    _ => return Err(Error::BadBitmap(format!("bad bit {token:?}"))),
                }
            }
            if bits.len() != (row + 1) * width {
                return Err(Error::BadBitmap(format!("row {row} has wrong length")));
            }
        }
        Ok(RasterImage {
            width,
            height,
            bits,
        })
    }

    pub fn flip_vertical(&self) -> RasterImage {
        let mut bits = Vec::with_capacity(self.bits.len());
        for row in (0..self.height).rev() {
            bits.extend_from_slice(&self.bits[row * self.width..(row + 1) * self.width]);
        }
        RasterImage {
            width: self.width,
            height: self.height,
            bits,
        }
    }
}

/// Renders the cells congruent to r as set bits. Bitmap row k is grid row
/// k, so the empty-word row is at the top as in the printed table.
pub fn render_grid_pbm(grid: &ResidueGrid, r: u32) -> Result<RasterImage> {
    if r == 0 || r >= grid.p() {
        return Err(Error::ResidueRange { r, p: grid.p() });
    }
    let size = grid.size();
    let mut bits = Vec::with_capacity(size * size);
    for i in 0..size {
        for &cell in grid.row(i) {
            bits.push(u8::from(cell as u32 == r));
        }
    }
    Ok(RasterImage {
        width: size,
        height: size,
        bits,
    })
}

// Window-to-canvas map with the vertical flip.
struct Canvas {
    window: Box2,
    px: f64,
}

impl Canvas {
    fn map(&self, p: &Point) -> (f64, f64) {
        let wx = (self.window.max.x - self.window.min.x).to_f64();
        let wy = (self.window.max.y - self.window.min.y).to_f64();
        let x = (p.x - self.window.min.x).to_f64() / wx;
        let y = (p.y - self.window.min.y).to_f64() / wy;
        (x * self.px, (1.0 - y) * self.px)
    }
}

fn svg_document(
    boxes: &[Box2],
    segments: &[Segment],
    window: &Box2,
    stroke_width: f64,
    canvas_px: u32,
) -> String {
    let canvas = Canvas {
        window: *window,
        px: canvas_px as f64,
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        canvas_px
    );
    for b in boxes {
        let (x0, y1) = canvas.map(&b.min);
        let (x1, y0) = canvas.map(&b.max);
        let _ = writeln!(
            out,
            r#"<rect x="{x0}" y="{y0}" width="{}" height="{}" fill="black"/>"#,
            x1 - x0,
            y1 - y0
        );
    }
    for s in segments {
        let (x1, y1) = canvas.map(&s.a);
        let (x2, y2) = canvas.map(&s.b);
        let _ = writeln!(
            out,
            r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="{stroke_width}"/>"#
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Vector document of a piece set over the unit square, y flipped for
/// screen coordinates. Elements are emitted in the source order, boxes
/// before segments.
pub fn render_pieces_svg(p: &PieceSet, stroke_width: f64, canvas_px: u32) -> String {
    svg_document(
        p.boxes(),
        p.segments(),
        &Box2::unit(),
        stroke_width,
        canvas_px,
    )
}

/// Exact clip of a piece set to a closed window; degenerate (zero-area or
/// zero-length) clips are dropped.
pub fn clip_pieces(p: &PieceSet, window: &Box2) -> (Vec<Box2>, Vec<Segment>) {
    let boxes = p
        .boxes()
        .iter()
        .filter_map(|b| b.intersect(window))
        .filter(|b| !b.is_degenerate())
        .collect();
    let segments = p
        .segments()
        .iter()
        .filter_map(|s| s.clip_to_box(window))
        .collect();
    (boxes, segments)
}

/// Clips to the window exactly, then renders the window onto the canvas.
/// A window that misses every piece yields a document with no elements;
/// a zero-area window is an error.
pub fn render_zoom(p: &PieceSet, window: &Box2, canvas_px: u32) -> Result<String> {
    if window.is_degenerate() {
        return Err(Error::EmptyWindow);
    }
    let (boxes, segments) = clip_pieces(p, window);
    Ok(svg_document(&boxes, &segments, window, 1.0, canvas_px))
}
