//! SVG figures: the lattice walk of a word, and the cell diagram with cells
//! tilted by 45 degrees.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::word::Step;

const UNIT: f64 = 12.0;
const MARGIN: f64 = 10.0;
const CELL_OPACITY: f64 = 0.4;

/// Number of cells over each unit square `(x, y)` (lower-left corner).
///
/// The boundary of a fish is walked counterclockwise and its cells are
/// mapped to lattice squares preserving orientation, so the winding number
/// of the walk around a square counts the cells lying on it.
pub fn cell_multiplicities(w: &[Step]) -> BTreeMap<(i64, i64), usize> {
    // per row: +1 at x for N steps, -1 for S steps; a square counts the
    // vertical steps strictly to its right
    let mut rows: BTreeMap<i64, BTreeMap<i64, i64>> = BTreeMap::new();
    let (mut x, mut y) = (0i64, 0i64);
    for &s in w {
        match s {
            Step::N => *rows.entry(y).or_default().entry(x).or_default() += 1,
            Step::S => *rows.entry(y - 1).or_default().entry(x).or_default() -= 1,
            _ => {}
        }
        let (dx, dy) = s.delta();
        x += dx;
        y += dy;
    }
    let mut out = BTreeMap::new();
    for (y, marks) in rows {
        let marks: Vec<(i64, i64)> = marks.into_iter().rev().collect();
        let mut winding = 0;
        for pair in marks.windows(2) {
            let ((x, d), (next, _)) = (pair[0], pair[1]);
            winding += d;
            if winding > 0 {
                for a in next..x {
                    out.insert((a, y), winding as usize);
                }
            }
        }
    }
    out
}

struct Canvas {
    body: String,
    min: (f64, f64),
    max: (f64, f64),
}

impl Canvas {
    fn new() -> Self {
        Canvas { body: String::new(), min: (f64::MAX, f64::MAX), max: (f64::MIN, f64::MIN) }
    }

    fn see(&mut self, p: (f64, f64)) {
        self.min = (self.min.0.min(p.0), self.min.1.min(p.1));
        self.max = (self.max.0.max(p.0), self.max.1.max(p.1));
    }

    fn points(&mut self, pts: &[(f64, f64)]) -> String {
        let mut s = String::new();
        for &p in pts {
            self.see(p);
            // adding 0.0 turns -0.0 into 0.0
            write!(s, "{:.2},{:.2} ", p.0 + 0.0, p.1 + 0.0).unwrap();
        }
        s.pop();
        s
    }

    fn width(&self) -> f64 {
        if self.min.0 > self.max.0 {
            0.0
        } else {
            self.max.0 - self.min.0
        }
    }

    fn height(&self) -> f64 {
        if self.min.1 > self.max.1 {
            0.0
        } else {
            self.max.1 - self.min.1
        }
    }
}

fn walk_points(w: &[Step], at: impl Fn(i64, i64) -> (f64, f64)) -> Vec<(f64, f64)> {
    let (mut x, mut y) = (0, 0);
    let mut pts = vec![at(0, 0)];
    for s in w {
        let (dx, dy) = s.delta();
        x += dx;
        y += dy;
        pts.push(at(x, y));
    }
    pts
}

fn upright(x: i64, y: i64) -> (f64, f64) {
    (x as f64 * UNIT, -(y as f64) * UNIT)
}

/// `E` goes up and to the right, `N` up and to the left.
fn tilted(x: i64, y: i64) -> (f64, f64) {
    let h = UNIT / std::f64::consts::SQRT_2;
    ((x - y) as f64 * h, -((x + y) as f64) * h)
}

fn walk_panel(w: &[Step]) -> Canvas {
    let mut c = Canvas::new();
    let pts = walk_points(w, upright);
    let pts = c.points(&pts);
    write!(c.body, r##"<polyline points="{pts}" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>"##).unwrap();
    c
}

fn cell_panel(w: &[Step]) -> Canvas {
    let mut c = Canvas::new();
    for ((x, y), mult) in cell_multiplicities(w) {
        let corners = [tilted(x, y), tilted(x + 1, y), tilted(x + 1, y + 1), tilted(x, y + 1)];
        let pts = c.points(&corners);
        for _ in 0..mult {
            write!(
                c.body,
                r##"<polygon points="{pts}" fill="#e07b39" fill-opacity="{CELL_OPACITY}" stroke="#7a3a10" stroke-width="0.5"/>"##
            )
            .unwrap();
        }
    }
    let pts = walk_points(w, tilted);
    let pts = c.points(&pts);
    write!(c.body, r##"<polyline points="{pts}" fill="none" stroke="#222" stroke-width="1"/>"##).unwrap();
    c
}

/// Both panels side by side: the walk on the left, the cells on the right.
pub fn render_svg(w: &[Step]) -> String {
    let panels = [walk_panel(w), cell_panel(w)];
    let height = panels.iter().map(Canvas::height).fold(0.0, f64::max) + 2.0 * MARGIN;
    let width: f64 = panels.iter().map(|p| p.width() + 2.0 * MARGIN).sum();
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    let mut left = 0.0;
    for p in &panels {
        let (dx, dy) =
            if p.min.0 > p.max.0 { (left + MARGIN, MARGIN) } else { (left + MARGIN - p.min.0, MARGIN - p.min.1) };
        writeln!(out, r#"<g transform="translate({dx:.2},{dy:.2})">{}</g>"#, p.body).unwrap();
        left += p.width() + 2.0 * MARGIN;
    }
    out.push_str("</svg>\n");
    out
}
