//! Lattice words over the step alphabet `{E, N, W, S}`.
//!
//! A word is read as a walk on the integer plane starting at the origin.
//! Fish, codes of tree-rooted maps and quadrant excursions are all carried
//! by [`LatticeWord`].

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use thiserror::Error;

/// A unit step of the square lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// `(1, 0)`
    E,
    /// `(0, 1)`
    N,
    /// `(-1, 0)`
    W,
    /// `(0, -1)`
    S,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::E, Step::N, Step::W, Step::S];

    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::E => (1, 0),
            Step::N => (0, 1),
            Step::W => (-1, 0),
            Step::S => (0, -1),
        }
    }

    /// Partner under word duality: `E <-> S`, `N <-> W`.
    pub fn dual(self) -> Step {
        match self {
            Step::E => Step::S,
            Step::S => Step::E,
            Step::N => Step::W,
            Step::W => Step::N,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
            Step::W => 'W',
            Step::S => 'S',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'E' => Some(Step::E),
            'N' => Some(Step::N),
            'W' => Some(Step::W),
            'S' => Some(Step::S),
            _ => None,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A lattice point; `longitude` is the x coordinate, `latitude` the y one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Point {
    pub longitude: i64,
    pub latitude: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { longitude: 0, latitude: 0 };

    pub fn new(longitude: i64, latitude: i64) -> Self {
        Point { longitude, latitude }
    }

    pub fn step(self, s: Step) -> Point {
        let (dx, dy) = s.delta();
        Point::new(self.longitude + dx, self.latitude + dy)
    }

    pub fn in_quadrant(self) -> bool {
        self.longitude >= 0 && self.latitude >= 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unexpected character {found:?} at index {index}")]
    Parse { index: usize, found: char },
    #[error("word is not a quadrant excursion")]
    NotExcursion,
}

/// Finite sequence of steps. Immutable once built.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeWord(Vec<Step>);

impl LatticeWord {
    pub fn empty() -> Self {
        LatticeWord(Vec::new())
    }

    pub fn from_steps(steps: Vec<Step>) -> Self {
        LatticeWord(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.0
    }

    pub fn count(&self, s: Step) -> usize {
        self.0.iter().filter(|&&t| t == s).count()
    }

    /// Positions of the walk after `0, 1, ..., len` steps.
    pub fn walk(&self) -> Vec<Point> {
        walk(&self.0)
    }

    pub fn concat(parts: &[&[Step]]) -> Self {
        LatticeWord(parts.concat())
    }
}

impl Deref for LatticeWord {
    type Target = [Step];

    fn deref(&self) -> &[Step] {
        &self.0
    }
}

impl From<Vec<Step>> for LatticeWord {
    fn from(steps: Vec<Step>) -> Self {
        LatticeWord(steps)
    }
}

impl FromIterator<Step> for LatticeWord {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        LatticeWord(iter.into_iter().collect())
    }
}

impl fmt::Display for LatticeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for LatticeWord {
    type Err = WordError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        parse_word(text)
    }
}

/// Parses a word; a single trailing newline is accepted.
pub fn parse_word(text: &str) -> Result<LatticeWord, WordError> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    text.chars().enumerate().map(|(index, c)| Step::from_char(c).ok_or(WordError::Parse { index, found: c })).collect()
}

pub fn format_word(w: &[Step]) -> String {
    w.iter().map(|s| s.as_char()).collect()
}

pub fn walk(w: &[Step]) -> Vec<Point> {
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut p = Point::ORIGIN;
    out.push(p);
    for &s in w {
        p = p.step(s);
        out.push(p);
    }
    out
}

/// Endpoint of the walk: `(|w|_E - |w|_W, |w|_N - |w|_S)`.
pub fn lat_long(w: &[Step]) -> Point {
    w.iter().fold(Point::ORIGIN, |p, &s| p.step(s))
}

/// True iff the walk never leaves the quadrant and returns to the origin.
pub fn is_quadrant_excursion(w: &[Step]) -> bool {
    let mut p = Point::ORIGIN;
    for &s in w {
        p = p.step(s);
        if !p.in_quadrant() {
            return false;
        }
    }
    p == Point::ORIGIN
}

/// Reverses the word and swaps `E <-> S`, `N <-> W`.
pub fn dual_word(w: &[Step]) -> LatticeWord {
    w.iter().rev().map(|s| s.dual()).collect()
}

/// Length of the maximal prefix of `E` steps.
pub fn jaw(w: &[Step]) -> usize {
    w.iter().take_while(|&&s| s == Step::E).count()
}

/// Number of steps starting at latitude 0, which for an excursion is the
/// number of non-initial visits at latitude 0.
pub fn visits_ell(w: &[Step]) -> Result<usize, WordError> {
    if !is_quadrant_excursion(w) {
        return Err(WordError::NotExcursion);
    }
    Ok(ell_unchecked(w))
}

pub(crate) fn ell_unchecked(w: &[Step]) -> usize {
    let mut lat = 0i64;
    let mut visits = 0;
    for &s in w {
        lat += s.delta().1;
        if lat == 0 {
            visits += 1;
        }
    }
    visits
}
