//! Generalized fighting fish: quadrant excursions grown from the empty word
//! by `N^k -> E N^k W` and `W^k -> N W^k S`.

mod bridges;
mod fish;
mod trace;

use std::fmt;

use thiserror::Error;

use crate::word::{ell_unchecked, format_word, is_quadrant_excursion, LatticeWord, Step};

pub use bridges::{down_bridges, is_down_bridge_free, is_up_bridge_free, up_bridges};
pub use fish::{
    fish_augment, fish_decompose, fish_odot, is_fighting_fish, is_fighting_fish_by_decoding, FightingFish,
    FishDecomposition,
};
pub use trace::{fish_trace, gff_trace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GffError {
    #[error("word is not a quadrant excursion")]
    NotExcursion,
    #[error("no {expected} subword of length {k} at position {pos}")]
    NoOccurrence { expected: char, pos: usize, k: usize },
    #[error("not a generalized fighting fish: Case I split step is {found} at position {pos}")]
    CaseIStep { pos: usize, found: Step },
    #[error("not a generalized fighting fish: Case II removed step is {found} at position {pos}")]
    CaseIIStep { pos: usize, found: Step },
    #[error(
        "not a generalized fighting fish: Case I inner part at positions {start}..{end} leaves the shifted quadrant"
    )]
    CaseIInner { start: usize, end: usize },
    #[error("not a generalized fighting fish: Case II remainder leaves the quadrant")]
    CaseIIRemainder,
    #[error("not a fighting fish: {0}")]
    NotFish(String),
    #[error("index {index} out of range {min}..={max}")]
    OutOfRange { index: usize, min: usize, max: usize },
}

/// A word known to be a generalized fighting fish.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gff(LatticeWord);

impl Gff {
    pub fn new(word: LatticeWord) -> Result<Self, GffError> {
        check_gff(&word)?;
        Ok(Gff(word))
    }

    pub(crate) fn new_unchecked(word: LatticeWord) -> Self {
        Gff(word)
    }

    pub fn empty() -> Self {
        Gff(LatticeWord::empty())
    }

    pub fn word(&self) -> &LatticeWord {
        &self.0
    }

    pub fn into_word(self) -> LatticeWord {
        self.0
    }

    /// Half the length.
    pub fn size(&self) -> usize {
        self.0.len() / 2
    }

    /// Number of steps starting at latitude 0.
    pub fn ell(&self) -> usize {
        ell_unchecked(&self.0)
    }

    pub fn jaw(&self) -> usize {
        crate::word::jaw(&self.0)
    }
}

impl fmt::Display for Gff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GffDecomposition {
    Empty,
    /// `F = F1 E F2 W`
    CaseI(Gff, Gff),
    /// `F = augment(F1, i)`
    CaseII(Gff, usize),
}

/// Replaces `N^k` at `pos` by `E N^k W`.
pub fn apply_nabla(w: &[Step], pos: usize, k: usize) -> Result<LatticeWord, GffError> {
    replace_run(w, pos, k, Step::N, Step::E, Step::W)
}

/// Replaces `W^k` at `pos` by `N W^k S`.
pub fn apply_delta(w: &[Step], pos: usize, k: usize) -> Result<LatticeWord, GffError> {
    replace_run(w, pos, k, Step::W, Step::N, Step::S)
}

fn replace_run(w: &[Step], pos: usize, k: usize, run: Step, open: Step, close: Step) -> Result<LatticeWord, GffError> {
    let present = pos + k <= w.len() && w[pos..pos + k].iter().all(|&s| s == run);
    if !present {
        return Err(GffError::NoOccurrence { expected: run.as_char(), pos, k });
    }
    let mut out = Vec::with_capacity(w.len() + 2);
    out.extend_from_slice(&w[..pos]);
    out.push(open);
    out.extend_from_slice(&w[pos..pos + k]);
    out.push(close);
    out.extend_from_slice(&w[pos + k..]);
    Ok(LatticeWord::from_steps(out))
}

/// `F1 E F2 W`
pub fn gff_oplus(f1: &Gff, f2: &Gff) -> Gff {
    Gff(LatticeWord::concat(&[f1.word(), &[Step::E], f2.word(), &[Step::W]]))
}

/// Lifts the part of `F` after its `i`-th latitude-0 visit by one `N` and
/// closes it with `S`. Visit 0 is the start, so `0 <= i <= ell(F)`.
pub fn gff_augment(f: &Gff, i: usize) -> Result<Gff, GffError> {
    let ell = f.ell();
    if i > ell {
        return Err(GffError::OutOfRange { index: i, min: 0, max: ell });
    }
    let cut = latitude_zero_positions(f.word()).nth(i).expect("i <= ell");
    let w = f.word();
    Ok(Gff(LatticeWord::concat(&[&w[..cut], &[Step::N], &w[cut..], &[Step::S]])))
}

/// Walk positions `0..=len` at latitude 0, in order.
fn latitude_zero_positions(w: &[Step]) -> impl Iterator<Item = usize> + '_ {
    let mut lat = 0i64;
    std::iter::once(0).chain(w.iter().enumerate().filter_map(move |(j, s)| {
        lat += s.delta().1;
        (lat == 0).then_some(j + 1)
    }))
}

/// One level of the decomposition. The parts are excursions but are only
/// known to be Gff if the input was.
pub fn gff_decompose(w: &[Step]) -> Result<GffDecomposition, GffError> {
    if !is_quadrant_excursion(w) {
        return Err(GffError::NotExcursion);
    }
    split(w).map(|s| match s {
        Split::Empty => GffDecomposition::Empty,
        Split::I(a, b) => GffDecomposition::CaseI(Gff(a), Gff(b)),
        Split::II(a, i) => GffDecomposition::CaseII(Gff(a), i),
    })
}

enum Split {
    Empty,
    I(LatticeWord, LatticeWord),
    II(LatticeWord, usize),
}

/// Splits an excursion; the parts are excursions again.
fn split(w: &[Step]) -> Result<Split, GffError> {
    let Some(&last) = w.last() else {
        return Ok(Split::Empty);
    };
    let pts = crate::word::walk(w);
    if last == Step::W {
        // last step leaving the origin
        let t = (0..w.len()).rev().find(|&j| pts[j].longitude == 0 && pts[j].latitude == 0).expect("starts at origin");
        if w[t] != Step::E {
            return Err(GffError::CaseIStep { pos: t, found: w[t] });
        }
        let inner = &w[t + 1..w.len() - 1];
        if pts[t + 1..w.len()].iter().any(|p| p.longitude < 1) {
            return Err(GffError::CaseIInner { start: t + 1, end: w.len() - 1 });
        }
        Ok(Split::I(LatticeWord::from_steps(w[..t].to_vec()), LatticeWord::from_steps(inner.to_vec())))
    } else {
        debug_assert_eq!(last, Step::S);
        let t = (0..w.len()).rev().find(|&j| pts[j].latitude == 0).expect("starts at latitude 0");
        if w[t] != Step::N {
            return Err(GffError::CaseIIStep { pos: t, found: w[t] });
        }
        let i = (0..t).filter(|&j| pts[j].latitude == 0).count();
        let rest: Vec<Step> = w[..t].iter().chain(&w[t + 1..w.len() - 1]).copied().collect();
        if !is_quadrant_excursion(&rest) {
            return Err(GffError::CaseIIRemainder);
        }
        Ok(Split::II(LatticeWord::from_steps(rest), i))
    }
}

/// Runs the decomposition to the bottom, reporting the first failing step.
pub fn check_gff(w: &[Step]) -> Result<(), GffError> {
    if !is_quadrant_excursion(w) {
        return Err(GffError::NotExcursion);
    }
    let mut pending = vec![LatticeWord::from_steps(w.to_vec())];
    while let Some(x) = pending.pop() {
        match split(&x)? {
            Split::Empty => {}
            Split::I(a, b) => {
                pending.push(a);
                pending.push(b);
            }
            Split::II(a, _) => pending.push(a),
        }
    }
    Ok(())
}

pub fn is_gff(w: &[Step]) -> bool {
    check_gff(w).is_ok()
}

/// Reassembles one decomposition level.
pub fn gff_compose(d: &GffDecomposition) -> Result<Gff, GffError> {
    match d {
        GffDecomposition::Empty => Ok(Gff::empty()),
        GffDecomposition::CaseI(a, b) => Ok(gff_oplus(a, b)),
        GffDecomposition::CaseII(a, i) => gff_augment(a, *i),
    }
}

pub(crate) fn word_string(w: &[Step]) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        format_word(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> LatticeWord {
        s.parse().unwrap()
    }

    fn g(s: &str) -> Gff {
        Gff::new(w(s)).unwrap()
    }

    #[test]
    fn nabla_delta_examples() {
        assert_eq!(apply_nabla(&w(""), 0, 0).unwrap(), w("EW"));
        assert_eq!(apply_nabla(&w("ENWS"), 1, 1).unwrap(), w("EENWWS"));
        assert_eq!(apply_delta(&w("ENWS"), 2, 1).unwrap(), w("ENNWSS"));
        assert!(apply_delta(&w("ENWS"), 1, 1).is_err());
        assert!(apply_nabla(&w("ENWS"), 4, 1).is_err());
    }

    #[test]
    fn oplus_examples() {
        assert_eq!(gff_oplus(&g(""), &g("")), g("EW"));
        assert_eq!(gff_oplus(&g(""), &g("EW")), g("EEWW"));
        assert_eq!(gff_oplus(&g("NS"), &g("")), g("NSEW"));
        let x = gff_oplus(&g("NS"), &g("EW"));
        assert_eq!(x.ell(), g("NS").ell() + g("EW").ell() + 2);
    }

    #[test]
    fn augment_examples() {
        assert_eq!(gff_augment(&g(""), 0).unwrap(), g("NS"));
        assert_eq!(gff_augment(&g("EW"), 1).unwrap(), g("ENWS"));
        assert_eq!(gff_augment(&g("EW"), 2).unwrap(), g("EWNS"));
        assert!(gff_augment(&g("EW"), 3).is_err());
        for i in 0..=2 {
            assert_eq!(gff_augment(&g("EW"), i).unwrap().ell(), i + 1);
        }
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(gff_decompose(&w("EW")).unwrap(), GffDecomposition::CaseI(g(""), g("")));
        assert_eq!(gff_decompose(&w("EWNS")).unwrap(), GffDecomposition::CaseII(g("EW"), 2));
        assert_eq!(gff_decompose(&w("")).unwrap(), GffDecomposition::Empty);
        assert_eq!(gff_decompose(&w("NESW")), Err(GffError::CaseIStep { pos: 0, found: Step::N }));
        assert_eq!(
            check_gff(&w("NESW")).unwrap_err().to_string(),
            "not a generalized fighting fish: Case I split step is N at position 0"
        );
        assert_eq!(gff_decompose(&w("EN")), Err(GffError::NotExcursion));
    }

    #[test]
    fn size_two_words() {
        let nine = ["EEWW", "EWEW", "ENSW", "NSEW", "NEWS", "ENWS", "EWNS", "NNSS", "NSNS"];
        for s in nine {
            assert!(is_gff(&w(s)), "{s}");
        }
        let mut count = 0;
        for code in 0..256u32 {
            let word: LatticeWord = (0..4).map(|k| Step::ALL[((code >> (2 * k)) & 3) as usize]).collect();
            if is_gff(&word) {
                count += 1;
                assert!(nine.contains(&word.to_string().as_str()), "{word}");
            }
        }
        assert_eq!(count, 9);
        assert!(is_gff(&w("ENWS")));
        assert!(!is_gff(&w("NESW")));
    }
}
