//! Fighting fish: the words grown from the head `ENWS`.

use std::collections::HashMap;
use std::fmt;

use crate::mullin::mullin_decode;
use crate::spanning::rightmost_dfs_tree;
use crate::word::{is_quadrant_excursion, jaw, walk, LatticeWord, Step};

use super::{Gff, GffError};

const HEAD: [Step; 4] = [Step::E, Step::N, Step::W, Step::S];

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FightingFish(LatticeWord);

impl FightingFish {
    pub fn new(word: LatticeWord) -> Result<Self, GffError> {
        fish_decompose(&word)?;
        Ok(FightingFish(word))
    }

    pub(crate) fn new_unchecked(word: LatticeWord) -> Self {
        FightingFish(word)
    }

    /// The head `ENWS`, the only fish of size 2.
    pub fn head() -> Self {
        FightingFish(LatticeWord::from_steps(HEAD.to_vec()))
    }

    pub fn word(&self) -> &LatticeWord {
        &self.0
    }

    pub fn into_word(self) -> LatticeWord {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.len() / 2
    }

    pub fn jaw(&self) -> usize {
        jaw(&self.0)
    }

    pub fn to_gff(&self) -> Gff {
        Gff::new_unchecked(self.0.clone())
    }
}

impl fmt::Display for FightingFish {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FishDecomposition {
    /// `ENWS`
    Head,
    /// `F = fish_augment(F1, i)`
    CaseII(FightingFish, usize),
    /// `F = ENWS ⊙ F2`
    CaseIII(FightingFish),
    /// `F = fish_augment(F1, i) ⊙ F2`
    CaseIV(FightingFish, usize, FightingFish),
}

/// Glues the first `N` of `a` (right after its jaw) onto the final `S` of
/// `b`: `E^jaw(a) · (b without its last S) · (a without E^jaw N)`.
pub fn fish_odot(a: &FightingFish, b: &FightingFish) -> FightingFish {
    let k = a.jaw();
    let (aw, bw) = (a.word(), b.word());
    FightingFish(LatticeWord::concat(&[&aw[..k], &bw[..bw.len() - 1], &aw[k + 1..]]))
}

/// Glues a new cell over the first `i` cells of the jaw: `E^i N E^(a-i) R S`
/// where `F = E^a R`.
pub fn fish_augment(f: &FightingFish, i: usize) -> Result<FightingFish, GffError> {
    let a = f.jaw();
    if i < 1 || i > a {
        return Err(GffError::OutOfRange { index: i, min: 1, max: a });
    }
    let w = f.word();
    Ok(FightingFish(LatticeWord::concat(&[&w[..i], &[Step::N], &w[i..], &[Step::S]])))
}

/// Which of the four cases applies, with the parts.
pub fn fish_decompose(w: &[Step]) -> Result<FishDecomposition, GffError> {
    Recognizer::default().decompose(w)
}

pub fn is_fighting_fish(w: &[Step]) -> bool {
    Recognizer::default().accepts(w)
}

/// Independent recognizer: the word codes a nonseparable map with its
/// rightmost depth-first search tree.
pub fn is_fighting_fish_by_decoding(w: &[Step]) -> bool {
    let Ok(t) = mullin_decode(w) else {
        return false;
    };
    if !t.map().is_nonseparable() {
        return false;
    }
    let rdfs = rightmost_dfs_tree(t.map());
    rdfs.tree_edges() == t.tree_edges()
}

/// Memoised recursive recognizer. Keys are the words themselves.
#[derive(Default)]
pub(crate) struct Recognizer {
    memo: HashMap<Vec<Step>, Option<Shape>>,
}

/// A decomposition level with parts stored as words.
#[derive(Clone, Debug)]
enum Shape {
    Head,
    Augmented(Vec<Step>, usize),
    Glued(Vec<Step>, Vec<Step>),
}

impl Recognizer {
    pub(crate) fn accepts(&mut self, w: &[Step]) -> bool {
        self.shape(w).is_some()
    }

    pub(crate) fn decompose(&mut self, w: &[Step]) -> Result<FishDecomposition, GffError> {
        precheck(w)?;
        let shape = self.shape(w).ok_or_else(|| GffError::NotFish("no decomposition case applies".to_string()))?;
        let fish = |v: Vec<Step>| FightingFish(LatticeWord::from_steps(v));
        Ok(match shape {
            Shape::Head => FishDecomposition::Head,
            Shape::Augmented(f1, i) => FishDecomposition::CaseII(fish(f1), i),
            Shape::Glued(a, b) => match self.shape(&a).expect("glued parts are fish") {
                Shape::Head => FishDecomposition::CaseIII(fish(b)),
                Shape::Augmented(f1, i) => FishDecomposition::CaseIV(fish(f1), i, fish(b)),
                Shape::Glued(..) => unreachable!("left factor is never glued"),
            },
        })
    }

    /// All `(left, right)` factorisations `w = left ⊙ right` with both
    /// factors fish and `left` not itself glued.
    pub(crate) fn glue_splits(&mut self, w: &[Step]) -> Vec<(Vec<Step>, Vec<Step>)> {
        let mut out = Vec::new();
        let a = jaw(w);
        let pts = walk(w);
        for k in 1..a {
            // right factor (minus its final S) runs from position k and must
            // stay at longitude >= k until it stops at (k, 1)
            for p in k + 1..w.len() {
                if pts[p].longitude < k as i64 {
                    break;
                }
                if pts[p].longitude != k as i64 || pts[p].latitude != 1 {
                    continue;
                }
                let mut right = w[k..p].to_vec();
                right.push(Step::S);
                let mut left = vec![Step::E; k];
                left.push(Step::N);
                left.extend_from_slice(&w[p..]);
                if !self.accepts(&right) {
                    continue;
                }
                if matches!(self.shape(&left), Some(Shape::Head | Shape::Augmented(..))) {
                    out.push((left, right));
                }
            }
        }
        out
    }

    fn shape(&mut self, w: &[Step]) -> Option<Shape> {
        if let Some(s) = self.memo.get(w) {
            return s.clone();
        }
        let s = self.compute(w);
        self.memo.insert(w.to_vec(), s.clone());
        s
    }

    fn compute(&mut self, w: &[Step]) -> Option<Shape> {
        if w == HEAD {
            return Some(Shape::Head);
        }
        precheck(w).ok()?;
        if let Some((left, right)) = self.glue_splits(w).into_iter().next() {
            return Some(Shape::Glued(left, right));
        }
        let a = jaw(w);
        let f1: Vec<Step> = w[..a].iter().chain(&w[a + 1..w.len() - 1]).copied().collect();
        if is_quadrant_excursion(&f1) && self.accepts(&f1) {
            return Some(Shape::Augmented(f1, a));
        }
        None
    }
}

/// Shape every fish has: an excursion `E^a N ... S` with `a >= 1`.
fn precheck(w: &[Step]) -> Result<(), GffError> {
    if !is_quadrant_excursion(w) {
        return Err(GffError::NotExcursion);
    }
    let a = jaw(w);
    if w.len() < 4 || a == 0 {
        return Err(GffError::NotFish("does not start with E".to_string()));
    }
    if w[a] != Step::N {
        return Err(GffError::NotFish(format!("jaw is followed by {} instead of N", w[a])));
    }
    if w[w.len() - 1] != Step::S {
        return Err(GffError::NotFish("does not end with S".to_string()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> LatticeWord {
        s.parse().unwrap()
    }

    fn f(s: &str) -> FightingFish {
        FightingFish::new(w(s)).unwrap()
    }

    #[test]
    fn odot_examples() {
        assert_eq!(fish_odot(&f("ENWS"), &f("ENWS")), f("EENWWS"));
        assert_eq!(fish_odot(&f("EENWWS"), &f("ENWS")), f("EEENWWWS"));
        let x = fish_odot(&f("ENWS"), &f("ENNWSS"));
        assert_eq!(x.word(), &w("EENNWSWS"));
        assert_eq!(x.size(), 4);
        assert_eq!(x.jaw(), 2);
        assert!(is_fighting_fish(x.word()));
    }

    #[test]
    fn augment_examples() {
        assert_eq!(fish_augment(&f("ENWS"), 1).unwrap(), f("ENNWSS"));
        assert_eq!(fish_augment(&f("EENWWS"), 2).unwrap(), f("EENNWWSS"));
        assert_eq!(fish_augment(&f("EENWWS"), 1).unwrap(), f("ENENWWSS"));
        assert!(fish_augment(&f("ENWS"), 0).is_err());
        assert!(fish_augment(&f("ENWS"), 2).is_err());
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(fish_decompose(&w("ENWS")).unwrap(), FishDecomposition::Head);
        assert_eq!(fish_decompose(&w("EENWWS")).unwrap(), FishDecomposition::CaseIII(f("ENWS")));
        assert_eq!(fish_decompose(&w("ENNWSS")).unwrap(), FishDecomposition::CaseII(f("ENWS"), 1));
        assert!(!is_fighting_fish(&w("EWNS")));
        assert!(!is_fighting_fish_by_decoding(&w("EWNS")));
        assert!(is_fighting_fish_by_decoding(&w("ENWS")));
        assert!(is_fighting_fish_by_decoding(&w("EENWWS")));
        assert!(FightingFish::new(w("EW")).is_err());
    }

    #[test]
    fn cases_are_exclusive_and_splits_unique() {
        let mut r = Recognizer::default();
        for n in 3..=7 {
            for f in crate::enumerate::all_ff(n) {
                let w = f.word();
                let splits = r.glue_splits(w);
                assert!(splits.len() <= 1, "{w} has {} splits", splits.len());
                let a = jaw(w);
                let f1: Vec<Step> = w[..a].iter().chain(&w[a + 1..w.len() - 1]).copied().collect();
                let augmented = is_quadrant_excursion(&f1) && r.accepts(&f1);
                assert!(splits.len() + usize::from(augmented) == 1, "{w}");
            }
        }
    }
}
