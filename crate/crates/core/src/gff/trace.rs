//! Indented decomposition traces, one constructor per line.

use std::fmt::Write as _;

use crate::word::Step;

use super::fish::Recognizer;
use super::{gff_decompose, word_string, FishDecomposition, GffDecomposition, GffError};

/// Full decomposition tree of a Gff.
///
/// ```text
/// EWNS = augment(F1, 2)
///   EW = F1 E F2 W
///     ε
///     ε
/// ```
pub fn gff_trace(w: &[Step]) -> Result<String, GffError> {
    let mut out = String::new();
    gff_lines(w, 0, &mut out)?;
    Ok(out)
}

fn gff_lines(w: &[Step], depth: usize, out: &mut String) -> Result<(), GffError> {
    let pad = "  ".repeat(depth);
    match gff_decompose(w)? {
        GffDecomposition::Empty => writeln!(out, "{pad}ε").unwrap(),
        GffDecomposition::CaseI(a, b) => {
            writeln!(out, "{pad}{} = F1 E F2 W", word_string(w)).unwrap();
            gff_lines(a.word(), depth + 1, out)?;
            gff_lines(b.word(), depth + 1, out)?;
        }
        GffDecomposition::CaseII(a, i) => {
            writeln!(out, "{pad}{} = augment(F1, {i})", word_string(w)).unwrap();
            gff_lines(a.word(), depth + 1, out)?;
        }
    }
    Ok(())
}

/// Full decomposition tree of a fighting fish.
pub fn fish_trace(w: &[Step]) -> Result<String, GffError> {
    let mut out = String::new();
    fish_lines(&mut Recognizer::default(), w, 0, &mut out)?;
    Ok(out)
}

fn fish_lines(r: &mut Recognizer, w: &[Step], depth: usize, out: &mut String) -> Result<(), GffError> {
    let pad = "  ".repeat(depth);
    let text = word_string(w);
    match r.decompose(w)? {
        FishDecomposition::Head => writeln!(out, "{pad}{text} = head").unwrap(),
        FishDecomposition::CaseII(f1, i) => {
            writeln!(out, "{pad}{text} = augment(F1, {i})").unwrap();
            fish_lines(r, f1.word(), depth + 1, out)?;
        }
        FishDecomposition::CaseIII(f2) => {
            writeln!(out, "{pad}{text} = head ⊙ F2").unwrap();
            fish_lines(r, f2.word(), depth + 1, out)?;
        }
        FishDecomposition::CaseIV(f1, i, f2) => {
            writeln!(out, "{pad}{text} = augment(F1, {i}) ⊙ F2").unwrap();
            fish_lines(r, f1.word(), depth + 1, out)?;
            fish_lines(r, f2.word(), depth + 1, out)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::LatticeWord;

    #[test]
    fn traces() {
        let w: LatticeWord = "EWNS".parse().unwrap();
        assert_eq!(gff_trace(&w).unwrap(), "EWNS = augment(F1, 2)\n  EW = F1 E F2 W\n    ε\n    ε\n");
        let f: LatticeWord = "EENWWS".parse().unwrap();
        assert_eq!(fish_trace(&f).unwrap(), "EENWWS = head ⊙ F2\n  ENWS = head\n");
        let bad: LatticeWord = "NESW".parse().unwrap();
        assert!(gff_trace(&bad).is_err());
    }
}
