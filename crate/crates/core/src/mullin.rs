//! Counterclockwise code of tree-rooted maps and its inverse.
//!
//! The tour starts at the root corner. At a corner, the half-edge `h` that
//! follows it counterclockwise is examined: a tree edge is crossed (`E` the
//! first time, `W` the second) and the tour resumes just after the arrival
//! half-edge; a non-tree edge leaves a stem (`N` opening, `S` closing) and
//! the tour turns to the next corner around the same vertex.

use thiserror::Error;

use crate::map::RootedMap;
use crate::spanning::TreeRootedMap;
use crate::word::{dual_word, is_quadrant_excursion, LatticeWord, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MullinError {
    #[error("word is not a quadrant excursion")]
    NotExcursion,
}

/// Code of a tree-rooted map: a quadrant excursion of length `2 * edges`.
pub fn mullin_encode(t: &TreeRootedMap) -> LatticeWord {
    let map = t.map();
    let Some(root) = map.root() else {
        return LatticeWord::empty();
    };
    let mut seen = vec![false; map.edge_count()];
    let mut out = Vec::with_capacity(map.half_edge_count());
    let mut c = root;
    loop {
        let e = c / 2;
        let first = !seen[e];
        seen[e] = true;
        if t.contains(e) {
            out.push(if first { Step::E } else { Step::W });
            c = map.sigma(c ^ 1);
        } else {
            out.push(if first { Step::N } else { Step::S });
            c = map.sigma(c);
        }
        if c == root {
            break;
        }
    }
    debug_assert_eq!(out.len(), map.half_edge_count());
    LatticeWord::from_steps(out)
}

/// Rebuilds the tree-rooted map of a quadrant excursion.
///
/// `E`/`W` steps grow and climb back up the plane tree, `N`/`S` steps put
/// stems at the current corner; stems are matched as parentheses and each
/// matched pair becomes a non-tree edge. Edge `k` is the `k`-th edge opened
/// by an `E` or `N` step.
pub fn mullin_decode(w: &[Step]) -> Result<TreeRootedMap, MullinError> {
    if !is_quadrant_excursion(w) {
        return Err(MullinError::NotExcursion);
    }
    if w.is_empty() {
        return Ok(TreeRootedMap::new_unchecked(RootedMap::vertex(), Vec::new()));
    }
    let m = w.len() / 2;
    // counterclockwise rotation of every vertex, in tour order
    let mut rotations: Vec<Vec<usize>> = vec![Vec::new()];
    let mut in_tree = Vec::with_capacity(m);
    let mut path = vec![0usize];
    let mut stems = Vec::new();
    for &s in w {
        let current = *path.last().expect("tour stays in the tree");
        match s {
            Step::E => {
                let h = 2 * in_tree.len();
                in_tree.push(true);
                rotations[current].push(h);
                rotations.push(vec![h + 1]);
                path.push(rotations.len() - 1);
            }
            Step::W => {
                path.pop();
            }
            Step::N => {
                let h = 2 * in_tree.len();
                in_tree.push(false);
                rotations[current].push(h);
                stems.push(h + 1);
            }
            Step::S => {
                let h = stems.pop().expect("balanced stems in an excursion");
                rotations[current].push(h);
            }
        }
    }
    debug_assert!(stems.is_empty());
    let root = rotations[0][0];
    let map = RootedMap::from_rotations(&rotations, Some(root)).expect("decoded maps are planar");
    Ok(TreeRootedMap::new_unchecked(map, in_tree))
}

/// Whether coding commutes with duality on this tree-rooted map.
pub fn duality_commutes(t: &TreeRootedMap) -> bool {
    mullin_encode(&t.dual()) == dual_word(&mullin_encode(t))
}
