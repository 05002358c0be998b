//! Classes generated by the gluing rules `N^k -> E N^k W` and
//! `W^k -> N W^k S` under restrictions on `k`.

use std::collections::BTreeSet;

use crate::gff::{apply_delta, apply_nabla};
use crate::word::{LatticeWord, Step};

/// Smallest allowed `k` for each rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GluingRules {
    pub nabla_min: usize,
    pub delta_min: usize,
}

impl GluingRules {
    pub const ALL: GluingRules = GluingRules { nabla_min: 0, delta_min: 0 };
    /// Never creates `NS` from an empty run: no up bridge.
    pub const UP_BRIDGE_FREE: GluingRules = GluingRules { nabla_min: 0, delta_min: 1 };
    /// Never creates `EW` from an empty run: no down bridge.
    pub const DOWN_BRIDGE_FREE: GluingRules = GluingRules { nabla_min: 1, delta_min: 0 };
    /// Strip gluings only.
    pub const STRIPS: GluingRules = GluingRules { nabla_min: 1, delta_min: 1 };
}

/// All words of half-length `size` reachable from `seeds` (all of one
/// half-length) by the allowed rules, in sorted order.
pub fn closure(seeds: &[LatticeWord], rules: GluingRules, size: usize) -> Vec<LatticeWord> {
    let Some(start) = seeds.first().map(|w| w.len() / 2) else {
        return Vec::new();
    };
    if size < start {
        return Vec::new();
    }
    let mut level: BTreeSet<LatticeWord> = seeds.iter().cloned().collect();
    for _ in start..size {
        let mut next = BTreeSet::new();
        for w in &level {
            grow(w, Step::N, rules.nabla_min, &mut next, apply_nabla);
            grow(w, Step::W, rules.delta_min, &mut next, apply_delta);
        }
        level = next;
    }
    level.into_iter().collect()
}

fn grow(
    w: &[Step],
    run: Step,
    min: usize,
    out: &mut BTreeSet<LatticeWord>,
    rule: fn(&[Step], usize, usize) -> Result<LatticeWord, crate::gff::GffError>,
) {
    for pos in 0..=w.len() {
        let longest = w[pos..].iter().take_while(|&&s| s == run).count();
        for k in min..=longest {
            out.insert(rule(w, pos, k).expect("run checked"));
        }
    }
}

/// Gff without up bridges, generated from the empty word.
pub fn all_up_bridge_free(size: usize) -> Vec<LatticeWord> {
    closure(&[LatticeWord::empty()], GluingRules::UP_BRIDGE_FREE, size)
}

/// Gff without down bridges, generated from the empty word.
pub fn all_down_bridge_free(size: usize) -> Vec<LatticeWord> {
    closure(&[LatticeWord::empty()], GluingRules::DOWN_BRIDGE_FREE, size)
}

/// Words reached from the head `ENWS` by strip gluings.
pub fn all_strip_glued(size: usize) -> Vec<LatticeWord> {
    let head: LatticeWord = "ENWS".parse().expect("head");
    closure(&[head], GluingRules::STRIPS, size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gff::{is_down_bridge_free, is_up_bridge_free};

    #[test]
    fn unrestricted_closure_is_gff() {
        let counts: Vec<usize> = (0..=4).map(|n| closure(&[LatticeWord::empty()], GluingRules::ALL, n).len()).collect();
        assert_eq!(counts, vec![1, 2, 9, 54, 378]);
    }

    #[test]
    fn restricted_classes() {
        for n in 0..=3 {
            for w in all_up_bridge_free(n) {
                assert_eq!(is_up_bridge_free(&w), Ok(true), "{w}");
            }
            for w in all_down_bridge_free(n) {
                assert_eq!(is_down_bridge_free(&w), Ok(true), "{w}");
            }
        }
        assert_eq!(all_strip_glued(3).len(), 2);
        assert_eq!(all_strip_glued(4).len(), 6);
    }
}
