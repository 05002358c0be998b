//! Down and up bridges: matched `E..W` (resp. `N..S`) pairs that split a
//! Gff into an inner Gff and an outer Gff.

use crate::word::Step;

use super::{check_gff, is_gff, GffError};

/// Number of splits `w = F1 E G W F2` with `G` and `F1 F2` both Gff.
pub fn down_bridges(w: &[Step]) -> Result<usize, GffError> {
    check_gff(w)?;
    Ok(count_bridges(w, Step::E, Step::W))
}

/// Number of splits `w = F1 N G S F2` with `G` and `F1 F2` both Gff.
pub fn up_bridges(w: &[Step]) -> Result<usize, GffError> {
    check_gff(w)?;
    Ok(count_bridges(w, Step::N, Step::S))
}

pub fn is_down_bridge_free(w: &[Step]) -> Result<bool, GffError> {
    down_bridges(w).map(|c| c == 0)
}

pub fn is_up_bridge_free(w: &[Step]) -> Result<bool, GffError> {
    up_bridges(w).map(|c| c == 0)
}

fn count_bridges(w: &[Step], open: Step, close: Step) -> usize {
    let mut count = 0;
    for p in 0..w.len() {
        if w[p] != open {
            continue;
        }
        for q in p + 1..w.len() {
            if w[q] != close || !is_gff(&w[p + 1..q]) {
                continue;
            }
            let outer: Vec<Step> = w[..p].iter().chain(&w[q + 1..]).copied().collect();
            if is_gff(&outer) {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::LatticeWord;

    fn w(s: &str) -> LatticeWord {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(down_bridges(&w("EW")), Ok(1));
        assert_eq!(up_bridges(&w("EW")), Ok(0));
        assert_eq!(down_bridges(&w("NS")), Ok(0));
        assert_eq!(up_bridges(&w("NS")), Ok(1));
        assert_eq!(down_bridges(&w("ENWS")), Ok(0));
        assert_eq!(up_bridges(&w("ENWS")), Ok(0));
        assert_eq!(is_up_bridge_free(&w("ENWS")), Ok(true));
        assert_eq!(is_down_bridge_free(&w("ENWS")), Ok(true));
        assert_eq!(is_up_bridge_free(&w("EW")), Ok(true));
        assert_eq!(is_down_bridge_free(&w("EW")), Ok(false));
        assert_eq!(is_up_bridge_free(&w("NS")), Ok(false));
        assert_eq!(is_down_bridge_free(&w("NS")), Ok(true));
        assert!(down_bridges(&w("NESW")).is_err());
    }
}
