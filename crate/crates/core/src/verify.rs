//! Cross-validation of every construction against the others, up to a size
//! limit. Each check stops at its first counterexample.

use std::collections::BTreeSet;

use crate::bijection::{phi, phi_inv, phi_rec, statistics_check, xi, xi_inv, xi_inv_rec, xi_rec};
use crate::enumerate::{
    all_down_bridge_free, all_excursions, all_ff, all_gff, all_strip_glued, all_up_bridge_free, brute_force_maps,
    count_ff, count_gff, formula_ff, formula_maps, grammar_maps, BRUTE_FORCE_LIMIT,
};
use crate::gff::{down_bridges, is_fighting_fish, is_fighting_fish_by_decoding, is_gff, up_bridges};
use crate::map::RootedMap;
use crate::mullin::{duality_commutes, mullin_decode, mullin_encode};
use crate::spanning::all_spanning_trees;
use crate::word::dual_word;

/// Result of one check: a summary on success, the first counterexample
/// otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub name: &'static str,
    pub result: Result<String, String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs every check on objects with at most `limit` edges (fish up to size
/// `limit + 2`, excursions up to length `2 * limit + 4`).
pub fn run(limit: usize) -> Vec<Outcome> {
    let maps: Vec<Vec<RootedMap>> = (0..=limit).map(grammar_maps).collect();
    let checks: [(&'static str, &dyn Fn() -> Check); 10] = [
        ("map counts", &|| map_counts(&maps)),
        ("fish counts", &|| fish_counts(limit + 2)),
        ("xi and its inverses", &|| xi_checks(&maps)),
        ("phi and its inverses", &|| phi_checks(&maps)),
        ("duality", &|| duality(&maps)),
        ("statistics", &|| statistics(&maps)),
        ("bridge-free classes", &|| bridge_free(&maps)),
        ("mullin code", &|| mullin(&maps)),
        ("recognizers", &|| recognizers(2 * limit + 4)),
        ("strip gluings", &|| strip_gluings(limit + 2)),
    ];
    checks.iter().map(|(name, f)| Outcome { name, result: f() }).collect()
}

fn map_counts(maps: &[Vec<RootedMap>]) -> Check {
    for (n, level) in maps.iter().enumerate() {
        let distinct: BTreeSet<_> = level.iter().map(RootedMap::canonical_form).collect();
        ensure(distinct.len() == level.len(), || format!("grammar repeats a map with {n} edges"))?;
        let expected = formula_maps(n);
        ensure(expected == level.len().into(), || format!("n={n}: {} maps, formula {expected}", level.len()))?;
        ensure(all_gff(n).len() == level.len(), || format!("n={n}: {} Gff", all_gff(n).len()))?;
        ensure(count_gff(n).total(n) == expected, || format!("n={n}: count table {}", count_gff(n).total(n)))?;
        if n <= BRUTE_FORCE_LIMIT {
            let brute: BTreeSet<_> =
                brute_force_maps(n).expect("within limit").iter().map(RootedMap::canonical_form).collect();
            ensure(brute == distinct, || format!("n={n}: brute force finds {} maps", brute.len()))?;
        }
    }
    Ok(format!("sizes 0..={} agree with the formula", maps.len() - 1))
}

fn fish_counts(max: usize) -> Check {
    let table = count_ff(max);
    for n in 2..=max {
        let (found, expected) = (all_ff(n).len(), formula_ff(n));
        ensure(expected == found.into(), || format!("size {n}: {found} fish, formula {expected}"))?;
        ensure(table.total(n) == expected, || format!("size {n}: count table {}", table.total(n)))?;
    }
    Ok(format!("sizes 2..={max} agree with the formula"))
}

fn xi_checks(maps: &[Vec<RootedMap>]) -> Check {
    let mut checked = 0;
    for m in maps.iter().flatten() {
        let w = xi(m);
        ensure(w == xi_rec(m), || format!("xi and xi_rec differ on {w}"))?;
        for inv in [xi_inv, xi_inv_rec] {
            let back = inv(w.word()).map_err(|e| format!("{w}: {e}"))?;
            ensure(back.is_isomorphic(m), || format!("inverse of {w} is another map"))?;
        }
        checked += 1;
    }
    Ok(format!("{checked} maps"))
}

fn phi_checks(maps: &[Vec<RootedMap>]) -> Check {
    let mut checked = 0;
    for m in maps.iter().flatten() {
        let Ok(f) = phi(m) else {
            ensure(!m.is_nonseparable(), || format!("phi rejects the nonseparable map {}", xi(m)))?;
            continue;
        };
        ensure(is_fighting_fish(f.word()), || format!("phi gives the non-fish {f}"))?;
        ensure(phi_rec(m).ok().as_ref() == Some(&f), || format!("phi and phi_rec differ on {f}"))?;
        let back = phi_inv(f.word()).map_err(|e| format!("{f}: {e}"))?;
        ensure(back.is_isomorphic(m), || format!("phi_inv of {f} is another map"))?;
        checked += 1;
    }
    Ok(format!("{checked} nonseparable maps"))
}

fn duality(maps: &[Vec<RootedMap>]) -> Check {
    for m in maps.iter().flatten() {
        let (w, d) = (xi(m), xi(&m.dual()));
        ensure(m.dual().dual().is_isomorphic(m), || format!("dual is not an involution on {w}"))?;
        ensure(d.word() == &dual_word(w.word()), || format!("xi of the dual of {w} is {d}"))?;
    }
    Ok("xi commutes with duality".into())
}

fn statistics(maps: &[Vec<RootedMap>]) -> Check {
    let mut pairs = 0;
    for m in maps.iter().flatten() {
        for p in statistics_check(m) {
            ensure(p.holds(), || format!("{} on {}: {} vs {}", p.name, xi(m), p.map_side, p.word_side))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} statistic pairs"))
}

fn bridge_free(maps: &[Vec<RootedMap>]) -> Check {
    for (n, level) in maps.iter().enumerate() {
        let (mut loopless, mut bridgeless) = (0, 0);
        for m in level {
            let (st, w) = (m.stats(), xi(m));
            let up = up_bridges(w.word()).map_err(|e| e.to_string())?;
            let down = down_bridges(w.word()).map_err(|e| e.to_string())?;
            ensure((st.loops == 0) == (up == 0), || format!("{w}: loopless and up-bridge-free disagree"))?;
            ensure((st.bridges == 0) == (down == 0), || format!("{w}: bridgeless and down-bridge-free disagree"))?;
            loopless += usize::from(up == 0);
            bridgeless += usize::from(down == 0);
        }
        let up_free = all_up_bridge_free(n).len();
        let down_free = all_down_bridge_free(n).len();
        ensure(loopless == up_free, || format!("n={n}: {loopless} loopless maps, closure gives {up_free}"))?;
        ensure(bridgeless == down_free, || format!("n={n}: {bridgeless} bridgeless maps, closure gives {down_free}"))?;
    }
    Ok("loopless and bridgeless maps match the closures".into())
}

fn mullin(maps: &[Vec<RootedMap>]) -> Check {
    let mut trees = 0;
    for (n, level) in maps.iter().enumerate() {
        let mut here = 0;
        for t in level.iter().flat_map(all_spanning_trees) {
            let w = mullin_encode(&t);
            let back = mullin_decode(&w).map_err(|e| format!("{w}: {e}"))?;
            ensure(back.canonical_form() == t.canonical_form(), || format!("decode(encode) differs for {w}"))?;
            ensure(duality_commutes(&t), || format!("code of the dual of {w} is not its dual word"))?;
            here += 1;
        }
        let words = all_excursions(2 * n);
        ensure(here == words.len(), || format!("n={n}: {here} tree-rooted maps, {} excursions", words.len()))?;
        for w in words {
            let t = mullin_decode(&w).map_err(|e| format!("{w}: {e}"))?;
            ensure(mullin_encode(&t) == w, || format!("encode(decode({w})) = {}", mullin_encode(&t)))?;
        }
        trees += here;
    }
    Ok(format!("{trees} tree-rooted maps"))
}

fn recognizers(max_len: usize) -> Check {
    let mut words = 0;
    for len in (0..=max_len).step_by(2) {
        let gff: BTreeSet<_> = all_gff(len / 2).into_iter().map(|g| g.into_word()).collect();
        let fish: BTreeSet<_> = all_ff(len / 2).into_iter().map(|f| f.into_word()).collect();
        for w in all_excursions(len) {
            ensure(is_gff(&w) == gff.contains(&w), || format!("is_gff is wrong on {w}"))?;
            let a = is_fighting_fish(&w);
            ensure(a == fish.contains(&w), || format!("is_fighting_fish is wrong on {w}"))?;
            ensure(a == is_fighting_fish_by_decoding(&w), || format!("recognizers disagree on {w}"))?;
            words += 1;
        }
    }
    Ok(format!("{words} excursions of length <= {max_len}"))
}

fn strip_gluings(max: usize) -> Check {
    for n in 2..=max {
        let glued: BTreeSet<_> = all_strip_glued(n).into_iter().collect();
        let fish: BTreeSet<_> = all_ff(n).into_iter().map(|f| f.into_word()).collect();
        ensure(glued == fish, || format!("size {n}: {} glued words, {} fish", glued.len(), fish.len()))?;
    }
    Ok(format!("sizes 2..={max}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_limit_passes() {
        for o in run(3) {
            assert!(o.passed(), "{}: {:?}", o.name, o.result);
        }
    }
}
