//! Exhaustive generation: brute force over rotation systems, and the
//! recursive grammars on maps, Gff and fighting fish.

use std::collections::HashSet;

use thiserror::Error;

use crate::gff::{fish_augment, fish_odot, gff_augment, gff_oplus, FightingFish, Gff};
use crate::map::RootedMap;
use crate::word::{LatticeWord, Step};

/// Largest size [`brute_force_maps`] accepts: `(2n)!` permutations.
pub const BRUTE_FORCE_LIMIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("size {n} is beyond the limit {limit}")]
pub struct LimitExceeded {
    pub n: usize,
    pub limit: usize,
}

/// All rooted planar maps with `n` edges, one per isomorphism class, found
/// by trying every vertex permutation on `2n` half-edges with root `0`.
pub fn brute_force_maps(n: usize) -> Result<Vec<RootedMap>, LimitExceeded> {
    brute_force_maps_with_limit(n, BRUTE_FORCE_LIMIT)
}

pub fn brute_force_maps_with_limit(n: usize, limit: usize) -> Result<Vec<RootedMap>, LimitExceeded> {
    if n > limit {
        return Err(LimitExceeded { n, limit });
    }
    if n == 0 {
        return Ok(vec![RootedMap::vertex()]);
    }
    let len = 2 * n;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut sigma: Vec<usize> = (0..len).collect();
    let mut consider = |sigma: &[usize]| {
        if !connected_planar(sigma) {
            return;
        }
        let m = RootedMap::from_sigma_unchecked(sigma.to_vec(), Some(0));
        if seen.insert(m.canonical_form()) {
            out.push(m.canonical());
        }
    };
    // Heap's algorithm
    let mut c = vec![0usize; len];
    consider(&sigma);
    let mut i = 1;
    while i < len {
        if c[i] < i {
            if i % 2 == 0 {
                sigma.swap(0, i);
            } else {
                sigma.swap(c[i], i);
            }
            consider(&sigma);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(out)
}

fn connected_planar(sigma: &[usize]) -> bool {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(h) = stack.pop() {
        for g in [sigma[h], h ^ 1] {
            if !seen[g] {
                seen[g] = true;
                reached += 1;
                stack.push(g);
            }
        }
    }
    if reached != n {
        return false;
    }
    let cycles = |f: &dyn Fn(usize) -> usize| {
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut h = s;
            while !seen[h] {
                seen[h] = true;
                h = f(h);
            }
        }
        count
    };
    let v = cycles(&|h| sigma[h]);
    let f = cycles(&|h| sigma[h ^ 1]);
    v + f == n / 2 + 2
}

/// Maps with `n` edges built by `oplus` and `augment` from the vertex map.
pub fn grammar_maps(n: usize) -> Vec<RootedMap> {
    let mut levels: Vec<Vec<RootedMap>> = vec![vec![RootedMap::vertex()]];
    for size in 1..=n {
        let mut level = Vec::new();
        for n1 in 0..size {
            for a in &levels[n1] {
                for b in &levels[size - 1 - n1] {
                    level.push(a.oplus(b));
                }
            }
        }
        for a in &levels[size - 1] {
            for i in 0..=a.augment_bound() {
                level.push(a.augment(i).expect("index within bound"));
            }
        }
        levels.push(level);
    }
    levels.swap_remove(n)
}

/// Gff of size `n` built by `gff_oplus` and `gff_augment` from the empty word.
pub fn all_gff(n: usize) -> Vec<Gff> {
    let mut levels: Vec<Vec<Gff>> = vec![vec![Gff::empty()]];
    for size in 1..=n {
        let mut level = Vec::new();
        for n1 in 0..size {
            for a in &levels[n1] {
                for b in &levels[size - 1 - n1] {
                    level.push(gff_oplus(a, b));
                }
            }
        }
        for a in &levels[size - 1] {
            for i in 0..=a.ell() {
                level.push(gff_augment(a, i).expect("index within bound"));
            }
        }
        levels.push(level);
    }
    levels.swap_remove(n)
}

/// Fighting fish of size `n` built from the four decomposition cases.
pub fn all_ff(n: usize) -> Vec<FightingFish> {
    let mut levels: Vec<Vec<FightingFish>> = vec![Vec::new(), Vec::new(), vec![FightingFish::head()]];
    for size in 3..=n {
        let mut level = Vec::new();
        let head = FightingFish::head();
        for f1 in &levels[size - 1] {
            for i in 1..=f1.jaw() {
                level.push(fish_augment(f1, i).expect("index within jaw"));
            }
        }
        for f2 in &levels[size - 1] {
            level.push(fish_odot(&head, f2));
        }
        for s1 in 2..size - 1 {
            for f1 in &levels[s1] {
                for i in 1..=f1.jaw() {
                    let a = fish_augment(f1, i).expect("index within jaw");
                    for f2 in &levels[size - s1] {
                        level.push(fish_odot(&a, f2));
                    }
                }
            }
        }
        levels.push(level);
    }
    levels.get(n).cloned().unwrap_or_default()
}

/// All quadrant excursions of the given length, in lexicographic order of
/// `E < N < W < S`.
pub fn all_excursions(len: usize) -> Vec<LatticeWord> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    extend(&mut cur, 0, 0, len, &mut out);
    out
}

fn extend(cur: &mut Vec<Step>, x: i64, y: i64, len: usize, out: &mut Vec<LatticeWord>) {
    let left = (len - cur.len()) as i64;
    if x + y > left {
        return;
    }
    if left == 0 {
        out.push(LatticeWord::from_steps(cur.clone()));
        return;
    }
    for s in Step::ALL {
        let (dx, dy) = s.delta();
        if x + dx < 0 || y + dy < 0 {
            continue;
        }
        cur.push(s);
        extend(cur, x + dx, y + dy, len, out);
        cur.pop();
    }
}
