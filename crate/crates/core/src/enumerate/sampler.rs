//! Exact uniform samplers driven by the count tables.
//!
//! The tables are extended lazily, so a draw only pays for the statistic
//! values and sizes its random choices actually reach.

use num_bigint::RandBigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::counting::{FishTable, GffTable};
use crate::bijection::xi_inv;
use crate::gff::{FightingFish, Gff};
use crate::map::RootedMap;
use crate::word::{LatticeWord, Step};

/// Name of the generator behind the seeded samplers.
pub const RNG_ALGORITHM: &str = "chacha8";

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform Gff of size `n`, reusable across draws.
pub struct GffSampler {
    n: usize,
    table: GffTable,
}

impl GffSampler {
    pub fn new(n: usize) -> Self {
        GffSampler { n, table: GffTable::new(n) }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn sample<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Gff {
        if self.n == 0 {
            return Gff::empty();
        }
        let mut r = rng.gen_biguint_below(self.table.total(self.n));
        let mut l = 0;
        loop {
            self.table.ensure(l);
            let c = self.table.get(self.n, l);
            if r < *c {
                break;
            }
            r -= c;
            l += 1;
        }
        let mut out = Vec::with_capacity(2 * self.n);
        self.emit(self.n, l, rng, &mut out);
        Gff::new_unchecked(LatticeWord::from_steps(out))
    }

    /// Appends a uniform Gff of size `n` with statistic `l` (ensured).
    fn emit<R: Rng + ?Sized>(&mut self, n: usize, l: usize, rng: &mut R, out: &mut Vec<Step>) {
        if n == 0 {
            return;
        }
        let mut r = rng.gen_biguint_below(self.table.get(n, l));
        let augmented = self.table.suffix(n - 1, l - 1);
        if r < augmented {
            let mut l1 = l - 1;
            loop {
                self.table.ensure(l1);
                let c = self.table.get(n - 1, l1);
                if r < *c {
                    break;
                }
                r -= c;
                l1 += 1;
            }
            let start = out.len();
            self.emit(n - 1, l1, rng, out);
            augment_in_place(out, start, l - 1);
            return;
        }
        r -= augmented;
        for n1 in 0..n {
            let n2 = n - 1 - n1;
            for l1 in 0..=l - 2 {
                let w = self.table.get(n1, l1) * self.table.get(n2, l - 2 - l1);
                if r < w {
                    self.emit(n1, l1, rng, out);
                    out.push(Step::E);
                    self.emit(n2, l - 2 - l1, rng, out);
                    out.push(Step::W);
                    return;
                }
                r -= w;
            }
        }
        unreachable!("weights sum to the table entry");
    }
}

/// Lifts `out[start..]` after its `i`-th latitude-0 visit.
fn augment_in_place(out: &mut Vec<Step>, start: usize, i: usize) {
    let mut lat = 0i64;
    let mut cut = start;
    let mut seen = 0;
    if i > 0 {
        for (k, s) in out[start..].iter().enumerate() {
            lat += s.delta().1;
            if lat == 0 {
                seen += 1;
                if seen == i {
                    cut = start + k + 1;
                    break;
                }
            }
        }
    }
    out.insert(cut, Step::N);
    out.push(Step::S);
}

/// Uniform fighting fish of size `n >= 2`, reusable across draws.
pub struct FishSampler {
    n: usize,
    table: FishTable,
}

impl FishSampler {
    pub fn new(n: usize) -> Option<Self> {
        (n >= 2).then(|| FishSampler { n, table: FishTable::new(n) })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn sample<R: Rng + ?Sized>(&mut self, rng: &mut R) -> FightingFish {
        let mut r = rng.gen_biguint_below(self.table.total(self.n));
        let mut j = 1;
        loop {
            self.table.ensure(j);
            let c = self.table.f(self.n, j);
            if r < *c {
                break;
            }
            r -= c;
            j += 1;
        }
        FightingFish::new_unchecked(LatticeWord::from_steps(self.fish(self.n, j, rng)))
    }

    /// Uniform fish of size `n` and jaw `j` (ensured).
    fn fish<R: Rng + ?Sized>(&mut self, n: usize, j: usize, rng: &mut R) -> Vec<Step> {
        let mut r = rng.gen_biguint_below(self.table.f(n, j));
        let single = self.table.g(n, j);
        if r < *single {
            return self.single(n, j, rng);
        }
        r -= single;
        for n1 in 2..n {
            let n2 = n + 1 - n1;
            for i in 1..j.min(n1) {
                let (a, b) = (self.table.g(n1, i), self.table.f(n2, j - i));
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let w = a * b;
                if r < w {
                    let left = self.single(n1, i, rng);
                    let right = self.fish(n2, j - i, rng);
                    return odot_words(&left, &right);
                }
                r -= w;
            }
        }
        unreachable!("weights sum to the table entry");
    }

    /// Uniform fish of size `n` and jaw `j` that is the head or augmented.
    fn single<R: Rng + ?Sized>(&mut self, n: usize, j: usize, rng: &mut R) -> Vec<Step> {
        if n == 2 {
            return vec![Step::E, Step::N, Step::W, Step::S];
        }
        let mut r = rng.gen_biguint_below(&self.table.suffix(n - 1, j));
        let mut a = j;
        loop {
            self.table.ensure(a);
            let c = self.table.f(n - 1, a);
            if r < *c {
                break;
            }
            r -= c;
            a += 1;
        }
        let mut w = self.fish(n - 1, a, rng);
        w.insert(j, Step::N);
        w.push(Step::S);
        w
    }
}

fn odot_words(a: &[Step], b: &[Step]) -> Vec<Step> {
    let k = crate::word::jaw(a);
    [&a[..k], &b[..b.len() - 1], &a[k + 1..]].concat()
}

pub fn sample_gff(n: usize, seed: u64) -> Gff {
    GffSampler::new(n).sample(&mut seeded_rng(seed))
}

/// `None` below size 2, where there is no fish.
pub fn sample_ff(n: usize, seed: u64) -> Option<FightingFish> {
    FishSampler::new(n).map(|mut s| s.sample(&mut seeded_rng(seed)))
}

pub fn sample_map(n: usize, seed: u64) -> RootedMap {
    xi_inv(sample_gff(n, seed).word()).expect("sampled words are Gff")
}
