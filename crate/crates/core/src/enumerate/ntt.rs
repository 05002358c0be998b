//! Number-theoretic transforms over word-size primes and exact
//! reconstruction of big integers from their residues.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::Zero;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn distinct_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A prime `p < 2^31` with `2^k | p - 1`, and a primitive root.
#[derive(Clone, Copy, Debug)]
pub(crate) struct NttPrime {
    pub(crate) p: u64,
    root: u64,
}

impl NttPrime {
    fn new(p: u64) -> Self {
        let qs = distinct_factors(p - 1);
        let root = (2..p).find(|&g| qs.iter().all(|q| pow_mod(g, (p - 1) / q, p) != 1)).expect("primes have roots");
        NttPrime { p, root }
    }

    /// In-place cyclic transform; `a.len()` is a power of two dividing `p - 1`.
    pub(crate) fn transform(&self, a: &mut [u64], inverse: bool) {
        let n = a.len();
        let p = self.p;
        let mut j = 0;
        for i in 1..n {
            let mut bit = n >> 1;
            while j & bit != 0 {
                j ^= bit;
                bit >>= 1;
            }
            j |= bit;
            if i < j {
                a.swap(i, j);
            }
        }
        let mut len = 2;
        while len <= n {
            let mut w = pow_mod(self.root, (p - 1) / len as u64, p);
            if inverse {
                w = pow_mod(w, p - 2, p);
            }
            let half = len / 2;
            let mut ws = Vec::with_capacity(half);
            let mut x = 1;
            for _ in 0..half {
                ws.push(x);
                x = x * w % p;
            }
            for chunk in a.chunks_mut(len) {
                let (lo, hi) = chunk.split_at_mut(half);
                for ((u, v), &wk) in lo.iter_mut().zip(hi.iter_mut()).zip(&ws) {
                    let t = *v * wk % p;
                    *v = (*u + p - t) % p;
                    *u = (*u + t) % p;
                }
            }
            len <<= 1;
        }
        if inverse {
            let inv = pow_mod(n as u64, p - 2, p);
            for x in a.iter_mut() {
                *x = *x * inv % p;
            }
        }
    }
}

/// Primes `c 2^k + 1` found so far, by `k`, largest first.
static FOUND: Mutex<BTreeMap<u32, (u64, Vec<NttPrime>)>> = Mutex::new(BTreeMap::new());

/// The largest primes `c 2^k + 1 < 2^31` until their product exceeds `2^bits`.
fn primes_for(bits: u64, k: u32) -> Vec<NttPrime> {
    let mut found = FOUND.lock().unwrap_or_else(|e| e.into_inner());
    let (next_c, primes) = found.entry(k).or_insert_with(|| (((1u64 << 31) - 1) >> k, Vec::new()));
    let mut out = Vec::new();
    let mut covered = 0;
    let mut at = 0;
    while covered <= bits {
        if at == primes.len() {
            loop {
                assert!(*next_c > 0, "not enough transform primes for {bits} bits at length 2^{k}");
                let p = (*next_c << k) + 1;
                *next_c -= 1;
                if is_prime(p) {
                    primes.push(NttPrime::new(p));
                    break;
                }
            }
        }
        let q = primes[at];
        covered += 63 - u64::from(q.p.leading_zeros());
        out.push(q);
        at += 1;
    }
    out
}

/// Transform primes whose product exceeds `2^bits`.
#[derive(Clone, Debug)]
pub(crate) struct Crt {
    pub(crate) primes: Vec<NttPrime>,
    /// `inv[j][i]` is the inverse of `p_i` modulo `p_j`, for `i < j`.
    inv: Vec<Vec<u64>>,
}

impl Crt {
    /// Primes supporting transforms of length `len` (a power of two).
    pub(crate) fn new(bits: u64, len: usize) -> Self {
        let primes = primes_for(bits, len.trailing_zeros());
        let inv = (0..primes.len())
            .map(|j| (0..j).map(|i| pow_mod(primes[i].p, primes[j].p - 2, primes[j].p)).collect())
            .collect();
        Crt { primes, inv }
    }

    pub(crate) fn len(&self) -> usize {
        self.primes.len()
    }

    pub(crate) fn reduce(&self, x: &BigUint) -> Vec<u64> {
        let digits = x.to_u32_digits();
        self.primes.iter().map(|q| digits.iter().rev().fold(0, |r, &d| ((r << 32) | u64::from(d)) % q.p)).collect()
    }

    /// The integer below the product of the primes with residues `r`.
    pub(crate) fn reconstruct(&self, r: &[u64]) -> BigUint {
        let k = self.len();
        let mut a = vec![0u64; k];
        for j in 0..k {
            let p = self.primes[j].p;
            let mut t = r[j];
            for i in 0..j {
                t = (t + p - a[i] % p) % p * self.inv[j][i] % p;
            }
            a[j] = t;
        }
        if a.iter().all(|&x| x == 0) {
            return BigUint::zero();
        }
        let mut x = BigUint::zero();
        for i in (0..k).rev() {
            x = x * self.primes[i].p + a[i];
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_products() {
        let crt = Crt::new(100, 16);
        let a = [3u64, 1, 4, 1, 5];
        let b = [2u64, 7, 1, 8];
        let mut naive = [0u64; 8];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                naive[i + j] += x * y;
            }
        }
        for q in &crt.primes {
            let mut fa = vec![0; 16];
            let mut fb = vec![0; 16];
            fa[..5].copy_from_slice(&a);
            fb[..4].copy_from_slice(&b);
            q.transform(&mut fa, false);
            q.transform(&mut fb, false);
            let mut c: Vec<u64> = fa.iter().zip(&fb).map(|(x, y)| x * y % q.p).collect();
            q.transform(&mut c, true);
            assert_eq!(c[..8], naive);
        }
    }

    #[test]
    fn reconstruction() {
        let crt = Crt::new(400, 1024);
        let x = BigUint::from(3u32).pow(250) + 17u32;
        assert_eq!(crt.reconstruct(&crt.reduce(&x)), x);
        assert_eq!(crt.reconstruct(&crt.reduce(&BigUint::zero())), BigUint::zero());
    }
}
