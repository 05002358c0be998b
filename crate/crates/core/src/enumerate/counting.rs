//! Exact count tables by statistic, from the decomposition recurrences.
//!
//! Tables grow on demand, one statistic column at a time. Tails are never
//! summed directly but recovered from the closed-form row totals, so every
//! stored entry is exact whatever the current width of the table.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;

use super::formulas::{formula_ff, formula_maps};
use super::ntt::Crt;

/// A family of columns, each holding one statistic value for every size
/// `0..=n`, with the transforms of their residues.
#[derive(Clone, Debug, Default)]
struct Plane {
    vals: Vec<Vec<BigUint>>,
    /// `below[k][m]` is the sum of columns `0..k` at size `m`.
    below: Vec<Vec<BigUint>>,
    /// `hat[k][t]` is the transform of column `k` modulo prime `t`.
    hat: Vec<Vec<Vec<u64>>>,
}

impl Plane {
    fn width(&self) -> usize {
        self.vals.len()
    }

    fn push(&mut self, crt: &Crt, len: usize, col: Vec<BigUint>) {
        let below = match (self.below.last(), self.vals.last()) {
            (Some(b), Some(v)) => b.iter().zip(v).map(|(x, y)| x + y).collect(),
            _ => vec![BigUint::zero(); col.len()],
        };
        let mut hat = vec![vec![0u64; len]; crt.len()];
        for (m, v) in col.iter().enumerate() {
            if !v.is_zero() {
                for (h, r) in hat.iter_mut().zip(crt.reduce(v)) {
                    h[m] = r;
                }
            }
        }
        for (h, q) in hat.iter_mut().zip(&crt.primes) {
            q.transform(h, false);
        }
        self.below.push(below);
        self.vals.push(col);
        self.hat.push(hat);
    }

    /// Sum of columns `0..k` at size `m`; needs columns below `k`.
    fn below(&self, m: usize, k: usize) -> BigUint {
        if k == 0 {
            BigUint::zero()
        } else {
            &self.below[k - 1][m] + &self.vals[k - 1][m]
        }
    }
}

/// `sum over pairs of a[k] * b[k]` for every transform index, back in
/// coefficient space for every prime: the product of the column pairs.
fn convolve(crt: &Crt, len: usize, pairs: &[(&Vec<Vec<u64>>, &Vec<Vec<u64>>)]) -> Vec<Vec<u64>> {
    crt.primes
        .iter()
        .enumerate()
        .map(|(t, q)| {
            let mut acc = vec![0u128; len];
            for (a, b) in pairs {
                for ((s, &x), &y) in acc.iter_mut().zip(&a[t]).zip(&b[t]) {
                    *s += u128::from(x * y);
                }
            }
            let mut c: Vec<u64> = acc.iter().map(|&s| (s % u128::from(q.p)) as u64).collect();
            q.transform(&mut c, true);
            c
        })
        .collect()
}

/// Exact value of coefficient `i` of a convolution.
fn coefficient(crt: &Crt, conv: &[Vec<u64>], i: usize) -> BigUint {
    let r: Vec<u64> = conv.iter().map(|c| c[i]).collect();
    crt.reconstruct(&r)
}

/// Transform length for linear products of columns of sizes `0..=n`.
fn transform_len(n: usize) -> usize {
    (2 * (n + 1)).next_power_of_two()
}

/// Gff counts `N(n, ell)`: the `oplus` and `augment` recurrences.
///
/// Column `ell` depends on lower columns only, so columns are built whole
/// and on demand, and the gluing sum of a column is a product of complete
/// columns.
#[derive(Clone, Debug)]
pub(crate) struct GffTable {
    n: usize,
    len: usize,
    crt: Crt,
    totals: Vec<BigUint>,
    t: Plane,
}

impl GffTable {
    pub(crate) fn new(n: usize) -> Self {
        let totals: Vec<BigUint> = (0..=n).map(formula_maps).collect();
        let len = transform_len(n);
        GffTable { n, len, crt: Crt::new(totals[n].bits() + 1, len), totals, t: Plane::default() }
    }

    pub(crate) fn total(&self, n: usize) -> &BigUint {
        &self.totals[n]
    }

    /// Makes `N(m, l')` available for all sizes and `l' <= l`.
    pub(crate) fn ensure(&mut self, l: usize) {
        while self.t.width() <= l {
            let col = self.column(self.t.width());
            self.t.push(&self.crt, self.len, col);
        }
    }

    fn column(&self, l: usize) -> Vec<BigUint> {
        let mut col = vec![BigUint::zero(); self.n + 1];
        if l == 0 {
            col[0] = BigUint::from(1u32);
            return col;
        }
        // augment at visit l - 1 of any Gff of size m - 1 with ell >= l - 1
        for m in 1..=self.n {
            col[m] = &self.totals[m - 1] - self.t.below(m - 1, l - 1);
        }
        if l >= 2 {
            let pairs: Vec<_> = (0..=l - 2).map(|l1| (&self.t.hat[l1], &self.t.hat[l - 2 - l1])).collect();
            let conv = convolve(&self.crt, self.len, &pairs);
            for m in 1..=self.n {
                // a Gff of size m has ell <= 2m
                if l <= 2 * m {
                    col[m] += coefficient(&self.crt, &conv, m - 1);
                }
            }
        }
        col
    }

    /// `N(n, l)`; must be ensured.
    pub(crate) fn get(&self, n: usize, l: usize) -> &BigUint {
        &self.t.vals[l][n]
    }

    /// `sum_{l' >= l} N(n, l')`; needs columns below `l`.
    pub(crate) fn suffix(&self, n: usize, l: usize) -> BigUint {
        &self.totals[n] - self.t.below(n, l)
    }
}

/// Fish counts `f(n, j)` by jaw, and `g(n, j)` for the fish that are not a
/// gluing (the head and the augmented fish). Built like [`GffTable`].
#[derive(Clone, Debug)]
pub(crate) struct FishTable {
    n: usize,
    len: usize,
    crt: Crt,
    totals: Vec<BigUint>,
    f: Plane,
    g: Plane,
}

impl FishTable {
    pub(crate) fn new(n: usize) -> Self {
        let totals: Vec<BigUint> = (0..=n).map(formula_ff).collect();
        let len = transform_len(n);
        FishTable { n, len, crt: Crt::new(totals[n].bits() + 1, len), totals, f: Plane::default(), g: Plane::default() }
    }

    pub(crate) fn total(&self, n: usize) -> &BigUint {
        &self.totals[n]
    }

    /// Makes `f(m, j')` and `g(m, j')` available for all sizes and `j' <= j`.
    pub(crate) fn ensure(&mut self, j: usize) {
        while self.f.width() <= j {
            let (g, f) = self.column(self.f.width());
            self.g.push(&self.crt, self.len, g);
            self.f.push(&self.crt, self.len, f);
        }
    }

    fn column(&self, j: usize) -> (Vec<BigUint>, Vec<BigUint>) {
        let mut g = vec![BigUint::zero(); self.n + 1];
        if j == 0 {
            return (g.clone(), g);
        }
        if j == 1 && self.n >= 2 {
            g[2] = BigUint::from(1u32);
        }
        for m in 3..=self.n {
            g[m] = &self.totals[m - 1] - self.f.below(m - 1, j);
        }
        let mut f = g.clone();
        if j >= 2 {
            let pairs: Vec<_> = (1..j).map(|i| (&self.g.hat[i], &self.f.hat[j - i])).collect();
            let conv = convolve(&self.crt, self.len, &pairs);
            // a fish of size m has jaw at most m - 1
            for m in j + 1..=self.n {
                f[m] += coefficient(&self.crt, &conv, m + 1);
            }
        }
        (g, f)
    }

    pub(crate) fn f(&self, n: usize, j: usize) -> &BigUint {
        &self.f.vals[j][n]
    }

    pub(crate) fn g(&self, n: usize, j: usize) -> &BigUint {
        &self.g.vals[j][n]
    }

    /// `sum_{j' >= j} f(n, j')`; needs columns below `j`.
    pub(crate) fn suffix(&self, n: usize, j: usize) -> BigUint {
        &self.totals[n] - self.f.below(n, j)
    }
}

/// Exact counts indexed by size and one statistic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    class: String,
    stat: String,
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn new(class: impl Into<String>, stat: impl Into<String>, rows: Vec<Vec<BigUint>>) -> Self {
        CountTable { class: class.into(), stat: stat.into(), rows }
    }

    /// Table built from `(size, statistic)` observations.
    pub fn from_observations(
        class: impl Into<String>,
        stat: impl Into<String>,
        max_size: usize,
        items: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut rows = vec![Vec::new(); max_size + 1];
        for (n, s) in items {
            let row: &mut Vec<BigUint> = &mut rows[n];
            if row.len() <= s {
                row.resize(s + 1, BigUint::zero());
            }
            row[s] += 1u32;
        }
        CountTable::new(class, stat, rows)
    }

    pub fn class(&self) -> &str {
        &self.class
    }

    pub fn stat(&self) -> &str {
        &self.stat
    }

    pub fn max_size(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn get(&self, n: usize, s: usize) -> BigUint {
        self.rows.get(n).and_then(|r| r.get(s)).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        self.rows.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn total(&self, n: usize) -> BigUint {
        self.row(n).iter().sum()
    }

    /// `class,n,stat,count` lines: one per nonzero entry, then one
    /// `total` line per size.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("class,n,stat,count\n");
        for (n, row) in self.rows.iter().enumerate() {
            for (s, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    writeln!(out, "{},{n},{}={s},{c}", self.class, self.stat).unwrap();
                }
            }
            writeln!(out, "{},{n},total,{}", self.class, self.total(n)).unwrap();
        }
        out
    }
}

/// Gff (equivalently rooted maps) by size and latitude-0 visits.
pub fn count_gff(n: usize) -> CountTable {
    let width = 2 * n;
    let mut t = GffTable::new(n);
    t.ensure(width);
    let rows = (0..=n).map(|m| (0..=width).map(|l| t.get(m, l).clone()).collect()).collect();
    CountTable::new("gff", "ell", rows)
}

/// Fighting fish (equivalently nonseparable maps) by size and jaw.
pub fn count_ff(n: usize) -> CountTable {
    let width = n.max(1);
    let mut t = FishTable::new(n);
    t.ensure(width);
    let rows = (0..=n).map(|m| (0..=width).map(|j| t.f(m, j).clone()).collect()).collect();
    CountTable::new("ff", "jaw", rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_ff, all_gff};

    fn big(v: u32) -> BigUint {
        v.into()
    }

    #[test]
    fn gff_rows() {
        let t = count_gff(5);
        assert_eq!(t.total(1), big(2));
        assert_eq!(t.row(2)[1..5], [big(2), big(2), big(3), big(2)]);
        assert_eq!(t.total(2), big(9));
        assert_eq!(t.total(5), big(2916));
        assert_eq!(t.get(0, 0), big(1));
        for n in 0..=4 {
            let seen = CountTable::from_observations("gff", "ell", n, all_gff(n).iter().map(|g| (n, g.ell())));
            for l in 0..=2 * n {
                assert_eq!(t.get(n, l), seen.get(n, l), "n={n} ell={l}");
            }
        }
        let wide = count_gff(9);
        for n in 0..=9 {
            assert_eq!(wide.total(n), formula_maps(n));
        }
    }

    #[test]
    fn fish_rows() {
        let t = count_ff(7);
        assert_eq!(t.row(4)[1..4], [big(2), big(3), big(1)]);
        let totals: Vec<BigUint> = (2..=7).map(|n| t.total(n)).collect();
        assert_eq!(totals, [1u32, 2, 6, 22, 91, 408].map(big));
        assert_eq!(t.total(1), big(0));
        for n in 2..=6 {
            let seen = CountTable::from_observations("ff", "jaw", n, all_ff(n).iter().map(|f| (n, f.jaw())));
            for j in 0..=n {
                assert_eq!(t.get(n, j), seen.get(n, j), "n={n} jaw={j}");
            }
        }
        let wide = count_ff(12);
        for n in 2..=12 {
            assert_eq!(wide.total(n), formula_ff(n));
        }
    }

    #[test]
    fn narrow_tables_agree_with_full_ones() {
        let full = count_ff(12);
        let mut t = FishTable::new(12);
        t.ensure(2);
        t.ensure(3);
        for n in 0..=12 {
            for j in 0..=3 {
                assert_eq!(*t.f(n, j), full.get(n, j));
            }
            assert_eq!(t.suffix(n, 4), full.row(n).iter().skip(4).sum::<BigUint>());
        }
        let full = count_gff(10);
        let mut t = GffTable::new(10);
        t.ensure(4);
        for n in 0..=10 {
            for l in 0..=4 {
                assert_eq!(*t.get(n, l), full.get(n, l));
            }
        }
    }

    #[test]
    fn csv_layout() {
        let csv = count_ff(3).to_csv();
        assert!(csv.starts_with("class,n,stat,count\n"));
        assert!(csv.contains("ff,3,jaw=1,1\n"));
        assert!(csv.contains("ff,3,jaw=2,1\n"));
        assert!(csv.contains("ff,3,total,2\n"));
    }
}
