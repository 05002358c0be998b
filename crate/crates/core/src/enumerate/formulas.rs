//! Closed enumeration formulas, evaluated exactly.

use num_bigint::BigUint;
use num_traits::{One, Zero};

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Fighting fish of size `size`, i.e. nonseparable maps with `size` edges:
/// `2 (3n)! / ((n+1)! (2n+1)!)` with `n = size - 1`. Zero below size 2.
pub fn formula_ff(size: usize) -> BigUint {
    if size < 2 {
        return BigUint::zero();
    }
    let n = size - 1;
    BigUint::from(2u32) * factorial(3 * n) / (factorial(n + 1) * factorial(2 * n + 1))
}

/// Fighting fish with `i` steps `E` and `j` steps `N`:
/// `(2i+j-2)! (2j+i-2)! / (i! j! (2i-1)! (2j-1)!)`. Zero unless `i, j >= 1`.
pub fn formula_ff_ij(i: usize, j: usize) -> BigUint {
    if i == 0 || j == 0 {
        return BigUint::zero();
    }
    factorial(2 * i + j - 2) * factorial(2 * j + i - 2)
        / (factorial(i) * factorial(j) * factorial(2 * i - 1) * factorial(2 * j - 1))
}

/// Rooted planar maps with `n` edges: `2 * 3^n (2n)! / (n! (n+2)!)`.
pub fn formula_maps(n: usize) -> BigUint {
    BigUint::from(2u32) * BigUint::from(3u32).pow(n as u32) * factorial(2 * n) / (factorial(n) * factorial(n + 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn univariate() {
        let got: Vec<BigUint> = (2..=7).map(formula_ff).collect();
        let want: Vec<BigUint> = [1u32, 2, 6, 22, 91, 408].iter().map(|&v| v.into()).collect();
        assert_eq!(got, want);
        assert!(formula_ff(1).is_zero());
    }

    #[test]
    fn bivariate() {
        assert_eq!(formula_ff_ij(1, 1), 1u32.into());
        assert_eq!(formula_ff_ij(2, 3), 10u32.into());
        assert_eq!(formula_ff_ij(3, 2), 10u32.into());
        assert_eq!(formula_ff_ij(2, 1), 1u32.into());
        let row: BigUint = (1..5).map(|i| formula_ff_ij(i, 5 - i)).sum();
        assert_eq!(row, formula_ff(5));
        assert_eq!(row, 22u32.into());
        assert!(formula_ff_ij(0, 3).is_zero());
    }

    #[test]
    fn maps() {
        let got: Vec<BigUint> = (0..=5).map(formula_maps).collect();
        let want: Vec<BigUint> = [1u32, 2, 9, 54, 378, 2916].iter().map(|&v| v.into()).collect();
        assert_eq!(got, want);
    }
}
