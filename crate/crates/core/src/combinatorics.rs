//! Exact integer factorials and binomials.

use num_bigint::BigInt;
use num_traits::One;

pub fn factorial(n: usize) -> BigInt {
    falling_factorial(n, n)
}

/// `n (n-1) ... (n-k+1)`, i.e. `n! / (n-k)!`; zero when `k > n`.
pub fn falling_factorial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    ((n - k + 1)..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    falling_factorial(n, k) / factorial(k)
}
