//! Prime tests, Legendre's formula and the p-adic tail cutoff.

/// Deterministic trial division; inputs are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `v_p(n!) = sum_{i>=1} floor(n / p^i)`.
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    debug_assert!(p >= 2);
    let mut total = 0;
    let mut q = n;
    while q > 0 {
        q /= p;
        total += q;
    }
    total
}

/// Smallest `N*` such that every `n >= N*` has
/// `v_p(n!) + floor(n / order) * strict_beta >= precision`.
///
/// Both summands are non-decreasing in `n`, so the first `n` satisfying the
/// bound is the answer. For `order == 0` only the factorial term counts.
pub fn tail_cutoff(p: u64, precision: u32, strict_beta: u32, order: usize) -> usize {
    let target = u64::from(precision);
    let mut n = 0usize;
    loop {
        let strict = n
            .checked_div(order)
            .map_or(0, |q| q as u64 * u64::from(strict_beta));
        if factorial_valuation(n as u64, p) + strict >= target {
            return n;
        }
        n += 1;
    }
}
