//! Small-integer factorization helpers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factor_u64(n).into_iter().map(|(p, _)| p).collect()
}

/// `Some((p, k))` when `n = p^k` with `k ≥ 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factor_u64(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// Trial division of an arbitrary-size integer. Gives up (`None`) when the
/// cofactor left after removing primes below `limit` does not fit a `u64`.
pub fn factor_biguint(n: &BigUint, limit: u64) -> Option<Vec<(u64, u32)>> {
    if n.is_zero() {
        return None;
    }
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= limit && !n.is_one() {
        if let Some(small) = n.to_u64() {
            let mut rest = factor_u64(small);
            out.append(&mut rest);
            return Some(out);
        }
        let bd = BigUint::from(d);
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&bd);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n.is_one() {
        Some(out)
    } else {
        let small = n.to_u64()?;
        out.append(&mut factor_u64(small));
        Some(out)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
