//! Rational-integer support: a cached prime sieve, bounded factorization,
//! and perfect-square detection.
//!
//! Factoring works by trial division with primes up to sqrt(bound), where
//! bound is the configurable factoring bound (default 10^12). A cofactor
//! that survives trial division and is at most the bound has no divisor
//! up to its own square root, so it is prime; anything larger is reported
//! as a bound failure rather than looped on.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000_000_000;

static FACTOR_BOUND: AtomicU64 = AtomicU64::new(DEFAULT_FACTOR_BOUND);

/// Current factoring bound (largest certified-prime cofactor accepted).
pub fn factor_bound() -> u64 {
    FACTOR_BOUND.load(Ordering::Relaxed)
}

/// Override the factoring bound. The CLI wires QT_FACTOR_BOUND through here.
pub fn set_factor_bound(bound: u64) {
    FACTOR_BOUND.store(bound.max(4), Ordering::Relaxed);
}

static SIEVE: Mutex<Option<(u64, Vec<u64>)>> = Mutex::new(None);

/// Run `f` over the list of primes up to at least `limit`.
pub fn with_primes<R>(limit: u64, f: impl FnOnce(&[u64]) -> R) -> R {
    let mut guard = SIEVE.lock().unwrap();
    let rebuild = match guard.as_ref() {
        Some((lim, _)) => *lim < limit,
        None => true,
    };
    if rebuild {
        let lim = limit.max(1 << 16);
        let mut composite = vec![false; (lim + 1) as usize];
        let mut primes = Vec::new();
        for p in 2..=lim {
            if !composite[p as usize] {
                primes.push(p);
                let mut q = p * p;
                while q <= lim {
                    composite[q as usize] = true;
                    q += p;
                }
            }
        }
        *guard = Some((lim, primes));
    }
    let (lim, primes) = guard.as_ref().unwrap();
    let end = primes.partition_point(|&p| p <= limit.min(*lim));
    f(&primes[..end])
}

fn trial_limit() -> u64 {
    let b = factor_bound();
    let mut s = b.sqrt();
    while s * s < b {
        s += 1;
    }
    s
}

/// Factor |n| into rational primes with exponents, smallest prime first.
///
/// Smooth inputs of any size factor fine; the bound only matters for a
/// rough cofactor, which is accepted as a certified prime when it is at
/// most the bound and reported as `FactorBoundExceeded` otherwise.
pub fn factor_int(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    if n.is_zero() {
        return Err(Error::ZeroInput("factor"));
    }
    let mut m = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if m.is_one() {
        return Ok(out);
    }
    let limit = trial_limit();
    with_primes(limit, |primes| {
        for &p in primes {
            let pb = BigInt::from(p);
            if (&pb * &pb) > m {
                break;
            }
            let mut e = 0u32;
            loop {
                let (q, r) = num_integer::Integer::div_rem(&m, &pb);
                if r.is_zero() {
                    m = q;
                    e += 1;
                } else {
                    break;
                }
            }
            if e > 0 {
                out.push((pb, e));
            }
            if m.is_one() {
                break;
            }
        }
    });
    if !m.is_one() {
        // No prime up to sqrt(bound) divides m. If m <= bound it is prime.
        if m <= BigInt::from(factor_bound()) {
            out.push((m, 1));
        } else {
            // m may still be a prime power of an already-seen small prime?
            // No: all small primes were divided out, so m is rough.
            return Err(Error::FactorBoundExceeded {
                norm: n.abs(),
                cofactor: m,
                bound: factor_bound(),
            });
        }
    }
    Ok(out)
}

/// Primality test by trial division; valid for p with p <= bound.
pub fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut s = p.sqrt();
    while s * s < p {
        s += 1;
    }
    with_primes(s, |primes| primes.iter().all(|&q| q > s || p % q != 0 || p == q))
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// v_p(n) together with n / p^v_p(n), for n != 0.
pub fn val_and_cofactor(n: &BigInt, p: u64) -> (u32, BigInt) {
    let pb = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0u32;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&m, &pb);
        if r.is_zero() && !m.is_zero() {
            m = q;
            v += 1;
        } else {
            return (v, m);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_counts() {
        with_primes(100, |ps| {
            assert_eq!(ps.len(), 25);
            assert_eq!(ps[0], 2);
            assert_eq!(ps[24], 97);
        });
    }

    #[test]
    fn factor_small() {
        let f = factor_int(&BigInt::from(-360)).unwrap();
        assert_eq!(
            f,
            vec![
                (BigInt::from(2), 3),
                (BigInt::from(3), 2),
                (BigInt::from(5), 1)
            ]
        );
    }

    #[test]
    fn factor_certifies_large_prime_cofactor() {
        // 1000003 is prime and above the sieve primes actually needed here.
        let n = BigInt::from(1000003u64) * BigInt::from(8);
        let f = factor_int(&n).unwrap();
        assert_eq!(f.last().unwrap(), &(BigInt::from(1000003u64), 1));
    }

    #[test]
    fn factor_smooth_above_bound_is_fine() {
        // 2^50 * 3^20 is far above 10^12 but entirely smooth.
        let n = BigInt::from(2).pow(50) * BigInt::from(3).pow(20);
        let f = factor_int(&n).unwrap();
        assert_eq!(f, vec![(BigInt::from(2), 50), (BigInt::from(3), 20)]);
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(perfect_sqrt(&BigInt::from(144)), Some(BigInt::from(12)));
        assert_eq!(perfect_sqrt(&BigInt::from(145)), None);
        assert_eq!(perfect_sqrt(&BigInt::from(-4)), None);
        assert_eq!(perfect_sqrt(&BigInt::from(0)), Some(BigInt::from(0)));
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(999983));
        assert!(!is_prime_u64(999981));
        assert!(!is_prime_u64(1));
    }
}
