//! Reduction of short Weierstrass models modulo primes of the ring, point
//! counting over the residue fields, and the resulting torsion filters.
//!
//! For an odd unramified prime of good reduction the whole torsion subgroup
//! injects into the group of points over the residue field (the kernel of
//! reduction is the formal group, which is torsion free here since the
//! ramification index 1 is less than p - 1). Two consequences are used:
//! the torsion order divides every such point count, and the reduction of
//! a torsion point's y-coordinate must be a y-coordinate on the reduced
//! curve. Both checks are sound; they only ever discard non-torsion.

use num_traits::{ToPrimitive, Zero};

use crate::curves::CurveShort;
use crate::error::{Error, Result};
use crate::rings::{QInt, QPrime, RingTag, SplitType};

pub const RESIDUE_BOUND: u64 = 20_000;

/// Count the points of a short model over the residue field of a prime,
/// including the point at infinity.
pub fn reduce_and_count(curve: &CurveShort, prime: &QPrime) -> Result<u64> {
    let q = prime
        .residue_size
        .to_u64()
        .filter(|&q| q <= RESIDUE_BOUND)
        .ok_or_else(|| Error::ResidueFieldTooLarge {
            size: prime.residue_size.clone(),
            bound: RESIDUE_BOUND,
        })?;
    let p = prime.residue_char;
    if p == 2 {
        // a short Weierstrass model is never smooth in characteristic 2
        return Err(Error::BadReduction);
    }
    let count = match prime.split_type {
        SplitType::Inert => count_inert(curve, p)?,
        _ => count_residue_prime(curve, prime)?,
    };
    // Hasse: |N - (q + 1)|^2 <= 4q
    let diff = count as i128 - (q as i128 + 1);
    if diff * diff > 4 * q as i128 {
        return Err(Error::StructureInconsistent(format!(
            "point count {} violates the Hasse bound at q = {}",
            count, q
        )));
    }
    Ok(count)
}

fn modinv(a: u64, p: u64) -> u64 {
    // extended euclid; p prime and a not divisible by p
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible");
    t.rem_euclid(p as i128) as u64
}

/// Image of the ring generator (i or w) in O/prime = F_p, for a split or
/// ramified prime a + b*theta: theta = -a/b mod p.
fn theta_image(prime: &QPrime) -> u64 {
    let p = prime.residue_char;
    let a = red_int(&prime.value.a, p);
    let b = red_int(&prime.value.b, p);
    assert!(b != 0, "split or ramified prime has invertible second coordinate");
    (p - a) % p * modinv(b, p) % p
}

fn red_int(n: &num_bigint::BigInt, p: u64) -> u64 {
    use num_integer::Integer;
    n.mod_floor(&num_bigint::BigInt::from(p)).to_u64().unwrap()
}

/// z mod prime in F_p, for split or ramified primes.
pub fn reduce_element(z: &QInt, prime: &QPrime, theta: u64) -> u64 {
    let p = prime.residue_char;
    let (ra, rb) = (red_int(&z.a, p), red_int(&z.b, p));
    (ra + rb * theta) % p
}

fn count_residue_prime(curve: &CurveShort, prime: &QPrime) -> Result<u64> {
    let p = prime.residue_char;
    let theta = theta_image(prime);
    let a = reduce_element(&curve.a, prime, theta);
    let b = reduce_element(&curve.b, prime, theta);
    let d = reduce_element(&curve.disc_d(), prime, theta);
    if d == 0 {
        return Err(Error::BadReduction);
    }
    let mut roots = vec![0u8; p as usize];
    for y in 0..p {
        roots[(y * y % p) as usize] += 1;
    }
    let mut count = 1u64; // infinity
    for x in 0..p {
        let f = (x * x % p * x % p + a * x % p + b) % p;
        count += roots[f as usize] as u64;
    }
    Ok(count)
}

fn fp2_mul(tag: RingTag, p: u64, x: (u64, u64), y: (u64, u64)) -> (u64, u64) {
    let (a, b) = x;
    let (c, d) = y;
    match tag {
        RingTag::Gaussian => (
            (a * c % p + (p - b * d % p)) % p,
            (a * d % p + b * c % p) % p,
        ),
        RingTag::Omega => (
            (a * c % p + (p - b * d % p)) % p,
            (a * d % p + b * c % p + b * d % p) % p,
        ),
    }
}

fn fp2_norm(tag: RingTag, p: u64, x: (u64, u64)) -> u64 {
    let (a, b) = x;
    match tag {
        RingTag::Gaussian => (a * a % p + b * b % p) % p,
        RingTag::Omega => (a * a % p + a * b % p + b * b % p) % p,
    }
}

fn count_inert(curve: &CurveShort, p: u64) -> Result<u64> {
    let tag = curve.tag();
    let a = (red_int(&curve.a.a, p), red_int(&curve.a.b, p));
    let b = (red_int(&curve.b.a, p), red_int(&curve.b.b, p));
    let dd = curve.disc_d();
    let d = (red_int(&dd.a, p), red_int(&dd.b, p));
    if d == (0, 0) {
        return Err(Error::BadReduction);
    }
    // chi on F_{p^2} factors through the norm to F_p
    let mut is_square_fp = vec![false; p as usize];
    for t in 0..p {
        is_square_fp[(t * t % p) as usize] = true;
    }
    let mut count = 1u64;
    for c in 0..p {
        for e in 0..p {
            let x = (c, e);
            let x2 = fp2_mul(tag, p, x, x);
            let x3 = fp2_mul(tag, p, x2, x);
            let ax = fp2_mul(tag, p, a, x);
            let f = (
                (x3.0 + ax.0 + b.0) % p,
                (x3.1 + ax.1 + b.1) % p,
            );
            if f == (0, 0) {
                count += 1;
            } else {
                let n = fp2_norm(tag, p, f);
                if n != 0 && is_square_fp[n as usize] {
                    count += 2;
                }
            }
        }
    }
    Ok(count)
}

struct FilterPrime {
    theta: u64,
    prime: QPrime,
    allowed_y: Vec<bool>,
}

/// Data gathered from the first few good split primes: the gcd of their
/// point counts bounds the torsion order, and their allowed y-residue sets
/// prune Lutz-Nagell candidates before any factoring happens.
pub struct TorsionFilters {
    order_gcd: u64,
    primes: Vec<FilterPrime>,
}

const FILTER_PRIME_COUNT: usize = 16;

impl TorsionFilters {
    pub fn build(curve: &CurveShort) -> Result<TorsionFilters> {
        let tag = curve.tag();
        let norm_d = curve.disc_d().norm();
        let mut primes = Vec::new();
        let mut order_gcd = 0u64;
        let mut p = 3u64;
        while primes.len() < FILTER_PRIME_COUNT {
            if crate::primes::is_prime_u64(p) && !(&norm_d % p).is_zero() {
                let (st, qp) = crate::rings::splitting_type(p, tag)?;
                if st == SplitType::Split {
                    let theta = theta_image(&qp);
                    let n = count_residue_prime(curve, &qp)?;
                    order_gcd = gcd_u64(order_gcd, n);
                    let a = reduce_element(&curve.a, &qp, theta);
                    let b = reduce_element(&curve.b, &qp, theta);
                    let mut on_curve_y = vec![false; p as usize];
                    for x in 0..p {
                        let f = (x * x % p * x % p + a * x % p + b) % p;
                        on_curve_y[f as usize] = true; // squares y^2 seen below
                    }
                    // allowed y <=> y^2 is a value of the cubic
                    let allowed_y = (0..p)
                        .map(|y| on_curve_y[(y * y % p) as usize])
                        .collect();
                    primes.push(FilterPrime { theta, prime: qp, allowed_y });
                }
            }
            p += 2;
        }
        Ok(TorsionFilters { order_gcd, primes })
    }

    /// gcd of the good point counts; the torsion order divides it.
    pub fn order_gcd(&self) -> u64 {
        self.order_gcd
    }

    /// Whether y mod every filter prime is a y-coordinate on the reduced
    /// curve. True for every actual torsion y.
    pub fn allows_y(&self, y: &QInt) -> bool {
        self.primes.iter().all(|f| {
            let r = reduce_element(y, &f.prime, f.theta);
            f.allowed_y[r as usize]
        })
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if a == 0 {
        b
    } else {
        gcd_u64(b % a, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::splitting_type;

    fn short_i(a: i64, b: i64) -> CurveShort {
        CurveShort::new(QInt::gauss(a, 0), QInt::gauss(b, 0)).unwrap()
    }

    #[test]
    fn count_split_prime() {
        // y^2 = x^3 - x over F_5 (5 splits in Z[i]): points
        // (0,0),(1,0),(4,0),(2,1),(2,4),(3,2),(3,3) plus infinity = 8
        let c = short_i(-1, 0);
        let (_, p5) = splitting_type(5, RingTag::Gaussian).unwrap();
        assert_eq!(reduce_and_count(&c, &p5).unwrap(), 8);
    }

    #[test]
    fn count_inert_prime() {
        // y^2 = x^3 - x is supersingular at 7 (trace 0 over F_7), so the
        // count over F_49 is (7 + 1)^2 = 64, the Hasse boundary.
        let c = short_i(-1, 0);
        let (st, p7) = splitting_type(7, RingTag::Gaussian).unwrap();
        assert_eq!(st, SplitType::Inert);
        assert_eq!(reduce_and_count(&c, &p7).unwrap(), 64);
    }

    #[test]
    fn rejects_bad_reduction_and_large_fields() {
        let c = short_i(-1, 0); // D = -4
        let (_, p2) = splitting_type(2, RingTag::Gaussian).unwrap();
        assert!(matches!(reduce_and_count(&c, &p2), Err(Error::BadReduction)));
        // 149 = 1 mod 4 splits; fine. 1009 is inert? 1009 = 1 mod 4, splits too.
        // 211 = 3 mod 4 is inert with residue size 44521 > 20000.
        let (_, p211) = splitting_type(211, RingTag::Gaussian).unwrap();
        assert!(matches!(
            reduce_and_count(&c, &p211),
            Err(Error::ResidueFieldTooLarge { .. })
        ));
    }

    #[test]
    fn omega_ramified_count() {
        // y^2 = x^3 + 1 mod (2 - w): F_3, but 3 | D = 27, bad reduction
        let c = CurveShort::new(QInt::omega(0, 0), QInt::omega(1, 0)).unwrap();
        let (_, p3) = splitting_type(3, RingTag::Omega).unwrap();
        assert!(matches!(reduce_and_count(&c, &p3), Err(Error::BadReduction)));
        // mod a prime above 7 it has good reduction; count divisible by 12
        let (_, p7) = splitting_type(7, RingTag::Omega).unwrap();
        let n = reduce_and_count(&c, &p7).unwrap();
        assert_eq!(n % 12, 0);
    }

    #[test]
    fn filters_bound_torsion() {
        let c = short_i(-1, 0);
        let f = TorsionFilters::build(&c).unwrap();
        // torsion of y^2 = x^3 - x over Q(i) is Z2 x Z4
        assert_eq!(f.order_gcd() % 8, 0);
        assert!(f.allows_y(&QInt::gauss(0, 0)));
    }
}
