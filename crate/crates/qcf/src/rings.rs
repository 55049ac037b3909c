//! Exact arithmetic in Z[i] and Z[w], where w = (1 - sqrt(-3))/2 is a
//! primitive sixth root of unity with w^2 = w - 1.
//!
//! Both rings are Euclidean for the norm (a^2 + b^2, respectively
//! a^2 + ab + b^2), and both are unique factorization domains. Everything
//! downstream (square classes, Lutz-Nagell candidate enumeration, descent
//! case analysis) reduces to gcds and factorizations computed here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::primes;

/// Which quadratic ring an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingTag {
    /// Z[i], ring of integers of Q(i).
    Gaussian,
    /// Z[w], ring of integers of Q(sqrt(-3)).
    Omega,
}

impl RingTag {
    /// Number of units: 4 for Z[i], 6 for Z[w].
    pub fn unit_count(self) -> usize {
        match self {
            RingTag::Gaussian => 4,
            RingTag::Omega => 6,
        }
    }

    /// Name of the adjoined generator in the textual syntax.
    pub fn symbol(self) -> char {
        match self {
            RingTag::Gaussian => 'i',
            RingTag::Omega => 'w',
        }
    }
}

/// An element a + b*i of Z[i] or a + b*w of Z[w].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QInt {
    pub a: BigInt,
    pub b: BigInt,
    pub tag: RingTag,
}

impl QInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, tag: RingTag) -> Self {
        QInt { a: a.into(), b: b.into(), tag }
    }

    pub fn gauss(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self::new(a, b, RingTag::Gaussian)
    }

    pub fn omega(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self::new(a, b, RingTag::Omega)
    }

    pub fn int(n: impl Into<BigInt>, tag: RingTag) -> Self {
        Self::new(n, 0, tag)
    }

    pub fn zero(tag: RingTag) -> Self {
        Self::int(0, tag)
    }

    pub fn one(tag: RingTag) -> Self {
        Self::int(1, tag)
    }

    /// The generator itself: i or w.
    pub fn gen(tag: RingTag) -> Self {
        Self::new(0, 1, tag)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Rational integers are exactly the elements with b = 0.
    pub fn as_int(&self) -> Option<&BigInt> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn norm(&self) -> BigInt {
        match self.tag {
            RingTag::Gaussian => &self.a * &self.a + &self.b * &self.b,
            RingTag::Omega => &self.a * &self.a + &self.a * &self.b + &self.b * &self.b,
        }
    }

    pub fn conj(&self) -> QInt {
        match self.tag {
            RingTag::Gaussian => QInt::new(self.a.clone(), -&self.b, self.tag),
            // conj(a + b*w) = (a + b) - b*w since conj(w) = 1 - w.
            RingTag::Omega => QInt::new(&self.a + &self.b, -&self.b, self.tag),
        }
    }

    pub fn add(&self, rhs: &QInt) -> QInt {
        self.check_tag(rhs);
        QInt::new(&self.a + &rhs.a, &self.b + &rhs.b, self.tag)
    }

    pub fn sub(&self, rhs: &QInt) -> QInt {
        self.check_tag(rhs);
        QInt::new(&self.a - &rhs.a, &self.b - &rhs.b, self.tag)
    }

    pub fn neg(&self) -> QInt {
        QInt::new(-&self.a, -&self.b, self.tag)
    }

    pub fn mul(&self, rhs: &QInt) -> QInt {
        self.check_tag(rhs);
        let (a, b, c, d) = (&self.a, &self.b, &rhs.a, &rhs.b);
        match self.tag {
            // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
            RingTag::Gaussian => QInt::new(a * c - b * d, a * d + b * c, self.tag),
            // (a+bw)(c+dw) = (ac - bd) + (ad + bc + bd)w via w^2 = w - 1
            RingTag::Omega => QInt::new(a * c - b * d, a * d + b * c + b * d, self.tag),
        }
    }

    pub fn pow(&self, e: u32) -> QInt {
        let mut acc = QInt::one(self.tag);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division, if rhs divides self.
    pub fn try_div(&self, rhs: &QInt) -> Option<QInt> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.divrem(rhs);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Euclidean division: self = q*rhs + r with norm(r) < norm(rhs).
    ///
    /// The quotient rounds each coordinate of the exact field quotient to the
    /// nearest integer, ties toward negative infinity. In both rings the
    /// rounded remainder has norm at most 3/4 of norm(rhs).
    pub fn divrem(&self, rhs: &QInt) -> (QInt, QInt) {
        self.check_tag(rhs);
        assert!(!rhs.is_zero(), "division by zero");
        let n = rhs.norm();
        let t = self.mul(&rhs.conj());
        let qa = round_nearest_half_down(&t.a, &n);
        let qb = round_nearest_half_down(&t.b, &n);
        let q = QInt::new(qa, qb, self.tag);
        let r = self.sub(&q.mul(rhs));
        debug_assert!(r.norm() < n);
        (q, r)
    }

    /// Deterministic ordering key used for factorizations and divisor lists.
    pub fn sort_key(&self) -> (BigInt, BigInt, BigInt) {
        (self.norm(), self.a.clone(), self.b.clone())
    }

    fn check_tag(&self, rhs: &QInt) {
        assert!(self.tag == rhs.tag, "mixed rings: {:?} vs {:?}", self.tag, rhs.tag);
    }
}

fn round_nearest_half_down(num: &BigInt, den: &BigInt) -> BigInt {
    // den > 0; nearest integer to num/den, a tie rounding toward -inf.
    let (k, s) = num.div_mod_floor(den);
    if &(BigInt::from(2) * &s) > den {
        k + 1
    } else {
        k
    }
}

/// A unit of the ring: one of {1, i, -1, -i}, or the six powers of w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit(QInt);

impl Unit {
    pub fn try_new(z: QInt) -> Option<Unit> {
        if z.is_unit() {
            Some(Unit(z))
        } else {
            None
        }
    }

    pub fn one(tag: RingTag) -> Unit {
        Unit(QInt::one(tag))
    }

    pub fn value(&self) -> &QInt {
        &self.0
    }
}

/// All units of the ring, as plain elements, starting from 1 and repeatedly
/// multiplying by the generator (so Z[w] gets 1, w, w^2, ..., w^5).
pub fn units(tag: RingTag) -> Vec<QInt> {
    let g = QInt::gen(tag);
    let mut out = vec![QInt::one(tag)];
    for _ in 1..tag.unit_count() {
        let next = out.last().unwrap().mul(&g);
        out.push(next);
    }
    out
}

/// Unit representatives modulo {1, -1}; y and -y have the same x-fiber, so
/// torsion candidate enumeration only needs these.
pub fn units_mod_pm1(tag: RingTag) -> Vec<QInt> {
    match tag {
        RingTag::Gaussian => vec![QInt::one(tag), QInt::gen(tag)],
        RingTag::Omega => {
            let w = QInt::gen(tag);
            vec![QInt::one(tag), w.clone(), w.mul(&w)]
        }
    }
}

/// Canonical associate: the unique unit multiple in the canonical sector.
///
/// Gaussian sector: a > 0 and b >= 0. Omega sector: complex argument in
/// [0, pi/3), which in coordinates is b <= 0 and a + b > 0 (recall
/// w = e^(-i*pi/3), so a + b*w has imaginary part -b*sqrt(3)/2).
///
/// Returns (u, c) with c = u * z.
pub fn canonical_associate(z: &QInt) -> Result<(Unit, QInt)> {
    if z.is_zero() {
        return Err(Error::ZeroInput("canonical_associate"));
    }
    for u in units(z.tag) {
        let c = u.mul(z);
        if in_canonical_sector(&c) {
            return Ok((Unit(u), c));
        }
    }
    unreachable!("some associate lies in the canonical sector");
}

fn in_canonical_sector(z: &QInt) -> bool {
    match z.tag {
        RingTag::Gaussian => z.a.is_positive() && !z.b.is_negative(),
        RingTag::Omega => !z.b.is_positive() && (&z.a + &z.b).is_positive(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitType {
    Split,
    Inert,
    Ramified,
}

/// A prime of the ring in canonical-associate form, together with the
/// rational prime below it and the size of its residue field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPrime {
    pub value: QInt,
    pub residue_char: u64,
    pub split_type: SplitType,
    pub residue_size: BigInt,
}

/// How the rational prime p behaves in the ring, with a canonical prime
/// above it.
///
/// Gaussian: 2 ramifies as (1+i)^2, p = 1 mod 4 splits, p = 3 mod 4 stays
/// prime. Omega: 3 ramifies as (2-w)^2 up to a unit, p = 1 mod 3 splits,
/// p = 2 mod 3 stays prime. Split and ramified primes are found by a
/// bounded search for a norm-form representation.
pub fn splitting_type(p: u64, tag: RingTag) -> Result<(SplitType, QPrime)> {
    if !primes::is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let (split_type, value) = match tag {
        RingTag::Gaussian => {
            if p == 2 {
                (SplitType::Ramified, QInt::gauss(1, 1))
            } else if p % 4 == 1 {
                (SplitType::Split, norm_form_rep(p, tag))
            } else {
                (SplitType::Inert, QInt::int(p, tag))
            }
        }
        RingTag::Omega => {
            if p == 3 {
                (SplitType::Ramified, QInt::omega(2, -1))
            } else if p % 3 == 1 {
                (SplitType::Split, norm_form_rep(p, tag))
            } else {
                (SplitType::Inert, QInt::int(p, tag))
            }
        }
    };
    let residue_size = match split_type {
        SplitType::Inert => BigInt::from(p) * BigInt::from(p),
        _ => BigInt::from(p),
    };
    Ok((
        split_type,
        QPrime { value, residue_char: p, split_type, residue_size },
    ))
}

/// Solve the norm form for a split prime and pick a deterministic conjugate:
/// the solution with a >= b > 0, taken to its canonical associate.
fn norm_form_rep(p: u64, tag: RingTag) -> QInt {
    let pb = BigInt::from(p);
    let mut b = 1u64;
    loop {
        let bb = BigInt::from(b);
        let rest = match tag {
            RingTag::Gaussian => &pb - &bb * &bb,
            RingTag::Omega => &pb - &bb * &bb,
        };
        if rest.is_negative() {
            unreachable!("split prime always has a norm-form representation");
        }
        match tag {
            RingTag::Gaussian => {
                if let Some(a) = primes::perfect_sqrt(&rest) {
                    if a >= bb {
                        let z = QInt::new(a, bb, tag);
                        debug_assert_eq!(z.norm(), pb);
                        return canonical_associate(&z).unwrap().1;
                    }
                }
            }
            RingTag::Omega => {
                // a^2 + ab + b^2 = p  <=>  (2a + b)^2 = 4p - 3b^2
                let disc = BigInt::from(4u32) * &pb - BigInt::from(3u32) * &bb * &bb;
                if disc.is_negative() {
                    unreachable!("split prime always has a norm-form representation");
                }
                if let Some(s) = primes::perfect_sqrt(&disc) {
                    let two_a = &s - &bb;
                    if !two_a.is_negative() && two_a.is_even() {
                        let a: BigInt = two_a / 2;
                        if a >= bb && a.is_positive() {
                            let z = QInt::new(a, bb, tag);
                            debug_assert_eq!(z.norm(), pb);
                            return canonical_associate(&z).unwrap().1;
                        }
                    }
                }
            }
        }
        b += 1;
    }
}

/// Complete factorization z = unit * prod(prime^exp) over canonical primes,
/// sorted by (norm, a, b).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Unit,
    pub factors: Vec<(QPrime, u32)>,
}

impl Factorization {
    /// Multiply everything back together; must reproduce the input exactly.
    pub fn recompose(&self) -> QInt {
        let mut acc = self.unit.value().clone();
        for (p, e) in &self.factors {
            acc = acc.mul(&p.value.pow(*e));
        }
        acc
    }
}

/// Factor a nonzero element by factoring its norm over the rational
/// integers and splitting each rational prime in the ring.
pub fn factor(z: &QInt) -> Result<Factorization> {
    if z.is_zero() {
        return Err(Error::ZeroInput("factor"));
    }
    let n = z.norm();
    let rational = primes::factor_int(&n)?;
    let mut rest = z.clone();
    let mut factors: Vec<(QPrime, u32)> = Vec::new();
    for (p, e_norm) in rational {
        let p64 = p
            .to_u64()
            .expect("certified prime cofactors fit in u64 at the default bound");
        let (st, qp) = splitting_type(p64, z.tag)?;
        match st {
            SplitType::Inert => {
                debug_assert!(e_norm % 2 == 0, "inert prime has even norm valuation");
                let e = e_norm / 2;
                for _ in 0..e {
                    rest = rest.try_div(&qp.value).expect("inert prime divides");
                }
                factors.push((qp, e));
            }
            SplitType::Ramified => {
                for _ in 0..e_norm {
                    rest = rest.try_div(&qp.value).expect("ramified prime divides");
                }
                factors.push((qp, e_norm));
            }
            SplitType::Split => {
                let mut e1 = 0u32;
                while let Some(q) = rest.try_div(&qp.value) {
                    rest = q;
                    e1 += 1;
                }
                let e2 = e_norm - e1;
                let conj_prime = conj_qprime(&qp);
                for _ in 0..e2 {
                    rest = rest
                        .try_div(&conj_prime.value)
                        .expect("conjugate prime divides the remainder");
                }
                let mut pair = Vec::new();
                if e1 > 0 {
                    pair.push((qp, e1));
                }
                if e2 > 0 {
                    pair.push((conj_prime, e2));
                }
                pair.sort_by_key(|(p, _)| p.value.sort_key());
                factors.extend(pair);
            }
        }
    }
    debug_assert!(rest.is_unit(), "residue after dividing out all primes is a unit");
    factors.sort_by(|(p, _), (q, _)| p.value.sort_key().cmp(&q.value.sort_key()));
    let fac = Factorization { unit: Unit(rest), factors };
    debug_assert_eq!(fac.recompose(), *z);
    Ok(fac)
}

fn conj_qprime(p: &QPrime) -> QPrime {
    let c = canonical_associate(&p.value.conj()).unwrap().1;
    QPrime {
        value: c,
        residue_char: p.residue_char,
        split_type: p.split_type,
        residue_size: p.residue_size.clone(),
    }
}

/// A square-free canonical representative of z modulo squares.
///
/// The representative is (unit class) * (product of odd-exponent canonical
/// primes); the unit class is 1 or i over Z[i] (squares of units are
/// {1, -1}) and 1 or w over Z[w] (squares of units are the cube roots
/// of unity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareClass {
    pub rep: QInt,
    pub tag: RingTag,
}

impl SquareClass {
    pub fn is_trivial(&self) -> bool {
        self.rep.is_one()
    }
}

fn unit_class_rep(u: &QInt) -> QInt {
    match u.tag {
        RingTag::Gaussian => {
            // 1, -1 are squares of units; i, -i collapse to i.
            if u.b.is_zero() {
                QInt::one(u.tag)
            } else {
                QInt::gen(u.tag)
            }
        }
        RingTag::Omega => {
            // w^k is a square of a unit iff k is even.
            let k = unit_power_index(u);
            if k % 2 == 0 {
                QInt::one(u.tag)
            } else {
                QInt::gen(u.tag)
            }
        }
    }
}

/// Index k with u = gen^k, for a unit u.
pub fn unit_power_index(u: &QInt) -> u32 {
    let mut acc = QInt::one(u.tag);
    let g = QInt::gen(u.tag);
    for k in 0..u.tag.unit_count() as u32 {
        if &acc == u {
            return k;
        }
        acc = acc.mul(&g);
    }
    panic!("not a unit: {:?}", u);
}

/// Square-free part: the square class of z.
pub fn squarefree_part(z: &QInt) -> Result<SquareClass> {
    if z.is_zero() {
        return Err(Error::ZeroInput("squarefree_part"));
    }
    let fac = factor(z)?;
    let mut rep = unit_class_rep(fac.unit.value());
    for (p, e) in &fac.factors {
        if e % 2 == 1 {
            rep = rep.mul(&p.value);
        }
    }
    Ok(SquareClass { rep, tag: z.tag })
}

/// All canonical d (up to units) with d^2 dividing z, by halving the
/// exponents of the factorization; deterministic (norm, a, b) order.
pub fn square_divisors(z: &QInt) -> Result<Vec<QInt>> {
    if z.is_zero() {
        return Err(Error::ZeroInput("square_divisors"));
    }
    let fac = factor(z)?;
    let mut divisors = vec![QInt::one(z.tag)];
    for (p, e) in &fac.factors {
        let half = e / 2;
        if half == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(divisors.len() * (half as usize + 1));
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..half {
                acc = acc.mul(&p.value);
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    let mut out: Vec<QInt> = divisors
        .into_iter()
        .map(|d| canonical_associate(&d).unwrap().1)
        .collect();
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    out.dedup();
    Ok(out)
}

/// All canonical divisors of z (up to units), in (norm, a, b) order.
pub fn divisors(z: &QInt) -> Result<Vec<QInt>> {
    if z.is_zero() {
        return Err(Error::ZeroInput("divisors"));
    }
    let fac = factor(z)?;
    let mut out = vec![QInt::one(z.tag)];
    for (p, e) in &fac.factors {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*e {
                acc = acc.mul(&p.value);
                next.push(acc.clone());
            }
        }
        out = next;
    }
    let mut out: Vec<QInt> = out
        .into_iter()
        .map(|d| canonical_associate(&d).unwrap().1)
        .collect();
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    out.dedup();
    Ok(out)
}

/// Square root in the ring, if one exists. ring_sqrt(0) = 0.
pub fn ring_sqrt(z: &QInt) -> Result<Option<QInt>> {
    if z.is_zero() {
        return Ok(Some(z.clone()));
    }
    let fac = factor(z)?;
    let mut root = QInt::one(z.tag);
    for (p, e) in &fac.factors {
        if e % 2 == 1 {
            return Ok(None);
        }
        root = root.mul(&p.value.pow(e / 2));
    }
    let k = unit_power_index(fac.unit.value());
    let g = QInt::gen(z.tag);
    match z.tag {
        RingTag::Gaussian => match k {
            0 => {}
            2 => root = root.mul(&g), // -1 = i^2
            _ => return Ok(None),     // i and -i are not squares in Z[i]
        },
        RingTag::Omega => {
            if k % 2 == 1 {
                return Ok(None);
            }
            root = root.mul(&g.pow(k / 2));
        }
    }
    debug_assert_eq!(root.mul(&root), *z);
    Ok(Some(root))
}

/// Greatest common divisor, as a canonical associate. Requires not both zero.
pub fn gcd(x: &QInt, y: &QInt) -> QInt {
    assert!(
        !(x.is_zero() && y.is_zero()),
        "gcd of two zero elements is undefined"
    );
    let mut a = x.clone();
    let mut b = y.clone();
    while !b.is_zero() {
        let (_, r) = a.divrem(&b);
        a = b;
        b = r;
    }
    canonical_associate(&a).unwrap().1
}
