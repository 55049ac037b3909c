//! Arithmetic in the fields Q(i) and Q(sqrt(-3)), represented as ring
//! elements over a positive rational denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rings::{self, QInt, RingTag, SquareClass};

/// num/den in lowest terms: den > 0 and gcd(num.a, num.b, den) = 1 over Z.
///
/// Since {1, i} and {1, w} are Z-bases of the respective rings of integers,
/// clearing the content of (a, b, den) is the full reduction; a common ring
/// divisor of larger norm cannot survive it with den still an integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QInt,
    den: BigInt,
}

impl QRat {
    pub fn new(num: QInt, den: impl Into<BigInt>) -> Result<QRat> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(mut num: QInt, mut den: BigInt) -> QRat {
        if den.is_negative() {
            num = num.neg();
            den = -den;
        }
        let g = num.a.gcd(&num.b).gcd(&den);
        if !g.is_one() {
            num.a /= &g;
            num.b /= &g;
            den /= &g;
        }
        QRat { num, den }
    }

    pub fn from_int(num: QInt) -> QRat {
        QRat { num, den: BigInt::one() }
    }

    pub fn int(n: impl Into<BigInt>, tag: RingTag) -> QRat {
        Self::from_int(QInt::int(n, tag))
    }

    pub fn zero(tag: RingTag) -> QRat {
        Self::int(0, tag)
    }

    pub fn one(tag: RingTag) -> QRat {
        Self::int(1, tag)
    }

    /// Quotient of two ring elements.
    pub fn from_div(num: &QInt, den: &QInt) -> Result<QRat> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // num/den = num * conj(den) / norm(den)
        Ok(Self::reduced(num.mul(&den.conj()), den.norm()))
    }

    pub fn num(&self) -> &QInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn tag(&self) -> RingTag {
        self.num.tag
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Integral means lying in the ring of integers, i.e. denominator 1.
    pub fn is_ring_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, rhs: &QRat) -> QRat {
        let num = self
            .num
            .mul(&QInt::int(rhs.den.clone(), rhs.tag()))
            .add(&rhs.num.mul(&QInt::int(self.den.clone(), self.tag())));
        Self::reduced(num, &self.den * &rhs.den)
    }

    pub fn sub(&self, rhs: &QRat) -> QRat {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> QRat {
        QRat { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &QRat) -> QRat {
        Self::reduced(self.num.mul(&rhs.num), &self.den * &rhs.den)
    }

    pub fn inv(&self) -> Result<QRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (n/d)^-1 = d * conj(n) / norm(n)
        let num = self.num.conj().mul(&QInt::int(self.den.clone(), self.tag()));
        Ok(Self::reduced(num, self.num.norm()))
    }

    pub fn div(&self, rhs: &QRat) -> Result<QRat> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn mul_qint(&self, rhs: &QInt) -> QRat {
        Self::reduced(self.num.mul(rhs), self.den.clone())
    }

    pub fn pow(&self, e: u32) -> QRat {
        let mut acc = QRat::one(self.tag());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Naive height max(norm(num), den^2); the height of 0 is 1.
    pub fn height(&self) -> BigInt {
        let n = self.num.norm();
        let d2 = &self.den * &self.den;
        n.max(d2)
    }

    /// Deterministic ordering key for printed point lists.
    pub fn sort_key(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        (self.num.norm(), self.den.clone(), -&self.num.a, -&self.num.b)
    }
}

/// Square root in the field, if one exists. n/d is a square exactly when
/// the ring element n*d is, and then sqrt(n/d) = sqrt(n*d)/d.
pub fn is_square(x: &QRat) -> Result<Option<QRat>> {
    if x.is_zero() {
        return Ok(Some(x.clone()));
    }
    let w = x.num.mul(&QInt::int(x.den.clone(), x.tag()));
    match rings::ring_sqrt(&w)? {
        Some(r) => {
            let root = QRat::reduced(r, x.den.clone());
            debug_assert_eq!(root.mul(&root), *x);
            Ok(Some(root))
        }
        None => Ok(None),
    }
}

/// Square class of a nonzero field element: the class of num*den in the ring.
pub fn squarefree_part_field(x: &QRat) -> Result<SquareClass> {
    if x.is_zero() {
        return Err(Error::ZeroInput("squarefree_part_field"));
    }
    let w = x.num.mul(&QInt::int(x.den.clone(), x.tag()));
    rings::squarefree_part(&w)
}
