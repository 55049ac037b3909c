//! Weierstrass models over Q(i) and Q(sqrt(-3)), the group law, reduction
//! to an integral short form, and the torsion subgroup computation.
//!
//! Torsion is found by the extended Lutz-Nagell method: on an integral
//! model Y^2 = X^3 + AX + B every torsion point has ring-integral
//! coordinates, and a nonzero Y satisfies Y^2 | 4A^3 + 27B^2. That cuts
//! the search to finitely many candidate Y values, each of which leaves a
//! monic cubic in X whose roots divide its constant term.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fields::QRat;
use crate::reduction;
use crate::rings::{self, QInt, RingTag};

/// General Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveLong {
    pub a1: QRat,
    pub a2: QRat,
    pub a3: QRat,
    pub a4: QRat,
    pub a6: QRat,
    pub tag: RingTag,
}

/// Integral short form Y^2 = X^3 + AX + B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveShort {
    pub a: QInt,
    pub b: QInt,
}

/// A point on a curve, at infinity or affine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Point {
    Infinity,
    Affine { x: QRat, y: QRat },
}

impl Point {
    pub fn affine(x: QRat, y: QRat) -> Point {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn xy(&self) -> Option<(&QRat, &QRat)> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, y } => Some((x, y)),
        }
    }

    /// Ordering key putting O first, then by x, then y.
    pub fn sort_key(&self) -> (u8, Option<((BigInt, BigInt, BigInt, BigInt), (BigInt, BigInt, BigInt, BigInt))>) {
        match self {
            Point::Infinity => (0, None),
            Point::Affine { x, y } => (1, Some((x.sort_key(), y.sort_key()))),
        }
    }
}

impl CurveLong {
    pub fn new(a1: QRat, a2: QRat, a3: QRat, a4: QRat, a6: QRat) -> Result<CurveLong> {
        let tag = a1.tag();
        for c in [&a2, &a3, &a4, &a6] {
            if c.tag() != tag {
                return Err(Error::MixedRings);
            }
        }
        let curve = CurveLong { a1, a2, a3, a4, a6, tag };
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    pub fn from_coeffs(coeffs: [QRat; 5]) -> Result<CurveLong> {
        let [a1, a2, a3, a4, a6] = coeffs;
        CurveLong::new(a1, a2, a3, a4, a6)
    }

    fn b_invariants(&self) -> (QRat, QRat, QRat, QRat) {
        let b2 = self.a1.mul(&self.a1).add(&self.a2.mul(&QRat::int(4, self.tag)));
        let b4 = self.a4.mul(&QRat::int(2, self.tag)).add(&self.a1.mul(&self.a3));
        let b6 = self.a3.mul(&self.a3).add(&self.a6.mul(&QRat::int(4, self.tag)));
        let b8 = self
            .a1
            .mul(&self.a1)
            .mul(&self.a6)
            .add(&QRat::int(4, self.tag).mul(&self.a2).mul(&self.a6))
            .sub(&self.a1.mul(&self.a3).mul(&self.a4))
            .add(&self.a2.mul(&self.a3).mul(&self.a3))
            .sub(&self.a4.mul(&self.a4));
        (b2, b4, b6, b8)
    }

    pub fn discriminant(&self) -> QRat {
        let (b2, b4, b6, b8) = self.b_invariants();
        let t = self.tag;
        // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
        b2.mul(&b2)
            .mul(&b8)
            .neg()
            .sub(&QRat::int(8, t).mul(&b4.pow(3)))
            .sub(&QRat::int(27, t).mul(&b6.mul(&b6)))
            .add(&QRat::int(9, t).mul(&b2).mul(&b4).mul(&b6))
    }

    pub fn is_on(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => {
                let lhs = y
                    .mul(y)
                    .add(&self.a1.mul(x).mul(y))
                    .add(&self.a3.mul(y));
                let rhs = x
                    .pow(3)
                    .add(&self.a2.mul(x).mul(x))
                    .add(&self.a4.mul(x))
                    .add(&self.a6);
                lhs == rhs
            }
        }
    }

    pub fn neg_point(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                let ny = y.neg().sub(&self.a1.mul(x)).sub(&self.a3);
                Point::affine(x.clone(), ny)
            }
        }
    }

    pub fn add_points(&self, p: &Point, q: &Point) -> Point {
        let (x1, y1) = match p.xy() {
            None => return q.clone(),
            Some(v) => v,
        };
        let (x2, y2) = match q.xy() {
            None => return p.clone(),
            Some(v) => v,
        };
        if x1 == x2 {
            // either q = -p, or p = q and we double
            let neg = self.neg_point(p);
            if &neg == q {
                return Point::Infinity;
            }
        }
        let lambda = if x1 == x2 {
            // tangent slope; the denominator is nonzero since q != -p
            let num = QRat::int(3, self.tag)
                .mul(x1)
                .mul(x1)
                .add(&QRat::int(2, self.tag).mul(&self.a2).mul(x1))
                .add(&self.a4)
                .sub(&self.a1.mul(y1));
            let den = QRat::int(2, self.tag)
                .mul(y1)
                .add(&self.a1.mul(x1))
                .add(&self.a3);
            num.div(&den).expect("tangent denominator nonzero")
        } else {
            y2.sub(y1).div(&x2.sub(x1)).expect("chord denominator nonzero")
        };
        let nu = y1.sub(&lambda.mul(x1));
        let x3 = lambda
            .mul(&lambda)
            .add(&self.a1.mul(&lambda))
            .sub(&self.a2)
            .sub(x1)
            .sub(x2);
        let y3 = lambda
            .add(&self.a1)
            .neg()
            .mul(&x3)
            .sub(&nu)
            .sub(&self.a3);
        Point::affine(x3, y3)
    }

    pub fn mul_point(&self, n: u32, p: &Point) -> Point {
        let mut acc = Point::Infinity;
        for _ in 0..n {
            acc = self.add_points(&acc, p);
        }
        acc
    }

    /// True when the model is already an integral short form, so the
    /// Lutz-Nagell integrality of torsion points applies directly.
    pub fn is_short_integral(&self) -> bool {
        self.a1.is_zero()
            && self.a2.is_zero()
            && self.a3.is_zero()
            && self.a4.is_ring_integral()
            && self.a6.is_ring_integral()
    }
}

impl CurveShort {
    pub fn new(a: QInt, b: QInt) -> Result<CurveShort> {
        if a.tag != b.tag {
            return Err(Error::MixedRings);
        }
        let c = CurveShort { a, b };
        if c.disc_d().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    pub fn tag(&self) -> RingTag {
        self.a.tag
    }

    /// D = 4A^3 + 27B^2; the curve discriminant is -16 D.
    pub fn disc_d(&self) -> QInt {
        let four_a3 = self.a.pow(3).mul(&QInt::int(4, self.tag()));
        let b2 = self.b.mul(&self.b).mul(&QInt::int(27, self.tag()));
        four_a3.add(&b2)
    }

    pub fn to_long(&self) -> CurveLong {
        let t = self.tag();
        CurveLong {
            a1: QRat::zero(t),
            a2: QRat::zero(t),
            a3: QRat::zero(t),
            a4: QRat::from_int(self.a.clone()),
            a6: QRat::from_int(self.b.clone()),
            tag: t,
        }
    }
}

/// The substitution taking a long model to its integral short form:
/// X = u^2 (x + b2/12), Y = u^3 (y + (a1 x + a3)/2).
#[derive(Debug, Clone)]
pub struct IsoMap {
    pub u: BigInt,
    shift: QRat,
    a1: QRat,
    a3: QRat,
}

impl IsoMap {
    pub fn forward(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                let t = x.tag();
                let u2 = QRat::int(&self.u * &self.u, t);
                let u3 = QRat::int(&self.u * &self.u * &self.u, t);
                let nx = x.add(&self.shift).mul(&u2);
                let half = QRat::new(QInt::int(1, t), 2).unwrap();
                let ny = y.add(&self.a1.mul(x).add(&self.a3).mul(&half)).mul(&u3);
                Point::affine(nx, ny)
            }
        }
    }

    pub fn backward(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                let t = x.tag();
                let u2 = QRat::int(&self.u * &self.u, t);
                let u3 = QRat::int(&self.u * &self.u * &self.u, t);
                let ox = x.div(&u2).unwrap().sub(&self.shift);
                let half = QRat::new(QInt::int(1, t), 2).unwrap();
                let oy = y
                    .div(&u3)
                    .unwrap()
                    .sub(&self.a1.mul(&ox).add(&self.a3).mul(&half));
                Point::affine(ox, oy)
            }
        }
    }
}

/// Integral short form of a curve: completes the square and depresses the
/// cubic to y^2 = x^3 + px + q with p = -c4/48, q = -c6/864, then scales by
/// the least positive rational integer u clearing both denominators
/// (u^4 p and u^6 q integral).
pub fn to_short(curve: &CurveLong) -> Result<(CurveShort, IsoMap)> {
    let t = curve.tag;
    let (b2, b4, b6, _) = curve.b_invariants();
    let c4 = b2
        .mul(&b2)
        .sub(&QRat::int(24, t).mul(&b4));
    let c6 = b2
        .pow(3)
        .neg()
        .add(&QRat::int(36, t).mul(&b2).mul(&b4))
        .sub(&QRat::int(216, t).mul(&b6));
    let p = c4.div(&QRat::int(-48, t)).unwrap();
    let q = c6.div(&QRat::int(-864, t)).unwrap();

    let mut u = BigInt::one();
    for (den, k) in [(p.den().clone(), 4u32), (q.den().clone(), 6u32)] {
        for (ell, e) in crate::primes::factor_int(&den)? {
            let need = (e + k - 1) / k; // ceil(e / k)
            let mut cur = 0u32;
            let mut m = u.clone();
            while (&m % &ell).is_zero() {
                cur += 1;
                m /= &ell;
            }
            for _ in cur..need {
                u *= &ell;
            }
        }
    }

    let u4 = QRat::int(u.pow(4), t);
    let u6 = QRat::int(u.pow(6), t);
    let a = p.mul(&u4);
    let b = q.mul(&u6);
    debug_assert!(a.is_ring_integral() && b.is_ring_integral());
    let short = CurveShort::new(a.num().clone(), b.num().clone())?;
    let iso = IsoMap {
        u,
        shift: b2.div(&QRat::int(12, t)).unwrap(),
        a1: curve.a1.clone(),
        a3: curve.a3.clone(),
    };
    Ok((short, iso))
}

/// Order of a torsion candidate, as the least k <= bound with kP = O.
///
/// On an integral short model a non-integral multiple certifies infinite
/// order and stops the loop early.
pub fn order_of_point(curve: &CurveLong, p: &Point, bound: u32) -> Result<Option<u32>> {
    if !curve.is_on(p) {
        return Err(Error::OffCurve);
    }
    let integral_model = curve.is_short_integral();
    let mut acc = p.clone();
    for k in 1..=bound {
        // acc = k * p at the top of the iteration
        match &acc {
            Point::Infinity => return Ok(Some(k)),
            Point::Affine { x, y } => {
                if integral_model && (!x.is_ring_integral() || !y.is_ring_integral()) {
                    return Ok(None);
                }
            }
        }
        acc = curve.add_points(&acc, p);
    }
    Ok(None)
}

/// Ring-integral x with x^3 + Ax + (B - y^2) = 0, for a fixed ring y.
///
/// A nonzero constant term is factored and its divisors (times units) are
/// tested exactly; a zero constant term leaves x(x^2 + A). When the
/// constant is too large to factor within the configured bound, the roots
/// are located numerically instead and then verified in exact arithmetic
/// (see cubic_roots_unfactorable), so no root is ever accepted on floating
/// point evidence alone.
pub fn solve_x(curve: &CurveShort, y: &QInt) -> Result<Vec<QInt>> {
    let t = curve.tag();
    let c = curve.b.sub(&y.mul(y));
    let mut roots = Vec::new();
    if c.is_zero() {
        roots.push(QInt::zero(t));
        if let Some(r) = ring_sqrt_robust(&curve.a.neg())? {
            if !r.is_zero() {
                roots.push(r.clone());
                roots.push(r.neg());
            }
        }
    } else {
        match rings::divisors(&c) {
            Ok(divs) => {
                let units = rings::units(t);
                for d in divs {
                    for u in &units {
                        let x = u.mul(&d);
                        if cubic_value(&curve.a, &c, &x).is_zero() {
                            roots.push(x);
                        }
                    }
                }
            }
            Err(Error::FactorBoundExceeded { .. }) => {
                roots = cubic_roots_unfactorable(&curve.a, &c);
            }
            Err(e) => return Err(e),
        }
    }
    roots.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    roots.dedup();
    Ok(roots)
}

fn cubic_value(a: &QInt, c: &QInt, x: &QInt) -> QInt {
    x.pow(3).add(&a.mul(x)).add(c)
}

/// ring_sqrt, falling back to a numerically-located and exactly-verified
/// square root when the factoring bound is exceeded.
fn ring_sqrt_robust(z: &QInt) -> Result<Option<QInt>> {
    match rings::ring_sqrt(z) {
        Ok(r) => Ok(r),
        Err(Error::FactorBoundExceeded { .. }) => Ok(lattice_sqrt_numeric(z)),
        Err(e) => Err(e),
    }
}

/// Ring roots of x^3 + ax + c (c != 0) without factoring c.
///
/// A vanishing cubic discriminant gives the double root -3c/(2a) exactly.
/// Otherwise all three complex roots are found numerically; any that
/// verifies exactly after lattice rounding yields the remaining two by
/// exact quadratic deflation. A monic cubic with zero root sum has zero,
/// one, or three ring roots, so one verified root recovers them all.
fn cubic_roots_unfactorable(a: &QInt, c: &QInt) -> Vec<QInt> {
    let t = a.tag;
    let mut roots: Vec<QInt> = Vec::new();
    let disc = a.pow(3).mul(&QInt::int(4, t)).add(&c.mul(c).mul(&QInt::int(27, t)));
    if disc.is_zero() {
        // (x - r)^2 (x + 2r) with r = -3c/(2a); a = 0 would force c = 0
        if let Ok(r) = QRat::from_div(&c.mul(&QInt::int(-3, t)), &a.mul(&QInt::int(2, t))) {
            for cand in [r.clone(), r.mul(&QRat::int(-2, t))] {
                if cand.is_ring_integral() && cubic_value(a, c, cand.num()).is_zero() {
                    roots.push(cand.num().clone());
                }
            }
        }
        roots.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
        roots.dedup();
        return roots;
    }
    let (pa, pc) = (to_complex(a), to_complex(c));
    let first = durand_kerner(pa, pc)
        .into_iter()
        .flat_map(|z| lattice_candidates(z, t))
        .find(|x| cubic_value(a, c, x).is_zero());
    if let Some(r) = first {
        roots.push(r.clone());
        // deflate: x^2 + rx + (a + r^2), roots (-r +- s)/2 with
        // s^2 = -3r^2 - 4a
        let s2 = r
            .mul(&r)
            .mul(&QInt::int(-3, t))
            .sub(&a.mul(&QInt::int(4, t)));
        if let Some(s) = lattice_sqrt_numeric(&s2) {
            for sign in [s.clone(), s.neg()] {
                if let Ok(x) = QRat::from_div(&r.neg().add(&sign), &QInt::int(2, t)) {
                    if x.is_ring_integral() && cubic_value(a, c, x.num()).is_zero() {
                        roots.push(x.num().clone());
                    }
                }
            }
        }
    }
    roots.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    roots.dedup();
    roots
}

type Cpx = (f64, f64);

fn cadd(x: Cpx, y: Cpx) -> Cpx {
    (x.0 + y.0, x.1 + y.1)
}
fn csub(x: Cpx, y: Cpx) -> Cpx {
    (x.0 - y.0, x.1 - y.1)
}
fn cmul(x: Cpx, y: Cpx) -> Cpx {
    (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)
}
fn cdiv(x: Cpx, y: Cpx) -> Cpx {
    let d = y.0 * y.0 + y.1 * y.1;
    ((x.0 * y.0 + x.1 * y.1) / d, (x.1 * y.0 - x.0 * y.1) / d)
}
fn cabs(x: Cpx) -> f64 {
    x.0.hypot(x.1)
}

fn to_complex(z: &QInt) -> Cpx {
    use num_traits::ToPrimitive;
    let a = z.a.to_f64().unwrap_or(f64::INFINITY);
    let b = z.b.to_f64().unwrap_or(f64::INFINITY);
    match z.tag {
        RingTag::Gaussian => (a, b),
        RingTag::Omega => (a + 0.5 * b, -b * 3f64.sqrt() / 2.0),
    }
}

/// All three complex roots of x^3 + px + q by Durand-Kerner iteration with
/// Newton polish.
fn durand_kerner(p: Cpx, q: Cpx) -> Vec<Cpx> {
    let f = |x: Cpx| cadd(cadd(cmul(cmul(x, x), x), cmul(p, x)), q);
    let scale = cabs(p).sqrt().max(cabs(q).cbrt()).max(1.0);
    let seed = (0.4, 0.9);
    let mut r = [seed, cmul(seed, seed), cmul(cmul(seed, seed), seed)];
    for z in r.iter_mut() {
        *z = cmul(*z, (scale, 0.0));
    }
    for _ in 0..200 {
        let mut moved = 0f64;
        for i in 0..3 {
            let mut den = (1.0, 0.0);
            for j in 0..3 {
                if i != j {
                    den = cmul(den, csub(r[i], r[j]));
                }
            }
            let step = cdiv(f(r[i]), den);
            r[i] = csub(r[i], step);
            moved = moved.max(cabs(step));
        }
        if moved < 1e-12 * scale {
            break;
        }
    }
    // Newton polish sharpens each root independently
    for z in r.iter_mut() {
        for _ in 0..8 {
            let fp = cadd(cmul((3.0, 0.0), cmul(*z, *z)), p);
            if cabs(fp) == 0.0 {
                break;
            }
            *z = csub(*z, cdiv(f(*z), fp));
        }
    }
    r.to_vec()
}

/// Lattice points near a complex value, as exact candidates.
fn lattice_candidates(z: Cpx, tag: RingTag) -> Vec<QInt> {
    if !z.0.is_finite() || !z.1.is_finite() {
        return Vec::new();
    }
    let (ca, cb) = match tag {
        RingTag::Gaussian => (z.0, z.1),
        RingTag::Omega => {
            let b = -z.1 * 2.0 / 3f64.sqrt();
            (z.0 - 0.5 * b, b)
        }
    };
    if ca.abs() > 1e15 || cb.abs() > 1e15 {
        return Vec::new();
    }
    let (ra, rb) = (ca.round() as i64, cb.round() as i64);
    let mut out = Vec::with_capacity(9);
    for da in -1..=1 {
        for db in -1..=1 {
            out.push(QInt::new(ra + da, rb + db, tag));
        }
    }
    out
}

/// Square root in the ring located numerically and verified exactly;
/// None when no nearby lattice point squares to z.
fn lattice_sqrt_numeric(z: &QInt) -> Option<QInt> {
    if z.is_zero() {
        return Some(z.clone());
    }
    let w = to_complex(z);
    if !w.0.is_finite() || !w.1.is_finite() {
        return None;
    }
    // principal complex square root
    let r = cabs(w).sqrt();
    let theta = w.1.atan2(w.0) / 2.0;
    let s = (r * theta.cos(), r * theta.sin());
    lattice_candidates(s, z.tag)
        .into_iter()
        .find(|cand| cand.mul(cand) == *z)
}

/// The torsion subgroup: its points, structure Z/n1 x Z/n2 (n1 | n2),
/// and a generating set, all in the coordinates of the input model.
#[derive(Debug, Clone)]
pub struct TorsionData {
    pub points: Vec<Point>,
    pub n1: u32,
    pub n2: u32,
    pub generators: Vec<Point>,
}

impl TorsionData {
    pub fn order(&self) -> u32 {
        self.n1 * self.n2
    }
}

const ORDER_BOUND: u32 = 18;

/// Compute the full torsion subgroup of a curve over Q(i) or Q(sqrt(-3)).
pub fn torsion_subgroup(curve: &CurveLong) -> Result<TorsionData> {
    let (short, iso) = to_short(curve)?;
    let model = short.to_long();
    let d = short.disc_d();
    let filters = reduction::TorsionFilters::build(&short)?;

    let mut pts: Vec<Point> = vec![Point::Infinity];
    if filters.order_gcd() != 1 {
        let mut push = |x: QInt, y: QInt| {
            let p = Point::affine(
                QRat::from_int(x),
                QRat::from_int(y),
            );
            if !pts.contains(&p) {
                pts.push(p);
            }
        };
        for x in solve_x(&short, &QInt::zero(short.tag()))? {
            push(x, QInt::zero(short.tag()));
        }
        let mut ys = Vec::new();
        for dv in rings::square_divisors(&d)? {
            for u in rings::units_mod_pm1(short.tag()) {
                let y = u.mul(&dv);
                if filters.allows_y(&y) {
                    ys.push(y);
                }
            }
        }
        for y in ys {
            for x in solve_x(&short, &y)? {
                push(x.clone(), y.clone());
                push(x, y.neg());
            }
        }
    }

    let mut torsion: Vec<Point> = Vec::new();
    for p in pts {
        debug_assert!(model.is_on(&p));
        if order_of_point(&model, &p, ORDER_BOUND)?.is_some() {
            torsion.push(p);
        }
    }

    // defense in depth: the collected set must be closed under addition
    for p in &torsion {
        for q in &torsion {
            let s = model.add_points(p, q);
            if !torsion.contains(&s) {
                return Err(Error::StructureInconsistent(
                    "torsion candidates not closed under addition".into(),
                ));
            }
        }
    }

    let (n1, n2) = group_structure(&model, &torsion)?;
    let generators = find_generators(&model, &torsion, n1, n2)?;

    let mut points: Vec<Point> = torsion.iter().map(|p| iso.backward(p)).collect();
    for p in &points {
        debug_assert!(curve.is_on(p));
    }
    points.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    let generators = generators.iter().map(|p| iso.backward(p)).collect();

    Ok(TorsionData { points, n1, n2, generators })
}

/// Identify Z/n1 x Z/n2 (n1 | n2, n1 <= 4 over these fields) from a full
/// set of torsion points, with consistency checks on element orders and
/// the 2-torsion count.
pub fn group_structure(curve: &CurveLong, points: &[Point]) -> Result<(u32, u32)> {
    let n = points.len() as u32;
    if n == 0 || !points.iter().any(|p| p.is_infinity()) {
        return Err(Error::StructureInconsistent(
            "point set must contain the identity".into(),
        ));
    }
    let mut orders = Vec::with_capacity(points.len());
    for p in points {
        let o = order_of_point(curve, p, n.max(1))?.ok_or_else(|| {
            Error::StructureInconsistent("point order exceeds group size".into())
        })?;
        orders.push(o);
    }
    let n2 = *orders.iter().max().unwrap();
    if n % n2 != 0 {
        return Err(Error::StructureInconsistent(
            "maximal order does not divide group size".into(),
        ));
    }
    let n1 = n / n2;
    if n2 % n1 != 0 || n1 > 4 {
        return Err(Error::StructureInconsistent(format!(
            "unexpected invariants ({}, {})", n1, n2
        )));
    }
    if orders.iter().any(|o| n2 % o != 0) {
        return Err(Error::StructureInconsistent(
            "element order not dividing the exponent".into(),
        ));
    }
    let two_torsion = orders.iter().filter(|&&o| o <= 2).count() as u32;
    if two_torsion != n1.gcd(&2) * n2.gcd(&2) {
        return Err(Error::StructureInconsistent(
            "2-torsion count does not match invariants".into(),
        ));
    }
    Ok((n1, n2))
}

fn find_generators(
    curve: &CurveLong,
    points: &[Point],
    n1: u32,
    n2: u32,
) -> Result<Vec<Point>> {
    if n1 * n2 == 1 {
        return Ok(Vec::new());
    }
    let order = |p: &Point| order_of_point(curve, p, n1 * n2).map(|o| o.unwrap_or(0));
    let mut gen2 = None;
    for p in points {
        if order(p)? == n2 {
            gen2 = Some(p.clone());
            break;
        }
    }
    let gen2 = gen2.ok_or_else(|| {
        Error::StructureInconsistent("no element of maximal order".into())
    })?;
    if n1 == 1 {
        return Ok(vec![gen2]);
    }
    let cyclic: Vec<Point> = (0..n2).map(|k| curve.mul_point(k, &gen2)).collect();
    for q in points {
        if order(q)? != n1 {
            continue;
        }
        let independent = (1..n1).all(|k| !cyclic.contains(&curve.mul_point(k, q)));
        if independent {
            // spanning check: every point is a combination of the pair
            let mut seen = 0usize;
            for a in 0..n1 {
                let aq = curve.mul_point(a, q);
                for b in 0..n2 {
                    let s = curve.add_points(&aq, &curve.mul_point(b, &gen2));
                    if points.contains(&s) {
                        seen += 1;
                    }
                }
            }
            if seen == points.len() {
                return Ok(vec![q.clone(), gen2]);
            }
        }
    }
    Err(Error::StructureInconsistent("no independent generator pair".into()))
}
