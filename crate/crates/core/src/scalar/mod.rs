//! Exact arithmetic in the cyclotomic field `Q(ζ_m)`, `m = 2q`.
//!
//! Every operator entry for an angle `η = pπ/q` is a rational combination of
//! powers of `ζ = e^{iπ/q}`, so the whole walk can be built without rounding.
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(m)-1}` reduced by the
//! `m`-th cyclotomic polynomial, with integer numerators over one positive
//! common denominator.

mod eval;

use alloc::sync::Arc as Shared;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub use eval::sign_affine_cos;

/// `η = pπ/q` in lowest terms with `0 ≤ η ≤ π`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle {
    p: u32,
    q: u32,
}

/// Where η sits relative to π/2; the shape of second-power supports changes
/// across this boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    BelowRight,
    Right,
    AboveRight,
}

impl Angle {
    pub const ZERO: Angle = Angle { p: 0, q: 1 };
    pub const RIGHT: Angle = Angle { p: 1, q: 2 };
    pub const PI: Angle = Angle { p: 1, q: 1 };

    /// Builds `pπ/q`, reducing modulo 2π. Angles in `(π, 2π)` are rejected:
    /// `U_{-θ}(G) = U_θ(G⁻¹)`, so callers use [`Angle::normalize`] and the
    /// transposed digraph instead.
    pub fn new(p: i64, q: i64) -> Result<Angle> {
        let (angle, flipped) = Angle::normalize(p, q)?;
        if flipped {
            return Err(Error::InvalidAngle { p, q, reason: "angle lies in (π, 2π); transpose the digraph" });
        }
        Ok(angle)
    }

    /// Reduces `pπ/q` into `[0, π]`. The flag is set when the angle was
    /// reflected (`η ↦ 2π − η ≡ −η`).
    pub fn normalize(p: i64, q: i64) -> Result<(Angle, bool)> {
        if q <= 0 {
            return Err(Error::InvalidAngle { p, q, reason: "denominator must be positive" });
        }
        let g = p.gcd(&q);
        let (mut p, q) = (p / g, q / g);
        p = p.rem_euclid(2 * q);
        let flipped = p > q;
        if flipped {
            p = 2 * q - p;
        }
        let g = p.gcd(&q).max(1);
        let (p, q) = (p / g, q / g);
        let (p, q) = if p == 0 { (0, 1) } else { (p, q) };
        if q > u32::MAX as i64 / 4 {
            return Err(Error::InvalidAngle { p, q, reason: "denominator too large" });
        }
        Ok((Angle { p: p as u32, q: q as u32 }, flipped))
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn q(self) -> u32 {
        self.q
    }

    /// Order `m = 2q` of the root of unity `ζ = e^{iπ/q}`; `e^{iη} = ζ^p`.
    pub fn field_order(self) -> u32 {
        2 * self.q
    }

    pub fn field(self) -> Field {
        Field::new(self.field_order())
    }

    pub fn regime(self) -> Regime {
        match (2 * self.p).cmp(&self.q) {
            Ordering::Less => Regime::BelowRight,
            Ordering::Equal => Regime::Right,
            Ordering::Greater => Regime::AboveRight,
        }
    }

    /// `cos η` as `(num, den)` when it is rational (only for η ∈ {0, π/3, π/2, 2π/3, π}).
    pub fn rational_cos(self) -> Option<(i64, i64)> {
        match (self.p, self.q) {
            (0, 1) => Some((1, 1)),
            (1, 3) => Some((1, 2)),
            (1, 2) => Some((0, 1)),
            (2, 3) => Some((-1, 2)),
            (1, 1) => Some((-1, 1)),
            _ => None,
        }
    }

    pub fn to_f64(self) -> f64 {
        core::f64::consts::PI * self.p as f64 / self.q as f64
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// The field `Q(ζ_m)`: its order and the cyclotomic polynomial `Φ_m`.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    order: u32,
    /// Coefficients of `Φ_m`, constant term first; monic.
    modulus: Vec<i64>,
}

impl CycloField {
    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(m)`, the dimension over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }
}

/// Shared handle to a cyclotomic field; cheap to clone and `Send + Sync`.
#[derive(Debug, Clone)]
pub struct Field(Shared<CycloField>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Shared::ptr_eq(&self.0, &other.0) || self.0.order == other.0.order
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(order: u32) -> Field {
        assert!(order >= 1, "field order must be positive");
        let modulus = cyclotomic_polynomial(order as usize);
        Field(Shared::new(CycloField { order, modulus }))
    }

    /// The rationals, viewed as `Q(ζ_2)`.
    pub fn rationals() -> Field {
        Field::new(2)
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn zero(&self) -> CycScalar {
        CycScalar { field: self.clone(), num: vec![BigInt::zero(); self.degree()], den: BigInt::one() }
    }

    pub fn one(&self) -> CycScalar {
        self.integer(1)
    }

    pub fn integer(&self, n: i64) -> CycScalar {
        self.rational(n, 1)
    }

    /// `num/den` as a field element. Panics on a zero denominator.
    pub fn rational(&self, num: i64, den: i64) -> CycScalar {
        assert!(den != 0, "zero denominator");
        let mut x = self.zero();
        x.num[0] = BigInt::from(num);
        x.den = BigInt::from(den);
        x.normalize();
        x
    }

    pub fn big_rational(&self, r: &BigRational) -> CycScalar {
        let mut x = self.zero();
        x.num[0] = r.numer().clone();
        x.den = r.denom().clone();
        x.normalize();
        x
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> CycScalar {
        let m = self.order() as i64;
        let k = k.rem_euclid(m) as usize;
        let mut raw = vec![BigInt::zero(); k + 1];
        raw[k] = BigInt::one();
        self.from_raw(raw, BigInt::one())
    }

    /// `e^{iη}` for an angle whose field divides this one.
    pub fn root(&self, angle: Angle) -> CycScalar {
        let m = self.order();
        assert!(m % angle.field_order() == 0, "angle {} not representable in Q(ζ_{})", angle, m);
        self.zeta_pow((angle.p() * (m / angle.field_order())) as i64)
    }

    /// Element `Σ raw[j] ζ^j / den` for arbitrary-length `raw`.
    fn from_raw(&self, mut raw: Vec<BigInt>, den: BigInt) -> CycScalar {
        reduce(&mut raw, self.0.modulus());
        raw.resize(self.degree(), BigInt::zero());
        let mut x = CycScalar { field: self.clone(), num: raw, den };
        x.normalize();
        x
    }
}

/// `Φ_m` by dividing `x^m - 1` by `Φ_d` for every proper divisor `d`.
fn cyclotomic_polynomial(m: usize) -> Vec<i64> {
    let mut poly = vec![0i64; m + 1];
    poly[0] = -1;
    poly[m] = 1;
    for d in 1..m {
        if m % d == 0 {
            poly = divide_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

/// Exact quotient of integer polynomials, divisor monic.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// In-place reduction of `raw` modulo the monic `modulus`.
fn reduce(raw: &mut Vec<BigInt>, modulus: &[i64]) {
    let d = modulus.len() - 1;
    for i in (d..raw.len()).rev() {
        if raw[i].is_zero() {
            continue;
        }
        let c = core::mem::take(&mut raw[i]);
        for (j, &mj) in modulus[..d].iter().enumerate() {
            if mj != 0 {
                raw[i - d + j] -= &c * mj;
            }
        }
    }
    raw.truncate(d);
}

/// Exact element of `Q(ζ_m)`.
#[derive(Clone)]
pub struct CycScalar {
    field: Field,
    num: Vec<BigInt>,
    den: BigInt,
}

/// Sign of a real quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Signed>(x: &T) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl CycScalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order()
    }

    /// Numerators in the power basis.
    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn zero_like(&self) -> CycScalar {
        self.field.zero()
    }

    pub fn one_like(&self) -> CycScalar {
        self.field.one()
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -core::mem::take(c);
            }
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    /// Re-expresses this element in `Q(ζ_t)` where the current order divides `t`.
    pub fn lift(&self, target: &Field) -> CycScalar {
        let (s, t) = (self.order() as usize, target.order() as usize);
        if s == t {
            return self.clone();
        }
        assert!(t % s == 0, "cannot embed Q(ζ_{}) into Q(ζ_{})", s, t);
        let step = t / s;
        let mut raw = vec![BigInt::zero(); (self.num.len().max(1) - 1) * step + 1];
        for (j, c) in self.num.iter().enumerate() {
            raw[j * step] = c.clone();
        }
        target.from_raw(raw, self.den.clone())
    }

    fn common(a: &CycScalar, b: &CycScalar) -> (CycScalar, CycScalar) {
        let (s, t) = (a.order(), b.order());
        let l = s.lcm(&t);
        let f = if l == s { a.field.clone() } else if l == t { b.field.clone() } else { Field::new(l) };
        (a.lift(&f), b.lift(&f))
    }

    fn add_same(&self, other: &CycScalar, negate: bool) -> CycScalar {
        let num = if self.den == other.den {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(x, y)| if negate { x - y } else { x + y })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(x, y)| {
                    let (l, r) = (x * &other.den, y * &self.den);
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect()
        };
        let den = if self.den == other.den { self.den.clone() } else { &self.den * &other.den };
        let mut out = CycScalar { field: self.field.clone(), num, den };
        out.normalize();
        out
    }

    fn mul_same(&self, other: &CycScalar) -> CycScalar {
        if self.is_zero() || other.is_zero() {
            return self.field.zero();
        }
        let d = self.num.len();
        let mut out = if other.is_rational() {
            self.num.iter().map(|x| x * &other.num[0]).collect()
        } else if self.is_rational() {
            other.num.iter().map(|x| x * &self.num[0]).collect()
        } else {
            let mut raw = vec![BigInt::zero(); 2 * d - 1];
            for (i, x) in self.num.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in other.num.iter().enumerate() {
                    if !y.is_zero() {
                        raw[i + j] += x * y;
                    }
                }
            }
            reduce(&mut raw, self.field.0.modulus());
            raw
        };
        out.resize(d, BigInt::zero());
        let mut out = CycScalar { field: self.field.clone(), num: out, den: &self.den * &other.den };
        out.normalize();
        out
    }

    /// Galois automorphism `ζ ↦ ζ^k`, `gcd(k, m) = 1`.
    pub fn galois(&self, k: i64) -> CycScalar {
        let m = self.order() as i64;
        debug_assert_eq!(k.gcd(&m), 1);
        let mut raw = vec![BigInt::zero(); m as usize];
        for (j, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                raw[((j as i64) * k).rem_euclid(m) as usize] += c;
            }
        }
        self.field.from_raw(raw, self.den.clone())
    }

    /// Complex conjugate (`ζ ↦ ζ⁻¹`).
    pub fn conj(&self) -> CycScalar {
        if self.is_rational() {
            return self.clone();
        }
        self.galois(self.order() as i64 - 1)
    }

    /// Multiplicative inverse via the product of the other Galois conjugates
    /// divided by the field norm.
    pub fn inv(&self) -> Option<CycScalar> {
        if self.is_zero() {
            return None;
        }
        let m = self.order() as i64;
        let mut cofactor = self.field.one();
        for k in 2..m {
            if k.gcd(&m) == 1 {
                cofactor = cofactor.mul_same(&self.galois(k));
            }
        }
        let norm = self.mul_same(&cofactor).to_rational().expect("field norm is rational");
        let inv_norm = self.field.big_rational(&norm.recip());
        Some(cofactor.mul_same(&inv_norm))
    }

    pub fn scale(&self, r: &BigRational) -> CycScalar {
        self.mul_same(&self.field.big_rational(r))
    }

    /// Exact sign of the real part. Zero is decided exactly in the real
    /// subfield; nonzero signs by interval evaluation at growing precision.
    pub fn real_part_sign(&self) -> Sign {
        eval::real_part_sign(self)
    }

    /// Floating image with each component accurate to ~2⁻⁵² relative.
    pub fn to_complex(&self) -> num_complex::Complex64 {
        eval::to_complex(self)
    }

    pub fn pow(&self, mut e: u32) -> CycScalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order() == other.order() {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = CycScalar::common(self, other);
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for CycScalar {}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &'a CycScalar) -> CycScalar {
        if self.order() == rhs.order() {
            self.add_same(rhs, false)
        } else {
            let (a, b) = CycScalar::common(self, rhs);
            a.add_same(&b, false)
        }
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &'a CycScalar) -> CycScalar {
        if self.order() == rhs.order() {
            self.add_same(rhs, true)
        } else {
            let (a, b) = CycScalar::common(self, rhs);
            a.add_same(&b, true)
        }
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &'a CycScalar) -> CycScalar {
        if self.order() == rhs.order() {
            self.mul_same(rhs)
        } else {
            let (a, b) = CycScalar::common(self, rhs);
            a.mul_same(&b)
        }
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $f(self, rhs: CycScalar) -> CycScalar { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $f(self, rhs: &'a CycScalar) -> CycScalar { (&self).$f(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar({})", self)
    }
}

/// Renders `a/b + c/d*z12^k + ...` with `zm = ζ_m`; in `Q(i)` the root is
/// written `i`.
impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = BigRational::new(c.clone(), self.den.clone());
            if !first {
                f.write_str(if r.is_negative() { " - " } else { " + " })?;
            } else if r.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let r = r.abs();
            let unit = r.is_one();
            match (k, self.order()) {
                (0, _) => write!(f, "{}", r)?,
                (1, 4) if unit => f.write_str("i")?,
                (1, 4) => write!(f, "{}i", r)?,
                (_, m) if unit => write!(f, "z{}^{}", m, k)?,
                (_, m) => write!(f, "{}*z{}^{}", r, m, k)?,
            }
        }
        Ok(())
    }
}

/// `e^{iη}` as an exact element of `Q(ζ_{2q})`.
pub fn make_root(angle: Angle) -> CycScalar {
    angle.field().root(angle)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn angle_normalization() {
        assert_eq!(Angle::new(2, 4).unwrap(), Angle::RIGHT);
        assert_eq!(Angle::new(0, 7).unwrap(), Angle::ZERO);
        assert_eq!(Angle::new(5, 2).unwrap(), Angle::RIGHT);
        assert_eq!(Angle::new(3, 3).unwrap(), Angle::PI);
        assert!(Angle::new(3, 2).is_err());
        assert_eq!(Angle::normalize(-1, 3).unwrap(), (Angle::new(1, 3).unwrap(), true));
        assert!(Angle::new(1, 0).is_err());
        assert_eq!(Angle::new(1, 3).unwrap().regime(), Regime::BelowRight);
        assert_eq!(Angle::new(2, 3).unwrap().regime(), Regime::AboveRight);
    }

    #[test]
    fn roots() {
        assert!(make_root(Angle::ZERO).is_one());
        let i = make_root(Angle::RIGHT);
        assert_eq!(&i * &i, Field::new(4).integer(-1));
        let z = make_root(Angle::new(1, 3).unwrap());
        assert_eq!(&z + &z.conj(), z.field().one());
        let w = make_root(Angle::new(1, 7).unwrap());
        assert_eq!(w.pow(7), w.field().integer(-1));
        assert!(w.pow(14).is_one());
    }

    #[test]
    fn inverse_and_conjugate() {
        let f = Field::new(12);
        let x = &(&f.zeta_pow(1) + &f.rational(2, 3)) - &f.zeta_pow(5);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert!(f.zero().inv().is_none());
        let n = &x * &x.conj();
        assert_eq!(n, n.conj());
    }

    #[test]
    fn mixed_orders_lift() {
        let i = Field::new(4).zeta_pow(1);
        let w = Field::new(6).zeta_pow(1);
        let p = &i * &w;
        assert_eq!(p.order(), 12);
        assert_eq!(p, Field::new(12).zeta_pow(5));
        assert_eq!(Field::new(4).integer(3), Field::new(6).integer(3));
    }

    #[test]
    fn display() {
        let f = Field::new(4);
        let x = &f.rational(2, 3) - &f.zeta_pow(1);
        assert_eq!(alloc::format!("{}", x), "2/3 - i");
        assert_eq!(alloc::format!("{}", f.zero()), "0");
        let g = Field::new(6);
        let y = &(&g.zeta_pow(1) * &g.rational(-1, 2)) + &g.zeta_pow(2);
        assert_eq!(alloc::format!("{}", y), "-1 + 1/2*z6^1");
    }
}
