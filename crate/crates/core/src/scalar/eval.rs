//! Sign and floating evaluation of cyclotomic elements.
//!
//! A fast double-precision pass carries a rigorous error bound; when the bound
//! does not separate the value from zero we redo the sum in fixed point with
//! big integers, doubling the precision until it does. Exact zeros never reach
//! this loop: they are caught in the real subfield first.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Angle, CycScalar, Sign};

const START_BITS: u64 = 96;
/// Extra working bits; truncation errors stay well under one unit at 2^-bits.
const GUARD: u64 = 40;

pub(super) fn real_part_sign(x: &CycScalar) -> Sign {
    if x.is_rational() {
        return Sign::of(&x.num[0]);
    }
    if (x + &x.conj()).is_zero() {
        return Sign::Zero;
    }
    let m = x.order() as i64;
    let terms: Vec<(i64, i64)> = (0..x.num.len() as i64).map(|j| (j, m)).collect();
    sign_of_sum(&x.num, &terms)
}

pub(super) fn to_complex(x: &CycScalar) -> Complex64 {
    if x.is_zero() {
        return Complex64::new(0.0, 0.0);
    }
    let m = x.order() as i64;
    let cos_terms: Vec<(i64, i64)> = (0..x.num.len() as i64).map(|j| (j, m)).collect();
    // sin(2πj/m) = cos(2π(m - 4j)/(4m))
    let sin_terms: Vec<(i64, i64)> = (0..x.num.len() as i64).map(|j| (m - 4 * j, 4 * m)).collect();
    let re = if x.is_rational() || !(x + &x.conj()).is_zero() {
        component(&x.num, &cos_terms, &x.den)
    } else {
        0.0
    };
    let im = if !x.is_rational() && !(x - &x.conj()).is_zero() {
        component(&x.num, &sin_terms, &x.den)
    } else {
        0.0
    };
    Complex64::new(re, im)
}

/// Sign of `a + b cos η` for integers `a`, `b`.
pub fn sign_affine_cos(a: i64, b: i64, angle: Angle) -> Sign {
    if b == 0 {
        return Sign::of(&a);
    }
    if let Some((cn, cd)) = angle.rational_cos() {
        return Sign::of(&(a as i128 * cd as i128 + b as i128 * cn as i128));
    }
    // cos η is irrational here, so the value is nonzero.
    let c = libm::cos(angle.to_f64());
    let s = a as f64 + b as f64 * c;
    let bound = (a.unsigned_abs() as f64 + b.unsigned_abs() as f64) * 16.0 * f64::EPSILON;
    if s.abs() > bound {
        return if s > 0.0 { Sign::Positive } else { Sign::Negative };
    }
    let nums = [BigInt::from(2 * a), BigInt::from(b), BigInt::from(b)];
    let m = angle.field_order() as i64;
    let p = angle.p() as i64;
    let terms = [(0, 1), (p, m), (-p, m)];
    sign_of_sum(&nums, &terms)
}

/// Sign of `Σ n_k cos(2π a_k / b_k)`, known to be nonzero.
fn sign_of_sum(nums: &[BigInt], terms: &[(i64, i64)]) -> Sign {
    if let Some((s, bound)) = float_sum(nums, terms) {
        if s.abs() > bound {
            return if s > 0.0 { Sign::Positive } else { Sign::Negative };
        }
    }
    let mut bits = START_BITS;
    loop {
        let (s, err) = fixed_sum(nums, terms, bits);
        if s.magnitude() > err.magnitude() {
            return Sign::of(&s);
        }
        bits *= 2;
    }
}

/// `Σ n_k cos(2π a_k/b_k) / den` with relative error below 2⁻⁵⁰.
fn component(nums: &[BigInt], terms: &[(i64, i64)], den: &BigInt) -> f64 {
    let den_f = den.to_f64().filter(|d| d.is_finite());
    if let (Some((s, bound)), Some(d)) = (float_sum(nums, terms), den_f) {
        if bound <= s.abs() * 2f64.powi(-54) {
            return s / d;
        }
    }
    let mut bits = START_BITS;
    loop {
        let (s, err) = fixed_sum(nums, terms, bits);
        // |err| ≤ 2^-56 |s| gives a relative error comfortably below 2^-52.
        if !s.is_zero() && (err.magnitude() << 56u32) <= *s.magnitude() {
            return ratio_to_f64(&s, den, bits);
        }
        bits *= 2;
    }
}

/// Double-precision sum with a conservative absolute error bound.
fn float_sum(nums: &[BigInt], terms: &[(i64, i64)]) -> Option<(f64, f64)> {
    let mut s = 0.0f64;
    let mut mag = 0.0f64;
    for (n, &(a, b)) in nums.iter().zip(terms) {
        if n.is_zero() {
            continue;
        }
        let nf = n.to_f64().filter(|v| v.is_finite())?;
        let c = libm::cos(2.0 * core::f64::consts::PI * (a as f64) / (b as f64));
        s += nf * c;
        mag += nf.abs();
    }
    let bound = mag * (nums.len() as f64 + 8.0) * 8.0 * f64::EPSILON;
    Some((s, bound))
}

/// Fixed-point sum at scale `2^bits`: returns `(S, E)` with
/// `|S - 2^bits Σ n_k cos_k| ≤ E`.
fn fixed_sum(nums: &[BigInt], terms: &[(i64, i64)], bits: u64) -> (BigInt, BigInt) {
    let work = bits + GUARD;
    let pi = fixed_pi(work);
    let mut s = BigInt::zero();
    let mut mag = BigInt::zero();
    for (n, &(a, b)) in nums.iter().zip(terms) {
        if n.is_zero() {
            continue;
        }
        s += n * cos_two_pi_frac(a, b, &pi, work);
        mag += n.abs();
    }
    // Each cosine is accurate to far less than 2^GUARD units at `work` bits,
    // so after shifting each term is within 1 unit; round conservatively.
    let s = s >> GUARD;
    let err = mag + BigInt::one();
    (s, err)
}

fn ratio_to_f64(s: &BigInt, den: &BigInt, bits: u64) -> f64 {
    // s / (den 2^bits) computed with a 64-bit quotient mantissa.
    let shift = 64i64 + den.bits() as i64 - s.bits() as i64;
    let scaled = if shift >= 0 { s << (shift as u64) } else { s >> ((-shift) as u64) };
    let q = scaled / den;
    let mant = q.to_f64().unwrap_or(0.0);
    mant * pow2(-(shift + bits as i64))
}

fn pow2(e: i64) -> f64 {
    let mut v = 1.0f64;
    let step = if e >= 0 { 2.0 } else { 0.5 };
    let mut k = e.unsigned_abs();
    // Split into chunks to stay in range while scaling.
    while k >= 1000 {
        v *= libm::pow(step, 1000.0);
        k -= 1000;
    }
    v * libm::pow(step, k as f64)
}

/// π scaled by `2^bits` (Machin: π = 16 atan(1/5) - 4 atan(1/239)).
fn fixed_pi(bits: u64) -> BigInt {
    let one = BigInt::one() << (bits + 8);
    let pi = atan_inv(5, &one) * 16 - atan_inv(239, &one) * 4;
    pi >> 8u32
}

fn atan_inv(x: u32, one: &BigInt) -> BigInt {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = one / BigInt::from(x);
    let mut sum = power.clone();
    let mut k = 1u64;
    loop {
        power /= &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}

/// `cos(2π a / b)` scaled by `2^bits`, error a few units.
fn cos_two_pi_frac(a: i64, b: i64, pi: &BigInt, bits: u64) -> BigInt {
    let mut a = a.rem_euclid(b);
    if 2 * a > b {
        a = b - a;
    }
    // θ = 2π a / b ∈ [0, π]
    let theta: BigInt = (pi * BigInt::from(2 * a)) / BigInt::from(b);
    let theta2 = (&theta * &theta) >> bits;
    let one = BigInt::one() << bits;
    let mut term = one.clone();
    let mut sum = one;
    let mut k = 1u64;
    loop {
        term = (&term * &theta2) >> bits;
        term /= BigInt::from((2 * k - 1) * (2 * k));
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        k += 1;
    }
    sum
}
