//! Exact characteristic polynomials `det(λI - M)`.
//!
//! [`berkowitz`] is division-free and works over any commutative ring; it is
//! the reference route. [`integer_charpoly`] and [`cyclotomic_integer_charpoly`]
//! compute the same polynomial for matrices with integer (or small cyclotomic
//! integer) entries by Hessenberg reduction modulo several primes and Chinese
//! remaindering, with enough primes to cover a coefficient bound.

mod modular;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::matrix::OpMatrix;
use crate::scalar::{CycScalar, Field};
use crate::{Error, Result};

pub use modular::{cyclotomic_integer_charpoly, integer_charpoly};

/// The operations Berkowitz's recurrence needs.
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for CycScalar {
    fn zero_like(&self) -> Self {
        CycScalar::zero_like(self)
    }
    fn one_like(&self) -> Self {
        CycScalar::one_like(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Coefficients of `det(λI - M)` for an `n × n` row-major matrix, constant term
/// first. `unit` supplies the ring's zero and one when `n = 0`.
pub fn berkowitz<T: Ring>(n: usize, m: &[T], unit: &T) -> Vec<T> {
    assert_eq!(m.len(), n * n);
    let zero = unit.zero_like();
    let one = unit.one_like();
    // p holds the characteristic polynomial of the leading k×k block, highest degree first.
    let mut p = alloc::vec![one.clone()];
    for k in 0..n {
        // t = [1, -a_kk, -R C, -R M C, ..., -R M^{k-1} C]
        let mut t = Vec::with_capacity(k + 2);
        t.push(one.clone());
        t.push(m[k * n + k].neg());
        let mut v: Vec<T> = (0..k).map(|i| m[i * n + k].clone()).collect();
        for step in 0..k {
            let rv = (0..k).fold(zero.clone(), |acc, j| acc.add(&m[k * n + j].mul(&v[j])));
            t.push(rv.neg());
            if step + 1 < k {
                v = (0..k)
                    .map(|i| (0..k).fold(zero.clone(), |acc, j| acc.add(&m[i * n + j].mul(&v[j]))))
                    .collect();
            }
        }
        let next: Vec<T> = (0..k + 2)
            .map(|i| {
                (0..=i.min(k))
                    .filter(|&j| i - j < t.len())
                    .fold(zero.clone(), |acc, j| acc.add(&t[i - j].mul(&p[j])))
            })
            .collect();
        p = next;
    }
    p.reverse();
    p
}

/// An exact characteristic polynomial, stored in the smallest coefficient ring
/// that holds it.
#[derive(Debug, Clone)]
pub enum CharPoly {
    Integer(Vec<BigInt>),
    Rational(Vec<BigRational>),
    Cyclotomic(Vec<CycScalar>),
}

impl CharPoly {
    /// Normalises cyclotomic coefficients down to rationals or integers when possible.
    pub fn from_cyclotomic(coeffs: Vec<CycScalar>) -> CharPoly {
        match coeffs.iter().map(CycScalar::to_rational).collect::<Option<Vec<_>>>() {
            Some(r) => CharPoly::from_rationals(r),
            None => CharPoly::Cyclotomic(coeffs),
        }
    }

    pub fn from_rationals(coeffs: Vec<BigRational>) -> CharPoly {
        if coeffs.iter().all(|c| c.is_integer()) {
            CharPoly::Integer(coeffs.into_iter().map(|c| c.to_integer()).collect())
        } else {
            CharPoly::Rational(coeffs)
        }
    }

    pub fn degree(&self) -> usize {
        self.len() - 1
    }

    fn len(&self) -> usize {
        match self {
            CharPoly::Integer(c) => c.len(),
            CharPoly::Rational(c) => c.len(),
            CharPoly::Cyclotomic(c) => c.len(),
        }
    }

    pub fn integers(&self) -> Option<&[BigInt]> {
        match self {
            CharPoly::Integer(c) => Some(c),
            _ => None,
        }
    }

    /// Coefficients as exact cyclotomic scalars over `field`, constant term first.
    pub fn coefficients(&self, field: &Field) -> Vec<CycScalar> {
        match self {
            CharPoly::Integer(c) => c.iter().map(|x| field.big_rational(&BigRational::from_integer(x.clone()))).collect(),
            CharPoly::Rational(c) => c.iter().map(|x| field.big_rational(x)).collect(),
            CharPoly::Cyclotomic(c) => c.iter().map(|x| x.lift(field)).collect(),
        }
    }

    /// Every coefficient is real.
    pub fn is_real(&self) -> bool {
        match self {
            CharPoly::Cyclotomic(c) => c.iter().all(|x| *x == x.conj()),
            _ => true,
        }
    }

    /// Floating coefficients, constant term first.
    pub fn to_complex(&self) -> Vec<num_complex::Complex64> {
        self.coefficients(&self.field()).iter().map(CycScalar::to_complex).collect()
    }

    fn field(&self) -> Field {
        match self {
            CharPoly::Cyclotomic(c) => c.iter().fold(Field::rationals(), |f, x| {
                if f.order() % x.order() == 0 {
                    f
                } else {
                    Field::new(num_integer::lcm(f.order(), x.order()))
                }
            }),
            _ => Field::rationals(),
        }
    }

    /// Canonical text key; equal polynomials give equal keys.
    pub fn key(&self) -> String {
        let mut s = String::new();
        match self {
            CharPoly::Integer(c) => {
                s.push('Z');
                for x in c {
                    let _ = write!(s, ",{}", x);
                }
            }
            CharPoly::Rational(c) => {
                s.push('Q');
                for x in c {
                    let _ = write!(s, ",{}", x);
                }
            }
            CharPoly::Cyclotomic(c) => {
                let f = self.field();
                let _ = write!(s, "C{}", f.order());
                for x in c {
                    let x = x.lift(&f);
                    let _ = write!(s, ",{}", x.denominator());
                    for n in x.numerators() {
                        let _ = write!(s, ":{}", n);
                    }
                }
            }
        }
        s
    }
}

impl PartialEq for CharPoly {
    fn eq(&self, other: &CharPoly) -> bool {
        match (self, other) {
            (CharPoly::Integer(a), CharPoly::Integer(b)) => a == b,
            (CharPoly::Rational(a), CharPoly::Rational(b)) => a == b,
            (CharPoly::Cyclotomic(a), CharPoly::Cyclotomic(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for CharPoly {}

/// Renders `x^3 - 3x - 2`; non-rational coefficients are bracketed.
impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, bool)> = match self {
            CharPoly::Integer(c) => c.iter().map(|x| (alloc::format!("{}", x.abs()), x.is_negative())).collect(),
            CharPoly::Rational(c) => c.iter().map(|x| (alloc::format!("{}", x.abs()), x.is_negative())).collect(),
            CharPoly::Cyclotomic(c) => c.iter().map(|x| (alloc::format!("({})", x), false)).collect(),
        };
        let zero = |s: &str| s == "0" || s == "(0)";
        let mut first = true;
        for (k, (mag, neg)) in terms.iter().enumerate().rev() {
            if zero(mag) {
                continue;
            }
            if first {
                if *neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if *neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag == "1";
            match k {
                0 => f.write_str(mag)?,
                _ => {
                    if !unit {
                        f.write_str(mag)?;
                    }
                    f.write_str("x")?;
                    if k > 1 {
                        write!(f, "^{}", k)?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `det(λI - M)` for a square exact matrix.
pub fn charpoly_exact(m: &OpMatrix) -> Result<CharPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows().dim;
    if let Some(ints) = m.to_integers() {
        if let Some(c) = integer_charpoly(n, &ints) {
            return Ok(CharPoly::Integer(c));
        }
    }
    Ok(CharPoly::from_cyclotomic(berkowitz(n, m.entries(), &m.field().one())))
}

/// As [`charpoly_exact`], additionally requiring self-adjointness and
/// confirming that the coefficients are real.
pub fn charpoly_self_adjoint(m: &OpMatrix) -> Result<CharPoly> {
    if !m.is_self_adjoint() {
        return Err(Error::NotSelfAdjoint);
    }
    let p = charpoly_exact(m)?;
    debug_assert!(p.is_real());
    if !p.is_real() {
        return Err(Error::NotSelfAdjoint);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::digraph::{make_y, Digraph};
    use crate::matrix::IndexSpace;
    use crate::operators::h_eta;
    use crate::scalar::Angle;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cases() {
        let f = Field::rationals();
        let id = OpMatrix::identity(IndexSpace::vertex(3), &f);
        assert_eq!(charpoly_exact(&id).unwrap(), CharPoly::Integer(ints(&[-1, 3, -3, 1])));
        let h = h_eta(&Digraph::complete(3), Angle::RIGHT);
        assert_eq!(charpoly_exact(&h).unwrap(), CharPoly::Integer(ints(&[-2, -3, 0, 1])));
        let y = h_eta(&make_y(2, 1 + 2).unwrap(), Angle::RIGHT);
        assert_eq!(charpoly_exact(&y).unwrap(), charpoly_exact(&h).unwrap());
        let empty = OpMatrix::identity(IndexSpace::vertex(0), &f);
        assert_eq!(charpoly_exact(&empty).unwrap(), CharPoly::Integer(ints(&[1])));
    }

    #[test]
    fn berkowitz_matches_cofactor_expansion() {
        // det(λI - M) for M = [[1,2],[3,4]] is λ² - 5λ - 2.
        let m = ints(&[1, 2, 3, 4]);
        assert_eq!(berkowitz(2, &m, &BigInt::one()), ints(&[-2, -5, 1]));
        let m3 = ints(&[2, -1, 0, 4, 3, 1, -2, 5, 7]);
        // trace 12, principal 2-minors 10 + 14 + 16 = 40, det 2(21-5) + 1(28+2) = 62.
        assert_eq!(berkowitz(3, &m3, &BigInt::one()), ints(&[-62, 40, -12, 1]));
    }

    #[test]
    fn cyclotomic_entries() {
        let g = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let h = h_eta(&g, Angle::new(1, 3).unwrap());
        let p = charpoly_self_adjoint(&h).unwrap();
        assert_eq!(p, CharPoly::Integer(ints(&[-1, 0, 1])));
        let f = Angle::new(1, 4).unwrap().field();
        let m = OpMatrix::diagonal(IndexSpace::vertex(1), &f, &[f.zeta_pow(1)]);
        let p = charpoly_exact(&m).unwrap();
        assert!(matches!(p, CharPoly::Cyclotomic(_)));
        assert!(!p.is_real());
        assert!(p.key().starts_with("C8,"));
    }

    #[test]
    fn keys_and_display() {
        let a = CharPoly::Integer(ints(&[1, -2, 1]));
        let b = CharPoly::from_rationals(ints(&[1, -2, 1]).into_iter().map(BigRational::from_integer).collect());
        assert_eq!(a, b);
        assert_eq!(a.key(), b.key());
        assert_eq!(a.to_string(), "x^2 - 2x + 1");
        assert_eq!(CharPoly::Integer(ints(&[-2, -3, 0, 1])).to_string(), "x^3 - 3x - 2");
        let p3 = Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        let f = Field::rationals();
        let s = IndexSpace::vertex(3);
        let ap = charpoly_exact(&OpMatrix::from_integers(s, s, &f, &p3.adjacency())).unwrap();
        let ak = charpoly_exact(&OpMatrix::from_integers(s, s, &f, &Digraph::complete(3).adjacency())).unwrap();
        assert_ne!(ap.key(), ak.key());
        assert_eq!(ap.to_string(), "x^3 - 2x");
    }

    #[test]
    fn rejects_non_square_and_non_hermitian() {
        let f = Field::rationals();
        let m = OpMatrix::zeros(IndexSpace::vertex(2), IndexSpace::arc(3), &f);
        assert!(matches!(charpoly_exact(&m), Err(Error::NotSquare { .. })));
        let g = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let s = IndexSpace::vertex(2);
        let a = OpMatrix::from_integers(s, s, &f, &g.adjacency());
        assert_eq!(charpoly_self_adjoint(&a), Err(Error::NotSelfAdjoint));
    }
}
