//! Dense exact matrices with tagged index spaces.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_complex::Complex64;
use num_integer::Integer;

use crate::scalar::{CycScalar, Field, Sign};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    Vertex,
    Arc,
}

/// The index set of a matrix side: vertices or symmetric arcs, with its size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexSpace {
    pub kind: SpaceKind,
    pub dim: usize,
}

impl IndexSpace {
    pub const fn vertex(dim: usize) -> IndexSpace {
        IndexSpace { kind: SpaceKind::Vertex, dim }
    }

    pub const fn arc(dim: usize) -> IndexSpace {
        IndexSpace { kind: SpaceKind::Arc, dim }
    }
}

impl fmt::Display for IndexSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SpaceKind::Vertex => write!(f, "vertex[{}]", self.dim),
            SpaceKind::Arc => write!(f, "arc[{}]", self.dim),
        }
    }
}

/// A dense row-major matrix over a cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct OpMatrix {
    rows: IndexSpace,
    cols: IndexSpace,
    field: Field,
    data: Vec<CycScalar>,
}

impl OpMatrix {
    pub fn zeros(rows: IndexSpace, cols: IndexSpace, field: &Field) -> OpMatrix {
        OpMatrix { rows, cols, field: field.clone(), data: alloc::vec![field.zero(); rows.dim * cols.dim] }
    }

    pub fn identity(space: IndexSpace, field: &Field) -> OpMatrix {
        let mut m = OpMatrix::zeros(space, space, field);
        for i in 0..space.dim {
            m.data[i * space.dim + i] = field.one();
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn ones(space: IndexSpace, field: &Field) -> OpMatrix {
        OpMatrix::from_fn(space, space, field, |_, _| field.one())
    }

    pub fn from_fn<F: FnMut(usize, usize) -> CycScalar>(
        rows: IndexSpace,
        cols: IndexSpace,
        field: &Field,
        mut f: F,
    ) -> OpMatrix {
        let mut data = Vec::with_capacity(rows.dim * cols.dim);
        for i in 0..rows.dim {
            for j in 0..cols.dim {
                data.push(f(i, j).lift(field));
            }
        }
        OpMatrix { rows, cols, field: field.clone(), data }
    }

    /// Integer entries, row-major.
    pub fn from_integers(rows: IndexSpace, cols: IndexSpace, field: &Field, entries: &[i64]) -> OpMatrix {
        assert_eq!(entries.len(), rows.dim * cols.dim);
        OpMatrix::from_fn(rows, cols, field, |i, j| field.integer(entries[i * cols.dim + j]))
    }

    pub fn diagonal(space: IndexSpace, field: &Field, diag: &[CycScalar]) -> OpMatrix {
        assert_eq!(diag.len(), space.dim);
        OpMatrix::from_fn(space, space, field, |i, j| if i == j { diag[i].clone() } else { field.zero() })
    }

    pub fn rows(&self) -> IndexSpace {
        self.rows
    }

    pub fn cols(&self) -> IndexSpace {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.data[i * self.cols.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycScalar) {
        let v = self.absorb(v);
        self.data[i * self.cols.dim + j] = v;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[CycScalar] {
        &self.data
    }

    fn absorb(&mut self, v: CycScalar) -> CycScalar {
        let (s, t) = (self.field.order(), v.order());
        if s % t == 0 {
            return v.lift(&self.field);
        }
        let f = Field::new(s.lcm(&t));
        self.lift_in_place(&f);
        v.lift(&f)
    }

    fn lift_in_place(&mut self, f: &Field) {
        for x in &mut self.data {
            *x = x.lift(f);
        }
        self.field = f.clone();
    }

    fn joint_field(&self, other: &OpMatrix) -> Field {
        let (s, t) = (self.field.order(), other.field.order());
        if s % t == 0 {
            self.field.clone()
        } else if t % s == 0 {
            other.field.clone()
        } else {
            Field::new(s.lcm(&t))
        }
    }

    /// Re-expresses every entry in a field containing the current one.
    pub fn lift(&self, f: &Field) -> OpMatrix {
        let mut m = self.clone();
        m.lift_in_place(f);
        m
    }

    pub fn mul(&self, other: &OpMatrix) -> Result<OpMatrix> {
        if self.cols != other.rows {
            return Err(Error::SpaceMismatch { left: self.cols, right: other.rows });
        }
        let f = self.joint_field(other);
        let (a, b) = (self.lift(&f), other.lift(&f));
        let (n, k, m) = (self.rows.dim, self.cols.dim, other.cols.dim);
        let mut out = OpMatrix::zeros(self.rows, other.cols, &f);
        for i in 0..n {
            for l in 0..k {
                let x = &a.data[i * k + l];
                if x.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let y = &b.data[l * m + j];
                    if !y.is_zero() {
                        let acc = &mut out.data[i * m + j];
                        *acc = &*acc + &(x * y);
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &OpMatrix, f: impl Fn(&CycScalar, &CycScalar) -> CycScalar) -> Result<OpMatrix> {
        if self.rows != other.rows {
            return Err(Error::SpaceMismatch { left: self.rows, right: other.rows });
        }
        if self.cols != other.cols {
            return Err(Error::SpaceMismatch { left: self.cols, right: other.cols });
        }
        let field = self.joint_field(other);
        let data = self.data.iter().zip(&other.data).map(|(x, y)| f(x, y).lift(&field)).collect();
        Ok(OpMatrix { rows: self.rows, cols: self.cols, field, data })
    }

    pub fn add(&self, other: &OpMatrix) -> Result<OpMatrix> {
        self.zip(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &OpMatrix) -> Result<OpMatrix> {
        self.zip(other, |x, y| x - y)
    }

    /// Entrywise product `A ∘ B`.
    pub fn hadamard(&self, other: &OpMatrix) -> Result<OpMatrix> {
        self.zip(other, |x, y| x * y)
    }

    pub fn scale(&self, c: &CycScalar) -> OpMatrix {
        let mut m = self.clone();
        if self.field.order() % c.order() != 0 {
            m.lift_in_place(&Field::new(self.field.order().lcm(&c.order())));
        }
        for x in &mut m.data {
            *x = &*x * c;
        }
        m
    }

    pub fn map(&self, f: impl Fn(&CycScalar) -> CycScalar) -> OpMatrix {
        let data = self.data.iter().map(|x| f(x).lift(&self.field)).collect();
        OpMatrix { data, ..self.clone() }
    }

    pub fn transpose(&self) -> OpMatrix {
        let (n, m) = (self.rows.dim, self.cols.dim);
        let mut data = Vec::with_capacity(n * m);
        for j in 0..m {
            for i in 0..n {
                data.push(self.data[i * m + j].clone());
            }
        }
        OpMatrix { rows: self.cols, cols: self.rows, field: self.field.clone(), data }
    }

    /// Conjugate transpose `M*`.
    pub fn adjoint(&self) -> OpMatrix {
        let mut t = self.transpose();
        for x in &mut t.data {
            *x = x.conj();
        }
        t
    }

    pub fn pow(&self, e: u32) -> Result<OpMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut acc = OpMatrix::identity(self.rows, &self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> CycScalar {
        let n = self.rows.dim.min(self.cols.dim);
        (0..n).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows.dim)
                .all(|i| (0..self.cols.dim).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    /// `M M* = I`.
    pub fn is_unitary(&self) -> bool {
        self.is_square() && self.mul(&self.adjoint()).map(|p| p.is_identity()).unwrap_or(false)
    }

    /// Exact sign of the real part of every entry, row-major.
    pub fn real_part_signs(&self) -> Vec<Sign> {
        self.data.iter().map(CycScalar::real_part_sign).collect()
    }

    /// Every entry as an integer, if all are.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.data
            .iter()
            .map(|x| {
                let r = x.to_rational()?;
                if r.is_integer() {
                    r.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.data.iter().map(CycScalar::to_complex).collect()
    }

    /// One line per row, entries rendered exactly and separated by `" | "`.
    pub fn render_exact(&self) -> String {
        self.render(|x| alloc::format!("{}", x))
    }

    /// One line per row of floating complex entries.
    pub fn render_float(&self) -> String {
        self.render(|x| {
            let z = x.to_complex();
            alloc::format!("{:+.6}{:+.6}i", z.re + 0.0, z.im + 0.0)
        })
    }

    fn render(&self, f: impl Fn(&CycScalar) -> String) -> String {
        let mut out = String::new();
        for i in 0..self.rows.dim {
            for j in 0..self.cols.dim {
                if j > 0 {
                    out.push_str(" | ");
                }
                out.push_str(&f(self.get(i, j)));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for OpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        let _ = write!(s, "OpMatrix({} x {}, Q(zeta_{}))\n{}", self.rows, self.cols, self.field.order(), self.render_exact());
        f.write_str(&s)
    }
}
