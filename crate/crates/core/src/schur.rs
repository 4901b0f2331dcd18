//! The rational cohomology ring of `G(1,n)` in the Schubert basis.
//!
//! `H*(G(1,n), Q)` is the ring of symmetric polynomials in two variables
//! modulo the span of the Schur polynomials `s_(a,b)` with `a > n - 1`.
//! Schubert classes are indexed here by codimension pairs `(a, b)` with
//! `n - 1 >= a >= b >= 0`; `s_(1,0) = l` is the Plücker hyperplane class and
//! `s_(1,1) = c2(E)`.
//!
//! # Incidence notation
//!
//! The locus of lines through a point `A0` and inside a linear space `B` is
//! the Schubert class with `(a, b) = (n - 1 - dim A0, n - dim B)`. In
//! particular the lines through a point inside a linear space of dimension
//! `n - D + 1` form the class `(n - 1, D - 1)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::chern::LC2Poly;
use crate::rational::Rational;
use crate::{Error, Result};

/// `G(1,n)`, the lines in `P^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannContext {
    n: u32,
}

impl GrassmannContext {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidContext(n));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Largest allowed first row, `n - 1`.
    pub fn max_row(&self) -> u32 {
        self.n - 1
    }

    /// Complex dimension `2(n - 1)`.
    pub fn dim(&self) -> u32 {
        2 * (self.n - 1)
    }

    pub fn contains(&self, p: Partition2) -> bool {
        p.a <= self.max_row()
    }

    /// The top-degree partition `(n-1, n-1)`, the class of a point.
    pub fn point(&self) -> Partition2 {
        Partition2 {
            a: self.max_row(),
            b: self.max_row(),
        }
    }

    /// Poincaré dual partition `(n-1-b, n-1-a)`.
    pub fn dual(&self, p: Partition2) -> Result<Partition2> {
        self.check(p)?;
        Ok(Partition2 {
            a: self.max_row() - p.b,
            b: self.max_row() - p.a,
        })
    }

    /// All partitions of size `codim` in the `2 × (n-1)` box, first row
    /// descending.
    pub fn schubert_basis(&self, codim: u32) -> Result<Vec<Partition2>> {
        if codim > self.dim() {
            return Err(Error::CodimOutOfRange {
                codim,
                max: self.dim(),
            });
        }
        let top = codim.min(self.max_row());
        let bottom = codim.div_ceil(2);
        Ok((bottom..=top)
            .rev()
            .map(|a| Partition2 { a, b: codim - a })
            .collect())
    }

    fn check(&self, p: Partition2) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OutOfBox {
                a: p.a,
                b: p.b,
                max_row: self.max_row(),
            })
        }
    }
}

/// A two-row partition `a >= b >= 0`.
///
/// Ordered by size `a + b`, then by descending `a`, which is the order
/// [`GrassmannContext::schubert_basis`] lists them in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Partition2 {
    a: u32,
    b: u32,
}

impl Partition2 {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a < b {
            return Err(Error::InvalidPartition {
                a: i64::from(a),
                b: i64::from(b),
            });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// `a + b`.
    pub fn codim(&self) -> u32 {
        self.a + self.b
    }
}

impl Ord for Partition2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.codim()
            .cmp(&other.codim())
            .then_with(|| other.a.cmp(&self.a))
    }
}

impl PartialOrd for Partition2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A class in `H*(G(1,n), Q)`: a finite rational combination of Schubert
/// classes. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchurClass {
    ctx: GrassmannContext,
    terms: BTreeMap<Partition2, Rational>,
}

impl SchurClass {
    pub fn zero(ctx: GrassmannContext) -> Self {
        Self {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: GrassmannContext) -> Self {
        Self::schubert(ctx, Partition2 { a: 0, b: 0 })
    }

    /// `s_p`, or zero when `p` leaves the box.
    pub fn schubert(ctx: GrassmannContext, p: Partition2) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(p, Rational::one());
        out
    }

    /// `l = s_(1,0)`.
    pub fn l(ctx: GrassmannContext) -> Self {
        Self::schubert(ctx, Partition2 { a: 1, b: 0 })
    }

    /// `c2 = s_(1,1)`.
    pub fn c2(ctx: GrassmannContext) -> Self {
        Self::schubert(ctx, Partition2 { a: 1, b: 1 })
    }

    /// Builds a class from explicit terms. Fails if a partition leaves the
    /// box rather than truncating, since that usually signals a wrong `n`.
    pub fn from_terms<I>(ctx: GrassmannContext, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition2, Rational)>,
    {
        let mut out = Self::zero(ctx);
        for (p, c) in terms {
            ctx.check(p)?;
            out.add_term(p, c);
        }
        Ok(out)
    }

    /// Adds `c·s_p`, dropping it when `p` falls outside the box.
    fn add_term(&mut self, p: Partition2, c: Rational) {
        if c.is_zero() || !self.ctx.contains(p) {
            return;
        }
        let sum = match self.terms.remove(&p) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(p, sum);
        }
    }

    pub fn context(&self) -> GrassmannContext {
        self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (Partition2, &Rational)> {
        self.terms.iter().map(|(p, c)| (*p, c))
    }

    pub fn coefficient(&self, p: Partition2) -> Rational {
        self.terms.get(&p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The codimension of every term, or `None` for zero or mixed classes.
    pub fn homogeneous_codim(&self) -> Option<u32> {
        let mut codims = self.terms.keys().map(Partition2::codim);
        let first = codims.next()?;
        codims.all(|c| c == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, codim: u32) -> bool {
        self.terms.keys().all(|p| p.codim() == codim)
    }

    /// Splits the class by codimension.
    pub fn graded_components(&self) -> BTreeMap<u32, SchurClass> {
        let mut out: BTreeMap<u32, SchurClass> = BTreeMap::new();
        for (p, c) in &self.terms {
            out.entry(p.codim())
                .or_insert_with(|| SchurClass::zero(self.ctx))
                .terms
                .insert(*p, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        Self {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(p, v)| (*p, v * c)).collect(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_context(rhs)?;
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(*p, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&-rhs)
    }

    /// Product in the quotient ring: bilinear extension of
    /// `s_(a,b)·s_(c,d) = Σ_{j=0}^{min(a-b, c-d)} s_(a+c-j, b+d+j)`, with
    /// terms of first row above `n - 1` discarded.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_context(rhs)?;
        let max_row = self.ctx.max_row();
        let mut out = Self::zero(self.ctx);
        for (p, cp) in &self.terms {
            for (q, cq) in &rhs.terms {
                let coef = cp * cq;
                let jmax = (p.a - p.b).min(q.a - q.b);
                let base_a = p.a + q.a;
                let base_b = p.b + q.b;
                // first row decreases with j; skip straight to the first in-box term
                let jmin = base_a.saturating_sub(max_row);
                for j in jmin..=jmax {
                    out.add_term(
                        Partition2 {
                            a: base_a - j,
                            b: base_b + j,
                        },
                        coef.clone(),
                    );
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.ctx);
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same context");
        }
        acc
    }

    /// Degree of the class: the coefficient of the point class
    /// `s_(n-1,n-1)`.
    pub fn integrate(&self) -> Rational {
        self.coefficient(self.ctx.point())
    }

    /// Image of a polynomial in `l, c2` under `l ↦ s_(1,0)`, `c2 ↦ s_(1,1)`.
    pub fn from_lc2(p: &LC2Poly, ctx: GrassmannContext) -> Self {
        let l = Self::l(ctx);
        let c2 = Self::c2(ctx);
        let mut l_pows = alloc::vec![Self::one(ctx)];
        let mut c2_pows = alloc::vec![Self::one(ctx)];
        let mut out = Self::zero(ctx);
        for ((i, j), c) in p.terms() {
            while l_pows.len() <= i as usize {
                let next = l_pows.last().unwrap().checked_mul(&l).unwrap();
                l_pows.push(next);
            }
            while c2_pows.len() <= j as usize {
                let next = c2_pows.last().unwrap().checked_mul(&c2).unwrap();
                c2_pows.push(next);
            }
            let mono = l_pows[i as usize]
                .checked_mul(&c2_pows[j as usize])
                .unwrap();
            for (q, cq) in &mono.terms {
                out.add_term(*q, cq * c);
            }
        }
        out
    }

    fn same_context(&self, rhs: &Self) -> Result<()> {
        if self.ctx == rhs.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.ctx.n,
                right: rhs.ctx.n,
            })
        }
    }
}

impl Neg for &SchurClass {
    type Output = SchurClass;

    fn neg(self) -> SchurClass {
        SchurClass {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(p, c)| (*p, -c.clone())).collect(),
        }
    }
}

/// Panics on a context mismatch; use [`SchurClass::checked_add`] otherwise.
impl Add for &SchurClass {
    type Output = SchurClass;

    fn add(self, rhs: &SchurClass) -> SchurClass {
        self.checked_add(rhs).expect("context mismatch")
    }
}

/// Panics on a context mismatch; use [`SchurClass::checked_sub`] otherwise.
impl Sub for &SchurClass {
    type Output = SchurClass;

    fn sub(self, rhs: &SchurClass) -> SchurClass {
        self.checked_sub(rhs).expect("context mismatch")
    }
}

/// Panics on a context mismatch; use [`SchurClass::checked_mul`] otherwise.
impl Mul for &SchurClass {
    type Output = SchurClass;

    fn mul(self, rhs: &SchurClass) -> SchurClass {
        self.checked_mul(rhs).expect("context mismatch")
    }
}

impl fmt::Display for SchurClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            crate::chern::write_coefficient(f, c, i == 0, false)?;
            write!(f, "s{p}")?;
        }
        Ok(())
    }
}
