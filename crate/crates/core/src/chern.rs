//! Chern classes by the splitting principle.
//!
//! The tautological bundle `E` on `G(1,n)` (fiber `H^0(Δ, O(1))` over a line
//! `Δ`) has formal Chern roots `x, y`, so `l = x + y` and `c2 = xy`. Every
//! bundle built from `E` by symmetric powers and twists by a line bundle with
//! first Chern class `h` has roots that are integer linear forms
//! `px·x + py·y + ph·h`. Chern classes are elementary symmetric polynomials in
//! those roots; the result is rewritten in `l` and `c2` immediately, so `x`
//! and `y` never leave this module.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::coniveau::MultiDegree;
use crate::rational::Rational;
use crate::{Error, Result};

/// A polynomial in `l` (weight 1) and `c2` (weight 2) with rational
/// coefficients. Keys are `(power of l, power of c2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LC2Poly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl LC2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn l() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn c2() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn monomial(l_pow: u32, c2_pow: u32, coef: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(l_pow, c2_pow, coef);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Rational)>,
    {
        let mut p = Self::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    fn add_term(&mut self, l_pow: u32, c2_pow: u32, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        let key = (l_pow, c2_pow);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + coef,
            None => coef,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    /// Terms in ascending `(l, c2)` order; never yields a zero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coefficient(&self, l_pow: u32, c2_pow: u32) -> Rational {
        self.terms
            .get(&(l_pow, c2_pow))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common weighted degree `l_pow + 2·c2_pow` of all terms, or `None`
    /// for the zero polynomial and for inhomogeneous ones.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|&(a, b)| a + 2 * b);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The terms free of `c2`, i.e. the image modulo `c2`.
    pub fn pure_l_part(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((_, b), _)| *b == 0)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn is_divisible_by_c2(&self) -> bool {
        self.terms.keys().all(|&(_, b)| b >= 1)
    }

    /// Exact quotient by `c2`.
    pub fn div_c2(&self) -> Result<Self> {
        if !self.is_divisible_by_c2() {
            return Err(Error::NotDivisibleByC2);
        }
        Ok(Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a, b - 1), v.clone()))
                .collect(),
        })
    }
}

impl Add for &LC2Poly {
    type Output = LC2Poly;

    fn add(self, rhs: &LC2Poly) -> LC2Poly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &LC2Poly {
    type Output = LC2Poly;

    fn sub(self, rhs: &LC2Poly) -> LC2Poly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c.clone());
        }
        out
    }
}

impl Mul for &LC2Poly {
    type Output = LC2Poly;

    fn mul(self, rhs: &LC2Poly) -> LC2Poly {
        let mut out = LC2Poly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LC2Poly {
    type Output = LC2Poly;

    fn neg(self) -> LC2Poly {
        LC2Poly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr for $ty {
            type Output = $ty;

            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(LC2Poly, Add, add);
forward_owned_binop!(LC2Poly, Sub, sub);
forward_owned_binop!(LC2Poly, Mul, mul);

impl fmt::Display for LC2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // highest weighted degree first, then by descending power of l
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|k| core::cmp::Reverse((k.0 + 2 * k.1, k.0)));
        for (i, key) in keys.into_iter().enumerate() {
            let c = &self.terms[&key];
            write_coefficient(f, c, i == 0, key == (0, 0))?;
            let mut first_var = true;
            for (name, p) in [("l", key.0), ("c2", key.1)] {
                if p == 0 {
                    continue;
                }
                if !first_var {
                    f.write_str("*")?;
                }
                first_var = false;
                if p == 1 {
                    f.write_str(name)?;
                } else {
                    write!(f, "{name}^{p}")?;
                }
            }
        }
        Ok(())
    }
}

/// Writes ` + c*`, ` - c*`, or nothing for a unit coefficient on a non-constant.
pub(crate) fn write_coefficient(
    f: &mut fmt::Formatter<'_>,
    c: &Rational,
    first: bool,
    is_constant: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let abs = c.abs();
    if is_constant {
        write!(f, "{abs}")
    } else if abs.is_one() {
        Ok(())
    } else {
        write!(f, "{abs}*")
    }
}

/// A polynomial in `h` with [`LC2Poly`] coefficients. Only ever produced by
/// symmetrizing an `(x, y, h)` expansion, so it always represents a class
/// symmetric in the formal roots.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HC2Poly {
    terms: BTreeMap<u32, LC2Poly>,
}

impl HC2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_lc2(p: LC2Poly) -> Self {
        let mut out = Self::zero();
        out.add_coefficient(0, p);
        out
    }

    pub fn from_h_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, LC2Poly)>,
    {
        let mut out = Self::zero();
        for (k, p) in terms {
            out.add_coefficient(k, p);
        }
        out
    }

    fn add_coefficient(&mut self, h_pow: u32, p: LC2Poly) {
        if p.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&h_pow) {
            Some(old) => &old + &p,
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(h_pow, sum);
        }
    }

    /// Coefficient of `h^k`.
    pub fn coefficient(&self, h_pow: u32) -> LC2Poly {
        self.terms.get(&h_pow).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &LC2Poly)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_h_power(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Total degree with `h`, `l` of weight 1 and `c2` of weight 2, when
    /// homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self
            .terms
            .iter()
            .flat_map(|(k, p)| p.terms().map(move |((a, b), _)| k + a + 2 * b));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// The `h^0` coefficient, provided no higher power of `h` occurs.
    pub fn into_lc2(self) -> Option<LC2Poly> {
        match self.max_h_power() {
            None => Some(LC2Poly::zero()),
            Some(0) => Some(self.coefficient(0)),
            Some(_) => None,
        }
    }

    /// Sets `c2 = 0` and returns the coefficients of `h^i l^(deg - i)`,
    /// assuming the polynomial is homogeneous of degree `deg`.
    pub fn mod_c2_coefficients(&self, deg: u32) -> Vec<Rational> {
        (0..=deg)
            .map(|i| self.coefficient(i).coefficient(deg - i, 0))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_h_terms(self.terms.iter().map(|(k, p)| (*k, p.scale(c))))
    }
}

impl Add for &HC2Poly {
    type Output = HC2Poly;

    fn add(self, rhs: &HC2Poly) -> HC2Poly {
        let mut out = self.clone();
        for (k, p) in &rhs.terms {
            out.add_coefficient(*k, p.clone());
        }
        out
    }
}

impl fmt::Display for HC2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, p)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({p})")?;
            match k {
                0 => {}
                1 => f.write_str("*h")?,
                _ => write!(f, "*h^{k}")?,
            }
        }
        Ok(())
    }
}

/// An integer linear form `px·x + py·y + ph·h` in the formal roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootForm {
    pub px: i64,
    pub py: i64,
    pub ph: i64,
}

impl RootForm {
    pub const fn new(px: i64, py: i64, ph: i64) -> Self {
        Self { px, py, ph }
    }

    pub fn mirrored(self) -> Self {
        Self::new(self.py, self.px, self.ph)
    }
}

impl fmt::Display for RootForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (c, v) in [(self.ph, "h"), (self.px, "x"), (self.py, "y")] {
            if c == 0 {
                continue;
            }
            if wrote {
                f.write_str(if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            f.write_str(v)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A bundle given by its multiset of Chern roots. Roots are kept sorted so
/// equal multisets compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootBundle {
    roots: Vec<RootForm>,
}

impl RootBundle {
    pub fn new(mut roots: Vec<RootForm>) -> Self {
        roots.sort();
        Self { roots }
    }

    /// `E` itself, roots `{x, y}`.
    pub fn tautological() -> Self {
        Self::symmetric_power(1)
    }

    /// `S^m E`, roots `k·x + (m-k)·y` for `k = 0..=m`.
    pub fn symmetric_power(m: u32) -> Self {
        let m = i64::from(m);
        Self::new((0..=m).map(|k| RootForm::new(k, m - k, 0)).collect())
    }

    /// Tensor with a line bundle of first Chern class `t·h`.
    pub fn twist_by_h(&self, t: i64) -> Self {
        Self::new(
            self.roots
                .iter()
                .map(|r| RootForm::new(r.px, r.py, r.ph + t))
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[RootForm] {
        &self.roots
    }

    pub fn is_symmetric(&self) -> bool {
        let mut mirrored: Vec<_> = self.roots.iter().map(|r| r.mirrored()).collect();
        mirrored.sort();
        mirrored == self.roots
    }

    /// `c_k` of the bundle, rewritten in `(h, l, c2)`.
    pub fn chern_class(&self, k: usize) -> Result<HC2Poly> {
        if k > self.rank() {
            return Err(Error::Precondition(alloc::format!(
                "chern class index {k} exceeds rank {}",
                self.rank()
            )));
        }
        let elem = elementary_symmetric(&self.roots, k);
        symmetrize(&elem[k])
    }

    /// All Chern classes `c_0, ..., c_rank`.
    pub fn chern_classes(&self) -> Result<Vec<HC2Poly>> {
        let elem = elementary_symmetric(&self.roots, self.rank());
        elem.iter().map(symmetrize).collect()
    }

    /// The top Chern class `c_rank`, i.e. the product of all roots.
    pub fn top_chern_class(&self) -> Result<HC2Poly> {
        symmetrize(&product_of_roots(&self.roots))
    }
}

/// Polynomial in `x, y, h` with integer coefficients; key `(x, y, h)` exponents.
pub(crate) type XyhPoly = BTreeMap<(u32, u32, u32), BigInt>;

fn xyh_add_term(p: &mut XyhPoly, key: (u32, u32, u32), c: BigInt) {
    if c.is_zero() {
        return;
    }
    let sum = match p.remove(&key) {
        Some(old) => old + c,
        None => c,
    };
    if !sum.is_zero() {
        p.insert(key, sum);
    }
}

fn xyh_mul_root(p: &XyhPoly, r: RootForm) -> XyhPoly {
    let mut out = XyhPoly::new();
    for (&(a, b, k), c) in p {
        if r.px != 0 {
            xyh_add_term(&mut out, (a + 1, b, k), c * r.px);
        }
        if r.py != 0 {
            xyh_add_term(&mut out, (a, b + 1, k), c * r.py);
        }
        if r.ph != 0 {
            xyh_add_term(&mut out, (a, b, k + 1), c * r.ph);
        }
    }
    out
}

fn xyh_one() -> XyhPoly {
    let mut p = XyhPoly::new();
    p.insert((0, 0, 0), BigInt::one());
    p
}

pub(crate) fn product_of_roots(roots: &[RootForm]) -> XyhPoly {
    roots
        .iter()
        .fold(xyh_one(), |acc, r| xyh_mul_root(&acc, *r))
}

/// `e_0, ..., e_kmax` of the roots by the recurrence
/// `e_j(r_1..r_i) = e_j(r_1..r_{i-1}) + r_i·e_{j-1}(r_1..r_{i-1})`.
fn elementary_symmetric(roots: &[RootForm], kmax: usize) -> Vec<XyhPoly> {
    let mut e = vec![XyhPoly::new(); kmax + 1];
    e[0] = xyh_one();
    for (i, r) in roots.iter().enumerate() {
        for j in (1..=kmax.min(i + 1)).rev() {
            let shifted = xyh_mul_root(&e[j - 1], *r);
            for (key, c) in shifted {
                xyh_add_term(&mut e[j], key, c);
            }
        }
    }
    e
}

/// Rewrites a polynomial in `x, y, h` that is symmetric in `x, y` as a
/// polynomial in `h, l = x + y, c2 = xy`.
///
/// Repeatedly strips the lex-leading monomial `x^a y^b` (`a >= b`) by
/// subtracting `coef · l^(a-b) · c2^b`, whose own leading monomial it is.
pub(crate) fn symmetrize(p: &XyhPoly) -> Result<HC2Poly> {
    for (&(a, b, k), c) in p {
        let mirror = p.get(&(b, a, k)).cloned().unwrap_or_default();
        if *c != mirror {
            return Err(Error::AsymmetricRoots {
                witness: (a, b, k),
                coefficient: c.to_string(),
                mirror: mirror.to_string(),
            });
        }
    }
    let mut by_h: BTreeMap<u32, BTreeMap<(u32, u32), BigInt>> = BTreeMap::new();
    for (&(a, b, k), c) in p {
        by_h.entry(k).or_default().insert((a, b), c.clone());
    }
    let mut out = HC2Poly::zero();
    for (k, mut rest) in by_h {
        let mut lc = LC2Poly::zero();
        while let Some((&(a, b), c)) = rest.iter().next_back() {
            debug_assert!(a >= b);
            let c = c.clone();
            let e = a - b;
            // (x+y)^e (xy)^b = sum_i binom(e,i) x^(i+b) y^(e-i+b)
            let mut binom = BigInt::one();
            for i in 0..=e {
                let key = (i + b, e - i + b);
                let delta = -(&c * &binom);
                let entry = rest.entry(key).or_insert_with(BigInt::zero);
                *entry += delta;
                if entry.is_zero() {
                    rest.remove(&key);
                }
                binom = binom * BigInt::from(e - i) / BigInt::from(i + 1);
            }
            lc.add_term(e, b, Rational::from_integer(c));
        }
        out.add_coefficient(k, lc);
    }
    Ok(out)
}

/// `c_{n-D}(S^{n-D-1} E)` with `D = Σ d_i`, the class of the lines in `X`
/// lying in an auxiliary hypersurface of degree `n - D - 1`.
pub fn class_fg(md: &MultiDegree) -> Result<LC2Poly> {
    let m = md.fano_index() - 1;
    if m < 0 {
        return Err(Error::Precondition(alloc::format!(
            "class of F_G needs n - sum(d) >= 1, got {}",
            md.fano_index()
        )));
    }
    top_chern_of_sym_power(m as u32)
}

/// `∏_i c_{d_i + 1}(S^{d_i} E)`, the class of the Fano variety of lines as
/// the zero locus of a section of `⊕ S^{d_i} E`.
pub fn class_f(md: &MultiDegree) -> LC2Poly {
    md.degrees().iter().fold(LC2Poly::one(), |acc, &d| {
        let top = top_chern_of_sym_power(d).expect("symmetric powers are symmetric");
        &acc * &top
    })
}

/// `c_{m+1}(S^m E) = ∏_{k=0}^{m} (k·x + (m-k)·y)`.
pub fn top_chern_of_sym_power(m: u32) -> Result<LC2Poly> {
    let top = RootBundle::symmetric_power(m).top_chern_class()?;
    Ok(top.into_lc2().expect("no h in S^m E"))
}

/// `Q_m = ∏_{k=1}^{m-1} (k·x + (m-k)·y)`, the cofactor in
/// `c_{m+1}(S^m E) = m²·c2·Q_m`.
pub fn q_class(m: u32) -> Result<LC2Poly> {
    if m < 2 {
        return Err(Error::Precondition(alloc::format!(
            "Q_m needs m >= 2, got {m}"
        )));
    }
    let m = i64::from(m);
    let roots = (1..m).map(|k| RootForm::new(k, m - k, 0)).collect();
    let q = RootBundle::new(roots).top_chern_class()?;
    Ok(q.into_lc2().expect("no h in Q"))
}

/// Rewrites a symmetric polynomial given by `(x-exponent, y-exponent) ->
/// coefficient` in `l, c2`.
pub fn symmetric_xy_to_lc2<I>(terms: I) -> Result<LC2Poly>
where
    I: IntoIterator<Item = ((u32, u32), BigInt)>,
{
    let mut p = XyhPoly::new();
    for ((a, b), c) in terms {
        xyh_add_term(&mut p, (a, b, 0), c);
    }
    Ok(symmetrize(&p)?.into_lc2().expect("no h"))
}
