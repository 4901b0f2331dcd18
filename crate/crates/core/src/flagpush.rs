//! The class of lines lying in a plane contained in a hypersurface.
//!
//! Over the variety of lines `F` of a degree-`d` hypersurface sits the
//! `P^{n-2}`-bundle `π: F_2 → F` of (line, plane) flags, with `h = c1(H)` for
//! the kernel `H` of `F → π*E`. The flags whose plane lies in `X` form the
//! zero locus `Z` of a section of `H ⊗ S^{d-1}F`, a bundle filtered by
//! `H^i ⊗ S^{d-i}E` for `i = 1..=d`, so
//!
//! ```text
//! [Z] = ∏_{i=1}^{d} ∏_{j=0}^{d-i} (i·h + j·x + (d-i-j)·y)
//! ```
//!
//! and `[Z'] = π_*[Z]` is computed with the Segre rule
//! `π_* h^{n-2+i} = c_i(E*)`. Modulo `c2` the class `[Z]` becomes the
//! bivariate polynomial `M(h, l)`, which factors as `d!·h^d·M'(h, l)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::chern::{self, HC2Poly, LC2Poly, RootBundle, RootForm};
use crate::rational::{factorial, Rational};
use crate::{Error, Result};

/// A homogeneous polynomial in `h, l`; `coeffs[i]` multiplies
/// `h^i · l^(deg - i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    coeffs: Vec<Rational>,
}

impl BivarPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "degree needs at least one coefficient");
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    /// `h_coef·h + l_coef·l`.
    pub fn linear(h_coef: i64, l_coef: i64) -> Self {
        Self::new(vec![
            Rational::from_integer(l_coef.into()),
            Rational::from_integer(h_coef.into()),
        ])
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `h^i l^(deg - i)`; zero outside `0..=deg`.
    pub fn coeff(&self, i: i64) -> Rational {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.coeffs.get(i))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    /// Multiplies by `h^k`.
    pub fn shift_h(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut coeffs = vec![Rational::zero(); self.deg() + rhs.deg() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// Substitutes `h ↦ x`, `l ↦ y` and rewrites in `l = x + y`, `c2 = xy`.
    /// Requires a palindromic coefficient list.
    pub fn to_symmetric_lc2(&self) -> Result<LC2Poly> {
        let deg = self.deg() as u32;
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::Precondition(
                    "symmetric substitution expects integer coefficients".into(),
                ));
            }
            terms.push(((i as u32, deg - i as u32), c.to_integer()));
        }
        chern::symmetric_xy_to_lc2(terms)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let deg = self.deg();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            chern::write_coefficient(f, c, first, deg == 0)?;
            first = false;
            let mut parts = Vec::new();
            if i > 0 {
                parts.push(if i == 1 {
                    alloc::string::String::from("h")
                } else {
                    alloc::format!("h^{i}")
                });
            }
            if deg - i > 0 {
                let e = deg - i;
                parts.push(if e == 1 {
                    alloc::string::String::from("l")
                } else {
                    alloc::format!("l^{e}")
                });
            }
            f.write_str(&parts.join("*"))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `N = d(d+1)/2`, the rank of `S^{d-1}F` and the codimension of `Z`.
pub fn z_codim(d: u32) -> u32 {
    d * (d + 1) / 2
}

fn z_roots(d: u32) -> Vec<RootForm> {
    let d = i64::from(d);
    let mut roots = Vec::new();
    for i in 1..=d {
        for j in 0..=(d - i) {
            roots.push(RootForm::new(j, d - i - j, i));
        }
    }
    roots
}

/// `[Z] = c_N(H ⊗ S^{d-1}F)` as a polynomial in `h, l, c2`.
pub fn build_z_class(d: u32) -> Result<HC2Poly> {
    if d < 1 {
        return Err(Error::Precondition("[Z] needs d >= 1".into()));
    }
    RootBundle::new(z_roots(d)).top_chern_class()
}

/// `π_* h^k` for the `P^{n-2}`-bundle `F_2 → F`: the Segre class
/// `s_{k-n+2}(K_1*) = c_{k-n+2}(E*)`, where `c(E*) = 1 - l + c2`.
pub fn push_h_power(k: u32, n: u32) -> LC2Poly {
    match i64::from(k) - (i64::from(n) - 2) {
        0 => LC2Poly::one(),
        1 => -&LC2Poly::l(),
        2 => LC2Poly::c2(),
        _ => LC2Poly::zero(),
    }
}

/// `π_*` applied to a class on `F_2`, linearly over `l, c2`.
pub fn pushforward(z: &HC2Poly, n: u32) -> Result<LC2Poly> {
    if n < 3 {
        return Err(Error::Precondition(alloc::format!(
            "pushforward needs n >= 3, got {n}"
        )));
    }
    Ok(z.terms().fold(LC2Poly::zero(), |acc, (k, coef)| {
        let pushed = push_h_power(k, n);
        if pushed.is_zero() {
            acc
        } else {
            &acc + &(coef * &pushed)
        }
    }))
}

/// `[Z'] = π_*[Z]` together with bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPrime {
    pub n: u32,
    pub d: u32,
    pub class: LC2Poly,
    /// `N - (n - 2)`; negative exactly when the class is forced to vanish.
    pub degree: i64,
    /// `N < n - 2`: `Z` has smaller dimension than the fibers of `π`.
    pub degenerate: bool,
}

impl ZPrime {
    /// Coefficient of `l^degree`, the image of `[Z']` modulo `c2`.
    pub fn pure_l_coefficient(&self) -> Rational {
        if self.degree < 0 {
            return Rational::zero();
        }
        self.class.coefficient(self.degree as u32, 0)
    }

    /// `R` with `[Z'] = (pure-l part) + c2·R`.
    pub fn c2_cofactor(&self) -> LC2Poly {
        (&self.class - &self.class.pure_l_part())
            .div_c2()
            .expect("pure-l part removed")
    }
}

pub fn z_prime_class(n: u32, d: u32) -> Result<ZPrime> {
    if n < 3 || d < 1 {
        return Err(Error::Precondition(alloc::format!(
            "[Z'] needs n >= 3 and d >= 1, got n = {n}, d = {d}"
        )));
    }
    let z = build_z_class(d)?;
    let class = pushforward(&z, n)?;
    let degree = i64::from(z_codim(d)) - (i64::from(n) - 2);
    Ok(ZPrime {
        n,
        d,
        class,
        degree,
        degenerate: degree < 0,
    })
}

/// `M = ∏_{i=1}^{d} ∏_{j=0}^{d-i} (i·h + (d-i-j)·l)`, expanded directly.
pub fn m_poly(d: u32) -> Result<BivarPoly> {
    if d < 1 {
        return Err(Error::Precondition("M needs d >= 1".into()));
    }
    let d = i64::from(d);
    let mut out = BivarPoly::one();
    for i in 1..=d {
        for j in 0..=(d - i) {
            out = out.mul(&BivarPoly::linear(i, d - i - j));
        }
    }
    Ok(out)
}

/// `M' = ∏_{i,j >= 1, i+j <= d} (i·h + j·l)`, of degree `d(d-1)/2`.
pub fn m_prime_poly(d: u32) -> Result<BivarPoly> {
    if d < 1 {
        return Err(Error::Precondition("M' needs d >= 1".into()));
    }
    let d = i64::from(d);
    let mut out = BivarPoly::one();
    for i in 1..d {
        for j in 1..=(d - i) {
            out = out.mul(&BivarPoly::linear(i, j));
        }
    }
    Ok(out)
}

/// Coefficients `β_i` of `h^i` in `M'`.
pub fn betas(d: u32) -> Result<Vec<Rational>> {
    Ok(m_prime_poly(d)?.coeffs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaDiff {
    /// `α_{n-2} - α_{n-1}`, with coefficients beyond `deg M` read as zero.
    pub value: Rational,
    /// Both indices lie in `0..=deg M`.
    pub in_range: bool,
}

/// `α_{n-2} - α_{n-1}` from the coefficients of `M`.
pub fn alpha_diff(n: u32, d: u32) -> Result<AlphaDiff> {
    let m = m_poly(d)?;
    let hi = i64::from(n) - 1;
    let lo = hi - 1;
    let in_range = lo >= 0 && hi <= m.deg() as i64;
    Ok(AlphaDiff {
        value: m.coeff(lo) - m.coeff(hi),
        in_range,
    })
}

/// `d!·(β_{n-d-2} - β_{n-d-1})`, the same quantity read off `M'`.
pub fn alpha_diff_via_betas(n: u32, d: u32) -> Result<Rational> {
    let mp = m_prime_poly(d)?;
    let hi = i64::from(n) - i64::from(d) - 1;
    let diff = mp.coeff(hi - 1) - mp.coeff(hi);
    Ok(diff * Rational::from_integer(factorial(d)))
}

/// `d!·h^d·M'`, the factored form of `M`.
pub fn m_poly_factored(d: u32) -> Result<BivarPoly> {
    let fact = Rational::from_integer(factorial(d));
    Ok(m_prime_poly(d)?.shift_h(d as usize).scale(&fact))
}

/// `(d!)²·c2^d·M'(x, y)` as a class in `l, c2`.
pub fn m_prime_identity_lhs(d: u32) -> Result<LC2Poly> {
    let fact = Rational::from_integer(factorial(d));
    let sym = m_prime_poly(d)?.to_symmetric_lc2()?;
    Ok((&sym * &LC2Poly::c2().pow(d)).scale(&(&fact * &fact)))
}

/// `∏_{i=1}^{d} c_{i+1}(S^i E)`.
pub fn m_prime_identity_rhs(d: u32) -> Result<LC2Poly> {
    (1..=d).try_fold(LC2Poly::one(), |acc, i| {
        Ok(&acc * &chern::top_chern_of_sym_power(i)?)
    })
}
