//! Effective cones of `G(1,n)`.
//!
//! In each codimension the effective cone of `G(1,n)` is simplicial, spanned
//! by the Schubert classes, and the Schubert basis is dual to the
//! complementary one under the intersection pairing. A homogeneous class is
//! therefore effective iff all its Schubert coefficients are `>= 0` and big
//! (interior) iff all are `> 0`; the coefficients coincide with its
//! intersection numbers against complementary Schubert cycles, which we
//! compute independently as a cross-check.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::chern::{self, LC2Poly};
use crate::coniveau::MultiDegree;
use crate::rational::Rational;
use crate::schur::{Partition2, SchurClass};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Every Schubert coefficient is positive: interior of the cone.
    Big,
    /// Effective (hence nef on `G(1,n)`) with some zero coefficient.
    EffectiveBoundary,
    /// Some Schubert coefficient is negative.
    NotEffective,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Big => "big",
            Verdict::EffectiveBoundary => "effective-boundary",
            Verdict::NotEffective => "not-effective",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One intersection number `∫ u · s_complement`, where `complement` is the
/// Poincaré dual of `basis`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pairing {
    pub basis: Partition2,
    pub complement: Partition2,
    pub value: Rational,
}

/// A basis partition whose coefficient keeps the class off the interior.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConeWitness {
    pub partition: Partition2,
    pub coefficient: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConeCertificate {
    pub class: SchurClass,
    pub codim: u32,
    /// Schubert coefficients over the whole basis, zeros included.
    pub expansion: Vec<(Partition2, Rational)>,
    pub pairings: Vec<Pairing>,
    pub verdict: Verdict,
    /// Partitions with zero or negative coefficient, in basis order.
    pub witnesses: Vec<ConeWitness>,
    /// Largest `ε >= 0` with `u - ε·l^codim` effective.
    pub epsilon: Rational,
}

fn check_homogeneous(u: &SchurClass, codim: u32) -> Result<()> {
    if u.is_homogeneous_of(codim) {
        Ok(())
    } else {
        Err(Error::Inhomogeneous { expected: codim })
    }
}

/// Intersection numbers of `u` with every Schubert cycle of complementary
/// codimension, keyed by that complementary partition.
pub fn pairing_vector(u: &SchurClass, codim: u32) -> Result<BTreeMap<Partition2, Rational>> {
    check_homogeneous(u, codim)?;
    let ctx = u.context();
    let comp_codim = ctx.dim().checked_sub(codim).ok_or(Error::CodimOutOfRange {
        codim,
        max: ctx.dim(),
    })?;
    ctx.schubert_basis(comp_codim)?
        .into_iter()
        .map(|q| {
            let prod = u.checked_mul(&SchurClass::schubert(ctx, q))?;
            Ok((q, prod.integrate()))
        })
        .collect()
}

/// Largest `ε >= 0` such that `u - ε·l^codim` is Schubert-nonnegative:
/// `min_p coef_u(p) / coef_{l^codim}(p)`, clamped at zero.
pub fn epsilon_margin(u: &SchurClass, codim: u32) -> Result<Rational> {
    check_homogeneous(u, codim)?;
    let ctx = u.context();
    let reference = SchurClass::l(ctx).pow(codim);
    let mut margin: Option<Rational> = None;
    for p in ctx.schubert_basis(codim)? {
        let cu = u.coefficient(p);
        let cref = reference.coefficient(p);
        if cref.is_zero() {
            // l^codim has no room here; any non-positive coefficient pins ε to 0
            if !cu.is_positive() {
                return Ok(Rational::zero());
            }
            continue;
        }
        let ratio = cu / cref;
        margin = Some(match margin {
            Some(m) if m <= ratio => m,
            _ => ratio,
        });
    }
    Ok(match margin {
        Some(m) if m.is_positive() => m,
        _ => Rational::zero(),
    })
}

/// Full cone certificate for a class homogeneous of codimension `codim`.
pub fn analyze(u: &SchurClass, codim: u32) -> Result<ConeCertificate> {
    check_homogeneous(u, codim)?;
    let ctx = u.context();
    let basis = ctx.schubert_basis(codim)?;
    let by_complement = pairing_vector(u, codim)?;

    let mut expansion = Vec::with_capacity(basis.len());
    let mut pairings = Vec::with_capacity(basis.len());
    let mut witnesses = Vec::new();
    let mut any_negative = false;
    for p in basis {
        let coef = u.coefficient(p);
        let complement = ctx.dual(p)?;
        let value = by_complement[&complement].clone();
        if value != coef {
            return Err(Error::Precondition(alloc::format!(
                "duality cross-check failed at {p}: coefficient {coef}, pairing {value}"
            )));
        }
        if !coef.is_positive() {
            any_negative |= coef.is_negative();
            witnesses.push(ConeWitness {
                partition: p,
                coefficient: coef.clone(),
            });
        }
        pairings.push(Pairing {
            basis: p,
            complement,
            value,
        });
        expansion.push((p, coef));
    }
    let verdict = if any_negative {
        Verdict::NotEffective
    } else if witnesses.is_empty() {
        Verdict::Big
    } else {
        Verdict::EffectiveBoundary
    };
    let epsilon = epsilon_margin(u, codim)?;
    Ok(ConeCertificate {
        class: u.clone(),
        codim,
        expansion,
        pairings,
        verdict,
        witnesses,
        epsilon,
    })
}

/// Every monomial contains `c2`.
pub fn is_divisible_by_c2(p: &LC2Poly) -> bool {
    p.is_divisible_by_c2()
}

/// `∫_F g = ∫_{G(1,n)} g·[F]` with `[F]` the class of the variety of lines.
pub fn integrate_on_f(g: &LC2Poly, md: &MultiDegree) -> Result<Rational> {
    let ctx = crate::schur::GrassmannContext::new(md.n())?;
    let f = chern::class_f(md);
    let integrand = g * &f;
    let expected = i64::from(ctx.dim());
    match integrand.homogeneous_degree() {
        Some(deg) if i64::from(deg) == expected => {}
        Some(deg) => {
            return Err(Error::DegreeMismatch {
                expected,
                found: i64::from(deg),
            })
        }
        None if integrand.is_zero() => return Ok(Rational::zero()),
        None => {
            return Err(Error::DegreeMismatch {
                expected,
                found: -1,
            })
        }
    }
    Ok(SchurClass::from_lc2(&integrand, ctx).integrate())
}
