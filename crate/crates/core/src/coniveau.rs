//! Numerology of complete intersections `X ⊂ P^n` of multidegree
//! `d_1 <= ... <= d_r`: dimensions of `X`, of its variety of lines `F`, of
//! the subvarieties `F_G`, and the coniveau and plane-count bounds.

use alloc::vec::Vec;

use crate::{Error, Result};

/// `(n; d_1 <= ... <= d_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    n: u32,
    degrees: Vec<u32>,
}

impl MultiDegree {
    /// Degrees are sorted on construction. Requires `r >= 1` and every
    /// `d_i >= 1`.
    pub fn new(n: u32, mut degrees: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMultiDegree("n must be positive"));
        }
        if degrees.is_empty() {
            return Err(Error::InvalidMultiDegree("need at least one degree"));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidMultiDegree("degrees must be positive"));
        }
        degrees.sort_unstable();
        Ok(Self { n, degrees })
    }

    pub fn hypersurface(n: u32, d: u32) -> Result<Self> {
        Self::new(n, alloc::vec![d])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn r(&self) -> u32 {
        self.degrees.len() as u32
    }

    pub fn degree_sum(&self) -> i64 {
        self.degrees.iter().map(|&d| i64::from(d)).sum()
    }

    pub fn max_degree(&self) -> u32 {
        *self.degrees.last().expect("non-empty")
    }

    /// `n - Σ d_i`; positive exactly for Fano complete intersections with
    /// `n >= Σ d_i + 1`.
    pub fn fano_index(&self) -> i64 {
        i64::from(self.n) - self.degree_sum()
    }

    /// Some `d_i = 1`: `X` is then a complete intersection in a smaller
    /// projective space.
    pub fn has_linear_factor(&self) -> bool {
        self.degrees[0] == 1
    }
}

/// Whether `X` has coniveau at least `c`: `n >= Σ d_i + (c-1)·d_r`.
pub fn coniveau_at_least(md: &MultiDegree, c: u32) -> Result<bool> {
    if c < 1 {
        return Err(Error::Precondition("coniveau level must be >= 1".into()));
    }
    let rhs = md.degree_sum() + i64::from(c - 1) * i64::from(md.max_degree());
    Ok(i64::from(md.n()) >= rhs)
}

/// Largest `c >= 0` with coniveau at least `c`; zero when `n < Σ d_i`.
pub fn max_coniveau(md: &MultiDegree) -> u32 {
    let slack = md.fano_index();
    if slack < 0 {
        0
    } else {
        (slack / i64::from(md.max_degree())) as u32 + 1
    }
}

/// `3n - 4 - Σ (d_i+1)(d_i+2)/2 >= n - r - 2`: the expected dimension of
/// lines in planes in `X` is at least `dim F_G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PlaneBound {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    /// `lhs - rhs`.
    pub slack: i64,
}

impl PlaneBound {
    pub fn is_equality(&self) -> bool {
        self.slack == 0
    }
}

pub fn plane_bound(md: &MultiDegree) -> PlaneBound {
    let n = i64::from(md.n());
    let planes: i64 = md
        .degrees()
        .iter()
        .map(|&d| {
            let d = i64::from(d);
            (d + 1) * (d + 2) / 2
        })
        .sum();
    let lhs = 3 * n - 4 - planes;
    let rhs = n - i64::from(md.r()) - 2;
    PlaneBound {
        lhs,
        rhs,
        holds: lhs >= rhs,
        slack: lhs - rhs,
    }
}

/// For a hypersurface of degree `d`, the `n` with equality in the plane
/// bound, i.e. `2n = 1 + (d+1)(d+2)/2`, if it is an integer.
pub fn equality_case_n(d: u32) -> Option<u32> {
    let t = (u64::from(d) + 1) * (u64::from(d) + 2) / 2;
    let twice = t + 1;
    (twice % 2 == 0).then_some((twice / 2) as u32)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumerologyReport {
    pub multidegree: MultiDegree,
    /// `n - r`.
    pub dim_x: i64,
    /// `2n - 2 - Σ d_i - r`.
    pub dim_f: i64,
    /// `n - r - 2`.
    pub dim_fg: i64,
    pub max_coniveau: u32,
    pub coniveau2: bool,
    /// `n - Σ d_i - 1`, the degree of the auxiliary hypersurface `G`.
    pub fano_index2_degree: i64,
    pub plane_bound_holds: bool,
    pub plane_bound_slack: i64,
    pub equality_case: bool,
    /// Some dimension above came out negative.
    pub negative_dimension: bool,
    /// Some `d_i = 1`.
    pub has_linear_factor: bool,
}

pub fn dimensions(md: &MultiDegree) -> NumerologyReport {
    let n = i64::from(md.n());
    let r = i64::from(md.r());
    let dim_x = n - r;
    let dim_f = 2 * n - 2 - md.degree_sum() - r;
    let dim_fg = n - r - 2;
    let pb = plane_bound(md);
    NumerologyReport {
        multidegree: md.clone(),
        dim_x,
        dim_f,
        dim_fg,
        max_coniveau: max_coniveau(md),
        coniveau2: coniveau_at_least(md, 2).expect("c = 2 is valid"),
        fano_index2_degree: md.fano_index() - 1,
        plane_bound_holds: pb.holds,
        plane_bound_slack: pb.slack,
        equality_case: pb.is_equality(),
        negative_dimension: dim_x < 0 || dim_f < 0 || dim_fg < 0,
        has_linear_factor: md.has_linear_factor(),
    }
}
