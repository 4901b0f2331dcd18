//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls into the multiplication rule, the symmetrization, or
//! the pushforward of the library: classes are expanded as honest
//! polynomials in the formal roots `x, y` (and `h`), and Schur polynomials are
//! obtained from the bialternant quotient by explicit division by `x - y`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use grassline::{GrassmannContext, LC2Poly, Partition2, Rational, SchurClass};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Polynomial in `x, y` keyed by exponents.
pub type XY = BTreeMap<(u32, u32), BigInt>;
/// Polynomial in `x, y, h` keyed by exponents.
pub type Xyh = BTreeMap<(u32, u32, u32), BigInt>;

fn add_into<K: Ord + Copy>(p: &mut BTreeMap<K, BigInt>, k: K, c: BigInt) {
    let e = p.entry(k).or_insert_with(BigInt::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&k);
    }
}

pub fn xy_mul(p: &XY, q: &XY) -> XY {
    let mut out = XY::new();
    for (&(a, b), c) in p {
        for (&(e, f), d) in q {
            add_into(&mut out, (a + e, b + f), c * d);
        }
    }
    out
}

pub fn xy_one() -> XY {
    [((0, 0), BigInt::one())].into_iter().collect()
}

pub fn xy_pow(p: &XY, e: u32) -> XY {
    (0..e).fold(xy_one(), |acc, _| xy_mul(&acc, p))
}

/// Exact division by `x - y`, by long division in `x` with `y` as a
/// parameter. Panics if there is a remainder.
pub fn div_x_minus_y(p: &XY) -> XY {
    let mut rest = p.clone();
    let mut quot = XY::new();
    while let Some((&(a, b), c)) = rest.iter().next_back() {
        assert!(a > 0, "not divisible by x - y");
        let c = c.clone();
        // c·x^a y^b = (x - y)·c·x^(a-1) y^b + c·x^(a-1) y^(b+1)
        add_into(&mut quot, (a - 1, b), c.clone());
        add_into(&mut rest, (a, b), -c.clone());
        add_into(&mut rest, (a - 1, b + 1), c);
    }
    quot
}

/// `s_(a,b)(x, y) = (x^(a+1) y^b - x^b y^(a+1)) / (x - y)`.
pub fn bialternant(a: u32, b: u32) -> XY {
    let mut num = XY::new();
    add_into(&mut num, (a + 1, b), BigInt::one());
    add_into(&mut num, (b, a + 1), -BigInt::one());
    div_x_minus_y(&num)
}

/// Rational-coefficient symmetric polynomial as a combination of Schur
/// polynomials, peeling off lex-leading monomials.
pub fn schur_decompose(p: &BTreeMap<(u32, u32), Rational>) -> BTreeMap<(u32, u32), Rational> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((&(a, b), c)) = rest.iter().next_back() {
        assert!(a >= b, "not symmetric");
        let c = c.clone();
        for ((e, f), d) in bialternant(a, b) {
            let entry = rest.entry((e, f)).or_insert_with(Rational::zero);
            *entry -= &c * Rational::from_integer(d);
            if entry.is_zero() {
                rest.remove(&(e, f));
            }
        }
        out.insert((a, b), c);
    }
    out
}

/// The symmetric polynomial in `x, y` represented by a Schur class.
pub fn schur_to_xy(u: &SchurClass) -> BTreeMap<(u32, u32), Rational> {
    let mut out = BTreeMap::new();
    for (p, c) in u.terms() {
        for ((e, f), d) in bialternant(p.a(), p.b()) {
            let entry = out.entry((e, f)).or_insert_with(Rational::zero);
            *entry += c * Rational::from_integer(d);
            if entry.is_zero() {
                out.remove(&(e, f));
            }
        }
    }
    out
}

pub fn rat_xy_mul(
    p: &BTreeMap<(u32, u32), Rational>,
    q: &BTreeMap<(u32, u32), Rational>,
) -> BTreeMap<(u32, u32), Rational> {
    let mut out: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
    for (&(a, b), c) in p {
        for (&(e, f), d) in q {
            let entry = out.entry((a + e, b + f)).or_insert_with(Rational::zero);
            *entry += c * d;
            if entry.is_zero() {
                out.remove(&(a + e, b + f));
            }
        }
    }
    out
}

/// Product of two Schur classes through honest polynomial multiplication,
/// then truncated to the box. Only valid without truncation effects in the
/// ideal, i.e. meaningful as an oracle when the result fits the box.
pub fn oracle_product(u: &SchurClass, v: &SchurClass) -> BTreeMap<(u32, u32), Rational> {
    schur_decompose(&rat_xy_mul(&schur_to_xy(u), &schur_to_xy(v)))
}

pub fn class_as_map(u: &SchurClass) -> BTreeMap<(u32, u32), Rational> {
    u.terms()
        .map(|(p, c)| ((p.a(), p.b()), c.clone()))
        .collect()
}

/// The `x, y` expansion of an `l, c2` polynomial: `l ↦ x + y`, `c2 ↦ xy`.
pub fn lc2_to_xy(p: &LC2Poly) -> BTreeMap<(u32, u32), Rational> {
    let l: XY = [((1, 0), BigInt::one()), ((0, 1), BigInt::one())]
        .into_iter()
        .collect();
    let mut out: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
    for ((i, j), c) in p.terms() {
        let mono = xy_pow(&l, i);
        for ((a, b), d) in mono {
            let key = (a + j, b + j);
            let entry = out.entry(key).or_insert_with(Rational::zero);
            *entry += c * Rational::from_integer(d);
            if entry.is_zero() {
                out.remove(&key);
            }
        }
    }
    out
}

pub fn xy_to_rat(p: &XY) -> BTreeMap<(u32, u32), Rational> {
    p.iter()
        .map(|(k, c)| (*k, Rational::from_integer(c.clone())))
        .collect()
}

/// `∏ (px·x + py·y)`.
pub fn product_of_forms(forms: &[(i64, i64)]) -> XY {
    forms.iter().fold(xy_one(), |acc, &(px, py)| {
        let mut f = XY::new();
        add_into(&mut f, (1, 0), BigInt::from(px));
        add_into(&mut f, (0, 1), BigInt::from(py));
        xy_mul(&acc, &f)
    })
}

/// `∏ (px·x + py·y + ph·h)`.
pub fn product_of_xyh_forms(forms: &[(i64, i64, i64)]) -> Xyh {
    let mut acc: Xyh = [((0, 0, 0), BigInt::one())].into_iter().collect();
    for &(px, py, ph) in forms {
        let mut next = Xyh::new();
        for (&(a, b, k), c) in &acc {
            add_into(&mut next, (a + 1, b, k), c * px);
            add_into(&mut next, (a, b + 1, k), c * py);
            add_into(&mut next, (a, b, k + 1), c * ph);
        }
        acc = next;
    }
    acc
}

/// Roots of `S^m E`.
pub fn sym_power_forms(m: u32) -> Vec<(i64, i64)> {
    let m = i64::from(m);
    (0..=m).map(|k| (k, m - k)).collect()
}

/// Iterated Pieri by hand: `l^k` in the box, via adding one box at a time.
pub fn l_power_by_pieri(n: u32, k: u32) -> BTreeMap<(u32, u32), BigInt> {
    let mut cur: BTreeMap<(u32, u32), BigInt> = [((0, 0), BigInt::one())].into_iter().collect();
    for _ in 0..k {
        let mut next = BTreeMap::new();
        for (&(a, b), c) in &cur {
            if a < n - 1 {
                add_into(&mut next, (a + 1, b), c.clone());
            }
            if b < a {
                add_into(&mut next, (a, b + 1), c.clone());
            }
        }
        cur = next;
    }
    cur
}

pub fn ctx(n: u32) -> GrassmannContext {
    GrassmannContext::new(n).unwrap()
}

pub fn part(a: u32, b: u32) -> Partition2 {
    Partition2::new(a, b).unwrap()
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}
