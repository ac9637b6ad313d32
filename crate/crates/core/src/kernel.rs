//! Exact lattice arithmetic: points, rational points, unimodular maps and the
//! normal form of a two-dimensional cone.
//!
//! Coordinates are `i64`. The workspace builds every profile with
//! `overflow-checks = true`, so an overflowing census aborts instead of wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{FanoError, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = Ratio<i64>;

/// A point of the lattice `Z²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ZERO: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// `gcd(|x|, |y|)`; the zero vector is rejected.
    pub fn primitive_index(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(FanoError::ZeroPoint);
        }
        Ok(self.x.gcd(&self.y))
    }

    pub fn is_primitive(&self) -> bool {
        matches!(self.primitive_index(), Ok(1))
    }

    pub fn dot(&self, other: &LatticePoint) -> i64 {
        self.x * other.x + self.y * other.y
    }

    pub fn to_rational(self) -> RationalPoint {
        RationalPoint::new(Rational::from_integer(self.x), Rational::from_integer(self.y))
    }
}

impl From<[i64; 2]> for LatticePoint {
    fn from([x, y]: [i64; 2]) -> Self {
        LatticePoint { x, y }
    }
}

impl From<LatticePoint> for [i64; 2] {
    fn from(p: LatticePoint) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.x, -self.y)
    }
}

impl Mul<LatticePoint> for i64 {
    type Output = LatticePoint;
    fn mul(self, p: LatticePoint) -> LatticePoint {
        LatticePoint::new(self * p.x, self * p.y)
    }
}

/// Signed order of the cone spanned by `u` and `v`: the determinant `det[u v]`.
///
/// Positive exactly when `v` lies strictly counterclockwise of `u` within a
/// half-turn.
pub fn ord(u: LatticePoint, v: LatticePoint) -> i64 {
    u.x * v.y - u.y * v.x
}

/// Compares two nonzero vectors by polar angle in `[0, 2π)`, measured from the
/// positive x-axis.
pub fn angle_cmp(u: LatticePoint, v: LatticePoint) -> Ordering {
    let half = |p: LatticePoint| if p.y > 0 || (p.y == 0 && p.x > 0) { 0 } else { 1 };
    half(u).cmp(&half(v)).then_with(|| 0.cmp(&ord(u, v)))
}

/// A point with exact rational coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        RationalPoint { x, y }
    }

    pub fn zero() -> Self {
        RationalPoint::new(Rational::zero(), Rational::zero())
    }

    pub fn from_ints(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        RationalPoint::new(Rational::new(xn, xd), Rational::new(yn, yd))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// Least common multiple of the two denominators.
    pub fn denominator_lcm(&self) -> i64 {
        self.x.denom().lcm(self.y.denom())
    }

    pub fn scale(&self, s: Rational) -> RationalPoint {
        RationalPoint::new(self.x * s, self.y * s)
    }

    pub fn dot_lattice(&self, v: &LatticePoint) -> Rational {
        self.x * v.x + self.y * v.y
    }

    pub fn to_lattice(&self) -> Option<LatticePoint> {
        self.is_integral()
            .then(|| LatticePoint::new(self.x.to_integer(), self.y.to_integer()))
    }
}

impl Add for RationalPoint {
    type Output = RationalPoint;
    fn add(self, o: RationalPoint) -> RationalPoint {
        RationalPoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for RationalPoint {
    type Output = RationalPoint;
    fn sub(self, o: RationalPoint) -> RationalPoint {
        RationalPoint::new(self.x - o.x, self.y - o.y)
    }
}

/// Serialized as `["p/q", "p/q"]`.
impl Serialize for RationalPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rational(&self.x), format_rational(&self.y)].serialize(s)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

/// Signed determinant of two rational vectors.
pub fn ord_rational(u: &RationalPoint, v: &RationalPoint) -> Rational {
    u.x * v.y - u.y * v.x
}

/// Formats a rational as `"p/q"` in lowest terms; integers keep the `/1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || FanoError::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: i64 = num.parse().map_err(|_| bad())?;
    let den: i64 = den.parse().map_err(|_| bad())?;
    if den == 0 {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Serde adapter writing a [`Rational`] as a `"p/q"` string.
pub mod rational_string {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

/// Extended Euclid: returns `(g, s, t)` with `s·a + t·b = g = gcd(a, b) ≥ 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// An integral 2×2 matrix `[[a, b], [c, d]]` of determinant ±1, acting on
/// column vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "[[i64; 2]; 2]")]
pub struct UnimodularMap {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl From<UnimodularMap> for [[i64; 2]; 2] {
    fn from(m: UnimodularMap) -> Self {
        m.rows()
    }
}

impl UnimodularMap {
    pub const IDENTITY: UnimodularMap = UnimodularMap { a: 1, b: 0, c: 0, d: 1 };
    pub const NEG_IDENTITY: UnimodularMap = UnimodularMap { a: -1, b: 0, c: 0, d: -1 };
    /// `(x, y) ↦ (y, x)`.
    pub const SWAP: UnimodularMap = UnimodularMap { a: 0, b: 1, c: 1, d: 0 };
    /// `(x, y) ↦ (x, -y)`.
    pub const FLIP_Y: UnimodularMap = UnimodularMap { a: 1, b: 0, c: 0, d: -1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a * d - b * c;
        if det.abs() != 1 {
            return Err(FanoError::NotUnimodular(det));
        }
        Ok(UnimodularMap { a, b, c, d })
    }

    pub fn from_rows(rows: [[i64; 2]; 2]) -> Result<Self> {
        Self::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &UnimodularMap) -> UnimodularMap {
        UnimodularMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn inverse(&self) -> UnimodularMap {
        let det = self.det();
        UnimodularMap {
            a: self.d * det,
            b: -self.b * det,
            c: -self.c * det,
            d: self.a * det,
        }
    }

    /// Inverse transpose, the induced action on the dual lattice.
    pub fn dual(&self) -> UnimodularMap {
        let inv = self.inverse();
        UnimodularMap {
            a: inv.a,
            b: inv.c,
            c: inv.b,
            d: inv.d,
        }
    }

    /// The integral linear map sending `u ↦ u_img` and `v ↦ v_img`, if it
    /// exists and is unimodular. `u` and `v` must be linearly independent.
    pub fn from_images(
        u: LatticePoint,
        v: LatticePoint,
        u_img: LatticePoint,
        v_img: LatticePoint,
    ) -> Option<UnimodularMap> {
        let det = ord(u, v);
        if det == 0 {
            return None;
        }
        // M = [u_img v_img] · adj([u v]) / det
        let na = u_img.x * v.y - v_img.x * u.y;
        let nb = -u_img.x * v.x + v_img.x * u.x;
        let nc = u_img.y * v.y - v_img.y * u.y;
        let nd = -u_img.y * v.x + v_img.y * u.x;
        if [na, nb, nc, nd].iter().any(|e| e % det != 0) {
            return None;
        }
        UnimodularMap::new(na / det, nb / det, nc / det, nd / det).ok()
    }
}

impl fmt::Display for UnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Result of [`normalize_cone_basis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConeNormalForm {
    pub map: UnimodularMap,
    pub n: i64,
    pub k: i64,
}

/// Brings a pair of primitive, independent vectors into the normal form
/// `u ↦ (0, 1)`, `v ↦ (n, -k)` with `n = |ord(u, v)|` and `0 < k ≤ n`.
///
/// The map is unique: the stabilizer of `(0, 1)` is `{[[ε, 0], [c, 1]]}` and
/// exactly one choice of `ε` and `c` lands in the normal range.
pub fn normalize_cone_basis(u: LatticePoint, v: LatticePoint) -> Result<ConeNormalForm> {
    for p in [u, v] {
        if p.primitive_index()? != 1 {
            return Err(FanoError::NotPrimitive { x: p.x, y: p.y });
        }
    }
    if ord(u, v) == 0 {
        return Err(FanoError::Collinear {
            ux: u.x,
            uy: u.y,
            vx: v.x,
            vy: v.y,
        });
    }
    let (_, s, t) = ext_gcd(u.x, u.y);
    // det = u.y·t + u.x·s = 1, and M0·u = (0, 1).
    let m0 = UnimodularMap {
        a: u.y,
        b: -u.x,
        c: s,
        d: t,
    };
    let w = m0.apply(v);
    let eps = w.x.signum();
    let n = w.x.abs();
    // second coordinate c·w.x + w.y, reduced into [-n, -1]
    let target = -(((-w.y - 1).rem_euclid(n)) + 1);
    let c = (target - w.y) / w.x;
    let stab = UnimodularMap { a: eps, b: 0, c, d: 1 };
    let map = stab.compose(&m0);
    debug_assert_eq!(map.apply(u), LatticePoint::new(0, 1));
    debug_assert_eq!(map.apply(v), LatticePoint::new(n, target));
    Ok(ConeNormalForm { map, n, k: -target })
}
