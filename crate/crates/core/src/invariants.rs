//! Cyclic quotient singularities of the cones of a Fano polygon and the
//! invariants of the corresponding toric surface.
//!
//! Conventions:
//! - the cone `(v_i, v_{i+1})` is brought to `(n, -k), (0, 1)`, and has type
//!   `1/n(1, k)`;
//! - `|G_p|` is the cone order `n`, so a smooth point contributes nothing to
//!   the orbifold Euler number;
//! - `e_top` is the number of two-dimensional cones, i.e. the vertex count.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{FanoError, Result};
use crate::kernel::{normalize_cone_basis, ord, rational_string, LatticePoint, Rational};
use crate::polygon::FanoPolygon;

/// The cyclic quotient singularity `1/n(1, k)` with `0 < k ≤ n`, `gcd(n, k) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawType")]
pub struct SingularityType {
    n: i64,
    k: i64,
}

#[derive(Deserialize)]
struct RawType {
    n: i64,
    k: i64,
}

impl TryFrom<RawType> for SingularityType {
    type Error = FanoError;
    fn try_from(r: RawType) -> Result<Self> {
        if r.k <= 0 || r.k > r.n {
            return Err(FanoError::InvalidSingularity { n: r.n, k: r.k });
        }
        SingularityType::new(r.n, r.k)
    }
}

impl SingularityType {
    pub const SMOOTH: SingularityType = SingularityType { n: 1, k: 1 };

    /// `k` is reduced modulo `n` into `(0, n]`.
    pub fn new(n: i64, k: i64) -> Result<Self> {
        if n <= 0 {
            return Err(FanoError::InvalidSingularity { n, k });
        }
        let k = (k - 1).rem_euclid(n) + 1;
        if k.gcd(&n) != 1 {
            return Err(FanoError::InvalidSingularity { n, k });
        }
        Ok(SingularityType { n, k })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn is_smooth(&self) -> bool {
        self.n == 1
    }

    /// `Some(m)` for an `A_m` point, i.e. `k = n - 1` with `n ≥ 2`.
    pub fn a_type(&self) -> Option<i64> {
        (self.n >= 2 && self.k == self.n - 1).then_some(self.n - 1)
    }

    /// The representative of `{k, k⁻¹ mod n}` with the smaller `k`.
    pub fn reduced(&self) -> SingularityType {
        if self.n == 1 {
            return *self;
        }
        let inv = mod_inverse(self.k, self.n);
        SingularityType {
            n: self.n,
            k: self.k.min(inv),
        }
    }

    /// Local Gorenstein index `n / gcd(n, k + 1)`.
    pub fn local_index(&self) -> i64 {
        self.n / self.n.gcd(&(self.k + 1))
    }

    /// `A_m` for A-type points, `1/n(1,k)` otherwise.
    pub fn label(&self) -> String {
        match self.a_type() {
            Some(m) => format!("A_{m}"),
            None => self.to_string(),
        }
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.n, self.k)
    }
}

fn mod_inverse(k: i64, n: i64) -> i64 {
    let e = k.extended_gcd(&n);
    debug_assert_eq!(e.gcd.abs(), 1);
    (e.x * e.gcd).rem_euclid(n)
}

/// Type of the counterclockwise cone `(u, v)`.
pub fn cone_singularity(u: LatticePoint, v: LatticePoint) -> Result<SingularityType> {
    if ord(u, v) <= 0 {
        return Err(FanoError::Collinear {
            ux: u.x,
            uy: u.y,
            vx: v.x,
            vy: v.y,
        });
    }
    let nf = normalize_cone_basis(v, u)?;
    SingularityType::new(nf.n, nf.k)
}

/// `1/n(1,k) ≅ 1/n(1,k')` iff `k' = k` or `k·k' ≡ 1 (mod n)`.
pub fn types_isomorphic(s: &SingularityType, t: &SingularityType) -> bool {
    s.n == t.n && (s.k == t.k || (s.k * t.k).rem_euclid(s.n) == 1 % s.n)
}

/// Self-intersections of the exceptional chain of the minimal resolution:
/// the negated Hirzebruch–Jung continued fraction of `n/k`.
pub fn hj_resolution(s: &SingularityType) -> Result<Vec<i64>> {
    if s.is_smooth() {
        return Err(FanoError::SmoothSingularity);
    }
    let (mut p, mut q) = (s.n, s.k);
    let mut chain = Vec::new();
    while q != 0 {
        let b = (p + q - 1) / q;
        chain.push(-b);
        (p, q) = (q, b * q - p);
    }
    Ok(chain)
}

/// Rebuilds the resolution fan from `(0, 1)`, `(1, 0)` using
/// `u_{j-1} + u_{j+1} = -e_j u_j` and returns the final ray, which must be
/// the normalized second generator `(n, -k)`.
pub fn reconstruct_chain_end(chain: &[i64]) -> LatticePoint {
    let (mut prev, mut cur) = (LatticePoint::new(0, 1), LatticePoint::new(1, 0));
    for &e in chain {
        let next = (-e) * cur - prev;
        (prev, cur) = (cur, next);
    }
    cur
}

/// Everything computed by [`surface_invariants`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    /// One entry per cone `(v_i, v_{i+1})`, smooth ones included.
    pub singularities: Vec<SingularityType>,
    pub index: i64,
    pub picard: i64,
    #[serde(with = "rational_string")]
    pub e_orb: Rational,
    #[serde(with = "rational_string")]
    pub k2: Rational,
    #[serde(with = "rational_string")]
    pub my_defect: Rational,
}

pub fn singularities(p: &FanoPolygon) -> Vec<SingularityType> {
    p.edges()
        .map(|(u, v)| cone_singularity(u, v).expect("edges of a Fano polygon span proper cones"))
        .collect()
}

/// Least common multiple of the local Gorenstein indices.
pub fn index_from_cones(types: &[SingularityType]) -> i64 {
    types.iter().fold(1, |acc, s| acc.lcm(&s.local_index()))
}

pub fn orbifold_euler_number(types: &[SingularityType]) -> Rational {
    let e_top = Rational::from_integer(types.len() as i64);
    types
        .iter()
        .fold(e_top, |acc, s| acc - (Rational::from_integer(1) - Rational::new(1, s.n)))
}

/// `K²` as twice the area of the dual polygon.
pub fn k2_from_dual_area(p: &FanoPolygon) -> Rational {
    p.dual().area2()
}

/// `K²` from the minimal resolution: `K̃² = 12 - #rays`, corrected by
/// `Σ c_i K̃·E_i`, where `π*K = K̃ + Σ c_i E_i` is orthogonal to every
/// exceptional curve.
pub fn k2_from_resolution(types: &[SingularityType]) -> Rational {
    let mut rays = types.len() as i64;
    let mut correction = Rational::zero();
    for s in types.iter().filter(|s| !s.is_smooth()) {
        let chain = hj_resolution(s).expect("non-smooth type");
        rays += chain.len() as i64;
        // K̃·E_j = -2 - E_j²
        let k_dot: Vec<Rational> = chain.iter().map(|&e| Rational::from_integer(-2 - e)).collect();
        let rhs: Vec<Rational> = k_dot.iter().map(|x| -*x).collect();
        let c = solve_tridiagonal(&chain, &rhs);
        correction += c.iter().zip(&k_dot).map(|(ci, ki)| *ci * *ki).sum::<Rational>();
    }
    Rational::from_integer(12 - rays) + correction
}

/// Solves `Σ_i c_i (E_i·E_j) = rhs_j` for a chain with self-intersections
/// `diag` and unit off-diagonal entries (Thomas algorithm, exact).
fn solve_tridiagonal(diag: &[i64], rhs: &[Rational]) -> Vec<Rational> {
    let r = diag.len();
    let one = Rational::from_integer(1);
    let mut c_prime = vec![Rational::zero(); r];
    let mut d_prime = vec![Rational::zero(); r];
    for j in 0..r {
        let (denom, prev_d) = if j == 0 {
            (Rational::from_integer(diag[0]), Rational::zero())
        } else {
            (Rational::from_integer(diag[j]) - c_prime[j - 1], d_prime[j - 1])
        };
        c_prime[j] = one / denom;
        d_prime[j] = (rhs[j] - prev_d) / denom;
    }
    let mut x = vec![Rational::zero(); r];
    for j in (0..r).rev() {
        x[j] = if j + 1 < r {
            d_prime[j] - c_prime[j] * x[j + 1]
        } else {
            d_prime[j]
        };
    }
    x
}

/// All invariants of the surface of `p`.
///
/// `K²` comes from the dual area and is checked against the resolution
/// computation; the index from local indices is checked against the dual's
/// denominators. Disagreement panics.
pub fn surface_invariants(p: &FanoPolygon) -> SurfaceInvariants {
    let singularities = singularities(p);
    let index = index_from_cones(&singularities);
    assert_eq!(index, p.dual().denominator_lcm(), "index mismatch on {p}");
    let k2 = k2_from_dual_area(p);
    assert_eq!(k2, k2_from_resolution(&singularities), "K² oracles disagree on {p}");
    let e_orb = orbifold_euler_number(&singularities);
    SurfaceInvariants {
        index,
        picard: p.len() as i64 - 2,
        my_defect: k2 - e_orb * 3,
        k2,
        e_orb,
        singularities,
    }
}

/// The Miyaoka–Yau comparison `K² ≤ 3 e_orb`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MyReport {
    #[serde(with = "rational_string")]
    pub k2: Rational,
    #[serde(with = "rational_string")]
    pub e_orb: Rational,
    #[serde(with = "rational_string")]
    pub my_defect: Rational,
    pub my_holds: bool,
}

pub fn my_report(p: &FanoPolygon) -> MyReport {
    let inv = surface_invariants(p);
    MyReport {
        k2: inv.k2,
        e_orb: inv.e_orb,
        my_defect: inv.my_defect,
        my_holds: inv.my_defect <= Rational::zero(),
    }
}

/// Human-readable singularity content, e.g. `"2A_1 + A_2"` or
/// `"2x1/3(1,1) + 2A_2"`, ordered by `n`; isomorphic types are grouped and
/// smooth points omitted.
pub fn singularity_summary(types: &[SingularityType]) -> String {
    let mut counts: BTreeMap<SingularityType, usize> = BTreeMap::new();
    for s in types.iter().filter(|s| !s.is_smooth()) {
        *counts.entry(s.reduced()).or_default() += 1;
    }
    if counts.is_empty() {
        return "smooth".to_string();
    }
    counts
        .iter()
        .map(|(s, &c)| match (c, s.a_type()) {
            (1, _) => s.label(),
            (_, Some(_)) => format!("{c}{}", s.label()),
            (_, None) => format!("{c}x{}", s.label()),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
