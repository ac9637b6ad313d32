//! Closed-form families: the reflection-symmetric quadrilaterals `S_{m,n}` and
//! the Kähler–Einstein triangles `conv{(a,-b), (0,1), (-a,b-1)}`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{FanoError, Result};
use crate::invariants::SingularityType;
use crate::kernel::{ext_gcd, LatticePoint, Rational, RationalPoint};
use crate::polygon::FanoPolygon;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SmnParams {
    pub m: u32,
    pub n: u32,
}

impl SmnParams {
    pub fn new(m: u32, n: u32) -> Self {
        SmnParams { m, n }
    }
}

/// `S_{m,n} = conv{(m+1,-m), (-m,m+1), (-n-1,n), (n,-n-1)}`.
pub fn make_smn(p: SmnParams) -> FanoPolygon {
    let (m, n) = (i64::from(p.m), i64::from(p.n));
    FanoPolygon::new(&[
        LatticePoint::new(m + 1, -m),
        LatticePoint::new(-m, m + 1),
        LatticePoint::new(-n - 1, n),
        LatticePoint::new(n, -n - 1),
    ])
    .expect("S_{m,n} is a Fano quadrilateral for all m, n ≥ 0")
}

/// Dual vertices and dual barycenter of `S_{m,n}`, written out from the
/// closed form rather than computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmnDual {
    pub vertices: Vec<RationalPoint>,
    pub barycenter: RationalPoint,
}

pub fn smn_dual_closed_form(p: SmnParams) -> SmnDual {
    let (m, n) = (i64::from(p.m), i64::from(p.n));
    let s = m + n + 1;
    let one = RationalPoint::from_ints(1, 1, 1, 1);
    let vertices = vec![
        RationalPoint::from_ints(-1, 1, -1, 1),
        RationalPoint::from_ints(m - n + 1, s, m - n - 1, s),
        one,
        RationalPoint::from_ints(m - n - 1, s, m - n + 1, s),
    ];
    let b = Rational::new(m - n, 3 * s);
    SmnDual {
        vertices,
        barycenter: RationalPoint::new(b, b),
    }
}

/// Parameters `(a, b)` of a Kähler–Einstein triangle; requires
/// `gcd(a, b) = gcd(a, b - 1) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KeTriangleParams {
    a: i64,
    b: i64,
}

impl KeTriangleParams {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let fail = |reason: String| Err(FanoError::InvalidTriangleParams { a, b, reason });
        if a <= 0 || b <= 0 {
            return fail("a and b must be positive".into());
        }
        if a.gcd(&b) != 1 {
            return fail(format!("gcd(a, b) = {}", a.gcd(&b)));
        }
        if a.gcd(&(b - 1)) != 1 {
            return fail(format!("gcd(a, b - 1) = {}", a.gcd(&(b - 1))));
        }
        Ok(KeTriangleParams { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }
}

/// `conv{(a,-b), (0,1), (-a,b-1)}`.
pub fn make_ke_triangle(p: KeTriangleParams) -> FanoPolygon {
    FanoPolygon::new(&[
        LatticePoint::new(p.a, -p.b),
        LatticePoint::new(0, 1),
        LatticePoint::new(-p.a, p.b - 1),
    ])
    .expect("valid parameters give a Fano triangle")
}

/// The unique `y` in `(0, a)` with `a·x + c·y = -1` for some `x`.
fn solve_for_y(a: i64, c: i64) -> i64 {
    let (_, _, t) = ext_gcd(a, c);
    // c·t ≡ 1, so y = -t (mod a)
    (-t).rem_euclid(a)
}

/// The three singularity types `1/a(1,b)`, `1/a(1,a-b+1)`, `1/a(1,y+1)`, with
/// `y ∈ (0, a)` solving `a·x + b·y = -1`. For `a = 1` all three are smooth.
pub fn ke_triangle_types(p: KeTriangleParams) -> [SingularityType; 3] {
    let a = p.a;
    if a == 1 {
        return [SingularityType::SMOOTH; 3];
    }
    let y = solve_for_y(a, p.b);
    let t = |k: i64| SingularityType::new(a, k).expect("coprime by construction");
    [t(p.b), t(a - p.b + 1), t(y + 1)]
}

/// Alternative representations of the same three types:
/// `1/a(1,a-y₁)`, `1/a(1,y₂)`, `1/a(1,a-y₂+1)` with `a·x₁ + b·y₁ = -1` and
/// `a·x₂ + (b-1)·y₂ = -1`.
pub fn ke_triangle_alternative_types(p: KeTriangleParams) -> [SingularityType; 3] {
    let a = p.a;
    if a == 1 {
        return [SingularityType::SMOOTH; 3];
    }
    let y1 = solve_for_y(a, p.b);
    let y2 = solve_for_y(a, p.b - 1);
    let t = |k: i64| SingularityType::new(a, k).expect("coprime by construction");
    [t(a - y1), t(y2), t(a - y2 + 1)]
}

/// Finds `(a, b)` with `p` equivalent to the triangle of [`make_ke_triangle`].
/// Twice the area of that triangle is `3a`, and shearing reduces `b` modulo
/// `a`, so `1 ≤ b ≤ a` is searched.
pub fn recognize_ke_triangle(p: &FanoPolygon) -> Option<KeTriangleParams> {
    if p.len() != 3 || p.area2() % 3 != 0 {
        return None;
    }
    let a = p.area2() / 3;
    let target = p.canonical_form();
    (1..=a)
        .filter_map(|b| KeTriangleParams::new(a, b).ok())
        .find(|&params| make_ke_triangle(params).canonical_form() == target)
}
