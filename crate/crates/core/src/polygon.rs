//! Fano polygons, their duals, barycenters, the Kähler–Einstein test and
//! canonical forms under `GL(2, Z)`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{FanoError, Result};
use crate::kernel::{
    angle_cmp, normalize_cone_basis, ord, ord_rational, LatticePoint, Rational, RationalPoint,
    UnimodularMap,
};

/// On-disk polygon format: `{"vertices": [[x, y], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonFile {
    pub vertices: Vec<LatticePoint>,
}

/// A convex lattice polygon with primitive vertices and the origin strictly in
/// its interior.
///
/// Vertices are stored counterclockwise, starting at the lexicographically
/// least one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PolygonFile", into = "PolygonFile")]
pub struct FanoPolygon {
    vertices: Vec<LatticePoint>,
}

impl TryFrom<PolygonFile> for FanoPolygon {
    type Error = FanoError;
    fn try_from(f: PolygonFile) -> Result<Self> {
        FanoPolygon::new(&f.vertices)
    }
}

impl From<FanoPolygon> for PolygonFile {
    fn from(p: FanoPolygon) -> Self {
        PolygonFile { vertices: p.vertices }
    }
}

fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i64 {
    ord(a - o, b - o)
}

/// Strict convex hull, counterclockwise from the lexicographically least point.
fn convex_hull(points: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<LatticePoint> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &LatticePoint>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

fn rotate_to_least<T: Ord + Clone>(items: &mut [T]) {
    if let Some(pos) = items
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1))
        .map(|(i, _)| i)
    {
        items.rotate_left(pos);
    }
}

impl FanoPolygon {
    /// Validates raw input: returns the convex hull as a Fano polygon, or the
    /// first violated condition.
    pub fn new(points: &[LatticePoint]) -> Result<Self> {
        let mut sorted = points.to_vec();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(FanoError::DuplicatePoint { x: w[0].x, y: w[0].y });
        }
        let hull = convex_hull(&sorted);
        if hull.len() < 3 {
            return Err(FanoError::TooFewVertices(hull.len()));
        }
        let n = hull.len();
        if (0..n).any(|i| ord(hull[i], hull[(i + 1) % n]) <= 0) {
            return Err(FanoError::OriginNotInterior);
        }
        if let Some(v) = hull.iter().find(|v| !v.is_primitive()) {
            return Err(FanoError::NotPrimitive { x: v.x, y: v.y });
        }
        Ok(FanoPolygon { vertices: hull })
    }

    /// Builds a polygon from a vertex set already known to be in strictly
    /// convex position, in any order. Panics in debug builds if the invariants
    /// do not hold.
    pub(crate) fn from_vertex_set(mut vertices: Vec<LatticePoint>) -> Self {
        vertices.sort_by(|a, b| angle_cmp(*a, *b));
        rotate_to_least(&mut vertices);
        let p = FanoPolygon { vertices };
        debug_assert!(p.check_invariants().is_ok(), "{p}");
        p
    }

    /// Re-checks every stored invariant.
    pub fn check_invariants(&self) -> Result<()> {
        let v = &self.vertices;
        let n = v.len();
        if n < 3 {
            return Err(FanoError::TooFewVertices(n));
        }
        for i in 0..n {
            let (a, b, c) = (v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
            if !b.is_primitive() {
                return Err(FanoError::NotPrimitive { x: b.x, y: b.y });
            }
            if ord(b, c) <= 0 {
                return Err(FanoError::OriginNotInterior);
            }
            if cross(a, b, c) <= 0 {
                return Err(FanoError::Collinear {
                    ux: a.x,
                    uy: a.y,
                    vx: c.x,
                    vy: c.y,
                });
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PolygonFile =
            serde_json::from_str(text).map_err(|e| FanoError::Parse(e.to_string()))?;
        FanoPolygon::new(&file.vertices)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolygonFile {
            vertices: self.vertices.clone(),
        })
        .expect("polygon serialization cannot fail")
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex `i` with cyclic indexing.
    pub fn vertex(&self, i: usize) -> LatticePoint {
        self.vertices[i % self.vertices.len()]
    }

    /// Directed boundary edges `(v_i, v_{i+1})`, counterclockwise.
    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        (0..self.len()).map(move |i| (self.vertex(i), self.vertex(i + 1)))
    }

    /// `a_{i,i+1} = ord(v_i, v_{i+1})` for every edge; all positive.
    pub fn edge_orders(&self) -> Vec<i64> {
        self.edges().map(|(u, v)| ord(u, v)).collect()
    }

    /// Twice the Euclidean area.
    pub fn area2(&self) -> i64 {
        self.edge_orders().iter().sum()
    }

    /// Image under `m`, re-sorted counterclockwise.
    pub fn transform(&self, m: &UnimodularMap) -> FanoPolygon {
        FanoPolygon::from_vertex_set(self.vertices.iter().map(|v| m.apply(*v)).collect())
    }

    pub fn to_rational(&self) -> RationalPolygon {
        RationalPolygon {
            vertices: self.vertices.iter().map(|v| v.to_rational()).collect(),
        }
    }

    pub fn barycenter(&self) -> RationalPoint {
        self.to_rational().barycenter()
    }

    /// The dual polygon `{w : ⟨w, v⟩ ≥ -1 for all v}`. Vertex `i` of the result
    /// is the dual of edge `(v_i, v_{i+1})`.
    pub fn dual(&self) -> RationalPolygon {
        let vertices = self
            .edges()
            .map(|(u, v)| {
                let a = ord(u, v);
                RationalPoint::new(Rational::new(u.y - v.y, a), Rational::new(v.x - u.x, a))
            })
            .collect();
        RationalPolygon { vertices }
    }

    /// The Kähler–Einstein test computed directly from the vertices, without
    /// forming the dual: the vector
    /// `Σ (a_{i,i+1} + a_{i+1,i+2} + a_{i+2,i}) / (a_{i,i+1} a_{i+1,i+2})
    ///    · ((v_i - v_{i+1}) / a_{i,i+1} + (v_{i+1} - v_{i+2}) / a_{i+1,i+2})`.
    pub fn ke_vertex_sum(&self) -> RationalPoint {
        let mut sum = RationalPoint::zero();
        for i in 0..self.len() {
            let (v0, v1, v2) = (self.vertex(i), self.vertex(i + 1), self.vertex(i + 2));
            let a01 = ord(v0, v1);
            let a12 = ord(v1, v2);
            let a20 = ord(v2, v0);
            let weight = Rational::new(a01 + a12 + a20, a01 * a12);
            let d0 = (v0 - v1).to_rational().scale(Rational::new(1, a01));
            let d1 = (v1 - v2).to_rational().scale(Rational::new(1, a12));
            sum = sum + (d0 + d1).scale(weight);
        }
        sum
    }

    /// Whether the dual barycenter vanishes.
    ///
    /// Both the dual-barycenter and the vertex-sum criteria are evaluated;
    /// disagreement is a bug and panics.
    pub fn is_kahler_einstein(&self) -> bool {
        let by_barycenter = self.dual().barycenter().is_zero();
        let by_vertex_sum = self.ke_vertex_sum().is_zero();
        assert_eq!(
            by_barycenter, by_vertex_sum,
            "Kähler–Einstein criteria disagree on {self}"
        );
        by_barycenter
    }

    /// The lexicographically least vertex sequence over all images of `self`
    /// normalized along one of its directed edges. Equal exactly for
    /// unimodularly equivalent polygons.
    pub fn canonical_form(&self) -> Vec<LatticePoint> {
        let mut best: Option<Vec<LatticePoint>> = None;
        let mut image = Vec::with_capacity(self.len());
        for (u, v) in self.edges() {
            for (first, second) in [(u, v), (v, u)] {
                let map = normalize_cone_basis(first, second)
                    .expect("edges of a Fano polygon are primitive and independent")
                    .map;
                image.clear();
                image.extend(self.vertices.iter().map(|p| map.apply(*p)));
                image.sort_by(|a, b| angle_cmp(*a, *b));
                rotate_to_least(&mut image);
                if best.as_ref().is_none_or(|b| image < *b) {
                    best = Some(image.clone());
                }
            }
        }
        best.expect("polygon has at least three edges")
    }

    pub fn canonical(&self) -> FanoPolygon {
        FanoPolygon {
            vertices: self.canonical_form(),
        }
    }

    /// Every unimodular map sending `self` onto `other`.
    pub fn equivalences(&self, other: &FanoPolygon) -> Vec<UnimodularMap> {
        if self.len() != other.len() {
            return Vec::new();
        }
        let mut target: Vec<LatticePoint> = other.vertices.clone();
        target.sort();
        let (p0, p1) = (self.vertex(0), self.vertex(1));
        let mut maps = Vec::new();
        let mut image = Vec::with_capacity(self.len());
        for (w0, w1) in other.edges() {
            for (a, b) in [(w0, w1), (w1, w0)] {
                let Some(m) = UnimodularMap::from_images(p0, p1, a, b) else {
                    continue;
                };
                image.clear();
                image.extend(self.vertices.iter().map(|p| m.apply(*p)));
                image.sort();
                if image == target {
                    maps.push(m);
                }
            }
        }
        maps
    }

    /// A witness `M` with `M(self) = other`, if the polygons are equivalent.
    pub fn are_equivalent(&self, other: &FanoPolygon) -> Option<UnimodularMap> {
        self.equivalences(other).into_iter().next()
    }
}

impl fmt::Display for FanoPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A counterclockwise cycle of rational points. Duals of Fano polygons live
/// here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalPolygon {
    vertices: Vec<RationalPoint>,
}

impl RationalPolygon {
    /// Accepts a strictly convex counterclockwise cycle.
    pub fn new(vertices: Vec<RationalPoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(FanoError::TooFewVertices(n));
        }
        for i in 0..n {
            let (a, b, c) = (vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
            if ord_rational(&(b - a), &(c - b)) <= Rational::zero() {
                return Err(FanoError::Parse(format!(
                    "rational polygon is not strictly convex and counterclockwise at {b}"
                )));
            }
        }
        Ok(RationalPolygon { vertices })
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The same cycle, starting at the lexicographically least vertex.
    pub fn rotated_to_least(&self) -> Vec<RationalPoint> {
        let mut v = self.vertices.clone();
        rotate_to_least(&mut v);
        v
    }

    fn orders(&self) -> impl Iterator<Item = (RationalPoint, RationalPoint, Rational)> + '_ {
        let n = self.len();
        (0..n).map(move |i| {
            let (u, v) = (self.vertices[i], self.vertices[(i + 1) % n]);
            (u, v, ord_rational(&u, &v))
        })
    }

    /// Twice the Euclidean area.
    pub fn area2(&self) -> Rational {
        self.orders().map(|(_, _, a)| a).sum()
    }

    /// `Σ (v_i + v_{i+1}) · ord(v_i, v_{i+1}) / (3 · Σ ord(v_i, v_{i+1}))`.
    pub fn barycenter(&self) -> RationalPoint {
        let mut weighted = RationalPoint::zero();
        let mut total = Rational::zero();
        for (u, v, a) in self.orders() {
            weighted = weighted + (u + v).scale(a);
            total += a;
        }
        weighted.scale(Rational::new(1, 3) / total)
    }

    /// Least `t > 0` such that `t` times every vertex is integral.
    pub fn denominator_lcm(&self) -> i64 {
        use num_integer::Integer;
        self.vertices
            .iter()
            .fold(1, |acc, v| acc.lcm(&v.denominator_lcm()))
    }

    pub fn is_lattice_polygon(&self) -> bool {
        self.vertices.iter().all(|v| v.is_integral())
    }
}

impl fmt::Display for RationalPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
