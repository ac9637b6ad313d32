//! Exhaustive checks of the classification statements over a census.

use serde::Serialize;

use crate::families::recognize_ke_triangle;
use crate::invariants::{k2_from_dual_area, k2_from_resolution, singularities, surface_invariants};
use crate::kernel::{rational_string, LatticePoint, Rational};
use crate::polygon::FanoPolygon;

use super::report::PolygonReport;

pub const VERIFY_SCHEMA: &str = "fano-verify/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    /// A proved statement; a counterexample is a failure.
    Theorem,
    /// An open statement; violations are findings.
    Conjecture,
    /// A count reported for information.
    Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub name: &'static str,
    pub kind: ClaimKind,
    pub statement: &'static str,
    /// Number of classes the statement applies to.
    pub in_scope: usize,
    pub holds: bool,
    /// Canonical forms of the classes violating the statement.
    pub counterexamples: Vec<Vec<LatticePoint>>,
}

/// Invariants of the triangle `conv{(0,1),(-11,2),(11,-3)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpotCheck {
    pub vertices: Vec<LatticePoint>,
    pub ke: bool,
    pub aut_order: usize,
    pub symmetric: bool,
    pub picard: i64,
    pub index: i64,
    pub index_odd: bool,
    pub passed: bool,
}

/// One member `conv{(0,1),(-m,-1),(0,-1),(m,1)}` of the Miyaoka–Yau family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MyFamilyCheck {
    pub m: i64,
    #[serde(with = "rational_string")]
    pub k2_dual_area: Rational,
    #[serde(with = "rational_string")]
    pub k2_resolution: Rational,
    pub oracles_agree: bool,
    #[serde(with = "rational_string")]
    pub e_orb: Rational,
    /// `K² - 3 e_orb` as computed here.
    #[serde(with = "rational_string")]
    pub my_defect: Rational,
    /// The published value `(2m - 4)/m`, recorded for comparison only.
    #[serde(with = "rational_string")]
    pub reference_defect: Rational,
    pub matches_reference: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    /// Largest census bound among the inputs; coverage is by box only.
    pub bound: Option<i64>,
    pub classes: usize,
    pub claims: Vec<ClaimCheck>,
    pub example_triangle: SpotCheck,
    pub my_family: Vec<MyFamilyCheck>,
}

impl VerificationReport {
    pub fn claim(&self, name: &str) -> Option<&ClaimCheck> {
        self.claims.iter().find(|c| c.name == name)
    }

    /// Whether a proved statement has a counterexample or a spot check failed.
    pub fn has_theorem_failure(&self) -> bool {
        self.claims.iter().any(|c| c.kind == ClaimKind::Theorem && !c.holds)
            || !self.example_triangle.passed
            || self.my_family.iter().any(|c| !c.oracles_agree)
    }
}

fn check(
    reports: &[PolygonReport],
    name: &'static str,
    kind: ClaimKind,
    statement: &'static str,
    scope: impl Fn(&PolygonReport) -> bool,
    holds: impl Fn(&PolygonReport) -> bool,
) -> ClaimCheck {
    let in_scope: Vec<_> = reports.iter().filter(|r| scope(r)).collect();
    let counterexamples: Vec<_> = in_scope
        .iter()
        .filter(|r| !holds(r))
        .map(|r| r.vertices.clone())
        .collect();
    ClaimCheck {
        name,
        kind,
        statement,
        in_scope: in_scope.len(),
        holds: counterexamples.is_empty(),
        counterexamples,
    }
}

fn is_ke_triangle(r: &PolygonReport) -> bool {
    r.ke && r.vertex_count == 3
}

pub fn verify_theorems(reports: &[PolygonReport]) -> VerificationReport {
    use ClaimKind::*;
    let claims = vec![
        check(
            reports,
            "symmetric_implies_ke",
            Theorem,
            "every symmetric class is Kähler–Einstein",
            |r| r.symmetric,
            |r| r.ke,
        ),
        check(
            reports,
            "symmetric_iff_rotation",
            Theorem,
            "a class is symmetric exactly when it has a nontrivial rotation",
            |_| true,
            |r| r.symmetric == (r.aut.rotations >= 2),
        ),
        check(
            reports,
            "reflection_only_is_smn",
            Theorem,
            "a class whose automorphism group is {identity, one reflection} is some S_{m,n} with m != n",
            |r| r.aut.is_single_reflection(),
            |r| matches!(r.smn, Some((m, n)) if m != n),
        ),
        check(
            reports,
            "ke_excludes_reflection_only",
            Theorem,
            "no Kähler–Einstein class has automorphism group {identity, one reflection}",
            |r| r.ke,
            |r| !r.aut.is_single_reflection(),
        ),
        check(
            reports,
            "ke_classes_with_reflection",
            Finding,
            "Kähler–Einstein classes whose automorphism group contains some reflection",
            |r| r.ke,
            |r| r.aut.reflections == 0,
        ),
        check(
            reports,
            "ke_triangle_shape",
            Theorem,
            "every Kähler–Einstein triangle is conv{(a,-b),(0,1),(-a,b-1)} with gcd(a,b) = gcd(a,b-1) = 1",
            is_ke_triangle,
            |r| r.polygon().ok().and_then(|p| recognize_ke_triangle(&p)).is_some(),
        ),
        check(
            reports,
            "ke_triangle_index_odd",
            Theorem,
            "every Kähler–Einstein triangle has odd index",
            is_ke_triangle,
            |r| r.index % 2 == 1,
        ),
        check(
            reports,
            "ke_nonsymmetric_picard_one",
            Conjecture,
            "every non-symmetric Kähler–Einstein class has Picard number one",
            |r| r.ke && !r.symmetric,
            |r| r.picard == 1,
        ),
    ];
    VerificationReport {
        schema: VERIFY_SCHEMA,
        bound: reports.iter().map(|r| r.bound).max(),
        classes: reports.len(),
        claims,
        example_triangle: example_triangle_check(),
        my_family: (3..=5).map(my_family_check).collect(),
    }
}

fn example_triangle_check() -> SpotCheck {
    let p = FanoPolygon::new(&[
        LatticePoint::new(0, 1),
        LatticePoint::new(-11, 2),
        LatticePoint::new(11, -3),
    ])
    .expect("valid triangle");
    let r = PolygonReport::build(&p, 11);
    let index_odd = r.index % 2 == 1;
    SpotCheck {
        passed: r.ke && r.aut.order == 1 && !r.symmetric && r.picard == 1 && r.index == 11,
        vertices: p.vertices().to_vec(),
        ke: r.ke,
        aut_order: r.aut.order,
        symmetric: r.symmetric,
        picard: r.picard,
        index: r.index,
        index_odd,
    }
}

/// The parallelogram `conv{(0,1),(-m,-1),(0,-1),(m,1)}`.
pub fn my_family_polygon(m: i64) -> FanoPolygon {
    FanoPolygon::new(&[
        LatticePoint::new(0, 1),
        LatticePoint::new(-m, -1),
        LatticePoint::new(0, -1),
        LatticePoint::new(m, 1),
    ])
    .expect("valid parallelogram")
}

fn my_family_check(m: i64) -> MyFamilyCheck {
    let p = my_family_polygon(m);
    let k2_dual_area = k2_from_dual_area(&p);
    let k2_resolution = k2_from_resolution(&singularities(&p));
    let inv = surface_invariants(&p);
    let reference_defect = Rational::new(2 * m - 4, m);
    MyFamilyCheck {
        m,
        k2_dual_area,
        k2_resolution,
        oracles_agree: k2_dual_area == k2_resolution,
        e_orb: inv.e_orb,
        my_defect: inv.my_defect,
        reference_defect,
        matches_reference: inv.my_defect == reference_defect,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{enumerate, CensusConfig};
    use crate::kernel::UnimodularMap;

    fn fano(pts: &[(i64, i64)]) -> FanoPolygon {
        let pts: Vec<_> = pts.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect();
        FanoPolygon::new(&pts).unwrap()
    }

    /// Checks by hand that `m` maps the vertex set onto itself.
    fn preserves(p: &FanoPolygon, m: &UnimodularMap) -> bool {
        let mut a = p.vertices().to_vec();
        let mut b: Vec<_> = a.iter().map(|v| m.apply(*v)).collect();
        a.sort();
        b.sort();
        a == b
    }

    #[test]
    fn b1_census() {
        let v = verify_theorems(&enumerate(&CensusConfig::new(1)).unwrap());
        assert_eq!(v.bound, Some(1));
        assert!(v.claim("symmetric_implies_ke").unwrap().holds);
        assert!(v.claim("symmetric_iff_rotation").unwrap().holds);
        assert!(v.claim("ke_excludes_reflection_only").unwrap().holds);
        assert!(v.claim("ke_triangle_shape").unwrap().holds);
        assert!(v.claim("ke_triangle_index_odd").unwrap().holds);
        // the smooth blow-up of the plane in a point has a lone reflection
        let f1 = fano(&[(-1, 0), (0, -1), (1, -1), (0, 1)]);
        let sigma = UnimodularMap::new(-1, 0, 1, 1).unwrap();
        assert_eq!(sigma.det(), -1);
        assert!(preserves(&f1, &sigma));
        let refl = v.claim("reflection_only_is_smn").unwrap();
        assert!(refl.counterexamples.contains(&f1.canonical_form()));
        assert!(v.has_theorem_failure());
    }

    #[test]
    fn ke_triangle_with_lone_reflection() {
        let p = fano(&[(5, -2), (0, 1), (-5, 1)]);
        assert!(p.ke_vertex_sum().is_zero());
        let sigma = UnimodularMap::new(-1, -5, 0, 1).unwrap();
        assert!(preserves(&p, &sigma));
        let r = PolygonReport::build(&p, 5);
        assert!(r.ke && r.aut.is_single_reflection());
        let v = verify_theorems(&[r]);
        assert!(!v.claim("ke_excludes_reflection_only").unwrap().holds);
        assert!(!v.claim("reflection_only_is_smn").unwrap().holds);
        assert!(v.claim("ke_nonsymmetric_picard_one").unwrap().holds);
    }

    #[test]
    fn spot_checks() {
        let v = verify_theorems(&[]);
        assert_eq!(v.classes, 0);
        assert_eq!(v.bound, None);
        let t = &v.example_triangle;
        assert!(t.passed && t.ke && !t.symmetric && t.index_odd);
        assert_eq!((t.aut_order, t.picard, t.index), (1, 1, 11));
        for c in &v.my_family {
            assert!(c.oracles_agree);
            assert_eq!(c.k2_dual_area, Rational::new(8, c.m));
            assert_eq!(c.e_orb, Rational::new(4, c.m));
            assert_eq!(c.my_defect, Rational::new(-4, c.m));
            assert_eq!(c.reference_defect, Rational::new(2 * c.m - 4, c.m));
            assert!(!c.matches_reference);
        }
    }

    #[test]
    fn serializes_claim_arrays() {
        let v = verify_theorems(&enumerate(&CensusConfig::new(1)).unwrap());
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["schema"], "fano-verify/1");
        assert!(json["claims"][0]["counterexamples"].is_array());
        assert_eq!(json["my_family"][0]["reference_defect"], "2/3");
        assert_eq!(json["my_family"][0]["my_defect"], "-4/3");
    }
}
