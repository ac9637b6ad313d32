//! Automorphism groups of Fano polygons inside `GL(2, Z)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::families::{make_smn, SmnParams};
use crate::kernel::{ord, LatticePoint, UnimodularMap};
use crate::polygon::FanoPolygon;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupStructure {
    Trivial,
    /// Only rotations.
    Cyclic,
    /// Contains a reflection; a lone reflection is the order-2 dihedral group.
    Dihedral,
}

/// The stabilizer of a polygon in `GL(2, Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutGroup {
    order: usize,
    rotations: usize,
    reflections: usize,
    structure: GroupStructure,
    elements: Vec<UnimodularMap>,
}

impl AutGroup {
    fn from_elements(set: BTreeSet<UnimodularMap>) -> Self {
        let elements: Vec<_> = set.into_iter().collect();
        let rotations = elements.iter().filter(|m| m.det() == 1).count();
        let reflections = elements.len() - rotations;
        let structure = match (elements.len(), reflections) {
            (1, _) => GroupStructure::Trivial,
            (_, 0) => GroupStructure::Cyclic,
            _ => GroupStructure::Dihedral,
        };
        AutGroup {
            order: elements.len(),
            rotations,
            reflections,
            structure,
            elements,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rotation_count(&self) -> usize {
        self.rotations
    }

    pub fn reflection_count(&self) -> usize {
        self.reflections
    }

    pub fn structure(&self) -> GroupStructure {
        self.structure
    }

    /// Sorted by matrix entries.
    pub fn elements(&self) -> &[UnimodularMap] {
        &self.elements
    }

    pub fn contains(&self, m: &UnimodularMap) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    /// `{identity, one reflection}`.
    pub fn is_single_reflection(&self) -> bool {
        self.order == 2 && self.reflections == 1
    }

    pub fn has_nontrivial_rotation(&self) -> bool {
        self.rotations >= 2
    }

    /// Points fixed by every element.
    pub fn fixed_subspace(&self) -> FixedSubspace {
        self.elements
            .iter()
            .fold(FixedSubspace::Plane, |acc, m| acc.intersect(FixedSubspace::of(m)))
    }
}

/// A linear subspace of `Q²`. Lines carry a primitive direction whose first
/// nonzero coordinate is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedSubspace {
    Zero,
    Line(LatticePoint),
    Plane,
}

impl FixedSubspace {
    /// `ker(M - I)`.
    pub fn of(m: &UnimodularMap) -> FixedSubspace {
        let [[a, b], [c, d]] = m.rows();
        let (a, d) = (a - 1, d - 1);
        if a == 0 && b == 0 && c == 0 && d == 0 {
            return FixedSubspace::Plane;
        }
        if a * d - b * c != 0 {
            return FixedSubspace::Zero;
        }
        let dir = if (a, b) != (0, 0) {
            LatticePoint::new(-b, a)
        } else {
            LatticePoint::new(-d, c)
        };
        let g = dir.primitive_index().expect("nonzero row");
        let sign = if dir.x < 0 || (dir.x == 0 && dir.y < 0) { -1 } else { 1 };
        FixedSubspace::Line(LatticePoint::new(sign * dir.x / g, sign * dir.y / g))
    }

    pub fn intersect(self, other: FixedSubspace) -> FixedSubspace {
        match (self, other) {
            (FixedSubspace::Plane, x) | (x, FixedSubspace::Plane) => x,
            (FixedSubspace::Line(u), FixedSubspace::Line(v)) if ord(u, v) == 0 => {
                FixedSubspace::Line(u)
            }
            _ => FixedSubspace::Zero,
        }
    }
}

/// The full automorphism group: every map sending the first directed edge to
/// some directed edge, kept when it is integral, unimodular and preserves the
/// vertex set.
pub fn automorphisms(p: &FanoPolygon) -> AutGroup {
    AutGroup::from_elements(p.equivalences(p).into_iter().collect())
}

/// Whether the origin is the only point fixed by every automorphism.
pub fn is_symmetric(p: &FanoPolygon) -> bool {
    automorphisms(p).fixed_subspace() == FixedSubspace::Zero
}

/// `(m, n)` with `p ≅ S_{m,n}`, if any. Twice the area of `S_{m,n}` is
/// `4(m + n + 1)`, which pins `m + n`.
pub fn recognize_smn(p: &FanoPolygon) -> Option<(u32, u32)> {
    let area2 = p.area2();
    if p.len() != 4 || area2 % 4 != 0 {
        return None;
    }
    let total = u32::try_from(area2 / 4 - 1).ok()?;
    let target = p.canonical_form();
    (0..=total)
        .map(|m| (m, total - m))
        .find(|&(m, n)| make_smn(SmnParams::new(m, n)).canonical_form() == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::tests::arb_unimodular;
    use crate::polygon::tests::poly;
    use proptest::prelude::*;

    #[test]
    fn smn_has_lone_reflection() {
        for (m, n) in [(1, 0), (0, 2), (3, 1), (5, 2)] {
            let p = make_smn(SmnParams::new(m, n));
            let g = automorphisms(&p);
            assert_eq!(g.elements(), &[UnimodularMap::SWAP, UnimodularMap::IDENTITY]);
            assert!(g.is_single_reflection());
            assert_eq!(g.structure(), GroupStructure::Dihedral);
            assert!(!is_symmetric(&p));
            assert!(matches!(g.fixed_subspace(), FixedSubspace::Line(d) if d == LatticePoint::new(1, 1)));
        }
    }

    #[test]
    fn smm_is_symmetric() {
        for m in 0..5 {
            let p = make_smn(SmnParams::new(m, m));
            let g = automorphisms(&p);
            assert!(g.contains(&UnimodularMap::NEG_IDENTITY));
            assert!(is_symmetric(&p));
            assert!(g.has_nontrivial_rotation());
        }
    }

    #[test]
    fn ke_triangle_example_has_trivial_group() {
        let p = poly(&[(0, 1), (-11, 2), (11, -3)]);
        let g = automorphisms(&p);
        assert_eq!(g.order(), 1);
        assert_eq!(g.structure(), GroupStructure::Trivial);
        assert!(!is_symmetric(&p));
    }

    #[test]
    fn square_has_dihedral_group_of_order_eight() {
        let p = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        let g = automorphisms(&p);
        assert_eq!((g.order(), g.rotation_count(), g.reflection_count()), (8, 4, 4));
        assert_eq!(g.structure(), GroupStructure::Dihedral);
        // oracle: every integral map determined by an ordered pair of vertices
        let mut oracle = BTreeSet::new();
        let v = p.vertices();
        let mut target = v.to_vec();
        target.sort();
        for &a in v {
            for &b in v {
                if let Some(m) = UnimodularMap::from_images(v[0], v[1], a, b) {
                    let mut img: Vec<_> = v.iter().map(|q| m.apply(*q)).collect();
                    img.sort();
                    if img == target {
                        oracle.insert(m);
                    }
                }
            }
        }
        assert_eq!(g.elements(), oracle.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn projective_plane_group() {
        let g = automorphisms(&poly(&[(1, 0), (0, 1), (-1, -1)]));
        assert_eq!((g.order(), g.rotation_count(), g.reflection_count()), (6, 3, 3));
    }

    #[test]
    fn smn_recognition() {
        assert_eq!(recognize_smn(&make_smn(SmnParams::new(3, 1))).map(|(m, n)| (m.max(n), m.min(n))), Some((3, 1)));
        let moved = make_smn(SmnParams::new(2, 0)).transform(&UnimodularMap::new(2, 1, 1, 1).unwrap());
        assert!(matches!(recognize_smn(&moved), Some((2, 0)) | Some((0, 2))));
        assert_eq!(recognize_smn(&poly(&[(1, 0), (0, 1), (-1, -1)])), None);
        // a quadrilateral of the right area that is not in the family
        assert_eq!(recognize_smn(&poly(&[(1, 0), (0, 1), (-1, 0), (1, -2)])), None);
    }

    #[test]
    fn fixed_subspaces() {
        assert_eq!(FixedSubspace::of(&UnimodularMap::IDENTITY), FixedSubspace::Plane);
        assert_eq!(FixedSubspace::of(&UnimodularMap::NEG_IDENTITY), FixedSubspace::Zero);
        assert_eq!(FixedSubspace::of(&UnimodularMap::SWAP), FixedSubspace::Line(LatticePoint::new(1, 1)));
        assert_eq!(FixedSubspace::of(&UnimodularMap::FLIP_Y), FixedSubspace::Line(LatticePoint::new(1, 0)));
        let shear = UnimodularMap::new(1, 0, 3, 1).unwrap();
        assert_eq!(FixedSubspace::of(&shear), FixedSubspace::Line(LatticePoint::new(0, 1)));
    }

    fn arb_fano() -> impl Strategy<Value = FanoPolygon> {
        prop::collection::btree_set((-3i64..=3, -3i64..=3), 3..7).prop_filter_map("not Fano", |s| {
            let pts: Vec<_> = s.into_iter().map(|(x, y)| LatticePoint::new(x, y)).collect();
            FanoPolygon::new(&pts).ok()
        })
    }

    proptest! {
        #[test]
        fn group_axioms_and_conjugation(p in arb_fano(), m in arb_unimodular()) {
            let g = automorphisms(&p);
            prop_assert!(g.contains(&UnimodularMap::IDENTITY));
            prop_assert!(g.order() <= 2 * p.len());
            for a in g.elements() {
                prop_assert!(g.contains(&a.inverse()));
                for b in g.elements() {
                    prop_assert!(g.contains(&a.compose(b)));
                }
            }
            if g.reflection_count() > 0 {
                prop_assert_eq!(2 * g.reflection_count(), g.order());
            }
            let q = p.transform(&m);
            let h = automorphisms(&q);
            prop_assert_eq!(h.order(), g.order());
            for a in g.elements() {
                prop_assert!(h.contains(&m.compose(a).compose(&m.inverse())));
            }
            prop_assert_eq!(is_symmetric(&p), g.has_nontrivial_rotation());
            if is_symmetric(&p) {
                prop_assert!(p.is_kahler_einstein());
            }
        }
    }
}
