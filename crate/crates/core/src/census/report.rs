use serde::{Deserialize, Serialize};

use crate::invariants::{singularity_summary, surface_invariants, SingularityType};
use crate::kernel::{rational_string, LatticePoint, Rational};
use crate::polygon::FanoPolygon;
use crate::symmetry::{automorphisms, recognize_smn, FixedSubspace, GroupStructure};

/// Schema tag carried by every stored report.
pub const SCHEMA: &str = "fano-census/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutSummary {
    pub order: usize,
    pub rotations: usize,
    pub reflections: usize,
    pub structure: GroupStructure,
}

impl AutSummary {
    pub fn is_single_reflection(&self) -> bool {
        self.order == 2 && self.reflections == 1
    }
}

/// Every invariant of one equivalence class. Field order is the serialized
/// key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonReport {
    pub schema: String,
    /// Box bound of the census that produced this record.
    pub bound: i64,
    /// Canonical vertex sequence.
    pub vertices: Vec<LatticePoint>,
    pub vertex_count: usize,
    pub index: i64,
    pub picard: i64,
    pub ke: bool,
    pub symmetric: bool,
    pub aut: AutSummary,
    pub singularities: Vec<SingularityType>,
    pub singularity_summary: String,
    #[serde(with = "rational_string")]
    pub e_orb: Rational,
    #[serde(with = "rational_string")]
    pub k2: Rational,
    #[serde(with = "rational_string")]
    pub my_defect: Rational,
    /// `(m, n)` when the class is some `S_{m,n}`.
    pub smn: Option<(u32, u32)>,
}

impl PolygonReport {
    pub fn build(p: &FanoPolygon, bound: i64) -> PolygonReport {
        let canonical = p.canonical();
        let inv = surface_invariants(&canonical);
        let aut = automorphisms(&canonical);
        PolygonReport {
            schema: SCHEMA.to_string(),
            bound,
            vertex_count: canonical.len(),
            index: inv.index,
            picard: inv.picard,
            ke: canonical.is_kahler_einstein(),
            symmetric: aut.fixed_subspace() == FixedSubspace::Zero,
            aut: AutSummary {
                order: aut.order(),
                rotations: aut.rotation_count(),
                reflections: aut.reflection_count(),
                structure: aut.structure(),
            },
            singularity_summary: singularity_summary(&inv.singularities),
            singularities: inv.singularities,
            e_orb: inv.e_orb,
            k2: inv.k2,
            my_defect: inv.my_defect,
            smn: recognize_smn(&canonical),
            vertices: canonical.vertices().to_vec(),
        }
    }

    pub fn polygon(&self) -> crate::Result<FanoPolygon> {
        FanoPolygon::new(&self.vertices)
    }
}
