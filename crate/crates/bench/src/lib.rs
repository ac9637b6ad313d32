//! Fixtures shared by the benchmarks.

use fano_core::families::{make_ke_triangle, make_smn};
use fano_core::{FanoPolygon, KeTriangleParams, LatticePoint, SmnParams};

/// A spread of polygons: small reflexive ones, `S_{m,n}` members, a
/// Kähler–Einstein triangle of large index and a hexagon.
pub fn sample_polygons() -> Vec<(&'static str, FanoPolygon)> {
    let hexagon = FanoPolygon::new(&[
        LatticePoint::new(1, 0),
        LatticePoint::new(1, 1),
        LatticePoint::new(0, 1),
        LatticePoint::new(-1, 0),
        LatticePoint::new(-1, -1),
        LatticePoint::new(0, -1),
    ])
    .expect("hexagon is Fano");
    vec![
        ("s_0_0", make_smn(SmnParams::new(0, 0))),
        ("s_7_3", make_smn(SmnParams::new(7, 3))),
        ("s_20_19", make_smn(SmnParams::new(20, 19))),
        ("ke_triangle_97_5", make_ke_triangle(KeTriangleParams::new(97, 5).expect("valid"))),
        ("hexagon", hexagon),
    ]
}
