//! Triangulations and worked examples shipped with the crate.

use crate::complex::SimplicialComplex;
use crate::io::ComplexFile;

pub const SPHERE: &str = include_str!("../data/sphere.txt");
pub const PROJECTIVE_PLANE: &str = include_str!("../data/projective_plane.txt");
pub const TORUS: &str = include_str!("../data/torus.txt");
pub const KLEIN_BOTTLE: &str = include_str!("../data/klein_bottle.txt");
pub const N3: &str = include_str!("../data/n3.txt");
pub const GENUS2: &str = include_str!("../data/genus2.txt");
pub const M2_NINE_VERTEX: &str = include_str!("../data/m2_nine_vertex.txt");
pub const SPHERE_WITH_SOLID_SIDE: &str = include_str!("../data/sphere_with_solid_side.txt");
pub const TORUS_WEDGE_CIRCLE: &str = include_str!("../data/torus_wedge_circle.txt");
pub const TWO_SPHERES: &str = include_str!("../data/two_spheres.txt");
pub const POINT: &str = include_str!("../data/point.txt");

/// Every bundled file as `(file name, contents)`.
pub const ALL: &[(&str, &str)] = &[
    ("sphere.txt", SPHERE),
    ("projective_plane.txt", PROJECTIVE_PLANE),
    ("torus.txt", TORUS),
    ("klein_bottle.txt", KLEIN_BOTTLE),
    ("n3.txt", N3),
    ("genus2.txt", GENUS2),
    ("m2_nine_vertex.txt", M2_NINE_VERTEX),
    ("sphere_with_solid_side.txt", SPHERE_WITH_SOLID_SIDE),
    ("torus_wedge_circle.txt", TORUS_WEDGE_CIRCLE),
    ("two_spheres.txt", TWO_SPHERES),
    ("point.txt", POINT),
];

/// Parses bundled file contents.
///
/// # Panics
///
/// If `text` is not a valid complex file; the bundled files always are.
pub fn load(text: &str) -> SimplicialComplex {
    ComplexFile::parse(text)
        .expect("bundled complex files parse")
        .complex()
}
