//! Mod-2 homology and cohomology of finite simplicial complexes, the
//! cup-product condition used to bound vertex counts, a reduction pipeline
//! that certifies those bounds, and tools for triangulated surfaces.

pub mod bundled;
pub mod chain;
pub mod cli;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod gf2;
pub mod io;
pub mod reduction;
pub mod surface;

pub use chain::{betti_numbers, Chain};
pub use cohomology::{has_property_a, Cochain};
pub use complex::{MoveKind, MoveRecord, Simplex, SimplicialComplex, VertexLabel};
pub use error::{Error, Result, Stage};
pub use gf2::{Gf2Matrix, Gf2Vector};
pub use reduction::{certify_lower_bound, BoundCertificate, ReductionTrace};
pub use surface::{covering_type, delta, rho, SurfaceClass};
