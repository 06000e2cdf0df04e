//! Rank-2 lattice geometry: Fano polygons, their cones, standard
//! refinements, combinatorial mutation, equivalence and enumeration.

mod cone;
mod enumerate;
mod equivalence;
pub mod known;
mod mutation;
mod polygon;
mod refinement;
mod vector;

pub use cone::{cone_data, inner_normal, ConeData, ConeKind, CyclicQuotient};
pub use enumerate::enumerate_fano_polygons;
pub use equivalence::{canonical_form, polygons_equivalent, CanonicalForm, EquivalenceGroup};
pub use mutation::mutate_polygon;
pub use polygon::{convex_hull, FanoPolygon, PolygonJson};
pub use refinement::{refine_with, standard_refinement, Division, Placement, RefinedCone, StandardRefinement};
pub use vector::{complete_basis, ext_gcd, LatticeVector2, OrientedLattice2};
