//! From Fano polygons to quivers: construction, Hamiltonian cycles, degree
//! formulas, singularity content, Markov points and mutation compatibility.

mod commutation;
mod degree;
mod hamiltonian;
mod markov;

use serde::Serialize;

use crate::lattice2d::{standard_refinement, ConeKind, FanoPolygon, LatticeVector2};
use crate::quiver::DecoratedQuiver;

pub use commutation::{block_shape_classifier, commutation_check, BlockShape};
pub use degree::{
    degree_along, degree_from_block, degree_from_quiver, quiver_degree_check, residual_sum, singularity_content,
    ResidualTable, SingularityContent,
};
pub use hamiltonian::{hamiltonian, HamiltonianData, HamiltonianFailure};
pub use markov::{markov_point, markov_residual, triangle_feasibility, MarkovPoint, TriangleFeasibility};

/// A quiver built from a polygon, remembering which normal and which edge
/// each vertex comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonalQuiver {
    pub quiver: DecoratedQuiver,
    pub normals: Vec<LatticeVector2>,
    /// Edge of the source polygon behind each vertex.
    pub edges: Vec<usize>,
    /// Cone type of each vertex.
    pub kinds: Vec<ConeKind>,
    pub source: FanoPolygon,
}

impl Serialize for PolygonalQuiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            labels: &'a [(i64, i64)],
            exchange: &'a [Vec<i64>],
            normals: &'a [LatticeVector2],
            source: &'a FanoPolygon,
        }
        Out {
            labels: self.quiver.labels(),
            exchange: self.quiver.exchange(),
            normals: &self.normals,
            source: &self.source,
        }
        .serialize(s)
    }
}

impl PolygonalQuiver {
    fn from_normals(
        p: &FanoPolygon,
        labels: Vec<(i64, i64)>,
        normals: Vec<LatticeVector2>,
        edges: Vec<usize>,
        kinds: Vec<ConeKind>,
    ) -> Self {
        let orientation = p.lattice();
        let exchange = normals.iter().map(|&a| normals.iter().map(|&b| orientation.det(a, b)).collect()).collect();
        let quiver = DecoratedQuiver::new(labels, exchange).expect("determinant matrix is antisymmetric");
        Self { quiver, normals, edges, kinds, source: p.clone() }
    }

    /// Lowest vertex id for each edge, in edge order.
    pub fn edge_representatives(&self) -> Vec<usize> {
        (0..self.source.len())
            .map(|e| self.edges.iter().position(|&x| x == e).expect("every edge has a cone"))
            .collect()
    }

    pub fn is_t_vertex(&self, v: usize) -> bool {
        self.kinds[v] == ConeKind::T
    }
}

/// `quiv(P)`: one vertex per cone of the standard refinement.
pub fn build_quiv(p: &FanoPolygon) -> PolygonalQuiver {
    let refinement = standard_refinement(p);
    let cones = &refinement.cones;
    PolygonalQuiver::from_normals(
        p,
        cones.iter().map(|c| c.cone.label()).collect(),
        cones.iter().map(|c| c.cone.normal).collect(),
        cones.iter().map(|c| c.edge).collect(),
        cones.iter().map(|c| c.kind).collect(),
    )
}

/// `bquiv(P)`: one vertex per edge of `P`, labelled by the maximal cone.
pub fn build_bquiv(p: &FanoPolygon) -> PolygonalQuiver {
    let cones = p.maximal_cones();
    PolygonalQuiver::from_normals(
        p,
        cones.iter().map(|c| c.label()).collect(),
        cones.iter().map(|c| c.normal).collect(),
        (0..cones.len()).collect(),
        cones.iter().map(|c| c.kind()).collect(),
    )
}
