//! The block complex of a three-dimensional Fano polytope: facet normals and
//! the multiplicity `|det(m_i, m_j, m_k)|` of every triple of facets.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vector3 = [i64; 3];

fn sub(a: Vector3, b: Vector3) -> Vector3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: Vector3, b: Vector3) -> Vector3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: Vector3, b: Vector3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn det3(a: Vector3, b: Vector3, c: Vector3) -> i64 {
    dot(a, cross(b, c))
}

fn content(v: Vector3) -> i64 {
    v[0].gcd(&v[1]).gcd(&v[2])
}

fn rank(vs: &[Vector3]) -> usize {
    let Some(&a) = vs.iter().find(|&&v| v != [0; 3]) else {
        return 0;
    };
    let Some(&b) = vs.iter().find(|&&v| cross(a, v) != [0; 3]) else {
        return 1;
    };
    if vs.iter().any(|&c| det3(a, b, c) != 0) {
        3
    } else {
        2
    }
}

/// A facet: primitive inner normal `m` with `<m, v> >= -height` on the
/// polytope, with equality exactly on `vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Facet {
    pub normal: Vector3,
    pub height: i64,
    pub vertices: Vec<usize>,
}

/// A lattice polytope in three dimensions with primitive vertices and the
/// origin strictly inside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolytopeJson")]
pub struct FanoPolytope3 {
    vertices: Vec<Vector3>,
    #[serde(skip)]
    facets: Vec<Facet>,
}

#[derive(Deserialize)]
struct PolytopeJson {
    vertices: Vec<Vector3>,
}

impl TryFrom<PolytopeJson> for FanoPolytope3 {
    type Error = Error;
    fn try_from(j: PolytopeJson) -> Result<Self> {
        Self::new(j.vertices)
    }
}

impl FanoPolytope3 {
    pub fn new(vertices: Vec<Vector3>) -> Result<Self> {
        for (i, &v) in vertices.iter().enumerate() {
            if content(v) != 1 {
                return Err(Error::InvalidPolytope(format!("vertex {v:?} is not primitive")));
            }
            if vertices[..i].contains(&v) {
                return Err(Error::InvalidPolytope(format!("repeated vertex {v:?}")));
            }
        }
        let diffs: Vec<Vector3> = vertices.iter().map(|&v| sub(v, vertices[0])).collect();
        if vertices.len() < 4 || rank(&diffs) < 3 {
            return Err(Error::InvalidPolytope("hull is not three-dimensional".into()));
        }
        let facets = facets(&vertices)?;
        for (i, &v) in vertices.iter().enumerate() {
            let on: Vec<Vector3> = facets.iter().filter(|f| f.vertices.contains(&i)).map(|f| f.normal).collect();
            if rank(&on) < 3 {
                return Err(Error::InvalidPolytope(format!("{v:?} is not a vertex of the hull")));
            }
        }
        Ok(Self { vertices, facets })
    }

    pub fn vertices(&self) -> &[Vector3] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Image under an integer matrix of determinant `±1`, acting on columns.
    pub fn transform(&self, m: [[i64; 3]; 3]) -> Result<Self> {
        let d = det3(m[0], m[1], m[2]);
        if d.abs() != 1 {
            return Err(Error::InvalidPolytope(format!("matrix has determinant {d}")));
        }
        Self::new(self.vertices.iter().map(|&v| [dot(m[0], v), dot(m[1], v), dot(m[2], v)]).collect())
    }
}

/// Supporting planes through every affinely independent vertex triple.
fn facets(vs: &[Vector3]) -> Result<Vec<Facet>> {
    let n = vs.len();
    let mut out: Vec<Facet> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let c = cross(sub(vs[j], vs[i]), sub(vs[k], vs[i]));
                let g = content(c);
                if g == 0 {
                    continue;
                }
                let mut m = [c[0] / g, c[1] / g, c[2] / g];
                let mut h = -dot(m, vs[i]);
                let vals: Vec<i64> = vs.iter().map(|&v| dot(m, v)).collect();
                if vals.iter().all(|&x| x <= -h) {
                    m = m.map(|x| -x);
                    h = -h;
                } else if !vals.iter().all(|&x| x >= -h) {
                    continue;
                }
                if h <= 0 {
                    return Err(Error::InvalidPolytope("the origin is not strictly inside".into()));
                }
                if out.iter().any(|f| f.normal == m) {
                    continue;
                }
                let on = (0..n).filter(|&v| dot(m, vs[v]) == -h).collect();
                out.push(Facet { normal: m, height: h, vertices: on });
            }
        }
    }
    Ok(out)
}

/// A triple of facets with non-zero determinant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Simplex {
    /// Facet indices in increasing order.
    pub triple: [usize; 3],
    pub multiplicity: i64,
    /// The same facets ordered so that the determinant is positive.
    pub oriented: [usize; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockComplex3 {
    pub normals: Vec<Vector3>,
    pub simplices: Vec<Simplex>,
}

impl BlockComplex3 {
    /// Multiplicity of an unordered triple of facets, zero when absent.
    pub fn multiplicity(&self, mut triple: [usize; 3]) -> i64 {
        triple.sort_unstable();
        self.simplices.iter().find(|s| s.triple == triple).map_or(0, |s| s.multiplicity)
    }
}

pub fn block_complex3(p: &FanoPolytope3) -> BlockComplex3 {
    let normals: Vec<Vector3> = p.facets().iter().map(|f| f.normal).collect();
    let n = normals.len();
    let mut simplices = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let d = det3(normals[i], normals[j], normals[k]);
                if d == 0 {
                    continue;
                }
                let oriented = if d > 0 { [i, j, k] } else { [i, k, j] };
                simplices.push(Simplex { triple: [i, j, k], multiplicity: d.abs(), oriented });
            }
        }
    }
    BlockComplex3 { normals, simplices }
}

pub mod known {
    use super::FanoPolytope3;

    pub fn p3() -> FanoPolytope3 {
        FanoPolytope3::new(vec![[-1, -1, -1], [-1, 0, -1], [0, -1, -1], [2, 2, 3]]).expect("valid")
    }

    pub fn p1119_mod3() -> FanoPolytope3 {
        FanoPolytope3::new(vec![[-1, -1, -1], [2, 5, 3], [5, 2, 3], [2, 2, 3]]).expect("valid")
    }

    pub fn standard_simplex() -> FanoPolytope3 {
        FanoPolytope3::new(vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]).expect("valid")
    }
}
