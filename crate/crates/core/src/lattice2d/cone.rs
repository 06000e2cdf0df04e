use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::vector::{complete_basis, LatticeVector2, OrientedLattice2};
use crate::error::{Error, Result};

/// How a two-dimensional cone sits relative to the refinement `w = alpha*l + rho`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConeKind {
    /// `w == l`: a primitive T-cone (smooth cones included).
    T,
    /// `w < l`: residual, rigid under mutation.
    R,
    /// `w > l`: a maximal cone that still needs refining.
    Composite,
}

/// Cyclic quotient type `1/r(1,a)`, stored with `a` reduced to the class key
/// `min(a, a^-1 mod r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicQuotient {
    pub r: i64,
    pub a: i64,
}

impl CyclicQuotient {
    pub fn new(r: i64, a: i64) -> Self {
        debug_assert!(r >= 1);
        let a = a.rem_euclid(r);
        if r == 1 {
            return Self { r, a: 0 };
        }
        let inv = mod_inverse(a, r).expect("cyclic quotient weight must be a unit mod r");
        Self { r, a: a.min(inv) }
    }
}

impl fmt::Display for CyclicQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.r, self.a)
    }
}

pub(crate) fn mod_inverse(a: i64, r: i64) -> Option<i64> {
    let e = a.rem_euclid(r).extended_gcd(&r);
    (e.gcd == 1).then(|| e.x.rem_euclid(r))
}

/// A two-dimensional cone with its width, local index, inner normal and
/// singularity type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConeData {
    pub u: LatticeVector2,
    pub v: LatticeVector2,
    /// Lattice length of the segment `[u, v]`.
    pub width: i64,
    pub local_index: i64,
    pub normal: LatticeVector2,
    pub r: i64,
    pub a: i64,
}

impl ConeData {
    pub fn kind(&self) -> ConeKind {
        match self.width.cmp(&self.local_index) {
            std::cmp::Ordering::Equal => ConeKind::T,
            std::cmp::Ordering::Less => ConeKind::R,
            std::cmp::Ordering::Greater => ConeKind::Composite,
        }
    }

    pub fn quotient(&self) -> CyclicQuotient {
        CyclicQuotient { r: self.r, a: self.a }
    }

    pub fn label(&self) -> (i64, i64) {
        (self.width, self.local_index)
    }
}

/// Inner normal of the cone over `[u, v]`: the primitive `m` with
/// `<m,u> = <m,v> < 0`.
pub fn inner_normal(u: LatticeVector2, v: LatticeVector2) -> LatticeVector2 {
    let m = (v - u).rotate_ccw().primitive_part();
    if m.pair(u) < 0 {
        m
    } else {
        -m
    }
}

pub fn cone_data(u: LatticeVector2, v: LatticeVector2, lattice: OrientedLattice2) -> Result<ConeData> {
    for g in [u, v] {
        if !g.is_primitive() {
            return Err(Error::NotPrimitive(g));
        }
    }
    let r = lattice.det(u, v);
    if r <= 0 {
        return Err(Error::DegenerateCone(u, v));
    }
    let width = (v - u).content();
    let normal = inner_normal(u, v);
    let local_index = -normal.pair(u);
    if normal.pair(v) != -local_index || local_index * width != r {
        return Err(Error::Internal(format!(
            "cone ({u},{v}): local index {local_index} and width {width} disagree with det {r}"
        )));
    }
    // Bring the cone to cone((r,s),(0,1)) with an SL2 map; ordering is taken
    // in standard orientation, which the class key does not see.
    let (p, q) = if u.det(v) > 0 { (u, v) } else { (v, u) };
    let a = if r == 1 { 0 } else { complete_basis(q).det(p).rem_euclid(r) };
    let quotient = CyclicQuotient::new(r, a);
    Ok(ConeData { u, v, width, local_index, normal, r, a: quotient.a })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64, y: i64) -> LatticeVector2 {
        LatticeVector2::new(x, y)
    }

    #[test]
    fn half_cone_of_p112() {
        let c = cone_data(v(2, -1), v(0, 1), OrientedLattice2::Positive).unwrap();
        assert_eq!((c.width, c.local_index, c.r), (2, 1, 2));
        assert_eq!(c.quotient(), CyclicQuotient { r: 2, a: 1 });
        assert_eq!(c.kind(), ConeKind::Composite);
    }

    #[test]
    fn smooth_cone() {
        let c = cone_data(v(1, 0), v(0, 1), OrientedLattice2::Positive).unwrap();
        assert_eq!((c.width, c.local_index), (1, 1));
        assert_eq!(c.normal, v(-1, -1));
        assert_eq!(c.kind(), ConeKind::T);
        assert_eq!(c.quotient(), CyclicQuotient { r: 1, a: 0 });
    }

    /// Inner normal found by scanning small primitive dual vectors.
    fn brute_normal(u: LatticeVector2, w: LatticeVector2) -> LatticeVector2 {
        let mut found = None;
        for x in -10..=10 {
            for y in -10..=10 {
                let m = v(x, y);
                if m.is_primitive() && m.pair(u) == m.pair(w) && m.pair(u) < 0 {
                    assert!(found.is_none(), "normal must be unique");
                    found = Some(m);
                }
            }
        }
        found.unwrap()
    }

    #[test]
    fn residual_cone_of_p116() {
        // (-1,-6) precedes (1,0) counterclockwise.
        let u = v(-1, -6);
        let w = v(1, 0);
        let c = cone_data(u, w, OrientedLattice2::Positive).unwrap();
        assert_eq!((c.width, c.local_index), (2, 3));
        assert_eq!(c.normal, v(-3, 1));
        assert_eq!(c.normal, brute_normal(u, w));
        assert_eq!(c.kind(), ConeKind::R);
        assert_eq!(c.quotient(), CyclicQuotient { r: 6, a: 1 });
    }

    #[test]
    fn brute_normals_agree() {
        let pairs = [((1, 0), (0, 1)), ((2, -1), (0, 1)), ((1, -2), (1, 3)), ((3, -1), (-1, 2))];
        for (a, b) in pairs {
            let (a, b) = (v(a.0, a.1), v(b.0, b.1));
            assert_eq!(inner_normal(a, b), brute_normal(a, b));
        }
    }

    #[test]
    fn rejects_bad_cones() {
        assert_eq!(cone_data(v(2, 0), v(0, 1), OrientedLattice2::Positive), Err(Error::NotPrimitive(v(2, 0))));
        assert!(matches!(cone_data(v(1, 0), v(-1, 0), OrientedLattice2::Positive), Err(Error::DegenerateCone(..))));
        assert!(matches!(cone_data(v(1, 0), v(0, 1), OrientedLattice2::Negative), Err(Error::DegenerateCone(..))));
    }

    #[test]
    fn quotient_class_key() {
        // 1/5(1,2) and 1/5(1,3) are the same singularity.
        assert_eq!(CyclicQuotient::new(5, 2), CyclicQuotient::new(5, 3));
        assert_eq!(CyclicQuotient::new(7, 3), CyclicQuotient { r: 7, a: 3 });
        assert_eq!(CyclicQuotient::new(7, 5), CyclicQuotient { r: 7, a: 3 });
    }
}
