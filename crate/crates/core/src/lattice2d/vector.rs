use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// A point of a rank-2 lattice, or of its dual.
///
/// Dual vectors share this representation; [`LatticeVector2::pair`] is the
/// natural pairing `m.x * v.x + m.y * v.y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticeVector2 {
    pub x: i64,
    pub y: i64,
}

impl LatticeVector2 {
    pub const ZERO: Self = Self { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// gcd of the coordinates, with `gcd(0, n) = |n|`.
    pub fn content(self) -> i64 {
        self.x.gcd(&self.y)
    }

    pub fn is_primitive(self) -> bool {
        self.content() == 1
    }

    /// Divides out the content. The zero vector is returned unchanged.
    pub fn primitive_part(self) -> Self {
        let g = self.content();
        if g == 0 {
            self
        } else {
            Self::new(self.x / g, self.y / g)
        }
    }

    pub fn pair(self, other: Self) -> i64 {
        self.x * other.x + self.y * other.y
    }

    /// Standard (unoriented) determinant `x1*y2 - y1*x2`.
    pub fn det(self, other: Self) -> i64 {
        self.x * other.y - self.y * other.x
    }

    /// Counterclockwise rotation by a quarter turn.
    pub fn rotate_ccw(self) -> Self {
        Self::new(-self.y, self.x)
    }

    pub fn scale(self, k: i64) -> Self {
        Self::new(self.x * k, self.y * k)
    }
}

impl From<[i64; 2]> for LatticeVector2 {
    fn from(v: [i64; 2]) -> Self {
        Self::new(v[0], v[1])
    }
}

impl From<LatticeVector2> for [i64; 2] {
    fn from(v: LatticeVector2) -> Self {
        [v.x, v.y]
    }
}

impl From<(i64, i64)> for LatticeVector2 {
    fn from((x, y): (i64, i64)) -> Self {
        Self::new(x, y)
    }
}

impl Add for LatticeVector2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for LatticeVector2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for LatticeVector2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl Mul<LatticeVector2> for i64 {
    type Output = LatticeVector2;
    fn mul(self, rhs: LatticeVector2) -> LatticeVector2 {
        rhs.scale(self)
    }
}

impl fmt::Display for LatticeVector2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Orientation of a rank-2 lattice: the sign applied to every determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum OrientedLattice2 {
    #[default]
    Positive,
    Negative,
}

impl OrientedLattice2 {
    pub fn from_sign(sign: i64) -> Option<Self> {
        match sign {
            1 => Some(Self::Positive),
            -1 => Some(Self::Negative),
            _ => None,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Self::Positive => 1,
            Self::Negative => -1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Self::Positive => Self::Negative,
            Self::Negative => Self::Positive,
        }
    }

    /// Oriented determinant of an ordered pair.
    pub fn det(self, a: LatticeVector2, b: LatticeVector2) -> i64 {
        self.sign() * a.det(b)
    }
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// A lattice vector `g` with `det(e, g) = 1`, for primitive `e`.
pub fn complete_basis(e: LatticeVector2) -> LatticeVector2 {
    // det(e, g) = e.x*g.y - e.y*g.x = 1
    let (g, s, t) = ext_gcd(e.x, -e.y);
    debug_assert_eq!(g, 1, "complete_basis needs a primitive vector");
    LatticeVector2::new(t, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitivity() {
        assert!(LatticeVector2::new(2, -1).is_primitive());
        assert!(LatticeVector2::new(0, 1).is_primitive());
        assert!(!LatticeVector2::new(0, 2).is_primitive());
        assert!(!LatticeVector2::ZERO.is_primitive());
        assert_eq!(LatticeVector2::new(-4, 6).primitive_part(), LatticeVector2::new(-2, 3));
    }

    #[test]
    fn orientation_flips_det() {
        let a = LatticeVector2::new(1, 0);
        let b = LatticeVector2::new(0, 1);
        assert_eq!(OrientedLattice2::Positive.det(a, b), 1);
        assert_eq!(OrientedLattice2::Negative.det(a, b), -1);
        assert_eq!(OrientedLattice2::Positive.det(b, a), -1);
    }

    #[test]
    fn basis_completion() {
        for e in [(1, 0), (0, 1), (2, -1), (-3, 5), (7, 4), (-1, -6)] {
            let e = LatticeVector2::from(e);
            assert_eq!(e.det(complete_basis(e)), 1, "{e}");
        }
    }
}
