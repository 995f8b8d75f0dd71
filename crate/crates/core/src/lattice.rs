use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A point of `Z^d`. Points compare lexicographically by coordinate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn origin(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    /// The standard basis vector `e_axis` (0-based axis).
    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut p = LatticePoint::origin(dim);
        p.0[axis] = 1;
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `self + delta·e_axis`.
    pub fn offset(&self, axis: usize, delta: i64) -> Self {
        let mut p = self.clone();
        p.0[axis] += delta;
        p
    }

    /// Componentwise sum; both points must have the same dimension.
    pub fn add(&self, other: &LatticePoint) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        LatticePoint(self.0.iter().map(|c| -c).collect())
    }

    /// The point with coordinate `axis` replaced by zero; identifies the
    /// axis-parallel line through `self`.
    pub fn project_out(&self, axis: usize) -> Self {
        let mut p = self.clone();
        p.0[axis] = 0;
        p
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(coords: [i64; N]) -> Self {
        LatticePoint(coords.to_vec())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_and_order() {
        let p = LatticePoint::from([1, -2]);
        assert_eq!(p.offset(1, 3), LatticePoint::from([1, 1]));
        assert_eq!(p.add(&p.neg()), LatticePoint::origin(2));
        assert!(LatticePoint::from([0, 5]) < LatticePoint::from([1, -5]));
        assert_eq!(alloc::format!("{p}"), "(1,-2)");
    }
}
