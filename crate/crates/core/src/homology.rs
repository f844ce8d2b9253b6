//! Surfaces as first-homology lattices with the skew intersection pairing,
//! plus the exact curve model on the once-punctured torus.
//!
//! Basis convention: genus pairs (a_1, b_1, ..., a_g, b_g) first, with
//! <a_i, b_i> = +1, then boundary-parallel generators pairing to zero with
//! everything. All sign calibration downstream of this convention happens in
//! the mutation engine, not here.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMat;
use crate::scalar::{gcd_all, Scalar};

/// A compact oriented surface with boundary, carried as (genus, boundary count).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiberSurface {
    pub genus: usize,
    pub boundary: usize,
}

impl FiberSurface {
    pub fn new(genus: usize, boundary: usize) -> Result<Self> {
        if boundary == 0 {
            return Err(Error::InvalidMorseData(
                "surfaces here have nonempty boundary".into(),
            ));
        }
        Ok(FiberSurface { genus, boundary })
    }

    /// rank of H_1 = 2g + b - 1.
    pub fn h1_rank(&self) -> usize {
        2 * self.genus + self.boundary - 1
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary as i64
    }

    /// Pairing of basis vectors: +1 on (a_i, b_i), -1 on (b_i, a_i), else 0.
    pub fn pair_basis(&self, a: usize, b: usize) -> i8 {
        if a < 2 * self.genus && b < 2 * self.genus && a / 2 == b / 2 {
            if a % 2 == 0 && b == a + 1 {
                return 1;
            }
            if a % 2 == 1 && b + 1 == a {
                return -1;
            }
        }
        0
    }

    /// Gram matrix of the intersection form in the fixed basis.
    pub fn gram<T: Scalar>(&self) -> IntMat<T> {
        let n = self.h1_rank();
        let mut j = IntMat::zero(n, n);
        for a in 0..n {
            for b in 0..n {
                let s = self.pair_basis(a, b);
                if s != 0 {
                    j[(a, b)] = T::from(s as i32);
                }
            }
        }
        j
    }

    /// Skew intersection pairing of two classes on this surface.
    pub fn intersection_form<T: Scalar>(
        &self,
        x: &CurveClass<T>,
        y: &CurveClass<T>,
    ) -> Result<T> {
        let n = self.h1_rank();
        if x.rank() != n {
            return Err(Error::RankMismatch { expected: n, got: x.rank() });
        }
        if y.rank() != n {
            return Err(Error::RankMismatch { expected: n, got: y.rank() });
        }
        let mut acc = T::zero();
        for i in 0..2 * self.genus {
            let j = if i % 2 == 0 { i + 1 } else { i - 1 };
            let s = self.pair_basis(i, j);
            let term = x.coords[i].clone() * y.coords[j].clone();
            if s == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        Ok(acc)
    }
}

/// An element of a surface's H_1 lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CurveClass<T> {
    pub coords: Vec<T>,
}

impl<T: Scalar> CurveClass<T> {
    pub fn new(coords: Vec<T>) -> Self {
        CurveClass { coords }
    }

    pub fn from_i32(coords: &[i32]) -> Self {
        CurveClass { coords: coords.iter().map(|&c| T::from(c)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// true iff the gcd of the entries is 1; the zero class is not primitive.
    pub fn is_primitive(&self) -> bool {
        gcd_all(&self.coords).is_one()
    }

    pub fn neg(&self) -> Self {
        CurveClass { coords: self.coords.iter().map(|c| -c.clone()).collect() }
    }

    /// self + k * other.
    pub fn add_scaled(&self, k: &T, other: &Self) -> Self {
        CurveClass {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + k.clone() * b.clone())
                .collect(),
        }
    }

    /// Representative with the first nonzero entry positive; identifies c and -c.
    pub fn unoriented(&self) -> Self {
        match self.coords.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}

/// An essential simple closed curve on the once-punctured torus, as a coprime
/// slope (p, q). (p, q) and (-p, -q) denote the same unoriented curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PuncturedTorusCurve<T> {
    pub p: T,
    pub q: T,
}

impl<T: Scalar> PuncturedTorusCurve<T> {
    pub fn new(p: T, q: T) -> Result<Self> {
        if !p.gcd(&q).is_one() {
            return Err(Error::NotCoprime(format!("{p}"), format!("{q}")));
        }
        Ok(PuncturedTorusCurve { p, q })
    }

    /// Minimal geometric intersection number |p*s - q*r|.
    pub fn geometric_intersection(&self, other: &Self) -> T {
        (self.p.clone() * other.q.clone() - self.q.clone() * other.p.clone()).abs()
    }

    pub fn class(&self) -> CurveClass<T> {
        CurveClass::new(vec![self.p.clone(), self.q.clone()])
    }
}

/// The once-punctured torus (genus 1, one boundary component).
pub fn punctured_torus() -> FiberSurface {
    FiberSurface { genus: 1, boundary: 1 }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = CurveClass<i64>;

    fn pt() -> FiberSurface {
        punctured_torus()
    }

    #[test]
    fn rank_and_euler() {
        let s = FiberSurface::new(1, 1).unwrap();
        assert_eq!(s.h1_rank(), 2);
        assert_eq!(s.euler_characteristic(), -1);
        assert_eq!(s.euler_characteristic(), 1 - s.h1_rank() as i64);
        let s = FiberSurface::new(0, 6).unwrap();
        assert_eq!(s.h1_rank(), 5);
        assert_eq!(s.euler_characteristic(), 1 - 5);
        assert!(FiberSurface::new(2, 0).is_err());
    }

    #[test]
    fn form_on_punctured_torus() {
        let s = pt();
        let e = |a, b| s.intersection_form(&C::from_i32(&[a]), &C::from_i32(&[b]));
        let _ = e;
        let f = |x: &[i32], y: &[i32]| {
            s.intersection_form(&C::from_i32(x), &C::from_i32(y)).unwrap()
        };
        // skewness forces <x,x> = 0
        assert_eq!(f(&[0, 1], &[0, 1]), 0);
        // basis normalization
        assert_eq!(f(&[1, 0], &[0, 1]), 1);
        // determinant formula p*s - q*r
        assert_eq!(f(&[1, 1], &[2, 1]), -1);
    }

    #[test]
    fn form_rank_mismatch() {
        let s = pt();
        let err = s.intersection_form(&C::from_i32(&[1]), &C::from_i32(&[0, 1]));
        assert!(matches!(err, Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn boundary_generators_pair_to_zero() {
        let s = FiberSurface::new(1, 3).unwrap(); // rank 4: a, b, z1, z2
        let f = |x: &[i32], y: &[i32]| {
            s.intersection_form(&C::from_i32(x), &C::from_i32(y)).unwrap()
        };
        assert_eq!(f(&[0, 0, 1, 0], &[1, 1, 1, 1]), 0);
        assert_eq!(f(&[1, 0, 5, 7], &[0, 1, 3, 2]), 1);
    }

    #[test]
    fn geometric_intersection_oracle() {
        let c = |p, q| PuncturedTorusCurve::<i64>::new(p, q).unwrap();
        assert_eq!(c(0, 1).geometric_intersection(&c(1, 0)), 1);
        assert_eq!(c(1, 1).geometric_intersection(&c(1, 1)), 0);
        assert_eq!(c(2, 1).geometric_intersection(&c(0, 1)), 2);
        assert!(PuncturedTorusCurve::<i64>::new(2, 4).is_err());
        assert!(PuncturedTorusCurve::<i64>::new(0, 0).is_err());
    }

    #[test]
    fn primitivity() {
        assert!(C::from_i32(&[2, 1]).is_primitive());
        assert!(!C::from_i32(&[2, 4]).is_primitive());
        assert!(!C::from_i32(&[0, 0]).is_primitive());
    }

    #[test]
    fn torus_form_matches_geometric_intersection() {
        let s = pt();
        for (p, q, r, t) in [(0i64, 1, 1, 0), (1, 1, 2, 1), (3, 2, 1, 1), (5, 2, 2, 1)] {
            let a = PuncturedTorusCurve::new(p, q).unwrap();
            let b = PuncturedTorusCurve::new(r, t).unwrap();
            let hom: i64 = s.intersection_form(&a.class(), &b.class()).unwrap();
            assert_eq!(hom.abs(), a.geometric_intersection(&b));
        }
    }
}
