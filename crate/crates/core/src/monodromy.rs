//! Abstract Weinstein Lefschetz fibrations: an ordered tuple of vanishing
//! cycles on a fiber surface, Dehn-twist monodromy on H_1, Lefschetz
//! stabilization, and invariants of the total space.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{CurveClass, FiberSurface};
use crate::matrix::IntMat;
use crate::scalar::Scalar;

/// A fiber surface together with its ordered vanishing cycles L_1, ..., L_N.
/// Duplicates are allowed; order is significant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fibration<T> {
    pub fiber: FiberSurface,
    pub cycles: Vec<CurveClass<T>>,
}

impl<T: Scalar> Fibration<T> {
    /// Vanishing cycles must be nonzero primitive classes of the right rank.
    pub fn new(fiber: FiberSurface, cycles: Vec<CurveClass<T>>) -> Result<Self> {
        let n = fiber.h1_rank();
        for c in &cycles {
            if c.rank() != n {
                return Err(Error::RankMismatch { expected: n, got: c.rank() });
            }
            if c.is_zero() {
                return Err(Error::ZeroClass);
            }
            if !c.is_primitive() {
                return Err(Error::NotPrimitive(format!("{:?}", c.coords)));
            }
        }
        Ok(Fibration { fiber, cycles })
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }
}

/// H_1 automorphism induced by a mapping class; stored as a matrix acting on
/// column vectors in the fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Automorphism<T> {
    pub matrix: IntMat<T>,
}

impl<T: Scalar> H1Automorphism<T> {
    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.matrix.det()?.abs().is_one())
    }

    /// M^T J M = J for the surface's Gram matrix J.
    pub fn preserves_form(&self, s: &FiberSurface) -> Result<bool> {
        let j: IntMat<T> = s.gram();
        let mt = self.matrix.transpose();
        Ok(mt.mul(&j)?.mul(&self.matrix)? == j)
    }

    pub fn apply(&self, x: &CurveClass<T>) -> Result<CurveClass<T>> {
        Ok(CurveClass::new(self.matrix.mul_vec(&x.coords)?))
    }
}

/// Homology action of the Dehn twist along c: x -> x + <x, c> c
/// (Picard-Lefschetz convention; the global sign is a fixed design choice).
pub fn dehn_twist_action<T: Scalar>(
    s: &FiberSurface,
    c: &CurveClass<T>,
    x: &CurveClass<T>,
) -> Result<CurveClass<T>> {
    if !c.is_primitive() {
        return Err(Error::NotPrimitive(format!("{:?}", c.coords)));
    }
    let k = s.intersection_form(x, c)?;
    Ok(x.add_scaled(&k, c))
}

/// Inverse twist: x -> x - <x, c> c.
pub fn dehn_twist_inverse<T: Scalar>(
    s: &FiberSurface,
    c: &CurveClass<T>,
    x: &CurveClass<T>,
) -> Result<CurveClass<T>> {
    if !c.is_primitive() {
        return Err(Error::NotPrimitive(format!("{:?}", c.coords)));
    }
    let k = -s.intersection_form(x, c)?;
    Ok(x.add_scaled(&k, c))
}

/// Matrix of the twist along c, column by column.
pub fn twist_matrix<T: Scalar>(s: &FiberSurface, c: &CurveClass<T>) -> Result<IntMat<T>> {
    let n = s.h1_rank();
    let mut m = IntMat::zero(n, n);
    for j in 0..n {
        let mut e = vec![T::zero(); n];
        e[j] = T::one();
        let col = dehn_twist_action(s, c, &CurveClass::new(e))?;
        for i in 0..n {
            m[(i, j)] = col.coords[i].clone();
        }
    }
    Ok(m)
}

/// Total monodromy tau_{L_N} o ... o tau_{L_1} of the fibration.
pub fn total_monodromy<T: Scalar>(f: &Fibration<T>) -> Result<H1Automorphism<T>> {
    let n = f.fiber.h1_rank();
    let mut m = IntMat::identity(n);
    for c in &f.cycles {
        m = twist_matrix(&f.fiber, c)?.mul(&m)?;
    }
    Ok(H1Automorphism { matrix: m })
}

/// One new fiber handle plus one new vanishing cycle through it, prepended.
///
/// `new_cycle` is given in the stabilized lattice: the old coordinates
/// followed by one new coordinate, which must be +-1 (the cycle runs once
/// over the new handle). The new generator pairs to zero with everything.
pub fn stabilize<T: Scalar>(f: &Fibration<T>, new_cycle: CurveClass<T>) -> Result<Fibration<T>> {
    let n = f.fiber.h1_rank();
    if n == 0 {
        return Err(Error::InvalidStabilization(
            "disk fiber has no handle generator to cross".into(),
        ));
    }
    if new_cycle.rank() != n + 1 {
        return Err(Error::RankMismatch { expected: n + 1, got: new_cycle.rank() });
    }
    if !new_cycle.coords[n].abs().is_one() {
        return Err(Error::InvalidStabilization(
            "new cycle must cross the new handle exactly once".into(),
        ));
    }
    let fiber = FiberSurface::new(f.fiber.genus, f.fiber.boundary + 1)?;
    let mut cycles = Vec::with_capacity(f.cycles.len() + 1);
    cycles.push(new_cycle);
    for c in &f.cycles {
        let mut coords = c.coords.clone();
        coords.push(T::zero());
        cycles.push(CurveClass::new(coords));
    }
    Fibration::new(fiber, cycles)
}

/// Euler characteristic of the total space: chi(fiber) + N, one critical
/// handle per vanishing cycle on the thickened fiber.
pub fn euler_characteristic_total<T: Scalar>(f: &Fibration<T>) -> i64 {
    f.fiber.euler_characteristic() + f.cycles.len() as i64
}

/// H_1 of the total space as an abelian group: cokernel of the matrix whose
/// rows are the vanishing cycle classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup<T> {
    pub free_rank: usize,
    pub torsion: Vec<T>,
}

impl<T: Scalar> AbelianGroup<T> {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free_of_rank(&self, r: usize) -> bool {
        self.free_rank == r && self.torsion.is_empty()
    }
}

impl<T: Scalar> std::fmt::Display for AbelianGroup<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub fn h1_total_space<T: Scalar>(f: &Fibration<T>) -> Result<AbelianGroup<T>> {
    let n = f.fiber.h1_rank();
    if f.cycles.is_empty() {
        return Ok(AbelianGroup { free_rank: n, torsion: vec![] });
    }
    let m = IntMat::from_rows(f.cycles.iter().map(|c| c.coords.clone()).collect())?;
    let diag = m.smith_diagonal();
    let torsion: Vec<T> = diag.iter().filter(|d| !d.is_one()).cloned().collect();
    Ok(AbelianGroup { free_rank: n - diag.len(), torsion })
}
