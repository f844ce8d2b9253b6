//! Symbolic algebra of coupled Weinstein handles in any even dimension:
//! a 2n-dimensional ambient k-handle optionally carrying an n-dimensional
//! Lagrangian l-handle, and the three-handle expansion that makes a coupled
//! handle Lefschetz-compatible.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoupledHandle {
    /// ambient dimension 2n
    pub ambient_dim: usize,
    /// ambient index k, 0 <= k <= n
    pub ambient_index: usize,
    /// Lagrangian index l, 0 <= l <= k; absent = trivial coupled handle
    pub lagrangian_index: Option<usize>,
}

impl CoupledHandle {
    pub fn new(ambient_dim: usize, ambient_index: usize, lagrangian_index: Option<usize>) -> Result<Self> {
        if ambient_dim == 0 || ambient_dim % 2 != 0 {
            return Err(Error::InvalidHandle(format!("ambient dimension {ambient_dim} must be even and positive")));
        }
        let n = ambient_dim / 2;
        if ambient_index > n {
            return Err(Error::InvalidHandle(format!("ambient index {ambient_index} exceeds {n}")));
        }
        if let Some(l) = lagrangian_index {
            if l > ambient_index {
                return Err(Error::InvalidHandle(format!("Lagrangian index {l} exceeds ambient index {ambient_index}")));
            }
        }
        Ok(CoupledHandle { ambient_dim, ambient_index, lagrangian_index })
    }

    pub fn trivial(ambient_dim: usize, ambient_index: usize) -> Result<Self> {
        Self::new(ambient_dim, ambient_index, None)
    }

    pub fn half_dim(&self) -> usize {
        self.ambient_dim / 2
    }

    /// Expansion into coupled Lefschetz form:
    /// (h_l, 0) u (h_{n-1}, 0) u (h_n, h_l^n) for subcritical l, the handle
    /// itself when l = n, an error for trivial handles.
    pub fn expand_to_lefschetz(&self) -> Result<HandleWord> {
        let l = self.lagrangian_index.ok_or(Error::NotACoupledHandle)?;
        let n = self.half_dim();
        if l == n {
            // a critical coupled handle is already a coupled Lefschetz handle
            return HandleWord::new(vec![*self]);
        }
        HandleWord::new(vec![
            CoupledHandle::new(self.ambient_dim, l, None)?,
            CoupledHandle::new(self.ambient_dim, n - 1, None)?,
            CoupledHandle::new(self.ambient_dim, n, Some(l))?,
        ])
    }
}

/// An ordered list of coupled handles of equal ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleWord {
    handles: Vec<CoupledHandle>,
}

impl HandleWord {
    pub fn new(handles: Vec<CoupledHandle>) -> Result<Self> {
        if let Some(first) = handles.first() {
            if handles.iter().any(|h| h.ambient_dim != first.ambient_dim) {
                return Err(Error::InvalidHandle("mixed ambient dimensions in handle word".into()));
            }
        }
        Ok(HandleWord { handles })
    }

    pub fn handles(&self) -> &[CoupledHandle] {
        &self.handles
    }

    /// Alternating-sum bookkeeping: (ambient chi contribution, Lagrangian chi
    /// contribution over the present Lagrangian handles).
    pub fn euler_characteristics(&self) -> (i64, i64) {
        let ambient = self
            .handles
            .iter()
            .map(|h| if h.ambient_index % 2 == 0 { 1 } else { -1 })
            .sum();
        let lagrangian = self
            .handles
            .iter()
            .filter_map(|h| h.lagrangian_index)
            .map(|l| if l % 2 == 0 { 1 } else { -1 })
            .sum();
        (ambient, lagrangian)
    }
}

/// Efficiency of a Morse function given by its list of Lagrangian handle
/// indices on a manifold of dimension `dim`: no index-0 точка when the lower
/// boundary is nonempty and exactly one when it is empty, and symmetrically
/// at the top index.
pub fn validate_efficient(
    indices: &[usize],
    dim: usize,
    has_lower_boundary: bool,
    has_upper_boundary: bool,
) -> bool {
    if indices.iter().any(|&i| i > dim) {
        return false;
    }
    let zeros = indices.iter().filter(|&&i| i == 0).count();
    let tops = indices.iter().filter(|&&i| i == dim).count();
    let want_zeros = if has_lower_boundary { 0 } else { 1 };
    let want_tops = if has_upper_boundary { 0 } else { 1 };
    zeros == want_zeros && tops == want_tops
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(dim: usize, k: usize, l: Option<usize>) -> CoupledHandle {
        CoupledHandle::new(dim, k, l).unwrap()
    }

    #[test]
    fn expansion_dim4_subcritical() {
        let w = h(4, 1, Some(1)).expand_to_lefschetz().unwrap();
        assert_eq!(
            w.handles(),
            &[h(4, 1, None), h(4, 1, None), h(4, 2, Some(1))]
        );
    }

    #[test]
    fn expansion_dim4_critical_is_identity() {
        let c = h(4, 2, Some(2));
        let w = c.expand_to_lefschetz().unwrap();
        assert_eq!(w.handles(), &[c]);
    }

    #[test]
    fn expansion_dim6() {
        let w = h(6, 0, Some(0)).expand_to_lefschetz().unwrap();
        assert_eq!(
            w.handles(),
            &[h(6, 0, None), h(6, 2, None), h(6, 3, Some(0))]
        );
    }

    #[test]
    fn trivial_handle_does_not_expand() {
        assert!(matches!(
            h(4, 1, None).expand_to_lefschetz(),
            Err(Error::NotACoupledHandle)
        ));
    }

    #[test]
    fn euler_bookkeeping() {
        let w = HandleWord::new(vec![h(4, 0, Some(0))]).unwrap();
        assert_eq!(w.euler_characteristics(), (1, 1));

        let w = h(4, 1, Some(1)).expand_to_lefschetz().unwrap();
        assert_eq!(w.euler_characteristics(), (-1, -1));

        // second decomposition of D*S^2: (h0,0)(h1,0)(h2,K)(h2,C)
        let w = HandleWord::new(vec![
            h(4, 0, None),
            h(4, 1, None),
            h(4, 2, Some(0)),
            h(4, 2, Some(2)),
        ])
        .unwrap();
        assert_eq!(w.euler_characteristics(), (2, 2));
    }

    #[test]
    fn expansion_preserves_euler() {
        for dim in [4usize, 6, 8] {
            let n = dim / 2;
            for k in 0..=n {
                for l in 0..=k {
                    let c = h(dim, k, Some(l));
                    let before = HandleWord::new(vec![c]).unwrap().euler_characteristics();
                    let after = c.expand_to_lefschetz().unwrap().euler_characteristics();
                    if l == n {
                        assert_eq!(before, after);
                    } else {
                        // ambient: (-1)^l + (-1)^{n-1} + (-1)^n = (-1)^l
                        assert_eq!(before, after, "dim {dim} k {k} l {l}");
                    }
                }
            }
        }
    }

    #[test]
    fn efficiency() {
        assert!(validate_efficient(&[0, 1, 1], 2, false, true));
        assert!(!validate_efficient(&[0, 0, 1], 2, false, true));
        assert!(validate_efficient(&[0, 1, 1, 2], 2, false, false));
        assert!(!validate_efficient(&[0, 3], 2, false, true));
    }
}
