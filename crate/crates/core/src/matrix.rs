//! Dense integer matrices: products, determinants, Smith normal form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> IntMat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::RankMismatch { expected: c, got: 0 });
        }
        Ok(IntMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::RankMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a.clone() * other[(k, j)].clone();
                    out[(i, j)] += add;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if self.cols != v.len() {
            return Err(Error::RankMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Fraction-free (Bareiss) determinant. Exact over any `Scalar`.
    pub fn det(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::RankMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.data.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[idx(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[idx(i, k)].is_zero()) {
                    Some(p) => {
                        for j in 0..n {
                            m.swap(idx(k, j), idx(p, j));
                        }
                        sign = -sign;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[idx(i, j)].clone() * m[idx(k, k)].clone()
                        - m[idx(i, k)].clone() * m[idx(k, j)].clone();
                    m[idx(i, j)] = num / prev.clone();
                }
            }
            prev = m[idx(k, k)].clone();
        }
        Ok(sign * m[idx(n - 1, n - 1)].clone())
    }

    /// Diagonal of the Smith normal form: non-negative, each dividing the next.
    pub fn smith_diagonal(&self) -> Vec<T> {
        let mut m = self.rows_vec();
        let rows = self.rows;
        let cols = self.cols;
        let n = rows.min(cols);
        let mut diag = Vec::with_capacity(n);
        let mut t = 0;
        while t < n {
            // find a nonzero pivot of minimal absolute value in the lower-right block
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !m[i][j].is_zero()
                        && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            // clear row and column t; restart when a remainder shrinks the pivot
            loop {
                let mut clean = true;
                for i in t + 1..rows {
                    if !m[i][t].is_zero() {
                        let q = m[i][t].clone().div_floor(&m[t][t]);
                        for j in t..cols {
                            let sub = q.clone() * m[t][j].clone();
                            m[i][j] = m[i][j].clone() - sub;
                        }
                        if !m[i][t].is_zero() {
                            m.swap(t, i);
                            clean = false;
                        }
                    }
                }
                for j in t + 1..cols {
                    if !m[t][j].is_zero() {
                        let q = m[t][j].clone().div_floor(&m[t][t]);
                        for row in m.iter_mut().take(rows).skip(t) {
                            let sub = q.clone() * row[t].clone();
                            row[j] = row[j].clone() - sub;
                        }
                        if !m[t][j].is_zero() {
                            for row in m.iter_mut() {
                                row.swap(t, j);
                            }
                            clean = false;
                        }
                    }
                }
                if clean {
                    break;
                }
            }
            // divisibility: fold any non-divisible entry into column t and retry
            let mut redo = false;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(m[i][j].clone() % m[t][t].clone()).is_zero() {
                        for jj in t..cols {
                            let add = m[i][jj].clone();
                            m[t][jj] = m[t][jj].clone() + add;
                        }
                        redo = true;
                        break 'scan;
                    }
                }
            }
            if redo {
                continue;
            }
            diag.push(m[t][t].abs());
            t += 1;
        }
        diag
    }
}

impl<T> std::ops::Index<(usize, usize)> for IntMat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for IntMat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = IntMat<i64>;

    #[test]
    fn det_small() {
        let m = M::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.det().unwrap(), -2);
        assert_eq!(M::identity(5).det().unwrap(), 1);
        let s = M::from_rows(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        assert_eq!(s.det().unwrap(), 1);
    }

    #[test]
    fn det_singular() {
        let m = M::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]).unwrap();
        assert_eq!(m.det().unwrap(), 0);
    }

    #[test]
    fn smith_basic() {
        let m = M::from_rows(vec![vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(m.smith_diagonal(), vec![1, 6]);
        let m = M::from_rows(vec![vec![2, 0]]).unwrap();
        assert_eq!(m.smith_diagonal(), vec![2]);
    }

    #[test]
    fn smith_known() {
        // classical example with invariant factors 1, 3, 21
        let m = M::from_rows(vec![
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ])
        .unwrap();
        assert_eq!(m.smith_diagonal(), vec![1, 3, 21]);
    }

    #[test]
    fn smith_divisibility_chain() {
        let m = M::from_rows(vec![vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]).unwrap();
        let d = m.smith_diagonal();
        for w in d.windows(2) {
            assert_eq!(w[1] % w[0], 0, "diag {:?}", d);
        }
        assert_eq!(d.iter().product::<i64>(), 240);
    }
}
