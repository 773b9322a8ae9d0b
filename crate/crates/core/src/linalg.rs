//! Exact linear algebra over ℚ and a few integer helpers shared by the
//! lattice and geometry modules.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::{Int, Rat};

pub(crate) fn to_rat(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

pub(crate) fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub(crate) fn dot_int(a: &[Rat], b: &[Int]) -> Rat {
    a.iter()
        .zip(b)
        .fold(Rat::zero(), |acc, (x, y)| acc + x * Rat::from_integer(y.clone()))
}

/// Reduced row echelon form. Zero rows are dropped; returns the rows together
/// with their pivot columns.
pub(crate) fn rref(mut rows: Vec<Vec<Rat>>, ncols: usize) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub(crate) fn rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
    rref(rows.to_vec(), ncols).1.len()
}

/// Basis of `{x : rows · x = 0}`.
pub(crate) fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let (red, pivots) = rref(rows.to_vec(), ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &p) in red.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Some solution of `rows · x = rhs`, or `None` when the system is inconsistent.
pub(crate) fn solve(rows: &[Vec<Rat>], rhs: &[Rat], ncols: usize) -> Option<Vec<Rat>> {
    let aug: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (row, &p) in red.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub(crate) fn det_int(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Int::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// The linear span of a family of rational vectors, kept in reduced row
/// echelon form so that coordinates are read off the pivot entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Subspace {
    pub basis: Vec<Vec<Rat>>,
    pub pivots: Vec<usize>,
    pub ambient: usize,
}

impl Subspace {
    pub fn spanned_by(vectors: &[Vec<Rat>], ambient: usize) -> Self {
        let (basis, pivots) = rref(vectors.to_vec(), ambient);
        Subspace { basis, pivots, ambient }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Coordinates with respect to the echelon basis, or `None` outside the span.
    pub fn coords(&self, x: &[Rat]) -> Option<Vec<Rat>> {
        if x.len() != self.ambient {
            return None;
        }
        let c: Vec<Rat> = self.pivots.iter().map(|&p| x[p].clone()).collect();
        let mut y = vec![Rat::zero(); self.ambient];
        for (ci, row) in c.iter().zip(&self.basis) {
            for (yj, rj) in y.iter_mut().zip(row) {
                *yj += ci * rj;
            }
        }
        (y.as_slice() == x).then_some(c)
    }

    /// Extends a functional given in span coordinates to the ambient space.
    pub fn lift_functional(&self, f: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.ambient];
        for (&p, v) in self.pivots.iter().zip(f) {
            out[p] = v.clone();
        }
        out
    }
}

/// Lexicographic enumeration of the `k`-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn combinations_count() {
        assert_eq!(Combinations::new(5, 2).count(), 10);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m: Vec<Vec<Int>> = [[2, -1, 3], [0, 4, 1], [5, 2, -2]]
            .iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect();
        // 2(−8−2) + 1(0−5) + 3(0−20) = −85
        assert_eq!(det_int(&m), Int::from(-85));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let rows = vec![vec![r(1), r(2), r(0)], vec![r(0), r(2), r(1)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for row in &rows {
            assert!(dot(row, &ns[0]).is_zero());
        }
    }

    #[test]
    fn subspace_coordinates_roundtrip() {
        let s = Subspace::spanned_by(&[vec![r(1), r(1), r(0)], vec![r(1), r(3), r(0)]], 3);
        assert_eq!(s.dim(), 2);
        assert!(s.coords(&[r(2), r(5), r(0)]).is_some());
        assert!(s.coords(&[r(0), r(0), r(1)]).is_none());
    }
}
