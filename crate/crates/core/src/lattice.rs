//! Integer linear algebra for generator matrices: Hermite normal form,
//! saturated kernels, maximal minors and positive gradings.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use alloc::format;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Combinations, Subspace};
use crate::{Error, Int, Rat, Result};

/// Dense matrix of arbitrary precision integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Int>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Int>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    /// Builds the `d × n` matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Int>]) -> Result<Self> {
        Ok(Self::from_rows(columns)?.transpose())
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let rows: Vec<Vec<Int>> =
            rows.iter().map(|r| r.as_ref().iter().map(|&x| Int::from(x)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Int]) -> Result<Vec<Int>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Int::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }

    pub fn determinant(&self) -> Result<Int> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        Ok(linalg::det_int(&self.row_vecs()))
    }

    pub fn rank(&self) -> usize {
        let (h, _) = hermite_normal_form(self);
        (0..h.rows).take_while(|&i| h.row(i).iter().any(|x| !x.is_zero())).count()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Replaces rows `a`, `b` by `(x·a + y·b, u·a + v·b)`.
    fn combine_rows(&mut self, a: usize, b: usize, x: &Int, y: &Int, u: &Int, v: &Int) {
        for j in 0..self.cols {
            let ra = self.get(a, j).clone();
            let rb = self.get(b, j).clone();
            self.set(a, j, x * &ra + y * &rb);
            self.set(b, j, u * &ra + v * &rb);
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Int) {
        for j in 0..self.cols {
            let v = self.get(target, j) + factor * self.get(source, j);
            self.set(target, j, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

/// Row Hermite normal form. Returns `(H, U)` with `U` unimodular and
/// `U · M = H`; pivots of `H` are positive, entries above a pivot are reduced
/// into `[0, pivot)`, and zero rows come last.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut pr = 0;
    for c in 0..h.cols {
        if pr == h.rows {
            break;
        }
        if h.get(pr, c).is_zero() {
            if let Some(p) = (pr + 1..h.rows).find(|&i| !h.get(i, c).is_zero()) {
                h.swap_rows(pr, p);
                u.swap_rows(pr, p);
            } else {
                continue;
            }
        }
        for i in pr + 1..h.rows {
            if h.get(i, c).is_zero() {
                continue;
            }
            let a = h.get(pr, c).clone();
            let b = h.get(i, c).clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let ua = -(&b / &g);
            let va = &a / &g;
            h.combine_rows(pr, i, &x, &y, &ua, &va);
            u.combine_rows(pr, i, &x, &y, &ua, &va);
        }
        if h.get(pr, c).is_negative() {
            h.negate_row(pr);
            u.negate_row(pr);
        }
        let piv = h.get(pr, c).clone();
        for i in 0..pr {
            let q = -h.get(i, c).div_floor(&piv);
            if !q.is_zero() {
                h.add_row_multiple(i, pr, &q);
                u.add_row_multiple(i, pr, &q);
            }
        }
        pr += 1;
    }
    (h, u)
}

fn l1(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |acc, x| acc + x.abs())
}

/// A ℤ-basis of `{u ∈ ℤ^n : A·u = 0}`.
///
/// The basis is read off the transformation matrix of the Hermite form of
/// `Aᵀ`, so it spans the full kernel lattice rather than a finite index
/// sublattice. It is then brought to Hermite form and greedily shortened in
/// the 1-norm so that the resulting binomials stay small.
pub fn kernel_lattice(a: &IntMatrix) -> Vec<Vec<Int>> {
    let (h, u) = hermite_normal_form(&a.transpose());
    let rank = (0..h.rows()).take_while(|&i| h.row(i).iter().any(|x| !x.is_zero())).count();
    if rank == u.rows() {
        return Vec::new();
    }
    let raw: Vec<Vec<Int>> = (rank..u.rows()).map(|i| u.row(i).to_vec()).collect();
    let (canon, _) = hermite_normal_form(&IntMatrix::from_rows(&raw).expect("nonempty kernel"));
    let mut basis = canon.row_vecs();
    loop {
        let mut improved = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                for sign in [Int::one(), -Int::one()] {
                    let cand: Vec<Int> =
                        basis[i].iter().zip(&basis[j]).map(|(x, y)| x - &sign * y).collect();
                    if l1(&cand) < l1(&basis[i]) {
                        basis[i] = cand;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            break;
        }
    }
    for v in basis.iter_mut() {
        if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    basis
}

/// A ℤ-basis of the group `ℤH` generated by a set of integer vectors, in
/// Hermite form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFrame {
    basis: Vec<Vec<Int>>,
    pivots: Vec<usize>,
}

impl LatticeFrame {
    pub fn generated_by(vectors: &[Vec<Int>]) -> Result<Self> {
        let m = IntMatrix::from_rows(vectors)?;
        let (h, _) = hermite_normal_form(&m);
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        for i in 0..h.rows() {
            match h.row(i).iter().position(|x| !x.is_zero()) {
                Some(p) => {
                    basis.push(h.row(i).to_vec());
                    pivots.push(p);
                }
                None => break,
            }
        }
        Ok(LatticeFrame { basis, pivots })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Int>] {
        &self.basis
    }

    /// Integer coordinates of `x` in the frame, or `None` if `x ∉ ℤH`.
    pub fn coordinates(&self, x: &[Int]) -> Option<Vec<Int>> {
        let d = self.basis.first().map_or(0, Vec::len);
        if x.len() != d {
            return None;
        }
        let mut c: Vec<Int> = Vec::with_capacity(self.rank());
        for (k, &p) in self.pivots.iter().enumerate() {
            let partial = (0..k).fold(Int::zero(), |acc, j| acc + &c[j] * &self.basis[j][p]);
            let (q, r) = (&x[p] - partial).div_rem(&self.basis[k][p]);
            if !r.is_zero() {
                return None;
            }
            c.push(q);
        }
        (self.embed(&c) == x).then_some(c)
    }

    /// The ambient vector with the given frame coordinates.
    pub fn embed(&self, c: &[Int]) -> Vec<Int> {
        let d = self.basis.first().map_or(0, Vec::len);
        let mut out = vec![Int::zero(); d];
        for (ck, row) in c.iter().zip(&self.basis) {
            for (o, b) in out.iter_mut().zip(row) {
                *o += ck * b;
            }
        }
        out
    }
}

/// Largest absolute value of a maximal minor of `A`, with the columns
/// written in a ℤ-basis of the group they generate.
pub fn max_minor_bound(a: &IntMatrix) -> Result<Int> {
    let cols = a.columns();
    let frame = LatticeFrame::generated_by(&cols)?;
    let r = frame.rank();
    if r == 0 {
        return Err(Error::RankDeficient(String::from("all maximal minors vanish")));
    }
    let coords: Vec<Vec<Int>> = cols
        .iter()
        .map(|c| frame.coordinates(c).ok_or_else(|| Error::Invariant(format!("column {c:?} outside its own lattice"))))
        .collect::<Result<_>>()?;
    let mut best = Int::zero();
    for subset in Combinations::new(coords.len(), r) {
        let m: Vec<Vec<Int>> =
            (0..r).map(|i| subset.iter().map(|&j| coords[j][i].clone()).collect()).collect();
        let d = linalg::det_int(&m).abs();
        if d > best {
            best = d;
        }
    }
    if best.is_zero() {
        return Err(Error::RankDeficient(String::from("all maximal minors vanish")));
    }
    Ok(best)
}

/// Finds the functional `ℓ` on `ℚH` minimising `Σ ℓ(aⱼ)` subject to
/// `ℓ(aⱼ) ≥ 1` for every generator, by enumerating the vertices of the
/// feasible region. Returns span coordinates.
fn minimal_grading(points: &[Vec<Rat>], r: usize) -> Option<Vec<Rat>> {
    let one = Rat::one();
    let mut best: Option<(Rat, Vec<Rat>)> = None;
    for subset in Combinations::new(points.len(), r) {
        let rows: Vec<Vec<Rat>> = subset.iter().map(|&j| points[j].clone()).collect();
        if linalg::rank(&rows, r) < r {
            continue;
        }
        let Some(l) = linalg::solve(&rows, &vec![one.clone(); r], r) else { continue };
        let values: Vec<Rat> = points.iter().map(|p| linalg::dot(p, &l)).collect();
        if values.iter().any(|v| v < &one) {
            continue;
        }
        let total = values.into_iter().fold(Rat::zero(), |a, b| a + b);
        if best.as_ref().is_none_or(|(t, _)| &total < t) {
            best = Some((total, l));
        }
    }
    best.map(|(_, l)| l)
}

/// Generators of a positive affine semigroup `H = ℕ𝒜 ⊆ ℤ^d`, the columns of a
/// `d × n` integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupPresentation {
    generators: IntMatrix,
    columns: Vec<Vec<Int>>,
    rank: usize,
    labels: Option<Vec<String>>,
    span: Subspace,
    lattice: LatticeFrame,
    grading: Vec<Rat>,
}

impl SemigroupPresentation {
    /// Validates the generator matrix: no zero or repeated column, and some
    /// functional positive on every column.
    pub fn new(generators: IntMatrix) -> Result<Self> {
        let columns = generators.columns();
        for (j, c) in columns.iter().enumerate() {
            if c.iter().all(Zero::is_zero) {
                return Err(Error::ZeroGenerator(j));
            }
            if let Some(i) = columns[..j].iter().position(|o| o == c) {
                return Err(Error::DuplicateGenerator(i, j));
            }
        }
        let d = generators.rows();
        let rat_cols: Vec<Vec<Rat>> = columns.iter().map(|c| linalg::to_rat(c)).collect();
        let span = Subspace::spanned_by(&rat_cols, d);
        let rank = span.dim();
        let lattice = LatticeFrame::generated_by(&columns)?;
        let points: Vec<Vec<Rat>> =
            rat_cols.iter().map(|c| span.coords(c).expect("column in its own span")).collect();
        let grading = minimal_grading(&points, rank).ok_or(Error::NotPositive)?;
        let grading = span.lift_functional(&grading);
        Ok(SemigroupPresentation { generators, columns, rank, labels: None, span, lattice, grading })
    }

    pub fn from_columns(columns: &[Vec<Int>]) -> Result<Self> {
        Self::new(IntMatrix::from_columns(columns)?)
    }

    pub fn from_i64_columns<C: AsRef<[i64]>>(columns: &[C]) -> Result<Self> {
        let cols: Vec<Vec<Int>> =
            columns.iter().map(|c| c.as_ref().iter().map(|&x| Int::from(x)).collect()).collect();
        Self::from_columns(&cols)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.generators
    }

    /// Ambient dimension `d`.
    pub fn dim(&self) -> usize {
        self.generators.rows()
    }

    /// Number of generators `n`.
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generator(&self, j: usize) -> &[Int] {
        &self.columns[j]
    }

    pub fn generators(&self) -> &[Vec<Int>] {
        &self.columns
    }

    pub fn lattice(&self) -> &LatticeFrame {
        &self.lattice
    }

    pub(crate) fn span(&self) -> &Subspace {
        &self.span
    }

    pub(crate) fn generator_coords(&self) -> Vec<Vec<Rat>> {
        self.columns.iter().map(|c| self.span.coords(&linalg::to_rat(c)).expect("in span")).collect()
    }

    /// The positivity certificate found at construction.
    pub fn grading(&self) -> &[Rat] {
        &self.grading
    }

    /// Value of the positive grading on `h`.
    pub fn level(&self, h: &[Int]) -> Rat {
        linalg::dot_int(&self.grading, h)
    }

    pub fn max_level(&self) -> Rat {
        self.columns.iter().map(|c| self.level(c)).max().expect("nonempty")
    }

    /// The presentation on the selected columns, in the given order.
    pub fn sub_presentation(&self, indices: &[usize]) -> Result<Self> {
        let cols: Vec<Vec<Int>> = indices.iter().map(|&j| self.columns[j].clone()).collect();
        Self::from_columns(&cols)
    }

    /// A new presentation with one more column appended.
    pub fn with_generator(&self, g: Vec<Int>) -> Result<Self> {
        let mut cols = self.columns.clone();
        cols.push(g);
        let mut p = Self::from_columns(&cols)?;
        if let Some(l) = &self.labels {
            let mut l = l.clone();
            l.push(format!("a{}", cols.len()));
            p.labels = Some(l);
        }
        Ok(p)
    }

    pub fn max_minor_bound(&self) -> Int {
        max_minor_bound(&self.generators).expect("a valid presentation has a nonzero maximal minor")
    }
}

/// A rational functional, positive on every generator.
///
/// Among all functionals with `ℓ(a) ≥ 1` on the generators, the one with the
/// least total `Σ ℓ(a)` is chosen (first vertex in lexicographic subset
/// order on ties), so that projective presentations get `ℓ ≡ 1`.
pub fn positive_grading(p: &SemigroupPresentation) -> Vec<Rat> {
    p.grading.clone()
}
