//! Exact polyhedral geometry of a presentation: the `(𝒜, L)`-umbrella with its
//! facet functionals, Newton degrees, the facets of the cone `C_H` and
//! normalized lattice volumes.
//!
//! Polyhedra are handled through their homogenisation. A generator `a` with
//! weight `L_a` becomes the ray `(a, L_a)` of ℚ^{r+1} and the origin of ℚ^r
//! becomes the ray `(0, 1)`. A facet `c·x + c₀·t ≥ 0` of the resulting cone
//! with `c₀ > 0` is a facet of the umbrella with `ℓ_σ = −c / c₀`; one with
//! `c₀ = 0` passes through the origin and lies on the boundary of `C_H`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::lattice::{LatticeFrame, SemigroupPresentation};
use crate::linalg::{self, Combinations, Subspace};
use crate::{Error, Int, Rat, Result};

/// A rational weight `L_a` for every generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    weights: Vec<Rat>,
}

impl WeightVector {
    pub fn new(weights: Vec<Rat>) -> Self {
        WeightVector { weights }
    }

    pub fn ones(n: usize) -> Self {
        WeightVector { weights: vec![Rat::one(); n] }
    }

    pub fn zeros(n: usize) -> Self {
        WeightVector { weights: vec![Rat::zero(); n] }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, i: usize) -> &Rat {
        &self.weights[i]
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.weights
    }

    pub fn push(&mut self, w: Rat) {
        self.weights.push(w);
    }
}

/// A facet `σ` of the umbrella.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Facet {
    /// Indices of the generators whose lifted points lie on `σ`, ascending.
    pub members: Vec<usize>,
    /// `ℓ_σ` in ambient coordinates; `ℓ_σ(a) = L_a` on members and
    /// `ℓ_σ(a) ≤ L_a` on every generator.
    pub functional: Vec<Rat>,
}

/// A face of the umbrella, given by its generator set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub dim: usize,
    pub members: Vec<usize>,
}

/// A facet of the cone `C_H` with a functional vanishing on it and
/// nonnegative on `H`, normalised so that its first nonzero entry is `±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConeFace {
    pub members: Vec<usize>,
    pub functional: Vec<Rat>,
}

impl ConeFace {
    pub fn value(&self, h: &[Int]) -> Rat {
        linalg::dot_int(&self.functional, h)
    }
}

/// The rational cone `C_H` spanned by the generators of a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    span: Subspace,
    grading: Vec<Rat>,
    faces: Vec<ConeFace>,
}

impl Cone {
    pub fn of(p: &SemigroupPresentation) -> Self {
        Cone { span: p.span().clone(), grading: p.grading().to_vec(), faces: codim1_cone_faces(p) }
    }

    pub fn faces(&self) -> &[ConeFace] {
        &self.faces
    }

    /// Checks `h ∈ C_H`.
    pub fn check(&self, h: &[Int]) -> Result<()> {
        if h.len() != self.span.ambient {
            return Err(Error::DimensionMismatch { expected: self.span.ambient, found: h.len() });
        }
        if self.span.coords(&linalg::to_rat(h)).is_none() {
            return Err(Error::OutsideSpan);
        }
        let inside = !linalg::dot_int(&self.grading, h).is_negative()
            && self.faces.iter().all(|f| !f.value(h).is_negative());
        if inside {
            Ok(())
        } else {
            Err(Error::OutsideCone)
        }
    }

    pub fn contains(&self, h: &[Int]) -> bool {
        self.check(h).is_ok()
    }
}

/// The `(𝒜, L)`-umbrella `Φ^L_𝒜`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Umbrella {
    weights: WeightVector,
    facets: Vec<Facet>,
    faces_by_dim: Vec<Vec<Face>>,
    interior: Vec<Face>,
    cone: Cone,
    generators: usize,
}

/// Facets of the cone spanned by `points` in ℚ^dim, which must be full
/// dimensional and pointed. Each facet is returned with its member set and an
/// inward normal.
fn cone_facets(points: &[Vec<Rat>], dim: usize) -> Vec<(Vec<usize>, Vec<Rat>)> {
    let mut out: Vec<(Vec<usize>, Vec<Rat>)> = Vec::new();
    if dim == 0 {
        return out;
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for subset in Combinations::new(points.len(), dim - 1) {
        let rows: Vec<Vec<Rat>> = subset.iter().map(|&i| points[i].clone()).collect();
        let ns = linalg::nullspace(&rows, dim);
        if ns.len() != 1 {
            continue;
        }
        let mut normal = ns.into_iter().next().expect("one vector");
        let values: Vec<Rat> = points.iter().map(|p| linalg::dot(p, &normal)).collect();
        let pos = values.iter().any(Signed::is_positive);
        let neg = values.iter().any(Signed::is_negative);
        if pos && neg {
            continue;
        }
        if neg {
            for c in normal.iter_mut() {
                *c = -c.clone();
            }
        }
        let members: Vec<usize> = (0..points.len()).filter(|&i| values[i].is_zero()).collect();
        if seen.insert(members.clone()) {
            out.push((members, normal));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn normalise_leading(v: &mut [Rat]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).map(Signed::abs) {
        for x in v.iter_mut() {
            *x = &*x / &lead;
        }
    }
}

fn rank_of(p: &[Vec<Rat>], members: &[usize], dim: usize) -> usize {
    let rows: Vec<Vec<Rat>> = members.iter().map(|&i| p[i].clone()).collect();
    linalg::rank(&rows, dim)
}

/// Computes `Φ^L_𝒜` with its facet functionals, all faces and the interior
/// faces.
pub fn umbrella(p: &SemigroupPresentation, l: &WeightVector) -> Result<Umbrella> {
    let n = p.len();
    if l.len() != n {
        return Err(Error::WeightLength { expected: n, found: l.len() });
    }
    let r = p.rank();
    if r == 0 {
        return Err(Error::RankDeficient(String::from("the generators span no space")));
    }
    let coords = p.generator_coords();
    let mut lifted: Vec<Vec<Rat>> = coords
        .iter()
        .zip(l.as_slice())
        .map(|(c, w)| {
            let mut v = c.clone();
            v.push(w.clone());
            v
        })
        .collect();
    let mut apex = vec![Rat::zero(); r];
    apex.push(Rat::one());
    lifted.push(apex);

    let span = p.span();
    let mut facets = Vec::new();
    let mut boundary_sets: Vec<Vec<usize>> = Vec::new();
    let mut all_sets: Vec<Vec<usize>> = Vec::new();
    for (members, normal) in cone_facets(&lifted, r + 1) {
        let c0 = normal[r].clone();
        all_sets.push(members.clone());
        if c0.is_zero() {
            boundary_sets.push(members);
        } else {
            let ell: Vec<Rat> = normal[..r].iter().map(|c| -c / &c0).collect();
            facets.push(Facet { members, functional: span.lift_functional(&ell) });
        }
    }

    // Close the facet member sets under intersection.
    let mut closure: BTreeSet<Vec<usize>> = all_sets.iter().cloned().collect();
    let mut frontier: Vec<Vec<usize>> = all_sets.clone();
    while let Some(f) = frontier.pop() {
        for g in &all_sets {
            let meet: Vec<usize> = f.iter().copied().filter(|x| g.contains(x)).collect();
            if closure.insert(meet.clone()) {
                frontier.push(meet);
            }
        }
    }
    let mut faces_by_dim: Vec<Vec<Face>> = vec![Vec::new(); r];
    let mut interior = Vec::new();
    for members in closure {
        if members.is_empty() || members.contains(&n) {
            continue;
        }
        let dim = rank_of(&lifted, &members, r + 1) - 1;
        let face = Face { dim, members };
        if !boundary_sets.iter().any(|b| face.members.iter().all(|m| b.contains(m))) {
            interior.push(face.clone());
        }
        faces_by_dim[dim].push(face);
    }
    for level in faces_by_dim.iter_mut() {
        level.sort();
    }
    interior.sort();

    Ok(Umbrella {
        weights: l.clone(),
        facets,
        faces_by_dim,
        interior,
        cone: Cone::of(p),
        generators: n,
    })
}

impl Umbrella {
    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// `Φ^{L,k}`: the faces of dimension `k`.
    pub fn faces(&self, k: usize) -> &[Face] {
        self.faces_by_dim.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn faces_by_dim(&self) -> &[Vec<Face>] {
        &self.faces_by_dim
    }

    /// Faces not contained in any facet of the polytope through the origin.
    pub fn interior_faces(&self) -> &[Face] {
        &self.interior
    }

    /// Facets of `C_H`.
    pub fn cone_faces(&self) -> &[ConeFace] {
        self.cone.faces()
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn is_face(&self, members: &[usize]) -> bool {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        self.faces_by_dim.iter().flatten().any(|f| f.members == sorted)
    }

    /// `deg(h) = max_σ ℓ_σ(h)` for `h ∈ C_H`.
    pub fn degree(&self, h: &[Int]) -> Result<Rat> {
        self.cone.check(h)?;
        Ok(self
            .facets
            .iter()
            .map(|f| linalg::dot_int(&f.functional, h))
            .max()
            .unwrap_or_else(Rat::zero))
    }

    /// Indices of the facets `σ` with `ℓ_σ(h) = deg(h)`.
    pub fn facet_cones_containing(&self, h: &[Int]) -> Result<Vec<usize>> {
        let d = self.degree(h)?;
        Ok((0..self.facets.len())
            .filter(|&i| linalg::dot_int(&self.facets[i].functional, h) == d)
            .collect())
    }

    /// True when `h` and `h'` lie in a common facet cone.
    pub fn cofacial(&self, h: &[Int], h2: &[Int]) -> Result<bool> {
        let a = self.facet_cones_containing(h)?;
        let b = self.facet_cones_containing(h2)?;
        Ok(a.iter().any(|x| b.contains(x)))
    }
}

/// Newton degree of `h` with respect to the umbrella.
pub fn newton_degree(h: &[Int], u: &Umbrella) -> Result<Rat> {
    u.degree(h)
}

pub fn facet_cones_containing(h: &[Int], u: &Umbrella) -> Result<Vec<usize>> {
    u.facet_cones_containing(h)
}

/// The facets of `C_H`, in ascending order of member sets.
pub fn codim1_cone_faces(p: &SemigroupPresentation) -> Vec<ConeFace> {
    let r = p.rank();
    if r < 2 {
        return Vec::new();
    }
    let coords = p.generator_coords();
    cone_facets(&coords, r)
        .into_iter()
        .map(|(members, normal)| {
            let mut functional = p.span().lift_functional(&normal);
            normalise_leading(&mut functional);
            ConeFace { members, functional }
        })
        .collect()
}

fn orientation(base: &[Vec<Int>], x: &[Int]) -> Int {
    let o = &base[0];
    let mut m: Vec<Vec<Int>> =
        base[1..].iter().map(|b| b.iter().zip(o).map(|(u, v)| u - v).collect()).collect();
    m.push(x.iter().zip(o).map(|(u, v)| u - v).collect());
    linalg::det_int(&m)
}

/// Normalized volume of the convex hull of `points`, measured in the affine
/// lattice they generate.
pub fn normalized_volume(points: &[Vec<Int>]) -> Result<Int> {
    let first = points.first().ok_or(Error::EmptyMatrix)?;
    let diffs: Vec<Vec<Int>> =
        points.iter().map(|q| q.iter().zip(first).map(|(a, b)| a - b).collect()).collect();
    let linear = linalg::rank(&points.iter().map(|q| linalg::to_rat(q)).collect::<Vec<_>>(), first.len());
    let nonzero: Vec<Vec<Int>> = diffs.iter().filter(|v| v.iter().any(|x| !x.is_zero())).cloned().collect();
    if nonzero.is_empty() {
        return Err(Error::RankDeficient(String::from("the points are all equal")));
    }
    let frame = LatticeFrame::generated_by(&nonzero)?;
    let k = frame.rank();
    if k < linear {
        return Err(Error::RankDeficient(String::from(
            "the points lie on an affine hyperplane missing the origin of their span",
        )));
    }
    let pts: Vec<Vec<Int>> = diffs
        .iter()
        .map(|v| frame.coordinates(v).ok_or_else(|| Error::Invariant(String::from("difference outside its lattice"))))
        .collect::<Result<_>>()?;

    // Greedy initial simplex.
    let mut chosen = vec![0usize];
    for i in 1..pts.len() {
        if chosen.len() == k + 1 {
            break;
        }
        let mut rows: Vec<Vec<Rat>> = chosen[1..].iter().map(|&j| linalg::to_rat(&pts[j])).collect();
        rows.push(linalg::to_rat(&pts[i]));
        if linalg::rank(&rows, k) == rows.len() {
            chosen.push(i);
        }
    }
    let simplex_points = |idx: &[usize]| -> Vec<Vec<Int>> { idx.iter().map(|&i| pts[i].clone()).collect() };
    let mut volume = orientation(&simplex_points(&chosen[..k]), &pts[chosen[k]]).abs();
    // Boundary facets with the vertex opposite to them in their simplex.
    let mut boundary: Vec<(Vec<usize>, usize)> = (0..=k)
        .map(|skip| {
            let facet: Vec<usize> = chosen.iter().enumerate().filter(|&(t, _)| t != skip).map(|(_, &v)| v).collect();
            (facet, chosen[skip])
        })
        .collect();
    for q in 0..pts.len() {
        if chosen.contains(&q) {
            continue;
        }
        let mut visible = Vec::new();
        let mut kept = Vec::new();
        for (facet, opp) in boundary {
            let base = simplex_points(&facet);
            let side_q = orientation(&base, &pts[q]);
            let side_o = orientation(&base, &pts[opp]);
            if !side_q.is_zero() && side_q.is_positive() != side_o.is_positive() {
                volume += side_q.abs();
                visible.push(facet);
            } else {
                kept.push((facet, opp));
            }
        }
        if visible.is_empty() {
            boundary = kept;
            continue;
        }
        let mut ridges: Vec<(Vec<usize>, usize)> = Vec::new();
        for facet in &visible {
            for skip in 0..facet.len() {
                let mut ridge: Vec<usize> = facet.iter().enumerate().filter(|&(t, _)| t != skip).map(|(_, &v)| v).collect();
                ridge.sort_unstable();
                if let Some(pos) = ridges.iter().position(|(r, _)| *r == ridge) {
                    ridges.remove(pos);
                } else {
                    ridges.push((ridge, facet[skip]));
                }
            }
        }
        for (mut ridge, opp) in ridges {
            ridge.push(q);
            kept.push((ridge, opp));
        }
        boundary = kept;
    }
    Ok(volume)
}
