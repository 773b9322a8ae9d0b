//! Decision procedures on `H = ℕ𝒜`: membership, bounded search for
//! elements of `H̄`, face semigroups `H_τ = H ∩ C_τ` and the resulting
//! necessary Cohen–Macaulay test.
//!
//! Every search is cut off by the level of the positive grading fixed by the
//! presentation. Verdicts that depend on such a cutoff carry it.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::geometry::{codim1_cone_faces, Cone, ConeFace};
use crate::lattice::SemigroupPresentation;
use crate::linalg;
use crate::{Error, Int, Rat, Result};

fn add(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// The monoid generated by a finite set of vectors, with a grading positive
/// on every generator and a memoised membership test.
#[derive(Debug, Clone)]
pub struct Monoid {
    gens: Vec<Vec<Int>>,
    grading: Vec<Rat>,
    cone: Cone,
    memo: BTreeMap<Vec<Int>, bool>,
}

impl Monoid {
    pub fn new(gens: Vec<Vec<Int>>, grading: Vec<Rat>) -> Result<Self> {
        if gens.iter().any(|g| !linalg::dot_int(&grading, g).is_positive()) {
            return Err(Error::NotPositive);
        }
        let mut distinct = gens.clone();
        distinct.sort();
        distinct.dedup();
        let cone = Cone::of(&SemigroupPresentation::from_columns(&distinct)?);
        Ok(Monoid { gens: distinct, grading, cone, memo: BTreeMap::new() })
    }

    pub fn of(p: &SemigroupPresentation) -> Self {
        Monoid { gens: p.generators().to_vec(), grading: p.grading().to_vec(), cone: Cone::of(p), memo: BTreeMap::new() }
    }

    pub fn generators(&self) -> &[Vec<Int>] {
        &self.gens
    }

    pub fn level(&self, h: &[Int]) -> Rat {
        linalg::dot_int(&self.grading, h)
    }

    /// Whether `h` is an ℕ-combination of the generators.
    pub fn contains(&mut self, h: &[Int]) -> bool {
        if h.iter().all(Zero::is_zero) {
            return true;
        }
        if let Some(&known) = self.memo.get(h) {
            return known;
        }
        let found = self.cone.contains(h) && {
            let gens = self.gens.clone();
            gens.iter().any(|a| self.contains(&sub(h, a)))
        };
        self.memo.insert(h.to_vec(), found);
        found
    }

    /// Every element of level at most `bound`, including `0`, sorted by level
    /// and then lexicographically.
    pub fn enumerate(&self, bound: &Rat) -> Vec<Vec<Int>> {
        let d = self.gens.first().map_or(0, Vec::len);
        let zero = vec![Int::zero(); d];
        let mut seen: BTreeSet<Vec<Int>> = BTreeSet::new();
        seen.insert(zero.clone());
        let mut frontier = vec![zero];
        while let Some(x) = frontier.pop() {
            for a in &self.gens {
                let y = add(&x, a);
                if &self.level(&y) <= bound && seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        self.sorted(seen.into_iter().collect())
    }

    fn sorted(&self, mut v: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
        v.sort_by(|a, b| self.level(a).cmp(&self.level(b)).then_with(|| a.cmp(b)));
        v
    }
}

/// Membership in `H`.
pub fn contains(p: &SemigroupPresentation, h: &[Int]) -> bool {
    h.len() == p.dim() && Monoid::of(p).contains(h)
}

/// Elements of `H` of level at most `bound`, sorted by level.
pub fn enumerate(p: &SemigroupPresentation, bound: &Rat) -> Vec<Vec<Int>> {
    Monoid::of(p).enumerate(bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HbarStatus {
    /// `h ∈ H`, hence `h ∈ H̄`.
    InH,
    /// Every facet of `C_H` has a witness.
    Member,
    /// Some facet of `C_H` has no witness of level at most the bound.
    NotMemberWithinBound,
}

/// Outcome of the bounded search for `h ∈ H̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HbarVerdict {
    pub status: HbarStatus,
    /// For each facet `τ` of `C_H` that has one, the first `b ∈ H_τ ∖ {0}`
    /// with `h + b ∈ H`, in order of level and then lexicographically.
    pub witnesses: Vec<(usize, Vec<Int>)>,
    /// Facets without a witness up to the bound.
    pub missing: Vec<usize>,
    pub bound: Rat,
}

/// Reusable state for many `H̄` queries on one presentation.
#[derive(Debug, Clone)]
pub struct HbarSearch {
    presentation: SemigroupPresentation,
    monoid: Monoid,
    faces: Vec<ConeFace>,
    face_elements: Vec<Vec<Vec<Int>>>,
    bound: Rat,
}

impl HbarSearch {
    /// Prepares the search with witnesses of level at most `bound`.
    pub fn new(p: &SemigroupPresentation, bound: &Rat) -> Result<Self> {
        let faces = codim1_cone_faces(p);
        let mut face_elements = Vec::with_capacity(faces.len());
        for f in &faces {
            let gens: Vec<Vec<Int>> = f.members.iter().map(|&j| p.generator(j).to_vec()).collect();
            let m = Monoid::new(gens, p.grading().to_vec())?;
            let mut elems = m.enumerate(bound);
            elems.retain(|b| b.iter().any(|x| !x.is_zero()));
            face_elements.push(elems);
        }
        Ok(HbarSearch { presentation: p.clone(), monoid: Monoid::of(p), faces, face_elements, bound: bound.clone() })
    }

    pub fn faces(&self) -> &[ConeFace] {
        &self.faces
    }

    pub fn contains(&mut self, h: &[Int]) -> bool {
        self.monoid.contains(h)
    }

    pub fn verdict(&mut self, h: &[Int]) -> Result<HbarVerdict> {
        if h.len() != self.presentation.dim() {
            return Err(Error::DimensionMismatch { expected: self.presentation.dim(), found: h.len() });
        }
        if self.presentation.lattice().coordinates(h).is_none() {
            return Err(Error::OutsideLattice);
        }
        let bound = self.bound.clone();
        if self.monoid.contains(h) {
            return Ok(HbarVerdict { status: HbarStatus::InH, witnesses: Vec::new(), missing: Vec::new(), bound });
        }
        let mut witnesses = Vec::new();
        let mut missing = Vec::new();
        for t in 0..self.faces.len() {
            let candidates = self.face_elements[t].clone();
            match candidates.into_iter().find(|b| self.monoid.contains(&add(h, b))) {
                Some(b) => witnesses.push((t, b)),
                None => missing.push(t),
            }
        }
        let status = if missing.is_empty() { HbarStatus::Member } else { HbarStatus::NotMemberWithinBound };
        Ok(HbarVerdict { status, witnesses, missing, bound })
    }
}

/// Bounded decision of `h ∈ H̄`.
///
/// `h ∈ H̄` exactly when every facet `τ` of `C_H` admits some nonzero
/// `b ∈ H_τ` with `h + b ∈ H`; witnesses are searched up to level `bound`.
pub fn hbar_member(p: &SemigroupPresentation, h: &[Int], bound: &Rat) -> Result<HbarVerdict> {
    HbarSearch::new(p, bound)?.verdict(h)
}

/// Lattice points of `ℤH ∩ C_H` of level at most `bound`, in lattice
/// coordinates, sorted by level and then lexicographically.
pub fn cone_lattice_points(p: &SemigroupPresentation, bound: &Rat) -> Vec<Vec<Int>> {
    let frame = p.lattice();
    let cone = Cone::of(p);
    let coords: Vec<Vec<Int>> =
        p.generators().iter().map(|a| frame.coordinates(a).expect("generator in its lattice")).collect();
    let levels: Vec<Rat> = p.generators().iter().map(|a| p.level(a)).collect();
    let ranges: Vec<(Int, Int)> = (0..frame.rank())
        .map(|i| {
            let ratios = coords.iter().zip(&levels).map(|(c, l)| Rat::from_integer(c[i].clone()) / l);
            let lo = ratios.clone().fold(Rat::zero(), |m, x| m.min(x)) * bound;
            let hi = ratios.fold(Rat::zero(), |m, x| m.max(x)) * bound;
            (lo.floor().to_integer(), hi.ceil().to_integer())
        })
        .collect();
    let mut out = Vec::new();
    if ranges.is_empty() {
        return out;
    }
    let mut cur: Vec<Int> = ranges.iter().map(|r| r.0.clone()).collect();
    loop {
        let x = frame.embed(&cur);
        if &p.level(&x) <= bound && cone.contains(&x) {
            out.push(x);
        }
        let mut i = 0;
        loop {
            if i == cur.len() {
                let m = Monoid::of(p);
                return m.sorted(out);
            }
            if cur[i] < ranges[i].1 {
                cur[i] += 1;
                break;
            }
            cur[i] = ranges[i].0.clone();
            i += 1;
        }
    }
}

/// The elements of `H̄ ∖ H` of level at most `degree_bound` whose membership
/// in `H̄` is witnessed up to `witness_bound`.
pub fn hbar_minus_h(p: &SemigroupPresentation, degree_bound: &Rat, witness_bound: &Rat) -> Result<Vec<Vec<Int>>> {
    let mut search = HbarSearch::new(p, witness_bound)?;
    let mut out = Vec::new();
    for x in cone_lattice_points(p, degree_bound) {
        if search.verdict(&x)?.status == HbarStatus::Member {
            out.push(x);
        }
    }
    Ok(out)
}

/// Result of the bounded `H = H̄` test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmReport {
    /// No element of `H̄ ∖ H` was found. This does not prove the ring Cohen–Macaulay.
    pub passes_within_bounds: bool,
    /// Each of these proves that `𝕂[H]` is not Cohen–Macaulay.
    pub counterexamples: Vec<Vec<Int>>,
    pub degree_bound: Rat,
    pub witness_bound: Rat,
}

/// For rank at least 2, a Cohen–Macaulay `𝕂[H]` has `H = H̄`; this searches
/// for a violation within the bounds.
pub fn cm_necessary_check(p: &SemigroupPresentation, degree_bound: &Rat, witness_bound: &Rat) -> Result<CmReport> {
    if p.rank() < 2 {
        return Err(Error::RankTooSmall(p.rank()));
    }
    let counterexamples = hbar_minus_h(p, degree_bound, witness_bound)?;
    Ok(CmReport {
        passes_within_bounds: counterexamples.is_empty(),
        counterexamples,
        degree_bound: degree_bound.clone(),
        witness_bound: witness_bound.clone(),
    })
}

/// Minimal generators of `H_τ = H ∩ C_τ` found up to a level bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSemigroup {
    pub members: Vec<usize>,
    /// Sorted by level and then lexicographically.
    pub generators: Vec<Vec<Int>>,
    pub bound: Rat,
    /// Always set: generators above the bound would be missed.
    pub bound_dependent: bool,
}

impl FaceSemigroup {
    pub fn presentation(&self) -> Result<SemigroupPresentation> {
        SemigroupPresentation::from_columns(&self.generators)
    }
}

/// The elements of `H ∩ C_τ` up to `bound` (default: three times the largest
/// generator level) that are not sums of two nonzero such elements, where
/// `C_τ` is the cone over the generators `members`.
pub fn face_semigroup_generators(
    p: &SemigroupPresentation,
    members: &[usize],
    bound: Option<&Rat>,
) -> Result<FaceSemigroup> {
    if members.is_empty() {
        return Err(Error::NotAFace(Vec::new()));
    }
    if let Some(&bad) = members.iter().find(|&&j| j >= p.len()) {
        return Err(Error::DimensionMismatch { expected: p.len(), found: bad + 1 });
    }
    let mut members = members.to_vec();
    members.sort_unstable();
    members.dedup();
    let bound = bound.cloned().unwrap_or_else(|| p.max_level() * Int::from(3));
    let cone = Cone::of(&p.sub_presentation(&members)?);
    let monoid = Monoid::of(p);
    let elements: Vec<Vec<Int>> = monoid
        .enumerate(&bound)
        .into_iter()
        .filter(|x| x.iter().any(|c| !c.is_zero()) && cone.contains(x))
        .collect();
    let set: BTreeSet<&Vec<Int>> = elements.iter().collect();
    let generators = elements
        .iter()
        .filter(|x| {
            let lx = monoid.level(x);
            !elements.iter().any(|y| monoid.level(y) < lx && set.contains(&sub(x, y)))
        })
        .cloned()
        .collect();
    Ok(FaceSemigroup { members, generators, bound, bound_dependent: true })
}
