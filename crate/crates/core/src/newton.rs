//! The enlargement procedure that makes the Newton filtration of `𝕂[H]`
//! induced by a weight vector.
//!
//! A queue of pairs `e_{a_i} + e_{a_j}` records the products `y_i·y_j` that
//! drop in Newton degree but are not yet seen to drop under the current
//! weights `L`. Each surviving pair contributes the new generator
//! `a_i + a_j` with weight `deg(a_i + a_j)`, until every queued product is an
//! `L`-leading term.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::gbasis::{buchberger, initial_forms, GroebnerBasis, Monomial, MonomialOrder, Polynomial};
use crate::geometry::{umbrella, Umbrella, WeightVector};
use crate::lattice::SemigroupPresentation;
use crate::semigroup::Monoid;
use crate::toric::toric_ideal;
use crate::{Error, Int, Rat, Result};

/// The element `e_{a_i} + e_{a_j}` of the free monoid on the generators, with
/// `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QueueEntry(pub usize, pub usize);

impl QueueEntry {
    pub fn new(i: usize, j: usize) -> Self {
        QueueEntry(i.min(j), i.max(j))
    }

    /// `y_i · y_j` in `n` variables.
    pub fn monomial(&self, n: usize) -> Monomial {
        let mut e = alloc::vec![0u32; n];
        e[self.0] += 1;
        e[self.1] += 1;
        Monomial::new(e)
    }
}

impl fmt::Display for QueueEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a{},a{})", self.0 + 1, self.1 + 1)
    }
}

/// Outcome of reducing `y^{kp}` by a toric Gröbner basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingTest {
    pub leading: bool,
    /// `kp`.
    pub power: Monomial,
    /// The normal form `y^q` of `y^{kp}`.
    pub normal_form: Monomial,
    pub degree: Rat,
    pub reduced_degree: Rat,
}

impl LeadingTest {
    /// The binomial `y^{kp} − y^q` certifying the degree drop.
    pub fn witness(&self) -> Polynomial {
        Polynomial::binomial(self.power.clone(), self.normal_form.clone())
    }
}

/// Decides whether `k·p` is an `L`-leading term of `E_{𝒜'}`: the normal form
/// of `y^{kp}` under a basis for an `L`-refined order is the fibre element of
/// least `L`-degree, so the test compares the two degrees.
pub fn is_l_leading(p: &Monomial, weights: &[Rat], g: &GroebnerBasis, k: u32) -> Result<LeadingTest> {
    let power = p.pow(k)?;
    let nf = g.normal_form(&Polynomial::monomial(power.clone()))?;
    let mut terms = nf.terms();
    let normal_form = match (terms.next(), terms.next()) {
        (Some((m, c)), None) if c == &Rat::from_integer(1.into()) => m.clone(),
        _ => return Err(Error::Invariant(format!("normal form of a monomial is {nf}, not a monomial"))),
    };
    let degree = power.weighted_degree(weights);
    let reduced_degree = normal_form.weighted_degree(weights);
    Ok(LeadingTest { leading: reduced_degree < degree, power, normal_form, degree, reduced_degree })
}

/// The test at `k = M(𝒜)`, which by the power bound decides whether `y^p` is
/// nilpotent in the graded ring.
pub fn is_eventually_leading(p: &Monomial, weights: &[Rat], g: &GroebnerBasis, m_bound: u32) -> Result<bool> {
    Ok(is_l_leading(p, weights, g, m_bound)?.leading)
}

/// Pairs `i < j` with `e_i + e_j` eventually leading while neither `e_i` nor
/// `e_j` is. Returns the queue and the per-generator verdicts.
pub fn initial_queue(n: usize, ones: &GroebnerBasis, m_bound: u32) -> Result<(Vec<QueueEntry>, Vec<bool>)> {
    let w = ones.order().weight().to_vec();
    let single: Vec<bool> = (0..n)
        .map(|i| is_eventually_leading(&Monomial::var(n, i), &w, ones, m_bound))
        .collect::<Result<_>>()?;
    let mut queue = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !single[i] && !single[j] && is_eventually_leading(&QueueEntry(i, j).monomial(n), &w, ones, m_bound)? {
                queue.push(QueueEntry(i, j));
            }
        }
    }
    Ok((queue, single))
}

fn bron_kerbosch(
    adj: &[BTreeSet<usize>],
    r: &mut Vec<usize>,
    mut p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        let mut c = r.clone();
        c.sort_unstable();
        out.push(c);
        return;
    }
    let candidates: Vec<usize> = p.iter().copied().collect();
    for v in candidates {
        r.push(v);
        let np = p.intersection(&adj[v]).copied().collect();
        let nx = x.intersection(&adj[v]).copied().collect();
        bron_kerbosch(adj, r, np, nx, out);
        r.pop();
        p.remove(&v);
        x.insert(v);
    }
}

/// Facet member sets read off the queue: the maximal sets of non-nilpotent
/// generators containing no queued pair.
pub fn facets_from_groebner(n: usize, queue: &[QueueEntry], nilpotent: &[bool]) -> Vec<Vec<usize>> {
    let vertices: BTreeSet<usize> = (0..n).filter(|&i| !nilpotent[i]).collect();
    let queued: BTreeSet<QueueEntry> = queue.iter().copied().collect();
    let adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|i| {
            if !vertices.contains(&i) {
                return BTreeSet::new();
            }
            vertices.iter().copied().filter(|&j| j != i && !queued.contains(&QueueEntry::new(i, j))).collect()
        })
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(&adj, &mut Vec::new(), vertices, BTreeSet::new(), &mut out);
    out.sort();
    out
}

/// Pairs `i < j` accepted by `keep` whose elements share no facet cone.
pub fn non_cofacial_pairs(
    u: &Umbrella,
    generators: &[Vec<Int>],
    keep: impl Fn(usize, usize) -> bool,
) -> Result<Vec<QueueEntry>> {
    let cones: Vec<Vec<usize>> = generators.iter().map(|g| u.facet_cones_containing(g)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for j in 0..generators.len() {
        for i in 0..j {
            if keep(i, j) && !cones[i].iter().any(|s| cones[j].contains(s)) {
                out.push(QueueEntry(i, j));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Non-cofacial pairs of generators with at least one of Newton degree
/// below 1.
pub fn interior_pairs(p: &SemigroupPresentation, u: &Umbrella) -> Result<Vec<QueueEntry>> {
    let one = Rat::from_integer(1.into());
    let interior: Vec<bool> =
        p.generators().iter().map(|a| Ok(u.degree(a)? < one)).collect::<Result<_>>()?;
    non_cofacial_pairs(u, p.generators(), |i, j| interior[i] || interior[j])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NewtonOptions {
    /// Maximal number of passes through the removal step.
    pub iteration_cap: usize,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        NewtonOptions { iteration_cap: 64 }
    }
}

/// A generator appended to `𝒜'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Appended {
    pub index: usize,
    pub parents: QueueEntry,
    pub generator: Vec<Int>,
    pub degree: Rat,
}

/// One pass through the removal and enlargement steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Round {
    pub queue: Vec<QueueEntry>,
    pub basis: GroebnerBasis,
    pub removed: Vec<(QueueEntry, LeadingTest)>,
    pub appended: Vec<Appended>,
    pub queue_after: Vec<QueueEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonTrace {
    pub max_minor: Int,
    pub ones_basis: GroebnerBasis,
    pub initial_queue: Vec<QueueEntry>,
    pub groebner_facets: Vec<Vec<usize>>,
    pub queue_with_interior: Vec<QueueEntry>,
    pub rounds: Vec<Round>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonResult {
    pub original: SemigroupPresentation,
    /// The `(𝒜, 𝟏)`-umbrella.
    pub umbrella: Umbrella,
    /// `𝒜'`, with new columns appended in order of creation.
    pub enlarged: SemigroupPresentation,
    /// `L_a = deg(a)` on `𝒜'`.
    pub weights: WeightVector,
    /// Reduced basis of `I_{𝒜'}` for the `L`-refined order.
    pub basis: GroebnerBasis,
    /// `L`-initial forms of `basis`; they present the Newton graded ring.
    pub graded_generators: Vec<Polynomial>,
    pub trace: NewtonTrace,
}

fn weight_order(l: &WeightVector) -> Result<MonomialOrder> {
    MonomialOrder::weighted(l.as_slice().to_vec())
}

/// Runs the enlargement procedure on `p`.
pub fn algorithm7(p: &SemigroupPresentation, options: &NewtonOptions) -> Result<NewtonResult> {
    let n = p.len();
    let ones = WeightVector::ones(n);
    let u = umbrella(p, &ones)?;
    let max_minor = p.max_minor_bound();
    let m_bound = max_minor.to_u32().ok_or_else(|| Error::TooLarge(format!("M(A) = {max_minor}")))?;
    let ones_basis = toric_ideal(p, &weight_order(&ones)?)?.into_basis();

    let (initial, nilpotent) = initial_queue(n, &ones_basis, m_bound)?;
    let groebner_facets = facets_from_groebner(n, &initial, &nilpotent);
    let hull: Vec<Vec<usize>> = u.facets().iter().map(|f| f.members.clone()).collect();
    if groebner_facets != hull {
        return Err(Error::FacetMismatch { groebner: groebner_facets, hull });
    }

    let mut queue: BTreeSet<QueueEntry> = initial.iter().copied().collect();
    queue.extend(interior_pairs(p, &u)?);
    let queue_with_interior: Vec<QueueEntry> = queue.iter().copied().collect();

    let mut enlarged = p.clone();
    let mut weights =
        WeightVector::new(p.generators().iter().map(|a| u.degree(a)).collect::<Result<_>>()?);
    let mut basis = toric_ideal(p, &weight_order(&weights)?)?.into_basis();
    let mut rounds = Vec::new();

    loop {
        if rounds.len() == options.iteration_cap {
            return Err(Error::IterationCap(options.iteration_cap));
        }
        let snapshot: Vec<QueueEntry> = queue.iter().copied().collect();
        let m = enlarged.len();
        let mut removed = Vec::new();
        for e in &snapshot {
            let test = is_l_leading(&e.monomial(m), weights.as_slice(), &basis, 1)?;
            if test.leading {
                queue.remove(e);
                removed.push((*e, test));
            }
        }
        if queue.is_empty() {
            rounds.push(Round {
                queue: snapshot,
                basis: basis.clone(),
                removed,
                appended: Vec::new(),
                queue_after: Vec::new(),
            });
            break;
        }

        let mut appended = Vec::new();
        let mut relations = Vec::new();
        for e in queue.iter().copied().collect::<Vec<_>>() {
            let b: Vec<Int> =
                enlarged.generator(e.0).iter().zip(enlarged.generator(e.1)).map(|(x, y)| x + y).collect();
            if enlarged.generators().contains(&b) {
                continue;
            }
            let degree = u.degree(&b)?;
            enlarged = enlarged.with_generator(b.clone())?;
            weights.push(degree.clone());
            let index = enlarged.len() - 1;
            relations.push((index, e));
            appended.push(Appended { index, parents: e, generator: b, degree });
        }
        let total = enlarged.len();
        let fresh: BTreeSet<usize> = appended.iter().map(|a| a.index).collect();
        queue.extend(non_cofacial_pairs(&u, enlarged.generators(), |i, j| {
            fresh.contains(&i) || fresh.contains(&j)
        })?);

        // I_{𝒜' ∪ {b₁+b₂}} = I_{𝒜'} + ⟨y_{b₁+b₂} − y_{b₁} y_{b₂}⟩.
        let mut gens: Vec<Polynomial> = basis.elements().iter().map(|g| g.extend(total)).collect();
        for (index, e) in relations {
            gens.push(Polynomial::binomial(Monomial::var(total, index), e.monomial(total)));
        }
        let previous = core::mem::replace(&mut basis, buchberger(&gens, &weight_order(&weights)?)?);
        rounds.push(Round {
            queue: snapshot,
            basis: previous,
            removed,
            appended,
            queue_after: queue.iter().copied().collect(),
        });
    }

    let graded_generators = initial_forms(&basis, weights.as_slice())?;
    Ok(NewtonResult {
        original: p.clone(),
        umbrella: u,
        enlarged,
        weights,
        basis,
        graded_generators,
        trace: NewtonTrace {
            max_minor,
            ones_basis,
            initial_queue: initial,
            groebner_facets,
            queue_with_interior,
            rounds,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An element of `H ∩ C_σ` outside `ℕ𝒜'_σ`.
    NotGenerated { facet: usize, element: Vec<Int> },
    /// A pair where `L`-leadingness and sharing a facet cone do not exclude
    /// each other.
    Pairing { pair: (usize, usize), leading: bool, cofacial: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem34Report {
    pub bound: Rat,
    /// Number of elements of `H ∩ C_σ` checked, per facet.
    pub checked: Vec<usize>,
    pub violations: Vec<Violation>,
}

impl Theorem34Report {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the output of [`algorithm7`]: up to level `bound`, every element of
/// `H ∩ C_σ` is an ℕ-combination of the elements of `𝒜'` in `C_σ`, and for
/// all `a'_i, a'_j` the product `y_i y_j` is `L`-leading exactly when the two
/// share no facet cone.
pub fn verify_theorem34(result: &NewtonResult, bound: &Rat) -> Result<Theorem34Report> {
    let u = &result.umbrella;
    let p = &result.original;
    let elements = Monoid::of(p).enumerate(bound);
    let cones: Vec<Vec<usize>> =
        result.enlarged.generators().iter().map(|a| u.facet_cones_containing(a)).collect::<Result<_>>()?;
    let mut checked = Vec::new();
    let mut violations = Vec::new();
    for s in 0..u.facets().len() {
        let gens: Vec<Vec<Int>> = result
            .enlarged
            .generators()
            .iter()
            .zip(&cones)
            .filter(|(_, c)| c.contains(&s))
            .map(|(a, _)| a.clone())
            .collect();
        let mut sub = Monoid::new(gens, p.grading().to_vec())?;
        let mut count = 0;
        for h in &elements {
            if h.iter().all(Zero::is_zero) || !u.facet_cones_containing(h)?.contains(&s) {
                continue;
            }
            count += 1;
            if !sub.contains(h) {
                violations.push(Violation::NotGenerated { facet: s, element: h.clone() });
            }
        }
        checked.push(count);
    }
    let m = result.enlarged.len();
    for j in 0..m {
        for i in 0..=j {
            let mut e = alloc::vec![0u32; m];
            e[i] += 1;
            e[j] += 1;
            let leading = is_l_leading(&Monomial::new(e), result.weights.as_slice(), &result.basis, 1)?.leading;
            let cofacial = cones[i].iter().any(|s| cones[j].contains(s));
            if leading == cofacial {
                violations.push(Violation::Pairing { pair: (i, j), leading, cofacial });
            }
        }
    }
    Ok(Theorem34Report { bound: bound.clone(), checked, violations })
}
