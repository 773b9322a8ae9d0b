//! Expected-output checks carried by fixture files.
//!
//! Generator indices in checks are 1-based, as in the reports.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use toricnf_core::gbasis::{buchberger, is_variable_nzd, GroebnerBasis, MonomialOrder, Polynomial};
use toricnf_core::geometry::{normalized_volume, umbrella, WeightVector};
use toricnf_core::newton::{
    algorithm7, is_eventually_leading, verify_theorem34, NewtonOptions, NewtonResult, QueueEntry,
};
use toricnf_core::semigroup::{face_semigroup_generators, hbar_member, hbar_minus_h};
use toricnf_core::toric::{in_radical_of_initial, substitution_holds, toric_ideal};
use toricnf_core::{Int, Rat, SemigroupPresentation};

use crate::commands::{with_origin, zero_based};
use crate::error::Result;
use crate::input::{parse_rat, parse_rats};
use crate::report::{canonical, rat, StatusName};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AppendedCheck {
    pub generator: Vec<i64>,
    pub degree: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Check {
    /// Facets of the umbrella for `weight` (default all ones).
    Facets {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        weight: Option<Vec<String>>,
        members: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        functionals: Option<Vec<Vec<String>>>,
    },
    /// Facets of the cone `C_H`.
    ConeFaces { members: Vec<Vec<usize>>, functionals: Vec<Vec<String>> },
    /// Newton degree for the all-ones weight.
    Degree { point: Vec<i64>, value: String },
    Volume { value: String },
    /// Reduced grevlex basis of the toric ideal, of the sub-presentation on
    /// `face` if given.
    Toric {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        face: Option<Vec<usize>>,
        basis: Vec<String>,
    },
    /// `basis` is a grevlex Gröbner basis of the ideal it generates, and
    /// `y_variable` is a nonzerodivisor modulo it.
    Nzd { basis: Vec<String>, variable: usize, expected: bool },
    Newton {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_minor: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        initial_queue: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        queue: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        first_removed: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        queue_after_first: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        appended: Option<Vec<AppendedCheck>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        weights: Option<Vec<String>>,
        /// Compared as monic sets; on mismatch, as ideals.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        graded_generators: Option<Vec<String>>,
    },
    /// Bounded membership of `target` in `H̄`, on the semigroup of `face` if
    /// given.
    Hbar {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        face: Option<Vec<usize>>,
        target: Vec<i64>,
        bound: String,
        status: StatusName,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witnesses: Option<Vec<Vec<i64>>>,
    },
    HbarMinusH {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        face: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        extra_generators: Vec<Vec<i64>>,
        degree_bound: String,
        witness_bound: String,
        elements: Vec<Vec<i64>>,
    },
    FaceSemigroup {
        face: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bound: Option<String>,
        generators: Vec<Vec<i64>>,
    },
    /// Substitution, facet agreement, radical power test and the normal form
    /// theorem up to `bound`.
    Invariants { bound: String },
}

fn vecs(v: &[Vec<i64>]) -> Vec<Vec<Int>> {
    v.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect()
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

fn ensure(ok: bool, what: impl FnOnce() -> String, failures: &mut Vec<String>) {
    if !ok {
        failures.push(what());
    }
}

fn parse_polys(v: &[String], n: usize) -> Result<Vec<Polynomial>> {
    v.iter().map(|s| Ok(Polynomial::parse(s, n)?)).collect()
}

/// Whether `expected` and `got` agree as monic sets under `ord`, or failing
/// that, generate the same ideal.
pub fn same_generators(expected: &[String], got: &[Polynomial], ord: &MonomialOrder) -> Result<bool> {
    let want = parse_polys(expected, ord.nvars())?;
    let a: BTreeSet<String> = canonical(&want, ord).into_iter().collect();
    let b: BTreeSet<String> = canonical(got, ord).into_iter().collect();
    if a == b {
        return Ok(true);
    }
    let ga = buchberger(&want, ord)?;
    let gb = buchberger(got, ord)?;
    Ok(ga.same_ideal(&gb)?)
}

fn entries(v: &[QueueEntry]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Face semigroup of the 1-based `face`, or `p` itself.
fn restrict(p: &SemigroupPresentation, face: Option<&[usize]>) -> Result<SemigroupPresentation> {
    match face {
        Some(f) => Ok(face_semigroup_generators(p, &zero_based(f, p.len())?, None)?.presentation()?),
        None => Ok(p.clone()),
    }
}

/// Evaluates one check, returning failure messages.
pub fn evaluate(p: &SemigroupPresentation, check: &Check, newton: &mut Option<NewtonResult>) -> Result<Vec<String>> {
    let mut f = Vec::new();
    let n = p.len();
    match check {
        Check::Facets { weight, members, functionals } => {
            let w = match weight {
                Some(w) => WeightVector::new(parse_rats(w)?),
                None => WeightVector::ones(n),
            };
            let u = umbrella(p, &w)?;
            let got: Vec<Vec<usize>> = u.facets().iter().map(|x| x.members.iter().map(|j| j + 1).collect()).collect();
            ensure(sorted(&got) == sorted(members), || format!("facets: expected {members:?}, got {got:?}"), &mut f);
            if let Some(fs) = functionals {
                for (m, want) in members.iter().zip(fs) {
                    let want = parse_rats(want)?;
                    let hit = u.facets().iter().find(|x| x.members.iter().map(|j| j + 1).eq(m.iter().copied()));
                    ensure(
                        hit.is_some_and(|x| x.functional == want),
                        || format!("facet {m:?}: functional {:?}", hit.map(|x| x.functional.iter().map(rat).collect::<Vec<_>>())),
                        &mut f,
                    );
                }
            }
        }
        Check::ConeFaces { members, functionals } => {
            let u = umbrella(p, &WeightVector::zeros(n))?;
            for (m, want) in members.iter().zip(functionals) {
                let want = parse_rats(want)?;
                let hit = u.cone_faces().iter().find(|x| x.members.iter().map(|j| j + 1).eq(m.iter().copied()));
                ensure(hit.is_some_and(|x| x.functional == want), || format!("cone face {m:?} missing or different"), &mut f);
            }
            ensure(u.cone_faces().len() == members.len(), || format!("{} cone faces", u.cone_faces().len()), &mut f);
        }
        Check::Degree { point, value } => {
            let u = umbrella(p, &WeightVector::ones(n))?;
            let got = u.degree(&vecs(std::slice::from_ref(point))[0])?;
            ensure(got == parse_rat(value)?, || format!("deg {point:?} = {got}, expected {value}"), &mut f);
        }
        Check::Volume { value } => {
            let got = normalized_volume(&with_origin(p))?;
            ensure(got.to_string() == *value, || format!("volume {got}, expected {value}"), &mut f);
        }
        Check::Toric { face, basis } => {
            let q = match face {
                Some(m) => p.sub_presentation(&zero_based(m, n)?)?,
                None => p.clone(),
            };
            let ord = MonomialOrder::grevlex(q.len());
            let t = toric_ideal(&q, &ord)?;
            ensure(
                same_generators(basis, t.basis().elements(), &ord)? && t.basis().len() == basis.len(),
                || format!("toric basis {:?}", t.basis().render()),
                &mut f,
            );
        }
        Check::Nzd { basis, variable, expected } => {
            let ord = MonomialOrder::grevlex(n);
            let gens = parse_polys(basis, n)?;
            let g = buchberger(&gens, &ord)?;
            ensure(g.len() == gens.len(), || format!("not a Gröbner basis: {:?}", g.render()), &mut f);
            let got = is_variable_nzd(&g, variable - 1);
            ensure(got == *expected, || format!("y{variable} nonzerodivisor: {got}"), &mut f);
        }
        Check::Newton { max_minor, initial_queue, queue, first_removed, queue_after_first, appended, weights, graded_generators } => {
            if newton.is_none() {
                *newton = Some(algorithm7(p, &NewtonOptions::default())?);
            }
            let r = newton.as_ref().expect("just computed");
            if let Some(m) = max_minor {
                ensure(r.trace.max_minor.to_string() == *m, || format!("M = {}", r.trace.max_minor), &mut f);
            }
            if let Some(q) = initial_queue {
                let got = entries(&r.trace.initial_queue);
                ensure(&got == q, || format!("initial queue {got:?}"), &mut f);
            }
            if let Some(q) = queue {
                let got = entries(&r.trace.queue_with_interior);
                ensure(&got == q, || format!("queue {got:?}"), &mut f);
            }
            let first = r.trace.rounds.first();
            if let Some(q) = first_removed {
                let got: Vec<String> = first.map(|x| x.removed.iter().map(|(e, _)| e.to_string()).collect()).unwrap_or_default();
                ensure(&got == q, || format!("first removal {got:?}"), &mut f);
            }
            if let Some(q) = queue_after_first {
                let got = first.map(|x| entries(&x.queue_after)).unwrap_or_default();
                ensure(&got == q, || format!("queue after first enlargement {got:?}"), &mut f);
            }
            if let Some(a) = appended {
                let got: Vec<(Vec<Int>, Rat)> = r
                    .trace
                    .rounds
                    .iter()
                    .flat_map(|x| &x.appended)
                    .map(|x| (x.generator.clone(), x.degree.clone()))
                    .collect();
                let want: Vec<(Vec<Int>, Rat)> = a
                    .iter()
                    .map(|x| Ok((vecs(std::slice::from_ref(&x.generator)).remove(0), parse_rat(&x.degree)?)))
                    .collect::<Result<_>>()?;
                ensure(got == want, || format!("appended {got:?}"), &mut f);
            }
            if let Some(w) = weights {
                let got: Vec<String> = r.weights.as_slice().iter().map(rat).collect();
                ensure(&got == w, || format!("weights {got:?}"), &mut f);
            }
            if let Some(g) = graded_generators {
                let ord = r.basis.order();
                ensure(
                    same_generators(g, &r.graded_generators, ord)?,
                    || format!("graded generators {:?}", canonical(&r.graded_generators, ord)),
                    &mut f,
                );
            }
        }
        Check::Hbar { face, target, bound, status, witnesses } => {
            let q = restrict(p, face.as_deref())?;
            let h = vecs(std::slice::from_ref(target)).remove(0);
            let v = hbar_member(&q, &h, &parse_rat(bound)?)?;
            let got: StatusName = v.status.into();
            ensure(got == *status, || format!("{target:?}: {got:?}"), &mut f);
            if let Some(w) = witnesses {
                let got: Vec<Vec<Int>> = sorted(&v.witnesses.iter().map(|x| x.1.clone()).collect::<Vec<_>>());
                ensure(got == sorted(&vecs(w)), || format!("witnesses {got:?}"), &mut f);
            }
        }
        Check::HbarMinusH { face, extra_generators, degree_bound, witness_bound, elements } => {
            let mut q = restrict(p, face.as_deref())?;
            for g in vecs(extra_generators) {
                q = q.with_generator(g)?;
            }
            let got = hbar_minus_h(&q, &parse_rat(degree_bound)?, &parse_rat(witness_bound)?)?;
            ensure(sorted(&got) == sorted(&vecs(elements)), || format!("H̄ ∖ H = {got:?}"), &mut f);
        }
        Check::FaceSemigroup { face, bound, generators } => {
            let b = bound.as_deref().map(parse_rat).transpose()?;
            let fs = face_semigroup_generators(p, &zero_based(face, n)?, b.as_ref())?;
            ensure(sorted(&fs.generators) == sorted(&vecs(generators)), || format!("face generators {:?}", fs.generators), &mut f);
        }
        Check::Invariants { bound } => {
            let ones = vec![Rat::from_integer(1.into()); n];
            let g = toric_ideal(p, &MonomialOrder::weighted(ones.clone())?)?.into_basis();
            ensure(substitution_holds(p, &g), || "substitution check".into(), &mut f);
            invariants(p, &g, &ones, &mut f)?;
            if newton.is_none() {
                *newton = Some(algorithm7(p, &NewtonOptions::default())?);
            }
            let report = verify_theorem34(newton.as_ref().expect("just computed"), &parse_rat(bound)?)?;
            ensure(report.passes(), || format!("normal form theorem: {:?}", report.violations), &mut f);
        }
    }
    Ok(f)
}

fn invariants(p: &SemigroupPresentation, g: &GroebnerBasis, ones: &[Rat], f: &mut Vec<String>) -> Result<()> {
    let n = p.len();
    let u = umbrella(p, &WeightVector::ones(n))?;
    let m = u32::try_from(&p.max_minor_bound()).map_err(|_| toricnf_core::Error::TooLarge("M".into()))?;
    for i in 0..n {
        for j in i..n {
            let mono = QueueEntry(i, j).monomial(n);
            let lead = is_eventually_leading(&mono, ones, g, m)?;
            ensure(lead == in_radical_of_initial(&u, &mono), || format!("radical test disagrees on {mono}"), f);
        }
    }
    Ok(())
}
