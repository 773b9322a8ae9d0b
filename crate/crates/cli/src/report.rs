//! Serializable reports. Every rational is an exact `p/q` string; integer
//! vectors are JSON integer arrays.

use serde::{Deserialize, Serialize};
use toricnf_core::gbasis::{GroebnerBasis, MonomialOrder, Polynomial};
use toricnf_core::geometry::{ConeFace, Face, Umbrella};
use toricnf_core::newton::{NewtonResult, Round, Theorem34Report};
use toricnf_core::semigroup::{CmReport, FaceSemigroup, HbarStatus, HbarVerdict};
use toricnf_core::{Int, Rat, SemigroupPresentation, Tiebreak};

use crate::error::{CliError, Result};
use crate::input::TiebreakName;

pub fn rat(q: &Rat) -> String {
    q.to_string()
}

pub fn rats(v: &[Rat]) -> Vec<String> {
    v.iter().map(rat).collect()
}

pub fn ints(v: &[Int]) -> Result<Vec<i64>> {
    v.iter()
        .map(|x| i64::try_from(x).map_err(|_| CliError::Parse(format!("integer {x} does not fit in 64 bits"))))
        .collect()
}

fn int_rows(v: &[Vec<Int>]) -> Result<Vec<Vec<i64>>> {
    v.iter().map(|r| ints(r)).collect()
}

/// Generator names: the input labels, else `a1, a2, …`.
pub fn labels(p: &SemigroupPresentation) -> Vec<String> {
    let given = p.labels().unwrap_or(&[]);
    (0..p.len()).map(|j| given.get(j).cloned().unwrap_or_else(|| format!("a{}", j + 1))).collect()
}

fn names(labels: &[String], members: &[usize]) -> Vec<String> {
    members.iter().map(|&j| labels[j].clone()).collect()
}

/// Monic polynomials rendered under `ord`.
pub fn canonical(polys: &[Polynomial], ord: &MonomialOrder) -> Vec<String> {
    polys.iter().map(|f| f.monic(ord).render(ord)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
    pub labels: Vec<String>,
    pub generators: Vec<Vec<i64>>,
    /// A functional taking positive values on every generator.
    pub grading: Vec<String>,
}

impl PresentationReport {
    pub fn new(name: &str, p: &SemigroupPresentation) -> Result<Self> {
        Ok(PresentationReport {
            name: name.to_string(),
            dim: p.dim(),
            rank: p.rank(),
            labels: labels(p),
            generators: int_rows(p.generators())?,
            grading: rats(p.grading()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetReport {
    pub members: Vec<String>,
    pub functional: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceReport {
    pub dim: usize,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UmbrellaReport {
    pub weights: Vec<String>,
    pub facets: Vec<FacetReport>,
    pub faces: Vec<FaceReport>,
    pub interior_faces: Vec<FaceReport>,
    pub cone_faces: Vec<FacetReport>,
}

fn cone_faces(labels: &[String], faces: &[ConeFace]) -> Vec<FacetReport> {
    faces.iter().map(|f| FacetReport { members: names(labels, &f.members), functional: rats(&f.functional) }).collect()
}

fn faces(labels: &[String], faces: &[Face]) -> Vec<FaceReport> {
    faces.iter().map(|f| FaceReport { dim: f.dim, members: names(labels, &f.members) }).collect()
}

impl UmbrellaReport {
    pub fn new(p: &SemigroupPresentation, u: &Umbrella) -> Self {
        let l = labels(p);
        let all: Vec<Face> = u.faces_by_dim().iter().flatten().cloned().collect();
        UmbrellaReport {
            weights: rats(u.weights().as_slice()),
            facets: u
                .facets()
                .iter()
                .map(|f| FacetReport { members: names(&l, &f.members), functional: rats(&f.functional) })
                .collect(),
            faces: faces(&l, &all),
            interior_faces: faces(&l, u.interior_faces()),
            cone_faces: cone_faces(&l, u.cone_faces()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub weights: Vec<String>,
    pub tiebreak: TiebreakName,
}

impl OrderReport {
    pub fn new(ord: &MonomialOrder) -> Self {
        let tiebreak = match ord.tiebreak() {
            Tiebreak::Grevlex => TiebreakName::Grevlex,
            Tiebreak::Revlex => TiebreakName::Revlex,
        };
        OrderReport { weights: rats(ord.weight()), tiebreak }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub order: OrderReport,
    pub basis: Vec<String>,
}

impl BasisReport {
    pub fn new(g: &GroebnerBasis) -> Self {
        BasisReport { order: OrderReport::new(g.order()), basis: g.render() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendedReport {
    pub label: String,
    pub parents: [String; 2],
    pub generator: Vec<i64>,
    pub degree: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovedReport {
    pub pair: String,
    /// `y^{p} − y^{q}` with `y^q` the normal form of `y^p`.
    pub witness: String,
    pub degree: String,
    pub reduced_degree: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundReport {
    pub queue: Vec<String>,
    pub removed: Vec<RemovedReport>,
    pub appended: Vec<String>,
    pub queue_after: Vec<String>,
    pub basis: Vec<String>,
}

impl RoundReport {
    fn new(r: &Round, labels: &[String]) -> Self {
        let ord = r.basis.order();
        RoundReport {
            queue: r.queue.iter().map(ToString::to_string).collect(),
            removed: r
                .removed
                .iter()
                .map(|(e, t)| RemovedReport {
                    pair: e.to_string(),
                    witness: t.witness().render(ord),
                    degree: rat(&t.degree),
                    reduced_degree: rat(&t.reduced_degree),
                })
                .collect(),
            appended: r.appended.iter().map(|a| labels[a.index].clone()).collect(),
            queue_after: r.queue_after.iter().map(ToString::to_string).collect(),
            basis: r.basis.render(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub bound: String,
    /// Elements of `H ∩ C_σ` checked, per facet.
    pub checked: Vec<usize>,
    pub passes: bool,
    pub violations: Vec<String>,
}

impl VerificationReport {
    pub fn new(r: &Theorem34Report) -> Self {
        VerificationReport {
            bound: rat(&r.bound),
            checked: r.checked.clone(),
            passes: r.passes(),
            violations: r.violations.iter().map(|v| format!("{v:?}")).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonReport {
    pub max_minor: String,
    pub initial_queue: Vec<String>,
    pub queue: Vec<String>,
    pub labels: Vec<String>,
    pub enlarged: Vec<Vec<i64>>,
    pub appended: Vec<AppendedReport>,
    pub weights: Vec<String>,
    pub order: OrderReport,
    pub basis: Vec<String>,
    /// Monic `L`-initial forms of the basis, presenting the graded ring.
    pub graded_generators: Vec<String>,
    pub rounds: usize,
    pub verification: VerificationReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<RoundReport>>,
}

impl NewtonReport {
    pub fn new(r: &NewtonResult, verification: &Theorem34Report, trace: bool) -> Result<Self> {
        let mut l = labels(&r.original);
        l.extend((r.original.len()..r.enlarged.len()).map(|j| format!("a{}", j + 1)));
        let ord = r.basis.order();
        let appended = r
            .trace
            .rounds
            .iter()
            .flat_map(|round| &round.appended)
            .map(|a| {
                Ok(AppendedReport {
                    label: l[a.index].clone(),
                    parents: [l[a.parents.0].clone(), l[a.parents.1].clone()],
                    generator: ints(&a.generator)?,
                    degree: rat(&a.degree),
                })
            })
            .collect::<Result<_>>()?;
        Ok(NewtonReport {
            max_minor: r.trace.max_minor.to_string(),
            initial_queue: r.trace.initial_queue.iter().map(ToString::to_string).collect(),
            queue: r.trace.queue_with_interior.iter().map(ToString::to_string).collect(),
            enlarged: int_rows(r.enlarged.generators())?,
            appended,
            weights: rats(r.weights.as_slice()),
            order: OrderReport::new(ord),
            basis: r.basis.render(),
            graded_generators: canonical(&r.graded_generators, ord),
            rounds: r.trace.rounds.len(),
            verification: VerificationReport::new(verification),
            trace: trace.then(|| r.trace.rounds.iter().map(|round| RoundReport::new(round, &l)).collect()),
            labels: l,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatusName {
    InH,
    Member,
    NotMemberWithinBound,
}

impl From<HbarStatus> for StatusName {
    fn from(s: HbarStatus) -> Self {
        match s {
            HbarStatus::InH => StatusName::InH,
            HbarStatus::Member => StatusName::Member,
            HbarStatus::NotMemberWithinBound => StatusName::NotMemberWithinBound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// Generators spanning the facet of the cone.
    pub facet: Vec<String>,
    pub element: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub target: Vec<i64>,
    pub status: StatusName,
    pub bound: String,
    pub witnesses: Vec<WitnessReport>,
    pub missing: Vec<Vec<String>>,
}

impl VerdictReport {
    pub fn new(p: &SemigroupPresentation, faces: &[ConeFace], target: &[Int], v: &HbarVerdict) -> Result<Self> {
        let l = labels(p);
        Ok(VerdictReport {
            target: ints(target)?,
            status: v.status.into(),
            bound: rat(&v.bound),
            witnesses: v
                .witnesses
                .iter()
                .map(|(t, b)| Ok(WitnessReport { facet: names(&l, &faces[*t].members), element: ints(b)? }))
                .collect::<Result<_>>()?,
            missing: v.missing.iter().map(|t| names(&l, &faces[*t].members)).collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmCheckReport {
    pub degree_bound: String,
    pub witness_bound: String,
    /// False for rank below 2, where the criterion does not apply.
    pub applicable: bool,
    pub passes_within_bounds: bool,
    /// Elements of `H̄ ∖ H` found within the bounds.
    pub counterexamples: Vec<Vec<i64>>,
}

impl CmCheckReport {
    pub fn new(c: &CmReport) -> Result<Self> {
        Ok(CmCheckReport {
            degree_bound: rat(&c.degree_bound),
            witness_bound: rat(&c.witness_bound),
            applicable: true,
            passes_within_bounds: c.passes_within_bounds,
            counterexamples: int_rows(&c.counterexamples)?,
        })
    }

    pub fn not_applicable(degree_bound: &Rat, witness_bound: &Rat) -> Self {
        CmCheckReport {
            degree_bound: rat(degree_bound),
            witness_bound: rat(witness_bound),
            applicable: false,
            passes_within_bounds: true,
            counterexamples: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSemigroupReport {
    pub members: Vec<String>,
    pub bound: String,
    pub generators: Vec<Vec<i64>>,
    /// Generators of level above the bound are not searched for.
    pub bound_dependent: bool,
}

impl FaceSemigroupReport {
    pub fn new(p: &SemigroupPresentation, f: &FaceSemigroup) -> Result<Self> {
        Ok(FaceSemigroupReport {
            members: names(&labels(p), &f.members),
            bound: rat(&f.bound),
            generators: int_rows(&f.generators)?,
            bound_dependent: f.bound_dependent,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub umbrella_ms: u64,
    pub toric_ms: u64,
    pub newton_ms: u64,
    pub hbar_ms: u64,
    pub volume_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub presentation: PresentationReport,
    pub umbrella: UmbrellaReport,
    /// Toric ideal under the weight order with all weights 1.
    pub toric: BasisReport,
    pub newton: NewtonReport,
    pub hbar: CmCheckReport,
    /// Normalized volume of the hull of the generators and the origin.
    pub volume: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricReport {
    pub presentation: PresentationReport,
    #[serde(flatten)]
    pub basis: BasisReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UmbrellaCommandReport {
    pub presentation: PresentationReport,
    pub umbrella: UmbrellaReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HbarReport {
    pub presentation: PresentationReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face: Option<FaceSemigroupReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<CmCheckReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VolumeReport {
    pub presentation: PresentationReport,
    pub volume: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureOutcome {
    pub fixture: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub fixtures: Vec<FixtureOutcome>,
    pub passed: usize,
    pub failed: usize,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Indented `key: value` lines; arrays of scalars stay on one line.
pub fn to_text<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)?;
    let mut out = String::new();
    text(&v, 0, &mut out);
    Ok(out)
}

fn scalar(v: &serde_json::Value) -> Option<String> {
    use serde_json::Value;
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(a) if a.iter().all(|x| x.as_array().is_some_and(|r| r.iter().all(|y| scalar(y).is_some()))) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn text(v: &serde_json::Value, depth: usize, out: &mut String) {
    use serde_json::Value;
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        text(x, depth + 1, out);
                    }
                }
            }
        }
        x => out.push_str(&format!("{pad}{}\n", scalar(x).unwrap_or_default())),
    }
}
