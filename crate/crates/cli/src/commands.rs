//! The pipeline behind each subcommand.

use std::time::Instant;

use num_traits::Zero;
use toricnf_core::gbasis::MonomialOrder;
use toricnf_core::geometry::{codim1_cone_faces, normalized_volume, umbrella, WeightVector};
use toricnf_core::newton::{algorithm7, verify_theorem34, NewtonOptions};
use toricnf_core::semigroup::{cm_necessary_check, face_semigroup_generators, HbarSearch};
use toricnf_core::toric::toric_ideal;
use toricnf_core::{Int, Rat, SemigroupPresentation};

use crate::error::{CliError, Result};
use crate::input::{parse_rats, resolve_bound, InputSpec, TiebreakName};
use crate::report::*;

/// Settings shared by the subcommands, after merging flags and input options.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub bound: Rat,
    pub degree_bound: Rat,
    pub witness_bound: Rat,
    pub weight: Option<Vec<Rat>>,
    pub tiebreak: TiebreakName,
    pub trace: bool,
    pub timing: bool,
}

/// Command-line values that override the input file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub bound: Option<String>,
    pub degree_bound: Option<String>,
    pub witness_bound: Option<String>,
    pub weight: Option<Vec<String>>,
    pub tiebreak: Option<TiebreakName>,
    pub trace: bool,
    pub timing: bool,
}

impl Settings {
    pub fn resolve(spec: &InputSpec, o: &Overrides) -> Result<Self> {
        let opts = &spec.options;
        let bound = resolve_bound(o.bound.as_deref(), opts.bound.as_deref())?;
        let or_bound = |a: &Option<String>, b: &Option<String>| -> Result<Rat> {
            match a.as_deref().or(b.as_deref()) {
                Some(s) => crate::input::parse_rat(s),
                None => Ok(bound.clone()),
            }
        };
        let weight = match o.weight.as_ref().or(opts.weight.as_ref()) {
            Some(w) => Some(parse_rats(w)?),
            None => None,
        };
        Ok(Settings {
            degree_bound: or_bound(&o.degree_bound, &opts.degree_bound)?,
            witness_bound: or_bound(&o.witness_bound, &opts.witness_bound)?,
            bound,
            weight,
            tiebreak: o.tiebreak.or(opts.tiebreak).unwrap_or(TiebreakName::Grevlex),
            trace: o.trace,
            timing: o.timing,
        })
    }
}

fn ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn weights_for(p: &SemigroupPresentation, s: &Settings) -> Result<WeightVector> {
    match &s.weight {
        Some(w) if w.len() != p.len() => {
            Err(CliError::Usage(format!("--weight has {} entries, the input has {} generators", w.len(), p.len())))
        }
        Some(w) => Ok(WeightVector::new(w.clone())),
        None => Ok(WeightVector::ones(p.len())),
    }
}

/// Points of `𝒜 ∪ {0}`.
pub fn with_origin(p: &SemigroupPresentation) -> Vec<Vec<Int>> {
    let mut pts = vec![vec![Int::zero(); p.dim()]];
    pts.extend(p.generators().iter().cloned());
    pts
}

pub fn cm_check(p: &SemigroupPresentation, s: &Settings) -> Result<CmCheckReport> {
    if p.rank() < 2 {
        return Ok(CmCheckReport::not_applicable(&s.degree_bound, &s.witness_bound));
    }
    CmCheckReport::new(&cm_necessary_check(p, &s.degree_bound, &s.witness_bound)?)
}

pub fn analyze(spec: &InputSpec, s: &Settings) -> Result<AnalysisReport> {
    let p = spec.presentation()?;
    let n = p.len();

    let t = Instant::now();
    let u = umbrella(&p, &weights_for(&p, s)?)?;
    let umbrella_ms = ms(t);

    let t = Instant::now();
    let toric = toric_ideal(&p, &MonomialOrder::weighted(vec![Rat::from_integer(1.into()); n])?)?;
    let toric_ms = ms(t);

    let t = Instant::now();
    let result = algorithm7(&p, &NewtonOptions::default())?;
    let verification = verify_theorem34(&result, &s.bound)?;
    if !verification.passes() {
        return Err(CliError::Invariant(toricnf_core::Error::Invariant(format!(
            "normal form check failed: {:?}",
            verification.violations
        ))));
    }
    let newton = NewtonReport::new(&result, &verification, s.trace)?;
    let newton_ms = ms(t);

    let t = Instant::now();
    let hbar = cm_check(&p, s)?;
    let hbar_ms = ms(t);

    let t = Instant::now();
    let volume = normalized_volume(&with_origin(&p))?.to_string();
    let volume_ms = ms(t);

    Ok(AnalysisReport {
        presentation: PresentationReport::new(&spec.name, &p)?,
        umbrella: UmbrellaReport::new(&p, &u),
        toric: BasisReport::new(toric.basis()),
        newton,
        hbar,
        volume,
        timing: s.timing.then_some(Timing { umbrella_ms, toric_ms, newton_ms, hbar_ms, volume_ms }),
    })
}

pub fn toric(spec: &InputSpec, s: &Settings) -> Result<ToricReport> {
    let p = spec.presentation()?;
    let w = match &s.weight {
        Some(_) => weights_for(&p, s)?.as_slice().to_vec(),
        None if s.tiebreak == TiebreakName::Grevlex => vec![Rat::zero(); p.len()],
        None => vec![Rat::from_integer(1.into()); p.len()],
    };
    let ord = MonomialOrder::new(w, s.tiebreak.into())?;
    let t = toric_ideal(&p, &ord)?;
    Ok(ToricReport { presentation: PresentationReport::new(&spec.name, &p)?, basis: BasisReport::new(t.basis()) })
}

pub fn umbrella_cmd(spec: &InputSpec, s: &Settings) -> Result<UmbrellaCommandReport> {
    let p = spec.presentation()?;
    let u = umbrella(&p, &weights_for(&p, s)?)?;
    Ok(UmbrellaCommandReport { presentation: PresentationReport::new(&spec.name, &p)?, umbrella: UmbrellaReport::new(&p, &u) })
}

/// Runs either a single membership query (`target`) or the bounded
/// `H = H̄` check, optionally on the semigroup `H ∩ C_τ` of the face spanned
/// by the 1-based generator indices in `face`.
pub fn hbar(spec: &InputSpec, s: &Settings, target: Option<&[i64]>, face: Option<&[usize]>) -> Result<HbarReport> {
    let p = spec.presentation()?;
    let presentation = PresentationReport::new(&spec.name, &p)?;
    let (q, face) = match face {
        Some(members) => {
            let members = zero_based(members, p.len())?;
            let f = face_semigroup_generators(&p, &members, None)?;
            (f.presentation()?, Some(FaceSemigroupReport::new(&p, &f)?))
        }
        None => (p, None),
    };
    let (verdict, check) = match target {
        Some(h) => {
            if h.len() != q.dim() {
                return Err(CliError::Usage(format!("--target has {} entries, expected {}", h.len(), q.dim())));
            }
            let h: Vec<Int> = h.iter().map(|&x| Int::from(x)).collect();
            let mut search = HbarSearch::new(&q, &s.witness_bound)?;
            let v = search.verdict(&h)?;
            (Some(VerdictReport::new(&q, &codim1_cone_faces(&q), &h, &v)?), None)
        }
        None => (None, Some(cm_check(&q, s)?)),
    };
    Ok(HbarReport { presentation, face, verdict, check })
}

pub fn volume(spec: &InputSpec) -> Result<VolumeReport> {
    let p = spec.presentation()?;
    let volume = normalized_volume(&with_origin(&p))?.to_string();
    Ok(VolumeReport { presentation: PresentationReport::new(&spec.name, &p)?, volume })
}

pub fn zero_based(members: &[usize], n: usize) -> Result<Vec<usize>> {
    members
        .iter()
        .map(|&j| {
            if j == 0 || j > n {
                Err(CliError::Usage(format!("generator index {j} outside 1..={n}")))
            } else {
                Ok(j - 1)
            }
        })
        .collect()
}
