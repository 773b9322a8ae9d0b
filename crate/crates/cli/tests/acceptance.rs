//! Acceptance criteria 1–6. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use toricnf::fixture::same_generators;
use toricnf_core::gbasis::{buchberger, is_variable_nzd, Monomial, MonomialOrder, Polynomial};
use toricnf_core::geometry::{normalized_volume, umbrella, WeightVector};
use toricnf_core::newton::{
    algorithm7, facets_from_groebner, initial_queue, is_eventually_leading, verify_theorem34, NewtonOptions,
    QueueEntry,
};
use toricnf_core::semigroup::{cm_necessary_check, face_semigroup_generators, hbar_member, hbar_minus_h, HbarStatus};
use toricnf_core::toric::{in_radical_of_initial, substitution_holds, toric_ideal};
use toricnf_core::{Int, Rat, SemigroupPresentation};

type Outcome = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

const CASES: u32 = 256;

fn q(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn pres(cols: &[&[i64]]) -> SemigroupPresentation {
    SemigroupPresentation::from_i64_columns(cols).unwrap()
}

fn ints(v: &[&[i64]]) -> Vec<Vec<Int>> {
    v.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect()
}

fn rats(v: &[(i64, i64)]) -> Vec<Rat> {
    v.iter().map(|&(n, d)| q(n, d)).collect()
}

fn ones(n: usize) -> Vec<Rat> {
    vec![q(1, 1); n]
}

fn e(i: usize, j: usize) -> QueueEntry {
    QueueEntry(i - 1, j - 1)
}

fn corpus() -> Vec<(&'static str, SemigroupPresentation)> {
    vec![
        ("example15", pres(&[&[2, 0, 0], &[3, 0, 0], &[0, 1, 0], &[1, 1, 0], &[2, 0, 1], &[0, 2, 1]])),
        ("example23", pres(&[&[1, 0, 0], &[1, 1, 0], &[1, 3, 0], &[1, 4, 0], &[1, 1, 1], &[1, 4, 1]])),
        ("example37", pres(&[&[1, 0], &[2, 2], &[0, 1]])),
        ("example51", pres(&[&[1, 0], &[1, 1], &[1, 3], &[1, 4]])),
        ("example52", pres(&[&[0, 2], &[0, 3], &[-1, 1], &[-1, 2], &[-2, 2], &[1, 1]])),
    ]
}

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn criterion1() -> Outcome {
    let p = corpus().swap_remove(0).1;
    let u = umbrella(&p, &WeightVector::ones(6)).map_err(err)?;
    let want = [
        (vec![1, 3, 5], rats(&[(1, 3), (2, 3), (-1, 3)])),
        (vec![1, 4, 5], rats(&[(1, 3), (1, 3), (1, 3)])),
        (vec![2, 3, 5], rats(&[(0, 1), (1, 1), (-1, 1)])),
    ];
    let got: Vec<(Vec<usize>, Vec<Rat>)> = u.facets().iter().map(|f| (f.members.clone(), f.functional.clone())).collect();
    check!(got == want, "facets {got:?}");
    let r = algorithm7(&p, &NewtonOptions::default()).map_err(err)?;
    check!(r.trace.max_minor == Int::from(6), "M = {}", r.trace.max_minor);
    check!(r.trace.initial_queue == vec![e(2, 3), e(3, 5), e(4, 5)], "7a queue {:?}", r.trace.initial_queue);
    check!(
        r.trace.queue_with_interior == vec![e(1, 3), e(2, 3), e(3, 5), e(4, 5)],
        "7d queue {:?}",
        r.trace.queue_with_interior
    );
    let first = &r.trace.rounds[0];
    let removed: Vec<QueueEntry> = first.removed.iter().map(|(x, _)| *x).collect();
    check!(removed == vec![e(2, 3)], "first removal {removed:?}");
    for (x, t) in &first.removed {
        check!(t.reduced_degree < t.degree, "{x}: no degree drop");
    }
    let appended: Vec<(Vec<Int>, Rat)> =
        r.trace.rounds.iter().flat_map(|x| &x.appended).map(|a| (a.generator.clone(), a.degree.clone())).collect();
    let want: Vec<(Vec<Int>, Rat)> = ints(&[&[2, 1, 0], &[2, 1, 1], &[3, 1, 1]]).into_iter().zip(rats(&[(4, 3), (4, 3), (5, 3)])).collect();
    check!(appended == want, "appended {appended:?}");
    let eq46: Vec<String> = [
        "y1*y3", "y4*y5", "y3*y5", "y2*y4 - y1*y7", "y2*y3", "y1^3 - y2^2", "y4*y8", "y3*y8",
        "y2*y8 - y1*y9", "y5*y7", "y3*y7", "y1^2*y4 - y2*y7", "y4*y9", "y3*y9", "y7*y8",
        "y1^2*y8 - y2*y9", "y1*y5*y6 - y8^2", "y1*y4^2 - y7^2", "y7*y9", "y2*y5*y6 - y8*y9",
        "y1*y8^2 - y9^2", "y8^4 - y5*y6*y9^2",
    ]
    .map(String::from)
    .to_vec();
    check!(r.graded_generators.len() == 22, "{} graded generators", r.graded_generators.len());
    check!(same_generators(&eq46, &r.graded_generators, r.basis.order()).map_err(err)?, "graded ring differs");
    Ok(())
}

fn criterion2() -> Outcome {
    let p = corpus().swap_remove(1).1;
    let tau1 = p.sub_presentation(&[0, 1, 2, 3]).map_err(err)?;
    let ord = MonomialOrder::grevlex(4);
    let t = toric_ideal(&tau1, &ord).map_err(err)?;
    let quartic: Vec<String> =
        ["y2*y3 - y1*y4", "y2^3 - y1^2*y3", "y3^3 - y2*y4^2", "y1*y3^2 - y2^2*y4"].map(String::from).to_vec();
    check!(t.basis().len() == 4, "face ideal {:?}", t.basis().render());
    check!(same_generators(&quartic, t.basis().elements(), &ord).map_err(err)?, "face ideal {:?}", t.basis().render());

    let mut pts = vec![vec![Int::zero(); 3]];
    pts.extend(p.generators().iter().cloned());
    let v = normalized_volume(&pts).map_err(err)?;
    check!(v == Int::from(7), "volume {v}");

    let mut j: Vec<Polynomial> = quartic.iter().map(|s| Polynomial::parse(s, 6).unwrap()).collect();
    j.push(Polynomial::parse("y4*y5 - y2*y6", 6).unwrap());
    j.push(Polynomial::parse("y3*y5 - y1*y6", 6).unwrap());
    let g = buchberger(&j, &MonomialOrder::grevlex(6)).map_err(err)?;
    let lms: Vec<Monomial> = g.leading_monomials();
    let printed: Vec<Monomial> = j.iter().map(|f| f.leading_monomial(g.order()).unwrap()).collect();
    check!(g.len() == 6 && printed.iter().all(|m| lms.contains(m)), "the six generators are not a Gröbner basis");
    check!(is_variable_nzd(&g, 5), "y6 is a zerodivisor on the initial ideal");

    let h = ints(&[&[1, 2, 0]]).remove(0);
    let v = hbar_member(&p, &h, &q(10, 1)).map_err(err)?;
    check!(v.status == HbarStatus::NotMemberWithinBound, "(1,2,0): {:?}", v.status);
    let face = face_semigroup_generators(&p, &[0, 1, 2, 3], None).map_err(err)?.presentation().map_err(err)?;
    let v = hbar_member(&face, &h, &q(10, 1)).map_err(err)?;
    let mut w: Vec<Vec<Int>> = v.witnesses.iter().map(|x| x.1.clone()).collect();
    w.sort();
    check!(v.status == HbarStatus::Member, "(1,2,0) on the face: {:?}", v.status);
    check!(w == ints(&[&[1, 0, 0], &[1, 4, 0]]), "witnesses {w:?}");
    Ok(())
}

fn criterion3() -> Outcome {
    let p = corpus().swap_remove(2).1;
    let u = umbrella(&p, &WeightVector::ones(3)).map_err(err)?;
    let d = u.degree(&ints(&[&[1, 1]])[0]).map_err(err)?;
    check!(d == q(1, 2), "deg (1,1) = {d}");
    let r = algorithm7(&p, &NewtonOptions::default()).map_err(err)?;
    check!(r.enlarged.generators() == ints(&[&[1, 0], &[2, 2], &[0, 1], &[1, 1]]).as_slice(), "A' = {:?}", r.enlarged.generators());
    check!(r.weights.as_slice() == rats(&[(1, 1), (1, 1), (1, 1), (1, 2)]).as_slice(), "L = {:?}", r.weights);
    let want = ["y1*y3", "y4^2 - y2"].map(String::from).to_vec();
    check!(same_generators(&want, &r.graded_generators, r.basis.order()).map_err(err)?, "graded ring differs");
    Ok(())
}

fn criterion4() -> Outcome {
    let p = corpus().swap_remove(3).1;
    let six = q(6, 1);
    let got = hbar_minus_h(&p, &six, &six).map_err(err)?;
    check!(got == ints(&[&[1, 2]]), "H̄ ∖ H = {got:?}");
    let plus = p.with_generator(ints(&[&[0, 3]]).remove(0)).map_err(err)?;
    let got = hbar_minus_h(&plus, &six, &six).map_err(err)?;
    check!(got.is_empty(), "H̄ ∖ H for H + ℕ(0,3) = {got:?}");
    let a = cm_necessary_check(&p, &six, &six).map_err(err)?;
    let b = cm_necessary_check(&plus, &six, &six).map_err(err)?;
    check!(!a.passes_within_bounds && b.passes_within_bounds, "verdicts {} / {}", a.passes_within_bounds, b.passes_within_bounds);
    Ok(())
}

fn criterion5() -> Outcome {
    let p = corpus().swap_remove(4).1;
    let u = umbrella(&p, &WeightVector::ones(6)).map_err(err)?;
    let facets: Vec<Vec<usize>> = u.facets().iter().map(|f| f.members.clone()).collect();
    check!(facets == vec![vec![1, 4], vec![1, 5]], "facets {facets:?}");
    let f = face_semigroup_generators(&p, &[1, 4], Some(&q(9, 1))).map_err(err)?;
    let mut gens = f.generators.clone();
    gens.sort();
    check!(gens == ints(&[&[-1, 1], &[-1, 2], &[0, 2], &[0, 3]]), "face generators {gens:?}");
    let c = cm_necessary_check(&f.presentation().map_err(err)?, &q(6, 1), &q(6, 1)).map_err(err)?;
    check!(c.counterexamples == ints(&[&[0, 1]]), "H̄ ∖ H = {:?}", c.counterexamples);
    Ok(())
}

fn run_property<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config { cases: CASES, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn combination(p: &SemigroupPresentation, c: &[u32]) -> Vec<Int> {
    let mut h = vec![Int::zero(); p.dim()];
    for (j, &k) in c.iter().enumerate() {
        for (x, a) in h.iter_mut().zip(p.generator(j)) {
            *x += a * Int::from(k);
        }
    }
    h
}

fn permuted(p: &SemigroupPresentation, seed: u64) -> SemigroupPresentation {
    let mut cols = p.generators().to_vec();
    let mut s = seed;
    for i in (1..cols.len()).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        cols.swap(i, (s >> 33) as usize % (i + 1));
    }
    SemigroupPresentation::from_columns(&cols).unwrap()
}

fn small_polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..=2, 3), -3i64..=3), 1..=3).prop_map(|terms| {
        Polynomial::from_terms(3, terms.into_iter().map(|(e, c)| (Monomial::new(e), q(c, 1)))).unwrap()
    })
}

fn criterion6() -> Outcome {
    let corpus = corpus();
    let pick = 0usize..corpus.len();

    run_property(
        "additivity on shared facet cones",
        (pick.clone(), prop::collection::vec(0u32..=3, 6), prop::collection::vec(0u32..=3, 6)),
        |(k, c1, c2)| {
            let p = &corpus[k].1;
            let n = p.len();
            let (h1, h2) = (combination(p, &c1[..n]), combination(p, &c2[..n]));
            prop_assume!(h1.iter().any(|x| !x.is_zero()) && h2.iter().any(|x| !x.is_zero()));
            let u = umbrella(p, &WeightVector::ones(n)).unwrap();
            let s: Vec<Int> = h1.iter().zip(&h2).map(|(a, b)| a + b).collect();
            let additive = u.degree(&s).unwrap() == u.degree(&h1).unwrap() + u.degree(&h2).unwrap();
            prop_assert_eq!(additive, u.cofacial(&h1, &h2).unwrap());
            Ok(())
        },
    )?;

    run_property(
        "Gröbner invariants",
        (prop::collection::vec(small_polynomial(), 1..=3), small_polynomial(), prop::collection::vec(0i64..=3, 3)),
        |(gens, f, w)| {
            let ord = MonomialOrder::weighted(w.into_iter().map(|x| q(x, 1)).collect()).unwrap();
            let g = buchberger(&gens, &ord).unwrap();
            prop_assert!(g.s_pairs_reduce_to_zero().unwrap());
            let nf = g.normal_form(&f).unwrap();
            prop_assert_eq!(g.normal_form(&nf).unwrap(), nf);
            let mut rev = gens.clone();
            rev.reverse();
            prop_assert_eq!(buchberger(&rev, &ord).unwrap().render(), g.render());
            Ok(())
        },
    )?;

    run_property("toric basis invariants", (pick.clone(), any::<u64>()), |(k, seed)| {
        let p = permuted(&corpus[k].1, seed);
        let n = p.len();
        let g = toric_ideal(&p, &MonomialOrder::grevlex(n)).unwrap().into_basis();
        prop_assert!(substitution_holds(&p, &g));
        prop_assert!(g.s_pairs_reduce_to_zero().unwrap());
        let gens: Vec<Polynomial> = g.elements().iter().rev().cloned().collect();
        prop_assert_eq!(buchberger(&gens, g.order()).unwrap().render(), g.render());
        Ok(())
    })?;

    run_property("facets from the Gröbner basis", (pick.clone(), any::<u64>()), |(k, seed)| {
        let p = permuted(&corpus[k].1, seed);
        let n = p.len();
        let g = toric_ideal(&p, &MonomialOrder::weighted(ones(n)).unwrap()).unwrap().into_basis();
        let m = u32::try_from(&p.max_minor_bound()).unwrap();
        let (queue, nilpotent) = initial_queue(n, &g, m).unwrap();
        let hull: Vec<Vec<usize>> =
            umbrella(&p, &WeightVector::ones(n)).unwrap().facets().iter().map(|f| f.members.clone()).collect();
        prop_assert_eq!(facets_from_groebner(n, &queue, &nilpotent), hull);
        Ok(())
    })?;

    run_property("power test against the radical", (pick.clone(), any::<u64>()), |(k, seed)| {
        let p = permuted(&corpus[k].1, seed);
        let n = p.len();
        let u = umbrella(&p, &WeightVector::ones(n)).unwrap();
        let g = toric_ideal(&p, &MonomialOrder::weighted(ones(n)).unwrap()).unwrap().into_basis();
        let m = u32::try_from(&p.max_minor_bound()).unwrap();
        for i in 0..n {
            for j in i..n {
                let mono = QueueEntry(i, j).monomial(n);
                prop_assert_eq!(is_eventually_leading(&mono, &ones(n), &g, m).unwrap(), in_radical_of_initial(&u, &mono));
            }
        }
        Ok(())
    })?;

    for (name, p) in &corpus {
        let r = algorithm7(p, &NewtonOptions::default()).map_err(err)?;
        let report = verify_theorem34(&r, &q(8, 1)).map_err(err)?;
        check!(report.passes(), "{name}: {:?}", report.violations);
    }
    run_property("normal form theorem", (pick, any::<u64>()), |(k, seed)| {
        let p = permuted(&corpus[k].1, seed);
        let r = algorithm7(&p, &NewtonOptions::default()).unwrap();
        let report = verify_theorem34(&r, &q(8, 1)).unwrap();
        prop_assert!(report.passes(), "{:?}", report.violations);
        Ok(())
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("Example 15 pipeline", Duration::from_secs(30), criterion1),
        ("Example 23", Duration::from_secs(10), criterion2),
        ("Example 37", Duration::from_secs(1), criterion3),
        ("Example 51", Duration::from_secs(5), criterion4),
        ("Example 52", Duration::from_secs(5), criterion5),
        ("property suites", Duration::MAX, criterion6),
    ];
    let mut failed = 0;
    for (k, (name, limit, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(()) if elapsed > limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
            o => o,
        };
        match outcome {
            Ok(()) => println!("PASS criterion {}: {name} ({:.2} s)", k + 1, elapsed.as_secs_f64()),
            Err(m) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({:.2} s): {m}", k + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
