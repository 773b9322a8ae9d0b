mod common;

use common::{corpus, q};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use toricnf_core::gbasis::{buchberger, Monomial, MonomialOrder, Polynomial};
use toricnf_core::geometry::{normalized_volume, umbrella, WeightVector};
use toricnf_core::lattice::{hermite_normal_form, kernel_lattice, positive_grading};
use toricnf_core::semigroup::{contains, hbar_member, HbarStatus};
use toricnf_core::toric::{binomial_of, substitution_holds, toric_ideal};
use toricnf_core::{Int, IntMatrix, Rat, SemigroupPresentation};

fn config() -> ProptestConfig {
    ProptestConfig { cases: 256, ..ProptestConfig::default() }
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

fn small_matrix(rows: usize, cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(lo..=hi, rows * cols)
        .prop_map(move |v| IntMatrix::new(rows, cols, v.into_iter().map(Int::from).collect()).unwrap())
}

/// Columns with first coordinate ≥ 1, so the semigroup is positive.
fn small_presentation() -> impl Strategy<Value = SemigroupPresentation> {
    (2usize..=3, 3usize..=5).prop_flat_map(|(d, n)| {
        prop::collection::vec(prop::collection::vec(0i64..=3, d), n).prop_filter_map("degenerate", |mut cols| {
            for c in cols.iter_mut() {
                c[0] += 1;
            }
            SemigroupPresentation::from_i64_columns(&cols).ok()
        })
    })
}

fn gcd_of_maximal_minors(rows: &[Vec<Int>]) -> Int {
    let k = rows[0].len();
    let mut g = Int::zero();
    let n = rows.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let m = IntMatrix::from_rows(&idx.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>()).unwrap();
        g = g.gcd(&m.determinant().unwrap());
        let mut i = k;
        loop {
            if i == 0 {
                return g;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for t in i + 1..k {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
        }
    }
}

fn det3(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn sub(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: [i64; 3], b: [i64; 3]) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// `3!·vol` of the hull of full-dimensional points in ℤ³ by pulling from the
/// first point, then pulling each facet from its first point.
fn pulled_volume(pts: &[[i64; 3]]) -> i64 {
    let v = pts[0];
    let mut facets: Vec<(Vec<usize>, [i64; 3])> = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                let n = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
                if n == [0, 0, 0] {
                    continue;
                }
                let s: Vec<i64> = pts.iter().map(|p| dot(n, sub(*p, pts[i]))).collect();
                if s.iter().all(|&x| x >= 0) || s.iter().all(|&x| x <= 0) {
                    let members: Vec<usize> = (0..pts.len()).filter(|&t| s[t] == 0).collect();
                    if !facets.iter().any(|(m, _)| *m == members) {
                        facets.push((members, n));
                    }
                }
            }
        }
    }
    let mut total = 0;
    for (members, n) in &facets {
        if members.contains(&0) {
            continue;
        }
        let w = pts[members[0]];
        let mut edges: Vec<Vec<usize>> = Vec::new();
        for &a in members {
            for &b in members {
                if a >= b {
                    continue;
                }
                let e = sub(pts[b], pts[a]);
                let s: Vec<i64> = members.iter().map(|&c| dot(*n, cross(e, sub(pts[c], pts[a])))).collect();
                if s.iter().all(|&x| x >= 0) || s.iter().all(|&x| x <= 0) {
                    let on: Vec<usize> = members.iter().copied().filter(|&c| cross(e, sub(pts[c], pts[a])) == [0, 0, 0]).collect();
                    if !edges.contains(&on) {
                        edges.push(on);
                    }
                }
            }
        }
        for on in edges {
            if on.contains(&members[0]) {
                continue;
            }
            let lo = *on.iter().min_by_key(|&&c| pts[c]).unwrap();
            let hi = *on.iter().max_by_key(|&&c| pts[c]).unwrap();
            total += det3(sub(w, v), sub(pts[lo], v), sub(pts[hi], v)).abs();
        }
    }
    total
}

fn volume_oracle(pts: &[[i64; 3]]) -> Int {
    let diffs: Vec<Vec<Int>> = pts[1..].iter().map(|p| sub(*p, pts[0]).iter().map(|&x| Int::from(x)).collect()).collect();
    Int::from(pulled_volume(pts)) / gcd_of_maximal_minors(&diffs)
}

fn to_int(pts: &[[i64; 3]]) -> Vec<Vec<Int>> {
    pts.iter().map(|p| p.iter().map(|&x| Int::from(x)).collect()).collect()
}

#[test]
fn volume_of_example15_matches_pulling() {
    let pts = [[0, 0, 0], [2, 0, 0], [3, 0, 0], [0, 1, 0], [1, 1, 0], [2, 0, 1], [0, 2, 1]];
    assert_eq!(normalized_volume(&to_int(&pts)).unwrap(), volume_oracle(&pts));
    let pts = [[0, 0, 0], [1, 0, 0], [1, 1, 0], [1, 3, 0], [1, 4, 0], [1, 1, 1], [1, 4, 1]];
    assert_eq!(volume_oracle(&pts), Int::from(7));
}

/// Brute-force oracle: every binomial of a kernel vector with entries in
/// `-2..=2` lies in the toric ideal.
#[test]
fn kernel_binomials_lie_in_the_toric_ideal() {
    for (name, p) in corpus() {
        let n = p.len();
        let g = toric_ideal(&p, &MonomialOrder::grevlex(n)).unwrap().into_basis();
        assert!(substitution_holds(&p, &g), "{name}");
        let mut u = vec![-2i64; n];
        loop {
            let v: Vec<Int> = u.iter().map(|&x| Int::from(x)).collect();
            if v.iter().any(|x| !x.is_zero()) && p.matrix().mul_vec(&v).unwrap().iter().all(Zero::is_zero) {
                assert!(g.contains(&binomial_of(&v).unwrap()).unwrap(), "{name}: {u:?}");
            }
            let mut i = 0;
            while i < n && u[i] == 2 {
                u[i] = -2;
                i += 1;
            }
            if i == n {
                break;
            }
            u[i] += 1;
        }
    }
}

#[test]
fn generator_degrees() {
    for (name, p) in corpus() {
        let u = umbrella(&p, &WeightVector::ones(p.len())).unwrap();
        for (j, a) in p.generators().iter().enumerate() {
            let d = u.degree(a).unwrap();
            assert!(d.is_positive() && d <= Rat::one(), "{name}");
            let on_facet = u.facets().iter().any(|f| f.members.contains(&j));
            assert_eq!(d == Rat::one(), on_facet, "{name}: a{}", j + 1);
        }
    }
}

#[test]
fn zero_weight_functionals_cut_out_their_faces() {
    for (name, p) in corpus() {
        let u = umbrella(&p, &WeightVector::zeros(p.len())).unwrap();
        for f in u.cone_faces() {
            for (j, a) in p.generators().iter().enumerate() {
                let v = f.value(a);
                assert_eq!(v.is_zero(), f.members.contains(&j), "{name}");
                assert!(!v.is_negative(), "{name}");
            }
        }
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn hnf_is_a_unimodular_transform(m in (1usize..=3, 1usize..=4).prop_flat_map(|(r, c)| small_matrix(r, c, -4, 4))) {
        let (h, u) = hermite_normal_form(&m);
        prop_assert_eq!(u.mul(&m).unwrap(), h);
        prop_assert_eq!(u.determinant().unwrap().abs(), Int::one());
    }

    #[test]
    fn kernel_complements_the_row_space(m in (1usize..=3, 2usize..=5).prop_flat_map(|(r, c)| small_matrix(r, c, -3, 3))) {
        let k = kernel_lattice(&m);
        for v in &k {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        prop_assert_eq!(k.len() + m.rank(), m.cols());
        let mut rows = k.clone();
        rows.extend(m.row_vecs());
        prop_assert_eq!(IntMatrix::from_rows(&rows).unwrap().rank(), m.cols());
    }

    #[test]
    fn grading_is_positive(p in small_presentation()) {
        let l = positive_grading(&p);
        for a in p.generators() {
            let v: Rat = l.iter().zip(a).map(|(x, y)| x * Rat::from_integer(y.clone())).sum();
            prop_assert!(v.is_positive());
        }
    }

    #[test]
    fn max_minor_is_permutation_invariant(p in small_presentation(), seed in any::<u64>()) {
        let mut cols = p.generators().to_vec();
        let n = cols.len();
        cols.rotate_left((seed as usize) % n);
        let q2 = SemigroupPresentation::from_columns(&cols).unwrap();
        prop_assert_eq!(p.max_minor_bound(), q2.max_minor_bound());
    }

    #[test]
    fn max_minor_is_unimodular_invariant(p in small_presentation(), s in -3i64..=3) {
        let d = p.dim();
        let mut t = IntMatrix::identity(d);
        t.set(d - 1, 0, Int::from(s));
        let moved = SemigroupPresentation::new(t.mul(p.matrix()).unwrap()).unwrap();
        prop_assert_eq!(p.max_minor_bound(), moved.max_minor_bound());
    }

    #[test]
    fn degree_is_subadditive_and_additive_exactly_on_shared_cones(
        which in 0usize..5,
        c1 in prop::collection::vec(0u32..=3, 6),
        c2 in prop::collection::vec(0u32..=3, 6),
    ) {
        let (_, p) = corpus().swap_remove(which);
        let n = p.len();
        let h1 = combination(&p, &c1[..n]);
        let h2 = combination(&p, &c2[..n]);
        prop_assume!(h1.iter().any(|x| !x.is_zero()) && h2.iter().any(|x| !x.is_zero()));
        let u = umbrella(&p, &WeightVector::ones(n)).unwrap();
        let sum: Vec<Int> = h1.iter().zip(&h2).map(|(a, b)| a + b).collect();
        let (d1, d2, d) = (u.degree(&h1).unwrap(), u.degree(&h2).unwrap(), u.degree(&sum).unwrap());
        prop_assert!(d <= &d1 + &d2);
        prop_assert_eq!(d == d1 + d2, u.cofacial(&h1, &h2).unwrap());
    }

    #[test]
    fn volume_matches_pulling_and_is_invariant(
        pts in prop::collection::vec(prop::array::uniform3(0i64..=3), 4..=7),
        s in -2i64..=2,
        rot in 0usize..7,
    ) {
        let diffs: Vec<Vec<Int>> = pts[1..].iter().map(|p| sub(*p, pts[0]).iter().map(|&x| Int::from(x)).collect()).collect();
        prop_assume!(IntMatrix::from_rows(&diffs).unwrap().rank() == 3);
        let v = normalized_volume(&to_int(&pts)).unwrap();
        prop_assert_eq!(&v, &volume_oracle(&pts));
        let mut moved: Vec<[i64; 3]> = pts.iter().map(|p| [p[0] + s * p[1], p[1], p[2] - s * p[0] + 5]).collect();
        moved.rotate_left(rot % pts.len());
        prop_assert_eq!(normalized_volume(&to_int(&moved)).unwrap(), v);
    }

    #[test]
    fn toric_bases_are_binomial_and_saturated(p in small_presentation()) {
        let n = p.len();
        let g = toric_ideal(&p, &MonomialOrder::grevlex(n)).unwrap().into_basis();
        prop_assert!(substitution_holds(&p, &g));
        prop_assert!(g.s_pairs_reduce_to_zero().unwrap());
        for f in g.elements() {
            prop_assert!(f.is_binomial());
            for v in 0..n {
                if f.variable_content(v) > 0 {
                    let quotient = f.divide_variable(v, 1);
                    prop_assert!(!g.normal_form(&quotient).unwrap().is_zero());
                }
            }
        }
        for k in kernel_lattice(p.matrix()) {
            prop_assert!(g.contains(&binomial_of(&k).unwrap()).unwrap());
        }
    }

    #[test]
    fn combinations_are_members(which in 0usize..5, c in prop::collection::vec(0u32..=3, 6)) {
        let (_, p) = corpus().swap_remove(which);
        let h = combination(&p, &c[..p.len()]);
        prop_assert!(contains(&p, &h));
        if p.rank() >= 2 {
            let v = hbar_member(&p, &h, &q(4, 1)).unwrap();
            prop_assert_eq!(v.status, HbarStatus::InH);
        }
    }
}

fn small_polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..=2, 3), -3i64..=3), 1..=3).prop_map(|terms| {
        Polynomial::from_terms(3, terms.into_iter().map(|(e, c)| (Monomial::new(e), Rat::from_integer(c.into()))))
            .unwrap()
    })
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::grevlex(3)),
        prop::collection::vec(0i64..=3, 3)
            .prop_map(|w| MonomialOrder::weighted(w.into_iter().map(|x| Rat::from_integer(x.into())).collect()).unwrap()),
    ]
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn groebner_invariants(
        gens in prop::collection::vec(small_polynomial(), 1..=3),
        ord in order(),
        f in small_polynomial(),
        g in small_polynomial(),
    ) {
        let basis = buchberger(&gens, &ord).unwrap();
        prop_assert!(basis.s_pairs_reduce_to_zero().unwrap());
        for x in &gens {
            prop_assert!(basis.contains(x).unwrap());
        }
        let nf = basis.normal_form(&f).unwrap();
        prop_assert_eq!(basis.normal_form(&nf).unwrap(), nf.clone());
        let sum = basis.normal_form(&f.add(&g)).unwrap();
        let split = basis.normal_form(&nf.add(&basis.normal_form(&g).unwrap())).unwrap();
        prop_assert_eq!(sum, split);
        let mut rev = gens.clone();
        rev.reverse();
        let again = buchberger(&rev, &ord).unwrap();
        prop_assert_eq!(again.render(), basis.render());
    }

    #[test]
    fn order_is_multiplicative(
        a in prop::collection::vec(0u32..=4, 3),
        b in prop::collection::vec(0u32..=4, 3),
        c in prop::collection::vec(0u32..=4, 3),
        ord in order(),
    ) {
        let (a, b, c) = (Monomial::new(a), Monomial::new(b), Monomial::new(c));
        let before = ord.compare(&a, &b).unwrap();
        let after = ord.compare(&a.mul(&c).unwrap(), &b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(before, after);
        prop_assert_eq!(before == core::cmp::Ordering::Equal, a == b);
    }
}
