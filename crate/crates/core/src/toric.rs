//! Toric ideals `I_𝒜`, the face ideals `I^L_τ` and membership in the radical
//! of an initial ideal.

use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::gbasis::{buchberger, GroebnerBasis, Monomial, MonomialOrder, Polynomial, Tiebreak};
use crate::geometry::Umbrella;
use crate::lattice::{kernel_lattice, SemigroupPresentation};
use crate::{Error, Int, Result};

/// The toric ideal of a presentation with a reduced Gröbner basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricIdeal {
    presentation: SemigroupPresentation,
    basis: GroebnerBasis,
}

impl ToricIdeal {
    pub fn presentation(&self) -> &SemigroupPresentation {
        &self.presentation
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn into_basis(self) -> GroebnerBasis {
        self.basis
    }
}

fn exponent(x: &Int) -> Result<u32> {
    x.abs().to_u32().ok_or_else(|| Error::TooLarge(alloc::format!("kernel entry {x}")))
}

/// `y^{u₊} − y^{u₋}`.
pub fn binomial_of(u: &[Int]) -> Result<Polynomial> {
    let mut plus = Vec::with_capacity(u.len());
    let mut minus = Vec::with_capacity(u.len());
    for x in u {
        let e = exponent(x)?;
        plus.push(if x.is_positive() { e } else { 0 });
        minus.push(if x.is_negative() { e } else { 0 });
    }
    Ok(Polynomial::binomial(Monomial::new(plus), Monomial::new(minus)))
}

/// Swaps variables `i` and `j`.
fn swap(n: usize, i: usize, j: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(i, j);
    perm
}

/// `I : y_v^∞` for an ideal homogeneous in the positive grading of `p`.
///
/// Under a grading refined by reverse lexicographic order with `y_v` last, a
/// homogeneous polynomial whose leading monomial is divisible by `y_v` is
/// divisible by `y_v`, so dividing the basis elements by their `y_v`-content
/// gives a basis of the saturation.
fn saturate(gens: &[Polynomial], p: &SemigroupPresentation, v: usize) -> Result<Vec<Polynomial>> {
    let n = p.len();
    let last = n - 1;
    let perm = swap(n, v, last);
    let weights: Vec<_> = p.generators().iter().map(|a| p.level(a)).collect();
    let ord = MonomialOrder::new(weights, Tiebreak::Revlex)?.permuted(&perm)?;
    let swapped: Vec<Polynomial> = gens.iter().map(|g| g.permute(&perm)).collect();
    let g = buchberger(&swapped, &ord)?;
    Ok(g
        .elements()
        .iter()
        .map(|f| f.divide_variable(last, f.variable_content(last)).permute(&perm))
        .collect())
}

/// The toric ideal of `p` with its reduced Gröbner basis under `ord`.
///
/// Starts from the binomials of a basis of the kernel lattice, which generate
/// the lattice ideal up to saturation, and saturates by every variable.
pub fn toric_ideal(p: &SemigroupPresentation, ord: &MonomialOrder) -> Result<ToricIdeal> {
    let n = p.len();
    if ord.nvars() != n {
        return Err(Error::DimensionMismatch { expected: n, found: ord.nvars() });
    }
    let mut gens: Vec<Polynomial> =
        kernel_lattice(p.matrix()).iter().map(|u| binomial_of(u)).collect::<Result<_>>()?;
    if !gens.is_empty() {
        for v in 0..n {
            gens = saturate(&gens, p, v)?;
        }
    }
    let basis = buchberger(&gens, ord)?;
    Ok(ToricIdeal { presentation: p.clone(), basis })
}

/// `I^L_τ = I_{𝒜_τ} + ⟨y_a : a ∉ τ⟩`, as a reduced grevlex basis in the
/// variables of `p`.
pub fn face_ideal(p: &SemigroupPresentation, u: &Umbrella, members: &[usize]) -> Result<GroebnerBasis> {
    if !u.is_face(members) {
        return Err(Error::NotAFace(members.to_vec()));
    }
    let n = p.len();
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    let sub = p.sub_presentation(&sorted)?;
    let inner = toric_ideal(&sub, &MonomialOrder::grevlex(sorted.len()))?;
    let mut gens: Vec<Polynomial> = inner
        .basis()
        .elements()
        .iter()
        .map(|g| {
            let terms = g.terms().map(|(m, c)| {
                let mut e = alloc::vec![0u32; n];
                for (k, &j) in sorted.iter().enumerate() {
                    e[j] = m.exponents()[k];
                }
                (Monomial::new(e), c.clone())
            });
            Polynomial::from_terms(n, terms)
        })
        .collect::<Result<_>>()?;
    gens.extend((0..n).filter(|j| !sorted.contains(j)).map(|j| Polynomial::monomial(Monomial::var(n, j))));
    buchberger(&gens, &MonomialOrder::grevlex(n))
}

/// Whether `y^m` lies in the radical of `gr^L(I_𝒜)`, the intersection of the
/// ideals `I^L_σ` over the facets: for every facet some variable of `m`
/// belongs to a generator off that facet.
pub fn in_radical_of_initial(u: &Umbrella, m: &Monomial) -> bool {
    let support = m.support();
    !support.is_empty()
        && u.facets().iter().all(|f| support.iter().any(|j| !f.members.contains(j)))
}

/// Checks `A·p = A·q` for every binomial `y^p − y^q` of `g`.
pub fn substitution_holds(p: &SemigroupPresentation, g: &GroebnerBasis) -> bool {
    let image = |m: &Monomial| -> Vec<Int> {
        let mut out = alloc::vec![Int::zero(); p.dim()];
        for (j, &e) in m.exponents().iter().enumerate() {
            for (o, a) in out.iter_mut().zip(p.generator(j)) {
                *o += a * Int::from(e);
            }
        }
        out
    };
    g.elements().iter().all(|f| {
        let ms: Vec<&Monomial> = f.terms().map(|(m, _)| m).collect();
        ms.len() == 2 && image(ms[0]) == image(ms[1])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{umbrella, WeightVector};
    use alloc::string::String;
    use alloc::vec;

    fn sorted(g: &GroebnerBasis) -> Vec<String> {
        let mut v = g.render();
        v.sort();
        v
    }

    fn quartic() -> SemigroupPresentation {
        SemigroupPresentation::from_i64_columns(&[[1, 0], [1, 1], [1, 3], [1, 4]]).unwrap()
    }

    #[test]
    fn quartic_toric_ideal() {
        let t = toric_ideal(&quartic(), &MonomialOrder::grevlex(4)).unwrap();
        let mut want = vec!["y2*y3 - y1*y4", "y2^3 - y1^2*y3", "y3^3 - y2*y4^2", "y1*y3^2 - y2^2*y4"];
        want.sort();
        assert_eq!(sorted(t.basis()), want);
        assert!(substitution_holds(&quartic(), t.basis()));
    }

    #[test]
    fn identity_has_zero_ideal() {
        let p = SemigroupPresentation::from_i64_columns(&[[1, 0], [0, 1]]).unwrap();
        assert!(toric_ideal(&p, &MonomialOrder::grevlex(2)).unwrap().basis().is_empty());
    }

    #[test]
    fn example37_ideal() {
        let p = SemigroupPresentation::from_i64_columns(&[[1, 0], [2, 2], [0, 1]]).unwrap();
        let t = toric_ideal(&p, &MonomialOrder::grevlex(3)).unwrap();
        assert_eq!(t.basis().render(), vec!["y1^2*y3^2 - y2"]);
    }

    #[test]
    fn negative_entries_are_fine() {
        let p = SemigroupPresentation::from_i64_columns(&[[0, 2], [0, 3], [-1, 1], [-1, 2]]).unwrap();
        let t = toric_ideal(&p, &MonomialOrder::grevlex(4)).unwrap();
        assert!(substitution_holds(&p, t.basis()));
        // a2 + a3 = a1 + a4 = (−1, 4)
        let rel = Polynomial::parse("y2*y3 - y1*y4", 4).unwrap();
        assert!(t.basis().contains(&rel).unwrap());
    }

    #[test]
    fn face_ideal_of_example23_face() {
        let p = SemigroupPresentation::from_i64_columns(&[
            [1, 0, 0],
            [1, 1, 0],
            [1, 3, 0],
            [1, 4, 0],
            [1, 1, 1],
            [1, 4, 1],
        ])
        .unwrap();
        let u = umbrella(&p, &WeightVector::zeros(6)).unwrap();
        let g = face_ideal(&p, &u, &[0, 1, 2, 3]).unwrap();
        let mut want =
            vec!["y2*y3 - y1*y4", "y2^3 - y1^2*y3", "y3^3 - y2*y4^2", "y1*y3^2 - y2^2*y4", "y5", "y6"];
        want.sort();
        assert_eq!(sorted(&g), want);
        assert_eq!(face_ideal(&p, &u, &[0, 5]), Err(Error::NotAFace(vec![0, 5])));
    }

    #[test]
    fn radical_membership() {
        let p = SemigroupPresentation::from_i64_columns(&[[2, 0, 0], [3, 0, 0], [0, 1, 0], [1, 1, 0], [2, 0, 1], [0, 2, 1]])
            .unwrap();
        let u = umbrella(&p, &WeightVector::ones(6)).unwrap();
        assert!(in_radical_of_initial(&u, &Monomial::new(vec![1, 0, 1, 0, 0, 0])));
        assert!(!in_radical_of_initial(&u, &Monomial::var(6, 5)));
        assert!(!in_radical_of_initial(&u, &Monomial::one(6)));
    }
}
