//! Skew Schur functions, adjoints of Schur multiplication, and the
//! commutation relation between raising and lowering by one-row Schur
//! functions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::inner::Form;
use super::{multiply, to_basis, Basis, SymFunc};
use crate::error::Error;
use crate::laurent::{gaussian_binomial, quantum_binomial, LaurentPoly, RationalPoly};
use crate::partitions::{classical_lr, partitions_of, partitions_up_to, Partition, SkewShape};

/// `s_{λ/μ} = Σ_π c^λ_{μπ} s_π` in the Schur basis.
pub fn skew_schur(shape: &SkewShape) -> SymFunc {
    let (lambda, mu) = (shape.outer(), shape.inner());
    SymFunc::from_terms(
        Basis::S,
        partitions_of(shape.size(), None).into_iter().filter_map(|pi| {
            let c = classical_lr(lambda, mu, &pi);
            (c != 0).then(|| (pi, RationalPoly::constant(BigRational::from_integer(c.into()))))
        }),
    )
}

/// `s_{λ/μ}` in the power sums, `Σ_ρ 𝔷(ρ)⁻¹ χ^{λ/μ}(ρ) p_ρ` with the skew
/// character expanded through the Littlewood–Richardson numbers.
pub fn skew_schur_in_p(shape: &SkewShape) -> SymFunc {
    to_basis(&skew_schur(shape), Basis::P)
}

/// `s_{λ/μ} = s*_μ s_λ` under the standard pairing, computed with the
/// power-sum derivatives alone (no tableau counting).
pub fn skew_schur_in_p_via_adjoint(shape: &SkewShape) -> SymFunc {
    let s_lambda = to_basis(&SymFunc::schur(shape.outer().clone()), Basis::P);
    lower_in_p(Form::Macdonald { k: 1 }, shape.inner(), &s_lambda)
}

/// Applies the adjoint of multiplication by `p_j` to a power-sum expansion:
/// `p_μ ↦ j · w(j) · m_j(μ) · p_{μ∖j}` where `w` is the form's part weight.
fn lower_power_sum(form: Form, j: usize, f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis(), Basis::P);
    let weight = form.part_weight(j);
    let mut out = SymFunc::zero(Basis::P);
    for (mu, c) in f.terms() {
        let mult = mu.parts().iter().filter(|&&x| x == j).count();
        if mult == 0 {
            continue;
        }
        let smaller = mu.remove_part(j).expect("part present");
        let factor = BigRational::from_integer(BigInt::from(j * mult));
        out.add_term(smaller, (c * &weight).scalar_mul(&factor));
    }
    out
}

/// The adjoint of multiplication by `s_ν` for `form`, on a power-sum input.
fn lower_in_p(form: Form, nu: &Partition, f: &SymFunc) -> SymFunc {
    let s_nu = to_basis(&SymFunc::schur(nu.clone()), Basis::P);
    let mut out = SymFunc::zero(Basis::P);
    for (rho, c) in s_nu.terms() {
        let mut g = f.clone();
        for &j in rho.parts() {
            if g.is_zero() {
                break;
            }
            g = lower_power_sum(form, j, &g);
        }
        for (mu, x) in g.terms() {
            out.add_term(mu.clone(), x * c);
        }
    }
    out
}

/// `s*_ν f`, the adjoint of multiplication by `s_ν` under `(,)_{t^k,t}`,
/// returned in the basis of `f`.
pub fn schur_lower(nu: &Partition, f: &SymFunc, k: usize) -> SymFunc {
    adjoint_lower(Form::Macdonald { k }, nu, f)
}

/// The adjoint of multiplication by `s_ν` under any [`Form`], returned in
/// the basis of `f`.
pub fn adjoint_lower(form: Form, nu: &Partition, f: &SymFunc) -> SymFunc {
    assert!(form.k() >= 1, "k must be positive");
    let lowered = lower_in_p(form, nu, &to_basis(f, Basis::P));
    to_basis(&lowered, f.basis())
}

/// Which pairing the lowering operators are adjoint for, and the matching
/// normalization of the binomial coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `⟨,⟩_k` with bar-invariant quantum binomials.
    Hermitian,
    /// `(,)_{t^k,t}` with Gaussian binomials having constant term 1.
    Macdonald,
}

impl Convention {
    fn form(self, k: usize) -> Form {
        match self {
            Convention::Hermitian => Form::Hermitian { k },
            Convention::Macdonald => Form::Macdonald { k },
        }
    }

    fn binomial(self, x: usize, y: usize) -> Result<LaurentPoly<BigInt>, Error> {
        match self {
            Convention::Hermitian => quantum_binomial(x, y),
            Convention::Macdonald => gaussian_binomial(x, y),
        }
    }
}

/// Checks `q^{(n)} ∘ p^{(m)} = Σ_{l ≥ 0} [k+l−1 choose l] p^{(m−l)} ∘ q^{(n−l)}`
/// on every `s_π` with `|π| ≤ test_degree`, where `p^{(r)}` multiplies by
/// `s_{(r)}` and `q^{(r)}` is its adjoint under `⟨,⟩_k`.
pub fn verify_commutation(n: usize, m: usize, k: usize, test_degree: usize) -> bool {
    verify_commutation_with(Convention::Hermitian, n, m, k, test_degree)
}

/// [`verify_commutation`] under a chosen [`Convention`].
pub fn verify_commutation_with(
    convention: Convention,
    n: usize,
    m: usize,
    k: usize,
    test_degree: usize,
) -> bool {
    assert!(k >= 1, "k must be positive");
    let form = convention.form(k);
    let row = |r: usize| to_basis(&SymFunc::schur(Partition::from_unsorted(alloc::vec![r])), Basis::P);
    let coefficients: Vec<(usize, RationalPoly)> = (0..=n.min(m))
        .map(|l| {
            let b = convention.binomial(k + l - 1, l).expect("l <= k + l - 1");
            (l, b.to_rational())
        })
        .collect();
    let mut raise_cache: BTreeMap<usize, SymFunc> = BTreeMap::new();
    partitions_up_to(test_degree).into_iter().all(|pi| {
        let x = to_basis(&SymFunc::schur(pi), Basis::P);
        let lhs = lower_in_p(form, &Partition::from_unsorted(alloc::vec![n]), &multiply(&row(m), &x));
        let mut rhs = SymFunc::zero(Basis::P);
        for (l, b) in &coefficients {
            let lowered = lower_in_p(form, &Partition::from_unsorted(alloc::vec![n - l]), &x);
            let raise = raise_cache.entry(m - l).or_insert_with(|| row(m - l));
            rhs = rhs.add(&multiply(raise, &lowered).scale(b));
        }
        lhs == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::inner::macdonald_inner;
    use crate::symfunc::ratio;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    #[test]
    fn skew_schur_examples() {
        assert_eq!(skew_schur_in_p(&shape(&[3, 2], &[3, 2])), SymFunc::one(Basis::P));
        assert_eq!(skew_schur_in_p(&shape(&[1], &[])), SymFunc::power_sum(p(&[1])));
        assert_eq!(skew_schur_in_p(&shape(&[2, 1], &[1])), SymFunc::power_sum(p(&[1, 1])));
    }

    #[test]
    fn skew_schur_routes_agree() {
        for lambda in partitions_up_to(6) {
            for mu in crate::partitions::subpartitions(&lambda) {
                let sh = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
                assert_eq!(skew_schur_in_p(&sh), skew_schur_in_p_via_adjoint(&sh), "{sh}");
            }
        }
    }

    #[test]
    fn lowering_examples() {
        let s1 = SymFunc::schur(p(&[1]));
        let lowered = schur_lower(&p(&[1]), &s1, 2);
        let expected = SymFunc::from_terms(Basis::S, vec![(Partition::empty(), ratio(1, 1) + crate::laurent::LaurentPoly::monomial(BigRational::from_integer(1.into()), 1))]);
        assert_eq!(lowered, expected);

        assert!(schur_lower(&p(&[2, 1]), &SymFunc::schur(p(&[2])), 2).is_zero());
        assert_eq!(schur_lower(&p(&[1]), &SymFunc::schur(p(&[2])), 1), SymFunc::schur(p(&[1])));
        // unit lowering is the identity
        let f = SymFunc::schur(p(&[3, 1]));
        assert_eq!(schur_lower(&Partition::empty(), &f, 3), f);
    }

    #[test]
    fn lowering_is_adjoint_to_multiplication() {
        for k in 1..=3 {
            for nu in partitions_up_to(2) {
                for f_shape in partitions_of(3, None) {
                    let f = SymFunc::schur(f_shape);
                    let g_deg = 3 - nu.size();
                    for g_shape in partitions_of(g_deg, None) {
                        let g = SymFunc::schur(g_shape);
                        let lhs = macdonald_inner(&schur_lower(&nu, &f, k), &g, k);
                        let rhs = macdonald_inner(&f, &multiply(&SymFunc::schur(nu.clone()), &g), k);
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn commutation_small_cases() {
        assert!(verify_commutation(1, 1, 1, 3));
        assert!(verify_commutation(1, 1, 2, 3));
        assert!(verify_commutation_with(Convention::Macdonald, 1, 1, 2, 3));
        // the unnormalized binomials do not satisfy the Hermitian relation
        assert!(!verify_commutation_with_binomials_swapped(2));
    }

    /// Hermitian adjoints paired with one-sided binomials must fail for k > 1.
    fn verify_commutation_with_binomials_swapped(k: usize) -> bool {
        let form = Form::Hermitian { k };
        let x = to_basis(&SymFunc::schur(p(&[1])), Basis::P);
        let s1 = to_basis(&SymFunc::schur(p(&[1])), Basis::P);
        let lhs = lower_in_p(form, &p(&[1]), &multiply(&s1, &x));
        let b1 = gaussian_binomial(k, 1).unwrap().to_rational();
        let rhs = multiply(&s1, &lower_in_p(form, &p(&[1]), &x)).add(&x.scale(&b1));
        lhs == rhs
    }
}
