//! The Macdonald pairing at `q = t^k`, its Hermitian normalization, and the
//! plethystic homomorphism `p_j ↦ (1 + t^j + … + t^{(k−1)j}) p_j`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{to_basis, Basis, SymFunc};
use crate::laurent::RationalPoly;
use crate::partitions::{partitions_of, zee, Partition};

/// Which diagonal form on the power sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// `(p_μ, p_μ) = 𝔷(μ) ∏_j (1 + t^{μ_j} + … + t^{(k−1)μ_j})`, bilinear.
    Macdonald { k: usize },
    /// `⟨p_μ, p_μ⟩ = 𝔷(μ) ∏_j (t^{(1−k)μ_j} + t^{(3−k)μ_j} + … + t^{(k−1)μ_j})`,
    /// conjugate-linear in the second slot.
    Hermitian { k: usize },
}

impl Form {
    pub fn k(self) -> usize {
        match self {
            Form::Macdonald { k } | Form::Hermitian { k } => k,
        }
    }

    /// The factor contributed by one part `j` of a power-sum index.
    pub fn part_weight(self, j: usize) -> RationalPoly {
        match self {
            Form::Macdonald { k } => RationalPoly::geometric(j as i64, k),
            Form::Hermitian { k } => RationalPoly::balanced_geometric(j as i64, k),
        }
    }

    /// `(p_μ, p_μ)` in this form.
    pub fn norm(self, mu: &Partition) -> RationalPoly {
        let z = RationalPoly::constant(BigRational::from_integer(BigInt::from(zee(mu))));
        mu.parts().iter().fold(z, |acc, &j| &acc * &self.part_weight(j))
    }
}

/// Evaluates the form on two elements in any bases.
pub fn pairing(form: Form, f: &SymFunc, g: &SymFunc) -> RationalPoly {
    assert!(form.k() >= 1, "k must be positive");
    let f = to_basis(f, Basis::P);
    let g = to_basis(g, Basis::P);
    let mut total = RationalPoly::zero();
    for (mu, x) in f.terms() {
        let y = g.coeff(mu);
        if y.is_zero() {
            continue;
        }
        let y = match form {
            Form::Macdonald { .. } => y,
            Form::Hermitian { .. } => y.bar(),
        };
        total += &(&(x * &y) * &form.norm(mu));
    }
    total
}

/// `(f, g)_{t^k, t}`
pub fn macdonald_inner(f: &SymFunc, g: &SymFunc, k: usize) -> RationalPoly {
    pairing(Form::Macdonald { k }, f, g)
}

/// `⟨f, g⟩_k`
pub fn hermitian_inner(f: &SymFunc, g: &SymFunc, k: usize) -> RationalPoly {
    pairing(Form::Hermitian { k }, f, g)
}

/// Applies `p_j ↦ (1 + t^j + … + t^{(k−1)j}) p_j`; the result is in the
/// power-sum basis.
pub fn rho_homomorphism(f: &SymFunc, k: usize) -> SymFunc {
    assert!(k >= 1, "k must be positive");
    let form = Form::Macdonald { k };
    let f = to_basis(f, Basis::P);
    SymFunc::from_terms(
        Basis::P,
        f.terms().map(|(mu, c)| {
            let w = mu.parts().iter().fold(c.clone(), |acc, &j| &acc * &form.part_weight(j));
            (mu.clone(), w)
        }),
    )
}

/// `ρ(h_m)` in the complete basis, from the closed form
/// `a_π = Σ_β Σ_{0 ≤ a_1 < … < a_ℓ ≤ k−1} t^{a_1β_1 + … + a_ℓβ_ℓ}` where β runs
/// over the distinct rearrangements of π.
pub fn g_in_h_expansion(m: usize, k: usize) -> SymFunc {
    assert!(k >= 1, "k must be positive");
    let mut out = SymFunc::zero(Basis::H);
    for pi in partitions_of(m, None) {
        if pi.len() > k {
            continue;
        }
        let mut a_pi = RationalPoly::zero();
        for beta in pi.rearrangements() {
            for_each_increasing(k, beta.len(), &mut |levels| {
                let exp: usize = levels.iter().zip(&beta).map(|(a, b)| a * b).sum();
                a_pi.add_term(exp as i64, BigRational::from_integer(1.into()));
            });
        }
        out.add_term(pi, a_pi);
    }
    out
}

/// Calls `f` on every strictly increasing sequence of `len` values in `0..k`.
fn for_each_increasing(k: usize, len: usize, f: &mut impl FnMut(&[usize])) {
    fn go(k: usize, len: usize, start: usize, cur: &mut alloc::vec::Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == len {
            f(cur);
            return;
        }
        for a in start..k {
            cur.push(a);
            go(k, len, a + 1, cur, f);
            cur.pop();
        }
    }
    go(k, len, 0, &mut alloc::vec::Vec::with_capacity(len), f);
}
