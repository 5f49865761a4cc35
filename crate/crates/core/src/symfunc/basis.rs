//! Change of basis.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::characters::{character_table, kostka_table};
use super::{Basis, SymFunc};
use crate::laurent::RationalPoly;
use crate::partitions::{partitions_of, zee, Partition};

/// Re-expresses `f` in the `target` basis.
pub fn to_basis(f: &SymFunc, target: Basis) -> SymFunc {
    if f.basis == target {
        return f.clone();
    }
    match (f.basis, target) {
        (Basis::S, Basis::P) => schur_to_power(f),
        (Basis::P, Basis::S) => power_to_schur(f),
        (Basis::H | Basis::E, Basis::P) => multiplicative_to_power(f),
        (_, Basis::P) => schur_to_power(&to_schur(f)),
        (_, Basis::S) => to_schur(f),
        (_, _) => from_schur(&to_schur(f), target),
    }
}

fn to_schur(f: &SymFunc) -> SymFunc {
    match f.basis {
        Basis::S => f.clone(),
        Basis::P => power_to_schur(f),
        Basis::H => complete_to_schur(f),
        Basis::E => omega(&complete_to_schur(&rename(f, Basis::H))),
        Basis::M => monomial_to_schur(f),
    }
}

fn from_schur(f: &SymFunc, target: Basis) -> SymFunc {
    match target {
        Basis::S => f.clone(),
        Basis::P => schur_to_power(f),
        Basis::H => schur_to_complete(f),
        Basis::E => rename(&schur_to_complete(&omega(f)), Basis::E),
        Basis::M => schur_to_monomial(f),
    }
}

fn rename(f: &SymFunc, basis: Basis) -> SymFunc {
    SymFunc { basis, terms: f.terms.clone() }
}

/// ω(s_λ) = s_{λ'}.
fn omega(f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis, Basis::S);
    SymFunc::from_terms(Basis::S, f.terms().map(|(l, c)| (l.conjugate(), c.clone())))
}

/// `s_λ = Σ_ρ χ^λ(ρ)/𝔷(ρ) p_ρ`
fn schur_to_power(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::P);
    for (lambda, c) in f.terms() {
        let table = character_table(lambda.size());
        let row = table.row(table.index.position(lambda));
        for (rho, &chi) in table.index.partitions().iter().zip(row) {
            if chi != 0 {
                let w = BigRational::new(BigInt::from(chi), BigInt::from(zee(rho)));
                out.add_term(rho.clone(), c.scale_rational(&w));
            }
        }
    }
    out
}

/// `h_n = Σ_{ρ⊢n} p_ρ/𝔷(ρ)` and `e_n = Σ_{ρ⊢n} ε_ρ p_ρ/𝔷(ρ)`, multiplied
/// out over the parts of each index.
fn multiplicative_to_power(f: &SymFunc) -> SymFunc {
    let signed = f.basis == Basis::E;
    let mut out = SymFunc::zero(Basis::P);
    for (mu, c) in f.terms() {
        let mut expansion = SymFunc::from_terms(Basis::P, [(Partition::empty(), c.clone())]);
        for &n in mu.parts() {
            let one_row = SymFunc::from_terms(
                Basis::P,
                partitions_of(n, None).into_iter().map(|rho| {
                    let sign = if signed && (n - rho.len()) % 2 == 1 { -1 } else { 1 };
                    let w = BigRational::new(BigInt::from(sign), BigInt::from(zee(&rho)));
                    (rho, RationalPoly::constant(w))
                }),
            );
            expansion = super::multiply(&expansion, &one_row);
        }
        for (rho, x) in expansion.terms {
            out.add_term(rho, x);
        }
    }
    out
}

/// `p_ρ = Σ_λ χ^λ(ρ) s_λ`
fn power_to_schur(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::S);
    for (rho, c) in f.terms() {
        let table = character_table(rho.size());
        let j = table.index.position(rho);
        for (i, lambda) in table.index.partitions().iter().enumerate() {
            let chi = table.row(i)[j];
            if chi != 0 {
                out.add_term(lambda.clone(), c.scale_rational(&BigRational::from_integer(chi.into())));
            }
        }
    }
    out
}

/// `h_μ = Σ_λ K_{λμ} s_λ`
fn complete_to_schur(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::S);
    for (mu, c) in f.terms() {
        let table = kostka_table(mu.size());
        let j = table.index.position(mu);
        for (i, lambda) in table.index.partitions().iter().enumerate() {
            let k = table.value(i, j);
            if k != 0 {
                out.add_term(lambda.clone(), c.scale_rational(&BigRational::from_integer(k.into())));
            }
        }
    }
    out
}

/// `s_λ = Σ_μ K_{λμ} m_μ`
fn schur_to_monomial(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::M);
    for (lambda, c) in f.terms() {
        let table = kostka_table(lambda.size());
        let i = table.index.position(lambda);
        for (j, mu) in table.index.partitions().iter().enumerate() {
            let k = table.value(i, j);
            if k != 0 {
                out.add_term(mu.clone(), c.scale_rational(&BigRational::from_integer(k.into())));
            }
        }
    }
    out
}

/// Splits `f` into dense coefficient vectors per degree, indexed in
/// reverse-lex order.
fn dense_by_degree(f: &SymFunc) -> BTreeMap<usize, Vec<RationalPoly>> {
    let mut out: BTreeMap<usize, Vec<RationalPoly>> = BTreeMap::new();
    for (lambda, c) in f.terms() {
        let n = lambda.size();
        let table = kostka_table(n);
        let v = out.entry(n).or_insert_with(|| alloc::vec![RationalPoly::zero(); table.index.len()]);
        v[table.index.position(lambda)] = c.clone();
    }
    out
}

fn sparse(basis: Basis, dense: BTreeMap<usize, Vec<RationalPoly>>) -> SymFunc {
    let mut out = SymFunc::zero(basis);
    for (n, v) in dense {
        for (lambda, c) in partitions_of(n, None).into_iter().zip(v) {
            out.add_term(lambda, c);
        }
    }
    out
}

/// Solves `f = Σ_μ a_μ h_μ` given the Schur coefficients of `f`:
/// `f_λ = Σ_{μ ⊴ λ} K_{λμ} a_μ`, back-substituting from the least dominant μ.
fn schur_to_complete(f: &SymFunc) -> SymFunc {
    let mut dense = dense_by_degree(f);
    for (&n, v) in dense.iter_mut() {
        let table = kostka_table(n);
        let len = v.len();
        for i in (0..len).rev() {
            let mut acc = v[i].clone();
            for (j, vj) in v.iter().enumerate().skip(i + 1) {
                let k = table.value(i, j);
                if k != 0 && !vj.is_zero() {
                    acc -= &vj.scale_rational(&BigRational::from_integer(k.into()));
                }
            }
            v[i] = acc;
        }
    }
    sparse(Basis::H, dense)
}

/// Solves `f = Σ_λ c_λ s_λ` given `f = Σ_μ b_μ m_μ`:
/// `b_μ = Σ_{λ ⊵ μ} c_λ K_{λμ}`, forward-substituting from `(n)`.
fn monomial_to_schur(f: &SymFunc) -> SymFunc {
    let mut dense = dense_by_degree(f);
    for (&n, v) in dense.iter_mut() {
        let table = kostka_table(n);
        for j in 0..v.len() {
            let mut acc = v[j].clone();
            for (i, vi) in v.iter().enumerate().take(j) {
                let k = table.value(i, j);
                if k != 0 && !vi.is_zero() {
                    acc -= &vi.scale_rational(&BigRational::from_integer(k.into()));
                }
            }
            v[j] = acc;
        }
    }
    sparse(Basis::S, dense)
}

impl RationalPoly {
    pub(crate) fn scale_rational(&self, c: &BigRational) -> RationalPoly {
        if c.is_zero() {
            return RationalPoly::zero();
        }
        self.scalar_mul(c)
    }
}
