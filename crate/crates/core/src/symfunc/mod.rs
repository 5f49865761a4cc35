//! The ring of symmetric functions with Laurent polynomial coefficients.
//!
//! Every pairing and adjoint is evaluated in the power-sum basis, the one
//! basis in which the forms are diagonal. Other bases are reached through
//! the character table (`s ↔ p`), products of one-row expansions (`h, e → p`)
//! and Kostka matrices (`p → h, e, m` via `s`).

mod basis;
pub mod characters;
mod inner;
mod operators;

use alloc::collections::BTreeMap;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::Error;
use crate::laurent::{LaurentPoly, RationalPoly};
use crate::partitions::Partition;

pub use basis::to_basis;
pub use characters::{character_table, kostka_table, mn_character};
pub use inner::{
    g_in_h_expansion, hermitian_inner, macdonald_inner, pairing, rho_homomorphism, Form,
};
pub use operators::{
    adjoint_lower, schur_lower, skew_schur, skew_schur_in_p, skew_schur_in_p_via_adjoint, verify_commutation,
    verify_commutation_with, Convention,
};

/// Basis tag of a [`SymFunc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// power sums
    P,
    /// complete homogeneous
    H,
    /// elementary
    E,
    /// monomial
    M,
    /// Schur
    S,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::H => "h",
            Basis::E => "e",
            Basis::M => "m",
            Basis::S => "s",
        }
    }
}

/// A finite linear combination `Σ c_λ(t) b_λ` over one basis.
///
/// Coefficients are rational Laurent polynomials; elements may be
/// inhomogeneous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, RationalPoly>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    /// The unit, `b_∅`.
    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, RationalPoly::one());
        f
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::basis_element(Basis::S, lambda)
    }

    pub fn power_sum(lambda: Partition) -> Self {
        Self::basis_element(Basis::P, lambda)
    }

    pub fn complete(lambda: Partition) -> Self {
        Self::basis_element(Basis::H, lambda)
    }

    pub fn elementary(lambda: Partition) -> Self {
        Self::basis_element(Basis::E, lambda)
    }

    pub fn monomial(lambda: Partition) -> Self {
        Self::basis_element(Basis::M, lambda)
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, RationalPoly)>,
    {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    /// Integer-coefficient constructor, handy for Schur expansions.
    pub fn from_integral_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, LaurentPoly<BigInt>)>,
    {
        Self::from_terms(basis, terms.into_iter().map(|(l, c)| (l, c.to_rational())))
    }

    pub fn add_term(&mut self, lambda: Partition, c: RationalPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&lambda) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(lambda, sum);
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RationalPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> RationalPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(d)` when every term has degree `d`; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Partition::size);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The degree-`d` component.
    pub fn component(&self, d: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(l, _)| l.size() == d).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &RationalPoly) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(l, x)| (l.clone(), x * c)))
    }

    pub fn scale_integer(&self, c: i64) -> SymFunc {
        self.scale(&RationalPoly::constant(BigRational::from_integer(c.into())))
    }

    /// `self + other`, expressed in the basis of `self`.
    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let other = to_basis(other, self.basis);
        let mut out = self.clone();
        for (l, c) in other.terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale_integer(-1))
    }

    /// Re-expresses the element in `target`.
    pub fn to_basis(&self, target: Basis) -> SymFunc {
        to_basis(self, target)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(RationalPoly::is_integral)
    }

    /// Integer coefficients, failing loudly on the first fraction.
    pub fn integral_terms(&self) -> Result<BTreeMap<Partition, LaurentPoly<BigInt>>, Error> {
        self.terms.iter().map(|(l, c)| Ok((l.clone(), c.to_integral()?))).collect()
    }
}

/// Ring product, returned in the basis of `f`.
///
/// `p`, `h` and `e` are multiplicative bases, so two factors in the same
/// one of them multiply by concatenating parts; everything else goes
/// through `p`.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    if f.basis == g.basis && matches!(f.basis, Basis::P | Basis::H | Basis::E) {
        return concat_product(f, g);
    }
    let product = concat_product(&to_basis(f, Basis::P), &to_basis(g, Basis::P));
    to_basis(&product, f.basis)
}

fn concat_product(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(f.basis);
    for (a, x) in &f.terms {
        for (b, y) in &g.terms {
            out.add_term(a.union(b), x * y);
        }
    }
    out
}

impl fmt::Display for SymFunc {
    /// `c₁*b[λ¹] + c₂*b[λ²] + …`, coefficients parenthesized when not a
    /// single term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let sym = self.basis.symbol();
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let unit = c.num_terms() == 1 && c.coeff(0).is_one();
            let single_positive =
                c.num_terms() == 1 && c.terms().all(|(_, x)| !x.is_negative());
            if !unit {
                if single_positive {
                    write!(f, "{c}*")?;
                } else {
                    write!(f, "({c})*")?;
                }
            }
            write!(f, "{sym}[{lambda}]")?;
        }
        Ok(())
    }
}

/// Rational constant `n / d` as a polynomial.
#[cfg(test)]
pub(crate) fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> RationalPoly {
    RationalPoly::constant(BigRational::new(n.into(), d.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn products() {
        let prod = multiply(&SymFunc::power_sum(p(&[2])), &SymFunc::power_sum(p(&[1])));
        assert_eq!(prod, SymFunc::power_sum(p(&[2, 1])));

        let s1 = SymFunc::schur(p(&[1]));
        let expected = SymFunc::from_terms(
            Basis::S,
            vec![(p(&[2]), RationalPoly::one()), (p(&[1, 1]), RationalPoly::one())],
        );
        assert_eq!(multiply(&s1, &s1), expected);

        let f = SymFunc::schur(p(&[2, 1])).add(&SymFunc::schur(p(&[3])).scale_integer(4));
        assert_eq!(multiply(&f, &SymFunc::one(Basis::S)), f);
        assert_eq!(multiply(&f, &SymFunc::one(Basis::P)), f);
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut f = SymFunc::schur(p(&[2]));
        f.add_term(p(&[2]), ratio(-1, 1));
        assert!(f.is_zero());
    }

    #[test]
    fn degrees() {
        let f = SymFunc::schur(p(&[2])).add(&SymFunc::schur(p(&[1, 1])));
        assert_eq!(f.homogeneous_degree(), Some(2));
        let g = f.add(&SymFunc::one(Basis::S));
        assert_eq!(g.homogeneous_degree(), None);
        assert_eq!(g.component(0), SymFunc::one(Basis::S));
    }

    #[test]
    fn display() {
        let f = to_basis(&SymFunc::schur(p(&[2])), Basis::P);
        assert_eq!(format!("{f}"), "1/2*p[1,1] + 1/2*p[2]");
        assert_eq!(format!("{}", SymFunc::zero(Basis::S)), "0");
    }
}
