//! Exact sparse Laurent polynomials in one variable `t`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Coefficient rings usable in a [`LaurentPoly`].
pub trait Coefficient:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// A finite sum `Σ c_e t^e` with `e ∈ ℤ`. No zero coefficient is ever
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C = BigInt> {
    terms: BTreeMap<i64, C>,
}

/// Laurent polynomials with rational coefficients, used for intermediate
/// values carrying `1/𝔷(μ)` factors.
pub type RationalPoly = LaurentPoly<BigRational>;

impl<C> Default for LaurentPoly<C> {
    fn default() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · t^exp`
    pub fn monomial(c: C, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `t^exp`
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(C::one(), exp)
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scalar_mul(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|x| x.clone() * c.clone())
    }

    /// Multiplication by `t^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + shift, c.clone())).collect() }
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Substitutes `t ↦ t^factor` for a positive `factor`.
    pub fn substitute_power(&self, factor: i64) -> Self {
        assert!(factor > 0, "substitution exponent must be positive");
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e * factor, c.clone())).collect() }
    }

    pub fn substitute_t_squared(&self) -> Self {
        self.substitute_power(2)
    }

    /// Sum of coefficients.
    pub fn eval_at_one(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, c)| (e, f(c))))
    }

    /// `1 + t^step + t^{2·step} + … + t^{(count−1)·step}`
    pub fn geometric(step: i64, count: usize) -> Self {
        Self::from_terms((0..count as i64).map(|i| (i * step, C::one())))
    }

    /// `t^{(1−k)j} + t^{(3−k)j} + … + t^{(k−1)j}`
    pub fn balanced_geometric(j: i64, k: usize) -> Self {
        let k = k as i64;
        Self::from_terms((0..k).map(|i| ((2 * i + 1 - k) * j, C::one())))
    }
}

impl<C: Coefficient + PartialOrd> LaurentPoly<C> {
    /// Bar-invariant, supported on one parity class, with coefficients weakly
    /// increasing from the lowest exponent up to the centre.
    pub fn is_symmetric_unimodal(&self) -> bool {
        if *self != self.bar() {
            return false;
        }
        let Some(top) = self.max_exp() else {
            return true;
        };
        if self.terms.keys().any(|e| (e - top).rem_euclid(2) != 0) {
            return false;
        }
        let mut i = -top;
        while i < 0 {
            if self.coeff(i) > self.coeff(i + 2) {
                return false;
            }
            i += 2;
        }
        true
    }
}

impl LaurentPoly<BigInt> {
    pub fn to_rational(&self) -> RationalPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl LaurentPoly<BigRational> {
    /// Converts to integer coefficients, failing on the first non-integer.
    pub fn to_integral(&self) -> Result<LaurentPoly<BigInt>, Error> {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            if !c.is_integer() {
                return Err(Error::NotIntegral(c.to_string()));
            }
            out.add_term(e, c.to_integer());
        }
        Ok(out)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl<C: Coefficient> Add<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(mut self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<C: Coefficient> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl<C: Coefficient> Sub<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(mut self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

impl<C: Coefficient> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Coefficient> Mul<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Sum for LaurentPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<C: Coefficient> From<C> for LaurentPoly<C> {
    fn from(c: C) -> Self {
        Self::constant(c)
    }
}

/// Canonical text form: ascending exponents, `*` between coefficient and
/// power, negative exponents parenthesized, e.g. `2*t^(-2) + 1 - t`.
impl<C: Coefficient + Signed + fmt::Display> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            match e {
                1 => f.write_str("t")?,
                e if e < 0 => write!(f, "t^({e})")?,
                e => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// The Gaussian binomial `[x choose y]` in `t`, with constant term 1.
pub fn gaussian_binomial(x: usize, y: usize) -> Result<LaurentPoly<BigInt>, Error> {
    if y > x {
        return Err(Error::InvalidBinomial { x, y });
    }
    // Pascal recurrence [x, y] = [x-1, y-1] + t^y [x-1, y]
    let mut row: alloc::vec::Vec<LaurentPoly<BigInt>> = alloc::vec![LaurentPoly::one()];
    for n in 1..=x {
        let mut next = alloc::vec::Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut entry = LaurentPoly::zero();
            if j >= 1 {
                entry += &row[j - 1];
            }
            if j < n {
                entry += &row[j].shift(j as i64);
            }
            next.push(entry);
        }
        row = next;
    }
    Ok(row.swap_remove(y))
}

/// The bar-invariant quantum binomial, `t^{−y(x−y)}` times the Gaussian
/// binomial in `t²`; e.g. `[4 choose 2] = t⁻⁴ + t⁻² + 2 + t² + t⁴`.
pub fn quantum_binomial(x: usize, y: usize) -> Result<LaurentPoly<BigInt>, Error> {
    let g = gaussian_binomial(x, y)?;
    Ok(g.substitute_t_squared().shift(-((y * (x - y)) as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn z(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn arithmetic() {
        let one_t = z(&[(0, 1), (1, 1)]);
        assert_eq!(&one_t * &one_t, z(&[(0, 1), (1, 2), (2, 1)]));
        assert_eq!(&one_t + &LaurentPoly::zero(), one_t);
        assert_eq!(&z(&[(-1, 1), (0, 1)]) * &z(&[(1, 1)]), one_t);
        assert!((&one_t - &one_t).is_zero());
        assert_eq!(-&one_t, z(&[(0, -1), (1, -1)]));
        assert_eq!(one_t.scalar_mul(&BigInt::from(3)), z(&[(0, 3), (1, 3)]));
        assert_eq!(one_t.pow(3), z(&[(0, 1), (1, 3), (2, 3), (3, 1)]));
    }

    #[test]
    fn no_zero_terms_stored() {
        let p = z(&[(2, 1), (2, -1), (0, 0)]);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn bar_and_substitution() {
        assert_eq!(z(&[(2, 1)]).bar(), z(&[(-2, 1)]));
        assert_eq!(z(&[(0, 1), (1, 1)]).bar(), z(&[(0, 1), (-1, 1)]));
        assert_eq!(z(&[(0, 1), (1, 1)]).substitute_t_squared(), z(&[(0, 1), (2, 1)]));
        assert_eq!(z(&[(-1, 1)]).substitute_t_squared(), z(&[(-2, 1)]));
        let ex = z(&[(0, 2), (1, 5), (2, 7), (3, 5), (4, 2)]);
        assert_eq!(ex.substitute_t_squared(), z(&[(0, 2), (2, 5), (4, 7), (6, 5), (8, 2)]));
    }

    #[test]
    fn evaluation() {
        let ex = z(&[(0, 2), (1, 5), (2, 7), (3, 5), (4, 2)]);
        assert_eq!(ex.eval_at_one(), BigInt::from(21));
        assert_eq!(LaurentPoly::<BigInt>::zero().eval_at_one(), BigInt::from(0));
        assert_eq!(z(&[(-1, 1), (1, 1)]).eval_at_one(), BigInt::from(2));
    }

    #[test]
    fn symmetric_unimodal() {
        assert!(z(&[(-2, 1), (0, 2), (2, 1)]).is_symmetric_unimodal());
        assert!(!z(&[(0, 1), (1, 1)]).is_symmetric_unimodal());
        assert!(z(&[(-4, 1), (-2, 1), (0, 2), (2, 1), (4, 1)]).is_symmetric_unimodal());
        // symmetric but dips at the centre
        assert!(!z(&[(-2, 2), (0, 1), (2, 2)]).is_symmetric_unimodal());
        // symmetric but mixed parity
        assert!(!z(&[(-1, 1), (0, 1), (1, 1)]).is_symmetric_unimodal());
        // internal gap
        assert!(!z(&[(-4, 1), (0, 1), (4, 1)]).is_symmetric_unimodal());
        assert!(z(&[(-1, 1), (1, 1)]).is_symmetric_unimodal());
        assert!(z(&[(0, 3)]).is_symmetric_unimodal());
    }

    #[test]
    fn binomials() {
        assert_eq!(quantum_binomial(4, 2).unwrap(), z(&[(-4, 1), (-2, 1), (0, 2), (2, 1), (4, 1)]));
        assert_eq!(quantum_binomial(5, 0).unwrap(), LaurentPoly::one());
        assert_eq!(quantum_binomial(3, 1).unwrap(), z(&[(-2, 1), (0, 1), (2, 1)]));
        assert!(quantum_binomial(2, 3).is_err());
        assert_eq!(gaussian_binomial(4, 2).unwrap(), z(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]));
    }

    #[test]
    fn rendering() {
        let ex = z(&[(0, 2), (1, 5), (2, 7), (3, 5), (4, 2)]);
        assert_eq!(format!("{ex}"), "2 + 5*t + 7*t^2 + 5*t^3 + 2*t^4");
        assert_eq!(format!("{}", LaurentPoly::<BigInt>::zero()), "0");
        assert_eq!(format!("{}", z(&[(0, 1)])), "1");
        assert_eq!(format!("{}", z(&[(-2, 1), (0, -1), (1, -3)])), "t^(-2) - 1 - 3*t");
        assert_eq!(format!("{}", z(&[(-1, -1)])), "-t^(-1)");
        let half = RationalPoly::monomial(BigRational::new(1.into(), 2.into()), 2);
        assert_eq!(format!("{half}"), "1/2*t^2");
    }

    #[test]
    fn integrality() {
        let half = RationalPoly::monomial(BigRational::new(1.into(), 2.into()), 2);
        assert!(half.to_integral().is_err());
        let two = RationalPoly::monomial(BigRational::from_integer(2.into()), -1);
        assert_eq!(two.to_integral().unwrap(), z(&[(-1, 2)]));
    }
}
