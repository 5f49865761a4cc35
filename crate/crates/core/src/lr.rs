//! Generalized Littlewood–Richardson polynomials `c^{κλ}_{μν}(t)`, computed
//! by counting lattice k-tableaux and, independently, as the pairing
//! `(s_{λ/μ}, s_{ν/κ})_{t^k,t}`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::error::Error;
use crate::ktableaux::statistic_sum;
use crate::laurent::LaurentPoly;
use crate::partitions::{contains, partitions_up_to, subpartitions, Partition, SkewShape};
use crate::symfunc::{macdonald_inner, skew_schur_in_p, SymFunc};

/// Index of one coefficient.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoeffKey {
    pub k: usize,
    pub kappa: Partition,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl CoeffKey {
    pub fn new(k: usize, kappa: Partition, lambda: Partition, mu: Partition, nu: Partition) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        Ok(CoeffKey { k, kappa, lambda, mu, nu })
    }

    /// `|λ| − |μ| = |ν| − |κ|`, compared without underflow.
    pub fn is_balanced(&self) -> bool {
        self.lambda.size() + self.kappa.size() == self.nu.size() + self.mu.size()
    }

    /// Balanced with `μ ⊆ λ` and `κ ⊆ ν`; every other key has coefficient 0.
    pub fn is_admissible(&self) -> bool {
        self.is_balanced() && contains(&self.mu, &self.lambda) && contains(&self.kappa, &self.nu)
    }

    fn shapes(&self) -> Option<(SkewShape, SkewShape)> {
        if !self.is_admissible() {
            return None;
        }
        let left = SkewShape::new(self.lambda.clone(), self.mu.clone()).ok()?;
        let right = SkewShape::new(self.nu.clone(), self.kappa.clone()).ok()?;
        Some((left, right))
    }
}

impl fmt::Display for CoeffKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} kappa=[{}] lambda=[{}] mu=[{}] nu=[{}]",
            self.k, self.kappa, self.lambda, self.mu, self.nu
        )
    }
}

/// How a coefficient was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Tableau,
    Oracle,
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Tableau => "tableau",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "tableau" => Ok(Method::Tableau),
            "oracle" => Ok(Method::Oracle),
            "both" => Ok(Method::Both),
            other => Err(Error::Parse(other.to_string())),
        }
    }
}

/// A coefficient together with its normalized form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffRecord {
    pub key: CoeffKey,
    pub little_c: LaurentPoly,
    pub big_c: LaurentPoly,
    pub method: Method,
}

impl CoeffRecord {
    pub fn new(key: CoeffKey, little_c: LaurentPoly, method: Method) -> Self {
        let big_c = normalize(&key, &little_c);
        CoeffRecord { key, little_c, big_c, method }
    }

    /// Checks `big_c` against `little_c`, e.g. after loading from disk.
    pub fn is_consistent(&self) -> bool {
        self.key.k >= 1 && self.big_c == normalize(&self.key, &self.little_c)
    }
}

/// `t^{(1−k)(|λ|−|μ|)} c(t²)`, or 0 for an unbalanced key.
fn normalize(key: &CoeffKey, little_c: &LaurentPoly) -> LaurentPoly {
    if !key.is_balanced() {
        return LaurentPoly::zero();
    }
    let d = key.lambda.size() as i64 - key.mu.size() as i64;
    little_c.substitute_t_squared().shift((1 - key.k as i64) * d)
}

/// `Σ_{T ∈ Tab⁰_k(λ−μ, ν−κ)} c(T)`, zero off the admissible keys.
pub fn coeff_tableau(key: &CoeffKey) -> LaurentPoly {
    match key.shapes() {
        Some((left, _)) => statistic_sum(&left, &key.nu, &key.kappa, key.k, true)
            .expect("admissible keys are valid enumeration queries"),
        None => LaurentPoly::zero(),
    }
}

/// `(s_{λ/μ}, s_{ν/κ})_{t^k,t}`, zero off the admissible keys.
///
/// Fails only if the pairing has a non-integer coefficient, which would be
/// an internal error.
pub fn coeff_oracle(key: &CoeffKey) -> Result<LaurentPoly, Error> {
    match key.shapes() {
        Some((left, right)) => pair(&skew_schur_in_p(&left), &skew_schur_in_p(&right), key.k),
        None => Ok(LaurentPoly::zero()),
    }
}

/// [`coeff_oracle`] reading skew Schur expansions from `table` where present.
pub fn coeff_oracle_with(table: &SkewTable, key: &CoeffKey) -> Result<LaurentPoly, Error> {
    match key.shapes() {
        Some((left, right)) => {
            let (a, b) = (table.expansion(&left), table.expansion(&right));
            pair(&a, &b, key.k)
        }
        None => Ok(LaurentPoly::zero()),
    }
}

fn pair(a: &SymFunc, b: &SymFunc, k: usize) -> Result<LaurentPoly, Error> {
    macdonald_inner(a, b, k).to_integral()
}

/// `C^{κλ}_{μν}(t) = t^{(1−k)(|λ|−|μ|)} c^{κλ}_{μν}(t²)`
pub fn coeff_normalized(key: &CoeffKey) -> LaurentPoly {
    normalize(key, &coeff_tableau(key))
}

/// Computes a record by `method`. With [`Method::Both`] a disagreement is
/// returned as `Err((tableau, oracle))`.
pub fn compute_record(key: &CoeffKey, method: Method) -> Result<CoeffRecord, (LaurentPoly, LaurentPoly)> {
    let little_c = match method {
        Method::Tableau => coeff_tableau(key),
        Method::Oracle => coeff_oracle(key).map_err(|_| (coeff_tableau(key), LaurentPoly::zero()))?,
        Method::Both => {
            let a = coeff_tableau(key);
            match coeff_oracle(key) {
                Ok(b) if b == a => a,
                Ok(b) => return Err((a, b)),
                Err(_) => return Err((a, LaurentPoly::zero())),
            }
        }
    };
    Ok(CoeffRecord::new(key.clone(), little_c, method))
}

/// Power-sum expansions of every skew Schur function `s_{λ/μ}` with
/// `|λ| ≤ max_size`, shared by the pairings of a sweep.
#[derive(Clone, Debug, Default)]
pub struct SkewTable {
    expansions: BTreeMap<SkewShape, SymFunc>,
}

impl SkewTable {
    pub fn build(max_size: usize) -> Self {
        let expansions = skew_shapes(max_size).into_iter().map(|s| {
            let f = skew_schur_in_p(&s);
            (s, f)
        });
        SkewTable { expansions: expansions.collect() }
    }

    pub fn len(&self) -> usize {
        self.expansions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.expansions.is_empty()
    }

    pub fn expansion(&self, shape: &SkewShape) -> SymFunc {
        self.expansions.get(shape).cloned().unwrap_or_else(|| skew_schur_in_p(shape))
    }
}

/// Every `λ/μ` with `|λ| ≤ max_size`, grouped by outer shape.
pub fn skew_shapes(max_size: usize) -> Vec<SkewShape> {
    partitions_up_to(max_size)
        .into_iter()
        .flat_map(|lambda| {
            subpartitions(&lambda)
                .into_iter()
                .map(move |mu| SkewShape::new(lambda.clone(), mu).expect("subpartition"))
        })
        .collect()
}

/// All admissible keys with `|λ|, |ν| ≤ max_size` and `1 ≤ k ≤ k_max`, in a
/// fixed order: by `k`, then `λ/μ`, then `ν/κ`.
pub fn admissible_keys(max_size: usize, k_max: usize) -> Vec<CoeffKey> {
    let shapes = skew_shapes(max_size);
    let mut by_size: BTreeMap<usize, Vec<&SkewShape>> = BTreeMap::new();
    for s in &shapes {
        by_size.entry(s.size()).or_default().push(s);
    }
    let mut keys = Vec::new();
    for k in 1..=k_max {
        for left in &shapes {
            for right in &by_size[&left.size()] {
                keys.push(CoeffKey {
                    k,
                    kappa: right.inner().clone(),
                    lambda: left.outer().clone(),
                    mu: left.inner().clone(),
                    nu: right.outer().clone(),
                });
            }
        }
    }
    keys
}

/// Outcome of the symmetry/unimodality check on one key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnimodalOutcome {
    Zero,
    Pass,
    Fail(CoeffRecord),
}

pub fn check_unimodal(key: &CoeffKey) -> UnimodalOutcome {
    let c = coeff_tableau(key);
    if c.is_zero() {
        return UnimodalOutcome::Zero;
    }
    let record = CoeffRecord::new(key.clone(), c, Method::Tableau);
    if record.big_c.is_symmetric_unimodal() {
        UnimodalOutcome::Pass
    } else {
        UnimodalOutcome::Fail(record)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnimodalReport {
    pub keys: usize,
    pub nonzero: usize,
    pub counterexamples: Vec<CoeffRecord>,
}

impl UnimodalReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn record(&mut self, outcome: UnimodalOutcome) {
        self.keys += 1;
        match outcome {
            UnimodalOutcome::Zero => {}
            UnimodalOutcome::Pass => self.nonzero += 1,
            UnimodalOutcome::Fail(r) => {
                self.nonzero += 1;
                self.counterexamples.push(r);
            }
        }
    }
}

impl FromIterator<UnimodalOutcome> for UnimodalReport {
    fn from_iter<I: IntoIterator<Item = UnimodalOutcome>>(iter: I) -> Self {
        let mut report = UnimodalReport::default();
        iter.into_iter().for_each(|o| report.record(o));
        report
    }
}

/// Checks that every nonzero `C^{κλ}_{μν}(t)` with `|λ|, |ν| ≤ max_size`
/// and `k ≤ k_max` is symmetric unimodal.
pub fn sweep_symmetry_unimodality(max_size: usize, k_max: usize) -> UnimodalReport {
    admissible_keys(max_size, k_max).iter().map(check_unimodal).collect()
}

/// The two routes disagreeing on one key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub key: CoeffKey,
    pub tableau: LaurentPoly,
    /// `Err` when the pairing was not integral.
    pub oracle: Result<LaurentPoly, Error>,
}

/// `None` when the routes agree.
pub fn check_cross(table: &SkewTable, key: &CoeffKey) -> Option<Mismatch> {
    let tableau = coeff_tableau(key);
    let oracle = coeff_oracle_with(table, key);
    match &oracle {
        Ok(c) if *c == tableau => None,
        _ => Some(Mismatch { key: key.clone(), tableau, oracle }),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossReport {
    pub keys: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrossReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl FromIterator<Option<Mismatch>> for CrossReport {
    fn from_iter<I: IntoIterator<Item = Option<Mismatch>>>(iter: I) -> Self {
        let mut report = CrossReport::default();
        for m in iter {
            report.keys += 1;
            report.mismatches.extend(m);
        }
        report
    }
}

/// Compares the tableau count with the pairing on every admissible key with
/// `|λ|, |ν| ≤ max_size` and `k ≤ k_max`.
pub fn cross_validate(max_size: usize, k_max: usize) -> CrossReport {
    let table = SkewTable::build(max_size);
    admissible_keys(max_size, k_max).iter().map(|key| check_cross(&table, key)).collect()
}

/// Integer-coefficient polynomial from `(exponent, coefficient)` pairs.
pub fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}
