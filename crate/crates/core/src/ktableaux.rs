//! k-tableaux: fillings of a skew shape by monomials `a·t^b`, `0 ≤ b < k`,
//! semistandard for the order that compares `b` first and `a` second.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::partitions::{contains, is_lattice, word_of_partition, Partition, SkewShape, SkewTableau, Word};

/// The monomial `letter · t^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialEntry {
    pub letter: usize,
    pub exp: usize,
}

impl MonomialEntry {
    pub fn new(letter: usize, exp: usize) -> Self {
        MonomialEntry { letter, exp }
    }
}

impl Ord for MonomialEntry {
    /// `a·t^b ≤ c·t^d` iff `b < d`, or `b = d` and `a ≤ c`.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.exp, self.letter).cmp(&(other.exp, other.letter))
    }
}

impl PartialOrd for MonomialEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.letter)
        } else {
            write!(f, "{}·t^{}", self.letter, self.exp)
        }
    }
}

/// A semistandard k-tableau. Row `r` of `rows` holds the entries of the
/// cells `inner_r..outer_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KTableau {
    shape: SkewShape,
    k: usize,
    rows: Vec<Vec<MonomialEntry>>,
}

impl KTableau {
    /// Validates widths, entry ranges and semistandardness.
    pub fn new(shape: SkewShape, k: usize, rows: Vec<Vec<MonomialEntry>>) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        let widths_ok = rows.len() == shape.rows()
            && rows.iter().enumerate().all(|(r, row)| row.len() == shape.row_range(r).len());
        if !widths_ok {
            return Err(Error::ShapeMismatch);
        }
        if let Some(bad) = rows.iter().flatten().find(|e| e.letter == 0 || e.exp >= k) {
            return Err(Error::InvalidEntry(alloc::format!("{bad}")));
        }
        let t = KTableau { shape, k, rows };
        if !t.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[Vec<MonomialEntry>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Option<MonomialEntry> {
        self.shape.contains_cell(r, c).then(|| self.rows[r][c - self.shape.inner()[r]])
    }

    fn is_semistandard(&self) -> bool {
        self.shape.cells().all(|(r, c)| {
            let e = self.get(r, c).unwrap();
            let left_ok = c == 0 || self.get(r, c - 1).is_none_or(|l| l <= e);
            let up_ok = r == 0 || self.get(r - 1, c).is_none_or(|u| u < e);
            left_ok && up_ok
        })
    }

    /// Total t-degree `Σ b` over all cells.
    pub fn degree(&self) -> usize {
        self.rows.iter().flatten().map(|e| e.exp).sum()
    }

    /// `c(T) = ∏ t^b`
    pub fn statistic(&self) -> LaurentPoly<BigInt> {
        LaurentPoly::t_pow(self.degree() as i64)
    }

    /// Letter counts after setting `t = 1`; `content[a-1]` counts letter `a`.
    pub fn content(&self) -> Vec<usize> {
        let mut content = Vec::new();
        for e in self.rows.iter().flatten() {
            if content.len() < e.letter {
                content.resize(e.letter, 0);
            }
            content[e.letter - 1] += 1;
        }
        content
    }

    /// The layers `T^0, …, T^{k−1}`: layer `i` keeps the cells whose entry
    /// has exponent `i`, labelled by their letters. The shapes form the chain
    /// `μ = μ^1 ⊆ μ^2 ⊆ … ⊆ μ^{k+1} = λ`.
    pub fn layers(&self) -> Vec<SkewTableau> {
        let mut lower = self.shape.inner().clone();
        let mut out = Vec::with_capacity(self.k);
        for i in 0..self.k {
            let upper_parts: Vec<usize> = (0..self.shape.rows())
                .map(|r| {
                    let below = self.rows[r].iter().filter(|e| e.exp <= i).count();
                    self.shape.inner()[r] + below
                })
                .collect();
            let upper = Partition::new(upper_parts).expect("exponent filtration yields partitions");
            let rows = (0..upper.len())
                .map(|r| {
                    self.rows[r].iter().filter(|e| e.exp == i).map(|e| e.letter).collect()
                })
                .collect();
            let shape = SkewShape::new(upper.clone(), lower).expect("filtration is increasing");
            out.push(SkewTableau::new(shape, rows).expect("layer widths match"));
            lower = upper;
        }
        out
    }

    /// `w(κ) w(T^0) w(T^1) ⋯ w(T^{k−1})`.
    pub fn reading_word(&self, kappa: &Partition) -> Word {
        let mut word = word_of_partition(kappa).0;
        push_layer_words(&self.rows, self.k, &mut word);
        Word(word)
    }
}

fn push_layer_words(rows: &[Vec<MonomialEntry>], k: usize, word: &mut Vec<usize>) {
    for i in 0..k {
        for row in rows {
            word.extend(row.iter().rev().filter(|e| e.exp == i).map(|e| e.letter));
        }
    }
}

impl fmt::Display for KTableau {
    /// One line per row; inner cells print as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shape.size() == 0 {
            return f.write_str("(empty)");
        }
        for r in 0..self.shape.rows() {
            if r > 0 {
                f.write_str("\n")?;
            }
            let dots = core::iter::repeat_n(None, self.shape.inner()[r]);
            let cells = dots.chain(self.rows[r].iter().map(Some));
            for (c, cell) in cells.enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                match cell {
                    Some(e) => write!(f, "{e}")?,
                    None => f.write_str(".")?,
                }
            }
        }
        Ok(())
    }
}

/// Validated enumeration request: shape `λ − μ`, content `ν − κ`.
struct Query<'a> {
    shape: &'a SkewShape,
    kappa: &'a Partition,
    content: Vec<usize>,
    k: usize,
}

impl<'a> Query<'a> {
    fn new(shape: &'a SkewShape, nu: &Partition, kappa: &'a Partition, k: usize) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        if !contains(kappa, nu) {
            return Err(Error::NotContained { inner: kappa.clone(), outer: nu.clone() });
        }
        let want = nu.size() - kappa.size();
        if shape.size() != want {
            return Err(Error::SizeMismatch { left: shape.size(), right: want });
        }
        let content = (0..nu.len()).map(|a| nu[a] - kappa[a]).collect();
        Ok(Query { shape, kappa, content, k })
    }
}

/// Row-major backtracking over all semistandard fillings with the requested
/// content. `visit` sees each complete filling as rows of entries.
fn backtrack(query: &Query<'_>, visit: &mut dyn FnMut(&[Vec<MonomialEntry>])) {
    let shape = query.shape;
    let mut rows: Vec<Vec<MonomialEntry>> =
        (0..shape.rows()).map(|r| Vec::with_capacity(shape.row_range(r).len())).collect();
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut remaining = query.content.clone();
    fill(query, &cells, 0, &mut rows, &mut remaining, visit);
}

fn fill(
    query: &Query<'_>,
    cells: &[(usize, usize)],
    idx: usize,
    rows: &mut Vec<Vec<MonomialEntry>>,
    remaining: &mut [usize],
    visit: &mut dyn FnMut(&[Vec<MonomialEntry>]),
) {
    let Some(&(r, c)) = cells.get(idx) else {
        visit(rows);
        return;
    };
    let shape = query.shape;
    let entry_at = |rows: &Vec<Vec<MonomialEntry>>, r: usize, c: usize| {
        shape.contains_cell(r, c).then(|| rows[r][c - shape.inner()[r]])
    };
    // weakly above the left neighbour, strictly above the upper one
    let left = if c > 0 { entry_at(rows, r, c - 1) } else { None };
    let up = if r > 0 { entry_at(rows, r - 1, c) } else { None };
    for exp in 0..query.k {
        for letter in 1..=remaining.len() {
            if remaining[letter - 1] == 0 {
                continue;
            }
            let e = MonomialEntry { letter, exp };
            if left.is_some_and(|l| e < l) || up.is_some_and(|u| e <= u) {
                continue;
            }
            remaining[letter - 1] -= 1;
            rows[r].push(e);
            fill(query, cells, idx + 1, rows, remaining, visit);
            rows[r].pop();
            remaining[letter - 1] += 1;
        }
    }
}

fn passes_lattice(kappa_word: &[usize], rows: &[Vec<MonomialEntry>], k: usize, scratch: &mut Vec<usize>) -> bool {
    scratch.clear();
    scratch.extend_from_slice(kappa_word);
    push_layer_words(rows, k, scratch);
    is_lattice(scratch)
}

/// `Tab_k(λ−μ, ν−κ)`, or `Tab⁰_k(λ−μ, ν−κ)` when `lattice` is set, in
/// backtracking order.
///
/// A content with `κ ⊄ ν` or a size imbalance is an error rather than an
/// empty result.
pub fn enumerate(
    shape: &SkewShape,
    nu: &Partition,
    kappa: &Partition,
    k: usize,
    lattice: bool,
) -> Result<Vec<KTableau>, Error> {
    let query = Query::new(shape, nu, kappa, k)?;
    let kappa_word = word_of_partition(query.kappa).0;
    let mut scratch = Vec::new();
    let mut out = Vec::new();
    backtrack(&query, &mut |rows| {
        if !lattice || passes_lattice(&kappa_word, rows, k, &mut scratch) {
            out.push(KTableau { shape: shape.clone(), k, rows: rows.to_vec() });
        }
    });
    Ok(out)
}

/// `Σ c(T)` over the same set [`enumerate`] returns, without materializing
/// the tableaux.
pub fn statistic_sum(
    shape: &SkewShape,
    nu: &Partition,
    kappa: &Partition,
    k: usize,
    lattice: bool,
) -> Result<LaurentPoly<BigInt>, Error> {
    let query = Query::new(shape, nu, kappa, k)?;
    let kappa_word = word_of_partition(query.kappa).0;
    let mut scratch = Vec::new();
    let mut by_degree = vec![0u64; (k - 1) * shape.size() + 1];
    backtrack(&query, &mut |rows| {
        if !lattice || passes_lattice(&kappa_word, rows, k, &mut scratch) {
            let d: usize = rows.iter().flatten().map(|e| e.exp).sum();
            by_degree[d] += 1;
        }
    });
    Ok(LaurentPoly::from_terms(
        by_degree.into_iter().enumerate().map(|(d, n)| (d as i64, BigInt::from(n))),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn e(letter: usize, exp: usize) -> MonomialEntry {
        MonomialEntry::new(letter, exp)
    }

    /// Shape (6,5,2)/(3,2), k = 3, with all three layers nonempty.
    fn layered_example() -> KTableau {
        let shape = SkewShape::new(p(&[6, 5, 2]), p(&[3, 2])).unwrap();
        KTableau::new(
            shape,
            3,
            vec![vec![e(3, 0), e(2, 1), e(2, 1)], vec![e(1, 0), e(1, 1), e(1, 2)], vec![e(1, 2), e(1, 2)]],
        )
        .unwrap()
    }

    #[test]
    fn entry_order() {
        assert!(e(5, 0) < e(1, 1));
        assert!(e(1, 1) < e(2, 1));
        assert!(e(2, 2) <= e(2, 2));
    }

    #[test]
    fn statistic_examples() {
        let shape = SkewShape::straight(p(&[2, 1]));
        let flat = KTableau::new(shape, 2, vec![vec![e(1, 0), e(1, 0)], vec![e(2, 0)]]).unwrap();
        assert_eq!(flat.statistic(), LaurentPoly::one());
        assert_eq!(layered_example().statistic(), LaurentPoly::t_pow(9));
    }

    #[test]
    fn layer_decomposition() {
        let layers = layered_example().layers();
        assert_eq!(layers.len(), 3);
        assert_eq!(layers[0].shape(), &SkewShape::new(p(&[4, 3]), p(&[3, 2])).unwrap());
        assert_eq!(layers[0].rows(), &[vec![3], vec![1]]);
        assert_eq!(layers[1].shape(), &SkewShape::new(p(&[6, 4]), p(&[4, 3])).unwrap());
        assert_eq!(layers[1].rows(), &[vec![2, 2], vec![1]]);
        assert_eq!(layers[2].shape(), &SkewShape::new(p(&[6, 5, 2]), p(&[6, 4])).unwrap());
        assert_eq!(layers[2].rows(), &[vec![], vec![1], vec![1, 1]]);
        let total: usize = layers.iter().map(|l| l.shape().size()).sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn flat_tableau_is_its_own_first_layer() {
        let shape = SkewShape::straight(p(&[2, 1]));
        let flat = KTableau::new(shape.clone(), 3, vec![vec![e(1, 0), e(1, 0)], vec![e(2, 0)]]).unwrap();
        let layers = flat.layers();
        assert_eq!(layers[0].rows(), &[vec![1, 1], vec![2]]);
        assert_eq!(layers[1].shape().size(), 0);
        assert_eq!(layers[2].shape().size(), 0);
    }

    #[test]
    fn reading_words() {
        let shape = SkewShape::new(p(&[5, 3, 2]), p(&[2, 1])).unwrap();
        let t = KTableau::new(
            shape,
            3,
            vec![vec![e(2, 0), e(3, 0), e(2, 2)], vec![e(1, 1), e(1, 1)], vec![e(1, 0), e(2, 2)]],
        )
        .unwrap();
        let w = t.reading_word(&p(&[2, 1]));
        assert_eq!(w.0, vec![1, 1, 2, 3, 2, 1, 1, 1, 2, 2]);
        assert!(w.is_lattice());
        assert_eq!(t.statistic(), LaurentPoly::t_pow(6));

        let empty = KTableau::new(SkewShape::straight(Partition::empty()), 2, vec![]).unwrap();
        assert_eq!(empty.reading_word(&p(&[2, 1])).0, vec![1, 1, 2]);
        assert!(empty.reading_word(&Partition::empty()).0.is_empty());
    }

    #[test]
    fn rejects_bad_fillings() {
        let shape = SkewShape::straight(p(&[2]));
        assert_eq!(
            KTableau::new(shape.clone(), 2, vec![vec![e(1, 1), e(1, 0)]]),
            Err(Error::NotSemistandard)
        );
        assert!(matches!(KTableau::new(shape.clone(), 2, vec![vec![e(1, 2), e(1, 2)]]), Err(Error::InvalidEntry(_))));
        assert_eq!(KTableau::new(shape, 2, vec![vec![e(1, 0)]]), Err(Error::ShapeMismatch));
        let col = SkewShape::straight(p(&[1, 1]));
        assert_eq!(KTableau::new(col, 2, vec![vec![e(1, 1)], vec![e(1, 1)]]), Err(Error::NotSemistandard));
    }

    #[test]
    fn enumeration_errors_are_distinct_from_empty() {
        let shape = SkewShape::new(p(&[3, 2]), p(&[1])).unwrap();
        assert!(matches!(enumerate(&shape, &p(&[3, 2]), &p(&[4]), 2, true), Err(Error::NotContained { .. })));
        assert!(matches!(enumerate(&shape, &p(&[3, 2]), &Partition::empty(), 2, true), Err(Error::SizeMismatch { .. })));
        assert_eq!(enumerate(&shape, &p(&[3, 2]), &p(&[1]), 0, true), Err(Error::InvalidK));
        // well-formed but empty: three 1s cannot fill a column of two
        let col = SkewShape::straight(p(&[1, 1]));
        assert_eq!(enumerate(&col, &p(&[2]), &Partition::empty(), 1, false).unwrap().len(), 0);
    }

    #[test]
    fn example_counts() {
        let shape = SkewShape::new(p(&[3, 2]), p(&[1])).unwrap();
        let all = enumerate(&shape, &p(&[3, 2]), &p(&[1]), 2, false).unwrap();
        let lattice = enumerate(&shape, &p(&[3, 2]), &p(&[1]), 2, true).unwrap();
        assert_eq!(all.len(), 25);
        assert_eq!(lattice.len(), 21);
        let sum = statistic_sum(&shape, &p(&[3, 2]), &p(&[1]), 2, true).unwrap();
        let by_hand = lattice.iter().map(KTableau::statistic).sum::<LaurentPoly<BigInt>>();
        assert_eq!(sum, by_hand);
    }

    #[test]
    fn empty_shape_has_one_tableau() {
        let shape = SkewShape::new(p(&[2, 1]), p(&[2, 1])).unwrap();
        let all = enumerate(&shape, &p(&[3]), &p(&[3]), 3, true).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].statistic(), LaurentPoly::one());
    }

    #[test]
    fn rendering() {
        let text = layered_example().to_string();
        assert_eq!(text, ". . . 3 2·t^1 2·t^1\n. . 1 1·t^1 1·t^2\n1·t^2 1·t^2");
        let empty = KTableau::new(SkewShape::straight(Partition::empty()), 1, vec![]).unwrap();
        assert_eq!(format!("{empty}"), "(empty)");
    }
}
