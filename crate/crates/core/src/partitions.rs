//! Integer partitions, skew shapes, reading words and the classical
//! tableau counts (Kostka numbers, Littlewood-Richardson numbers).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so equality and hashing are
/// structural on the normalized parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that increase somewhere.
    /// Zero parts are allowed only at the tail and are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |λ|
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// ℓ(λ)
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Cell-wise containment of `inner` in `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        contains(inner, self)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Multiplicity of each part: `m[i]` is the number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().map_or(1, |&p| p + 1)];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Concatenation of parts, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Removes one copy of the part `j`, if present.
    pub fn remove_part(&self, j: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == j)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Distinct rearrangements of the parts, in lexicographic order.
    pub fn rearrangements(&self) -> Vec<Vec<usize>> {
        let mut current: Vec<usize> = self.parts.iter().rev().copied().collect();
        let mut out = vec![current.clone()];
        while next_permutation(&mut current) {
            out.push(current.clone());
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Index<usize> for Partition {
    type Output = usize;

    /// Parts beyond the length read as zero.
    fn index(&self, i: usize) -> &usize {
        self.parts.get(i).unwrap_or(&0)
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition renders as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                let p = p.trim();
                match p.parse::<usize>() {
                    Ok(v) if v > 0 => Ok(v),
                    _ => Err(Error::Parse(p.into())),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

/// True iff `inner_i ≤ outer_i` for every row.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && inner.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
}

/// The cells of `outer` not in `inner`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if !contains(&inner, &outer) {
            return Err(Error::NotContained { inner, outer });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ − ∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `inner_r..outer_r` of row `r` (0-based columns).
    pub fn row_range(&self, r: usize) -> core::ops::Range<usize> {
        self.inner[r]..self.outer[r]
    }

    /// Cells `(row, col)` in row-major order, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows()).flat_map(move |r| self.row_range(r).map(move |c| (r, c)))
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        self.row_range(r).contains(&c)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]-[{}]", self.outer, self.inner)
    }
}

/// A word in the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn is_lattice(&self) -> bool {
        is_lattice(&self.0)
    }

    pub fn concat(mut self, other: &Word) -> Word {
        self.0.extend_from_slice(&other.0);
        self
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 && self.0.iter().any(|&x| x > 9) {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Every prefix contains at least as many `i` as `i+1`, for all `i`.
pub fn is_lattice(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &a in word {
        if a == 0 {
            return false;
        }
        if counts.len() < a {
            counts.resize(a, 0);
        }
        counts[a - 1] += 1;
        if a > 1 && counts[a - 1] > counts[a - 2] {
            return false;
        }
    }
    true
}

/// Reading word of the tableau of shape λ whose row `i` is filled with `i`.
pub fn word_of_partition(lambda: &Partition) -> Word {
    Word(
        lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| core::iter::repeat_n(i + 1, p))
            .collect(),
    )
}

/// All partitions of `n`, reverse-lexicographic, optionally bounded in length.
pub fn partitions_of(n: usize, max_length: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, max_length.unwrap_or(usize::MAX), &mut current, &mut out);
    out
}

fn fill_partitions(
    remaining: usize,
    max_part: usize,
    max_length: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if current.len() == max_length {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill_partitions(remaining - p, p, max_length, current, out);
        current.pop();
    }
}

/// All partitions of size at most `n`, by increasing size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(|m| partitions_of(m, None)).collect()
}

/// All partitions contained in `outer`, by increasing size.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    partitions_up_to(outer.size()).into_iter().filter(|p| contains(p, outer)).collect()
}

/// 𝔷(μ) = ∏ i^{m_i} m_i!, the centralizer order of cycle type μ.
pub fn zee(mu: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (i, &m) in mu.multiplicities().iter().enumerate().skip(1) {
        for j in 1..=m {
            z *= BigUint::from(i) * BigUint::from(j);
        }
    }
    z
}

/// A classical skew tableau: row `r` holds the letters of cells
/// `inner_r..outer_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        let widths_ok = rows.len() == shape.rows()
            && rows.iter().enumerate().all(|(r, row)| row.len() == shape.row_range(r).len());
        if !widths_ok {
            return Err(Error::ShapeMismatch);
        }
        Ok(SkewTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Letter at absolute position `(r, c)`, if that cell belongs to the shape.
    pub fn get(&self, r: usize, c: usize) -> Option<usize> {
        let start = self.shape.inner[r];
        if self.shape.contains_cell(r, c) {
            Some(self.rows[r][c - start])
        } else {
            None
        }
    }

    pub fn is_semistandard(&self) -> bool {
        self.shape.cells().all(|(r, c)| {
            let v = self.get(r, c).unwrap();
            let left_ok = c == 0 || self.get(r, c - 1).is_none_or(|l| l <= v);
            let up_ok = r == 0 || self.get(r - 1, c).is_none_or(|u| u < v);
            v > 0 && left_ok && up_ok
        })
    }

    /// Right to left within a row, rows top to bottom.
    pub fn reading_word(&self) -> Word {
        Word(self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect())
    }

    /// `content[a-1]` is the number of cells holding `a`.
    pub fn content(&self) -> Vec<usize> {
        let mut content = Vec::new();
        for &a in self.rows.iter().flatten() {
            if content.len() < a {
                content.resize(a, 0);
            }
            content[a - 1] += 1;
        }
        content
    }
}

/// |Tab(shape, content)|: semistandard fillings with the given content.
pub fn classical_tableau_count(shape: &SkewShape, content: &Partition) -> u64 {
    composition_tableau_count(shape, content.parts())
}

/// Same as [`classical_tableau_count`] with the content given as a
/// composition (`content[a-1]` copies of letter `a`).
pub fn composition_tableau_count(shape: &SkewShape, content: &[usize]) -> u64 {
    if shape.size() != content.iter().sum::<usize>() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut grid = Grid::new(shape);
    let mut remaining = content.to_vec();
    count_row_major(&cells, 0, &mut grid, &mut remaining)
}

/// Row-major backtracking: each cell is at least its left neighbour and
/// strictly above its upper neighbour.
fn count_row_major(
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Grid,
    remaining: &mut [usize],
) -> u64 {
    let Some(&(r, c)) = cells.get(idx) else {
        return 1;
    };
    let left = if c > 0 { grid.get(r, c - 1) } else { 0 };
    let up = if r > 0 { grid.get(r - 1, c) + 1 } else { 0 };
    let low = left.max(up).max(1);
    let mut total = 0;
    for a in low..=remaining.len() {
        if remaining[a - 1] == 0 {
            continue;
        }
        remaining[a - 1] -= 1;
        grid.set(r, c, a);
        total += count_row_major(cells, idx + 1, grid, remaining);
        remaining[a - 1] += 1;
    }
    grid.set(r, c, 0);
    total
}

/// Dense scratch grid over the outer diagram; inner cells read as 0.
struct Grid {
    width: usize,
    values: Vec<usize>,
}

impl Grid {
    fn new(shape: &SkewShape) -> Self {
        let width = shape.outer()[0];
        Grid { width, values: vec![0; width * shape.rows()] }
    }

    fn get(&self, r: usize, c: usize) -> usize {
        self.values[r * self.width + c]
    }

    fn set(&mut self, r: usize, c: usize, v: usize) {
        self.values[r * self.width + c] = v;
    }
}

/// c^λ_{μν}: semistandard tableaux of shape λ−μ and content ν whose
/// reading word is a lattice permutation.
///
/// Cells are filled in reading order (rows top to bottom, each row right to
/// left) so the lattice condition prunes every prefix.
pub fn classical_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !contains(mu, lambda) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let shape = SkewShape { outer: lambda.clone(), inner: mu.clone() };
    let cells: Vec<(usize, usize)> =
        (0..shape.rows()).flat_map(|r| shape.row_range(r).rev().map(move |c| (r, c))).collect();
    let mut grid = Grid::new(&shape);
    let mut used = vec![0; nu.len()];
    count_lattice(&shape, &cells, 0, &mut grid, nu.parts(), &mut used)
}

fn count_lattice(
    shape: &SkewShape,
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Grid,
    content: &[usize],
    used: &mut [usize],
) -> u64 {
    let Some(&(r, c)) = cells.get(idx) else {
        return 1;
    };
    // right neighbour already placed; it bounds this cell from above
    let high = if shape.contains_cell(r, c + 1) { grid.get(r, c + 1) } else { content.len() };
    let low = if r > 0 && shape.contains_cell(r - 1, c) { grid.get(r - 1, c) + 1 } else { 1 };
    let mut total = 0;
    for a in low..=high {
        if used[a - 1] == content[a - 1] || (a > 1 && used[a - 1] == used[a - 2]) {
            continue;
        }
        used[a - 1] += 1;
        grid.set(r, c, a);
        total += count_lattice(shape, cells, idx + 1, grid, content, used);
        used[a - 1] -= 1;
    }
    grid.set(r, c, 0);
    total
}
