//! Symmetric group characters (Murnaghan–Nakayama) and Kostka numbers,
//! memoized per degree.
//!
//! Tables for degrees below [`CACHED_DEGREES`] are built on first use and
//! shared for the life of the process. Concurrent first use may build the
//! same table twice; one copy wins and both are identical.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::Error;
use crate::partitions::{classical_tableau_count, partitions_of, Partition, SkewShape};

/// Degrees `0..CACHED_DEGREES` get memoized tables.
pub const CACHED_DEGREES: usize = 24;

/// All partitions of one degree with their position in reverse-lex order.
#[derive(Debug)]
pub struct DegreeIndex {
    partitions: Vec<Partition>,
    position: BTreeMap<Partition, usize>,
}

impl DegreeIndex {
    fn new(n: usize) -> Self {
        let partitions = partitions_of(n, None);
        let position = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        DegreeIndex { partitions, position }
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn position(&self, p: &Partition) -> usize {
        self.position[p]
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }
}

/// `values[i][j] = χ^{λ_i}(ρ_j)` over the partitions of one degree.
#[derive(Debug)]
pub struct CharacterTable {
    pub index: DegreeIndex,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[self.index.position(lambda)][self.index.position(rho)]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.values[i]
    }
}

/// `values[i][j] = K_{λ_i μ_j}`, the number of SSYT of shape λ_i and content μ_j.
/// Nonzero only when λ_i dominates μ_j, so the matrix is upper unitriangular
/// in reverse-lex order.
#[derive(Debug)]
pub struct KostkaTable {
    pub index: DegreeIndex,
    values: Vec<Vec<u64>>,
}

impl KostkaTable {
    pub fn value(&self, i: usize, j: usize) -> u64 {
        self.values[i][j]
    }
}

static CHARACTERS: [OnceBox<CharacterTable>; CACHED_DEGREES] =
    [const { OnceBox::new() }; CACHED_DEGREES];
static KOSTKA: [OnceBox<KostkaTable>; CACHED_DEGREES] = [const { OnceBox::new() }; CACHED_DEGREES];

/// Memoized character table of `S_n`. Panics for `n ≥ CACHED_DEGREES`.
pub fn character_table(n: usize) -> &'static CharacterTable {
    assert!(n < CACHED_DEGREES, "character tables are available below degree {CACHED_DEGREES}");
    CHARACTERS[n].get_or_init(|| Box::new(build_characters(n)))
}

/// Memoized Kostka matrix of degree `n`. Panics for `n ≥ CACHED_DEGREES`.
pub fn kostka_table(n: usize) -> &'static KostkaTable {
    assert!(n < CACHED_DEGREES, "Kostka tables are available below degree {CACHED_DEGREES}");
    KOSTKA[n].get_or_init(|| Box::new(build_kostka(n)))
}

fn build_characters(n: usize) -> CharacterTable {
    let index = DegreeIndex::new(n);
    let values = index
        .partitions()
        .iter()
        .map(|lambda| index.partitions().iter().map(|rho| mn_recursive(lambda, rho)).collect())
        .collect();
    CharacterTable { index, values }
}

fn build_kostka(n: usize) -> KostkaTable {
    let index = DegreeIndex::new(n);
    let values = index
        .partitions()
        .iter()
        .map(|lambda| {
            let shape = SkewShape::straight(lambda.clone());
            index.partitions().iter().map(|mu| classical_tableau_count(&shape, mu)).collect()
        })
        .collect();
    KostkaTable { index, values }
}

/// χ^λ(μ), the irreducible character of `S_n` indexed by λ at cycle type μ.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64, Error> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let n = lambda.size();
    if n < CACHED_DEGREES {
        Ok(character_table(n).value(lambda, mu))
    } else {
        Ok(mn_recursive(lambda, mu))
    }
}

/// One step of the border-strip recursion: strip the first part of μ
/// from λ in every possible way.
fn mn_recursive(lambda: &Partition, mu: &Partition) -> i64 {
    let Some(&r) = mu.parts().first() else {
        return 1;
    };
    let rest = Partition::new(mu.parts()[1..].to_vec()).expect("tail of a partition");
    remove_border_strips(lambda, r)
        .into_iter()
        .map(|(smaller, sign)| {
            let chi = mn_character(&smaller, &rest).expect("sizes agree after removal");
            sign * chi
        })
        .sum()
}

/// All ways to remove a border strip of size `r` from λ, with the sign
/// `(−1)^{height}` of each strip.
///
/// Works on beta-numbers `β_i = λ_i + (ℓ − 1 − i)`: removing a strip of
/// size `r` moves one bead from `β` to the free position `β − r`, and the
/// height is the number of beads strictly between.
pub fn remove_border_strips(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda[i] + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved.iter().enumerate().map(|(j, &x)| x - (len - 1 - j)).collect();
        let smaller = Partition::new(parts).expect("beta-numbers decode to a partition");
        out.push((smaller, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}
